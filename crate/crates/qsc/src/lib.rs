//! Quantum synchronizable codes (QSCs) built from classical cyclic codes over GF(2).
//!
//! A QSC is an `(a_l, a_r)-[[n + a_l + a_r, k]]` quantum code that corrects
//! block misalignment of up to `a_l` qubits left and `a_r` qubits right in
//! addition to ordinary phase and bit errors. Every construction in this crate
//! starts from a nested pair of cyclic codes `C^⊥ ⊆ C ⊊ D` and derives the
//! synchronization tolerance from the order of the quotient of their
//! generator polynomials.
//!
//! The crate is organized bottom-up:
//!
//! - [`poly`]: exact arithmetic in GF(2)\[x\] and the order-of-polynomial
//!   machinery behind every tolerance bound.
//! - [`field`]: cyclotomic cosets, GF(2^m) towers, minimal polynomials, and
//!   the factorization of x^N − 1 (repeated roots included).
//! - [`code`]: cyclic codes, duals, sums/intersections, exhaustive minimum
//!   distance search, BCH bounds, and Kronecker/product codes.
//! - [`families`]: narrow-sense BCH codes with the dual-containing regime,
//!   and duadic codes with their splittings.
//! - [`rrcc`]: repeated-root cyclic code pairs and the multiplicity-based
//!   distance formula.
//! - [`engine`]: the QSC constructors themselves. Each validates its
//!   hypotheses mechanically and emits a [`engine::QscRecord`] carrying both
//!   the construction's printed parameters and the values re-derived from the
//!   actual code pair, plus a machine-checkable certificate.
//! - [`table1`]: reproduction of the bundled reference table of nine QSCs
//!   obtained from quadrupled-length repeated-root codes.
//!
//! Stated-vs-derived dual reporting is deliberate: several published
//! parameter claims for the repeated-root constructions do not survive
//! mechanical re-derivation, and the records keep both sides visible rather
//! than silently picking one.

pub mod code;
pub mod engine;
pub mod families;
pub mod field;
pub mod poly;
pub mod rrcc;
pub mod table1;

pub use code::{Budget, CyclicCode, DistanceInfo, DistanceSource, GeneratorMatrix};
pub use engine::QscRecord;
pub use poly::BinPoly;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("the zero polynomial has no order")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("lcm requires nonzero polynomials")]
    LcmOfZero,
    #[error("{num} is not an exact multiple of {den}")]
    InexactDivision { num: String, den: String },
    #[error("order search gave up after e = {cap}")]
    OrderCapExceeded { cap: u64 },
    #[error("order computation needs an irreducible factor of degree {degree} > 64, unsupported")]
    OrderDegreeTooLarge { degree: usize },
    #[error("order overflows u64")]
    OrderOverflow,
    #[error("invalid polynomial literal {input:?}: {reason}")]
    Parse { input: String, reason: &'static str },
    #[error("modulus must be odd and positive, got {0}")]
    EvenModulus(u64),
    #[error("{base} and {modulus} are not coprime")]
    NotCoprime { base: u64, modulus: u64 },
    #[error("{poly} does not divide x^{n} - 1")]
    NotADivisor { poly: String, n: usize },
    #[error("code lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("defining sets need a simple-root code; length {n} is even")]
    RepeatedRootDefiningSet { n: usize },
    #[error("distance search needs 2^{required} codeword evaluations, budget allows 2^{budget}")]
    BudgetExceeded { required: u32, budget: u32 },
    #[error("generator matrix rows are linearly dependent (rank {rank} < {rows})")]
    RankDeficient { rank: usize, rows: usize },
    #[error("product code construction requires odd coprime lengths, got {n1} and {n2}")]
    ProductLengths { n1: usize, n2: usize },
    #[error("hypothesis `{name}` failed in {construction}: {detail}")]
    Hypothesis {
        construction: &'static str,
        name: &'static str,
        detail: String,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("internal invariant `{0}` violated; this is a bug")]
    Internal(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
