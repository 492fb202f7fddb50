//! Cyclic-code algebra over GF(2): duals, sums, intersections, containment
//! and orthogonality predicates, exhaustive minimum-distance search, defining
//! sets with the BCH bound, and the generator-matrix machinery for product
//! codes.
//!
//! Containment convention: `C.contains(&D)` means D ⊆ C, equivalently
//! g_C | g_D — the larger code has the smaller-degree generator. The duals of
//! this crate are Euclidean.

use crate::field::{cyclotomic_table, for_each_divisor, factor_cycl};
use crate::poly::BinPoly;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Enumeration budget: distance searches may spend at most 2^log2 codeword
/// evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    log2: u32,
}

impl Budget {
    pub fn new(log2: u32) -> Budget {
        Budget { log2: log2.min(62) }
    }

    pub fn log2(&self) -> u32 {
        self.log2
    }

    pub fn allows(&self, k: usize) -> bool {
        (k as u32) <= self.log2
    }
}

impl Default for Budget {
    /// 2^26 codeword evaluations.
    fn default() -> Budget {
        Budget { log2: 26 }
    }
}

/// Provenance of a distance value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceSource {
    /// Exact, established by exhaustive search (directly or through the
    /// repeated-root distance formula over exhaustively-searched subcodes).
    Exhaustive,
    /// Taken from published tables, out of reach of the search budget.
    Paper,
    /// A lower bound (BCH or square-root), not necessarily attained.
    Bound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceInfo {
    pub value: u32,
    pub source: DistanceSource,
}

impl DistanceInfo {
    pub fn exhaustive(value: u32) -> Self {
        DistanceInfo {
            value,
            source: DistanceSource::Exhaustive,
        }
    }
    pub fn paper(value: u32) -> Self {
        DistanceInfo {
            value,
            source: DistanceSource::Paper,
        }
    }
    pub fn bound(value: u32) -> Self {
        DistanceInfo {
            value,
            source: DistanceSource::Bound,
        }
    }
}

/// A binary cyclic code of length N with generator g | x^N − 1. Repeated
/// roots (even N) are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCode {
    n: usize,
    g: BinPoly,
    k: usize,
}

impl CyclicCode {
    pub fn new(n: usize, g: BinPoly) -> Result<CyclicCode> {
        if n == 0 {
            return Err(Error::InvalidParameter("length 0".into()));
        }
        let deg = g.degree().ok_or_else(|| Error::NotADivisor {
            poly: "0".into(),
            n,
        })?;
        if !g.divides(&BinPoly::xn_minus_one(n)) {
            return Err(Error::NotADivisor {
                poly: g.to_string(),
                n,
            });
        }
        Ok(CyclicCode { n, k: n - deg, g })
    }

    pub fn full_space(n: usize) -> CyclicCode {
        CyclicCode {
            n,
            g: BinPoly::one(),
            k: n,
        }
    }

    pub fn zero_code(n: usize) -> CyclicCode {
        CyclicCode {
            n,
            g: BinPoly::xn_minus_one(n),
            k: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &BinPoly {
        &self.g
    }

    pub fn is_zero_code(&self) -> bool {
        self.k == 0
    }

    fn check_len(&self, other: &CyclicCode) -> Result<()> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Euclidean dual: generated by (x^N − 1)/g*(x).
    pub fn dual(&self) -> CyclicCode {
        let g_dual = BinPoly::xn_minus_one(self.n)
            .div_exact(&self.g.reciprocal())
            .expect("reciprocal of a divisor divides x^n - 1");
        CyclicCode {
            n: self.n,
            k: self.n - g_dual.degree().unwrap(),
            g: g_dual,
        }
    }

    /// C1 + C2, generated by gcd(g1, g2).
    pub fn sum(&self, other: &CyclicCode) -> Result<CyclicCode> {
        self.check_len(other)?;
        let g = self.g.gcd(&other.g)?;
        Ok(CyclicCode {
            n: self.n,
            k: self.n - g.degree().unwrap(),
            g,
        })
    }

    /// C1 ∩ C2, generated by lcm(g1, g2) reduced into the length-N ring.
    pub fn intersect(&self, other: &CyclicCode) -> Result<CyclicCode> {
        self.check_len(other)?;
        let g = self.g.lcm(&other.g)?;
        Ok(CyclicCode {
            n: self.n,
            k: self.n - g.degree().unwrap(),
            g,
        })
    }

    /// D ⊆ C, i.e. g_C | g_D.
    pub fn contains(&self, other: &CyclicCode) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.g.divides(&other.g))
    }

    /// C^⊥ ⊆ C.
    pub fn is_dual_containing(&self) -> bool {
        self.g.divides(&self.dual().g)
    }

    /// C ⊆ C^⊥.
    pub fn is_self_orthogonal(&self) -> bool {
        self.dual().g.divides(&self.g)
    }

    /// Exact minimum Hamming weight over the nonzero codewords, or `None`
    /// for the zero code. Enumerates all 2^k − 1 messages in Gray-code
    /// order; errors when k exceeds the budget.
    pub fn min_distance(&self, budget: Budget) -> Result<Option<u32>> {
        if self.k == 0 {
            return Ok(None);
        }
        if !budget.allows(self.k) {
            return Err(Error::BudgetExceeded {
                required: self.k as u32,
                budget: budget.log2(),
            });
        }
        let words = self.n.div_ceil(64);
        let mut rows = Vec::with_capacity(self.k);
        for i in 0..self.k {
            let row = self.g.shift_left(i);
            rows.push(poly_to_words(&row, words));
        }
        Ok(min_weight_gray(&rows, words))
    }

    /// Exponents i with M_i | g, for odd N. The zero code has the full set.
    pub fn defining_set(&self) -> Result<BTreeSet<u64>> {
        if self.n % 2 == 0 {
            return Err(Error::RepeatedRootDefiningSet { n: self.n });
        }
        let table = cyclotomic_table(self.n as u64)?;
        let mut set = BTreeSet::new();
        for (leader, m_poly) in table.factors() {
            if m_poly.divides(&self.g) {
                for &r in table.cosets.coset_of(leader) {
                    set.insert(r);
                }
            }
        }
        Ok(set)
    }

    /// Serializable summary with an optional distance.
    pub fn to_record(&self, d: Option<DistanceInfo>) -> CodeRecord {
        CodeRecord {
            n: self.n,
            g_hex: self.g.to_hex(),
            g_text: self.g.to_string(),
            k: self.k,
            d: d.map(|i| i.value),
            d_source: d.map(|i| i.source),
        }
    }
}

/// JSON shape for a classical code: {"n", "g_hex", "g_text", "k", "d", "d_source"}.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeRecord {
    pub n: usize,
    pub g_hex: String,
    pub g_text: String,
    pub k: usize,
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d_source: Option<DistanceSource>,
}

/// BCH bound from a defining set: longest run of cyclically consecutive
/// residues plus one. The full set (zero code) yields n + 1.
pub fn bch_bound(defining: &BTreeSet<u64>, n: u64) -> u64 {
    if defining.len() as u64 == n {
        return n + 1;
    }
    if defining.is_empty() {
        return 1;
    }
    let mut longest = 0u64;
    let mut run = 0u64;
    // doubled scan handles wraparound runs
    for i in 0..2 * n {
        if defining.contains(&(i % n)) {
            run += 1;
            longest = longest.max(run.min(n));
        } else {
            run = 0;
        }
    }
    longest + 1
}

fn poly_to_words(p: &BinPoly, words: usize) -> Vec<u64> {
    let mut out = vec![0u64; words];
    for e in p.exponents() {
        out[e / 64] |= 1u64 << (e % 64);
    }
    out
}

fn words_to_poly(row: &[u64]) -> BinPoly {
    let mut exps = Vec::new();
    for (i, &w) in row.iter().enumerate() {
        let mut bits = w;
        while bits != 0 {
            exps.push(i * 64 + bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
    }
    BinPoly::from_exponents(exps)
}

/// Minimum weight over all nonzero combinations of the rows, walking
/// messages in Gray-code order so each step flips one row.
fn min_weight_gray(rows: &[Vec<u64>], words: usize) -> Option<u32> {
    let k = rows.len();
    if k == 0 {
        return None;
    }
    let mut acc = vec![0u64; words];
    let mut best = u32::MAX;
    let total: u64 = 1u64 << k;
    for i in 1..total {
        let flip = i.trailing_zeros() as usize;
        let row = &rows[flip];
        let mut w = 0u32;
        for (a, r) in acc.iter_mut().zip(row.iter()) {
            *a ^= r;
            w += a.count_ones();
        }
        if w < best {
            best = w;
        }
    }
    Some(best)
}

// ---------------------------------------------------------------------------
// Generator matrices, Kronecker products, product codes
// ---------------------------------------------------------------------------

/// Dense binary matrix with full row rank, rows packed into u64 words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    bits: Vec<u64>,
}

impl GeneratorMatrix {
    /// Builds from bit rows, verifying full row rank.
    pub fn from_rows(rows: Vec<Vec<u64>>, cols: usize) -> Result<GeneratorMatrix> {
        let words = cols.div_ceil(64);
        let k = rows.len();
        let mut bits = Vec::with_capacity(k * words);
        for r in &rows {
            assert_eq!(r.len(), words);
            bits.extend_from_slice(r);
        }
        let m = GeneratorMatrix {
            rows: k,
            cols,
            words,
            bits,
        };
        let rank = m.rank();
        if rank != k {
            return Err(Error::RankDeficient { rank, rows: k });
        }
        Ok(m)
    }

    /// The k cyclic shifts of the generator polynomial.
    pub fn from_cyclic(code: &CyclicCode) -> GeneratorMatrix {
        let words = code.n().div_ceil(64);
        let mut bits = Vec::with_capacity(code.dim() * words);
        for i in 0..code.dim() {
            bits.extend(poly_to_words(&code.generator().shift_left(i), words));
        }
        GeneratorMatrix {
            rows: code.dim(),
            cols: code.n(),
            words,
            bits,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.row(r)[c / 64] >> (c % 64)) & 1 == 1
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<u64>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        echelonize(rows).len()
    }

    /// Kronecker product: rows are all vᵢ ⊗ wⱼ in row-major block layout.
    pub fn kronecker(&self, other: &GeneratorMatrix) -> GeneratorMatrix {
        let cols = self.cols * other.cols;
        let words = cols.div_ceil(64);
        let rows = self.rows * other.rows;
        let mut bits = vec![0u64; rows * words];
        for i1 in 0..self.rows {
            for i2 in 0..other.rows {
                let r = i1 * other.rows + i2;
                for c1 in 0..self.cols {
                    if !self.get(i1, c1) {
                        continue;
                    }
                    for c2 in 0..other.cols {
                        if other.get(i2, c2) {
                            let c = c1 * other.cols + c2;
                            bits[r * words + c / 64] |= 1u64 << (c % 64);
                        }
                    }
                }
            }
        }
        GeneratorMatrix {
            rows,
            cols,
            words,
            bits,
        }
    }

    /// Exact minimum distance by Gray-code enumeration over the rows.
    pub fn min_distance(&self, budget: Budget) -> Result<Option<u32>> {
        if self.rows == 0 {
            return Ok(None);
        }
        if !budget.allows(self.rows) {
            return Err(Error::BudgetExceeded {
                required: self.rows as u32,
                budget: budget.log2(),
            });
        }
        let rows: Vec<Vec<u64>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        Ok(min_weight_gray(&rows, self.words))
    }

    /// Parity of ⟨a, b⟩ over GF(2).
    pub fn dot(a: &[u64], b: &[u64]) -> bool {
        a.iter()
            .zip(b.iter())
            .map(|(x, y)| (x & y).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }
}

/// Row space in echelon form (pivot = highest set bit), for membership tests.
pub struct RowSpace {
    echelon: Vec<Vec<u64>>,
}

impl RowSpace {
    pub fn new(m: &GeneratorMatrix) -> RowSpace {
        let rows: Vec<Vec<u64>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        RowSpace {
            echelon: echelonize(rows),
        }
    }

    pub fn dim(&self) -> usize {
        self.echelon.len()
    }

    pub fn contains(&self, row: &[u64]) -> bool {
        let mut v = row.to_vec();
        reduce_against(&mut v, &self.echelon);
        v.iter().all(|&w| w == 0)
    }
}

fn top_bit(row: &[u64]) -> Option<usize> {
    for (i, &w) in row.iter().enumerate().rev() {
        if w != 0 {
            return Some(i * 64 + 63 - w.leading_zeros() as usize);
        }
    }
    None
}

/// Gaussian elimination by leading (highest) bit; returns independent rows
/// sorted by descending pivot.
fn echelonize(rows: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    for mut row in rows {
        loop {
            let Some(p) = top_bit(&row) else { break };
            match basis.iter().find(|(bp, _)| *bp == p) {
                Some((_, b)) => {
                    for (x, y) in row.iter_mut().zip(b.iter()) {
                        *x ^= y;
                    }
                }
                None => {
                    basis.push((p, row));
                    break;
                }
            }
        }
    }
    basis.sort_by(|a, b| b.0.cmp(&a.0));
    basis.into_iter().map(|(_, r)| r).collect()
}

fn reduce_against(v: &mut [u64], echelon: &[Vec<u64>]) {
    for b in echelon {
        let bp = top_bit(b).unwrap();
        if let Some(vp) = top_bit(v) {
            if vp < bp {
                continue;
            }
        } else {
            return;
        }
        if (v[bp / 64] >> (bp % 64)) & 1 == 1 {
            for (x, y) in v.iter_mut().zip(b.iter()) {
                *x ^= y;
            }
        }
    }
}

/// A product code C₁ ⊗ C₂ of coprime odd lengths, carried both as the raw
/// Kronecker generator matrix (row-major layout) and as a cyclic code in the
/// interleaved coordinate order p ↦ (p mod n₁, p mod n₂) that makes the
/// product cyclic.
#[derive(Debug, Clone)]
pub struct ProductCode {
    pub code: CyclicCode,
    pub kron: GeneratorMatrix,
    pub interleaved: GeneratorMatrix,
}

/// Builds C₁ ⊗ C₂ and extracts its cyclic generator polynomial: all cyclic
/// shifts of the interleaved Kronecker rows are row-reduced and the unique
/// minimal-degree polynomial of the row space is read off; its degree must
/// come out as n₁n₂ − k₁k₂ and it must divide x^{n₁n₂} − 1.
pub fn product_code(c1: &CyclicCode, c2: &CyclicCode) -> Result<ProductCode> {
    let (n1, n2) = (c1.n(), c2.n());
    if n1 % 2 == 0 || n2 % 2 == 0 || crate::poly::gcd_u64(n1 as u64, n2 as u64) != 1 {
        return Err(Error::ProductLengths { n1, n2 });
    }
    let n = n1 * n2;
    let k = c1.dim() * c2.dim();
    if k == 0 {
        let code = CyclicCode::zero_code(n);
        let empty = GeneratorMatrix {
            rows: 0,
            cols: n,
            words: n.div_ceil(64),
            bits: Vec::new(),
        };
        return Ok(ProductCode {
            code,
            kron: empty.clone(),
            interleaved: empty,
        });
    }
    let g1 = GeneratorMatrix::from_cyclic(c1);
    let g2 = GeneratorMatrix::from_cyclic(c2);
    let kron = g1.kronecker(&g2);
    if kron.rank() != k {
        return Err(Error::Internal("Kronecker product lost rank"));
    }

    // interleave: coordinate p of the cyclic form reads Kronecker column
    // (p mod n1)·n2 + (p mod n2)
    let words = n.div_ceil(64);
    let mut rows = Vec::with_capacity(k);
    for r in 0..kron.rows() {
        let mut row = vec![0u64; words];
        for p in 0..n {
            let src = (p % n1) * n2 + (p % n2);
            if kron.get(r, src) {
                row[p / 64] |= 1u64 << (p % 64);
            }
        }
        rows.push(row);
    }
    let interleaved = GeneratorMatrix::from_rows(rows.clone(), n)?;

    // cyclic closure: every shift of every row
    let mut shifted = Vec::with_capacity(k * n);
    for row in &rows {
        let p = words_to_poly(row);
        for s in 0..n {
            let mut q = p.shift_left(s);
            // reduce x^n -> 1
            while q.degree().is_some_and(|d| d >= n) {
                let d = q.degree().unwrap();
                q = q.add(&BinPoly::monomial(d));
                q = q.add(&BinPoly::monomial(d - n));
            }
            shifted.push(poly_to_words(&q, words));
        }
    }
    let closure = echelonize(shifted);
    if closure.len() != k {
        return Err(Error::Internal(
            "cyclic closure of the product has the wrong dimension",
        ));
    }
    let generator = words_to_poly(closure.last().unwrap());
    if generator.degree() != Some(n - k) {
        return Err(Error::Internal("extracted generator has the wrong degree"));
    }
    let code = CyclicCode::new(n, generator)?;
    Ok(ProductCode {
        code,
        kron,
        interleaved,
    })
}

/// All divisors of x^n − 1 of a given degree, sorted by coefficient value.
pub fn divisors_of_degree(n: usize, degree: usize) -> Result<Vec<BinPoly>> {
    let factors = factor_cycl(n as u64)?;
    let mut out = Vec::new();
    for_each_divisor(&factors, |d, _| {
        if d.degree() == Some(degree) {
            out.push(d.clone());
        }
    });
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinPoly {
        BinPoly::parse(s).unwrap()
    }

    fn code(n: usize, g: &str) -> CyclicCode {
        CyclicCode::new(n, p(g)).unwrap()
    }

    #[test]
    fn construction_examples() {
        let hamming = code(7, "x^3+x+1");
        assert_eq!(hamming.dim(), 4);
        let full = code(7, "1");
        assert_eq!(full.dim(), 7);
        let rr = CyclicCode::new(14, p("x^3+x+1").square()).unwrap();
        assert_eq!(rr.dim(), 8);
        assert!(CyclicCode::new(7, p("x^2+1")).is_err());
    }

    #[test]
    fn dual_examples() {
        let hamming = code(7, "x^3+x+1");
        let dual = hamming.dual();
        assert_eq!(dual.generator(), &p("x^4+x^3+x^2+1"));
        assert_eq!(dual.dim(), 3);

        let full = CyclicCode::full_space(9);
        assert!(full.dual().is_zero_code());

        for g in ["x+1", "x^3+x+1", "x^4+x^3+x^2+1"] {
            let c = code(7, g);
            assert_eq!(c.dual().dual(), c);
        }
    }

    #[test]
    fn sum_intersect_examples() {
        let c1 = code(7, "x^3+x+1");
        let c2 = code(7, "x^3+x^2+1");
        assert_eq!(c1.sum(&c2).unwrap().dim(), 7);
        let inter = c1.intersect(&c2).unwrap();
        assert_eq!(inter.generator(), &p("x^6+x^5+x^4+x^3+x^2+x+1"));
        assert_eq!(inter.dim(), 1);
        assert_eq!(c1.sum(&c1).unwrap(), c1);
        assert_eq!(c1.intersect(&c1).unwrap(), c1);
        assert!(c1.sum(&CyclicCode::full_space(9)).is_err());
    }

    #[test]
    fn dimension_identity_sum_plus_intersection() {
        let divs = divisors_of_degree(15, 5).unwrap();
        for g1 in crate::field::factor_cycl(15).unwrap().iter().map(|(f, _)| f) {
            for g2 in &divs {
                let c1 = CyclicCode::new(15, g1.clone()).unwrap();
                let c2 = CyclicCode::new(15, g2.clone()).unwrap();
                let s = c1.sum(&c2).unwrap();
                let i = c1.intersect(&c2).unwrap();
                assert_eq!(s.dim() + i.dim(), c1.dim() + c2.dim());
            }
        }
    }

    #[test]
    fn containment_and_orthogonality() {
        let hamming = code(7, "x^3+x+1");
        assert!(hamming.is_dual_containing());
        let rep = code(7, "x^6+x^5+x^4+x^3+x^2+x+1");
        assert!(!rep.is_dual_containing());
        let even_hamming = CyclicCode::new(7, p("x+1").mul(&p("x^3+x+1"))).unwrap();
        assert!(even_hamming.is_self_orthogonal());
        let full = CyclicCode::full_space(7);
        for c in [&hamming, &rep, &even_hamming] {
            assert!(full.contains(c).unwrap());
        }
        assert!(!hamming.contains(&full).unwrap());
    }

    #[test]
    fn min_distance_examples() {
        let b = Budget::default();
        assert_eq!(code(7, "x^3+x+1").min_distance(b).unwrap(), Some(3));
        assert_eq!(
            code(5, "x^4+x^3+x^2+x+1").min_distance(b).unwrap(),
            Some(5)
        );
        assert_eq!(CyclicCode::full_space(6).min_distance(b).unwrap(), Some(1));
        assert_eq!(CyclicCode::zero_code(6).min_distance(b).unwrap(), None);
        assert!(matches!(
            code(47, "x+1").min_distance(Budget::new(20)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn defining_set_examples() {
        let hamming = code(7, "x^3+x+1");
        let z = hamming.defining_set().unwrap();
        assert_eq!(z, BTreeSet::from([1, 2, 4]));
        assert_eq!(bch_bound(&z, 7), 3);

        let zero = CyclicCode::zero_code(7);
        let z = zero.defining_set().unwrap();
        assert_eq!(z.len(), 7);
        assert_eq!(bch_bound(&z, 7), 8);

        let m1 = crate::field::minimal_poly(1, 31).unwrap();
        let m3 = crate::field::minimal_poly(3, 31).unwrap();
        let c = CyclicCode::new(31, m1.mul(&m3)).unwrap();
        let z = c.defining_set().unwrap();
        assert_eq!(z, BTreeSet::from([1, 2, 3, 4, 6, 8, 12, 16, 17, 24]));
        assert_eq!(bch_bound(&z, 31), 5);

        assert!(CyclicCode::full_space(14).defining_set().is_err());
    }

    #[test]
    fn bch_bound_wraps_cyclically() {
        // run {n-1, 0, 1} counts as length 3
        let z = BTreeSet::from([0, 1, 6]);
        assert_eq!(bch_bound(&z, 7), 4);
        assert_eq!(bch_bound(&BTreeSet::new(), 7), 1);
    }

    #[test]
    fn distance_respects_bch_bound() {
        let b = Budget::default();
        for n in [7usize, 15, 21] {
            let factors = crate::field::factor_cycl(n as u64).unwrap();
            for_each_divisor(&factors, |g, _| {
                let c = CyclicCode::new(n, g.clone()).unwrap();
                if c.is_zero_code() {
                    return;
                }
                let d = c.min_distance(b).unwrap().unwrap() as u64;
                let bound = bch_bound(&c.defining_set().unwrap(), n as u64);
                assert!(d >= bound, "n={n} g={g}: d={d} < bound={bound}");
            });
        }
    }

    #[test]
    fn kronecker_identity() {
        let id = GeneratorMatrix::from_rows(vec![vec![1u64]], 1).unwrap();
        let k = id.kronecker(&id);
        assert_eq!(k.rows(), 1);
        assert_eq!(k.cols(), 1);
        assert!(k.get(0, 0));
    }

    #[test]
    fn product_code_examples() {
        let b = Budget::default();
        let c1 = code(7, "x^3+x+1"); // [7,4,3]
        let c2 = CyclicCode::new(9, p("x+1").mul(&p("x^6+x^3+1"))).unwrap(); // [9,2,6]
        assert_eq!(c2.min_distance(b).unwrap(), Some(6));
        let prod = product_code(&c1, &c2).unwrap();
        assert_eq!(prod.code.n(), 63);
        assert_eq!(prod.code.dim(), 8);
        assert_eq!(prod.code.min_distance(b).unwrap(), Some(18));
        // matrix route agrees
        assert_eq!(prod.interleaved.min_distance(b).unwrap(), Some(18));

        // product with the length-1 full space is the code itself
        let unit = CyclicCode::full_space(1);
        let same = product_code(&c1, &unit).unwrap();
        assert_eq!(same.code.generator(), c1.generator());

        assert!(product_code(&c1, &code(21, "x+1")).is_err());
    }

    #[test]
    fn product_rows_and_columns_live_in_components() {
        let c1 = code(7, "x^3+x+1");
        let c2 = code(5, "x^4+x^3+x^2+x+1");
        let prod = product_code(&c1, &c2).unwrap();
        let rs1 = RowSpace::new(&GeneratorMatrix::from_cyclic(&c1));
        let rs2 = RowSpace::new(&GeneratorMatrix::from_cyclic(&c2));
        // codewords of the Kronecker matrix, viewed as 7x5 arrays
        for r in 0..prod.kron.rows() {
            let mut array = [[false; 5]; 7];
            for i in 0..7 {
                for j in 0..5 {
                    array[i][j] = prod.kron.get(r, i * 5 + j);
                }
            }
            for row in array.iter() {
                let word = row
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, &b)| acc | ((b as u64) << j));
                assert!(rs2.contains(&[word]));
            }
            for j in 0..5 {
                let word = (0..7).fold(0u64, |acc, i| acc | ((array[i][j] as u64) << i));
                assert!(rs1.contains(&[word]));
            }
        }
    }

    #[test]
    fn dual_of_sum_is_intersection_of_duals() {
        let divs = crate::field::factor_cycl(21).unwrap();
        let polys: Vec<BinPoly> = divs.iter().map(|(f, _)| f.clone()).collect();
        for g1 in &polys {
            for g2 in &polys {
                let c1 = CyclicCode::new(21, g1.clone()).unwrap();
                let c2 = CyclicCode::new(21, g2.clone()).unwrap();
                let lhs = c1.sum(&c2).unwrap().dual();
                let rhs = c1.dual().intersect(&c2.dual()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn code_record_json_shape() {
        let c = code(7, "x^3+x+1");
        let rec = c.to_record(Some(DistanceInfo::exhaustive(3)));
        let v = serde_json::to_value(&rec).unwrap();
        assert_eq!(v["n"], 7);
        assert_eq!(v["g_hex"], "b");
        assert_eq!(v["g_text"], "x^3+x+1");
        assert_eq!(v["k"], 4);
        assert_eq!(v["d"], 3);
        assert_eq!(v["d_source"], "exhaustive");
    }
}
