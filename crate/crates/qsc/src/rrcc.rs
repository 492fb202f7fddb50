//! Repeated-root cyclic codes: the multiplicity-profile distance formula,
//! and the always-dual-containing length-2n/4n/2^i·m code pairs.
//!
//! For length N = 2^a·m (m odd) every cyclic code is ⟨∏ M_ℓ^{e_ℓ}⟩ with
//! 0 ≤ e_ℓ ≤ 2^a. Its exact minimum distance is
//! min over t of P_t · d(⟨∏_{e_ℓ > t} M_ℓ⟩ of length m), with P_t the minimum
//! weight of ⟨(x−1)^t⟩ of length 2^a. The formula is cross-checked against
//! exhaustive search in the test suites.

use crate::code::{Budget, CyclicCode};
use crate::families::{mu_minus1_splitting, odd_like_pair, Splitting};
use crate::field::cyclotomic_table;
use crate::poly::BinPoly;
use crate::{Error, Result};
use std::collections::HashMap;

/// Factor multiplicities of a repeated-root cyclic code of length 2^a·m:
/// one entry per irreducible factor of x^m − 1, including multiplicity 0.
#[derive(Debug, Clone)]
pub struct RepeatedRootProfile {
    pub m: u64,
    pub a: u32,
    /// (coset leader, multiplicity 0..=2^a), in leader order.
    pub multiplicities: Vec<(u64, u32)>,
}

impl RepeatedRootProfile {
    /// Generator of the length-m subcode keeping factors of multiplicity > t.
    pub fn subcode_generator(&self, t: u32) -> Result<BinPoly> {
        let table = cyclotomic_table(self.m)?;
        let mut g = BinPoly::one();
        for &(leader, e) in &self.multiplicities {
            if e > t {
                g = g.mul(table.minimal_poly(leader));
            }
        }
        Ok(g)
    }
}

/// Multiplicity profile of a cyclic code: factors its generator against the
/// minimal polynomials of x^m − 1.
pub fn profile(code: &CyclicCode) -> Result<RepeatedRootProfile> {
    let n = code.n() as u64;
    let a = n.trailing_zeros();
    let m = n >> a;
    let table = cyclotomic_table(m)?;
    let mut g = code.generator().clone();
    let mut multiplicities = Vec::new();
    for (leader, m_poly) in table.factors() {
        let mut e = 0u32;
        while m_poly.divides(&g) {
            g = g.div_exact(m_poly)?;
            e += 1;
        }
        multiplicities.push((leader, e));
    }
    if !g.is_one() {
        return Err(Error::Internal("generator did not factor over x^m - 1"));
    }
    Ok(RepeatedRootProfile {
        m,
        a,
        multiplicities,
    })
}

/// P_t: the minimum weight of the length-2^a cyclic code ⟨(x−1)^t⟩, i.e. the
/// distance multiplier attached to multiplicity threshold t. P_0 = 1 and
/// P_t = 2^{a − ⌊log2(2^a − t)⌋} otherwise.
pub fn multiplicity_weight(t: u32, a: u32) -> u64 {
    if t == 0 {
        return 1;
    }
    let len = 1u64 << a;
    let gap = len - t as u64;
    let j = a - (63 - gap.leading_zeros());
    1u64 << j
}

/// Exact minimum distance of a repeated-root cyclic code via the
/// multiplicity profile. `known` supplies certified distances for length-m
/// subcodes whose dimension exceeds the budget. Returns `None` for the zero
/// code.
pub fn castagnoli_distance_with(
    code: &CyclicCode,
    budget: Budget,
    known: &[(BinPoly, u32)],
) -> Result<Option<u32>> {
    if code.is_zero_code() {
        return Ok(None);
    }
    let prof = profile(code)?;
    let two_a = 1u32 << prof.a;
    let mut best: Option<u64> = None;
    let mut cache: HashMap<BinPoly, Option<u32>> = HashMap::new();
    for t in 0..two_a {
        let g_t = prof.subcode_generator(t)?;
        let sub_d = match cache.get(&g_t) {
            Some(d) => *d,
            None => {
                let d = subcode_distance(&g_t, prof.m as usize, budget, known)?;
                cache.insert(g_t.clone(), d);
                d
            }
        };
        let Some(d) = sub_d else { continue }; // zero subcode contributes nothing
        let candidate = multiplicity_weight(t, prof.a) * d as u64;
        best = Some(best.map_or(candidate, |b| b.min(candidate)));
    }
    best.map(|b| u32::try_from(b).map_err(|_| Error::Internal("distance overflow")))
        .transpose()
}

pub fn castagnoli_distance(code: &CyclicCode, budget: Budget) -> Result<Option<u32>> {
    castagnoli_distance_with(code, budget, &[])
}

fn subcode_distance(
    g: &BinPoly,
    m: usize,
    budget: Budget,
    known: &[(BinPoly, u32)],
) -> Result<Option<u32>> {
    if g.is_one() {
        return Ok(Some(1)); // full space
    }
    if g.degree() == Some(m) {
        return Ok(None); // zero code
    }
    if let Some((_, d)) = known.iter().find(|(f, _)| f == g) {
        return Ok(Some(*d));
    }
    CyclicCode::new(m, g.clone())?.min_distance(budget)
}

/// The length-2n cyclic code ⟨f⟩ for any divisor f of x^n − 1, n odd. Such a
/// code is dual-containing for every f; that predicate is re-checked and a
/// failure is reported as an internal error.
pub fn dual_containing_2n(f: &BinPoly, n: usize) -> Result<CyclicCode> {
    check_base_divisor(f, n)?;
    let code = CyclicCode::new(2 * n, f.clone())?;
    if !code.is_dual_containing() {
        return Err(Error::Internal("length-2n code must be dual-containing"));
    }
    Ok(code)
}

/// The length-4n pair C = ⟨f²⟩ ⊆ D = ⟨f⟩ together with the length-n base
/// code ⟨f⟩ whose distance drives the construction's printed capabilities.
#[derive(Debug, Clone)]
pub struct Pair4n {
    pub c: CyclicCode,
    pub d: CyclicCode,
    pub base: CyclicCode,
}

pub fn pair_4n(f: &BinPoly, n: usize) -> Result<Pair4n> {
    check_base_divisor(f, n)?;
    if f.is_one() {
        return Err(Error::Hypothesis {
            construction: "pair_4n",
            name: "nondegenerate",
            detail: "f = 1 makes C = D = full space (k1 = k2)".into(),
        });
    }
    if f.degree() == Some(n) {
        return Err(Error::Hypothesis {
            construction: "pair_4n",
            name: "nonzero_base",
            detail: "f = x^n - 1 makes the base code zero".into(),
        });
    }
    let c = CyclicCode::new(4 * n, f.square())?;
    let d = CyclicCode::new(4 * n, f.clone())?;
    if !c.is_dual_containing() {
        return Err(Error::Internal("⟨f²⟩ of length 4n must be dual-containing"));
    }
    if !d.contains(&c)? {
        return Err(Error::Internal("⟨f²⟩ must be a subcode of ⟨f⟩"));
    }
    let base = CyclicCode::new(n, f.clone())?;
    Ok(Pair4n { c, d, base })
}

fn check_base_divisor(f: &BinPoly, n: usize) -> Result<()> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::EvenModulus(n as u64));
    }
    if f.is_zero() || !f.divides(&BinPoly::xn_minus_one(n)) {
        return Err(Error::NotADivisor {
            poly: f.to_string(),
            n,
        });
    }
    Ok(())
}

/// The duadic repeated-root pair of length 2^i·m: C = ⟨(x−1)f₁⟩ ⊆ D = ⟨f₁⟩,
/// with C^⊥ ⊆ C. For i = 1 the dual generator is checked symbolically to be
/// (x−1)f₁²f₂.
#[derive(Debug, Clone)]
pub struct DuadicRrPair {
    pub c: CyclicCode,
    pub d: CyclicCode,
    pub splitting: Splitting,
    pub f1: BinPoly,
    pub f2: BinPoly,
    pub length: usize,
}

pub fn duadic_rr_pair(m: u64, i: u32) -> Result<DuadicRrPair> {
    if i == 0 {
        return Err(Error::InvalidParameter("exponent i must be >= 1".into()));
    }
    let splitting = mu_minus1_splitting(m)?;
    let (d1, d2) = odd_like_pair(&splitting)?;
    let f1 = d1.generator().clone();
    let f2 = d2.generator().clone();
    let length = (1usize << i) * m as usize;
    let x1 = BinPoly::parse("x+1").unwrap();
    let c = CyclicCode::new(length, x1.mul(&f1))?;
    let d = CyclicCode::new(length, f1.clone())?;
    if !c.is_dual_containing() {
        return Err(Error::Internal("duadic RR code must be dual-containing"));
    }
    if !d.contains(&c)? {
        return Err(Error::Internal("⟨(x-1)f1⟩ must sit inside ⟨f1⟩"));
    }
    if i == 1 {
        let expected_dual = x1.mul(&f1).mul(&f1).mul(&f2);
        if c.dual().generator() != &expected_dual {
            return Err(Error::Internal("dual generator is not (x-1)f1²f2"));
        }
    }
    Ok(DuadicRrPair {
        c,
        d,
        splitting,
        f1,
        f2,
        length,
    })
}
