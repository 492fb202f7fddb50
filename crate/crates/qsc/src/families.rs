//! Classical code families feeding the QSC constructors: narrow-sense BCH
//! codes with the dual-containing design-distance regime, and duadic codes
//! given by splittings.

use crate::code::CyclicCode;
use crate::field::{cosets, cyclotomic_table, nonreciprocal_split, ord_mod};
use crate::poly::BinPoly;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

// ---------------------------------------------------------------------------
// BCH codes
// ---------------------------------------------------------------------------

/// A BCH code together with its defining set.
#[derive(Debug, Clone)]
pub struct BchCode {
    pub code: CyclicCode,
    pub defining_set: BTreeSet<u64>,
    pub design_distance: u64,
    pub offset: u64,
}

/// BCH code of length n (odd) and design distance δ ≥ 2 at offset b:
/// g = lcm{M_b, M_{b+1}, …, M_{b+δ−2}}. Narrow-sense when b = 1.
pub fn bch(n: u64, delta: u64, b: u64) -> Result<BchCode> {
    if delta < 2 || delta > n {
        return Err(Error::InvalidParameter(format!(
            "design distance must satisfy 2 <= delta <= n, got {delta}"
        )));
    }
    let table = cyclotomic_table(n)?;
    let mut g = BinPoly::one();
    let mut defining = BTreeSet::new();
    for i in b..=b + delta - 2 {
        let m_i = table.minimal_poly(i % n);
        g = g.lcm(m_i)?;
        for &r in table.cosets.coset_of(i % n) {
            defining.insert(r);
        }
    }
    Ok(BchCode {
        code: CyclicCode::new(n as usize, g)?,
        defining_set: defining,
        design_distance: delta,
        offset: b,
    })
}

/// Largest design distance δ_max = ⌊κ⌋, κ = n(2^{⌈m/2⌉} − 1)/(2^m − 1), for
/// which the narrow-sense BCH code of length n is guaranteed dual-containing.
pub fn aly_delta_max(n: u64) -> Result<u64> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::EvenModulus(n));
    }
    let m = ord_mod(n, 2)?;
    if m > 120 {
        return Err(Error::InvalidParameter(format!("ord_n(2) = {m} too large")));
    }
    let num = (n as u128) * ((1u128 << m.div_ceil(2)) - 1);
    let den = (1u128 << m) - 1;
    Ok((num / den) as u64)
}

/// Report on the coset-size regime for one residue: in the range
/// 1 ≤ x ≤ n·2^{⌈m/2⌉}/(2^m − 1) every 2-coset has cardinality exactly m.
#[derive(Debug, Clone, Serialize)]
pub struct CosetRegimeReport {
    pub n: u64,
    pub x: u64,
    pub m: u64,
    pub cardinality: u64,
    pub in_part_one_range: bool,
    pub cardinality_is_m: bool,
}

fn check_regime_precondition(n: u64, m: u64) -> Result<()> {
    if m > 120 {
        return Err(Error::InvalidParameter(format!("ord_n(2) = {m} too large")));
    }
    if (1u128 << (m / 2)) >= n as u128 {
        return Err(Error::Hypothesis {
            construction: "coset_regime",
            name: "length_range",
            detail: format!("need 2^(m/2) < n <= 2^m - 1 with m = ord_n(2) = {m}, n = {n}"),
        });
    }
    Ok(())
}

pub fn coset_regime(n: u64, x: u64) -> Result<CosetRegimeReport> {
    let m = ord_mod(n, 2)?;
    check_regime_precondition(n, m)?;
    let table = cosets(n)?;
    let cardinality = table.coset_of(x).len() as u64;
    // x <= n·2^{⌈m/2⌉}/(2^m − 1), compared exactly in integers
    let in_range = x >= 1
        && (x as u128) * ((1u128 << m) - 1) <= (n as u128) * (1u128 << m.div_ceil(2));
    Ok(CosetRegimeReport {
        n,
        x,
        m,
        cardinality,
        in_part_one_range: in_range,
        cardinality_is_m: cardinality == m,
    })
}

/// Disjointness check for two odd residues in the part-two range
/// 1 ≤ x, y ≤ min{⌊n·2^{⌈m/2⌉}/(2^m − 1) − 1⌋, n − 1}.
#[derive(Debug, Clone, Serialize)]
pub struct CosetDisjointReport {
    pub n: u64,
    pub x: u64,
    pub y: u64,
    pub range_max: u64,
    pub both_in_range: bool,
    pub disjoint: bool,
}

pub fn coset_regime_disjoint(n: u64, x: u64, y: u64) -> Result<CosetDisjointReport> {
    let m = ord_mod(n, 2)?;
    check_regime_precondition(n, m)?;
    let part_two_max = {
        let num = (n as u128) * (1u128 << m.div_ceil(2));
        let den = (1u128 << m) - 1;
        ((num - den) / den) as u64
    };
    let range_max = part_two_max.min(n - 1);
    let table = cosets(n)?;
    let cx: BTreeSet<u64> = table.coset_of(x).iter().copied().collect();
    let cy: BTreeSet<u64> = table.coset_of(y).iter().copied().collect();
    Ok(CosetDisjointReport {
        n,
        x,
        y,
        range_max,
        both_in_range: (1..=range_max).contains(&x)
            && (1..=range_max).contains(&y)
            && x % 2 == 1
            && y % 2 == 1
            && x != y,
        disjoint: cx.is_disjoint(&cy),
    })
}

// ---------------------------------------------------------------------------
// Duadic codes
// ---------------------------------------------------------------------------

/// A splitting (μ_a, S₁, S₂) of Z_m \ {0} into unions of 2-cosets with
/// a·S₁ ≡ S₂ and a·S₂ ≡ S₁ (mod m).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Splitting {
    pub m: u64,
    /// Multiplier as a residue; μ₋₁ is stored as m − 1.
    pub a: u64,
    #[serde(rename = "S1")]
    pub s1: BTreeSet<u64>,
    #[serde(rename = "S2")]
    pub s2: BTreeSet<u64>,
}

impl Splitting {
    /// The three splitting axioms, by direct set computation:
    /// disjoint cover of Z_m \ {0}; both sides coset-closed; swapped by μ_a.
    pub fn axioms(&self) -> Result<[bool; 3]> {
        let m = self.m;
        let table = cosets(m)?;
        let mut cover: BTreeSet<u64> = self.s1.union(&self.s2).copied().collect();
        cover.insert(0);
        let covers = self.s1.is_disjoint(&self.s2)
            && cover.len() as u64 == m
            && self.s1.len() == self.s2.len();
        let coset_closed = |s: &BTreeSet<u64>| {
            s.iter()
                .all(|&r| table.coset_of(r).iter().all(|&q| s.contains(&q)))
        };
        let closed = coset_closed(&self.s1) && coset_closed(&self.s2);
        let map = |s: &BTreeSet<u64>| -> BTreeSet<u64> {
            s.iter().map(|&r| (r * self.a) % m).collect()
        };
        let swapped = map(&self.s1) == self.s2 && map(&self.s2) == self.s1;
        Ok([covers, closed, swapped])
    }

    pub fn is_valid(&self) -> bool {
        self.axioms().map(|a| a.iter().all(|&b| b)).unwrap_or(false)
    }
}

/// Duadic codes of length m over GF(2) exist iff 2 is a quadratic residue
/// modulo every prime factor of m (Euler's criterion).
pub fn duadic_exists(m: u64) -> Result<bool> {
    if m < 3 || m % 2 == 0 {
        return Err(Error::EvenModulus(m));
    }
    for (p, _) in crate::poly::factor_u64(m) {
        if p == 1 {
            continue;
        }
        if pow_mod_u64(2, (p - 1) / 2, p) != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mm = m as u128;
    let mut bb = (b % m) as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % mm;
        }
        bb = bb * bb % mm;
        e >>= 1;
    }
    b = acc as u64;
    b
}

fn all_primes_are_minus_one_mod_8(m: u64) -> Result<()> {
    for (p, _) in crate::poly::factor_u64(m) {
        if p % 8 != 7 {
            return Err(Error::Hypothesis {
                construction: "mu_minus1_splitting",
                name: "prime_factors_minus_one_mod_8",
                detail: format!("prime factor {p} of {m} is not ≡ -1 (mod 8)"),
            });
        }
    }
    Ok(())
}

/// Every μ₋₁ splitting of m (all prime factors ≡ −1 mod 8), enumerated over
/// the 2^s assignments of reciprocal coset pairs, in deterministic order by
/// coset leader. Every returned splitting passes the axioms.
pub fn mu_minus1_splittings(m: u64) -> Result<Vec<Splitting>> {
    if m < 3 || m % 2 == 0 {
        return Err(Error::EvenModulus(m));
    }
    all_primes_are_minus_one_mod_8(m)?;
    let split = nonreciprocal_split(m)?;
    if !split.self_reciprocal.is_empty() {
        return Err(Error::Internal(
            "self-reciprocal coset under odd ord_m(2)",
        ));
    }
    let table = cosets(m)?;
    let pairs = &split.pairs;
    if pairs.len() > 20 {
        return Err(Error::InvalidParameter(format!(
            "{} reciprocal pairs is too many to enumerate",
            pairs.len()
        )));
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut s1 = BTreeSet::new();
        let mut s2 = BTreeSet::new();
        for (i, &(lo, hi)) in pairs.iter().enumerate() {
            let (to_s1, to_s2) = if (mask >> i) & 1 == 0 { (lo, hi) } else { (hi, lo) };
            s1.extend(table.coset_of(to_s1).iter().copied());
            s2.extend(table.coset_of(to_s2).iter().copied());
        }
        let candidate = Splitting {
            m,
            a: m - 1,
            s1,
            s2,
        };
        if candidate.is_valid() {
            out.push(candidate);
        }
    }
    if out.is_empty() {
        return Err(Error::Internal("no valid μ₋₁ splitting found"));
    }
    Ok(out)
}

/// The canonical μ₋₁ splitting: smaller leader of every reciprocal pair on
/// the S₁ side.
pub fn mu_minus1_splitting(m: u64) -> Result<Splitting> {
    Ok(mu_minus1_splittings(m)?.remove(0))
}

/// The odd-like duadic pair D₁, D₂ with generators fᵢ = ∏_{j∈Sᵢ}(x − α^j),
/// each of degree (m−1)/2 and dimension (m+1)/2.
pub fn odd_like_pair(split: &Splitting) -> Result<(CyclicCode, CyclicCode)> {
    let (f1, f2) = generator_pair(split)?;
    // f1 · f2 · (x+1) = x^m − 1
    let product = f1.mul(&f2).mul(&BinPoly::parse("x+1").unwrap());
    if product != BinPoly::xn_minus_one(split.m as usize) {
        return Err(Error::Internal("f1·f2·(x-1) is not x^m - 1"));
    }
    if split.a == split.m - 1 && f1.reciprocal() != f2 {
        return Err(Error::Internal("μ₋₁ splitting must have f1 = f2*"));
    }
    Ok((
        CyclicCode::new(split.m as usize, f1)?,
        CyclicCode::new(split.m as usize, f2)?,
    ))
}

/// The even-like duadic pair C₁, C₂ with defining sets {0} ∪ Sᵢ, i.e.
/// generators (x−1)fᵢ and dimension (m−1)/2.
pub fn even_like_pair(split: &Splitting) -> Result<(CyclicCode, CyclicCode)> {
    let (f1, f2) = generator_pair(split)?;
    let x1 = BinPoly::parse("x+1").unwrap();
    Ok((
        CyclicCode::new(split.m as usize, x1.mul(&f1))?,
        CyclicCode::new(split.m as usize, x1.mul(&f2))?,
    ))
}

fn generator_pair(split: &Splitting) -> Result<(BinPoly, BinPoly)> {
    let table = cyclotomic_table(split.m)?;
    let product = |s: &BTreeSet<u64>| -> Result<BinPoly> {
        let mut leaders = BTreeSet::new();
        for &r in s {
            leaders.insert(table.cosets.leader_of(r));
        }
        let mut acc = BinPoly::one();
        for l in leaders {
            acc = acc.mul(table.minimal_poly(l));
        }
        Ok(acc)
    };
    Ok((product(&split.s1)?, product(&split.s2)?))
}

/// Smallest d with d² − d + 1 ≥ m (the square-root bound on odd-like duadic
/// distances when the splitting is by μ₋₁).
pub fn square_root_bound(m: u64) -> u64 {
    let mut d = 1u64;
    while d * d - d + 1 < m {
        d += 1;
    }
    d
}

/// Dual-containing cyclic code ⟨∏_{j∈T} M_j⟩ for m with all prime factors
/// ≡ −1 (mod 8), where T picks at most one leader from each reciprocal pair.
pub fn subset_code(m: u64, t: &BTreeSet<u64>) -> Result<CyclicCode> {
    all_primes_are_minus_one_mod_8(m).map_err(|_| Error::Hypothesis {
        construction: "subset_code",
        name: "prime_factors_minus_one_mod_8",
        detail: format!("modulus {m}"),
    })?;
    let split = nonreciprocal_split(m)?;
    validate_pair_leaders(m, t, &split.pairs, "subset_code")?;
    let table = cyclotomic_table(m)?;
    let mut g = BinPoly::one();
    for &j in t {
        g = g.mul(table.minimal_poly(j));
    }
    let code = CyclicCode::new(m as usize, g)?;
    if !code.is_dual_containing() {
        return Err(Error::Internal("subset code must be dual-containing"));
    }
    Ok(code)
}

/// T must consist of nontrivial coset leaders, at most one per reciprocal
/// pair, never the leader 0.
pub(crate) fn validate_pair_leaders(
    m: u64,
    t: &BTreeSet<u64>,
    pairs: &[(u64, u64)],
    construction: &'static str,
) -> Result<()> {
    let leader_ok = |j: u64| pairs.iter().any(|&(lo, hi)| j == lo || j == hi);
    for &j in t {
        if j == 0 || j >= m || !leader_ok(j) {
            return Err(Error::Hypothesis {
                construction: "subset_code",
                name: "leader_selection",
                detail: format!("{j} is not a paired nontrivial coset leader mod {m} ({construction})"),
            });
        }
    }
    for &(lo, hi) in pairs {
        if t.contains(&lo) && t.contains(&hi) {
            return Err(Error::Hypothesis {
                construction: "subset_code",
                name: "one_leader_per_pair",
                detail: format!("T contains the reciprocal pair ({lo}, {hi}) mod {m}"),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{bch_bound, Budget};

    #[test]
    fn bch_examples() {
        let c = bch(31, 4, 1).unwrap();
        assert_eq!(c.code.dim(), 21);
        assert!(bch_bound(&c.defining_set, 31) >= 5);

        let c = bch(31, 2, 1).unwrap();
        assert_eq!(c.code.generator(), &crate::field::minimal_poly(1, 31).unwrap());

        let c = bch(15, 2, 1).unwrap();
        assert_eq!(c.code.dim(), 11);

        assert!(bch(15, 1, 1).is_err());
    }

    #[test]
    fn aly_examples() {
        assert_eq!(aly_delta_max(15).unwrap(), 3);
        assert_eq!(aly_delta_max(31).unwrap(), 7);
        assert_eq!(aly_delta_max(7).unwrap(), 3);
        assert_eq!(aly_delta_max(63).unwrap(), 7);
    }

    #[test]
    fn coset_regime_examples() {
        let r = coset_regime(31, 1).unwrap();
        assert_eq!(r.cardinality, 5);
        assert!(r.in_part_one_range && r.cardinality_is_m);

        let r = coset_regime(15, 1).unwrap();
        assert_eq!(r.cardinality, 4);
        assert!(r.in_part_one_range && r.cardinality_is_m);

        let d = coset_regime_disjoint(31, 3, 5).unwrap();
        assert!(d.disjoint && d.both_in_range);

        // ord_3(2) = 2, 2^1 >= 3 fails the precondition
        assert!(coset_regime(3, 1).is_err());
    }

    #[test]
    fn duadic_existence() {
        assert!(duadic_exists(7).unwrap());
        assert!(!duadic_exists(15).unwrap());
        assert!(duadic_exists(49).unwrap());
        assert!(duadic_exists(23).unwrap());
        assert!(duadic_exists(17).unwrap()); // 2 = 6^2 mod 17
    }

    #[test]
    fn splitting_examples() {
        let s = mu_minus1_splitting(7).unwrap();
        assert_eq!(s.s1, BTreeSet::from([1, 2, 4]));
        assert_eq!(s.s2, BTreeSet::from([3, 5, 6]));
        assert_eq!(s.axioms().unwrap(), [true, true, true]);

        let s23 = mu_minus1_splitting(23).unwrap();
        // quadratic residues mod 23
        let qrs: BTreeSet<u64> = (1..23u64).map(|x| x * x % 23).collect();
        assert_eq!(s23.s1, qrs);
        assert!(s23.is_valid());

        assert!(matches!(
            mu_minus1_splitting(15),
            Err(Error::Hypothesis { name: "prime_factors_minus_one_mod_8", .. })
        ));
    }

    #[test]
    fn splitting_enumeration() {
        // m = 49 has two reciprocal pairs, hence four μ₋₁ splittings
        let all = mu_minus1_splittings(49).unwrap();
        assert_eq!(all.len(), 4);
        for s in &all {
            assert!(s.is_valid());
            assert_eq!(s.s1.len() as u64, 24);
        }
    }

    #[test]
    fn splitting_json_shape() {
        let s = mu_minus1_splitting(7).unwrap();
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v["m"], 7);
        assert_eq!(v["a"], 6);
        assert_eq!(v["S1"], serde_json::json!([1, 2, 4]));
        assert_eq!(v["S2"], serde_json::json!([3, 5, 6]));
    }

    #[test]
    fn odd_like_pair_examples() {
        let s = mu_minus1_splitting(7).unwrap();
        let (d1, d2) = odd_like_pair(&s).unwrap();
        assert_eq!(d1.generator(), &BinPoly::parse("x^3+x+1").unwrap());
        assert_eq!(d2.generator(), &BinPoly::parse("x^3+x^2+1").unwrap());
        assert_eq!(d1.dim(), 4);
        assert_eq!(d1.min_distance(Budget::default()).unwrap(), Some(3));

        let (c1, c2) = even_like_pair(&s).unwrap();
        assert_eq!(c1.dim(), 3);
        assert_eq!(c1.min_distance(Budget::default()).unwrap(), Some(4));
        assert_eq!(c2.min_distance(Budget::default()).unwrap(), Some(4));

        let s23 = mu_minus1_splitting(23).unwrap();
        let (d1, d2) = odd_like_pair(&s23).unwrap();
        assert_eq!(d1.dim(), 12);
        assert_eq!(d1.min_distance(Budget::default()).unwrap(), Some(7));
        assert_eq!(d2.min_distance(Budget::default()).unwrap(), Some(7));
    }

    #[test]
    fn square_root_bound_examples() {
        assert_eq!(square_root_bound(7), 3);
        assert_eq!(square_root_bound(23), 6);
        assert_eq!(square_root_bound(1), 1);
    }

    #[test]
    fn subset_code_examples() {
        let c = subset_code(7, &BTreeSet::from([1])).unwrap();
        assert_eq!(c.dim(), 4);
        assert!(c.is_dual_containing());

        let full = subset_code(7, &BTreeSet::new()).unwrap();
        assert_eq!(full.dim(), 7);
        assert!(full.is_dual_containing());

        let golay = subset_code(23, &BTreeSet::from([1])).unwrap();
        assert_eq!(golay.dim(), 12);
        assert!(golay.is_dual_containing());

        // both members of a reciprocal pair rejected
        assert!(subset_code(7, &BTreeSet::from([1, 3])).is_err());
        // leader 0 rejected
        assert!(subset_code(7, &BTreeSet::from([0])).is_err());
    }

    #[test]
    fn aly_regime_is_dual_containing() {
        for n in [7u64, 15, 31] {
            let dmax = aly_delta_max(n).unwrap();
            for delta in 2..=dmax {
                let c = bch(n, delta, 1).unwrap();
                assert!(c.code.is_dual_containing(), "n={n} delta={delta}");
            }
        }
    }
}
