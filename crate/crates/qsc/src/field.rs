//! Cyclotomic cosets, GF(2^m) towers, minimal polynomials, and the
//! factorization of x^N − 1 for both simple-root and repeated-root lengths.
//!
//! For odd n, x^n − 1 factors into the minimal polynomials M_ℓ(x) of α^ℓ,
//! one per 2-cyclotomic coset leader ℓ, where α is a fixed n-th root of unity
//! in GF(2^m) with m = ord_n(2). For N = 2^a·m the same factors recur with
//! multiplicity 2^a. Tables are built once per n, verified by multiplying the
//! factors back together, and cached.
//!
//! Field arithmetic is polynomial-basis throughout: elements are [`BinPoly`]
//! values reduced modulo a fixed irreducible modulus, which keeps degrees in
//! the hundreds workable without log/antilog tables.

use crate::poly::{divisors_u64, factor_u64, BinPoly};
use crate::{Error, Result};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// The 2-cyclotomic cosets modulo an odd n.
#[derive(Debug, Clone)]
pub struct CosetTable {
    n: u64,
    /// Sorted member lists, ordered by leader (smallest element).
    cosets: Vec<Vec<u64>>,
    /// residue -> index into `cosets`
    coset_index: Vec<usize>,
}

impl CosetTable {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn cosets(&self) -> &[Vec<u64>] {
        &self.cosets
    }

    pub fn leaders(&self) -> impl Iterator<Item = u64> + '_ {
        self.cosets.iter().map(|c| c[0])
    }

    pub fn coset_of(&self, r: u64) -> &[u64] {
        &self.cosets[self.coset_index[(r % self.n) as usize]]
    }

    pub fn leader_of(&self, r: u64) -> u64 {
        self.coset_of(r)[0]
    }

    pub fn index_of(&self, r: u64) -> usize {
        self.coset_index[(r % self.n) as usize]
    }
}

/// Partition of {0, …, n−1} into 2-cosets. Requires n odd, n ≥ 1.
pub fn cosets(n: u64) -> Result<CosetTable> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::EvenModulus(n));
    }
    let mut coset_index = vec![usize::MAX; n as usize];
    let mut cosets = Vec::new();
    for s in 0..n {
        if coset_index[s as usize] != usize::MAX {
            continue;
        }
        let idx = cosets.len();
        let mut members = Vec::new();
        let mut r = s;
        loop {
            coset_index[r as usize] = idx;
            members.push(r);
            r = (r * 2) % n;
            if r == s {
                break;
            }
        }
        members.sort_unstable();
        cosets.push(members);
    }
    Ok(CosetTable {
        n,
        cosets,
        coset_index,
    })
}

/// Least l ≥ 1 with base^l ≡ 1 (mod n). Requires gcd(base, n) = 1.
pub fn ord_mod(n: u64, base: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidParameter("modulus 0".into()));
    }
    if n == 1 {
        return Ok(1);
    }
    if crate::poly::gcd_u64(base % n, n) != 1 {
        return Err(Error::NotCoprime { base, modulus: n });
    }
    let mut acc = base % n;
    for l in 1.. {
        if acc == 1 {
            return Ok(l);
        }
        acc = ((acc as u128 * base as u128) % n as u128) as u64;
    }
    unreachable!()
}

// ---------------------------------------------------------------------------
// GF(2^m) tower with a distinguished n-th root of unity
// ---------------------------------------------------------------------------

/// GF(2^m) in polynomial basis, m = ord_n(2), together with an element α of
/// multiplicative order exactly n.
#[derive(Debug, Clone)]
pub struct FieldTower {
    n: u64,
    m: usize,
    modulus: BinPoly,
    alpha: BinPoly,
}

impl FieldTower {
    pub fn build(n: u64) -> Result<FieldTower> {
        if n == 0 || n % 2 == 0 {
            return Err(Error::EvenModulus(n));
        }
        let m = ord_mod(n, 2)? as usize;
        let modulus = smallest_irreducible(m)?;
        // exponent (2^m − 1)/n as little-endian limbs
        let exponent = mersenne_div(m, n);
        let n_primes: Vec<u64> = factor_u64(n).into_iter().map(|(p, _)| p).collect();
        // Deterministic search for an element of order exactly n: walk the
        // field elements in encoding order and project into the order-n
        // subgroup.
        for enc in 2u64.. {
            let beta = BinPoly::from_exponents(
                (0..64).filter(|b| (enc >> b) & 1 == 1),
            )
            .rem(&modulus)?;
            if beta.is_zero() || beta.is_one() && n > 1 {
                continue;
            }
            let alpha = beta.powmod_limbs(&exponent, &modulus)?;
            if alpha.is_zero() || (alpha.is_one() && n > 1) {
                continue;
            }
            if element_order_is(&alpha, n, &n_primes, &modulus)? {
                return Ok(FieldTower {
                    n,
                    m,
                    modulus,
                    alpha,
                });
            }
        }
        unreachable!()
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn extension_degree(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &BinPoly {
        &self.modulus
    }

    pub fn alpha(&self) -> &BinPoly {
        &self.alpha
    }

    pub fn mul(&self, a: &BinPoly, b: &BinPoly) -> BinPoly {
        a.mul(b).rem(&self.modulus).expect("modulus nonzero")
    }

    /// α^j for 0 ≤ j < n, all at once.
    pub fn alpha_powers(&self) -> Vec<BinPoly> {
        let mut powers = Vec::with_capacity(self.n as usize);
        let mut acc = BinPoly::one();
        for _ in 0..self.n {
            powers.push(acc.clone());
            acc = self.mul(&acc, &self.alpha);
        }
        powers
    }
}

fn element_order_is(a: &BinPoly, n: u64, n_primes: &[u64], modulus: &BinPoly) -> Result<bool> {
    if !a.powmod(n, modulus)?.is_one() {
        return Ok(false);
    }
    for &p in n_primes {
        if a.powmod(n / p, modulus)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// (2^m − 1)/n as little-endian u64 limbs; n must divide 2^m − 1.
fn mersenne_div(m: usize, n: u64) -> Vec<u64> {
    let limbs = m / 64 + 1;
    let mut num = vec![u64::MAX; limbs];
    let top_bits = m % 64;
    num[limbs - 1] = if top_bits == 0 { 0 } else { u64::MAX >> (64 - top_bits) };
    if m % 64 == 0 {
        num.pop();
    }
    // long division by n, most significant limb first
    let mut out = vec![0u64; num.len()];
    let mut rem: u128 = 0;
    for i in (0..num.len()).rev() {
        let cur = (rem << 64) | num[i] as u128;
        out[i] = (cur / n as u128) as u64;
        rem = cur % n as u128;
    }
    debug_assert_eq!(rem, 0, "n must divide 2^m - 1");
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Lexicographically smallest (by coefficient encoding) irreducible
/// polynomial of degree m with nonzero constant term. The fixed choice keeps
/// every minimal-polynomial label deterministic across runs.
pub fn smallest_irreducible(m: usize) -> Result<BinPoly> {
    static CACHE: OnceLock<Mutex<HashMap<usize, BinPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return Ok(p.clone());
    }
    if m == 0 {
        return Err(Error::InvalidParameter("degree-0 modulus".into()));
    }
    let m_primes: Vec<u64> = factor_u64(m as u64).into_iter().map(|(p, _)| p).collect();
    // Candidates are x^m + v with v odd, ascending; candidates with an even
    // constant term are divisible by x, so none are skipped wrongly. The low
    // 64 bits are far more headroom than any search needs.
    for k in 0u64.. {
        let v = 2 * k + 1;
        let candidate = BinPoly::monomial(m).add(&BinPoly::from_exponents(
            (0..64).filter(|b| (v >> b) & 1 == 1),
        ));
        if is_irreducible(&candidate, m, &m_primes)? {
            cache.lock().unwrap().insert(m, candidate.clone());
            return Ok(candidate);
        }
    }
    unreachable!()
}

/// Rabin's test: p of degree m is irreducible iff x^{2^m} ≡ x (mod p) and
/// gcd(x^{2^{m/q}} − x, p) = 1 for every prime q | m.
fn is_irreducible(p: &BinPoly, m: usize, m_primes: &[u64]) -> Result<bool> {
    if p.degree() != Some(m) || !p.coeff(0) {
        return Ok(false);
    }
    if m == 1 {
        return Ok(true);
    }
    let x = BinPoly::monomial(1);
    let mut h = x.rem(p)?;
    let checkpoints: Vec<usize> = m_primes.iter().map(|&q| m / q as usize).collect();
    for i in 1..=m {
        h = h.square().rem(p)?;
        if checkpoints.contains(&i) {
            let g = h.add(&x).gcd(p)?;
            if g.degree() != Some(0) {
                return Ok(false);
            }
        }
    }
    Ok(h == x.rem(p)?)
}

// ---------------------------------------------------------------------------
// Minimal polynomials and the factorization of x^N − 1
// ---------------------------------------------------------------------------

/// The factorization data for x^n − 1, n odd: one minimal polynomial per
/// cyclotomic coset, aligned with the coset table.
#[derive(Debug)]
pub struct CyclotomicTable {
    pub cosets: CosetTable,
    minimal: Vec<BinPoly>,
}

impl CyclotomicTable {
    pub fn n(&self) -> u64 {
        self.cosets.n()
    }

    /// M_s(x) for any residue s (the minimal polynomial of α^s).
    pub fn minimal_poly(&self, s: u64) -> &BinPoly {
        &self.minimal[self.cosets.index_of(s)]
    }

    /// (leader, minimal polynomial) pairs in leader order.
    pub fn factors(&self) -> impl Iterator<Item = (u64, &BinPoly)> {
        self.cosets
            .cosets()
            .iter()
            .map(|c| c[0])
            .zip(self.minimal.iter())
    }

    fn build(n: u64) -> Result<CyclotomicTable> {
        let table = cosets(n)?;
        let tower = FieldTower::build(n)?;
        let powers = tower.alpha_powers();
        let mut minimal = Vec::with_capacity(table.cosets().len());
        let mut product = BinPoly::one();
        for coset in table.cosets() {
            // ∏_{j ∈ coset} (x + α^j), expanded over GF(2^m)
            let mut coeffs: Vec<BinPoly> = vec![BinPoly::one()];
            for &j in coset {
                let a = &powers[j as usize];
                let mut next: Vec<BinPoly> = vec![BinPoly::zero(); coeffs.len() + 1];
                for (i, c) in coeffs.iter().enumerate() {
                    next[i + 1] = next[i + 1].add(c);
                    next[i] = next[i].add(&tower.mul(c, a));
                }
                coeffs = next;
            }
            let mut m_poly = BinPoly::zero();
            for (i, c) in coeffs.iter().enumerate() {
                match c.degree() {
                    None => {}
                    Some(0) => m_poly = m_poly.add(&BinPoly::monomial(i)),
                    Some(_) => return Err(Error::Internal("minimal polynomial not over GF(2)")),
                }
            }
            if m_poly.degree() != Some(coset.len()) {
                return Err(Error::Internal("minimal polynomial degree mismatch"));
            }
            product = product.mul(&m_poly);
            minimal.push(m_poly);
        }
        if product != BinPoly::xn_minus_one(n as usize) {
            return Err(Error::Internal("factor product is not x^n - 1"));
        }
        Ok(CyclotomicTable {
            cosets: table,
            minimal,
        })
    }
}

/// Cached factorization table for odd n.
pub fn cyclotomic_table(n: u64) -> Result<Arc<CyclotomicTable>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CyclotomicTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return Ok(t.clone());
    }
    let built = Arc::new(CyclotomicTable::build(n)?);
    cache
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| built.clone());
    Ok(built)
}

/// Minimal polynomial M_s(x) of α^s for the fixed order-n root α.
pub fn minimal_poly(s: u64, n: u64) -> Result<BinPoly> {
    Ok(cyclotomic_table(n)?.minimal_poly(s).clone())
}

/// Full factorization of x^N − 1 = ∏ M_ℓ(x)^{2^a} where N = 2^a·m, m odd.
/// Factors are listed in coset-leader order.
pub fn factor_cycl(n_len: u64) -> Result<Vec<(BinPoly, u32)>> {
    if n_len == 0 {
        return Err(Error::InvalidParameter("length 0".into()));
    }
    let a = n_len.trailing_zeros();
    let m = n_len >> a;
    let table = cyclotomic_table(m)?;
    Ok(table
        .factors()
        .map(|(_, p)| (p.clone(), 1u32 << a))
        .collect())
}

/// Classification of the nontrivial coset leaders of an odd m into
/// self-reciprocal leaders (coset closed under negation mod m) and
/// reciprocal pairs {ℓ, leader(−ℓ)}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocalSplit {
    pub self_reciprocal: Vec<u64>,
    pub pairs: Vec<(u64, u64)>,
}

pub fn nonreciprocal_split(m: u64) -> Result<ReciprocalSplit> {
    let table = cosets(m)?;
    let mut self_reciprocal = Vec::new();
    let mut pairs = Vec::new();
    for leader in table.leaders() {
        if leader == 0 {
            continue;
        }
        let neg = table.leader_of(m - leader);
        if neg == leader {
            self_reciprocal.push(leader);
        } else if leader < neg {
            pairs.push((leader, neg));
        }
    }
    Ok(ReciprocalSplit {
        self_reciprocal,
        pairs,
    })
}

/// Divisors of x^N − 1 enumerated as exponent vectors over the irreducible
/// factors, visiting partial products depth-first so each divisor costs one
/// small multiplication. `visit` receives (divisor, exponents).
pub fn for_each_divisor<F: FnMut(&BinPoly, &[u32])>(
    factors: &[(BinPoly, u32)],
    mut visit: F,
) {
    fn rec<F: FnMut(&BinPoly, &[u32])>(
        factors: &[(BinPoly, u32)],
        idx: usize,
        current: &BinPoly,
        exps: &mut Vec<u32>,
        visit: &mut F,
    ) {
        if idx == factors.len() {
            visit(current, exps);
            return;
        }
        let (p, max_e) = &factors[idx];
        let mut acc = current.clone();
        for e in 0..=*max_e {
            exps.push(e);
            rec(factors, idx + 1, &acc, exps, visit);
            exps.pop();
            if e < *max_e {
                acc = acc.mul(p);
            }
        }
    }
    let mut exps = Vec::with_capacity(factors.len());
    rec(factors, 0, &BinPoly::one(), &mut exps, &mut visit);
}

/// Total number of divisors of x^N − 1 given its factor multiplicities.
pub fn divisor_count(factors: &[(BinPoly, u32)]) -> u128 {
    factors
        .iter()
        .map(|(_, e)| (*e as u128) + 1)
        .product()
}

/// Divisors of a u64, re-exported for parameter plumbing.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut d = divisors_u64(n);
    d.sort_unstable();
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::order;

    fn p(s: &str) -> BinPoly {
        BinPoly::parse(s).unwrap()
    }

    #[test]
    fn cosets_examples() {
        let t = cosets(7).unwrap();
        assert_eq!(t.cosets(), &[vec![0], vec![1, 2, 4], vec![3, 5, 6]]);
        let t = cosets(1).unwrap();
        assert_eq!(t.cosets(), &[vec![0]]);
        let t = cosets(15).unwrap();
        assert_eq!(
            t.cosets(),
            &[
                vec![0],
                vec![1, 2, 4, 8],
                vec![3, 6, 9, 12],
                vec![5, 10],
                vec![7, 11, 13, 14],
            ]
        );
        assert!(cosets(6).is_err());
    }

    #[test]
    fn coset_sizes_partition() {
        for n in (1..=63u64).step_by(2) {
            let t = cosets(n).unwrap();
            let total: usize = t.cosets().iter().map(|c| c.len()).sum();
            assert_eq!(total, n as usize);
            assert_eq!(t.coset_of(0), &[0]);
        }
    }

    #[test]
    fn ord_mod_examples() {
        assert_eq!(ord_mod(7, 2).unwrap(), 3);
        assert_eq!(ord_mod(1, 2).unwrap(), 1);
        assert_eq!(ord_mod(23, 2).unwrap(), 11);
        assert!(ord_mod(15, 3).is_err());
    }

    #[test]
    fn tower_alpha_has_order_n() {
        for n in [1u64, 7, 15, 23, 31, 45] {
            let tower = FieldTower::build(n).unwrap();
            assert_eq!(tower.extension_degree(), ord_mod(n, 2).unwrap() as usize);
            let primes: Vec<u64> = factor_u64(n).into_iter().map(|(q, _)| q).collect();
            assert!(element_order_is(tower.alpha(), n, &primes, tower.modulus()).unwrap());
        }
    }

    #[test]
    fn smallest_irreducible_pins() {
        assert_eq!(smallest_irreducible(1).unwrap(), p("x+1"));
        assert_eq!(smallest_irreducible(2).unwrap(), p("x^2+x+1"));
        assert_eq!(smallest_irreducible(3).unwrap(), p("x^3+x+1"));
        assert_eq!(smallest_irreducible(4).unwrap(), p("x^4+x+1"));
    }

    #[test]
    fn minimal_poly_examples() {
        assert_eq!(minimal_poly(0, 7).unwrap(), p("x+1"));
        assert_eq!(minimal_poly(1, 7).unwrap(), p("x^3+x+1"));
        assert_eq!(minimal_poly(3, 7).unwrap(), p("x^3+x^2+1"));
        assert_eq!(
            minimal_poly(3, 7).unwrap(),
            minimal_poly(1, 7).unwrap().reciprocal()
        );
        assert_eq!(minimal_poly(0, 1).unwrap(), p("x+1"));
    }

    #[test]
    fn factor_cycl_examples() {
        let f7 = factor_cycl(7).unwrap();
        assert_eq!(
            f7,
            vec![(p("x+1"), 1), (p("x^3+x+1"), 1), (p("x^3+x^2+1"), 1)]
        );
        assert_eq!(factor_cycl(1).unwrap(), vec![(p("x+1"), 1)]);
        let f14 = factor_cycl(14).unwrap();
        assert_eq!(
            f14,
            vec![(p("x+1"), 2), (p("x^3+x+1"), 2), (p("x^3+x^2+1"), 2)]
        );
    }

    #[test]
    fn factor_products_reconstruct() {
        for n_len in [1u64, 2, 7, 12, 14, 15, 24, 45, 56, 63] {
            let factors = factor_cycl(n_len).unwrap();
            let mut acc = BinPoly::one();
            for (f, e) in &factors {
                acc = acc.mul(&f.pow(*e));
            }
            assert_eq!(acc, BinPoly::xn_minus_one(n_len as usize), "n = {n_len}");
        }
    }

    #[test]
    fn reciprocal_of_minimal_is_negated_coset() {
        for n in [7u64, 15, 31, 45] {
            let table = cyclotomic_table(n).unwrap();
            for leader in table.cosets.leaders() {
                let m_s = table.minimal_poly(leader);
                let m_neg = table.minimal_poly((n - leader) % n);
                assert_eq!(&m_s.reciprocal(), m_neg);
            }
        }
    }

    #[test]
    fn nonreciprocal_split_examples() {
        let s = nonreciprocal_split(7).unwrap();
        assert!(s.self_reciprocal.is_empty());
        assert_eq!(s.pairs, vec![(1, 3)]);

        let s = nonreciprocal_split(15).unwrap();
        assert_eq!(s.self_reciprocal, vec![3, 5]);
        assert_eq!(s.pairs, vec![(1, 7)]);

        let s = nonreciprocal_split(1).unwrap();
        assert!(s.self_reciprocal.is_empty());
        assert!(s.pairs.is_empty());
    }

    #[test]
    fn odd_order_of_two_forces_pairs() {
        // When ord_m(2) is odd, no nontrivial factor is self-reciprocal.
        for m in [7u64, 23, 31, 47, 49] {
            assert_eq!(ord_mod(m, 2).unwrap() % 2, 1);
            let s = nonreciprocal_split(m).unwrap();
            assert!(s.self_reciprocal.is_empty(), "m = {m}");
        }
    }

    #[test]
    fn divisor_enumeration_matches_count() {
        let factors = factor_cycl(14).unwrap();
        let mut seen = Vec::new();
        for_each_divisor(&factors, |d, _| seen.push(d.clone()));
        assert_eq!(seen.len() as u128, divisor_count(&factors));
        // all distinct, all divide x^14 - 1
        let target = BinPoly::xn_minus_one(14);
        let mut sorted = seen.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), seen.len());
        for d in &seen {
            assert!(d.divides(&target));
        }
    }

    #[test]
    fn minimal_poly_orders() {
        // ord(M_ℓ) = n / gcd(n, ℓ) for simple roots
        for n in [7u64, 15, 21] {
            let table = cyclotomic_table(n).unwrap();
            for (leader, m_poly) in table.factors() {
                let expected = n / crate::poly::gcd_u64(n, leader.max(1));
                if leader == 0 {
                    assert_eq!(order(m_poly).unwrap(), 1);
                } else {
                    assert_eq!(order(m_poly).unwrap(), expected, "n={n} leader={leader}");
                }
            }
        }
    }
}
