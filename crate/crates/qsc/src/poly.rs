//! Exact arithmetic in GF(2)[x].
//!
//! [`BinPoly`] is the universal currency of the crate: generator polynomials,
//! minimal polynomials, quotients and duals are all values of this type.
//! Coefficients are stored as a little-endian bit vector packed into `u64`
//! limbs; index 0 is the constant term. The canonical form never keeps a
//! trailing zero limb, so the zero polynomial is the empty limb vector and is
//! distinct from the constant 1.
//!
//! Two text forms round-trip bit-exactly:
//!
//! - sparse notation `x^3+x+1` (descending exponents, `+`-separated, constant
//!   term `1`, degree-one term `x`),
//! - compact hex of the coefficient bits, least-significant digit first in
//!   value (so `x^3+x+1` ↔ `b`).

use crate::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

/// A polynomial over GF(2), kept in canonical (trimmed) form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinPoly {
    limbs: Vec<u64>,
}

impl BinPoly {
    pub fn zero() -> Self {
        BinPoly { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        BinPoly { limbs: vec![1] }
    }

    /// The monomial x^k.
    pub fn monomial(k: usize) -> Self {
        let mut p = BinPoly::zero();
        p.set_coeff(k);
        p
    }

    /// x^n + 1, i.e. x^n − 1 over GF(2).
    pub fn xn_minus_one(n: usize) -> Self {
        let mut p = BinPoly::monomial(n);
        p.set_coeff(0);
        p
    }

    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = BinPoly::zero();
        for e in exps {
            p.set_coeff(e);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs.len() == 1 && self.limbs[0] == 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + (63 - last.leading_zeros() as usize))
    }

    pub fn coeff(&self, i: usize) -> bool {
        match self.limbs.get(i / 64) {
            Some(w) => (w >> (i % 64)) & 1 == 1,
            None => false,
        }
    }

    fn set_coeff(&mut self, i: usize) {
        let w = i / 64;
        if self.limbs.len() <= w {
            self.limbs.resize(w + 1, 0);
        }
        self.limbs[w] |= 1u64 << (i % 64);
    }

    fn trim(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> u32 {
        self.limbs.iter().map(|w| w.count_ones()).sum()
    }

    /// Exponents of the nonzero coefficients, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (i, &w) in self.limbs.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                out.push(i * 64 + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    /// Coefficientwise XOR.
    pub fn add(&self, other: &BinPoly) -> BinPoly {
        let (long, short) = if self.limbs.len() >= other.limbs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut limbs = long.limbs.clone();
        for (i, w) in short.limbs.iter().enumerate() {
            limbs[i] ^= w;
        }
        let mut p = BinPoly { limbs };
        p.trim();
        p
    }

    /// self ^= other << shift, without trimming assumptions on capacity.
    fn xor_shifted(&mut self, other: &BinPoly, shift: usize) {
        let ws = shift / 64;
        let bs = shift % 64;
        let need = other.limbs.len() + ws + 1;
        if self.limbs.len() < need {
            self.limbs.resize(need, 0);
        }
        if bs == 0 {
            for (i, &w) in other.limbs.iter().enumerate() {
                self.limbs[i + ws] ^= w;
            }
        } else {
            for (i, &w) in other.limbs.iter().enumerate() {
                self.limbs[i + ws] ^= w << bs;
                self.limbs[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        self.trim();
    }

    /// self · x^k.
    pub fn shift_left(&self, k: usize) -> BinPoly {
        if self.is_zero() {
            return BinPoly::zero();
        }
        let mut p = BinPoly::zero();
        p.xor_shifted(self, k);
        p
    }

    pub fn mul(&self, other: &BinPoly) -> BinPoly {
        if self.is_zero() || other.is_zero() {
            return BinPoly::zero();
        }
        // Iterate over the set bits of the sparser operand.
        let (walk, base) = if self.weight() <= other.weight() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = BinPoly::zero();
        for e in walk.exponents() {
            acc.xor_shifted(base, e);
        }
        acc
    }

    pub fn square(&self) -> BinPoly {
        // Frobenius: coefficient at i maps to 2i.
        let mut p = BinPoly::zero();
        for e in self.exponents() {
            p.set_coeff(2 * e);
        }
        p
    }

    pub fn pow(&self, mut e: u32) -> BinPoly {
        let mut base = self.clone();
        let mut acc = BinPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square_or_mul();
            }
        }
        acc
    }

    fn square_or_mul(&self) -> BinPoly {
        self.square()
    }

    /// Quotient and remainder with `deg r < deg d`.
    pub fn divmod(&self, d: &BinPoly) -> Result<(BinPoly, BinPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let mut r = self.clone();
        let mut q = BinPoly::zero();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            q.set_coeff(shift);
            r.xor_shifted(d, shift);
        }
        Ok((q, r))
    }

    pub fn rem(&self, d: &BinPoly) -> Result<BinPoly> {
        Ok(self.divmod(d)?.1)
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn div_exact(&self, d: &BinPoly) -> Result<BinPoly> {
        let (q, r) = self.divmod(d)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision {
                num: self.to_string(),
                den: d.to_string(),
            });
        }
        Ok(q)
    }

    pub fn divides(&self, other: &BinPoly) -> bool {
        match other.divmod(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false, // zero divisor: only divides zero, handled below
        }
    }

    pub fn gcd(&self, other: &BinPoly) -> Result<BinPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    pub fn lcm(&self, other: &BinPoly) -> Result<BinPoly> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::LcmOfZero);
        }
        let g = self.gcd(other)?;
        Ok(self.div_exact(&g)?.mul(other))
    }

    /// Reciprocal polynomial x^{deg f}·f(1/x): the coefficient sequence
    /// reversed over [0, deg f]. Zero maps to zero.
    pub fn reciprocal(&self) -> BinPoly {
        match self.degree() {
            None => BinPoly::zero(),
            Some(d) => {
                let mut p = BinPoly::zero();
                for e in self.exponents() {
                    p.set_coeff(d - e);
                }
                p
            }
        }
    }

    /// Formal derivative; over GF(2) only odd-exponent terms survive.
    pub fn derivative(&self) -> BinPoly {
        let mut p = BinPoly::zero();
        for e in self.exponents() {
            if e % 2 == 1 {
                p.set_coeff(e - 1);
            }
        }
        p
    }

    /// Square root of a perfect square (all exponents even), else `None`.
    pub fn sqrt(&self) -> Option<BinPoly> {
        let mut p = BinPoly::zero();
        for e in self.exponents() {
            if e % 2 != 0 {
                return None;
            }
            p.set_coeff(e / 2);
        }
        Some(p)
    }

    /// Splits f = x^h · g with g(0) ≠ 0; returns (h, g). Zero stays zero.
    pub fn strip_x_factor(&self) -> (usize, BinPoly) {
        if self.is_zero() {
            return (0, BinPoly::zero());
        }
        let h = self.exponents()[0];
        if h == 0 {
            return (0, self.clone());
        }
        let mut limbs = vec![0u64; self.limbs.len()];
        for e in self.exponents() {
            let i = e - h;
            limbs[i / 64] |= 1u64 << (i % 64);
        }
        let mut g = BinPoly { limbs };
        g.trim();
        (h, g)
    }

    /// self · x mod m, for self already reduced mod m. The workhorse of the
    /// brute-force order oracle.
    fn mul_x_mod_inplace(&mut self, m: &BinPoly, m_deg: usize) {
        // shift left by one bit
        let mut carry = 0u64;
        for w in self.limbs.iter_mut() {
            let new_carry = *w >> 63;
            *w = (*w << 1) | carry;
            carry = new_carry;
        }
        if carry != 0 {
            self.limbs.push(carry);
        }
        self.trim();
        if self.degree() == Some(m_deg) {
            *self = self.add(m);
        }
    }

    pub fn powmod(&self, mut e: u64, m: &BinPoly) -> Result<BinPoly> {
        let mut base = self.rem(m)?;
        let mut acc = BinPoly::one().rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.square().rem(m)?;
            }
        }
        Ok(acc)
    }

    /// powmod with a multi-limb exponent (little-endian limbs).
    pub fn powmod_limbs(&self, exp: &[u64], m: &BinPoly) -> Result<BinPoly> {
        let mut acc = BinPoly::one().rem(m)?;
        let mut started = false;
        for &limb in exp.iter().rev() {
            for bit in (0..64).rev() {
                if started {
                    acc = acc.square().rem(m)?;
                }
                if (limb >> bit) & 1 == 1 {
                    acc = acc.mul(self).rem(m)?;
                    started = true;
                } else if !started {
                    continue;
                }
            }
        }
        if !started {
            // exponent is zero
            return BinPoly::one().rem(m);
        }
        Ok(acc)
    }

    /// Compact hex form, lowercase, most significant digit first.
    pub fn to_hex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        let mut first = true;
        for &w in self.limbs.iter().rev() {
            if first {
                s.push_str(&format!("{w:x}"));
                first = false;
            } else {
                s.push_str(&format!("{w:016x}"));
            }
        }
        s
    }

    pub fn from_hex(s: &str) -> Result<BinPoly> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::Parse {
                input: s.to_string(),
                reason: "empty hex literal",
            });
        }
        let mut p = BinPoly::zero();
        for (i, c) in t.bytes().rev().enumerate() {
            let v = match c {
                b'0'..=b'9' => c - b'0',
                b'a'..=b'f' => c - b'a' + 10,
                b'A'..=b'F' => c - b'A' + 10,
                _ => {
                    return Err(Error::Parse {
                        input: s.to_string(),
                        reason: "invalid hex digit",
                    })
                }
            };
            for bit in 0..4 {
                if (v >> bit) & 1 == 1 {
                    p.set_coeff(i * 4 + bit);
                }
            }
        }
        Ok(p)
    }

    pub fn parse_text(s: &str) -> Result<BinPoly> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse {
                input: s.to_string(),
                reason: "empty polynomial literal",
            });
        }
        if t == "0" {
            return Ok(BinPoly::zero());
        }
        let mut p = BinPoly::zero();
        for term in t.split('+') {
            let e = if term == "1" {
                0
            } else if term == "x" {
                1
            } else if let Some(rest) = term.strip_prefix("x^") {
                rest.parse::<usize>().map_err(|_| Error::Parse {
                    input: s.to_string(),
                    reason: "invalid exponent",
                })?
            } else {
                return Err(Error::Parse {
                    input: s.to_string(),
                    reason: "term must be 1, x, or x^k",
                });
            };
            if p.coeff(e) {
                return Err(Error::Parse {
                    input: s.to_string(),
                    reason: "repeated exponent",
                });
            }
            p.set_coeff(e);
        }
        Ok(p)
    }

    /// Lenient parse: sparse text when the literal mentions `x` or `+`
    /// (or is exactly `0`/`1`), hex otherwise.
    pub fn parse(s: &str) -> Result<BinPoly> {
        let t = s.trim();
        if t == "0" || t == "1" || t.contains('x') || t.contains('+') {
            BinPoly::parse_text(t)
        } else {
            BinPoly::from_hex(t)
        }
    }

    /// Numeric comparison of the coefficient bit strings (used for
    /// deterministic ordering of enumerations).
    pub fn cmp_value(&self, other: &BinPoly) -> std::cmp::Ordering {
        self.limbs
            .len()
            .cmp(&other.limbs.len())
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl PartialOrd for BinPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BinPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.cmp_value(other)
    }
}

impl fmt::Display for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for e in self.exponents().into_iter().rev() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match e {
                0 => write!(f, "1")?,
                1 => write!(f, "x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for BinPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<BinPoly> {
        BinPoly::parse(s)
    }
}

// ---------------------------------------------------------------------------
// Order of a polynomial
// ---------------------------------------------------------------------------

/// Default cap for the brute-force order oracle.
pub const ORDER_ORACLE_CAP: u64 = 1 << 16;

/// Brute-force order oracle: the smallest e = 1, 2, … with f | x^e − 1,
/// after stripping any x^h factor. Errors past `cap`.
pub fn order_bruteforce(f: &BinPoly, cap: u64) -> Result<u64> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (_, g) = f.strip_x_factor();
    let g_deg = match g.degree() {
        Some(0) => return Ok(1),
        Some(d) => d,
        None => unreachable!(),
    };
    // Maintain r = x^e mod g incrementally.
    let mut r = BinPoly::one();
    for e in 1..=cap {
        r.mul_x_mod_inplace(&g, g_deg);
        if r.is_one() {
            return Ok(e);
        }
    }
    Err(Error::OrderCapExceeded { cap })
}

/// Order of f: the smallest e ≥ 1 with f | x^e − 1 (x-factors stripped
/// first). Computed by factoring f into squarefree parts split by factor
/// degree: if p is irreducible of degree d then ord(p) divides 2^d − 1 and is
/// found by testing divisors, and ord(p^t) = ord(p) · 2^s with 2^s the least
/// power of two ≥ t; the overall order is the lcm.
pub fn order(f: &BinPoly) -> Result<u64> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (_, g) = f.strip_x_factor();
    if g.degree() == Some(0) {
        return Ok(1);
    }
    let mut result: u64 = 1;
    for (u, mult) in squarefree_decomposition(&g)? {
        let mut ord_u: u64 = 1;
        for (s, d) in distinct_degree_split(&u)? {
            ord_u = lcm_u64(ord_u, order_of_same_degree_part(&s, d)?)?;
        }
        let doubling = next_power_of_two(mult);
        let contrib = ord_u
            .checked_mul(doubling as u64)
            .ok_or(Error::OrderOverflow)?;
        result = lcm_u64(result, contrib)?;
    }
    Ok(result)
}

/// The same combining rule applied to an explicit irreducible factorization
/// f = ∏ pᵢ^{eᵢ}. Factors must be irreducible and pairwise distinct.
pub fn order_from_irreducible_factors(factors: &[(BinPoly, u32)]) -> Result<u64> {
    let mut result: u64 = 1;
    for (p, e) in factors {
        if *e == 0 {
            continue;
        }
        let ord_p = irreducible_order(p)?;
        let contrib = ord_p
            .checked_mul(next_power_of_two(*e) as u64)
            .ok_or(Error::OrderOverflow)?;
        result = lcm_u64(result, contrib)?;
    }
    Ok(result)
}

/// Order of an irreducible polynomial, memoized.
fn irreducible_order(p: &BinPoly) -> Result<u64> {
    static CACHE: OnceLock<Mutex<HashMap<BinPoly, u64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&o) = cache.lock().unwrap().get(p) {
        return Ok(o);
    }
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Ok(1);
    }
    let o = order_of_same_degree_part(p, d)?;
    cache.lock().unwrap().insert(p.clone(), o);
    Ok(o)
}

/// Order of a squarefree product of irreducibles that all have degree d:
/// divides 2^d − 1, found by testing divisors in ascending order.
fn order_of_same_degree_part(s: &BinPoly, d: usize) -> Result<u64> {
    if d > 63 {
        return Err(Error::OrderDegreeTooLarge { degree: d });
    }
    let x = BinPoly::monomial(1);
    for e in divisors_of_mersenne(d as u32) {
        if x.powmod(e, s)?.is_one() {
            return Ok(e);
        }
    }
    Err(Error::Internal("order must divide 2^d - 1"))
}

fn next_power_of_two(t: u32) -> u32 {
    t.next_power_of_two()
}

fn lcm_u64(a: u64, b: u64) -> Result<u64> {
    let g = gcd_u64(a, b);
    let v = (a as u128 / g as u128) * b as u128;
    u64::try_from(v).map_err(|_| Error::OrderOverflow)
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Sorted divisors of 2^d − 1, memoized per degree.
fn divisors_of_mersenne(d: u32) -> Vec<u64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<u64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&d) {
        return v.clone();
    }
    let m = (1u64 << d) - 1;
    let mut divs = divisors_u64(m);
    divs.sort_unstable();
    cache.lock().unwrap().insert(d, divs.clone());
    divs
}

pub(crate) fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    let mut e = 0;
    while n % 2 == 0 {
        n /= 2;
        e += 1;
    }
    push(2, e);
    let mut p = 3u64;
    while (p as u128) * (p as u128) <= n as u128 {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        push(p, e);
        p += 2;
    }
    if n > 1 {
        push(n, 1);
    }
    out
}

pub(crate) fn divisors_u64(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factor_u64(n) {
        let prev = divs.clone();
        let mut pe = 1u64;
        for _ in 0..e {
            pe *= p;
            for d in &prev {
                divs.push(d * pe);
            }
        }
    }
    divs
}

// ---------------------------------------------------------------------------
// Factorization helpers used by order(): squarefree + distinct-degree splits.
// ---------------------------------------------------------------------------

/// f = ∏ uᵢ^{mᵢ} with the uᵢ squarefree, pairwise coprime, and mᵢ distinct.
/// Requires f(0) ≠ 0 and f nonzero.
pub fn squarefree_decomposition(f: &BinPoly) -> Result<Vec<(BinPoly, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    sqf_rec(f.clone(), 1, &mut out)?;
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp_value(&b.0)));
    Ok(out)
}

fn sqf_rec(f: BinPoly, mult: u32, out: &mut Vec<(BinPoly, u32)>) -> Result<()> {
    if f.degree() == Some(0) {
        return Ok(());
    }
    let d = f.derivative();
    if d.is_zero() {
        // f is a perfect square in characteristic 2
        let g = f.sqrt().ok_or(Error::Internal("derivative zero but not a square"))?;
        return sqf_rec(g, mult * 2, out);
    }
    let mut c = f.gcd(&d)?;
    let mut w = f.div_exact(&c)?;
    let mut i = 1u32;
    while w.degree() != Some(0) {
        let y = w.gcd(&c)?;
        let z = w.div_exact(&y)?;
        if z.degree() != Some(0) {
            out.push((z, i * mult));
        }
        w = y;
        c = c.div_exact(&w)?;
        i += 1;
    }
    if c.degree() != Some(0) {
        let g = c.sqrt().ok_or(Error::Internal("leftover must be a square"))?;
        sqf_rec(g, mult * 2, out)?;
    }
    Ok(())
}

/// Splits a squarefree u with u(0) ≠ 0 into parts (s_d, d), where s_d is the
/// product of the irreducible factors of degree exactly d.
pub fn distinct_degree_split(u: &BinPoly) -> Result<Vec<(BinPoly, usize)>> {
    let mut out = Vec::new();
    let mut v = u.clone();
    let x = BinPoly::monomial(1);
    let mut h = x.rem(&v)?;
    let mut d = 0usize;
    while v.degree().unwrap_or(0) > 0 {
        d += 1;
        if 2 * d > v.degree().unwrap() {
            let deg = v.degree().unwrap();
            out.push((v, deg));
            break;
        }
        h = h.square().rem(&v)?;
        let g = h.add(&x).gcd(&v)?;
        if g.degree() != Some(0) {
            v = v.div_exact(&g)?;
            h = h.rem(&v)?;
            out.push((g, d));
        }
    }
    Ok(out)
}
