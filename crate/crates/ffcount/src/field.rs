//! Arithmetic in F_q = F_p\[alpha\]/(f) for odd prime powers q = p^k.
//!
//! The defining polynomial is always the lexicographically smallest monic
//! irreducible of degree k over F_p (coefficients compared constant-term
//! first), so a field built twice is identical.

use crate::error::{Error, Result};
use crate::residue::{inv_mod, mul_mod, Modulus};

/// Largest field order accepted by exhaustive routines.
pub const ENUMERATION_LIMIT: u64 = 1_000_000;

const MAX_DEGREE: usize = 8;

/// Description of F_q = F_p\[alpha\]/(f), q = p^k.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
    k: usize,
    /// Monic degree-k polynomial, constant term first; length k+1.
    irreducible: Vec<u64>,
}

/// An element of F_q as a coefficient vector of length k, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

/// Builds F_{p^k} on the lexicographically smallest monic irreducible of degree k.
pub fn make_field(p: Modulus, k: usize) -> Result<FieldSpec> {
    if !p.is_odd_prime() {
        return Err(Error::InvalidModulus {
            n: p.n(),
            reason: "extension fields require an odd prime characteristic",
        });
    }
    if k < 1 || k > MAX_DEGREE {
        return Err(Error::OutOfRange {
            what: "extension degree k",
            value: k as u64,
            limit: MAX_DEGREE as u64,
        });
    }
    let pp = p.n();
    if checked_pow(pp, k).is_none() {
        return Err(Error::TooLarge {
            size: u64::MAX,
            limit: ENUMERATION_LIMIT,
        });
    }
    // Scan the lower coefficients (c_0, ..., c_{k-1}) in lexicographic order
    // with c_0 most significant, matching constant-term-first comparison.
    let mut lower = vec![0u64; k];
    loop {
        let mut poly = lower.clone();
        poly.push(1);
        if is_irreducible(&poly, pp) {
            return Ok(FieldSpec {
                p: pp,
                k,
                irreducible: poly,
            });
        }
        if !increment_lex(&mut lower, pp) {
            unreachable!("a monic irreducible of every degree exists over F_p");
        }
    }
}

/// Advances (c_0, ..., c_{k-1}) to the next tuple in constant-term-first
/// lexicographic order; false once exhausted.
fn increment_lex(coeffs: &mut [u64], p: u64) -> bool {
    for c in coeffs.iter_mut().rev() {
        *c += 1;
        if *c < p {
            return true;
        }
        *c = 0;
    }
    false
}

fn checked_pow(p: u64, k: usize) -> Option<u64> {
    let mut q = 1u64;
    for _ in 0..k {
        q = q.checked_mul(p)?;
    }
    Some(q)
}

/// True iff the monic polynomial (constant term first) has no monic divisor
/// of degree 1..=deg/2 over F_p.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        let mut divisor = vec![0u64; d + 1];
        divisor[d] = 1;
        loop {
            if poly_rem(poly, &divisor, p).is_empty() {
                return false;
            }
            if !increment_lex(&mut divisor[..d], p) {
                break;
            }
        }
    }
    true
}

/// Remainder of a by the monic b over F_p; empty vector means exact division.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let mut rem: Vec<u64> = a.to_vec();
    while rem.len() > db {
        let lead = rem[rem.len() - 1];
        if lead != 0 {
            let shift = rem.len() - 1 - db;
            for i in 0..db {
                let sub = mul_mod(lead, b[i], p);
                let idx = shift + i;
                rem[idx] = (rem[idx] + p - sub) % p;
            }
        }
        rem.pop();
    }
    while rem.last() == Some(&0) {
        rem.pop();
    }
    rem
}

impl FieldSpec {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    /// q = p^k.
    pub fn order(&self) -> u64 {
        checked_pow(self.p, self.k).expect("order checked at construction")
    }

    /// The defining polynomial, constant term first, length k+1.
    pub fn irreducible(&self) -> &[u64] {
        &self.irreducible
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.k],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.embed(1)
    }

    /// Image of an integer under Z -> F_q (a constant polynomial).
    pub fn embed(&self, v: i64) -> FieldElement {
        let mut coeffs = vec![0u64; self.k];
        coeffs[0] = (v as i128).rem_euclid(self.p as i128) as u64;
        FieldElement { coeffs }
    }

    /// Element from raw coefficients (constant term first), reduced mod p.
    pub fn element(&self, coeffs: &[i64]) -> Result<FieldElement> {
        if coeffs.len() != self.k {
            return Err(Error::SpecMismatch);
        }
        Ok(FieldElement {
            coeffs: coeffs
                .iter()
                .map(|&c| (c as i128).rem_euclid(self.p as i128) as u64)
                .collect(),
        })
    }

    fn check(&self, a: &FieldElement) -> Result<()> {
        if a.coeffs.len() != self.k || a.coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::SpecMismatch);
        }
        Ok(())
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_raw(a, b))
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        Ok(self.neg_raw(a))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_raw(a, b))
    }

    /// Multiplicative inverse via a^(q-2); errors on zero.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.inv_raw(a).ok_or(Error::ZeroInverse)
    }

    /// True iff some b has b^2 = a; zero counts as a square.
    pub fn is_square(&self, a: &FieldElement) -> Result<bool> {
        self.check(a)?;
        Ok(self.quadratic_char_raw(a) >= 0)
    }

    pub fn pow(&self, a: &FieldElement, e: u64) -> Result<FieldElement> {
        self.check(a)?;
        Ok(self.pow_raw(a, e))
    }

    /// All q elements exactly once, in lexicographic coefficient order
    /// (constant term most significant).
    pub fn enumerate(&self) -> Result<Vec<FieldElement>> {
        let q = self.order();
        if q > ENUMERATION_LIMIT {
            return Err(Error::TooLarge {
                size: q,
                limit: ENUMERATION_LIMIT,
            });
        }
        let mut out = Vec::with_capacity(q as usize);
        let mut coeffs = vec![0u64; self.k];
        loop {
            out.push(FieldElement {
                coeffs: coeffs.clone(),
            });
            if !increment_lex(&mut coeffs, self.p) {
                break;
            }
        }
        Ok(out)
    }

    /// Position of an element in enumeration order: sum of c_i * p^(k-1-i).
    pub fn index_of(&self, a: &FieldElement) -> u64 {
        let mut idx = 0u64;
        for &c in &a.coeffs {
            idx = idx * self.p + c;
        }
        idx
    }

    /// Inverse of `index_of`.
    pub fn element_at(&self, mut idx: u64) -> FieldElement {
        let mut coeffs = vec![0u64; self.k];
        for c in coeffs.iter_mut().rev() {
            *c = idx % self.p;
            idx /= self.p;
        }
        FieldElement { coeffs }
    }

    pub(crate) fn add_raw(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| (x + y) % self.p)
                .collect(),
        }
    }

    pub(crate) fn neg_raw(&self, a: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect(),
        }
    }

    pub(crate) fn mul_raw(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        // Schoolbook product, then reduction by the monic defining polynomial.
        let mut prod = vec![0u64; 2 * self.k - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod(x, y, self.p)) % self.p;
            }
        }
        for d in (self.k..prod.len()).rev() {
            let lead = prod[d];
            if lead != 0 {
                prod[d] = 0;
                for i in 0..self.k {
                    let sub = mul_mod(lead, self.irreducible[i], self.p);
                    prod[d - self.k + i] = (prod[d - self.k + i] + self.p - sub) % self.p;
                }
            }
        }
        prod.truncate(self.k);
        FieldElement { coeffs: prod }
    }

    pub(crate) fn pow_raw(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(&acc, &base);
            }
            base = self.mul_raw(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn inv_raw(&self, a: &FieldElement) -> Option<FieldElement> {
        if a.coeffs.iter().all(|&c| c == 0) {
            return None;
        }
        if self.k == 1 {
            return Some(FieldElement {
                coeffs: vec![inv_mod(a.coeffs[0], self.p)?],
            });
        }
        Some(self.pow_raw(a, self.order() - 2))
    }

    /// Quadratic character: 0 on zero, +1 on nonzero squares, -1 otherwise.
    pub(crate) fn quadratic_char_raw(&self, a: &FieldElement) -> i8 {
        if a.coeffs.iter().all(|&c| c == 0) {
            return 0;
        }
        let e = self.pow_raw(a, (self.order() - 1) / 2);
        if e == self.one() {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64, k: usize) -> FieldSpec {
        make_field(Modulus::odd_prime(p).unwrap(), k).unwrap()
    }

    #[test]
    fn make_field_examples() {
        // degree 1: the polynomial alpha itself
        assert_eq!(f(5, 1).irreducible(), &[0, 1]);
        // alpha^2 + 1 has no root mod 3 and is the lex-smallest candidate
        assert_eq!(f(3, 2).irreducible(), &[1, 0, 1]);
        assert!(make_field(Modulus::new(2).unwrap(), 2).is_err());
        assert!(make_field(Modulus::new(9).unwrap(), 2).is_err());
        assert!(make_field(Modulus::odd_prime(3).unwrap(), 9).is_err());
    }

    #[test]
    fn make_field_deterministic() {
        for (p, k) in [(3, 2), (5, 2), (3, 3), (7, 2), (3, 4)] {
            assert_eq!(f(p, k), f(p, k));
        }
    }

    #[test]
    fn make_field_max_degree() {
        // Degree 8 exercises trial division by divisors up to degree 4.
        let spec = f(3, 8);
        assert_eq!(spec.order(), 6561);
        let a = spec.element(&[1, 2, 0, 1, 0, 0, 2, 1]).unwrap();
        let inv = spec.inv(&a).unwrap();
        assert_eq!(spec.mul(&a, &inv).unwrap(), spec.one());
        assert_eq!(spec.pow(&a, 6561).unwrap(), a);
    }

    #[test]
    fn irreducibles_have_no_roots() {
        for (p, k) in [(3, 2), (5, 2), (7, 2), (11, 2), (3, 3), (3, 4), (5, 3)] {
            let spec = f(p, k);
            for x in 0..p {
                let mut acc = 0u64;
                let mut xp = 1u64;
                for &c in spec.irreducible() {
                    acc = (acc + c * xp) % p;
                    xp = (xp * x) % p;
                }
                assert_ne!(acc, 0, "root {x} of defining polynomial over F_{p}");
            }
        }
    }

    #[test]
    fn f9_defining_relation() {
        // In F_9 = F_3[alpha]/(alpha^2+1): alpha * alpha = -1 = 2.
        let f9 = f(3, 2);
        let alpha = f9.element(&[0, 1]).unwrap();
        let two = f9.embed(2);
        assert_eq!(f9.mul(&alpha, &alpha).unwrap(), two);
        // alpha * (-alpha) = 1, so inv(alpha) = 2*alpha
        let inv_alpha = f9.element(&[0, 2]).unwrap();
        assert_eq!(f9.inv(&alpha).unwrap(), inv_alpha);
    }

    #[test]
    fn identities() {
        let f9 = f(3, 2);
        for a in f9.enumerate().unwrap() {
            assert_eq!(f9.add(&a, &f9.zero()).unwrap(), a);
            assert_eq!(f9.mul(&a, &f9.one()).unwrap(), a);
            assert_eq!(f9.add(&a, &f9.neg(&a).unwrap()).unwrap(), f9.zero());
        }
    }

    #[test]
    fn zero_has_no_inverse() {
        let f9 = f(3, 2);
        assert_eq!(f9.inv(&f9.zero()), Err(Error::ZeroInverse));
        assert_eq!(f9.inv(&f9.one()).unwrap(), f9.one());
    }

    #[test]
    fn spec_mismatch_detected() {
        let f9 = f(3, 2);
        let f27 = f(3, 3);
        let a = f27.one();
        assert_eq!(f9.add(&a, &f9.one()), Err(Error::SpecMismatch));
        assert!(f9.element(&[1, 2, 1]).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        for (p, k) in [(3, 2), (5, 2), (3, 3), (7, 2), (3, 4)] {
            let spec = f(p, k);
            for a in spec.enumerate().unwrap() {
                if a == spec.zero() {
                    continue;
                }
                let inv = spec.inv(&a).unwrap();
                assert_eq!(spec.mul(&a, &inv).unwrap(), spec.one());
            }
        }
    }

    #[test]
    fn frobenius_fixes_field() {
        for (p, k) in [(3, 2), (5, 2), (3, 3), (7, 2), (3, 4)] {
            let spec = f(p, k);
            let q = spec.order();
            for a in spec.enumerate().unwrap() {
                assert_eq!(spec.pow(&a, q).unwrap(), a);
            }
        }
    }

    #[test]
    fn square_count() {
        for (p, k) in [(3, 2), (5, 2), (3, 3), (7, 2), (3, 4), (11, 2)] {
            let spec = f(p, k);
            let q = spec.order();
            let nonzero_squares = spec
                .enumerate()
                .unwrap()
                .iter()
                .filter(|a| **a != spec.zero() && spec.is_square(a).unwrap())
                .count() as u64;
            assert_eq!(nonzero_squares, (q - 1) / 2);
        }
    }

    #[test]
    fn is_square_matches_explicit_squaring() {
        // Independent oracle: the set {b^2}.
        let f25 = f(5, 2);
        let all = f25.enumerate().unwrap();
        let squares: std::collections::HashSet<FieldElement> =
            all.iter().map(|b| f25.mul(b, b).unwrap()).collect();
        for a in &all {
            assert_eq!(f25.is_square(a).unwrap(), squares.contains(a));
        }
    }

    #[test]
    fn enumeration_is_complete_and_ordered() {
        for (p, k, q) in [(3usize, 1usize, 3u64), (3, 2, 9), (5, 2, 25)] {
            let spec = f(p as u64, k);
            let elems = spec.enumerate().unwrap();
            assert_eq!(elems.len() as u64, q);
            let distinct: std::collections::HashSet<_> = elems.iter().cloned().collect();
            assert_eq!(distinct.len() as u64, q);
            for (i, e) in elems.iter().enumerate() {
                assert_eq!(spec.index_of(e), i as u64);
                assert_eq!(&spec.element_at(i as u64), e);
            }
        }
    }

    #[test]
    fn degree_one_field_matches_prime_arithmetic() {
        let f5 = f(5, 1);
        for a in 0..5i64 {
            for b in 0..5i64 {
                let x = f5.element(&[a]).unwrap();
                let y = f5.element(&[b]).unwrap();
                assert_eq!(f5.add(&x, &y).unwrap().coeffs(), &[((a + b) % 5) as u64]);
                assert_eq!(f5.mul(&x, &y).unwrap().coeffs(), &[((a * b) % 5) as u64]);
            }
        }
    }
}
