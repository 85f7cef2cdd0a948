//! The mod-p congruence machinery behind N(16/t) = N(t) (mod p): the
//! Fermat/power-sum identity for the non-solution count, the closed-form
//! coefficient vector of the mod-p polynomial for N(t), the mirror factorial
//! identity that swaps k with p-1-k, and the combined two-route check.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::counting::{m_table, n_value_formula};
use crate::error::{Error, Result};
use crate::residue::{mul_mod, pow_mod, FactorialTable, Modulus, Residue};
use crate::structure::Zmod;

/// Largest prime accepted by the O(p^2 log p) power-sum evaluation.
pub const POWER_SUM_LIMIT: u64 = 101;

/// The residues c_k (even k in [0, p-1]) with
/// N(t) = -3 + sum_k c_k t^k (mod p),
/// where c_k = C(p-1-k, (p-1-k)/2) / (k! * (((p-1-k)/2)!)^2).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientVector {
    p: u64,
    coeffs: BTreeMap<u64, u64>,
}

impl CoefficientVector {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The even-indexed coefficients, ascending in k.
    pub fn coeffs(&self) -> &BTreeMap<u64, u64> {
        &self.coeffs
    }

    /// Compact JSON of the form {"p":5,"coeffs":{"0":4,"2":1,"4":4}}.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain map serializes")
    }
}

/// Builds the coefficient vector for an odd prime p.
pub fn coefficient_vector(p: Modulus) -> Result<CoefficientVector> {
    require_odd_prime(p)?;
    let table = FactorialTable::new(p)?;
    let pp = p.n();
    let mut coeffs = BTreeMap::new();
    for k in (0..pp).step_by(2) {
        let half = (pp - 1 - k) / 2;
        let c = mul_mod(
            table.binom(pp - 1 - k, half),
            mul_mod(
                table.inv_factorial(k),
                mul_mod(table.inv_factorial(half), table.inv_factorial(half), pp),
                pp,
            ),
            pp,
        );
        coeffs.insert(k, c);
    }
    Ok(CoefficientVector { p: pp, coeffs })
}

/// Evaluates (-3 + sum_k c_k t^k) mod p in canonical form.
pub fn congruence_eval(cv: &CoefficientVector, t: Residue) -> Residue {
    assert_eq!(t.modulus().n(), cv.p, "t must live over the same prime");
    let p = cv.p;
    let tv = t.value();
    let t2 = mul_mod(tv, tv, p);
    let mut acc = p - 3;
    let mut cur_k = 0u64;
    let mut t_pow = 1u64;
    for (&k, &c) in &cv.coeffs {
        while cur_k < k {
            t_pow = mul_mod(t_pow, t2, p);
            cur_k += 2;
        }
        acc = (acc + mul_mod(c, t_pow, p)) % p;
    }
    Residue::from_u64(acc, t.modulus())
}

/// Verifies the non-solution count identity
/// (p-1)^2 - N(t) = sum_{x,y units} (x^2 y + x y^2 + x + y - t x y)^(p-1) (mod p)
/// by direct evaluation of the double sum.
pub fn power_sum_check(p: Modulus, t: Residue) -> Result<bool> {
    require_odd_prime(p)?;
    let pp = p.n();
    if pp > POWER_SUM_LIMIT {
        return Err(Error::TooLarge {
            size: pp,
            limit: POWER_SUM_LIMIT,
        });
    }
    let tv = t.value() % pp;
    let mut sum = 0u64;
    for x in 1..pp {
        for y in 1..pp {
            let xy = mul_mod(x, y, pp);
            let base =
                ((mul_mod(x, xy, pp) + mul_mod(y, xy, pp) + x + y) % pp + pp - mul_mod(tv, xy, pp))
                    % pp;
            sum = (sum + pow_mod(base, pp - 1, pp)) % pp;
        }
    }
    let f = Zmod::odd_prime(pp)?;
    let m = m_table(&f)?;
    let n_t = n_value_formula(&tv, &m);
    let non_solutions = ((pp - 1) * (pp - 1) - n_t) % pp;
    Ok(non_solutions == sum)
}

/// Checks the mirror factorial identity
/// (p-1-k)! * ((k/2)!)^2 * 4^k = (-1)^((p-1)/2) * k! * (((p-1-k)/2)!)^2 (mod p)
/// for an even k in [0, p-1], reusing a cached factorial table.
pub fn mirror_identity_check_with(table: &FactorialTable, k: u64) -> Result<bool> {
    let p = table.modulus().n();
    if k % 2 != 0 || k > p - 1 {
        return Err(Error::OutOfRange {
            what: "even index k",
            value: k,
            limit: p - 1,
        });
    }
    Ok(mirror_lhs(table, k) == mirror_rhs(table, k))
}

/// As [`mirror_identity_check_with`], building the factorial cache on the fly.
pub fn mirror_identity_check(p: Modulus, k: u64) -> Result<bool> {
    require_odd_prime(p)?;
    mirror_identity_check_with(&FactorialTable::new(p)?, k)
}

fn mirror_lhs(table: &FactorialTable, k: u64) -> u64 {
    let p = table.modulus().n();
    let half_k = table.factorial(k / 2);
    mul_mod(
        table.factorial(p - 1 - k),
        mul_mod(mul_mod(half_k, half_k, p), pow_mod(4, k, p), p),
        p,
    )
}

fn mirror_rhs(table: &FactorialTable, k: u64) -> u64 {
    let p = table.modulus().n();
    let sign = if (p - 1) / 2 % 2 == 0 { 1 } else { p - 1 };
    let half = table.factorial((p - 1 - k) / 2);
    mul_mod(
        sign,
        mul_mod(table.factorial(k), mul_mod(half, half, p), p),
        p,
    )
}

/// The induction step of the mirror identity: consecutive even k agree,
/// i.e. L(k+2) * R(k) = L(k) * R(k+2) (mod p).
pub fn mirror_recurrence_step(table: &FactorialTable, k: u64) -> bool {
    let p = table.modulus().n();
    mul_mod(mirror_lhs(table, k + 2), mirror_rhs(table, k), p)
        == mul_mod(mirror_lhs(table, k), mirror_rhs(table, k + 2), p)
}

/// Checks N(16/t) = N(t) (mod p) by both routes: the polynomial evaluated
/// at t and at 16/t, and the counting-module values compared mod p.
pub fn congruence_16_over_t(p: Modulus, t: Residue) -> Result<bool> {
    require_odd_prime(p)?;
    let pp = p.n();
    let tv = t.value() % pp;
    if tv == 0 {
        return Err(Error::ZeroInverse);
    }
    let t_res = Residue::from_u64(tv, p);
    let mirror = Residue::from_u64(mul_mod(16 % pp, t_res.inv()?.value(), pp), p);

    let cv = coefficient_vector(p)?;
    let poly_route = congruence_eval(&cv, t_res) == congruence_eval(&cv, mirror);

    let f = Zmod::odd_prime(pp)?;
    let m = m_table(&f)?;
    let count_route =
        n_value_formula(&t_res.value(), &m) % pp == n_value_formula(&mirror.value(), &m) % pp;

    Ok(poly_route && count_route)
}

fn require_odd_prime(p: Modulus) -> Result<()> {
    if p.is_odd_prime() {
        Ok(())
    } else {
        Err(Error::InvalidModulus {
            n: p.n(),
            reason: "expected an odd prime",
        })
    }
}
