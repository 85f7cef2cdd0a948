//! Exact arithmetic in Z/nZ: powers, inverses, Legendre symbol, factorials,
//! binomials, and power sums over the unit group.
//!
//! Everything here is a pure function of its inputs; values are immutable and
//! safe to share between threads.

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// What is known about the primality of a modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Primality {
    KnownPrime,
    KnownComposite,
    Unchecked,
}

/// A modulus n >= 2 together with its primality status.
///
/// When the status is `KnownPrime`, n has passed deterministic trial
/// division up to sqrt(n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Modulus {
    n: u64,
    primality: Primality,
}

impl Modulus {
    /// A modulus with unchecked primality.
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidModulus {
                n,
                reason: "modulus must be at least 2",
            });
        }
        Ok(Modulus {
            n,
            primality: Primality::Unchecked,
        })
    }

    /// A modulus classified as prime or composite by trial division.
    pub fn classified(n: u64) -> Result<Self> {
        Modulus::new(n)?;
        Ok(Modulus {
            n,
            primality: if is_prime(n) {
                Primality::KnownPrime
            } else {
                Primality::KnownComposite
            },
        })
    }

    /// A modulus that must be an odd prime.
    pub fn odd_prime(p: u64) -> Result<Self> {
        if p < 3 || p % 2 == 0 || !is_prime(p) {
            return Err(Error::InvalidModulus {
                n: p,
                reason: "expected an odd prime",
            });
        }
        Ok(Modulus {
            n: p,
            primality: Primality::KnownPrime,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn primality(&self) -> Primality {
        self.primality
    }

    /// True iff the modulus is known (possibly after classifying now) to be an odd prime.
    pub fn is_odd_prime(&self) -> bool {
        self.n % 2 == 1
            && match self.primality {
                Primality::KnownPrime => true,
                Primality::KnownComposite => false,
                Primality::Unchecked => is_prime(self.n),
            }
    }

    fn require_odd_prime(&self) -> Result<()> {
        if self.is_odd_prime() {
            Ok(())
        } else {
            Err(Error::InvalidModulus {
                n: self.n,
                reason: "expected an odd prime",
            })
        }
    }
}

/// An element of Z/nZ in canonical least non-negative form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

impl Residue {
    /// Reduces `value` into canonical form; negative inputs wrap around.
    pub fn new(value: i64, modulus: Modulus) -> Self {
        let n = modulus.n as i128;
        let v = (value as i128).rem_euclid(n) as u64;
        Residue { value: v, modulus }
    }

    pub fn from_u64(value: u64, modulus: Modulus) -> Self {
        Residue {
            value: value % modulus.n,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// self^exp mod n by binary exponentiation; exp = 0 gives 1 even for base 0.
    pub fn pow(&self, exp: u64) -> Residue {
        Residue {
            value: pow_mod(self.value, exp, self.modulus.n),
            modulus: self.modulus,
        }
    }

    /// The multiplicative inverse, when gcd(value, n) = 1.
    pub fn inv(&self) -> Result<Residue> {
        match inv_mod(self.value, self.modulus.n) {
            Some(v) => Ok(Residue {
                value: v,
                modulus: self.modulus,
            }),
            None => Err(Error::NotInvertible {
                value: self.value,
                modulus: self.modulus.n,
            }),
        }
    }

    /// Legendre symbol of this residue, for an odd prime modulus.
    ///
    /// Computed by the Euler criterion a^((p-1)/2), mapped into {-1, 0, +1}.
    pub fn legendre(&self) -> Result<i32> {
        self.modulus.require_odd_prime()?;
        Ok(legendre_u64(self.value, self.modulus.n))
    }
}

/// (a * b) mod n without overflow.
pub(crate) fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// a^e mod n by square-and-multiply.
pub(crate) fn pow_mod(a: u64, mut e: u64, n: u64) -> u64 {
    let mut base = a % n;
    let mut acc = 1 % n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        e >>= 1;
    }
    acc
}

/// Inverse of a mod n via the extended Euclidean algorithm.
pub(crate) fn inv_mod(a: u64, n: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (n as i128, (a % n) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(n as i128) as u64)
}

/// Legendre symbol via the Euler criterion; caller guarantees p is an odd prime.
pub(crate) fn legendre_u64(a: u64, p: u64) -> i32 {
    let e = pow_mod(a % p, (p - 1) / 2, p);
    if e == 0 {
        0
    } else if e == 1 {
        1
    } else {
        // e == p - 1 for an odd prime p
        -1
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Deterministic trial division up to sqrt(n); desk-scale moduli only.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// All odd primes p with 3 <= p < limit, ascending.
pub fn odd_primes_below(limit: u64) -> Vec<u64> {
    (3..limit).step_by(2).filter(|&n| is_prime(n)).collect()
}

/// k! mod p for 0 <= k <= p-1.
pub fn factorial_mod(k: u64, p: Modulus) -> Result<Residue> {
    if !matches!(p.primality, Primality::KnownPrime) && !is_prime(p.n) {
        return Err(Error::InvalidModulus {
            n: p.n,
            reason: "expected a prime",
        });
    }
    if k >= p.n {
        return Err(Error::OutOfRange {
            what: "factorial argument k",
            value: k,
            limit: p.n - 1,
        });
    }
    let mut acc = 1u64;
    for i in 2..=k {
        acc = mul_mod(acc, i, p.n);
    }
    Ok(Residue::from_u64(acc, p))
}

/// C(m, k) mod p for 0 <= k <= m <= p-1, as a ratio of factorials.
pub fn binom_mod(m: u64, k: u64, p: Modulus) -> Result<Residue> {
    if k > m {
        return Err(Error::OutOfRange {
            what: "binomial index k",
            value: k,
            limit: m,
        });
    }
    if m >= p.n {
        return Err(Error::OutOfRange {
            what: "binomial upper index m",
            value: m,
            limit: p.n - 1,
        });
    }
    let num = factorial_mod(m, p)?;
    let den = mul_mod(
        factorial_mod(k, p)?.value(),
        factorial_mod(m - k, p)?.value(),
        p.n,
    );
    let den_inv = Residue::from_u64(den, p).inv()?;
    Ok(Residue::from_u64(
        mul_mod(num.value(), den_inv.value(), p.n),
        p,
    ))
}

/// Cached factorials 0!, 1!, ..., (p-1)! modulo a prime p.
pub struct FactorialTable {
    p: Modulus,
    fact: Vec<u64>,
}

impl FactorialTable {
    pub fn new(p: Modulus) -> Result<Self> {
        if !is_prime(p.n) {
            return Err(Error::InvalidModulus {
                n: p.n,
                reason: "expected a prime",
            });
        }
        let n = p.n as usize;
        let mut fact = vec![1u64; n];
        for i in 2..n {
            fact[i] = mul_mod(fact[i - 1], i as u64, p.n);
        }
        Ok(FactorialTable { p, fact })
    }

    pub fn modulus(&self) -> Modulus {
        self.p
    }

    /// k! mod p; panics if k >= p.
    pub fn factorial(&self, k: u64) -> u64 {
        self.fact[k as usize]
    }

    /// Inverse of k! mod p.
    pub fn inv_factorial(&self, k: u64) -> u64 {
        pow_mod(self.fact[k as usize], self.p.n - 2, self.p.n)
    }

    /// C(m, k) mod p for 0 <= k <= m <= p-1.
    pub fn binom(&self, m: u64, k: u64) -> u64 {
        debug_assert!(k <= m && m < self.p.n);
        mul_mod(
            self.fact[m as usize],
            mul_mod(self.inv_factorial(k), self.inv_factorial(m - k), self.p.n),
            self.p.n,
        )
    }
}

/// Checks sum_{k=0..m} C(m,k)^2 = C(2m,m) in exact integer arithmetic.
pub fn vandermonde_check(m: u64) -> bool {
    assert!(m <= 1000, "vandermonde_check is limited to m <= 1000");
    // Pascal row for C(m, .) and the middle coefficient of row 2m.
    let row_m = pascal_row(m);
    let row_2m = pascal_row(2 * m);
    let sum: BigUint = row_m.iter().map(|c| c * c).sum();
    sum == row_2m[m as usize]
}

fn pascal_row(n: u64) -> Vec<BigUint> {
    let mut row = vec![BigUint::from(1u32)];
    for k in 0..n {
        // C(n, k+1) = C(n, k) * (n - k) / (k + 1), exact at every step
        let next = (&row[k as usize] * (n - k)) / (k + 1);
        row.push(next);
    }
    row
}

/// sum_{x in F_p*} x^a mod p by direct summation.
///
/// Equals p-1 (canonical form of -1) when (p-1) | a, and 0 otherwise.
pub fn power_sum(a: u64, p: Modulus) -> Result<Residue> {
    if !is_prime(p.n) {
        return Err(Error::InvalidModulus {
            n: p.n,
            reason: "expected a prime",
        });
    }
    let mut acc = 0u64;
    for x in 1..p.n {
        acc = (acc + pow_mod(x, a, p.n)) % p.n;
    }
    Ok(Residue::from_u64(acc, p))
}

/// All units of Z/nZ, ascending.
pub fn units(n: Modulus) -> Vec<Residue> {
    (1..n.n)
        .filter(|&x| gcd(x, n.n) == 1)
        .map(|x| Residue::from_u64(x, n))
        .collect()
}
