//! A common interface over the structures the equation is counted on:
//! prime fields F_p, extension fields F_q, and residue rings Z/nZ.

use crate::error::Result;
use crate::field::{FieldElement, FieldSpec};
use crate::residue::{gcd, inv_mod, legendre_u64, Modulus, Primality};

/// A finite commutative ring with identity that tables can be built over.
///
/// `elements()` returns every element exactly once in ascending canonical
/// order, and `index_of` is its inverse; tables are stored in that order.
pub trait Structure: Clone {
    type Elem: Clone + Eq + Ord + std::hash::Hash + std::fmt::Debug;

    /// Number of elements.
    fn order(&self) -> u64;

    /// Human-readable description, e.g. `p=13`, `n=12`, `q=9 (p=3, k=2)`.
    fn descriptor(&self) -> String;

    /// Filename-safe short form of the descriptor, e.g. `p13`, `q9_p3_k2`.
    fn slug(&self) -> String;

    /// All elements in ascending canonical order.
    fn elements(&self) -> Vec<Self::Elem>;

    /// Position of an element in `elements()` order.
    fn index_of(&self, a: &Self::Elem) -> usize;

    /// Canonical decimal encoding of an element (its index).
    fn code_of(&self, a: &Self::Elem) -> u64 {
        self.index_of(a) as u64
    }

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    /// Image of an integer under Z -> structure.
    fn embed(&self, v: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// Multiplicative inverse, None for non-units.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.inv(a).is_some()
    }

    /// All units in ascending canonical order.
    fn units(&self) -> Vec<Self::Elem> {
        self.elements()
            .into_iter()
            .filter(|a| self.is_unit(a))
            .collect()
    }

    /// Quadratic character in {-1, 0, +1}, or None when the structure has
    /// no such character (composite or even modulus).
    fn quadratic_char(&self, a: &Self::Elem) -> Option<i8>;

    /// True when the character-based counting formula applies.
    fn has_char_formula(&self) -> bool {
        self.quadratic_char(&self.zero()).is_some()
    }
}

/// The ring Z/nZ; a field exactly when n is an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Zmod {
    modulus: Modulus,
}

impl Zmod {
    /// Z/nZ with the primality of n classified up front.
    pub fn new(n: u64) -> Result<Self> {
        Ok(Zmod {
            modulus: Modulus::classified(n)?,
        })
    }

    /// F_p for an odd prime p.
    pub fn odd_prime(p: u64) -> Result<Self> {
        Ok(Zmod {
            modulus: Modulus::odd_prime(p)?,
        })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn n(&self) -> u64 {
        self.modulus.n()
    }

    pub fn is_odd_prime_field(&self) -> bool {
        self.n() % 2 == 1 && self.modulus.primality() == Primality::KnownPrime
    }
}

impl Structure for Zmod {
    type Elem = u64;

    fn order(&self) -> u64 {
        self.n()
    }

    fn descriptor(&self) -> String {
        if self.is_odd_prime_field() {
            format!("p={}", self.n())
        } else {
            format!("n={}", self.n())
        }
    }

    fn slug(&self) -> String {
        if self.is_odd_prime_field() {
            format!("p{}", self.n())
        } else {
            format!("n{}", self.n())
        }
    }

    fn elements(&self) -> Vec<u64> {
        (0..self.n()).collect()
    }

    fn index_of(&self, a: &u64) -> usize {
        debug_assert!(*a < self.n());
        *a as usize
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.n()
    }

    fn embed(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.n() as i128) as u64
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.n()
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.n() - a % self.n()) % self.n()
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.n() as u128) as u64
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        inv_mod(*a, self.n())
    }

    fn is_unit(&self, a: &u64) -> bool {
        gcd(*a, self.n()) == 1
    }

    fn quadratic_char(&self, a: &u64) -> Option<i8> {
        if self.is_odd_prime_field() {
            Some(legendre_u64(*a, self.n()) as i8)
        } else {
            None
        }
    }
}

impl Structure for FieldSpec {
    type Elem = FieldElement;

    fn order(&self) -> u64 {
        FieldSpec::order(self)
    }

    fn descriptor(&self) -> String {
        format!("q={} (p={}, k={})", self.order(), self.p(), self.degree())
    }

    fn slug(&self) -> String {
        format!("q{}_p{}_k{}", self.order(), self.p(), self.degree())
    }

    fn elements(&self) -> Vec<FieldElement> {
        self.enumerate().expect("field order within enumeration cap")
    }

    fn index_of(&self, a: &FieldElement) -> usize {
        FieldSpec::index_of(self, a) as usize
    }

    fn zero(&self) -> FieldElement {
        FieldSpec::zero(self)
    }

    fn one(&self) -> FieldElement {
        FieldSpec::one(self)
    }

    fn embed(&self, v: i64) -> FieldElement {
        FieldSpec::embed(self, v)
    }

    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add_raw(a, b)
    }

    fn neg(&self, a: &FieldElement) -> FieldElement {
        self.neg_raw(a)
    }

    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.mul_raw(a, b)
    }

    fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        self.inv_raw(a)
    }

    fn is_unit(&self, a: &FieldElement) -> bool {
        *a != FieldSpec::zero(self)
    }

    fn quadratic_char(&self, a: &FieldElement) -> Option<i8> {
        Some(self.quadratic_char_raw(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn zmod_descriptor_depends_on_primality() {
        assert_eq!(Zmod::new(13).unwrap().descriptor(), "p=13");
        assert_eq!(Zmod::new(12).unwrap().descriptor(), "n=12");
        assert_eq!(Zmod::new(2).unwrap().descriptor(), "n=2");
        assert_eq!(Zmod::new(13).unwrap().slug(), "p13");
    }

    #[test]
    fn zmod_ring_ops() {
        let z = Zmod::new(9).unwrap();
        assert_eq!(z.add(&7, &5), 3);
        assert_eq!(z.neg(&4), 5);
        assert_eq!(z.mul(&4, &7), 1);
        assert_eq!(z.inv(&4), Some(7));
        assert_eq!(z.inv(&3), None);
        assert_eq!(z.embed(-1), 8);
        assert_eq!(z.units(), vec![1, 2, 4, 5, 7, 8]);
        assert!(z.quadratic_char(&2).is_none());
    }

    #[test]
    fn zmod_char_on_prime_field() {
        let f = Zmod::odd_prime(5).unwrap();
        assert_eq!(f.quadratic_char(&0), Some(0));
        assert_eq!(f.quadratic_char(&4), Some(1));
        assert_eq!(f.quadratic_char(&2), Some(-1));
        assert!(f.has_char_formula());
    }

    #[test]
    fn field_structure_roundtrip() {
        let f9 = make_field(Modulus::odd_prime(3).unwrap(), 2).unwrap();
        let elems = Structure::elements(&f9);
        assert_eq!(elems.len(), 9);
        for (i, e) in elems.iter().enumerate() {
            assert_eq!(Structure::index_of(&f9, e), i);
        }
        assert_eq!(f9.descriptor(), "q=9 (p=3, k=2)");
        assert_eq!(f9.slug(), "q9_p3_k2");
        assert!(f9.has_char_formula());
    }
}
