//! Solution counts of x + 1/x + y + 1/y = t over finite fields and residue
//! rings, and exhaustive verification of the identities those counts satisfy.
//!
//! The library is organized around the one-variable count M(a) (solutions of
//! x + 1/x = a) and the two-variable count N(t). Over a field of odd
//! characteristic, M is given by a quadratic-character formula and N by a
//! convolution of M with itself; brute-force enumeration provides an
//! independent oracle for both. On top of the counts sit:
//!
//! - [`congruence`]: the mod-p polynomial for N(t), its closed-form
//!   coefficients, the power-sum identity for the non-solution count, and the
//!   mirror factorial identity, which combine into N(16/t) = N(t) (mod p);
//! - [`verify`]: exhaustive per-prime checks (upper bound, parity, the exact
//!   16/t symmetry), a replay of the argument that upgrades the congruence to
//!   equality, and searches for all profile-preserving transformations of t;
//! - [`field`]: extension fields F_q = F_p\[alpha\]/(f) of odd characteristic,
//!   built deterministically, so every check can be repeated over F_q;
//! - [`structure`]: the common interface over F_p, F_q, and Z/nZ that the
//!   counting routines are generic in.
//!
//! All values are immutable and all functions are pure; everything can be
//! shared freely across threads.

pub mod congruence;
pub mod counting;
pub mod error;
pub mod field;
pub mod residue;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use field::{make_field, FieldElement, FieldSpec};
pub use residue::{Modulus, Primality, Residue};
pub use structure::{Structure, Zmod};
