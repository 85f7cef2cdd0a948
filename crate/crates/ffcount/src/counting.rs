//! Counts of solutions of x + 1/x = a (one variable, `M`) and
//! x + 1/x + y + 1/y = t (two variables, `N`) over a [`Structure`],
//! via the quadratic-character formula and via brute-force enumeration,
//! together with the image sets A, A+A, A*A of x + 1/x.
//!
//! The brute-force routines never touch the character formula or any
//! `MTable`; they exist as independent oracles for it.

use crate::error::{Error, Result};
use crate::structure::Structure;

/// Largest structure order accepted by per-element brute force.
pub const BRUTE_FORCE_LIMIT: u64 = 1_000_000;

/// Cap on units^2 for pairwise brute force.
pub const PAIR_LIMIT: u64 = 100_000_000;

/// The map a -> M(a) = #{x unit : x + 1/x = a}, indexed in canonical element order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MTable<S: Structure> {
    structure: S,
    values: Vec<u64>,
}

/// The map t -> N(t) = #{(x, y) units : x + 1/x + y + 1/y = t}, indexed likewise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NTable<S: Structure> {
    structure: S,
    values: Vec<u64>,
}

impl<S: Structure> MTable<S> {
    pub fn structure(&self) -> &S {
        &self.structure
    }

    pub fn get(&self, a: &S::Elem) -> u64 {
        self.values[self.structure.index_of(a)]
    }

    /// Values in canonical element order.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }
}

impl<S: Structure> NTable<S> {
    pub fn structure(&self) -> &S {
        &self.structure
    }

    pub fn get(&self, t: &S::Elem) -> u64 {
        self.values[self.structure.index_of(t)]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }
}

/// The image set A = {x + 1/x : x unit}, its sumset and its product set,
/// each sorted in canonical element order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageSets<S: Structure> {
    pub a: Vec<S::Elem>,
    pub a_plus_a: Vec<S::Elem>,
    pub a_times_a: Vec<S::Elem>,
}

fn check_enumerable<S: Structure>(s: &S) -> Result<()> {
    if s.order() > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            size: s.order(),
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    Ok(())
}

fn check_pairs<S: Structure>(s: &S, unit_count: u64) -> Result<()> {
    let _ = s;
    match unit_count.checked_mul(unit_count) {
        Some(sq) if sq <= PAIR_LIMIT => Ok(()),
        _ => Err(Error::TooLarge {
            size: unit_count,
            limit: PAIR_LIMIT,
        }),
    }
}

/// M(a) by the character formula 1 + chi(a^2 - 4).
///
/// Only valid where a quadratic character exists (odd prime p, or F_q of odd
/// characteristic); composite rings must use [`m_value_bruteforce`].
pub fn m_value<S: Structure>(s: &S, a: &S::Elem) -> Result<u64> {
    let disc = s.sub(&s.mul(a, a), &s.embed(4));
    match s.quadratic_char(&disc) {
        Some(chi) => Ok((1 + chi as i64) as u64),
        None => Err(Error::UnsupportedStructure {
            structure: s.descriptor(),
            reason: "no quadratic character; use the brute-force path",
        }),
    }
}

/// M(a) by direct enumeration of units.
pub fn m_value_bruteforce<S: Structure>(s: &S, a: &S::Elem) -> Result<u64> {
    check_enumerable(s)?;
    let mut count = 0;
    for x in s.units() {
        let w = s.add(&x, &s.inv(&x).expect("unit"));
        if &w == a {
            count += 1;
        }
    }
    Ok(count)
}

/// The full M table: formula path where the character exists, brute force otherwise.
pub fn m_table<S: Structure>(s: &S) -> Result<MTable<S>> {
    check_enumerable(s)?;
    if s.has_char_formula() {
        let values = s
            .elements()
            .iter()
            .map(|a| m_value(s, a))
            .collect::<Result<Vec<u64>>>()?;
        Ok(MTable {
            structure: s.clone(),
            values,
        })
    } else {
        m_table_bruteforce(s)
    }
}

/// The full M table by one pass over the units.
pub fn m_table_bruteforce<S: Structure>(s: &S) -> Result<MTable<S>> {
    check_enumerable(s)?;
    let mut values = vec![0u64; s.order() as usize];
    for x in s.units() {
        let w = s.add(&x, &s.inv(&x).expect("unit"));
        values[s.index_of(&w)] += 1;
    }
    Ok(MTable {
        structure: s.clone(),
        values,
    })
}

/// N(t) as the convolution sum over a of M(a) * M(t - a).
pub fn n_value_formula<S: Structure>(t: &S::Elem, m: &MTable<S>) -> u64 {
    let s = &m.structure;
    s.elements()
        .iter()
        .map(|a| m.get(a) * m.values[s.index_of(&s.sub(t, a))])
        .sum()
}

/// N(t) by the full double loop over unit pairs.
///
/// Deliberately independent of `MTable` and of the quadratic character.
pub fn n_value_bruteforce<S: Structure>(s: &S, t: &S::Elem) -> Result<u64> {
    check_enumerable(s)?;
    let units = s.units();
    check_pairs(s, units.len() as u64)?;
    let w: Vec<S::Elem> = units
        .iter()
        .map(|x| s.add(x, &s.inv(x).expect("unit")))
        .collect();
    let mut count = 0;
    for wx in &w {
        for wy in &w {
            if &s.add(wx, wy) == t {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// The full N table: convolution of the formula-path M table over fields,
/// brute force over rings.
pub fn n_table<S: Structure>(s: &S) -> Result<NTable<S>> {
    check_enumerable(s)?;
    if s.has_char_formula() {
        let m = m_table(s)?;
        Ok(n_table_from_m(&m))
    } else {
        n_table_bruteforce(s)
    }
}

/// Convolution of an (already complete) M table into the N table.
pub fn n_table_from_m<S: Structure>(m: &MTable<S>) -> NTable<S> {
    let s = &m.structure;
    let elems = s.elements();
    let values = elems
        .iter()
        .map(|t| {
            elems
                .iter()
                .map(|a| m.get(a) * m.values[s.index_of(&s.sub(t, a))])
                .sum()
        })
        .collect();
    NTable {
        structure: s.clone(),
        values,
    }
}

/// The full N table by one histogram pass over all unit pairs.
pub fn n_table_bruteforce<S: Structure>(s: &S) -> Result<NTable<S>> {
    check_enumerable(s)?;
    let units = s.units();
    check_pairs(s, units.len() as u64)?;
    let w: Vec<S::Elem> = units
        .iter()
        .map(|x| s.add(x, &s.inv(x).expect("unit")))
        .collect();
    let mut values = vec![0u64; s.order() as usize];
    for wx in &w {
        for wy in &w {
            values[s.index_of(&s.add(wx, wy))] += 1;
        }
    }
    Ok(NTable {
        structure: s.clone(),
        values,
    })
}

/// A = {x + 1/x}, with A+A and A*A formed pointwise.
pub fn image_sets<S: Structure>(s: &S) -> Result<ImageSets<S>> {
    check_enumerable(s)?;
    let units = s.units();
    let mut in_a = vec![false; s.order() as usize];
    for x in &units {
        let w = s.add(x, &s.inv(x).expect("unit"));
        in_a[s.index_of(&w)] = true;
    }
    let elems = s.elements();
    let a: Vec<S::Elem> = elems
        .iter()
        .filter(|e| in_a[s.index_of(e)])
        .cloned()
        .collect();
    check_pairs(s, a.len() as u64)?;

    let mut in_sum = vec![false; s.order() as usize];
    let mut in_prod = vec![false; s.order() as usize];
    for x in &a {
        for y in &a {
            in_sum[s.index_of(&s.add(x, y))] = true;
            in_prod[s.index_of(&s.mul(x, y))] = true;
        }
    }
    let collect = |mask: &[bool]| -> Vec<S::Elem> {
        elems
            .iter()
            .filter(|e| mask[s.index_of(e)])
            .cloned()
            .collect()
    };
    Ok(ImageSets {
        a,
        a_plus_a: collect(&in_sum),
        a_times_a: collect(&in_prod),
    })
}
