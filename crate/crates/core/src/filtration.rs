//! The m-adic filtration of `k[[H]]`.
//!
//! `m^n` is spanned by the monomials `t^s` where `s` is a sum of at least `n`
//! minimal generators, so `t^s ∈ m^n` iff `maxlen(s) ≥ n`, where `maxlen(s)`
//! is the largest number of summands in a factorization of `s` over the
//! minimal generators. Everything here is driven by that one table.

use alloc::vec::Vec;

use crate::ideal::{IdealError, ZIdeal};
use crate::semigroup::NumericalSemigroup;

const NOT_IN_H: u32 = u32::MAX;

/// Memoized maximal factorization lengths on `[0, window]`.
///
/// The table grows on demand; lookups past the current window extend it.
#[derive(Debug, Clone)]
pub struct FactorizationTable {
    parent: NumericalSemigroup,
    lengths: Vec<u32>,
}

impl FactorizationTable {
    pub fn new(parent: &NumericalSemigroup, window: i64) -> Self {
        let mut table = FactorizationTable {
            parent: parent.clone(),
            lengths: alloc::vec![0],
        };
        table.extend_to(window);
        table
    }

    pub fn parent(&self) -> &NumericalSemigroup {
        &self.parent
    }

    pub fn window(&self) -> i64 {
        self.lengths.len() as i64 - 1
    }

    pub fn extend_to(&mut self, window: i64) {
        let gens = self.parent.minimal_generators();
        for s in self.lengths.len() as i64..=window {
            let best = gens
                .iter()
                .filter(|&&g| g <= s)
                .map(|&g| self.lengths[(s - g) as usize])
                .filter(|&l| l != NOT_IN_H)
                .max();
            self.lengths.push(best.map_or(NOT_IN_H, |l| l + 1));
        }
    }

    /// `maxlen(s)`, or `None` when `s ∉ H`.
    pub fn maxlen(&mut self, s: i64) -> Option<u32> {
        if s < 0 {
            return None;
        }
        self.extend_to(s);
        match self.lengths[s as usize] {
            NOT_IN_H => None,
            l => Some(l),
        }
    }

    /// `m^n` as a value set.
    pub fn power_of_m(&mut self, n: u32) -> ZIdeal {
        let parent = self.parent.clone();
        if n == 0 {
            return ZIdeal::ring(&parent);
        }
        // s ≥ c + n·e forces n copies of e on top of an element of H.
        let end = parent.conductor_number() + n as i64 * parent.multiplicity();
        self.extend_to(end);
        ZIdeal::from_window(
            &parent,
            0,
            end,
            |s| matches!(self.maxlen(s), Some(l) if l >= n),
        )
    }

    /// `ord(I) = max{n : I ⊆ m^n}` for `I ⊆ R`.
    pub fn ord_of_ideal(&mut self, ideal: &ZIdeal) -> Result<u32, IdealError> {
        if ideal.parent() != &self.parent {
            return Err(IdealError::ParentMismatch);
        }
        if !ideal.is_contained_in_ring() {
            return Err(IdealError::NotContained);
        }
        Ok(ideal
            .minimal_generators()
            .into_iter()
            .map(|g| self.maxlen(g).expect("generator of an ideal inside H"))
            .min()
            .unwrap())
    }

    /// `ℓ(R/m^n) = #{s ∈ H : maxlen(s) < n}`.
    pub fn hilbert_colength(&mut self, n: u32) -> usize {
        let parent = self.parent.clone();
        let end = parent.conductor_number() + n as i64 * parent.multiplicity();
        (0..end)
            .filter(|&s| matches!(self.maxlen(s), Some(l) if l < n))
            .count()
    }

    /// `μ(m^n)`, the minimal number of generators of `m^n`.
    pub fn mu_of_power(&mut self, n: u32) -> usize {
        self.power_of_m(n).minimal_generators().len()
    }
}

/// `maxlen(s)` over the minimal generators of `H`; `None` iff `s ∉ H`.
pub fn maxlen(parent: &NumericalSemigroup, s: i64) -> Option<u32> {
    if !parent.contains(s) {
        return None;
    }
    FactorizationTable::new(parent, s).maxlen(s)
}

pub fn power_of_m(parent: &NumericalSemigroup, n: u32) -> ZIdeal {
    FactorizationTable::new(parent, 0).power_of_m(n)
}

/// m-adic order of an ideal contained in `H`. The whole ring has order 0.
pub fn ord_of_ideal(ideal: &ZIdeal) -> Result<u32, IdealError> {
    FactorizationTable::new(ideal.parent(), 0).ord_of_ideal(ideal)
}

/// `ord(𝔠)`: the least `maxlen` over `[c, c + e)`.
///
/// Every `s ≥ c` is `s' + k·e` with `s' ∈ [c, c + e)`, and adding `e` raises
/// `maxlen` by at least one, so the minimum over the conductor is attained in
/// that first block.
pub fn ord_conductor(parent: &NumericalSemigroup) -> u32 {
    let c = parent.conductor_number();
    let e = parent.multiplicity();
    let mut table = FactorizationTable::new(parent, c + e);
    (c..c + e)
        .map(|s| table.maxlen(s).expect("conductor lies in H"))
        .min()
        .unwrap()
}

pub fn hilbert_colength(parent: &NumericalSemigroup, n: u32) -> usize {
    FactorizationTable::new(parent, 0).hilbert_colength(n)
}

pub fn mu_of_power(parent: &NumericalSemigroup, n: u32) -> usize {
    FactorizationTable::new(parent, 0).mu_of_power(n)
}

/// The exponent `n` with `𝔠 = m^n`, if the conductor is a power of `m`.
pub fn conductor_as_power(parent: &NumericalSemigroup) -> Option<u32> {
    let n = ord_conductor(parent);
    (power_of_m(parent, n) == ZIdeal::conductor(parent)).then_some(n)
}

/// `ord(I)` computed as the largest `n` with `I ⊆ m^n`, testing containment
/// in successive powers. Slower than [`ord_of_ideal`]; kept as a cross-check.
pub fn ord_by_containment(ideal: &ZIdeal) -> Result<u32, IdealError> {
    if !ideal.is_contained_in_ring() {
        return Err(IdealError::NotContained);
    }
    let mut table = FactorizationTable::new(ideal.parent(), 0);
    let mut n = 0;
    while ideal.is_subset_of(&table.power_of_m(n + 1)) {
        n += 1;
    }
    Ok(n)
}
