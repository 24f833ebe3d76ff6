//! Fractional monomial ideals of `k[[H]]` as value sets.
//!
//! A fractional monomial ideal is a set `E ⊆ ℤ` with `E + H ⊆ E` that is
//! bounded below. Every such set is cofinite above its minimum, so it has a
//! canonical form `E = S ∪ [b, ∞)` with `S ⊂ (−∞, b)` finite and `b − 1 ∉ E`.
//! All operations below are exact: each one computes membership on a finite
//! window outside of which the answer is known in advance.
//!
//! Module-theoretic constructions translate as follows:
//!
//! | module            | value set                |
//! |-------------------|--------------------------|
//! | `I + J`           | `E ∪ F`                  |
//! | `I · J`           | `E + F` (sumset)         |
//! | `(I :_Q J)`       | `E − F = {z : z + F ⊆ E}`|
//! | `I* = Hom(I, R)`  | `H − E`                  |
//! | `tr(I)`           | `E + (H − E)`            |
//! | `ω_R`             | `{x : F(H) − x ∉ H}`     |

use alloc::vec::Vec;
use core::fmt;

use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealError {
    EmptyGenerators,
    /// The two operands live over different semigroups.
    ParentMismatch,
    /// The operation needs an ideal contained in `H`.
    NotContained,
    /// The given value set is not closed under adding `H`.
    NotAnIdeal,
}

impl fmt::Display for IdealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealError::EmptyGenerators => write!(f, "an ideal needs at least one generator"),
            IdealError::ParentMismatch => write!(f, "ideals belong to different semigroup rings"),
            IdealError::NotContained => {
                write!(
                    f,
                    "ideal is not contained in the ring (shift-normalize it first)"
                )
            }
            IdealError::NotAnIdeal => write!(f, "value set is not closed under addition of H"),
        }
    }
}

impl core::error::Error for IdealError {}

/// A fractional monomial ideal of `k[[H]]` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZIdeal {
    parent: NumericalSemigroup,
    offsets: Vec<i64>,
    stability: i64,
}

/// Isomorphism class of a fractional monomial ideal: the representative is
/// shifted so that its minimum is 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealClass(ZIdeal);

impl IdealClass {
    pub fn representative(&self) -> &ZIdeal {
        &self.0
    }
}

impl ZIdeal {
    /// Canonical form of the set that agrees with `member` on `[lo, hi)`,
    /// is empty below `lo` and contains all of `[hi, ∞)`.
    pub(crate) fn from_window(
        parent: &NumericalSemigroup,
        lo: i64,
        hi: i64,
        mut member: impl FnMut(i64) -> bool,
    ) -> ZIdeal {
        let flags: Vec<bool> = (lo..hi).map(&mut member).collect();
        let mut stability = hi;
        while stability > lo && flags[(stability - 1 - lo) as usize] {
            stability -= 1;
        }
        let offsets = (lo..stability)
            .filter(|&z| flags[(z - lo) as usize])
            .collect();
        ZIdeal {
            parent: parent.clone(),
            offsets,
            stability,
        }
    }

    /// `gens + H`.
    pub fn from_generators(
        parent: &NumericalSemigroup,
        gens: &[i64],
    ) -> Result<ZIdeal, IdealError> {
        let Some(&lo) = gens.iter().min() else {
            return Err(IdealError::EmptyGenerators);
        };
        let hi = lo + parent.conductor_number();
        Ok(Self::from_window(parent, lo, hi, |z| {
            gens.iter().any(|&g| parent.contains(z - g))
        }))
    }

    /// Builds an ideal from an explicit canonical description `offsets ∪ [b, ∞)`.
    pub fn from_parts(
        parent: &NumericalSemigroup,
        offsets: &[i64],
        stability_bound: i64,
    ) -> Result<ZIdeal, IdealError> {
        let lo = offsets
            .iter()
            .copied()
            .min()
            .unwrap_or(stability_bound)
            .min(stability_bound);
        let hi = stability_bound;
        let candidate = Self::from_window(parent, lo, hi, |z| offsets.contains(&z));
        let closed = candidate
            .members(candidate.min(), candidate.stability)
            .all(|z| {
                parent
                    .minimal_generators()
                    .iter()
                    .all(|&g| candidate.contains(z + g))
            });
        if closed {
            Ok(candidate)
        } else {
            Err(IdealError::NotAnIdeal)
        }
    }

    /// The ring itself, `H`.
    pub fn ring(parent: &NumericalSemigroup) -> ZIdeal {
        Self::from_generators(parent, &[0]).unwrap()
    }

    /// The maximal ideal `H ∖ {0}`.
    pub fn maximal(parent: &NumericalSemigroup) -> ZIdeal {
        let gens = parent.minimal_generators();
        Self::from_generators(parent, gens).unwrap()
    }

    /// The normalization `ℤ≥0`, as an `H`-module.
    pub fn normalization(parent: &NumericalSemigroup) -> ZIdeal {
        ZIdeal {
            parent: parent.clone(),
            offsets: Vec::new(),
            stability: 0,
        }
    }

    /// The conductor `[c, ∞)`.
    pub fn conductor(parent: &NumericalSemigroup) -> ZIdeal {
        ZIdeal {
            parent: parent.clone(),
            offsets: Vec::new(),
            stability: parent.conductor_number(),
        }
    }

    /// The standard canonical ideal `K = {x : F(H) − x ∉ H}`, with `H ⊆ K ⊆ ℤ≥0`.
    pub fn canonical(parent: &NumericalSemigroup) -> ZIdeal {
        let f = parent.frobenius();
        Self::from_window(parent, 0, f + 1, |x| !parent.contains(f - x))
    }

    pub fn parent(&self) -> &NumericalSemigroup {
        &self.parent
    }

    /// Members of the ideal below the stability bound.
    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    pub fn stability_bound(&self) -> i64 {
        self.stability
    }

    pub fn min(&self) -> i64 {
        self.offsets.first().copied().unwrap_or(self.stability)
    }

    pub fn contains(&self, z: i64) -> bool {
        z >= self.stability || self.offsets.binary_search(&z).is_ok()
    }

    /// Members in `[start, end)`, ascending.
    pub fn members(&self, start: i64, end: i64) -> impl Iterator<Item = i64> + '_ {
        (start.max(self.min())..end).filter(move |&z| self.contains(z))
    }

    pub fn shift(&self, by: i64) -> ZIdeal {
        ZIdeal {
            parent: self.parent.clone(),
            offsets: self.offsets.iter().map(|&z| z + by).collect(),
            stability: self.stability + by,
        }
    }

    pub fn class(&self) -> IdealClass {
        IdealClass(self.shift(-self.min()))
    }

    pub fn is_subset_of(&self, other: &ZIdeal) -> bool {
        let end = self.stability.max(other.stability);
        self.members(self.min(), end).all(|z| other.contains(z))
    }

    fn check_parent(&self, other: &ZIdeal) -> Result<(), IdealError> {
        if self.parent == other.parent {
            Ok(())
        } else {
            Err(IdealError::ParentMismatch)
        }
    }

    /// Ideal sum `I + J`, i.e. the union of value sets.
    pub fn sum(&self, other: &ZIdeal) -> Result<ZIdeal, IdealError> {
        self.check_parent(other)?;
        let lo = self.min().min(other.min());
        let hi = self.stability.min(other.stability);
        Ok(Self::from_window(&self.parent, lo, hi, |z| {
            self.contains(z) || other.contains(z)
        }))
    }

    pub fn intersection(&self, other: &ZIdeal) -> Result<ZIdeal, IdealError> {
        self.check_parent(other)?;
        let lo = self.min().max(other.min());
        let hi = self.stability.max(other.stability);
        Ok(Self::from_window(&self.parent, lo, hi, |z| {
            self.contains(z) && other.contains(z)
        }))
    }

    /// Ideal product `I · J`, i.e. the sumset `E + F`.
    pub fn product(&self, other: &ZIdeal) -> Result<ZIdeal, IdealError> {
        self.check_parent(other)?;
        let (min_e, min_f) = (self.min(), other.min());
        let lo = min_e + min_f;
        let hi = (self.stability + min_f).min(other.stability + min_e);
        let left: Vec<i64> = self.members(min_e, hi - min_f).collect();
        Ok(Self::from_window(&self.parent, lo, hi, |z| {
            left.iter()
                .take_while(|&&x| x <= z - min_f)
                .any(|&x| other.contains(z - x))
        }))
    }

    /// `E − F = {z ∈ ℤ : z + F ⊆ E}`, the value set of `(I :_Q J)`.
    pub fn colon(&self, other: &ZIdeal) -> Result<ZIdeal, IdealError> {
        self.check_parent(other)?;
        let min_f = other.min();
        let lo = self.min() - min_f;
        // z ≥ b_E − min F puts all of z + F inside [b_E, ∞).
        let hi = self.stability - min_f;
        let right: Vec<i64> = other.members(min_f, self.stability - lo).collect();
        Ok(Self::from_window(&self.parent, lo, hi, |z| {
            right
                .iter()
                .take_while(|&&f| z + f < self.stability)
                .all(|&f| self.contains(z + f))
        }))
    }

    /// `E* = H − E`, the value set of `Hom_R(I, R)`.
    pub fn dual(&self) -> ZIdeal {
        ZIdeal::ring(&self.parent).colon(self).unwrap()
    }

    pub fn bidual(&self) -> ZIdeal {
        self.dual().dual()
    }

    pub fn is_reflexive(&self) -> bool {
        self.bidual() == *self
    }

    /// `tr(E) = E + (H − E)`; always contained in `H`.
    pub fn trace(&self) -> ZIdeal {
        self.product(&self.dual()).unwrap()
    }

    pub fn is_trace_ideal(&self) -> bool {
        self.trace() == *self
    }

    /// The shift `z` with `E* = E + z`, if the ideal is self-dual.
    pub fn self_dual_shift(&self) -> Option<i64> {
        let dual = self.dual();
        let z = dual.min() - self.min();
        (dual == self.shift(z)).then_some(z)
    }

    pub fn is_self_dual(&self) -> bool {
        self.self_dual_shift().is_some()
    }

    fn ensure_in_ring(&self) -> Result<(), IdealError> {
        let c = self.parent.conductor_number();
        if self.min() < 0
            || self
                .members(self.min(), c)
                .any(|z| !self.parent.contains(z))
        {
            Err(IdealError::NotContained)
        } else {
            Ok(())
        }
    }

    pub fn is_contained_in_ring(&self) -> bool {
        self.ensure_in_ring().is_ok()
    }

    /// `ℓ(R/I) = |H ∖ E|` for `E ⊆ H`.
    pub fn colength(&self) -> Result<usize, IdealError> {
        self.ensure_in_ring()?;
        let end = self.stability.max(self.parent.conductor_number());
        Ok(self
            .parent
            .elements_below(end)
            .filter(|&s| !self.contains(s))
            .count())
    }

    /// Minimal monomial generators `E ∖ (E + (H ∖ {0}))`, ascending.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let gens = self.parent.minimal_generators();
        let end = self.stability + self.parent.multiplicity();
        self.members(self.min(), end)
            .filter(|&z| gens.iter().all(|&g| !self.contains(z - g)))
            .collect()
    }

    pub fn is_principal(&self) -> bool {
        self.minimal_generators().len() == 1
    }

    /// Integral closure of an ideal `E ⊆ H`: `{s ∈ H : s ≥ min E}`.
    pub fn integral_closure(&self) -> Result<ZIdeal, IdealError> {
        self.ensure_in_ring()?;
        let lo = self.min();
        let hi = lo.max(self.parent.conductor_number());
        Ok(Self::from_window(&self.parent, lo, hi, |s| {
            self.parent.contains(s)
        }))
    }

    pub fn is_integrally_closed(&self) -> Result<bool, IdealError> {
        Ok(self.integral_closure()? == *self)
    }
}

impl fmt::Display for ZIdeal {
    /// Canonical form `(s1,s2,… | b)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, z) in self.offsets.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{z}")?;
        }
        write!(f, " | {})", self.stability)
    }
}

impl fmt::Debug for ZIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.parent)
    }
}
