//! Ring-level classification of `k[[H]]`.

use alloc::vec::Vec;

use crate::filtration::{ord_conductor, FactorizationTable};
use crate::ideal::ZIdeal;
use crate::semigroup::NumericalSemigroup;

/// Every ring-level number and flag the engine reports for `k[[H]]`.
///
/// The field names are the stable serialization schema.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClassificationReport {
    pub generators: Vec<i64>,
    /// Multiplicity, the least nonzero element of `H`.
    pub e: i64,
    pub embdim: i64,
    pub genus: i64,
    pub frobenius: i64,
    pub conductor_number: i64,
    pub type_: i64,
    pub ord_conductor: i64,
    pub colength_conductor: i64,
    pub is_gorenstein: bool,
    pub is_almost_gorenstein: bool,
    pub is_nearly_gorenstein: bool,
    pub is_farflung_gorenstein: bool,
    pub has_minimal_multiplicity: bool,
    pub is_hypersurface: bool,
    /// Present only when `e − embdim = 1`: whether `ord(𝔠) = 2`.
    pub q21_holds: Option<bool>,
    /// Present only for hypersurfaces: whether `ord(𝔠) = e − 1`.
    pub q31_holds: Option<bool>,
    /// `e − (type + 1)`, the candidate value for `ord(𝔠)` in the type-based guess.
    pub q41_value: i64,
}

impl ClassificationReport {
    pub fn e_minus_embdim(&self) -> i64 {
        self.e - self.embdim
    }
}

pub fn classify(h: &NumericalSemigroup) -> ClassificationReport {
    let e = h.multiplicity();
    let embdim = h.embedding_dimension() as i64;
    let genus = h.genus() as i64;
    let frobenius = h.frobenius();
    let type_ = h.type_() as i64;
    let ord = ord_conductor(h) as i64;

    let conductor = ZIdeal::conductor(h);
    let colength_conductor = conductor.colength().expect("conductor lies in H") as i64;
    let trace = ZIdeal::canonical(h).trace();
    // Elements at or above the stability bound of tr(K) are automatically in it.
    let is_nearly_gorenstein = h
        .elements_below(trace.stability_bound())
        .filter(|&s| s > 0)
        .all(|s| trace.contains(s));

    let is_hypersurface = embdim <= 2;
    ClassificationReport {
        generators: h.minimal_generators().to_vec(),
        e,
        embdim,
        genus,
        frobenius,
        conductor_number: h.conductor_number(),
        type_,
        ord_conductor: ord,
        colength_conductor,
        is_gorenstein: type_ == 1,
        is_almost_gorenstein: 2 * genus == frobenius + type_,
        is_nearly_gorenstein,
        is_farflung_gorenstein: trace == conductor,
        has_minimal_multiplicity: e == embdim,
        is_hypersurface,
        q21_holds: (e - embdim == 1).then_some(ord == 2),
        q31_holds: is_hypersurface.then_some(ord == e - 1),
        q41_value: e - (type_ + 1),
    }
}

/// Outcome of comparing the canonical ideal with its bidual, for rings that
/// are almost Gorenstein, of minimal multiplicity and not hypersurfaces.
///
/// When the hypotheses hold, one expects `K ⊂ K**` with quotient the residue
/// field and `K** ≅ m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CanonicalBidualCheck {
    pub applies: bool,
    /// `|K** ∖ K| = 1`, i.e. `0 → ω → ω** → k → 0` is exact.
    pub sequence_exact: bool,
    /// `K**` and `m` have the same isomorphism class.
    pub bidual_class_eq_m: bool,
}

pub fn canonical_bidual_check(h: &NumericalSemigroup) -> CanonicalBidualCheck {
    let e = h.multiplicity();
    let embdim = h.embedding_dimension() as i64;
    let almost = 2 * h.genus() as i64 == h.frobenius() + h.type_() as i64;
    let applies = almost && e == embdim && embdim > 2;
    if !applies {
        return CanonicalBidualCheck {
            applies,
            sequence_exact: false,
            bidual_class_eq_m: false,
        };
    }
    let k = ZIdeal::canonical(h);
    let bidual = k.bidual();
    // K ⊆ K** in the same frame; count what the natural map misses.
    let end = bidual.stability_bound().max(k.stability_bound());
    let quotient_length = bidual
        .members(bidual.min(), end)
        .filter(|&z| !k.contains(z))
        .count();
    CanonicalBidualCheck {
        applies,
        sequence_exact: quotient_length == 1,
        bidual_class_eq_m: bidual.class() == ZIdeal::maximal(h).class(),
    }
}

/// `μ(m^i)` for `i = 1..=n`, using one shared factorization table.
pub fn mu_staircase(h: &NumericalSemigroup, n: u32) -> Vec<usize> {
    let mut table = FactorizationTable::new(h, 0);
    (1..=n).map(|i| table.mu_of_power(i)).collect()
}
