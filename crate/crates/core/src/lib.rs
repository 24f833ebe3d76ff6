//! Exact invariants of one-dimensional numerical semigroup rings `k[[H]]`.
//!
//! Everything here is value-set arithmetic: a monomial ideal of `k[[H]]` is
//! determined by the set of `t`-adic valuations of its elements, and every
//! ring-level invariant the crate reports (conductor, m-adic order, type,
//! trace of the canonical module, reflexivity) reduces to finite integer
//! combinatorics on those sets.
//!
//! The crate is `no_std` and only needs `alloc`. IO, command-line handling
//! and file formats live in the `nsring` companion crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod arith;
pub mod classify;
pub mod enumerate;
pub mod filtration;
pub mod ideal;
pub mod semigroup;

pub use classify::{canonical_bidual_check, classify, CanonicalBidualCheck, ClassificationReport};
pub use enumerate::{
    colength_ideals, scan_family, scan_record, semigroups_by_genus, FamilyTemplate, GenusTree,
    Predicate, ScanRecord, SkipReason, TemplateError,
};
pub use filtration::{
    conductor_as_power, hilbert_colength, maxlen, mu_of_power, ord_conductor, ord_of_ideal,
    power_of_m, FactorizationTable,
};
pub use ideal::{IdealClass, IdealError, ZIdeal};
pub use semigroup::{NumericalSemigroup, SemigroupError};
