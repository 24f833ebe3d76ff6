//! Systematic generation of semigroups, parametric families and monomial
//! ideals of fixed colength.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;
use core::str::FromStr;

use crate::classify::{classify, ClassificationReport};
use crate::filtration::conductor_as_power;
use crate::ideal::ZIdeal;
use crate::semigroup::{NumericalSemigroup, SemigroupError};

/// Depth-first walk of the semigroup tree, rooted at `ℤ≥0`.
///
/// The children of `H` are `H ∖ {g}` for the minimal generators `g > F(H)`;
/// each numerical semigroup of genus `g` sits at depth `g` exactly once.
/// Siblings are visited in increasing order of the removed generator.
pub struct GenusTree {
    stack: Vec<NumericalSemigroup>,
    max_genus: usize,
}

impl Iterator for GenusTree {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        let h = self.stack.pop()?;
        if h.genus() < self.max_genus {
            let f = h.frobenius();
            for &g in h.minimal_generators().iter().rev().filter(|&&g| g > f) {
                self.stack
                    .push(h.without_generator(g).expect("g is a minimal generator"));
            }
        }
        Some(h)
    }
}

/// All numerical semigroups of genus at most `max_genus`.
pub fn semigroups_by_genus(max_genus: usize) -> GenusTree {
    GenusTree {
        stack: alloc::vec![NumericalSemigroup::naturals()],
        max_genus,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TemplateError {
    Empty,
    NoSymbol,
    MultipleSymbols,
    BadToken(String),
}

impl fmt::Display for TemplateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TemplateError::Empty => write!(f, "family template is empty"),
            TemplateError::NoSymbol => write!(f, "family template needs one symbolic slot"),
            TemplateError::MultipleSymbols => {
                write!(f, "family template may contain only one symbolic slot")
            }
            TemplateError::BadToken(t) => write!(f, "bad token {t:?} in family template"),
        }
    }
}

impl core::error::Error for TemplateError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Const(u64),
    Param,
}

/// A one-parameter family of generator lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyTemplate {
    /// A comma-separated list like `4,5,a` with exactly one symbolic slot.
    Slots { slots: Vec<Slot>, symbol: String },
    /// `⟨e, e+1, …, 2e−2⟩`, written `e-run`.
    ArithmeticRun,
}

impl FromStr for FamilyTemplate {
    type Err = TemplateError;

    fn from_str(s: &str) -> Result<Self, TemplateError> {
        let s = s.trim();
        if s == "e-run" {
            return Ok(FamilyTemplate::ArithmeticRun);
        }
        if s.is_empty() {
            return Err(TemplateError::Empty);
        }
        let mut slots = Vec::new();
        let mut symbol: Option<String> = None;
        for token in s.split(',').map(str::trim) {
            if let Ok(v) = token.parse::<u64>() {
                slots.push(Slot::Const(v));
            } else if is_identifier(token) {
                if symbol.is_some() {
                    return Err(TemplateError::MultipleSymbols);
                }
                symbol = Some(token.to_string());
                slots.push(Slot::Param);
            } else {
                return Err(TemplateError::BadToken(token.to_string()));
            }
        }
        let symbol = symbol.ok_or(TemplateError::NoSymbol)?;
        Ok(FamilyTemplate::Slots { slots, symbol })
    }
}

fn is_identifier(token: &str) -> bool {
    let mut chars = token.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl FamilyTemplate {
    pub fn symbol(&self) -> &str {
        match self {
            FamilyTemplate::Slots { symbol, .. } => symbol,
            FamilyTemplate::ArithmeticRun => "e",
        }
    }

    /// The generator list at parameter `value`, before any normalization.
    pub fn instantiate(&self, value: i64) -> Result<Vec<u64>, SkipReason> {
        match self {
            FamilyTemplate::Slots { slots, .. } => {
                if value <= 0 {
                    return Err(SkipReason::OutOfDomain);
                }
                Ok(slots
                    .iter()
                    .map(|slot| match slot {
                        Slot::Const(v) => *v,
                        Slot::Param => value as u64,
                    })
                    .collect())
            }
            FamilyTemplate::ArithmeticRun => {
                if value < 2 {
                    return Err(SkipReason::OutOfDomain);
                }
                Ok((value as u64..=2 * value as u64 - 2).collect())
            }
        }
    }
}

impl fmt::Display for FamilyTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTemplate::ArithmeticRun => write!(f, "e-run"),
            FamilyTemplate::Slots { slots, symbol } => {
                for (i, slot) in slots.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    match slot {
                        Slot::Const(v) => write!(f, "{v}")?,
                        Slot::Param => write!(f, "{symbol}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

/// Why a family member was not classified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SkipReason {
    /// The parameter produces a non-positive generator or an empty list.
    OutOfDomain,
    /// The generators have a common factor.
    NonCoprime,
    /// The parameter value already lies in the semigroup of the other slots.
    RedundantParameter,
}

impl SkipReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            SkipReason::OutOfDomain => "out-of-domain",
            SkipReason::NonCoprime => "non-coprime",
            SkipReason::RedundantParameter => "redundant-parameter",
        }
    }
}

impl fmt::Display for SkipReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One row of a scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRecord {
    pub params: Vec<(String, i64)>,
    /// Generators as instantiated, before removing redundancy.
    pub input: Vec<u64>,
    pub skipped: Option<SkipReason>,
    pub report: Option<ClassificationReport>,
    /// `n` with `𝔠 = m^n`, when the conductor is a power of the maximal ideal.
    pub conductor_power: Option<u32>,
    /// Predicate outcome; `None` for skipped rows.
    pub matched: Option<bool>,
}

impl ScanRecord {
    pub fn skipped(params: Vec<(String, i64)>, input: Vec<u64>, reason: SkipReason) -> Self {
        ScanRecord {
            params,
            input,
            skipped: Some(reason),
            report: None,
            conductor_power: None,
            matched: None,
        }
    }

    /// Classifies `h` and evaluates `predicate` on the result.
    pub fn classified(
        params: Vec<(String, i64)>,
        input: Vec<u64>,
        h: &NumericalSemigroup,
        predicate: &Predicate,
    ) -> Self {
        let report = classify(h);
        let matched = predicate(&report, &params);
        ScanRecord {
            params,
            input,
            skipped: None,
            report: Some(report),
            conductor_power: conductor_as_power(h),
            matched: Some(matched),
        }
    }
}

/// A condition on a classified row and its parameters.
pub type Predicate = dyn Fn(&ClassificationReport, &[(String, i64)]) -> bool;

/// Classifies the family member at parameter `value`.
pub fn scan_record(template: &FamilyTemplate, value: i64, predicate: &Predicate) -> ScanRecord {
    let params = alloc::vec![(template.symbol().to_string(), value)];
    let input = match template.instantiate(value) {
        Ok(input) => input,
        Err(reason) => return ScanRecord::skipped(params, Vec::new(), reason),
    };
    let h = match NumericalSemigroup::new(&input) {
        Ok(h) => h,
        Err(SemigroupError::NonCoprime { .. }) => {
            return ScanRecord::skipped(params, input, SkipReason::NonCoprime)
        }
        Err(_) => return ScanRecord::skipped(params, input, SkipReason::OutOfDomain),
    };
    if let FamilyTemplate::Slots { .. } = template {
        if !h.minimal_generators().contains(&value) {
            return ScanRecord::skipped(params, input, SkipReason::RedundantParameter);
        }
    }
    ScanRecord::classified(params, input, &h, predicate)
}

/// One record per parameter in `range`, in parameter order.
pub fn scan_family(
    template: &FamilyTemplate,
    range: RangeInclusive<i64>,
    predicate: &Predicate,
) -> Vec<ScanRecord> {
    range.map(|v| scan_record(template, v, predicate)).collect()
}

/// All monomial ideals `E ⊆ H` with `|H ∖ E| = k`.
///
/// The complement `H ∖ E` is a down-set of `(H, ≤_H)` with `k` elements, and
/// it lies below `c + k·e`. Down-sets are grown in increasing order, so each
/// is produced exactly once, in lexicographic order of the sorted complement.
pub fn colength_ideals(h: &NumericalSemigroup, k: usize) -> Vec<ZIdeal> {
    let end = h.conductor_number() + k as i64 * h.multiplicity();
    let elements: Vec<i64> = h.elements_below(end).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    grow_down_sets(h, &elements, 0, k, &mut chosen, &mut |complement| {
        out.push(ZIdeal::from_window(h, 0, end, |s| {
            h.contains(s) && complement.binary_search(&s).is_err()
        }));
    });
    out
}

fn grow_down_sets(
    h: &NumericalSemigroup,
    elements: &[i64],
    from: usize,
    k: usize,
    chosen: &mut Vec<i64>,
    emit: &mut dyn FnMut(&[i64]),
) {
    if chosen.len() == k {
        emit(chosen);
        return;
    }
    for (i, &x) in elements.iter().enumerate().skip(from) {
        let closed = h
            .minimal_generators()
            .iter()
            .all(|&g| !h.contains(x - g) || chosen.binary_search(&(x - g)).is_ok());
        if closed {
            chosen.push(x);
            grow_down_sets(h, elements, i + 1, k, chosen, emit);
            chosen.pop();
        }
    }
}
