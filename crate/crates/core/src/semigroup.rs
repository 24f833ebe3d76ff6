//! Numerical semigroups `H ⊆ ℤ≥0` in canonical form.
//!
//! A semigroup is stored by its minimal generators together with the Apéry
//! set with respect to the multiplicity `e`. Membership is then a single
//! lookup: `s ∈ H` iff `s ≥ Ap(H, e)[s mod e]`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::arith::gcd;

/// Largest Frobenius-number bound `(e − 1)(g_max − 1)` accepted by
/// [`NumericalSemigroup::new`]; the gap list is materialized, so this caps
/// memory use.
pub const MAX_FROBENIUS_BOUND: u64 = 1 << 24;

const UNREACHED: i64 = i64::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    EmptyGenerators,
    ZeroGenerator,
    NonCoprime { gcd: u64 },
    TooLarge { bound: u64 },
    NotAMember(i64),
    NotAMinimalGenerator(i64),
}

impl fmt::Display for SemigroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemigroupError::EmptyGenerators => write!(f, "at least one generator is required"),
            SemigroupError::ZeroGenerator => write!(f, "generators must be positive"),
            SemigroupError::NonCoprime { gcd } => {
                write!(f, "gcd must be 1 (generators have gcd {gcd})")
            }
            SemigroupError::TooLarge { bound } => write!(
                f,
                "Frobenius bound {bound} exceeds the supported limit {MAX_FROBENIUS_BOUND}"
            ),
            SemigroupError::NotAMember(n) => {
                write!(f, "{n} is not a nonzero element of the semigroup")
            }
            SemigroupError::NotAMinimalGenerator(n) => write!(f, "{n} is not a minimal generator"),
        }
    }
}

impl core::error::Error for SemigroupError {}

struct Inner {
    generators: Vec<i64>,
    /// Apéry set with respect to the multiplicity, indexed by residue.
    apery: Vec<i64>,
    gaps: Vec<i64>,
    frobenius: i64,
}

/// A numerical semigroup, immutable after construction.
///
/// Cloning is cheap (the data is reference counted). Two values are equal
/// iff they have the same minimal generators.
#[derive(Clone)]
pub struct NumericalSemigroup {
    inner: Arc<Inner>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `generators`.
    ///
    /// Input order and duplicates are irrelevant; redundant generators are
    /// dropped.
    pub fn new(generators: &[u64]) -> Result<Self, SemigroupError> {
        if generators.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if generators.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        let g = generators.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(SemigroupError::NonCoprime { gcd: g });
        }

        let mut sorted = generators.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let e = sorted[0];
        let largest = *sorted.last().unwrap();
        // Schur: F(H) ≤ (e − 1)(g_max − 1) − 1.
        let bound = (e as u128 - 1) * (largest as u128 - 1);
        if bound > MAX_FROBENIUS_BOUND as u128 || largest > MAX_FROBENIUS_BOUND {
            return Err(SemigroupError::TooLarge {
                bound: bound.min(u64::MAX as u128) as u64,
            });
        }

        let e = e as i64;
        let mut apery = vec![UNREACHED; e as usize];
        apery[0] = 0;
        let mut minimal = vec![e];
        for &g in &sorted[1..] {
            let g = g as i64;
            if apery[(g % e) as usize] <= g {
                continue;
            }
            minimal.push(g);
            adjoin_generator(&mut apery, g);
        }

        let frobenius = apery.iter().copied().max().unwrap() - e;
        let gaps = (1..=frobenius)
            .filter(|&s| apery[(s % e) as usize] > s)
            .collect();

        Ok(NumericalSemigroup {
            inner: Arc::new(Inner {
                generators: minimal,
                apery,
                gaps,
                frobenius,
            }),
        })
    }

    /// The semigroup `ℤ≥0 = ⟨1⟩`.
    pub fn naturals() -> Self {
        Self::new(&[1]).unwrap()
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.inner.generators
    }

    pub fn multiplicity(&self) -> i64 {
        self.inner.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.inner.generators.len()
    }

    /// `F(H)`, or `-1` for `H = ℤ≥0`.
    pub fn frobenius(&self) -> i64 {
        self.inner.frobenius
    }

    /// `c = F(H) + 1`: the least integer with `[c, ∞) ⊆ H`.
    pub fn conductor_number(&self) -> i64 {
        self.inner.frobenius + 1
    }

    pub fn gaps(&self) -> &[i64] {
        &self.inner.gaps
    }

    pub fn genus(&self) -> usize {
        self.inner.gaps.len()
    }

    pub fn is_naturals(&self) -> bool {
        self.inner.generators[0] == 1
    }

    pub fn contains(&self, s: i64) -> bool {
        if s < 0 {
            return false;
        }
        if s > self.inner.frobenius {
            return true;
        }
        let e = self.multiplicity();
        self.inner.apery[(s % e) as usize] <= s
    }

    /// Sorted Apéry set `Ap(H, n)`: the least element of `H` in each
    /// residue class modulo `n`.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>, SemigroupError> {
        if n <= 0 || !self.contains(n) {
            return Err(SemigroupError::NotAMember(n));
        }
        let mut out: Vec<i64> = (0..n)
            .map(|r| {
                let mut s = r;
                while !self.contains(s) {
                    s += n;
                }
                s
            })
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Pseudo-Frobenius numbers: `x ∉ H` with `x + (H ∖ {0}) ⊆ H`.
    ///
    /// For `H = ℤ≥0` this is `{-1}`, so that the type of a regular ring is 1.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        if self.is_naturals() {
            return vec![-1];
        }
        self.inner
            .gaps
            .iter()
            .copied()
            .filter(|&x| self.inner.generators.iter().all(|&g| self.contains(x + g)))
            .collect()
    }

    /// Cohen–Macaulay type of `k[[H]]`, i.e. `|PF(H)|`.
    pub fn type_(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    pub fn is_symmetric(&self) -> bool {
        2 * self.genus() as i64 == self.frobenius() + 1
    }

    /// `H ∖ {g}` for a minimal generator `g`; again a numerical semigroup.
    pub fn without_generator(&self, g: i64) -> Result<Self, SemigroupError> {
        let gens = &self.inner.generators;
        if !gens.contains(&g) {
            return Err(SemigroupError::NotAMinimalGenerator(g));
        }
        // H ∖ {g} is generated by (A ∖ {g}) ∪ (g + (A ∖ {g})) ∪ {2g, 3g}.
        let mut candidates: Vec<u64> = Vec::with_capacity(2 * gens.len() + 2);
        for &a in gens.iter().filter(|&&a| a != g) {
            candidates.push(a as u64);
            candidates.push((a + g) as u64);
        }
        candidates.push(2 * g as u64);
        candidates.push(3 * g as u64);
        Self::new(&candidates)
    }

    /// Elements of `H` in `[0, end)`, ascending.
    pub fn elements_below(&self, end: i64) -> impl Iterator<Item = i64> + '_ {
        (0..end).filter(move |&s| self.contains(s))
    }
}

/// Updates an Apéry table (modulo `e = apery.len()`) after adjoining `g`.
///
/// Residues split into `gcd(g, e)` cycles under `r ↦ r + g`; one pass around
/// each cycle starting from its smallest reached entry is enough.
fn adjoin_generator(apery: &mut [i64], g: i64) {
    let e = apery.len();
    let step = (g as usize) % e;
    let cycles = gcd(step as u64, e as u64) as usize;
    let cycle_len = e / cycles;
    for start in 0..cycles {
        let mut best = start;
        let mut r = start;
        for _ in 0..cycle_len {
            if apery[r] < apery[best] {
                best = r;
            }
            r = (r + step) % e;
        }
        if apery[best] == UNREACHED {
            continue;
        }
        let mut r = best;
        for _ in 0..cycle_len {
            let next = (r + step) % e;
            let via = apery[r] + g;
            if via < apery[next] {
                apery[next] = via;
            }
            r = next;
        }
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.generators == other.inner.generators
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.generators.hash(state);
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.inner.generators.cmp(&other.inner.generators)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.inner.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    /// Membership by enumerating combinations, independent of the Apéry table.
    fn naive_members(gens: &[u64], window: usize) -> Vec<bool> {
        let mut table = vec![false; window + 1];
        table[0] = true;
        for s in 1..=window {
            table[s] = gens
                .iter()
                .any(|&g| s >= g as usize && table[s - g as usize]);
        }
        table
    }

    #[test]
    fn construct_4_5_7() {
        let s = h(&[4, 5, 7]);
        assert_eq!(s.minimal_generators(), &[4, 5, 7]);
        assert_eq!(s.frobenius(), 6);
        assert_eq!(s.conductor_number(), 7);
        assert_eq!(s.gaps(), &[1, 2, 3, 6]);
        assert_eq!(s.multiplicity(), 4);
        assert_eq!(s.embedding_dimension(), 3);
        let table = naive_members(&[4, 5, 7], 35);
        for (x, &member) in table.iter().enumerate() {
            assert_eq!(s.contains(x as i64), member, "{x}");
        }
    }

    #[test]
    fn construct_naturals() {
        let s = h(&[1]);
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.conductor_number(), 0);
        assert!(s.gaps().is_empty());
        assert_eq!(s.multiplicity(), 1);
        assert_eq!(s.embedding_dimension(), 1);
        assert!(s.is_naturals());
        assert_eq!(h(&[1, 5, 9]), s);
    }

    #[test]
    fn construct_drops_redundant() {
        assert_eq!(h(&[4, 5, 6, 7, 8]).minimal_generators(), &[4, 5, 6, 7]);
        assert_eq!(h(&[8, 7, 5, 4, 4, 6]).minimal_generators(), &[4, 5, 6, 7]);
    }

    #[test]
    fn construct_6_8_11_13_15() {
        let s = h(&[6, 8, 11, 13, 15]);
        assert_eq!(s.frobenius(), 10);
        assert_eq!(s.conductor_number(), 11);
        assert_eq!(s.multiplicity(), 6);
        assert_eq!(s.embedding_dimension(), 5);
    }

    #[test]
    fn construct_errors() {
        assert_eq!(
            NumericalSemigroup::new(&[]),
            Err(SemigroupError::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::new(&[0, 3]),
            Err(SemigroupError::ZeroGenerator)
        );
        assert_eq!(
            NumericalSemigroup::new(&[4, 6]),
            Err(SemigroupError::NonCoprime { gcd: 2 })
        );
        assert!(matches!(
            NumericalSemigroup::new(&[1 << 20, (1 << 20) + 1]),
            Err(SemigroupError::TooLarge { .. })
        ));
    }

    #[test]
    fn contains_edge_cases() {
        let s = h(&[4, 5, 7]);
        assert!(!s.contains(6));
        assert!(s.contains(0));
        assert!(s.contains(1_000_000_000));
        assert!(!s.contains(-4));
    }

    #[test]
    fn apery_sets() {
        assert_eq!(h(&[3, 4, 5]).apery_set(3).unwrap(), vec![0, 4, 5]);
        assert_eq!(h(&[1]).apery_set(1).unwrap(), vec![0]);
        assert_eq!(h(&[4, 5, 7]).apery_set(4).unwrap(), vec![0, 5, 7, 10]);
        assert_eq!(
            h(&[4, 5, 7]).apery_set(6),
            Err(SemigroupError::NotAMember(6))
        );
        assert_eq!(
            h(&[4, 5, 7]).apery_set(0),
            Err(SemigroupError::NotAMember(0))
        );
    }

    #[test]
    fn pseudo_frobenius_and_type() {
        assert_eq!(h(&[3, 4, 5]).pseudo_frobenius(), vec![1, 2]);
        assert_eq!(h(&[5, 6, 7]).pseudo_frobenius(), vec![8, 9]);
        assert_eq!(h(&[2, 3]).pseudo_frobenius(), vec![1]);
        assert_eq!(h(&[4, 6, 7, 9]).pseudo_frobenius(), vec![2, 3, 5]);
        assert_eq!(h(&[4, 6, 7, 9]).type_(), 3);
        assert_eq!(h(&[1]).type_(), 1);
        assert!(h(&[2, 3]).is_symmetric());
        assert!(!h(&[3, 4, 5]).is_symmetric());
    }

    #[test]
    fn remove_generator() {
        let n = NumericalSemigroup::naturals();
        assert_eq!(n.without_generator(1).unwrap(), h(&[2, 3]));
        assert_eq!(h(&[2, 3]).without_generator(3).unwrap(), h(&[2, 5]));
        assert_eq!(h(&[2, 3]).without_generator(2).unwrap(), h(&[3, 4, 5]));
        assert_eq!(
            h(&[2, 3]).without_generator(4),
            Err(SemigroupError::NotAMinimalGenerator(4))
        );
    }

    #[test]
    fn brute_force_membership_small_generators() {
        // every generator subset of [2, 9] with gcd 1
        for mask in 1u32..(1 << 8) {
            let gens: Vec<u64> = (0..8)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| i + 2)
                .collect();
            if gens.iter().fold(0, |a, &b| gcd(a, b)) != 1 {
                continue;
            }
            let s = h(&gens);
            let window = (gens[0] * gens[gens.len() - 1]) as usize + 10;
            let table = naive_members(&gens, window);
            for (x, &member) in table.iter().enumerate() {
                assert_eq!(s.contains(x as i64), member, "{gens:?} at {x}");
            }
            assert_eq!(
                h(&s.minimal_generators()
                    .iter()
                    .map(|&g| g as u64)
                    .collect::<Vec<_>>()),
                s
            );
        }
    }
}
