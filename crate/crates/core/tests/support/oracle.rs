//! Brute-force reference implementations, written without the engine.
//!
//! Sets of integers are stored explicitly on a window `[lo, hi)`; everything
//! at or above `hi` is a member and nothing below `lo` is. All arithmetic is
//! the naive definition evaluated point by point.
#![allow(dead_code)]

/// Naive membership: `s` is a nonnegative combination of `gens`.
pub struct NaiveSemigroup {
    pub gens: Vec<u64>,
    member: Vec<bool>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl NaiveSemigroup {
    /// Needs `gcd(gens) = 1`. Tabulates up to `gmin · gmax`, past the
    /// Frobenius number.
    pub fn new(gens: &[u64]) -> Self {
        assert_eq!(gens.iter().fold(0, |a, &b| gcd(a, b)), 1);
        let bound = (gens.iter().min().unwrap() * gens.iter().max().unwrap()) as usize + 1;
        let mut member = vec![false; bound + 1];
        member[0] = true;
        for s in 1..=bound {
            member[s] = gens
                .iter()
                .any(|&g| g as usize <= s && member[s - g as usize]);
        }
        NaiveSemigroup {
            gens: gens.to_vec(),
            member,
        }
    }

    pub fn contains(&self, s: i64) -> bool {
        s >= 0 && (s as usize >= self.member.len() || self.member[s as usize])
    }

    pub fn frobenius(&self) -> i64 {
        (0..self.member.len() as i64)
            .rev()
            .find(|&s| !self.contains(s))
            .unwrap_or(-1)
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius() + 1
    }

    pub fn gaps(&self) -> Vec<i64> {
        (0..self.conductor())
            .filter(|&s| !self.contains(s))
            .collect()
    }

    pub fn multiplicity(&self) -> i64 {
        (1..).find(|&s| self.contains(s)).unwrap()
    }

    /// Elements that are not a sum of two nonzero elements.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let top = self.conductor() + self.multiplicity();
        (1..=top)
            .filter(|&s| self.contains(s))
            .filter(|&s| !(1..s).any(|a| self.contains(a) && self.contains(s - a) && s - a > 0))
            .collect()
    }

    /// `x ∉ H` with `x + h ∈ H` for every nonzero `h ∈ H`.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        let top = 2 * self.conductor() + 2;
        (-top..self.conductor())
            .filter(|&x| !self.contains(x))
            .filter(|&x| {
                (1..top)
                    .filter(|&h| self.contains(h))
                    .all(|h| self.contains(x + h))
            })
            .collect()
    }

    /// Longest factorization of `s` over the minimal generators.
    pub fn maxlen(&self, s: i64) -> Option<u32> {
        if !self.contains(s) {
            return None;
        }
        let gens = self.minimal_generators();
        let mut best = vec![None::<u32>; s as usize + 1];
        best[0] = Some(0);
        for t in 1..=s as usize {
            best[t] = gens
                .iter()
                .filter(|&&g| g as usize <= t)
                .filter_map(|&g| best[t - g as usize])
                .max()
                .map(|l| l + 1);
        }
        best[s as usize]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncated {
    pub lo: i64,
    pub hi: i64,
    /// `members[i]` is membership of `lo + i`.
    pub members: Vec<bool>,
}

impl Truncated {
    pub fn from_fn(lo: i64, hi: i64, f: impl Fn(i64) -> bool) -> Self {
        Truncated {
            lo,
            hi,
            members: (lo..hi).map(f).collect(),
        }
    }

    pub fn contains(&self, z: i64) -> bool {
        z >= self.hi || (z >= self.lo && self.members[(z - self.lo) as usize])
    }

    pub fn min(&self) -> i64 {
        (self.lo..self.hi)
            .find(|&z| self.contains(z))
            .unwrap_or(self.hi)
    }

    /// `gens + H`.
    pub fn generated(h: &NaiveSemigroup, gens: &[i64], lo: i64, hi: i64) -> Self {
        Truncated::from_fn(lo, hi, |z| gens.iter().any(|&g| h.contains(z - g)))
    }

    pub fn ring(h: &NaiveSemigroup, lo: i64, hi: i64) -> Self {
        Truncated::from_fn(lo, hi, |z| h.contains(z))
    }

    pub fn maximal(h: &NaiveSemigroup, lo: i64, hi: i64) -> Self {
        Truncated::from_fn(lo, hi, |z| z > 0 && h.contains(z))
    }

    pub fn conductor(h: &NaiveSemigroup, lo: i64, hi: i64) -> Self {
        let c = h.conductor();
        Truncated::from_fn(lo, hi, |z| z >= c)
    }

    /// `{x : F − x ∉ H}`.
    pub fn canonical(h: &NaiveSemigroup, lo: i64, hi: i64) -> Self {
        let f = h.frobenius();
        Truncated::from_fn(lo, hi, |z| !h.contains(f - z))
    }

    pub fn union(&self, other: &Self) -> Self {
        Truncated::from_fn(self.lo, self.hi, |z| self.contains(z) || other.contains(z))
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Truncated::from_fn(self.lo, self.hi, |z| self.contains(z) && other.contains(z))
    }

    /// `{x + y}`; a sum below `hi` needs `x < hi − min(other)`.
    pub fn sumset(&self, other: &Self) -> Self {
        let m = other.min();
        Truncated::from_fn(self.lo, self.hi, |z| {
            (self.lo..=z - m).any(|x| self.contains(x) && other.contains(z - x))
        })
    }

    /// `{z : z + other ⊆ self}`; `z + f ≥ hi` is automatic.
    pub fn colon(&self, other: &Self) -> Self {
        Truncated::from_fn(self.lo, self.hi, |z| {
            (other.lo..self.hi - z).all(|f| !other.contains(f) || self.contains(z + f))
        })
    }

    pub fn shift(&self, by: i64) -> Self {
        Truncated::from_fn(self.lo, self.hi, |z| self.contains(z - by))
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        (self.lo..self.hi).all(|z| !self.contains(z) || other.contains(z))
    }

    /// Members not of the form `x + h` with `x` a member and `h > 0` in `H`.
    pub fn minimal_generators(&self, h: &NaiveSemigroup) -> Vec<i64> {
        (self.lo..self.hi + h.multiplicity())
            .filter(|&z| self.contains(z))
            .filter(|&z| !(1..=z - self.lo).any(|s| h.contains(s) && self.contains(z - s)))
            .collect()
    }
}
