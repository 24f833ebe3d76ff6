//! Checks shared by the core integration tests and the acceptance runner.
//! Each returns a one-line summary on success and the first mismatch on failure.
#![allow(dead_code)]

use std::collections::BTreeSet;

use nsring_core::filtration::{mu_of_power, ord_conductor};
use nsring_core::{classify, colength_ideals, semigroups_by_genus, NumericalSemigroup, ZIdeal};
use rand::Rng;

use super::oracle::{NaiveSemigroup, Truncated};

/// Every semigroup whose minimal generators lie in `[lo, hi]`, each once.
pub fn semigroups_with_generators_in(lo: u64, hi: u64) -> Vec<Vec<u64>> {
    let pool: Vec<u64> = (lo..=hi).collect();
    let mut seen = BTreeSet::new();
    for mask in 1u32..(1 << pool.len()) {
        let gens: Vec<u64> = pool
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &g)| g)
            .collect();
        if gens.iter().fold(0, |a, &b| gcd(a, b)) != 1 {
            continue;
        }
        let minimal: Vec<u64> = NaiveSemigroup::new(&gens)
            .minimal_generators()
            .into_iter()
            .map(|g| g as u64)
            .collect();
        if minimal.iter().all(|&g| g >= lo && g <= hi) {
            seen.insert(minimal);
        }
    }
    seen.into_iter().collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

struct Window {
    lo: i64,
    hi: i64,
}

impl Window {
    fn agree(&self, engine: &ZIdeal, oracle: &Truncated) -> bool {
        (self.lo..self.hi).all(|z| engine.contains(z) == oracle.contains(z))
    }
}

/// Compares every ideal operation with the oracle on `[−2c, 4c]` for
/// `ideals` random fractional ideals of `⟨gens⟩`. Returns the number of
/// comparisons made.
pub fn compare_ideal_operations(
    gens: &[u64],
    ideals: usize,
    rng: &mut impl Rng,
) -> Result<usize, String> {
    let h = NumericalSemigroup::new(gens).map_err(|e| e.to_string())?;
    let n = NaiveSemigroup::new(gens);
    let c = n.conductor().max(1);
    let w = Window {
        lo: -2 * c,
        hi: 4 * c,
    };
    let (lo, hi) = (w.lo, w.hi);
    let mut checks = 0usize;
    let mut check = |ok: bool, what: &str, e: &str| -> Result<(), String> {
        checks += 1;
        if ok {
            Ok(())
        } else {
            Err(format!(
                "H = <{gens:?}>, E = {e}: {what} disagrees with the oracle"
            ))
        }
    };

    let named = [
        (ZIdeal::ring(&h), Truncated::ring(&n, lo, hi)),
        (ZIdeal::maximal(&h), Truncated::maximal(&n, lo, hi)),
        (ZIdeal::conductor(&h), Truncated::conductor(&n, lo, hi)),
        (ZIdeal::canonical(&h), Truncated::canonical(&n, lo, hi)),
    ];
    for (e, o) in &named {
        check(w.agree(e, o), "named ideal", &e.to_string())?;
    }

    let random_ideal = |rng: &mut dyn rand::RngCore| {
        let k = rng.gen_range(1..=3);
        let g: Vec<i64> = (0..k).map(|_| rng.gen_range(-c..=2 * c)).collect();
        (
            ZIdeal::from_generators(&h, &g).unwrap(),
            Truncated::generated(&n, &g, lo, hi),
        )
    };

    for _ in 0..ideals {
        let (e, eo) = random_ideal(rng);
        let (f, fo) = if rng.gen_bool(0.25) {
            named[rng.gen_range(0..named.len())].clone()
        } else {
            random_ideal(rng)
        };
        let label = format!("{e}, F = {f}");
        let label = label.as_str();

        check(w.agree(&e, &eo), "construction", label)?;
        check(e.min() == eo.min(), "min", label)?;
        check(
            e.minimal_generators() == eo.minimal_generators(&n),
            "minimal generators",
            label,
        )?;
        check(
            e.is_principal() == (eo.minimal_generators(&n).len() == 1),
            "principal",
            label,
        )?;
        check(w.agree(&e.sum(&f).unwrap(), &eo.union(&fo)), "sum", label)?;
        check(
            w.agree(&e.intersection(&f).unwrap(), &eo.intersection(&fo)),
            "intersection",
            label,
        )?;
        check(
            w.agree(&e.product(&f).unwrap(), &eo.sumset(&fo)),
            "product",
            label,
        )?;
        check(
            w.agree(&e.colon(&f).unwrap(), &eo.colon(&fo)),
            "colon E:F",
            label,
        )?;
        check(
            w.agree(&f.colon(&e).unwrap(), &fo.colon(&eo)),
            "colon F:E",
            label,
        )?;

        let ring = Truncated::ring(&n, lo, hi);
        let dual = ring.colon(&eo);
        let bidual = ring.colon(&dual);
        let trace = eo.sumset(&dual);
        check(w.agree(&e.dual(), &dual), "dual", label)?;
        check(w.agree(&e.bidual(), &bidual), "bidual", label)?;
        check(w.agree(&e.trace(), &trace), "trace", label)?;
        check(e.is_reflexive() == (bidual == eo), "reflexive", label)?;
        check(e.is_trace_ideal() == (trace == eo), "trace ideal", label)?;

        let z = dual.min() - eo.min();
        check(
            e.is_self_dual() == (eo.shift(z) == dual),
            "self-dual",
            label,
        )?;
        let by = rng.gen_range(-c..=c);
        check(w.agree(&e.shift(by), &eo.shift(by)), "shift", label)?;
        check(
            w.agree(e.class().representative(), &eo.shift(-eo.min())),
            "class",
            label,
        )?;

        let inside = eo.is_subset_of(&ring);
        check(e.is_contained_in_ring() == inside, "containment", label)?;
        if inside {
            let colength = (0..hi)
                .filter(|&s| n.contains(s) && !eo.contains(s))
                .count();
            check(e.colength() == Ok(colength), "colength", label)?;
            let m = eo.min();
            let closure = Truncated::from_fn(lo, hi, |s| n.contains(s) && s >= m);
            check(
                w.agree(&e.integral_closure().unwrap(), &closure),
                "integral closure",
                label,
            )?;
        }
    }
    Ok(checks)
}

/// Gorenstein, almost Gorenstein and type against independent criteria.
pub fn gorenstein_hierarchy(max_genus: usize) -> Result<String, String> {
    let mut count = 0;
    for h in semigroups_by_genus(max_genus) {
        let r = classify(&h);
        let gens: Vec<u64> = h.minimal_generators().iter().map(|&g| g as u64).collect();
        let n = NaiveSemigroup::new(&gens);
        let pf = n.pseudo_frobenius();
        let (g, f, t) = (r.genus, r.frobenius, r.type_);
        let fail = |what: &str| Err(format!("{h}: {what}"));
        if t != pf.len() as i64 || h.pseudo_frobenius() != pf {
            return fail("pseudo-Frobenius numbers");
        }
        if g != n.gaps().len() as i64 || f != n.frobenius() {
            return fail("genus or Frobenius number");
        }
        if r.is_gorenstein != (t == 1) || (t == 1) != (2 * g == f + 1) {
            return fail("Gorenstein iff type 1 iff 2g = F + 1");
        }
        if r.is_almost_gorenstein != (2 * g == f + t) {
            return fail("almost Gorenstein iff 2g = F + type");
        }
        // Almost symmetric iff K + M ⊆ M, checked on explicit sets.
        let c = n.conductor().max(1);
        let (lo, hi) = (-1, 4 * c + n.multiplicity());
        let k = Truncated::canonical(&n, lo, hi);
        let m = Truncated::maximal(&n, lo, hi);
        if r.is_almost_gorenstein != k.sumset(&m).is_subset_of(&m) {
            return fail("almost Gorenstein iff K + M ⊆ M");
        }
        if r.is_hypersurface && !r.is_gorenstein {
            return fail("hypersurface but not Gorenstein");
        }
        count += 1;
    }
    Ok(format!("{count} semigroups of genus <= {max_genus}"))
}

fn test_ideals(h: &NumericalSemigroup) -> Vec<ZIdeal> {
    let mut out = vec![
        ZIdeal::ring(h),
        ZIdeal::maximal(h),
        ZIdeal::conductor(h),
        ZIdeal::canonical(h),
        ZIdeal::normalization(h),
        ZIdeal::from_generators(h, &[-2, 1]).unwrap(),
    ];
    for k in 1..=2 {
        out.extend(colength_ideals(h, k));
    }
    out
}

/// `E ⊆ E**`, `E*** = E*`, trace shift invariance and idempotence.
pub fn duality_and_trace(max_genus: usize) -> Result<String, String> {
    let mut count = 0;
    for h in semigroups_by_genus(max_genus) {
        for e in test_ideals(&h) {
            let fail = |what: &str| Err(format!("{h}, E = {e}: {what}"));
            let dual = e.dual();
            if !e.is_subset_of(&e.bidual()) {
                return fail("E ⊆ E**");
            }
            if e.bidual().dual() != dual {
                return fail("E*** = E*");
            }
            let t = e.trace();
            for z in [-3, 1, 5] {
                if e.shift(z).trace() != t {
                    return fail("tr(E + z) = tr(E)");
                }
                if e.shift(z).dual() != dual.shift(-z) {
                    return fail("(E + z)* = E* − z");
                }
            }
            if !t.is_trace_ideal() || t.trace() != t {
                return fail("tr(tr(E)) = tr(E)");
            }
            if !t.is_subset_of(&ZIdeal::ring(&h)) {
                return fail("tr(E) ⊆ R");
            }
            count += 1;
        }
    }
    Ok(format!(
        "{count} ideals over all semigroups of genus <= {max_genus}"
    ))
}

/// `ord(𝔠)` from the window `[c, c + e)` against the minimum over `[c, 4c]`.
pub fn ord_window(max_genus: usize) -> Result<String, String> {
    let mut count = 0;
    for h in semigroups_by_genus(max_genus) {
        let gens: Vec<u64> = h.minimal_generators().iter().map(|&g| g as u64).collect();
        let n = NaiveSemigroup::new(&gens);
        let c = n.conductor();
        let top = (4 * c).max(c + n.multiplicity());
        let brute = (c..=top).map(|s| n.maxlen(s).unwrap()).min().unwrap();
        if ord_conductor(&h) != brute {
            return Err(format!(
                "{h}: ord(𝔠) {} but brute force {brute}",
                ord_conductor(&h)
            ));
        }
        count += 1;
    }
    Ok(format!("{count} semigroups of genus <= {max_genus}"))
}

/// Two-generated `⟨a, b⟩` with `ord(𝔠) ≠ a − 1`, for `2 ≤ a < b ≤ max_b`.
pub fn hypersurface_violations(max_b: u64) -> (usize, Vec<(u64, u64, u32)>) {
    let mut checked = 0;
    let mut violations = Vec::new();
    for a in 2..max_b {
        for b in a + 1..=max_b {
            if gcd(a, b) != 1 {
                continue;
            }
            checked += 1;
            let ord = ord_conductor(&NumericalSemigroup::new(&[a, b]).unwrap());
            if ord as u64 != a - 1 {
                violations.push((a, b, ord));
            }
        }
    }
    (checked, violations)
}

/// `μ(m^i) = min(i + 1, e)` for `⟨a, b⟩`, `a ≤ max_a`, `b ≤ max_b`, `i ≤ 2e`.
pub fn matlis_staircase(max_a: u64, max_b: u64) -> Result<String, String> {
    let mut count = 0;
    for a in 2..=max_a {
        for b in a + 1..=max_b {
            if gcd(a, b) != 1 {
                continue;
            }
            let h = NumericalSemigroup::new(&[a, b]).unwrap();
            for i in 1..=2 * a as u32 {
                let mu = mu_of_power(&h, i);
                if mu != (i as usize + 1).min(a as usize) {
                    return Err(format!("{h}: μ(m^{i}) = {mu}"));
                }
            }
            count += 1;
        }
    }
    Ok(format!(
        "{count} semigroups <a,b>, a <= {max_a}, b <= {max_b}"
    ))
}
