//! Named facts about a semigroup ring, evaluated to JSON values.
//!
//! A fact is either a report field (`ord_conductor`) or a call such as
//! `bidual(conductor)`, `colon(maximal,maximal)` or `maxlen(8)`. Ideal
//! arguments are `ring`, `maximal`, `conductor`, `canonical` and
//! `normalization`; ideal-valued facts evaluate to the canonical form string.

use nsring_core::filtration::{hilbert_colength, maxlen, mu_of_power};
use nsring_core::{
    canonical_bidual_check, classify, colength_ideals, conductor_as_power, NumericalSemigroup,
    ZIdeal,
};
use serde_json::Value;

use crate::output::report_map;

pub fn named_ideal(h: &NumericalSemigroup, name: &str) -> Option<ZIdeal> {
    Some(match name {
        "ring" => ZIdeal::ring(h),
        "maximal" => ZIdeal::maximal(h),
        "conductor" => ZIdeal::conductor(h),
        "canonical" => ZIdeal::canonical(h),
        "normalization" => ZIdeal::normalization(h),
        _ => return None,
    })
}

/// The least shift `E + z` with `z ≥ 0` that lies inside the ring.
///
/// Terminates: `z = c − min(E)` puts the whole ideal above the conductor.
pub fn embedded(e: &ZIdeal) -> ZIdeal {
    (-e.min().min(0)..)
        .map(|z| e.shift(z))
        .find(ZIdeal::is_contained_in_ring)
        .expect("some shift lies above the conductor")
}

fn split_call(fact: &str) -> Result<(&str, Vec<&str>), String> {
    match fact.find('(') {
        None => Ok((fact, Vec::new())),
        Some(open) => {
            let args = fact[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| format!("unbalanced parentheses in {fact:?}"))?;
            Ok((&fact[..open], args.split(',').map(str::trim).collect()))
        }
    }
}

pub fn evaluate(h: &NumericalSemigroup, fact: &str) -> Result<Value, String> {
    let (name, args) = split_call(fact.trim())?;
    let ideal = |i: usize| -> Result<ZIdeal, String> {
        let arg = args
            .get(i)
            .ok_or_else(|| format!("{name} needs an ideal argument"))?;
        named_ideal(h, arg).ok_or_else(|| format!("unknown ideal {arg:?}"))
    };
    let int = |i: usize| -> Result<i64, String> {
        let arg = args
            .get(i)
            .ok_or_else(|| format!("{name} needs an integer argument"))?;
        arg.parse().map_err(|_| format!("bad integer {arg:?}"))
    };
    let form = |e: ZIdeal| Value::from(e.to_string());

    if args.is_empty() {
        let report = report_map(&classify(h));
        if let Some(v) = report.get(name) {
            return Ok(v.clone());
        }
        let bidual = canonical_bidual_check(h);
        return Ok(match name {
            "e_minus_embdim" => Value::from(classify(h).e_minus_embdim()),
            "pseudo_frobenius" => Value::from(h.pseudo_frobenius()),
            "gaps" => Value::from(h.gaps().to_vec()),
            "conductor_power" => conductor_as_power(h).map_or(Value::Null, Value::from),
            "bidual_check_applies" => Value::from(bidual.applies),
            "bidual_check_sequence_exact" => Value::from(bidual.sequence_exact),
            "bidual_check_class_eq_m" => Value::from(bidual.bidual_class_eq_m),
            _ => match named_ideal(h, name) {
                Some(e) => form(e),
                None => return Err(format!("unknown fact {name:?}")),
            },
        });
    }

    Ok(match name {
        "dual" => form(ideal(0)?.dual()),
        "bidual" => form(ideal(0)?.bidual()),
        "trace" => form(ideal(0)?.trace()),
        "reflexive" => Value::from(ideal(0)?.is_reflexive()),
        "self_dual" => Value::from(ideal(0)?.is_self_dual()),
        "trace_ideal" => Value::from(ideal(0)?.is_trace_ideal()),
        "class" => form(ideal(0)?.class().representative().clone()),
        "colength" => Value::from(embedded(&ideal(0)?).colength().expect("embedded ideal")),
        "colon" => form(ideal(0)?.colon(&ideal(1)?).expect("same parent")),
        "maxlen" => maxlen(h, int(0)?).map_or(Value::Null, Value::from),
        "contains" => Value::from(h.contains(int(0)?)),
        "in_conductor" => Value::from(int(0)? >= h.conductor_number()),
        "hilbert_colength" => Value::from(hilbert_colength(h, nonnegative(int(0)?)?)),
        "mu_of_power" => Value::from(mu_of_power(h, nonnegative(int(0)?)?)),
        "colength_ideal_count" => {
            Value::from(colength_ideals(h, nonnegative(int(0)?)? as usize).len())
        }
        "colength_ideals_all_reflexive" => Value::from(
            colength_ideals(h, nonnegative(int(0)?)? as usize)
                .iter()
                .all(ZIdeal::is_reflexive),
        ),
        "colength_trace_ideals_reflexive" => Value::from(
            colength_ideals(h, nonnegative(int(0)?)? as usize)
                .iter()
                .filter(|e| e.is_trace_ideal())
                .all(ZIdeal::is_reflexive),
        ),
        "trace_ideals_up_to_colength" => {
            let k = nonnegative(int(0)?)? as usize;
            let mut forms: Vec<String> = (0..=k)
                .flat_map(|j| colength_ideals(h, j))
                .filter(ZIdeal::is_trace_ideal)
                .map(|e| e.to_string())
                .collect();
            forms.sort();
            Value::from(forms)
        }
        _ => return Err(format!("unknown fact {name:?}")),
    })
}

fn nonnegative(n: i64) -> Result<u32, String> {
    u32::try_from(n).map_err(|_| format!("expected a nonnegative integer, got {n}"))
}
