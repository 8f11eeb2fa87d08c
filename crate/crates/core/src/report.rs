//! JSON builders shared by the command line tool and the browser demo.
//! serde_json keeps object keys sorted, so equal inputs serialize to
//! identical bytes.

use serde_json::{json, Value};

use crate::enumerate::{ClassificationVerdict, EnumerationResult};
use crate::ideal::{RelativeIdeal, TraceReport};
use crate::semigroup::NumericalSemigroup;
use crate::verify::VerifyReport;

pub fn semigroup_json(h: &NumericalSemigroup) -> Value {
    json!({
        "gens": h.generators(),
        "conductor": h.conductor(),
        "gaps": h.gaps(),
    })
}

pub fn semigroup_detail_json(h: &NumericalSemigroup) -> Value {
    json!({
        "gens": h.generators(),
        "conductor": h.conductor(),
        "frobenius": h.frobenius(),
        "genus": h.genus(),
        "multiplicity": h.multiplicity(),
        "non_gap_count": h.non_gap_count(),
        "symmetric": h.is_symmetric(),
        "gaps": h.gaps(),
    })
}

pub fn gens_json(e: &RelativeIdeal<'_>) -> Value {
    json!(e.min_gens())
}

/// Report for a semigroup on its own: invariants plus its two special ideals.
pub fn analyze_semigroup_json(h: &NumericalSemigroup) -> Value {
    json!({
        "semigroup": semigroup_detail_json(h),
        "canonical_ideal": gens_json(&h.canonical_ideal()),
        "conductor_ideal": gens_json(&h.conductor_ideal()),
    })
}

pub fn trace_report_json(h: &NumericalSemigroup, r: &TraceReport<'_>) -> Value {
    json!({
        "semigroup": semigroup_detail_json(h),
        "ideal": {"gens": r.ideal.min_gens()},
        "trace": gens_json(&r.trace),
        "is_trace": r.is_trace,
        "subtrace": r.subtrace.as_ref().map(gens_json),
        "contains_conductor": r.contains_conductor,
        "reflexive_hull": gens_json(&r.reflexive_hull),
        "is_reflexive": r.is_reflexive,
        "integral_closure": gens_json(&r.integral_closure),
        "is_integrally_closed": r.is_integrally_closed,
    })
}

/// `proper` drops H itself (generator list [0]) from the trace ideal side.
pub fn enumeration_json(
    h: &NumericalSemigroup,
    r: &EnumerationResult<'_>,
    proper: bool,
    with_traces: bool,
    with_oversemigroups: bool,
) -> Value {
    let mut out = serde_json::Map::new();
    out.insert("semigroup".into(), semigroup_json(h));
    if with_traces {
        let keep: Vec<usize> = (0..r.trace_ideals.len())
            .filter(|&i| !proper || r.trace_ideals[i].min_gens() != [0])
            .collect();
        let traces: Vec<Value> = keep.iter().map(|&i| gens_json(&r.trace_ideals[i])).collect();
        out.insert("trace_ideal_count".into(), json!(traces.len()));
        out.insert("trace_ideals".into(), json!(traces));
        if with_oversemigroups {
            let pairing: Vec<Value> = keep.iter().map(|&i| json!(r.pairing[i])).collect();
            out.insert("pairing".into(), json!(pairing));
            out.insert("injective".into(), json!(r.injective));
            out.insert("surjective".into(), json!(r.surjective));
            out.insert("bijective".into(), json!(r.bijective));
            out.insert(
                "all_integrally_closed".into(),
                json!(r.all_integrally_closed),
            );
        }
    }
    if with_oversemigroups {
        let overs: Vec<Value> = r
            .oversemigroups
            .iter()
            .map(|t| json!(t.generators()))
            .collect();
        out.insert("oversemigroup_count".into(), json!(overs.len()));
        out.insert("oversemigroups".into(), json!(overs));
    }
    Value::Object(out)
}

pub fn classification_json(h: &NumericalSemigroup, v: &ClassificationVerdict) -> Value {
    json!({
        "semigroup": semigroup_json(h),
        "finite_overrings": v.finite_overrings,
        "gorenstein_small": v.gorenstein_small.label(),
        "family": v.matched_family.map(|f| f.label()),
        "note": v.note,
    })
}

pub fn verify_json(r: &VerifyReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "cases": c.cases,
                "failed": c.failed,
                "examples": c.examples,
            })
        })
        .collect();
    json!({
        "genus_max": r.genus_max,
        "random_per_semigroup": r.random_per_semigroup,
        "seed": r.seed,
        "semigroups": r.semigroups,
        "passed": r.passed(),
        "total_cases": r.total_cases(),
        "total_failed": r.total_failed(),
        "checks": checks,
    })
}
