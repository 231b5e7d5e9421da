//! JSON assembly for instance reports.
//!
//! Schema per instance: `{"poset": <text>, "s": id, "variant": str,
//! "holds": bool, "failures": [...], "nonevasive": bool,
//! "certificate": {...}|null, "recursion": [...]}`. Extra keys may appear
//! but the listed ones are always present.

use serde_json::{json, Value};

use nonevasive::bw::{self, Witness};
use nonevasive::poset::FinitePoset;
use nonevasive::set::ElemSet;
use nonevasive::Certificate;

use crate::format::poset_to_text;

pub fn set_to_json(s: ElemSet) -> Value {
    Value::Array(s.iter().map(|e| json!(e)).collect())
}

pub fn witness_to_json(variant: &str, w: &Witness) -> Value {
    match *w {
        Witness::NoBound { x } => json!({
            "variant": variant,
            "kind": "no-bound",
            "x": x,
        }),
        Witness::MissingExtension { lower, upper } => json!({
            "variant": variant,
            "kind": "missing-extension",
            "lower": lower,
            "upper": upper,
        }),
    }
}

/// The full per-element report used by `check --json`.
pub fn instance_report(
    poset: &FinitePoset,
    report: &bw::BwReport,
    nonevasive: bool,
    certificate: Option<&Certificate>,
    recursion: Value,
) -> Value {
    let mut failures: Vec<Value> = Vec::new();
    for w in &report.corollary15_failures {
        failures.push(witness_to_json("corollary15", w));
    }
    for w in &report.theorem8_failures {
        failures.push(witness_to_json("theorem8", w));
    }
    for w in &report.bw_failures {
        failures.push(witness_to_json("bw", w));
    }
    json!({
        "poset": poset_to_text(poset),
        "s": report.s,
        "variant": report.variant_str(),
        "holds": report.corollary15 || report.theorem8,
        "bw": report.bw,
        "w": set_to_json(report.w_set),
        "u": set_to_json(report.u_set),
        "off_core": set_to_json(report.off_core),
        "r_candidates": set_to_json(report.r_candidates),
        "failures": failures,
        "nonevasive": nonevasive,
        "certificate": certificate.map(|c| serde_json::to_value(c).unwrap()),
        "recursion": recursion,
    })
}

/// A falsification record emitted by the verification harness; same schema
/// with the failing claim attached.
#[allow(clippy::too_many_arguments)]
pub fn falsification_report(
    poset: &FinitePoset,
    s: usize,
    variant: &str,
    holds: bool,
    claim: &str,
    details: &str,
    nonevasive: bool,
    certificate: Option<&Certificate>,
) -> Value {
    json!({
        "poset": poset_to_text(poset),
        "s": s,
        "variant": variant,
        "holds": holds,
        "claim": claim,
        "details": details,
        "failures": [],
        "nonevasive": nonevasive,
        "certificate": certificate.map(|c| serde_json::to_value(c).unwrap()),
        "recursion": [],
    })
}
