//! JSON reports shared by the command-line tool and the browser demo.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::Result;
use crate::germ::GermSeries;
use crate::lattice::Point;
use crate::newton::{nondegeneracy_check, zeta_full_trace, DiagramFacet, NondegeneracyReport, Verdict, ZetaTrace};
use crate::zeta::FactoredZeta;

fn points_value(points: &[Point]) -> Value {
    let int = |x: &BigInt| i64::try_from(x).map_or_else(|_| json!(x.to_string()), |v| json!(v));
    Value::Array(points.iter().map(|p| Value::Array(p.iter().map(int).collect())).collect())
}

fn facet_json(f: &DiagramFacet) -> Result<Value> {
    let exponent = f.exponent()?;
    Ok(json!({
        "normal": f.normal,
        "m": f.m,
        "nvol": f.nvol,
        "sign": exponent.signum(),
        "exponent": exponent,
        "vertices": serde_json::to_value(&f.face)?["vertices"],
        "factor": f.factor()?.to_string(),
    }))
}

/// Checks the bookkeeping of a trace: the leading factor is `1 − t`, the
/// product of the parts is the total, and the torus part is the last one.
pub fn trace_is_consistent(trace: &ZetaTrace) -> bool {
    let product = trace
        .contributions
        .iter()
        .fold(trace.leading.clone(), |acc, c| acc.mul(&c.zeta));
    trace.leading == FactoredZeta::factor(1, 1).expect("m = 1 is valid")
        && product == trace.full
        && trace.contributions.last().map(|c| &c.zeta) == Some(&trace.torus)
        && trace.contributions.iter().all(|c| {
            c.facets
                .iter()
                .all(|f| f.m >= 1 && f.nvol >= 1 && f.normal.is_strictly_positive())
        })
}

/// One-word summary: `verified`, `counterexample` or `unchecked`.
pub fn nondegeneracy_status(report: &NondegeneracyReport) -> &'static str {
    if report.has_counterexample() {
        "counterexample"
    } else if report.unchecked() > 0 {
        "unchecked"
    } else {
        "verified"
    }
}

/// Human-readable warnings for unchecked faces and counterexamples.
pub fn nondegeneracy_warnings(report: &NondegeneracyReport) -> Vec<String> {
    report
        .faces
        .iter()
        .filter_map(|f| match &f.verdict {
            Verdict::Verified => None,
            Verdict::Unchecked { dim } => Some(format!(
                "face with normal {} has dimension {dim}; non-degeneracy not checked there",
                f.normal
            )),
            Verdict::CounterexampleFound(_) => Some(format!(
                "face with normal {} is degenerate; the formula is not guaranteed",
                f.normal
            )),
        })
        .collect()
}

pub fn nondegeneracy_json(report: &NondegeneracyReport) -> Result<Value> {
    Ok(json!({
        "status": nondegeneracy_status(report),
        "faces": serde_json::to_value(&report.faces)?,
        "warnings": nondegeneracy_warnings(report),
    }))
}

/// Both zeta-functions with the non-degeneracy report.
pub fn zeta_json(germ: &GermSeries) -> Result<Value> {
    let trace = zeta_full_trace(germ)?;
    let report = nondegeneracy_check(germ)?;
    Ok(json!({
        "germ": germ.to_string(),
        "vars": germ.vars(),
        "torus": trace.torus,
        "full": trace.full,
        "nondegeneracy": nondegeneracy_json(&report)?,
    }))
}

/// Per index set: restricted support, facets and their factors.
pub fn diagram_json(germ: &GermSeries) -> Result<Value> {
    let trace = zeta_full_trace(germ)?;
    diagram_json_from_trace(germ, &trace)
}

pub fn diagram_json_from_trace(germ: &GermSeries, trace: &ZetaTrace) -> Result<Value> {
    let mut sets = Vec::new();
    for c in &trace.contributions {
        let names: Vec<&str> = c.index_set.members().iter().map(|&i| germ.vars()[i].as_str()).collect();
        sets.push(json!({
            "index_set": c.index_set,
            "variables": names,
            "restricted_support": points_value(&c.restricted_support),
            "facets": c.facets.iter().map(facet_json).collect::<Result<Vec<_>>>()?,
            "zeta": c.zeta,
        }));
    }
    Ok(json!({
        "germ": germ.to_string(),
        "vars": germ.vars(),
        "leading": trace.leading,
        "index_sets": sets,
        "torus": trace.torus,
        "full": trace.full,
    }))
}

pub fn check_json(germ: &GermSeries) -> Result<Value> {
    let report = nondegeneracy_check(germ)?;
    Ok(json!({
        "germ": germ.to_string(),
        "vars": germ.vars(),
        "nondegeneracy": nondegeneracy_json(&report)?,
    }))
}
