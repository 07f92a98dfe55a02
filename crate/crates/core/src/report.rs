//! JSON renderings of results. Rationals appear as exact `"p/q"` strings
//! next to a 12-significant-digit decimal.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::acyclicity::{ReductionStep, ReductionTrace, Removed};
use crate::chainalg::CoefficientRing;
use crate::embedded::HomologyGroup;
use crate::hypergraph::Hypergraph;
use crate::indices::IndexReport;
use crate::mayer_vietoris::ExactnessReport;
use crate::persistence::{PersistenceDiagram, PersistentMvReport};
use crate::rational::{to_decimal_string, to_fraction_string};

fn decimal(x: &BigRational) -> Value {
    to_decimal_string(x)
        .parse::<f64>()
        .ok()
        .and_then(serde_json::Number::from_f64)
        .map_or(Value::Null, Value::Number)
}

/// `{"exact": "p/q", "decimal": 0.123}`.
pub fn rational(x: &BigRational) -> Value {
    json!({ "exact": to_fraction_string(x), "decimal": decimal(x) })
}

fn integer(x: &BigInt) -> Value {
    x.to_i64().map_or_else(|| Value::String(x.to_string()), Value::from)
}

pub fn homology(ring: CoefficientRing, groups: &[HomologyGroup]) -> Value {
    let groups: Vec<Value> = groups
        .iter()
        .map(|g| {
            json!({
                "degree": g.degree,
                "rank": g.free_rank,
                "torsion": g.torsion.iter().map(integer).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "coefficients": ring.to_string(), "groups": groups })
}

pub fn exactness(report: &ExactnessReport) -> Value {
    let mut v = serde_json::to_value(report).expect("plain data");
    v["all_exact"] = Value::Bool(report.hypothesis_satisfied && report.all_exact());
    v
}

pub fn diagrams(diagrams: &[PersistenceDiagram]) -> Value {
    let intervals: Vec<Value> = diagrams
        .iter()
        .flat_map(|d| {
            d.intervals.iter().map(move |iv| {
                json!({
                    "degree": d.degree,
                    "birth": to_fraction_string(&iv.birth),
                    "birth_decimal": decimal(&iv.birth),
                    "death": iv.death.as_ref().map_or_else(|| "inf".to_string(), to_fraction_string),
                    "death_decimal": iv.death.as_ref().map_or(Value::Null, decimal),
                    "multiplicity": iv.multiplicity,
                })
            })
        })
        .collect();
    json!({ "intervals": intervals })
}

pub fn persistent_mv(report: &PersistentMvReport) -> Value {
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|r| {
            json!({
                "radius": r.radius.as_ref().map_or(Value::Null, rational),
                "hypothesis_satisfied": r.hypothesis_satisfied,
                "exact": r.exact(),
                "positions": r.positions,
            })
        })
        .collect();
    json!({
        "passed": report.passed(),
        "rows": rows,
        "squares": report.squares,
    })
}

pub fn index(report: &IndexReport) -> Value {
    let mut v = json!({
        "kind": report.kind,
        "value": rational(&report.value),
        "terms": report.terms.iter().map(rational).collect::<Vec<_>>(),
    });
    if let Some(tail) = &report.tail {
        v["tail"] = rational(tail);
    }
    if let Some(s) = &report.sampling {
        v["sampling"] = serde_json::to_value(s).expect("plain data");
    }
    v
}

fn step(s: &ReductionStep) -> Value {
    let (kind, removed) = match &s.removed {
        Removed::Vertex(v) => ("vertex", json!(v.token())),
        Removed::Edge(e) => ("edge", json!(e.vertices().iter().map(|v| v.token()).collect::<Vec<_>>())),
    };
    json!({
        "op": s.op.to_string(),
        "kind": kind,
        "removed": removed,
        "from_edge": s.from_edge.as_ref().map(|e| e.vertices().iter().map(|v| v.token()).collect::<Vec<_>>()),
    })
}

pub fn trace(t: &ReductionTrace) -> Value {
    json!({
        "steps": t.steps.iter().map(step).collect::<Vec<_>>(),
        "final": hypergraph_edges(&t.result),
    })
}

fn hypergraph_edges(h: &Hypergraph) -> Value {
    json!(h
        .edges()
        .map(|e| e.vertices().iter().map(|v| v.token()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

pub fn info(h: &Hypergraph) -> Value {
    json!({
        "vertices": h.universe().len(),
        "edges": h.edge_count(),
        "dimension": h.dimension().map_or(-1, |d| d as i64),
        "edge_counts": h.edge_counts(),
        "simplicial": h.is_simplicial(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_rendering() {
        let x = BigRational::new(5.into(), 8.into());
        assert_eq!(rational(&x).to_string(), r#"{"decimal":0.625,"exact":"5/8"}"#);
    }

    #[test]
    fn homology_rendering() {
        let g = HomologyGroup {
            degree: 0,
            free_rank: 2,
            torsion: vec![BigInt::from(2)],
            ring: CoefficientRing::Integers,
        };
        assert_eq!(
            homology(CoefficientRing::Integers, &[g]).to_string(),
            r#"{"coefficients":"Z","groups":[{"degree":0,"rank":2,"torsion":[2]}]}"#
        );
    }
}
