//! JSON reading and writing for diagrams and combinations.
//!
//! A diagram file is an object with `trivalent` (count), `legs` (labels,
//! `"*"` for unlabeled hair), `edges` (pairs `[v, w]`, whose stored order
//! orients the edge), and `cyclic` (one array of three edge references
//! per trivalent vertex). An edge reference is normally the edge index; a
//! self-loop's two ends are written `"e+"` and `"e-"` for the first and
//! second slot. A closed diagram may carry `beads`: edge index to
//! Laurent-polynomial string, read along the stored orientation.
//!
//! A combination file is an array of `{"coeff": "p/q", "diagram": …}`
//! terms, where `diagram` is either a diagram object (any presentation —
//! it is canonicalized, folding the antisymmetry sign into the
//! coefficient) or a lowercase-hex canonical encoding. Beaded terms
//! instead carry `"graph"` (hex) and `"class"` (integer coordinates), or
//! a diagram object with `beads`.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::beads::{beaded_class, expand_coordinates, BeadedDiagram, BeadedKey};
use crate::canon::DiagramKey;
use crate::diagram::{Diagram, LegLabel};
use crate::error::{DiagramError, EngineError};
use crate::laurent::LaurentPoly;
use crate::lincomb::{LinComb, Rational};

fn parse_err(what: &'static str, detail: impl Into<String>) -> DiagramError {
    DiagramError::Parse {
        what,
        detail: detail.into(),
    }
}

fn as_usize(v: &Value, what: &'static str) -> Result<usize, DiagramError> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| parse_err(what, format!("expected a nonnegative integer, got {v}")))
}

/// Parse `"p"` or `"p/q"` into an exact rational.
pub fn rational_from_str(s: &str) -> Result<Rational, DiagramError> {
    Rational::from_str(s.trim())
        .map_err(|e| parse_err("rational coefficient", format!("{s:?}: {e}")))
}

pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

fn resolve_edge_ref(d_edges: &[(usize, usize)], v: usize, r: &Value) -> Result<usize, DiagramError> {
    let bad = |detail: String| parse_err("cyclic order entry", detail);
    let (e, slot): (usize, Option<usize>) = match r {
        Value::Number(n) => (
            n.as_u64().ok_or_else(|| bad(format!("bad edge index {n}")))? as usize,
            None,
        ),
        Value::String(s) => {
            let (num, slot) = match s.as_bytes().last() {
                Some(b'+') => (&s[..s.len() - 1], Some(0)),
                Some(b'-') => (&s[..s.len() - 1], Some(1)),
                _ => (s.as_str(), None),
            };
            let e: usize = num
                .parse()
                .map_err(|_| bad(format!("bad edge reference {s:?}")))?;
            (e, slot)
        }
        other => return Err(bad(format!("expected an edge reference, got {other}"))),
    };
    let &(a, b) = d_edges
        .get(e)
        .ok_or_else(|| bad(format!("edge {e} does not exist")))?;
    match slot {
        Some(0) if a == v => Ok(2 * e),
        Some(1) if b == v => Ok(2 * e + 1),
        Some(_) => Err(bad(format!("edge {e} does not point its marked end at vertex {v}"))),
        None if a == v && b == v => Err(bad(format!(
            "edge {e} is a self-loop at vertex {v}; write \"{e}+\" and \"{e}-\""
        ))),
        None if a == v => Ok(2 * e),
        None if b == v => Ok(2 * e + 1),
        None => Err(bad(format!("edge {e} is not incident to vertex {v}"))),
    }
}

/// Read a diagram object (without beads).
pub fn diagram_from_json(v: &Value) -> Result<Diagram, DiagramError> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err("diagram", "expected a JSON object"))?;
    let trivalent = as_usize(
        obj.get("trivalent")
            .ok_or_else(|| parse_err("diagram", "missing field `trivalent`"))?,
        "trivalent count",
    )?;
    let legs: Vec<LegLabel> = obj
        .get("legs")
        .and_then(Value::as_array)
        .map(|a| {
            a.iter()
                .map(|l| {
                    l.as_str()
                        .map(|s| {
                            if s == "*" {
                                LegLabel::Hair
                            } else {
                                LegLabel::named(s)
                            }
                        })
                        .ok_or_else(|| parse_err("leg label", format!("expected a string, got {l}")))
                })
                .collect::<Result<_, _>>()
        })
        .unwrap_or_else(|| Ok(Vec::new()))?;
    let edges: Vec<(usize, usize)> = obj
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("diagram", "missing or non-array field `edges`"))?
        .iter()
        .map(|pair| {
            let ends = pair
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| parse_err("edge", format!("expected [v, w], got {pair}")))?;
            Ok((
                as_usize(&ends[0], "edge endpoint")?,
                as_usize(&ends[1], "edge endpoint")?,
            ))
        })
        .collect::<Result<_, DiagramError>>()?;
    let empty = Map::new();
    let cyclic_obj = obj
        .get("cyclic")
        .map(|c| {
            c.as_object()
                .ok_or_else(|| parse_err("diagram", "field `cyclic` must be an object"))
        })
        .unwrap_or(Ok(&empty))?;
    let mut cyclic = Vec::with_capacity(trivalent);
    for v_id in 0..trivalent {
        let entry = cyclic_obj
            .get(&v_id.to_string())
            .ok_or(DiagramError::IncompleteCyclicOrder { vertex: v_id })?;
        let refs = entry
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or(DiagramError::IncompleteCyclicOrder { vertex: v_id })?;
        let mut triple = [0usize; 3];
        for (slot, r) in refs.iter().enumerate() {
            triple[slot] = resolve_edge_ref(&edges, v_id, r)?;
        }
        cyclic.push(triple);
    }
    Diagram::new(trivalent, legs, edges, cyclic)
}

/// Write a diagram object (without beads).
pub fn diagram_to_json(d: &Diagram) -> Value {
    let legs: Vec<Value> = d
        .leg_labels()
        .iter()
        .map(|l| match l {
            LegLabel::Hair => json!("*"),
            LegLabel::Named(s) => json!(s),
        })
        .collect();
    let edges: Vec<Value> = d.edges().iter().map(|&(a, b)| json!([a, b])).collect();
    let mut cyclic = Map::new();
    for (v, triple) in d.cyclic_orders().iter().enumerate() {
        let refs: Vec<Value> = triple
            .iter()
            .map(|&h| {
                let e = h / 2;
                let (a, b) = d.edges()[e];
                if a == b {
                    json!(format!("{e}{}", if h % 2 == 0 { "+" } else { "-" }))
                } else {
                    json!(e)
                }
            })
            .collect();
        cyclic.insert(v.to_string(), Value::Array(refs));
    }
    json!({
        "trivalent": d.trivalent_count(),
        "legs": legs,
        "edges": edges,
        "cyclic": cyclic,
    })
}

/// Read a diagram object together with its optional `beads` field.
pub fn beaded_from_json(v: &Value) -> Result<BeadedDiagram, EngineError> {
    let diagram = diagram_from_json(v)?;
    let mut beads: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
    if let Some(map) = v.get("beads") {
        let map = map
            .as_object()
            .ok_or_else(|| parse_err("beads", "expected an object of edge index to polynomial"))?;
        for (key, poly) in map {
            let edge: usize = key
                .parse()
                .map_err(|_| parse_err("beads", format!("bad edge index {key:?}")))?;
            let text = poly
                .as_str()
                .ok_or_else(|| parse_err("beads", format!("expected a polynomial string, got {poly}")))?;
            beads.insert(edge, LaurentPoly::parse(text)?);
        }
    }
    BeadedDiagram::new(diagram, beads)
}

/// Read a combination of classical diagrams. Each term's `diagram` is an
/// object (canonicalized, sign folded into the coefficient) or canonical
/// hex.
pub fn lincomb_from_json(v: &Value) -> Result<LinComb<DiagramKey>, EngineError> {
    let terms = v
        .as_array()
        .ok_or_else(|| parse_err("combination", "expected a JSON array of terms"))?;
    let mut out = LinComb::zero();
    for term in terms {
        let coeff = rational_from_str(
            term.get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| parse_err("combination term", "missing string field `coeff`"))?,
        )?;
        let dv = term
            .get("diagram")
            .ok_or_else(|| parse_err("combination term", "missing field `diagram`"))?;
        match dv {
            Value::String(hexstr) => {
                out.add_term(DiagramKey::from_hex(hexstr)?, coeff);
            }
            _ => {
                let d = diagram_from_json(dv)?;
                out.add_scaled(&crate::relations::diagram_class(&d), &coeff);
            }
        }
    }
    Ok(out)
}

/// Write a combination of classical diagrams, terms in canonical order,
/// diagrams as canonical hex.
pub fn lincomb_to_json(v: &LinComb<DiagramKey>) -> Value {
    Value::Array(
        v.terms()
            .map(|(key, coeff)| {
                json!({
                    "coeff": rational_to_string(coeff),
                    "diagram": key.to_hex(),
                })
            })
            .collect(),
    )
}

/// Read a combination of beaded diagrams. A term's diagram is a diagram
/// object with optional `beads` (expanded multilinearly), or a pair of
/// `graph` (closed-diagram hex) and `class` (integer coordinates), which
/// is re-canonicalized rather than trusted.
pub fn beaded_lincomb_from_json(v: &Value) -> Result<LinComb<BeadedKey>, EngineError> {
    let terms = v
        .as_array()
        .ok_or_else(|| parse_err("beaded combination", "expected a JSON array of terms"))?;
    let mut out = LinComb::zero();
    for term in terms {
        let coeff = rational_from_str(
            term.get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| parse_err("combination term", "missing string field `coeff`"))?,
        )?;
        if let Some(graph) = term.get("graph") {
            let hexstr = graph
                .as_str()
                .ok_or_else(|| parse_err("combination term", "field `graph` must be hex"))?;
            let key = DiagramKey::from_hex(hexstr)?;
            let rep = key.decode()?;
            let class: Vec<i64> = term
                .get("class")
                .and_then(Value::as_array)
                .ok_or_else(|| parse_err("combination term", "missing array field `class`"))?
                .iter()
                .map(|c| {
                    c.as_i64()
                        .ok_or_else(|| parse_err("class coordinate", format!("expected an integer, got {c}")))
                })
                .collect::<Result<_, _>>()?;
            if class.len() != rep.loop_degree() {
                return Err(parse_err(
                    "combination term",
                    format!(
                        "class has {} coordinates but the graph has loop degree {}",
                        class.len(),
                        rep.loop_degree()
                    ),
                )
                .into());
            }
            let f = expand_coordinates(&rep, &class);
            out.add_scaled(&beaded_class(&rep, &f)?, &coeff);
        } else {
            let dv = term
                .get("diagram")
                .ok_or_else(|| parse_err("combination term", "missing field `diagram` or `graph`"))?;
            let bd = beaded_from_json(dv)?;
            out.add_scaled(&bd.expand_multilinear(), &coeff);
        }
    }
    Ok(out)
}

/// Write a beaded combination: terms in canonical order, each with the
/// graph hex and the class coordinates.
pub fn beaded_lincomb_to_json(v: &LinComb<BeadedKey>) -> Value {
    Value::Array(
        v.terms()
            .map(|(key, coeff)| {
                json!({
                    "coeff": rational_to_string(coeff),
                    "graph": key.graph().to_hex(),
                    "class": key.coords(),
                })
            })
            .collect(),
    )
}
