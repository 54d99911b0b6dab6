//! The algebra Λ of totally antisymmetric three-legged elements, acting
//! on diagrams by insertion at trivalent vertices.
//!
//! An element of Λ is a combination of connected diagrams with legs
//! named 1, 2, 3 (and at least one trivalent vertex) that changes sign
//! under every leg transposition, modulo the sector's IHX relations.
//! Inserting such an element at a trivalent vertex of another diagram —
//! matching the three legs against the vertex's cyclic order — is then
//! independent of all the choices in the matching, and independent of
//! the chosen vertex for connected hosts; antisymmetry is what makes the
//! action well defined, so constructors certify it and reject anything
//! else.
//!
//! The single-vertex element Y is the unit of the action. The generators
//! provided here are t (a triangle on the Y, with a second presentation:
//! half of a bubble on the Y-stem) and the ladders x_n (n rungs between
//! two rails capped by legs 1 and 2, with leg 3 on the joining vertex);
//! x₁ equals t.

use std::collections::BTreeMap;

use crate::canon::DiagramKey;
use crate::diagram::{Diagram, LegLabel};
use crate::error::EngineError;
use crate::lincomb::{rat_frac, LinComb};
use crate::relations::{diagram_class, QuotientCache, SectorSpec};

/// The six permutations of the leg names, with signs.
const S3: [([&str; 3], i64); 6] = [
    (["1", "2", "3"], 1),
    (["2", "1", "3"], -1),
    (["3", "2", "1"], -1),
    (["1", "3", "2"], -1),
    (["2", "3", "1"], 1),
    (["3", "1", "2"], 1),
];

/// Apply a leg-name permutation to every term: the term whose legs read
/// 1, 2, 3 is relabeled to read σ(1), σ(2), σ(3).
pub fn relabel_classes(v: &LinComb<DiagramKey>, sigma: &[&str; 3]) -> LinComb<DiagramKey> {
    let mut out = LinComb::zero();
    for (key, coeff) in v.terms() {
        let rep = key.decode().expect("canonical keys decode");
        let moved = rep.relabel_legs(|name| match name {
            "1" => sigma[0].to_owned(),
            "2" => sigma[1].to_owned(),
            "3" => sigma[2].to_owned(),
            other => other.to_owned(),
        });
        out.add_scaled(&diagram_class(&moved), coeff);
    }
    out
}

/// A certified element of Λ: a combination of three-legged connected
/// diagrams that is antisymmetric under leg permutations modulo IHX.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaElement {
    value: LinComb<DiagramKey>,
}

impl LambdaElement {
    pub fn value(&self) -> &LinComb<DiagramKey> {
        &self.value
    }

    /// Diagram degrees occurring in the element, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.value.terms().map(|(k, _)| k.degree()).collect();
        out.dedup();
        out
    }

    /// Certify and wrap a combination. Every term must be connected with
    /// legs exactly 1, 2, 3 and a trivalent vertex (`NotInF3`), and each
    /// degree piece must change sign under every odd leg permutation
    /// modulo the sector's relations (`NotAntisymmetric`).
    pub fn certified(
        value: LinComb<DiagramKey>,
        cache: &QuotientCache,
    ) -> Result<Self, EngineError> {
        let mut degrees: BTreeMap<usize, LinComb<DiagramKey>> = BTreeMap::new();
        for (key, coeff) in value.terms() {
            let rep = key.decode()?;
            let named: Vec<&str> = rep
                .leg_labels()
                .iter()
                .filter_map(|l| match l {
                    LegLabel::Named(s) => Some(s.as_str()),
                    LegLabel::Hair => None,
                })
                .collect();
            let mut sorted = named.clone();
            sorted.sort_unstable();
            if sorted != ["1", "2", "3"]
                || named.len() != rep.leg_labels().len()
                || !rep.is_connected()
                || rep.trivalent_count() == 0
            {
                return Err(EngineError::NotInF3);
            }
            degrees
                .entry(key.degree())
                .or_default()
                .add_term(key.clone(), coeff.clone());
        }
        for (degree, piece) in &degrees {
            let q = cache.get(SectorSpec::named(*degree, 3))?;
            for (sigma, sign) in S3 {
                let mut moved = relabel_classes(piece, &sigma);
                moved.add_scaled(piece, &crate::lincomb::rat(-sign));
                if !q.is_zero(&moved) {
                    return Err(EngineError::NotAntisymmetric {
                        permutation: format!("{} {} {}", sigma[0], sigma[1], sigma[2]),
                    });
                }
            }
        }
        Ok(LambdaElement { value })
    }
}

/// Project a three-legged combination onto its antisymmetric part:
/// the signed average over all six leg permutations.
pub fn antisymmetrize(
    v: &LinComb<DiagramKey>,
    cache: &QuotientCache,
) -> Result<LambdaElement, EngineError> {
    let mut out = LinComb::zero();
    for (sigma, sign) in S3 {
        out.add_scaled(&relabel_classes(v, &sigma), &rat_frac(sign, 6));
    }
    LambdaElement::certified(out, cache)
}

/// The one-vertex element: legs 1, 2, 3 in cyclic order around a single
/// trivalent vertex. Inserting it changes nothing — it is the unit.
pub fn unit_y() -> Diagram {
    Diagram::new(
        1,
        vec![
            LegLabel::named("1"),
            LegLabel::named("2"),
            LegLabel::named("3"),
        ],
        vec![(0, 1), (0, 2), (0, 3)],
        vec![[0, 2, 4]],
    )
    .expect("the unit element is a valid diagram")
}

/// The unit of Λ, certified.
pub fn unit(cache: &QuotientCache) -> Result<LambdaElement, EngineError> {
    LambdaElement::certified(diagram_class(&unit_y()), cache)
}

/// First stored presentation of t: a triangle with one leg at each corner.
pub fn t_triangle() -> Diagram {
    Diagram::new(
        3,
        vec![
            LegLabel::named("1"),
            LegLabel::named("2"),
            LegLabel::named("3"),
        ],
        vec![(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)],
        vec![[6, 5, 0], [8, 1, 2], [10, 3, 4]],
    )
    .expect("triangle presentation is valid")
}

/// Second stored presentation support: a bubble of two parallel edges on
/// the stem of a Y. Half of its class equals the triangle's.
pub fn t_bubbled() -> Diagram {
    Diagram::new(
        3,
        vec![
            LegLabel::named("1"),
            LegLabel::named("2"),
            LegLabel::named("3"),
        ],
        vec![(0, 1), (0, 1), (1, 2), (2, 3), (2, 4), (0, 5)],
        vec![[10, 0, 2], [4, 1, 3], [5, 6, 8]],
    )
    .expect("bubbled presentation is valid")
}

/// The degree-3 generator t of Λ, in its triangle presentation.
pub fn builtin_t(cache: &QuotientCache) -> Result<LambdaElement, EngineError> {
    LambdaElement::certified(diagram_class(&t_triangle()), cache)
}

/// The ladder generator x_n: two rails of n vertices joined by n rungs,
/// capped by legs 1 and 2, with leg 3 on the vertex joining the rails.
/// x₁ is the triangle t; x_n has degree n + 2.
pub fn builtin_x(n: usize, cache: &QuotientCache) -> Result<LambdaElement, EngineError> {
    assert!(n >= 1, "ladders start at one rung");
    let degree = n + 2;
    let cap = cache.limits().max_lambda_degree;
    if degree > cap {
        return Err(EngineError::CapExceeded {
            requested: degree,
            cap,
        });
    }
    let t = 2 * n + 1; // joining vertex + two rails of n
    let a = |i: usize| i; // a_1..a_n are vertices 1..n
    let b = |i: usize| n + i; // b_1..b_n follow
    let mut edges: Vec<(usize, usize)> = vec![(0, a(1)), (0, b(1))];
    for i in 1..n {
        edges.push((a(i), a(i + 1)));
        edges.push((b(i), b(i + 1)));
    }
    let rung_base = edges.len();
    for i in 1..=n {
        edges.push((a(i), b(i)));
    }
    let leg1 = edges.len();
    edges.push((a(n), t + 0));
    let leg2 = edges.len();
    edges.push((b(n), t + 1));
    let leg3 = edges.len();
    edges.push((0, t + 2));

    let mut cyclic = vec![[0usize; 3]; t];
    cyclic[0] = [2 * leg3, 2 * 0, 2 * 1]; // (leg 3, toward a-rail, toward b-rail)
    for i in 1..=n {
        // Halves pointing back toward the joining vertex and on toward
        // the leg end, along each rail.
        let a_prev = if i == 1 { 1 } else { 2 * (2 * (i - 1)) + 1 };
        let b_prev = if i == 1 { 3 } else { 2 * (2 * (i - 1) + 1) + 1 };
        let a_next = if i == n { 2 * leg1 } else { 2 * (2 * i) };
        let b_next = if i == n { 2 * leg2 } else { 2 * (2 * i + 1) };
        let rung = 2 * (rung_base + i - 1);
        cyclic[a(i)] = [a_prev, rung, a_next];
        cyclic[b(i)] = [b_prev, rung + 1, b_next];
    }
    let ladder = Diagram::new(
        t,
        vec![
            LegLabel::named("1"),
            LegLabel::named("2"),
            LegLabel::named("3"),
        ],
        edges,
        cyclic,
    )
    .expect("ladder presentation is valid");
    LambdaElement::certified(diagram_class(&ladder), cache)
}

/// Glue one three-legged diagram into a host at a trivalent vertex: leg
/// i is matched to the i-th half-edge at the vertex, counting around the
/// cyclic order from the least half-edge id.
fn glue_one(tau: &Diagram, d: &Diagram, v: usize) -> Diagram {
    let td = d.trivalent_count();
    let tt = tau.trivalent_count();
    let ed = d.edges().len();
    let cyc = d.cyclic_orders()[v];
    let start = (0..3).min_by_key(|&i| cyc[i]).expect("three halves");
    let host_glue = [cyc[start], cyc[(start + 1) % 3], cyc[(start + 2) % 3]];
    let mut tau_glue = [usize::MAX; 3];
    for (pos, label) in tau.leg_labels().iter().enumerate() {
        let leg_vertex = tt + pos;
        let half = tau.incident_half_edges(leg_vertex)[0];
        let i: usize = match label {
            LegLabel::Named(s) => s.parse().expect("legs named 1, 2, 3"),
            LegLabel::Hair => unreachable!("certified elements have named legs"),
        };
        tau_glue[i - 1] = half;
    }
    // Combined half-edge ids: host halves keep their ids, inserted ones
    // are offset. Each host glue half is sewn to the matching leg half:
    // the two edge fragments concatenate into one edge of the result.
    let mut sewn: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..3 {
        let x = host_glue[i];
        let y = tau_glue[i] + 2 * ed;
        sewn.insert(x, y);
        sewn.insert(y, x);
    }
    let vert_of = |x: usize| -> usize {
        if x < 2 * ed {
            let u = d.endpoint(x);
            if u < v {
                u
            } else if u < td {
                u - 1
            } else {
                u - 1 + tt
            }
        } else {
            td - 1 + tau.endpoint(x - 2 * ed)
        }
    };
    let total_halves = 2 * ed + 2 * tau.edges().len();
    let mut replace: BTreeMap<usize, usize> = BTreeMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for x in 0..total_halves {
        if sewn.contains_key(&x) || replace.contains_key(&x) {
            continue;
        }
        // Walk from this free end across sewn joints to the far free end.
        let mut y = x ^ 1;
        while let Some(&z) = sewn.get(&y) {
            y = z ^ 1;
        }
        let j = edges.len();
        edges.push((vert_of(x), vert_of(y)));
        replace.insert(x, 2 * j);
        replace.insert(y, 2 * j + 1);
    }
    let mut cyclic = vec![[0usize; 3]; td - 1 + tt];
    for u in 0..td {
        if u == v {
            continue;
        }
        let target = if u < v { u } else { u - 1 };
        cyclic[target] = d.cyclic_orders()[u].map(|h| replace[&h]);
    }
    for w in 0..tt {
        cyclic[td - 1 + w] = tau.cyclic_orders()[w].map(|g| replace[&(g + 2 * ed)]);
    }
    Diagram::new(td - 1 + tt, d.leg_labels().to_vec(), edges, cyclic)
        .expect("gluing preserves validity")
}

/// Insert a Λ-element at a trivalent vertex of a host diagram. The result
/// is independent of the vertex for connected hosts, modulo relations.
pub fn insert(
    lambda: &LambdaElement,
    d: &Diagram,
    v: usize,
) -> Result<LinComb<DiagramKey>, EngineError> {
    if v >= d.trivalent_count() {
        return Err(EngineError::NotTrivalent { vertex: v });
    }
    let mut out = LinComb::zero();
    for (key, coeff) in lambda.value.terms() {
        let tau = key.decode()?;
        out.add_scaled(&diagram_class(&glue_one(&tau, d, v)), coeff);
    }
    Ok(out)
}

/// The product in Λ: insert `a` at the first trivalent vertex of every
/// term of `b`. Λ is commutative, so the choice of factor order and of
/// vertex only moves the result by relations; the output is certified.
pub fn lambda_mult(
    a: &LambdaElement,
    b: &LambdaElement,
    cache: &QuotientCache,
) -> Result<LambdaElement, EngineError> {
    let mut out = LinComb::zero();
    for (key, coeff) in b.value.terms() {
        let host = key.decode()?;
        out.add_scaled(&insert(a, &host, 0)?, coeff);
    }
    LambdaElement::certified(out, cache)
}

/// Decide whether two combinations agree modulo the relations of one
/// sector. Errors with `DegreeMismatch` when a term lies outside it.
pub fn verify_scalar_relation(
    lhs: &LinComb<DiagramKey>,
    rhs: &LinComb<DiagramKey>,
    sector: SectorSpec,
    cache: &QuotientCache,
) -> Result<bool, EngineError> {
    let mut diff = lhs.clone();
    diff.sub(rhs);
    for (key, _) in diff.terms() {
        let rep = key.decode()?;
        if rep.degree() != sector.degree || rep.leg_multiset() != sector.legs {
            return Err(EngineError::DegreeMismatch {
                detail: format!(
                    "term of degree {} with {} legs outside the sector of degree {}",
                    rep.degree(),
                    rep.leg_labels().len(),
                    sector.degree
                ),
            });
        }
    }
    let q = cache.get(sector)?;
    Ok(q.is_zero(&diff))
}
