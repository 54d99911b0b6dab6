//! Beads on closed diagrams as integer 1-cochains, modulo the PUSH moves.
//!
//! A monomial bead `b^n` on edge `e` is the integer `n` attached to the
//! stored orientation of `e` (first endpoint → second; reversing reads the
//! conjugate, so the value negates). Because every vertex of a closed
//! diagram is trivalent, pushing a bead across a vertex `v` adds the
//! coboundary of the indicator 0-cochain at `v`; the quotient of cochains
//! by all pushes is the first cohomology of the graph. The normal form
//! eliminates a deterministic spanning forest — breadth-first from the
//! least vertex of each component, edges in index order — leaving one
//! integer per co-tree edge: the coordinates of the class.
//!
//! Canonicalization transports the cochain along every minimal-encoding
//! isomorphism candidate of the underlying graph and keeps the
//! lexicographically least coordinate vector. Orientation flips negate the
//! carried value but contribute no antisymmetry sign — beads are
//! decorations, not orientation data — while the candidate's cyclic-order
//! parity is tracked exactly as for bare diagrams. A class is zero when
//! two candidates reach the least coordinates with opposite signs.
//!
//! Polynomial beads reduce to the monomial case by multilinearity:
//! [`BeadedDiagram::expand_multilinear`] distributes the product of the
//! edge polynomials into one monomial term per choice.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::One;

use crate::canon::{best_candidates, DiagramKey, Sign};
use crate::diagram::Diagram;
use crate::error::{DiagramError, EngineError};
use crate::laurent::LaurentPoly;
use crate::lincomb::{rat, LinComb, Rational};
use crate::relations::ihx_term_diagrams;

/// Canonical form of a beaded diagram: canonical graph encoding, the
/// cohomology-class coordinates on the canonical graph's co-tree edges,
/// and the antisymmetry sign of the input relative to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeadedForm {
    pub graph: DiagramKey,
    pub coords: Vec<i64>,
    pub sign: Sign,
}

impl BeadedForm {
    pub fn key(&self) -> BeadedKey {
        BeadedKey::new(&self.graph, &self.coords)
    }

    /// Gcd of the coordinates; 0 for the zero class.
    pub fn bead_degree(&self) -> u64 {
        bead_degree(&self.coords)
    }
}

/// Dictionary key for a canonical beaded class: the graph encoding, then
/// the coordinate count, then each coordinate in an order-preserving byte
/// encoding (so byte order refines coordinate order).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BeadedKey(Vec<u8>);

impl BeadedKey {
    pub fn new(graph: &DiagramKey, coords: &[i64]) -> Self {
        let mut bytes = graph.as_bytes().to_vec();
        bytes.extend_from_slice(&(coords.len() as u16).to_be_bytes());
        for &c in coords {
            bytes.extend_from_slice(&((c as u64) ^ (1 << 63)).to_be_bytes());
        }
        BeadedKey(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    fn graph_len(&self) -> usize {
        // Closed diagrams have no legs, so the graph part is fixed-size.
        let e = u16::from_be_bytes([self.0[4], self.0[5]]) as usize;
        6 + 4 * e
    }

    pub fn graph(&self) -> DiagramKey {
        DiagramKey::from_bytes(self.0[..self.graph_len()].to_vec())
    }

    pub fn coords(&self) -> Vec<i64> {
        let start = self.graph_len() + 2;
        self.0[start..]
            .chunks_exact(8)
            .map(|c| {
                let raw = u64::from_be_bytes(c.try_into().expect("8-byte chunk"));
                (raw ^ (1 << 63)) as i64
            })
            .collect()
    }

    pub fn bead_degree(&self) -> u64 {
        bead_degree(&self.coords())
    }

    pub fn loop_degree(&self) -> usize {
        (self.0.len() - self.graph_len() - 2) / 8
    }

    pub fn from_hex(s: &str) -> Result<Self, DiagramError> {
        let parse_err = |detail: &str| DiagramError::Parse {
            what: "beaded encoding",
            detail: detail.to_owned(),
        };
        let bytes = hex::decode(s.trim()).map_err(|e| DiagramError::Parse {
            what: "hex encoding",
            detail: e.to_string(),
        })?;
        if bytes.len() < 8 {
            return Err(parse_err("truncated"));
        }
        let key = BeadedKey(bytes);
        let graph = key.graph();
        if key.0.len() < key.graph_len() + 2 {
            return Err(parse_err("truncated"));
        }
        let rep = graph.decode()?;
        if !rep.is_closed() {
            return Err(parse_err("graph part has legs"));
        }
        let rank = u16::from_be_bytes([key.0[key.graph_len()], key.0[key.graph_len() + 1]]);
        if rank as usize != rep.loop_degree() {
            return Err(parse_err("coordinate count differs from the loop degree"));
        }
        if key.0.len() != key.graph_len() + 2 + 8 * rank as usize {
            return Err(parse_err("coordinate bytes have the wrong length"));
        }
        Ok(key)
    }
}

/// Gcd of the entries; 0 for the zero vector.
pub fn bead_degree(coords: &[i64]) -> u64 {
    coords
        .iter()
        .fold(0i64, |acc, &c| acc.gcd(&c))
        .unsigned_abs()
}

/// The coboundary of the indicator 0-cochain at `v`, as edge values along
/// stored orientations: +1 on edges into `v`, −1 on edges out of `v`, 0 on
/// self-loops.
pub fn coboundary_unit(d: &Diagram, v: usize) -> Vec<i64> {
    d.edges()
        .iter()
        .map(|&(a, b)| {
            if a == b {
                0
            } else if b == v {
                1
            } else if a == v {
                -1
            } else {
                0
            }
        })
        .collect()
}

/// One PUSH move: add the coboundary at `v` to the cochain. Generates the
/// relation the normal form quotients by.
pub fn push_move(d: &Diagram, f: &[i64], v: usize) -> Vec<i64> {
    assert_eq!(f.len(), d.edges().len(), "one bead exponent per edge");
    let delta = coboundary_unit(d, v);
    f.iter().zip(delta).map(|(&x, y)| x + y).collect()
}

/// Edge indices of the deterministic spanning forest: breadth-first from
/// the least unvisited vertex, scanning incident edges in index order.
fn spanning_forest(d: &Diagram) -> Vec<bool> {
    let n = d.vertex_count();
    let mut in_tree = vec![false; d.edges().len()];
    let mut visited = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for h in d.incident_half_edges(u) {
                let w = d.endpoint(Diagram::partner(h));
                if !visited[w] {
                    visited[w] = true;
                    in_tree[h / 2] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    in_tree
}

/// Coordinates of the cochain's class with respect to this presentation's
/// spanning forest: tree values are pushed to zero, and the remaining
/// co-tree values (in edge-index order) are returned. Two cochains have
/// equal coordinates iff they differ by PUSH moves.
pub fn normal_coordinates(d: &Diagram, f: &[i64]) -> Vec<i64> {
    assert_eq!(f.len(), d.edges().len(), "one bead exponent per edge");
    let in_tree = spanning_forest(d);
    let n = d.vertex_count();
    // Potentials g with g ≡ 0 on roots and f = δg on tree edges.
    let mut g = vec![0i64; n];
    let mut done = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if done[root] {
            continue;
        }
        done[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for h in d.incident_half_edges(u) {
                let e = h / 2;
                if !in_tree[e] {
                    continue;
                }
                let w = d.endpoint(Diagram::partner(h));
                if done[w] {
                    continue;
                }
                let (a, _) = d.edges()[e];
                // δg(e) = g(second) − g(first) must equal f(e).
                g[w] = if w == a { g[u] - f[e] } else { g[u] + f[e] };
                done[w] = true;
                queue.push_back(w);
            }
        }
    }
    d.edges()
        .iter()
        .enumerate()
        .filter(|&(e, _)| !in_tree[e])
        .map(|(e, &(a, b))| f[e] - (g[b] - g[a]))
        .collect()
}

/// The canonical cochain with the given class coordinates: zero on the
/// spanning forest, the coordinates on the co-tree edges in index order.
/// Inverse to [`normal_coordinates`] on normal forms.
pub fn expand_coordinates(d: &Diagram, coords: &[i64]) -> Vec<i64> {
    let in_tree = spanning_forest(d);
    let mut f = vec![0i64; d.edges().len()];
    let mut next = coords.iter();
    for (e, slot) in f.iter_mut().enumerate() {
        if !in_tree[e] {
            *slot = *next.next().expect("one coordinate per co-tree edge");
        }
    }
    assert!(next.next().is_none(), "one coordinate per co-tree edge");
    f
}

/// Canonical form of a monomial-beaded closed diagram.
///
/// Errors with `NotClosed` on diagrams with legs — beads live on closed
/// diagrams only. Panics if `f` does not have one entry per edge.
pub fn canonicalize_beaded(d: &Diagram, f: &[i64]) -> Result<BeadedForm, EngineError> {
    if !d.is_closed() {
        return Err(EngineError::NotClosed);
    }
    assert_eq!(f.len(), d.edges().len(), "one bead exponent per edge");
    let (graph_bytes, candidates) = best_candidates(d);
    let graph = DiagramKey::from_bytes(graph_bytes);
    let rep = graph.decode().expect("canonical encodings decode");
    let mut best: Option<Vec<i64>> = None;
    let mut plus = false;
    let mut minus = false;
    for cand in &candidates {
        let mut transported = vec![0i64; f.len()];
        for (i, &(j, reversed)) in cand.edge_map.iter().enumerate() {
            transported[j] = if reversed { -f[i] } else { f[i] };
        }
        let coords = normal_coordinates(&rep, &transported);
        match &best {
            Some(b) if coords > *b => continue,
            Some(b) if coords == *b => {}
            _ => {
                best = Some(coords);
                plus = false;
                minus = false;
            }
        }
        match cand.sign {
            1 => plus = true,
            _ => minus = true,
        }
    }
    let sign = match (plus, minus) {
        (true, true) => Sign::Zero,
        (false, true) => Sign::Minus,
        _ => Sign::Plus,
    };
    Ok(BeadedForm {
        graph,
        coords: best.unwrap_or_default(),
        sign,
    })
}

/// The class of a monomial-beaded diagram as a linear combination: one
/// term with the antisymmetry sign folded in, or zero.
pub fn beaded_class(d: &Diagram, f: &[i64]) -> Result<LinComb<BeadedKey>, EngineError> {
    let form = canonicalize_beaded(d, f)?;
    Ok(match form.sign {
        Sign::Zero => LinComb::zero(),
        s => LinComb::from_term(form.key(), rat(s.as_i8() as i64)),
    })
}

/// A closed diagram with a Laurent-polynomial bead on every edge, read
/// along the stored edge orientations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeadedDiagram {
    diagram: Diagram,
    beads: Vec<LaurentPoly>,
}

impl BeadedDiagram {
    /// `beads` maps edge indices to polynomials; absent edges carry the
    /// bead 1.
    pub fn new(
        diagram: Diagram,
        beads: BTreeMap<usize, LaurentPoly>,
    ) -> Result<Self, EngineError> {
        if !diagram.is_closed() {
            return Err(EngineError::NotClosed);
        }
        let ne = diagram.edges().len();
        if let Some((&edge, _)) = beads.range(ne..).next() {
            return Err(DiagramError::BadBeadEdge { edge, edges: ne }.into());
        }
        let mut dense = vec![LaurentPoly::one(); ne];
        for (edge, poly) in beads {
            dense[edge] = poly;
        }
        Ok(BeadedDiagram {
            diagram,
            beads: dense,
        })
    }

    pub fn from_monomials(diagram: Diagram, exponents: &[i64]) -> Result<Self, EngineError> {
        let beads = exponents
            .iter()
            .enumerate()
            .map(|(e, &n)| (e, LaurentPoly::monomial(n)))
            .collect();
        Self::new(diagram, beads)
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn beads(&self) -> &[LaurentPoly] {
        &self.beads
    }

    /// Expand the polynomial beads into canonical monomial classes: one
    /// term per choice of monomial on each edge, with the product of the
    /// chosen coefficients.
    pub fn expand_multilinear(&self) -> LinComb<BeadedKey> {
        let mut out = LinComb::zero();
        let choices: Vec<Vec<(i64, &Rational)>> =
            self.beads.iter().map(|p| p.terms().collect()).collect();
        if choices.iter().any(Vec::is_empty) {
            return out; // a zero bead annihilates the diagram
        }
        let mut exponents = vec![0i64; choices.len()];
        let mut stack = vec![0usize; choices.len()];
        let mut level = 0usize;
        let mut coeff = vec![Rational::one(); choices.len() + 1];
        loop {
            if level == choices.len() {
                let term = beaded_class(&self.diagram, &exponents)
                    .expect("closed by construction");
                out.add_scaled(&term, &coeff[level]);
                level = level.wrapping_sub(1);
                if level == usize::MAX {
                    break;
                }
                stack[level] += 1;
            }
            loop {
                if level == usize::MAX {
                    break;
                }
                if stack[level] < choices[level].len() {
                    let (exp, c) = choices[level][stack[level]];
                    exponents[level] = exp;
                    coeff[level + 1] = coeff[level].clone() * c;
                    level += 1;
                    if level < choices.len() {
                        stack[level] = 0;
                        continue;
                    }
                    break;
                }
                // exhausted this level, backtrack
                if level == 0 {
                    return out;
                }
                level -= 1;
                stack[level] += 1;
            }
            if level == usize::MAX {
                break;
            }
        }
        out
    }
}

/// Split a combination by the bead degree of its terms; concatenating the
/// pieces returns the input.
pub fn split_by_bead_degree(v: &LinComb<BeadedKey>) -> BTreeMap<u64, LinComb<BeadedKey>> {
    let mut out: BTreeMap<u64, LinComb<BeadedKey>> = BTreeMap::new();
    for (key, coeff) in v.terms() {
        out.entry(key.bead_degree())
            .or_default()
            .add_term(key.clone(), coeff.clone());
    }
    out
}

/// Forget zero classes: the degree-0 beaded space is a copy of the
/// classical diagram space, and this is the canonical identification.
/// Errors if any term has a nonzero class.
pub fn psi(v: &LinComb<BeadedKey>) -> Result<LinComb<DiagramKey>, EngineError> {
    let mut out = LinComb::zero();
    for (key, coeff) in v.terms() {
        if key.coords().iter().any(|&c| c != 0) {
            return Err(EngineError::NonzeroBeadDegree);
        }
        out.add_term(key.graph(), coeff.clone());
    }
    Ok(out)
}

/// Embed classical closed-diagram classes as zero-class beaded ones; the
/// inverse of [`psi`]. Errors with `NotClosed` on keys with legs.
pub fn embed_zero_class(v: &LinComb<DiagramKey>) -> Result<LinComb<BeadedKey>, EngineError> {
    let mut out = LinComb::zero();
    for (key, coeff) in v.terms() {
        if key.leg_count() != 0 {
            return Err(EngineError::NotClosed);
        }
        let rep = key.decode()?;
        out.add_term(
            BeadedKey::new(key, &vec![0; rep.loop_degree()]),
            coeff.clone(),
        );
    }
    Ok(out)
}

fn scale_key(key: &BeadedKey, scale: impl Fn(i64) -> i64) -> BeadedKey {
    let coords: Vec<i64> = key.coords().iter().map(|&c| scale(c)).collect();
    BeadedKey::new(&key.graph(), &coords)
}

/// Multiply every coordinate by `p ≥ 1` — the bead substitution `b ↦ b^p`.
/// Input must be homogeneous of bead degree 1; the output is homogeneous
/// of bead degree `p`. Scaling by a positive integer commutes with
/// canonicalization, so the keys are rewritten directly.
pub fn phi(p: u64, v: &LinComb<BeadedKey>) -> Result<LinComb<BeadedKey>, EngineError> {
    assert!(p >= 1, "phi requires p >= 1");
    let mut out = LinComb::zero();
    for (key, coeff) in v.terms() {
        if key.bead_degree() != 1 {
            return Err(EngineError::WrongDegree { expected: 1 });
        }
        out.add_term(scale_key(key, |c| c * p as i64), coeff.clone());
    }
    Ok(out)
}

/// Divide every coordinate by `p` — the inverse of [`phi`]. Input must be
/// homogeneous of bead degree `p` (coordinates not divisible by `p` raise
/// `NotDivisible`; divisible input of a different bead degree raises
/// `WrongDegree`).
pub fn unphi(p: u64, v: &LinComb<BeadedKey>) -> Result<LinComb<BeadedKey>, EngineError> {
    assert!(p >= 1, "unphi requires p >= 1");
    let mut out = LinComb::zero();
    for (key, coeff) in v.terms() {
        for c in key.coords() {
            if c % p as i64 != 0 {
                return Err(EngineError::NotDivisible {
                    value: c,
                    divisor: p as i64,
                });
            }
        }
        if key.bead_degree() != p {
            return Err(EngineError::WrongDegree { expected: p as i64 });
        }
        out.add_term(scale_key(key, |c| c / p as i64), coeff.clone());
    }
    Ok(out)
}

/// The beaded IHX generator at a non-loop edge of a closed diagram.
///
/// The relation applies near an edge with bead 1, so the cochain is first
/// pushed to vanish on `edge` (always possible for a non-loop edge); the
/// values on all other edges then transport verbatim onto the three terms,
/// whose half-edge ids are stable under the surgery. Returns `None` for a
/// self-loop edge. The result is a relation: it reduces to zero in the
/// beaded quotient, and all its terms share one bead degree.
pub fn ihx_beaded(
    d: &Diagram,
    f: &[i64],
    edge: usize,
) -> Result<Option<LinComb<BeadedKey>>, EngineError> {
    if !d.is_closed() {
        return Err(EngineError::NotClosed);
    }
    assert_eq!(f.len(), d.edges().len(), "one bead exponent per edge");
    let (v1, v2) = d.edges()[edge];
    if v1 == v2 {
        return Ok(None);
    }
    // Push the bead off the edge: add -f(edge) times the coboundary at the
    // edge's second endpoint (δ is +1 there).
    let delta = coboundary_unit(d, v2);
    let f0: Vec<i64> = f
        .iter()
        .zip(delta)
        .map(|(&x, y)| x - f[edge] * y)
        .collect();
    debug_assert_eq!(f0[edge], 0);
    let terms = ihx_term_diagrams(d, edge).expect("non-loop edge of a closed diagram");
    let mut out = LinComb::zero();
    for term in &terms {
        out.add(&beaded_class(term, &f0)?);
    }
    Ok(Some(out))
}
