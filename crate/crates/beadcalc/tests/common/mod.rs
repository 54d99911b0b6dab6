//! Shared test support: an independent brute-force pipeline (adjacency
//! enumeration, exhaustive signed isomorphism, dense rank), an ε-tensor
//! evaluator, a cycle-pairing check for bead cochains, and random
//! diagram generators.
//!
//! Nothing here calls the engine's canonicalization, enumeration, or
//! echelon code; engine types are used only as containers.
#![allow(dead_code)]

use std::collections::BTreeMap;

use beadcalc::{Diagram, DiagramKey, LegLabel, LinComb, Rational};
use itertools::Itertools;
use num_traits::Zero;
use rand::prelude::*;

// ---------------------------------------------------------------------
// Brute-force enumeration of uni-trivalent multigraphs.

/// All multigraphs with `t` trivalent vertices followed by one degree-1
/// vertex per leg label, as adjacency matrices over the upper triangle
/// (diagonal entries count half-edges, i.e. twice the loops). Each
/// distinct labeled graph appears exactly once, with ascending cyclic
/// orders.
pub fn enumerate_graphs(t: usize, legs: &[LegLabel]) -> Vec<Diagram> {
    let n = t + legs.len();
    let target: Vec<usize> = (0..n).map(|v| if v < t { 3 } else { 1 }).collect();
    let mut matrix = vec![vec![0usize; n]; n];
    let mut remaining = target;
    let mut out = Vec::new();
    fill(0, 0, t, legs, &mut matrix, &mut remaining, &mut out);
    out
}

fn fill(
    i: usize,
    j: usize,
    t: usize,
    legs: &[LegLabel],
    matrix: &mut Vec<Vec<usize>>,
    remaining: &mut Vec<usize>,
    out: &mut Vec<Diagram>,
) {
    let n = remaining.len();
    if i == n {
        out.push(matrix_to_diagram(t, legs, matrix));
        return;
    }
    if j == n {
        if remaining[i] == 0 {
            fill(i + 1, i + 1, t, legs, matrix, remaining, out);
        }
        return;
    }
    if j == i {
        // Loops: only trivalent vertices can carry them, two half-edges
        // apiece.
        let cap = if i < t { remaining[i] } else { 0 };
        let mut m = 0;
        while m <= cap {
            matrix[i][i] = m;
            remaining[i] -= m;
            fill(i, j + 1, t, legs, matrix, remaining, out);
            remaining[i] += m;
            m += 2;
        }
        matrix[i][i] = 0;
    } else {
        let cap = remaining[i].min(remaining[j]);
        for m in 0..=cap {
            matrix[i][j] = m;
            remaining[i] -= m;
            remaining[j] -= m;
            fill(i, j + 1, t, legs, matrix, remaining, out);
            remaining[i] += m;
            remaining[j] += m;
        }
        matrix[i][j] = 0;
    }
}

fn matrix_to_diagram(t: usize, legs: &[LegLabel], matrix: &[Vec<usize>]) -> Diagram {
    let n = t + legs.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for _ in 0..matrix[i][i] / 2 {
            edges.push((i, i));
        }
        for j in i + 1..n {
            for _ in 0..matrix[i][j] {
                edges.push((i, j));
            }
        }
    }
    let cyclic = (0..t).map(|v| ascending_triple(&edges, v)).collect();
    Diagram::new(t, legs.to_vec(), edges, cyclic).expect("enumerated graph is valid")
}

fn ascending_triple(edges: &[(usize, usize)], v: usize) -> [usize; 3] {
    let mut halves = Vec::new();
    for (e, &(a, b)) in edges.iter().enumerate() {
        if a == v {
            halves.push(2 * e);
        }
        if b == v {
            halves.push(2 * e + 1);
        }
    }
    halves.sort_unstable();
    [halves[0], halves[1], halves[2]]
}

/// Connectivity by union-find over the edge list.
pub fn is_connected_naive(d: &Diagram) -> bool {
    let n = d.trivalent_count() + d.leg_labels().len();
    if n == 0 {
        return true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for &(a, b) in d.edges() {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let root = find(&mut parent, 0);
    (1..n).all(|v| find(&mut parent, v) == root)
}

// ---------------------------------------------------------------------
// Exhaustive signed isomorphism.

fn pair_counts(d: &Diagram) -> BTreeMap<(usize, usize), usize> {
    let mut out = BTreeMap::new();
    for &(a, b) in d.edges() {
        *out.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    out
}

type VertexInvariant = (usize, Vec<usize>, usize, Vec<String>);

/// Iso-invariant fingerprint of one vertex: loops, sorted multiplicities
/// toward distinct trivalent neighbors, hair-leg neighbor count, sorted
/// named-leg neighbor labels.
fn vertex_invariant(d: &Diagram, v: usize) -> VertexInvariant {
    let t = d.trivalent_count();
    let mut loops = 0;
    let mut toward: BTreeMap<usize, usize> = BTreeMap::new();
    for &(a, b) in d.edges() {
        if a == v && b == v {
            loops += 1;
        } else if a == v {
            *toward.entry(b).or_insert(0) += 1;
        } else if b == v {
            *toward.entry(a).or_insert(0) += 1;
        }
    }
    let mut trivalent_mults = Vec::new();
    let mut hair = 0;
    let mut named = Vec::new();
    for (w, m) in toward {
        if w < t {
            trivalent_mults.push(m);
        } else {
            match &d.leg_labels()[w - t] {
                LegLabel::Hair => hair += m,
                LegLabel::Named(s) => named.push(s.clone()),
            }
        }
    }
    trivalent_mults.sort_unstable();
    named.sort();
    (loops, trivalent_mults, hair, named)
}

/// Vertex bijection groups respecting type, label, and fingerprint, or
/// None when the profiles already rule isomorphism out.
fn bijection_groups(d1: &Diagram, d2: &Diagram) -> Option<Vec<(Vec<usize>, Vec<usize>)>> {
    let t = d1.trivalent_count();
    let mut groups: BTreeMap<(u8, String), (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for (d, slot) in [(d1, 0usize), (d2, 1usize)] {
        for v in 0..t {
            let inv = vertex_invariant(d, v);
            let key = (0u8, format!("{inv:?}"));
            let entry = groups.entry(key).or_default();
            if slot == 0 {
                entry.0.push(v);
            } else {
                entry.1.push(v);
            }
        }
        for (i, label) in d.leg_labels().iter().enumerate() {
            let key = match label {
                LegLabel::Hair => (1u8, String::new()),
                LegLabel::Named(s) => (2u8, s.clone()),
            };
            let entry = groups.entry(key).or_default();
            if slot == 0 {
                entry.0.push(t + i);
            } else {
                entry.1.push(t + i);
            }
        }
    }
    let groups: Vec<_> = groups.into_values().collect();
    if groups.iter().any(|(a, b)| a.len() != b.len()) {
        return None;
    }
    Some(groups)
}

fn for_each_bijection(
    groups: &[(Vec<usize>, Vec<usize>)],
    gi: usize,
    psi: &mut Vec<usize>,
    stop: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if gi == groups.len() {
        return stop(psi);
    }
    let (src, dst) = &groups[gi];
    for perm in dst.iter().copied().permutations(dst.len()) {
        for (&s, &d) in src.iter().zip(&perm) {
            psi[s] = d;
        }
        if for_each_bijection(groups, gi + 1, psi, stop) {
            return true;
        }
    }
    false
}

/// Edge-level extensions of a vertex bijection: parallel edges may be
/// matched in any order, self-loops may also swap their two ends. Calls
/// `stop` with the half-edge map; returns early when it says so.
fn for_each_half_map(
    d1: &Diagram,
    d2: &Diagram,
    psi: &[usize],
    stop: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    // Group parallel edges of d1 by endpoint pair and collect each
    // group's candidate edges of d2.
    let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (e, &(a, b)) in d1.edges().iter().enumerate() {
        groups.entry((a.min(b), a.max(b))).or_default().push(e);
    }
    let mut targets: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (e, &(a, b)) in d2.edges().iter().enumerate() {
        targets.entry((a.min(b), a.max(b))).or_default().push(e);
    }
    let mut plan = Vec::new();
    for ((a, b), sources) in &groups {
        let image = (psi[*a].min(psi[*b]), psi[*a].max(psi[*b]));
        match targets.get(&image) {
            Some(cands) if cands.len() == sources.len() => {
                plan.push((sources.clone(), cands.clone(), a == b))
            }
            _ => return false,
        }
    }
    let mut halfmap = vec![usize::MAX; 2 * d1.edges().len()];
    extend_groups(d1, d2, psi, &plan, 0, &mut halfmap, stop)
}

fn extend_groups(
    d1: &Diagram,
    d2: &Diagram,
    psi: &[usize],
    plan: &[(Vec<usize>, Vec<usize>, bool)],
    gi: usize,
    halfmap: &mut Vec<usize>,
    stop: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if gi == plan.len() {
        return stop(halfmap);
    }
    let (sources, cands, is_loop) = &plan[gi];
    for perm in cands.iter().copied().permutations(cands.len()) {
        if *is_loop {
            // Each loop independently keeps or swaps its two ends.
            let k = sources.len();
            for mask in 0..(1usize << k) {
                for (i, (&e, &e2)) in sources.iter().zip(&perm).enumerate() {
                    let swap = mask >> i & 1 == 1;
                    halfmap[2 * e] = 2 * e2 + usize::from(swap);
                    halfmap[2 * e + 1] = 2 * e2 + usize::from(!swap);
                }
                if extend_groups(d1, d2, psi, plan, gi + 1, halfmap, stop) {
                    return true;
                }
            }
        } else {
            for (&e, &e2) in sources.iter().zip(&perm) {
                let (a, _) = d1.edges()[e];
                let (x, _) = d2.edges()[e2];
                let keep = x == psi[a];
                halfmap[2 * e] = 2 * e2 + usize::from(!keep);
                halfmap[2 * e + 1] = 2 * e2 + usize::from(keep);
            }
            if extend_groups(d1, d2, psi, plan, gi + 1, halfmap, stop) {
                return true;
            }
        }
    }
    false
}

fn cyclic_parity(d1: &Diagram, d2: &Diagram, psi: &[usize], halfmap: &[usize]) -> i8 {
    let mut sign = 1i8;
    for v in 0..d1.trivalent_count() {
        let [p, q, r] = d1.cyclic_orders()[v];
        let img = [halfmap[p], halfmap[q], halfmap[r]];
        let t = d2.cyclic_orders()[psi[v]];
        let even = img == t || img == [t[1], t[2], t[0]] || img == [t[2], t[0], t[1]];
        if !even {
            debug_assert!(
                img == [t[0], t[2], t[1]] || img == [t[2], t[1], t[0]] || img == [t[1], t[0], t[2]],
                "half map does not respect incidence"
            );
            sign = -sign;
        }
    }
    sign
}

/// Which signs are achieved by isomorphisms d1 → d2 (respecting leg
/// labels, hair legs interchangeable)? (plus, minus); (false, false)
/// means not isomorphic.
pub fn signed_isos(d1: &Diagram, d2: &Diagram) -> (bool, bool) {
    if d1.trivalent_count() != d2.trivalent_count()
        || d1.edges().len() != d2.edges().len()
        || d1.leg_multiset() != d2.leg_multiset()
    {
        return (false, false);
    }
    let Some(groups) = bijection_groups(d1, d2) else {
        return (false, false);
    };
    let n = d1.trivalent_count() + d1.leg_labels().len();
    let mut psi = vec![usize::MAX; n];
    let (mut plus, mut minus) = (false, false);
    for_each_bijection(&groups, 0, &mut psi, &mut |psi| {
        for_each_half_map(d1, d2, psi, &mut |halfmap| {
            match cyclic_parity(d1, d2, psi, halfmap) {
                1 => plus = true,
                _ => minus = true,
            }
            plus && minus
        });
        plus && minus
    });
    (plus, minus)
}

// ---------------------------------------------------------------------
// Iso-class bucketing and the brute-force quotient dimension.

/// Representatives of the isomorphism classes of `all`, split into live
/// classes and classes killed by an odd automorphism.
pub struct Classes {
    pub live: Vec<Diagram>,
    pub dead: Vec<Diagram>,
}

pub fn bucket_classes(all: Vec<Diagram>) -> Classes {
    let mut reps: Vec<Diagram> = Vec::new();
    for d in all {
        let known = reps.iter().any(|r| {
            let (p, m) = signed_isos(&d, r);
            p || m
        });
        if !known {
            reps.push(d);
        }
    }
    let (dead, live) = reps.into_iter().partition(|r| signed_isos(r, r) == (true, true));
    Classes { live, dead }
}

/// Class index and sign of `d` among the live representatives; None when
/// the class of `d` is zero.
pub fn locate(classes: &Classes, d: &Diagram) -> Option<(usize, i8)> {
    for (i, rep) in classes.live.iter().enumerate() {
        match signed_isos(d, rep) {
            (false, false) => continue,
            (true, false) => return Some((i, 1)),
            (false, true) => return Some((i, -1)),
            (true, true) => unreachable!("both signs against a live representative"),
        }
    }
    for rep in &classes.dead {
        let (p, m) = signed_isos(d, rep);
        if p || m {
            return None;
        }
    }
    panic!("diagram not matched by any enumerated class");
}

/// One relation row per (live class, internal edge): the sum of the
/// three reattachments of the four strands adjacent to the edge.
pub fn ihx_rows(classes: &Classes) -> Vec<Vec<i64>> {
    let mut rows = Vec::new();
    for rep in &classes.live {
        let t = rep.trivalent_count();
        for e in 0..rep.edges().len() {
            let (v1, v2) = rep.edges()[e];
            if v1 == v2 || v1 >= t || v2 >= t {
                continue;
            }
            let c1 = rotate_last(rep.cyclic_orders()[v1], 2 * e);
            let c2 = rotate_first(rep.cyclic_orders()[v2], 2 * e + 1);
            let (a, b) = (c1[0], c1[1]);
            let (c, dd) = (c2[1], c2[2]);
            let mut row = vec![0i64; classes.live.len()];
            for (p, q, r, s) in [(a, b, c, dd), (b, c, a, dd), (c, a, b, dd)] {
                let term = reattach(rep, e, v1, v2, [p, q, r, s]);
                if let Some((i, sign)) = locate(classes, &term) {
                    row[i] += i64::from(sign);
                }
            }
            rows.push(row);
        }
    }
    rows
}

fn rotate_last(mut c: [usize; 3], h: usize) -> [usize; 3] {
    while c[2] != h {
        c = [c[1], c[2], c[0]];
    }
    c
}

fn rotate_first(mut c: [usize; 3], h: usize) -> [usize; 3] {
    while c[0] != h {
        c = [c[1], c[2], c[0]];
    }
    c
}

fn reattach(rep: &Diagram, e: usize, v1: usize, v2: usize, halves: [usize; 4]) -> Diagram {
    let [p, q, r, s] = halves;
    let mut edges = rep.edges().to_vec();
    for &h in &halves {
        let home = if h == p || h == q { v1 } else { v2 };
        if h % 2 == 0 {
            edges[h / 2].0 = home;
        } else {
            edges[h / 2].1 = home;
        }
    }
    let mut cyclic = rep.cyclic_orders().to_vec();
    cyclic[v1] = [p, q, 2 * e];
    cyclic[v2] = [2 * e + 1, r, s];
    Diagram::new(
        rep.trivalent_count(),
        rep.leg_labels().to_vec(),
        edges,
        cyclic,
    )
    .expect("reattachment is valid")
}

/// Dense Gaussian elimination over the rationals.
pub fn dense_rank(rows: Vec<Vec<i64>>) -> usize {
    let mut rows: Vec<Vec<Rational>> = rows
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|n| Rational::from_integer(n.into()))
                .collect()
        })
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for entry in &mut rows[rank] {
            *entry /= lead.clone();
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..cols {
                    let sub = &rows[rank][c] * &factor;
                    rows[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Brute-force quotient dimension of one sector: enumerate, filter,
/// bucket, and subtract the dense rank of the reattachment relations.
pub fn oracle_dimension(degree: usize, legs: &[LegLabel], connected: bool) -> usize {
    let u = legs.len();
    assert!(2 * degree >= u, "no trivalent vertices left for the sector");
    let t = 2 * degree - u;
    let mut graphs = enumerate_graphs(t, legs);
    if connected {
        graphs.retain(is_connected_naive);
    }
    let classes = bucket_classes(graphs);
    let rank = dense_rank(ihx_rows(&classes));
    classes.live.len() - rank
}

// ---------------------------------------------------------------------
// ε-tensor evaluation.

fn eps(i: u8, j: u8, k: u8) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// Contract the diagram in the three-dimensional ε-calculus: color every
/// edge from {0,1,2}, take the product of ε over the cyclic triples, and
/// sum. The result is indexed by the colors of the leg edges (empty key
/// for closed diagrams). Relations of the diagram calculus evaluate to
/// zero here, which makes this an independent consistency check.
pub fn epsilon_tensor(d: &Diagram) -> BTreeMap<Vec<u8>, i64> {
    let ne = d.edges().len();
    let t = d.trivalent_count();
    let leg_edges: Vec<usize> = (0..d.leg_labels().len())
        .map(|i| d.incident_half_edges(t + i)[0] / 2)
        .collect();
    let mut out: BTreeMap<Vec<u8>, i64> = BTreeMap::new();
    let mut color = vec![0u8; ne];
    loop {
        let mut val = 1i64;
        for v in 0..t {
            let [a, b, c] = d.cyclic_orders()[v];
            val *= eps(color[a / 2], color[b / 2], color[c / 2]);
            if val == 0 {
                break;
            }
        }
        if val != 0 {
            let key: Vec<u8> = leg_edges.iter().map(|&e| color[e]).collect();
            *out.entry(key).or_insert(0) += val;
        }
        // Odometer over {0,1,2}^ne.
        let mut pos = 0;
        loop {
            if pos == ne {
                out.retain(|_, v| *v != 0);
                return out;
            }
            if color[pos] < 2 {
                color[pos] += 1;
                break;
            }
            color[pos] = 0;
            pos += 1;
        }
    }
}

/// ε-tensor of a whole combination of canonical keys.
pub fn epsilon_combination(v: &LinComb<DiagramKey>) -> BTreeMap<Vec<u8>, Rational> {
    let mut out: BTreeMap<Vec<u8>, Rational> = BTreeMap::new();
    for (key, coeff) in v.terms() {
        let d = key.decode().expect("canonical keys decode");
        for (idx, val) in epsilon_tensor(&d) {
            let entry = out.entry(idx).or_insert_with(|| Rational::from_integer(0.into()));
            *entry += coeff * Rational::from_integer(val.into());
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

// ---------------------------------------------------------------------
// Cycle pairings: the gauge-invariant content of an edge cochain.

/// Pair the cochain with the fundamental cycles of a depth-first forest
/// rooted at the highest-numbered vertices, scanning half-edges in
/// descending order (deliberately a different spanning structure than
/// any the engine uses). Two cochains on the same diagram are related by
/// vertex pushes iff their pairing vectors agree.
pub fn cycle_pairings(d: &Diagram, f: &[i64]) -> Vec<i64> {
    let n = d.trivalent_count() + d.leg_labels().len();
    let ne = d.edges().len();
    assert_eq!(f.len(), ne);
    let mut pot: Vec<Option<i64>> = vec![None; n];
    let mut in_tree = vec![false; ne];
    for root in (0..n).rev() {
        if pot[root].is_some() {
            continue;
        }
        pot[root] = Some(0);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            let mut halves = d.incident_half_edges(u);
            halves.sort_unstable_by(|a, b| b.cmp(a));
            for h in halves {
                let e = h / 2;
                let w = d.endpoint(h ^ 1);
                if pot[w].is_some() {
                    continue;
                }
                in_tree[e] = true;
                let step = if h % 2 == 0 { f[e] } else { -f[e] };
                pot[w] = Some(pot[u].unwrap() + step);
                stack.push(w);
            }
        }
    }
    (0..ne)
        .filter(|&e| !in_tree[e])
        .map(|e| {
            let (a, b) = d.edges()[e];
            f[e] - (pot[b].unwrap() - pot[a].unwrap())
        })
        .collect()
}

// ---------------------------------------------------------------------
// Random generators.

/// Random diagram of the given degree via a uniform stub matching:
/// named legs first, `hair` unlabeled legs, the rest trivalent, cyclic
/// orders shuffled.
pub fn random_diagram(
    rng: &mut impl Rng,
    degree: usize,
    hair: usize,
    named: &[&str],
) -> Diagram {
    let u = hair + named.len();
    assert!(2 * degree >= u);
    let t = 2 * degree - u;
    let mut legs: Vec<LegLabel> = named.iter().map(|s| LegLabel::named(s)).collect();
    legs.extend(std::iter::repeat(LegLabel::Hair).take(hair));
    let mut stubs: Vec<usize> = Vec::new();
    for v in 0..t {
        stubs.extend([v, v, v]);
    }
    stubs.extend(t..t + u);
    stubs.shuffle(rng);
    let edges: Vec<(usize, usize)> = stubs.chunks(2).map(|p| (p[0], p[1])).collect();
    let mut cyclic = Vec::with_capacity(t);
    for v in 0..t {
        let mut halves = Vec::new();
        for (e, &(a, b)) in edges.iter().enumerate() {
            if a == v {
                halves.push(2 * e);
            }
            if b == v {
                halves.push(2 * e + 1);
            }
        }
        halves.shuffle(rng);
        cyclic.push([halves[0], halves[1], halves[2]]);
    }
    Diagram::new(t, legs, edges, cyclic).expect("stub matching is valid")
}

/// Random closed trivalent diagram with the requested number of
/// independent cycles (counted per component and summed).
pub fn random_closed(rng: &mut impl Rng, loop_degree: usize) -> Diagram {
    assert!(loop_degree >= 2);
    loop {
        let d = random_diagram(rng, loop_degree - 1, 0, &[]);
        if d.loop_degree() == loop_degree {
            return d;
        }
    }
}

pub fn random_cochain(rng: &mut impl Rng, edges: usize, bound: i64) -> Vec<i64> {
    (0..edges).map(|_| rng.gen_range(-bound..=bound)).collect()
}

/// The same presentation with one edge's stored orientation flipped; the
/// cochain value on that edge changes sign with it.
pub fn reorient_edge(d: &Diagram, f: &[i64], e: usize) -> (Diagram, Vec<i64>) {
    let mut edges = d.edges().to_vec();
    edges[e] = (edges[e].1, edges[e].0);
    let swap = |h: usize| {
        if h / 2 == e {
            h ^ 1
        } else {
            h
        }
    };
    let cyclic = d
        .cyclic_orders()
        .iter()
        .map(|&[a, b, c]| [swap(a), swap(b), swap(c)])
        .collect();
    let flipped = Diagram::new(
        d.trivalent_count(),
        d.leg_labels().to_vec(),
        edges,
        cyclic,
    )
    .expect("reorientation is valid");
    let mut g = f.to_vec();
    g[e] = -g[e];
    (flipped, g)
}

/// Theta: two vertices joined by three parallel edges.
pub fn theta() -> Diagram {
    Diagram::new(
        2,
        vec![],
        vec![(0, 1), (0, 1), (0, 1)],
        vec![[0, 2, 4], [1, 3, 5]],
    )
    .unwrap()
}

/// The complete graph on four vertices with ascending cyclic orders.
pub fn tetrahedron() -> Diagram {
    Diagram::new(
        4,
        vec![],
        vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        vec![[0, 2, 4], [1, 6, 8], [3, 7, 10], [5, 9, 11]],
    )
    .unwrap()
}
