//! Canonical forms modulo isomorphism and antisymmetry.
//!
//! The canonical encoding of a diagram is the minimum, over all admissible
//! vertex numberings, of a byte serialization of the underlying labeled
//! multigraph. Admissible numberings respect vertex type and leg labels
//! (hair legs may permute, named legs are pinned); they are produced by
//! iterative partition refinement with deterministic individualization
//! backtracking, so only automorphism-sized orbits are explored.
//!
//! Cyclic orders never enter the encoding: modulo antisymmetry every
//! assignment of cyclic orders on a fixed graph is `+1` or `-1` times the
//! reference orientation (each trivalent vertex ordered by ascending
//! half-edge id). The sign of the input relative to that reference is the
//! parity of the vertices whose cyclic order arrives reversed; if two
//! minimal numberings disagree on the sign the diagram has an odd
//! automorphism and the class is zero (this is what kills tadpoles).

use std::collections::BTreeMap;

use crate::diagram::{Diagram, LegLabel};
use crate::error::DiagramError;

/// Sign of a diagram relative to its canonical representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
    /// The antisymmetry relations force the class to vanish.
    Zero,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
            Sign::Zero => 0,
        }
    }
}

/// Canonical encoding of the underlying labeled multigraph, usable as an
/// exact dictionary key. The byte layout is stable and invertible; see
/// [`DiagramKey::decode`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagramKey(Vec<u8>);

/// Result of canonicalization: the encoding plus the sign of the input
/// relative to the canonical representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub encoding: DiagramKey,
    pub sign: Sign,
}

/// One admissible numbering achieving the minimal encoding, together with
/// the data needed to transport edge decorations onto the canonical graph.
#[derive(Debug, Clone)]
pub(crate) struct Candidate {
    /// Antisymmetry sign of this numbering: parity of reversed cyclic orders.
    pub sign: i8,
    /// For each original edge index: (canonical edge index, reversed), where
    /// `reversed` means the stored orientation of the original edge maps to
    /// high-to-low in the canonical numbering (slot 1 to slot 0 for loops).
    pub edge_map: Vec<(usize, bool)>,
}

fn push_u16(out: &mut Vec<u8>, v: usize) {
    debug_assert!(v <= u16::MAX as usize);
    out.extend_from_slice(&(v as u16).to_be_bytes());
}

fn read_u16(bytes: &[u8], at: &mut usize) -> Result<usize, DiagramError> {
    let parse_err = |detail: &str| DiagramError::Parse {
        what: "diagram encoding",
        detail: detail.to_owned(),
    };
    if *at + 2 > bytes.len() {
        return Err(parse_err("truncated"));
    }
    let v = u16::from_be_bytes([bytes[*at], bytes[*at + 1]]) as usize;
    *at += 2;
    Ok(v)
}

impl DiagramKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub(crate) fn from_bytes(bytes: Vec<u8>) -> Self {
        DiagramKey(bytes)
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self, DiagramError> {
        let bytes = hex::decode(s.trim()).map_err(|e| DiagramError::Parse {
            what: "hex encoding",
            detail: e.to_string(),
        })?;
        // Validate by decoding once.
        let key = DiagramKey(bytes);
        key.decode()?;
        Ok(key)
    }

    /// Rebuild the canonical representative: the encoded graph with every
    /// cyclic order in reference orientation (ascending half-edge ids).
    pub fn decode(&self) -> Result<Diagram, DiagramError> {
        let bytes = &self.0;
        let mut at = 0usize;
        let t = read_u16(bytes, &mut at)?;
        let u = read_u16(bytes, &mut at)?;
        let e = read_u16(bytes, &mut at)?;
        let mut edges = Vec::with_capacity(e);
        for _ in 0..e {
            let a = read_u16(bytes, &mut at)?;
            let b = read_u16(bytes, &mut at)?;
            edges.push((a, b));
        }
        let mut legs = Vec::with_capacity(u);
        for _ in 0..u {
            let parse_err = |detail: &str| DiagramError::Parse {
                what: "diagram encoding",
                detail: detail.to_owned(),
            };
            if at >= bytes.len() {
                return Err(parse_err("truncated label"));
            }
            let tag = bytes[at];
            at += 1;
            match tag {
                0 => legs.push(LegLabel::Hair),
                1 => {
                    let len = read_u16(bytes, &mut at)?;
                    if at + len > bytes.len() {
                        return Err(parse_err("truncated label"));
                    }
                    let s = std::str::from_utf8(&bytes[at..at + len])
                        .map_err(|_| parse_err("label is not utf-8"))?;
                    at += len;
                    legs.push(LegLabel::Named(s.to_owned()));
                }
                _ => return Err(parse_err("unknown label tag")),
            }
        }
        if at != bytes.len() {
            return Err(DiagramError::Parse {
                what: "diagram encoding",
                detail: "trailing bytes".to_owned(),
            });
        }
        let mut cyclic = Vec::with_capacity(t);
        let tmp = TempIncidence::new(t + u, &edges);
        for v in 0..t {
            let inc = &tmp.inc[v];
            if inc.len() != 3 {
                return Err(DiagramError::BadValence {
                    vertex: v,
                    valence: inc.len(),
                    expected: 3,
                });
            }
            cyclic.push([inc[0], inc[1], inc[2]]);
        }
        Diagram::new(t, legs, edges, cyclic)
    }

    pub fn degree(&self) -> usize {
        let t = u16::from_be_bytes([self.0[0], self.0[1]]) as usize;
        let u = u16::from_be_bytes([self.0[2], self.0[3]]) as usize;
        (t + u) / 2
    }

    pub fn trivalent_count(&self) -> usize {
        u16::from_be_bytes([self.0[0], self.0[1]]) as usize
    }

    pub fn leg_count(&self) -> usize {
        u16::from_be_bytes([self.0[2], self.0[3]]) as usize
    }

    pub fn edge_count(&self) -> usize {
        u16::from_be_bytes([self.0[4], self.0[5]]) as usize
    }
}

struct TempIncidence {
    inc: Vec<Vec<usize>>,
}

impl TempIncidence {
    fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut inc = vec![Vec::new(); n];
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a < n {
                inc[a].push(2 * i);
            }
            if b < n {
                inc[b].push(2 * i + 1);
            }
        }
        TempIncidence { inc }
    }
}

/// Ordered partition of the vertex set; cells only ever split in place, so
/// trivalent cells stay ahead of leg cells and the induced numbering keeps
/// trivalent vertices first.
type Partition = Vec<Vec<usize>>;

fn initial_partition(d: &Diagram) -> Partition {
    let t = d.trivalent_count();
    let mut cells: Partition = Vec::new();
    if t > 0 {
        cells.push((0..t).collect());
    }
    let mut named: Vec<(&String, usize)> = Vec::new();
    let mut hair: Vec<usize> = Vec::new();
    for (i, label) in d.leg_labels().iter().enumerate() {
        match label {
            LegLabel::Named(s) => named.push((s, t + i)),
            LegLabel::Hair => hair.push(t + i),
        }
    }
    named.sort();
    for (_, v) in named {
        cells.push(vec![v]);
    }
    if !hair.is_empty() {
        cells.push(hair);
    }
    cells
}

fn refine(d: &Diagram, inc: &[Vec<usize>], mut cells: Partition) -> Partition {
    let n = d.vertex_count();
    loop {
        let mut cell_of = vec![0usize; n];
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
            }
        }
        let mut next: Partition = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<(usize, usize)>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
                for &h in &inc[v] {
                    let w = d.endpoint(Diagram::partner(h));
                    *counts.entry(cell_of[w]).or_default() += 1;
                }
                groups
                    .entry(counts.into_iter().collect())
                    .or_default()
                    .push(v);
            }
            if groups.len() > 1 {
                changed = true;
            }
            for (_, members) in groups {
                next.push(members);
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

fn for_each_leaf(d: &Diagram, inc: &[Vec<usize>], cells: Partition, f: &mut impl FnMut(&[usize])) {
    if let Some(pos) = cells.iter().position(|c| c.len() > 1) {
        for &v in &cells[pos] {
            let mut split = cells.clone();
            let rest: Vec<usize> = cells[pos].iter().copied().filter(|&w| w != v).collect();
            split[pos] = vec![v];
            split.insert(pos + 1, rest);
            let refined = refine(d, inc, split);
            for_each_leaf(d, inc, refined, f);
        }
    } else {
        let mut number = vec![0usize; d.vertex_count()];
        for (p, cell) in cells.iter().enumerate() {
            number[cell[0]] = p;
        }
        f(&number);
    }
}

/// Permutations of `0..k` in a deterministic order.
fn for_each_permutation(k: usize, f: &mut impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        f(&perm);
        // next lexicographic permutation
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return;
        };
        let j = (i + 1..k).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

/// Compute the minimal encoding and every numbering candidate achieving it.
pub(crate) fn best_candidates(d: &Diagram) -> (Vec<u8>, Vec<Candidate>) {
    let n = d.vertex_count();
    let t = d.trivalent_count();
    let u = d.leg_labels().len();
    let ne = d.edges().len();
    let inc: Vec<Vec<usize>> = (0..n).map(|v| d.incident_half_edges(v)).collect();

    let mut best: Option<Vec<u8>> = None;
    let mut cands: Vec<Candidate> = Vec::new();

    let cells = refine(d, &inc, initial_partition(d));
    for_each_leaf(d, &inc, cells, &mut |number| {
        // Canonical endpoints of each original edge under this numbering.
        let mapped: Vec<(usize, usize, bool)> = d
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (number[a], number[b]);
                if x <= y {
                    (x, y, false)
                } else {
                    (y, x, true)
                }
            })
            .collect();
        let mut order: Vec<usize> = (0..ne).collect();
        order.sort_by_key(|&i| (mapped[i].0, mapped[i].1, i));

        let mut enc = Vec::with_capacity(6 + 4 * ne + 2 * u);
        push_u16(&mut enc, t);
        push_u16(&mut enc, u);
        push_u16(&mut enc, ne);
        for &i in &order {
            push_u16(&mut enc, mapped[i].0);
            push_u16(&mut enc, mapped[i].1);
        }
        let mut inv = vec![0usize; n];
        for v in 0..n {
            inv[number[v]] = v;
        }
        for p in t..t + u {
            match &d.leg_labels()[inv[p] - t] {
                LegLabel::Hair => enc.push(0),
                LegLabel::Named(s) => {
                    enc.push(1);
                    push_u16(&mut enc, s.len());
                    enc.extend_from_slice(s.as_bytes());
                }
            }
        }

        match &best {
            Some(b) if enc > *b => return,
            Some(b) if enc == *b => {}
            _ => {
                best = Some(enc.clone());
                cands.clear();
            }
        }

        // Collect the edge-index ambiguities of this numbering: parallel
        // groups permute, loops may swap ends. Everything else is fixed.
        let mut groups: Vec<Vec<usize>> = Vec::new(); // positions in `order`, parallel non-loops
        let mut loops: Vec<usize> = Vec::new(); // positions in `order`
        let mut pos = 0;
        while pos < ne {
            let (lo, hi, _) = mapped[order[pos]];
            let mut end = pos + 1;
            while end < ne && mapped[order[end]].0 == lo && mapped[order[end]].1 == hi {
                end += 1;
            }
            if lo == hi {
                for p in pos..end {
                    loops.push(p);
                }
            } else if end - pos > 1 {
                groups.push((pos..end).collect());
            }
            pos = end;
        }

        // Enumerate all combos of group permutations and loop end swaps.
        let mut combo_order = order.clone();
        let mut swaps = vec![false; ne];
        enumerate_combos(&groups, &loops, 0, &mut combo_order, &mut swaps, &mut |ord,
                                                                                 swaps| {
            // ord: position -> original edge index; build inverse assignment.
            let mut assign = vec![0usize; ne];
            for (j, &i) in ord.iter().enumerate() {
                assign[i] = j;
            }
            // Half-edge names.
            let mut name = vec![0usize; 2 * ne];
            for i in 0..ne {
                let (lo, hi, flipped) = mapped[i];
                let j = assign[i];
                for s in 0..2 {
                    let slot = if lo == hi {
                        s ^ (swaps[i] as usize)
                    } else {
                        s ^ (flipped as usize)
                    };
                    name[2 * i + s] = 2 * j + slot;
                }
            }
            // Antisymmetry sign: parity of reversed cyclic orders.
            let mut sign = 1i8;
            for v in 0..t {
                let [h1, h2, h3] = d.cyclic_orders()[v];
                let (n1, n2, n3) = (name[h1], name[h2], name[h3]);
                // Rotate minimum first and compare the remaining pair.
                let reversed = if n1 < n2 && n1 < n3 {
                    n2 > n3
                } else if n2 < n1 && n2 < n3 {
                    n3 > n1
                } else {
                    n1 > n2
                };
                if reversed {
                    sign = -sign;
                }
            }
            let edge_map = (0..ne)
                .map(|i| {
                    let (lo, hi, flipped) = mapped[i];
                    let rev = if lo == hi { swaps[i] } else { flipped };
                    (assign[i], rev)
                })
                .collect();
            cands.push(Candidate { sign, edge_map });
        });
    });

    (best.unwrap_or_default(), cands)
}

fn enumerate_combos(
    groups: &[Vec<usize>],
    loops: &[usize],
    gi: usize,
    order: &mut Vec<usize>,
    swaps: &mut Vec<bool>,
    f: &mut impl FnMut(&[usize], &[bool]),
) {
    if gi < groups.len() {
        let positions = &groups[gi];
        let originals: Vec<usize> = positions.iter().map(|&p| order[p]).collect();
        for_each_permutation(positions.len(), &mut |perm| {
            let mut ord = order.clone();
            for (slot, &p) in positions.iter().enumerate() {
                ord[p] = originals[perm[slot]];
            }
            enumerate_combos(groups, loops, gi + 1, &mut ord, swaps, f);
        });
    } else if let Some((&p, rest)) = loops.split_first() {
        let edge = order[p];
        for choice in [false, true] {
            swaps[edge] = choice;
            enumerate_combos(groups, rest, gi, order, swaps, f);
        }
        swaps[edge] = false;
    } else {
        f(order, swaps);
    }
}

/// Canonical form of a diagram: minimal encoding plus relative sign, with
/// sign `Zero` when an odd automorphism collapses the class.
pub fn canonicalize(d: &Diagram) -> CanonicalForm {
    let (encoding, cands) = best_candidates(d);
    let mut plus = false;
    let mut minus = false;
    for c in &cands {
        match c.sign {
            1 => plus = true,
            _ => minus = true,
        }
    }
    let sign = match (plus, minus) {
        (true, true) => Sign::Zero,
        (false, true) => Sign::Minus,
        _ => Sign::Plus,
    };
    CanonicalForm {
        encoding: DiagramKey(encoding),
        sign,
    }
}
