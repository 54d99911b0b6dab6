//! Enumeration of all diagram classes with a given degree and leg multiset.
//!
//! Generation walks perfect matchings on vertex stubs (three per trivalent
//! vertex, one per leg), always extending the lowest unmatched stub. Two
//! prunes cut the orbit redundancy — only the first unmatched stub of a
//! partner vertex is tried, and among completely untouched vertices of an
//! interchangeable kind only the least-numbered one is tried — and the
//! final canonical dedup makes the output exact. Self-loop matchings are
//! skipped outright: swapping the ends of a loop reverses exactly one
//! cyclic order, so every such class vanishes modulo antisymmetry.

use std::collections::BTreeSet;

use crate::canon::{canonicalize, DiagramKey, Sign};
use crate::diagram::{Diagram, LegLabel};
use crate::error::EngineError;
use crate::limits::Limits;

/// All nonzero diagram classes with the given degree and legs, as sorted
/// canonical encodings. Degree counts half the vertices, so the number of
/// trivalent vertices is `2 * degree - legs.len()` (no diagrams exist when
/// that is negative).
pub fn enumerate_sector(
    degree: usize,
    legs: &[LegLabel],
    limits: &Limits,
) -> Result<Vec<DiagramKey>, EngineError> {
    if degree > limits.max_degree {
        return Err(EngineError::CapExceeded {
            requested: degree,
            cap: limits.max_degree,
        });
    }
    let u = legs.len();
    if 2 * degree < u {
        return Ok(Vec::new());
    }
    let t = 2 * degree - u;
    let mut m = Matcher::new(t, legs);
    m.go();
    Ok(m.found.into_iter().collect())
}

struct Matcher<'a> {
    t: usize,
    legs: &'a [LegLabel],
    /// stub -> vertex; trivalent vertex `v` owns stubs `3v..3v+3`, leg `i`
    /// owns stub `3t + i`.
    stub_vertex: Vec<usize>,
    matched: Vec<Option<usize>>,
    pairs: Vec<(usize, usize)>,
    found: BTreeSet<DiagramKey>,
}

impl<'a> Matcher<'a> {
    fn new(t: usize, legs: &'a [LegLabel]) -> Self {
        let mut stub_vertex = Vec::with_capacity(3 * t + legs.len());
        for v in 0..t {
            stub_vertex.extend([v, v, v]);
        }
        for i in 0..legs.len() {
            stub_vertex.push(t + i);
        }
        let n = stub_vertex.len();
        Matcher {
            t,
            legs,
            stub_vertex,
            matched: vec![None; n],
            pairs: Vec::with_capacity(n / 2),
            found: BTreeSet::new(),
        }
    }

    fn stubs_of(&self, v: usize) -> std::ops::Range<usize> {
        if v < self.t {
            3 * v..3 * v + 3
        } else {
            let s = 3 * self.t + (v - self.t);
            s..s + 1
        }
    }

    fn is_touched(&self, v: usize) -> bool {
        self.stubs_of(v).any(|s| self.matched[s].is_some())
    }

    fn go(&mut self) {
        let Some(s) = self.matched.iter().position(Option::is_none) else {
            self.emit();
            return;
        };
        let vs = self.stub_vertex[s];
        let mut tried_fresh_trivalent = false;
        let mut tried_fresh_hair = false;
        for p in s + 1..self.matched.len() {
            if self.matched[p].is_some() {
                continue;
            }
            let w = self.stub_vertex[p];
            if w == vs {
                continue;
            }
            // Stubs of one vertex are interchangeable: only its first.
            if self.stubs_of(w).find(|&q| self.matched[q].is_none()) != Some(p) {
                continue;
            }
            if !self.is_touched(w) {
                // Untouched vertices of one kind are interchangeable; stub
                // order is vertex order, so the first fresh one seen is the
                // least. Named legs are each distinct.
                let fresh_flag = if w < self.t {
                    Some(&mut tried_fresh_trivalent)
                } else if self.legs[w - self.t] == LegLabel::Hair {
                    Some(&mut tried_fresh_hair)
                } else {
                    None
                };
                if let Some(flag) = fresh_flag {
                    if *flag {
                        continue;
                    }
                    *flag = true;
                }
            }
            self.matched[s] = Some(p);
            self.matched[p] = Some(s);
            self.pairs.push((s, p));
            self.go();
            self.pairs.pop();
            self.matched[s] = None;
            self.matched[p] = None;
        }
    }

    fn emit(&mut self) {
        let mut edges = Vec::with_capacity(self.pairs.len());
        let mut half_of_stub = vec![0usize; self.matched.len()];
        for (k, &(s, p)) in self.pairs.iter().enumerate() {
            edges.push((self.stub_vertex[s], self.stub_vertex[p]));
            half_of_stub[s] = 2 * k;
            half_of_stub[p] = 2 * k + 1;
        }
        let cyclic = (0..self.t)
            .map(|v| [half_of_stub[3 * v], half_of_stub[3 * v + 1], half_of_stub[3 * v + 2]])
            .collect();
        let d = Diagram::new(self.t, self.legs.to_vec(), edges, cyclic)
            .expect("stub matchings build valid diagrams");
        let cf = canonicalize(&d);
        if cf.sign != Sign::Zero {
            self.found.insert(cf.encoding);
        }
    }
}
