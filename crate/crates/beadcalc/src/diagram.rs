//! Uni-trivalent diagrams: graphs whose vertices have valence 3 (internal)
//! or 1 (legs), with a cyclic order of the half-edges at every trivalent
//! vertex and a label on every leg.
//!
//! Vertices are numbered `0..n`; the first `trivalent_count()` are the
//! trivalent vertices, the rest are legs in the order of `leg_labels()`.
//! Edge `e` owns half-edges `2e` (its first endpoint) and `2e + 1` (its
//! second); self-loops and parallel edges are both allowed, which is why
//! cyclic orders are stored as half-edges rather than neighbor lists.

use crate::error::DiagramError;

/// Label of a univalent vertex. `Hair` legs (written `*` in the text
/// format) are interchangeable with each other; named legs are pinned.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LegLabel {
    Named(String),
    Hair,
}

impl LegLabel {
    pub fn named(s: &str) -> Self {
        LegLabel::Named(s.to_owned())
    }
}

/// A uni-trivalent diagram presentation. Two presentations of the same
/// diagram compare unequal as `Diagram`s; use `canon::canonicalize` for
/// identity modulo isomorphism and antisymmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    trivalent: usize,
    legs: Vec<LegLabel>,
    edges: Vec<(usize, usize)>,
    /// Cyclic order at each trivalent vertex as three half-edge ids.
    /// Rotations are the same order; reversal is tracked by the
    /// antisymmetry sign during canonicalization.
    cyclic: Vec<[usize; 3]>,
}

impl Diagram {
    pub fn new(
        trivalent: usize,
        legs: Vec<LegLabel>,
        edges: Vec<(usize, usize)>,
        cyclic: Vec<[usize; 3]>,
    ) -> Result<Self, DiagramError> {
        let n = trivalent + legs.len();
        for (limit, what) in [(n, "vertices"), (edges.len(), "edges")] {
            if limit > u16::MAX as usize {
                return Err(DiagramError::TooLarge { what, count: limit });
            }
        }
        for (i, &(a, b)) in edges.iter().enumerate() {
            for v in [a, b] {
                if v >= n {
                    return Err(DiagramError::BadEdge {
                        edge: i,
                        vertex: v,
                        vertices: n,
                    });
                }
            }
        }
        let mut names = std::collections::BTreeSet::new();
        for label in &legs {
            if let LegLabel::Named(s) = label {
                if s == "*" {
                    return Err(DiagramError::ReservedLegLabel);
                }
                if !names.insert(s.clone()) {
                    return Err(DiagramError::DuplicateLegLabel { label: s.clone() });
                }
            }
        }
        let d = Diagram {
            trivalent,
            legs,
            edges,
            cyclic,
        };
        for v in 0..n {
            let valence = d.incident_half_edges(v).len();
            let expected = if v < trivalent { 3 } else { 1 };
            if valence != expected {
                return Err(DiagramError::BadValence {
                    vertex: v,
                    valence,
                    expected,
                });
            }
        }
        if d.cyclic.len() != trivalent {
            return Err(DiagramError::IncompleteCyclicOrder {
                vertex: d.cyclic.len().min(trivalent),
            });
        }
        for v in 0..trivalent {
            let mut given = d.cyclic[v].to_vec();
            given.sort_unstable();
            given.dedup();
            let expected = d.incident_half_edges(v);
            if given != expected {
                return Err(DiagramError::IncompleteCyclicOrder { vertex: v });
            }
        }
        Ok(d)
    }

    pub fn trivalent_count(&self) -> usize {
        self.trivalent
    }

    pub fn leg_labels(&self) -> &[LegLabel] {
        &self.legs
    }

    pub fn vertex_count(&self) -> usize {
        self.trivalent + self.legs.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn cyclic_orders(&self) -> &[[usize; 3]] {
        &self.cyclic
    }

    pub fn is_closed(&self) -> bool {
        self.legs.is_empty()
    }

    /// Endpoint vertex of a half-edge.
    pub fn endpoint(&self, half: usize) -> usize {
        let (a, b) = self.edges[half / 2];
        if half % 2 == 0 {
            a
        } else {
            b
        }
    }

    /// The other half of the same edge.
    pub fn partner(half: usize) -> usize {
        half ^ 1
    }

    /// Half-edges at a vertex, ascending. Each end of a self-loop appears
    /// separately.
    pub fn incident_half_edges(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if a == v {
                out.push(2 * i);
            }
            if b == v {
                out.push(2 * i + 1);
            }
        }
        out
    }

    /// Half the total number of vertices.
    pub fn degree(&self) -> usize {
        debug_assert!(self.vertex_count() % 2 == 0);
        self.vertex_count() / 2
    }

    /// Rank of the first homology group: `E - V + #components`.
    pub fn loop_degree(&self) -> usize {
        self.edges.len() + self.component_count() - self.vertex_count()
    }

    pub fn component_count(&self) -> usize {
        if self.vertex_count() == 0 {
            return 0;
        }
        let mut dsu: Vec<usize> = (0..self.vertex_count()).collect();
        fn find(dsu: &mut Vec<usize>, mut x: usize) -> usize {
            while dsu[x] != x {
                dsu[x] = dsu[dsu[x]];
                x = dsu[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut dsu, a), find(&mut dsu, b));
            if ra != rb {
                dsu[ra] = rb;
            }
        }
        (0..self.vertex_count())
            .filter(|&v| find(&mut dsu, v) == v)
            .count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Same diagram with the cyclic order at one trivalent vertex reversed;
    /// equals the negative of `self` modulo antisymmetry.
    pub fn with_reversed_cyclic(&self, v: usize) -> Diagram {
        let mut d = self.clone();
        let [a, b, c] = d.cyclic[v];
        d.cyclic[v] = [a, c, b];
        d
    }

    /// Apply a relabeling to every named leg.
    pub fn relabel_legs(&self, map: impl Fn(&str) -> String) -> Diagram {
        let mut d = self.clone();
        for label in &mut d.legs {
            if let LegLabel::Named(s) = label {
                *s = map(s);
            }
        }
        d
    }

    /// Sorted leg-label multiset, for sector bookkeeping.
    pub fn leg_multiset(&self) -> Vec<LegLabel> {
        let mut legs = self.legs.clone();
        legs.sort();
        legs
    }
}
