//! The IHX relation and quotient spaces of diagram sectors.
//!
//! At an internal edge — an edge joining two distinct trivalent vertices —
//! the IHX relation says the sum of the three ways of attaching the four
//! outer strands to the edge (keeping their cyclic pairing) is zero:
//! rotate the first endpoint's cyclic order to `(a, b, e)` and the second's
//! to `(ē, c, d)`; then
//!
//! ```text
//! D(a,b | c,d) + D(b,c | a,d) + D(c,a | b,d) = 0,
//! ```
//!
//! where `D(x,y | z,w)` reattaches `x, y` to the first endpoint and `z, w`
//! to the second (half-edge ids are stable; only endpoints and the two
//! cyclic orders change). The first term is the diagram itself.
//!
//! A *sector* — fixed degree, fixed leg multiset, optionally restricted to
//! connected diagrams — has finitely many classes, and IHX surgery stays
//! inside the sector: it touches no legs, keeps the vertex count, and
//! reconnects strands only through the two endpoints of an edge joining
//! them, which cannot disconnect anything (nor join separate components).
//! So the quotient by IHX is an honest finite-dimensional linear algebra
//! problem, solved here by echelonizing the generators.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};
use std::rc::Rc;

use crate::canon::{canonicalize, DiagramKey, Sign};
use crate::diagram::{Diagram, LegLabel};
use crate::enumerate::enumerate_sector;
use crate::error::EngineError;
use crate::limits::Limits;
use crate::lincomb::{monic_line, rat, LinComb, RelationSpan};

/// The class of a diagram as a linear combination: its canonical key with
/// the antisymmetry sign, or zero if the class vanishes.
pub fn diagram_class(d: &Diagram) -> LinComb<DiagramKey> {
    let cf = canonicalize(d);
    match cf.sign {
        Sign::Zero => LinComb::zero(),
        s => LinComb::from_term(cf.encoding, rat(s.as_i8() as i64)),
    }
}

/// Edges whose two endpoints are distinct trivalent vertices.
pub fn internal_edges(d: &Diagram) -> Vec<usize> {
    let t = d.trivalent_count();
    d.edges()
        .iter()
        .enumerate()
        .filter(|&(_, &(a, b))| a != b && a < t && b < t)
        .map(|(i, _)| i)
        .collect()
}

fn rotate_from(cyclic: [usize; 3], h: usize) -> (usize, usize) {
    let i = cyclic.iter().position(|&x| x == h).expect("half at vertex");
    (cyclic[(i + 1) % 3], cyclic[(i + 2) % 3])
}

/// The three surgered diagrams of the IHX relation at an internal edge, or
/// `None` when the edge is not internal. The first term is the diagram
/// itself; the others rewire the four half-edges around the edge. Half-edge
/// ids and edge indices are stable across the surgery, so data attached to
/// them (such as bead exponents) transports verbatim.
pub(crate) fn ihx_term_diagrams(d: &Diagram, edge: usize) -> Option<[Diagram; 3]> {
    let t = d.trivalent_count();
    let (v1, v2) = d.edges()[edge];
    if v1 == v2 || v1 >= t || v2 >= t {
        return None;
    }
    let e1 = 2 * edge;
    let e2 = 2 * edge + 1;
    let (a, b) = rotate_from(d.cyclic_orders()[v1], e1);
    let (c, d2) = rotate_from(d.cyclic_orders()[v2], e2);

    let surger = |x: usize, y: usize, z: usize, w: usize| -> Diagram {
        let mut edges = d.edges().to_vec();
        for (h, target) in [(x, v1), (y, v1), (z, v2), (w, v2)] {
            if h % 2 == 0 {
                edges[h / 2].0 = target;
            } else {
                edges[h / 2].1 = target;
            }
        }
        let mut cyclic = d.cyclic_orders().to_vec();
        cyclic[v1] = [x, y, e1];
        cyclic[v2] = [e2, z, w];
        Diagram::new(
            t,
            d.leg_labels().to_vec(),
            edges,
            cyclic,
        )
        .expect("IHX surgery preserves validity")
    };

    Some([
        surger(a, b, c, d2),
        surger(b, c, a, d2),
        surger(c, a, b, d2),
    ])
}

/// The IHX generator at an internal edge, as a canonical linear
/// combination. Returns `None` when the edge is not internal; returns the
/// zero combination when every term cancels or vanishes.
pub fn ihx_generator(d: &Diagram, edge: usize) -> Option<LinComb<DiagramKey>> {
    let terms = ihx_term_diagrams(d, edge)?;
    let mut out = LinComb::zero();
    for term in &terms {
        out.add(&diagram_class(term));
    }
    Some(out)
}

/// All distinct nonzero IHX generators arising from the given classes, as
/// monic lines.
pub fn ihx_generators<'a>(
    keys: impl IntoIterator<Item = &'a DiagramKey>,
) -> Vec<LinComb<DiagramKey>> {
    let mut gens = BTreeSet::new();
    for key in keys {
        let rep = key.decode().expect("canonical keys decode");
        for e in internal_edges(&rep) {
            let g = ihx_generator(&rep, e).expect("internal edge");
            if !g.is_zero() {
                gens.insert(monic_line(g));
            }
        }
    }
    gens.into_iter().collect()
}

/// A sector of the diagram space: fixed degree and leg multiset, optionally
/// restricted to connected diagrams. Leg order is normalized on
/// construction so equal multisets compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SectorSpec {
    pub degree: usize,
    pub legs: Vec<LegLabel>,
    pub connected: bool,
    /// Drop diagrams without trivalent vertices (pure-strut unions).
    pub require_trivalent: bool,
}

impl SectorSpec {
    pub fn new(degree: usize, mut legs: Vec<LegLabel>, connected: bool) -> Self {
        legs.sort();
        SectorSpec {
            degree,
            legs,
            connected,
            require_trivalent: false,
        }
    }

    pub fn closed(degree: usize) -> Self {
        Self::new(degree, Vec::new(), false)
    }

    pub fn hairy(degree: usize, hair: usize, connected: bool) -> Self {
        Self::new(degree, vec![LegLabel::Hair; hair], connected)
    }

    /// The sector housing degree-`degree` elements with legs named
    /// `"1".."n"`: connected, with at least one trivalent vertex.
    pub fn named(degree: usize, n: usize) -> Self {
        let legs = (1..=n).map(|i| LegLabel::named(&i.to_string())).collect();
        let mut spec = Self::new(degree, legs, true);
        spec.require_trivalent = true;
        spec
    }
}

/// A sector together with its IHX relation span: the quotient space the
/// sector's classes live in.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub sector: SectorSpec,
    /// Every nonzero class of the sector, sorted by encoding.
    pub reps: Vec<DiagramKey>,
    /// Echelonized span of the IHX generators.
    pub span: RelationSpan<DiagramKey>,
}

impl Quotient {
    pub fn build(sector: SectorSpec, limits: &Limits) -> Result<Self, EngineError> {
        let mut reps = enumerate_sector(sector.degree, &sector.legs, limits)?;
        if sector.connected {
            reps.retain(|k| k.decode().expect("canonical keys decode").is_connected());
        }
        if sector.require_trivalent {
            reps.retain(|k| k.trivalent_count() > 0);
        }
        let span = RelationSpan::echelonize(ihx_generators(reps.iter()));
        Ok(Quotient { sector, reps, span })
    }

    pub fn dimension(&self) -> usize {
        self.reps.len() - self.span.rank()
    }

    /// Representatives of a basis of the quotient: the classes whose keys
    /// are not pivots of the relation span.
    pub fn basis(&self) -> Vec<DiagramKey> {
        let pivots: BTreeSet<&DiagramKey> = self.span.pivots().collect();
        self.reps
            .iter()
            .filter(|k| !pivots.contains(k))
            .cloned()
            .collect()
    }

    /// Normal form modulo IHX: every pivot class is rewritten in terms of
    /// basis classes.
    pub fn reduce(&self, v: LinComb<DiagramKey>) -> LinComb<DiagramKey> {
        self.span.reduce(v)
    }

    pub fn is_zero(&self, v: &LinComb<DiagramKey>) -> bool {
        self.span.reduce(v.clone()).is_zero()
    }
}

/// Memoizing store of sector quotients; building a quotient enumerates the
/// sector and echelonizes its IHX generators, which is worth doing once.
pub struct QuotientCache {
    limits: Limits,
    cache: RefCell<BTreeMap<SectorSpec, Rc<Quotient>>>,
}

impl QuotientCache {
    pub fn new(limits: Limits) -> Self {
        QuotientCache {
            limits,
            cache: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn get(&self, sector: SectorSpec) -> Result<Rc<Quotient>, EngineError> {
        if let Some(q) = self.cache.borrow().get(&sector) {
            return Ok(Rc::clone(q));
        }
        let q = Rc::new(Quotient::build(sector.clone(), &self.limits)?);
        self.cache.borrow_mut().insert(sector, Rc::clone(&q));
        Ok(q)
    }
}
