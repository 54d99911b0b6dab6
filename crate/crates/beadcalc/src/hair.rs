//! The hair map: trading beads for legs.
//!
//! A monomial bead `b^n` on an edge expands into hair — unlabeled legs
//! planted along the edge. Each planted leg subdivides the edge once, and
//! a choice of `k` legs on that edge carries the coefficient `n^k / k!`,
//! so a bead contributes the exponential series of leg-planting with
//! weight `n`. Every planted leg raises the diagram degree by one; the
//! series is graded by degree, and a computation truncates it at a chosen
//! total degree.
//!
//! The expansion is computed from the canonical bead coordinates (the
//! spanning-forest normal form), but its reduced image is independent of
//! the presentation: pushing a bead across a vertex changes which edges
//! carry which exponents, and the expanded combinations differ by IHX
//! relations sector by sector.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::beads::{expand_coordinates, BeadedKey};
use crate::canon::DiagramKey;
use crate::diagram::{Diagram, LegLabel};
use crate::error::EngineError;
use crate::lincomb::{LinComb, Rational};
use crate::relations::{diagram_class, QuotientCache, SectorSpec};

/// A hairy combination truncated at a total degree: every term has degree
/// at most `truncation`, and all legs are unlabeled hair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedHairy {
    truncation: usize,
    value: LinComb<DiagramKey>,
}

impl TruncatedHairy {
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn value(&self) -> &LinComb<DiagramKey> {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// The terms of one degree, as their own combination.
    pub fn degree_piece(&self, degree: usize) -> LinComb<DiagramKey> {
        self.value
            .terms()
            .filter(|(k, _)| k.degree() == degree)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect()
    }

    /// The degrees that actually occur, lowest first.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.value.terms().map(|(k, _)| k.degree()).collect();
        out.dedup();
        out
    }
}

/// Subdivide the edges of a closed diagram, planting `plan[e]` hair legs
/// along edge `e` in its stored orientation, and return the class of the
/// result.
fn plant_legs(d: &Diagram, plan: &[usize]) -> LinComb<DiagramKey> {
    let t = d.trivalent_count();
    let total: usize = plan.iter().sum();
    let new_t = t + total;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut cyclic: Vec<[usize; 3]> = vec![[0; 3]; new_t];
    let mut half_map: BTreeMap<usize, usize> = BTreeMap::new();
    let mut next_sub = t; // subdivision vertices start after the originals
    let mut next_leg = new_t; // leg vertices come after all trivalent ones
    for (e, &(a, b)) in d.edges().iter().enumerate() {
        let k = plan[e];
        if k == 0 {
            let j = edges.len();
            edges.push((a, b));
            half_map.insert(2 * e, 2 * j);
            half_map.insert(2 * e + 1, 2 * j + 1);
            continue;
        }
        let subs: Vec<usize> = (0..k).map(|i| next_sub + i).collect();
        next_sub += k;
        // Segments along the stored orientation, then one leg per
        // subdivision vertex, cyclic order (incoming, leg, outgoing).
        let mut tail = a;
        let mut incoming_half = None;
        for (i, &w) in subs.iter().enumerate() {
            let j = edges.len();
            edges.push((tail, w));
            if i == 0 {
                half_map.insert(2 * e, 2 * j);
            }
            if let Some(h) = incoming_half.replace(2 * j + 1) {
                // previous vertex: segment in, leg, segment out
                let leg_half = cyclic[subs[i - 1]][1];
                cyclic[subs[i - 1]] = [h, leg_half, 2 * j];
            }
            // Leg edges for this edge's subdivision vertices are pushed
            // after all segments; reserve the i-th one's index now.
            let leg_edge = edges.len() + k;
            cyclic[w][1] = 2 * leg_edge;
            tail = w;
        }
        let j = edges.len();
        edges.push((tail, b));
        half_map.insert(2 * e + 1, 2 * j + 1);
        let h = incoming_half.expect("at least one subdivision");
        let leg_half = cyclic[subs[k - 1]][1];
        cyclic[subs[k - 1]] = [h, leg_half, 2 * j];
        for &w in &subs {
            let l = edges.len();
            edges.push((w, next_leg));
            next_leg += 1;
            // the reserved leg half-edge id must match
            debug_assert_eq!(cyclic[w][1], 2 * l);
        }
    }
    for (v, old) in d.cyclic_orders().iter().enumerate() {
        cyclic[v] = old.map(|h| half_map[&h]);
    }
    let out = Diagram::new(new_t, vec![LegLabel::Hair; total], edges, cyclic)
        .expect("subdivision preserves validity");
    diagram_class(&out)
}

/// Expand one monomial-beaded presentation into hairy diagrams of total
/// degree at most `truncation`. The cochain `f` is read per edge along
/// stored orientations. Different presentations of one class expand to
/// combinations that agree after IHX reduction, but not term by term.
pub fn hair_expand_presentation(
    d: &Diagram,
    f: &[i64],
    truncation: usize,
) -> Result<LinComb<DiagramKey>, EngineError> {
    if !d.is_closed() {
        return Err(EngineError::NotClosed);
    }
    assert_eq!(f.len(), d.edges().len(), "one bead exponent per edge");
    let base = d.degree();
    if truncation < base {
        return Err(EngineError::TruncationTooSmall {
            truncation,
            degree: base,
        });
    }
    let budget = truncation - base;
    let support: Vec<usize> = (0..f.len()).filter(|&e| f[e] != 0).collect();
    let mut out = LinComb::zero();
    let mut plan = vec![0usize; f.len()];
    // Enumerate leg counts on the supported edges with total at most the
    // budget; zero-weight edges only ever contribute zero legs.
    fn distribute(
        d: &Diagram,
        f: &[i64],
        support: &[usize],
        at: usize,
        left: usize,
        plan: &mut Vec<usize>,
        coeff: Rational,
        out: &mut LinComb<DiagramKey>,
    ) {
        if at == support.len() {
            out.add_scaled(&plant_legs(d, plan), &coeff);
            return;
        }
        let e = support[at];
        let mut power = Rational::one();
        let weight = BigInt::from(f[e]);
        for k in 0..=left {
            if k > 0 {
                power = power * Rational::from(weight.clone()) / Rational::from(BigInt::from(k));
            }
            plan[e] = k;
            distribute(d, f, support, at + 1, left - k, plan, coeff.clone() * &power, out);
        }
        plan[e] = 0;
    }
    distribute(d, f, &support, 0, budget, &mut plan, Rational::one(), &mut out);
    Ok(out)
}

/// Expand one canonical beaded class into hairy diagrams of total degree
/// at most `truncation`, from its stored coordinates.
pub fn hair_expand(key: &BeadedKey, truncation: usize) -> Result<LinComb<DiagramKey>, EngineError> {
    let rep = key.graph().decode()?;
    let f = expand_coordinates(&rep, &key.coords());
    hair_expand_presentation(&rep, &f, truncation)
}

/// Reduce a hairy combination sector by sector (fixed degree and leg
/// count) against the IHX spans.
pub fn reduce_hairy(
    v: LinComb<DiagramKey>,
    cache: &QuotientCache,
) -> Result<LinComb<DiagramKey>, EngineError> {
    let mut sectors: BTreeMap<(usize, usize), LinComb<DiagramKey>> = BTreeMap::new();
    for (key, coeff) in v.terms() {
        sectors
            .entry((key.degree(), key.leg_count()))
            .or_default()
            .add_term(key.clone(), coeff.clone());
    }
    let mut out = LinComb::zero();
    for ((degree, legs), piece) in sectors {
        let q = cache.get(SectorSpec::hairy(degree, legs, false))?;
        out.add(&q.reduce(piece));
    }
    Ok(out)
}

/// The hair map, truncated at total degree `truncation` and fully reduced.
pub fn hair(
    v: &LinComb<BeadedKey>,
    truncation: usize,
    cache: &QuotientCache,
) -> Result<TruncatedHairy, EngineError> {
    let cap = cache.limits().max_truncation;
    if truncation > cap {
        return Err(EngineError::CapExceeded {
            requested: truncation,
            cap,
        });
    }
    let mut raw = LinComb::zero();
    for (key, coeff) in v.terms() {
        raw.add_scaled(&hair_expand(key, truncation)?, coeff);
    }
    Ok(TruncatedHairy {
        truncation,
        value: reduce_hairy(raw, cache)?,
    })
}

/// For each degree up to the truncation: does the degree piece of the
/// reduced hair image vanish? An element maps into the kernel up to the
/// truncation iff every entry is `true`.
pub fn kernel_check(
    v: &LinComb<BeadedKey>,
    truncation: usize,
    cache: &QuotientCache,
) -> Result<BTreeMap<usize, bool>, EngineError> {
    let image = hair(v, truncation, cache)?;
    Ok((0..=truncation)
        .map(|d| (d, image.degree_piece(d).is_zero()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::beads::{beaded_class, embed_zero_class, push_move};
    use crate::limits::Limits;
    use crate::lincomb::rat;

    fn theta() -> Diagram {
        Diagram::new(
            2,
            vec![],
            vec![(0, 1), (0, 1), (0, 1)],
            vec![[0, 2, 4], [1, 3, 5]],
        )
        .unwrap()
    }

    #[test]
    fn beadless_diagrams_sprout_no_hair() {
        let d = theta();
        for truncation in 1..=4 {
            let v = hair_expand_presentation(&d, &[0, 0, 0], truncation).unwrap();
            assert_eq!(v, diagram_class(&d));
        }
    }

    #[test]
    fn truncation_below_the_base_degree_is_rejected() {
        let d = theta();
        assert!(matches!(
            hair_expand_presentation(&d, &[0, 0, 0], 0),
            Err(EngineError::TruncationTooSmall {
                truncation: 0,
                degree: 1
            })
        ));
    }

    #[test]
    fn single_planted_legs_vanish_on_theta() {
        // One hair on a theta edge leaves an odd symmetry (the two
        // remaining parallel edges swap), so the degree-2 piece of the
        // expansion is empty and the truncated series equals the bare
        // diagram up to degree 2.
        let d = theta();
        let v = hair_expand_presentation(&d, &[1, 0, 0], 2).unwrap();
        assert_eq!(v, diagram_class(&d));
        // At degree 3 the two-leg terms survive.
        let w = hair_expand_presentation(&d, &[1, 0, 0], 3).unwrap();
        assert_ne!(w, diagram_class(&d));
        for (key, _) in w.terms() {
            assert!(key.degree() <= 3);
            assert!(key.degree() == 1 || key.degree() == 3);
        }
    }

    #[test]
    fn expansion_is_push_invariant_after_reduction() {
        let d = theta();
        let limits = Limits::default();
        let cache = QuotientCache::new(limits);
        let f = [2, -1, 0];
        let base = reduce_hairy(
            hair_expand_presentation(&d, &f, 3).unwrap(),
            &cache,
        )
        .unwrap();
        for v in 0..2 {
            let pushed = push_move(&d, &f, v);
            let moved = reduce_hairy(
                hair_expand_presentation(&d, &pushed, 3).unwrap(),
                &cache,
            )
            .unwrap();
            assert_eq!(moved, base);
        }
    }

    #[test]
    fn hair_of_a_zero_class_is_the_embedding() {
        let d = theta();
        let class = diagram_class(&d);
        let beaded = embed_zero_class(&class).unwrap();
        let cache = QuotientCache::new(Limits::default());
        for truncation in 1..=4 {
            let image = hair(&beaded, truncation, &cache).unwrap();
            assert_eq!(image.value(), &cache
                .get(SectorSpec::hairy(1, 0, false))
                .unwrap()
                .reduce(class.clone()));
            assert_eq!(image.degrees(), vec![1]);
        }
    }

    #[test]
    fn kernel_check_reports_by_degree() {
        let d = theta();
        let nz = beaded_class(&d, &[1, 0, 0]).unwrap();
        let cache = QuotientCache::new(Limits::default());
        let report = kernel_check(&nz, 3, &cache).unwrap();
        assert_eq!(report.len(), 4);
        // The base degree piece is the bare theta, which is nonzero.
        assert_eq!(report[&1], false);
        assert_eq!(report[&0], true);
    }

    #[test]
    fn truncation_cap_is_enforced() {
        let cache = QuotientCache::new(Limits::default());
        let v = LinComb::from_term(
            beaded_class(&theta(), &[0, 0, 0])
                .unwrap()
                .terms()
                .next()
                .unwrap()
                .0
                .clone(),
            rat(1),
        );
        let cap = cache.limits().max_truncation;
        assert!(matches!(
            hair(&v, cap + 1, &cache),
            Err(EngineError::CapExceeded { .. })
        ));
    }

    #[test]
    fn planted_legs_sit_along_the_edge_orientation() {
        // Planting two legs on one theta edge yields a degree-3 diagram
        // with two hair legs; the class must be stable under recomputation
        // and the diagram connected.
        let d = theta();
        let mut plan = vec![0, 0, 0];
        plan[0] = 2;
        let v = plant_legs(&d, &plan);
        assert_eq!(v.len(), 1);
        let (key, _) = v.terms().next().unwrap();
        assert_eq!(key.degree(), 3);
        assert_eq!(key.leg_count(), 2);
        assert!(key.decode().unwrap().is_connected());
    }
}
