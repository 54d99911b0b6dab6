//! Exact linear combinations over the rationals, and echelon spans used to
//! reduce modulo a relation subspace.
//!
//! Keys are canonical diagram encodings (or beaded encodings), so the
//! natural term order — and hence the pivot choice — is byte-lexicographic.
//! Everything is `BTreeMap`-based and fully deterministic.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

/// Exact scalar type used throughout the engine.
pub type Rational = num_rational::BigRational;

/// Convenience constructor for integer scalars.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Convenience constructor for fractions.
pub fn rat_frac(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// A finite linear combination of keys with rational coefficients.
/// Zero coefficients are never stored. The derived order is only used to
/// deduplicate generating sets deterministically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinComb<K: Ord + Clone> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord + Clone> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_term(key: K, coeff: Rational) -> Self {
        let mut v = Self::zero();
        v.add_term(key, coeff);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (K, Rational)> {
        self.terms.into_iter()
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone() * c);
        }
    }

    pub fn add(&mut self, other: &Self) {
        self.add_scaled(other, &Rational::one());
    }

    pub fn sub(&mut self, other: &Self) {
        self.add_scaled(other, &-Rational::one());
    }

    pub fn scale(&mut self, c: &Rational) {
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        for v in self.terms.values_mut() {
            *v *= c;
        }
    }

    pub fn negate(&mut self) {
        for v in self.terms.values_mut() {
            *v = -v.clone();
        }
    }

    pub fn map_keys<L: Ord + Clone>(self, mut f: impl FnMut(K) -> L) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in self.terms {
            out.add_term(f(k), c);
        }
        out
    }

    /// Largest key (the pivot used by [`RelationSpan`]).
    pub fn pivot(&self) -> Option<&K> {
        self.terms.last_key_value().map(|(k, _)| k)
    }

    /// Divide by the pivot coefficient so that it becomes `1`.
    fn make_monic(&mut self) {
        if let Some((_, c)) = self.terms.last_key_value() {
            let inv = Rational::one() / c.clone();
            if !inv.is_one() {
                self.scale(&inv);
            }
        }
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for LinComb<K> {
    fn from_iter<T: IntoIterator<Item = (K, Rational)>>(iter: T) -> Self {
        let mut v = Self::zero();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }
}

/// A subspace stored in unique reduced row-echelon form.
///
/// Rows are monic on their pivot (the largest key), sorted by descending
/// pivot, and fully back-reduced, so the row set depends only on the span —
/// not on insertion order. Reduction against the span is therefore a
/// well-defined normal form on the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSpan<K: Ord + Clone> {
    rows: Vec<LinComb<K>>,
}

impl<K: Ord + Clone> Default for RelationSpan<K> {
    fn default() -> Self {
        RelationSpan { rows: Vec::new() }
    }
}

impl<K: Ord + Clone> RelationSpan<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn echelonize(vectors: impl IntoIterator<Item = LinComb<K>>) -> Self {
        let mut span = Self::new();
        for v in vectors {
            span.insert(v);
        }
        span
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[LinComb<K>] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.iter().map(|r| r.pivot().expect("rows are nonzero"))
    }

    pub fn contains(&self, v: &LinComb<K>) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Normal form of `v` modulo the span: eliminate every pivot key.
    ///
    /// One pass suffices: rows are scanned in descending pivot order and
    /// eliminating a pivot only introduces keys strictly below it.
    pub fn reduce(&self, mut v: LinComb<K>) -> LinComb<K> {
        for row in &self.rows {
            let p = row.pivot().expect("rows are nonzero");
            let c = v.coeff(p);
            if !c.is_zero() {
                v.add_scaled(row, &-c);
            }
        }
        v
    }

    /// Add a vector to the span. Returns `true` if the rank grew.
    pub fn insert(&mut self, v: LinComb<K>) -> bool {
        let mut v = self.reduce(v);
        if v.is_zero() {
            return false;
        }
        v.make_monic();
        let p = v.pivot().expect("nonzero").clone();
        // Back-reduce existing rows against the new pivot.
        for row in &mut self.rows {
            let c = row.coeff(&p);
            if !c.is_zero() {
                row.add_scaled(&v, &-c);
            }
        }
        let at = self
            .rows
            .partition_point(|row| row.pivot().expect("nonzero") > &p);
        self.rows.insert(at, v);
        true
    }
}

/// Normalize a vector to a canonical representative of its line: monic on
/// the pivot. Used to deduplicate generating sets.
pub fn monic_line<K: Ord + Clone>(mut v: LinComb<K>) -> LinComb<K> {
    v.make_monic();
    v
}
