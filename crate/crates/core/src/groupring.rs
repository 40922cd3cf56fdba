//! Finitely supported integer vectors in `⊕_{r∈ℛ} Z K`, where `K` is a set of
//! coefficient keys: reduced words for `Z[F(X)]`, oracle normal forms for
//! `ZG`, or coset labels for `Z(G/L)`.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::{Add, Neg, Sub};

use crate::freegroup::ReducedWord;
use crate::presentation::{Presentation, RelId};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupRingVector<K: Ord> {
    terms: BTreeMap<(RelId, K), i64>,
}

impl<K: Ord> Default for GroupRingVector<K> {
    fn default() -> Self {
        GroupRingVector {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone + Debug> GroupRingVector<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(rel: RelId, key: K) -> Self {
        let mut v = Self::zero();
        v.add_term(rel, key, 1);
        v
    }

    pub fn add_term(&mut self, rel: RelId, key: K, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        let slot = self.terms.entry((rel, key)).or_insert(0);
        *slot += coefficient;
        if *slot == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn coefficient(&self, rel: RelId, key: &K) -> i64 {
        self.terms.get(&(rel, key.clone())).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero coordinates.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (RelId, &K, i64)> {
        self.terms.iter().map(|((r, k), c)| (*r, k, *c))
    }

    pub fn scale(&self, factor: i64) -> Self {
        let mut out = Self::zero();
        for (r, k, c) in self.terms() {
            out.add_term(r, k.clone(), c * factor);
        }
        out
    }

    /// Pushes every coefficient key through `f`, merging coordinates that collide.
    pub fn try_map_keys<L, E>(&self, mut f: impl FnMut(&K) -> Result<L, E>) -> Result<GroupRingVector<L>, E>
    where
        L: Ord + Clone + Debug,
    {
        let mut out = GroupRingVector::zero();
        for (r, k, c) in self.terms() {
            out.add_term(r, f(k)?, c);
        }
        Ok(out)
    }

    /// Sum of coefficients at each relation.
    pub fn augmentation(&self) -> BTreeMap<RelId, i64> {
        let mut out = BTreeMap::new();
        for (r, _, c) in self.terms() {
            *out.entry(r).or_insert(0) += c;
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Text form `c*rel[key] + …`, or `0`.
    pub fn render_with(&self, presentation: &Presentation, key: impl Fn(&K) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (r, k, c)) in self.terms().enumerate() {
            let term = format!("{}[{}]", presentation.rel_name(r), key(k));
            let magnitude = c.unsigned_abs();
            let body = if magnitude == 1 {
                term
            } else {
                format!("{magnitude}*{term}")
            };
            match (i, c < 0) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }
}

impl GroupRingVector<ReducedWord> {
    /// Right translation of every coefficient by `w`.
    pub fn translate(&self, w: &ReducedWord) -> Self {
        let mut out = Self::zero();
        for (r, k, c) in self.terms() {
            out.add_term(r, k * w, c);
        }
        out
    }

    pub fn render(&self, presentation: &Presentation) -> String {
        self.render_with(presentation, |w| presentation.render(w))
    }
}

impl<K: Ord + Clone + Debug> Add for &GroupRingVector<K> {
    type Output = GroupRingVector<K>;

    fn add(self, rhs: &GroupRingVector<K>) -> GroupRingVector<K> {
        let mut out = self.clone();
        for (r, k, c) in rhs.terms() {
            out.add_term(r, k.clone(), c);
        }
        out
    }
}

impl<K: Ord + Clone + Debug> Sub for &GroupRingVector<K> {
    type Output = GroupRingVector<K>;

    fn sub(self, rhs: &GroupRingVector<K>) -> GroupRingVector<K> {
        self + &-rhs
    }
}

impl<K: Ord + Clone + Debug> Neg for &GroupRingVector<K> {
    type Output = GroupRingVector<K>;

    fn neg(self) -> GroupRingVector<K> {
        self.scale(-1)
    }
}
