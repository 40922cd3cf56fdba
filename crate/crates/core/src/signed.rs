//! Words in a free group on an arbitrary generating set, used for both
//! λ-words and crossed words.

use std::ops::{Mul, Neg};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self.flip()
    }
}

/// A freely reduced product `g₁^{ε₁} ⋯ gₙ^{εₙ}`: no factor is followed by
/// its own inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedWord<G> {
    factors: Vec<(G, Sign)>,
}

impl<G> Default for SignedWord<G> {
    fn default() -> Self {
        SignedWord {
            factors: Vec::new(),
        }
    }
}

impl<G: Clone + Eq> SignedWord<G> {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(g: G) -> Self {
        SignedWord {
            factors: vec![(g, Sign::Plus)],
        }
    }

    pub fn inverse_generator(g: G) -> Self {
        SignedWord {
            factors: vec![(g, Sign::Minus)],
        }
    }

    /// Builds the freely reduced form of the given factor sequence.
    pub fn from_factors<I: IntoIterator<Item = (G, Sign)>>(factors: I) -> Self {
        let mut w = Self::identity();
        for (g, s) in factors {
            w.push(g, s);
        }
        w
    }

    fn push(&mut self, g: G, s: Sign) {
        match self.factors.last() {
            Some((h, t)) if *h == g && *t != s => {
                self.factors.pop();
            }
            _ => self.factors.push((g, s)),
        }
    }

    pub fn factors(&self) -> &[(G, Sign)] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn inverse(&self) -> Self {
        SignedWord {
            factors: self
                .factors
                .iter()
                .rev()
                .map(|(g, s)| (g.clone(), s.flip()))
                .collect(),
        }
    }

    /// Applies `f` to every generator, keeping signs, and reduces.
    pub fn map_generators<H: Clone + Eq>(&self, mut f: impl FnMut(&G) -> H) -> SignedWord<H> {
        SignedWord::from_factors(self.factors.iter().map(|(g, s)| (f(g), *s)))
    }

    /// Sum of signs, i.e. the image in the abelianised infinite cyclic quotient.
    pub fn exponent_sum(&self) -> i64 {
        self.factors.iter().map(|(_, s)| s.value()).sum()
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Self::identity(), |acc, _| &acc * &base)
    }
}

impl<G: Clone + Eq> Mul for &SignedWord<G> {
    type Output = SignedWord<G>;

    fn mul(self, rhs: &SignedWord<G>) -> SignedWord<G> {
        let mut out = self.clone();
        for (g, s) in &rhs.factors {
            out.push(g.clone(), *s);
        }
        out
    }
}

impl<G: Clone + Eq> Mul for SignedWord<G> {
    type Output = SignedWord<G>;

    fn mul(self, rhs: SignedWord<G>) -> SignedWord<G> {
        &self * &rhs
    }
}
