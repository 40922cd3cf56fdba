//! The free crossed `F(X)`-module `C(P)` on `rhat`, with generators
//! `(rel, u)`, boundary `(rel, u) ↦ u⁻¹ · rhat · u` and action `(rel, u)^v = (rel, uv)`.
//!
//! Crossed words are representatives in the free group on `R × F(X)`;
//! equality modulo Peiffer elements is decided by the same invariant pair as
//! for λ-words. The sequence `π → C → F(X)` has image `N`, the normal closure
//! of the relators, not all of `F(X)`.

mod axioms;

use crate::freegroup::ReducedWord;
use crate::groupring::GroupRingVector;
use crate::presentation::{GroupOracle, OracleError, Presentation, PresentationError, RelId};
use crate::signed::{Sign, SignedWord};
use crate::starone::{LambdaGenerator, LambdaWord, StarError, Verdict};
use crate::syntax::{self, SyntaxError};

pub use axioms::{check_axioms, check_axioms_with_action, Axiom, AxiomConfig, AxiomOutcome, AxiomReport};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossedGenerator {
    pub rel: RelId,
    pub u: ReducedWord,
}

impl CrossedGenerator {
    pub fn new(rel: RelId, u: ReducedWord) -> Self {
        CrossedGenerator { rel, u }
    }

    pub fn render(&self, presentation: &Presentation) -> String {
        format!(
            "gen({}, {})",
            presentation.rel_name(self.rel),
            presentation.render(&self.u)
        )
    }
}

pub type CrossedWord = SignedWord<CrossedGenerator>;

pub fn d_boundary(presentation: &Presentation, c: &CrossedWord) -> Result<ReducedWord, PresentationError> {
    let mut out = ReducedWord::identity();
    for (g, s) in c.factors() {
        let b = presentation.rhat(g.rel)?.conjugate_by(&g.u);
        out = match s {
            Sign::Plus => &out * &b,
            Sign::Minus => &out * &b.inverse(),
        };
    }
    Ok(out)
}

pub fn cm_action(c: &CrossedWord, v: &ReducedWord) -> CrossedWord {
    c.map_generators(|g| CrossedGenerator::new(g.rel, &g.u * v))
}

/// `(r,u)⁻¹ (s,v)⁻¹ (r,u) (s, v·u⁻¹·rhat(r)·u)`, trivial in `C(P)`.
pub fn peiffer_element(
    presentation: &Presentation,
    r: RelId,
    u: &ReducedWord,
    s: RelId,
    v: &ReducedWord,
) -> Result<CrossedWord, PresentationError> {
    let ru = CrossedGenerator::new(r, u.clone());
    let sv = CrossedGenerator::new(s, v.clone());
    let shifted = CrossedGenerator::new(s, v * &presentation.rhat(r)?.conjugate_by(u));
    Ok(CrossedWord::from_factors([
        (ru.clone(), Sign::Minus),
        (sv, Sign::Minus),
        (ru, Sign::Plus),
        (shifted, Sign::Plus),
    ]))
}

/// `(rel, u) ↦ λ_{rel,u}`.
pub fn phi(c: &CrossedWord) -> LambdaWord {
    c.map_generators(|g| LambdaGenerator::new(g.rel, g.u.clone()))
}

pub fn phi_inverse(a: &LambdaWord) -> CrossedWord {
    a.map_generators(|g| CrossedGenerator::new(g.rel, g.q.clone()))
}

pub fn cm_abelianize(c: &CrossedWord, oracle: Option<&GroupOracle>) -> Result<GroupRingVector<ReducedWord>, OracleError> {
    let mut out = GroupRingVector::zero();
    for (g, s) in c.factors() {
        let key = match oracle {
            Some(o) => o.canonical(&g.u)?,
            None => g.u.clone(),
        };
        out.add_term(g.rel, key, s.value());
    }
    Ok(out)
}

/// Same verdict semantics as [`crate::starone::equal`].
pub fn cm_equal(
    presentation: &Presentation,
    a: &CrossedWord,
    b: &CrossedWord,
    oracle: Option<&GroupOracle>,
) -> Result<Verdict, StarError> {
    if d_boundary(presentation, a)? != d_boundary(presentation, b)? {
        return Ok(Verdict::Unequal);
    }
    let difference = cm_abelianize(&(a * &b.inverse()), oracle)?;
    Ok(match (difference.is_zero(), oracle.is_some()) {
        (true, _) => Verdict::Equal,
        (false, true) => Verdict::Unequal,
        (false, false) => Verdict::Unknown,
    })
}

pub fn render_crossed(presentation: &Presentation, c: &CrossedWord) -> String {
    syntax::render_terms(c.factors().iter().map(|(g, s)| (g.render(presentation), *s)))
}

pub fn parse_crossed(presentation: &Presentation, text: &str) -> Result<CrossedWord, SyntaxError> {
    let mut factors = Vec::new();
    for term in syntax::parse_terms(text)? {
        term.expect("gen", 2)?;
        let rel = presentation.rel_id(term.args[0])?;
        let u = presentation.parse_reduced(term.args[1])?;
        factors.push((CrossedGenerator::new(rel, u), term.sign));
    }
    Ok(CrossedWord::from_factors(factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{fixtures, DEFAULT_BUDGET};
    use crate::starone;

    fn z2_oracle(p: &Presentation) -> GroupOracle {
        GroupOracle::validated(p.rewriting_system().unwrap().clone(), DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn boundaries() {
        let z2 = fixtures::free_abelian_rank_two();
        let c = parse_crossed(&z2, "gen(c, 1)").unwrap();
        assert_eq!(z2.render(&d_boundary(&z2, &c).unwrap()), "b^-1 a^-1 b a");
        let p = fixtures::infinite_cyclic();
        let c = parse_crossed(&p, "gen(r1, x^3)").unwrap();
        assert!(d_boundary(&p, &c).unwrap().is_identity());
        assert!(d_boundary(&p, &CrossedWord::identity()).unwrap().is_identity());
    }

    #[test]
    fn action_moves_the_word_index() {
        let z2 = fixtures::free_abelian_rank_two();
        let c = parse_crossed(&z2, "gen(c, 1)").unwrap();
        let b = z2.parse_reduced("b").unwrap();
        assert_eq!(cm_action(&c, &b), parse_crossed(&z2, "gen(c, b)").unwrap());
        assert_eq!(cm_action(&c, &ReducedWord::identity()), c);
    }

    #[test]
    fn peiffer_elements_are_trivial() {
        let z2 = fixtures::free_abelian_rank_two();
        let oracle = z2_oracle(&z2);
        let cr = z2.rel_id("c").unwrap();
        let one = ReducedWord::identity();
        let pe = peiffer_element(&z2, cr, &one, cr, &one).unwrap();
        // The middle pair cancels freely when (r, u) = (s, v).
        assert_eq!(render_crossed(&z2, &pe), "gen(c, 1)^-1; gen(c, b^-1 a^-1 b a)");
        let pe2 = peiffer_element(&z2, cr, &z2.parse_reduced("a").unwrap(), cr, &one).unwrap();
        assert_eq!(
            render_crossed(&z2, &pe2),
            "gen(c, a)^-1; gen(c, 1)^-1; gen(c, a); gen(c, a^-1 b^-1 a^-1 b a^2)"
        );
        assert!(d_boundary(&z2, &pe2).unwrap().is_identity());
        assert!(d_boundary(&z2, &pe).unwrap().is_identity());
        assert!(cm_abelianize(&pe, Some(&oracle)).unwrap().is_zero());
        assert_eq!(
            cm_equal(&z2, &pe, &CrossedWord::identity(), Some(&oracle)).unwrap(),
            Verdict::Equal
        );
        let c = parse_crossed(&z2, "gen(c, a)").unwrap();
        assert_eq!(cm_equal(&z2, &c, &(&c * &pe), Some(&oracle)).unwrap(), Verdict::Equal);
    }

    #[test]
    fn phi_relabels_generators() {
        let p = fixtures::infinite_cyclic();
        let c = parse_crossed(&p, "gen(r1, x^2); gen(r1, x^-1)^-1").unwrap();
        let a = phi(&c);
        assert_eq!(a, starone::parse_lambda(&p, "lam(r1, x^2); lam(r1, x^-1)^-1").unwrap());
        assert_eq!(phi_inverse(&a), c);
        assert!(phi(&CrossedWord::identity()).is_identity());
    }

    #[test]
    fn conjugation_exchange_holds() {
        // (s,d,u)⁻¹ (l,r,vsu) (s,d,u) = (l,r,vdu)
        let z2 = fixtures::free_abelian_rank_two();
        let oracle = z2_oracle(&z2);
        let cr = z2.rel_id("c").unwrap();
        let (s, d) = z2.sides(cr).unwrap();
        let (u, v) = (z2.parse_reduced("a b^-1").unwrap(), z2.parse_reduced("b^2").unwrap());
        let inner = CrossedWord::generator(CrossedGenerator::new(cr, u.clone()));
        let lhs = &(&inner.inverse() * &CrossedWord::generator(CrossedGenerator::new(cr, ReducedWord::product([&v, &s, &u])))) * &inner;
        let rhs = CrossedWord::generator(CrossedGenerator::new(cr, ReducedWord::product([&v, &d, &u])));
        assert_eq!(cm_equal(&z2, &lhs, &rhs, Some(&oracle)).unwrap(), Verdict::Equal);
        assert_eq!(
            starone::equal(&z2, &phi(&lhs), &phi(&rhs), Some(&oracle)).unwrap(),
            Verdict::Equal
        );
    }

    #[test]
    fn distinct_boundaries_are_unequal() {
        let z2 = fixtures::free_abelian_rank_two();
        let oracle = z2_oracle(&z2);
        let a = parse_crossed(&z2, "gen(c, 1)").unwrap();
        let b = parse_crossed(&z2, "gen(c, b)").unwrap();
        assert_eq!(cm_equal(&z2, &a, &b, Some(&oracle)).unwrap(), Verdict::Unequal);
        let e = CrossedWord::identity();
        assert_eq!(cm_equal(&z2, &e, &e, None).unwrap(), Verdict::Equal);
    }
}
