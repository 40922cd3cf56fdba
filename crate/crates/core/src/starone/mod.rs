//! The group `(star₁, ∗)` of edge paths starting at `1`, in terms of the
//! generators `λ_{rel,q} = (q⁻¹l⁻¹, rel, q)`.
//!
//! Equality is decided through the pair (boundary in `F(X)`, abelianization
//! in `⊕_R ZG`): the map from `π₁` into the abelianization is injective, so
//! with a group oracle the verdict is exact.

mod exchange;

use std::fmt;

use thiserror::Error;

use crate::freegroup::ReducedWord;
use crate::groupring::GroupRingVector;
use crate::presentation::{CosetLabeler, GroupOracle, LabelError, OracleError, Presentation, PresentationError, RelId};
use crate::signed::{Sign, SignedWord};
use crate::squier::{Edge, EdgePath, PathError, SignedEdge};
use crate::syntax::{self, SyntaxError};

pub use exchange::{exchange_apply, ExchangeDirection, ExchangeOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StarError {
    #[error("path starts at `{0}`, not at 1")]
    SourceNotIdentity(String),
    #[error("factor index {index} is out of range for a word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("exchange does not apply at factor {index}: {reason}")]
    ExchangeMismatch { index: usize, reason: String },
    #[error("boundary `{0}` is not trivial, so the word is not an identity")]
    NotAnIdentity(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Path(#[from] PathError),
}

/// `λ_{rel,q}`, the edge `(q⁻¹l⁻¹, rel, q)` from `1` to `q⁻¹l⁻¹rq`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaGenerator {
    pub rel: RelId,
    pub q: ReducedWord,
}

impl LambdaGenerator {
    pub fn new(rel: RelId, q: ReducedWord) -> Self {
        LambdaGenerator { rel, q }
    }

    pub fn edge(&self, presentation: &Presentation) -> Result<Edge, PresentationError> {
        let (l, _) = presentation.sides(self.rel)?;
        Ok(Edge::new(
            ReducedWord::product([&l, &self.q]).inverse(),
            self.rel,
            self.q.clone(),
        ))
    }

    /// `q⁻¹ · rhat · q`.
    pub fn boundary(&self, presentation: &Presentation) -> Result<ReducedWord, PresentationError> {
        Ok(presentation.rhat(self.rel)?.conjugate_by(&self.q))
    }

    pub fn render(&self, presentation: &Presentation) -> String {
        format!(
            "lam({}, {})",
            presentation.rel_name(self.rel),
            presentation.render(&self.q)
        )
    }
}

/// A freely reduced `∗`-product of λ-generators; negative factors are
/// `∗`-inverses.
pub type LambdaWord = SignedWord<LambdaGenerator>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Equal,
    Unequal,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Equal => "equal",
            Verdict::Unequal => "unequal",
            Verdict::Unknown => "unknown",
        })
    }
}

/// `eλ = (e𝐝)⁻¹ ▷ e`. The value does not depend on `p`; a reversed edge
/// maps to the `∗`-inverse of the generator of its underlying edge.
pub fn lambda_of_edge(e: &SignedEdge) -> LambdaWord {
    let g = LambdaGenerator::new(e.edge.rel, e.edge.q.clone());
    SignedWord::from_factors([(g, e.sign)])
}

/// The λ-word of a path starting at `1`.
pub fn lambda_normal_form(presentation: &Presentation, path: &EdgePath) -> Result<LambdaWord, StarError> {
    if !path.source().is_identity() {
        return Err(StarError::SourceNotIdentity(presentation.render(path.source())));
    }
    Ok(path
        .steps()
        .iter()
        .fold(LambdaWord::identity(), |acc, e| &acc * &lambda_of_edge(e)))
}

pub fn star_multiply(a: &LambdaWord, b: &LambdaWord) -> LambdaWord {
    a * b
}

/// The range map `𝐫` restricted to `star₁`.
pub fn boundary(presentation: &Presentation, a: &LambdaWord) -> Result<ReducedWord, PresentationError> {
    let mut out = ReducedWord::identity();
    for (g, s) in a.factors() {
        let b = g.boundary(presentation)?;
        out = match s {
            Sign::Plus => &out * &b,
            Sign::Minus => &out * &b.inverse(),
        };
    }
    Ok(out)
}

/// `a^w = w⁻¹ ▷ a ◁ w`, sending `λ_{rel,q}` to `λ_{rel,qw}`.
pub fn act(a: &LambdaWord, w: &ReducedWord) -> LambdaWord {
    a.map_generators(|g| LambdaGenerator::new(g.rel, &g.q * w))
}

/// Coordinates in `⊕_R Z[F(X)]`, or in `⊕_R ZG` through oracle normal forms.
pub fn abelianize(a: &LambdaWord, oracle: Option<&GroupOracle>) -> Result<GroupRingVector<ReducedWord>, OracleError> {
    let mut out = GroupRingVector::zero();
    for (g, s) in a.factors() {
        let key = match oracle {
            Some(o) => o.canonical(&g.q)?,
            None => g.q.clone(),
        };
        out.add_term(g.rel, key, s.value());
    }
    Ok(out)
}

/// Without an oracle a nonzero difference over `Z[F(X)]` may still vanish in
/// `ZG`, so it yields `Unknown`.
pub fn equal(
    presentation: &Presentation,
    a: &LambdaWord,
    b: &LambdaWord,
    oracle: Option<&GroupOracle>,
) -> Result<Verdict, StarError> {
    if boundary(presentation, a)? != boundary(presentation, b)? {
        return Ok(Verdict::Unequal);
    }
    let difference = abelianize(&(a * &b.inverse()), oracle)?;
    Ok(match (difference.is_zero(), oracle.is_some()) {
        (true, _) => Verdict::Equal,
        (false, true) => Verdict::Unequal,
        (false, false) => Verdict::Unknown,
    })
}

/// Homotopy of two paths with a common source, after translating both to `1`.
pub fn path_equal(
    presentation: &Presentation,
    alpha: &EdgePath,
    beta: &EdgePath,
    oracle: Option<&GroupOracle>,
) -> Result<Verdict, StarError> {
    if alpha.source() != beta.source() || alpha.target() != beta.target() {
        return Ok(Verdict::Unequal);
    }
    let back = alpha.source().inverse();
    let a = lambda_normal_form(presentation, &alpha.act_left(&back))?;
    let b = lambda_normal_form(presentation, &beta.act_left(&back))?;
    equal(presentation, &a, &b, oracle)
}

/// Membership in `π₁(Sq, 1)`, the kernel of the boundary.
pub fn is_identity(presentation: &Presentation, a: &LambdaWord) -> Result<bool, PresentationError> {
    Ok(boundary(presentation, a)?.is_identity())
}

/// The image of an identity in `⊕_R Z(G/L)`.
pub fn cockcroft_image<L: CosetLabeler>(
    presentation: &Presentation,
    a: &LambdaWord,
    labeler: &L,
) -> Result<GroupRingVector<L::Label>, StarError> {
    let b = boundary(presentation, a)?;
    if !b.is_identity() {
        return Err(StarError::NotAnIdentity(presentation.render(&b)));
    }
    let mut out = GroupRingVector::zero();
    for (g, s) in a.factors() {
        out.add_term(g.rel, labeler.label(&g.q)?, s.value());
    }
    Ok(out)
}

/// A λ-word whose abelianization over `Z[F(X)]` is `v`: each coordinate
/// `c·rel[q]` contributes `λ_{rel,q}^c`, in key order.
pub fn lambda_from_vector(v: &GroupRingVector<ReducedWord>) -> LambdaWord {
    v.terms().fold(LambdaWord::identity(), |acc, (rel, q, c)| {
        &acc * &LambdaWord::generator(LambdaGenerator::new(rel, q.clone())).pow(c)
    })
}

/// Realizes a λ-word as an edge path from `1`, as the `∗`-product of the
/// single-edge paths (and their `∗`-inverses).
pub fn to_path(presentation: &Presentation, a: &LambdaWord) -> Result<EdgePath, StarError> {
    let mut path = EdgePath::identity(ReducedWord::identity());
    for (g, s) in a.factors() {
        let single = EdgePath::single(presentation, g.edge(presentation)?.positive())?;
        let factor = match s {
            Sign::Plus => single,
            Sign::Minus => single.star_inverse(),
        };
        path = path.star(&factor);
    }
    Ok(path)
}

pub fn render_lambda(presentation: &Presentation, a: &LambdaWord) -> String {
    syntax::render_terms(a.factors().iter().map(|(g, s)| (g.render(presentation), *s)))
}

/// Parses `lam(rel, word)` factors with optional `^-1`, reducing the result.
pub fn parse_lambda(presentation: &Presentation, text: &str) -> Result<LambdaWord, SyntaxError> {
    let mut factors = Vec::new();
    for term in syntax::parse_terms(text)? {
        term.expect("lam", 2)?;
        let rel = presentation.rel_id(term.args[0])?;
        let q = presentation.parse_reduced(term.args[1])?;
        factors.push((LambdaGenerator::new(rel, q), term.sign));
    }
    Ok(LambdaWord::from_factors(factors))
}
