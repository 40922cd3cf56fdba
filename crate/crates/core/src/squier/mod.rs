//! The reduced Squier complex of a presentation.
//!
//! Vertices are elements of `F(X)`. An edge `(p, rel, q)` applies the relation
//! `rel = (l, r)` in context, running from `plq` to `prq` (all products freely
//! reduced). Paths are syntactic sequences of signed edges; composition never
//! cancels, and homotopy is only ever changed through the explicit moves
//! [`EdgePath::one_homotopy_insert`], [`EdgePath::one_homotopy_delete`] and
//! [`EdgePath::two_cell_replace`].

mod fragment;

use thiserror::Error;

use crate::freegroup::ReducedWord;
use crate::presentation::{Presentation, PresentationError, RelId};
use crate::signed::Sign;
use crate::syntax::{self, SyntaxError};

pub use fragment::{enumerate_fragment, export_fragment, ComplexFragment, ExportFormat, FragmentError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("step {index} does not start where the previous step ends")]
    NotComposable { index: usize },
    #[error("range of the first path differs from the source of the second")]
    EndpointMismatch,
    #[error("position {index} is outside a path of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("inserted edge does not start at the vertex at position {index}")]
    DomainMismatch { index: usize },
    #[error("steps {index} and {} are not mutually inverse", index + 1)]
    NotInverse { index: usize },
    #[error("steps {index} and {} are not a side of the 2-cell", index + 1)]
    NotCellBoundary { index: usize },
}

/// An edge `(p, rel, q)` with `p`, `q` reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub p: ReducedWord,
    pub rel: RelId,
    pub q: ReducedWord,
}

impl Edge {
    pub fn new(p: ReducedWord, rel: RelId, q: ReducedWord) -> Self {
        Edge { p, rel, q }
    }

    /// `(ρ(plq), ρ(prq))`.
    pub fn endpoints(&self, presentation: &Presentation) -> Result<(ReducedWord, ReducedWord), PresentationError> {
        let (l, r) = presentation.sides(self.rel)?;
        Ok((
            ReducedWord::product([&self.p, &l, &self.q]),
            ReducedWord::product([&self.p, &r, &self.q]),
        ))
    }

    pub fn act_left(&self, u: &ReducedWord) -> Edge {
        Edge::new(u * &self.p, self.rel, self.q.clone())
    }

    pub fn act_right(&self, v: &ReducedWord) -> Edge {
        Edge::new(self.p.clone(), self.rel, &self.q * v)
    }

    pub fn positive(self) -> SignedEdge {
        SignedEdge {
            edge: self,
            sign: Sign::Plus,
        }
    }

    pub fn negative(self) -> SignedEdge {
        SignedEdge {
            edge: self,
            sign: Sign::Minus,
        }
    }

    pub fn render(&self, presentation: &Presentation) -> String {
        format!(
            "edge({}, {}, {})",
            presentation.render(&self.p),
            presentation.rel_name(self.rel),
            presentation.render(&self.q)
        )
    }
}

/// An edge traversed forwards (`Plus`) or backwards (`Minus`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedEdge {
    pub edge: Edge,
    pub sign: Sign,
}

impl SignedEdge {
    /// `(domain, range)` respecting the direction of traversal.
    pub fn endpoints(&self, presentation: &Presentation) -> Result<(ReducedWord, ReducedWord), PresentationError> {
        let (start, end) = self.edge.endpoints(presentation)?;
        Ok(match self.sign {
            Sign::Plus => (start, end),
            Sign::Minus => (end, start),
        })
    }

    pub fn inverse(&self) -> SignedEdge {
        SignedEdge {
            edge: self.edge.clone(),
            sign: self.sign.flip(),
        }
    }

    pub fn act_left(&self, u: &ReducedWord) -> SignedEdge {
        SignedEdge {
            edge: self.edge.act_left(u),
            sign: self.sign,
        }
    }

    pub fn act_right(&self, v: &ReducedWord) -> SignedEdge {
        SignedEdge {
            edge: self.edge.act_right(v),
            sign: self.sign,
        }
    }
}

/// A composable sequence of signed edges from `source` to `target`.
/// The empty path is the identity `1_source`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgePath {
    source: ReducedWord,
    target: ReducedWord,
    steps: Vec<SignedEdge>,
}

impl EdgePath {
    pub fn identity(vertex: ReducedWord) -> Self {
        EdgePath {
            target: vertex.clone(),
            source: vertex,
            steps: Vec::new(),
        }
    }

    pub fn new(presentation: &Presentation, source: ReducedWord, steps: Vec<SignedEdge>) -> Result<Self, PathError> {
        let mut at = source.clone();
        for (index, step) in steps.iter().enumerate() {
            let (d, r) = step.endpoints(presentation)?;
            if d != at {
                return Err(PathError::NotComposable { index });
            }
            at = r;
        }
        Ok(EdgePath {
            source,
            target: at,
            steps,
        })
    }

    pub fn single(presentation: &Presentation, step: SignedEdge) -> Result<Self, PathError> {
        let (d, _) = step.endpoints(presentation)?;
        EdgePath::new(presentation, d, vec![step])
    }

    /// A path whose source is the domain of its first step.
    pub fn from_steps(presentation: &Presentation, steps: Vec<SignedEdge>) -> Result<Self, PathError> {
        let source = match steps.first() {
            Some(first) => first.endpoints(presentation)?.0,
            None => ReducedWord::identity(),
        };
        EdgePath::new(presentation, source, steps)
    }

    pub fn source(&self) -> &ReducedWord {
        &self.source
    }

    pub fn target(&self) -> &ReducedWord {
        &self.target
    }

    pub fn steps(&self) -> &[SignedEdge] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The vertices visited, `len() + 1` of them.
    pub fn vertices(&self, presentation: &Presentation) -> Result<Vec<ReducedWord>, PathError> {
        let mut out = vec![self.source.clone()];
        for step in &self.steps {
            out.push(step.endpoints(presentation)?.1);
        }
        Ok(out)
    }

    /// `u ▷ α`: left multiplication of every `p` component.
    pub fn act_left(&self, u: &ReducedWord) -> EdgePath {
        EdgePath {
            source: u * &self.source,
            target: u * &self.target,
            steps: self.steps.iter().map(|s| s.act_left(u)).collect(),
        }
    }

    /// `α ◁ v`: right multiplication of every `q` component.
    pub fn act_right(&self, v: &ReducedWord) -> EdgePath {
        EdgePath {
            source: &self.source * v,
            target: &self.target * v,
            steps: self.steps.iter().map(|s| s.act_right(v)).collect(),
        }
    }

    /// Groupoid composition `α ∘ β` (first `α`, then `β`); purely syntactic.
    pub fn compose(&self, other: &EdgePath) -> Result<EdgePath, PathError> {
        if self.target != other.source {
            return Err(PathError::EndpointMismatch);
        }
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        Ok(EdgePath {
            source: self.source.clone(),
            target: other.target.clone(),
            steps,
        })
    }

    /// The groupoid inverse `α°`.
    pub fn inverse(&self) -> EdgePath {
        EdgePath {
            source: self.target.clone(),
            target: self.source.clone(),
            steps: self.steps.iter().rev().map(SignedEdge::inverse).collect(),
        }
    }

    /// `α ∗ β = (α ◁ β𝐝) ∘ (α𝐫 ▷ β)`.
    pub fn star(&self, other: &EdgePath) -> EdgePath {
        self.act_right(&other.source)
            .compose(&other.act_left(&self.target))
            .expect("α ◁ β𝐝 ends where α𝐫 ▷ β starts")
    }

    /// `α ⊛ β = (α𝐝 ▷ β) ∘ (α ◁ β𝐫)`.
    pub fn circstar(&self, other: &EdgePath) -> EdgePath {
        other
            .act_left(&self.source)
            .compose(&self.act_right(&other.target))
            .expect("α𝐝 ▷ β ends where α ◁ β𝐫 starts")
    }

    /// `α* = α𝐫⁻¹ ▷ α° ◁ α𝐝⁻¹`, the inverse for `∗`.
    pub fn star_inverse(&self) -> EdgePath {
        self.inverse()
            .act_left(&self.target.inverse())
            .act_right(&self.source.inverse())
    }

    fn vertex_at(&self, presentation: &Presentation, index: usize) -> Result<ReducedWord, PathError> {
        if index > self.steps.len() {
            return Err(PathError::IndexOutOfRange {
                index,
                len: self.steps.len(),
            });
        }
        Ok(match index {
            0 => self.source.clone(),
            i => self.steps[i - 1].endpoints(presentation)?.1,
        })
    }

    /// Inserts `e e°` before step `index`.
    pub fn one_homotopy_insert(
        &self,
        presentation: &Presentation,
        index: usize,
        e: &SignedEdge,
    ) -> Result<EdgePath, PathError> {
        let at = self.vertex_at(presentation, index)?;
        if e.endpoints(presentation)?.0 != at {
            return Err(PathError::DomainMismatch { index });
        }
        let mut steps = self.steps.clone();
        steps.splice(index..index, [e.clone(), e.inverse()]);
        Ok(EdgePath {
            source: self.source.clone(),
            target: self.target.clone(),
            steps,
        })
    }

    /// Removes steps `index` and `index + 1`, which must be mutually inverse.
    pub fn one_homotopy_delete(&self, index: usize) -> Result<EdgePath, PathError> {
        if index + 1 >= self.steps.len() {
            return Err(PathError::IndexOutOfRange {
                index,
                len: self.steps.len(),
            });
        }
        if self.steps[index + 1] != self.steps[index].inverse() {
            return Err(PathError::NotInverse { index });
        }
        let mut steps = self.steps.clone();
        steps.drain(index..index + 2);
        Ok(EdgePath {
            source: self.source.clone(),
            target: self.target.clone(),
            steps,
        })
    }

    /// Replaces steps `index, index + 1` by the other side of `cell` when
    /// they traverse one side of it (in either direction).
    pub fn two_cell_replace(
        &self,
        presentation: &Presentation,
        index: usize,
        cell: &TwoCell,
    ) -> Result<EdgePath, PathError> {
        if index + 1 >= self.steps.len() {
            return Err(PathError::IndexOutOfRange {
                index,
                len: self.steps.len(),
            });
        }
        let (top, bottom) = cell.boundary(presentation)?;
        let window = &self.steps[index..index + 2];
        let sides = [
            (top.clone(), bottom.clone()),
            (bottom.clone(), top.clone()),
            (top.inverse(), bottom.inverse()),
            (bottom.inverse(), top.inverse()),
        ];
        let replacement = sides
            .iter()
            .find(|(from, _)| from.steps() == window)
            .map(|(_, to)| to.steps().to_vec())
            .ok_or(PathError::NotCellBoundary { index })?;
        let mut steps = self.steps.clone();
        steps.splice(index..index + 2, replacement);
        Ok(EdgePath {
            source: self.source.clone(),
            target: self.target.clone(),
            steps,
        })
    }

    pub fn render(&self, presentation: &Presentation) -> String {
        syntax::render_terms(
            self.steps
                .iter()
                .map(|s| (s.edge.render(presentation), s.sign)),
        )
    }

    /// Parses `edge(p, rel, q)` terms. The source defaults to the domain of
    /// the first step, or to `1` for the empty path.
    pub fn parse(
        presentation: &Presentation,
        text: &str,
        source: Option<ReducedWord>,
    ) -> Result<EdgePath, PathParseError> {
        let mut steps = Vec::new();
        for term in syntax::parse_terms(text)? {
            term.expect("edge", 3)?;
            let p = presentation.parse_reduced(term.args[0]).map_err(SyntaxError::from)?;
            let rel = presentation.rel_id(term.args[1]).map_err(SyntaxError::from)?;
            let q = presentation.parse_reduced(term.args[2]).map_err(SyntaxError::from)?;
            steps.push(SignedEdge {
                edge: Edge::new(p, rel, q),
                sign: term.sign,
            });
        }
        Ok(match source {
            Some(source) => EdgePath::new(presentation, source, steps)?,
            None => EdgePath::from_steps(presentation, steps)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathParseError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Path(#[from] PathError),
}

/// A square 2-cell for two non-overlapping relation applications
/// `(p, rel, q)` and `(p2, rel2, q2)` in the word `p l q p2 l2 q2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoCell {
    pub p: ReducedWord,
    pub rel: RelId,
    pub q: ReducedWord,
    pub p2: ReducedWord,
    pub rel2: RelId,
    pub q2: ReducedWord,
}

impl TwoCell {
    /// The four sides `(α, β, γ, δ)`: top `α ∘ β`, bottom `γ ∘ δ`.
    pub fn edges(&self, presentation: &Presentation) -> Result<[Edge; 4], PresentationError> {
        let (l, r) = presentation.sides(self.rel)?;
        let (l2, r2) = presentation.sides(self.rel2)?;
        let alpha = Edge::new(
            self.p.clone(),
            self.rel,
            ReducedWord::product([&self.q, &self.p2, &l2, &self.q2]),
        );
        let beta = Edge::new(
            ReducedWord::product([&self.p, &r, &self.q, &self.p2]),
            self.rel2,
            self.q2.clone(),
        );
        let gamma = Edge::new(
            ReducedWord::product([&self.p, &l, &self.q, &self.p2]),
            self.rel2,
            self.q2.clone(),
        );
        let delta = Edge::new(
            self.p.clone(),
            self.rel,
            ReducedWord::product([&self.q, &self.p2, &r2, &self.q2]),
        );
        Ok([alpha, beta, gamma, delta])
    }

    /// Both boundary paths, from `plqp2l2q2` to `prqp2r2q2`.
    pub fn boundary(&self, presentation: &Presentation) -> Result<(EdgePath, EdgePath), PathError> {
        let [alpha, beta, gamma, delta] = self.edges(presentation)?;
        let top = EdgePath::from_steps(presentation, vec![alpha.positive(), beta.positive()])?;
        let bottom = EdgePath::from_steps(presentation, vec![gamma.positive(), delta.positive()])?;
        debug_assert_eq!(top.source(), bottom.source());
        debug_assert_eq!(top.target(), bottom.target());
        Ok((top, bottom))
    }

    /// The cell whose top-left corner is `source`, for the given relations
    /// and contexts `q`, `p2`, `q2`; `p` is solved for.
    pub fn at_source(
        presentation: &Presentation,
        source: &ReducedWord,
        rel: RelId,
        q: ReducedWord,
        p2: ReducedWord,
        rel2: RelId,
        q2: ReducedWord,
    ) -> Result<TwoCell, PresentationError> {
        let (l, _) = presentation.sides(rel)?;
        let (l2, _) = presentation.sides(rel2)?;
        let tail = ReducedWord::product([&l, &q, &p2, &l2, &q2]);
        Ok(TwoCell {
            p: source * &tail.inverse(),
            rel,
            q,
            p2,
            rel2,
            q2,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::fixtures;

    fn w(p: &Presentation, s: &str) -> ReducedWord {
        p.parse_reduced(s).unwrap()
    }

    #[test]
    fn cyclic_edges_are_loops() {
        let p = fixtures::infinite_cyclic();
        let r1 = p.rel_id("r1").unwrap();
        for q in -3..=3 {
            let e = Edge::new(ReducedWord::power(0, -q), r1, ReducedWord::power(0, q));
            let (d, r) = e.endpoints(&p).unwrap();
            assert!(d.is_identity() && r.is_identity());
        }
    }

    #[test]
    fn commutator_edge_endpoints() {
        let p = fixtures::free_abelian_rank_two();
        let c = p.rel_id("c").unwrap();
        let e = Edge::new(ReducedWord::identity(), c, ReducedWord::identity());
        assert_eq!(e.endpoints(&p).unwrap(), (w(&p, "a b"), w(&p, "b a")));
        let e = Edge::new(w(&p, "a"), c, w(&p, "b"));
        assert_eq!(e.endpoints(&p).unwrap(), (w(&p, "a a b b"), w(&p, "a b a b")));
    }

    #[test]
    fn action_examples() {
        let p = fixtures::infinite_cyclic();
        let r1 = p.rel_id("r1").unwrap();
        let e = EdgePath::single(&p, Edge::new(w(&p, "x^-1"), r1, ReducedWord::identity()).positive()).unwrap();
        let moved = e.act_left(&w(&p, "x"));
        assert_eq!(moved.steps()[0].edge, Edge::new(ReducedWord::identity(), r1, ReducedWord::identity()));

        let z2 = fixtures::free_abelian_rank_two();
        let c = z2.rel_id("c").unwrap();
        let e = EdgePath::single(&z2, Edge::new(ReducedWord::identity(), c, ReducedWord::identity()).positive()).unwrap();
        let moved = e.act_right(&w(&z2, "b"));
        assert_eq!(moved.steps()[0].edge, Edge::new(ReducedWord::identity(), c, w(&z2, "b")));
        assert_eq!(moved.source(), &w(&z2, "a b b"));
    }

    #[test]
    fn compose_identity_and_inverse() {
        let z2 = fixtures::free_abelian_rank_two();
        let c = z2.rel_id("c").unwrap();
        let beta = EdgePath::single(&z2, Edge::new(w(&z2, "a"), c, w(&z2, "b")).positive()).unwrap();
        let id = EdgePath::identity(beta.source().clone());
        assert_eq!(id.compose(&beta).unwrap(), beta);
        let loop_ = beta.compose(&beta.inverse()).unwrap();
        assert_eq!(loop_.len(), 2);
        assert_eq!(loop_.target(), beta.source());
        assert_eq!(beta.compose(&beta), Err(PathError::EndpointMismatch));
    }

    #[test]
    fn inverse_examples() {
        let z2 = fixtures::free_abelian_rank_two();
        let c = z2.rel_id("c").unwrap();
        let v = w(&z2, "a");
        assert_eq!(EdgePath::identity(v.clone()).inverse(), EdgePath::identity(v));
        let e = EdgePath::single(&z2, Edge::new(ReducedWord::identity(), c, ReducedWord::identity()).positive()).unwrap();
        let inv = e.inverse();
        assert_eq!(inv.steps()[0].sign, Sign::Minus);
        assert_eq!(inv.source(), &w(&z2, "b a"));
        assert_eq!(inv.inverse(), e);
    }

    #[test]
    fn star_of_single_edges_matches_cell_sides() {
        let z2 = fixtures::free_abelian_rank_two();
        let c = z2.rel_id("c").unwrap();
        let (p, q, p2, q2) = (w(&z2, "a"), w(&z2, "b^-1"), w(&z2, "b"), w(&z2, "a^-1"));
        let alpha = EdgePath::single(&z2, Edge::new(p.clone(), c, q.clone()).positive()).unwrap();
        let beta = EdgePath::single(&z2, Edge::new(p2.clone(), c, q2.clone()).positive()).unwrap();
        let cell = TwoCell {
            p,
            rel: c,
            q,
            p2,
            rel2: c,
            q2,
        };
        let (top, bottom) = cell.boundary(&z2).unwrap();
        assert_eq!(alpha.star(&beta), top);
        assert_eq!(alpha.circstar(&beta), bottom);
    }

    #[test]
    fn star_of_identities() {
        let z2 = fixtures::free_abelian_rank_two();
        let (u, v) = (w(&z2, "a b"), w(&z2, "b^-1 a"));
        let s = EdgePath::identity(u.clone()).star(&EdgePath::identity(v.clone()));
        assert_eq!(s, EdgePath::identity(&u * &v));
    }

    #[test]
    fn star_inverse_of_single_edge() {
        let z2 = fixtures::free_abelian_rank_two();
        let c = z2.rel_id("c").unwrap();
        let e = Edge::new(w(&z2, "a"), c, w(&z2, "b"));
        let (d, r) = e.endpoints(&z2).unwrap();
        let path = EdgePath::single(&z2, e.clone().positive()).unwrap();
        let expected = path.inverse().act_right(&d.inverse()).act_left(&r.inverse());
        assert_eq!(path.star_inverse(), expected);
        assert_eq!(
            EdgePath::identity(w(&z2, "a")).star_inverse(),
            EdgePath::identity(w(&z2, "a^-1"))
        );
        let s = path.star(&path.star_inverse());
        assert!(s.source().is_identity() && s.target().is_identity());
    }

    #[test]
    fn commutator_cell_boundary() {
        let z2 = fixtures::free_abelian_rank_two();
        let c = z2.rel_id("c").unwrap();
        let one = ReducedWord::identity();
        let cell = TwoCell {
            p: one.clone(),
            rel: c,
            q: one.clone(),
            p2: one.clone(),
            rel2: c,
            q2: one.clone(),
        };
        let (top, bottom) = cell.boundary(&z2).unwrap();
        assert_eq!(top.render(&z2), "edge(1, c, a b); edge(b a, c, 1)");
        assert_eq!(bottom.render(&z2), "edge(a b, c, 1); edge(1, c, b a)");
        assert_eq!(top.source(), &w(&z2, "a b a b"));
        assert_eq!(top.target(), &w(&z2, "b a b a"));
    }

    #[test]
    fn exchange_square_labels() {
        let z2 = fixtures::free_abelian_rank_two();
        let c = z2.rel_id("c").unwrap();
        let (u, v) = (w(&z2, "a"), w(&z2, "b^-1"));
        let (l, r) = z2.sides(c).unwrap();
        let (s, d) = (l.clone(), r.clone());
        let one = ReducedWord::identity();
        let cell = TwoCell::at_source(&z2, &one, c, v.clone(), one.clone(), c, u.clone()).unwrap();
        let [alpha, beta, gamma, delta] = cell.edges(&z2).unwrap();
        let corner = ReducedWord::product([&l, &v, &s, &u]).inverse();
        assert_eq!(alpha, Edge::new(corner.clone(), c, ReducedWord::product([&v, &s, &u])));
        assert_eq!(beta, Edge::new(ReducedWord::product([&corner, &r, &v]), c, u.clone()));
        assert_eq!(gamma, Edge::new(ReducedWord::product([&s, &u]).inverse(), c, u.clone()));
        assert_eq!(delta, Edge::new(corner, c, ReducedWord::product([&v, &d, &u])));
        let (top, bottom) = cell.boundary(&z2).unwrap();
        assert!(top.source().is_identity());
        assert_eq!(top.target(), bottom.target());
    }

    #[test]
    fn one_homotopy_moves() {
        let z2 = fixtures::free_abelian_rank_two();
        let c = z2.rel_id("c").unwrap();
        let e = Edge::new(w(&z2, "a"), c, w(&z2, "b")).positive();
        let path = EdgePath::single(&z2, e.clone()).unwrap();
        let f = Edge::new(ReducedWord::identity(), c, w(&z2, "a b")).positive();
        assert_eq!(&f.endpoints(&z2).unwrap().0, path.target());
        let longer = path.one_homotopy_insert(&z2, 1, &f).unwrap();
        assert_eq!(longer.len(), 3);
        assert_eq!(longer.one_homotopy_delete(1).unwrap(), path);

        let pair = EdgePath::identity(path.source().clone()).one_homotopy_insert(&z2, 0, &e).unwrap();
        assert!(pair.one_homotopy_delete(0).unwrap().is_empty());

        assert_eq!(
            path.one_homotopy_insert(&z2, 0, &f),
            Err(PathError::DomainMismatch { index: 0 })
        );
        assert_eq!(longer.one_homotopy_delete(0), Err(PathError::NotInverse { index: 0 }));
        assert!(matches!(path.one_homotopy_delete(0), Err(PathError::IndexOutOfRange { .. })));
    }

    #[test]
    fn two_cell_replacement_swaps_sides() {
        let z2 = fixtures::free_abelian_rank_two();
        let c = z2.rel_id("c").unwrap();
        let one = ReducedWord::identity();
        let cell = TwoCell {
            p: one.clone(),
            rel: c,
            q: one.clone(),
            p2: one.clone(),
            rel2: c,
            q2: one,
        };
        let (top, bottom) = cell.boundary(&z2).unwrap();
        assert_eq!(top.two_cell_replace(&z2, 0, &cell).unwrap(), bottom);
        assert_eq!(bottom.two_cell_replace(&z2, 0, &cell).unwrap(), top);
        assert_eq!(top.inverse().two_cell_replace(&z2, 0, &cell).unwrap(), bottom.inverse());
        let mixed = top.steps()[..1].to_vec();
        let bad = EdgePath::from_steps(&z2, [mixed.clone(), vec![mixed[0].inverse()]].concat()).unwrap();
        assert_eq!(bad.two_cell_replace(&z2, 0, &cell), Err(PathError::NotCellBoundary { index: 0 }));
    }

    #[test]
    fn path_text_round_trip() {
        let z2 = fixtures::free_abelian_rank_two();
        let path = EdgePath::parse(&z2, "edge(1, c, a b); edge(b a, c, 1)", None).unwrap();
        assert_eq!(path.source(), &w(&z2, "a b a b"));
        assert_eq!(EdgePath::parse(&z2, &path.render(&z2), None).unwrap(), path);
        assert!(EdgePath::parse(&z2, "edge(1, c, 1); edge(1, c, 1)", None).is_err());
        assert!(EdgePath::parse(&z2, "edge(1, d, 1)", None).is_err());
        assert_eq!(EdgePath::parse(&z2, "1", None).unwrap(), EdgePath::identity(ReducedWord::identity()));
    }
}
