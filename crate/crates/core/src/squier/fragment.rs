//! Finite truncations of the reduced Squier complex.
//!
//! Infinitely many edges join any two vertices of a ball, so edges are cut
//! off by the lengths of their contexts `p`, `q` as well as by the lengths of
//! their endpoints. The number of candidate edges grows like
//! `|R| · |ball(context)|²` and candidate cells like `|R|² · |ball(context)|⁴`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Edge, TwoCell};
use crate::freegroup::{ball, ReducedWord};
use crate::presentation::{Presentation, PresentationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FragmentError {
    #[error("unknown export format `{0}` (expected dot or json)")]
    UnknownFormat(String),
    #[error("vertex `{0}` is not in the fragment")]
    VertexAbsent(String),
    #[error("invalid fragment document: {0}")]
    Document(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("fragment invariant violated: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = FragmentError;

    fn from_str(s: &str) -> Result<Self, FragmentError> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(FragmentError::UnknownFormat(other.to_string())),
        }
    }
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExportFormat::Dot => "dot",
            ExportFormat::Json => "json",
        })
    }
}

/// Vertices, edges and cells in shortlex order, with the radii used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexFragment {
    pub vertices: Vec<ReducedWord>,
    pub edges: Vec<Edge>,
    pub cells: Vec<TwoCell>,
    pub vertex_radius: usize,
    pub context_radius: usize,
}

pub fn enumerate_fragment(presentation: &Presentation, vertex_radius: usize, context_radius: usize) -> ComplexFragment {
    let generators = presentation.alphabet().len();
    let vertices = ball(generators, vertex_radius);
    let contexts = ball(generators, context_radius);
    let sides: Vec<_> = presentation
        .relation_ids()
        .map(|id| (id, presentation.sides(id).expect("ids come from the presentation")))
        .collect();

    let mut edges = Vec::new();
    for p in &contexts {
        for (rel, (l, r)) in &sides {
            for q in &contexts {
                let start = ReducedWord::product([p, l, q]);
                let end = ReducedWord::product([p, r, q]);
                if start.len() <= vertex_radius && end.len() <= vertex_radius {
                    edges.push(Edge::new(p.clone(), *rel, q.clone()));
                }
            }
        }
    }
    edges.sort();

    let edge_set: HashSet<&Edge> = edges.iter().collect();
    let mut cells = Vec::new();
    for p in &contexts {
        for (rel, _) in &sides {
            for q in &contexts {
                for p2 in &contexts {
                    for (rel2, _) in &sides {
                        for q2 in &contexts {
                            let cell = TwoCell {
                                p: p.clone(),
                                rel: *rel,
                                q: q.clone(),
                                p2: p2.clone(),
                                rel2: *rel2,
                                q2: q2.clone(),
                            };
                            let sides = cell.edges(presentation).expect("ids come from the presentation");
                            if sides.iter().all(|e| edge_set.contains(e)) {
                                cells.push(cell);
                            }
                        }
                    }
                }
            }
        }
    }
    cells.sort();

    ComplexFragment {
        vertices,
        edges,
        cells,
        vertex_radius,
        context_radius,
    }
}

impl ComplexFragment {
    /// Vertices reachable from `v`, traversing edges in both directions.
    pub fn component_of(&self, presentation: &Presentation, v: &ReducedWord) -> Result<BTreeSet<ReducedWord>, FragmentError> {
        if !self.vertices.contains(v) {
            return Err(FragmentError::VertexAbsent(presentation.render(v)));
        }
        let mut adjacent: HashMap<ReducedWord, Vec<ReducedWord>> = HashMap::new();
        for e in &self.edges {
            let (a, b) = e.endpoints(presentation)?;
            adjacent.entry(a.clone()).or_default().push(b.clone());
            adjacent.entry(b).or_default().push(a);
        }
        let mut seen = BTreeSet::from([v.clone()]);
        let mut queue = VecDeque::from([v.clone()]);
        while let Some(at) = queue.pop_front() {
            for next in adjacent.get(&at).into_iter().flatten() {
                if seen.insert(next.clone()) {
                    queue.push_back(next.clone());
                }
            }
        }
        Ok(seen)
    }

    /// Endpoint membership for edges and edge membership for cell sides.
    pub fn check_invariants(&self, presentation: &Presentation) -> Result<(), FragmentError> {
        let vertices: HashSet<&ReducedWord> = self.vertices.iter().collect();
        for e in &self.edges {
            let (a, b) = e.endpoints(presentation)?;
            if !vertices.contains(&a) || !vertices.contains(&b) {
                return Err(FragmentError::Invariant(format!(
                    "edge {} leaves the vertex set",
                    e.render(presentation)
                )));
            }
        }
        let edges: HashSet<&Edge> = self.edges.iter().collect();
        for c in &self.cells {
            for e in c.edges(presentation)? {
                if !edges.contains(&e) {
                    return Err(FragmentError::Invariant(format!(
                        "cell side {} is not an edge of the fragment",
                        e.render(presentation)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self, presentation: &Presentation) -> String {
        let word = |w: &ReducedWord| presentation.render(w);
        let doc = FragmentDoc {
            vertices: self.vertices.iter().map(word).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeDoc {
                    p: word(&e.p),
                    rel: presentation.rel_name(e.rel).to_string(),
                    q: word(&e.q),
                })
                .collect(),
            cells: self
                .cells
                .iter()
                .map(|c| CellDoc {
                    p: word(&c.p),
                    rel: presentation.rel_name(c.rel).to_string(),
                    q: word(&c.q),
                    p2: word(&c.p2),
                    rel2: presentation.rel_name(c.rel2).to_string(),
                    q2: word(&c.q2),
                })
                .collect(),
            radii: RadiiDoc {
                vertex: self.vertex_radius,
                context: self.context_radius,
            },
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("plain data serializes");
        out.push('\n');
        out
    }

    pub fn from_json(presentation: &Presentation, text: &str) -> Result<ComplexFragment, FragmentError> {
        let doc: FragmentDoc = serde_json::from_str(text).map_err(|e| FragmentError::Document(e.to_string()))?;
        let word = |s: &str| {
            presentation
                .parse_reduced(s)
                .map_err(|e| FragmentError::Document(e.to_string()))
        };
        let vertices = doc.vertices.iter().map(|s| word(s)).collect::<Result<Vec<_>, _>>()?;
        let edges = doc
            .edges
            .iter()
            .map(|e| Ok(Edge::new(word(&e.p)?, presentation.rel_id(&e.rel)?, word(&e.q)?)))
            .collect::<Result<Vec<_>, FragmentError>>()?;
        let cells = doc
            .cells
            .iter()
            .map(|c| {
                Ok(TwoCell {
                    p: word(&c.p)?,
                    rel: presentation.rel_id(&c.rel)?,
                    q: word(&c.q)?,
                    p2: word(&c.p2)?,
                    rel2: presentation.rel_id(&c.rel2)?,
                    q2: word(&c.q2)?,
                })
            })
            .collect::<Result<Vec<_>, FragmentError>>()?;
        Ok(ComplexFragment {
            vertices,
            edges,
            cells,
            vertex_radius: doc.radii.vertex,
            context_radius: doc.radii.context,
        })
    }

    pub fn to_dot(&self, presentation: &Presentation) -> String {
        let mut out = String::from("digraph squier {\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{}\";\n", presentation.render(v)));
        }
        for e in &self.edges {
            let (a, b) = e.endpoints(presentation).expect("fragment edges use known relations");
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}[{}|{}]\"];\n",
                presentation.render(&a),
                presentation.render(&b),
                presentation.rel_name(e.rel),
                presentation.render(&e.p),
                presentation.render(&e.q)
            ));
        }
        out.push_str("}\n");
        out
    }
}

pub fn export_fragment(presentation: &Presentation, fragment: &ComplexFragment, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => fragment.to_dot(presentation),
        ExportFormat::Json => fragment.to_json(presentation),
    }
}

#[derive(Serialize, Deserialize)]
struct FragmentDoc {
    vertices: Vec<String>,
    edges: Vec<EdgeDoc>,
    cells: Vec<CellDoc>,
    radii: RadiiDoc,
}

#[derive(Serialize, Deserialize)]
struct EdgeDoc {
    p: String,
    rel: String,
    q: String,
}

#[derive(Serialize, Deserialize)]
struct CellDoc {
    p: String,
    rel: String,
    q: String,
    p2: String,
    rel2: String,
    q2: String,
}

#[derive(Serialize, Deserialize)]
struct RadiiDoc {
    vertex: usize,
    context: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::fixtures;

    #[test]
    fn cyclic_fragment_is_all_loops() {
        let p = fixtures::infinite_cyclic();
        let f = enumerate_fragment(&p, 1, 1);
        let names: Vec<String> = f.vertices.iter().map(|v| p.render(v)).collect();
        assert_eq!(names, ["1", "x", "x^-1"]);
        assert_eq!(f.edges.len(), 7);
        for e in &f.edges {
            let (a, b) = e.endpoints(&p).unwrap();
            assert_eq!(a, b);
        }
        f.check_invariants(&p).unwrap();
        let one = ReducedWord::identity();
        assert_eq!(f.component_of(&p, &one).unwrap(), BTreeSet::from([one]));
    }

    #[test]
    fn radius_zero_fragment() {
        let p = fixtures::infinite_cyclic();
        let f = enumerate_fragment(&p, 0, 0);
        assert_eq!(f.vertices, vec![ReducedWord::identity()]);
        assert_eq!(f.edges.len(), 1);
        let z2 = fixtures::free_abelian_rank_two();
        let f = enumerate_fragment(&z2, 0, 0);
        assert!(f.edges.is_empty());
    }

    #[test]
    fn json_round_trip_is_byte_stable() {
        let z2 = fixtures::free_abelian_rank_two();
        let f = enumerate_fragment(&z2, 2, 1);
        f.check_invariants(&z2).unwrap();
        let text = f.to_json(&z2);
        let back = ComplexFragment::from_json(&z2, &text).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.to_json(&z2), text);
    }

    #[test]
    fn empty_and_single_edge_exports() {
        let p = fixtures::infinite_cyclic();
        let empty = ComplexFragment {
            vertices: vec![],
            edges: vec![],
            cells: vec![],
            vertex_radius: 0,
            context_radius: 0,
        };
        assert_eq!(empty.to_dot(&p), "digraph squier {\n}\n");
        let v: serde_json::Value = serde_json::from_str(&empty.to_json(&p)).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 0);

        let f = enumerate_fragment(&p, 0, 0);
        assert_eq!(
            f.to_dot(&p),
            "digraph squier {\n  \"1\";\n  \"1\" -> \"1\" [label=\"r1[1|1]\"];\n}\n"
        );
    }

    #[test]
    fn unknown_format_is_rejected() {
        assert_eq!("dot".parse::<ExportFormat>().unwrap(), ExportFormat::Dot);
        assert!(matches!("svg".parse::<ExportFormat>(), Err(FragmentError::UnknownFormat(_))));
    }

    #[test]
    fn absent_vertex_is_an_error() {
        let p = fixtures::infinite_cyclic();
        let f = enumerate_fragment(&p, 1, 0);
        let far = ReducedWord::power(0, 3);
        assert!(matches!(f.component_of(&p, &far), Err(FragmentError::VertexAbsent(_))));
    }
}
