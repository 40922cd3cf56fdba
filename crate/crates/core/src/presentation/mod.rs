//! Group presentations `⟨X : ℛ⟩`, the relator map `ρ̂`, word-problem oracles
//! for the presented group and coset labelers.
//!
//! Presentation files are line oriented:
//!
//! ```text
//! # Z^2
//! generators: a b
//! relation c: a b -> b a
//! oracle rewriting:
//! rule: b a -> a b
//! ```

mod coset;
mod oracle;
mod rewriting;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::freegroup::{Alphabet, ReducedWord, Word, WordError};

pub use coset::{CosetLabeler, CosetTable, LabelError, TrivialSubgroup, WholeGroup};
pub use oracle::{validate_oracle, GroupOracle, OracleError, DEFAULT_BUDGET};
pub use rewriting::{
    CriticalPair, JoinOutcome, OverlapKind, RewriteRule, RewritingSystem, TerminationOrder,
    ValidationReport, ValidationWarning,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate relation id `{id}`")]
    DuplicateRelation { line: usize, id: String },
    #[error("line {line}: {source}")]
    Word { line: usize, source: WordError },
    #[error("unknown relation `{0}`")]
    UnknownRelation(String),
    #[error("relation index {0} out of range")]
    RelationOutOfRange(usize),
}

/// Index of a relation inside its [`Presentation`]. Relations are identified
/// by position, so duplicate word pairs stay distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelId(usize);

impl RelId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A relation `(l, r)` exactly as written; neither side is reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub id: String,
    pub left: Word,
    pub right: Word,
}

#[derive(Debug, Clone)]
pub struct Presentation {
    alphabet: Alphabet,
    relations: Vec<Relation>,
    by_id: HashMap<String, RelId>,
    rewriting: Option<RewritingSystem>,
}

impl Presentation {
    pub fn new(alphabet: Alphabet, relations: Vec<Relation>) -> Result<Self, PresentationError> {
        let mut by_id = HashMap::new();
        for (i, rel) in relations.iter().enumerate() {
            alphabet
                .check(rel.left.letters())
                .and_then(|_| alphabet.check(rel.right.letters()))
                .map_err(|source| PresentationError::Word { line: 0, source })?;
            if by_id.insert(rel.id.clone(), RelId(i)).is_some() {
                return Err(PresentationError::DuplicateRelation {
                    line: 0,
                    id: rel.id.clone(),
                });
            }
        }
        Ok(Presentation {
            alphabet,
            relations,
            by_id,
            rewriting: None,
        })
    }

    pub fn with_rewriting(mut self, system: RewritingSystem) -> Self {
        self.rewriting = Some(system);
        self
    }

    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        parse_presentation(text)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relations(&self) -> impl Iterator<Item = (RelId, &Relation)> {
        self.relations.iter().enumerate().map(|(i, r)| (RelId(i), r))
    }

    pub fn relation_ids(&self) -> impl Iterator<Item = RelId> {
        (0..self.relations.len()).map(RelId)
    }

    pub fn relation_count(&self) -> usize {
        self.relations.len()
    }

    pub fn relation(&self, id: RelId) -> Result<&Relation, PresentationError> {
        self.relations
            .get(id.0)
            .ok_or(PresentationError::RelationOutOfRange(id.0))
    }

    pub fn rel_id(&self, id: &str) -> Result<RelId, PresentationError> {
        self.by_id
            .get(id)
            .copied()
            .ok_or_else(|| PresentationError::UnknownRelation(id.to_string()))
    }

    pub fn rel_name(&self, id: RelId) -> &str {
        self.relations
            .get(id.0)
            .map(|r| r.id.as_str())
            .unwrap_or("?")
    }

    /// The rewriting system declared in the file's `oracle rewriting:` block.
    pub fn rewriting_system(&self) -> Option<&RewritingSystem> {
        self.rewriting.as_ref()
    }

    /// `ρ̂(l, r) = ρ(l⁻¹ r)`.
    pub fn rhat(&self, id: RelId) -> Result<ReducedWord, PresentationError> {
        self.relation(id).map(rhat)
    }

    /// `(ρ(l), ρ(r))` for the relation.
    pub fn sides(&self, id: RelId) -> Result<(ReducedWord, ReducedWord), PresentationError> {
        self.relation(id).map(|r| (r.left.reduce(), r.right.reduce()))
    }

    pub fn render(&self, w: &ReducedWord) -> String {
        self.alphabet.render(w.letters())
    }

    pub fn parse_reduced(&self, text: &str) -> Result<ReducedWord, WordError> {
        self.alphabet.parse_reduced(text)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: {}", self.alphabet.names().join(" "))?;
        for rel in &self.relations {
            writeln!(
                f,
                "relation {}: {} -> {}",
                rel.id,
                self.alphabet.render(rel.left.letters()),
                self.alphabet.render(rel.right.letters())
            )?;
        }
        if let Some(system) = &self.rewriting {
            writeln!(f, "oracle rewriting:")?;
            for rule in system.rules() {
                writeln!(
                    f,
                    "rule: {} -> {}",
                    self.alphabet.render(&rule.lhs),
                    self.alphabet.render(&rule.rhs)
                )?;
            }
        }
        Ok(())
    }
}

/// `ρ̂(l, r) = ρ(l⁻¹ r)`.
pub fn rhat(rel: &Relation) -> ReducedWord {
    rel.left.inverse().concat(&rel.right).reduce()
}

fn is_valid_id(id: &str) -> bool {
    !id.is_empty()
        && id
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-' || c == '.')
}

fn split_arrow(line: usize, body: &str) -> Result<(&str, &str), PresentationError> {
    body.split_once("->").ok_or_else(|| PresentationError::Syntax {
        line,
        message: "expected `<word> -> <word>`".into(),
    })
}

pub fn parse_presentation(text: &str) -> Result<Presentation, PresentationError> {
    let mut alphabet: Option<Alphabet> = None;
    let mut relations: Vec<Relation> = Vec::new();
    let mut seen: HashMap<String, usize> = HashMap::new();
    let mut rules: Option<Vec<RewriteRule>> = None;

    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let syntax = |message: &str| PresentationError::Syntax {
            line,
            message: message.to_string(),
        };
        let word_err = |source| PresentationError::Word { line, source };

        if let Some(rest) = content.strip_prefix("generators:") {
            if alphabet.is_some() {
                return Err(syntax("generators declared twice"));
            }
            alphabet = Some(Alphabet::new(rest.split_whitespace()).map_err(word_err)?);
            continue;
        }
        let Some(alpha) = alphabet.as_ref() else {
            return Err(syntax("expected `generators:` before any other line"));
        };
        if content == "oracle rewriting:" {
            if rules.is_some() {
                return Err(syntax("oracle block declared twice"));
            }
            rules = Some(Vec::new());
        } else if let Some(rest) = content.strip_prefix("relation ") {
            if rules.is_some() {
                return Err(syntax("relation after the oracle block"));
            }
            let (id, body) = rest
                .split_once(':')
                .ok_or_else(|| syntax("expected `relation <id>: <word> -> <word>`"))?;
            let id = id.trim();
            if !is_valid_id(id) {
                return Err(syntax(&format!("invalid relation id `{id}`")));
            }
            if seen.contains_key(id) {
                return Err(PresentationError::DuplicateRelation {
                    line,
                    id: id.to_string(),
                });
            }
            let (l, r) = split_arrow(line, body)?;
            let left = alpha.parse_word(l).map_err(word_err)?;
            let right = alpha.parse_word(r).map_err(word_err)?;
            seen.insert(id.to_string(), line);
            relations.push(Relation {
                id: id.to_string(),
                left,
                right,
            });
        } else if let Some(rest) = content.strip_prefix("rule:") {
            let Some(rules) = rules.as_mut() else {
                return Err(syntax("`rule:` outside an `oracle rewriting:` block"));
            };
            let (l, r) = split_arrow(line, rest)?;
            let lhs = alpha.parse_word(l).map_err(word_err)?;
            let rhs = alpha.parse_word(r).map_err(word_err)?;
            rules.push(RewriteRule::new(lhs.letters().to_vec(), rhs.letters().to_vec()));
        } else {
            return Err(syntax(&format!("unrecognised line `{content}`")));
        }
    }

    let alphabet = alphabet.ok_or(PresentationError::Syntax {
        line: text.lines().count().max(1),
        message: "missing `generators:` line".into(),
    })?;
    let generators = alphabet.len();
    let presentation = Presentation::new(alphabet, relations)?;
    Ok(match rules {
        Some(rules) => presentation.with_rewriting(RewritingSystem::new(generators, rules)),
        None => presentation,
    })
}

/// Presentations used throughout the tests and documentation.
pub mod fixtures {
    use super::*;

    /// `⟨x : x x⁻¹ = 1⟩`, presenting the infinite cyclic group.
    pub const INFINITE_CYCLIC: &str = "\
# infinite cyclic group; the only relation has trivial relator
generators: x
relation r1: x x^-1 -> 1
";

    /// `⟨a, b : ab = ba⟩` with a complete rewriting system for `Z²`.
    pub const FREE_ABELIAN_RANK_TWO: &str = "\
# free abelian group of rank two
generators: a b
relation c: a b -> b a
oracle rewriting:
rule: a a^-1 -> 1
rule: a^-1 a -> 1
rule: b b^-1 -> 1
rule: b^-1 b -> 1
rule: b a -> a b
rule: b a^-1 -> a^-1 b
rule: b^-1 a -> a b^-1
rule: b^-1 a^-1 -> a^-1 b^-1
";

    pub fn infinite_cyclic() -> Presentation {
        parse_presentation(INFINITE_CYCLIC).expect("fixture parses")
    }

    pub fn free_abelian_rank_two() -> Presentation {
        parse_presentation(FREE_ABELIAN_RANK_TWO).expect("fixture parses")
    }
}
