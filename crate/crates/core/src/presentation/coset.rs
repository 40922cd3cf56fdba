//! Labelings of `G/L` used by the Cockcroft test.

use std::fmt::Debug;

use thiserror::Error;

use super::oracle::{GroupOracle, OracleError};
use super::Presentation;
use crate::freegroup::ReducedWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("no coset label for `{0}`")]
    Unlabeled(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// Assigns a coset of a subgroup `L ≤ G` to each element of `F(X)`.
///
/// Implementations must be constant on words that are equal in `G` modulo `L`;
/// only the built-ins are checked.
pub trait CosetLabeler {
    type Label: Ord + Clone + Debug;

    fn label(&self, w: &ReducedWord) -> Result<Self::Label, LabelError>;
}

/// `L = 1`: the label is the oracle normal form.
pub struct TrivialSubgroup<'a> {
    pub oracle: &'a GroupOracle,
}

impl CosetLabeler for TrivialSubgroup<'_> {
    type Label = ReducedWord;

    fn label(&self, w: &ReducedWord) -> Result<ReducedWord, LabelError> {
        Ok(self.oracle.canonical(w)?)
    }
}

/// `L = G`: a single coset.
pub struct WholeGroup;

impl CosetLabeler for WholeGroup {
    type Label = ();

    fn label(&self, _: &ReducedWord) -> Result<(), LabelError> {
        Ok(())
    }
}

/// A finite table from representatives to named cosets, matched through
/// oracle normal forms. Words outside the table are an error.
pub struct CosetTable<'a> {
    oracle: &'a GroupOracle,
    entries: Vec<(ReducedWord, String)>,
    presentation: &'a Presentation,
}

impl<'a> CosetTable<'a> {
    pub fn new(presentation: &'a Presentation, oracle: &'a GroupOracle) -> Self {
        CosetTable {
            oracle,
            entries: Vec::new(),
            presentation,
        }
    }

    pub fn insert(&mut self, representative: &ReducedWord, label: impl Into<String>) -> Result<(), LabelError> {
        let key = self.oracle.canonical(representative)?;
        self.entries.retain(|(k, _)| *k != key);
        self.entries.push((key, label.into()));
        Ok(())
    }

    /// Parses lines `<word> -> <label>`; `#` starts a comment line.
    pub fn parse(
        presentation: &'a Presentation,
        oracle: &'a GroupOracle,
        text: &str,
    ) -> Result<Self, LabelError> {
        let mut table = CosetTable::new(presentation, oracle);
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let syntax = |message: String| LabelError::Syntax { line, message };
            let (word, label) = content
                .split_once("->")
                .ok_or_else(|| syntax("expected `<word> -> <label>`".into()))?;
            let label = label.trim();
            if label.is_empty() {
                return Err(syntax("empty label".into()));
            }
            let w = presentation
                .parse_reduced(word)
                .map_err(|e| syntax(e.to_string()))?;
            table.insert(&w, label)?;
        }
        Ok(table)
    }
}

impl CosetLabeler for CosetTable<'_> {
    type Label = String;

    fn label(&self, w: &ReducedWord) -> Result<String, LabelError> {
        let key = self.oracle.canonical(w)?;
        self.entries
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, label)| label.clone())
            .ok_or_else(|| LabelError::Unlabeled(self.presentation.render(w)))
    }
}
