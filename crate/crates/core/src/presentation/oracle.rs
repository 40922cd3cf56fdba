//! Word-problem oracles for the presented group `G = F(X)/N`.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use super::rewriting::{RewritingSystem, ValidationReport};
use crate::freegroup::{ReducedWord, Word};

/// Default step budget for rewriting and critical-pair joins.
pub const DEFAULT_BUDGET: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("rewriting system has not been validated")]
    NotValidated,
    #[error("rewriting did not terminate within {0} steps")]
    BudgetExhausted(usize),
    #[error("rewriting system failed validation")]
    Invalid(Box<ValidationReport>),
    #[error("oracle is not a rewriting system")]
    NotRewriting,
}

type NormalFormFn = dyn Fn(&ReducedWord) -> ReducedWord + Send + Sync;

/// A capability that computes canonical representatives of `wθ ∈ G`.
#[derive(Clone)]
pub enum GroupOracle {
    /// `G = F(X)`: free reduction is already a normal form.
    FreeReduction,
    RewritingSystem {
        system: RewritingSystem,
        budget: usize,
        validated: bool,
    },
    /// Normal forms supplied by the caller, e.g. a lookup table or a closed
    /// form such as exponent sums. Trusted as given.
    ExternalTable {
        name: String,
        normal_form: Arc<NormalFormFn>,
    },
}

impl fmt::Debug for GroupOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOracle::FreeReduction => f.write_str("FreeReduction"),
            GroupOracle::RewritingSystem {
                system,
                budget,
                validated,
            } => f
                .debug_struct("RewritingSystem")
                .field("rules", &system.rules().len())
                .field("budget", budget)
                .field("validated", validated)
                .finish(),
            GroupOracle::ExternalTable { name, .. } => {
                f.debug_struct("ExternalTable").field("name", name).finish()
            }
        }
    }
}

impl GroupOracle {
    /// Validates `system` and wraps it, failing with the report if any
    /// critical pair does not join or a rule is mis-oriented.
    pub fn validated(system: RewritingSystem, budget: usize) -> Result<Self, OracleError> {
        let report = system.validate(budget);
        if !report.valid() {
            return Err(OracleError::Invalid(Box::new(report)));
        }
        Ok(GroupOracle::RewritingSystem {
            system,
            budget,
            validated: true,
        })
    }

    /// Wraps `system` without validation; normal forms are refused until
    /// [`GroupOracle::validate`] succeeds.
    pub fn unvalidated(system: RewritingSystem, budget: usize) -> Self {
        GroupOracle::RewritingSystem {
            system,
            budget,
            validated: false,
        }
    }

    pub fn external<F>(name: impl Into<String>, normal_form: F) -> Self
    where
        F: Fn(&ReducedWord) -> ReducedWord + Send + Sync + 'static,
    {
        GroupOracle::ExternalTable {
            name: name.into(),
            normal_form: Arc::new(normal_form),
        }
    }

    /// Runs the critical-pair check and marks the oracle validated when it passes.
    pub fn validate(&mut self, budget: usize) -> Result<ValidationReport, OracleError> {
        match self {
            GroupOracle::RewritingSystem {
                system, validated, ..
            } => {
                let report = system.validate(budget);
                *validated = report.valid();
                Ok(report)
            }
            _ => Err(OracleError::NotRewriting),
        }
    }

    /// Canonical representative of the image of `w` in `G`.
    pub fn normal_form(&self, w: &Word) -> Result<ReducedWord, OracleError> {
        self.canonical(&w.reduce())
    }

    /// As [`GroupOracle::normal_form`] for an already reduced word.
    pub fn canonical(&self, w: &ReducedWord) -> Result<ReducedWord, OracleError> {
        match self {
            GroupOracle::FreeReduction => Ok(w.clone()),
            GroupOracle::RewritingSystem {
                system,
                budget,
                validated,
            } => {
                if !validated {
                    return Err(OracleError::NotValidated);
                }
                // Alternate rule rewriting and free reduction until both are
                // stable; each step preserves the image in G.
                let mut current = w.clone();
                let mut spent = 0;
                loop {
                    let mut letters = current.letters().to_vec();
                    while let Some(next) = system.rewrite_once(&letters) {
                        spent += 1;
                        if spent > *budget {
                            return Err(OracleError::BudgetExhausted(*budget));
                        }
                        letters = next;
                    }
                    let reduced = ReducedWord::reduce_letters(letters.iter().copied());
                    let freely_stable = reduced.len() == letters.len();
                    current = reduced;
                    if freely_stable {
                        return Ok(current);
                    }
                }
            }
            GroupOracle::ExternalTable { normal_form, .. } => Ok(normal_form(w)),
        }
    }

    pub fn equal(&self, u: &Word, v: &Word) -> Result<bool, OracleError> {
        Ok(self.normal_form(u)? == self.normal_form(v)?)
    }

    pub fn equal_reduced(&self, u: &ReducedWord, v: &ReducedWord) -> Result<bool, OracleError> {
        Ok(self.canonical(u)? == self.canonical(v)?)
    }
}

/// Critical-pair report for a rewriting oracle; other kinds have nothing to check.
pub fn validate_oracle(oracle: &GroupOracle, budget: usize) -> Result<ValidationReport, OracleError> {
    match oracle {
        GroupOracle::RewritingSystem { system, .. } => Ok(system.validate(budget)),
        _ => Err(OracleError::NotRewriting),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::fixtures;

    fn z2_oracle() -> (crate::presentation::Presentation, GroupOracle) {
        let p = fixtures::free_abelian_rank_two();
        let o = GroupOracle::validated(p.rewriting_system().unwrap().clone(), DEFAULT_BUDGET)
            .unwrap();
        (p, o)
    }

    #[test]
    fn free_reduction_normal_form() {
        let p = fixtures::infinite_cyclic();
        let w = p.alphabet().parse_word("x x^-1").unwrap();
        assert!(GroupOracle::FreeReduction.normal_form(&w).unwrap().is_identity());
    }

    #[test]
    fn z2_commutes_generators() {
        let (p, o) = z2_oracle();
        let w = p.alphabet().parse_word("b a").unwrap();
        assert_eq!(o.normal_form(&w).unwrap(), p.parse_reduced("a b").unwrap());
    }

    #[test]
    fn z2_kills_the_relator() {
        let (p, o) = z2_oracle();
        let c = p.rel_id("c").unwrap();
        assert!(o.canonical(&p.rhat(c).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn oracle_equal_examples() {
        let (p, o) = z2_oracle();
        let w = |s: &str| p.alphabet().parse_word(s).unwrap();
        assert!(o.equal(&w("a b"), &w("b a")).unwrap());
        let q = fixtures::infinite_cyclic();
        let x = Word::from_letters(vec![crate::freegroup::Letter::positive(0)]);
        let y = Word::from_letters(vec![crate::freegroup::Letter::positive(1)]);
        assert!(!GroupOracle::FreeReduction.equal(&x, &y).unwrap());
        let ww = q.alphabet().parse_word("x^3 x^-1").unwrap();
        assert!(GroupOracle::FreeReduction.equal(&ww, &ww).unwrap());
        assert!(o.equal(&w("a^-1 b a"), &w("a^-1 b a")).unwrap());
    }

    #[test]
    fn unvalidated_system_is_refused() {
        let p = fixtures::free_abelian_rank_two();
        let mut o = GroupOracle::unvalidated(p.rewriting_system().unwrap().clone(), 1000);
        let w = p.alphabet().parse_word("b a").unwrap();
        assert_eq!(o.normal_form(&w), Err(OracleError::NotValidated));
        assert!(o.validate(1000).unwrap().valid());
        assert!(o.normal_form(&w).is_ok());
    }

    #[test]
    fn invalid_system_is_rejected() {
        let p = crate::presentation::parse_presentation(
            "generators: a b\noracle rewriting:\nrule: a b -> a\nrule: a b -> b",
        )
        .unwrap();
        let err = GroupOracle::validated(p.rewriting_system().unwrap().clone(), 100).unwrap_err();
        assert!(matches!(err, OracleError::Invalid(_)));
    }

    #[test]
    fn budget_is_enforced() {
        let p = crate::presentation::parse_presentation(
            "generators: a\noracle rewriting:\nrule: a -> a a",
        )
        .unwrap();
        let system = p
            .rewriting_system()
            .unwrap()
            .clone()
            .with_order(crate::presentation::TerminationOrder::Unchecked);
        let o = GroupOracle::validated(system, 50).unwrap();
        let w = p.alphabet().parse_word("a").unwrap();
        assert_eq!(o.normal_form(&w), Err(OracleError::BudgetExhausted(50)));
    }

    #[test]
    fn external_table_is_used_verbatim() {
        let o = GroupOracle::external("trivial", |_| ReducedWord::identity());
        let p = fixtures::free_abelian_rank_two();
        assert!(o
            .canonical(&p.parse_reduced("a b").unwrap())
            .unwrap()
            .is_identity());
        assert!(matches!(validate_oracle(&o, 10), Err(OracleError::NotRewriting)));
    }
}
