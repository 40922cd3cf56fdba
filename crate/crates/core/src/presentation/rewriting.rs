//! String rewriting over the letters of `X ∪ X⁻¹` and the critical-pair
//! check used to validate user supplied systems.
//!
//! Letters are plain symbols here: `x x⁻¹` is not cancelled unless a rule
//! says so.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::freegroup::{shortlex_cmp, Alphabet, Letter};

/// `(rule_a, rule_b, kind, word, left, right)`
type Overlap = (usize, usize, OverlapKind, Vec<Letter>, Vec<Letter>, Vec<Letter>);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RewriteRule {
    pub lhs: Vec<Letter>,
    pub rhs: Vec<Letter>,
}

impl RewriteRule {
    pub fn new(lhs: Vec<Letter>, rhs: Vec<Letter>) -> Self {
        RewriteRule { lhs, rhs }
    }
}

/// The reduction order each rule must decrease.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TerminationOrder {
    #[default]
    Shortlex,
    /// Orientation is trusted; termination is only guarded by the step budget.
    Unchecked,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewritingSystem {
    generators: usize,
    rules: Vec<RewriteRule>,
    order: TerminationOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverlapKind {
    /// A suffix of the first left-hand side of this length is a prefix of the second.
    Proper { overlap: usize },
    /// The second left-hand side occurs inside the first at this offset.
    Containment { offset: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JoinOutcome {
    Joined { common: Vec<Letter> },
    Distinct { left: Vec<Letter>, right: Vec<Letter> },
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPair {
    pub rule_a: usize,
    pub rule_b: usize,
    pub kind: OverlapKind,
    /// The overlapped word both rules apply to.
    pub word: Vec<Letter>,
    /// Result of rewriting `word` with `rule_a`.
    pub left: Vec<Letter>,
    /// Result of rewriting `word` with `rule_b`.
    pub right: Vec<Letter>,
    pub outcome: JoinOutcome,
}

impl CriticalPair {
    pub fn joins(&self) -> bool {
        matches!(self.outcome, JoinOutcome::Joined { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationWarning {
    /// Some `g g⁻¹ → 1` or `g⁻¹ g → 1` rule is missing.
    MissingInverseRules,
}

impl ValidationWarning {
    pub fn message(self) -> &'static str {
        match self {
            ValidationWarning::MissingInverseRules => {
                "no inverse rules: oracle sound only on positive words"
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub budget: usize,
    pub pairs: Vec<CriticalPair>,
    /// Indices of rules that do not decrease in the termination order.
    pub order_violations: Vec<usize>,
    pub warnings: Vec<ValidationWarning>,
}

impl ValidationReport {
    pub fn valid(&self) -> bool {
        self.order_violations.is_empty() && self.pairs.iter().all(CriticalPair::joins)
    }

    pub fn failing_pairs(&self) -> impl Iterator<Item = &CriticalPair> {
        self.pairs.iter().filter(|p| !p.joins())
    }

    /// Human readable report; rule numbers are 1-based in file order.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        let w = |letters: &[Letter]| alphabet.render(letters);
        let mut out = String::new();
        let _ = writeln!(out, "critical pairs: {}", self.pairs.len());
        for (i, pair) in self.pairs.iter().enumerate() {
            let kind = match pair.kind {
                OverlapKind::Proper { overlap } => format!("overlap {overlap}"),
                OverlapKind::Containment { offset } => format!("contains at {offset}"),
            };
            let verdict = match &pair.outcome {
                JoinOutcome::Joined { common } => format!("joined at `{}`", w(common)),
                JoinOutcome::Distinct { left, right } => {
                    format!("not joined: `{}` vs `{}`", w(left), w(right))
                }
                JoinOutcome::BudgetExhausted => "budget exhausted".to_string(),
            };
            let _ = writeln!(
                out,
                "pair {}: rules {} and {} ({kind}) on `{}`: `{}` / `{}` -> {verdict}",
                i + 1,
                pair.rule_a + 1,
                pair.rule_b + 1,
                w(&pair.word),
                w(&pair.left),
                w(&pair.right),
            );
        }
        if self.order_violations.is_empty() {
            let _ = writeln!(out, "order violations: none");
        } else {
            let rules: Vec<String> = self
                .order_violations
                .iter()
                .map(|r| (r + 1).to_string())
                .collect();
            let _ = writeln!(out, "order violations: rules {}", rules.join(", "));
        }
        for warning in &self.warnings {
            let _ = writeln!(out, "warning: {}", warning.message());
        }
        let _ = writeln!(out, "valid: {}", self.valid());
        out
    }
}

fn splice(word: &[Letter], at: usize, len: usize, replacement: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::with_capacity(word.len() - len + replacement.len());
    out.extend_from_slice(&word[..at]);
    out.extend_from_slice(replacement);
    out.extend_from_slice(&word[at + len..]);
    out
}

impl RewritingSystem {
    pub fn new(generators: usize, rules: Vec<RewriteRule>) -> Self {
        RewritingSystem {
            generators,
            rules,
            order: TerminationOrder::default(),
        }
    }

    pub fn with_order(mut self, order: TerminationOrder) -> Self {
        self.order = order;
        self
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn order(&self) -> TerminationOrder {
        self.order
    }

    /// One rewrite at the leftmost redex; ties at a position go to the
    /// earliest rule.
    pub fn rewrite_once(&self, word: &[Letter]) -> Option<Vec<Letter>> {
        for pos in 0..word.len() {
            for rule in &self.rules {
                if !rule.lhs.is_empty() && word[pos..].starts_with(&rule.lhs) {
                    return Some(splice(word, pos, rule.lhs.len(), &rule.rhs));
                }
            }
        }
        None
    }

    /// Rewrites to an irreducible word, or `None` after `budget` steps.
    pub fn normalize(&self, word: &[Letter], budget: usize) -> Option<Vec<Letter>> {
        let mut current = word.to_vec();
        for _ in 0..=budget {
            match self.rewrite_once(&current) {
                Some(next) => current = next,
                None => return Some(current),
            }
        }
        None
    }

    fn decreasing(&self, rule: &RewriteRule) -> bool {
        match self.order {
            TerminationOrder::Shortlex => shortlex_cmp(&rule.lhs, &rule.rhs) == Ordering::Greater,
            TerminationOrder::Unchecked => !rule.lhs.is_empty(),
        }
    }

    fn has_inverse_rules(&self) -> bool {
        (0..self.generators).all(|g| {
            let x = Letter::positive(g);
            let xi = Letter::negative(g);
            [[x, xi], [xi, x]].iter().all(|lhs| {
                self.rules
                    .iter()
                    .any(|r| r.lhs.as_slice() == lhs.as_slice() && r.rhs.is_empty())
            })
        })
    }

    /// Every overlap of two left-hand sides before joinability is decided.
    fn overlaps(&self) -> Vec<Overlap> {
        let mut found = Vec::new();
        for (i, a) in self.rules.iter().enumerate() {
            for (j, b) in self.rules.iter().enumerate() {
                let (la, lb) = (&a.lhs, &b.lhs);
                if la.is_empty() || lb.is_empty() {
                    continue;
                }
                // suffix of la == prefix of lb, both strictly shorter than either side
                for k in 1..la.len().min(lb.len()) {
                    if la[la.len() - k..] == lb[..k] {
                        let mut word = la.clone();
                        word.extend_from_slice(&lb[k..]);
                        let mut left = a.rhs.clone();
                        left.extend_from_slice(&lb[k..]);
                        let mut right = la[..la.len() - k].to_vec();
                        right.extend_from_slice(&b.rhs);
                        found.push((i, j, OverlapKind::Proper { overlap: k }, word, left, right));
                    }
                }
                let contained = lb.len() < la.len() || (lb.len() == la.len() && i < j);
                if contained {
                    for offset in 0..=la.len() - lb.len() {
                        if la[offset..offset + lb.len()] == lb[..] {
                            let right = splice(la, offset, lb.len(), &b.rhs);
                            found.push((
                                i,
                                j,
                                OverlapKind::Containment { offset },
                                la.clone(),
                                a.rhs.clone(),
                                right,
                            ));
                        }
                    }
                }
            }
        }
        found
    }

    pub fn critical_pairs(&self, budget: usize) -> Vec<CriticalPair> {
        self.overlaps()
            .into_iter()
            .map(|(rule_a, rule_b, kind, word, left, right)| {
                let outcome = match (self.normalize(&left, budget), self.normalize(&right, budget)) {
                    (Some(l), Some(r)) if l == r => JoinOutcome::Joined { common: l },
                    (Some(l), Some(r)) => JoinOutcome::Distinct { left: l, right: r },
                    _ => JoinOutcome::BudgetExhausted,
                };
                CriticalPair {
                    rule_a,
                    rule_b,
                    kind,
                    word,
                    left,
                    right,
                    outcome,
                }
            })
            .collect()
    }

    pub fn validate(&self, budget: usize) -> ValidationReport {
        let order_violations = self
            .rules
            .iter()
            .enumerate()
            .filter(|(_, r)| !self.decreasing(r))
            .map(|(i, _)| i)
            .collect();
        let mut warnings = Vec::new();
        if !self.has_inverse_rules() {
            warnings.push(ValidationWarning::MissingInverseRules);
        }
        ValidationReport {
            budget,
            pairs: self.critical_pairs(budget),
            order_violations,
            warnings,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(alpha: &Alphabet, rules: &[(&str, &str)]) -> RewritingSystem {
        let rules = rules
            .iter()
            .map(|(l, r)| {
                RewriteRule::new(
                    alpha.parse_word(l).unwrap().letters().to_vec(),
                    alpha.parse_word(r).unwrap().letters().to_vec(),
                )
            })
            .collect();
        RewritingSystem::new(alpha.len(), rules)
    }

    #[test]
    fn single_rule_has_no_overlaps() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let report = sys(&ab, &[("a b", "b")]).validate(100);
        assert!(report.pairs.is_empty());
        assert!(report.valid());
        assert_eq!(report.warnings, vec![ValidationWarning::MissingInverseRules]);
    }

    #[test]
    fn same_lhs_distinct_rhs_does_not_join() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let report = sys(&ab, &[("a b", "a"), ("a b", "b")]).validate(100);
        assert_eq!(report.pairs.len(), 1);
        let pair = &report.pairs[0];
        assert_eq!(pair.kind, OverlapKind::Containment { offset: 0 });
        assert_eq!(ab.render(&pair.left), "a");
        assert_eq!(ab.render(&pair.right), "b");
        assert!(!report.valid());
    }

    #[test]
    fn shortlex_violation_is_reported() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let report = sys(&ab, &[("a b", "b a")]).validate(100);
        assert_eq!(report.order_violations, vec![0]);
        assert!(!report.valid());
        let unchecked = sys(&ab, &[("a b", "b a")]).with_order(TerminationOrder::Unchecked);
        assert!(unchecked.validate(100).order_violations.is_empty());
    }

    #[test]
    fn budget_exhaustion_is_per_pair() {
        // a -> a a loops; overlap of rule 1 with itself never stabilises.
        let a = Alphabet::new(["a"]).unwrap();
        let s = sys(&a, &[("a a", "a a a")]).with_order(TerminationOrder::Unchecked);
        let report = s.validate(20);
        assert!(!report.pairs.is_empty());
        assert!(report
            .pairs
            .iter()
            .all(|p| p.outcome == JoinOutcome::BudgetExhausted));
        assert!(!report.valid());
    }

    #[test]
    fn rewrite_is_leftmost_first_rule() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let s = sys(&ab, &[("b", "a"), ("a a", "1")]);
        let out = s.rewrite_once(ab.parse_word("a a b").unwrap().letters()).unwrap();
        assert_eq!(ab.render(&out), "b");
        let nf = s.normalize(ab.parse_word("a a b").unwrap().letters(), 10).unwrap();
        assert_eq!(ab.render(&nf), "a");
    }

    #[test]
    fn report_is_deterministic() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let s = sys(&ab, &[("a b", "a"), ("b a", "a"), ("a a", "a")]);
        assert_eq!(s.validate(50), s.validate(50));
        assert_eq!(s.validate(50).render(&ab), s.validate(50).render(&ab));
    }
}
