//! Critical-pair reports checked against a brute-force enumeration on
//! plain strings.

use squier_core::freegroup::{Alphabet, Letter};
use squier_core::presentation::{
    fixtures, validate_oracle, GroupOracle, JoinOutcome, OracleError, OverlapKind, RewriteRule, RewritingSystem,
    ValidationWarning, DEFAULT_BUDGET,
};

/// `a`, `A` for `a⁻¹`, and so on.
fn letter_char(alphabet: &Alphabet, l: Letter) -> char {
    let c = alphabet.name(l.generator()).chars().next().unwrap();
    if l.is_inverse() {
        c.to_ascii_uppercase()
    } else {
        c
    }
}

fn as_text(alphabet: &Alphabet, letters: &[Letter]) -> String {
    letters.iter().map(|&l| letter_char(alphabet, l)).collect()
}

/// Counts suffix/prefix overlaps and containments between left-hand sides
/// with string slicing, independently of the library's enumeration.
fn brute_force_overlaps(lhs: &[String]) -> usize {
    let mut count = 0;
    for (i, a) in lhs.iter().enumerate() {
        for (j, b) in lhs.iter().enumerate() {
            for k in 1..a.len().min(b.len()) {
                if a.ends_with(&b[..k]) {
                    count += 1;
                }
            }
            if b.len() < a.len() || (b.len() == a.len() && i < j) {
                count += a.match_indices(b.as_str()).count();
            }
        }
    }
    count
}

/// Local confluence on every word up to `max_len`: all one-step rewrites
/// normalize to the same word.
fn locally_confluent(system: &RewritingSystem, generators: usize, max_len: usize) -> bool {
    let letters: Vec<Letter> = (0..generators)
        .flat_map(|g| [Letter::positive(g), Letter::negative(g)])
        .collect();
    let mut layer: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        for w in &next {
            let mut normal_forms = Vec::new();
            for pos in 0..w.len() {
                for rule in system.rules() {
                    if w[pos..].starts_with(&rule.lhs) {
                        let mut rewritten = w[..pos].to_vec();
                        rewritten.extend_from_slice(&rule.rhs);
                        rewritten.extend_from_slice(&w[pos + rule.lhs.len()..]);
                        normal_forms.push(system.normalize(&rewritten, DEFAULT_BUDGET).unwrap());
                    }
                }
            }
            if normal_forms.windows(2).any(|p| p[0] != p[1]) {
                return false;
            }
        }
        layer = next;
    }
    true
}

fn system(alphabet: &Alphabet, rules: &[(&str, &str)]) -> RewritingSystem {
    let rules = rules
        .iter()
        .map(|(l, r)| {
            RewriteRule::new(
                alphabet.parse_word(l).unwrap().letters().to_vec(),
                alphabet.parse_word(r).unwrap().letters().to_vec(),
            )
        })
        .collect();
    RewritingSystem::new(alphabet.len(), rules)
}

#[test]
fn rank_two_fixture_is_complete() {
    let z2 = fixtures::free_abelian_rank_two();
    let sys = z2.rewriting_system().unwrap().clone();
    let report = sys.validate(DEFAULT_BUDGET);
    let lhs: Vec<String> = sys.rules().iter().map(|r| as_text(z2.alphabet(), &r.lhs)).collect();
    assert_eq!(brute_force_overlaps(&lhs), 12);
    assert_eq!(report.pairs.len(), 12);
    assert!(report
        .pairs
        .iter()
        .all(|p| p.kind == OverlapKind::Proper { overlap: 1 } && p.joins()));
    assert!(report.order_violations.is_empty());
    assert!(report.warnings.is_empty());
    assert!(report.valid());
    assert!(locally_confluent(&sys, 2, 4));
}

#[test]
fn lone_rule_is_valid_but_flagged() {
    let ab = Alphabet::new(["a", "b"]).unwrap();
    let sys = system(&ab, &[("a b", "b")]);
    let report = sys.validate(DEFAULT_BUDGET);
    assert_eq!(brute_force_overlaps(&["ab".to_string()]), 0);
    assert!(report.pairs.is_empty());
    assert!(report.valid());
    assert_eq!(report.warnings, vec![ValidationWarning::MissingInverseRules]);
    assert_eq!(
        report.render(&ab),
        "critical pairs: 0\norder violations: none\nwarning: no inverse rules: oracle sound only on positive words\nvalid: true\n"
    );
}

#[test]
fn competing_rules_fail() {
    let ab = Alphabet::new(["a", "b"]).unwrap();
    let sys = system(&ab, &[("a b", "a"), ("a b", "b")]);
    let report = sys.validate(DEFAULT_BUDGET);
    assert_eq!(brute_force_overlaps(&["ab".to_string(), "ab".to_string()]), 1);
    assert_eq!(report.pairs.len(), 1);
    let pair = &report.pairs[0];
    assert_eq!(pair.kind, OverlapKind::Containment { offset: 0 });
    assert_eq!(ab.render(&pair.left), "a");
    assert_eq!(ab.render(&pair.right), "b");
    assert!(matches!(pair.outcome, JoinOutcome::Distinct { .. }));
    assert!(!report.valid());
    assert!(!locally_confluent(&sys, 2, 2));

    let err = GroupOracle::validated(sys.clone(), DEFAULT_BUDGET).unwrap_err();
    assert!(matches!(err, OracleError::Invalid(_)));
    let oracle = GroupOracle::unvalidated(sys, DEFAULT_BUDGET);
    assert_eq!(
        oracle.canonical(&ab.parse_reduced("a b").unwrap()),
        Err(OracleError::NotValidated)
    );
    assert!(!validate_oracle(&oracle, DEFAULT_BUDGET).unwrap().valid());
}

#[test]
fn rank_two_oracle_decides_commutation() {
    let z2 = fixtures::free_abelian_rank_two();
    let oracle = GroupOracle::validated(z2.rewriting_system().unwrap().clone(), DEFAULT_BUDGET).unwrap();
    let w = |s: &str| z2.parse_reduced(s).unwrap();
    assert_eq!(z2.render(&oracle.canonical(&w("b a")).unwrap()), "a b");
    assert_eq!(z2.render(&oracle.canonical(&w("b^-1 a^-1 b a")).unwrap()), "1");
    assert_eq!(z2.render(&oracle.canonical(&w("b^2 a^-1 b^-1 a^3")).unwrap()), "a^2 b");
    // Normal forms are a^i b^j: compare against exponent sums.
    let mut rng = squier_core::sample::rng(5);
    for _ in 0..200 {
        let v = squier_core::sample::word(&mut rng, 2, 8);
        let nf = oracle.canonical(&v).unwrap();
        let expected = &squier_core::ReducedWord::power(0, v.exponent_sum(0)) * &squier_core::ReducedWord::power(1, v.exponent_sum(1));
        assert_eq!(nf, expected);
    }
}

#[test]
fn reports_are_deterministic() {
    let z2 = fixtures::free_abelian_rank_two();
    let sys = z2.rewriting_system().unwrap();
    assert_eq!(sys.validate(100).render(z2.alphabet()), sys.validate(100).render(z2.alphabet()));
}
