//! Randomized checks of the crossed-module laws for `C(P)` and `star₁`, and
//! of the isomorphism `φ` between them.

use std::fmt;

use super::{cm_abelianize, cm_action, cm_equal, d_boundary, phi, phi_inverse, CrossedWord};
use crate::freegroup::ReducedWord;
use crate::groupring::GroupRingVector;
use crate::presentation::{GroupOracle, OracleError, Presentation};
use crate::sample;
use crate::starone::{self, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// `∂(c^w) = w⁻¹ (∂c) w`
    Cm1,
    /// `c^{∂b} = b⁻¹ c b`
    Cm2,
    /// `∂(c₁c₂) = ∂c₁ ∂c₂`
    Homomorphism,
    /// abelianization commutes with the action
    Equivariance,
    /// `φ` is a boundary- and action-preserving bijection
    PhiIntertwining,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [
        Axiom::Cm1,
        Axiom::Cm2,
        Axiom::Homomorphism,
        Axiom::Equivariance,
        Axiom::PhiIntertwining,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Cm1 => "CM1",
            Axiom::Cm2 => "CM2",
            Axiom::Homomorphism => "homomorphism",
            Axiom::Equivariance => "equivariance",
            Axiom::PhiIntertwining => "phi-intertwining",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomConfig {
    pub trials: usize,
    pub seed: u64,
    pub max_word_len: usize,
    pub max_factors: usize,
}

impl Default for AxiomConfig {
    fn default() -> Self {
        AxiomConfig {
            trials: 200,
            seed: 0,
            max_word_len: 4,
            max_factors: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomOutcome {
    pub axiom: Axiom,
    pub passed: usize,
    pub failed: usize,
    /// The first failing trial and what went wrong.
    pub witness: Option<(usize, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub config: AxiomConfig,
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.failed == 0)
    }

    pub fn outcome(&self, axiom: Axiom) -> &AxiomOutcome {
        self.outcomes
            .iter()
            .find(|o| o.axiom == axiom)
            .expect("every axiom has an outcome")
    }

    pub fn render(&self) -> String {
        let mut out = format!("trials: {}, seed: {}\n", self.config.trials, self.config.seed);
        for o in &self.outcomes {
            let status = if o.failed == 0 { "pass" } else { "FAIL" };
            out.push_str(&format!("{}: {} ({} passed, {} failed)\n", o.axiom, status, o.passed, o.failed));
            if let Some((trial, why)) = &o.witness {
                out.push_str(&format!("  trial {trial}: {why}\n"));
            }
        }
        out
    }
}

type Action<'a> = &'a dyn Fn(&CrossedWord, &ReducedWord) -> CrossedWord;

pub fn check_axioms(
    presentation: &Presentation,
    oracle: &GroupOracle,
    config: AxiomConfig,
) -> Result<AxiomReport, OracleError> {
    check_axioms_with_action(presentation, oracle, config, &cm_action)
}

/// As [`check_axioms`], with the action on `C(P)` replaced by `action`.
/// The λ-side always uses the real action.
pub fn check_axioms_with_action(
    presentation: &Presentation,
    oracle: &GroupOracle,
    config: AxiomConfig,
    action: Action<'_>,
) -> Result<AxiomReport, OracleError> {
    if let GroupOracle::RewritingSystem { validated: false, .. } = oracle {
        return Err(OracleError::NotValidated);
    }
    let mut outcomes: Vec<AxiomOutcome> = Axiom::ALL
        .iter()
        .map(|&axiom| AxiomOutcome {
            axiom,
            passed: 0,
            failed: 0,
            witness: None,
        })
        .collect();

    for trial in 0..config.trials {
        let mut rng = sample::rng(sample::derive_seed(config.seed, trial as u64));
        let generators = presentation.alphabet().len();
        let c1 = sample::crossed_word(&mut rng, presentation, config.max_factors, config.max_word_len);
        let c2 = sample::crossed_word(&mut rng, presentation, config.max_factors, config.max_word_len);
        let w = sample::word(&mut rng, generators, config.max_word_len);
        let trial_input = Trial {
            presentation,
            oracle,
            action,
            c1: &c1,
            c2: &c2,
            w: &w,
        };
        for outcome in outcomes.iter_mut() {
            match trial_input.check(outcome.axiom) {
                Ok(()) => outcome.passed += 1,
                Err(why) => {
                    outcome.failed += 1;
                    if outcome.witness.is_none() {
                        outcome.witness = Some((trial, why));
                    }
                }
            }
        }
    }
    Ok(AxiomReport { config, outcomes })
}

struct Trial<'a> {
    presentation: &'a Presentation,
    oracle: &'a GroupOracle,
    action: Action<'a>,
    c1: &'a CrossedWord,
    c2: &'a CrossedWord,
    w: &'a ReducedWord,
}

impl Trial<'_> {
    fn describe(&self) -> String {
        let p = self.presentation;
        format!(
            "c1 = {}, c2 = {}, w = {}",
            super::render_crossed(p, self.c1),
            super::render_crossed(p, self.c2),
            p.render(self.w)
        )
    }

    fn check(&self, axiom: Axiom) -> Result<(), String> {
        let result = match axiom {
            Axiom::Cm1 => self.cm1(),
            Axiom::Cm2 => self.cm2(),
            Axiom::Homomorphism => self.homomorphism(),
            Axiom::Equivariance => self.equivariance(),
            Axiom::PhiIntertwining => self.intertwining(),
        };
        match result {
            Ok(None) => Ok(()),
            Ok(Some(what)) => Err(format!("{what}; {}", self.describe())),
            Err(e) => Err(format!("{e}; {}", self.describe())),
        }
    }

    fn cm1(&self) -> Result<Option<String>, Box<dyn std::error::Error>> {
        let p = self.presentation;
        let conj = d_boundary(p, self.c1)?.conjugate_by(self.w);
        if d_boundary(p, &(self.action)(self.c1, self.w))? != conj {
            return Ok(Some("∂(c1^w) differs from w⁻¹ ∂(c1) w".into()));
        }
        let a = phi(self.c1);
        if starone::boundary(p, &starone::act(&a, self.w))? != conj {
            return Ok(Some("𝐫(φ(c1)^w) differs from w⁻¹ 𝐫(φ(c1)) w".into()));
        }
        Ok(None)
    }

    fn cm2(&self) -> Result<Option<String>, Box<dyn std::error::Error>> {
        let p = self.presentation;
        let conjugated = &(&self.c2.inverse() * self.c1) * self.c2;
        let acted = (self.action)(self.c1, &d_boundary(p, self.c2)?);
        let verdict = cm_equal(p, &acted, &conjugated, Some(self.oracle))?;
        if verdict != Verdict::Equal {
            return Ok(Some(format!("c1^(∂c2) vs c2⁻¹ c1 c2: {verdict}")));
        }
        let (a, b) = (phi(self.c1), phi(self.c2));
        let lhs = starone::act(&a, &starone::boundary(p, &b)?);
        let rhs = &(&b.inverse() * &a) * &b;
        let verdict = starone::equal(p, &lhs, &rhs, Some(self.oracle))?;
        if verdict != Verdict::Equal {
            return Ok(Some(format!("φ(c1)^(𝐫 φ(c2)) vs φ(c2)⁻¹ φ(c1) φ(c2): {verdict}")));
        }
        Ok(None)
    }

    fn homomorphism(&self) -> Result<Option<String>, Box<dyn std::error::Error>> {
        let p = self.presentation;
        let product = self.c1 * self.c2;
        if d_boundary(p, &product)? != &d_boundary(p, self.c1)? * &d_boundary(p, self.c2)? {
            return Ok(Some("∂(c1 c2) differs from ∂c1 ∂c2".into()));
        }
        let (a, b) = (phi(self.c1), phi(self.c2));
        if starone::boundary(p, &(&a * &b))? != &starone::boundary(p, &a)? * &starone::boundary(p, &b)? {
            return Ok(Some("𝐫(a ∗ b) differs from 𝐫a 𝐫b".into()));
        }
        Ok(None)
    }

    fn equivariance(&self) -> Result<Option<String>, Box<dyn std::error::Error>> {
        let o = Some(self.oracle);
        let translated = |v: &GroupRingVector<ReducedWord>| -> Result<GroupRingVector<ReducedWord>, OracleError> {
            v.try_map_keys(|k| self.oracle.canonical(&(k * self.w)))
        };
        let lhs = cm_abelianize(&(self.action)(self.c1, self.w), o)?;
        if lhs != translated(&cm_abelianize(self.c1, o)?)? {
            return Ok(Some("abelianization of c1^w is not the translate by w".into()));
        }
        let a = phi(self.c1);
        let lhs = starone::abelianize(&starone::act(&a, self.w), o)?;
        if lhs != translated(&starone::abelianize(&a, o)?)? {
            return Ok(Some("abelianization of φ(c1)^w is not the translate by w".into()));
        }
        Ok(None)
    }

    fn intertwining(&self) -> Result<Option<String>, Box<dyn std::error::Error>> {
        let p = self.presentation;
        let a = phi(self.c1);
        if phi_inverse(&a) != *self.c1 || phi(&phi_inverse(&a)) != a {
            return Ok(Some("φ⁻¹ φ is not the identity".into()));
        }
        if starone::boundary(p, &a)? != d_boundary(p, self.c1)? {
            return Ok(Some("𝐫 φ differs from ∂".into()));
        }
        if phi(&(self.action)(self.c1, self.w)) != starone::act(&a, self.w) {
            return Ok(Some("φ(c1^w) differs from φ(c1)^w".into()));
        }
        if cm_abelianize(self.c1, Some(self.oracle))? != starone::abelianize(&a, Some(self.oracle))? {
            return Ok(Some("abelianization is not preserved by φ".into()));
        }
        Ok(None)
    }
}
