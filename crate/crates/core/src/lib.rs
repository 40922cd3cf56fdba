//! Reduced Squier complexes of group presentations.
//!
//! A presentation `⟨X : R⟩` gives a 2-complex whose vertices are the elements
//! of the free group `F(X)`, whose edges apply a relation inside a context
//! `(p, rel, q)`, and whose square 2-cells apply two relations side by side.
//! The paths starting at `1` form a group under `∗` that is isomorphic, as a
//! crossed module over `F(X)`, to the free crossed module of the presentation.
//! Its identities are the identities among relations.
//!
//! ```
//! use squier_core::presentation::{fixtures, GroupOracle};
//! use squier_core::starone::{self, Verdict};
//!
//! let p = fixtures::infinite_cyclic();
//! let a = starone::parse_lambda(&p, "lam(r1, x^2); lam(r1, x)").unwrap();
//! let b = starone::parse_lambda(&p, "lam(r1, x); lam(r1, x^2)").unwrap();
//! let verdict = starone::equal(&p, &a, &b, Some(&GroupOracle::FreeReduction)).unwrap();
//! assert_eq!(verdict, Verdict::Equal);
//! ```

pub mod crossedmod;
pub mod freegroup;
pub mod groupring;
pub mod presentation;
pub mod sample;
pub mod signed;
pub mod squier;
pub mod starone;
pub mod syntax;

pub use freegroup::{Alphabet, Letter, ReducedWord, Word, WordError};
pub use groupring::GroupRingVector;
pub use presentation::{GroupOracle, Presentation, RelId};
pub use signed::{Sign, SignedWord};
