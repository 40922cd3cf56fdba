//! The exchange relation `λ_{l,r,vsu} ∗ λ_{s,d,u} = λ_{s,d,u} ∗ λ_{l,r,vdu}`
//! as a rewriting move on λ-words.
//!
//! A match needs a syntactic witness: the index of the left-hand factor must
//! be the reduced concatenation `v ++ ρ(su)` (or `v ++ ρ(du)` read right to
//! left). Every `q` equals `v·s·u` for *some* `v` in the free group, so without
//! this restriction the move would apply to every pair of positive factors.

use super::{LambdaGenerator, LambdaWord, StarError};
use crate::freegroup::ReducedWord;
use crate::presentation::Presentation;
use crate::signed::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExchangeDirection {
    /// `λ_{l,r,vsu} ∗ λ_{s,d,u}  →  λ_{s,d,u} ∗ λ_{l,r,vdu}`
    LeftToRight,
    /// `λ_{s,d,u} ∗ λ_{l,r,vdu}  →  λ_{l,r,vsu} ∗ λ_{s,d,u}`
    RightToLeft,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeOutcome {
    pub word: LambdaWord,
    /// The prefix `v` used.
    pub witness: ReducedWord,
    /// How many split points matched; the leftmost one is applied.
    pub matches: usize,
}

/// Split points `k` with `q[k..] == tail`, leftmost first.
fn witnesses(q: &ReducedWord, tail: &ReducedWord) -> Vec<ReducedWord> {
    let (ql, tl) = (q.letters(), tail.letters());
    (0..=ql.len())
        .filter(|&k| ql[k..] == *tl)
        .map(|k| ReducedWord::reduce_letters(ql[..k].iter().copied()))
        .collect()
}

pub fn exchange_apply(
    presentation: &Presentation,
    a: &LambdaWord,
    index: usize,
    direction: ExchangeDirection,
) -> Result<ExchangeOutcome, StarError> {
    let factors = a.factors();
    if index + 1 >= factors.len() {
        return Err(StarError::IndexOutOfRange {
            index,
            len: factors.len(),
        });
    }
    let mismatch = |reason: String| StarError::ExchangeMismatch { index, reason };
    let (first, second) = (&factors[index], &factors[index + 1]);
    if first.1 != Sign::Plus || second.1 != Sign::Plus {
        return Err(mismatch("both factors must be positive".into()));
    }

    // `outer` carries (l, r); `inner` is λ_{s,d,u}.
    let (outer, inner) = match direction {
        ExchangeDirection::LeftToRight => (&first.0, &second.0),
        ExchangeDirection::RightToLeft => (&second.0, &first.0),
    };
    let (s, d) = presentation.sides(inner.rel)?;
    let u = &inner.q;
    let (matched, replaced) = match direction {
        ExchangeDirection::LeftToRight => (&s, &d),
        ExchangeDirection::RightToLeft => (&d, &s),
    };
    let tail = matched * u;
    let found = witnesses(&outer.q, &tail);
    let v = found.first().cloned().ok_or_else(|| {
        mismatch(format!(
            "`{}` does not end with `{}`",
            presentation.render(&outer.q),
            presentation.render(&tail)
        ))
    })?;
    let moved = LambdaGenerator::new(outer.rel, ReducedWord::product([&v, replaced, u]));

    let pair = match direction {
        ExchangeDirection::LeftToRight => [(inner.clone(), Sign::Plus), (moved, Sign::Plus)],
        ExchangeDirection::RightToLeft => [(moved, Sign::Plus), (inner.clone(), Sign::Plus)],
    };
    let mut out = factors[..index].to_vec();
    out.extend(pair);
    out.extend(factors[index + 2..].iter().cloned());
    Ok(ExchangeOutcome {
        word: LambdaWord::from_factors(out),
        witness: v,
        matches: found.len(),
    })
}
