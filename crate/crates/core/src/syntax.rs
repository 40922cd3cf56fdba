//! Shared term syntax `head(arg, arg, …)` with an optional `^-1`, joined by
//! semicolons. Used for edge paths, λ-words and crossed words.

use thiserror::Error;

use crate::freegroup::WordError;
use crate::presentation::PresentationError;
use crate::signed::Sign;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("malformed term `{term}`: {reason}")]
    Malformed { term: String, reason: String },
    #[error("expected `{expected}(…)`, found `{found}`")]
    UnexpectedHead { expected: String, found: String },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term<'a> {
    pub head: &'a str,
    pub args: Vec<&'a str>,
    pub sign: Sign,
}

/// Splits `text` into terms. Empty text and the literal `1` give no terms.
pub fn parse_terms(text: &str) -> Result<Vec<Term<'_>>, SyntaxError> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "1" {
        return Ok(Vec::new());
    }
    trimmed.split(';').map(parse_term).collect()
}

fn parse_term(raw: &str) -> Result<Term<'_>, SyntaxError> {
    let term = raw.trim();
    let malformed = |reason: &str| SyntaxError::Malformed {
        term: term.to_string(),
        reason: reason.to_string(),
    };
    let (body, sign) = match term.strip_suffix("^-1") {
        Some(body) => (body.trim_end(), Sign::Minus),
        None => (term, Sign::Plus),
    };
    let body = body
        .strip_suffix(')')
        .ok_or_else(|| malformed("missing closing parenthesis"))?;
    let (head, args) = body
        .split_once('(')
        .ok_or_else(|| malformed("missing opening parenthesis"))?;
    let head = head.trim();
    if head.is_empty() {
        return Err(malformed("missing term name"));
    }
    if args.contains('(') || args.contains(')') {
        return Err(malformed("nested parentheses"));
    }
    Ok(Term {
        head,
        args: args.split(',').map(str::trim).collect(),
        sign,
    })
}

impl Term<'_> {
    pub fn expect(&self, head: &str, arity: usize) -> Result<(), SyntaxError> {
        if self.head != head {
            return Err(SyntaxError::UnexpectedHead {
                expected: head.to_string(),
                found: self.head.to_string(),
            });
        }
        if self.args.len() != arity {
            return Err(SyntaxError::Malformed {
                term: self.head.to_string(),
                reason: format!("expected {arity} arguments, found {}", self.args.len()),
            });
        }
        Ok(())
    }
}

/// Renders `head(args)` terms joined by `; `, or `1` when there are none.
pub fn render_terms<I>(terms: I) -> String
where
    I: IntoIterator<Item = (String, Sign)>,
{
    let parts: Vec<String> = terms
        .into_iter()
        .map(|(t, s)| match s {
            Sign::Plus => t,
            Sign::Minus => format!("{t}^-1"),
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("; ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_terms_with_signs() {
        let terms = parse_terms("lam(r1, x^2); lam(r1, x)^-1").unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].head, "lam");
        assert_eq!(terms[0].args, vec!["r1", "x^2"]);
        assert_eq!(terms[0].sign, Sign::Plus);
        assert_eq!(terms[1].sign, Sign::Minus);
        assert!(parse_terms("1").unwrap().is_empty());
        assert!(parse_terms("  ").unwrap().is_empty());
    }

    #[test]
    fn rejects_malformed_terms() {
        assert!(parse_terms("lam(r1, x").is_err());
        assert!(parse_terms("r1, x)").is_err());
        assert!(parse_terms("(r1, x)").is_err());
        let t = parse_terms("gen(r1, x)").unwrap();
        assert!(t[0].expect("lam", 2).is_err());
        assert!(t[0].expect("gen", 3).is_err());
    }
}
