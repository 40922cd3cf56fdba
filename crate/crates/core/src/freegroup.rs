//! Words over `X ∪ X⁻¹`, free reduction and the free group `F(X)`.
//!
//! Generators are interned into an [`Alphabet`]; words store compact
//! [`Letter`]s and are rendered back to text through the alphabet that
//! produced them. The textual syntax is shared by every other module:
//! whitespace separated tokens `g`, `g^-1` or `g^k`, with `1` standing for
//! the empty word.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed exponent in token `{0}`")]
    MalformedExponent(String),
    #[error("the identity literal `1` cannot be combined with other tokens")]
    IdentityMixed,
    #[error("invalid generator name `{0}`")]
    InvalidGeneratorName(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("letter with generator index {index} is outside an alphabet of {size} generators")]
    AlphabetMismatch { index: usize, size: usize },
}

/// A generator or its formal inverse.
///
/// The derived order is `x < x⁻¹ < y < y⁻¹ < …` in declaration order, which
/// is the letter order used for every shortlex comparison in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    generator: u32,
    inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter {
            generator: generator as u32,
            inverse,
        }
    }

    pub fn positive(generator: usize) -> Self {
        Letter::new(generator, false)
    }

    pub fn negative(generator: usize) -> Self {
        Letter::new(generator, true)
    }

    pub fn generator(self) -> usize {
        self.generator as usize
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inverse(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    /// True when `self` followed by `other` freely cancels.
    pub fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// Shortlex comparison of letter sequences: shorter first, then
/// lexicographic in the [`Letter`] order.
pub fn shortlex_cmp(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// An ordered set of generator names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = Alphabet {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in names {
            let name = name.into();
            if !is_valid_name(&name) {
                return Err(WordError::InvalidGeneratorName(name));
            }
            if alphabet.index.contains_key(&name) {
                return Err(WordError::DuplicateGenerator(name));
            }
            alphabet.index.insert(name.clone(), alphabet.names.len());
            alphabet.names.push(name);
        }
        Ok(alphabet)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, generator: usize) -> &str {
        &self.names[generator]
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// All letters in shortlex order: `x, x⁻¹, y, y⁻¹, …`.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).flat_map(|g| [Letter::positive(g), Letter::negative(g)])
    }

    pub fn check(&self, letters: &[Letter]) -> Result<(), WordError> {
        match letters.iter().find(|l| l.generator() >= self.len()) {
            Some(l) => Err(WordError::AlphabetMismatch {
                index: l.generator(),
                size: self.len(),
            }),
            None => Ok(()),
        }
    }

    /// Parses the word syntax. `g^k` expands to `|k|` copies of `g` or `g⁻¹`.
    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.contains(&"1") {
            return if tokens.len() == 1 {
                Ok(Word::identity())
            } else {
                Err(WordError::IdentityMixed)
            };
        }
        let mut letters = Vec::new();
        for token in tokens {
            let (name, exponent) = match token.split_once('^') {
                Some((name, exp)) => {
                    let k: i64 = exp
                        .parse()
                        .map_err(|_| WordError::MalformedExponent(token.to_string()))?;
                    if k == 0 {
                        return Err(WordError::MalformedExponent(token.to_string()));
                    }
                    (name, k)
                }
                None => (token, 1),
            };
            let generator = self
                .lookup(name)
                .ok_or_else(|| WordError::UnknownGenerator(name.to_string()))?;
            let letter = Letter::new(generator, exponent < 0);
            letters.extend(std::iter::repeat_n(letter, exponent.unsigned_abs() as usize));
        }
        Ok(Word(letters))
    }

    pub fn parse_reduced(&self, text: &str) -> Result<ReducedWord, WordError> {
        self.parse_word(text).map(|w| w.reduce())
    }

    /// Renders letters with runs collapsed to powers; the empty word is `1`.
    pub fn render(&self, letters: &[Letter]) -> String {
        if letters.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < letters.len() {
            let letter = letters[i];
            let run = letters[i..].iter().take_while(|l| **l == letter).count();
            let name = self.name(letter.generator());
            parts.push(match (letter.is_inverse(), run) {
                (false, 1) => name.to_string(),
                (false, n) => format!("{name}^{n}"),
                (true, n) => format!("{name}^-{n}"),
            });
            i += run;
        }
        parts.join(" ")
    }

    /// Group operation of `F(X)`, checking both operands against this alphabet.
    pub fn multiply(&self, a: &ReducedWord, b: &ReducedWord) -> Result<ReducedWord, WordError> {
        self.check(a.letters())?;
        self.check(b.letters())?;
        Ok(a * b)
    }
}

/// An element of the free monoid on `X ∪ X⁻¹`; not necessarily reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Formal inverse: letters reversed with exponents flipped.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    pub fn reduce(&self) -> ReducedWord {
        reduce(self)
    }
}

impl From<ReducedWord> for Word {
    fn from(w: ReducedWord) -> Self {
        Word(w.0)
    }
}

/// Free reduction `ρ : A* → F(X)`.
///
/// A single left-to-right pass with a stack cancels the leftmost available
/// adjacent inverse pair each time it meets one, so the result coincides with
/// repeated leftmost cancellation.
pub fn reduce(w: &Word) -> ReducedWord {
    ReducedWord::reduce_letters(w.letters().iter().copied())
}

/// A freely reduced word, i.e. an element of `F(X)`.
///
/// Ordered by shortlex, which is the vertex order used in fragment exports.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ReducedWord(Vec<Letter>);

impl ReducedWord {
    pub fn identity() -> Self {
        ReducedWord(Vec::new())
    }

    pub fn letter(letter: Letter) -> Self {
        ReducedWord(vec![letter])
    }

    /// `g^k` for a single generator.
    pub fn power(generator: usize, exponent: i64) -> Self {
        let letter = Letter::new(generator, exponent < 0);
        ReducedWord(vec![letter; exponent.unsigned_abs() as usize])
    }

    pub fn reduce_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut stack: Vec<Letter> = Vec::new();
        for letter in letters {
            match stack.last() {
                Some(top) if top.cancels(letter) => {
                    stack.pop();
                }
                _ => stack.push(letter),
            }
        }
        ReducedWord(stack)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> ReducedWord {
        ReducedWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// `w⁻¹ · self · w`.
    pub fn conjugate_by(&self, w: &ReducedWord) -> ReducedWord {
        &(&w.inverse() * self) * w
    }

    pub fn product<'a, I: IntoIterator<Item = &'a ReducedWord>>(words: I) -> ReducedWord {
        words
            .into_iter()
            .fold(ReducedWord::identity(), |acc, w| &acc * w)
    }

    /// Sum of exponents of `generator`.
    pub fn exponent_sum(&self, generator: usize) -> i64 {
        self.0
            .iter()
            .filter(|l| l.generator() == generator)
            .map(|l| if l.is_inverse() { -1 } else { 1 })
            .sum()
    }

    pub fn to_word(&self) -> Word {
        Word(self.0.clone())
    }
}

impl Mul for &ReducedWord {
    type Output = ReducedWord;

    fn mul(self, rhs: &ReducedWord) -> ReducedWord {
        let a = &self.0;
        let b = &rhs.0;
        let mut k = 0;
        while k < a.len() && k < b.len() && a[a.len() - 1 - k].cancels(b[k]) {
            k += 1;
        }
        let mut letters = Vec::with_capacity(a.len() + b.len() - 2 * k);
        letters.extend_from_slice(&a[..a.len() - k]);
        letters.extend_from_slice(&b[k..]);
        ReducedWord(letters)
    }
}

impl Mul for ReducedWord {
    type Output = ReducedWord;

    fn mul(self, rhs: ReducedWord) -> ReducedWord {
        &self * &rhs
    }
}

impl Ord for ReducedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        shortlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for ReducedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All reduced words of length at most `radius` over `generators` generators,
/// in shortlex order.
pub fn ball(generators: usize, radius: usize) -> Vec<ReducedWord> {
    let letters: Vec<Letter> = (0..generators)
        .flat_map(|g| [Letter::positive(g), Letter::negative(g)])
        .collect();
    let mut all = vec![ReducedWord::identity()];
    let mut level = vec![ReducedWord::identity()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in &level {
            for &letter in &letters {
                if w.0.last().is_some_and(|last| last.cancels(letter)) {
                    continue;
                }
                let mut letters = w.0.clone();
                letters.push(letter);
                next.push(ReducedWord(letters));
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

/// Text rendering bound to an alphabet.
pub struct Rendered<'a> {
    alphabet: &'a Alphabet,
    letters: &'a [Letter],
}

impl fmt::Display for Rendered<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.alphabet.render(self.letters))
    }
}

impl Alphabet {
    pub fn display<'a>(&'a self, letters: &'a [Letter]) -> Rendered<'a> {
        Rendered {
            alphabet: self,
            letters,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Alphabet {
        Alphabet::new(["x", "y"]).unwrap()
    }

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    #[test]
    fn parse_expands_tokens() {
        let w = xy().parse_word("x x^-1 y").unwrap();
        assert_eq!(
            w.letters(),
            &[Letter::positive(0), Letter::negative(0), Letter::positive(1)]
        );
    }

    #[test]
    fn parse_identity_literal() {
        let x = Alphabet::new(["x"]).unwrap();
        assert!(x.parse_word("1").unwrap().is_empty());
        assert_eq!(x.parse_word("1 x"), Err(WordError::IdentityMixed));
    }

    #[test]
    fn parse_exponents() {
        let w = ab().parse_word("a^2 b^-1").unwrap();
        assert_eq!(
            w.letters(),
            &[Letter::positive(0), Letter::positive(0), Letter::negative(1)]
        );
    }

    #[test]
    fn parse_errors() {
        let a = ab();
        assert_eq!(
            a.parse_word("a c"),
            Err(WordError::UnknownGenerator("c".into()))
        );
        assert!(matches!(
            a.parse_word("a^x"),
            Err(WordError::MalformedExponent(_))
        ));
        assert!(matches!(
            a.parse_word("a^0"),
            Err(WordError::MalformedExponent(_))
        ));
        assert!(matches!(
            a.parse_word("a^"),
            Err(WordError::MalformedExponent(_))
        ));
    }

    #[test]
    fn alphabet_rejects_bad_names() {
        assert!(matches!(
            Alphabet::new(["1x"]),
            Err(WordError::InvalidGeneratorName(_))
        ));
        assert!(matches!(
            Alphabet::new(["x", "x"]),
            Err(WordError::DuplicateGenerator(_))
        ));
        assert!(Alphabet::new(["x_1", "Y2"]).is_ok());
    }

    #[test]
    fn reduce_examples() {
        let a = xy();
        let r = |s: &str| a.parse_word(s).unwrap().reduce();
        assert_eq!(r("x x^-1 y"), a.parse_reduced("y").unwrap());
        let b = ab();
        assert!(b.parse_reduced("a b b^-1 a^-1").unwrap().is_identity());
        assert_eq!(r("x^-1 x x"), a.parse_reduced("x").unwrap());
    }

    #[test]
    fn multiply_examples() {
        let a = xy();
        let w = |s: &str| a.parse_reduced(s).unwrap();
        assert_eq!(a.multiply(&w("x y"), &w("y^-1")).unwrap(), w("x"));
        assert_eq!(a.multiply(&w("1"), &w("x y")).unwrap(), w("x y"));
        assert!(a.multiply(&w("x"), &w("x^-1")).unwrap().is_identity());
    }

    #[test]
    fn multiply_rejects_foreign_letters() {
        let x = Alphabet::new(["x"]).unwrap();
        let foreign = ReducedWord::letter(Letter::positive(1));
        assert_eq!(
            x.multiply(&ReducedWord::identity(), &foreign),
            Err(WordError::AlphabetMismatch { index: 1, size: 1 })
        );
    }

    #[test]
    fn invert_examples() {
        let a = xy();
        let w = |s: &str| a.parse_reduced(s).unwrap();
        assert_eq!(w("x y").inverse(), w("y^-1 x^-1"));
        assert!(w("1").inverse().is_identity());
        assert_eq!(w("x^-1").inverse(), w("x"));
    }

    #[test]
    fn render_round_trips() {
        let a = ab();
        let w = a.parse_reduced("a a b^-1 b^-1 a").unwrap();
        assert_eq!(a.render(w.letters()), "a^2 b^-2 a");
        assert_eq!(a.parse_reduced(&a.render(w.letters())).unwrap(), w);
        assert_eq!(a.render(&[]), "1");
    }

    #[test]
    fn ball_sizes_and_order() {
        // 1 + 4 + 12 + 36 reduced words over two generators.
        let b = ball(2, 3);
        assert_eq!(b.len(), 53);
        assert!(b.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(ball(1, 2).len(), 5);
    }

    #[test]
    fn shortlex_orders_by_length_first() {
        let a = ab();
        let w = |s: &str| a.parse_reduced(s).unwrap();
        assert!(w("b") < w("a a"));
        assert!(w("a") < w("a^-1"));
        assert!(w("a^-1") < w("b"));
    }
}
