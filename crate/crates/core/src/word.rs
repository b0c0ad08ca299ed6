//! Words over named generators and their images in `T_n`.
//!
//! Grammar (whitespace separates terms and is otherwise ignored):
//!
//! ```text
//! word := term*
//! term := atom ('^' signed-int)?
//! atom := NAME | '(' word ')'
//! NAME := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! Parenthesized subwords are flattened at parse time, so a [`Word`] is a
//! plain sequence of `(name, exponent)` letters.
//!
//! A [`GeneratorTable`] assigns each name an element of `T_n`. For the
//! braided Ptolemy–Thompson groups the table plays the role of the map onto
//! the abelianized extension (`n = 12` for T*, `n = 21` for T♯): every braid
//! generator `sigma_i` goes to the central element `(id, 1)`. The Thompson-side
//! names `alpha`, `beta`, `rho` go to `(A, 0)`, `(B, 0)`, `(R, 0)`; those
//! central coordinates are a convention, so scl values of words that mix them
//! in depend on it, while words in the `sigma_i` alone do not.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dynamics::{DynamicsError, SearchBudget};
use crate::extension::{ExtensionError, TnElement, TnElementFile};
use crate::numeric::Rational;
use crate::plmap::CanonicalLift;
use crate::tree_pair::{self, TreeError};

/// Flattened words longer than this are rejected.
pub const MAX_WORD_LETTERS: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("word expands to more than {MAX_WORD_LETTERS} letters")]
    TooLong,
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error("malformed generator table: {0}")]
    Table(String),
}

impl From<DynamicsError> for WordError {
    fn from(e: DynamicsError) -> Self {
        WordError::Extension(e.into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Letter {
    pub name: String,
    pub exponent: i64,
}

impl Letter {
    pub fn new(name: impl Into<String>, exponent: i64) -> Self {
        Letter {
            name: name.into(),
            exponent,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter::new(l.name.clone(), -l.exponent))
                .collect(),
        }
    }

    /// `self` repeated `k` times (`k >= 0`).
    pub fn repeat(&self, k: usize) -> Word {
        Word {
            letters: std::iter::repeat_n(self.letters.iter().cloned(), k)
                .flatten()
                .collect(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if l.exponent == 1 {
                write!(f, "{}", l.name)?;
            } else {
                write!(f, "{}^{}", l.name, l.exponent)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error<T>(&self, pos: usize, message: impl Into<String>) -> Result<T, WordError> {
        Err(WordError::Syntax {
            pos,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn word(&mut self, depth: usize) -> Result<Vec<Letter>, WordError> {
        let mut letters = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None => {
                    if depth > 0 {
                        return self.error(self.pos, "unclosed '('");
                    }
                    return Ok(letters);
                }
                Some(')') => {
                    if depth == 0 {
                        return self.error(self.pos, "unmatched ')'");
                    }
                    return Ok(letters);
                }
                Some(_) => {
                    let term = self.term(depth)?;
                    if letters.len() + term.len() > MAX_WORD_LETTERS {
                        return Err(WordError::TooLong);
                    }
                    letters.extend(term);
                }
            }
        }
    }

    fn term(&mut self, depth: usize) -> Result<Vec<Letter>, WordError> {
        let start = self.pos;
        let atom = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.word(depth + 1)?;
                // word() only returns at ')' when nested
                self.pos += 1;
                Atom::Group(inner)
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let len = self.src[self.pos..]
                    .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                    .unwrap_or(self.src.len() - self.pos);
                let name = &self.src[self.pos..self.pos + len];
                self.pos += len;
                Atom::Name(name.to_string())
            }
            Some(c) => return self.error(start, format!("unexpected character {c:?}")),
            None => return self.error(start, "unexpected end of input"),
        };
        self.skip_ws();
        let exponent = if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            Some(self.signed_int()?)
        } else {
            None
        };
        Ok(match (atom, exponent) {
            (Atom::Name(name), e) => vec![Letter::new(name, e.unwrap_or(1))],
            (Atom::Group(inner), None) => inner,
            (Atom::Group(inner), Some(e)) => {
                let base = if e < 0 {
                    Word::from_letters(inner).inverse().letters
                } else {
                    inner
                };
                let reps = e.unsigned_abs() as usize;
                if base.len().saturating_mul(reps) > MAX_WORD_LETTERS {
                    return Err(WordError::TooLong);
                }
                std::iter::repeat_n(base.iter().cloned(), reps)
                    .flatten()
                    .collect()
            }
        })
    }

    fn signed_int(&mut self) -> Result<i64, WordError> {
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        let digits = self.src[self.pos..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.src.len() - self.pos);
        if digits == 0 {
            return self.error(self.pos, "expected an integer exponent after '^'");
        }
        self.pos += digits;
        match self.src[start..self.pos].parse::<i64>() {
            Ok(v) => Ok(v),
            Err(_) => self.error(start, "exponent out of range"),
        }
    }
}

enum Atom {
    Name(String),
    Group(Vec<Letter>),
}

/// Parses a word; the empty string is the identity word.
pub fn parse_word(text: &str) -> Result<Word, WordError> {
    let mut parser = Parser { src: text, pos: 0 };
    let letters = parser.word(0)?;
    Ok(Word { letters })
}

/// Named generator images in `T_n`, with optional relators to check.
#[derive(Debug, Clone)]
pub struct GeneratorTable {
    n: i64,
    generators: BTreeMap<String, TnElement>,
    braid_family: bool,
    relators: Vec<(String, Word)>,
}

fn braid_index(name: &str) -> Option<u64> {
    let digits = name.strip_prefix("sigma_")?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok().filter(|&i| i >= 1)
}

impl GeneratorTable {
    pub fn new(n: i64) -> Result<Self, WordError> {
        if n == 0 {
            return Err(ExtensionError::ZeroLevel.into());
        }
        Ok(GeneratorTable {
            n,
            generators: BTreeMap::new(),
            braid_family: false,
            relators: Vec::new(),
        })
    }

    /// `sigma_i -> (id, 1)` for all `i >= 1`, plus `alpha, beta, rho -> (A, 0), (B, 0), (R, 0)`,
    /// and the braid relations among `sigma_1, sigma_2, sigma_3` as relators.
    pub fn braided(n: i64) -> Result<Self, WordError> {
        let mut table = GeneratorTable::new(n)?;
        table.braid_family = true;
        for (name, builtin) in [("alpha", "A"), ("beta", "B"), ("rho", "R")] {
            let t = tree_pair::builtin(builtin)?;
            table.insert(name, TnElement::new(n, t, 0)?)?;
        }
        for rel in [
            "sigma_1 sigma_2 sigma_1 (sigma_2 sigma_1 sigma_2)^-1",
            "sigma_2 sigma_3 sigma_2 (sigma_3 sigma_2 sigma_3)^-1",
            "sigma_1 sigma_3 sigma_1^-1 sigma_3^-1",
        ] {
            table.add_relator(rel)?;
        }
        Ok(table)
    }

    /// The table for T* (`n = 12`).
    pub fn t_star() -> Self {
        Self::braided(12).expect("builtin table")
    }

    /// The table for T♯ (`n = 21`).
    pub fn t_sharp() -> Self {
        Self::braided(21).expect("builtin table")
    }

    pub fn level(&self) -> i64 {
        self.n
    }

    pub fn insert(&mut self, name: &str, image: TnElement) -> Result<(), WordError> {
        if image.level() != self.n {
            return Err(ExtensionError::LevelMismatch {
                left: self.n,
                right: image.level(),
            }
            .into());
        }
        self.generators.insert(name.to_string(), image);
        Ok(())
    }

    pub fn add_relator(&mut self, text: &str) -> Result<(), WordError> {
        let word = parse_word(text)?;
        self.relators.push((text.to_string(), word));
        Ok(())
    }

    pub fn relators(&self) -> impl Iterator<Item = &str> {
        self.relators.iter().map(|(t, _)| t.as_str())
    }

    pub fn lookup(&self, name: &str) -> Option<TnElement> {
        if let Some(g) = self.generators.get(name) {
            return Some(g.clone());
        }
        if self.braid_family && braid_index(name).is_some() {
            return TnElement::central(self.n, 1).ok();
        }
        None
    }

    pub fn evaluate(&self, word: &Word) -> Result<TnElement, WordError> {
        let mut acc = TnElement::identity(self.n)?;
        for letter in word.letters() {
            let image = self
                .lookup(&letter.name)
                .ok_or_else(|| WordError::UnknownGenerator(letter.name.clone()))?;
            acc = acc.multiply(&image.power(letter.exponent))?;
        }
        Ok(acc)
    }

    pub fn scl_of_word(&self, word: &Word, budget: &SearchBudget) -> Result<Rational, WordError> {
        Ok(self.evaluate(word)?.scl(budget)?)
    }

    /// Relators whose image is not `(id, 0)`.
    pub fn verify_relations(&self) -> Result<Vec<String>, WordError> {
        let mut failed = Vec::new();
        for (text, word) in &self.relators {
            if !self.evaluate(word)?.is_identity() {
                failed.push(text.clone());
            }
        }
        Ok(failed)
    }

    pub fn from_json(text: &str) -> Result<Self, WordError> {
        let file: TableFile =
            serde_json::from_str(text).map_err(|e| WordError::Table(e.to_string()))?;
        let mut table = GeneratorTable::new(file.n)?;
        for (name, image) in file.generators {
            if braid_index(&name).is_none() && parse_word(&name)?.letters().len() != 1 {
                return Err(WordError::Table(format!("invalid generator name {name:?}")));
            }
            table.insert(&name, image.into_element()?)?;
        }
        for rel in &file.relators {
            table.add_relator(rel)?;
        }
        Ok(table)
    }
}

/// `{"n": int, "generators": {name: element}, "relators": [string]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub n: i64,
    pub generators: BTreeMap<String, TnElementFile>,
    #[serde(default)]
    pub relators: Vec<String>,
}

/// `evaluate_word` as a free function.
pub fn evaluate_word(word: &Word, table: &GeneratorTable) -> Result<TnElement, WordError> {
    table.evaluate(word)
}

pub fn scl_of_word(
    word: &Word,
    table: &GeneratorTable,
    budget: &SearchBudget,
) -> Result<Rational, WordError> {
    table.scl_of_word(word, budget)
}

pub fn verify_relations(table: &GeneratorTable) -> Result<Vec<String>, WordError> {
    table.verify_relations()
}

/// Evaluates a word over the builtin circle maps `id, A, B, R` in T.
pub fn evaluate_builtin_expr(text: &str) -> Result<CanonicalLift, WordError> {
    let word = parse_word(text)?;
    let mut acc = CanonicalLift::identity();
    for letter in word.letters() {
        let g = tree_pair::builtin(&letter.name)
            .map_err(|_| WordError::UnknownGenerator(letter.name.clone()))?;
        acc = acc.then_after(&g.circle_pow(letter.exponent));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q;

    fn w(text: &str) -> Word {
        parse_word(text).unwrap()
    }

    fn letters(pairs: &[(&str, i64)]) -> Word {
        Word::from_letters(pairs.iter().map(|(n, e)| Letter::new(*n, *e)).collect())
    }

    fn b() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("a b^-1"), letters(&[("a", 1), ("b", -1)]));
        assert_eq!(
            w("(a b)^2"),
            letters(&[("a", 1), ("b", 1), ("a", 1), ("b", 1)])
        );
        assert_eq!(w("sigma_1^3"), letters(&[("sigma_1", 3)]));
        assert_eq!(w(""), Word::identity());
        assert_eq!(w("  "), Word::identity());
        assert_eq!(w("(a b^2)^-1"), letters(&[("b", -2), ("a", -1)]));
        assert_eq!(w("a^ +2 (b)c"), letters(&[("a", 2), ("b", 1), ("c", 1)]));
        assert_eq!(w("((a))^0 b"), letters(&[("b", 1)]));
        assert_eq!(w("x x^-1").to_string(), "x x^-1");
    }

    #[test]
    fn parse_errors_report_position() {
        let pos = |text: &str| match parse_word(text) {
            Err(WordError::Syntax { pos, .. }) => pos,
            other => panic!("{text:?}: {other:?}"),
        };
        assert_eq!(pos("a b)"), 3);
        assert_eq!(pos("(a b"), 4);
        assert_eq!(pos("a ^"), 3);
        assert_eq!(pos("a ^x"), 3);
        assert_eq!(pos("1a"), 0);
        assert_eq!(pos("a * b"), 2);
        assert_eq!(pos("^2"), 0);
        assert!(matches!(
            parse_word("(a)^99999999999"),
            Err(WordError::TooLong)
        ));
    }

    #[test]
    fn evaluate_examples() {
        let star = GeneratorTable::t_star();
        assert!(star.evaluate(&Word::identity()).unwrap().is_identity());
        assert_eq!(
            star.evaluate(&w("sigma_1")).unwrap(),
            TnElement::central(12, 1).unwrap()
        );
        assert!(star
            .evaluate(&w("sigma_1 sigma_2^-1"))
            .unwrap()
            .is_identity());
        assert_eq!(
            star.evaluate(&w("nope")).unwrap_err(),
            WordError::UnknownGenerator("nope".into())
        );
        assert!(star.lookup("sigma_0").is_none());
        assert!(star.lookup("sigma_").is_none());
        assert!(star.lookup("sigma_12").is_some());
    }

    #[test]
    fn scl_examples() {
        let star = GeneratorTable::t_star();
        let sharp = GeneratorTable::t_sharp();
        assert_eq!(star.scl_of_word(&w("sigma_1"), &b()).unwrap(), q("1/24"));
        assert_eq!(star.scl_of_word(&w("sigma_1^2"), &b()).unwrap(), q("1/12"));
        assert_eq!(sharp.scl_of_word(&w("sigma_1"), &b()).unwrap(), q("1/42"));
        assert_eq!(star.scl_of_word(&w("rho"), &b()).unwrap(), q("1/4"));
    }

    #[test]
    fn relation_checks() {
        let mut t = GeneratorTable::new(12).unwrap();
        t.insert("x", TnElement::central(12, 1).unwrap()).unwrap();
        t.add_relator("x x^-1").unwrap();
        assert!(t.verify_relations().unwrap().is_empty());

        let mut t = GeneratorTable::new(12).unwrap();
        t.insert(
            "x",
            TnElement::new(12, tree_pair::builtin("R").unwrap(), 0).unwrap(),
        )
        .unwrap();
        t.add_relator("x^2").unwrap();
        assert_eq!(t.verify_relations().unwrap(), vec!["x^2".to_string()]);
        assert_eq!(
            t.evaluate(&w("x^2")).unwrap(),
            TnElement::central(12, 12).unwrap()
        );

        assert!(GeneratorTable::t_star()
            .verify_relations()
            .unwrap()
            .is_empty());
        assert!(GeneratorTable::t_sharp()
            .verify_relations()
            .unwrap()
            .is_empty());
    }

    #[test]
    fn table_json() {
        let t = GeneratorTable::from_json(
            r#"{"n": 1, "generators": {"z": {"n": 1, "j": 1, "t": "id"}}, "relators": ["z z^-1"]}"#,
        )
        .unwrap();
        assert_eq!(t.scl_of_word(&w("z"), &b()).unwrap(), q("1/2"));
        assert_eq!(t.relators().collect::<Vec<_>>(), vec!["z z^-1"]);
        let err = GeneratorTable::from_json(
            r#"{"n": 12, "generators": {"z": {"n": 1, "j": 1, "t": "id"}}}"#,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            WordError::Extension(ExtensionError::LevelMismatch { left: 12, right: 1 })
        ));
        assert!(matches!(
            GeneratorTable::from_json(
                r#"{"n": 1, "generators": {"a b": {"n": 1, "j": 0, "t": "id"}}}"#
            ),
            Err(WordError::Table(_))
        ));
        assert!(matches!(
            GeneratorTable::from_json(r#"{"n": 1}"#),
            Err(WordError::Table(_))
        ));
    }

    #[test]
    fn builtin_expressions() {
        assert!(evaluate_builtin_expr("A A^-1").unwrap().is_identity());
        assert!(evaluate_builtin_expr("R R").unwrap().is_identity());
        assert!(evaluate_builtin_expr("").unwrap().is_identity());
        assert_eq!(
            evaluate_builtin_expr("A").unwrap().evaluate(&q("1/2")),
            q("1/4")
        );
        assert!(matches!(
            evaluate_builtin_expr("Q"),
            Err(WordError::UnknownGenerator(_))
        ));
    }
}
