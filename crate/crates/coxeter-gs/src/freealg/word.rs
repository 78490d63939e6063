//! Generators and words, with the deg-lex order and subword search.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::FreeAlgError;

/// A generator s<index> of the free algebra; indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Generator(u32);

impl Generator {
    /// Creates the generator with the given 1-based index.
    ///
    /// Panics if `index` is zero; generator numbering starts at s1.
    pub fn new(index: u32) -> Generator {
        assert!(index >= 1, "generator indices are 1-based");
        Generator(index)
    }

    /// The 1-based index of this generator.
    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0)
    }
}

/// A word (monomial) in the free algebra: a finite sequence of generators.
///
/// The empty word is the multiplicative identity and prints as `e`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<Generator>);

impl Word {
    /// The empty word.
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// Builds a word from a sequence of generators.
    pub fn from_letters(letters: Vec<Generator>) -> Word {
        Word(letters)
    }

    /// Builds a word from 1-based generator indices; convenient in tests.
    pub fn from_indices(indices: &[u32]) -> Word {
        Word(indices.iter().map(|&i| Generator::new(i)).collect())
    }

    /// The letters of the word, leftmost first.
    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The contiguous subword spanning `start..end` (letter positions).
    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Whether `pattern` occurs at letter position `pos`.
    pub fn matches_at(&self, pattern: &Word, pos: usize) -> bool {
        pos + pattern.len() <= self.len() && self.0[pos..pos + pattern.len()] == pattern.0
    }

    /// Whether `suffix` is a suffix of this word.
    pub fn ends_with(&self, suffix: &Word) -> bool {
        suffix.len() <= self.len() && self.matches_at(suffix, self.len() - suffix.len())
    }

    /// Whether `pattern` occurs anywhere in this word; the empty pattern
    /// trivially occurs.
    pub fn contains_subword(&self, pattern: &Word) -> bool {
        pattern.len() <= self.len()
            && (0..=self.len() - pattern.len()).any(|pos| self.matches_at(pattern, pos))
    }

    /// All start positions at which `pattern` occurs as a contiguous subword,
    /// in ascending order and including overlapping occurrences.
    pub fn occurrences(&self, pattern: &Word) -> Result<Vec<usize>, FreeAlgError> {
        if pattern.is_empty() {
            return Err(FreeAlgError::EmptyPattern);
        }
        if pattern.len() > self.len() {
            return Ok(Vec::new());
        }
        Ok((0..=self.len() - pattern.len())
            .filter(|&pos| self.matches_at(pattern, pos))
            .collect())
    }
}

/// Deg-lex: compare by length first, then lexicographically by generator
/// index. Both sides are monomial-order compatible: u < v implies aub < avb.
impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Parses the display syntax: space-separated `s<digits>` tokens, or the
/// single token `e` for the empty word.
impl FromStr for Word {
    type Err = FreeAlgError;

    fn from_str(s: &str) -> Result<Word, FreeAlgError> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(FreeAlgError::Parse("empty word input; write `e`".into()));
        }
        if tokens == ["e"] {
            return Ok(Word::empty());
        }
        let mut letters = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let index = tok
                .strip_prefix('s')
                .and_then(|digits| digits.parse::<u32>().ok())
                .filter(|&i| i >= 1)
                .ok_or_else(|| {
                    FreeAlgError::Parse(format!("bad generator token `{tok}`; expected s<digits>"))
                })?;
            letters.push(Generator::new(index));
        }
        Ok(Word(letters))
    }
}
