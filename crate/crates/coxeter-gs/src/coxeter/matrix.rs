//! Coxeter matrices and alternating words.

use std::fmt;

use crate::freealg::{Generator, Word};

/// Errors raised while building or parsing a Coxeter matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixError {
    /// The declared rank and the number of entries disagree.
    WrongShape { expected: usize, found: usize },
    /// A diagonal entry is not 1.
    BadDiagonal { index: usize },
    /// m(i,j) ≠ m(j,i).
    NotSymmetric { i: usize, j: usize },
    /// An off-diagonal entry is below 2.
    OffDiagonalTooSmall { i: usize, j: usize },
    /// A token failed to parse; entries are integers ≥ 1, `0`, or `inf`.
    Parse(String),
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::WrongShape { expected, found } => {
                write!(f, "matrix needs {expected} entries, found {found}")
            }
            MatrixError::BadDiagonal { index } => {
                write!(f, "diagonal entry m({index},{index}) must be 1")
            }
            MatrixError::NotSymmetric { i, j } => {
                write!(f, "matrix is not symmetric at m({i},{j})")
            }
            MatrixError::OffDiagonalTooSmall { i, j } => {
                write!(f, "off-diagonal entry m({i},{j}) must be at least 2 (or inf)")
            }
            MatrixError::Parse(msg) => write!(f, "matrix parse error: {msg}"),
        }
    }
}

impl std::error::Error for MatrixError {}

/// A symmetric Coxeter matrix over generators s1…sn: unit diagonal,
/// off-diagonal entries in {2, 3, …} ∪ {∞}. ∞ is stored as `None`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoxeterMatrix {
    n: usize,
    entries: Vec<Option<u32>>,
}

impl CoxeterMatrix {
    /// Builds and validates a matrix from row-major entries (`None` = ∞).
    pub fn new(n: usize, entries: Vec<Option<u32>>) -> Result<CoxeterMatrix, MatrixError> {
        if entries.len() != n * n {
            return Err(MatrixError::WrongShape {
                expected: n * n,
                found: entries.len(),
            });
        }
        let m = CoxeterMatrix { n, entries };
        for i in 1..=n {
            if m.entry(i, i) != Some(1) {
                return Err(MatrixError::BadDiagonal { index: i });
            }
            for j in 1..=n {
                if m.entry(i, j) != m.entry(j, i) {
                    return Err(MatrixError::NotSymmetric { i, j });
                }
                if i != j {
                    if let Some(v) = m.entry(i, j) {
                        if v < 2 {
                            return Err(MatrixError::OffDiagonalTooSmall { i, j });
                        }
                    }
                }
            }
        }
        Ok(m)
    }

    /// Parses the file format: whitespace-separated tokens, the first being
    /// the rank n, followed by n·n entries where `0` or `inf` denotes ∞.
    pub fn parse(text: &str) -> Result<CoxeterMatrix, MatrixError> {
        let mut tokens = text.split_whitespace();
        let n: usize = tokens
            .next()
            .ok_or_else(|| MatrixError::Parse("empty input; expected the rank first".into()))?
            .parse()
            .map_err(|_| MatrixError::Parse("rank must be a nonnegative integer".into()))?;
        let mut entries = Vec::with_capacity(n * n);
        for tok in tokens.by_ref() {
            let entry = match tok {
                "inf" | "0" => None,
                _ => Some(tok.parse::<u32>().map_err(|_| {
                    MatrixError::Parse(format!("bad entry `{tok}`; expected an integer, 0, or inf"))
                })?),
            };
            entries.push(entry);
        }
        CoxeterMatrix::new(n, entries)
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Generators s1…sn in index order.
    pub fn generators(&self) -> impl DoubleEndedIterator<Item = Generator> + Clone {
        (1..=self.n as u32).map(Generator::new)
    }

    fn entry(&self, i: usize, j: usize) -> Option<u32> {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// m(s, t): the order of s·t, `None` meaning ∞.
    pub fn order(&self, s: Generator, t: Generator) -> Option<u32> {
        self.entry(s.index() as usize, t.index() as usize)
    }

    /// Whether the generator index is within this matrix's alphabet.
    pub fn contains(&self, g: Generator) -> bool {
        (g.index() as usize) <= self.n
    }

    /// s ⊳ t: s is greater than t and the two commute (m(s,t) = 2).
    pub fn rhd(&self, s: Generator, t: Generator) -> bool {
        s > t && self.order(s, t) == Some(2)
    }

    /// Given a block (s, s'), the primed letter of the next block: s' if
    /// m(s,s') is even, s if odd; `None` when m(s,s') = ∞ and the block has
    /// no successor.
    pub fn next_prime(&self, s: Generator, t: Generator) -> Option<Generator> {
        match self.order(s, t) {
            Some(m) if m % 2 == 0 => Some(t),
            Some(_) => Some(s),
            None => None,
        }
    }
}

/// Prints the parse format back out, with `inf` for ∞.
impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for i in 1..=self.n {
            for j in 1..=self.n {
                if j > 1 {
                    write!(f, " ")?;
                }
                match self.entry(i, j) {
                    Some(v) => write!(f, "{v}")?,
                    None => write!(f, "inf")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The alternating word of the given length starting at `first`:
/// first, second, first, second, …
pub fn alternating_word(first: Generator, second: Generator, len: usize) -> Word {
    let letters = (0..len)
        .map(|i| if i % 2 == 0 { first } else { second })
        .collect();
    Word::from_letters(letters)
}
