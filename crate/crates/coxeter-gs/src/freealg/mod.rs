//! Words and polynomials of the free associative algebra Q⟨s1, …, sn⟩.
//!
//! Monomials are words over the ordered alphabet s1 < s2 < … < sn and are
//! compared in the deg-lex order: first by length, then lexicographically by
//! generator index. This order is a monomial order (compatible with
//! concatenation on both sides), which is what completion relies on.

mod poly;
mod word;

pub use poly::{Coeff, Polynomial};
pub use word::{Generator, Word};

use std::fmt;

/// Errors raised by word and polynomial operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreeAlgError {
    /// Occurrence search was asked for an empty pattern.
    EmptyPattern,
    /// A leading term or monic rescaling was requested of the zero polynomial.
    NoLeadingTerm,
    /// A word failed to parse; the message names the offending token.
    Parse(String),
}

impl fmt::Display for FreeAlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FreeAlgError::EmptyPattern => write!(f, "occurrence pattern must be nonempty"),
            FreeAlgError::NoLeadingTerm => write!(f, "no leading term: polynomial is zero"),
            FreeAlgError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for FreeAlgError {}
