//! Polynomials over Q with words as monomials.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{FreeAlgError, Word};

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// A finitely supported Q-linear combination of words.
///
/// Terms are keyed by word in deg-lex order, so the last entry is the leading
/// term. The zero coefficient never appears in the map.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Word, Coeff>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    /// The polynomial consisting of the single word `w` with coefficient 1.
    pub fn from_word(w: Word) -> Polynomial {
        Polynomial::monomial(w, Coeff::one())
    }

    /// The polynomial `c·w`; the zero coefficient yields the zero polynomial.
    pub fn monomial(w: Word, c: Coeff) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending deg-lex order of their words.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Coeff)> {
        self.terms.iter()
    }

    /// The coefficient of `w`, if present.
    pub fn coeff(&self, w: &Word) -> Option<&Coeff> {
        self.terms.get(w)
    }

    /// The deg-lex-greatest term; errors on the zero polynomial.
    pub fn leading_term(&self) -> Result<(&Word, &Coeff), FreeAlgError> {
        self.terms
            .last_key_value()
            .ok_or(FreeAlgError::NoLeadingTerm)
    }

    /// Rescales so the leading coefficient is 1; errors on zero.
    pub fn normalize_monic(&self) -> Result<Polynomial, FreeAlgError> {
        let (_, lead) = self.leading_term()?;
        let lead = lead.clone();
        if lead.is_one() {
            return Ok(self.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), c / &lead))
            .collect();
        Ok(Polynomial { terms })
    }

    /// Linear combination `self + c·other`, with cancellation.
    pub fn combine(&self, c: &Coeff, other: &Polynomial) -> Polynomial {
        let mut result = self.clone();
        for (w, d) in &other.terms {
            result.add_term(w.clone(), c * d);
        }
        result
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.combine(&Coeff::one(), other)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.combine(&-Coeff::one(), other)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial::zero().sub(self)
    }

    /// Two-sided monomial multiple `a · self · b`.
    ///
    /// Concatenation with fixed `a`, `b` is injective on words, so no terms
    /// merge and the leading word of the result is `a · lt(self) · b`.
    pub fn sandwiched(&self, a: &Word, b: &Word) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (a.concat(w).concat(b), c.clone()))
            .collect();
        Polynomial { terms }
    }

    fn add_term(&mut self, w: Word, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(entry) => {
                entry.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut entry) => {
                *entry.get_mut() += c;
                if entry.get().is_zero() {
                    entry.remove();
                }
            }
        }
    }

    /// The difference of two single words, `u − v`.
    pub fn word_difference(u: Word, v: Word) -> Polynomial {
        Polynomial::from_word(u).combine(&-Coeff::one(), &Polynomial::from_word(v))
    }
}

/// Prints terms in descending deg-lex order as `c*W`, joined by ` + `;
/// rational coefficients appear as `p/q` with the denominator omitted when 1.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> Coeff {
    BigRational::new(n.into(), d.into())
}
