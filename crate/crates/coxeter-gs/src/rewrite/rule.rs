//! Oriented rules and rule systems.

use std::fmt;

use num_traits::One;

use super::RewriteError;
use crate::freealg::{Coeff, Polynomial, Word};

/// Where a rule came from; purely informational, preserved through pipelines.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RuleSource {
    /// A generator square s·s → e.
    Squares,
    /// A braid relation m(s,s') → m(s',s).
    Braid,
    /// A chain relation derived from the presentation.
    Chain,
    /// Added during completion from the composition with the given sequence id.
    Derived(u64),
}

impl fmt::Display for RuleSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleSource::Squares => write!(f, "square"),
            RuleSource::Braid => write!(f, "braid"),
            RuleSource::Chain => write!(f, "chain"),
            RuleSource::Derived(id) => write!(f, "derived({id})"),
        }
    }
}

/// A monic rewrite rule `lhs → tail`, standing for the polynomial
/// `lhs − tail`; every word in the tail is deg-lex-smaller than `lhs`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RewriteRule {
    lhs: Word,
    tail: Polynomial,
    source: RuleSource,
}

impl RewriteRule {
    /// Orients a nonzero polynomial: makes it monic, takes the leading word
    /// as `lhs`, and moves the remaining terms (negated) to the tail.
    pub fn from_polynomial(f: &Polynomial, source: RuleSource) -> Result<RewriteRule, RewriteError> {
        let monic = f.normalize_monic()?;
        let (lhs, _) = monic.leading_term()?;
        let lhs = lhs.clone();
        // tail = lhs − monic, i.e. the lower terms with signs flipped.
        let tail = Polynomial::from_word(lhs.clone()).sub(&monic);
        Ok(RewriteRule { lhs, tail, source })
    }

    /// Convenience for binomial relations `lhs → rhs` with `lhs > rhs`.
    pub fn between_words(lhs: Word, rhs: Word, source: RuleSource) -> Result<RewriteRule, RewriteError> {
        RewriteRule::from_polynomial(&Polynomial::word_difference(lhs, rhs), source)
    }

    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    pub fn tail(&self) -> &Polynomial {
        &self.tail
    }

    pub fn source(&self) -> RuleSource {
        self.source
    }

    /// The polynomial `lhs − tail` the rule stands for.
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_word(self.lhs.clone()).sub(&self.tail)
    }

    /// The right-hand side as a word, when the tail is a single word with
    /// coefficient 1 (the shape every group relation takes here).
    pub fn rhs_word(&self) -> Option<&Word> {
        if self.tail.num_terms() != 1 {
            return None;
        }
        let (w, c) = self.tail.terms().next().unwrap();
        if c.is_one() {
            Some(w)
        } else {
            None
        }
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rhs_word() {
            Some(rhs) => write!(f, "{} -> {}", self.lhs, rhs),
            None => write!(f, "{} -> {}", self.lhs, self.tail),
        }
    }
}

/// An ordered collection of rules.
///
/// Rules are stored in insertion order (their position is a stable sequence
/// id) and iterated in the canonical order: ascending deg-lex on `lhs`, ties
/// broken by sequence id. Identical polynomials are inserted only once;
/// distinct rules with an equal `lhs` may coexist until interreduction.
#[derive(Clone, Debug, Default)]
pub struct RuleSystem {
    entries: Vec<RewriteRule>,
    /// Indices of `entries` sorted by (lhs, sequence id).
    order: Vec<usize>,
}

impl RuleSystem {
    pub fn new() -> RuleSystem {
        RuleSystem::default()
    }

    pub fn from_rules(rules: impl IntoIterator<Item = RewriteRule>) -> RuleSystem {
        let mut system = RuleSystem::new();
        for rule in rules {
            system.insert(rule);
        }
        system
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Inserts a rule; returns false (and drops it) when an identical
    /// polynomial is already present.
    pub fn insert(&mut self, rule: RewriteRule) -> bool {
        let duplicate = self
            .entries
            .iter()
            .any(|r| r.lhs == rule.lhs && r.tail == rule.tail);
        if duplicate {
            return false;
        }
        let seq = self.entries.len();
        let pos = self
            .order
            .partition_point(|&i| self.entries[i].lhs() <= rule.lhs());
        self.entries.push(rule);
        self.order.insert(pos, seq);
        true
    }

    /// Rules in canonical order.
    pub fn rules(&self) -> impl DoubleEndedIterator<Item = &RewriteRule> {
        self.order.iter().map(|&i| &self.entries[i])
    }

    /// The rule with the given canonical index.
    pub fn rule(&self, index: usize) -> &RewriteRule {
        &self.entries[self.order[index]]
    }

    /// The rule with the given sequence id (insertion order).
    pub(crate) fn rule_by_seq(&self, seq: usize) -> &RewriteRule {
        &self.entries[seq]
    }

    pub(crate) fn seq_count(&self) -> usize {
        self.entries.len()
    }

    /// The length of the longest lhs, or 0 for an empty system.
    pub fn largest_lhs_len(&self) -> usize {
        self.entries.iter().map(|r| r.lhs.len()).max().unwrap_or(0)
    }

    /// The leftmost rule match inside `w`: the smallest position at which any
    /// lhs occurs, together with the canonical index of the matching rule
    /// whose lhs is deg-lex-greatest among those matching there.
    pub fn leftmost_match(&self, w: &Word) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            let mut best: Option<usize> = None;
            for (idx, rule) in self.rules().enumerate() {
                if w.matches_at(rule.lhs(), pos) {
                    // Canonical order ascends in (lhs, sequence id), so the
                    // last match here has the greatest lhs; equal-lhs ties go
                    // to the latest insertion, deterministically.
                    best = Some(idx);
                }
            }
            if let Some(idx) = best {
                return Some((pos, idx));
            }
        }
        None
    }

    /// Whether any lhs occurs in `w`.
    pub fn reduces(&self, w: &Word) -> bool {
        self.leftmost_match(w).is_some()
    }

    /// Deterministic normal form of `f` with the default step budget.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, RewriteError> {
        self.normal_form_with_budget(f, super::DEFAULT_STEP_BUDGET)
    }

    /// Deterministic normal form of a single word.
    pub fn normal_form_word(&self, w: &Word) -> Result<Polynomial, RewriteError> {
        self.normal_form(&Polynomial::from_word(w.clone()))
    }

    /// Deterministic normal form: repeatedly pick the deg-lex-greatest
    /// reducible word in the support, rewrite its leftmost match (greatest
    /// lhs on position ties), and charge one step, until nothing reduces.
    pub fn normal_form_with_budget(
        &self,
        f: &Polynomial,
        budget: u64,
    ) -> Result<Polynomial, RewriteError> {
        let mut current = f.clone();
        let mut steps = 0u64;
        loop {
            let target = current
                .terms()
                .rev()
                .find_map(|(w, c)| self.leftmost_match(w).map(|(pos, idx)| (w.clone(), c.clone(), pos, idx)));
            let Some((word, coeff, pos, idx)) = target else {
                return Ok(current);
            };
            if steps >= budget {
                return Err(RewriteError::StepBudgetExceeded);
            }
            steps += 1;
            current = apply_rule_at(&current, &word, &coeff, self.rule(idx), pos);
        }
    }
}

/// One ELW step at a known occurrence: `f − c · a·(lhs − tail)·b`, which
/// removes the term `c·w` and adds `c · a·tail·b`.
pub(crate) fn apply_rule_at(
    f: &Polynomial,
    w: &Word,
    c: &Coeff,
    rule: &RewriteRule,
    pos: usize,
) -> Polynomial {
    let a = w.subword(0, pos);
    let b = w.subword(pos + rule.lhs().len(), w.len());
    f.combine(&-c.clone(), &rule.polynomial().sandwiched(&a, &b))
}
