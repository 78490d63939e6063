//! Elimination of leading words (ELW) and traced derivations built from
//! chains of eliminations.

use super::rule::apply_rule_at;
use super::{RewriteError, RewriteRule, RuleSystem, DEFAULT_STEP_BUDGET};
use crate::freealg::{Polynomial, Word};

/// One elimination of the leading word: rewrites the leftmost occurrence of
/// `rule.lhs()` inside the leading word of `f`.
///
/// Errors if `f` is zero or the rule does not match the leading word. The
/// result's leading word is strictly deg-lex-smaller than `f`'s (or the
/// result is zero).
pub fn elw_step(f: &Polynomial, rule: &RewriteRule) -> Result<Polynomial, RewriteError> {
    let (lead, coeff) = f.leading_term().map_err(|_| RewriteError::RuleNotApplicable)?;
    let (lead, coeff) = (lead.clone(), coeff.clone());
    let positions = lead
        .occurrences(rule.lhs())
        .map_err(|_| RewriteError::RuleNotApplicable)?;
    let Some(&pos) = positions.first() else {
        return Err(RewriteError::RuleNotApplicable);
    };
    Ok(apply_rule_at(f, &lead, &coeff, rule, pos))
}

/// One elimination within a derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationStep {
    /// The word an occurrence was eliminated from.
    pub word: Word,
    /// The lhs of the rule that eliminated it.
    pub rule_lhs: Word,
    /// The letter position of the occurrence rewritten.
    pub position: usize,
}

/// The result of fully deriving a rule against a set of other rules.
#[derive(Clone, Debug)]
pub struct Derivation {
    /// The polynomial at the end of the derivation.
    pub result: Polynomial,
    /// The ELW steps taken, in order.
    pub steps: Vec<DerivationStep>,
}

/// Derives `start`'s polynomial by a sequence of ELWs against `others`:
/// while any monomial is reducible, eliminate the leftmost match (greatest
/// lhs on ties) in the greatest such monomial and record the step. The
/// result has every monomial irreducible, so a rule that is a consequence
/// of `others` derives to zero and a pre-basis element derives to its
/// rewritten counterpart.
pub fn derive_via_elw(start: &RewriteRule, others: &RuleSystem) -> Result<Derivation, RewriteError> {
    let mut current = start.polynomial();
    let mut steps = Vec::new();
    let mut budget = DEFAULT_STEP_BUDGET;
    loop {
        let Some((word, coeff, pos, idx)) = current.terms().rev().find_map(|(w, c)| {
            others
                .leftmost_match(w)
                .map(|(pos, idx)| (w.clone(), c.clone(), pos, idx))
        }) else {
            break;
        };
        if budget == 0 {
            return Err(RewriteError::StepBudgetExceeded);
        }
        budget -= 1;
        let rule = others.rule(idx);
        steps.push(DerivationStep {
            word: word.clone(),
            rule_lhs: rule.lhs().clone(),
            position: pos,
        });
        current = apply_rule_at(&current, &word, &coeff, rule, pos);
    }
    Ok(Derivation { result: current, steps })
}
