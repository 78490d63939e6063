//! Rewrite rules oriented by leading word, and everything built on them:
//! elimination of leading words (ELW), deterministic normal forms, overlap
//! and inclusion compositions, Shirshov completion, interreduction, and the
//! stream of irreducible words.

mod complete;
mod compose;
mod irr;
mod reduce;
mod rule;

pub use complete::{interreduce, shirshov_complete, CompletionOutcome, CompletionStats, CompletionStatus};
pub use compose::{
    check_all_compositions, composition, inclusion_ambiguities, intersection_ambiguities,
    is_trivial, Ambiguity, CompositionKind, CompositionReport,
};
pub use irr::{irr_words, IrrWords};
pub use reduce::{derive_via_elw, elw_step, Derivation, DerivationStep};
pub use rule::{RewriteRule, RuleSource, RuleSystem};

use crate::freealg::FreeAlgError;
use std::fmt;

/// Default cap on the number of reduction steps in one normal-form pass.
/// Deg-lex descent guarantees termination; the cap is a hard stop against
/// implementation bugs, sized far above anything desk-scale inputs need.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

/// Errors raised by the rewrite layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RewriteError {
    /// A rule application was requested where the rule does not match.
    RuleNotApplicable,
    /// A reduction exceeded its step budget.
    StepBudgetExceeded,
    /// Completion was asked to run below the degree of an input rule.
    MaxDegreeTooSmall { max_degree: usize, largest_lhs: usize },
    /// An ambiguity's words are inconsistent with the rules it names.
    BadAmbiguity(String),
    /// A defect surfaced by the underlying free-algebra layer.
    FreeAlg(FreeAlgError),
}

impl fmt::Display for RewriteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewriteError::RuleNotApplicable => {
                write!(f, "rule is not applicable: lhs does not occur in the leading word")
            }
            RewriteError::StepBudgetExceeded => write!(f, "step budget exceeded"),
            RewriteError::MaxDegreeTooSmall {
                max_degree,
                largest_lhs,
            } => write!(
                f,
                "max degree {max_degree} is smaller than the largest input lhs ({largest_lhs})"
            ),
            RewriteError::BadAmbiguity(msg) => write!(f, "bad ambiguity: {msg}"),
            RewriteError::FreeAlg(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for RewriteError {}

impl From<FreeAlgError> for RewriteError {
    fn from(e: FreeAlgError) -> RewriteError {
        RewriteError::FreeAlg(e)
    }
}
