//! Shirshov completion and interreduction.

use std::collections::BTreeSet;

use super::compose::{composition, inclusion_ambiguities, intersection_ambiguities, Ambiguity};
use super::{RewriteError, RewriteRule, RuleSource, RuleSystem};
use crate::freealg::Word;

/// Whether completion processed every ambiguity or had to skip some.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CompletionStatus {
    /// Every ambiguity was processed and reduced to zero (directly, or via a
    /// rule added for it): the system is closed under composition up to any
    /// degree its ambiguities reach.
    Closed,
    /// At least one ambiguity exceeded the degree cap and was skipped; the
    /// result is only valid up to the cap.
    Truncated,
}

impl std::fmt::Display for CompletionStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CompletionStatus::Closed => write!(f, "closed"),
            CompletionStatus::Truncated => write!(f, "truncated"),
        }
    }
}

/// Counters describing a completion run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct CompletionStats {
    /// Ambiguities whose composition was computed and reduced.
    pub pairs_processed: usize,
    /// Rules inserted for nontrivial remainders.
    pub rules_added: usize,
    /// Ambiguities skipped because their word exceeded the cap.
    pub skipped: usize,
}

/// The result of a completion run.
#[derive(Clone, Debug)]
pub struct CompletionOutcome {
    pub system: RuleSystem,
    pub status: CompletionStatus,
    pub max_degree: usize,
    pub stats: CompletionStats,
}

/// A queued ambiguity, ordered by (w, f, g, kind, split) so processing is
/// ascending in the ambiguity word with deterministic tie-breaks. Rule
/// identities are sequence ids, which never move as rules are added.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Pending {
    w: Word,
    f_seq: usize,
    g_seq: usize,
    ambiguity: Ambiguity,
}

fn enqueue_pair(queue: &mut BTreeSet<Pending>, system: &RuleSystem, f_seq: usize, g_seq: usize) {
    let f = system.rule_by_seq(f_seq);
    let g = system.rule_by_seq(g_seq);
    for ambiguity in intersection_ambiguities(f, g) {
        queue.insert(Pending { w: ambiguity.w.clone(), f_seq, g_seq, ambiguity });
    }
    for ambiguity in inclusion_ambiguities(f, g) {
        queue.insert(Pending { w: ambiguity.w.clone(), f_seq, g_seq, ambiguity });
    }
}

/// Runs Shirshov completion on `input` up to `max_degree`.
///
/// Ambiguities are processed in ascending (w, pair) order. A nontrivial
/// remainder is normalized monic, oriented, inserted, and its ambiguities
/// against every rule are queued in turn. Ambiguities whose word exceeds
/// `max_degree` are skipped and force a `Truncated` status. Ambiguities that
/// became reducible-to-zero because of later insertions are still processed;
/// they reduce to zero harmlessly.
///
/// Errors if `max_degree` is smaller than the largest input lhs.
pub fn shirshov_complete(
    input: &RuleSystem,
    max_degree: usize,
) -> Result<CompletionOutcome, RewriteError> {
    let largest = input.largest_lhs_len();
    if max_degree < largest {
        return Err(RewriteError::MaxDegreeTooSmall {
            max_degree,
            largest_lhs: largest,
        });
    }

    let mut system = input.clone();
    let mut queue: BTreeSet<Pending> = BTreeSet::new();
    for f_seq in 0..system.seq_count() {
        for g_seq in 0..system.seq_count() {
            enqueue_pair(&mut queue, &system, f_seq, g_seq);
        }
    }

    let mut stats = CompletionStats::default();
    let mut derived_id = 0u64;
    while let Some(pending) = queue.pop_first() {
        if pending.w.len() > max_degree {
            stats.skipped += 1;
            continue;
        }
        stats.pairs_processed += 1;
        let f = system.rule_by_seq(pending.f_seq);
        let g = system.rule_by_seq(pending.g_seq);
        let raw = composition(f, g, &pending.ambiguity)?;
        let remainder = system.normal_form(&raw)?;
        if remainder.is_zero() {
            continue;
        }
        let rule = RewriteRule::from_polynomial(&remainder, RuleSource::Derived(derived_id))?;
        derived_id += 1;
        let new_seq = system.seq_count();
        let inserted = system.insert(rule);
        // A normal form's leading word is irreducible, so no rule with this
        // lhs (let alone this polynomial) was present.
        debug_assert!(inserted);
        stats.rules_added += 1;
        for other in 0..system.seq_count() {
            enqueue_pair(&mut queue, &system, new_seq, other);
            if other != new_seq {
                enqueue_pair(&mut queue, &system, other, new_seq);
            }
        }
    }

    let status = if stats.skipped == 0 {
        CompletionStatus::Closed
    } else {
        CompletionStatus::Truncated
    };
    Ok(CompletionOutcome {
        system,
        status,
        max_degree,
        stats,
    })
}

/// Interreduces a system without changing the ideal it generates.
///
/// Head phase: while some rule's lhs contains another rule's lhs (properly or
/// equally), remove the first such rule in canonical order, take the normal
/// form of its polynomial against the survivors, and reinsert it re-oriented
/// unless it vanished. Tail phase: replace every tail by its normal form
/// against the final rules, repeating until stable. The result has no
/// inclusion ambiguities and fully reduced tails.
pub fn interreduce(input: &RuleSystem) -> Result<RuleSystem, RewriteError> {
    let mut rules: Vec<RewriteRule> = input.rules().cloned().collect();

    // Head phase. Each pass removes a rule whose polynomial then re-enters
    // strictly smaller (or not at all), so the multiset of lhs words
    // decreases and the loop terminates.
    loop {
        let system = RuleSystem::from_rules(rules.iter().cloned());
        let ordered: Vec<&RewriteRule> = system.rules().collect();
        let target = ordered.iter().position(|r| {
            ordered
                .iter()
                .any(|other| *other != *r && r.lhs().contains_subword(other.lhs()))
        });
        let Some(idx) = target else {
            break;
        };
        let victim = ordered[idx].clone();
        let mut survivors: Vec<RewriteRule> =
            ordered.iter().filter(|r| ***r != victim).map(|r| (*r).clone()).collect();
        let others = RuleSystem::from_rules(survivors.iter().cloned());
        let reduced = others.normal_form(&victim.polynomial())?;
        if !reduced.is_zero() {
            survivors.push(RewriteRule::from_polynomial(&reduced, victim.source())?);
        }
        rules = survivors;
    }

    // Tail phase: normal-form every tail against the full system. A tail
    // word is deg-lex-below its lhs, so it can never contain that lhs and
    // reduction by "the full system" equals reduction by the others.
    loop {
        let system = RuleSystem::from_rules(rules.iter().cloned());
        let mut changed = false;
        let mut next = Vec::with_capacity(rules.len());
        for rule in system.rules() {
            let tail_nf = system.normal_form(rule.tail())?;
            if &tail_nf != rule.tail() {
                changed = true;
                let poly = crate::freealg::Polynomial::from_word(rule.lhs().clone()).sub(&tail_nf);
                next.push(RewriteRule::from_polynomial(&poly, rule.source())?);
            } else {
                next.push(rule.clone());
            }
        }
        rules = next;
        if !changed {
            break;
        }
    }

    Ok(RuleSystem::from_rules(rules))
}
