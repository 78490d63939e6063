//! Overlap (intersection) and inclusion ambiguities and their compositions.

use std::fmt;

use super::{RewriteError, RewriteRule, RuleSystem};
use crate::freealg::{Polynomial, Word};

/// The two composition shapes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum CompositionKind {
    /// w = f.lhs·b = a·g.lhs with a proper two-sided overlap.
    Intersection,
    /// w = f.lhs = a·g.lhs·b: g's lhs sits inside f's.
    Inclusion,
}

impl fmt::Display for CompositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompositionKind::Intersection => write!(f, "intersection"),
            CompositionKind::Inclusion => write!(f, "inclusion"),
        }
    }
}

/// An ambiguity between two rules: the word `w` on which both act, split as
/// the kind dictates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Ambiguity {
    pub kind: CompositionKind,
    pub w: Word,
    pub a: Word,
    pub b: Word,
}

/// All proper overlaps where a suffix of `f.lhs` equals a prefix of `g.lhs`:
/// w = f.lhs·b = a·g.lhs with 0 < overlap < min(|f.lhs|, |g.lhs|), so full
/// containment is excluded. Self-overlap (`f` = `g`) is legitimate.
pub fn intersection_ambiguities(f: &RewriteRule, g: &RewriteRule) -> Vec<Ambiguity> {
    let fl = f.lhs();
    let gl = g.lhs();
    let mut out = Vec::new();
    for olap in 1..fl.len().min(gl.len()) {
        let suffix = fl.subword(fl.len() - olap, fl.len());
        let prefix = gl.subword(0, olap);
        if suffix == prefix {
            let a = fl.subword(0, fl.len() - olap);
            let b = gl.subword(olap, gl.len());
            out.push(Ambiguity {
                kind: CompositionKind::Intersection,
                w: fl.concat(&b),
                a,
                b,
            });
        }
    }
    out
}

/// All placements of `g.lhs` inside `f.lhs`: w = f.lhs = a·g.lhs·b. The two
/// rules must be distinct; rules with equal lhs (and different tails) meet
/// here at (e, e). A rule is never compared against itself at the identical
/// placement.
pub fn inclusion_ambiguities(f: &RewriteRule, g: &RewriteRule) -> Vec<Ambiguity> {
    if f == g {
        return Vec::new();
    }
    let fl = f.lhs();
    let gl = g.lhs();
    let Ok(positions) = fl.occurrences(gl) else {
        return Vec::new();
    };
    positions
        .into_iter()
        .map(|pos| Ambiguity {
            kind: CompositionKind::Inclusion,
            w: fl.clone(),
            a: fl.subword(0, pos),
            b: fl.subword(pos + gl.len(), fl.len()),
        })
        .collect()
}

/// The composition of `f` and `g` on an ambiguity:
/// intersection (f,g)_w = f·b − a·g; inclusion (f,g)_w = f − a·g·b.
/// In both shapes the leading words cancel, so every word of the result is
/// strictly smaller than `w`.
pub fn composition(
    f: &RewriteRule,
    g: &RewriteRule,
    ambiguity: &Ambiguity,
) -> Result<Polynomial, RewriteError> {
    let Ambiguity { kind, w, a, b } = ambiguity;
    match kind {
        CompositionKind::Intersection => {
            if &f.lhs().concat(b) != w || &a.concat(g.lhs()) != w {
                return Err(RewriteError::BadAmbiguity(format!(
                    "w = {w} does not split as f.lhs·b and a·g.lhs"
                )));
            }
            let empty = Word::empty();
            Ok(f.polynomial()
                .sandwiched(&empty, b)
                .sub(&g.polynomial().sandwiched(a, &empty)))
        }
        CompositionKind::Inclusion => {
            if w != f.lhs() || &a.concat(g.lhs()).concat(b) != w {
                return Err(RewriteError::BadAmbiguity(format!(
                    "w = {w} does not split as f.lhs = a·g.lhs·b"
                )));
            }
            Ok(f.polynomial().sub(&g.polynomial().sandwiched(a, b)))
        }
    }
}

/// Triviality here is the operational criterion: the composition reduces to
/// zero against the system.
pub fn is_trivial(h: &Polynomial, system: &RuleSystem) -> Result<bool, RewriteError> {
    Ok(system.normal_form(h)?.is_zero())
}

/// A fully evaluated composition between two rules of a system.
#[derive(Clone, Debug)]
pub struct CompositionReport {
    pub kind: CompositionKind,
    /// Canonical indices of (f, g) in the system.
    pub f_index: usize,
    pub g_index: usize,
    /// The ambiguity word w.
    pub ambiguity: Word,
    /// The raw composition polynomial.
    pub raw: Polynomial,
    /// Its normal form against the whole system.
    pub remainder: Polynomial,
    pub trivial: bool,
}

/// Evaluates every composition among the system's rules (all ordered pairs,
/// including self-overlaps), in ascending order of (w, f, g, kind, split).
pub fn check_all_compositions(system: &RuleSystem) -> Result<Vec<CompositionReport>, RewriteError> {
    let rules: Vec<&RewriteRule> = system.rules().collect();
    let mut jobs: Vec<(Word, usize, usize, Ambiguity)> = Vec::new();
    for (fi, f) in rules.iter().enumerate() {
        for (gi, g) in rules.iter().enumerate() {
            for amb in intersection_ambiguities(f, g) {
                jobs.push((amb.w.clone(), fi, gi, amb));
            }
            for amb in inclusion_ambiguities(f, g) {
                jobs.push((amb.w.clone(), fi, gi, amb));
            }
        }
    }
    jobs.sort();
    let mut reports = Vec::with_capacity(jobs.len());
    for (w, fi, gi, amb) in jobs {
        let raw = composition(rules[fi], rules[gi], &amb)?;
        let remainder = system.normal_form(&raw)?;
        let trivial = remainder.is_zero();
        reports.push(CompositionReport {
            kind: amb.kind,
            f_index: fi,
            g_index: gi,
            ambiguity: w,
            raw,
            remainder,
            trivial,
        });
    }
    Ok(reports)
}
