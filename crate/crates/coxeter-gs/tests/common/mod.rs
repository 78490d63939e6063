//! Oracles and helpers shared by the integration suites: permutation-group
//! closures, a braid-move reachability search, and randomized reduction
//! strategies, all independent of the rewriting engine under test.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use coxeter_gs::coxeter::{alternating_word, CoxeterMatrix};
use coxeter_gs::freealg::{Generator, Polynomial, Word};
use coxeter_gs::rewrite::RuleSystem;
use rand::Rng;

pub fn matrix(text: &str) -> CoxeterMatrix {
    CoxeterMatrix::parse(text).expect("test matrix parses")
}

pub fn word(text: &str) -> Word {
    text.parse().expect("test word parses")
}

/// Builds a matrix from its strict upper triangle, row-major (`None` = ∞).
pub fn matrix_from_upper(n: usize, upper: &[Option<u32>]) -> CoxeterMatrix {
    assert_eq!(upper.len(), n * (n - 1) / 2);
    let mut entries = vec![Some(1); n * n];
    let mut values = upper.iter();
    for i in 0..n {
        for j in (i + 1)..n {
            let v = *values.next().unwrap();
            entries[i * n + j] = v;
            entries[j * n + i] = v;
        }
    }
    CoxeterMatrix::new(n, entries).expect("upper triangle forms a valid matrix")
}

/// Size of the permutation group generated by `generators` (as images of
/// 0..k), computed by plain breadth-first closure under composition.
pub fn permutation_closure_order(generators: &[Vec<usize>]) -> usize {
    let k = generators[0].len();
    let identity: Vec<usize> = (0..k).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    seen.insert(identity.clone());
    let mut queue = VecDeque::from([identity]);
    while let Some(p) = queue.pop_front() {
        for g in generators {
            let q: Vec<usize> = (0..k).map(|i| g[p[i]]).collect();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.len()
}

/// Order of the group of permutations of `rank + 1` points generated by
/// adjacent transpositions — the standard faithful model for the chain
/// matrix with consecutive orders 3 and distant orders 2.
pub fn symmetric_group_order(rank: usize) -> usize {
    let k = rank + 1;
    let generators: Vec<Vec<usize>> = (0..rank)
        .map(|i| {
            let mut p: Vec<usize> = (0..k).collect();
            p.swap(i, i + 1);
            p
        })
        .collect();
    permutation_closure_order(&generators)
}

/// Order of the group generated by two reflections of a regular `m`-gon
/// with adjacent axes, acting on the vertices.
pub fn dihedral_group_order(m: usize) -> usize {
    let a: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
    let b: Vec<usize> = (0..m).map(|i| (m + 1 - i) % m).collect();
    permutation_closure_order(&[a, b])
}

/// Whether `to` is reachable from `from` by replacing occurrences of one
/// alternating braid word with its mirror, in either direction. Panics if
/// the search exceeds `state_cap` distinct words — a test sizing error,
/// not a verdict.
pub fn braid_reachable(m: &CoxeterMatrix, from: &Word, to: &Word, state_cap: usize) -> bool {
    let mut moves: Vec<(Word, Word)> = Vec::new();
    for s in m.generators() {
        for t in m.generators().filter(|&t| t < s) {
            if let Some(order) = m.order(s, t) {
                if order >= 2 {
                    let a = alternating_word(s, t, order as usize);
                    let b = alternating_word(t, s, order as usize);
                    moves.push((a.clone(), b.clone()));
                    moves.push((b, a));
                }
            }
        }
    }
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    seen.insert(from.clone());
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(w) = queue.pop_front() {
        if &w == to {
            return true;
        }
        for (pattern, replacement) in &moves {
            let Ok(positions) = w.occurrences(pattern) else {
                continue;
            };
            for pos in positions {
                let next = w
                    .subword(0, pos)
                    .concat(replacement)
                    .concat(&w.subword(pos + pattern.len(), w.len()));
                if seen.insert(next.clone()) {
                    assert!(
                        seen.len() <= state_cap,
                        "braid-move search exceeded {state_cap} states"
                    );
                    queue.push_back(next);
                }
            }
        }
    }
    false
}

/// A uniformly random word over s1…s`rank` of length ≤ `max_len`.
pub fn random_word<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<Generator> = (0..len)
        .map(|_| Generator::new(rng.gen_range(1..=rank as u32)))
        .collect();
    Word::from_letters(letters)
}

/// Reduces `start` by repeatedly applying a uniformly random applicable
/// rule at a uniformly random occurrence. Only meaningful on word-to-word
/// systems; panics if a rule carries a non-word right side.
pub fn randomized_normal_form<R: Rng>(system: &RuleSystem, start: &Word, rng: &mut R) -> Word {
    let mut current = start.clone();
    loop {
        let mut applicable: Vec<(usize, usize)> = Vec::new();
        for (idx, rule) in system.rules().enumerate() {
            if let Ok(positions) = current.occurrences(rule.lhs()) {
                applicable.extend(positions.into_iter().map(|pos| (idx, pos)));
            }
        }
        if applicable.is_empty() {
            return current;
        }
        let (idx, pos) = applicable[rng.gen_range(0..applicable.len())];
        let rule = system.rules().nth(idx).expect("index from enumerate");
        let rhs = rule.rhs_word().expect("word-to-word system").clone();
        current = current
            .subword(0, pos)
            .concat(&rhs)
            .concat(&current.subword(pos + rule.lhs().len(), current.len()));
    }
}

/// The deterministic engine normal form of a word, insisting (as holds for
/// every group system in these suites) that it is a single plain word.
pub fn engine_normal_form(system: &RuleSystem, start: &Word) -> Word {
    let nf: Polynomial = system.normal_form_word(start).expect("reduction halts");
    let mut terms = nf.terms();
    let (w, c) = terms.next().expect("group words never reduce to zero");
    assert!(terms.next().is_none(), "group normal forms are single words");
    assert!(num_traits::One::is_one(c), "group normal forms are monic");
    w.clone()
}
