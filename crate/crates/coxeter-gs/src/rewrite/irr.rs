//! The stream of irreducible words: words containing no rule's lhs.
//!
//! When a system is closed under composition, these words form a linear
//! basis of the quotient algebra, so for a group presentation their count
//! (over all lengths the group needs) is the group order.

use super::RuleSystem;
use crate::freealg::{Generator, Word};

/// Iterator over all irreducible words of length ≤ `max_len` over the
/// alphabet s1…s`rank`, in ascending deg-lex order.
pub struct IrrWords {
    lhss: Vec<Word>,
    gens: Vec<Generator>,
    max_len: usize,
    /// Irreducible words of the current length, lexicographically sorted.
    level: Vec<Word>,
    next_index: usize,
}

/// Streams the irreducible words of `system` over s1…s`rank`, ascending in
/// deg-lex, up to length `max_len` inclusive.
pub fn irr_words(system: &RuleSystem, rank: u32, max_len: usize) -> IrrWords {
    let lhss = system.rules().map(|r| r.lhs().clone()).collect::<Vec<_>>();
    let gens = (1..=rank).map(Generator::new).collect();
    // Level 0 is the empty word, unless some lhs is empty (a degenerate
    // system whose ideal is everything), in which case nothing survives.
    let empty_ok = !lhss.iter().any(|l| l.is_empty());
    IrrWords {
        lhss,
        gens,
        max_len,
        level: if empty_ok { vec![Word::empty()] } else { Vec::new() },
        next_index: 0,
    }
}

impl IrrWords {
    /// A word `w·g` is irreducible iff `w` is and no lhs is a suffix of
    /// `w·g`; any new occurrence must end at the appended letter.
    fn advance_level(&mut self) {
        let mut next = Vec::new();
        for word in &self.level {
            for &g in &self.gens {
                let mut letters = word.letters().to_vec();
                letters.push(g);
                let candidate = Word::from_letters(letters);
                if !self.lhss.iter().any(|l| candidate.ends_with(l)) {
                    next.push(candidate);
                }
            }
        }
        self.level = next;
        self.next_index = 0;
    }
}

impl Iterator for IrrWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            if self.next_index < self.level.len() {
                let word = self.level[self.next_index].clone();
                self.next_index += 1;
                return Some(word);
            }
            let current_len = self.level.first().map(|w| w.len())?;
            if current_len >= self.max_len {
                return None;
            }
            self.advance_level();
        }
    }
}
