//! Detection of the four local block patterns in the chain-relation family
//! that produce nontrivial compositions.
//!
//! Each pattern (`C1`–`C4`) is a clause on a chain at block positions
//! (i, l): a configuration of orders and ⊳-relations among nearby block
//! letters. When a pattern occurs, the leading word of the chain relation
//! contains the leading word of a smaller relation (the *subrelation*) as a
//! subword, which is exactly an inclusion ambiguity that fails to resolve.
//! When no pattern occurs anywhere in the family, the presentation rules
//! are already closed under composition.
//!
//! Every pattern is local: it constrains at most three consecutive blocks,
//! and a pattern instance extends to an actual chain iff its first block is
//! a descending pair (a chain start) or is reachable from one in the
//! block-transition graph. Detection therefore searches the finite graph,
//! not the (possibly infinite) set of chains, and is exact: it reports a
//! kind iff some chain relation of any degree carries it.

use std::collections::VecDeque;
use std::fmt;

use super::matrix::CoxeterMatrix;
use super::relations::{chain_from_relation, Chain, PairGraph};
use crate::freealg::{Generator, Word};

/// The four local patterns, ordered.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum ConditionKind {
    C1,
    C2,
    C3,
    C4,
}

impl ConditionKind {
    pub const ALL: [ConditionKind; 4] = [
        ConditionKind::C1,
        ConditionKind::C2,
        ConditionKind::C3,
        ConditionKind::C4,
    ];
}

impl fmt::Display for ConditionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditionKind::C1 => write!(f, "C1"),
            ConditionKind::C2 => write!(f, "C2"),
            ConditionKind::C3 => write!(f, "C3"),
            ConditionKind::C4 => write!(f, "C4"),
        }
    }
}

/// A verified occurrence of a pattern: the chain, the block positions, and
/// the subrelation whose leading word embeds into the chain relation's.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConditionWitness {
    pub kind: ConditionKind,
    pub chain: Chain,
    pub i: usize,
    pub l: usize,
    /// Both sides of the embedded smaller relation (a braid or chain
    /// relation; its left side is a subword of the chain relation's).
    pub subrelation: (Word, Word),
}

impl fmt::Display for ConditionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} on {} at i={}, l={}: {} -> {}",
            self.kind, self.chain, self.i, self.l, self.subrelation.0, self.subrelation.1
        )
    }
}

/// The last letter of the length-(m−1) alternating word on an ordered pair.
fn last_letter(m: &CoxeterMatrix, (s, t): (Generator, Generator)) -> Generator {
    if m.order(s, t).expect("finite pair").is_multiple_of(2) {
        s
    } else {
        t
    }
}

fn finite_order(m: &CoxeterMatrix, (s, t): (Generator, Generator)) -> u32 {
    m.order(s, t).expect("finite pair")
}

/// The first letters s_j of the blocks in `range`.
fn firsts(chain: &Chain, range: std::ops::RangeInclusive<usize>) -> Vec<Generator> {
    chain.blocks()[*range.start()..=*range.end()]
        .iter()
        .map(|&(s, _)| s)
        .collect()
}

fn word(letters: impl IntoIterator<Item = Generator>) -> Word {
    Word::from_letters(letters.into_iter().collect())
}

/// C1 at (i, l): blocks i and l+1 both have order ≥ 3, the last letter of
/// block i's word dominates s_{l+1}, and everything between is a single
/// letter dominated by s_{l+1}.
fn c1_at(chain: &Chain, m: &CoxeterMatrix, i: usize, l: usize) -> bool {
    let b = chain.blocks();
    let x = last_letter(m, b[i]);
    let end = b[l + 1].0;
    finite_order(m, b[i]) >= 3
        && finite_order(m, b[l + 1]) >= 3
        && m.rhd(x, end)
        && (i + 1..=l).all(|j| finite_order(m, b[j]) == 2 && m.rhd(end, b[j].0))
}

/// The subrelation of C1: x_i commutes past s_{i+1} … s_{l+1}.
fn c1_subrelation(chain: &Chain, m: &CoxeterMatrix, i: usize, l: usize) -> (Word, Word) {
    let b = chain.blocks();
    let x = last_letter(m, b[i]);
    let end = b[l + 1].0;
    let mid = firsts(chain, i + 1..=l);
    let lhs = word([x].into_iter().chain(mid.iter().copied()).chain([end]));
    let rhs = word([end, x].into_iter().chain(mid));
    (lhs, rhs)
}

/// C2 at (i, l), i < l: block i has order > 3, block i+1 is a single letter,
/// x_i reappears as s_{l+1} above s_{i+1} with m(x_i, s_{i+1}) = 3, and the
/// letters between commute under s_{l+1}.
fn c2_at(chain: &Chain, m: &CoxeterMatrix, i: usize, l: usize) -> bool {
    let b = chain.blocks();
    let x = last_letter(m, b[i]);
    let end = b[l + 1].0;
    finite_order(m, b[i]) > 3
        && finite_order(m, b[i + 1]) == 2
        && x == end
        && end > b[i + 1].0
        && m.order(x, b[i + 1].0) == Some(3)
        && (i + 2..=l).all(|j| finite_order(m, b[j]) == 2 && m.rhd(end, b[j].0))
}

/// The subrelation of C2: the braid of x_i and s_{i+1} stretched by the
/// commuting letters in between.
fn c2_subrelation(chain: &Chain, m: &CoxeterMatrix, i: usize, l: usize) -> (Word, Word) {
    let b = chain.blocks();
    let x = last_letter(m, b[i]);
    let c = b[i + 1].0;
    let mid = firsts(chain, i + 2..=l);
    let lhs = word([x, c].into_iter().chain(mid.iter().copied()).chain([x]));
    let rhs = word([c, x, c].into_iter().chain(mid));
    (lhs, rhs)
}

/// C3 at (i, l) with middle index μ: block i has even order ≥ 4, blocks
/// i+1 … l+1 are single letters, and s'_{i+1} ⊳ s_μ ⊳ x_i for some μ whose
/// earlier letters it dominates. The trailing shape of the letters is
/// checked by reconstructing the subrelation as a chain relation: this is
/// precisely the requirement that the subrelation belongs to the family.
fn c3_at(chain: &Chain, m: &CoxeterMatrix, i: usize, l: usize) -> Option<usize> {
    let b = chain.blocks();
    let order_i = finite_order(m, b[i]);
    if order_i < 3 || !order_i.is_multiple_of(2) {
        return None;
    }
    if !(i + 1..=l + 1).all(|j| finite_order(m, b[j]) == 2) {
        return None;
    }
    let x = last_letter(m, b[i]);
    let prime = b[i + 1].1;
    (i + 1..=l + 1).find(|&mu| {
        let sm = b[mu].0;
        m.rhd(prime, sm)
            && m.rhd(sm, x)
            && (i + 1..mu - 1).all(|n| m.rhd(sm, b[n].0))
            && {
                let (lhs, rhs) = c3_subrelation(chain, m, i, l, mu);
                chain_from_relation(&lhs, &rhs, m).is_some()
            }
    })
}

/// The subrelation of C3: s'_{i+1} x_i s_{i+1} … s_{l+1} with s_μ pulled
/// in front on the other side.
fn c3_subrelation(
    chain: &Chain,
    m: &CoxeterMatrix,
    i: usize,
    l: usize,
    mu: usize,
) -> (Word, Word) {
    let b = chain.blocks();
    let x = last_letter(m, b[i]);
    let prime = b[i + 1].1;
    let sm = b[mu].0;
    let run = firsts(chain, i + 1..=l + 1);
    let short = firsts(chain, i + 1..=l);
    let lhs = word([prime, x].into_iter().chain(run));
    let rhs = word([sm, prime, x].into_iter().chain(short));
    (lhs, rhs)
}

/// C4 at (i, l), i < l: like C2 but with s_{i+1} above x_i = s_{l+1}.
fn c4_at(chain: &Chain, m: &CoxeterMatrix, i: usize, l: usize) -> bool {
    let b = chain.blocks();
    let x = last_letter(m, b[i]);
    let end = b[l + 1].0;
    finite_order(m, b[i]) > 3
        && finite_order(m, b[i + 1]) == 2
        && b[i + 1].0 > x
        && x == end
        && m.order(x, b[i + 1].0) == Some(3)
        && (i + 2..=l).all(|j| finite_order(m, b[j]) == 2 && m.rhd(end, b[j].0))
}

/// The subrelation of C4: s'_{i+1} x_i s_{i+1} … x_i against
/// s_{i+1} s'_{i+1} x_i s_{i+1} ….
fn c4_subrelation(chain: &Chain, m: &CoxeterMatrix, i: usize, l: usize) -> (Word, Word) {
    let b = chain.blocks();
    let x = last_letter(m, b[i]);
    let c = b[i + 1].0;
    let prime = b[i + 1].1;
    let mid = firsts(chain, i + 2..=l);
    let lhs = word([prime, x, c].into_iter().chain(mid.iter().copied()).chain([x]));
    let rhs = word([c, prime, x, c].into_iter().chain(mid));
    (lhs, rhs)
}

/// Scans a chain for the given pattern; on a hit, returns the witness at
/// the smallest (i, l) position. Invalid chains carry nothing.
pub fn chain_has_condition(
    chain: &Chain,
    kind: ConditionKind,
    m: &CoxeterMatrix,
) -> Option<ConditionWitness> {
    if chain.validate(m).is_err() {
        return None;
    }
    let k = chain.len() - 2;
    let witness = |i: usize, l: usize, subrelation: (Word, Word)| ConditionWitness {
        kind,
        chain: chain.clone(),
        i,
        l,
        subrelation,
    };
    for i in 0..=k {
        for l in i..=k {
            let hit = match kind {
                ConditionKind::C1 => {
                    c1_at(chain, m, i, l).then(|| c1_subrelation(chain, m, i, l))
                }
                ConditionKind::C2 => (i < l && c2_at(chain, m, i, l))
                    .then(|| c2_subrelation(chain, m, i, l)),
                ConditionKind::C3 => {
                    c3_at(chain, m, i, l).map(|mu| c3_subrelation(chain, m, i, l, mu))
                }
                ConditionKind::C4 => (i < l && c4_at(chain, m, i, l))
                    .then(|| c4_subrelation(chain, m, i, l)),
            };
            if let Some(subrelation) = hit {
                return Some(witness(i, l, subrelation));
            }
        }
    }
    None
}

/// Re-verifies a witness from scratch: the chain must validate, the clauses
/// must hold at (i, l), the recorded subrelation must match them, and its
/// left side must occur inside the chain relation's leading word.
pub fn witness_holds(witness: &ConditionWitness, m: &CoxeterMatrix) -> bool {
    if witness.chain.validate(m).is_err() {
        return false;
    }
    let (i, l, k) = (witness.i, witness.l, witness.chain.len() - 2);
    if i > l || l > k {
        return false;
    }
    let clauses_match = match witness.kind {
        ConditionKind::C1 => {
            c1_at(&witness.chain, m, i, l)
                && witness.subrelation == c1_subrelation(&witness.chain, m, i, l)
        }
        ConditionKind::C2 => {
            i < l
                && c2_at(&witness.chain, m, i, l)
                && witness.subrelation == c2_subrelation(&witness.chain, m, i, l)
        }
        ConditionKind::C3 => c3_at(&witness.chain, m, i, l)
            .is_some_and(|mu| witness.subrelation == c3_subrelation(&witness.chain, m, i, l, mu)),
        ConditionKind::C4 => {
            i < l
                && c4_at(&witness.chain, m, i, l)
                && witness.subrelation == c4_subrelation(&witness.chain, m, i, l)
        }
    };
    if !clauses_match {
        return false;
    }
    let (lhs, _) = super::relations::relation_words_unchecked(witness.chain.blocks(), m);
    lhs.contains_subword(&witness.subrelation.0)
}

/// Shortest chain prefixes in the block graph: a breadth-first search from
/// all descending (initial) nodes, recording distances and parents.
struct Prefixes {
    dist: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
}

fn shortest_prefixes(graph: &PairGraph) -> Prefixes {
    let n = graph.nodes.len();
    let mut dist = vec![None; n];
    let mut parent = vec![None; n];
    let mut queue = VecDeque::new();
    for (idx, d) in dist.iter_mut().enumerate() {
        if graph.is_initial(idx) {
            *d = Some(0);
            queue.push_back(idx);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &v in &graph.edges[u] {
            if dist[v].is_none() {
                dist[v] = Some(dist[u].unwrap() + 1);
                parent[v] = Some(u);
                queue.push_back(v);
            }
        }
    }
    Prefixes { dist, parent }
}

impl Prefixes {
    /// The block path of a shortest chain prefix ending at `idx`, inclusive.
    fn path_to(&self, graph: &PairGraph, idx: usize) -> Vec<(Generator, Generator)> {
        let mut path = vec![graph.nodes[idx]];
        let mut at = idx;
        while let Some(p) = self.parent[at] {
            path.push(graph.nodes[p]);
            at = p;
        }
        path.reverse();
        path
    }
}

/// Finds every pattern kind occurring anywhere in the chain-relation family
/// and returns one canonical witness per kind (the one with the shortest,
/// blockwise-smallest chain), sorted by kind.
///
/// Detection is exact for presentations of any size: a pattern instance is
/// realizable iff its first block starts a chain (descending) or is
/// reachable from a chain start in the block graph, and each instance spans
/// at most three consecutive blocks.
pub fn detect_conditions(m: &CoxeterMatrix) -> Vec<ConditionWitness> {
    let graph = PairGraph::build(m);
    let prefixes = shortest_prefixes(&graph);
    let embeddable = |idx: usize| prefixes.dist[idx].is_some();
    let x = |idx: usize| last_letter(m, graph.nodes[idx]);
    let order = |idx: usize| finite_order(m, graph.nodes[idx]);
    let first = |idx: usize| graph.nodes[idx].0;

    let mut found = Vec::new();
    for kind in ConditionKind::ALL {
        let mut candidates: Vec<Vec<(Generator, Generator)>> = Vec::new();
        for u in 0..graph.nodes.len() {
            if !embeddable(u) {
                continue;
            }
            for &v in &graph.edges[u] {
                match kind {
                    ConditionKind::C1 => {
                        if order(u) >= 3 && order(v) >= 3 && m.rhd(x(u), first(v)) {
                            let mut blocks = prefixes.path_to(&graph, u);
                            blocks.push(graph.nodes[v]);
                            candidates.push(blocks);
                        }
                    }
                    ConditionKind::C3 => {
                        if order(u) >= 3
                            && order(u) % 2 == 0
                            && order(v) == 2
                            && m.rhd(first(v), x(u))
                        {
                            let mut blocks = prefixes.path_to(&graph, u);
                            blocks.push(graph.nodes[v]);
                            candidates.push(blocks);
                        }
                    }
                    ConditionKind::C2 | ConditionKind::C4 => {
                        if order(u) <= 3 || order(v) != 2 {
                            continue;
                        }
                        for &w in &graph.edges[v] {
                            let ordered = if kind == ConditionKind::C2 {
                                x(u) > first(v)
                            } else {
                                first(v) > x(u)
                            };
                            if x(u) == first(w)
                                && ordered
                                && m.order(x(u), first(v)) == Some(3)
                            {
                                let mut blocks = prefixes.path_to(&graph, u);
                                blocks.push(graph.nodes[v]);
                                blocks.push(graph.nodes[w]);
                                candidates.push(blocks);
                            }
                        }
                    }
                }
            }
        }
        if let Some(blocks) = candidates
            .into_iter()
            .min_by(|a, b| (a.len(), a).cmp(&(b.len(), b)))
        {
            let chain = Chain::new(blocks);
            debug_assert_eq!(chain.validate(m), Ok(()));
            let witness = chain_has_condition(&chain, kind, m)
                .expect("pattern instances always re-verify on their chain");
            found.push(witness);
        }
    }
    found
}

/// True when no pattern occurs at all: the squares, braid, and chain
/// relations are then already closed under composition, so the word
/// problem is decided by their normal forms directly.
pub fn gs_guaranteed(m: &CoxeterMatrix) -> bool {
    detect_conditions(m).is_empty()
}

/// Structural families of matrices that never carry any pattern.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum FamilyCriterion {
    /// Every off-diagonal order is at least 3 (or infinite): no two
    /// generators commute, so no ⊳ relation ever holds.
    NoCommutingPairs,
    /// Every off-diagonal order is 2 or infinite.
    RightAngled,
    /// The first generator commutes with every other, and no other pair
    /// commutes.
    CentralFirstGenerator,
}

impl fmt::Display for FamilyCriterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyCriterion::NoCommutingPairs => write!(f, "no-commuting-pairs"),
            FamilyCriterion::RightAngled => write!(f, "right-angled"),
            FamilyCriterion::CentralFirstGenerator => write!(f, "central-first-generator"),
        }
    }
}

/// All structural families the matrix belongs to (possibly none or several;
/// small ranks satisfy some vacuously).
pub fn classify_family(m: &CoxeterMatrix) -> Vec<FamilyCriterion> {
    let gens: Vec<Generator> = m.generators().collect();
    let pairs = || {
        gens.iter()
            .flat_map(|&s| gens.iter().map(move |&t| (s, t)))
            .filter(|&(s, t)| s > t)
    };
    let mut families = Vec::new();
    if pairs().all(|(s, t)| m.order(s, t) != Some(2)) {
        families.push(FamilyCriterion::NoCommutingPairs);
    }
    if pairs().all(|(s, t)| matches!(m.order(s, t), None | Some(2))) {
        families.push(FamilyCriterion::RightAngled);
    }
    let first = Generator::new(1);
    if !gens.is_empty()
        && pairs().all(|(s, t)| {
            if t == first {
                m.order(s, t) == Some(2)
            } else {
                m.order(s, t) != Some(2)
            }
        })
    {
        families.push(FamilyCriterion::CentralFirstGenerator);
    }
    families
}
