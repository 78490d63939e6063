//! The three relation families of a Coxeter presentation and the chains
//! behind the third one.
//!
//! A chain is a sequence of blocks (s_0,s'_0), …, (s_{k+1},s'_{k+1}) of
//! distinct generators with every m(s_i,s'_i) finite, subject to:
//!
//! * orientation: s_0 > s'_0 and s_i < s'_i for i ≥ 1;
//! * the parity link: s'_{i+1} is s'_i if m(s_i,s'_i) is even, s_i if odd;
//! * no immediate repetition: {s_i,s'_i} ≠ {s_{i+1},s'_{i+1}}.
//!
//! Writing u_i for the alternating word (m_i − 1)(s_i,s'_i), each chain
//! yields the relation
//!
//! ```text
//!   u_0 u_1 … u_k · m(s_{k+1},s'_{k+1})  =  m(s'_0,s_0) · u_1 … u_{k+1}
//! ```
//!
//! whose two sides have equal length and which holds in the group because
//! consecutive blocks share letters exactly as the parity link dictates.

use std::collections::BTreeSet;
use std::fmt;

use super::matrix::{alternating_word, CoxeterMatrix};
use crate::freealg::{Generator, Word};
use crate::rewrite::{RewriteRule, RuleSource, RuleSystem};

/// Errors raised when validating a chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainError {
    /// Chains need at least two blocks.
    TooShort { blocks: usize },
    /// A block names a generator outside the matrix.
    LetterOutOfRange { block: usize },
    /// A block pairs a generator with itself.
    EqualLetters { block: usize },
    /// A block's two generators have infinite order.
    InfiniteBlock { block: usize },
    /// The first block must be descending (s_0 > s'_0).
    FirstBlockNotDescending,
    /// Blocks after the first must be ascending (s_i < s'_i).
    BlockNotAscending { block: usize },
    /// The primed letter does not follow the parity of the previous block.
    ParityBroken { block: usize },
    /// Two consecutive blocks use the same pair of generators.
    RepeatedSupport { block: usize },
}

impl fmt::Display for ChainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainError::TooShort { blocks } => {
                write!(f, "chain needs at least 2 blocks, has {blocks}")
            }
            ChainError::LetterOutOfRange { block } => {
                write!(f, "block {block} names a generator outside the matrix")
            }
            ChainError::EqualLetters { block } => {
                write!(f, "block {block} pairs a generator with itself")
            }
            ChainError::InfiniteBlock { block } => {
                write!(f, "block {block} has infinite order")
            }
            ChainError::FirstBlockNotDescending => {
                write!(f, "first block must be descending (s > s')")
            }
            ChainError::BlockNotAscending { block } => {
                write!(f, "block {block} must be ascending (s < s')")
            }
            ChainError::ParityBroken { block } => {
                write!(f, "block {block} breaks the parity link")
            }
            ChainError::RepeatedSupport { block } => {
                write!(f, "blocks {} and {block} repeat the same pair", block - 1)
            }
        }
    }
}

impl std::error::Error for ChainError {}

/// A chain of blocks; see the module docs for the invariants.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Chain {
    blocks: Vec<(Generator, Generator)>,
}

impl Chain {
    /// Wraps blocks without validating; call [`Chain::validate`] to check.
    pub fn new(blocks: Vec<(Generator, Generator)>) -> Chain {
        Chain { blocks }
    }

    pub fn blocks(&self) -> &[(Generator, Generator)] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Checks every chain invariant against the matrix.
    pub fn validate(&self, m: &CoxeterMatrix) -> Result<(), ChainError> {
        if self.blocks.len() < 2 {
            return Err(ChainError::TooShort {
                blocks: self.blocks.len(),
            });
        }
        for (i, &(s, t)) in self.blocks.iter().enumerate() {
            if !m.contains(s) || !m.contains(t) {
                return Err(ChainError::LetterOutOfRange { block: i });
            }
            if s == t {
                return Err(ChainError::EqualLetters { block: i });
            }
            if m.order(s, t).is_none() {
                return Err(ChainError::InfiniteBlock { block: i });
            }
            if i == 0 {
                if s < t {
                    return Err(ChainError::FirstBlockNotDescending);
                }
            } else if s > t {
                return Err(ChainError::BlockNotAscending { block: i });
            }
        }
        for i in 1..self.blocks.len() {
            let (ps, pt) = self.blocks[i - 1];
            let (s, t) = self.blocks[i];
            if m.next_prime(ps, pt) != Some(t) {
                return Err(ChainError::ParityBroken { block: i });
            }
            if (s.min(t), s.max(t)) == (ps.min(pt), ps.max(pt)) {
                return Err(ChainError::RepeatedSupport { block: i });
            }
        }
        Ok(())
    }

    /// The last letter of (m_i − 1)(s_i, s'_i): s_i when m_i is even,
    /// s'_i when odd.
    pub fn last_of_block_word(&self, i: usize, m: &CoxeterMatrix) -> Generator {
        let (s, t) = self.blocks[i];
        let order = m.order(s, t).expect("finite block");
        if order.is_multiple_of(2) {
            s
        } else {
            t
        }
    }

    /// The length of the relation this chain induces:
    /// Σ over blocks of (m_i − 1), plus one.
    pub fn relation_degree(&self, m: &CoxeterMatrix) -> usize {
        self.blocks
            .iter()
            .map(|&(s, t)| m.order(s, t).expect("finite block") as usize - 1)
            .sum::<usize>()
            + 1
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, t) in &self.blocks {
            write!(f, "({s},{t})")?;
        }
        Ok(())
    }
}

/// The generator-squares family: s·s → e for every generator.
pub fn relations_squares(m: &CoxeterMatrix) -> Vec<RewriteRule> {
    m.generators()
        .map(|g| {
            let w = Word::from_letters(vec![g, g]);
            RewriteRule::between_words(w, Word::empty(), RuleSource::Squares)
                .expect("s·s > e")
        })
        .collect()
}

/// The braid family: m(s,s') → m(s',s), one rule per pair s > s' with
/// m(s,s') finite, in ascending deg-lex order of the left-hand sides.
pub fn relations_braid(m: &CoxeterMatrix) -> Vec<RewriteRule> {
    let mut rules = Vec::new();
    for s in m.generators() {
        for t in m.generators() {
            if s > t {
                if let Some(order) = m.order(s, t) {
                    let lhs = alternating_word(s, t, order as usize);
                    let rhs = alternating_word(t, s, order as usize);
                    rules.push(RewriteRule::between_words(lhs, rhs, RuleSource::Braid)
                        .expect("descending alternating word leads"));
                }
            }
        }
    }
    rules.sort_by(|a, b| a.lhs().cmp(b.lhs()));
    rules
}

/// Both sides of the relation a chain induces, without orienting them.
pub fn relation_words_from_chain(
    chain: &Chain,
    m: &CoxeterMatrix,
) -> Result<(Word, Word), ChainError> {
    chain.validate(m)?;
    Ok(relation_words_unchecked(chain.blocks(), m))
}

/// Assembles both relation sides from raw blocks; the caller vouches that
/// every block order is finite.
pub(crate) fn relation_words_unchecked(
    blocks: &[(Generator, Generator)],
    m: &CoxeterMatrix,
) -> (Word, Word) {
    let order = |&(s, t): &(Generator, Generator)| m.order(s, t).expect("finite block") as usize;
    let last = blocks.len() - 1;
    let mut lhs = Word::empty();
    for (i, block) in blocks.iter().enumerate() {
        let len = if i == last { order(block) } else { order(block) - 1 };
        lhs = lhs.concat(&alternating_word(block.0, block.1, len));
    }
    let mut rhs = alternating_word(blocks[0].1, blocks[0].0, order(&blocks[0]));
    for block in &blocks[1..] {
        rhs = rhs.concat(&alternating_word(block.0, block.1, order(block) - 1));
    }
    (lhs, rhs)
}

/// The oriented rewrite rule of a chain. Both sides have the same length
/// and the left one starts with the greater generator, so it leads.
pub fn relation_from_chain(chain: &Chain, m: &CoxeterMatrix) -> Result<RewriteRule, ChainError> {
    let (lhs, rhs) = relation_words_from_chain(chain, m)?;
    Ok(RewriteRule::between_words(lhs, rhs, RuleSource::Chain)
        .expect("chain relation sides differ and the descending side leads"))
}

/// Reconstructs the chain whose relation is exactly (lhs, rhs), if any.
///
/// The decomposition is forced: the first block is (lhs[0], rhs[0]); at each
/// block the remaining left side either equals the full alternating word
/// m(s,s') — which must be the final block — or starts with (m−1)(s,s'),
/// whose following letter begins the next block. The candidate is validated
/// and its relation compared against the input before being returned.
pub fn chain_from_relation(lhs: &Word, rhs: &Word, m: &CoxeterMatrix) -> Option<Chain> {
    let first = *lhs.letters().first()?;
    let prime = *rhs.letters().first()?;
    if !m.contains(first) || !m.contains(prime) || first == prime {
        return None;
    }
    let mut blocks = vec![(first, prime)];
    let mut at = 0usize;
    loop {
        let (s, t) = *blocks.last().unwrap();
        let order = m.order(s, t)? as usize;
        let remaining = lhs.len() - at;
        if remaining == order {
            if !lhs.matches_at(&alternating_word(s, t, order), at) {
                return None;
            }
            break;
        }
        if remaining < order {
            return None;
        }
        if !lhs.matches_at(&alternating_word(s, t, order - 1), at) {
            return None;
        }
        at += order - 1;
        let next_first = lhs.letters()[at];
        let next_prime = m.next_prime(s, t)?;
        blocks.push((next_first, next_prime));
    }
    let chain = Chain::new(blocks);
    chain.validate(m).ok()?;
    let (built_lhs, built_rhs) = relation_words_unchecked(chain.blocks(), m);
    (&built_lhs == lhs && &built_rhs == rhs).then_some(chain)
}

/// The block-transition graph: nodes are ordered pairs of distinct
/// generators with finite order; an edge (a,b) → (c,d) exists when a chain
/// block (a,b) may be followed by (c,d).
pub(crate) struct PairGraph {
    pub(crate) nodes: Vec<(Generator, Generator)>,
    pub(crate) edges: Vec<Vec<usize>>,
}

impl PairGraph {
    pub(crate) fn build(m: &CoxeterMatrix) -> PairGraph {
        let mut nodes = Vec::new();
        for a in m.generators() {
            for b in m.generators() {
                if a != b && m.order(a, b).is_some() {
                    nodes.push((a, b));
                }
            }
        }
        nodes.sort();
        let index = |pair: (Generator, Generator)| nodes.binary_search(&pair).ok();
        let mut edges = vec![Vec::new(); nodes.len()];
        for (i, &(a, b)) in nodes.iter().enumerate() {
            let Some(d) = m.next_prime(a, b) else { continue };
            for c in m.generators() {
                if c >= d || m.order(c, d).is_none() {
                    continue;
                }
                // Immediate repetition of the same unordered pair is barred.
                if (c.min(d), c.max(d)) == (a.min(b), a.max(b)) {
                    continue;
                }
                if let Some(j) = index((c, d)) {
                    edges[i].push(j);
                }
            }
            edges[i].sort_unstable();
        }
        PairGraph { nodes, edges }
    }

    /// A node can start a chain iff its pair is descending.
    pub(crate) fn is_initial(&self, idx: usize) -> bool {
        let (a, b) = self.nodes[idx];
        a > b
    }

    /// Nodes reachable from some initial node through at least one edge.
    pub(crate) fn reachable_from_initials(&self) -> BTreeSet<usize> {
        let mut seen = BTreeSet::new();
        let mut stack: Vec<usize> = (0..self.nodes.len())
            .filter(|&i| self.is_initial(i))
            .flat_map(|i| self.edges[i].iter().copied())
            .collect();
        while let Some(i) = stack.pop() {
            if seen.insert(i) {
                stack.extend(self.edges[i].iter().copied());
            }
        }
        seen
    }

    /// Whether a cycle is reachable from an initial node, i.e. the number
    /// of chains is infinite.
    pub(crate) fn cycle_reachable(&self) -> bool {
        // Edge targets are always ascending pairs, so cycles avoid initial
        // nodes; peel the reachable subgraph by repeatedly removing nodes
        // without successors — a nonempty remainder contains a cycle.
        let reachable = self.reachable_from_initials();
        let mut alive: BTreeSet<usize> = reachable.clone();
        loop {
            let dead: Vec<usize> = alive
                .iter()
                .copied()
                .filter(|&i| self.edges[i].iter().all(|j| !alive.contains(j)))
                .collect();
            if dead.is_empty() {
                return !alive.is_empty();
            }
            for i in dead {
                alive.remove(&i);
            }
        }
    }
}

/// The outcome of enumerating chains up to a relation-degree bound.
#[derive(Clone, Debug)]
pub struct ChainEnumeration {
    /// All chains found, sorted by block count then blockwise.
    pub chains: Vec<Chain>,
    /// True when no chain was cut off by the bound: the list is all of them.
    pub complete: bool,
    /// True when a cycle of blocks is reachable, so the family is infinite.
    pub infinite: bool,
}

/// Enumerates every chain whose induced relation has length at most
/// `max_relation_degree`.
pub fn enumerate_chains(m: &CoxeterMatrix, max_relation_degree: usize) -> ChainEnumeration {
    let graph = PairGraph::build(m);
    let mut chains = Vec::new();
    let mut complete = true;

    // Depth-first over paths from initial nodes; the partial sum p carries
    // Σ(m_i − 1), so the relation degree so far is p + 1 and only grows.
    fn dfs(
        graph: &PairGraph,
        m: &CoxeterMatrix,
        bound: usize,
        path: &mut Vec<usize>,
        p: usize,
        chains: &mut Vec<Chain>,
        complete: &mut bool,
    ) {
        if path.len() >= 2 {
            chains.push(Chain::new(
                path.iter().map(|&i| graph.nodes[i]).collect(),
            ));
        }
        let at = *path.last().unwrap();
        for &next in &graph.edges[at] {
            let (s, t) = graph.nodes[next];
            let step = m.order(s, t).expect("graph nodes are finite") as usize - 1;
            if p + step < bound {
                path.push(next);
                dfs(graph, m, bound, path, p + step, chains, complete);
                path.pop();
            } else {
                *complete = false;
            }
        }
    }

    for start in 0..graph.nodes.len() {
        if !graph.is_initial(start) {
            continue;
        }
        let (s, t) = graph.nodes[start];
        let p0 = m.order(s, t).expect("graph nodes are finite") as usize - 1;
        let mut path = vec![start];
        dfs(&graph, m, max_relation_degree, &mut path, p0, &mut chains, &mut complete);
    }

    chains.sort_by(|a, b| {
        (a.len(), a.blocks()).cmp(&(b.len(), b.blocks()))
    });
    let infinite = graph.cycle_reachable();
    ChainEnumeration {
        chains,
        complete,
        infinite,
    }
}

/// Assembles the full rule system of a presentation: generator squares,
/// braid rules, and every chain relation with degree ≤ `max_degree`.
/// Returns the chain enumeration alongside so callers can report truncation.
pub fn coxeter_rules(m: &CoxeterMatrix, max_degree: usize) -> (RuleSystem, ChainEnumeration) {
    let enumeration = enumerate_chains(m, max_degree);
    let mut system = RuleSystem::new();
    for rule in relations_squares(m) {
        system.insert(rule);
    }
    for rule in relations_braid(m) {
        system.insert(rule);
    }
    for chain in &enumeration.chains {
        let rule = relation_from_chain(chain, m).expect("enumerated chains are valid");
        system.insert(rule);
    }
    (system, enumeration)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: u32) -> Generator {
        Generator::new(i)
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn rank4_example() -> CoxeterMatrix {
        CoxeterMatrix::parse("4  1 inf 3 2  inf 1 inf inf  3 inf 1 5  2 inf 5 1").unwrap()
    }

    fn a2() -> CoxeterMatrix {
        CoxeterMatrix::parse("2 1 3 3 1").unwrap()
    }

    fn a3() -> CoxeterMatrix {
        CoxeterMatrix::parse("3  1 3 2  3 1 3  2 3 1").unwrap()
    }

    #[test]
    fn squares_and_braids_of_the_rank4_example() {
        let m = rank4_example();
        let squares: Vec<String> = relations_squares(&m).iter().map(|r| r.to_string()).collect();
        assert_eq!(
            squares,
            vec!["s1 s1 -> e", "s2 s2 -> e", "s3 s3 -> e", "s4 s4 -> e"]
        );
        let braids: Vec<String> = relations_braid(&m).iter().map(|r| r.to_string()).collect();
        assert_eq!(
            braids,
            vec![
                "s4 s1 -> s1 s4",
                "s3 s1 s3 -> s1 s3 s1",
                "s4 s3 s4 s3 s4 -> s3 s4 s3 s4 s3",
            ]
        );
    }

    #[test]
    fn no_braids_when_everything_is_infinite() {
        let m = CoxeterMatrix::parse("2 1 inf inf 1").unwrap();
        assert!(relations_braid(&m).is_empty());
        assert_eq!(relations_squares(&m).len(), 2);
        assert!(enumerate_chains(&m, 30).chains.is_empty());
    }

    #[test]
    fn rank4_example_has_exactly_three_chains() {
        let m = rank4_example();
        let enumeration = enumerate_chains(&m, 30);
        assert!(enumeration.complete);
        assert!(!enumeration.infinite);
        let chains: Vec<String> = enumeration.chains.iter().map(|c| c.to_string()).collect();
        assert_eq!(
            chains,
            vec![
                "(s4,s3)(s1,s4)",
                "(s4,s3)(s1,s4)(s3,s4)",
                "(s4,s3)(s1,s4)(s3,s4)(s1,s3)",
            ]
        );
        let degrees: Vec<usize> = enumeration
            .chains
            .iter()
            .map(|c| c.relation_degree(&m))
            .collect();
        assert_eq!(degrees, vec![6, 10, 12]);
    }

    #[test]
    fn rank4_example_chain_relations() {
        let m = rank4_example();
        let enumeration = enumerate_chains(&m, 30);
        let words: Vec<(String, String)> = enumeration
            .chains
            .iter()
            .map(|c| {
                let (lhs, rhs) = relation_words_from_chain(c, &m).unwrap();
                (lhs.to_string(), rhs.to_string())
            })
            .collect();
        assert_eq!(
            words,
            vec![
                (
                    "s4 s3 s4 s3 s1 s4".to_string(),
                    "s3 s4 s3 s4 s3 s1".to_string()
                ),
                (
                    "s4 s3 s4 s3 s1 s3 s4 s3 s4 s3".to_string(),
                    "s3 s4 s3 s4 s3 s1 s3 s4 s3 s4".to_string()
                ),
                (
                    "s4 s3 s4 s3 s1 s3 s4 s3 s4 s1 s3 s1".to_string(),
                    "s3 s4 s3 s4 s3 s1 s3 s4 s3 s4 s1 s3".to_string()
                ),
            ]
        );
    }

    #[test]
    fn chain_relations_balance_lengths_and_lead_descending() {
        let m = rank4_example();
        for chain in enumerate_chains(&m, 30).chains {
            let (lhs, rhs) = relation_words_from_chain(&chain, &m).unwrap();
            assert_eq!(lhs.len(), rhs.len());
            assert_eq!(lhs.letters()[0], chain.blocks()[0].0);
            assert_eq!(rhs.letters()[0], chain.blocks()[0].1);
            assert!(lhs > rhs);
            let rule = relation_from_chain(&chain, &m).unwrap();
            assert_eq!(rule.lhs(), &lhs);
            assert_eq!(rule.rhs_word(), Some(&rhs));
        }
    }

    #[test]
    fn a2_has_no_chains() {
        let enumeration = enumerate_chains(&a2(), 30);
        assert!(enumeration.chains.is_empty());
        assert!(enumeration.complete);
        assert!(!enumeration.infinite);
    }

    #[test]
    fn a3_chains_and_degrees() {
        let m = a3();
        let enumeration = enumerate_chains(&m, 30);
        let chains: Vec<String> = enumeration.chains.iter().map(|c| c.to_string()).collect();
        assert_eq!(
            chains,
            vec![
                "(s3,s2)(s1,s3)",
                "(s3,s2)(s1,s3)(s2,s3)",
                "(s3,s2)(s1,s3)(s2,s3)(s1,s2)",
            ]
        );
        let degrees: Vec<usize> = enumeration
            .chains
            .iter()
            .map(|c| c.relation_degree(&m))
            .collect();
        assert_eq!(degrees, vec![4, 6, 8]);
    }

    #[test]
    fn truncation_is_reported_without_claiming_infinitude() {
        let m = rank4_example();
        // Bound 8 admits only the degree-6 chain; the rest are cut off.
        let enumeration = enumerate_chains(&m, 8);
        assert_eq!(enumeration.chains.len(), 1);
        assert!(!enumeration.complete);
        assert!(!enumeration.infinite);
    }

    #[test]
    fn right_angled_rank4_has_infinitely_many_chains() {
        // All finite orders 2: blocks over s1,s2 alternate below s3 forever.
        let m = CoxeterMatrix::parse("4  1 2 2 2  2 1 2 2  2 2 1 2  2 2 2 1").unwrap();
        let enumeration = enumerate_chains(&m, 10);
        assert!(enumeration.infinite);
        assert!(!enumeration.complete);
        assert!(!enumeration.chains.is_empty());
        for chain in &enumeration.chains {
            assert!(chain.validate(&m).is_ok());
        }
    }

    #[test]
    fn enumerated_chains_validate() {
        for matrix in [rank4_example(), a3()] {
            for chain in enumerate_chains(&matrix, 30).chains {
                assert_eq!(chain.validate(&matrix), Ok(()));
            }
        }
    }

    #[test]
    fn validation_rejects_broken_chains() {
        let m = rank4_example();
        let single = Chain::new(vec![(g(4), g(3))]);
        assert_eq!(single.validate(&m), Err(ChainError::TooShort { blocks: 1 }));

        let ascending_first = Chain::new(vec![(g(3), g(4)), (g(1), g(4))]);
        assert_eq!(
            ascending_first.validate(&m),
            Err(ChainError::FirstBlockNotDescending)
        );

        // m(4,3) = 5 is odd, so the next primed letter must be s4, not s3.
        let parity = Chain::new(vec![(g(4), g(3)), (g(1), g(3))]);
        assert_eq!(parity.validate(&m), Err(ChainError::ParityBroken { block: 1 }));

        let infinite = Chain::new(vec![(g(2), g(1)), (g(1), g(2))]);
        assert_eq!(
            infinite.validate(&m),
            Err(ChainError::InfiniteBlock { block: 0 })
        );

        // A2: (s2,s1) then (s1,s2) repeats the support.
        let repeated = Chain::new(vec![(g(2), g(1)), (g(1), g(2))]);
        assert_eq!(
            repeated.validate(&a2()),
            Err(ChainError::RepeatedSupport { block: 1 })
        );
    }

    #[test]
    fn chain_reconstruction_round_trips() {
        for matrix in [rank4_example(), a3()] {
            for chain in enumerate_chains(&matrix, 30).chains {
                let (lhs, rhs) = relation_words_from_chain(&chain, &matrix).unwrap();
                assert_eq!(chain_from_relation(&lhs, &rhs, &matrix), Some(chain));
            }
        }
    }

    #[test]
    fn chain_reconstruction_rejects_non_chain_relations() {
        let m = rank4_example();
        // A braid relation is a single block, not a chain.
        assert_eq!(
            chain_from_relation(&w("s4 s3 s4 s3 s4"), &w("s3 s4 s3 s4 s3"), &m),
            None
        );
        // Mismatched right side.
        assert_eq!(
            chain_from_relation(&w("s4 s3 s4 s3 s1 s4"), &w("s3 s4 s3 s4 s3 s4"), &m),
            None
        );
        // Garbage left side.
        assert_eq!(
            chain_from_relation(&w("s4 s4 s4 s4 s4 s4"), &w("s3 s4 s3 s4 s3 s1"), &m),
            None
        );
    }

    #[test]
    fn rule_assembly_counts() {
        let m = rank4_example();
        let (system, enumeration) = coxeter_rules(&m, 16);
        // 4 squares + 3 braids + 3 chain relations.
        assert_eq!(system.len(), 10);
        assert!(enumeration.complete);
    }
}
