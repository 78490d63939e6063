//! Coxeter presentations: matrices, the three relation families (generator
//! squares, braid relations, and chain relations), the obstruction
//! conditions C1–C4, and structural verification helpers.

mod conditions;
mod matrix;
mod relations;
mod verify;

pub use conditions::{
    chain_has_condition, classify_family, detect_conditions, gs_guaranteed, witness_holds,
    ConditionKind, ConditionWitness, FamilyCriterion,
};
pub use matrix::{alternating_word, CoxeterMatrix, MatrixError};
pub use relations::{
    chain_from_relation, coxeter_rules, enumerate_chains, relation_from_chain,
    relation_words_from_chain, relations_braid, relations_squares, Chain, ChainEnumeration,
    ChainError,
};
pub use verify::{verify_improper_chain_relations, ImproperChainReport};
