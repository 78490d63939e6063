//! A Gröbner–Shirshov basis engine for the free associative algebra over the
//! rationals, specialized to Coxeter group presentations.
//!
//! The crate is organized in three layers plus a command-line front end:
//!
//! * [`freealg`] — words over an ordered alphabet, the deg-lex monomial order,
//!   and polynomials with exact rational coefficients;
//! * [`rewrite`] — oriented rewrite rules, elimination of leading words,
//!   composition (overlap/inclusion) analysis, Shirshov completion,
//!   interreduction, and enumeration of irreducible words;
//! * [`coxeter`] — Coxeter matrices, the three relation families of a Coxeter
//!   presentation (squares, braid relations, and the derived chain relations),
//!   the obstruction conditions C1–C4, and structural verification helpers;
//! * [`cli`] — the `coxeter-gs` command-line interface.

pub mod cli;
pub mod coxeter;
pub mod freealg;
pub mod rewrite;
