//! Finite automata over named symbols: subset construction, complement,
//! minimization, equivalence, regular expressions, and the word acceptors
//! for groups and double cosets.

mod acceptor;
mod dfa;
mod dot;
mod nfa;
mod regex;
mod table;

use thiserror::Error;

pub use acceptor::{
    build_dc_acceptor, build_dc_acceptor_with, build_group_acceptor, convergence_probe, dc_automaton,
    group_automaton, reference_dc_automaton, ConvergenceReport, GroupPart, ProbeError,
};
pub use dfa::Dfa;
pub use dot::{dfa_to_dot, nfa_to_dot, DotOptions};
pub use nfa::Nfa;
pub use regex::{dfa_to_regex, regex_to_dfa, Regex};
pub use table::{parse_table, render_table};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AutomatonError {
    #[error("alphabets differ: {0:?} vs {1:?}")]
    AlphabetMismatch(Vec<String>, Vec<String>),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("state {0} out of range")]
    BadState(usize),
    #[error("language has more than {0} words up to the requested length")]
    CapExceeded(usize),
    #[error("line {line}: {msg}")]
    Table { line: usize, msg: String },
    #[error("regex: {0}")]
    Regex(String),
    #[error("imported acceptor: {0}")]
    Import(String),
}
