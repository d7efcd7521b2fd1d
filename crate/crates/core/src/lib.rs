//! Double-coset decision procedures by tagged string rewriting.
//!
//! A group `G = mon⟨X_G, R_G⟩` with subgroups `H`, `K` generated by words
//! becomes a rewrite system on words `H w K`: two group elements lie in the
//! same double coset exactly when their tagged words share a normal form.
//! The crate completes such systems, keeps replayable logs of every derived
//! rule, and builds automata accepting the normal forms.

pub mod automata;
pub mod cli;
pub mod completion;
pub mod decide;
pub mod fixtures;
pub mod logged;
pub mod overlap;
pub mod presentation;
pub mod rewrite;
pub mod words;

pub use automata::{Dfa, Nfa, Regex, parse_table, render_table, AutomatonError, GroupPart};
pub use decide::{decide, Decision, Verdict};
pub use completion::{check_local_confluence, confirm_complete, knuth_bendix, logged_knuth_bendix, CompletionConfig};
pub use logged::{extract_witness, logged_reduce, Endorewrite, Step, TwoCell, Witness};
pub use overlap::{find_overlaps, CriticalPair, OverlapKind};
pub use presentation::{parse_presentation, DoubleCosetPresentation, MonoidPresentation, ParseError};
pub use rewrite::{Origin, RewriteError, RewriteSystem, Rule, RuleId};
pub use words::{Alphabet, OrderKind, OrderSpec, Symbol, TagClass, Tags, Word, WordError};
