//! Double-coset membership queries on a (possibly partial) system.

use crate::logged::{extract_witness, Witness, WitnessError};
use crate::rewrite::RewriteSystem;
use crate::words::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Same,
    Different,
    /// Normal forms differ but the system is not known to be complete.
    Unknown,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Same => "SAME",
            Verdict::Different => "DIFFERENT",
            Verdict::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Decision {
    pub verdict: Verdict,
    pub normal_forms: (Word, Word),
    pub witness: Option<Witness>,
}

/// Compares the normal forms of `H w1 K` and `H w2 K`. Equal normal forms
/// prove membership whatever the state of completion; different ones only
/// separate the cosets when the system is complete.
pub fn decide(rs: &RewriteSystem, w1: &Word, w2: &Word, want_witness: bool) -> Result<Decision, WitnessError> {
    let n1 = rs.reduce(&Word::in_t(w1))?;
    let n2 = rs.reduce(&Word::in_t(w2))?;
    let verdict = if n1 == n2 {
        Verdict::Same
    } else if rs.is_complete() {
        Verdict::Different
    } else {
        Verdict::Unknown
    };
    let witness = if want_witness && verdict == Verdict::Same { extract_witness(w1, w2, rs)? } else { None };
    Ok(Decision { verdict, normal_forms: (n1, n2), witness })
}

