//! Tabular text form of a DFA:
//!
//! ```text
//! state H K a A
//! *1 2 2 2 2
//! 2 2 2 2 2
//! @3 4 2 2 2
//! ```
//!
//! `*` marks accepting states and `@` the initial state. Exported states
//! are numbered `1..n` in canonical order.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{AutomatonError, Dfa};

pub fn render_table(d: &Dfa) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "state {}", d.symbols().join(" "));
    for s in 0..d.state_count() {
        let mut id = String::new();
        if s == d.initial() {
            id.push('@');
        }
        if d.is_accepting(s) {
            id.push('*');
        }
        let _ = write!(out, "{id}{}", s + 1);
        for a in 0..d.symbols().len() {
            let _ = write!(out, " {}", d.next(s, a) + 1);
        }
        out.push('\n');
    }
    out
}

/// Parses the tabular form. State ids are arbitrary tokens; rows keep
/// their file order.
pub fn parse_table(text: &str) -> Result<Dfa, AutomatonError> {
    let err = |line: usize, msg: &str| AutomatonError::Table { line, msg: msg.to_string() };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| err(0, "empty table"))?;
    let mut cols = header.split_whitespace();
    if cols.next() != Some("state") {
        return Err(err(hline, "header must start with `state`"));
    }
    let symbols: Vec<String> = cols.map(str::to_string).collect();
    if symbols.is_empty() {
        return Err(err(hline, "no symbols in header"));
    }
    let mut rows: Vec<(usize, String, bool, bool, Vec<String>)> = Vec::new();
    for (line, l) in lines {
        let mut toks = l.split_whitespace();
        let mut id = toks.next().expect("line is non-empty");
        let (mut initial, mut accepting) = (false, false);
        loop {
            if let Some(rest) = id.strip_prefix('@') {
                initial = true;
                id = rest;
            } else if let Some(rest) = id.strip_prefix('*') {
                accepting = true;
                id = rest;
            } else {
                break;
            }
        }
        if id.is_empty() {
            return Err(err(line, "missing state id"));
        }
        let targets: Vec<String> = toks.map(str::to_string).collect();
        if targets.len() != symbols.len() {
            return Err(err(line, &format!("expected {} transitions, found {}", symbols.len(), targets.len())));
        }
        rows.push((line, id.to_string(), initial, accepting, targets));
    }
    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, (line, id, ..)) in rows.iter().enumerate() {
        if index.insert(id.as_str(), i).is_some() {
            return Err(err(*line, &format!("state `{id}` declared twice")));
        }
    }
    let inits: Vec<usize> = rows.iter().enumerate().filter(|(_, r)| r.2).map(|(i, _)| i).collect();
    let initial = match inits.as_slice() {
        [i] => *i,
        [] => return Err(err(hline, "no initial state marked with `@`")),
        _ => return Err(err(rows[inits[1]].0, "more than one initial state")),
    };
    let mut delta = Vec::with_capacity(rows.len());
    for (line, _, _, _, targets) in &rows {
        let row: Result<Vec<usize>, AutomatonError> = targets
            .iter()
            .map(|t| index.get(t.as_str()).copied().ok_or_else(|| err(*line, &format!("undeclared state `{t}`"))))
            .collect();
        delta.push(row?);
    }
    let labels = rows.iter().map(|r| r.1.clone()).collect();
    let accepting = rows.iter().map(|r| r.3).collect();
    Dfa::new(symbols, labels, initial, delta, accepting)
}
