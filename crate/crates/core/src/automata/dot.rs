//! Graphviz output.

use std::fmt::Write as _;

use super::{Dfa, Nfa};

#[derive(Clone, Debug, Default)]
pub struct DotOptions {
    /// Leave out these states and every edge touching them.
    pub hide: Vec<String>,
    /// Hide non-accepting states with no way to acceptance.
    pub hide_dead: bool,
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn dfa_to_dot(d: &Dfa, opts: &DotOptions) -> String {
    let n = d.state_count();
    let k = d.symbols().len();
    let mut live = vec![false; n];
    for s in d.accepting_states() {
        live[s] = true;
    }
    let mut changed = true;
    while changed {
        changed = false;
        for s in 0..n {
            if !live[s] && (0..k).any(|a| live[d.next(s, a)]) {
                live[s] = true;
                changed = true;
            }
        }
    }
    let shown = |s: usize| !opts.hide.contains(&d.labels()[s]) && (!opts.hide_dead || live[s]);
    let mut out = String::from("digraph dfa {\n  rankdir=LR;\n  start [shape=point];\n");
    for s in (0..n).filter(|&s| shown(s)) {
        let shape = if d.is_accepting(s) { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "  q{s} [label=\"{}\", shape={shape}];", escape(&d.labels()[s]));
    }
    if shown(d.initial()) {
        let _ = writeln!(out, "  start -> q{};", d.initial());
    }
    for s in (0..n).filter(|&s| shown(s)) {
        let mut targets: Vec<(usize, Vec<&str>)> = Vec::new();
        for a in 0..k {
            let t = d.next(s, a);
            if !shown(t) {
                continue;
            }
            match targets.iter_mut().find(|(u, _)| *u == t) {
                Some((_, names)) => names.push(&d.symbols()[a]),
                None => targets.push((t, vec![&d.symbols()[a]])),
            }
        }
        for (t, names) in targets {
            let _ = writeln!(out, "  q{s} -> q{t} [label=\"{}\"];", escape(&names.join(",")));
        }
    }
    out.push_str("}\n");
    out
}

pub fn nfa_to_dot(nfa: &Nfa, opts: &DotOptions) -> String {
    let shown = |s: usize| !opts.hide.contains(&nfa.labels()[s]);
    let mut out = String::from("digraph nfa {\n  rankdir=LR;\n  start [shape=point];\n");
    for s in (0..nfa.state_count()).filter(|&s| shown(s)) {
        let shape = if nfa.is_accepting(s) { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "  q{s} [label=\"{}\", shape={shape}];", escape(&nfa.labels()[s]));
    }
    if shown(nfa.initial()) {
        let _ = writeln!(out, "  start -> q{};", nfa.initial());
    }
    for s in (0..nfa.state_count()).filter(|&s| shown(s)) {
        for (a, name) in nfa.symbols().iter().enumerate() {
            for &t in nfa.targets(s, a) {
                if shown(t) {
                    let _ = writeln!(out, "  q{s} -> q{t} [label=\"{}\"];", escape(name));
                }
            }
        }
        for &t in nfa.epsilon_targets(s) {
            if shown(t) {
                let _ = writeln!(out, "  q{s} -> q{t} [label=\"ε\"];");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hides_requested_states() {
        let d = Dfa::new(
            vec!["a".into()],
            vec!["live".into(), "sink".into()],
            0,
            vec![vec![1], vec![1]],
            vec![true, false],
        )
        .unwrap();
        let full = dfa_to_dot(&d, &DotOptions::default());
        assert!(full.contains("q0 -> q1"));
        let trimmed = dfa_to_dot(&d, &DotOptions { hide: vec!["sink".into()], hide_dead: false });
        assert!(!trimmed.contains("q1"));
        let dead = dfa_to_dot(&d, &DotOptions { hide: vec![], hide_dead: true });
        assert!(!dead.contains("q1"));
    }
}
