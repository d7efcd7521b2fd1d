//! Word acceptors: the group acceptor built from `R_G`, and the
//! double-coset acceptor assembled from a group part plus the H-, K- and
//! HK-trees of the tagged rules.

use std::collections::{BTreeMap, BTreeSet};

use super::{AutomatonError, Dfa, Nfa};
use crate::completion::{knuth_bendix, CompletionConfig};
use crate::presentation::DoubleCosetPresentation;
use crate::rewrite::{RewriteError, RewriteSystem};
use crate::words::{Symbol, TagClass};

type Syms = Vec<Symbol>;

fn proper_prefixes<'a>(lhss: impl Iterator<Item = &'a [Symbol]>) -> BTreeSet<Syms> {
    let mut out = BTreeSet::new();
    for l in lhss {
        for i in 1..l.len() {
            out.insert(l[..i].to_vec());
        }
    }
    out
}

fn proper_suffixes<'a>(lhss: impl Iterator<Item = &'a [Symbol]>) -> BTreeSet<Syms> {
    let mut out = BTreeSet::new();
    for l in lhss {
        for i in 1..l.len() {
            out.insert(l[i..].to_vec());
        }
    }
    out
}

fn lhs_set(rs: &RewriteSystem, class: TagClass) -> BTreeSet<Syms> {
    rs.rules_in(class).map(|r| r.lhs.symbols().to_vec()).collect()
}

/// Group part of the automaton: the suffix-tracking states of the group
/// acceptor, or the live states of an imported DFA.
enum GroupStates {
    Rules {
        /// `id` first, then the proper prefixes of `R_G`.
        states: Vec<Syms>,
        index: BTreeMap<Syms, usize>,
        lhs: BTreeSet<Syms>,
    },
    Imported {
        dfa: Dfa,
        /// Imported live state -> group-part index.
        live: BTreeMap<usize, usize>,
        /// Alphabet generator position -> imported column.
        column: Vec<usize>,
    },
}

/// Where the group part of the double-coset acceptor comes from.
#[derive(Clone, Copy, Debug)]
pub enum GroupPart<'a> {
    /// Built from the `R_G` rules of the system.
    Rules,
    /// A DFA over the generators accepting the group's normal forms; its
    /// rejecting states are read as the sink.
    Imported(&'a Dfa),
}

impl GroupStates {
    fn from_rules(rs: &RewriteSystem) -> GroupStates {
        let lhs = lhs_set(rs, TagClass::G);
        let mut states = vec![Vec::new()];
        states.extend(proper_prefixes(lhs.iter().map(Vec::as_slice)));
        let index = states.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        GroupStates::Rules { states, index, lhs }
    }

    fn from_dfa(rs: &RewriteSystem, dfa: &Dfa) -> Result<GroupStates, AutomatonError> {
        let al = rs.alphabet();
        let gens: Vec<String> = al.generator_names().to_vec();
        let mut mine = gens.clone();
        mine.sort();
        let mut theirs = dfa.symbols().to_vec();
        theirs.sort();
        if mine != theirs {
            return Err(AutomatonError::AlphabetMismatch(gens, dfa.symbols().to_vec()));
        }
        let d = dfa.canonical();
        let column: Vec<usize> = gens.iter().map(|g| d.symbol_index(g)).collect::<Result<_, _>>()?;
        if !d.is_accepting(d.initial()) {
            return Err(AutomatonError::Import("the initial state rejects the empty word".into()));
        }
        // Rejecting states must be dead, i.e. the language is prefix-closed.
        let n = d.state_count();
        let k = d.symbols().len();
        let mut reaches = vec![false; n];
        for s in d.accepting_states() {
            reaches[s] = true;
        }
        let mut changed = true;
        while changed {
            changed = false;
            for s in 0..n {
                if !reaches[s] && (0..k).any(|a| reaches[d.next(s, a)]) {
                    reaches[s] = true;
                    changed = true;
                }
            }
        }
        if (0..n).any(|s| !d.is_accepting(s) && reaches[s]) {
            return Err(AutomatonError::Import("accepted language is not prefix-closed".into()));
        }
        let live = d.accepting_states().enumerate().map(|(i, s)| (s, i)).collect();
        Ok(GroupStates::Imported { dfa: d, live, column })
    }

    fn len(&self) -> usize {
        match self {
            GroupStates::Rules { states, .. } => states.len(),
            GroupStates::Imported { live, .. } => live.len(),
        }
    }

    fn initial(&self) -> usize {
        match self {
            GroupStates::Rules { .. } => 0,
            GroupStates::Imported { dfa, live, .. } => live[&dfa.initial()],
        }
    }

    fn label(&self, i: usize, rs: &RewriteSystem) -> String {
        match self {
            GroupStates::Rules { states, .. } => render(rs, &states[i]),
            GroupStates::Imported { live, dfa, .. } => {
                let s = live.iter().find(|(_, &v)| v == i).map(|(&k, _)| k).expect("index exists");
                format!("g{}", dfa.labels()[s])
            }
        }
    }

    /// `None` for the sink, else the successor group states.
    fn step(&self, i: usize, x: Symbol) -> Option<Vec<usize>> {
        match self {
            GroupStates::Rules { states, index, lhs } => {
                let mut px = states[i].clone();
                px.push(x);
                if (0..px.len()).any(|j| lhs.contains(&px[j..])) {
                    return None;
                }
                let mut next: Vec<usize> = (0..px.len()).filter_map(|j| index.get(&px[j..]).copied()).collect();
                if next.is_empty() {
                    next.push(0);
                }
                next.sort_unstable();
                Some(next)
            }
            GroupStates::Imported { dfa, live, column } => {
                let s = live.iter().find(|(_, &v)| v == i).map(|(&k, _)| k).expect("index exists");
                let t = dfa.next(s, column[x.index() - 2]);
                live.get(&t).map(|&j| vec![j])
            }
        }
    }
}

fn render(rs: &RewriteSystem, syms: &[Symbol]) -> String {
    rs.alphabet().render_compact(&crate::words::Word::from(syms.to_vec()))
}

/// `N_G`: states `id`, the proper prefixes of `R_G` and `sink`, which is the
/// only accepting state. After reading `x` from `p` the automaton moves to
/// `sink` when some lhs is a suffix of `px`, else to every proper prefix
/// that is a suffix of `px`, or back to `id` when there is none.
pub fn build_group_acceptor(rs: &RewriteSystem) -> Nfa {
    let al = rs.alphabet();
    let g = GroupStates::from_rules(rs);
    let mut nfa = Nfa::new(al.generator_names().to_vec());
    for i in 0..g.len() {
        nfa.add_state(g.label(i, rs), false);
    }
    let sink = nfa.add_state("sink", true);
    for i in 0..g.len() {
        for (col, x) in al.generators().enumerate() {
            match g.step(i, x) {
                None => nfa.add_transition(i, col, sink),
                Some(next) => {
                    for t in next {
                        nfa.add_transition(i, col, t);
                    }
                }
            }
        }
    }
    for col in 0..al.generator_count() {
        nfa.add_transition(sink, col, sink);
    }
    nfa.set_initial(0);
    nfa
}

/// Minimal DFA accepting the words irreducible under `R_G`.
pub fn group_automaton(rs: &RewriteSystem) -> Dfa {
    build_group_acceptor(rs).determinize().complement().minimize()
}

/// [`build_dc_acceptor_with`] using the system's own group rules.
pub fn build_dc_acceptor(rs: &RewriteSystem) -> Nfa {
    build_dc_acceptor_with(rs, GroupPart::Rules).expect("rule-built group part cannot fail")
}

/// The double-coset NFA over `{H, K} ∪ X_G`. Every state except `norm`
/// accepts; a tagged word is irreducible exactly when the reachable set is
/// `{norm}`. `norm` and `sink` move to `sink` on every symbol, so nothing
/// after `K` is accepted later.
pub fn build_dc_acceptor_with(rs: &RewriteSystem, part: GroupPart<'_>) -> Result<Nfa, AutomatonError> {
    let al = rs.alphabet();
    let g = match part {
        GroupPart::Rules => GroupStates::from_rules(rs),
        GroupPart::Imported(d) => GroupStates::from_dfa(rs, d)?,
    };
    let h_lhs = lhs_set(rs, TagClass::H);
    let k_lhs = lhs_set(rs, TagClass::K);
    let hk_lhs = lhs_set(rs, TagClass::HK);

    let mut h_states: BTreeSet<Syms> = BTreeSet::from([vec![Symbol::H]]);
    h_states.extend(proper_prefixes(h_lhs.iter().map(Vec::as_slice)));
    let mut k_states: BTreeSet<Syms> = BTreeSet::from([vec![Symbol::K]]);
    k_states.extend(proper_suffixes(k_lhs.iter().map(Vec::as_slice)));
    // HK-tree states are `Hp` with `HpK` extending to some lhs.
    let mut hk_states: BTreeSet<Syms> = BTreeSet::from([vec![Symbol::H]]);
    for l in &hk_lhs {
        for i in 1..l.len() {
            hk_states.insert(l[..i].to_vec());
        }
    }
    let hk_full: BTreeSet<Syms> = hk_lhs.iter().map(|l| l[..l.len() - 1].to_vec()).collect();

    let mut nfa = Nfa::new(al.names().to_vec());
    let init = nfa.add_state("init", true);
    let norm = nfa.add_state("norm", false);
    let sink = nfa.add_state("sink", true);
    let g0 = nfa.state_count();
    for i in 0..g.len() {
        nfa.add_state(g.label(i, rs), true);
    }
    let mut h_idx = BTreeMap::new();
    for s in &h_states {
        h_idx.insert(s.clone(), nfa.add_state(render(rs, s), true));
    }
    let mut k_idx = BTreeMap::new();
    for s in &k_states {
        k_idx.insert(s.clone(), nfa.add_state(render(rs, s), true));
    }
    let mut hk_idx = BTreeMap::new();
    for s in &hk_states {
        hk_idx.insert(s.clone(), nfa.add_state(format!("{}.K", render(rs, s)), true));
    }
    nfa.set_initial(init);

    let (hcol, kcol) = (Symbol::H.index(), Symbol::K.index());
    let gens: Vec<Symbol> = al.generators().collect();
    let total = nfa.state_count();

    // init
    nfa.add_transition(init, hcol, g0 + g.initial());
    nfa.add_transition(init, hcol, h_idx[&vec![Symbol::H]]);
    nfa.add_transition(init, hcol, hk_idx[&vec![Symbol::H]]);
    for s in al.symbols().filter(|&s| s != Symbol::H) {
        nfa.add_transition(init, s.index(), sink);
    }
    // H after the start always fails
    for s in (0..total).filter(|&s| s != init) {
        nfa.add_transition(s, hcol, sink);
    }
    for s in al.symbols() {
        nfa.add_transition(sink, s.index(), sink);
        nfa.add_transition(norm, s.index(), sink);
    }
    // group part, with K-tree entry
    for i in 0..g.len() {
        let from = g0 + i;
        nfa.add_transition(from, kcol, norm);
        for &x in &gens {
            match g.step(i, x) {
                None => nfa.add_transition(from, x.index(), sink),
                Some(next) => {
                    for t in next {
                        nfa.add_transition(from, x.index(), g0 + t);
                    }
                    for l in k_lhs.iter().filter(|l| l[0] == x) {
                        nfa.add_transition(from, x.index(), k_idx[&l[1..].to_vec()]);
                    }
                }
            }
        }
    }
    // H-tree
    for (p, &from) in &h_idx {
        for &x in &gens {
            let mut px = p.clone();
            px.push(x);
            if h_lhs.contains(&px) {
                nfa.add_transition(from, x.index(), sink);
            } else if let Some(&to) = h_idx.get(&px) {
                nfa.add_transition(from, x.index(), to);
            }
        }
    }
    // K-tree: state `qK` expects exactly `qK` as the rest of the input
    for (q, &from) in &k_idx {
        if q.len() == 1 {
            nfa.add_transition(from, kcol, sink);
        } else if let Some(&to) = k_idx.get(&q[1..]) {
            nfa.add_transition(from, q[0].index(), to);
        }
    }
    // HK-tree
    for (p, &from) in &hk_idx {
        if hk_full.contains(p) {
            nfa.add_transition(from, kcol, sink);
        }
        for &x in &gens {
            let mut px = p.clone();
            px.push(x);
            if let Some(&to) = hk_idx.get(&px) {
                nfa.add_transition(from, x.index(), to);
            }
        }
    }
    Ok(nfa)
}

/// Determinize, complement and minimize the double-coset NFA.
pub fn dc_automaton(rs: &RewriteSystem, part: GroupPart<'_>) -> Result<Dfa, AutomatonError> {
    Ok(build_dc_acceptor_with(rs, part)?.determinize().complement().minimize())
}

/// Independent construction of the same language: words `H w K` (with `w`
/// accepted by the group part) containing no lhs as a factor.
pub fn reference_dc_automaton(rs: &RewriteSystem, part: GroupPart<'_>) -> Result<Dfa, AutomatonError> {
    let al = rs.alphabet();
    let names = al.names().to_vec();
    let k = names.len();
    let (hcol, kcol) = (Symbol::H.index(), Symbol::K.index());

    // Shape: H, then a body, then K.
    let shape = match part {
        GroupPart::Rules => {
            let mut delta = vec![vec![3; k]; 4];
            delta[0][hcol] = 1;
            for x in al.generators() {
                delta[1][x.index()] = 1;
            }
            delta[1][kcol] = 2;
            let labels = ["start", "body", "end", "dead"].iter().map(|s| s.to_string()).collect();
            Dfa::new(names.clone(), labels, 0, delta, vec![false, false, true, false])?
        }
        GroupPart::Imported(d) => {
            let g = GroupStates::from_dfa(rs, d)?;
            let GroupStates::Imported { dfa, column, .. } = &g else { unreachable!() };
            let m = dfa.state_count();
            let (start, end, dead) = (m, m + 1, m + 2);
            let mut delta = vec![vec![dead; k]; m + 3];
            delta[start][hcol] = dfa.initial();
            for s in 0..m {
                for x in al.generators() {
                    delta[s][x.index()] = dfa.next(s, column[x.index() - 2]);
                }
                if dfa.is_accepting(s) {
                    delta[s][kcol] = end;
                }
            }
            let mut accepting = vec![false; m + 3];
            accepting[end] = true;
            let labels = (0..m + 3).map(|i| i.to_string()).collect();
            Dfa::new(names.clone(), labels, start, delta, accepting)?
        }
    };

    let patterns: Vec<Syms> = rs
        .rules()
        .filter(|r| !(matches!(part, GroupPart::Imported(_)) && r.tag_class() == TagClass::G))
        .map(|r| r.lhs.symbols().to_vec())
        .collect();
    let mut nfa = Nfa::new(names);
    let start = nfa.add_state("start", false);
    let hit = nfa.add_state("hit", true);
    for a in 0..k {
        nfa.add_transition(start, a, start);
        nfa.add_transition(hit, a, hit);
    }
    for p in &patterns {
        let mut cur = start;
        for (i, s) in p.iter().enumerate() {
            let next = if i + 1 == p.len() { hit } else { nfa.add_state("", false) };
            nfa.add_transition(cur, s.index(), next);
            cur = next;
        }
    }
    let clean = nfa.determinize().complement();
    Ok(shape.intersect(&clean)?.minimize())
}

/// Sizes of the minimized double-coset automata for increasing rule limits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceReport {
    /// `(limit, states, completion stopped at the limit)`
    pub runs: Vec<(usize, usize, bool)>,
    /// First limit from which three consecutive automata were isomorphic. A
    /// heuristic: larger limits may still change the automaton.
    pub converged_at: Option<usize>,
}

#[derive(Debug, thiserror::Error)]
pub enum ProbeError {
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
}

pub fn convergence_probe(
    p: &DoubleCosetPresentation,
    limits: &[usize],
    part: GroupPart<'_>,
    base: &CompletionConfig,
) -> Result<ConvergenceReport, ProbeError> {
    let mut runs = Vec::new();
    let mut autos: Vec<Dfa> = Vec::new();
    let mut converged_at = None;
    for &limit in limits {
        let cfg = CompletionConfig { limit: Some(limit), ..base.clone() };
        let rs = knuth_bendix(p.initial_system()?, &cfg)?;
        let d = dc_automaton(&rs, part)?;
        runs.push((limit, d.state_count(), rs.limit_reached()));
        autos.push(d);
        let n = autos.len();
        if converged_at.is_none()
            && n >= 3
            && autos[n - 1].is_isomorphic(&autos[n - 2])
            && autos[n - 2].is_isomorphic(&autos[n - 3])
        {
            converged_at = Some(limits[n - 3]);
        }
    }
    Ok(ConvergenceReport { runs, converged_at })
}
