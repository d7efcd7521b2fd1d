use std::collections::{BTreeSet, HashMap};

use super::{AutomatonError, Dfa};

/// Nondeterministic automaton with optional ε-moves.
#[derive(Clone, Debug)]
pub struct Nfa {
    symbols: Vec<String>,
    labels: Vec<String>,
    initial: usize,
    trans: Vec<Vec<BTreeSet<usize>>>,
    eps: Vec<BTreeSet<usize>>,
    accepting: Vec<bool>,
}

impl Nfa {
    pub fn new(symbols: Vec<String>) -> Nfa {
        Nfa { symbols, labels: Vec::new(), initial: 0, trans: Vec::new(), eps: Vec::new(), accepting: Vec::new() }
    }

    pub fn add_state(&mut self, label: impl Into<String>, accepting: bool) -> usize {
        self.labels.push(label.into());
        self.trans.push(vec![BTreeSet::new(); self.symbols.len()]);
        self.eps.push(BTreeSet::new());
        self.accepting.push(accepting);
        self.labels.len() - 1
    }

    pub fn add_transition(&mut self, from: usize, symbol: usize, to: usize) {
        self.trans[from][symbol].insert(to);
    }

    pub fn add_epsilon(&mut self, from: usize, to: usize) {
        self.eps[from].insert(to);
    }

    pub fn set_initial(&mut self, s: usize) {
        self.initial = s;
    }

    pub fn set_accepting(&mut self, s: usize, yes: bool) {
        self.accepting[s] = yes;
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol_index(&self, name: &str) -> Result<usize, AutomatonError> {
        self.symbols.iter().position(|s| s == name).ok_or_else(|| AutomatonError::UnknownSymbol(name.to_string()))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn state_count(&self) -> usize {
        self.labels.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_accepting(&self, s: usize) -> bool {
        self.accepting[s]
    }

    pub fn targets(&self, s: usize, symbol: usize) -> &BTreeSet<usize> {
        &self.trans[s][symbol]
    }

    pub fn epsilon_targets(&self, s: usize) -> &BTreeSet<usize> {
        &self.eps[s]
    }

    fn closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(s) = stack.pop() {
            for &t in &self.eps[s] {
                if set.insert(t) {
                    stack.push(t);
                }
            }
        }
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        let mut cur = BTreeSet::from([self.initial]);
        self.closure(&mut cur);
        for &a in word {
            let mut next = BTreeSet::new();
            for &s in &cur {
                next.extend(self.trans[s][a].iter().copied());
            }
            self.closure(&mut next);
            cur = next;
        }
        cur.iter().any(|&s| self.accepting[s])
    }

    /// Accessible subset construction. A subset accepts iff it contains an
    /// accepting state; the empty subset appears only if it is reachable.
    pub fn determinize(&self) -> Dfa {
        let mut start = BTreeSet::from([self.initial]);
        self.closure(&mut start);
        let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::new();
        let mut subsets = vec![start.clone()];
        index.insert(start, 0);
        let mut delta: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            let mut row = Vec::with_capacity(self.symbols.len());
            for a in 0..self.symbols.len() {
                let mut next = BTreeSet::new();
                for &s in &subsets[i] {
                    next.extend(self.trans[s][a].iter().copied());
                }
                self.closure(&mut next);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        subsets.push(next.clone());
                        index.insert(next, subsets.len() - 1);
                        subsets.len() - 1
                    }
                };
                row.push(id);
            }
            delta.push(row);
            i += 1;
        }
        let accepting = subsets.iter().map(|set| set.iter().any(|&s| self.accepting[s])).collect();
        let labels = subsets
            .iter()
            .map(|set| {
                let parts: Vec<&str> = set.iter().map(|&s| self.labels[s].as_str()).collect();
                format!("{{{}}}", parts.join(","))
            })
            .collect();
        Dfa::from_parts(self.symbols.clone(), labels, 0, delta, accepting)
    }
}
