use std::collections::{HashMap, VecDeque};

use super::AutomatonError;

/// Complete deterministic automaton. Columns are named symbols; automata
/// are compared column-by-name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    symbols: Vec<String>,
    labels: Vec<String>,
    initial: usize,
    delta: Vec<Vec<usize>>,
    accepting: Vec<bool>,
}

impl Dfa {
    pub fn new(
        symbols: Vec<String>,
        labels: Vec<String>,
        initial: usize,
        delta: Vec<Vec<usize>>,
        accepting: Vec<bool>,
    ) -> Result<Dfa, AutomatonError> {
        let n = delta.len();
        if labels.len() != n || accepting.len() != n || initial >= n.max(1) || n == 0 {
            return Err(AutomatonError::BadState(initial));
        }
        for row in &delta {
            if row.len() != symbols.len() {
                return Err(AutomatonError::AlphabetMismatch(symbols.clone(), vec![format!("{} columns", row.len())]));
            }
            if let Some(&bad) = row.iter().find(|&&t| t >= n) {
                return Err(AutomatonError::BadState(bad));
            }
        }
        Ok(Dfa { symbols, labels, initial, delta, accepting })
    }

    pub(crate) fn from_parts(
        symbols: Vec<String>,
        labels: Vec<String>,
        initial: usize,
        delta: Vec<Vec<usize>>,
        accepting: Vec<bool>,
    ) -> Dfa {
        Dfa { symbols, labels, initial, delta, accepting }
    }

    /// One state, every symbol looping, accepting or not.
    pub fn trivial(symbols: Vec<String>, accepting: bool) -> Dfa {
        let k = symbols.len();
        Dfa { symbols, labels: vec!["0".into()], initial: 0, delta: vec![vec![0; k]], accepting: vec![accepting] }
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
        self.delta.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn next(&self, s: usize, symbol: usize) -> usize {
        self.delta[s][symbol]
    }

    pub fn is_accepting(&self, s: usize) -> bool {
        self.accepting[s]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.state_count()).filter(move |&s| self.accepting[s])
    }

    pub fn run(&self, word: &[usize]) -> usize {
        word.iter().fold(self.initial, |s, &a| self.delta[s][a])
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        self.accepting[self.run(word)]
    }

    /// Accepts a word given by symbol names.
    pub fn accepts_names<S: AsRef<str>>(&self, word: &[S]) -> Result<bool, AutomatonError> {
        let idx: Result<Vec<usize>, _> = word.iter().map(|s| self.symbol_index(s.as_ref())).collect();
        Ok(self.accepts(&idx?))
    }

    pub fn complement(&self) -> Dfa {
        Dfa { accepting: self.accepting.iter().map(|a| !a).collect(), ..self.clone() }
    }

    /// The same automaton with columns in the order of `names`.
    pub fn with_symbol_order(&self, names: &[String]) -> Result<Dfa, AutomatonError> {
        if names.len() != self.symbols.len() {
            return Err(AutomatonError::AlphabetMismatch(self.symbols.clone(), names.to_vec()));
        }
        let perm: Vec<usize> = names
            .iter()
            .map(|n| self.symbol_index(n).map_err(|_| AutomatonError::AlphabetMismatch(self.symbols.clone(), names.to_vec())))
            .collect::<Result<_, _>>()?;
        let delta = self.delta.iter().map(|row| perm.iter().map(|&p| row[p]).collect()).collect();
        Ok(Dfa { symbols: names.to_vec(), delta, ..self.clone() })
    }

    fn reachable(&self) -> Vec<usize> {
        let mut seen = vec![false; self.state_count()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut i = 0;
        while i < order.len() {
            for &t in &self.delta[order[i]] {
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                }
            }
            i += 1;
        }
        order
    }

    /// Renumbers reachable states in breadth-first order from the initial
    /// state, exploring columns left to right; drops the rest.
    pub fn canonical(&self) -> Dfa {
        let order = self.reachable();
        let mut map = vec![usize::MAX; self.state_count()];
        for (new, &old) in order.iter().enumerate() {
            map[old] = new;
        }
        let delta = order.iter().map(|&s| self.delta[s].iter().map(|&t| map[t]).collect()).collect();
        Dfa {
            symbols: self.symbols.clone(),
            labels: order.iter().map(|&s| self.labels[s].clone()).collect(),
            initial: 0,
            delta,
            accepting: order.iter().map(|&s| self.accepting[s]).collect(),
        }
    }

    /// Hopcroft partition refinement on the reachable part, then canonical
    /// numbering. Each state keeps the label of its first member.
    pub fn minimize(&self) -> Dfa {
        let d = self.canonical();
        let n = d.state_count();
        let k = d.symbols.len();
        let mut inverse: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; k];
        for s in 0..n {
            for a in 0..k {
                inverse[a][d.delta[s][a]].push(s);
            }
        }
        let mut block_of = vec![0usize; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let acc: Vec<usize> = (0..n).filter(|&s| d.accepting[s]).collect();
        let rej: Vec<usize> = (0..n).filter(|&s| !d.accepting[s]).collect();
        for part in [acc, rej] {
            if !part.is_empty() {
                for &s in &part {
                    block_of[s] = blocks.len();
                }
                blocks.push(part);
            }
        }
        let mut work: Vec<(usize, usize)> = Vec::new();
        let smallest = if blocks.len() == 2 && blocks[1].len() < blocks[0].len() { 1 } else { 0 };
        for a in 0..k {
            work.push((smallest, a));
            if blocks.len() == 2 {
                work.push((1 - smallest, a));
            }
        }
        let mut in_work: HashMap<(usize, usize), ()> = work.iter().map(|&w| (w, ())).collect();
        while let Some((b, a)) = work.pop() {
            in_work.remove(&(b, a));
            let mut touched: HashMap<usize, Vec<usize>> = HashMap::new();
            for &t in &blocks[b].clone() {
                for &s in &inverse[a][t] {
                    touched.entry(block_of[s]).or_default().push(s);
                }
            }
            let mut keys: Vec<usize> = touched.keys().copied().collect();
            keys.sort_unstable();
            for y in keys {
                let mut hit = touched.remove(&y).expect("key present");
                hit.sort_unstable();
                hit.dedup();
                if hit.len() == blocks[y].len() {
                    continue;
                }
                let rest: Vec<usize> = blocks[y].iter().copied().filter(|s| hit.binary_search(s).is_err()).collect();
                let new_id = blocks.len();
                let (keep, split) = if hit.len() <= rest.len() { (rest, hit) } else { (hit, rest) };
                for &s in &split {
                    block_of[s] = new_id;
                }
                blocks[y] = keep;
                blocks.push(split);
                for c in 0..k {
                    if in_work.contains_key(&(y, c)) {
                        work.push((new_id, c));
                        in_work.insert((new_id, c), ());
                    } else {
                        let pick = if blocks[y].len() <= blocks[new_id].len() { y } else { new_id };
                        work.push((pick, c));
                        in_work.insert((pick, c), ());
                    }
                }
            }
        }
        let m = blocks.len();
        let mut rep = vec![usize::MAX; m];
        for s in 0..n {
            let b = block_of[s];
            if rep[b] == usize::MAX {
                rep[b] = s;
            }
        }
        let delta = (0..m).map(|b| d.delta[rep[b]].iter().map(|&t| block_of[t]).collect()).collect();
        Dfa {
            symbols: d.symbols.clone(),
            labels: (0..m).map(|b| d.labels[rep[b]].clone()).collect(),
            initial: block_of[d.initial],
            delta,
            accepting: (0..m).map(|b| d.accepting[rep[b]]).collect(),
        }
        .canonical()
    }

    /// Whether some pair of distinct states accepts the same language.
    pub fn has_equivalent_states(&self) -> bool {
        self.minimize().state_count() < self.canonical().state_count()
    }

    /// Same transition structure up to renaming states, columns matched by
    /// name. Only the reachable parts are compared.
    pub fn is_isomorphic(&self, other: &Dfa) -> bool {
        let Ok(o) = other.with_symbol_order(&self.symbols) else {
            return false;
        };
        let a = self.canonical();
        let b = o.canonical();
        a.delta == b.delta && a.accepting == b.accepting
    }

    fn product_search(&self, other: &Dfa, differs: impl Fn(bool, bool) -> bool) -> Result<Option<Vec<usize>>, AutomatonError> {
        let o = other.with_symbol_order(&self.symbols)?;
        let k = self.symbols.len();
        let start = (self.initial, o.initial);
        let mut parent: HashMap<(usize, usize), Option<((usize, usize), usize)>> = HashMap::new();
        parent.insert(start, None);
        let mut queue = VecDeque::from([start]);
        while let Some((p, q)) = queue.pop_front() {
            if differs(self.accepting[p], o.accepting[q]) {
                let mut word = Vec::new();
                let mut cur = (p, q);
                while let Some(Some((prev, a))) = parent.get(&cur) {
                    word.push(*a);
                    cur = *prev;
                }
                word.reverse();
                return Ok(Some(word));
            }
            for a in 0..k {
                let next = (self.delta[p][a], o.delta[q][a]);
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                    e.insert(Some(((p, q), a)));
                    queue.push_back(next);
                }
            }
        }
        Ok(None)
    }

    /// A shortest word accepted by exactly one of the two automata, or
    /// `None` when the languages agree.
    pub fn difference_witness(&self, other: &Dfa) -> Result<Option<Vec<usize>>, AutomatonError> {
        self.product_search(other, |a, b| a != b)
    }

    pub fn equivalent(&self, other: &Dfa) -> Result<bool, AutomatonError> {
        Ok(self.difference_witness(other)?.is_none())
    }

    fn product(&self, other: &Dfa, keep: impl Fn(bool, bool) -> bool) -> Result<Dfa, AutomatonError> {
        let o = other.with_symbol_order(&self.symbols)?;
        let k = self.symbols.len();
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut states = vec![(self.initial, o.initial)];
        index.insert(states[0], 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < states.len() {
            let (p, q) = states[i];
            let mut row = Vec::with_capacity(k);
            for a in 0..k {
                let next = (self.delta[p][a], o.delta[q][a]);
                let id = *index.entry(next).or_insert_with(|| {
                    states.push(next);
                    states.len() - 1
                });
                row.push(id);
            }
            delta.push(row);
            i += 1;
        }
        Ok(Dfa {
            symbols: self.symbols.clone(),
            labels: states.iter().map(|(p, q)| format!("({},{})", self.labels[*p], o.labels[*q])).collect(),
            initial: 0,
            accepting: states.iter().map(|&(p, q)| keep(self.accepting[p], o.accepting[q])).collect(),
            delta,
        })
    }

    pub fn intersect(&self, other: &Dfa) -> Result<Dfa, AutomatonError> {
        self.product(other, |a, b| a && b)
    }

    pub fn union(&self, other: &Dfa) -> Result<Dfa, AutomatonError> {
        self.product(other, |a, b| a || b)
    }

    pub fn is_empty_language(&self) -> bool {
        self.reachable().iter().all(|&s| !self.accepting[s])
    }

    /// `live[l][s]`: some word of length exactly `l` leads from `s` to
    /// acceptance, for `l` up to `max_len`.
    fn counts_from(&self, max_len: usize) -> Vec<Vec<u128>> {
        let n = self.state_count();
        let mut table = vec![vec![0u128; n]; max_len + 1];
        for s in 0..n {
            table[0][s] = u128::from(self.accepting[s]);
        }
        for l in 1..=max_len {
            for s in 0..n {
                let mut total: u128 = 0;
                for &t in &self.delta[s] {
                    total = total.saturating_add(table[l - 1][t]);
                }
                table[l][s] = total;
            }
        }
        table
    }

    /// Number of accepted words of each length `0..=max_len`.
    pub fn count_by_length(&self, max_len: usize) -> Vec<u128> {
        let table = self.counts_from(max_len);
        (0..=max_len).map(|l| table[l][self.initial]).collect()
    }

    /// Accepted words of length at most `max_len`, by length and then
    /// lexicographically in column order. Fails past `cap` words.
    pub fn enumerate(&self, max_len: usize, cap: usize) -> Result<Vec<Vec<usize>>, AutomatonError> {
        let total: u128 = self.count_by_length(max_len).iter().fold(0u128, |a, &b| a.saturating_add(b));
        if total > cap as u128 {
            return Err(AutomatonError::CapExceeded(cap));
        }
        let table = self.counts_from(max_len);
        let mut out = Vec::new();
        for len in 0..=max_len {
            let mut word = Vec::with_capacity(len);
            self.walk(self.initial, len, &table, &mut word, &mut out);
        }
        Ok(out)
    }

    fn walk(&self, s: usize, left: usize, table: &[Vec<u128>], word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if self.accepting[s] {
                out.push(word.clone());
            }
            return;
        }
        for a in 0..self.symbols.len() {
            let t = self.delta[s][a];
            if table[left - 1][t] > 0 {
                word.push(a);
                self.walk(t, left - 1, table, word, out);
                word.pop();
            }
        }
    }

    /// Renders a word of column indices with the symbol names.
    pub fn render_word(&self, word: &[usize], sep: &str) -> String {
        if word.is_empty() {
            return "id".to_string();
        }
        word.iter().map(|&a| self.symbols[a].as_str()).collect::<Vec<_>>().join(sep)
    }
}
