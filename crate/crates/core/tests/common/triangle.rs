//! Faithful affine model of <a, b | a^3, b^3, (ab)^3> on the Eisenstein
//! lattice, used as an independent oracle for its shortlex normal forms.
//! `a` rotates by a third of a turn about 0, `b` about 1.

use std::collections::{BTreeMap, HashMap, HashSet};

use dcoset::Dfa;

/// z -> w^rot z + (p + q w), with w a primitive cube root of unity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Motion {
    rot: u8,
    p: i64,
    q: i64,
}

fn times_omega(p: i64, q: i64) -> (i64, i64) {
    (-q, p - q)
}

impl Motion {
    pub const ID: Motion = Motion { rot: 0, p: 0, q: 0 };

    /// Generators in shortlex order a < A < b < B.
    pub fn generator(i: usize) -> Motion {
        match i {
            0 => Motion { rot: 1, p: 0, q: 0 },
            1 => Motion { rot: 2, p: 0, q: 0 },
            2 => Motion { rot: 1, p: 1, q: -1 },
            3 => Motion { rot: 2, p: 2, q: 1 },
            _ => panic!("no generator {i}"),
        }
    }

    /// self followed on the right by other: z -> self(other(z)).
    pub fn then(self, other: Motion) -> Motion {
        let (mut p, mut q) = (other.p, other.q);
        for _ in 0..self.rot {
            (p, q) = times_omega(p, q);
        }
        Motion { rot: (self.rot + other.rot) % 3, p: p + self.p, q: q + self.q }
    }

    pub fn of_word(word: &[usize]) -> Motion {
        word.iter().fold(Motion::ID, |m, &x| m.then(Motion::generator(x)))
    }
}

/// Shortlex normal forms (a < A < b < B) of every element of length at
/// most `max_len`, grouped by length.
pub fn normal_forms(max_len: usize) -> Vec<Vec<Vec<usize>>> {
    let mut seen: HashSet<Motion> = HashSet::from([Motion::ID]);
    let mut levels = vec![vec![vec![]]];
    for n in 1..=max_len {
        let mut level = Vec::new();
        for w in &levels[n - 1] {
            for x in 0..4 {
                let mut v: Vec<usize> = w.clone();
                v.push(x);
                if seen.insert(Motion::of_word(&v)) {
                    level.push(v);
                }
            }
        }
        levels.push(level);
    }
    levels
}

/// Learns the normal-form acceptor by merging prefixes with equal
/// residuals up to depth `depth`, then checks it against the oracle.
pub fn learn_acceptor(max_len: usize, depth: usize) -> Dfa {
    let levels = normal_forms(max_len);
    let nf: HashSet<Vec<usize>> = levels.iter().flatten().cloned().collect();
    let suffixes: Vec<Vec<usize>> = (0..=depth)
        .flat_map(|n| (0..4usize.pow(n as u32)).map(move |code| (0..n).map(|i| code / 4usize.pow(i as u32) % 4).collect()))
        .collect();
    let signature = |w: &Vec<usize>| -> Vec<bool> {
        suffixes.iter().map(|s| nf.contains(&[w.as_slice(), s.as_slice()].concat())).collect()
    };
    let mut states: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
    let mut reps: Vec<Vec<usize>> = Vec::new();
    let mut state_of: HashMap<Vec<usize>, usize> = HashMap::new();
    for w in levels.iter().take(max_len - depth + 1).flatten() {
        let sig = signature(w);
        let id = *states.entry(sig).or_insert_with(|| {
            reps.push(w.clone());
            reps.len() - 1
        });
        state_of.insert(w.clone(), id);
    }
    let sink = reps.len();
    let mut delta = vec![vec![sink; 4]; sink + 1];
    for w in levels.iter().take(max_len - depth).flatten() {
        let s = state_of[w];
        for x in 0..4 {
            let mut v = w.clone();
            v.push(x);
            let t = state_of.get(&v).copied().unwrap_or(sink);
            assert!(w != &reps[s] || delta[s][x] == sink || delta[s][x] == t);
            if w == &reps[s] {
                delta[s][x] = t;
            } else {
                assert_eq!(delta[s][x], t, "inconsistent residuals at depth {depth}");
            }
        }
    }
    let mut accepting = vec![true; sink + 1];
    accepting[sink] = false;
    let symbols = ["a", "A", "b", "B"].map(String::from).to_vec();
    let labels = (0..=sink).map(|i| i.to_string()).collect();
    let dfa = Dfa::new(symbols, labels, 0, delta, accepting).unwrap().minimize();
    assert!(agrees_with_oracle(&dfa, &levels), "learned acceptor disagrees with the oracle");
    dfa
}

/// Exact check on all words up to the oracle's length: per-length counts
/// match and every normal form is accepted.
pub fn agrees_with_oracle(dfa: &Dfa, levels: &[Vec<Vec<usize>>]) -> bool {
    let counts = dfa.count_by_length(levels.len() - 1);
    levels.iter().zip(&counts).all(|(l, &c)| l.len() as u128 == c)
        && levels.iter().flatten().all(|w| dfa.accepts(w))
}
