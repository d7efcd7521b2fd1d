#![allow(dead_code)]

pub mod triangle;

use dcoset::fixtures::*;
use dcoset::{knuth_bendix, CompletionConfig, RewriteSystem, Symbol, Word};
use proptest::prelude::*;

pub fn complete(text: &str) -> RewriteSystem {
    knuth_bendix(presentation(text).initial_system().unwrap(), &CompletionConfig::default()).unwrap()
}

pub fn limited(text: &str, limit: usize) -> RewriteSystem {
    knuth_bendix(presentation(text).initial_system().unwrap(), &CompletionConfig::with_limit(limit)).unwrap()
}

pub fn initial(text: &str) -> RewriteSystem {
    presentation(text).initial_system().unwrap()
}

/// Completed fixture systems; `all_fixtures` adds the 10-rule trefoil double-coset run.
pub fn completed_fixtures() -> Vec<(&'static str, RewriteSystem)> {
    vec![("free powers", complete(FREE_POWERS)), ("trefoil", complete(TREFOIL)), ("S3", complete(S3))]
}

pub fn all_fixtures() -> Vec<(&'static str, RewriteSystem)> {
    let mut v = completed_fixtures();
    v.push(("trefoil cosets", limited(TREFOIL_DC, 10)));
    v
}

/// Every body of length at most `max_len` over the generators.
pub fn bodies(rs: &RewriteSystem, max_len: usize) -> Vec<Word> {
    let gens: Vec<Symbol> = rs.alphabet().generators().collect();
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &g in &gens {
                let mut v: Vec<Symbol> = Vec::clone(w);
                v.push(g);
                out.push(Word::from(v.clone()));
                next.push(v);
            }
        }
        frontier = next;
    }
    out
}

/// Random word over the generators with random tags.
pub fn tagged_word(gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    (prop::collection::vec(0..gens, 0..=max_len), any::<bool>(), any::<bool>()).prop_map(|(b, l, r)| {
        let body = Word::from(b.into_iter().map(|i| Symbol::from_index(i + 2)).collect::<Vec<_>>());
        Word::tagged(l, &body, r)
    })
}

pub fn body_word(gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..gens, 0..=max_len)
        .prop_map(|b| Word::from(b.into_iter().map(|i| Symbol::from_index(i + 2)).collect::<Vec<_>>()))
}
