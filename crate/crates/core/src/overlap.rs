//! Overlaps between rule left-hand sides, restricted to the types that can
//! occur for each pair of tag classes.

use crate::logged::{RuleBook, Step, TwoCell};
use crate::rewrite::{Rule, RuleId};
use crate::words::{TagClass, Word};

/// How `l₁` sits against `l₂` in the superposition word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OverlapKind {
    /// `l₂ = l₁v`
    Prefix,
    /// `l₂ = ul₁`
    Suffix,
    /// `l₂ = ul₁v`
    Internal,
    /// `l₁v = ul₂`
    LeftOffset,
    /// `ul₁ = l₂v`
    RightOffset,
}

impl OverlapKind {
    pub const ALL: [OverlapKind; 5] =
        [OverlapKind::Prefix, OverlapKind::Suffix, OverlapKind::Internal, OverlapKind::LeftOffset, OverlapKind::RightOffset];
}

/// Which overlap kinds can arise when the first rule has class `c1` and
/// the second `c2`. A tag can only sit at an end of a word, which rules
/// out the rest.
pub fn admissible(c1: TagClass, c2: TagClass) -> &'static [OverlapKind] {
    use OverlapKind::*;
    use TagClass::*;
    match (c1, c2) {
        (G, G) => &[Prefix, Suffix, Internal, LeftOffset, RightOffset],
        (G, H) => &[Suffix, Internal, RightOffset],
        (G, K) => &[Prefix, Internal, LeftOffset],
        (G, HK) => &[Internal],
        (H, H) => &[Prefix],
        (H, K) => &[LeftOffset],
        (H, HK) => &[Prefix],
        (K, K) => &[Suffix],
        (K, HK) => &[Suffix],
        (H, G) => &[LeftOffset],
        (K, G) => &[RightOffset],
        (K, H) => &[RightOffset],
        (HK, _) => &[],
    }
}

/// Two reducts of one superposition word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub superposition: Word,
    /// Reduct by the first rule.
    pub left: Word,
    /// Reduct by the second rule.
    pub right: Word,
    pub rules: (RuleId, RuleId),
    pub kind: OverlapKind,
    /// Where each left-hand side starts in the superposition.
    pub positions: (usize, usize),
}

impl CriticalPair {
    /// `left ← superposition → right` as a cell from `left` to `right`.
    pub fn cell(&self, book: &impl RuleBook) -> TwoCell {
        let step = |id: RuleId, pos: usize| {
            let (l, _) = book.sides(id).expect("pair rules exist");
            Step {
                rule: id,
                inverted: false,
                left: self.superposition.slice(0, pos),
                right: self.superposition.slice(pos + l.len(), self.superposition.len()),
            }
        };
        let s1 = step(self.rules.0, self.positions.0);
        let s2 = step(self.rules.1, self.positions.1);
        let back = TwoCell::from_parts(self.superposition.clone(), self.left.clone(), vec![s1]).invert();
        let fwd = TwoCell::from_parts(self.superposition.clone(), self.right.clone(), vec![s2]);
        back.compose(&fwd).expect("both steps start at the superposition")
    }
}

/// Superposition `(word, pos1, pos2)` of `l₁`, `l₂` for one kind.
fn superpositions(l1: &Word, l2: &Word, kind: OverlapKind) -> Vec<(Vec<crate::words::Symbol>, usize, usize)> {
    let (a, b) = (l1.symbols(), l2.symbols());
    let (n1, n2) = (a.len(), b.len());
    let mut out = Vec::new();
    match kind {
        OverlapKind::Prefix => {
            if n1 < n2 && b[..n1] == *a {
                out.push((b.to_vec(), 0, 0));
            }
        }
        OverlapKind::Suffix => {
            if n1 < n2 && b[n2 - n1..] == *a {
                out.push((b.to_vec(), n2 - n1, 0));
            }
        }
        OverlapKind::Internal => {
            if n1 + 2 <= n2 {
                for p in 1..n2 - n1 {
                    if b[p..p + n1] == *a {
                        out.push((b.to_vec(), p, 0));
                    }
                }
            }
        }
        OverlapKind::LeftOffset => {
            for k in 1..n1.min(n2) {
                if a[n1 - k..] == b[..k] {
                    let mut w = a.to_vec();
                    w.extend_from_slice(&b[k..]);
                    out.push((w, 0, n1 - k));
                }
            }
        }
        OverlapKind::RightOffset => {
            for k in 1..n1.min(n2) {
                if b[n2 - k..] == a[..k] {
                    let mut w = b.to_vec();
                    w.extend_from_slice(&a[k..]);
                    out.push((w, n2 - k, 0));
                }
            }
        }
    }
    out
}

fn pairs_of_kind(r1: &Rule, r2: &Rule, kind: OverlapKind, out: &mut Vec<CriticalPair>) {
    for (syms, p1, p2) in superpositions(&r1.lhs, &r2.lhs, kind) {
        let Ok(w) = Word::new(syms) else { continue };
        let left = w.replace(p1, r1.lhs.len(), &r1.rhs);
        let right = w.replace(p2, r2.lhs.len(), &r2.rhs);
        out.push(CriticalPair { superposition: w, left, right, rules: (r1.id, r2.id), kind, positions: (p1, p2) });
    }
}

/// Critical pairs of `(r1, r2)` for the overlap kinds admissible for their
/// tag classes. A rule against itself yields only its self-overlaps
/// (left offsets; the right offsets are the same words).
pub fn find_overlaps(r1: &Rule, r2: &Rule) -> Vec<CriticalPair> {
    let mut out = Vec::new();
    if r1.id == r2.id {
        if admissible(r1.tag_class(), r1.tag_class()).contains(&OverlapKind::LeftOffset) {
            pairs_of_kind(r1, r1, OverlapKind::LeftOffset, &mut out);
        }
        return out;
    }
    for &kind in admissible(r1.tag_class(), r2.tag_class()) {
        pairs_of_kind(r1, r2, kind, &mut out);
    }
    out
}

/// Every critical pair between two rules, counting each superposition once:
/// all kinds with `r1` first, plus containments of `r2` in `r1`.
pub fn overlaps_between(r1: &Rule, r2: &Rule) -> Vec<CriticalPair> {
    let mut out = find_overlaps(r1, r2);
    if r1.id != r2.id {
        for cp in find_overlaps(r2, r1) {
            if !matches!(cp.kind, OverlapKind::LeftOffset | OverlapKind::RightOffset) {
                out.push(cp);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;
    use crate::rewrite::RewriteSystem;
    use crate::words::{find_factor_occurrences, OrderSpec, Symbol};
    use std::collections::BTreeSet;

    fn system(pairs: &[(&str, &str)]) -> RewriteSystem {
        let p = parse_presentation("generators: a A b\norder: shortlex a < A < b\n").unwrap();
        let al = p.alphabet().clone();
        let ord = OrderSpec::parse(&al, "shortlex a < A < b").unwrap();
        let ps: Vec<(Word, Word)> =
            pairs.iter().map(|(l, r)| (al.parse_word(l).unwrap(), al.parse_word(r).unwrap())).collect();
        RewriteSystem::from_pairs(al, ord, &ps).unwrap()
    }

    /// Every well-formed word in which both left-hand sides occur, one at
    /// some position and the other overlapping or containing it, found by
    /// sliding one lhs across the other.
    fn brute_force(r1: &Rule, r2: &Rule) -> BTreeSet<(Vec<Symbol>, usize, usize)> {
        let (a, b) = (r1.lhs.symbols(), r2.lhs.symbols());
        let (n1, n2) = (a.len() as isize, b.len() as isize);
        let mut out = BTreeSet::new();
        for off in (1 - n1)..n2 {
            // r1 starts at `off` relative to r2
            let start = off.min(0);
            let end = (off + n1).max(n2);
            let len = (end - start) as usize;
            let mut w: Vec<Option<Symbol>> = vec![None; len];
            let mut ok = true;
            for (i, &s) in b.iter().enumerate() {
                w[(i as isize - start) as usize] = Some(s);
            }
            for (i, &s) in a.iter().enumerate() {
                let idx = (off + i as isize - start) as usize;
                match w[idx] {
                    Some(t) if t != s => ok = false,
                    _ => w[idx] = Some(s),
                }
            }
            let overlap = off < n2 && off + n1 > 0;
            if !ok || !overlap {
                continue;
            }
            if r1.id == r2.id && off == 0 {
                continue;
            }
            let syms: Vec<Symbol> = w.into_iter().map(Option::unwrap).collect();
            if Word::new(syms.clone()).is_err() {
                continue;
            }
            // Identical left-hand sides are interreduced away, not paired.
            if n1 == n2 && off == 0 {
                continue;
            }
            let p1 = (off - start) as usize;
            let p2 = (-start) as usize;
            out.insert((syms, p1, p2));
        }
        out
    }

    fn canon(cp: &CriticalPair, first: RuleId) -> (Vec<Symbol>, usize, usize) {
        if cp.rules.0 == first {
            (cp.superposition.symbols().to_vec(), cp.positions.0, cp.positions.1)
        } else {
            (cp.superposition.symbols().to_vec(), cp.positions.1, cp.positions.0)
        }
    }

    #[test]
    fn filter_matches_brute_force_enumeration() {
        let rs = system(&[
            ("a A", "id"),
            ("A a", "id"),
            ("a a a", "b"),
            ("H a a", "H"),
            ("H a b", "H A"),
            ("H b", "H"),
            ("a a K", "K"),
            ("b a K", "a K"),
            ("A K", "K"),
            ("H a a K", "H K"),
            ("H b a K", "H K"),
            ("H A K", "H K"),
            ("b a", "a b"),
        ]);
        let rules: Vec<&Rule> = rs.rules().collect();
        for (i, r1) in rules.iter().enumerate() {
            for r2 in &rules[i..] {
                let got: BTreeSet<_> = overlaps_between(r1, r2).iter().map(|cp| canon(cp, r1.id)).collect();
                let mut want = brute_force(r1, r2);
                if r1.id == r2.id {
                    // left and right self-offsets coincide as words; keep one per offset
                    want.retain(|(_, p1, p2)| p1 == &0 && *p2 > 0);
                }
                assert_eq!(got, want, "{} vs {}", rs.render_rule(r1), rs.render_rule(r2));
            }
        }
    }

    #[test]
    fn free_reduction_left_offset() {
        let rs = system(&[("a A", "id"), ("A a", "id")]);
        let r: Vec<&Rule> = rs.rules().collect();
        let cps = find_overlaps(r[0], r[1]);
        let found: Vec<(OverlapKind, String)> =
            cps.iter().map(|cp| (cp.kind, rs.alphabet().render_compact(&cp.superposition))).collect();
        assert_eq!(found, [(OverlapKind::LeftOffset, "aAa".to_string()), (OverlapKind::RightOffset, "AaA".to_string())]);
        assert!(cps.iter().all(|cp| cp.left == cp.right));
    }

    #[test]
    fn tagged_left_offset_gives_hk_pair() {
        let p = parse_presentation(
            "generators: a A b B\ninverses: a A, b B\norder: shortlex a < A < b < B\nH: a a a a a a\nK: a a a a\n",
        )
        .unwrap();
        let rs = p.initial_system().unwrap();
        let h = rs.rules_in(TagClass::H).next().unwrap();
        let k = rs.rules_in(TagClass::K).next().unwrap();
        let cps = find_overlaps(h, k);
        let al = rs.alphabet();
        let mut seen: Vec<(String, String)> =
            cps.iter().map(|c| (al.render_compact(&c.left), al.render_compact(&c.right))).collect();
        seen.sort();
        assert!(seen.contains(&("HK".into(), "Ha^2K".into())), "{seen:?}");
        assert!(cps.iter().all(|c| c.kind == OverlapKind::LeftOffset));
        assert!(find_overlaps(k, h).iter().all(|c| c.kind == OverlapKind::RightOffset));
    }

    #[test]
    fn nested_h_rules_overlap_by_prefix_only() {
        let rs = system(&[("H a", "H"), ("H a a b", "H")]);
        let r: Vec<&Rule> = rs.rules().collect();
        let cps = overlaps_between(r[0], r[1]);
        assert_eq!(cps.len(), 1);
        assert_eq!(cps[0].kind, OverlapKind::Prefix);
    }

    #[test]
    fn critical_pair_cell_replays() {
        let rs = system(&[("a a a", "b"), ("b a", "a b")]);
        for r1 in rs.rules() {
            for r2 in rs.rules() {
                for cp in find_overlaps(r1, r2) {
                    let cell = cp.cell(&rs);
                    assert_eq!(cell.replay(&cp.left, &rs).unwrap(), cp.right);
                    assert!(find_factor_occurrences(&cp.superposition, &r1.lhs).count() > 0);
                }
            }
        }
    }
}
