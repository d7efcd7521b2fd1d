mod common;

use std::collections::HashSet;

use common::triangle::normal_forms;
use common::{all_fixtures, bodies, complete};
use dcoset::automata::{
    build_dc_acceptor, build_group_acceptor, dc_automaton, dfa_to_regex, group_automaton, reference_dc_automaton,
    regex_to_dfa, GroupPart,
};
use dcoset::fixtures::*;
use dcoset::{parse_table, Dfa, Symbol, TagClass, Word};

fn indices(w: &Word, offset: usize) -> Vec<usize> {
    w.symbols().iter().map(|s| s.index() - offset).collect()
}

#[test]
fn acceptance_matches_irreducibility_up_to_body_length_ten() {
    for (name, rs) in all_fixtures() {
        let dc = dc_automaton(&rs, GroupPart::Rules).unwrap();
        let g = group_automaton(&rs);
        for body in bodies(&rs, 10) {
            let t = Word::in_t(&body);
            assert_eq!(dc.accepts(&indices(&t, 0)), rs.is_irreducible(&t), "{name}: {}", rs.alphabet().render(&t));
            assert_eq!(g.accepts(&indices(&body, 2)), rs.is_irreducible(&body), "{name}: {}", rs.alphabet().render(&body));
        }
    }
}

#[test]
fn only_tagged_words_are_accepted() {
    for (name, rs) in all_fixtures() {
        let dc = dc_automaton(&rs, GroupPart::Rules).unwrap();
        let k = rs.alphabet().len();
        let mut words = vec![vec![]];
        for _ in 0..5 {
            words = words.iter().flat_map(|w: &Vec<usize>| (0..k).map(move |a| [w.as_slice(), &[a]].concat())).collect();
            for w in &words {
                if dc.accepts(w) {
                    let syms: Vec<Symbol> = w.iter().map(|&i| Symbol::from_index(i)).collect();
                    assert!(Word::new(syms).is_ok_and(|w| w.is_in_t()), "{name}: {w:?}");
                }
            }
        }
    }
}

#[test]
fn imported_group_part_matches_the_oracle() {
    let g = parse_table(TRIANGLE_GROUP_ACCEPTOR).unwrap();
    let rs = triangle_family(4).unwrap();
    let d = dc_automaton(&rs, GroupPart::Imported(&g)).unwrap();
    let reference = reference_dc_automaton(&rs, GroupPart::Imported(&g)).unwrap();
    assert!(d.equivalent(&reference).unwrap());
    let nf: HashSet<Vec<usize>> = normal_forms(10).into_iter().flatten().collect();
    for body in bodies(&rs, 10) {
        let t = Word::in_t(&body);
        let tagged_ok = rs.rules().filter(|r| r.tag_class() != TagClass::G).all(|r| !t.contains_factor(&r.lhs));
        let expected = tagged_ok && nf.contains(&indices(&body, 2));
        assert_eq!(d.accepts(&indices(&t, 0)), expected, "{}", rs.alphabet().render(&t));
    }
}

#[test]
fn reference_construction_agrees() {
    for (name, rs) in all_fixtures() {
        let a = dc_automaton(&rs, GroupPart::Rules).unwrap();
        let b = reference_dc_automaton(&rs, GroupPart::Rules).unwrap();
        assert!(a.equivalent(&b).unwrap(), "{name}");
        assert!(a.is_isomorphic(&b), "{name}: minimal automata differ");
    }
}

fn fixture_dfas() -> Vec<(String, Dfa)> {
    let mut out = Vec::new();
    for (name, rs) in all_fixtures() {
        out.push((format!("{name} cosets"), dc_automaton(&rs, GroupPart::Rules).unwrap()));
        out.push((format!("{name} group"), group_automaton(&rs)));
    }
    out.push(("triangle group".into(), parse_table(TRIANGLE_GROUP_ACCEPTOR).unwrap()));
    out.push(("table".into(), parse_table(FREE_POWERS_TABLE).unwrap()));
    out
}

#[test]
fn minimized_automata_have_no_equivalent_states() {
    for (name, rs) in all_fixtures() {
        for nfa in [build_dc_acceptor(&rs), build_group_acceptor(&rs)] {
            let det = nfa.determinize().complement();
            let min = det.minimize();
            assert!(min.state_count() <= det.state_count(), "{name}");
            assert!(!min.has_equivalent_states(), "{name}");
            assert!(min.equivalent(&det).unwrap(), "{name}");
        }
    }
    for (name, d) in fixture_dfas() {
        assert!(!d.minimize().has_equivalent_states(), "{name}");
    }
}

#[test]
fn determinization_preserves_short_words() {
    for (name, rs) in all_fixtures() {
        let nfa = build_dc_acceptor(&rs);
        let det = nfa.determinize();
        let k = rs.alphabet().len();
        let mut words = vec![vec![]];
        for _ in 0..6 {
            for w in &words {
                assert_eq!(nfa.accepts(w), det.accepts(w), "{name}: {w:?}");
            }
            words = words.iter().flat_map(|w: &Vec<usize>| (0..k).map(move |a| [w.as_slice(), &[a]].concat())).collect();
        }
    }
}

#[test]
fn regex_round_trip_on_fixture_automata() {
    for (name, d) in fixture_dfas() {
        let back = regex_to_dfa(&dfa_to_regex(&d), d.symbols()).unwrap();
        assert!(back.equivalent(&d).unwrap(), "{name}");
    }
}

// Representatives H K, H a K and H a^i b a^j K with 0 <= i <= 5, 0 <= j <= 3:
// two cosets meet <a> and 24 have a single b.
#[test]
fn free_powers_counts_match_the_representatives() {
    let rs = complete(FREE_POWERS);
    let d = dc_automaton(&rs, GroupPart::Rules).unwrap();
    let shape = |re: &str| regex_to_dfa(&dcoset::Regex::parse(re, d.symbols()).unwrap(), d.symbols()).unwrap();
    let total = |x: &Dfa| -> u128 { x.count_by_length(40).iter().sum() };
    let powers = shape("H(a* + A*)K");
    assert_eq!(total(&d.intersect(&powers).unwrap()), 2);
    let one_b = shape("H(a* + A*)b(a* + A*)K");
    assert_eq!(total(&d.intersect(&one_b).unwrap()), 24);
    // no accepted word of this shape is longer than the count bound
    assert_eq!(d.intersect(&one_b).unwrap().count_by_length(40)[12..].iter().sum::<u128>(), 0);
}
