mod common;

use std::cmp::Ordering;

use common::{bodies, tagged_word};
use dcoset::fixtures::*;
use dcoset::{OrderSpec, Word};
use proptest::prelude::*;

fn orders() -> Vec<OrderSpec> {
    [FREE_POWERS, TREFOIL, TREFOIL_DC, S3].iter().map(|t| presentation(t).order).collect()
}

fn cmp(o: &OrderSpec, a: &Word, b: &Word) -> Ordering {
    o.compare(a.symbols(), b.symbols())
}

proptest! {
    #[test]
    fn strict_total_order(a in tagged_word(4, 7), b in tagged_word(4, 7), c in tagged_word(4, 7)) {
        for o in orders() {
            prop_assert_eq!(cmp(&o, &a, &b), cmp(&o, &b, &a).reverse());
            prop_assert_eq!(cmp(&o, &a, &b) == Ordering::Equal, a == b);
            if cmp(&o, &a, &b) == Ordering::Less && cmp(&o, &b, &c) == Ordering::Less {
                prop_assert_eq!(cmp(&o, &a, &c), Ordering::Less);
            }
        }
    }

    #[test]
    fn compatible_with_concatenation(u in tagged_word(4, 6), v in tagged_word(4, 6), x in tagged_word(4, 3), y in tagged_word(4, 3)) {
        for o in orders() {
            let (Some(xu), Some(xv)) = (x.concat(&u), x.concat(&v)) else { continue };
            let (Some(xuy), Some(xvy)) = (xu.concat(&y), xv.concat(&y)) else { continue };
            prop_assert_eq!(cmp(&o, &u, &v), cmp(&o, &xuy, &xvy));
        }
    }

    #[test]
    fn shortlex_prefers_shorter(a in tagged_word(4, 8), b in tagged_word(4, 8)) {
        let o = presentation(FREE_POWERS).order;
        if a.len() < b.len() {
            prop_assert_eq!(cmp(&o, &a, &b), Ordering::Less);
        }
    }
}

#[test]
fn exhaustive_sort_is_consistent_up_to_length_eight() {
    let rs = presentation(TREFOIL).initial_system().unwrap();
    let words = bodies(&rs, 8);
    for o in orders().iter().take(2) {
        let mut sorted = words.clone();
        sorted.sort_by(|a, b| cmp(o, a, b));
        // strictly increasing, so every word has finitely many words below it
        for w in sorted.windows(2) {
            assert_eq!(cmp(o, &w[0], &w[1]), Ordering::Less);
        }
        assert!(sorted[0].is_empty());
    }
}
