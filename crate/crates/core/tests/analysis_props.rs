mod common;

use proptest::prelude::*;
use rexlab::analysis::{covers, enumerate, equal_upto, length_lex, minimal_regex_size, naive_language, word_index, IndexResult};
use rexlab::automata::{determinize, equivalent, glushkov};
use rexlab::Budget;

proptest! {
    #![proptest_config(common::config(200))]

    #[test]
    fn index_agrees_with_covers(
        r in common::plain_strategy(2, true).prop_filter("size", |r| r.size() <= 14),
        w in proptest::collection::vec(0usize..2, 1..=3),
    ) {
        let sigma = common::alphabet(2);
        let a = glushkov(&r, &sigma).unwrap();
        match word_index(&a, &w).unwrap() {
            None => prop_assert!(a.trim().is_empty_language()),
            Some(IndexResult::Finite(m)) => {
                prop_assert!(m < 2 * r.size());
                prop_assert!(covers(&a, &w.repeat(m)));
                prop_assert!(!covers(&a, &w.repeat(m + 1)));
            }
            Some(IndexResult::Infinite) => {
                for k in 0..=3 * r.size() {
                    prop_assert!(covers(&a, &w.repeat(k)));
                }
            }
        }
    }

    /// Covering against the set oracle. With at most 3 positions a covering
    /// word needs ≤ 3 symbols to reach the factor and ≤ 3 to finish, so
    /// words of length ≤ 9 decide it exactly.
    #[test]
    fn covers_matches_factor_search(
        r in common::plain_strategy(2, false).prop_filter("positions", |r| r.occurrences().len() <= 3),
        w in proptest::collection::vec(0usize..2, 1..=3),
    ) {
        let sigma = common::alphabet(2);
        let words = naive_language(&r, &sigma, 9).unwrap();
        let found = words.iter().any(|u| u.windows(w.len()).any(|f| f == w.as_slice()));
        prop_assert_eq!(covers(&glushkov(&r, &sigma).unwrap(), &w), found);
    }

    #[test]
    fn enumeration_is_sorted_and_matches_equal_upto(
        r in common::plain_strategy(2, true),
        s in common::plain_strategy(2, true),
    ) {
        let sigma = common::alphabet(2);
        let b = Budget::default();
        let (x, y) = (glushkov(&r, &sigma).unwrap(), glushkov(&s, &sigma).unwrap());
        let words = enumerate(&x, 6, &b).unwrap();
        for p in words.words().windows(2) {
            prop_assert_eq!(length_lex(&p[0], &p[1]), std::cmp::Ordering::Less);
        }
        match equal_upto(&x, &y, 6, &b).unwrap() {
            None => {
                let ys = enumerate(&y, 6, &b).unwrap();
                prop_assert_eq!(words.words(), ys.words());
            }
            Some(w) => prop_assert_ne!(x.accepts_ids(&w), y.accepts_ids(&w)),
        }
        if equivalent(&x, &y, &b).unwrap() {
            prop_assert_eq!(equal_upto(&x, &y, 6, &b).unwrap(), None);
        }
    }
}

proptest! {
    #![proptest_config(common::config(40))]

    /// The search space has no `+`, so inputs are drawn without it.
    #[test]
    fn minimal_size_is_consistent(
        r in common::plain_strategy(2, true).prop_filter("size", |r| r.size() <= 5 && !r.uses_plus())
    ) {
        let sigma = common::alphabet(2);
        let b = Budget::default();
        let target = determinize(&glushkov(&r, &sigma).unwrap(), &b).unwrap();
        let found = minimal_regex_size(&target, r.size(), &b).unwrap();
        let size = found.size.expect("r itself is within the bound");
        let witness = found.witness.unwrap();
        prop_assert!(size <= r.size());
        prop_assert_eq!(witness.size(), size);
        prop_assert!(equivalent(&glushkov(&witness, &sigma).unwrap(), &target.to_nfa(), &b).unwrap());
        if size > 1 {
            let below = minimal_regex_size(&target, size - 1, &b).unwrap();
            prop_assert_eq!(below.size, None);
        }
        let above = minimal_regex_size(&target, r.size() + 1, &b).unwrap();
        prop_assert_eq!(above.size, Some(size));
    }
}
