mod common;

use std::cmp::Ordering;

use num_bigint::BigUint;
use parry_words::palindromes::{center_of, defect_series, lift, transported_center};
use parry_words::{
    check_parry, numeration_basis, word_profile, ConfluentParams, Eertree, Error, SuffixAutomaton, Word,
};
use proptest::prelude::*;

fn word(max_letter: u8, max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    (1..=max_letter).prop_flat_map(move |k| prop::collection::vec(0..=k, 0..max_len))
}

fn params() -> impl Strategy<Value = ConfluentParams> {
    (2usize..=4, 1u32..=4)
        .prop_flat_map(|(m, t)| (Just(m), Just(t), 1..=t))
        .prop_map(|(m, t, s)| ConfluentParams::new(t, s, m).unwrap())
}

/// Reference for the Parry condition straight from its definition.
fn parry_ok(d: &[u32]) -> bool {
    let n = d.len();
    let padded = |i: usize, j: usize| if i + j < n { d[i + j] } else { 0 };
    (1..n).all(|i| {
        (0..n)
            .map(|j| padded(i, j).cmp(&d[j]))
            .find(|o| *o != Ordering::Equal)
            == Some(Ordering::Less)
    })
}

proptest! {
    #[test]
    fn eertree_matches_naive(w in word(3, 300)) {
        prop_assert_eq!(Eertree::build(&w).distinct_count(), common::naive_palindromes(&w).len());
    }

    #[test]
    fn eertree_counts_by_length(w in word(2, 200)) {
        let naive = common::naive_palindromes(&w);
        let counts = Eertree::build(&w).counts_by_length(w.len());
        for (n, &c) in counts.iter().enumerate().skip(1) {
            prop_assert_eq!(c as usize, naive.iter().filter(|p| p.len() == n).count());
        }
    }

    #[test]
    fn automaton_matches_windows(w in word(3, 200)) {
        let n_max = w.len();
        let counts = SuffixAutomaton::build(&w).counts_by_length(n_max);
        for n in 1..=n_max {
            prop_assert_eq!(counts[n] as usize, common::factors(&w, n).len());
        }
    }

    #[test]
    fn parry_check_matches_definition(d in prop::collection::vec(0u32..4, 1..7)) {
        match check_parry(&d) {
            Ok(_) => prop_assert!(parry_ok(&d) && *d.last().unwrap() != 0 && d != [1]),
            Err(Error::ParryViolation { .. }) => prop_assert!(!parry_ok(&d)),
            Err(_) => prop_assert!(*d.last().unwrap() == 0 || d == [1]),
        }
    }

    #[test]
    fn basis_is_type_independent(p in params()) {
        let small = numeration_basis::<u64>(&p, 15).unwrap();
        let big = numeration_basis::<BigUint>(&p, 15).unwrap();
        let as_big: Vec<BigUint> = small.values().iter().map(|&x| BigUint::from(x)).collect();
        prop_assert_eq!(as_big.as_slice(), big.values());
    }

    #[test]
    fn prefix_matches_iteration(p in params(), n in 1usize..3000) {
        let fast = p.substitution().fixed_point_prefix(0, n).unwrap();
        let oracle = common::fixed_point(p.digits().digits(), n);
        prop_assert_eq!(fast.as_slice(), oracle.as_slice());
    }

    #[test]
    fn word_text_round_trip(w in word(9, 50)) {
        let w = Word::from(w);
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }

    #[test]
    fn defect_matches_naive(w in word(2, 40)) {
        let series = defect_series(&w);
        for k in 0..=w.len() {
            let pals = common::naive_palindromes(&w[..k]).len() + 1;
            prop_assert_eq!(series.defects[k] as usize, k + 1 - pals);
        }
    }

    #[test]
    fn lifting_transports_centers(p in params(), start in 0usize..5000, len in 0usize..40) {
        let u = p.substitution().fixed_point_prefix(0, 6000).unwrap();
        let tree = Eertree::build(&u[start..(start + len).min(u.len())]);
        for v in tree.nodes() {
            let src = tree.node_word(v);
            let img = lift(&p, src).unwrap();
            prop_assert!(img.is_palindrome());
            prop_assert_eq!(center_of(&img).unwrap(), transported_center(&p, center_of(src).unwrap()));
        }
    }

    #[test]
    fn u_beta_is_full(p in params()) {
        let u = p.substitution().fixed_point_prefix(0, 5000).unwrap();
        prop_assert!(defect_series(&u).full);
    }

    #[test]
    fn horizon_never_exceeds_n_max(w in word(3, 400), n_max in 0usize..50) {
        let prof = word_profile(&w, n_max);
        prop_assert!(prof.horizon <= prof.n_max());
        prop_assert_eq!(prof.c().len(), prof.p().len());
    }
}
