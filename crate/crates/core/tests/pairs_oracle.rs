use ite_core::pairs::{all_pairs, pair_and, pair_down, pair_from_function, pair_neg, pair_or, pair_to_function};
use ite_core::{Error, PairOfSets, Three};
use proptest::prelude::*;

use Three::{F, T, U};

// McCarthy's left-sequential connectives on {T, F, U}, written out by hand.
fn neg3(a: Three) -> Three {
    match a {
        T => F,
        F => T,
        U => U,
    }
}

fn and3(a: Three, b: Three) -> Three {
    match a {
        T => b,
        F => F,
        U => U,
    }
}

fn or3(a: Three, b: Three) -> Three {
    match a {
        T => T,
        F => b,
        U => U,
    }
}

fn down3(a: Three) -> Three {
    if a == T {
        T
    } else {
        F
    }
}

fn functions(n: usize) -> Vec<Vec<Three>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|f| [T, F, U].map(|v| [f.clone(), vec![v]].concat()))
            .collect();
    }
    out
}

#[test]
fn pair_operations_match_pointwise_three() {
    let mut mismatches = 0;
    for n in 0..=4 {
        let fs = functions(n);
        for f in &fs {
            let p = pair_from_function(f);
            assert_eq!(&pair_to_function(&p), f);
            let want: Vec<_> = f.iter().map(|&a| neg3(a)).collect();
            mismatches += usize::from(pair_to_function(&pair_neg(&p)) != want);
            let want: Vec<_> = f.iter().map(|&a| down3(a)).collect();
            mismatches += usize::from(pair_to_function(&pair_down(&p)) != want);
            for g in &fs {
                let q = pair_from_function(g);
                let and: Vec<_> = f.iter().zip(g).map(|(&a, &b)| and3(a, b)).collect();
                let or: Vec<_> = f.iter().zip(g).map(|(&a, &b)| or3(a, b)).collect();
                mismatches += usize::from(pair_to_function(&pair_and(&p, &q).unwrap()) != and);
                mismatches += usize::from(pair_to_function(&pair_or(&p, &q).unwrap()) != or);
            }
        }
    }
    assert_eq!(mismatches, 0);
}

#[test]
fn enumeration_covers_every_pair_once() {
    for n in 0..=4 {
        let all: Vec<PairOfSets> = all_pairs(n).collect();
        assert_eq!(all.len(), 3usize.pow(n as u32));
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }
}

#[test]
fn mismatched_grounds_are_rejected() {
    let p = PairOfSets::all_true(2);
    let q = PairOfSets::all_true(3);
    assert_eq!(pair_and(&p, &q), Err(Error::GroundMismatch { left: 2, right: 3 }));
    assert!(matches!(pair_or(&q, &p), Err(Error::GroundMismatch { .. })));
}

fn pair(n: usize) -> impl Strategy<Value = PairOfSets> {
    prop::collection::vec(prop_oneof![Just(T), Just(F), Just(U)], n).prop_map(|f| pair_from_function(&f))
}

fn two_pairs() -> impl Strategy<Value = (PairOfSets, PairOfSets)> {
    (0usize..7).prop_flat_map(|n| (pair(n), pair(n)))
}

proptest! {
    #[test]
    fn left_zeros_and_identities((p, _q) in two_pairs()) {
        let n = p.ground();
        let (t, f, u) = (PairOfSets::all_true(n), PairOfSets::all_false(n), PairOfSets::undefined(n));
        prop_assert_eq!(pair_and(&f, &p).unwrap(), f.clone());
        prop_assert_eq!(pair_or(&t, &p).unwrap(), t.clone());
        prop_assert_eq!(pair_and(&u, &p).unwrap(), u.clone());
        prop_assert_eq!(pair_or(&u, &p).unwrap(), u.clone());
        prop_assert_eq!(pair_and(&t, &p).unwrap(), p.clone());
        prop_assert_eq!(pair_or(&f, &p).unwrap(), p.clone());
    }

    #[test]
    fn down_is_idempotent_and_total((p, _q) in two_pairs()) {
        let d = pair_down(&p);
        prop_assert_eq!(pair_down(&d), d.clone());
        prop_assert!(pair_to_function(&d).iter().all(|&v| v != U));
    }

    #[test]
    fn de_morgan_and_double_negation((p, q) in two_pairs()) {
        prop_assert_eq!(pair_neg(&pair_neg(&p)), p.clone());
        let lhs = pair_neg(&pair_and(&p, &q).unwrap());
        let rhs = pair_or(&pair_neg(&p), &pair_neg(&q)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn first_and_second_are_disjoint((p, _q) in two_pairs()) {
        prop_assert!(p.first().is_disjoint(p.second()));
    }
}
