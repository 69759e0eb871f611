use ite_core::algebra::{mk_three, power_ada};
use ite_core::congruence::{
    all_congruences, closure_of_partition, congruence_closure, iso_to_three, maximal_congruences, quotient_ada,
    Congruence, Partition,
};
use ite_core::pairs::all_pairs;
use ite_core::{Ada, ElemId, Limits};
use proptest::prelude::*;

// Restricted growth strings: every set partition of 0..n exactly once.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for b in 0..=max + 1 {
            prefix.push(b);
            go(prefix, n, max.max(b), out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return vec![vec![]];
    }
    let mut prefix = vec![0];
    go(&mut prefix, n, 0, &mut out);
    out
}

fn compatible(a: &Ada, block: &[usize]) -> bool {
    let n = a.len();
    let same = |x: ElemId, y: ElemId| block[x.0] == block[y.0];
    for x in 0..n {
        for y in 0..n {
            if block[x] != block[y] {
                continue;
            }
            let (x, y) = (ElemId(x), ElemId(y));
            if !same(a.neg(x), a.neg(y)) || !same(a.down(x), a.down(y)) {
                return false;
            }
            for z in 0..n {
                let z = ElemId(z);
                if !same(a.and(x, z), a.and(y, z))
                    || !same(a.and(z, x), a.and(z, y))
                    || !same(a.or(x, z), a.or(y, z))
                    || !same(a.or(z, x), a.or(z, y))
                {
                    return false;
                }
            }
        }
    }
    true
}

fn refines(fine: &[usize], coarse: &[usize]) -> bool {
    (0..fine.len()).all(|i| (0..fine.len()).all(|j| fine[i] != fine[j] || coarse[i] == coarse[j]))
}

fn same_partition(p: &Partition, block: &[usize]) -> bool {
    (0..block.len()).all(|i| (0..block.len()).all(|j| p.related(i, j) == (block[i] == block[j])))
}

/// Brute-force congruence lattice and its maximal proper elements.
fn oracle(a: &Ada) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let cong: Vec<Vec<usize>> = set_partitions(a.len())
        .into_iter()
        .filter(|b| compatible(a, b))
        .collect();
    let proper: Vec<&Vec<usize>> = cong.iter().filter(|b| b.iter().any(|&x| x != 0)).collect();
    let maximal = proper
        .iter()
        .filter(|b| !proper.iter().any(|c| c != *b && refines(b, c)))
        .map(|b| (*b).clone())
        .collect();
    (cong, maximal)
}

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn three_has_only_the_identity_as_maximal() {
    let three = mk_three();
    let max = maximal_congruences(&three).unwrap();
    assert_eq!(max.len(), 1);
    assert!(max[0].partition().is_discrete());
    let (cong, oracle_max) = oracle(&three);
    assert_eq!(cong.len(), 2);
    assert_eq!(oracle_max.len(), 1);
}

#[test]
fn three_squared_matches_brute_force() {
    let a = power_ada(2, &lim()).unwrap();
    let (cong, oracle_max) = oracle(&a);
    let lattice = all_congruences(&a, &lim()).unwrap();
    assert_eq!(lattice.len(), cong.len());
    for b in &cong {
        assert!(lattice.iter().any(|c| same_partition(c.partition(), b)));
    }
    let max = maximal_congruences(&a).unwrap();
    assert_eq!(max.len(), 2);
    assert_eq!(oracle_max.len(), 2);
    for b in &oracle_max {
        assert!(max.iter().any(|c| same_partition(c.partition(), b)));
    }
    for theta in &max {
        let (q, _) = quotient_ada(&a, theta.partition()).unwrap();
        assert!(iso_to_three(&q).is_some());
    }
}

#[test]
fn three_cubed_maximals_are_coordinate_kernels() {
    let a = power_ada(3, &lim()).unwrap();
    let max = maximal_congruences(&a).unwrap();
    assert_eq!(max.len(), 3);
    let pairs: Vec<_> = all_pairs(3).collect();
    for x in 0..3 {
        let kernel: Vec<usize> = pairs.iter().map(|p| p.value_at(x).index()).collect();
        assert!(compatible(&a, &kernel));
        assert!(max.iter().any(|c| same_partition(c.partition(), &kernel)), "coordinate {x}");
    }
    for theta in &max {
        let (q, _) = quotient_ada(&a, theta.partition()).unwrap();
        assert!(iso_to_three(&q).is_some());
    }
}

#[test]
fn non_congruences_are_rejected() {
    let a = power_ada(2, &lim()).unwrap();
    // glue T and F only
    let mut labels: Vec<usize> = (0..a.len()).collect();
    labels[a.f().0] = a.t().0;
    assert!(Congruence::new(&a, Partition::from_blocks(&labels)).is_err());
}

fn seed_pairs() -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((0usize..9, 0usize..9), 0..4)
}

proptest! {
    #[test]
    fn closure_is_a_congruence_containing_the_seed(seed in seed_pairs()) {
        let a = power_ada(2, &lim()).unwrap();
        let pairs: Vec<_> = seed.iter().map(|&(x, y)| (ElemId(x), ElemId(y))).collect();
        let c = congruence_closure(&a, &pairs);
        for &(x, y) in &seed {
            prop_assert!(c.partition().related(x, y));
        }
        prop_assert!(compatible(&a, c.partition().labels()));
        // idempotent
        let again = closure_of_partition(&a, c.partition());
        prop_assert_eq!(again.partition(), c.partition());
    }

    #[test]
    fn closure_is_monotone(seed in seed_pairs(), extra in (0usize..9, 0usize..9)) {
        let a = power_ada(2, &lim()).unwrap();
        let small: Vec<_> = seed.iter().map(|&(x, y)| (ElemId(x), ElemId(y))).collect();
        let mut big = small.clone();
        big.push((ElemId(extra.0), ElemId(extra.1)));
        let (cs, cb) = (congruence_closure(&a, &small), congruence_closure(&a, &big));
        prop_assert!(cs.partition().refines(cb.partition()));
    }
}
