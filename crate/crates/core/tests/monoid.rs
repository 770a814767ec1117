use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use permchow::monoid::{
    all_functions, all_permutations, enumerate_classes, factorial, fiber_partition,
    hardy_ramanujan_estimate, lex_fun, lex_pair, lex_perm, monoid_size, orbit, partition_count,
    partitions, stabilizer_order, stabilizer_order_brute_force, unrank_fun, unrank_perm,
    FunctionTable,
};
use proptest::prelude::*;

/// Partition counts by the "largest part at most k" dynamic program.
fn partitions_by_dp(n: usize) -> Vec<u128> {
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways
}

#[test]
fn lex_fun_round_trips_exhaustively() {
    for n in 1..=5 {
        let mut seen = BTreeSet::new();
        for k in 0..monoid_size(n) {
            let f = unrank_fun(n, k).unwrap();
            assert_eq!(lex_fun(&f), k);
            seen.insert(f);
        }
        assert_eq!(seen.len() as u64, monoid_size(n));
    }
}

#[test]
fn lex_perm_is_a_bijection() {
    for n in 1..=6 {
        let mut ranks = BTreeSet::new();
        // Enumerate S_n independently of unrank_perm: the bijective functions.
        for f in all_functions(n).filter(FunctionTable::is_bijective) {
            let rank = lex_perm(&f).unwrap();
            assert_eq!(unrank_perm(n, rank).unwrap(), f);
            ranks.insert(rank);
        }
        assert_eq!(ranks.len() as u128, factorial(n));
        assert_eq!(ranks.last().copied(), Some(factorial(n) as u64 - 1));
    }
}

#[test]
fn s4_ranks_cover_zero_to_twenty_three() {
    let ranks: BTreeSet<u64> = all_functions(4)
        .filter(FunctionTable::is_bijective)
        .map(|f| lex_perm(&f).unwrap())
        .collect();
    assert_eq!(ranks, (0..24).collect());
}

#[test]
fn lex_pair_covers_s3_squared() {
    let perms = all_permutations(3);
    let values: BTreeSet<u128> = perms
        .iter()
        .flat_map(|s| perms.iter().map(move |g| lex_pair(s, g).unwrap()))
        .collect();
    assert_eq!(values, (0..36).collect());
}

#[test]
fn fiber_partition_is_a_complete_invariant() {
    for n in 1..=4 {
        let mut by_partition: BTreeMap<_, BTreeSet<FunctionTable>> = BTreeMap::new();
        for f in all_functions(n) {
            by_partition.entry(fiber_partition(&f)).or_default().insert(f);
        }
        for f in all_functions(n) {
            let orb = orbit(&f).unwrap();
            assert_eq!(&orb, &by_partition[&fiber_partition(&f)], "n = {n}, f = {f}");
        }
    }
}

#[test]
fn stabilizer_formula_matches_brute_force() {
    for n in 1..=4 {
        let group = factorial(n) * factorial(n);
        for f in all_functions(n) {
            let closed = stabilizer_order(&f);
            assert_eq!(closed, stabilizer_order_brute_force(&f).unwrap(), "f = {f}");
            assert_eq!(orbit(&f).unwrap().len() as u128 * closed, group);
        }
    }
}

#[test]
fn orbit_of_two_by_two_identity() {
    let o = orbit(&FunctionTable::identity(2)).unwrap();
    let swap = FunctionTable::new(vec![1, 0]).unwrap();
    assert_eq!(o, BTreeSet::from([FunctionTable::identity(2), swap]));
}

#[test]
fn class_records_satisfy_their_invariants() {
    for n in 1..=6 {
        let classes = enumerate_classes(n).unwrap();
        assert_eq!(BigInt::from(classes.len()), partition_count(n));
        let group = factorial(n) * factorial(n);
        let total: u128 = classes.iter().map(|c| c.orbit_size).sum();
        assert_eq!(total, u128::from(monoid_size(n)));
        for c in &classes {
            assert_eq!(c.orbit_size * c.stabilizer_order, group);
            assert_eq!(fiber_partition(&c.representative), c.partition);
            assert_eq!(c.representative.apply(0), 0);
        }
    }
    let five: u128 = enumerate_classes(5).unwrap().iter().map(|c| c.orbit_size).sum();
    assert_eq!(five, 3125);
}

#[test]
fn partition_function_against_enumeration_and_dp() {
    let dp = partitions_by_dp(100);
    for (n, &ways) in dp.iter().enumerate() {
        if n <= 20 {
            let direct = if n == 0 { 1 } else { partitions(n).len() as u128 };
            assert_eq!(ways, direct);
        }
        assert_eq!(partition_count(n).to_u128().unwrap(), ways, "Pa({n})");
    }
    assert_eq!(partition_count(100), BigInt::from(190_569_292u64));
}

#[test]
fn hardy_ramanujan_estimate_behaviour() {
    let ratio = hardy_ramanujan_estimate(100) / 190_569_292.0;
    assert!((0.9..=1.1).contains(&ratio), "ratio {ratio}");
    for n in 1..200 {
        assert!(hardy_ramanujan_estimate(n + 1) > hardy_ramanujan_estimate(n));
    }
}

fn function_strategy() -> impl Strategy<Value = FunctionTable> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(0..n, n).prop_map(|v| FunctionTable::new(v).unwrap())
    })
}

fn perm_of(n: usize) -> impl Strategy<Value = FunctionTable> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| FunctionTable::new(v).unwrap())
}

proptest! {
    #[test]
    fn action_is_a_group_action(
        (f, s1, g1, s2, g2) in function_strategy().prop_flat_map(|f| {
            let n = f.n();
            (Just(f), perm_of(n), perm_of(n), perm_of(n), perm_of(n))
        })
    ) {
        let id = FunctionTable::identity(f.n());
        prop_assert_eq!(f.act(&id, &id).unwrap(), f.clone());
        // (σ1, γ1)·((σ2, γ2)·f) = (σ1σ2, γ1γ2)·f
        let stepwise = f.act(&s2, &g2).unwrap().act(&s1, &g1).unwrap();
        let combined = f.act(&s1.compose(&s2).unwrap(), &g1.compose(&g2).unwrap()).unwrap();
        prop_assert_eq!(stepwise, combined);
    }

    #[test]
    fn fiber_partition_is_invariant(
        (f, s, g) in function_strategy().prop_flat_map(|f| {
            let n = f.n();
            (Just(f), perm_of(n), perm_of(n))
        })
    ) {
        prop_assert_eq!(fiber_partition(&f.act(&s, &g).unwrap()), fiber_partition(&f));
    }
}
