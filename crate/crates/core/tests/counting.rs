mod common;

use bgrank_core::counting::{
    enumerate_partitions, pair_count, partition_count, pj_enumerate, pj_formula, rank_exists,
    rank_range, DEFAULT_ENUMERATION_BOUND,
};
use bgrank_core::partition::bg_rank;
use bgrank_core::series::{expand_product, FactoredProduct};
use num_bigint::{BigInt, BigUint};

#[test]
fn enumeration_matches_recursion_oracle() {
    for n in 0..=30 {
        let listed: Vec<Vec<usize>> = enumerate_partitions(n).map(|p| p.into_parts()).collect();
        // the oracle emits reverse-lexicographic order too
        assert_eq!(listed, common::brute_partitions(n, n), "n = {n}");
        assert_eq!(partition_count(n as i64), BigUint::from(listed.len()));
    }
}

#[test]
fn pair_count_matches_direct_pairs() {
    for n in 0..=15usize {
        let direct: usize = (0..=n)
            .map(|k| {
                common::brute_partitions(k, k).len() * common::brute_partitions(n - k, n - k).len()
            })
            .sum();
        assert_eq!(pair_count(n as i64), BigUint::from(direct), "n = {n}");
    }
    assert_eq!(pair_count(2), BigUint::from(5u32));
    assert_eq!(pair_count(5), BigUint::from(36u32));
}

#[test]
fn closed_form_equals_enumeration_up_to_28() {
    for n in 0..=28u64 {
        let mut by_rank = std::collections::BTreeMap::<i64, u64>::new();
        for p in enumerate_partitions(n as usize) {
            *by_rank.entry(bg_rank(&p)).or_default() += 1;
        }
        assert_eq!(by_rank.keys().copied().collect::<Vec<_>>(), rank_range(n));
        for j in -8..=8 {
            let expected = BigUint::from(by_rank.get(&j).copied().unwrap_or(0));
            assert_eq!(pj_formula(n as i64, j), expected, "n = {n}, j = {j}");
            assert_eq!(
                pj_enumerate(n, j, DEFAULT_ENUMERATION_BOUND).unwrap(),
                expected
            );
        }
    }
}

#[test]
fn ranks_sum_to_partition_count_up_to_1000() {
    for n in 0..=1000u64 {
        let total: BigUint = rank_range(n)
            .into_iter()
            .map(|j| pj_formula(n as i64, j))
            .sum();
        assert_eq!(total, partition_count(n as i64), "n = {n}");
    }
}

#[test]
fn existence_criterion_up_to_24() {
    for n in 0..=24u64 {
        for j in -5..=5 {
            let exists =
                pj_enumerate(n, j, DEFAULT_ENUMERATION_BOUND).unwrap() > BigUint::from(0u32);
            assert_eq!(rank_exists(n as i64, j), exists, "n = {n}, j = {j}");
            assert_eq!(
                rank_exists(n as i64, j),
                pj_formula(n as i64, j) > BigUint::from(0u32)
            );
        }
    }
}

#[test]
fn pair_count_is_square_of_partition_series() {
    let series = expand_product(&FactoredProduct::single(1, -2).unwrap(), 300, None).unwrap();
    for n in 0..=300 {
        assert_eq!(
            BigInt::from(pair_count(n as i64)),
            series.coeff(n),
            "n = {n}"
        );
    }
}

#[test]
fn negative_arguments_vanish() {
    assert_eq!(partition_count(-1), BigUint::from(0u32));
    assert_eq!(pair_count(-7), BigUint::from(0u32));
    assert_eq!(pj_formula(-1, 0), BigUint::from(0u32));
    assert_eq!(pj_formula(i64::MAX, i64::MAX), BigUint::from(0u32));
}
