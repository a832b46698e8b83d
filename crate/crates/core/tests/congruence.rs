use bgrank_core::congruence::{
    ramanujan_check, refined_congruence_applies, residue_rhs, triangular_residue_analysis,
    verify_fifteen_pairs, verify_implication, verify_pp_mod5, verify_reduction_identity,
    verify_refined_congruences, ResiduePair, PP_ZERO_RESIDUES,
};
use bgrank_core::counting::{pj_formula, rank_range};
use num_bigint::BigUint;

#[test]
fn fifteen_pairs_land_in_zero_residues() {
    let r = verify_fifteen_pairs();
    assert!(r.passed(), "{:?}", r.failures());
    assert_eq!(r.checked(), 15);
}

#[test]
fn reduction_identity_to_500() {
    let r = verify_reduction_identity(500);
    assert!(r.passed(), "{:?}", r.failures());
}

#[test]
fn pp_mod5_to_5000() {
    let r = verify_pp_mod5(5000);
    assert!(
        r.passed(),
        "{:?}",
        &r.failures()[..r.failures().len().min(5)]
    );
    assert_eq!(r.checked(), 3000);
}

#[test]
fn refined_congruences_to_500() {
    let r = verify_refined_congruences(500, 30);
    assert!(r.passed(), "{:?}", r.failures());
}

#[test]
fn triangular_residues_to_10000() {
    assert!(triangular_residue_analysis(10_000).passed());
}

#[test]
fn tested_cases_reduce_to_vanishing_pp() {
    assert!(verify_implication(500).passed());
}

#[test]
fn ramanujan_5n_plus_4() {
    assert!(ramanujan_check(200).passed());
}

/// The uncovered residue pairs are genuinely not all divisible by 5, so the
/// case filter is doing real work.
#[test]
fn uncovered_pairs_have_counterexamples() {
    let five = BigUint::from(5u32);
    for n_res in 0..5u8 {
        for j_res in 0..5u8 {
            let pair = ResiduePair::new(n_res, j_res).unwrap();
            if refined_congruence_applies(pair) {
                continue;
            }
            assert!(!PP_ZERO_RESIDUES.contains(&(residue_rhs(pair) as u64)));
            let witness = (0..200u64).any(|n| {
                rank_range(n).into_iter().any(|j| {
                    ResiduePair::of(n as i64, j) == pair
                        && pj_formula(n as i64, j) % &five != BigUint::from(0u32)
                })
            });
            assert!(witness, "{pair:?}");
        }
    }
}
