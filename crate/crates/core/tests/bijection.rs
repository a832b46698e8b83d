mod common;

use bgrank_core::core_quotient::{
    compose, core_height_for_rank, decompose, removable_dominoes, remove_domino,
    two_core_by_removal, two_core_with, Decomposition,
};
use bgrank_core::partition::{bg_rank, is_staircase, staircase_bg_rank, Partition, Staircase};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn domino_removal_preserves_rank() {
    for p in common::all_up_to(20) {
        let rank = bg_rank(&p);
        for d in removable_dominoes(&p) {
            let q = remove_domino(&p, d).unwrap();
            assert_eq!(q.weight() + 2, p.weight());
            assert_eq!(bg_rank(&q), rank, "{p} minus {d:?}");
        }
    }
}

/// Every two-cell deletion that leaves a valid diagram, found by brute force
/// over all cell pairs.
fn brute_removals(p: &Partition) -> Vec<Partition> {
    let cells: Vec<(usize, usize)> = p.cells().collect();
    let mut out = Vec::new();
    for (a, &(r1, c1)) in cells.iter().enumerate() {
        for &(r2, c2) in &cells[a + 1..] {
            let adjacent = (r1 == r2 && c1 + 1 == c2) || (c1 == c2 && r1 + 1 == r2);
            if !adjacent {
                continue;
            }
            let mut rows = p.parts().to_vec();
            rows[r1 - 1] -= 1;
            rows[r2 - 1] -= 1;
            // the deleted cells must be the ends of their rows
            let ends = c1 == p.row(r1) || (r1 == r2);
            let ends = ends && c2 == p.row(r2);
            if ends && rows.windows(2).all(|w| w[0] >= w[1]) {
                out.push(Partition::normalized(rows));
            }
        }
    }
    out.sort();
    out
}

#[test]
fn removable_list_matches_brute_force() {
    for p in common::all_up_to(14) {
        let mut listed: Vec<Partition> = removable_dominoes(&p)
            .into_iter()
            .map(|d| remove_domino(&p, d).unwrap())
            .collect();
        listed.sort();
        assert_eq!(listed, brute_removals(&p), "{p}");
    }
}

#[test]
fn core_is_independent_of_removal_order() {
    let mut rng = StdRng::seed_from_u64(0x2c0e);
    for p in common::all_up_to(18) {
        let core = two_core_by_removal(&p);
        assert!(is_staircase(&core).is_some(), "{p} -> {core}");
        for _ in 0..50 {
            let random = two_core_with(&p, |opts| rng.gen_range(0..opts.len()));
            assert_eq!(random, core, "{p}");
        }
        assert_eq!(core, decompose(&p).core.to_partition(), "{p}");
    }
}

#[test]
fn round_trip_up_to_22() {
    for p in common::all_up_to(22) {
        let d = decompose(&p);
        assert!(is_staircase(&d.core.to_partition()).is_some());
        assert_eq!(d.weight(), p.weight(), "{p}");
        assert_eq!(compose(&d), p);
    }
}

#[test]
fn decompose_inverts_compose() {
    let mut seen = 0;
    for k in (0..).take_while(|k| Staircase::new(*k).weight() <= 22) {
        let core = Staircase::new(k);
        let half = (22 - core.weight()) / 2;
        for w0 in 0..=half {
            for q0 in common::all_up_to(w0)
                .into_iter()
                .filter(|q| q.weight() == w0)
            {
                for q1 in common::all_up_to(half - w0) {
                    let d = Decomposition::new(core, q0.clone(), q1);
                    let p = compose(&d);
                    assert_eq!(p.weight(), d.weight());
                    assert_eq!(decompose(&p), d);
                    seen += 1;
                }
            }
        }
    }
    // every partition of weight <= 22 arises exactly once
    assert_eq!(seen, common::all_up_to(22).len());
}

#[test]
fn rank_is_the_rank_of_the_core() {
    for p in common::all_up_to(20) {
        let d = decompose(&p);
        assert_eq!(bg_rank(&p), staircase_bg_rank(d.core.height), "{p}");
        assert_eq!(core_height_for_rank(bg_rank(&p)), d.core.height);
    }
}

#[test]
fn core_weights_by_rank() {
    for j in -10i64..=10 {
        let s = Staircase::new(core_height_for_rank(j));
        assert_eq!(s.weight() as i64, j * (2 * j - 1));
        assert_eq!(s.bg_rank(), j);
    }
}
