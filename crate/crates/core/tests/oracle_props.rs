use std::thread;

use liecx::checks::{random_module, small_groups};
use liecx::freelie::lie_module_rep;
use liecx::oracle::{
    cohomology_dims, coinvariants_dim, decomposition_fit, free_resolution_with,
    fresh_free_resolution_with, group_algebra, invariants_dim, jacobson_radical, nilpotency_index,
    resolution, resolution_with, tor_dims, tor_dims_free, Capacity, FitReport, GModuleRep,
    Resolution, YoungGroup,
};
use liecx::{Composition, Error, Partial, Prime};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn prime(p: u32) -> Prime {
    Prime::new(p).unwrap()
}

fn comp(s: &str) -> Composition {
    s.parse().unwrap()
}

fn group(s: &str) -> YoungGroup {
    YoungGroup::new(&comp(s), 1000).unwrap()
}

#[test]
fn regular_representations() {
    assert_eq!(group_algebra(&comp("2"), prime(2)).unwrap().dim, 2);
    assert_eq!(group_algebra(&comp("2,2"), prime(2)).unwrap().dim, 4);
    assert_eq!(group_algebra(&comp("3"), prime(3)).unwrap().dim, 6);
    let cap = Capacity {
        group_order: 100,
        ..Capacity::default()
    };
    assert!(matches!(
        liecx::oracle::group_algebra_with(&comp("5"), prime(2), &cap),
        Err(Error::Capacity { .. })
    ));
}

#[test]
fn radicals() {
    let j = jacobson_radical(&comp("2"), prime(2)).unwrap();
    assert_eq!(j, vec![vec![1, 1]]);
    assert_eq!(jacobson_radical(&comp("3"), prime(3)).unwrap().len(), 4);
    assert!(jacobson_radical(&comp("2"), prime(3)).unwrap().is_empty());
    for (l, q) in [("3", 3), ("4", 2), ("2,2", 2), ("4", 3)] {
        let g = group(l);
        let j = jacobson_radical(&comp(l), prime(q)).unwrap();
        assert!(nilpotency_index(&g, prime(q), &j).is_some(), "({l}) p={q}");
    }
}

#[test]
fn resolution_examples() {
    assert_eq!(
        resolution(&comp("2"), prime(2), 5).unwrap().ranks,
        vec![1; 6]
    );
    assert_eq!(
        resolution(&comp("2"), prime(3), 5).unwrap().ranks,
        vec![1, 0, 0, 0, 0, 0]
    );
    for q in [2, 3, 5] {
        assert_eq!(
            resolution(&comp("1,1"), prime(q), 3).unwrap().ranks,
            vec![1, 0, 0, 0]
        );
    }
}

#[test]
fn resolutions_compose_to_zero_and_are_exact() {
    for l in ["2", "3", "4", "2,2", "3,1", "2,1,2", "2,2,2", "3,2"] {
        for q in [2, 3] {
            let g = group(l);
            let res = free_resolution_with(&comp(l), prime(q), 4, &Capacity::default()).unwrap();
            assert!(res.composes_to_zero(&g), "({l}) p={q}");
            assert!(res.is_exact(&g), "({l}) p={q}");
        }
    }
}

#[test]
fn resolution_json_round_trips() {
    let res = resolution(&comp("3"), prime(3), 3).unwrap();
    let back: Resolution = serde_json::from_str(&res.to_json()).unwrap();
    assert_eq!(back, res);
}

#[test]
fn width_limit_carries_partial_resolution() {
    let cap = Capacity {
        width: 72,
        ..Capacity::default()
    };
    match free_resolution_with(&comp("2,2,2"), prime(2), 10, &cap) {
        Err(Error::Capacity {
            partial: Some(p), ..
        }) => match *p {
            Partial::Resolution(res) => assert!(res.ranks.iter().all(|&r| r * 8 <= 72)),
            other => panic!("unexpected partial {other:?}"),
        },
        other => panic!("expected capacity error, got {other:?}"),
    }
}

#[test]
fn homology_examples() {
    let p2 = prime(2);
    let t = GModuleRep::trivial(p2, comp("2"));
    assert_eq!(tor_dims(&comp("2"), p2, &t, 5).unwrap().dims, vec![1; 6]);
    assert_eq!(
        cohomology_dims(&comp("2"), p2, &t, 4).unwrap().dims,
        vec![1; 5]
    );

    let lie4 = lie_module_rep(4, p2, &comp("4")).unwrap();
    assert_eq!(
        tor_dims(&comp("4"), p2, &lie4, 6).unwrap().dims,
        vec![0, 0, 1, 1, 1, 2, 2]
    );

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let m = random_module(&comp("1,1,1"), prime(5), 6, &mut rng).unwrap();
    let mut expected = vec![0; 5];
    expected[0] = m.dim as u64;
    assert_eq!(
        tor_dims(&comp("1,1,1"), prime(5), &m, 4).unwrap().dims,
        expected
    );
}

#[test]
fn lie_three_duality_at_three() {
    let p = prime(3);
    let lie3 = lie_module_rep(3, p, &comp("3")).unwrap();
    let up = cohomology_dims(&comp("3"), p, &lie3, 4).unwrap().dims;
    assert_eq!(up, tor_dims(&comp("3"), p, &lie3.dual(), 4).unwrap().dims);
}

#[test]
fn trivial_module_is_self_dual_in_homology() {
    for l in ["2", "3", "4", "2,2"] {
        for q in [2, 3] {
            let t = GModuleRep::trivial(prime(q), comp(l));
            let down = tor_dims(&comp(l), prime(q), &t, 4).unwrap().dims;
            assert_eq!(
                cohomology_dims(&comp(l), prime(q), &t, 4).unwrap().dims,
                down
            );
        }
    }
}

#[test]
fn projective_lie_modules_have_no_higher_homology() {
    for (n, q) in [(2, 3), (3, 2)] {
        let p = prime(q);
        let l = Composition::single(n);
        let lie = lie_module_rep(n, p, &l).unwrap();
        let dims = tor_dims(&l, p, &lie, 4).unwrap().dims;
        assert!(dims[1..].iter().all(|&d| d == 0), "n={n} p={q}: {dims:?}");
        let free = tor_dims_free(&l, p, &lie, 4, &Capacity::default())
            .unwrap()
            .dims;
        assert_eq!(free, dims);
    }
}

#[test]
fn maschke_vanishing_with_free_resolutions() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (l, q) in [
        ("2", 3),
        ("3", 5),
        ("2,1", 5),
        ("3,1", 5),
        ("4", 5),
        ("2,2", 3),
    ] {
        let p = prime(q);
        let m = random_module(&comp(l), p, 6, &mut rng).unwrap();
        let dims = tor_dims_free(&comp(l), p, &m, 4, &Capacity::default())
            .unwrap()
            .dims;
        assert!(dims[1..].iter().all(|&d| d == 0), "({l}) p={q}: {dims:?}");
        assert_eq!(dims[0], coinvariants_dim(&m) as u64);
        assert_eq!(coinvariants_dim(&m), invariants_dim(&m));
    }
}

#[test]
fn degree_zero_routes_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for l in small_groups() {
        for q in [2, 3] {
            let m = random_module(&l, prime(q), 6, &mut rng).unwrap();
            let free = tor_dims_free(&l, prime(q), &m, 1, &Capacity::default())
                .unwrap()
                .dims;
            assert_eq!(free[0], coinvariants_dim(&m) as u64, "({l}) p={q}");
        }
    }
}

#[test]
fn cached_resolutions_match_fresh_ones_across_threads() {
    let fresh =
        fresh_free_resolution_with(&comp("3,2"), prime(2), 5, &Capacity::default()).unwrap();
    let handles: Vec<_> = (0..6)
        .map(|k| {
            thread::spawn(move || {
                free_resolution_with(&comp("3,2"), prime(2), 2 + k % 3, &Capacity::default())
                    .unwrap()
            })
        })
        .collect();
    for h in handles {
        let res = h.join().unwrap();
        let len = res.ranks.len();
        assert_eq!(res.ranks, fresh.ranks[..len]);
        assert_eq!(res.differentials, fresh.differentials[..len - 1]);
    }
    let cached = free_resolution_with(&comp("3,2"), prime(2), 5, &Capacity::default()).unwrap();
    assert_eq!(cached, fresh);
}

#[test]
fn mismatched_modules_are_rejected() {
    let m = GModuleRep::trivial(prime(2), comp("2"));
    assert!(matches!(
        tor_dims(&comp("3"), prime(2), &m, 2),
        Err(Error::InvalidInput(_))
    ));
    assert!(matches!(
        tor_dims(&comp("2"), prime(3), &m, 2),
        Err(Error::InvalidInput(_))
    ));
}

#[test]
fn decomposition_examples() {
    let p = prime(2);
    let fit = decomposition_fit(4, p, &comp("1,3"), 4).unwrap();
    assert_eq!(fit.j, 0);
    assert_eq!(fit.oracle_dims[1..], [0, 0, 0, 0]);
    assert_eq!(fit.coefficients, vec![fit.oracle_dims[0]]);

    let fit = decomposition_fit(2, p, &comp("2"), 6).unwrap();
    assert_eq!(fit.coefficients, vec![0, 1]);
    assert!(fit.exact);

    let fit = decomposition_fit(4, p, &comp("4"), 6).unwrap();
    assert!(fit.exact);
    assert_eq!(fit.coefficients, vec![0, 0, 1]);
    assert_eq!(fit.exact_solutions, 1);

    let fit = decomposition_fit(4, p, &comp("2,2"), 6).unwrap();
    assert_eq!((fit.coefficients.clone(), fit.residual), (vec![1, 1], 0));
    let back: FitReport = serde_json::from_str(&fit.to_json()).unwrap();
    assert_eq!(back, fit);
}

#[test]
fn capacity_errors_surface() {
    let cap = Capacity {
        group_order: 10,
        ..Capacity::default()
    };
    let t = GModuleRep::trivial(prime(2), comp("4"));
    assert!(matches!(
        liecx::oracle::tor_dims_with(&comp("4"), prime(2), &t, 2, &cap),
        Err(Error::Capacity { .. })
    ));
    let cap = Capacity {
        width: 24,
        ..Capacity::default()
    };
    assert!(resolution_with(&comp("4"), prime(2), 3, &cap).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn duality_on_random_modules(seed in any::<u64>(), k in 0usize..12, odd in any::<bool>()) {
        let l = &small_groups()[k];
        let p = prime(if odd { 3 } else { 2 });
        let m = random_module(l, p, 6, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let up = cohomology_dims(l, p, &m, 4).unwrap().dims;
        let down = tor_dims(l, p, &m.dual(), 4).unwrap().dims;
        prop_assert_eq!(up, down);
    }

    #[test]
    fn homology_is_basis_independent(seed in any::<u64>(), k in 0usize..12, odd in any::<bool>()) {
        let l = &small_groups()[k];
        let p = prime(if odd { 3 } else { 2 });
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(l, p, 4, &mut rng).unwrap();
        let doubled = m.direct_sum(&m);
        let single = tor_dims(l, p, &m, 3).unwrap().dims;
        let double = tor_dims(l, p, &doubled, 3).unwrap().dims;
        prop_assert_eq!(double, single.iter().map(|d| 2 * d).collect::<Vec<_>>());
    }
}
