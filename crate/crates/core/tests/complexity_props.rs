use liecx::complexity::{branching_gamma, complexity_lie, j_of_composition, p_valuation};
use liecx::{Composition, Prime};
use proptest::prelude::*;

fn prime(p: u32) -> Prime {
    Prime::new(p).unwrap()
}

#[test]
fn conclusion_is_the_valuation_up_to_200() {
    for q in [2, 3, 5, 7] {
        for n in 1..=200u64 {
            let rep = complexity_lie(n, prime(q), false, None).unwrap();
            assert_eq!(rep.conclusion, p_valuation(n, prime(q)).unwrap());
            assert_eq!(rep.conclusion == 0, n % q as u64 != 0);
        }
    }
}

#[test]
fn audited_reports_serialize_with_estimates() {
    let rep = complexity_lie(8, prime(2), true, Some(2000)).unwrap();
    assert_eq!(rep.per_r.len(), 4);
    assert!(rep.per_r[1..].iter().all(|e| e.estimate.is_some()));
    let json = rep.to_json();
    assert!(json.contains("\"conclusion\":3"), "{json}");
}

proptest! {
    #[test]
    fn branching_maximum_is_the_valuation(parts in prop::collection::vec(1usize..6, 1..5), q in prop::sample::select(vec![2u32, 3, 5])) {
        let lambda = Composition::new(parts).unwrap();
        let n = lambda.total();
        let p = prime(q);
        let g = branching_gamma(n, p, &lambda).unwrap();
        prop_assert_eq!(g, j_of_composition(&lambda, p));
        prop_assert!(g <= branching_gamma(n, p, &Composition::single(n)).unwrap());
        prop_assert_eq!(branching_gamma(n, p, &Composition::single(n)).unwrap(), p_valuation(n as u64, p).unwrap());
    }
}
