use liecx::checks::random_bracketing;
use std::collections::BTreeMap;

use liecx::freelie::{
    action_matrix, associative_expansion, lie_module_rep, lyndon_basis, normal_form,
    normal_form_by_expansion, BracketTree, LieElement,
};
use liecx::{Composition, Perm, Prime};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn prime(p: u32) -> Prime {
    Prime::new(p).unwrap()
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn tree_strategy(n: usize) -> impl Strategy<Value = BracketTree> {
    any::<u64>().prop_map(move |seed| random_bracketing(n, &mut ChaCha8Rng::seed_from_u64(seed)))
}

fn neg(e: &LieElement) -> LieElement {
    let mut out = LieElement::zero(e.n, e.p);
    for (&i, &c) in &e.coeffs {
        out.add_term(i, e.p.neg(c));
    }
    out
}

#[test]
fn every_bracketing_on_four_letters_matches_expansion() {
    // all shapes on every arrangement
    fn shapes(letters: &[usize]) -> Vec<BracketTree> {
        if letters.len() == 1 {
            return vec![BracketTree::leaf(letters[0])];
        }
        let mut out = Vec::new();
        for k in 1..letters.len() {
            for l in shapes(&letters[..k]) {
                for r in shapes(&letters[k..]) {
                    out.push(BracketTree::bracket(l.clone(), r));
                }
            }
        }
        out
    }
    let p = prime(3);
    let mut letters = vec![1usize, 2, 3, 4];
    let mut count = 0;
    loop {
        for t in shapes(&letters) {
            assert_eq!(
                normal_form(&t, 4, p).unwrap(),
                normal_form_by_expansion(&t, 4, p).unwrap(),
                "{t}"
            );
            count += 1;
        }
        // next arrangement in lexicographic order
        let Some(i) = (0..letters.len() - 1)
            .rev()
            .find(|&i| letters[i] < letters[i + 1])
        else {
            break;
        };
        let j = (i + 1..letters.len())
            .rev()
            .find(|&j| letters[j] > letters[i])
            .unwrap();
        letters.swap(i, j);
        letters[i + 1..].reverse();
    }
    assert_eq!(count, 24 * 5);
}

#[test]
fn generators_of_lie_four_satisfy_coxeter_relations_for_all_primes() {
    for q in [2, 3, 5, 7] {
        let rep = lie_module_rep(4, prime(q), &"4".parse::<Composition>().unwrap()).unwrap();
        assert_eq!(rep.dim, 6);
    }
}

#[test]
fn basis_text_round_trips() {
    for n in 1..=6 {
        for t in lyndon_basis(n).unwrap() {
            assert_eq!(t.to_string().parse::<BracketTree>().unwrap(), t);
        }
    }
}

proptest! {
    #[test]
    fn normal_form_matches_expansion(n in 2usize..=5, q in prop::sample::select(vec![2u32, 3, 5, 7]), seed in any::<u64>()) {
        let t = random_bracketing(n, &mut ChaCha8Rng::seed_from_u64(seed));
        let p = prime(q);
        prop_assert_eq!(normal_form(&t, n, p).unwrap(), normal_form_by_expansion(&t, n, p).unwrap());
    }

    #[test]
    fn normal_forms_add_linearly(
        (n, a, b) in (2usize..=5).prop_flat_map(|n| (Just(n), tree_strategy(n), tree_strategy(n))),
        q in prop::sample::select(vec![2u32, 3, 5]),
    ) {
        // coordinates of a + b must rebuild the associative expansion of a + b
        let p = prime(q);
        let sum = normal_form(&a, n, p).unwrap().add(&normal_form(&b, n, p).unwrap());
        let basis = lyndon_basis(n).unwrap();
        let mut rebuilt = BTreeMap::new();
        for (&i, &c) in &sum.coeffs {
            add_scaled(&mut rebuilt, &associative_expansion(&basis[i], p), c, p);
        }
        let mut direct = BTreeMap::new();
        add_scaled(&mut direct, &associative_expansion(&a, p), 1, p);
        add_scaled(&mut direct, &associative_expansion(&b, p), 1, p);
        prop_assert_eq!(rebuilt, direct);
    }

    #[test]
    fn normal_form_is_antisymmetric(n in 2usize..=6, seed in any::<u64>(), q in prop::sample::select(vec![2u32, 3, 5])) {
        let p = prime(q);
        let c = random_bracketing(n, &mut ChaCha8Rng::seed_from_u64(seed));
        if let BracketTree::Node(l, r) = &c {
            let swapped = BracketTree::bracket((**r).clone(), (**l).clone());
            prop_assert_eq!(normal_form(&swapped, n, p).unwrap(), neg(&normal_form(&c, n, p).unwrap()));
        }
    }

    #[test]
    fn jacobi_sums_vanish(
        (n, k1, k2) in (3usize..=6).prop_flat_map(|n| (Just(n), 1..n - 1, 0usize..1000)),
        seed in any::<u64>(),
        q in prop::sample::select(vec![2u32, 3, 5]),
    ) {
        let p = prime(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_bracketing(n, &mut rng);
        let letters = t.leaves();
        // split the letters into three nonempty runs and bracket each
        let cut2 = k1 + 1 + k2 % (n - k1 - 1);
        let x = random_bracketing_on(&letters[..k1], &mut rng);
        let y = random_bracketing_on(&letters[k1..cut2], &mut rng);
        let z = random_bracketing_on(&letters[cut2..], &mut rng);
        let br = |a: &BracketTree, b: &BracketTree| BracketTree::bracket(a.clone(), b.clone());
        let total = normal_form(&br(&x, &br(&y, &z)), n, p).unwrap()
            .add(&normal_form(&br(&y, &br(&z, &x)), n, p).unwrap())
            .add(&normal_form(&br(&z, &br(&x, &y)), n, p).unwrap());
        prop_assert!(total.is_zero());
    }

    #[test]
    fn action_is_a_homomorphism(
        (n, s, t) in (1usize..=6).prop_flat_map(|n| (Just(n), perm_strategy(n), perm_strategy(n))),
        q in prop::sample::select(vec![2u32, 3, 5]),
    ) {
        let p = prime(q);
        let lhs = action_matrix(n, p, &s.compose(&t)).unwrap();
        let rhs = action_matrix(n, p, &s).unwrap().mul(&action_matrix(n, p, &t).unwrap(), p);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracketing_text_round_trips(n in 1usize..=9, seed in any::<u64>()) {
        let t = random_bracketing(n, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(t.to_string().parse::<BracketTree>().unwrap(), t);
    }
}

fn random_bracketing_on(letters: &[usize], rng: &mut ChaCha8Rng) -> BracketTree {
    let shape = random_bracketing(letters.len(), rng);
    relabel(&shape, letters)
}

fn relabel(t: &BracketTree, letters: &[usize]) -> BracketTree {
    match t {
        BracketTree::Leaf(a) => BracketTree::leaf(letters[a - 1]),
        BracketTree::Node(l, r) => BracketTree::bracket(relabel(l, letters), relabel(r, letters)),
    }
}

fn add_scaled(acc: &mut BTreeMap<Vec<u8>, u32>, terms: &BTreeMap<Vec<u8>, u32>, c: u32, p: Prime) {
    for (w, &x) in terms {
        let e = acc.entry(w.clone()).or_insert(0);
        *e = p.add(*e, p.mul(x, c));
        if *e == 0 {
            acc.remove(w);
        }
    }
}
