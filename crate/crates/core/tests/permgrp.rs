use axial_core::permgrp::{Perm, PermGroup, DEFAULT_NODE_CAP, NORMALIZER_DEGREE_CAP};
use proptest::prelude::*;

fn grp(n: usize, gens: &[&str]) -> PermGroup {
    PermGroup::from_cycles(n, gens).unwrap()
}

fn s4() -> PermGroup {
    PermGroup::symmetric(4)
}

fn normalizer(g: &PermGroup) -> PermGroup {
    g.normalizer_in_sym(NORMALIZER_DEGREE_CAP, DEFAULT_NODE_CAP).unwrap()
}

#[test]
fn orbit_examples() {
    assert_eq!(PermGroup::trivial(5).orbit(3), vec![3]);
    assert_eq!(grp(4, &["(0 1 2)"]).orbit(0), vec![0, 1, 2]);
    assert_eq!(s4().orbit(2), vec![0, 1, 2, 3]);
}

#[test]
fn stabilizer_examples() {
    let st = s4().stabilizer(0);
    assert_eq!(st.order(), 6);
    assert!(st.generators().iter().all(|g| g.apply(0) == 0));
    // brute force: elements of S4 fixing 0
    assert_eq!(s4().elements().iter().filter(|g| g.apply(0) == 0).count(), 6);
    assert!(PermGroup::trivial(3).stabilizer(1).is_trivial());
    assert!(grp(4, &["(0 1)(2 3)"]).stabilizer(0).is_trivial());
}

#[test]
fn centralizer_examples() {
    let t = Perm::parse_cycles(4, "(0 1)").unwrap();
    let c = s4().centralizer(&t).unwrap();
    assert_eq!(c.order(), 4);
    let brute = s4().elements().into_iter().filter(|h| &t * h == h * &t).count();
    assert_eq!(brute, 4);
    assert_eq!(s4().centralizer(&Perm::identity(4)).unwrap().order(), 24);
    let z4 = grp(4, &["(0 1 2 3)"]);
    let x = Perm::parse_cycles(4, "(0 1 2 3)").unwrap();
    assert_eq!(z4.centralizer(&x).unwrap().order(), 4);
    // not a member
    assert!(z4.centralizer(&t).is_err());
}

#[test]
fn core_examples() {
    let s3 = PermGroup::symmetric(3);
    assert!(s3.core_is_trivial(&[grp(3, &["(0 1)"])]));
    assert!(!s3.core_is_trivial(&[s3.clone()]));
    assert!(PermGroup::trivial(3).core_is_trivial(&[PermGroup::trivial(3)]));
    let v4 = grp(4, &["(0 1)", "(2 3)"]);
    assert!(!v4.core_is_trivial(&[grp(4, &["(0 1)"])]));
}

#[test]
fn normalizer_examples() {
    assert_eq!(normalizer(&PermGroup::trivial(3)).order(), 6);
    assert_eq!(normalizer(&grp(2, &["(0 1)"])).order(), 2);
    let reg = grp(4, &["(0 1)(2 3)", "(0 2)(1 3)"]);
    assert_eq!(normalizer(&reg).order(), 24);
}

/// Affine group of the plane over F_3 and its point-stabilizer-free part.
fn affine_3_2() -> PermGroup {
    // point (a, b) is 3a + b
    let idx = |a: usize, b: usize| 3 * (a % 3) + (b % 3);
    let mk = |f: &dyn Fn(usize, usize) -> usize| {
        Perm::from_images((0..9).map(|p| f(p / 3, p % 3)).collect()).unwrap()
    };
    let t1 = mk(&|a, b| idx(a + 1, b));
    let t2 = mk(&|a, b| idx(a, b + 1));
    let neg = mk(&|a, b| idx(3 - a, 3 - b));
    PermGroup::new(9, vec![t1, t2, neg]).unwrap()
}

#[test]
fn backtrack_normalizer_on_degree_nine() {
    // 3^2:2 on 9 points is normalized exactly by AGL(2,3) of order 432
    let g = affine_3_2();
    assert_eq!(g.order(), 18);
    let n = normalizer(&g);
    assert_eq!(n.order(), 432);
    for m in n.generators() {
        assert!(g.generators().iter().all(|x| g.contains(&x.conj(m))));
    }
}

#[test]
fn backtrack_matches_brute_force_for_small_degree() {
    // degree 8 goes through the brute-force path; shift to degree 9 with a
    // fixed point to force the backtrack and compare orders
    for gens in [vec!["(0 1)(2 3)"], vec!["(0 1 2)", "(3 4)"], vec!["(0 1 2 3)(4 5)"]] {
        let small = grp(8, &gens);
        let big = grp(9, &gens);
        let nb = normalizer(&small).order();
        let nk = normalizer(&big).order();
        // the extra fixed point is interchangeable with the other fixed points
        let fixed_small = (0..8).filter(|&p| small.orbit(p).len() == 1).count() as u128;
        assert_eq!(nk, nb * (fixed_small + 1));
    }
}

#[test]
fn normalizer_degree_cap() {
    assert!(PermGroup::trivial(30).normalizer_in_sym(24, DEFAULT_NODE_CAP).is_err());
}

#[test]
fn o2_and_subgroups() {
    assert_eq!(s4().o2().order(), 4);
    assert_eq!(PermGroup::symmetric(3).o2().order(), 1);
    let v4 = grp(4, &["(0 1)", "(2 3)"]);
    assert_eq!(v4.o2().order(), 4);
    // subgroups of S4 containing a transposition's centralizer (order 4):
    // itself, a D8, and S4
    let c = s4().centralizer(&Perm::parse_cycles(4, "(0 1)").unwrap()).unwrap();
    let subs = c.subgroups_up_to(&s4(), 64).unwrap();
    let orders: Vec<u128> = subs.iter().map(|s| s.order()).collect();
    assert_eq!(orders, vec![4, 8, 24]);
}

#[test]
fn set_stabilizer_and_intersection() {
    let st = s4().set_stabilizer(&[0, 1]);
    assert_eq!(st.order(), 4);
    let a = s4().stabilizer(0);
    let b = s4().stabilizer(1);
    assert_eq!(a.intersection(&b).order(), 2);
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn chain_order_matches_enumeration(gens in prop::collection::vec(perm_strategy(7), 0..3)) {
        let g = PermGroup::new(7, gens).unwrap();
        let by_closure = g.elements_by_closure();
        prop_assert_eq!(g.order(), by_closure.len() as u128);
        prop_assert!(by_closure.iter().all(|x| g.contains(x)));
    }

    #[test]
    fn orbit_stabilizer(gens in prop::collection::vec(perm_strategy(7), 1..3), p in 0usize..7) {
        let g = PermGroup::new(7, gens).unwrap();
        let st = g.stabilizer(p);
        prop_assert_eq!(g.order(), g.orbit(p).len() as u128 * st.order());
        prop_assert!(st.generators().iter().all(|h| h.apply(p) == p));
    }

    #[test]
    fn centralizer_commutes(gens in prop::collection::vec(perm_strategy(6), 1..3), k in 0usize..100) {
        let g = PermGroup::new(6, gens).unwrap();
        let elts = g.elements();
        let x = &elts[k % elts.len()];
        let c = g.centralizer(x).unwrap();
        prop_assert!(c.generators().iter().all(|h| &x.conj(h) == x));
        let brute = elts.iter().filter(|h| &(x * *h) == &(*h * x)).count();
        prop_assert_eq!(c.order(), brute as u128);
    }

    #[test]
    fn normalizer_contains_group(gens in prop::collection::vec(perm_strategy(6), 1..3)) {
        let g = PermGroup::new(6, gens).unwrap();
        let n = normalizer(&g);
        prop_assert!(g.is_subgroup_of(&n));
        for m in n.generators() {
            prop_assert!(g.generators().iter().all(|x| g.contains(&x.conj(m))));
        }
    }
}
