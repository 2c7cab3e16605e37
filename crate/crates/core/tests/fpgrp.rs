use axial_core::fpgrp::*;
use axial_core::permgrp::{GroupOps, Perm, PermGroup};

fn order(text: &str) -> usize {
    group_order(&Presentation::parse(text).unwrap(), EnumOptions::default()).unwrap()
}

fn regular(p: &Presentation) -> RegularGroup {
    RegularGroup::from_presentation(p, EnumOptions::default()).unwrap()
}

fn triple(g: &RegularGroup) -> [u32; 3] {
    [g.generator(0), g.generator(1), g.generator(2)]
}

#[test]
fn parse_examples() {
    let p = Presentation::parse("<x | x^2>").unwrap();
    assert_eq!(p.generators, vec!["x"]);
    assert_eq!(p.relators, vec![vec![1, 1]]);
    let g1 = Presentation::parse("<x,y,z | x^2,y^2,z^2,(x*y)^3,(x*z)^3,(y*z)^3,(x*y^z)^3>").unwrap();
    assert_eq!(g1, cover("G1").unwrap().presentation());
    let w = g1.word("(x*y^z)^4").unwrap();
    assert_eq!(w.len(), 16);
    assert!(matches!(
        Presentation::parse("<x | y^2>"),
        Err(FpError::UnknownGenerator { .. })
    ));
}

#[test]
fn enumeration_examples() {
    assert_eq!(order("<x | x^2>"), 2);
    assert_eq!(order("<x,y | x^2, y^2, (x*y)^3>"), 6);
    assert_eq!(group_order(&cover("G1").unwrap().presentation(), EnumOptions::default()).unwrap(), 54);
    let g8 = quotient("G''8").unwrap().presentation();
    assert_eq!(group_order(&g8, EnumOptions::default()).unwrap(), 1152);
    // index of a subgroup
    let s3 = Presentation::parse("<x,y | x^2, y^2, (x*y)^3>").unwrap();
    let t = coset_enumerate(&s3, &[s3.word("x").unwrap()], EnumOptions::default()).unwrap();
    assert_eq!(t.index(), 3);
}

#[test]
fn coset_cap_is_inconclusive() {
    let free = Presentation::parse("<x,y | x^2>").unwrap();
    let opts = EnumOptions { strategy: Strategy::Felsch, cap: 1000 };
    assert!(matches!(coset_enumerate(&free, &[], opts), Err(FpError::Inconclusive { .. })));
}

#[test]
fn perm_rep_examples() {
    let t = coset_enumerate(&Presentation::parse("<x | x^2>").unwrap(), &[], EnumOptions::default()).unwrap();
    let g = t.perm_rep().unwrap();
    assert_eq!(g.generators(), &[Perm::parse_cycles(2, "(0 1)").unwrap()]);
    let p1 = cover("G1").unwrap().presentation();
    let t1 = coset_enumerate(&p1, &[], EnumOptions::default()).unwrap();
    let g1 = t1.perm_rep().unwrap();
    assert_eq!((g1.degree(), g1.order()), (54, 54));
    let s3 = coset_enumerate(
        &Presentation::parse("<x,y|x^2,y^2,(x*y)^3>").unwrap(),
        &[],
        EnumOptions::default(),
    )
    .unwrap();
    assert_eq!(s3.perm_rep().unwrap().order(), 6);
}

#[test]
fn table1_orders_strategies_and_relators() {
    for g in COVER_GROUPS.iter().filter(|g| g.order <= 2304) {
        let p = g.presentation();
        let f = coset_enumerate(&p, &[], EnumOptions::default()).unwrap();
        let h = coset_enumerate(&p, &[], EnumOptions { strategy: Strategy::Hlt, cap: DEFAULT_COSET_CAP }).unwrap();
        assert_eq!(f.index(), g.order, "{}", g.name);
        assert_eq!(h.index(), g.order, "{}", g.name);
        // standard numbering makes the tables identical
        assert_eq!(f.image(0, 0), h.image(0, 0));
        assert!(satisfies_relators(&f, &p), "{}", g.name);
    }
}

#[test]
fn four_transposition_flags() {
    for g in COVER_GROUPS.iter().filter(|g| g.order <= 2304) {
        let rg = regular(&g.presentation());
        let reps = triple(&rg);
        let k4 = is_k_transposition(&rg, &reps, 4).unwrap();
        assert_eq!(k4, g.four_transposition, "{}", g.name);
        if k4 {
            assert!(is_k_transposition(&rg, &reps, 5).unwrap());
        }
    }
    let z2 = regular(&Presentation::parse("<x | x^2>").unwrap());
    assert!(is_k_transposition(&z2, &[z2.generator(0)], 2).unwrap());
    let s3 = regular(&Presentation::parse("<x,y | x^2, y^2, (x*y)^3>").unwrap());
    assert!(is_k_transposition(&s3, &[s3.generator(0)], 3).unwrap());
    assert!(!is_k_transposition(&s3, &[s3.generator(0)], 2).unwrap());
    assert!(is_k_transposition(&s3, &[s3.generator(0)], 2).is_ok());
    let xy = s3.mul(&s3.generator(0), &s3.generator(1));
    assert!(matches!(is_k_transposition(&s3, &[xy], 3), Err(FpError::NotInvolution(_))));
}

#[test]
fn four_transposition_flags_on_perm_groups() {
    // the same test through the permutation representation
    let p = cover("G2").unwrap().presentation();
    let g = coset_enumerate(&p, &[], EnumOptions::default()).unwrap().perm_rep().unwrap();
    let reps: Vec<Perm> = g.generators().to_vec();
    assert!(is_k_transposition(&g, &reps, 4).unwrap());
    assert!(!is_k_transposition(&g, &reps, 3).unwrap());
    let s4 = PermGroup::symmetric(4);
    let t = Perm::parse_cycles(4, "(0 1)").unwrap();
    assert!(is_k_transposition(&s4, &[t], 3).unwrap());
}

#[test]
fn similarity() {
    let g1 = regular(&cover("G1").unwrap().presentation());
    let g2 = regular(&cover("G2").unwrap().presentation());
    let g3 = regular(&cover("G3").unwrap().presentation());
    assert!(similar(&g2, &triple(&g2), &g2, &triple(&g2), SIMILARITY_ORDER_CAP).unwrap());
    assert!(similar(&g2, &triple(&g2), &g3, &triple(&g3), SIMILARITY_ORDER_CAP).unwrap());
    assert!(similar(&g3, &triple(&g3), &g2, &triple(&g2), SIMILARITY_ORDER_CAP).unwrap());
    assert!(!similar(&g1, &triple(&g1), &g2, &triple(&g2), SIMILARITY_ORDER_CAP).unwrap());
    // mixed representations: G2 as a permutation group against its regular form
    let p2 = coset_enumerate(&cover("G2").unwrap().presentation(), &[], EnumOptions::default())
        .unwrap()
        .perm_rep()
        .unwrap();
    let t2: [Perm; 3] = [0, 1, 2].map(|i| p2.generators()[i].clone());
    assert!(similar(&p2, &t2, &g3, &triple(&g3), SIMILARITY_ORDER_CAP).unwrap());
}

#[test]
fn similar_groups_of_equal_order() {
    let names = [["G4", "G7"], ["G7", "G9"]];
    for [a, b] in names {
        let ga = regular(&cover(a).unwrap().presentation());
        let gb = regular(&cover(b).unwrap().presentation());
        assert!(similar(&ga, &triple(&ga), &gb, &triple(&gb), SIMILARITY_ORDER_CAP).unwrap(), "{} {}", a, b);
    }
}
