use std::collections::{BTreeMap, HashSet};

use axial_core::catalog::NsType;
use axial_core::permgrp::{Perm, PermGroup};
use axial_core::shapes::library::{standard_action, STANDARD_ACTIONS};
use axial_core::shapes::*;
use proptest::prelude::*;

fn cyc(n: usize, s: &str) -> Perm {
    Perm::parse_cycles(n, s).unwrap()
}

fn action(g: &str, axes: &str) -> AxisAction {
    standard_action(g, axes).unwrap_or_else(|| panic!("no action {} {}", g, axes))
}

fn all_perms(n: usize) -> Vec<Perm> {
    PermGroup::symmetric(n).elements()
}

/// Orbit of `p` under two permutations, by repeated application.
fn naive_orbit(p: usize, s: &Perm, t: &Perm) -> HashSet<usize> {
    let mut set = HashSet::from([p]);
    loop {
        let next: HashSet<usize> = set.iter().flat_map(|&q| [q, s.apply(q), t.apply(q)]).collect();
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

fn naive_admissible(tau: &[Perm]) -> bool {
    let n = tau.len();
    (0..n).all(|a| {
        (a + 1..n).all(|b| {
            let oa = naive_orbit(a, &tau[a], &tau[b]);
            let ob = naive_orbit(b, &tau[a], &tau[b]);
            let k = oa.len();
            k == ob.len() && if oa.contains(&b) { [1, 3, 5].contains(&k) } else { [1, 2, 3].contains(&k) }
        })
    })
}

#[test]
fn pair_type_size_examples() {
    let triv = AxisAction::new(PermGroup::trivial(3), vec![Perm::identity(3); 3]).unwrap();
    assert_eq!(triv.pair_type_size(1, 1), 1);
    assert_eq!(triv.pair_type_size(0, 2), 2);
    let s3 = action("S3", "1+3");
    let three = s3.orbits().iter().find(|o| o.len() == 3).unwrap();
    assert_eq!(s3.pair_type_size(three[0], three[1]), 3);
    assert_eq!(s3.pair_type_size(s3.orbits()[0][0], three[2]), 2);
}

#[test]
fn admissibility_examples() {
    let triv = AxisAction::new(PermGroup::trivial(3), vec![Perm::identity(3); 3]).unwrap();
    assert!(triv.is_admissible());
    // S3 on 1+3: identity on the fixed axis, transpositions on the others
    let t = |s: &str| cyc(4, s);
    let g = PermGroup::new(4, vec![t("(1 2)"), t("(2 3)")]).unwrap();
    let good = AxisAction::new(g.clone(), vec![Perm::identity(4), t("(2 3)"), t("(1 3)"), t("(1 2)")]).unwrap();
    assert!(good.is_admissible());
    // C2 swapping two axes whose tau is that same swap: orbit pattern (2, 2)
    // with a in b^D
    let c2 = PermGroup::new(2, vec![cyc(2, "(0 1)")]).unwrap();
    let bad = AxisAction::new(c2, vec![cyc(2, "(0 1)"); 2]).unwrap();
    assert!(!bad.is_admissible());
    assert!(!naive_admissible(bad.taus()));
}

#[test]
fn invalid_tau_rejected() {
    let g = PermGroup::symmetric(3);
    // not equivariant
    let e = AxisAction::new(g.clone(), vec![cyc(3, "(1 2)"), cyc(3, "(1 2)"), cyc(3, "(1 2)")]);
    assert!(matches!(e, Err(ShapeError::Invalid(_))));
    let e = AxisAction::new(g, vec![cyc(3, "(0 1 2)"); 3]);
    assert!(matches!(e, Err(ShapeError::Invalid(_))));
}

#[test]
fn trivial_group_has_only_identity_tau() {
    let tm = tau_maps(&PermGroup::trivial(3));
    assert!(tm.reduced);
    assert_eq!(tm.actions.len(), 1);
    assert!(tm.actions[0].taus().iter().all(|t| t.is_identity()));
}

/// All admissible tau-maps with each `tau_x` fixing `x` and generating the
/// group, by exhausting assignments; then orbits under the brute-force
/// normalizer.
fn brute_tau_count(g: &PermGroup) -> usize {
    let n = g.degree();
    let mut vals: Vec<Perm> = g.elements().into_iter().filter(|t| t.pow(2).is_identity()).collect();
    vals.sort();
    let mut maps: Vec<Vec<Perm>> = vec![vec![]];
    for x in 0..n {
        let mut next = Vec::new();
        for m in &maps {
            for v in vals.iter().filter(|v| v.apply(x) == x) {
                let mut m2 = m.clone();
                m2.push(v.clone());
                next.push(m2);
            }
        }
        maps = next;
    }
    let elts = g.elements();
    let good: Vec<Vec<Perm>> = maps
        .into_iter()
        .filter(|m| elts.iter().all(|h| (0..n).all(|x| m[h.apply(x)] == m[x].conj(h))))
        .filter(|m| PermGroup::generated_by(n, m.iter()).same_group(g))
        .filter(|m| naive_admissible(m))
        .collect();
    let norm: Vec<Perm> = all_perms(n).into_iter().filter(|s| g.generators().iter().all(|x| g.contains(&x.conj(s)))).collect();
    let mut seen: HashSet<Vec<Perm>> = HashSet::new();
    let mut count = 0;
    for m in good {
        if seen.contains(&m) {
            continue;
        }
        count += 1;
        for s in &norm {
            let mut img = m.clone();
            for x in 0..n {
                img[s.apply(x)] = m[x].conj(s);
            }
            seen.insert(img);
        }
    }
    count
}

#[test]
fn tau_maps_match_exhaustive_search() {
    for (g, axes) in [("1", "1+1+1"), ("2^2", "1+2+2"), ("2^2", "2+2+2a"), ("2^2", "2+2+2b"), ("S3", "1+3"), ("S4", "6")] {
        let act = action(g, axes);
        let tm = tau_maps(act.group());
        assert!(tm.reduced);
        assert_eq!(tm.actions.len(), brute_tau_count(act.group()), "{} {}", g, axes);
        assert_eq!(tm.actions.len(), 1);
    }
}

#[test]
fn tau_map_unique_for_every_standard_action() {
    for (g, axes) in STANDARD_ACTIONS {
        let act = action(g, axes);
        let tm = tau_maps(act.group());
        assert!(tm.reduced, "{} {}", g, axes);
        assert_eq!(tm.actions.len(), 1, "{} {}", g, axes);
        assert!(act.is_admissible());
        assert!(act.miyamoto_group().same_group(act.group()));
    }
}

#[test]
fn shape_graph_examples() {
    let triv = ShapeGraph::new(&action("1", "1+1+1"));
    assert_eq!(triv.nodes().len(), 3);
    assert!(triv.edges().is_empty());
    assert!(triv.choices().iter().all(|c| c.len() == 2));

    let s4 = ShapeGraph::new(&action("S4", "6"));
    let ns: Vec<usize> = s4.nodes().iter().map(|n| n.n).collect();
    assert_eq!(ns, vec![3, 2]);
    assert!(s4.edges().is_empty());

    // the 4-orbit of 2^2 on 1+2+2 carries its two dominated 2-orbits
    let g = ShapeGraph::new(&action("2^2", "1+2+2"));
    let comp = g.components().iter().position(|c| c.len() == 3).unwrap();
    let mut got: Vec<Vec<NsType>> = g.choices()[comp].clone();
    got.sort();
    assert_eq!(got, vec![vec![NsType::A4, NsType::B2, NsType::B2], vec![NsType::B4, NsType::A2, NsType::A2]]);
}

#[test]
fn table3_small_counts() {
    let rows = [
        ("1", "1+1+1", 4),
        ("2^2", "1+2+2", 6),
        ("S3", "1+3", 4),
        ("S4", "6", 4),
        ("S4", "3+6", 8),
        ("3^2:2", "9", 5),
        ("PSL(2,7)", "21", 4),
        ("4^2:S3", "12", 4),
    ];
    for (g, axes, count) in rows {
        let list = enumerate_shapes(&action(g, axes), 4);
        assert!(!list.upper_bound);
        assert_eq!(list.shapes.len(), count, "{} {}", g, axes);
    }
    // the two 2^2 actions on 2+2+2 give 2 and 6 shapes
    assert_eq!(enumerate_shapes(&action("2^2", "2+2+2a"), 4).shapes.len(), 2);
    assert_eq!(enumerate_shapes(&action("2^2", "2+2+2b"), 4).shapes.len(), 6);
    assert_eq!(enumerate_shapes(&action("2^3", "2+4+4"), 4).shapes.len(), 12);
}

#[test]
fn shape_strings_match_results_table() {
    let strings = |g: &str, a: &str| -> Vec<String> {
        enumerate_shapes(&action(g, a), 4).shapes.iter().map(|s| s.to_string()).collect()
    };
    assert_eq!(strings("S3", "1+3"), ["3A 2A", "3A 2B", "3C 2A", "3C 2B"]);
    assert_eq!(strings("1", "1+1+1"), ["(2A)^3", "(2A)^2 2B", "2A (2B)^2", "(2B)^3"]);
    assert_eq!(
        strings("2^2", "1+2+2"),
        ["4A (2A)^2", "4A 2A 2B", "4A (2B)^2", "4B (2A)^2", "4B 2A 2B", "4B (2B)^2"]
    );
    assert_eq!(strings("3^2:2", "9"), ["(3A)^4", "(3A)^3 3C", "(3A)^2 (3C)^2", "3A (3C)^3", "(3C)^4"]);
    assert_eq!(strings("4^2:S3", "12"), ["4A 3A", "4A 3C", "4B 3A", "4B 3C"]);
    let list = enumerate_shapes(&action("2^2", "1+2+2"), 4);
    assert!(list.shapes[1].matches("4A 2B 2A"));
    assert!(list.shapes[0].matches("4A^1 2A^2"));
    assert!(!list.shapes[0].matches("4A 2A"));
}

#[test]
fn forbidden_examples() {
    let list = enumerate_shapes(&action("S3", "1+3"), 4);
    let flags: BTreeMap<String, bool> = list.shapes.iter().map(|s| (s.to_string(), s.forbidden().is_some())).collect();
    assert_eq!(flags["3C 2A"], true);
    assert_eq!(flags["3A 2A"], false);
    assert_eq!(flags["3A 2B"], false);
    assert_eq!(flags["3C 2B"], false);
    // rebuilt by hand: 3A beside 2B is a direct sum and allowed
    let g = list.graph.clone();
    let two = g.nodes().iter().position(|n| n.n == 2).unwrap();
    let three = g.nodes().iter().position(|n| n.n == 3).unwrap();
    let mut types = vec![NsType::A2; 2];
    types[three] = NsType::A3;
    types[two] = NsType::B2;
    let s = Shape::new(g, types).unwrap();
    assert!(s.forbidden().is_none());
}

#[test]
fn forbidden_5a_2a() {
    // D10 on 1+5 axes: 5A on the 5-orbit, 2A to the fixed axis
    let r = |s: &str| cyc(6, s);
    let g = PermGroup::new(6, vec![r("(2 5)(3 4)"), r("(1 2)(3 5)")]).unwrap();
    let refl = |x: usize| -> Perm {
        // the reflection of the pentagon 1..5 fixing x
        let k = x - 1;
        let img: Vec<usize> = (0..6).map(|p| if p == 0 { 0 } else { 1 + (2 * k + 5 - (p - 1)) % 5 }).collect();
        Perm::from_images(img).unwrap()
    };
    let mut tau = vec![Perm::identity(6)];
    tau.extend((1..6).map(refl));
    let act = AxisAction::new(g, tau).unwrap();
    assert!(act.is_admissible());
    let graph = std::sync::Arc::new(ShapeGraph::new(&act));
    assert_eq!(graph.max_n(), 5);
    assert!(enumerate_shapes(&act, 4).shapes.is_empty());
    let all = enumerate_with(graph, act.group(), 6, false);
    let flags: BTreeMap<String, bool> = all.shapes.iter().map(|s| (s.to_string(), s.forbidden().is_some())).collect();
    assert_eq!(flags.len(), 2);
    assert!(flags["(5A)^2 2A"]);
    assert!(!flags["(5A)^2 2B"]);
}

#[test]
fn configuration_examples() {
    let e = Perm::identity(1);
    let acts = axis_configurations(&PermGroup::trivial(1), [&e, &e, &e]).unwrap();
    assert_eq!(acts.len(), 1);
    assert_eq!(acts[0].orbit_sizes(), vec![1, 1, 1]);

    let s3 = PermGroup::symmetric(3);
    let (i, y, z) = (Perm::identity(3), cyc(3, "(0 1)"), cyc(3, "(1 2)"));
    let acts = axis_configurations(&s3, [&i, &y, &z]).unwrap();
    // the disjoint 1+3+3 option would create a 6A and is dropped
    let sizes: Vec<Vec<usize>> = acts.iter().map(|a| a.orbit_sizes()).collect();
    assert_eq!(sizes, vec![vec![1, 3]]);
    assert_eq!(acts[0].generators().len(), 3);

    let err = axis_configurations(&s3, [&i, &y, &y]);
    assert_eq!(err.unwrap_err(), ShapeError::NotGenerated);
    let err = axis_configurations(&s3, [&i, &y, &cyc(3, "(0 1 2)")]);
    assert_eq!(err.unwrap_err(), ShapeError::NotGenerated);
}

#[test]
fn unique_axes_get_full_centralizer() {
    // transpositions of S4 have products of order 3, so each axis is fixed
    // exactly by the centralizer of its involution
    let act = action("S4", "6");
    for x in 0..act.degree() {
        let c = act.group().centralizer(act.tau(x)).unwrap();
        assert!(c.same_group(&act.group().stabilizer(x)));
    }
}

/// Orbit count of consistent assignments under brute-force `K`, with
/// domination computed pair by pair.
fn brute_shape_count(act: &AxisAction) -> usize {
    let n = act.degree();
    let g = act.group();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let elts = g.elements();
    let orbit_of = |p: (usize, usize)| -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = elts
            .iter()
            .map(|h| {
                let (c, d) = (h.apply(p.0), h.apply(p.1));
                (c.min(d), c.max(d))
            })
            .collect();
        v.sort();
        v.dedup();
        v
    };
    let mut nodes: Vec<Vec<(usize, usize)>> = Vec::new();
    for &p in &pairs {
        if !nodes.iter().any(|o| o.contains(&p)) {
            nodes.push(orbit_of(p));
        }
    }
    let node = |p: (usize, usize)| nodes.iter().position(|o| o.contains(&(p.0.min(p.1), p.0.max(p.1)))).unwrap();
    let size = |p: (usize, usize)| {
        let (t, u) = (act.tau(p.0), act.tau(p.1));
        let mut s = naive_orbit(p.0, t, u);
        s.extend(naive_orbit(p.1, t, u));
        s
    };
    let opts = |k: usize| -> Vec<NsType> { NsType::ALL.iter().copied().filter(|t| t.n() == k).collect() };
    let mut assigns: Vec<Vec<NsType>> = vec![vec![]];
    for o in &nodes {
        let k = size(o[0]).len();
        assigns = assigns.into_iter().flat_map(|a| opts(k).into_iter().map(move |t| [a.clone(), vec![t]].concat())).collect();
    }
    let consistent = |a: &Vec<NsType>| {
        pairs.iter().all(|&p| {
            let tp = a[node(p)];
            let set: Vec<usize> = size(p).into_iter().collect();
            set.iter().all(|&c| {
                set.iter().filter(|&&d| d != c).all(|&d| {
                    let tq = a[node((c, d))];
                    tq == tp || tp.dominates(tq)
                })
            })
        })
    };
    let good: Vec<Vec<NsType>> = assigns.into_iter().filter(consistent).collect();
    let k: Vec<Perm> = all_perms(n)
        .into_iter()
        .filter(|s| g.generators().iter().all(|x| g.contains(&x.conj(s))))
        .filter(|s| (0..n).all(|x| act.tau(s.apply(x)) == &act.tau(x).conj(s)))
        .collect();
    let mut seen = HashSet::new();
    let mut count = 0;
    for a in good {
        if seen.contains(&a) {
            continue;
        }
        count += 1;
        for s in &k {
            let mut img = a.clone();
            for (i, o) in nodes.iter().enumerate() {
                let (c, d) = (s.apply(o[0].0), s.apply(o[0].1));
                img[node((c, d))] = a[i];
            }
            seen.insert(img);
        }
    }
    count
}

#[test]
fn shape_counts_match_brute_force() {
    for (g, axes) in [("1", "1+1+1"), ("2^2", "1+2+2"), ("2^2", "2+2+2a"), ("2^2", "2+2+2b"), ("S3", "1+3"), ("S4", "6")] {
        let act = action(g, axes);
        assert_eq!(enumerate_shapes(&act, 4).shapes.len(), brute_shape_count(&act), "{} {}", g, axes);
    }
}

fn relabel(act: &AxisAction, s: &Perm) -> AxisAction {
    let n = act.degree();
    let gens: Vec<Perm> = act.group().generators().iter().map(|g| g.conj(s)).collect();
    let g = PermGroup::new(n, gens).unwrap();
    AxisAction::new(g, act.conjugate_tau(s)).unwrap()
}

/// A random permutation of `0..n`, read off a shuffle of a longer range.
fn restrict(shuffle: &[usize], n: usize) -> Perm {
    Perm::from_images(shuffle.iter().copied().filter(|&p| p < n).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn counts_invariant_under_relabeling(
        which in 0usize..8,
        shuffle in Just((0usize..32).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let (g, axes) = STANDARD_ACTIONS[which];
        let act = action(g, axes);
        let s = restrict(&shuffle, act.degree());
        let moved = relabel(&act, &s);
        prop_assert!(moved.is_admissible());
        let a = enumerate_shapes(&act, 4);
        let b = enumerate_shapes(&moved, 4);
        prop_assert_eq!(a.shapes.len(), b.shapes.len());
        let mut sa: Vec<String> = a.shapes.iter().map(|x| x.to_string()).collect();
        let mut sb: Vec<String> = b.shapes.iter().map(|x| x.to_string()).collect();
        sa.sort();
        sb.sort();
        prop_assert_eq!(sa, sb);
    }

    #[test]
    fn shapes_respect_domination(which in 0usize..STANDARD_ACTIONS.len()) {
        let (g, axes) = STANDARD_ACTIONS[which];
        let list = enumerate_shapes(&action(g, axes), 4);
        for s in &list.shapes {
            // rebuilding through the checked constructor must succeed
            prop_assert!(Shape::new(list.graph.clone(), s.types().to_vec()).is_some());
            for &(p, q) in list.graph.edges() {
                let (tp, tq) = (s.types()[p], s.types()[q]);
                prop_assert!(tp == tq || tp.dominates(tq));
            }
            // constant on pair orbits by construction; check on every pair
            let act = s.action();
            for a in 0..act.degree() {
                for b in a + 1..act.degree() {
                    prop_assert_eq!(s.pair_type(a, b).n(), act.pair_type_size(a, b));
                }
            }
        }
    }
}
