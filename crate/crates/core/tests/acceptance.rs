//! The acceptance gate: one line per criterion, then a single verdict.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use axial_core::catalog::{ns_algebra, Algebra, FusionLaw, NsType};
use axial_core::engine::{construct, is_ideal, radical_quotient, Caps, CompletedAlgebra, FormFlag, Status};
use axial_core::fpgrp::EnumOptions;
use axial_core::golden::{self, Outcome};
use axial_core::permgrp::{Perm, PermGroup};
use axial_core::ratlin::{EchelonSpace, Matrix, Scalar, SparseVec};
use axial_core::shapes::library::standard_action;
use axial_core::shapes::{enumerate_shapes, enumerate_with, tau_maps, AxisAction, Shape, ShapeGraph};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Verdict = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, format!("{} took {:.1?}, limit {:?}", what, t, limit))
}

fn find_shape(group: &str, axes: &str, text: &str) -> Shape {
    let act = standard_action(group, axes).unwrap();
    enumerate_shapes(&act, 4).shapes.into_iter().find(|s| s.to_string() == text).unwrap()
}

/// Actions named by the shape count criterion with their counts.
const COUNTS: [(&str, &str, usize); 8] = [
    ("1", "1+1+1", 4),
    ("2^2", "1+2+2", 6),
    ("S3", "1+3", 4),
    ("S4", "6", 4),
    ("S4", "3+6", 8),
    ("3^2:2", "9", 5),
    ("PSL(2,7)", "21", 4),
    ("4^2:S3", "12", 4),
];

/// The fast subset: (group, axes, shape, dim, m, form).
const FAST: [(&str, &str, &str, usize, usize, FormFlag); 19] = [
    ("1", "1+1+1", "(2B)^3", 3, 1, FormFlag::Pos),
    ("1", "1+1+1", "2A (2B)^2", 4, 2, FormFlag::Pos),
    ("1", "1+1+1", "(2A)^2 2B", 6, 3, FormFlag::Pos),
    ("S3", "1+3", "3A 2A", 8, 2, FormFlag::Pos),
    ("S3", "1+3", "3A 2B", 5, 2, FormFlag::Pos),
    ("S3", "1+3", "3C 2B", 4, 1, FormFlag::Pos),
    ("2^2", "1+2+2", "4A (2A)^2", 14, 3, FormFlag::Semi),
    ("2^2", "1+2+2", "4A 2A 2B", 10, 3, FormFlag::Pos),
    ("2^2", "1+2+2", "4A (2B)^2", 6, 2, FormFlag::Pos),
    ("2^2", "1+2+2", "4B (2A)^2", 5, 1, FormFlag::Pos),
    ("2^2", "1+2+2", "4B 2A 2B", 8, 2, FormFlag::Pos),
    ("2^2", "1+2+2", "4B (2B)^2", 6, 2, FormFlag::Pos),
    ("S4", "6", "3A 2A", 13, 2, FormFlag::Pos),
    ("S4", "6", "3A 2B", 13, 3, FormFlag::Pos),
    ("S4", "6", "3C 2A", 9, 2, FormFlag::Pos),
    ("S4", "6", "3C 2B", 6, 1, FormFlag::Pos),
    ("3^2:2", "9", "3A (3C)^3", 12, 2, FormFlag::Pos),
    ("3^2:2", "9", "(3C)^4", 9, 1, FormFlag::Pos),
    ("3^2:2", "9", "(3A)^3 3C", 0, 0, FormFlag::None),
];

fn c1_catalog() -> Verdict {
    let start = Instant::now();
    let law = FusionLaw::monster();
    for k in NsType::ALL {
        let r = ns_algebra(k).verify(&law);
        ensure(r.ok(), format!("{} has defects: {:?}", k, r))?;
    }
    within(start, Duration::from_secs(1), "catalog")?;
    Ok(format!("8 types pass in {:.0?}", start.elapsed()))
}

fn c2_orbit_law() -> Verdict {
    let start = Instant::now();
    let law = FusionLaw::monster();
    let mut seen = Vec::new();
    for k in NsType::ALL {
        let r = ns_algebra(k).verify(&law);
        let (a, b) = r.orbit_sizes;
        // equal sizes from {1, 3, 5} when a0, a1 share an orbit, else from {1, 2, 3}
        let fused = k.n() % 2 == 1;
        let allowed: &[usize] = if fused { &[1, 3, 5] } else { &[1, 2, 3] };
        ensure(r.orbit_law_ok && allowed.contains(&a) && allowed.contains(&b), format!("{}: {:?}", k, r.orbit_sizes))?;
        seen.push(format!("{}:{}/{}", k, a, b));
    }
    within(start, Duration::from_secs(1), "orbit law")?;
    Ok(seen.join(" "))
}

fn c3_cosets() -> Verdict {
    let rows = golden::table1();
    let want: BTreeMap<&str, usize> = [
        ("G1", 54),
        ("G2", 96),
        ("G3", 96),
        ("G4", 336),
        ("G5", 2),
        ("G6", 384),
        ("G7", 336),
        ("G8", 2304),
        ("G9", 336),
        ("G10", 2304),
        ("G11", 2304),
        ("G12", 2304),
        ("G13", 7776),
        ("G14", 32768),
        ("G''8", 1152),
        ("G''10", 1152),
        ("G''11", 1152),
        ("G''12", 1152),
        ("G''13", 3888),
        ("G'14", 8192),
    ]
    .into_iter()
    .collect();
    let mut checked = 0;
    for row in &rows {
        let start = Instant::now();
        let (order, flag) = golden::group_values(&row.kind, &row.name, EnumOptions::default())?;
        let limit = if order > 2304 { 900 } else { 60 };
        within(start, Duration::from_secs(limit), &row.name)?;
        ensure(order == row.order, format!("{} order {} expected {}", row.name, order, row.order))?;
        ensure((if flag { "y" } else { "n" }) == row.four_trans, format!("{} 4-trans flag {}", row.name, flag))?;
        if let Some(&w) = want.get(row.name.as_str()) {
            ensure(order == w, format!("{} order {} expected {}", row.name, order, w))?;
            checked += 1;
        }
    }
    ensure(checked == want.len(), format!("only {} of {} named groups present", checked, want.len()))?;
    Ok(format!("{} groups, orders and flags agree", rows.len()))
}

fn c4_shape_counts() -> Verdict {
    for (g, x, want) in COUNTS {
        let start = Instant::now();
        let act = standard_action(g, x).ok_or(format!("no action {} {}", g, x))?;
        let list = enumerate_shapes(&act, 4);
        within(start, Duration::from_secs(60), &format!("{} {}", g, x))?;
        ensure(!list.upper_bound && list.shapes.len() == want, format!("{} {}: {} shapes, want {}", g, x, list.shapes.len(), want))?;
    }
    Ok(format!("{} actions", COUNTS.len()))
}

fn c5_tau_maps() -> Verdict {
    for (g, x, _) in COUNTS {
        let act = standard_action(g, x).unwrap();
        let tm = tau_maps(act.group());
        ensure(tm.reduced, format!("{} {}: normalizer out of reach", g, x))?;
        ensure(tm.actions.len() == 1, format!("{} {}: {} tau-maps", g, x, tm.actions.len()))?;
    }
    Ok("one admissible tau-map per action".into())
}

fn d10_action() -> AxisAction {
    let r = |s: &str| Perm::parse_cycles(6, s).unwrap();
    let g = PermGroup::new(6, vec![r("(2 5)(3 4)"), r("(1 2)(3 5)")]).unwrap();
    let refl = |k: usize| -> Perm {
        let img: Vec<usize> = (0..6).map(|p| if p == 0 { 0 } else { 1 + (2 * k + 5 - (p - 1)) % 5 }).collect();
        Perm::from_images(img).unwrap()
    };
    let mut tau = vec![Perm::identity(6)];
    tau.extend((0..5).map(refl));
    AxisAction::new(g, tau).unwrap()
}

fn c6_forbidden() -> Verdict {
    let s = find_shape("S3", "1+3", "3C 2A");
    ensure(s.forbidden().is_some(), "3C 2A not flagged")?;
    let act = d10_action();
    let graph = std::sync::Arc::new(ShapeGraph::new(&act));
    let all = enumerate_with(graph, act.group(), 6, false);
    let five = all.shapes.iter().find(|s| s.to_string() == "(5A)^2 2A").ok_or("no (5A)^2 2A shape")?;
    ensure(five.forbidden().is_some(), "5A 2A not flagged")?;
    let r = construct(&s, Caps::default()).map_err(|e| e.to_string())?;
    ensure(r.status == Status::Collapsed, format!("S3 3C 2A gave {:?}", r.status))?;
    Ok("3C2A and 5A2A flagged, S3 3C2A collapses".into())
}

fn c7_fast_subset(built: &mut Vec<(Shape, CompletedAlgebra)>) -> Verdict {
    let suite = Instant::now();
    let table: Vec<_> = golden::table4();
    for (g, x, text, dim, m, form) in FAST {
        let start = Instant::now();
        let s = find_shape(g, x, text);
        let r = construct(&s, Caps::default()).map_err(|e| e.to_string())?;
        within(start, Duration::from_secs(600), text)?;
        let row = table.iter().find(|r| r.group == g && r.axes == x && r.shape == text).ok_or(format!("{} not in table", text))?;
        ensure(row.expected_dim() == Some(dim), format!("{} {} {}: transcription disagrees", g, x, text))?;
        let label = format!("{} {} {}", g, x, text);
        if dim == 0 {
            ensure(r.status == Status::Collapsed, format!("{}: {:?}", label, r.status))?;
            continue;
        }
        let a = r.algebra.ok_or(format!("{}: {:?}", label, r.status))?;
        let got = (a.dim(), a.m_closure, a.frobenius.flag);
        ensure(got == (dim, Some(m), form), format!("{}: got {:?}", label, got))?;
        ensure(a.checks.ok(), format!("{}: {:?}", label, a.checks))?;
        built.push((s, a));
    }
    within(suite, Duration::from_secs(7200), "fast subset")?;
    Ok(format!("{} rows in {:.1?}", FAST.len(), suite.elapsed()))
}

fn generated_dim(alg: &Algebra, gens: &[SparseVec]) -> usize {
    let mut s = EchelonSpace::new();
    let mut list: Vec<SparseVec> = gens.iter().filter(|g| s.insert(g).is_some()).cloned().collect();
    let mut k = 0;
    while k < list.len() {
        for j in 0..=k {
            let x = alg.mul(&list[k], &list[j]);
            if s.insert(&x).is_some() {
                list.push(x);
            }
        }
        k += 1;
    }
    s.dim()
}

fn c8_quotients() -> Verdict {
    let law = FusionLaw::monster();
    let mut dims = Vec::new();
    for (g, x, text, dim, qdim) in [("2^2", "1+2+2", "4A (2A)^2", 14, 11), ("2^3", "2+4+4", "(4A)^2 (4B)^2 (2A)^2", 16, 13)] {
        let s = find_shape(g, x, text);
        let a = construct(&s, Caps::default()).map_err(|e| e.to_string())?.algebra.ok_or("incomplete")?;
        ensure(a.dim() == dim && a.frobenius.flag == FormFlag::Semi, format!("{}: dim {} {}", text, a.dim(), a.frobenius.flag))?;
        ensure(a.frobenius.radical.len() == 3, format!("{}: radical {}", text, a.frobenius.radical.len()))?;
        let q = radical_quotient(&a, &s).ok_or("no quotient")?;
        ensure(q.dim() == qdim && q.frobenius.flag == FormFlag::Pos, format!("{}: quotient {} {}", text, q.dim(), q.frobenius.flag))?;
        let n = s.action().degree();
        for i in 0..n {
            ensure(q.algebra.verify_axis(&q.axes[i], &law).ok(), "quotient axis fails")?;
            for j in i + 1..n {
                let got = generated_dim(&q.algebra, &[q.axes[i].clone(), q.axes[j].clone()]);
                ensure(got == s.pair_type(i, j).dim(), format!("{}: pair {} {} changed type", text, i, j))?;
            }
        }
        dims.push(format!("{}->{}", dim, qdim));
    }
    Ok(dims.join(", "))
}

fn c9_dominance() -> Verdict {
    let rows: Vec<_> = golden::table4().into_iter().filter(|r| !r.is_extended()).collect();
    let reports = golden::reproduce_table4(&rows, Caps::default());
    let bad: Vec<String> = reports.iter().filter(|r| matches!(r.outcome, Outcome::Mismatch { .. })).map(|r| r.to_string()).collect();
    ensure(bad.is_empty(), bad.join(" | "))?;
    let t = golden::Tally::of(&reports);
    Ok(format!("{} completed rows agree, {} inconclusive, {} without a value", t.matched, t.inconclusive, t.skipped))
}

fn matrix_identities() -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases: 64, ..Config::default() });
    let entries = proptest::collection::vec(proptest::collection::vec(-4i64..5, 5), 1..5);
    runner
        .run(&entries, |rows| {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let a = Matrix::from_ints(&refs);
            let rr = a.rref();
            prop_assert_eq!(rr.matrix.rref().matrix, rr.matrix.clone());
            let ker = a.kernel();
            prop_assert_eq!(rr.rank + ker.len(), a.cols());
            for k in &ker {
                prop_assert!(a.mul_vec(k).iter().all(|x| x.is_zero()));
            }
            let gram = a.transpose().mul(&a).unwrap();
            let i = gram.inertia().unwrap();
            prop_assert_eq!((i.positive, i.zero, i.negative), (rr.rank, ker.len(), 0));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn orbit_stabilizer() -> Result<(), String> {
    for (g, x, _) in COUNTS {
        let grp = standard_action(g, x).unwrap().group().clone();
        for o in grp.orbits() {
            let p = o[0];
            ensure(o.len() as u128 * grp.stabilizer(p).order() == grp.order(), format!("{} {} point {}", g, x, p))?;
        }
    }
    Ok(())
}

fn automorphisms(built: &[(Shape, CompletedAlgebra)]) -> Result<(), String> {
    let law = FusionLaw::monster();
    for (s, a) in built {
        let act = s.action();
        for x in 0..act.degree() {
            let t = a.algebra.miyamoto(&a.axes[x], &law);
            ensure(a.algebra.is_automorphism(&t), format!("{}: tau of axis {} is no automorphism", s, x))?;
            for y in 0..act.degree() {
                ensure(t.mul_sparse(&a.axes[y]) == a.axes[act.tau(x).apply(y)], format!("{}: axis {} moved wrongly", s, y))?;
            }
        }
    }
    Ok(())
}

fn radicals(built: &[(Shape, CompletedAlgebra)]) -> Result<(), String> {
    for (s, a) in built {
        let g = a.frobenius.gram.as_ref().ok_or("no form")?;
        let rad: Vec<SparseVec> = g.kernel().iter().map(|v| SparseVec::from_dense(v)).collect();
        ensure(is_ideal(&a.algebra, &rad), format!("{}: radical is not an ideal", s))?;
        let mut space = EchelonSpace::new();
        space.extend(rad.iter());
        for r in &rad {
            for j in 0..a.dim() {
                ensure(space.contains(&a.algebra.mul(r, &SparseVec::unit(j))), format!("{}: radical not closed", s))?;
            }
        }
        ensure(g.bilinear(&a.axes[0], &a.axes[0]) == Scalar::one(), format!("{}: axis norm", s))?;
    }
    Ok(())
}

fn c10_properties(built: &[(Shape, CompletedAlgebra)]) -> Verdict {
    matrix_identities()?;
    orbit_stabilizer()?;
    automorphisms(built)?;
    radicals(built)?;
    Ok(format!("linear algebra, orbit-stabilizer, automorphisms and radicals on {} algebras", built.len()))
}

fn guarded(f: impl FnOnce() -> Verdict) -> Verdict {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    })
}

fn main() {
    let mut built = Vec::new();
    let results: Vec<(usize, &str, Verdict)> = vec![
        (1, "catalog exactness", guarded(c1_catalog)),
        (2, "dihedral orbit law", guarded(c2_orbit_law)),
        (3, "coset enumeration", guarded(c3_cosets)),
        (4, "shape counts", guarded(c4_shape_counts)),
        (5, "tau-map uniqueness", guarded(c5_tau_maps)),
        (6, "forbidden shapes", guarded(c6_forbidden)),
        (7, "fast subset", guarded(|| c7_fast_subset(&mut built))),
        (8, "radical quotients", guarded(c8_quotients)),
        (9, "universal dominance", guarded(c9_dominance)),
        (10, "property suites", guarded(|| c10_properties(&built))),
    ];
    for (n, name, v) in &results {
        match v {
            Ok(detail) => println!("criterion {:>2} PASS {}: {}", n, name, detail),
            Err(why) => println!("criterion {:>2} FAIL {}: {}", n, name, why),
        }
    }
    let failed: Vec<usize> = results.iter().filter(|r| r.2.is_err()).map(|r| r.0).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {:?}", failed);
        std::process::exit(1);
    }
    println!("all 10 criteria pass");
}
