use std::collections::{HashSet, VecDeque};

use super::action::AxisAction;
use super::ShapeError;
use crate::permgrp::{Perm, PermGroup};

/// Largest index of a candidate stabilizer over the subgroup forced by the
/// strong-involution lemma.
pub const STABILIZER_INDEX_CAP: u128 = 64;

/// One orbit of axes: the coset action of `G` on a stabilizer `S`, with the
/// axis of the coset `S` carrying the involution `u`.
#[derive(Clone, Debug)]
struct Orbit {
    stab: PermGroup,
    u: Perm,
    /// right coset representatives; point `k` is `S * reps[k]`
    reps: Vec<Perm>,
}

impl Orbit {
    fn new(g: &PermGroup, stab: PermGroup, u: Perm) -> Orbit {
        let mut reps = vec![g.identity()];
        let mut k = 0;
        while k < reps.len() {
            for h in g.generators() {
                let r = &reps[k] * h;
                if !reps.iter().any(|s| stab.contains(&(&r * &s.inv()))) {
                    reps.push(r);
                }
            }
            k += 1;
        }
        Orbit { stab, u, reps }
    }

    fn len(&self) -> usize {
        self.reps.len()
    }

    /// The point `S * r * g`.
    fn act(&self, k: usize, g: &Perm) -> usize {
        let r = &self.reps[k] * g;
        self.reps.iter().position(|s| self.stab.contains(&(&r * &s.inv()))).expect("coset")
    }
}

/// Some `h` with `a^h = b`, searching the conjugacy class of `a`.
fn conjugator(g: &PermGroup, a: &Perm, b: &Perm) -> Option<Perm> {
    let mut seen: HashSet<Perm> = HashSet::from([a.clone()]);
    let mut queue = VecDeque::from([(a.clone(), g.identity())]);
    while let Some((x, w)) = queue.pop_front() {
        if &x == b {
            return Some(w);
        }
        for h in g.generators() {
            let y = x.conj(h);
            if seen.insert(y.clone()) {
                queue.push_back((y, &w * h));
            }
        }
    }
    None
}

fn conj_group(s: &PermGroup, h: &Perm) -> PermGroup {
    let gens: Vec<Perm> = s.generators().iter().map(|x| x.conj(h)).collect();
    PermGroup::generated_by(s.degree(), gens.iter())
}

/// Points of `o` whose stabilizer is `stab` and whose involution is `u`.
fn matching_points(g: &PermGroup, o: &Orbit, stab: &PermGroup, u: &Perm) -> Vec<usize> {
    let Some(h0) = conjugator(g, &o.u, u) else {
        return Vec::new();
    };
    let cu = g.centralizer(&o.u).expect("u lies in G");
    let mut out: Vec<usize> = cu
        .elements()
        .iter()
        .map(|c| c * &h0)
        .filter(|h| conj_group(&o.stab, h).same_group(stab))
        .map(|h| o.act(0, &h))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Candidate stabilizers of the axis of one generator `u`.
fn stabilizer_candidates(g: &PermGroup, u: &Perm, miyamoto: &[Perm], unique: &HashSet<Perm>) -> Result<Vec<PermGroup>, ShapeError> {
    if u.is_identity() {
        return Ok(vec![g.clone()]);
    }
    let cu = g.centralizer(u)?;
    if unique.contains(u) {
        return Ok(vec![cu]);
    }
    let mut gens = vec![u.clone()];
    for v in miyamoto {
        let uv = u * v;
        match uv.order() {
            2 if unique.contains(v) => gens.push(v.clone()),
            4 => gens.push(uv.pow(2)),
            _ => {}
        }
    }
    let h = PermGroup::generated_by(g.degree(), gens.iter());
    Ok(h.subgroups_up_to(&cu, STABILIZER_INDEX_CAP)?)
}

/// Miyamoto involutions with the uniqueness property: those with an odd
/// product with another one (no 6A in a 4-algebra), or outside `O_2(G)`.
fn unique_involutions(g: &PermGroup, miyamoto: &[Perm]) -> HashSet<Perm> {
    let o2 = g.o2();
    miyamoto
        .iter()
        .filter(|x| !o2.contains(x) || miyamoto.iter().any(|y| matches!((*x * y).order(), 3 | 5)))
        .cloned()
        .collect()
}

/// The possible sets of axes for a 3-generated algebra whose generating
/// axes have Miyamoto involutions `x`, `y`, `z` generating `g`, up to
/// isomorphism of `G`-sets with tau. Configurations that close up under two
/// axes are dropped.
pub fn axis_configurations(g: &PermGroup, triple: [&Perm; 3]) -> Result<Vec<AxisAction>, ShapeError> {
    for t in triple {
        if !t.pow(2).is_identity() || !g.contains(t) {
            return Err(ShapeError::NotGenerated);
        }
    }
    if !PermGroup::generated_by(g.degree(), triple).same_group(g) {
        return Err(ShapeError::NotGenerated);
    }
    let mut miyamoto: Vec<Perm> = Vec::new();
    for t in triple {
        if !t.is_identity() && !miyamoto.contains(t) {
            for c in g.conjugacy_class(t) {
                if !miyamoto.contains(&c) {
                    miyamoto.push(c);
                }
            }
        }
    }
    let unique = unique_involutions(g, &miyamoto);
    let cands: Vec<Vec<PermGroup>> =
        triple.iter().map(|u| stabilizer_candidates(g, u, &miyamoto, &unique)).collect::<Result<_, _>>()?;

    let mut out: Vec<(Vec<(PermGroup, Perm)>, AxisAction)> = Vec::new();
    for s0 in &cands[0] {
        for s1 in &cands[1] {
            for s2 in &cands[2] {
                let stabs = [s0, s1, s2];
                if !g.core_is_trivial(&[s0.clone(), s1.clone(), s2.clone()]) {
                    continue;
                }
                let orbits: Vec<Orbit> = (0..3).map(|i| Orbit::new(g, stabs[i].clone(), triple[i].clone())).collect();
                for blocks in partitions3() {
                    if let Some(act) = build(g, &orbits, &blocks) {
                        let key: Vec<(PermGroup, Perm)> = blocks
                            .iter()
                            .map(|b| (orbits[b[0]].stab.clone(), orbits[b[0]].u.clone()))
                            .collect();
                        if !out.iter().any(|(k, _)| same_gset(g, k, &key)) {
                            out.push((key, act));
                        }
                    }
                }
            }
        }
    }
    Ok(out.into_iter().map(|(_, a)| a).collect())
}

/// Set partitions of `{0, 1, 2}`: blocks of generators whose orbits are
/// identified.
fn partitions3() -> Vec<Vec<Vec<usize>>> {
    vec![
        vec![vec![0], vec![1], vec![2]],
        vec![vec![0, 1], vec![2]],
        vec![vec![0, 2], vec![1]],
        vec![vec![0], vec![1, 2]],
        vec![vec![0, 1, 2]],
    ]
}

fn build(g: &PermGroup, orbits: &[Orbit], blocks: &[Vec<usize>]) -> Option<AxisAction> {
    // generator axes inside the orbit of their block
    let mut axis_point = [0usize; 3];
    for b in blocks {
        let o = &orbits[b[0]];
        let mut used = vec![0usize];
        for &j in &b[1..] {
            let pts = matching_points(g, o, &orbits[j].stab, &orbits[j].u);
            let p = *pts.iter().find(|p| !used.contains(p))?;
            used.push(p);
            axis_point[j] = p;
        }
    }
    let mut offset = Vec::new();
    let mut total = 0;
    for b in blocks {
        offset.push(total);
        total += orbits[b[0]].len();
    }
    let image = |h: &Perm| -> Perm {
        let mut img = Vec::with_capacity(total);
        for (b, off) in blocks.iter().zip(&offset) {
            let o = &orbits[b[0]];
            img.extend((0..o.len()).map(|k| off + o.act(k, h)));
        }
        Perm::from_images(img).expect("coset action")
    };
    let gens: Vec<Perm> = g.generators().iter().map(image).collect();
    let gx = PermGroup::new(total, gens).ok()?;
    let mut tau = vec![Perm::identity(total); total];
    for (b, off) in blocks.iter().zip(&offset) {
        let o = &orbits[b[0]];
        for (k, r) in o.reps.iter().enumerate() {
            tau[off + k] = image(&o.u.conj(r));
        }
    }
    let mut gen_axes = vec![0; 3];
    for (b, off) in blocks.iter().zip(&offset) {
        for &j in b {
            gen_axes[j] = off + axis_point[j];
        }
    }
    let act = AxisAction::new(gx, tau).ok()?.with_generators(gen_axes);
    if !act.is_admissible() || act.is_two_generated() {
        return None;
    }
    // disjoint copies of one orbit must not produce a pair spanning six axes
    for (i, bi) in blocks.iter().enumerate() {
        for (j, bj) in blocks.iter().enumerate().skip(i + 1) {
            if !equivalent(g, (&orbits[bi[0]].stab, &orbits[bi[0]].u), (&orbits[bj[0]].stab, &orbits[bj[0]].u)) {
                continue;
            }
            for d in offset[i]..offset[i] + orbits[bi[0]].len() {
                for e in offset[j]..offset[j] + orbits[bj[0]].len() {
                    if act.pair_type_size(d, e) == 6 {
                        return None;
                    }
                }
            }
        }
    }
    Some(act)
}

/// Whether some `h` in `G` carries `S` to `S'` and `u` to `u'`.
fn equivalent(g: &PermGroup, a: (&PermGroup, &Perm), b: (&PermGroup, &Perm)) -> bool {
    if a.0.order() != b.0.order() {
        return false;
    }
    let Some(h0) = conjugator(g, a.1, b.1) else {
        return false;
    };
    let cu = g.centralizer(a.1).expect("u lies in G");
    let found = cu.elements().iter().any(|c| conj_group(a.0, &(c * &h0)).same_group(b.0));
    found
}

fn same_gset(g: &PermGroup, a: &[(PermGroup, Perm)], b: &[(PermGroup, Perm)]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    for x in a {
        let Some(j) = (0..b.len()).find(|&j| !used[j] && equivalent(g, (&x.0, &x.1), (&b[j].0, &b[j].1))) else {
            return false;
        };
        used[j] = true;
    }
    true
}
