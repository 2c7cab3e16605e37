use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use super::ShapeError;
use crate::permgrp::{Perm, PermGroup, DEFAULT_NODE_CAP, NORMALIZER_DEGREE_CAP};

/// A group acting faithfully on a set of axes `0..degree`, together with a
/// tau-map sending each axis to an involution (or the identity) of the group.
#[derive(Clone, Debug)]
pub struct AxisAction {
    group: PermGroup,
    orbits: Vec<Vec<usize>>,
    tau: Vec<Perm>,
    generators: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxisActionSummary {
    pub group_order: u128,
    pub orbit_sizes: Vec<usize>,
    pub tau: Vec<String>,
}

impl AxisAction {
    /// Checks the tau-map axioms: involutions, equivariance and faithfulness.
    pub fn new(group: PermGroup, tau: Vec<Perm>) -> Result<AxisAction, ShapeError> {
        let n = group.degree();
        if tau.len() != n {
            return Err(ShapeError::Invalid(format!("{} tau values for {} axes", tau.len(), n)));
        }
        for (x, t) in tau.iter().enumerate() {
            if t.degree() != n || !group.contains(t) {
                return Err(ShapeError::Invalid(format!("tau of axis {} is not in the group", x)));
            }
            if !t.pow(2).is_identity() {
                return Err(ShapeError::Invalid(format!("tau of axis {} is not an involution", x)));
            }
        }
        for g in group.generators() {
            for x in 0..n {
                if tau[g.apply(x)] != tau[x].conj(g) {
                    return Err(ShapeError::Invalid(format!("tau is not equivariant at axis {}", x)));
                }
            }
        }
        let mut orbits = group.orbits();
        orbits.sort_by_key(|o| (o.len(), o[0]));
        Ok(AxisAction { group, orbits, tau, generators: Vec::new() })
    }

    pub(crate) fn with_generators(mut self, generators: Vec<usize>) -> AxisAction {
        self.generators = generators;
        self
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    /// Orbits on the axes, shortest first.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.len()).collect()
    }

    pub fn tau(&self, x: usize) -> &Perm {
        &self.tau[x]
    }

    pub fn taus(&self) -> &[Perm] {
        &self.tau
    }

    /// Axes the action was built from, if known.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// The Miyamoto group generated by the tau values.
    pub fn miyamoto_group(&self) -> PermGroup {
        PermGroup::generated_by(self.degree(), self.tau.iter())
    }

    /// The orbits `a^D` and `b^D` of the dihedral group generated by
    /// `tau_a` and `tau_b`.
    pub fn dihedral_orbits(&self, a: usize, b: usize) -> (Vec<usize>, Vec<usize>) {
        let gens = [&self.tau[a], &self.tau[b]];
        (closure(a, &gens), closure(b, &gens))
    }

    /// `X_{a,b}`, sorted.
    pub fn closed_set(&self, a: usize, b: usize) -> Vec<usize> {
        let (mut oa, ob) = self.dihedral_orbits(a, b);
        oa.extend(ob);
        oa.sort_unstable();
        oa.dedup();
        oa
    }

    /// `n = |X_{a,b}|`; the Norton-Sakuma algebra on `a`, `b` has type `nL`.
    pub fn pair_type_size(&self, a: usize, b: usize) -> usize {
        self.closed_set(a, b).len()
    }

    /// Whether the dihedral orbit pattern of every pair is one of those
    /// allowed by the Norton-Sakuma algebras.
    pub fn is_admissible(&self) -> bool {
        let n = self.degree();
        for a in 0..n {
            for b in a + 1..n {
                let (oa, ob) = self.dihedral_orbits(a, b);
                if oa.len() != ob.len() {
                    return false;
                }
                let ok = if oa.contains(&b) {
                    matches!(oa.len(), 1 | 3 | 5)
                } else {
                    matches!(oa.len(), 1..=3)
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// True when some pair of axes already closes up to all of `X`, so the
    /// algebra would be 2-generated.
    pub fn is_two_generated(&self) -> bool {
        let n = self.degree();
        (0..n).any(|a| (a + 1..n).any(|b| self.pair_type_size(a, b) == n))
    }

    /// The image of this tau-map under an element of the normalizer.
    pub fn conjugate_tau(&self, h: &Perm) -> Vec<Perm> {
        conjugate_tau(&self.tau, h)
    }

    pub fn summary(&self) -> AxisActionSummary {
        AxisActionSummary {
            group_order: self.group.order(),
            orbit_sizes: self.orbit_sizes(),
            tau: self.tau.iter().map(|t| t.to_string()).collect(),
        }
    }
}

pub(crate) fn closure(p: usize, gens: &[&Perm]) -> Vec<usize> {
    let mut seen = vec![p];
    let mut k = 0;
    while k < seen.len() {
        let q = seen[k];
        for g in gens {
            let r = g.apply(q);
            if !seen.contains(&r) {
                seen.push(r);
            }
        }
        k += 1;
    }
    seen.sort_unstable();
    seen
}

fn conjugate_tau(tau: &[Perm], h: &Perm) -> Vec<Perm> {
    let mut out = tau.to_vec();
    for (x, t) in tau.iter().enumerate() {
        out[h.apply(x)] = t.conj(h);
    }
    out
}

/// Admissible tau-maps for a group acting on its points.
#[derive(Clone, Debug)]
pub struct TauMaps {
    pub actions: Vec<AxisAction>,
    /// False when the normalizer was out of reach and the list holds every
    /// admissible map rather than one per orbit of `N/G`.
    pub reduced: bool,
}

/// The normalizer of the action in `Sym(X)`, or `None` beyond the caps.
pub fn normalizer(group: &PermGroup) -> Option<PermGroup> {
    group.normalizer_in_sym(NORMALIZER_DEGREE_CAP, DEFAULT_NODE_CAP).ok()
}

/// Every admissible tau-map with Miyamoto group the whole group, one per
/// orbit of the normalizer when that can be computed. Each `tau_x` is taken
/// to fix `x`, as a Miyamoto involution fixes its own axis.
pub fn tau_maps(group: &PermGroup) -> TauMaps {
    let n = group.degree();
    let orbits = group.orbits();
    // for each orbit representative, the possible tau values and the
    // transversal used to spread them over the orbit
    let mut choices: Vec<Vec<Perm>> = Vec::new();
    let mut spread: Vec<Vec<(usize, Perm)>> = Vec::new();
    for o in &orbits {
        let r = o[0];
        let stab = group.stabilizer(r);
        let centre = stab.centralizer_of_group(&stab).expect("stabilizer centralizer");
        let mut vals: Vec<Perm> = centre.elements().into_iter().filter(|t| t.pow(2).is_identity()).collect();
        vals.sort();
        choices.push(vals);
        spread.push(transversal(group, r));
    }
    let mut found: Vec<Vec<Perm>> = Vec::new();
    let mut pick = vec![0usize; orbits.len()];
    'outer: loop {
        let mut tau = vec![Perm::identity(n); n];
        for (i, (p, tr)) in pick.iter().zip(&spread).enumerate() {
            let t = &choices[i][*p];
            for (x, g) in tr {
                tau[*x] = t.conj(g);
            }
        }
        if PermGroup::generated_by(n, tau.iter()).same_group(group) {
            if let Ok(act) = AxisAction::new(group.clone(), tau.clone()) {
                if act.is_admissible() {
                    found.push(tau);
                }
            }
        }
        for i in 0..pick.len() {
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                continue 'outer;
            }
            pick[i] = 0;
        }
        break;
    }
    let norm = normalizer(group);
    let reduced = norm.is_some();
    if let Some(norm) = norm {
        let mut reps: Vec<Vec<Perm>> = Vec::new();
        let mut seen: HashSet<Vec<Perm>> = HashSet::new();
        for tau in found {
            if seen.contains(&tau) {
                continue;
            }
            let mut queue = VecDeque::from([tau.clone()]);
            seen.insert(tau.clone());
            while let Some(t) = queue.pop_front() {
                for h in norm.generators() {
                    let u = conjugate_tau(&t, h);
                    if seen.insert(u.clone()) {
                        queue.push_back(u);
                    }
                }
            }
            reps.push(tau);
        }
        found = reps;
    }
    let actions = found
        .into_iter()
        .map(|t| AxisAction::new(group.clone(), t).expect("checked above"))
        .collect();
    TauMaps { actions, reduced }
}

/// Pairs `(x, g)` with `r^g = x` for every `x` in the orbit of `r`.
pub(crate) fn transversal(group: &PermGroup, r: usize) -> Vec<(usize, Perm)> {
    let n = group.degree();
    let mut out = vec![(r, Perm::identity(n))];
    let mut index: HashMap<usize, usize> = HashMap::from([(r, 0)]);
    let mut k = 0;
    while k < out.len() {
        let (x, g) = out[k].clone();
        for h in group.generators() {
            let y = h.apply(x);
            if !index.contains_key(&y) {
                index.insert(y, out.len());
                out.push((y, &g * h));
            }
        }
        k += 1;
    }
    out
}

/// The stabilizer of `tau` in `norm`, from Schreier generators of its orbit.
pub fn tau_stabilizer(act: &AxisAction, norm: &PermGroup) -> PermGroup {
    let n = act.degree();
    let start = act.taus().to_vec();
    let mut reps: Vec<(Vec<Perm>, Perm)> = vec![(start.clone(), Perm::identity(n))];
    let mut index: HashMap<Vec<Perm>, usize> = HashMap::from([(start, 0)]);
    let mut schreier: Vec<Perm> = Vec::new();
    let mut k = 0;
    while k < reps.len() {
        let (t, g) = reps[k].clone();
        for h in norm.generators() {
            let u = conjugate_tau(&t, h);
            let gh = &g * h;
            match index.get(&u) {
                Some(&j) => {
                    let s = &gh * &reps[j].1.inv();
                    if !s.is_identity() {
                        schreier.push(s);
                    }
                }
                None => {
                    index.insert(u.clone(), reps.len());
                    reps.push((u, gh));
                }
            }
        }
        k += 1;
    }
    schreier.extend(act.group().generators().iter().cloned());
    PermGroup::generated_by(n, schreier.iter())
}
