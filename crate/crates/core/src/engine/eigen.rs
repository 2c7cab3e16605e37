//! Known eigenvectors of the axis orbit representatives and the relations
//! they force.
//!
//! Vectors are sorted into classes by a set of eigenvalues (a bitmask over
//! the fusion law indices): a vector of class `S` lies in the sum of the
//! eigenspaces for `S` in every axial algebra the construction can map to.

use crate::catalog::FusionLaw;
use crate::permgrp::Perm;
use crate::ratlin::{EchelonSpace, Scalar, SparseVec};

use super::partial::{Partial, Reducer};

pub(crate) const ALL: usize = 15;
const MINUS: usize = 8;
const PLUS: usize = 7;

/// The cuts `P | P^c` of the four eigenvalues, each once.
const CUTS: [usize; 7] = [1, 2, 4, 8, 3, 5, 9];

#[derive(Clone, Debug)]
pub(crate) struct AxisData {
    pub axis: usize,
    pub tau: Perm,
    /// generators of the stabilizer of the axis
    pub stab: Vec<Perm>,
    classes: Vec<EchelonSpace>,
    /// known values of the projection onto the axis, used only for
    /// primitive constructions
    phi_seeds: Vec<(SparseVec, Scalar)>,
    primitive: bool,
}

/// Eigenvalue index set arithmetic for a four-value law.
#[derive(Clone, Debug)]
pub(crate) struct Law {
    values: Vec<Scalar>,
    star: Vec<Vec<usize>>,
}

impl Law {
    pub fn new(law: &FusionLaw) -> Law {
        let k = law.len();
        assert_eq!(k, 4, "classes are stored as four-bit masks");
        let mut star = vec![vec![0usize; 16]; 16];
        for (s, row) in star.iter_mut().enumerate() {
            for (t, cell) in row.iter_mut().enumerate() {
                for i in (0..k).filter(|i| s >> i & 1 == 1) {
                    for j in (0..k).filter(|j| t >> j & 1 == 1) {
                        for &r in law.rule_idx(i, j) {
                            *cell |= 1 << r;
                        }
                    }
                }
            }
        }
        Law { values: law.eigenvalues.clone(), star }
    }

    pub fn value(&self, i: usize) -> &Scalar {
        &self.values[i]
    }
}

impl AxisData {
    pub fn new(axis: usize, tau: Perm, stab: Vec<Perm>, primitive: bool) -> AxisData {
        AxisData { axis, tau, stab, classes: vec![EchelonSpace::new(); 16], phi_seeds: Vec::new(), primitive }
    }

    pub fn add_phi(&mut self, v: SparseVec, value: Scalar) {
        self.phi_seeds.push((v, value));
    }

    pub fn add(&mut self, mask: usize, v: &SparseVec) -> bool {
        mask != ALL && self.classes[mask].insert(v).is_some()
    }

    pub fn map(&mut self, red: &Reducer) {
        for c in &mut self.classes {
            let rows: Vec<SparseVec> = c.basis().map(|r| red.apply(r)).collect();
            let mut fresh = EchelonSpace::new();
            fresh.extend(rows.iter());
            *c = fresh;
        }
        for (v, _) in &mut self.phi_seeds {
            *v = red.apply(v);
        }
    }

    fn rows(&self, mask: usize) -> Vec<SparseVec> {
        self.classes[mask].basis().cloned().collect()
    }

    /// Eigenvectors found from the current product alone: the tau grading
    /// and kernels of `ad_a - lambda` on the vectors whose product with the
    /// axis is known.
    pub fn structural(&mut self, p: &Partial, law: &Law) -> bool {
        let a = p.axes[self.axis].clone();
        let mut grew = self.add(1, &a);
        let t = p.action(&self.tau);
        for (k, img) in t.iter().enumerate() {
            let e = SparseVec::unit(k);
            grew |= self.add(MINUS, &e.sub(img));
            grew |= self.add(PLUS, &e.add(img));
        }
        let cols: Vec<(SparseVec, SparseVec)> =
            (0..p.n).filter_map(|j| p.mul(&a, &SparseVec::unit(j)).map(|x| (SparseVec::unit(j), x))).collect();
        for i in 0..4 {
            let lam = law.value(i);
            let images: Vec<SparseVec> = cols.iter().map(|(e, x)| x.add_scaled(e, &-lam)).collect();
            let tags: Vec<&SparseVec> = cols.iter().map(|(e, _)| e).collect();
            for v in kernel_combos(&images, &tags, p.n) {
                grew |= self.add(1 << i, &v);
            }
        }
        grew
    }

    /// One pass of the eigenvector rules. Relations go to `rels`; returns
    /// whether any class grew.
    pub fn propagate(&mut self, p: &Partial, law: &Law, rels: &mut Vec<SparseVec>) -> bool {
        let a = p.axes[self.axis].clone();
        let mut grew = false;
        // (ad_a - lambda) maps class S into S minus lambda
        let mut masks: Vec<usize> = (1..ALL).collect();
        masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
        for &s in &masks {
            for u in self.rows(s) {
                let Some(au) = p.mul(&a, &u) else { continue };
                for i in (0..4).filter(|i| s >> i & 1 == 1) {
                    let v = au.add_scaled(&u, &-law.value(i));
                    let rest = s & !(1 << i);
                    if rest == 0 {
                        if !v.is_zero() {
                            rels.push(v);
                        }
                    } else {
                        grew |= self.add(rest, &v);
                    }
                }
            }
        }
        // fusion among classes inside the plus part; products with the minus
        // part are already covered by the grading
        let plus: Vec<usize> = (1..PLUS).filter(|&m| !self.classes[m].is_empty()).collect();
        for (x, &s) in plus.iter().enumerate() {
            for &t in &plus[x..] {
                let r = law.star[s][t];
                if r == PLUS {
                    continue;
                }
                let (us, ut) = (self.rows(s), self.rows(t));
                for u in &us {
                    for v in &ut {
                        if let Some(uv) = p.mul(u, v) {
                            if r == 0 {
                                if !uv.is_zero() {
                                    rels.push(uv);
                                }
                            } else {
                                grew |= self.add(r, &uv);
                            }
                        }
                    }
                }
            }
        }
        if self.primitive {
            grew |= self.split_off_axis(p, &a, rels);
        }
        // ad_a is known on basis vectors with a known product and on each
        // eigenspace; where the two overlap the values must agree
        let mut vs: Vec<SparseVec> = Vec::new();
        let mut images: Vec<SparseVec> = Vec::new();
        for j in 0..p.n {
            let e = SparseVec::unit(j);
            if let Some(x) = p.mul(&a, &e) {
                vs.push(e);
                images.push(x);
            }
        }
        for i in 0..4 {
            for u in self.classes[1 << i].basis() {
                images.push(u.scale(law.value(i)));
                vs.push(u.clone());
            }
        }
        let tags: Vec<&SparseVec> = images.iter().collect();
        rels.extend(kernel_combos(&vs, &tags, p.n));
        // the eigenspaces form a direct sum
        for &cut in &CUTS {
            let left = self.span(|m| m & !cut == 0);
            let right = self.span(|m| m & cut == 0);
            if left.is_empty() || right.is_empty() {
                continue;
            }
            rels.extend(intersection(&left, &right, p.n));
        }
        grew
    }

    /// With `A_1 = <a>` every vector is `phi(v) a` plus a vector with no
    /// 1-component, where `phi` is linear, fixed by `ad_a` and by the
    /// stabilizer of `a`, and zero on the other eigenspaces.
    fn split_off_axis(&mut self, p: &Partial, a: &SparseVec, rels: &mut Vec<SparseVec>) -> bool {
        let n = p.n;
        let mut phi = Phi::new(n);
        phi.insert(a, &Scalar::one());
        for (v, c) in &self.phi_seeds {
            phi.insert(v, c);
        }
        for m in (1..ALL).filter(|m| m & 1 == 0) {
            for u in self.classes[m].basis() {
                phi.insert(u, &Scalar::zero());
            }
        }
        let zero = Scalar::zero();
        for j in 0..n {
            let e = SparseVec::unit(j);
            if let Some(x) = p.mul(a, &e) {
                phi.insert(&x.sub(&e), &zero);
            }
        }
        for h in &self.stab {
            for (j, img) in p.action(h).iter().enumerate() {
                phi.insert(&img.sub(&SparseVec::unit(j)), &zero);
            }
        }
        if phi.inconsistent() {
            // only the zero algebra satisfies everything
            rels.push(a.clone());
            return false;
        }
        let mut grew = false;
        for j in 0..n {
            let e = SparseVec::unit(j);
            if let Some(c) = phi.value(&e) {
                grew |= self.add(ALL & !1, &e.add_scaled(a, &-c));
            }
        }
        for m in (1..ALL).filter(|m| m & 1 == 1) {
            for u in self.rows(m) {
                let Some(c) = phi.value(&u) else { continue };
                let v = u.add_scaled(a, &-c);
                if m == 1 {
                    if !v.is_zero() {
                        rels.push(v);
                    }
                } else {
                    grew |= self.add(m & !1, &v);
                }
            }
        }
        grew
    }

    fn span<F: Fn(usize) -> bool>(&self, keep: F) -> Vec<SparseVec> {
        let mut s = EchelonSpace::new();
        for m in (1..ALL).filter(|&m| keep(m)) {
            s.extend(self.classes[m].basis());
        }
        s.basis().cloned().collect()
    }
}

/// Linear conditions `phi(v) = c`, stored as `v` shifted up by one with
/// `-c` at index 0.
struct Phi {
    rows: EchelonSpace,
}

impl Phi {
    fn new(_n: usize) -> Phi {
        Phi { rows: EchelonSpace::new() }
    }

    fn insert(&mut self, v: &SparseVec, c: &Scalar) {
        self.rows.insert(&shifted(v, 1).add_scaled(&SparseVec::unit(0), &-c));
    }

    fn inconsistent(&self) -> bool {
        self.rows.is_pivot(0)
    }

    fn value(&self, v: &SparseVec) -> Option<Scalar> {
        let r = self.rows.reduce(&shifted(v, 1));
        match r.max_index() {
            None => Some(Scalar::zero()),
            Some(0) => Some(r.get(0)),
            Some(_) => None,
        }
    }
}

fn shifted(v: &SparseVec, by: usize) -> SparseVec {
    v.map_indices(|i| i + by)
}

/// Combinations `sum c_j tags[j]` with `sum c_j vecs[j] = 0`.
pub(crate) fn kernel_combos(vecs: &[SparseVec], tags: &[&SparseVec], n: usize) -> Vec<SparseVec> {
    let mut s = EchelonSpace::new();
    for (v, t) in vecs.iter().zip(tags) {
        s.insert(&shifted(v, n).add(t));
    }
    s.pivots().filter(|&p| p < n).map(|p| s.row(p).expect("pivot").clone()).collect()
}

/// A basis of the intersection of two spans (Zassenhaus).
pub(crate) fn intersection(left: &[SparseVec], right: &[SparseVec], n: usize) -> Vec<SparseVec> {
    let mut s = EchelonSpace::new();
    for l in left {
        s.insert(&shifted(l, n).add(l));
    }
    for r in right {
        s.insert(&shifted(r, n));
    }
    s.pivots().filter(|&p| p < n).map(|p| s.row(p).expect("pivot").clone()).collect()
}
