use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};

use crate::permgrp::Perm;
use crate::ratlin::{EchelonSpace, Scalar, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum ExtraKind {
    /// the third axis of a 2A subalgebra
    A2,
    /// `u_rho` of a 3A subalgebra
    U3,
    /// `v_rho` of a 4A subalgebra
    V4,
}

/// Extra vectors are determined by their kind and the axes of the
/// subalgebra they belong to, so the group permutes them through the keys.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct ExtraKey {
    pub kind: ExtraKind,
    pub axes: Vec<usize>,
}

impl ExtraKey {
    pub fn new(kind: ExtraKind, mut axes: Vec<usize>) -> ExtraKey {
        axes.sort_unstable();
        ExtraKey { kind, axes }
    }

    fn image(&self, g: &Perm) -> ExtraKey {
        ExtraKey::new(self.kind, self.axes.iter().map(|&x| g.apply(x)).collect())
    }
}

#[derive(Clone, Debug)]
pub(crate) enum Origin {
    Axis(usize),
    Extra(ExtraKey),
    /// a formal product of two vectors of the multiplication domain
    Product(SparseVec, SparseVec),
}

fn tri(i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    j * (j + 1) / 2 + i
}

/// A vector space with a partially defined product. Basis vectors
/// `0..w` form the domain `W` on which every product is known; a few
/// further products of basis vectors are known individually.
#[derive(Clone, Debug)]
pub(crate) struct Partial {
    pub n: usize,
    pub w: usize,
    pub origin: Vec<Origin>,
    prods: Vec<SparseVec>,
    known: HashMap<(usize, usize), SparseVec>,
    /// products `u v = x` not expressible on basis pairs yet
    facts: Vec<(SparseVec, SparseVec, SparseVec)>,
    pub axes: Vec<SparseVec>,
    pub extras: BTreeMap<ExtraKey, SparseVec>,
}

impl Partial {
    pub fn new(num_axes: usize, extras: Vec<ExtraKey>) -> Partial {
        let mut origin: Vec<Origin> = (0..num_axes).map(Origin::Axis).collect();
        let axes = (0..num_axes).map(SparseVec::unit).collect();
        let mut map = BTreeMap::new();
        for (k, key) in extras.into_iter().enumerate() {
            map.insert(key.clone(), SparseVec::unit(num_axes + k));
            origin.push(Origin::Extra(key));
        }
        let n = origin.len();
        Partial { n, w: 0, origin, prods: Vec::new(), known: HashMap::new(), facts: Vec::new(), axes, extras: map }
    }

    pub fn is_complete(&self) -> bool {
        self.w == self.n
    }

    pub fn product(&self, i: usize, j: usize) -> Option<&SparseVec> {
        if i < self.w && j < self.w {
            Some(&self.prods[tri(i, j)])
        } else {
            self.known.get(&(i.min(j), i.max(j)))
        }
    }

    /// The product `u v`, if every basis product it needs is known.
    pub fn mul(&self, u: &SparseVec, v: &SparseVec) -> Option<SparseVec> {
        let known = |i: usize| v.indices().all(|j| self.product(i, j).is_some());
        if !u.indices().all(known) {
            return None;
        }
        let mut acc = vec![Scalar::zero(); self.n];
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                let ab = a * b;
                for (k, c) in self.product(*i, *j)?.iter() {
                    acc[*k] += &(&ab * c);
                }
            }
        }
        Some(SparseVec::from_dense(&acc))
    }

    /// Records `u v = x`. Returns a relation when the product was already
    /// known and differs.
    pub fn set_product(&mut self, u: &SparseVec, v: &SparseVec, x: SparseVec) -> Option<SparseVec> {
        if let Some(old) = self.mul(u, v) {
            let d = old.sub(&x);
            return (!d.is_zero()).then_some(d);
        }
        if let (Some((i, a)), Some((j, b))) = (single(u), single(v)) {
            let x = x.scale(&(a * b).recip());
            self.known.insert((i.min(j), i.max(j)), x);
        } else {
            self.facts.push((u.clone(), v.clone(), x));
        }
        None
    }

    /// Facts whose product has become computable, turned into relations.
    pub fn settle_facts(&mut self) -> Vec<SparseVec> {
        let facts = std::mem::take(&mut self.facts);
        let mut out = Vec::new();
        for (u, v, x) in facts {
            if let Some(d) = self.set_product(&u, &v, x) {
                out.push(d);
            }
        }
        out
    }

    /// Images of all basis vectors under `g`.
    pub fn action(&self, g: &Perm) -> Vec<SparseVec> {
        let mut img: Vec<SparseVec> = Vec::with_capacity(self.n);
        for o in &self.origin {
            let v = match o {
                Origin::Axis(x) => self.axes[g.apply(*x)].clone(),
                Origin::Extra(key) => self.extras[&key.image(g)].clone(),
                Origin::Product(f1, f2) => {
                    let (g1, g2) = (apply(&img, f1), apply(&img, f2));
                    self.mul(&g1, &g2).expect("the domain is invariant")
                }
            };
            img.push(v);
        }
        img
    }

    /// Number of basis pairs whose product is unknown.
    pub fn unknown_products(&self) -> usize {
        let mut count = 0;
        for j in self.w..self.n {
            count += (0..=j).filter(|&i| !self.known.contains_key(&(i, j))).count();
        }
        count
    }

    /// Basis indices of axes that are still basis vectors.
    fn axis_indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.axes.iter().filter_map(|a| single(a).filter(|(_, c)| c.is_one()).map(|(i, _)| i)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Adds a formal basis vector for every unknown product of basis
    /// vectors, so that the whole current space becomes the domain.
    /// Returns relations from facts that became computable.
    pub fn expand(&mut self) -> Vec<SparseVec> {
        let n = self.n;
        let mut next = n;
        self.prods.reserve(n * (n + 1) / 2 - self.prods.len());
        for j in self.w..n {
            for i in 0..=j {
                let v = match self.known.remove(&(i, j)) {
                    Some(v) => v,
                    None => {
                        self.origin.push(Origin::Product(SparseVec::unit(i), SparseVec::unit(j)));
                        next += 1;
                        SparseVec::unit(next - 1)
                    }
                };
                self.prods.push(v);
            }
        }
        debug_assert!(self.known.is_empty());
        self.w = n;
        self.n = next;
        self.settle_facts()
    }

    /// The smallest subspace containing `rels` that is invariant under
    /// `gens` and closed under multiplication by the domain.
    pub fn close(&self, rels: Vec<SparseVec>, gens: &[Perm]) -> EchelonSpace {
        let tables: Vec<Vec<SparseVec>> = gens.iter().map(|g| self.action(g)).collect();
        let mut space = EchelonSpace::new();
        // cheapest vectors first: a stack order lets the coefficients grow
        // to thousands of bits before the space settles
        let mut queue = BinaryHeap::new();
        let mut seq = 0usize;
        let mut push = |queue: &mut BinaryHeap<Pending>, v: SparseVec| {
            if !v.is_zero() {
                queue.push(Pending { cost: cost(&v), seq, v });
                seq += 1;
            }
        };
        for r in rels {
            push(&mut queue, r);
        }
        while let Some(Pending { v, .. }) = queue.pop() {
            let Some(p) = space.insert(&v) else { continue };
            let row = space.row(p).expect("inserted").clone();
            for t in &tables {
                push(&mut queue, apply(t, &row));
            }
            let others: Vec<usize> = if p < self.w { (0..self.n).collect() } else { self.axis_indices() };
            for j in others {
                if let Some(x) = self.mul(&row, &SparseVec::unit(j)) {
                    push(&mut queue, x);
                }
            }
        }
        space
    }

    /// Factors out `rels`, which must be closed in the sense of
    /// [`Partial::close`]. Returns the map taking old vectors to new ones.
    pub fn reduce(&mut self, rels: &EchelonSpace) -> Reducer {
        let mut index = vec![usize::MAX; self.n];
        let mut m = 0;
        let mut w = 0;
        for (k, slot) in index.iter_mut().enumerate() {
            if !rels.is_pivot(k) {
                *slot = m;
                m += 1;
                if k < self.w {
                    w += 1;
                }
            }
        }
        let red = Reducer { rels: rels.clone(), index };
        let keep: Vec<usize> = (0..self.n).filter(|&k| red.index[k] != usize::MAX).collect();

        let mut prods = Vec::with_capacity(w * (w + 1) / 2);
        for (jj, &j) in keep.iter().enumerate().take(w) {
            for &i in &keep[..=jj] {
                prods.push(red.apply(&self.prods[tri(i, j)]));
            }
        }
        let mut facts: Vec<(SparseVec, SparseVec, SparseVec)> = Vec::new();
        let mut known = HashMap::new();
        let mut entries: Vec<_> = std::mem::take(&mut self.known).into_iter().collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        for ((i, j), v) in entries {
            let (ni, nj) = (red.index[i], red.index[j]);
            if ni != usize::MAX && nj != usize::MAX {
                known.insert((ni, nj), red.apply(&v));
            } else {
                facts.push((red.apply_unit(i), red.apply_unit(j), red.apply(&v)));
            }
        }
        // products of eliminated domain vectors with the rest of the domain
        // follow by linearity and need no record
        for (u, v, x) in std::mem::take(&mut self.facts) {
            facts.push((red.apply(&u), red.apply(&v), red.apply(&x)));
        }
        let origin = keep
            .iter()
            .map(|&k| match &self.origin[k] {
                Origin::Product(f1, f2) => Origin::Product(red.apply(f1), red.apply(f2)),
                o => o.clone(),
            })
            .collect();
        self.origin = origin;
        self.prods = prods;
        self.known = known;
        self.facts = facts;
        self.n = m;
        self.w = w;
        for a in &mut self.axes {
            *a = red.apply(a);
        }
        for v in self.extras.values_mut() {
            *v = red.apply(v);
        }
        red
    }

    /// The full product table; only meaningful once complete.
    pub fn table(&self) -> Vec<Vec<SparseVec>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.prods[tri(i, j)].clone()).collect()).collect()
    }
}

/// Quotient map produced by [`Partial::reduce`].
#[derive(Clone, Debug)]
pub(crate) struct Reducer {
    rels: EchelonSpace,
    index: Vec<usize>,
}

impl Reducer {
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        self.rels.reduce(v).map_indices(|i| self.index[i])
    }

    fn apply_unit(&self, i: usize) -> SparseVec {
        self.apply(&SparseVec::unit(i))
    }
}

fn single(v: &SparseVec) -> Option<(usize, Scalar)> {
    if v.nnz() == 1 {
        v.first().cloned()
    } else {
        None
    }
}

/// `sum c_k table[k]` for `v = sum c_k e_k`.
pub(crate) fn apply(table: &[SparseVec], v: &SparseVec) -> SparseVec {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (k, c) in v.iter() {
        for (i, d) in table[*k].iter() {
            *acc.entry(*i).or_default() += &(c * d);
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// A vector waiting in [`Partial::close`], ordered so the heap pops the
/// cheapest first and ties go to the oldest.
struct Pending {
    cost: usize,
    seq: usize,
    v: SparseVec,
}

impl Pending {
    fn key(&self) -> Reverse<(usize, usize)> {
        Reverse((self.cost, self.seq))
    }
}

impl PartialEq for Pending {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for Pending {}

impl PartialOrd for Pending {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pending {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

/// Total size of the coefficients in bits.
fn cost(v: &SparseVec) -> usize {
    v.iter().map(|(_, c)| (c.numer().bits() + c.denom().bits()) as usize).sum()
}
