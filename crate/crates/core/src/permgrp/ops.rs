use std::collections::{HashSet, VecDeque};
use std::hash::Hash;

use super::{Perm, PermGroup};

/// Element arithmetic shared by permutation groups and groups given by a
/// complete regular coset table.
pub trait GroupOps {
    type Elt: Clone + Eq + Hash + Ord + std::fmt::Debug;

    fn identity(&self) -> Self::Elt;
    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn inv(&self, a: &Self::Elt) -> Self::Elt;
    fn gens(&self) -> Vec<Self::Elt>;
    fn order(&self) -> u128;

    /// `b^-1 a b`
    fn conj(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt {
        self.mul(&self.mul(&self.inv(b), a), b)
    }

    /// Order of `a`, or `None` if it exceeds `bound`.
    fn elt_order(&self, a: &Self::Elt, bound: u64) -> Option<u64> {
        let id = self.identity();
        let mut x = a.clone();
        for k in 1..=bound {
            if x == id {
                return Some(k);
            }
            x = self.mul(&x, a);
        }
        None
    }

    fn class(&self, a: &Self::Elt) -> Vec<Self::Elt> {
        let gens = self.gens();
        let mut seen: HashSet<Self::Elt> = HashSet::from([a.clone()]);
        let mut queue = VecDeque::from([a.clone()]);
        while let Some(y) = queue.pop_front() {
            for g in &gens {
                let z = self.conj(&y, g);
                if seen.insert(z.clone()) {
                    queue.push_back(z);
                }
            }
        }
        let mut v: Vec<Self::Elt> = seen.into_iter().collect();
        v.sort();
        v
    }

    /// Elements in breadth-first order from the identity over the generators.
    fn enumerate(&self) -> Vec<Self::Elt> {
        let gens = self.gens();
        let id = self.identity();
        let mut seen: HashSet<Self::Elt> = HashSet::from([id.clone()]);
        let mut out = vec![id];
        let mut k = 0;
        while k < out.len() {
            for g in &gens {
                let y = self.mul(&out[k], g);
                if seen.insert(y.clone()) {
                    out.push(y);
                }
            }
            k += 1;
        }
        out
    }
}

impl GroupOps for PermGroup {
    type Elt = Perm;

    fn identity(&self) -> Perm {
        PermGroup::identity(self)
    }

    fn mul(&self, a: &Perm, b: &Perm) -> Perm {
        a * b
    }

    fn inv(&self, a: &Perm) -> Perm {
        a.inv()
    }

    fn gens(&self) -> Vec<Perm> {
        self.generators().to_vec()
    }

    fn order(&self) -> u128 {
        PermGroup::order(self)
    }

    fn conj(&self, a: &Perm, b: &Perm) -> Perm {
        a.conj(b)
    }

    fn elt_order(&self, a: &Perm, bound: u64) -> Option<u64> {
        Some(a.order()).filter(|&o| o <= bound)
    }
}
