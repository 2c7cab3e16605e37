//! k-transposition tests and similarity of generating triples.

use std::collections::{HashMap, HashSet};

use super::FpError;
use crate::permgrp::GroupOps;

/// Default largest group order for the similarity search.
pub const SIMILARITY_ORDER_CAP: u128 = 2500;

/// True iff any two elements of the union of the classes of `reps` have a
/// product of order at most `k`.
pub fn is_k_transposition<G: GroupOps>(g: &G, reps: &[G::Elt], k: u64) -> Result<bool, FpError> {
    let id = g.identity();
    for r in reps {
        if *r == id || g.mul(r, r) != id {
            return Err(FpError::NotInvolution(format!("{:?}", r)));
        }
    }
    let mut d: Vec<G::Elt> = Vec::new();
    let mut seen: HashSet<G::Elt> = HashSet::new();
    for r in reps {
        if seen.contains(r) {
            continue;
        }
        for s in g.class(r) {
            if seen.insert(s.clone()) {
                d.push(s);
            }
        }
    }
    // up to conjugation the first factor is one of the representatives
    for s in reps {
        for t in &d {
            if g.elt_order(&g.mul(s, t), k).is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Orders of a few words in a triple, used to prune the similarity search.
fn invariants<G: GroupOps>(g: &G, t: &[G::Elt; 3]) -> Vec<Option<u64>> {
    let [x, y, z] = t;
    let words = [
        g.mul(x, y),
        g.mul(x, z),
        g.mul(y, z),
        g.mul(x, &g.conj(y, z)),
        g.mul(x, &g.conj(z, y)),
        g.mul(y, &g.conj(z, x)),
        g.mul(&g.mul(x, y), z),
    ];
    words.iter().map(|w| g.elt_order(w, 1 << 16)).collect()
}

/// Decides whether `(g, t)` and `(h, u)` are similar: some isomorphism
/// `phi: g -> h` carries the multiset of classes of `t` to that of `u`.
/// Both triples must generate their groups.
pub fn similar<G: GroupOps, H: GroupOps>(
    g: &G,
    t: &[G::Elt; 3],
    h: &H,
    u: &[H::Elt; 3],
    cap: u128,
) -> Result<bool, FpError> {
    if g.order() != h.order() {
        return Ok(false);
    }
    if g.order() > cap {
        return Err(FpError::Inconclusive { cosets: g.order() as usize });
    }
    // classes of h, keyed by their smallest element
    let mut class_of: HashMap<H::Elt, H::Elt> = HashMap::new();
    let mut d: Vec<H::Elt> = Vec::new();
    let mut target: Vec<H::Elt> = Vec::new();
    for v in u {
        if !class_of.contains_key(v) {
            let cl = h.class(v);
            let key = cl[0].clone();
            for w in cl {
                class_of.insert(w.clone(), key.clone());
                d.push(w);
            }
        }
        target.push(class_of[v].clone());
    }
    target.sort();
    let inv_g = invariants(g, t);
    let elts_g = g.enumerate();
    if elts_g.len() as u128 != g.order() {
        return Ok(false);
    }

    let mut firsts: Vec<H::Elt> = target.clone();
    firsts.dedup();
    for a in &firsts {
        for b in &d {
            if h.elt_order(&h.mul(a, b), 1 << 16) != inv_g[0] {
                continue;
            }
            for c in &d {
                let cand = [a.clone(), b.clone(), c.clone()];
                let mut cls: Vec<H::Elt> = cand.iter().map(|e| class_of[e].clone()).collect();
                cls.sort();
                if cls != target || invariants(h, &cand) != inv_g {
                    continue;
                }
                if extends_to_isomorphism(g, t, h, &cand) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Checks that `t[i] -> img[i]` extends to an isomorphism, walking the
/// Cayley graph of `g` with respect to `t`.
fn extends_to_isomorphism<G: GroupOps, H: GroupOps>(g: &G, t: &[G::Elt; 3], h: &H, img: &[H::Elt; 3]) -> bool {
    let mut phi: HashMap<G::Elt, H::Elt> = HashMap::new();
    phi.insert(g.identity(), h.identity());
    let mut queue = vec![g.identity()];
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k].clone();
        let px = phi[&x].clone();
        for (s, s2) in t.iter().zip(img) {
            let y = g.mul(&x, s);
            let py = h.mul(&px, s2);
            match phi.get(&y) {
                Some(v) if *v != py => return false,
                Some(_) => {}
                None => {
                    phi.insert(y.clone(), py);
                    queue.push(y);
                }
            }
        }
        k += 1;
    }
    if phi.len() as u128 != g.order() {
        return false;
    }
    let image: HashSet<&H::Elt> = phi.values().collect();
    image.len() as u128 == h.order()
}
