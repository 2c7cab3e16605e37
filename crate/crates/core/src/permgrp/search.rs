//! Normalizer of a permutation group in the full symmetric group.

use std::collections::BTreeMap;

use super::{Perm, PermError, PermGroup};

fn conjugates_into(g: &PermGroup, n: &Perm) -> bool {
    g.generators().iter().all(|x| g.contains(&x.conj(n)))
}

/// Runs through all of Sym(n); only sensible for small degrees.
pub(crate) fn normalizer_brute(g: &PermGroup) -> Vec<Perm> {
    let n = g.degree();
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    loop {
        let p = Perm::from_images(a.clone()).unwrap();
        if conjugates_into(g, &p) {
            out.push(p);
        }
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| a[i - 1] < a[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| a[j] > a[i - 1]).unwrap();
        a.swap(i - 1, j);
        a[i..].reverse();
    }
    out
}

/// An element `m` of the normalizer conjugates each generator `g_i` to some
/// `h_i` in the group with the same cycle type, and then satisfies
/// `m(p^{g_i}) = m(p)^{h_i}`. Fixing the `h_i` and the image of one point
/// per orbit determines `m`, so we backtrack over those choices.
pub(crate) fn normalizer_backtrack(g: &PermGroup, cap: u64) -> Result<Vec<Perm>, PermError> {
    let n = g.degree();
    let gens: Vec<Perm> = g.generators().iter().filter(|x| !x.is_identity()).cloned().collect();
    let mut by_type: BTreeMap<Vec<usize>, Vec<Perm>> = BTreeMap::new();
    if !gens.is_empty() {
        for x in g.elements_capped(cap)? {
            by_type.entry(x.cycle_type()).or_default().push(x);
        }
    }
    let candidates: Vec<&Vec<Perm>> = gens.iter().map(|x| &by_type[&x.cycle_type()]).collect();
    let reps: Vec<usize> = g.orbits().iter().map(|o| o[0]).collect();

    struct St<'a> {
        n: usize,
        gens: &'a [Perm],
        cands: &'a [&'a Vec<Perm>],
        reps: &'a [usize],
        chosen: Vec<&'a Perm>,
        map: Vec<Option<usize>>,
        used: Vec<bool>,
        nodes: u64,
        cap: u64,
        out: Vec<Perm>,
    }

    impl<'a> St<'a> {
        fn tick(&mut self) -> Result<(), PermError> {
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(PermError::CapExceeded(format!("normalizer search exceeded {} nodes", self.cap)));
            }
            Ok(())
        }

        fn choose_h(&mut self, i: usize) -> Result<(), PermError> {
            if i == self.gens.len() {
                return self.choose_rep(0);
            }
            let cands = self.cands[i];
            for h in cands.iter() {
                self.tick()?;
                self.chosen.push(h);
                self.choose_h(i + 1)?;
                self.chosen.pop();
            }
            Ok(())
        }

        /// Sets `m(r) = c` and propagates over the orbit of `r`; returns the
        /// newly assigned points, or None on a contradiction (after undoing).
        fn propagate(&mut self, r: usize, c: usize) -> Option<Vec<usize>> {
            let mut assigned = vec![r];
            self.map[r] = Some(c);
            self.used[c] = true;
            let mut k = 0;
            while k < assigned.len() {
                let p = assigned[k];
                let mp = self.map[p].unwrap();
                for (x, h) in self.gens.iter().zip(&self.chosen) {
                    let q = x.apply(p);
                    let mq = h.apply(mp);
                    match self.map[q] {
                        Some(v) if v == mq => {}
                        Some(_) => {
                            self.undo(&assigned);
                            return None;
                        }
                        None => {
                            if self.used[mq] {
                                self.undo(&assigned);
                                return None;
                            }
                            self.map[q] = Some(mq);
                            self.used[mq] = true;
                            assigned.push(q);
                        }
                    }
                }
                k += 1;
            }
            Some(assigned)
        }

        fn undo(&mut self, assigned: &[usize]) {
            for &p in assigned {
                if let Some(c) = self.map[p].take() {
                    self.used[c] = false;
                }
            }
        }

        fn choose_rep(&mut self, j: usize) -> Result<(), PermError> {
            if j == self.reps.len() {
                let imgs: Vec<usize> = self.map.iter().map(|m| m.unwrap()).collect();
                self.out.push(Perm::from_images(imgs).unwrap());
                return Ok(());
            }
            let r = self.reps[j];
            for c in 0..self.n {
                if self.used[c] {
                    continue;
                }
                self.tick()?;
                if let Some(assigned) = self.propagate(r, c) {
                    self.choose_rep(j + 1)?;
                    self.undo(&assigned);
                }
            }
            Ok(())
        }
    }

    let mut st = St {
        n,
        gens: &gens,
        cands: &candidates,
        reps: &reps,
        chosen: Vec::new(),
        map: vec![None; n],
        used: vec![false; n],
        nodes: 0,
        cap,
        out: Vec::new(),
    };
    st.choose_h(0)?;
    Ok(st.out)
}
