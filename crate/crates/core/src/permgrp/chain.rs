//! Deterministic Schreier-Sims.

use super::Perm;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    /// Strong generators fixing every earlier base point.
    pub gens: Vec<Perm>,
    pub orbit: Vec<usize>,
    /// `trans[p]` maps the base point to `p`, for `p` in the orbit.
    trans: Vec<Option<Perm>>,
}

impl Level {
    fn new(base: usize, gens: Vec<Perm>, degree: usize) -> Level {
        let mut l = Level { base, gens, orbit: Vec::new(), trans: Vec::new() };
        l.rebuild(degree);
        l
    }

    fn rebuild(&mut self, degree: usize) {
        let mut trans: Vec<Option<Perm>> = vec![None; degree];
        trans[self.base] = Some(Perm::identity(degree));
        let mut orbit = vec![self.base];
        let mut k = 0;
        while k < orbit.len() {
            let p = orbit[k];
            for s in &self.gens {
                let q = s.apply(p);
                if trans[q].is_none() {
                    trans[q] = Some(trans[p].as_ref().unwrap() * s);
                    orbit.push(q);
                }
            }
            k += 1;
        }
        self.orbit = orbit;
        self.trans = trans;
    }

    pub fn transversal(&self, p: usize) -> Option<&Perm> {
        self.trans[p].as_ref()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Chain {
    pub degree: usize,
    pub levels: Vec<Level>,
}

impl Chain {
    /// Builds a base and strong generating set, starting the base with `prefix`.
    pub fn new(degree: usize, gens: &[Perm], prefix: &[usize]) -> Chain {
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut base: Vec<usize> = prefix.to_vec();
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved().unwrap());
            }
        }
        let mut levels: Vec<Level> = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let gi = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&c| g.apply(c) == c))
                .cloned()
                .collect();
            levels.push(Level::new(b, gi, degree));
        }
        let mut chain = Chain { degree, levels };
        chain.complete();
        chain
    }

    /// Strips `g` through the levels from `from`; returns the residue and
    /// the level where it dropped out (`levels.len()` if it got through).
    pub fn sift(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let beta = h.apply(level.base);
            match level.transversal(beta) {
                Some(u) => h = &h * &u.inv(),
                None => return (h, l),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, l) = self.sift(g, 0);
        l == self.levels.len() && h.is_identity()
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            let mut found: Option<(Perm, usize)> = None;
            'scan: for &beta in &self.levels[iu].orbit {
                let ub = self.levels[iu].transversal(beta).unwrap();
                for x in &self.levels[iu].gens {
                    let ubx = ub * x;
                    let gamma = x.apply(beta);
                    let ug = self.levels[iu].transversal(gamma).unwrap();
                    if &ubx == ug {
                        continue;
                    }
                    let h = &ubx * &ug.inv();
                    let (r, j) = self.sift(&h, iu + 1);
                    if j < self.levels.len() || !r.is_identity() {
                        found = Some((r, j));
                        break 'scan;
                    }
                }
            }
            match found {
                None => i -= 1,
                Some((r, j)) => {
                    if j == self.levels.len() {
                        let b = r.first_moved().unwrap();
                        self.levels.push(Level::new(b, Vec::new(), self.degree));
                    }
                    for l in iu + 1..=j {
                        self.levels[l].gens.push(r.clone());
                        self.levels[l].rebuild(self.degree);
                    }
                    i = j as isize;
                }
            }
        }
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Calls `f` on every element; stops early when `f` returns false.
    pub fn for_each_element<F: FnMut(&Perm) -> bool>(&self, mut f: F) {
        fn rec<F: FnMut(&Perm) -> bool>(c: &Chain, l: usize, suffix: &Perm, f: &mut F) -> bool {
            if l == c.levels.len() {
                return f(suffix);
            }
            // g = (deeper part) * u_l * suffix
            let level = &c.levels[l];
            for &p in &level.orbit {
                let g = level.transversal(p).unwrap() * suffix;
                if !rec(c, l + 1, &g, f) {
                    return false;
                }
            }
            true
        }
        rec(self, 0, &Perm::identity(self.degree), &mut f);
    }
}
