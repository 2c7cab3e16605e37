use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use super::chain::Chain;
use super::{Perm, PermError};

/// Default cap on backtrack nodes and enumerated elements.
pub const DEFAULT_NODE_CAP: u64 = 10_000_000;

/// A permutation group given by generators, with an eagerly built
/// stabilizer chain.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: Chain,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<PermGroup, PermError> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(PermError::Degree { expected: degree, found: g.degree() });
        }
        let chain = Chain::new(degree, &gens, &[]);
        Ok(PermGroup { degree, gens, chain })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new()).unwrap()
    }

    pub fn symmetric(n: usize) -> PermGroup {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[&[0, 1]]).unwrap());
        }
        if n >= 3 {
            let c: Vec<usize> = (0..n).collect();
            gens.push(Perm::from_cycles(n, &[&c]).unwrap());
        }
        PermGroup::new(n, gens).unwrap()
    }

    /// Parses generators in cycle notation.
    pub fn from_cycles(degree: usize, gens: &[&str]) -> Result<PermGroup, PermError> {
        let gens = gens
            .iter()
            .map(|s| Perm::parse_cycles(degree, s))
            .collect::<Result<Vec<_>, _>>()?;
        PermGroup::new(degree, gens)
    }

    /// Builds the group generated by `elts`, keeping only the elements
    /// needed as generators.
    pub fn generated_by<'a, I: IntoIterator<Item = &'a Perm>>(degree: usize, elts: I) -> PermGroup {
        let mut g = PermGroup::trivial(degree);
        for x in elts {
            if !g.contains(x) {
                let mut gens = g.gens.clone();
                gens.push(x.clone());
                g = PermGroup::new(degree, gens).unwrap();
            }
        }
        g
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.gens.iter().all(|g| other.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other.gens.iter().all(|h| self.gens.iter().all(|g| self.contains(&g.conj(h))))
    }

    /// All elements, in chain order. Fails beyond `cap` elements.
    pub fn elements_capped(&self, cap: u64) -> Result<Vec<Perm>, PermError> {
        if self.order() > cap as u128 {
            return Err(PermError::CapExceeded(format!(
                "group of order {} exceeds element cap {}",
                self.order(),
                cap
            )));
        }
        let mut out = Vec::with_capacity(self.order() as usize);
        self.chain.for_each_element(|g| {
            out.push(g.clone());
            true
        });
        Ok(out)
    }

    pub fn elements(&self) -> Vec<Perm> {
        self.elements_capped(DEFAULT_NODE_CAP).expect("group too large to enumerate")
    }

    /// Elements obtained by closing the generators under multiplication,
    /// without using the stabilizer chain.
    pub fn elements_by_closure(&self) -> Vec<Perm> {
        let id = self.identity();
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &self.gens {
                let y = &x * g;
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut v: Vec<Perm> = seen.into_iter().collect();
        v.sort();
        v
    }

    pub fn orbit(&self, p: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[p] = true;
        let mut out = vec![p];
        let mut k = 0;
        while k < out.len() {
            let x = out[k];
            for g in &self.gens {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            k += 1;
        }
        out.sort_unstable();
        out
    }

    /// Orbits sorted by their smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut done = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if !done[p] {
                let o = self.orbit(p);
                for &q in &o {
                    done[q] = true;
                }
                out.push(o);
            }
        }
        out
    }

    /// Pointwise stabilizer of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> PermGroup {
        let chain = Chain::new(self.degree, &self.gens, points);
        let gens = chain
            .levels
            .get(points.len())
            .map(|l| l.gens.clone())
            .unwrap_or_default();
        // later levels only hold generators already present at this level
        PermGroup::new(self.degree, gens).unwrap()
    }

    pub fn stabilizer(&self, p: usize) -> PermGroup {
        self.pointwise_stabilizer(&[p])
    }

    /// Setwise stabilizer of `set`.
    pub fn set_stabilizer(&self, set: &[usize]) -> PermGroup {
        let mut mark = vec![false; self.degree];
        for &p in set {
            mark[p] = true;
        }
        self.subgroup_search(|g| set.iter().all(|&p| mark[g.apply(p)]), |_, _| true, DEFAULT_NODE_CAP)
            .expect("set stabilizer search exceeded node cap")
    }

    /// The subgroup of elements satisfying `pred`, which must define a
    /// subgroup. `prune(base, images)` may reject a partial base image.
    pub fn subgroup_search<P, Q>(&self, pred: P, prune: Q, cap: u64) -> Result<PermGroup, PermError>
    where
        P: Fn(&Perm) -> bool,
        Q: Fn(&[usize], &[usize]) -> bool,
    {
        let base: Vec<usize> = self.chain.base();
        let mut found = PermGroup::trivial(self.degree);
        let mut nodes = 0u64;
        let mut images: Vec<usize> = Vec::with_capacity(base.len());

        #[allow(clippy::too_many_arguments)]
        fn rec<P: Fn(&Perm) -> bool, Q: Fn(&[usize], &[usize]) -> bool>(
            g: &PermGroup,
            base: &[usize],
            l: usize,
            suffix: &Perm,
            images: &mut Vec<usize>,
            pred: &P,
            prune: &Q,
            found: &mut PermGroup,
            nodes: &mut u64,
            cap: u64,
        ) -> Result<(), PermError> {
            *nodes += 1;
            if *nodes > cap {
                return Err(PermError::CapExceeded(format!("subgroup search exceeded {} nodes", cap)));
            }
            let levels = &g.chain.levels;
            if l == levels.len() {
                if !found.contains(suffix) && pred(suffix) {
                    let mut gens = found.gens.clone();
                    gens.push(suffix.clone());
                    *found = PermGroup::new(g.degree, gens).unwrap();
                }
                return Ok(());
            }
            for &p in &levels[l].orbit {
                let x = levels[l].transversal(p).unwrap() * suffix;
                images.push(x.apply(base[l]));
                let ok = prune(&base[..=l], images);
                if ok {
                    rec(g, base, l + 1, &x, images, pred, prune, found, nodes, cap)?;
                }
                images.pop();
            }
            Ok(())
        }

        rec(self, &base, 0, &self.identity(), &mut images, &pred, &prune, &mut found, &mut nodes, cap)?;
        Ok(found)
    }

    pub fn centralizer(&self, x: &Perm) -> Result<PermGroup, PermError> {
        if !self.contains(x) {
            return Err(PermError::NotInGroup(x.to_string()));
        }
        if x.is_identity() {
            return Ok(self.clone());
        }
        let cyc: Vec<usize> = (0..self.degree).map(|p| x.cycle_len(p)).collect();
        let prune = |base: &[usize], imgs: &[usize]| {
            let l = base.len() - 1;
            let (b, c) = (base[l], imgs[l]);
            if cyc[b] != cyc[c] {
                return false;
            }
            // earlier base points in the same x-cycle fix the image
            for j in 0..l {
                let mut p = base[j];
                let mut q = imgs[j];
                for _ in 0..cyc[base[j]] {
                    if p == b {
                        return q == c;
                    }
                    p = x.apply(p);
                    q = x.apply(q);
                }
            }
            true
        };
        self.subgroup_search(|h| &(x * h) == &(h * x), prune, DEFAULT_NODE_CAP)
    }

    /// Centralizer of a subgroup.
    pub fn centralizer_of_group(&self, h: &PermGroup) -> Result<PermGroup, PermError> {
        let mut c = self.clone();
        for g in h.generators() {
            c = c.subgroup_search(|y| &(g * y) == &(y * g), |_, _| true, DEFAULT_NODE_CAP)?;
        }
        Ok(c)
    }

    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        if other.is_subgroup_of(self) {
            return other.clone();
        }
        self.subgroup_search(|g| other.contains(g), |_, _| true, DEFAULT_NODE_CAP)
            .expect("intersection search exceeded node cap")
    }

    /// Conjugacy class of `x` under this group, sorted.
    pub fn conjugacy_class(&self, x: &Perm) -> Vec<Perm> {
        let mut seen: HashSet<Perm> = HashSet::from([x.clone()]);
        let mut queue = VecDeque::from([x.clone()]);
        while let Some(y) = queue.pop_front() {
            for g in &self.gens {
                let z = y.conj(g);
                if seen.insert(z.clone()) {
                    queue.push_back(z);
                }
            }
        }
        let mut v: Vec<Perm> = seen.into_iter().collect();
        v.sort();
        v
    }

    /// Normal closure of `elts` in this group.
    pub fn normal_closure(&self, elts: &[Perm]) -> PermGroup {
        let mut n = PermGroup::generated_by(self.degree, elts);
        loop {
            let extra: Vec<Perm> = n
                .gens
                .iter()
                .flat_map(|a| self.gens.iter().map(move |g| a.conj(g)))
                .filter(|c| !n.contains(c))
                .collect();
            if extra.is_empty() {
                return n;
            }
            let mut gens = n.gens.clone();
            gens.extend(extra);
            n = PermGroup::generated_by(self.degree, gens.iter());
        }
    }

    /// Conjugacy class representatives (smallest element of each class).
    pub fn class_representatives(&self) -> Vec<Perm> {
        let mut done: HashSet<Perm> = HashSet::new();
        let mut reps = Vec::new();
        let mut elts = self.elements();
        elts.sort();
        for x in elts {
            if done.contains(&x) {
                continue;
            }
            let cl = self.conjugacy_class(&x);
            reps.push(cl[0].clone());
            done.extend(cl);
        }
        reps
    }

    /// The largest normal 2-subgroup: generated by the elements whose
    /// normal closure is a 2-group.
    pub fn o2(&self) -> PermGroup {
        let mut o = PermGroup::trivial(self.degree);
        for x in self.class_representatives() {
            if x.is_identity() || !x.order().is_power_of_two() || o.contains(&x) {
                continue;
            }
            let nc = self.normal_closure(std::slice::from_ref(&x));
            if nc.order().is_power_of_two() {
                let mut gens = o.gens.clone();
                gens.extend(nc.gens.iter().cloned());
                o = PermGroup::generated_by(self.degree, gens.iter());
            }
        }
        o
    }

    /// True iff the largest normal subgroup contained in every member of
    /// `subgroups` is trivial.
    pub fn core_is_trivial(&self, subgroups: &[PermGroup]) -> bool {
        let mut inter = self.clone();
        for s in subgroups {
            inter = inter.intersection(s);
        }
        if inter.is_trivial() {
            return true;
        }
        // the core is the set of elements whose whole class lies in `inter`
        inter
            .elements()
            .iter()
            .filter(|x| !x.is_identity())
            .all(|x| !self.conjugacy_class(x).iter().all(|y| inter.contains(y)))
    }

    /// All subgroups `S` with `self <= S <= over` when the index is at most
    /// `max_index`.
    pub fn subgroups_up_to(&self, over: &PermGroup, max_index: u128) -> Result<Vec<PermGroup>, PermError> {
        if !self.is_subgroup_of(over) {
            return Err(PermError::NotInGroup("subgroup".into()));
        }
        let index = over.order() / self.order();
        if index > max_index {
            return Err(PermError::CapExceeded(format!("index {} above {}", index, max_index)));
        }
        let elts = over.elements();
        let key = |g: &PermGroup| -> BTreeSet<Perm> { g.elements().into_iter().collect() };
        let mut seen: HashSet<BTreeSet<Perm>> = HashSet::new();
        let mut out = vec![self.clone()];
        seen.insert(key(self));
        let mut k = 0;
        while k < out.len() {
            let s = out[k].clone();
            for x in &elts {
                if s.contains(x) {
                    continue;
                }
                let mut gens = s.gens.clone();
                gens.push(x.clone());
                let t = PermGroup::generated_by(self.degree, gens.iter());
                if seen.insert(key(&t)) {
                    out.push(t);
                }
            }
            k += 1;
        }
        out.sort_by_key(|g| g.order());
        Ok(out)
    }

    /// Normalizer of this group in the full symmetric group on its points.
    pub fn normalizer_in_sym(&self, max_degree: usize, cap: u64) -> Result<PermGroup, PermError> {
        let elts = self.normalizer_in_sym_elements(max_degree, cap)?;
        Ok(PermGroup::generated_by(self.degree, elts.iter()))
    }

    /// Every element of the normalizer in Sym(degree), sorted.
    pub fn normalizer_in_sym_elements(&self, max_degree: usize, cap: u64) -> Result<Vec<Perm>, PermError> {
        if self.degree > max_degree {
            return Err(PermError::CapExceeded(format!(
                "degree {} above normalizer cap {}",
                self.degree, max_degree
            )));
        }
        let mut v = if self.degree <= 8 {
            super::search::normalizer_brute(self)
        } else {
            super::search::normalizer_backtrack(self, cap)?
        };
        v.sort();
        Ok(v)
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(deg {}, order {}, gens [", self.degree, self.order())?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, "])")
    }
}
