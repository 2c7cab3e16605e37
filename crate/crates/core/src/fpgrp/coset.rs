//! Todd-Coxeter coset enumeration (Felsch and HLT strategies).

use super::parse::{free_reduce, Presentation, Word};
use super::FpError;
use crate::permgrp::{Perm, PermGroup};

/// Default bound on the number of cosets defined during one enumeration.
pub const DEFAULT_COSET_CAP: usize = 2_000_000;

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Felsch,
    Hlt,
}

#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    pub strategy: Strategy,
    pub cap: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { strategy: Strategy::Felsch, cap: DEFAULT_COSET_CAP }
    }
}

/// A complete coset table in standard (breadth-first) numbering; coset 0
/// is the subgroup itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    /// `images[g][c]` is the coset `c * g`.
    images: Vec<Vec<u32>>,
    inverse_images: Vec<Vec<u32>>,
    /// Total cosets defined while enumerating.
    pub defined: usize,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.images.first().map_or(1, Vec::len)
    }

    pub fn generator_count(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, c: usize, g: usize) -> usize {
        self.images[g][c] as usize
    }

    pub fn apply_letter(&self, c: usize, l: i32) -> usize {
        let g = l.unsigned_abs() as usize - 1;
        if l > 0 {
            self.images[g][c] as usize
        } else {
            self.inverse_images[g][c] as usize
        }
    }

    pub fn trace(&self, c: usize, w: &[i32]) -> usize {
        w.iter().fold(c, |c, &l| self.apply_letter(c, l))
    }

    /// Permutation action of the generators on the cosets.
    pub fn perm_rep(&self) -> Result<PermGroup, FpError> {
        let n = self.index();
        let gens = self
            .images
            .iter()
            .map(|col| Perm::from_images(col.iter().map(|&c| c as usize).collect()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| FpError::Incomplete)?;
        PermGroup::new(n, gens).map_err(|_| FpError::Incomplete)
    }

    pub fn generator_perm(&self, g: usize) -> Perm {
        Perm::from_images(self.images[g].iter().map(|&c| c as usize).collect()).unwrap()
    }
}

struct Enumerator {
    ncols: usize,
    inv_col: Vec<usize>,
    /// Column of each generator and of its inverse.
    gen_col: Vec<(usize, usize)>,
    table: Vec<u32>,
    forward: Vec<u32>,
    rels: Vec<Vec<usize>>,
    /// Cyclic conjugates of relators and their inverses, by first column.
    rels_by_first: Vec<Vec<Vec<usize>>>,
    deductions: Vec<(u32, usize)>,
    queue: Vec<u32>,
    cap: usize,
}

impl Enumerator {
    fn new(p: &Presentation, cap: usize) -> Enumerator {
        let ng = p.generator_count();
        // generators with a relator g^2 share one column with their inverse
        let involutory: Vec<bool> = (0..ng)
            .map(|g| p.relators.iter().any(|r| r.len() == 2 && r[0] == r[1] && r[0].unsigned_abs() as usize == g + 1))
            .collect();
        let mut gen_col = Vec::with_capacity(ng);
        let mut inv_col = Vec::new();
        for &inv in &involutory {
            let c = inv_col.len();
            if inv {
                inv_col.push(c);
                gen_col.push((c, c));
            } else {
                inv_col.push(c + 1);
                inv_col.push(c);
                gen_col.push((c, c + 1));
            }
        }
        let ncols = inv_col.len();
        let to_cols = |w: &[i32]| -> Vec<usize> {
            w.iter()
                .map(|&l| {
                    let (a, b) = gen_col[l.unsigned_abs() as usize - 1];
                    if l > 0 {
                        a
                    } else {
                        b
                    }
                })
                .collect()
        };
        let mut rels: Vec<Vec<usize>> = Vec::new();
        for r in &p.relators {
            // involution relators are built into the column structure
            let cols = to_cols(&cyclic_reduce(r));
            if cols.is_empty() || (cols.len() == 2 && cols[0] == cols[1] && inv_col[cols[0]] == cols[0]) {
                continue;
            }
            if !rels.contains(&cols) {
                rels.push(cols);
            }
        }
        let mut rels_by_first: Vec<Vec<Vec<usize>>> = vec![Vec::new(); ncols];
        for r in &rels {
            let inv: Vec<usize> = r.iter().rev().map(|&c| inv_col[c]).collect();
            for w in [r, &inv] {
                for k in 0..w.len() {
                    let rot: Vec<usize> = w[k..].iter().chain(&w[..k]).copied().collect();
                    let bucket = &mut rels_by_first[rot[0]];
                    if !bucket.contains(&rot) {
                        bucket.push(rot);
                    }
                }
            }
        }
        Enumerator {
            ncols,
            inv_col,
            gen_col,
            table: vec![NONE; ncols],
            forward: vec![0],
            rels,
            rels_by_first,
            deductions: Vec::new(),
            queue: Vec::new(),
            cap,
        }
    }

    fn cols_of(&self, w: &[i32]) -> Vec<usize> {
        w.iter()
            .map(|&l| {
                let (a, b) = self.gen_col[l.unsigned_abs() as usize - 1];
                if l > 0 {
                    a
                } else {
                    b
                }
            })
            .collect()
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.ncols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.ncols + x] = d;
    }

    fn ncosets(&self) -> usize {
        self.forward.len()
    }

    fn live(&self, c: u32) -> bool {
        self.forward[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<u32, FpError> {
        let d = self.ncosets();
        if d >= self.cap {
            return Err(FpError::Inconclusive { cosets: d });
        }
        let d = d as u32;
        self.forward.push(d);
        self.table.extend(std::iter::repeat(NONE).take(self.ncols));
        self.set(c, x, d);
        self.set(d, self.inv_col[x], c);
        self.deductions.push((c, x));
        Ok(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.forward[r as usize] != r {
            r = self.forward[r as usize];
        }
        let mut k = c;
        while self.forward[k as usize] != r {
            let next = self.forward[k as usize];
            self.forward[k as usize] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.forward[hi as usize] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.ncols {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                let xi = self.inv_col[x];
                if self.get(f, xi) == e {
                    self.set(f, xi, NONE);
                }
                let (e1, f1) = (self.rep(e), self.rep(f));
                let ex = self.get(e1, x);
                if ex != NONE {
                    self.merge(f1, ex);
                } else {
                    let fxi = self.get(f1, xi);
                    if fxi != NONE {
                        self.merge(e1, fxi);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, xi, e1);
                        self.deductions.push((e1, x));
                    }
                }
            }
        }
    }

    /// Scans `w` at `c`, defining new cosets when `fill` is set.
    fn scan(&mut self, c: u32, w: &[usize], fill: bool) -> Result<(), FpError> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j {
                let n = self.get(f, w[i]);
                if n == NONE {
                    break;
                }
                f = n;
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize {
                let n = self.get(b, self.inv_col[w[j as usize]]);
                if n == NONE {
                    break;
                }
                b = n;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.set(f, w[i], b);
                self.set(b, self.inv_col[w[i]], f);
                self.deductions.push((f, w[i]));
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn process_deductions(&mut self) {
        while let Some((c, x)) = self.deductions.pop() {
            if !self.live(c) {
                continue;
            }
            for k in 0..self.rels_by_first[x].len() {
                let w = std::mem::take(&mut self.rels_by_first[x][k]);
                let _ = self.scan(c, &w, false);
                self.rels_by_first[x][k] = w;
                if !self.live(c) {
                    break;
                }
            }
            if !self.live(c) {
                continue;
            }
            let d = self.get(c, x);
            if d == NONE || !self.live(d) {
                continue;
            }
            let xi = self.inv_col[x];
            for k in 0..self.rels_by_first[xi].len() {
                let w = std::mem::take(&mut self.rels_by_first[xi][k]);
                let _ = self.scan(d, &w, false);
                self.rels_by_first[xi][k] = w;
                if !self.live(d) {
                    break;
                }
            }
        }
    }

    fn felsch(&mut self, subgroup: &[Vec<usize>]) -> Result<(), FpError> {
        for w in subgroup {
            let r = self.rep(0);
            self.scan(r, w, true)?;
            self.process_deductions();
        }
        let mut c = 0usize;
        loop {
            while c < self.ncosets() {
                let cu = c as u32;
                if self.live(cu) && (0..self.ncols).any(|x| self.get(cu, x) == NONE) {
                    break;
                }
                c += 1;
            }
            if c == self.ncosets() {
                return Ok(());
            }
            let cu = c as u32;
            let x = (0..self.ncols).find(|&x| self.get(cu, x) == NONE).unwrap();
            self.define(cu, x)?;
            self.process_deductions();
        }
    }

    fn hlt(&mut self, subgroup: &[Vec<usize>]) -> Result<(), FpError> {
        for w in subgroup {
            let r = self.rep(0);
            self.scan(r, w, true)?;
        }
        let rels = self.rels.clone();
        let mut c = 0usize;
        while c < self.ncosets() {
            let cu = c as u32;
            for r in &rels {
                if !self.live(cu) {
                    break;
                }
                self.scan(cu, r, true)?;
            }
            if self.live(cu) {
                for x in 0..self.ncols {
                    if self.get(cu, x) == NONE {
                        self.define(cu, x)?;
                    }
                }
            }
            self.deductions.clear();
            c += 1;
        }
        Ok(())
    }

    /// Renumbers the live cosets breadth-first from the subgroup coset.
    fn standardize(&mut self, ngens: usize) -> CosetTable {
        let start = self.rep(0);
        let mut number = vec![NONE; self.ncosets()];
        let mut order = vec![start];
        number[start as usize] = 0;
        let mut k = 0;
        while k < order.len() {
            let c = order[k];
            for x in 0..self.ncols {
                let d = self.get(c, x);
                if number[d as usize] == NONE {
                    number[d as usize] = order.len() as u32;
                    order.push(d);
                }
            }
            k += 1;
        }
        let mut images = vec![Vec::with_capacity(order.len()); ngens];
        let mut inverse_images = vec![Vec::with_capacity(order.len()); ngens];
        for &c in &order {
            for g in 0..ngens {
                let (a, b) = self.gen_col[g];
                images[g].push(number[self.get(c, a) as usize]);
                inverse_images[g].push(number[self.get(c, b) as usize]);
            }
        }
        CosetTable { images, inverse_images, defined: self.ncosets() }
    }
}

fn cyclic_reduce(w: &[i32]) -> Word {
    let mut v = free_reduce(w);
    while v.len() >= 2 && v[0] == -v[v.len() - 1] {
        v = v[1..v.len() - 1].to_vec();
    }
    v
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in the
/// group given by `p`.
pub fn coset_enumerate(p: &Presentation, subgroup: &[Word], opts: EnumOptions) -> Result<CosetTable, FpError> {
    let mut e = Enumerator::new(p, opts.cap);
    let sub: Vec<Vec<usize>> = subgroup
        .iter()
        .map(|w| e.cols_of(&free_reduce(w)))
        .filter(|w| !w.is_empty())
        .collect();
    match opts.strategy {
        Strategy::Felsch => e.felsch(&sub)?,
        Strategy::Hlt => e.hlt(&sub)?,
    }
    Ok(e.standardize(p.generator_count()))
}

/// Order of the group given by `p`.
pub fn group_order(p: &Presentation, opts: EnumOptions) -> Result<usize, FpError> {
    Ok(coset_enumerate(p, &[], opts)?.index())
}

pub(crate) fn relator_holds(t: &CosetTable, r: &[i32]) -> bool {
    (0..t.index()).all(|c| t.trace(c, r) == c)
}
