//! Element arithmetic read off a complete coset table of the trivial subgroup.

use super::coset::{coset_enumerate, CosetTable, EnumOptions};
use super::parse::{Presentation, Word};
use super::FpError;
use crate::permgrp::GroupOps;

/// A finite group whose elements are the cosets of the trivial subgroup.
///
/// Element `c` is represented by a word reaching coset `c` from coset 0, so
/// `a * b` is the coset reached from `a` along the word of `b`. No
/// permutation of degree `|G|` is ever stored.
#[derive(Clone, Debug)]
pub struct RegularGroup {
    table: CosetTable,
    /// Breadth-first spanning tree: generator used to reach each element and
    /// its parent.
    parent: Vec<(u32, u32)>,
    words: Vec<Word>,
}

impl RegularGroup {
    pub fn new(table: CosetTable) -> RegularGroup {
        let n = table.index();
        let ng = table.generator_count();
        let mut parent = vec![(u32::MAX, u32::MAX); n];
        let mut words: Vec<Word> = vec![Vec::new(); n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut order = vec![0usize];
        let mut k = 0;
        while k < order.len() {
            let c = order[k];
            for g in 0..ng {
                let d = table.image(c, g);
                if !seen[d] {
                    seen[d] = true;
                    parent[d] = (c as u32, g as u32);
                    let mut w = words[c].clone();
                    w.push(g as i32 + 1);
                    words[d] = w;
                    order.push(d);
                }
            }
            k += 1;
        }
        RegularGroup { table, parent, words }
    }

    pub fn from_presentation(p: &Presentation, opts: EnumOptions) -> Result<RegularGroup, FpError> {
        Ok(RegularGroup::new(coset_enumerate(p, &[], opts)?))
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    pub fn size(&self) -> usize {
        self.table.index()
    }

    pub fn word_of(&self, c: u32) -> &Word {
        &self.words[c as usize]
    }

    /// The element represented by a word.
    pub fn element(&self, w: &[i32]) -> u32 {
        self.table.trace(0, w) as u32
    }

    pub fn generator(&self, g: usize) -> u32 {
        self.table.image(0, g) as u32
    }

    pub fn parent(&self, c: u32) -> Option<(u32, usize)> {
        let (p, g) = self.parent[c as usize];
        (p != u32::MAX).then_some((p, g as usize))
    }
}

impl GroupOps for RegularGroup {
    type Elt = u32;

    fn identity(&self) -> u32 {
        0
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.table.trace(*a as usize, &self.words[*b as usize]) as u32
    }

    fn inv(&self, a: &u32) -> u32 {
        let w = &self.words[*a as usize];
        w.iter().rev().fold(0usize, |c, &l| self.table.apply_letter(c, -l)) as u32
    }

    fn gens(&self) -> Vec<u32> {
        (0..self.table.generator_count()).map(|g| self.generator(g)).collect()
    }

    fn order(&self) -> u128 {
        self.size() as u128
    }

    fn enumerate(&self) -> Vec<u32> {
        (0..self.size() as u32).collect()
    }
}
