use serde::Serialize;

use crate::ratlin::{q, Scalar};

/// A fusion law: eigenvalues, a symmetric rule and a Z2-grading.
#[derive(Clone, Debug, Serialize)]
pub struct FusionLaw {
    pub eigenvalues: Vec<Scalar>,
    /// `rule[i][j]` lists indices into `eigenvalues`.
    rule: Vec<Vec<Vec<usize>>>,
    /// Indices of the minus part of the grading.
    minus: Vec<usize>,
}

impl FusionLaw {
    /// The Monster fusion law on `{1, 0, 1/4, 1/32}`.
    pub fn monster() -> FusionLaw {
        // 0: 1, 1: 0, 2: 1/4, 3: 1/32
        let r = |v: &[usize]| v.to_vec();
        let rule = vec![
            vec![r(&[0]), r(&[]), r(&[2]), r(&[3])],
            vec![r(&[]), r(&[1]), r(&[2]), r(&[3])],
            vec![r(&[2]), r(&[2]), r(&[0, 1]), r(&[3])],
            vec![r(&[3]), r(&[3]), r(&[3]), r(&[0, 1, 2])],
        ];
        FusionLaw {
            eigenvalues: vec![Scalar::one(), Scalar::zero(), q(1, 4), q(1, 32)],
            rule,
            minus: vec![3],
        }
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn index_of(&self, lambda: &Scalar) -> Option<usize> {
        self.eigenvalues.iter().position(|x| x == lambda)
    }

    pub fn rule_idx(&self, i: usize, j: usize) -> &[usize] {
        &self.rule[i][j]
    }

    pub fn rule(&self, lambda: &Scalar, mu: &Scalar) -> Vec<Scalar> {
        match (self.index_of(lambda), self.index_of(mu)) {
            (Some(i), Some(j)) => self.rule[i][j].iter().map(|&k| self.eigenvalues[k].clone()).collect(),
            _ => Vec::new(),
        }
    }

    pub fn is_minus(&self, i: usize) -> bool {
        self.minus.contains(&i)
    }

    pub fn minus_part(&self) -> Vec<Scalar> {
        self.minus.iter().map(|&i| self.eigenvalues[i].clone()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|i| (0..self.len()).all(|j| self.rule[i][j] == self.rule[j][i]))
    }

    /// Checks `F_s * F_t ⊆ F_{st}` for the grading.
    pub fn grading_respected(&self) -> bool {
        (0..self.len()).all(|i| {
            (0..self.len()).all(|j| {
                let sign = self.is_minus(i) != self.is_minus(j);
                self.rule[i][j].iter().all(|&k| self.is_minus(k) == sign)
            })
        })
    }
}
