//! Commutative algebras given by exact structure constants.

use std::collections::BTreeMap;

use serde::Serialize;

use super::FusionLaw;
use crate::ratlin::{Inertia, Matrix, Scalar, SparseVec};

/// A commutative algebra with a basis, a symmetric product table and an
/// optional bilinear form.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub labels: Vec<String>,
    products: Vec<Vec<SparseVec>>,
    pub form: Option<Matrix>,
}

/// Eigenspace data of one axis with respect to a fusion law.
#[derive(Clone, Debug, Serialize)]
pub struct AxisReport {
    pub idempotent: bool,
    /// Eigenvalues with nonzero eigenspace, in fusion-law order.
    pub spectrum: Vec<Scalar>,
    /// Eigenspace dimension for every fusion-law eigenvalue.
    pub dims: Vec<(Scalar, usize)>,
    pub semisimple: bool,
    pub primitive: bool,
    pub fusion_ok: bool,
    pub graded_ok: bool,
}

impl AxisReport {
    pub fn ok(&self) -> bool {
        self.idempotent && self.semisimple && self.primitive && self.fusion_ok && self.graded_ok
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FormReport {
    pub symmetric: bool,
    pub associates: bool,
    pub eigenspaces_perpendicular: bool,
    pub axis_norms_one: bool,
    pub inertia: Inertia,
}

impl FormReport {
    pub fn ok(&self) -> bool {
        self.symmetric && self.associates && self.eigenspaces_perpendicular && self.axis_norms_one
    }
}

impl Algebra {
    pub fn new(labels: Vec<String>) -> Algebra {
        let n = labels.len();
        Algebra { labels, products: vec![vec![SparseVec::new(); n]; n], form: None }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: SparseVec) {
        self.products[i][j] = v.clone();
        self.products[j][i] = v;
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i][j]
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let ab = a * b;
                for (k, c) in self.products[*i][*j].iter() {
                    *acc.entry(*k).or_default() += &(&ab * c);
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Matrix of `v -> x v` acting on column vectors.
    pub fn ad(&self, x: &SparseVec) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.mul(x, &SparseVec::unit(j));
            for (i, c) in col.iter() {
                m.set(*i, j, c.clone());
            }
        }
        m
    }

    pub fn form_value(&self, x: &SparseVec, y: &SparseVec) -> Option<Scalar> {
        self.form.as_ref().map(|g| g.bilinear(x, y))
    }

    /// Kernel of `ad_x - lambda` as sparse vectors.
    pub fn eigenspace(&self, x: &SparseVec, lambda: &Scalar) -> Vec<SparseVec> {
        self.ad(x)
            .shift(lambda)
            .kernel()
            .iter()
            .map(|v| SparseVec::from_dense(v))
            .collect()
    }

    /// Projections onto the eigenspaces of `ad_x`, assuming `ad_x` is
    /// semisimple with spectrum inside the fusion law.
    pub fn projections(&self, x: &SparseVec, law: &FusionLaw) -> Vec<Matrix> {
        let ad = self.ad(x);
        let n = self.dim();
        law.eigenvalues
            .iter()
            .map(|l| {
                let mut p = Matrix::identity(n);
                for m in &law.eigenvalues {
                    if m != l {
                        let f = ad.shift(m).scale(&(l - m).recip());
                        p = p.mul(&f).unwrap();
                    }
                }
                p
            })
            .collect()
    }

    /// Checks that a linear map (columns are images of basis vectors) is an
    /// algebra automorphism.
    pub fn is_automorphism(&self, t: &Matrix) -> bool {
        let n = self.dim();
        let img: Vec<SparseVec> = (0..n).map(|j| t.mul_sparse(&SparseVec::unit(j))).collect();
        (0..n).all(|i| {
            (i..n).all(|j| self.mul(&img[i], &img[j]) == t.mul_sparse(&self.products[i][j]))
        })
    }

    pub fn preserves_form(&self, t: &Matrix) -> bool {
        match &self.form {
            None => true,
            Some(g) => &t.transpose().mul(g).unwrap().mul(t).unwrap() == g,
        }
    }

    /// Miyamoto involution of `x`: negates the minus part of the grading.
    pub fn miyamoto(&self, x: &SparseVec, law: &FusionLaw) -> Matrix {
        let n = self.dim();
        let mut t = Matrix::zeros(n, n);
        for (k, p) in self.projections(x, law).iter().enumerate() {
            let sign = if law.is_minus(k) { -Scalar::one() } else { Scalar::one() };
            t = t.add(&p.scale(&sign));
        }
        t
    }

    pub fn verify_axis(&self, x: &SparseVec, law: &FusionLaw) -> AxisReport {
        let n = self.dim();
        let idempotent = &self.mul(x, x) == x;
        let spaces: Vec<Vec<SparseVec>> = law.eigenvalues.iter().map(|l| self.eigenspace(x, l)).collect();
        let dims: Vec<(Scalar, usize)> =
            law.eigenvalues.iter().cloned().zip(spaces.iter().map(Vec::len)).collect();
        let semisimple = spaces.iter().map(Vec::len).sum::<usize>() == n;
        let primitive = law
            .index_of(&Scalar::one())
            .is_some_and(|i| spaces[i].len() == 1 && spaces[i][0].nnz() > 0);
        let spectrum = dims.iter().filter(|(_, d)| *d > 0).map(|(l, _)| l.clone()).collect();
        let (mut fusion_ok, mut graded_ok) = (false, false);
        if semisimple {
            let proj = self.projections(x, law);
            fusion_ok = (0..law.len()).all(|i| {
                (i..law.len()).all(|j| {
                    let allowed = law.rule_idx(i, j);
                    spaces[i].iter().all(|u| {
                        spaces[j].iter().all(|v| {
                            let w = self.mul(u, v);
                            (0..law.len())
                                .filter(|k| !allowed.contains(k))
                                .all(|k| proj[k].mul_sparse(&w).is_zero())
                        })
                    })
                })
            });
            graded_ok = self.is_automorphism(&self.miyamoto(x, law));
        }
        AxisReport { idempotent, spectrum, dims, semisimple, primitive, fusion_ok, graded_ok }
    }

    /// Checks the form against the product; `axes` are the basis vectors
    /// that should be axes of norm one.
    pub fn verify_form(&self, axes: &[SparseVec], law: &FusionLaw) -> Option<FormReport> {
        let g = self.form.as_ref()?;
        let n = self.dim();
        let symmetric = g.is_symmetric();
        let e = |i: usize| SparseVec::unit(i);
        let associates = (0..n).all(|i| {
            (0..n).all(|j| {
                (j..n).all(|k| g.bilinear(&self.products[i][j], &e(k)) == g.bilinear(&e(i), &self.products[j][k]))
            })
        });
        let eigenspaces_perpendicular = axes.iter().all(|a| {
            let spaces: Vec<Vec<SparseVec>> = law.eigenvalues.iter().map(|l| self.eigenspace(a, l)).collect();
            (0..spaces.len()).all(|i| {
                (i + 1..spaces.len()).all(|j| {
                    spaces[i].iter().all(|u| spaces[j].iter().all(|v| g.bilinear(u, v).is_zero()))
                })
            })
        });
        let axis_norms_one = axes.iter().all(|a| g.bilinear(a, a).is_one());
        let inertia = g.inertia().ok()?;
        Some(FormReport { symmetric, associates, eigenspaces_perpendicular, axis_norms_one, inertia })
    }
}
