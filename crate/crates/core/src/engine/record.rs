use serde::{Deserialize, Serialize};

use super::{AxialAlgebraResult, Checks, FormFlag, Status, Step};
use crate::ratlin::{Inertia, Matrix, SparseVec};
use crate::shapes::Shape;

/// Flat, self-contained form of a construction result. Scalars are written
/// as "p/q" strings so nothing is lost in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub shape: String,
    pub orbit_sizes: Vec<usize>,
    pub status: Status,
    pub dim: Option<usize>,
    pub m: Option<usize>,
    pub form: Option<FormFlag>,
    pub inertia: Option<Inertia>,
    pub basis: Vec<String>,
    /// images of the axes in the basis
    pub axes: Vec<SparseVec>,
    /// upper triangle of the product table as `(i, j, e_i e_j)`
    pub products: Vec<(usize, usize, SparseVec)>,
    pub gram: Option<Matrix>,
    pub checks: Option<Checks>,
    pub trace: Vec<Step>,
}

impl Record {
    pub fn new(shape: &Shape, r: &AxialAlgebraResult) -> Record {
        let mut rec = Record {
            shape: shape.to_string(),
            orbit_sizes: shape.action().orbit_sizes(),
            status: r.status.clone(),
            dim: r.dim(),
            m: None,
            form: None,
            inertia: None,
            basis: Vec::new(),
            axes: Vec::new(),
            products: Vec::new(),
            gram: None,
            checks: None,
            trace: r.trace.clone(),
        };
        if let Some(a) = &r.algebra {
            let n = a.dim();
            rec.m = a.m_closure;
            rec.form = Some(a.frobenius.flag);
            rec.inertia = a.frobenius.inertia;
            rec.basis = a.algebra.labels.clone();
            rec.axes = a.axes.clone();
            rec.products = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).map(|(i, j)| (i, j, a.algebra.product(i, j).clone())).collect();
            rec.gram = a.frobenius.gram.clone();
            rec.checks = Some(a.checks.clone());
        }
        rec
    }
}
