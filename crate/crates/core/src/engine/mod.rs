//! Construction of the universal axial algebra of a given shape: glue in
//! the Norton-Sakuma subalgebras, then alternate expansion, discovery of
//! relations and reduction until every product is known.

mod eigen;
mod finish;
mod partial;
mod record;
mod seed;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::FusionLaw;
use crate::shapes::Shape;

pub use finish::{frobenius, is_ideal, m_closure, Checks, CompletedAlgebra, FormFlag, Frobenius};
pub use record::Record;

use eigen::Law;
use partial::Partial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inconsistent gluing: {0}")]
    Gluing(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// largest dimension an expansion may reach
    pub max_dim: usize,
    /// number of expansions
    pub max_rounds: usize,
    /// impose `A_1 = <a>` for every axis
    pub primitive: bool,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_dim: 1000, max_rounds: 8, primitive: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Status {
    Completed,
    Collapsed,
    /// gave up at `stage` with the space at dimension `size`
    Incomplete { stage: String, size: usize },
}

/// One step of the main loop with the dimension before and after.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub stage: String,
    pub before: usize,
    pub after: usize,
}

#[derive(Clone, Debug)]
pub struct AxialAlgebraResult {
    pub status: Status,
    pub trace: Vec<Step>,
    pub algebra: Option<CompletedAlgebra>,
}

impl AxialAlgebraResult {
    /// Dimension when completed, 0 when collapsed.
    pub fn dim(&self) -> Option<usize> {
        match self.status {
            Status::Completed => self.algebra.as_ref().map(|a| a.dim()),
            Status::Collapsed => Some(0),
            Status::Incomplete { .. } => None,
        }
    }
}

fn collapsed(p: &Partial, shape: &Shape) -> bool {
    let act = shape.action();
    let n = act.degree();
    (0..n).any(|x| p.axes[x].is_zero())
        || (0..n).any(|x| (x + 1..n).any(|y| p.axes[x] == p.axes[y] && act.tau(x) != act.tau(y)))
}

/// Runs the construction for `shape` under the Monster fusion law.
pub fn construct(shape: &Shape, caps: Caps) -> Result<AxialAlgebraResult, EngineError> {
    let law = FusionLaw::monster();
    let rules = Law::new(&law);
    let seed::Seeded { partial: mut p, relations, mut data } = seed::seed(shape, &law, caps.primitive)?;
    let gens = shape.action().group().generators().to_vec();
    let mut trace = vec![Step { stage: "seed".into(), before: 0, after: p.n }];
    let mut pending = relations;
    let mut rounds = 0;
    let mut fresh = true;
    let result = |status, trace| Ok(AxialAlgebraResult { status, trace, algebra: None });
    loop {
        let mut grew = false;
        if fresh {
            for d in &mut data {
                grew |= d.structural(&p, &rules);
            }
        }
        let mut rels = std::mem::take(&mut pending);
        for d in &mut data {
            grew |= d.propagate(&p, &rules, &mut rels);
        }
        rels.extend(p.settle_facts());
        rels.retain(|r| !r.is_zero());
        if !rels.is_empty() {
            let space = p.close(rels, &gens);
            if !space.is_empty() {
                let before = p.n;
                let red = p.reduce(&space);
                for d in &mut data {
                    d.map(&red);
                }
                trace.push(Step { stage: "reduce".into(), before, after: p.n });
                if collapsed(&p, shape) {
                    return result(Status::Collapsed, trace);
                }
                fresh = true;
                continue;
            }
        }
        fresh = false;
        if grew {
            continue;
        }
        if p.is_complete() {
            break;
        }
        let target = p.n + p.unknown_products();
        if rounds == caps.max_rounds || target > caps.max_dim {
            return result(Status::Incomplete { stage: "expand".into(), size: target }, trace);
        }
        rounds += 1;
        let before = p.n;
        pending = p.expand();
        trace.push(Step { stage: "expand".into(), before, after: p.n });
        fresh = true;
    }
    let done = finish::analyse(p, shape, &law);
    let status = if done.checks.ok() {
        Status::Completed
    } else {
        Status::Incomplete { stage: "verify".into(), size: done.dim() }
    };
    Ok(AxialAlgebraResult { status, trace, algebra: Some(done) })
}

/// The quotient of a completed algebra by the radical of its form, when
/// that radical is a nonzero ideal.
pub fn radical_quotient(alg: &CompletedAlgebra, shape: &Shape) -> Option<CompletedAlgebra> {
    let rad = &alg.frobenius.radical;
    if rad.is_empty() || !is_ideal(&alg.algebra, rad) {
        return None;
    }
    let mut p = alg.partial.clone();
    let space = p.close(rad.clone(), shape.action().group().generators());
    if space.dim() != rad.len() {
        return None;
    }
    p.reduce(&space);
    if collapsed(&p, shape) {
        return None;
    }
    Some(finish::analyse(p, shape, &FusionLaw::monster()))
}
