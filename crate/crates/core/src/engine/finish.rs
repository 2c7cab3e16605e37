use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalog::{ns_algebra, Algebra, FusionLaw, NsType};
use crate::ratlin::{EchelonSpace, Inertia, Matrix, Scalar, SparseVec};
use crate::shapes::Shape;

use super::partial::{apply, ExtraKind, Origin, Partial};
use super::seed::pair_gluings;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormFlag {
    Pos,
    Semi,
    Indef,
    /// no Frobenius form that is nonzero on the axes
    None,
}

impl fmt::Display for FormFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormFlag::Pos => "pos",
            FormFlag::Semi => "semi",
            FormFlag::Indef => "indef",
            FormFlag::None => "none",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Frobenius {
    pub flag: FormFlag,
    pub gram: Option<Matrix>,
    pub inertia: Option<Inertia>,
    /// basis of the radical of the form
    pub radical: Vec<SparseVec>,
    /// eigenspaces of every axis are perpendicular and the form associates
    pub verified: bool,
}

/// Outcome of the exact checks on a completed algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    /// idempotent, semisimple, fusion law and grading, for every axis
    pub axes: bool,
    pub primitive: bool,
    /// every group generator preserves the product
    pub automorphisms: bool,
    /// `tau_a` acts as the Miyamoto involution of `a`
    pub miyamoto: bool,
    /// every pair of axes generates the subalgebra the shape assigns
    pub shape: bool,
}

impl Checks {
    pub fn ok(&self) -> bool {
        self.axes && self.automorphisms && self.miyamoto && self.shape
    }
}

#[derive(Clone, Debug)]
pub struct CompletedAlgebra {
    pub algebra: Algebra,
    /// images of the axes `X`
    pub axes: Vec<SparseVec>,
    pub m_closure: Option<usize>,
    pub frobenius: Frobenius,
    pub checks: Checks,
    pub(crate) partial: Partial,
}

impl CompletedAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

fn label(o: &Origin, k: usize) -> String {
    match o {
        Origin::Axis(x) => format!("a{}", x),
        Origin::Extra(key) => {
            let axes: Vec<String> = key.axes.iter().map(|x| x.to_string()).collect();
            let kind = match key.kind {
                ExtraKind::A2 => "a",
                ExtraKind::U3 => "u",
                ExtraKind::V4 => "v",
            };
            format!("{}({})", kind, axes.join(","))
        }
        Origin::Product(..) => format!("p{}", k),
    }
}

pub(crate) fn to_algebra(p: &Partial) -> Algebra {
    let labels = p.origin.iter().enumerate().map(|(k, o)| label(o, k)).collect();
    let mut alg = Algebra::new(labels);
    let table = p.table();
    for (i, row) in table.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate().skip(i) {
            alg.set_product(i, j, v);
        }
    }
    alg
}

fn table_matrix(t: &[SparseVec], n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for (j, v) in t.iter().enumerate() {
        for (i, c) in v.iter() {
            m.set(*i, j, c.clone());
        }
    }
    m
}

pub(crate) fn analyse(p: Partial, shape: &Shape, law: &FusionLaw) -> CompletedAlgebra {
    let n = p.n;
    let mut algebra = to_algebra(&p);
    let act = shape.action();
    let reps: Vec<usize> = act.orbits().iter().map(|o| o[0]).collect();
    let mut axes_ok = true;
    let mut primitive = true;
    let mut miyamoto = true;
    for &r in &reps {
        let rep = algebra.verify_axis(&p.axes[r], law);
        axes_ok &= rep.idempotent && rep.semisimple && rep.fusion_ok && rep.graded_ok;
        primitive &= rep.primitive;
        if rep.semisimple {
            let tau = table_matrix(&p.action(act.tau(r)), n);
            miyamoto &= algebra.miyamoto(&p.axes[r], law) == tau;
        } else {
            miyamoto = false;
        }
    }
    let automorphisms = act.group().generators().iter().all(|g| {
        let t = p.action(g);
        (0..n).all(|i| (i..n).all(|j| apply(&t, algebra.product(i, j)) == algebra.mul(&t[i], &t[j])))
    });
    let shape_ok = shape_round_trip(&p, shape, &algebra);
    let checks = Checks { axes: axes_ok, primitive, automorphisms, miyamoto, shape: shape_ok };
    let m_closure = m_closure(&algebra, &p.axes);
    let frobenius = frobenius(&algebra, shape, &p.axes, law);
    algebra.form = frobenius.gram.clone();
    CompletedAlgebra { algebra, axes: p.axes.clone(), m_closure, frobenius, checks, partial: p }
}

fn rank(vs: &[SparseVec]) -> usize {
    let mut s = EchelonSpace::new();
    s.extend(vs.iter());
    s.dim()
}

/// The subalgebra generated by `gens`, as a spanning set.
fn generated(alg: &Algebra, gens: &[SparseVec]) -> EchelonSpace {
    let mut s = EchelonSpace::new();
    let mut list: Vec<SparseVec> = Vec::new();
    for g in gens {
        if s.insert(g).is_some() {
            list.push(g.clone());
        }
    }
    let mut k = 0;
    while k < list.len() {
        for j in 0..=k {
            let x = alg.mul(&list[k], &list[j]);
            if s.insert(&x).is_some() {
                list.push(x);
            }
        }
        k += 1;
    }
    s
}

fn shape_round_trip(p: &Partial, shape: &Shape, alg: &Algebra) -> bool {
    let Ok(gluings) = pair_gluings(shape, p) else { return false };
    gluings.iter().all(|((a, b), g)| {
        let dim = g.kind.dim();
        rank(&g.images) == dim && generated(alg, &[p.axes[*a].clone(), p.axes[*b].clone()]).dim() == dim
    })
}

/// Smallest `m` such that products of at most `m` axes span the algebra.
pub fn m_closure(alg: &Algebra, axes: &[SparseVec]) -> Option<usize> {
    let n = alg.dim();
    if n == 0 {
        return Some(0);
    }
    let mut span = EchelonSpace::new();
    // levels[k] holds new independent products of length k + 1
    let mut levels: Vec<Vec<SparseVec>> = vec![axes.iter().filter(|a| span.insert(a).is_some()).cloned().collect()];
    while span.dim() < n {
        let k = levels.len();
        let mut next = Vec::new();
        for i in 0..k {
            let j = k - 1 - i;
            if i > j {
                break;
            }
            for x in &levels[i] {
                for y in &levels[j] {
                    let z = alg.mul(x, y);
                    if span.insert(&z).is_some() {
                        next.push(z);
                    }
                }
            }
        }
        if next.is_empty() {
            return None;
        }
        levels.push(next);
    }
    Some(levels.len())
}

fn pair_value(kind: NsType) -> Scalar {
    let ns = ns_algebra(kind);
    ns.algebra.form_value(&SparseVec::unit(0), &SparseVec::unit(1)).expect("catalog forms")
}

/// Solves for the Frobenius form from its values on the axes and the
/// associativity conditions `(e_i e_j, e_k) = (e_i, e_j e_k)`.
pub fn frobenius(alg: &Algebra, shape: &Shape, axes: &[SparseVec], law: &FusionLaw) -> Frobenius {
    let none = |verified| Frobenius { flag: FormFlag::None, gram: None, inertia: None, radical: Vec::new(), verified };
    let n = alg.dim();
    if n == 0 {
        return none(false);
    }
    // unknown (i, j) with i <= j sits at index 1 + tri; index 0 is the constant
    let var = |i: usize, j: usize| {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        1 + j * (j + 1) / 2 + i
    };
    let bilinear = |x: &SparseVec, y: &SparseVec| -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc.add_scaled_in_place(&SparseVec::unit(var(*i, *j)), &(a * b));
            }
        }
        acc
    };
    let mut sys = EchelonSpace::new();
    for x in 0..axes.len() {
        for y in x..axes.len() {
            let value = if x == y { Scalar::one() } else { pair_value(shape.pair_type(x, y)) };
            let eq = bilinear(&axes[x], &axes[y]).add_scaled(&SparseVec::unit(0), &-value);
            sys.insert(&eq);
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in j..n {
                if i == k {
                    continue;
                }
                let lhs = bilinear(alg.product(i, j), &SparseVec::unit(k));
                let rhs = bilinear(&SparseVec::unit(i), alg.product(j, k));
                sys.insert(&lhs.sub(&rhs));
            }
        }
    }
    if sys.is_pivot(0) {
        return none(false);
    }
    let mut gram = Matrix::zeros(n, n);
    for j in 0..n {
        for i in 0..=j {
            let v = var(i, j);
            let Some(row) = sys.row(v) else { return none(false) };
            // pivot row reads x_v + ... + c x_0 = 0, and free variables
            // would leave the form undetermined
            if row.nnz() > 2 || (row.nnz() == 2 && row.first().map(|t| t.0) != Some(0)) {
                return none(false);
            }
            let c = -row.get(0);
            gram.set(i, j, c.clone());
            gram.set(j, i, c);
        }
    }
    let inertia = gram.inertia().ok();
    let radical: Vec<SparseVec> = gram.kernel().iter().map(|v| SparseVec::from_dense(v)).collect();
    let mut check = alg.clone();
    check.form = Some(gram.clone());
    let verified = check.verify_form(axes, law).is_some_and(|r| r.ok());
    let flag = match inertia {
        Some(i) if i.is_positive_definite() => FormFlag::Pos,
        Some(i) if i.is_positive_semidefinite() => FormFlag::Semi,
        Some(_) => FormFlag::Indef,
        None => FormFlag::None,
    };
    Frobenius { flag, gram: Some(gram), inertia, radical, verified }
}

/// Whether the span of `vs` is closed under multiplication by the algebra.
pub fn is_ideal(alg: &Algebra, vs: &[SparseVec]) -> bool {
    let mut s = EchelonSpace::new();
    s.extend(vs.iter());
    vs.iter().all(|v| (0..alg.dim()).all(|j| s.contains(&alg.mul(v, &SparseVec::unit(j)))))
}
