//! The eight nontrivial Norton-Sakuma algebras.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{Algebra, AxisReport, FormReport, FusionLaw};
use crate::permgrp::{Perm, PermGroup};
use crate::ratlin::{q, Matrix, Scalar, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NsType {
    A2,
    B2,
    A3,
    C3,
    A4,
    B4,
    A5,
    A6,
}

impl NsType {
    pub const ALL: [NsType; 8] =
        [NsType::A2, NsType::B2, NsType::A3, NsType::C3, NsType::A4, NsType::B4, NsType::A5, NsType::A6];

    /// Order of `tau_a0 tau_a1`.
    pub fn n(self) -> usize {
        match self {
            NsType::A2 | NsType::B2 => 2,
            NsType::A3 | NsType::C3 => 3,
            NsType::A4 | NsType::B4 => 4,
            NsType::A5 => 5,
            NsType::A6 => 6,
        }
    }

    pub fn letter(self) -> char {
        match self {
            NsType::B2 | NsType::B4 => 'B',
            NsType::C3 => 'C',
            _ => 'A',
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            NsType::A2 => "2A",
            NsType::B2 => "2B",
            NsType::A3 => "3A",
            NsType::C3 => "3C",
            NsType::A4 => "4A",
            NsType::B4 => "4B",
            NsType::A5 => "5A",
            NsType::A6 => "6A",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            NsType::A2 => 3,
            NsType::B2 => 2,
            NsType::A3 => 4,
            NsType::C3 => 3,
            NsType::A4 | NsType::B4 => 5,
            NsType::A5 => 6,
            NsType::A6 => 8,
        }
    }

    /// Types whose algebra contains a subalgebra of type `other` on a pair
    /// of axes it dominates.
    pub fn dominates(self, other: NsType) -> bool {
        matches!(
            (self, other),
            (NsType::A4, NsType::B2) | (NsType::B4, NsType::A2) | (NsType::A6, NsType::A2) | (NsType::A6, NsType::A3)
        )
    }
}

impl fmt::Display for NsType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for NsType {
    type Err = String;

    fn from_str(s: &str) -> Result<NsType, String> {
        NsType::ALL
            .iter()
            .copied()
            .find(|t| t.tag().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown Norton-Sakuma type {:?}", s))
    }
}

impl Serialize for NsType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// A Norton-Sakuma algebra. Basis vectors `0..n` are the axes `a_i`,
/// `i` mod `n`; the remaining ones are the extra vectors of its type.
#[derive(Clone, Debug)]
pub struct NSAlgebra {
    pub kind: NsType,
    pub algebra: Algebra,
    /// Basis indices of every axis, including extra axes such as `a_rho`.
    pub axes: Vec<usize>,
    /// `tau_a0` and `tau_a1` as permutations of the basis.
    pub dihedral: [Perm; 2],
}

fn axis_label(i: usize, n: usize) -> String {
    let s = if 2 * i > n { i as i64 - n as i64 } else { i as i64 };
    format!("a{}", s)
}

fn extras(kind: NsType) -> &'static [&'static str] {
    match kind {
        NsType::A2 => &["a_rho"],
        NsType::B2 | NsType::C3 => &[],
        NsType::A3 => &["u_rho"],
        NsType::A4 => &["v_rho"],
        NsType::B4 => &["a_rho2"],
        NsType::A5 => &["w_rho"],
        NsType::A6 => &["a_rho3", "u_rho2"],
    }
}

type Lin<'a> = &'a [(Scalar, &'a str)];

struct Builder {
    n: usize,
    index: HashMap<String, usize>,
    products: HashMap<(usize, usize), SparseVec>,
    form: HashMap<(usize, usize), Scalar>,
}

impl Builder {
    fn new(kind: NsType) -> (Builder, Vec<String>) {
        let n = kind.n();
        let mut labels: Vec<String> = (0..n).map(|i| axis_label(i, n)).collect();
        labels.extend(extras(kind).iter().map(|s| s.to_string()));
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        (Builder { n, index, products: HashMap::new(), form: HashMap::new() }, labels)
    }

    fn idx(&self, label: &str) -> usize {
        self.index[label]
    }

    fn vec(&self, terms: Lin) -> SparseVec {
        SparseVec::from_pairs(terms.iter().map(|(c, l)| (self.idx(l), c.clone())))
    }

    /// The dihedral group of order `2n` on the axes, extras fixed, given as
    /// index maps `i -> s*i + t`.
    fn symmetries(&self) -> Vec<Box<dyn Fn(usize) -> usize>> {
        let n = self.n;
        let mut out: Vec<Box<dyn Fn(usize) -> usize>> = Vec::new();
        for s in [1i64, -1] {
            for t in 0..n as i64 {
                out.push(Box::new(move |i: usize| {
                    if i >= n {
                        i
                    } else {
                        (s * i as i64 + t).rem_euclid(n as i64) as usize
                    }
                }));
            }
        }
        out
    }

    fn product(&mut self, x: &str, y: &str, v: Lin) {
        let (i, j) = (self.idx(x), self.idx(y));
        let v = self.vec(v);
        for g in self.symmetries() {
            let key = (g(i).min(g(j)), g(i).max(g(j)));
            let img = v.map_indices(&g);
            if let Some(old) = self.products.insert(key, img.clone()) {
                assert_eq!(old, img, "inconsistent product for {:?}", key);
            }
        }
    }

    fn form_value(&mut self, x: &str, y: &str, c: Scalar) {
        let (i, j) = (self.idx(x), self.idx(y));
        for g in self.symmetries() {
            let key = (g(i).min(g(j)), g(i).max(g(j)));
            if let Some(old) = self.form.insert(key, c.clone()) {
                assert_eq!(old, c, "inconsistent form value for {:?}", key);
            }
        }
    }

    fn finish(self, kind: NsType, labels: Vec<String>, extra_axes: &[&str]) -> NSAlgebra {
        let dim = labels.len();
        let mut alg = Algebra::new(labels);
        let mut g = Matrix::zeros(dim, dim);
        for i in 0..dim {
            for j in i..dim {
                let p = self.products.get(&(i, j)).unwrap_or_else(|| panic!("{} missing product {} {}", kind, i, j));
                alg.set_product(i, j, p.clone());
                let f = self.form.get(&(i, j)).unwrap_or_else(|| panic!("{} missing form {} {}", kind, i, j));
                g.set(i, j, f.clone());
                g.set(j, i, f.clone());
            }
        }
        alg.form = Some(g);
        let mut axes: Vec<usize> = (0..self.n).collect();
        axes.extend(extra_axes.iter().map(|l| self.index[*l]));
        let perm = |f: &dyn Fn(usize) -> usize| Perm::from_images((0..dim).map(f).collect()).unwrap();
        let n = self.n;
        let tau0 = perm(&|i| if i < n { (n - i) % n } else { i });
        let tau1 = perm(&|i| if i < n { (2 * n + 2 - i) % n } else { i });
        NSAlgebra { kind, algebra: alg, axes, dihedral: [tau0, tau1] }
    }
}

fn one() -> Scalar {
    Scalar::one()
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// Builds the Norton-Sakuma algebra of the given type from the printed
/// products, closed under the dihedral symmetries.
pub fn ns_algebra(kind: NsType) -> NSAlgebra {
    let (mut b, labels) = Builder::new(kind);
    let n = kind.n();
    let mut extra_axes: Vec<&str> = Vec::new();
    for i in 0..n {
        let l = axis_label(i, n);
        b.product(&l, &l, &[(one(), &l)]);
        b.form_value(&l, &l, one());
    }
    match kind {
        NsType::A2 => {
            let e = q(1, 8);
            b.product("a0", "a1", &[(e.clone(), "a0"), (e.clone(), "a1"), (-&e, "a_rho")]);
            b.product("a0", "a_rho", &[(e.clone(), "a0"), (e.clone(), "a_rho"), (-&e, "a1")]);
            b.product("a_rho", "a_rho", &[(one(), "a_rho")]);
            b.form_value("a0", "a1", e.clone());
            b.form_value("a0", "a_rho", e.clone());
            b.form_value("a_rho", "a_rho", one());
            extra_axes.push("a_rho");
        }
        NsType::B2 => {
            b.product("a0", "a1", &[]);
            b.form_value("a0", "a1", Scalar::zero());
        }
        NsType::A3 => {
            let e = q(1, 32);
            b.product(
                "a0",
                "a1",
                &[(&e * &int(2), "a0"), (&e * &int(2), "a1"), (e.clone(), "a-1"), (-q(135, 2048), "u_rho")],
            );
            let f = q(1, 9);
            b.product(
                "a0",
                "u_rho",
                &[(&f * &int(2), "a0"), (-&f, "a1"), (-&f, "a-1"), (q(5, 32), "u_rho")],
            );
            b.product("u_rho", "u_rho", &[(one(), "u_rho")]);
            b.form_value("a0", "a1", q(13, 256));
            b.form_value("a0", "u_rho", q(1, 4));
            b.form_value("u_rho", "u_rho", q(8, 5));
        }
        NsType::C3 => {
            let e = q(1, 64);
            b.product("a0", "a1", &[(e.clone(), "a0"), (e.clone(), "a1"), (-&e, "a-1")]);
            b.form_value("a0", "a1", e);
        }
        NsType::A4 => {
            let e = q(1, 64);
            b.product(
                "a0",
                "a1",
                &[
                    (&e * &int(3), "a0"),
                    (&e * &int(3), "a1"),
                    (e.clone(), "a-1"),
                    (e.clone(), "a2"),
                    (&e * &int(-3), "v_rho"),
                ],
            );
            let f = q(1, 16);
            b.product(
                "a0",
                "v_rho",
                &[
                    (&f * &int(5), "a0"),
                    (&f * &int(-2), "a1"),
                    (-&f, "a2"),
                    (&f * &int(-2), "a-1"),
                    (&f * &int(3), "v_rho"),
                ],
            );
            b.product("v_rho", "v_rho", &[(one(), "v_rho")]);
            b.product("a0", "a2", &[]);
            b.form_value("a0", "a1", q(1, 32));
            b.form_value("a0", "a2", Scalar::zero());
            b.form_value("a0", "v_rho", q(3, 8));
            b.form_value("v_rho", "v_rho", int(2));
        }
        NsType::B4 => {
            let e = q(1, 64);
            b.product(
                "a0",
                "a1",
                &[(e.clone(), "a0"), (e.clone(), "a1"), (-&e, "a-1"), (-&e, "a2"), (e.clone(), "a_rho2")],
            );
            let f = q(1, 8);
            b.product("a0", "a2", &[(f.clone(), "a0"), (f.clone(), "a2"), (-&f, "a_rho2")]);
            // a0, a2, a_rho2 span a 2A subalgebra
            b.product("a0", "a_rho2", &[(f.clone(), "a0"), (f.clone(), "a_rho2"), (-&f, "a2")]);
            b.product("a_rho2", "a_rho2", &[(one(), "a_rho2")]);
            b.form_value("a0", "a1", e);
            b.form_value("a0", "a2", f.clone());
            b.form_value("a0", "a_rho2", f);
            b.form_value("a_rho2", "a_rho2", one());
            extra_axes.push("a_rho2");
        }
        NsType::A5 => {
            let e = q(1, 128);
            b.product(
                "a0",
                "a1",
                &[
                    (&e * &int(3), "a0"),
                    (&e * &int(3), "a1"),
                    (-&e, "a2"),
                    (-&e, "a-1"),
                    (-&e, "a-2"),
                    (one(), "w_rho"),
                ],
            );
            b.product(
                "a0",
                "a2",
                &[
                    (&e * &int(3), "a0"),
                    (&e * &int(3), "a2"),
                    (-&e, "a1"),
                    (-&e, "a-1"),
                    (-&e, "a-2"),
                    (-one(), "w_rho"),
                ],
            );
            let f = q(7, 4096);
            b.product(
                "a0",
                "w_rho",
                &[(f.clone(), "a1"), (f.clone(), "a-1"), (-&f, "a2"), (-&f, "a-2"), (q(7, 32), "w_rho")],
            );
            let w = q(175, 1 << 19);
            b.product(
                "w_rho",
                "w_rho",
                &[(w.clone(), "a-2"), (w.clone(), "a-1"), (w.clone(), "a0"), (w.clone(), "a1"), (w, "a2")],
            );
            b.form_value("a0", "a1", q(3, 128));
            b.form_value("a0", "a2", q(3, 128));
            b.form_value("a0", "w_rho", Scalar::zero());
            b.form_value("w_rho", "w_rho", q(875, 1 << 19));
        }
        NsType::A6 => {
            let e = q(1, 64);
            b.product(
                "a0",
                "a1",
                &[
                    (e.clone(), "a0"),
                    (e.clone(), "a1"),
                    (-&e, "a-2"),
                    (-&e, "a-1"),
                    (-&e, "a2"),
                    (-&e, "a3"),
                    (e.clone(), "a_rho3"),
                    (q(45, 2048), "u_rho2"),
                ],
            );
            let f = q(1, 32);
            b.product(
                "a0",
                "a2",
                &[(&f * &int(2), "a0"), (&f * &int(2), "a2"), (f.clone(), "a-2"), (-q(135, 2048), "u_rho2")],
            );
            let g = q(1, 9);
            b.product(
                "a0",
                "u_rho2",
                &[(&g * &int(2), "a0"), (-&g, "a2"), (-&g, "a-2"), (q(5, 32), "u_rho2")],
            );
            let h = q(1, 8);
            b.product("a0", "a3", &[(h.clone(), "a0"), (h.clone(), "a3"), (-&h, "a_rho3")]);
            b.product("a_rho3", "u_rho2", &[]);
            // a0, a3, a_rho3 span a 2A subalgebra; a0, a2, a-2, u_rho2 a 3A one
            b.product("a0", "a_rho3", &[(h.clone(), "a0"), (h.clone(), "a_rho3"), (-&h, "a3")]);
            b.product("a_rho3", "a_rho3", &[(one(), "a_rho3")]);
            b.product("u_rho2", "u_rho2", &[(one(), "u_rho2")]);
            b.form_value("a0", "a1", q(5, 256));
            b.form_value("a0", "a2", q(13, 256));
            b.form_value("a0", "a3", h.clone());
            b.form_value("a_rho3", "u_rho2", Scalar::zero());
            b.form_value("a0", "a_rho3", h);
            b.form_value("a0", "u_rho2", q(1, 4));
            b.form_value("u_rho2", "u_rho2", q(8, 5));
            b.form_value("a_rho3", "a_rho3", one());
            extra_axes.push("a_rho3");
        }
    }
    b.finish(kind, labels, &extra_axes)
}

/// Full verification of a catalog algebra.
#[derive(Clone, Debug, Serialize)]
pub struct NsReport {
    pub kind: NsType,
    pub dim: usize,
    pub axes: Vec<(String, AxisReport)>,
    pub form: Option<FormReport>,
    pub dihedral_preserves_product: bool,
    pub dihedral_preserves_form: bool,
    /// Miyamoto involutions of `a0` and `a1` agree with the dihedral action.
    pub miyamoto_matches_dihedral: bool,
    /// Orbit sizes of `<tau_a0, tau_a1>` on `a0` and `a1`.
    pub orbit_sizes: (usize, usize),
    pub orbit_law_ok: bool,
    pub positive_definite: bool,
}

impl NsReport {
    pub fn ok(&self) -> bool {
        self.dim == self.kind.dim()
            && self.axes.iter().all(|(_, r)| r.ok())
            && self.form.as_ref().is_some_and(FormReport::ok)
            && self.dihedral_preserves_product
            && self.dihedral_preserves_form
            && self.miyamoto_matches_dihedral
            && self.orbit_law_ok
            && self.positive_definite
    }
}

/// Permutation matrix of a basis permutation (columns are images).
pub fn perm_matrix(p: &Perm) -> Matrix {
    let n = p.degree();
    let mut m = Matrix::zeros(n, n);
    for j in 0..n {
        m.set(p.apply(j), j, Scalar::one());
    }
    m
}

/// Sizes allowed by the dihedral orbit law for `|a^D|` and `|b^D|`.
pub fn orbit_law_holds(same_orbit: bool, size_a: usize, size_b: usize) -> bool {
    size_a == size_b
        && if same_orbit {
            [1, 3, 5].contains(&size_a)
        } else {
            [1, 2, 3].contains(&size_a)
        }
}

impl NSAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.algebra.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.algebra.labels.iter().position(|l| l == label)
    }

    pub fn axis_vec(&self, k: usize) -> SparseVec {
        SparseVec::unit(self.axes[k])
    }

    pub fn verify_axis(&self, basis_index: usize, law: &FusionLaw) -> AxisReport {
        self.algebra.verify_axis(&SparseVec::unit(basis_index), law)
    }

    pub fn verify_form(&self, law: &FusionLaw) -> Option<FormReport> {
        let axes: Vec<SparseVec> = self.axes.iter().map(|&i| SparseVec::unit(i)).collect();
        self.algebra.verify_form(&axes, law)
    }

    pub fn miyamoto(&self, basis_index: usize, law: &FusionLaw) -> Matrix {
        self.algebra.miyamoto(&SparseVec::unit(basis_index), law)
    }

    /// Action of a linear map on the axes, if it permutes them.
    pub fn axis_permutation(&self, t: &Matrix) -> Option<Perm> {
        let imgs: Option<Vec<usize>> = self
            .axes
            .iter()
            .map(|&i| {
                let v = t.mul_sparse(&SparseVec::unit(i));
                self.axes.iter().position(|&j| v == SparseVec::unit(j))
            })
            .collect();
        Perm::from_images(imgs?).ok()
    }

    pub fn verify(&self, law: &FusionLaw) -> NsReport {
        let axes = self
            .axes
            .iter()
            .map(|&i| (self.algebra.labels[i].clone(), self.verify_axis(i, law)))
            .collect();
        let form = self.verify_form(law);
        let mats: Vec<Matrix> = self.dihedral.iter().map(perm_matrix).collect();
        let dihedral_preserves_product = mats.iter().all(|m| self.algebra.is_automorphism(m));
        let dihedral_preserves_form = mats.iter().all(|m| self.algebra.preserves_form(m));
        let miyamoto_matches_dihedral = (0..2).all(|k| self.miyamoto(k, law) == mats[k]);
        let taus: Vec<Perm> = (0..2).filter_map(|k| self.axis_permutation(&self.miyamoto(k, law))).collect();
        let (mut orbit_sizes, mut orbit_law_ok) = ((0, 0), false);
        if taus.len() == 2 {
            let d = PermGroup::new(self.axes.len(), taus).unwrap();
            let (oa, ob) = (d.orbit(0), d.orbit(1));
            orbit_sizes = (oa.len(), ob.len());
            orbit_law_ok = orbit_law_holds(oa.contains(&1), oa.len(), ob.len());
        }
        let positive_definite = form.as_ref().is_some_and(|f| f.inertia.is_positive_definite());
        NsReport {
            kind: self.kind,
            dim: self.dim(),
            axes,
            form,
            dihedral_preserves_product,
            dihedral_preserves_form,
            miyamoto_matches_dihedral,
            orbit_sizes,
            orbit_law_ok,
            positive_definite,
        }
    }

    /// Structure constants and form as nested maps of "p/q" strings.
    pub fn dump(&self) -> serde_json::Value {
        let labels = self.labels();
        let lin = |v: &SparseVec| -> serde_json::Value {
            v.iter().map(|(i, c)| (labels[*i].clone(), serde_json::Value::String(c.to_string()))).collect()
        };
        let mut products = serde_json::Map::new();
        let mut form = serde_json::Map::new();
        let g = self.algebra.form.as_ref().unwrap();
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let key = format!("{}*{}", labels[i], labels[j]);
                products.insert(key.clone(), lin(self.algebra.product(i, j)));
                form.insert(format!("({},{})", labels[i], labels[j]), g.get(i, j).to_string().into());
            }
        }
        serde_json::json!({
            "type": self.kind.tag(),
            "basis": labels,
            "axes": self.axes.iter().map(|&i| labels[i].clone()).collect::<Vec<_>>(),
            "products": products,
            "form": form,
        })
    }
}
