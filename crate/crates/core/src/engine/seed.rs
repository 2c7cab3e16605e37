use std::collections::{BTreeSet, HashMap};

use crate::catalog::{ns_algebra, FusionLaw, NSAlgebra, NsType};
use crate::ratlin::SparseVec;
use crate::shapes::Shape;

use super::eigen::{AxisData, Law};
use super::partial::{apply, ExtraKey, ExtraKind, Partial};
use super::EngineError;

/// Where the basis of the Norton-Sakuma algebra on a pair of axes lands.
pub(crate) struct Gluing {
    pub kind: NsType,
    pub images: Vec<SparseVec>,
}

fn extra_key(shape: &Shape, label: &str, axes: &[usize]) -> Option<ExtraKey> {
    let act = shape.action();
    let (a, b) = (axes[0], axes[1]);
    Some(match label {
        "a_rho" => ExtraKey::new(ExtraKind::A2, vec![a, b]),
        "u_rho" => ExtraKey::new(ExtraKind::U3, act.closed_set(a, b)),
        "v_rho" => ExtraKey::new(ExtraKind::V4, act.closed_set(a, b)),
        "a_rho2" => ExtraKey::new(ExtraKind::A2, vec![a, axes[2]]),
        _ => return None,
    })
}

/// Matches the axes of the dihedral algebra to `X_{a,b}`, sending `a_0` to
/// `a` and `a_1` to `b` and the two generating involutions to `tau_a`,
/// `tau_b`.
fn axis_map(shape: &Shape, ns: &NSAlgebra, a: usize, b: usize) -> Result<Vec<usize>, EngineError> {
    let act = shape.action();
    let k = ns.kind.n();
    let mut m = vec![usize::MAX; k];
    m[0] = a;
    m[1] = b;
    let mut queue = vec![0, 1];
    let taus = [act.tau(a), act.tau(b)];
    while let Some(i) = queue.pop() {
        for (d, t) in ns.dihedral.iter().zip(taus) {
            let j = d.apply(i);
            let x = t.apply(m[i]);
            if m[j] == usize::MAX {
                m[j] = x;
                queue.push(j);
            } else if m[j] != x {
                return Err(EngineError::Gluing(format!("{} on axes {} {} does not match tau", ns.kind, a, b)));
            }
        }
    }
    Ok(m)
}

fn extra_keys(shape: &Shape, ns: &NSAlgebra, a: usize, b: usize) -> Result<Vec<ExtraKey>, EngineError> {
    let m = axis_map(shape, ns, a, b)?;
    ns.labels()[m.len()..]
        .iter()
        .map(|label| {
            extra_key(shape, label, &m)
                .ok_or_else(|| EngineError::Unsupported(format!("{} has no supported extra {}", ns.kind, label)))
        })
        .collect()
}

pub(crate) struct Seeded {
    pub partial: Partial,
    pub relations: Vec<SparseVec>,
    pub data: Vec<AxisData>,
}

/// Glues in the Norton-Sakuma algebra of every pair of axes.
pub(crate) fn seed(shape: &Shape, law: &FusionLaw, primitive: bool) -> Result<Seeded, EngineError> {
    let act = shape.action();
    let nx = act.degree();
    let mut cache: HashMap<NsType, NSAlgebra> = HashMap::new();
    let mut keys: BTreeSet<ExtraKey> = BTreeSet::new();
    for a in 0..nx {
        for b in a + 1..nx {
            let t = shape.pair_type(a, b);
            if matches!(t, NsType::A5 | NsType::A6) {
                return Err(EngineError::Unsupported(format!("{} subalgebras", t)));
            }
            let ns = cache.entry(t).or_insert_with(|| ns_algebra(t));
            keys.extend(extra_keys(shape, ns, a, b)?);
        }
    }
    let mut partial = Partial::new(nx, keys.into_iter().collect());
    let mut relations = Vec::new();
    let mut pairs = Vec::new();
    for a in 0..nx {
        for b in a + 1..nx {
            let ns = &cache[&shape.pair_type(a, b)];
            let g = gluing_images(shape, ns, &partial, a, b)?;
            for i in 0..ns.dim() {
                for j in i..ns.dim() {
                    let x = apply(&g.images, ns.algebra.product(i, j));
                    if let Some(r) = partial.set_product(&g.images[i], &g.images[j], x) {
                        relations.push(r);
                    }
                }
            }
            pairs.push(((a, b), g));
        }
    }
    let law = Law::new(law);
    let mut data = Vec::new();
    for orbit in act.orbits() {
        let r = orbit[0];
        let stab = act.group().stabilizer(r).generators().to_vec();
        let mut d = AxisData::new(r, act.tau(r).clone(), stab, primitive);
        for ((a, b), g) in &pairs {
            if *a != r && *b != r {
                continue;
            }
            // eigenvectors of the glued copy of `r` inside this subalgebra
            let ns = &cache[&g.kind];
            let pos = if *a == r { 0 } else { 1 };
            let e = SparseVec::unit(pos);
            for i in 0..4 {
                for v in ns.algebra.eigenspace(&e, law.value(i)) {
                    d.add(1 << i, &apply(&g.images, &v));
                }
            }
            // the projection onto an axis of a Norton-Sakuma algebra is
            // its form value, as the axes have norm one
            for (k, img) in g.images.iter().enumerate() {
                let c = ns.algebra.form_value(&e, &SparseVec::unit(k)).expect("catalog forms");
                d.add_phi(img.clone(), c);
            }
        }
        data.push(d);
    }
    Ok(Seeded { partial, relations, data })
}

/// The glued copy of the Norton-Sakuma algebra of each pair-orbit
/// representative, in the current basis.
pub(crate) fn pair_gluings(shape: &Shape, p: &Partial) -> Result<Vec<((usize, usize), Gluing)>, EngineError> {
    shape
        .graph()
        .nodes()
        .iter()
        .map(|node| {
            let (a, b) = node.rep;
            let ns = ns_algebra(shape.pair_type(a, b));
            Ok(((a, b), gluing_images(shape, &ns, p, a, b)?))
        })
        .collect()
}

fn gluing_images(shape: &Shape, ns: &NSAlgebra, p: &Partial, a: usize, b: usize) -> Result<Gluing, EngineError> {
    let m = axis_map(shape, ns, a, b)?;
    let images = ns
        .labels()
        .iter()
        .enumerate()
        .map(|(i, label)| {
            if i < m.len() {
                p.axes[m[i]].clone()
            } else {
                p.extras[&extra_key(shape, label, &m).expect("supported")].clone()
            }
        })
        .collect();
    Ok(Gluing { kind: ns.kind, images })
}
