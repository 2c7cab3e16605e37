use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::action::{normalizer, tau_stabilizer, AxisAction};
use crate::catalog::NsType;
use crate::permgrp::{Perm, PermGroup};

/// A `G`-orbit of 2-subsets of the axes.
#[derive(Clone, Debug, Serialize)]
pub struct PairOrbit {
    pub rep: (usize, usize),
    pub size: usize,
    /// `|X_{a,b}|` for the pairs in the orbit.
    pub n: usize,
}

/// Pair orbits joined by symmetrised domination, with the consistent type
/// assignments of each connected component.
#[derive(Clone, Debug)]
pub struct ShapeGraph {
    action: AxisAction,
    nodes: Vec<PairOrbit>,
    /// node of each ordered pair `a*deg + b`, `usize::MAX` on the diagonal
    pair_node: Vec<usize>,
    /// `(dominating, dominated)` with distinct nodes
    edges: Vec<(usize, usize)>,
    components: Vec<Vec<usize>>,
    choices: Vec<Vec<Vec<NsType>>>,
}

fn options(n: usize) -> &'static [NsType] {
    match n {
        2 => &[NsType::A2, NsType::B2],
        3 => &[NsType::A3, NsType::C3],
        4 => &[NsType::A4, NsType::B4],
        5 => &[NsType::A5],
        6 => &[NsType::A6],
        _ => &[],
    }
}

/// Type of a pair with `|X| = n` inside an algebra of type `t`.
fn dominated_type(t: NsType, n: usize) -> Option<NsType> {
    if t.n() == n {
        return Some(t);
    }
    options(n).iter().copied().find(|&s| t.dominates(s))
}

impl ShapeGraph {
    pub fn new(action: &AxisAction) -> ShapeGraph {
        let deg = action.degree();
        let mut pair_node = vec![usize::MAX; deg * deg];
        let mut nodes = Vec::new();
        let gens = action.group().generators();
        for a in 0..deg {
            for b in a + 1..deg {
                if pair_node[a * deg + b] != usize::MAX {
                    continue;
                }
                let id = nodes.len();
                let mut queue = VecDeque::from([(a, b)]);
                pair_node[a * deg + b] = id;
                pair_node[b * deg + a] = id;
                let mut size = 0;
                while let Some((c, d)) = queue.pop_front() {
                    size += 1;
                    for g in gens {
                        let (e, f) = (g.apply(c), g.apply(d));
                        if pair_node[e * deg + f] == usize::MAX {
                            pair_node[e * deg + f] = id;
                            pair_node[f * deg + e] = id;
                            queue.push_back((e.min(f), e.max(f)));
                        }
                    }
                }
                nodes.push(PairOrbit { rep: (a, b), size, n: action.pair_type_size(a, b) });
            }
        }
        // larger n first, then by representative
        let mut order: Vec<usize> = (0..nodes.len()).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(nodes[i].n), nodes[i].rep));
        let mut rank = vec![0; nodes.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let nodes: Vec<PairOrbit> = order.iter().map(|&i| nodes[i].clone()).collect();
        for p in pair_node.iter_mut().filter(|p| **p != usize::MAX) {
            *p = rank[*p];
        }

        let mut edges = HashSet::new();
        for (i, node) in nodes.iter().enumerate() {
            let set = action.closed_set(node.rep.0, node.rep.1);
            for (k, &c) in set.iter().enumerate() {
                for &d in &set[k + 1..] {
                    let j = pair_node[c * deg + d];
                    if j != i {
                        edges.insert((i, j));
                    }
                }
            }
        }
        let mut edges: Vec<(usize, usize)> = edges.into_iter().collect();
        edges.sort_unstable();

        let mut comp_of = vec![usize::MAX; nodes.len()];
        let mut components = Vec::new();
        for s in 0..nodes.len() {
            if comp_of[s] != usize::MAX {
                continue;
            }
            let c = components.len();
            let mut members = vec![s];
            comp_of[s] = c;
            let mut k = 0;
            while k < members.len() {
                let v = members[k];
                for &(p, q) in &edges {
                    let w = if p == v {
                        q
                    } else if q == v {
                        p
                    } else {
                        continue;
                    };
                    if comp_of[w] == usize::MAX {
                        comp_of[w] = c;
                        members.push(w);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            components.push(members);
        }
        let mut graph = ShapeGraph { action: action.clone(), nodes, pair_node, edges, components, choices: Vec::new() };
        graph.choices = graph.components.iter().map(|c| graph.component_choices(c)).collect();
        graph
    }

    /// Every type assignment on a component that respects all its edges.
    fn component_choices(&self, comp: &[usize]) -> Vec<Vec<NsType>> {
        let first = comp[0];
        let mut out = Vec::new();
        for &t in options(self.nodes[first].n) {
            let mut assign: BTreeMap<usize, NsType> = BTreeMap::from([(first, t)]);
            let mut queue = VecDeque::from([first]);
            let mut ok = true;
            while let (true, Some(v)) = (ok, queue.pop_front()) {
                let tv = assign[&v];
                for &(p, q) in &self.edges {
                    let (w, tw) = if p == v {
                        match dominated_type(tv, self.nodes[q].n) {
                            Some(s) => (q, s),
                            None => {
                                ok = false;
                                break;
                            }
                        }
                    } else if q == v {
                        let found = options(self.nodes[p].n)
                            .iter()
                            .copied()
                            .find(|&s| dominated_type(s, self.nodes[v].n) == Some(tv));
                        match found {
                            Some(s) => (p, s),
                            None => {
                                ok = false;
                                break;
                            }
                        }
                    } else {
                        continue;
                    };
                    match assign.get(&w) {
                        Some(&old) if old != tw => {
                            ok = false;
                            break;
                        }
                        Some(_) => {}
                        None => {
                            assign.insert(w, tw);
                            queue.push_back(w);
                        }
                    }
                }
            }
            if ok {
                out.push(comp.iter().map(|c| assign[c]).collect());
            }
        }
        out
    }

    pub fn action(&self) -> &AxisAction {
        &self.action
    }

    pub fn nodes(&self) -> &[PairOrbit] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Consistent assignments per component, listed in component order.
    pub fn choices(&self) -> &[Vec<Vec<NsType>>] {
        &self.choices
    }

    /// Node holding the pair `{a, b}`, `a != b`.
    pub fn node_of(&self, a: usize, b: usize) -> usize {
        self.pair_node[a * self.action.degree() + b]
    }

    pub fn max_n(&self) -> usize {
        self.nodes.iter().map(|n| n.n).max().unwrap_or(0)
    }

    /// The permutation of nodes induced by a permutation of the axes that
    /// normalizes the group.
    fn node_perm(&self, h: &Perm) -> Vec<usize> {
        self.nodes.iter().map(|node| self.node_of(h.apply(node.rep.0), h.apply(node.rep.1))).collect()
    }
}

/// An assignment of a Norton-Sakuma type to every pair orbit.
#[derive(Clone, Debug)]
pub struct Shape {
    graph: Arc<ShapeGraph>,
    types: Vec<NsType>,
}

impl Shape {
    /// Builds a shape from explicit node types, checking every edge.
    pub fn new(graph: Arc<ShapeGraph>, types: Vec<NsType>) -> Option<Shape> {
        if types.len() != graph.nodes.len() {
            return None;
        }
        let nodes_ok = types.iter().zip(&graph.nodes).all(|(t, node)| t.n() == node.n);
        let edges_ok = graph.edges.iter().all(|&(p, q)| dominated_type(types[p], graph.nodes[q].n) == Some(types[q]));
        (nodes_ok && edges_ok).then_some(Shape { graph, types })
    }

    pub fn graph(&self) -> &Arc<ShapeGraph> {
        &self.graph
    }

    pub fn action(&self) -> &AxisAction {
        &self.graph.action
    }

    pub fn types(&self) -> &[NsType] {
        &self.types
    }

    /// Type of the subalgebra on the axes `a != b`.
    pub fn pair_type(&self, a: usize, b: usize) -> NsType {
        self.types[self.graph.node_of(a, b)]
    }

    /// Nodes shown in the shape string: a 2B inside a 4A, or a 2A inside a
    /// 4B, is left implicit.
    fn shown(&self) -> Vec<bool> {
        let mut shown = vec![true; self.types.len()];
        for &(p, q) in &self.graph.edges {
            if matches!((self.types[p], self.types[q]), (NsType::A4, NsType::B2) | (NsType::B4, NsType::A2)) {
                shown[q] = false;
            }
        }
        shown
    }

    /// Multiplicities of the displayed types.
    pub fn tag_counts(&self) -> BTreeMap<NsType, usize> {
        let mut out = BTreeMap::new();
        for (t, s) in self.types.iter().zip(self.shown()) {
            if s {
                *out.entry(*t).or_insert(0) += 1;
            }
        }
        out
    }

    /// Whether this shape's string matches `text`, in either `(4A)^2` or
    /// `4A^2` notation, with factors in any order.
    pub fn matches(&self, text: &str) -> bool {
        parse_shape_string(text).map_or(false, |c| c == self.tag_counts())
    }

    /// Why no algebra of this shape exists, when a sub-configuration on
    /// three axes is ruled out: two 2-pairs from a common axis onto a 3- or
    /// 5-pair must have equal letters, and 2A there forces 3A.
    pub fn forbidden(&self) -> Option<String> {
        let deg = self.action().degree();
        for a in 0..deg {
            for b in 0..deg {
                for c in b + 1..deg {
                    if a == b || a == c {
                        continue;
                    }
                    let (ab, ac, bc) = (self.pair_type(a, b), self.pair_type(a, c), self.pair_type(b, c));
                    if ab.n() != 2 || ac.n() != 2 || !matches!(bc.n(), 3 | 5) {
                        continue;
                    }
                    if ab != ac {
                        return Some(format!("axes {},{},{}: {} and {} beside {}", a, b, c, ab, ac, bc));
                    }
                    if ab == NsType::A2 && bc != NsType::A3 {
                        return Some(format!("axes {},{},{}: induced shape {}2A", a, b, c, bc));
                    }
                }
            }
        }
        None
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_counts(&self.tag_counts()))
    }
}

fn display_order(t: NsType) -> (std::cmp::Reverse<usize>, char) {
    (std::cmp::Reverse(t.n()), t.letter())
}

pub fn format_counts(counts: &BTreeMap<NsType, usize>) -> String {
    let mut items: Vec<(&NsType, &usize)> = counts.iter().collect();
    items.sort_by_key(|(t, _)| display_order(**t));
    let parts: Vec<String> = items
        .into_iter()
        .map(|(t, &k)| if k == 1 { t.tag().to_string() } else { format!("({})^{}", t.tag(), k) })
        .collect();
    parts.join(" ")
}

/// Parses `"(4A)^2 2A 2B"`-style strings into type multiplicities.
pub fn parse_shape_string(text: &str) -> Option<BTreeMap<NsType, usize>> {
    let mut out = BTreeMap::new();
    for tok in text.split_whitespace() {
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => (b, e.parse::<usize>().ok()?),
            None => (tok, 1),
        };
        let base = base.trim_start_matches('(').trim_end_matches(')');
        let t: NsType = base.parse().ok()?;
        *out.entry(t).or_insert(0) += exp;
    }
    Some(out)
}

/// Shapes of an action up to the stabilizer of its tau-map in the normalizer.
#[derive(Clone, Debug)]
pub struct ShapeList {
    pub graph: Arc<ShapeGraph>,
    pub shapes: Vec<Shape>,
    /// Set when the normalizer was out of reach: then only `G` is factored
    /// out and the count may exceed the true one.
    pub upper_bound: bool,
}

/// All shapes of an action with every pair type at most `max_n`. Empty
/// when some pair needs a larger type.
pub fn enumerate_shapes(action: &AxisAction, max_n: usize) -> ShapeList {
    let graph = Arc::new(ShapeGraph::new(action));
    let norm = normalizer(action.group());
    let upper_bound = norm.is_none();
    let k: PermGroup = match &norm {
        Some(n) => tau_stabilizer(action, n),
        None => action.group().clone(),
    };
    enumerate_with(graph, &k, max_n, upper_bound)
}

/// Shapes up to the given group `k` of axis permutations, which must
/// normalize the action and fix its tau-map.
pub fn enumerate_with(graph: Arc<ShapeGraph>, k: &PermGroup, max_n: usize, upper_bound: bool) -> ShapeList {
    let empty = ShapeList { graph: graph.clone(), shapes: Vec::new(), upper_bound };
    if graph.max_n() > max_n || graph.choices.iter().any(|c| c.is_empty()) {
        return empty;
    }
    let perms: Vec<Vec<usize>> = k.generators().iter().map(|h| graph.node_perm(h)).collect();
    let m = graph.nodes.len();
    let mut seen: HashSet<Vec<NsType>> = HashSet::new();
    let mut reps: Vec<Vec<NsType>> = Vec::new();
    let mut pick = vec![0usize; graph.components.len()];
    'outer: loop {
        let mut types = vec![NsType::A2; m];
        for (c, comp) in graph.components.iter().enumerate() {
            for (v, t) in comp.iter().zip(&graph.choices[c][pick[c]]) {
                types[*v] = *t;
            }
        }
        if !seen.contains(&types) {
            let mut orbit = vec![types.clone()];
            seen.insert(types);
            let mut i = 0;
            while i < orbit.len() {
                for p in &perms {
                    let mut u = vec![NsType::A2; m];
                    for (v, t) in orbit[i].iter().enumerate() {
                        u[p[v]] = *t;
                    }
                    if seen.insert(u.clone()) {
                        orbit.push(u);
                    }
                }
                i += 1;
            }
            reps.push(orbit.into_iter().min().expect("nonempty orbit"));
        }
        for (c, p) in pick.iter_mut().enumerate() {
            *p += 1;
            if *p < graph.choices[c].len() {
                continue 'outer;
            }
            *p = 0;
        }
        break;
    }
    reps.sort();
    let shapes = reps.into_iter().map(|types| Shape { graph: graph.clone(), types }).collect();
    ShapeList { graph, shapes, upper_bound }
}
