//! Clone classes, graded pairs of cliques, rooted clique trees of
//! (P4,C4)-free graphs, and C-pairs.

use crate::detect::{self, Special, Witness};
use crate::graph::{Graph, VertexSet};
use crate::structure::{match_blowup, BaseGraph, BlowupMap};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Partition into maximal sets of closed-neighborhood twins.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CloneClasses {
    /// Ordered by smallest member.
    pub classes: Vec<VertexSet>,
    pub class_of: Vec<usize>,
    pub quotient: Graph,
}

impl CloneClasses {
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(VertexSet::len).collect()
    }

    /// Lift a set of classes to host vertices: every member of every class.
    pub fn lift(&self, cls: impl IntoIterator<Item = usize>) -> VertexSet {
        cls.into_iter().flat_map(|c| self.classes[c].iter()).collect()
    }
}

pub fn clone_quotient(g: &Graph) -> CloneClasses {
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; g.n()];
    for v in g.vertices() {
        let mut key: Vec<usize> = g.neighbors(v).to_vec();
        let pos = key.partition_point(|&u| u < v);
        key.insert(pos, v);
        let c = *index.entry(key).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[c].push(v);
        class_of[v] = c;
    }
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let quotient = Graph::from_fn(reps.len(), |i, j| g.has_edge(reps[i], reps[j]));
    CloneClasses { classes: classes.into_iter().map(VertexSet::from).collect(), class_of, quotient }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    /// 0-based positions in order_a / order_b.
    pub i: usize,
    pub j: usize,
    pub a: usize,
    pub b: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedLabeling {
    pub order_a: Vec<usize>,
    pub order_b: Vec<usize>,
    pub crossing: Option<Crossing>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GradedError {
    #[error("sets overlap at {0}")]
    Overlap(usize),
    #[error("not a clique: {0} and {1} are non-adjacent")]
    NotClique(usize, usize),
    #[error("neighborhoods are not nested: {0}")]
    NotNested(Witness),
}

fn chain_order(g: &Graph, side: &[usize], other: &[usize]) -> Result<Vec<usize>, GradedError> {
    let nb: HashMap<usize, VertexSet> = side
        .iter()
        .map(|&v| (v, other.iter().copied().filter(|&u| g.has_edge(u, v)).collect()))
        .collect();
    let mut order = side.to_vec();
    order.sort_by(|a, b| nb[b].len().cmp(&nb[a].len()).then(a.cmp(b)));
    for w in order.windows(2) {
        let (p, q) = (w[0], w[1]);
        if let Some(bq) = nb[&q].iter().find(|&b| !nb[&p].contains(b)) {
            let bp = nb[&p].iter().find(|&b| !nb[&q].contains(b)).expect("larger set has a private member");
            let vertices = vec![p, bp, bq, q];
            return Err(GradedError::NotNested(Witness { kind: detect::WitnessKind::Cycle(4), vertices }));
        }
    }
    Ok(order)
}

/// Nested labeling of two disjoint cliques, plus the crossing pair when
/// [A,B] is not complete.
pub fn graded_labeling(g: &Graph, a: &[usize], b: &[usize]) -> Result<GradedLabeling, GradedError> {
    if let Some(&v) = a.iter().find(|v| b.contains(v)) {
        return Err(GradedError::Overlap(v));
    }
    for s in [a, b] {
        if let Some((u, v)) = g.first_non_edge(s, s) {
            return Err(GradedError::NotClique(u, v));
        }
    }
    let order_a = chain_order(g, a, b)?;
    let order_b = chain_order(g, b, a)?;
    let mut crossing = None;
    if let Some(ip) = order_a.iter().position(|&x| order_b.iter().any(|&y| !g.has_edge(x, y))) {
        let j = order_b.iter().position(|&y| !g.has_edge(order_a[ip], y)).expect("non-neighbor");
        let i = order_a.iter().position(|&x| !g.has_edge(x, order_b[j])).expect("at most ip");
        crossing = Some(Crossing { i, j, a: order_a[i], b: order_b[j] });
    }
    Ok(GradedLabeling { order_a, order_b, crossing })
}

/// True when the cross neighborhoods of two disjoint sets are nested.
pub fn is_graded(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    chain_order(g, a, b).is_ok() && chain_order(g, b, a).is_ok()
}

/// Rooted tree of disjoint cliques: a vertex is adjacent exactly to its own
/// node and to all ancestor and descendant nodes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bamboo {
    pub nodes: Vec<VertexSet>,
    pub parent: Vec<Option<usize>>,
    /// Non-leaf nodes.
    pub spine: Vec<bool>,
}

impl Bamboo {
    pub fn children(&self, i: usize) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&c| self.parent[c] == Some(i)).collect()
    }

    pub fn is_leaf(&self, i: usize) -> bool {
        !self.spine[i]
    }

    /// True when `anc` is a proper ancestor of `i`.
    pub fn is_ancestor(&self, anc: usize, i: usize) -> bool {
        let mut cur = self.parent[i];
        while let Some(p) = cur {
            if p == anc {
                return true;
            }
            cur = self.parent[p];
        }
        false
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        i == j || self.is_ancestor(i, j) || self.is_ancestor(j, i)
    }

    pub fn descendants(&self, i: usize) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&d| self.is_ancestor(i, d)).collect()
    }

    pub fn vertices(&self) -> VertexSet {
        self.nodes.iter().flat_map(|s| s.iter()).collect()
    }

    pub fn node_of(&self, v: usize) -> Option<usize> {
        self.nodes.iter().position(|s| s.contains(v))
    }

    /// Edges of the graph this tree represents, in host ids.
    pub fn expand_edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for i in 0..self.nodes.len() {
            for j in i..self.nodes.len() {
                if !self.related(i, j) {
                    continue;
                }
                for u in self.nodes[i].iter() {
                    for v in self.nodes[j].iter() {
                        if u < v || (i != j && u != v) {
                            e.push((u.min(v), u.max(v)));
                        }
                    }
                }
            }
        }
        e.sort_unstable();
        e.dedup();
        e
    }

    /// The spine (non-leaf nodes) is a single root-to-node path and the last
    /// spine node has at least two leaf children.
    pub fn is_bamboo_shaped(&self) -> bool {
        let spine: Vec<usize> = (0..self.nodes.len()).filter(|&i| self.spine[i]).collect();
        if spine.is_empty() {
            return self.nodes.len() == 1;
        }
        if !spine.iter().all(|&i| spine.iter().all(|&j| self.related(i, j))) {
            return false;
        }
        let deepest = spine
            .iter()
            .copied()
            .find(|&i| spine.iter().all(|&j| j == i || self.is_ancestor(j, i)))
            .expect("a chain has a deepest node");
        self.children(deepest).iter().filter(|&&c| self.is_leaf(c)).count() >= 2
    }
}

/// Clique tree of each component of a (P4,C4)-free graph, by peeling the set
/// of universal vertices; a P4 or C4 witness otherwise.
pub fn build_bamboo(g: &Graph) -> Result<Vec<Bamboo>, Witness> {
    let mut out = Vec::new();
    for comp in g.components() {
        let mut t = Bamboo { nodes: vec![], parent: vec![], spine: vec![] };
        grow(g, &comp, None, &mut t)?;
        out.push(t);
    }
    Ok(out)
}

fn grow(g: &Graph, comp: &VertexSet, parent: Option<usize>, t: &mut Bamboo) -> Result<(), Witness> {
    let (h, map) = g.induced_subgraph(comp.as_slice()).expect("in range");
    let u = detect::universal_vertices(&h);
    if u.is_empty() {
        let w = detect::find_induced_cycle(&h, 4)
            .or_else(|| detect::find_induced_path(&h, 4))
            .expect("a connected graph without a universal vertex has an induced P4 or C4");
        return Err(Witness { kind: w.kind, vertices: w.vertices.iter().map(|&v| map[v]).collect() });
    }
    let id = t.nodes.len();
    t.nodes.push(u.map(|v| map[v]));
    t.parent.push(parent);
    t.spine.push(false);
    let rest: VertexSet = comp.difference(&t.nodes[id]);
    if rest.is_empty() {
        return Ok(());
    }
    t.spine[id] = true;
    for c in g.components_within(&rest.to_bits(g.n())) {
        grow(g, &c, Some(id), t)?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum BambooClass {
    BlowupP3(BlowupMap),
    BlowupDart(BlowupMap),
    /// Four pairwise non-adjacent simplicial vertices.
    Other(Vec<usize>),
}

/// Blowup of P3 / dart classification of a (P4,C4)-free graph by its number of
/// leaf cliques (the maximum number of pairwise non-adjacent simplicial vertices).
pub fn classify_bamboo_simplicial(g: &Graph) -> Result<BambooClass, Witness> {
    let forest = build_bamboo(g)?;
    let leaves: Vec<usize> = forest
        .iter()
        .flat_map(|t| (0..t.nodes.len()).filter(|&i| t.is_leaf(i)).map(|i| t.nodes[i].as_slice()[0]).collect::<Vec<_>>())
        .collect();
    let found = |b: BaseGraph| match_blowup(g, &b).expect("leaf count guarantees the blowup");
    Ok(match leaves.len() {
        0..=2 => BambooClass::BlowupP3(found(BaseGraph::P3)),
        3 => BambooClass::BlowupDart(found(BaseGraph::Dart)),
        _ => {
            let mut w = leaves[..4].to_vec();
            w.sort_unstable();
            BambooClass::Other(w)
        }
    })
}

/// (P4,C4,2P3)-free check with a witness.
pub fn in_class_c(g: &Graph) -> Result<(), Witness> {
    if let Some(w) = detect::find_induced_cycle(g, 4) {
        return Err(w);
    }
    if let Some(w) = detect::find_induced_path(g, 4) {
        return Err(w);
    }
    match detect::find_special(g, Special::TwoP3) {
        Some(w) => Err(w),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CPairNode {
    pub members: VertexSet,
    pub parent: Option<usize>,
    /// Union of the A-neighborhoods of the proper descendants.
    pub u: VertexSet,
    /// N_A(members) minus u.
    pub a_part: VertexSet,
    pub homogeneous: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CPairDecomposition {
    pub x: VertexSet,
    pub a: VertexSet,
    /// All tree nodes of G[X], flattened; parents index into this list.
    pub nodes: Vec<CPairNode>,
    /// A minus every a_part, possibly empty.
    pub a0: VertexSet,
    /// Non-homogeneous nodes; each is graded with its a_part.
    pub matching: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("C-pair axiom `{axiom}` fails at {witness:?}")]
pub struct CPairError {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
}

fn fail(axiom: &'static str, witness: Vec<usize>) -> CPairError {
    CPairError { axiom, witness }
}

pub fn decompose_cpair(g: &Graph, x: &VertexSet, a: &VertexSet) -> Result<CPairDecomposition, CPairError> {
    if let Some(v) = x.iter().find(|&v| a.contains(v)) {
        return Err(fail("partition", vec![v]));
    }
    if let Some(v) = g.vertices().find(|&v| !x.contains(v) && !a.contains(v)) {
        return Err(fail("partition", vec![v]));
    }
    if let Some((u, v)) = g.first_non_edge(a.as_slice(), a.as_slice()) {
        return Err(fail("a_clique", vec![u, v]));
    }
    let (gx, map) = g.induced_subgraph(x.as_slice()).expect("in range");
    if let Err(w) = in_class_c(&gx) {
        return Err(fail("x_in_class", w.vertices.iter().map(|&v| map[v]).collect()));
    }
    let na = |v: usize| g.neighbors_in(v, a);
    if let Some(v) = x.iter().find(|&v| na(v).is_empty()) {
        return Err(fail("a_neighbor", vec![v]));
    }
    for (i, p) in x.iter().enumerate() {
        for q in x.as_slice()[i + 1..].iter().copied() {
            if !g.has_edge(p, q) {
                if let Some(c) = na(p).intersection(&na(q)).first() {
                    return Err(fail("private_a_neighbors", vec![p, q, c]));
                }
            }
        }
    }
    if let Some(w) = detect::find_induced_path(g, 6) {
        return Err(fail("p6_free", w.vertices));
    }
    if let Err(w) = detect::chordality(g) {
        return Err(fail("chordal", w.vertices));
    }

    let forest = build_bamboo(&gx).expect("class C graphs are (P4,C4)-free");
    let mut nodes: Vec<CPairNode> = Vec::new();
    let mut desc: Vec<Vec<usize>> = Vec::new();
    for t in &forest {
        let off = nodes.len();
        for i in 0..t.nodes.len() {
            let members = t.nodes[i].map(|v| map[v]);
            let nbhds: Vec<VertexSet> = members.iter().map(na).collect();
            let homogeneous = nbhds.windows(2).all(|w| w[0] == w[1]);
            nodes.push(CPairNode {
                members,
                parent: t.parent[i].map(|p| p + off),
                u: VertexSet::new(),
                a_part: VertexSet::new(),
                homogeneous,
            });
            desc.push(t.descendants(i).into_iter().map(|d| d + off).collect());
        }
    }
    let node_na: Vec<VertexSet> = nodes.iter().map(|nd| nd.members.iter().flat_map(|v| na(v).into_vec()).collect()).collect();
    for i in 0..nodes.len() {
        let u: VertexSet = desc[i].iter().flat_map(|&d| node_na[d].iter()).collect();
        for &d in &desc[i] {
            if let Some((p, q)) = g.first_non_edge(nodes[i].members.as_slice(), node_na[d].as_slice()) {
                return Err(fail("ancestor_completeness", vec![p, q]));
            }
        }
        nodes[i].a_part = node_na[i].difference(&u);
        nodes[i].u = u;
    }
    let used: VertexSet = nodes.iter().flat_map(|nd| nd.a_part.iter()).collect();
    let a0 = a.difference(&used);
    let matching: Vec<usize> = (0..nodes.len()).filter(|&i| !nodes[i].homogeneous).collect();
    for (k, &i) in matching.iter().enumerate() {
        for &j in &matching[k + 1..] {
            if let Some((p, q)) = g.first_non_edge(nodes[i].members.as_slice(), nodes[j].members.as_slice()) {
                return Err(fail("matching_clique", vec![p, q]));
            }
        }
    }
    let d = CPairDecomposition { x: x.clone(), a: a.clone(), nodes, a0, matching };
    check_augmentation(g, &d, &desc)?;
    Ok(d)
}

/// Every (node, A-part) pair is complete, empty or graded exactly as the
/// skeleton plus matching prescribes.
fn check_augmentation(g: &Graph, d: &CPairDecomposition, desc: &[Vec<usize>]) -> Result<(), CPairError> {
    if let Some((p, q)) = g.first_edge(d.x.as_slice(), d.a0.as_slice()) {
        return Err(fail("augmentation", vec![p, q]));
    }
    for (i, ni) in d.nodes.iter().enumerate() {
        for (j, nj) in d.nodes.iter().enumerate() {
            let (xs, aj) = (ni.members.as_slice(), nj.a_part.as_slice());
            let ok = if i == j {
                if ni.homogeneous {
                    g.first_non_edge(xs, aj).is_none()
                } else {
                    is_graded(g, xs, aj)
                }
            } else if desc[i].contains(&j) {
                g.first_non_edge(xs, aj).is_none()
            } else {
                g.first_edge(xs, aj).is_none()
            };
            if !ok {
                let mut w = vec![xs[0]];
                w.extend(aj.first());
                return Err(fail("augmentation", w));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::*;

    #[test]
    fn quotients() {
        let q = clone_quotient(&complete(4));
        assert_eq!(q.classes.len(), 1);
        assert_eq!(q.quotient.n(), 1);
        assert_eq!(clone_quotient(&cycle(5)).classes.len(), 5);
    }

    #[test]
    fn graded_examples() {
        // a1=0, a2=1, b=2
        let g = Graph::new(3, &[(0, 1), (0, 2)]).unwrap();
        let l = graded_labeling(&g, &[0, 1], &[2]).unwrap();
        assert_eq!(l.order_a, vec![0, 1]);
        assert_eq!(l.crossing, Some(Crossing { i: 1, j: 0, a: 1, b: 2 }));
        let k = complete(4);
        assert_eq!(graded_labeling(&k, &[0, 1], &[2, 3]).unwrap().crossing, None);
        let c4 = cycle(4);
        match graded_labeling(&c4, &[0, 1], &[3, 2]) {
            Err(GradedError::NotNested(w)) => assert!(w.verify(&c4)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn star_tree() {
        let t = build_bamboo(&complete_bipartite(1, 3)).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].nodes[0], VertexSet::from([0]));
        assert_eq!(t[0].nodes.len(), 4);
        assert!(t[0].is_bamboo_shaped());
        let w = build_bamboo(&path(4)).unwrap_err();
        assert!(w.verify(&path(4)));
    }

    #[test]
    fn bamboo_classes() {
        assert!(matches!(classify_bamboo_simplicial(&p3()).unwrap(), BambooClass::BlowupP3(_)));
        assert!(matches!(classify_bamboo_simplicial(&dart()).unwrap(), BambooClass::BlowupDart(_)));
        let s = complete_bipartite(1, 4);
        assert!(matches!(classify_bamboo_simplicial(&s).unwrap(), BambooClass::Other(_)));
    }

    #[test]
    fn cpair_examples() {
        // x=0, a0=1, a1=2
        let g = Graph::new(3, &[(0, 2), (1, 2)]).unwrap();
        let d = decompose_cpair(&g, &VertexSet::from([0]), &VertexSet::from([1, 2])).unwrap();
        assert_eq!(d.nodes.len(), 1);
        assert_eq!(d.nodes[0].a_part, VertexSet::from([2]));
        assert_eq!(d.a0, VertexSet::from([1]));
        assert!(d.matching.is_empty());
        // two clones x,x' with A-neighborhood {a1}
        let g = Graph::new(4, &[(0, 1), (0, 3), (1, 3), (2, 3)]).unwrap();
        let d = decompose_cpair(&g, &VertexSet::from([0, 1]), &VertexSet::from([2, 3])).unwrap();
        assert_eq!(d.nodes.len(), 1);
        assert!(d.nodes[0].homogeneous && d.matching.is_empty());
        // shared neighbor of non-adjacent x's
        let g = Graph::new(3, &[(0, 2), (1, 2)]).unwrap();
        let e = decompose_cpair(&g, &VertexSet::from([0, 1]), &VertexSet::from([2])).unwrap_err();
        assert_eq!(e.axiom, "private_a_neighbors");
    }
}
