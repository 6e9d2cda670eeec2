//! Induced-subgraph detectors, chordality, simplicial and universal vertices,
//! and clique cutsets.

use crate::graph::{bits, Graph, VertexSet};
use crate::named;
use crate::trivially_perfect::clone_quotient;
use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    Path(usize),
    Cycle(usize),
    Hole,
    F1,
    F2,
    F3,
    TwoP3,
    Dart,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessKind::Path(k) => write!(f, "P{k}"),
            WitnessKind::Cycle(k) => write!(f, "C{k}"),
            WitnessKind::Hole => write!(f, "HOLE"),
            WitnessKind::F1 => write!(f, "F1"),
            WitnessKind::F2 => write!(f, "F2"),
            WitnessKind::F3 => write!(f, "F3"),
            WitnessKind::TwoP3 => write!(f, "2P3"),
            WitnessKind::Dart => write!(f, "DART"),
        }
    }
}

impl FromStr for WitnessKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "HOLE" => WitnessKind::Hole,
            "F1" => WitnessKind::F1,
            "F2" => WitnessKind::F2,
            "F3" => WitnessKind::F3,
            "2P3" => WitnessKind::TwoP3,
            "DART" => WitnessKind::Dart,
            _ => {
                let num = |t: &str| t.parse::<usize>().map_err(|_| format!("unknown witness kind {s}"));
                if let Some(k) = s.strip_prefix('P') {
                    WitnessKind::Path(num(k)?)
                } else if let Some(k) = s.strip_prefix('C') {
                    WitnessKind::Cycle(num(k)?)
                } else {
                    return Err(format!("unknown witness kind {s}"));
                }
            }
        })
    }
}

impl Serialize for WitnessKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for WitnessKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Ordered vertices realizing a pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
}

impl Witness {
    /// The pattern this witness claims, in witness order.
    pub fn pattern(&self) -> Graph {
        match self.kind {
            WitnessKind::Path(k) => named::path(k),
            WitnessKind::Cycle(k) => named::cycle(k),
            WitnessKind::Hole => named::cycle(self.vertices.len()),
            WitnessKind::F1 => named::f1(),
            WitnessKind::F2 => named::f2(),
            WitnessKind::F3 => named::f3(),
            WitnessKind::TwoP3 => named::two_p3(),
            WitnessKind::Dart => named::dart(),
        }
    }

    /// Re-check against the host graph.
    pub fn verify(&self, g: &Graph) -> bool {
        let p = self.pattern();
        let vs = &self.vertices;
        if vs.len() != p.n() || vs.iter().any(|&v| v >= g.n()) {
            return false;
        }
        if self.kind == WitnessKind::Hole && vs.len() < 4 {
            return false;
        }
        let distinct: VertexSet = vs.iter().copied().collect();
        if distinct.len() != vs.len() {
            return false;
        }
        (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| g.has_edge(vs[i], vs[j]) == p.has_edge(i, j)))
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.kind)?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Special {
    F1,
    F2,
    F3,
    TwoP3,
    Dart,
}

impl Special {
    fn kind(self) -> WitnessKind {
        match self {
            Special::F1 => WitnessKind::F1,
            Special::F2 => WitnessKind::F2,
            Special::F3 => WitnessKind::F3,
            Special::TwoP3 => WitnessKind::TwoP3,
            Special::Dart => WitnessKind::Dart,
        }
    }

    fn pattern(self) -> Graph {
        Witness { kind: self.kind(), vertices: vec![] }.pattern()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DetectError {
    #[error("graph is disconnected")]
    Disconnected,
}

/// Lexicographically smallest injective map of `pat` (in its own vertex order)
/// onto an induced copy in `g`. With `rotate`, the pattern is assumed
/// vertex-transitive and the first image is forced to be the minimum.
fn embed(g: &Graph, pat: &Graph, rotate: bool) -> Option<Vec<usize>> {
    let p = pat.n();
    if p == 0 {
        return Some(vec![]);
    }
    if p > g.n() {
        return None;
    }
    let mut img = Vec::with_capacity(p);
    let mut used = FixedBitSet::with_capacity(g.n());
    if extend(g, pat, rotate, &mut img, &mut used) {
        Some(img)
    } else {
        None
    }
}

fn extend(g: &Graph, pat: &Graph, rotate: bool, img: &mut Vec<usize>, used: &mut FixedBitSet) -> bool {
    let i = img.len();
    if i == pat.n() {
        return true;
    }
    let mut cand = g.all_bits();
    cand.difference_with(used);
    for (j, &m) in img.iter().enumerate() {
        if pat.has_edge(i, j) {
            cand.intersect_with(g.row(m));
        } else {
            cand.difference_with(g.row(m));
        }
        if cand.is_clear() {
            return false;
        }
    }
    if rotate && i > 0 {
        cand.remove_range(..img[0] + 1);
    }
    let cands: Vec<usize> = cand.ones().collect();
    for c in cands {
        img.push(c);
        used.insert(c);
        if extend(g, pat, rotate, img, used) {
            return true;
        }
        img.pop();
        used.set(c, false);
    }
    false
}

fn has_twins(g: &Graph) -> bool {
    g.vertices().any(|u| g.neighbors(u).iter().any(|&v| g.closed_row(u) == g.closed_row(v)))
}

/// Smallest witness of `pat`, searched on the clone quotient when the pattern
/// has no twins (an induced copy then never uses two clones, and replacing each
/// image by its class minimum keeps it a copy).
fn find_pattern(g: &Graph, pat: &Graph, rotate: bool) -> Option<Vec<usize>> {
    if pat.n() >= 3 && !has_twins(pat) {
        let cq = clone_quotient(g);
        if cq.classes.len() < g.n() {
            let img = embed(&cq.quotient, pat, rotate)?;
            return Some(img.into_iter().map(|c| cq.classes[c].as_slice()[0]).collect());
        }
    }
    embed(g, pat, rotate)
}

/// Lexicographically smallest induced P_k (vertex sequence).
pub fn find_induced_path(g: &Graph, k: usize) -> Option<Witness> {
    assert!(k >= 1, "paths need at least one vertex");
    let pat = named::path(k);
    find_pattern(g, &pat, false).map(|vertices| Witness { kind: WitnessKind::Path(k), vertices })
}

/// Lexicographically smallest induced C_k, in cyclic order.
pub fn find_induced_cycle(g: &Graph, k: usize) -> Option<Witness> {
    assert!(k >= 3, "cycles need at least three vertices");
    let pat = named::cycle(k);
    find_pattern(g, &pat, true).map(|vertices| Witness { kind: WitnessKind::Cycle(k), vertices })
}

pub fn find_special(g: &Graph, which: Special) -> Option<Witness> {
    let pat = which.pattern();
    find_pattern(g, &pat, false).map(|vertices| Witness { kind: which.kind(), vertices })
}

/// Lexicographically smallest induced copy of `pat` in `host`, as the image of
/// each pattern vertex in pattern order. Searches the host directly.
pub fn find_induced_copy(host: &Graph, pat: &Graph) -> Option<Vec<usize>> {
    embed(host, pat, false)
}

/// Ok when g has no induced P6 and no induced C4; otherwise a witness, C4 first.
pub fn is_p6c4_free(g: &Graph) -> Result<(), Witness> {
    if let Some(w) = find_induced_cycle(g, 4) {
        return Err(w);
    }
    match find_induced_path(g, 6) {
        Some(w) => Err(w),
        None => Ok(()),
    }
}

/// A perfect elimination ordering (first eliminated first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationOrder {
    pub order: Vec<usize>,
}

impl EliminationOrder {
    /// Each vertex's later neighbors form a clique.
    pub fn is_perfect(&self, g: &Graph) -> bool {
        self.first_failure(g).is_none()
    }

    fn first_failure(&self, g: &Graph) -> Option<usize> {
        let n = g.n();
        if self.order.len() != n {
            return Some(0);
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Some(v.min(n.saturating_sub(1)));
            }
            pos[v] = i;
        }
        for &v in &self.order {
            let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| pos[u] > pos[v]).collect();
            if let Some(&p) = later.iter().min_by_key(|&&u| pos[u]) {
                if later.iter().any(|&u| u != p && !g.has_edge(u, p)) {
                    return Some(v);
                }
            }
        }
        None
    }
}

/// Maximum cardinality search; the reverse visit order is a perfect
/// elimination ordering exactly when g is chordal.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex");
        done[v] = true;
        visit.push(v);
        for &u in g.neighbors(v) {
            weight[u] += 1;
        }
    }
    visit.reverse();
    visit
}

/// A hole through v and two non-adjacent neighbors u, w of v, if any.
fn hole_through(g: &Graph, v: usize, u: usize, w: usize) -> Option<Vec<usize>> {
    let mut allowed = g.all_bits();
    allowed.difference_with(&g.closed_row(v));
    allowed.insert(u);
    allowed.insert(w);
    let mut prev = vec![usize::MAX; g.n()];
    let mut queue = std::collections::VecDeque::from([u]);
    prev[u] = u;
    while let Some(x) = queue.pop_front() {
        if x == w {
            let mut path = vec![w];
            let mut cur = w;
            while cur != u {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            let mut hole = vec![v];
            hole.extend(path);
            return Some(hole);
        }
        for &y in g.neighbors(x) {
            if allowed.contains(y) && prev[y] == usize::MAX && !(x == u && y == w) {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Some hole of g, found by scanning vertices and pairs of non-adjacent
/// neighbors in lexicographic order.
pub fn find_hole(g: &Graph) -> Option<Witness> {
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                if let Some(h) = hole_through(g, v, u, w) {
                    return Some(Witness { kind: WitnessKind::Hole, vertices: h });
                }
            }
        }
    }
    None
}

pub fn chordality(g: &Graph) -> Result<EliminationOrder, Witness> {
    let peo = EliminationOrder { order: mcs_order(g) };
    if peo.is_perfect(g) {
        return Ok(peo);
    }
    Err(find_hole(g).expect("a non-chordal graph has a hole"))
}

pub fn is_chordal(g: &Graph) -> bool {
    EliminationOrder { order: mcs_order(g) }.is_perfect(g)
}

pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    g.vertices().filter(|&v| g.is_clique(g.neighbors(v))).collect()
}

pub fn universal_vertices(g: &Graph) -> VertexSet {
    g.vertices().filter(|&v| g.degree(v) + 1 == g.n()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCutset {
    pub clique: VertexSet,
    /// The component of G - K containing the smallest vertex outside K.
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

/// MCS-M: a minimal elimination ordering together with, for each vertex, its
/// higher neighbors in the resulting minimal triangulation.
fn mcs_m(g: &Graph) -> (Vec<usize>, Vec<Vec<usize>>) {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut order_rev = Vec::with_capacity(n);
    let mut madj = vec![Vec::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unnumbered vertex");
        // key[u]: least possible maximum weight over the interior of a path
        // from v to u through unnumbered vertices (-1 encoded as 0, shifted by 1).
        let mut key = vec![usize::MAX; n];
        let mut heap = BinaryHeap::new();
        for &u in g.neighbors(v) {
            if !numbered[u] {
                key[u] = 0;
                heap.push(std::cmp::Reverse((0usize, u)));
            }
        }
        while let Some(std::cmp::Reverse((k, u))) = heap.pop() {
            if k > key[u] {
                continue;
            }
            let through = k.max(weight[u] + 1);
            for &y in g.neighbors(u) {
                if !numbered[y] && y != v && through < key[y] {
                    key[y] = through;
                    heap.push(std::cmp::Reverse((through, y)));
                }
            }
        }
        let reach: Vec<usize> = (0..n)
            .filter(|&u| !numbered[u] && u != v && key[u] != usize::MAX && key[u] < weight[u] + 1)
            .collect();
        for &u in &reach {
            weight[u] += 1;
            madj[u].push(v);
        }
        numbered[v] = true;
        order_rev.push(v);
    }
    order_rev.reverse();
    for m in &mut madj {
        m.sort_unstable();
    }
    (order_rev, madj)
}

/// A clique whose removal disconnects g, with one side being a component.
pub fn find_clique_cutset(g: &Graph) -> Result<Option<CliqueCutset>, DetectError> {
    if !g.is_connected() {
        return Err(DetectError::Disconnected);
    }
    let (order, madj) = mcs_m(g);
    for &x in &order {
        let s = &madj[x];
        if s.is_empty() || !g.is_clique(s) {
            continue;
        }
        if let Some(cut) = split_by(g, s) {
            return Ok(Some(cut));
        }
    }
    Ok(None)
}

/// The split of g by `k` when g - k is disconnected.
pub fn split_by(g: &Graph, k: &[usize]) -> Option<CliqueCutset> {
    let mut rest = g.all_bits();
    for &v in k {
        rest.set(v, false);
    }
    let comps = g.components_within(&rest);
    if comps.len() < 2 {
        return None;
    }
    let side_a = comps[0].clone();
    let side_b: VertexSet = comps[1..].iter().flat_map(|c| c.iter()).collect();
    Some(CliqueCutset { clique: k.iter().copied().collect(), side_a, side_b })
}

/// Brute-force: does any clique of g separate it? Exponential; tests only.
pub fn has_clique_cutset_brute(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 20, "brute force is for tiny graphs");
    let base = g.components().len();
    (0u32..1 << n).any(|mask| {
        let k: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if !g.is_clique(&k) {
            return false;
        }
        let rest = bits(n, (0..n).filter(|&i| mask >> i & 1 == 0));
        g.components_within(&rest).len() > base
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::*;

    #[test]
    fn path_witnesses() {
        let w = find_induced_path(&path(6), 6).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4, 5]);
        assert!(find_induced_path(&cycle(6), 6).is_none());
        let w = find_induced_path(&path(7), 6).unwrap();
        assert!(w.verify(&path(7)));
        assert!(find_induced_path(&petersen(), 6).is_none());
        assert_eq!(find_induced_path(&complete(3), 1).unwrap().vertices, vec![0]);
    }

    #[test]
    fn cycle_witnesses() {
        let w = find_induced_cycle(&complete_bipartite(2, 3), 4).unwrap();
        assert_eq!(w.vertices, vec![0, 2, 1, 3]);
        assert!(find_induced_cycle(&bowtie(), 4).is_none());
        assert_eq!(find_induced_cycle(&cycle(5), 5).unwrap().vertices, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn specials_identity() {
        let f3g = f3();
        assert_eq!(find_special(&f3g, Special::F3).unwrap().vertices, (0..9).collect::<Vec<_>>());
        assert!(find_special(&cycle(5), Special::F1).is_none());
        assert!(find_special(&f2(), Special::F1).is_none());
        assert_eq!(find_special(&f1(), Special::F1).unwrap().vertices, (0..8).collect::<Vec<_>>());
        assert_eq!(find_special(&f2(), Special::F2).unwrap().vertices, (0..8).collect::<Vec<_>>());
        assert!(find_special(&dart(), Special::Dart).is_some());
        assert!(find_special(&two_p3(), Special::TwoP3).is_some());
    }

    #[test]
    fn witness_kind_names() {
        for k in ["P6", "C4", "HOLE", "F1", "F2", "F3", "2P3", "DART"] {
            assert_eq!(k.parse::<WitnessKind>().unwrap().to_string(), k);
        }
        assert!("Q3".parse::<WitnessKind>().is_err());
    }

    #[test]
    fn p6c4_verdicts() {
        let w = is_p6c4_free(&cycle(4)).unwrap_err();
        assert_eq!(w.kind, WitnessKind::Cycle(4));
        assert!(is_p6c4_free(&cycle(5)).is_ok());
        assert_eq!(is_p6c4_free(&path(6)).unwrap_err().kind, WitnessKind::Path(6));
        // split graph: K4 plus a stable set attached arbitrarily
        let split = Graph::from_fn(8, |u, v| (u < 4 && v < 4) || (u < 4 && v >= 4 && (u + v) % 3 != 0));
        assert!(is_p6c4_free(&split).is_ok());
    }

    #[test]
    fn chordality_cases() {
        let tree = Graph::new(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        let peo = chordality(&tree).unwrap();
        assert!(peo.is_perfect(&tree));
        let w = chordality(&cycle(5)).unwrap_err();
        assert_eq!(w.vertices.len(), 5);
        assert!(w.verify(&cycle(5)));
        let w = chordality(&petersen()).unwrap_err();
        assert!(w.verify(&petersen()));
    }

    #[test]
    fn simplicial_and_universal() {
        assert_eq!(simplicial_vertices(&path(3)), VertexSet::from([0, 2]));
        assert!(simplicial_vertices(&cycle(5)).is_empty());
        assert_eq!(simplicial_vertices(&complete(4)).len(), 4);
        assert_eq!(universal_vertices(&complete(4)).len(), 4);
        assert_eq!(universal_vertices(&complete_bipartite(1, 3)), VertexSet::from([0]));
        assert!(universal_vertices(&cycle(5)).is_empty());
    }

    #[test]
    fn clique_cutsets() {
        let c = find_clique_cutset(&path(3)).unwrap().unwrap();
        assert_eq!(c.clique, VertexSet::from([1]));
        assert_eq!((c.side_a, c.side_b), (VertexSet::from([0]), VertexSet::from([2])));
        assert!(find_clique_cutset(&cycle(5)).unwrap().is_none());
        let c = find_clique_cutset(&bowtie()).unwrap().unwrap();
        assert!(c.clique.contains(2) && bowtie().is_clique(c.clique.as_slice()));
        assert_eq!(find_clique_cutset(&two_p3()), Err(DetectError::Disconnected));
        assert!(find_clique_cutset(&petersen()).unwrap().is_none());
        assert!(find_clique_cutset(&complete(4)).unwrap().is_none());
    }
}
