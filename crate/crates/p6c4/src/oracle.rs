//! Exact reference values: clique number and chromatic number by
//! branch-and-bound, a second chromatic search for tiny graphs, and a
//! coloring verifier. Nothing here shares code with the coloring engine.

use crate::graph::{Coloring, Graph, VertexSet};
use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

pub const DEFAULT_CHI_CAP: usize = 30;
pub const DEFAULT_OMEGA_CAP: usize = 60;

/// Size caps for the exponential searches. `P6C4_ORACLE_CAP` overrides the
/// chromatic cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCaps {
    pub chi: usize,
    pub omega: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps { chi: DEFAULT_CHI_CAP, omega: DEFAULT_OMEGA_CAP }
    }
}

impl OracleCaps {
    pub fn from_env() -> Self {
        let mut caps = OracleCaps::default();
        if let Some(c) = std::env::var("P6C4_ORACLE_CAP").ok().and_then(|s| s.trim().parse().ok()) {
            caps.chi = c;
        }
        caps
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value")]
pub enum OracleWitness {
    Clique(VertexSet),
    Coloring(Coloring),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub value: usize,
    pub witness: OracleWitness,
    pub nodes_explored: u64,
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    nodes: u64,
}

impl CliqueSearch<'_> {
    /// Greedy sequential coloring of `p`; returns vertices with their color
    /// numbers (1-based), in nondecreasing color order.
    fn color_sort(&self, p: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut left = p.clone();
        let mut color = 0;
        while !left.is_clear() {
            color += 1;
            let mut avail = left.clone();
            while let Some(v) = avail.ones().next() {
                out.push((v, color));
                left.set(v, false);
                avail.set(v, false);
                avail.difference_with(self.g.row(v));
            }
        }
        out
    }

    fn expand(&mut self, cur: &mut Vec<usize>, p: FixedBitSet) {
        self.nodes += 1;
        let order = self.color_sort(&p);
        let mut p = p;
        for &(v, c) in order.iter().rev() {
            if cur.len() + c <= self.best.len() {
                return;
            }
            cur.push(v);
            let mut np = p.clone();
            np.intersect_with(self.g.row(v));
            if np.is_clear() {
                if cur.len() > self.best.len() {
                    self.best = cur.clone();
                }
            } else {
                self.expand(cur, np);
            }
            cur.pop();
            p.set(v, false);
        }
    }
}

/// Maximum clique by branch-and-bound with greedy-coloring bounds.
pub fn exact_clique(g: &Graph) -> OracleResult {
    let mut s = CliqueSearch { g, best: Vec::new(), nodes: 0 };
    if g.n() > 0 {
        s.expand(&mut Vec::new(), g.all_bits());
    }
    let clique: VertexSet = s.best.iter().copied().collect();
    OracleResult { value: clique.len(), witness: OracleWitness::Clique(clique), nodes_explored: s.nodes }
}

struct ChiSearch<'a> {
    g: &'a Graph,
    color: Vec<usize>,
    /// sat[v][c]: number of neighbors of v with color c.
    sat: Vec<Vec<u32>>,
    best: Vec<usize>,
    best_k: usize,
    lower: usize,
    nodes: u64,
}

const NONE: usize = usize::MAX;

impl ChiSearch<'_> {
    fn saturation(&self, v: usize) -> usize {
        self.sat[v].iter().filter(|&&c| c > 0).count()
    }

    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.color[v] == NONE)
            .max_by(|&a, &b| {
                self.saturation(a)
                    .cmp(&self.saturation(b))
                    .then(self.g.degree(a).cmp(&self.g.degree(b)))
                    .then(b.cmp(&a))
            })
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for &u in self.g.neighbors(v) {
            self.sat[u][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        for &u in self.g.neighbors(v) {
            self.sat[u][c] -= 1;
        }
        self.color[v] = NONE;
    }

    fn search(&mut self, used: usize) {
        self.nodes += 1;
        if self.best_k == self.lower {
            return;
        }
        let Some(v) = self.pick() else {
            if used < self.best_k {
                self.best_k = used;
                self.best = self.color.clone();
            }
            return;
        };
        // Colors are opened in order, so a fresh color is always `used`.
        for c in 0..=used {
            if c + 1 >= self.best_k {
                break;
            }
            if self.sat[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            self.search(used.max(c + 1));
            self.unassign(v);
            if self.best_k == self.lower {
                return;
            }
        }
    }
}

/// Plain DSATUR: an upper bound and a starting incumbent.
fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color = vec![NONE; n];
    let mut sat: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n + 1); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == NONE)
            .max_by(|&a, &b| {
                sat[a].count_ones(..).cmp(&sat[b].count_ones(..)).then(g.degree(a).cmp(&g.degree(b))).then(b.cmp(&a))
            })
            .expect("uncolored vertex");
        let c = (0..=n).find(|&c| !sat[v].contains(c)).expect("a free color");
        color[v] = c;
        for &u in g.neighbors(v) {
            sat[u].insert(c);
        }
    }
    color
}

/// Chromatic number by DSATUR branch-and-bound, lower-bounded by omega.
pub fn exact_chromatic(g: &Graph) -> OracleResult {
    let n = g.n();
    if n == 0 {
        return OracleResult { value: 0, witness: OracleWitness::Coloring(Coloring::new(vec![])), nodes_explored: 0 };
    }
    let omega = exact_clique(g);
    let start = dsatur_greedy(g);
    let start_k = start.iter().max().map_or(0, |&c| c + 1);
    let mut s = ChiSearch {
        g,
        color: vec![NONE; n],
        sat: vec![vec![0; n + 1]; n],
        best: start,
        best_k: start_k,
        lower: omega.value,
        nodes: omega.nodes_explored,
    };
    // Pin a maximum clique to colors 0..omega-1 (symmetry breaking).
    let OracleWitness::Clique(k) = &omega.witness else { unreachable!() };
    for (c, v) in k.iter().enumerate() {
        s.assign(v, c);
    }
    s.search(k.len());
    let coloring = Coloring::new(s.best.clone());
    OracleResult { value: s.best_k, witness: OracleWitness::Coloring(coloring), nodes_explored: s.nodes }
}

/// Second chromatic oracle for tiny graphs: smallest k admitting a
/// restricted-growth assignment of colors in vertex order.
pub fn chromatic_by_partitions(g: &Graph) -> usize {
    assert!(g.n() <= 12, "exhaustive partition search is for tiny graphs");
    fn fits(g: &Graph, k: usize, col: &mut Vec<usize>) -> bool {
        let v = col.len();
        if v == g.n() {
            return true;
        }
        let top = col.iter().copied().max().map_or(0, |m| m + 1);
        for c in 0..=top.min(k - 1) {
            if col.iter().enumerate().any(|(u, &cu)| cu == c && g.has_edge(u, v)) {
                continue;
            }
            col.push(c);
            if fits(g, k, col) {
                return true;
            }
            col.pop();
        }
        false
    }
    (0..=g.n()).find(|&k| k == g.n() || (k > 0 && fits(g, k, &mut Vec::new())) || g.n() == 0).unwrap_or(g.n())
}

/// Lexicographically smallest induced copy of `pat` in `g` (image of each
/// pattern vertex, in pattern order), by enumerating every vertex subset of
/// the right size and every assignment within it. Meant for n <= 12 or so.
pub fn induced_copy_by_subsets(g: &Graph, pat: &Graph) -> Option<Vec<usize>> {
    let k = pat.n();
    if k > g.n() {
        return None;
    }
    let mut pat_deg: Vec<usize> = pat.vertices().map(|v| pat.degree(v)).collect();
    pat_deg.sort_unstable();
    fn assign(g: &Graph, pat: &Graph, sub: &[usize], img: &mut Vec<usize>, best: &mut Option<Vec<usize>>) {
        let i = img.len();
        if i == pat.n() {
            if best.as_ref().is_none_or(|b| *img < *b) {
                *best = Some(img.clone());
            }
            return;
        }
        for &v in sub {
            if img.contains(&v) || (0..i).any(|j| pat.has_edge(i, j) != g.has_edge(v, img[j])) {
                continue;
            }
            img.push(v);
            assign(g, pat, sub, img, best);
            img.pop();
        }
    }
    let mut best = None;
    let mut sub: Vec<usize> = (0..k).collect();
    loop {
        let mut deg: Vec<usize> = sub.iter().map(|&v| sub.iter().filter(|&&u| g.has_edge(u, v)).count()).collect();
        deg.sort_unstable();
        if deg == pat_deg {
            assign(g, pat, &sub, &mut Vec::with_capacity(k), &mut best);
        }
        // Next k-combination in lexicographic order.
        let Some(i) = (0..k).rev().find(|&i| sub[i] < g.n() - k + i) else { break };
        sub[i] += 1;
        for j in i + 1..k {
            sub[j] = sub[j - 1] + 1;
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColoringError {
    #[error("coloring covers {got} vertices, graph has {n}")]
    Partial { got: usize, n: usize },
    #[error("edge ({0},{1}) is monochromatic")]
    Monochromatic(usize, usize),
    #[error("num_colors is {claimed} but {actual} colors are used")]
    Count { claimed: usize, actual: usize },
}

pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<(), ColoringError> {
    if c.len() != g.n() {
        return Err(ColoringError::Partial { got: c.len(), n: g.n() });
    }
    if let Some((u, v)) = g.edges().into_iter().find(|&(u, v)| c.color(u) == c.color(v)) {
        return Err(ColoringError::Monochromatic(u, v));
    }
    let actual = Coloring::new(c.assignment.clone()).num_colors;
    if actual != c.num_colors {
        return Err(ColoringError::Count { claimed: c.num_colors, actual });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn small_values() {
        assert_eq!(exact_clique(&named::complete(4)).value, 4);
        assert_eq!(exact_clique(&named::petersen()).value, 2);
        assert_eq!(exact_chromatic(&named::cycle(5)).value, 3);
        assert_eq!(exact_chromatic(&named::petersen()).value, 3);
        assert_eq!(exact_chromatic(&Graph::empty(0)).value, 0);
        assert_eq!(exact_chromatic(&Graph::empty(3)).value, 1);
        assert_eq!(chromatic_by_partitions(&named::cycle(5)), 3);
        assert_eq!(chromatic_by_partitions(&Graph::empty(0)), 0);
        assert_eq!(chromatic_by_partitions(&Graph::empty(2)), 1);
    }

    #[test]
    fn subset_copies() {
        let c5 = named::cycle(5);
        assert_eq!(induced_copy_by_subsets(&c5, &named::path(4)), Some(vec![0, 1, 2, 3]));
        assert_eq!(induced_copy_by_subsets(&c5, &named::path(5)), None);
        assert_eq!(induced_copy_by_subsets(&named::complete(3), &Graph::empty(0)), Some(vec![]));
    }

    #[test]
    fn verifier() {
        let c5 = named::cycle(5);
        assert!(verify_coloring(&c5, &Coloring::new(vec![0, 1, 0, 1, 2])).is_ok());
        assert_eq!(verify_coloring(&c5, &Coloring::new(vec![0, 1, 0, 1, 0])), Err(ColoringError::Monochromatic(0, 4)));
        assert!(verify_coloring(&c5, &Coloring::new(vec![0, 1, 2, 3, 4])).is_ok());
        assert!(matches!(verify_coloring(&c5, &Coloring::new(vec![0, 1])), Err(ColoringError::Partial { .. })));
    }
}
