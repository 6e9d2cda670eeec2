use crate::detect;
use crate::graph::{Graph, VertexSet};
use crate::named;
use crate::trivially_perfect::clone_quotient;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Target graph of a blowup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name")]
pub enum BaseGraph {
    C5,
    H1,
    H2,
    H3,
    H4,
    H5,
    F3,
    P3,
    Dart,
    Fkl { k: usize, l: usize },
    Custom { graph: Graph },
}

impl BaseGraph {
    pub fn graph(&self) -> Graph {
        match self {
            BaseGraph::C5 => named::c5(),
            BaseGraph::H1 => named::h1(),
            BaseGraph::H2 => named::h2(),
            BaseGraph::H3 => named::h3(),
            BaseGraph::H4 => named::h4(),
            BaseGraph::H5 => named::h5(),
            BaseGraph::F3 => named::f3(),
            BaseGraph::P3 => named::p3(),
            BaseGraph::Dart => named::dart(),
            BaseGraph::Fkl { k, l } => named::fkl(*k, *l),
            BaseGraph::Custom { graph } => graph.clone(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            BaseGraph::Fkl { k, l } => format!("F{{{k},{l}}}"),
            BaseGraph::Custom { .. } => "custom".into(),
            other => format!("{other:?}"),
        }
    }

    /// Inverse of `name` (case-insensitive); also accepts `F{k,l}` written
    /// as `Fk,l` or `F_k_l`.
    pub fn parse(s: &str) -> Option<BaseGraph> {
        let up = s.to_ascii_uppercase();
        if let Some(rest) = up.strip_prefix('F').filter(|r| r.contains([',', '_'])) {
            let nums: Vec<usize> = rest
                .split(|c: char| !c.is_ascii_digit())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().ok())
                .collect::<Option<_>>()?;
            return match nums[..] {
                [k, l] => Some(BaseGraph::Fkl { k, l }),
                _ => None,
            };
        }
        Some(match up.as_str() {
            "C5" => BaseGraph::C5,
            "H1" | "PETERSEN" => BaseGraph::H1,
            "H2" => BaseGraph::H2,
            "H3" => BaseGraph::H3,
            "H4" => BaseGraph::H4,
            "H5" => BaseGraph::H5,
            "F3" => BaseGraph::F3,
            "P3" => BaseGraph::P3,
            "DART" => BaseGraph::Dart,
            _ => return None,
        })
    }
}

/// Bags indexed by base vertex; empty bags allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupMap {
    pub base: BaseGraph,
    pub bags: Vec<VertexSet>,
}

impl BlowupMap {
    pub fn sizes(&self) -> Vec<usize> {
        self.bags.iter().map(VertexSet::len).collect()
    }

    /// Base vertex whose bag holds v.
    pub fn bag_of(&self, v: usize) -> Option<usize> {
        self.bags.iter().position(|b| b.contains(v))
    }
}

/// Breadth-first order over every component, so each vertex after a
/// component's first has an earlier neighbor.
fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            order.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    q.push_back(u);
                }
            }
        }
    }
    order
}

/// Express g as a blowup of `base`: map every clone class of g to its own
/// base vertex so that the quotient sits in the base as an induced subgraph.
/// Unused base vertices get empty bags.
pub fn match_blowup(g: &Graph, base: &BaseGraph) -> Option<BlowupMap> {
    let h = base.graph();
    let cq = clone_quotient(g);
    if cq.classes.len() > h.n() {
        return None;
    }
    let order = bfs_order(&cq.quotient);
    let pat = cq.quotient.induced_ordered(&order);
    let img = detect::find_induced_copy(&h, &pat)?;
    let mut bags = vec![VertexSet::new(); h.n()];
    for (i, &c) in order.iter().enumerate() {
        bags[img[i]] = cq.classes[c].clone();
    }
    Some(BlowupMap { base: base.clone(), bags })
}

/// Smallest F_{k,l} (by k+l, then k) that g is a blowup of, with k, l >= 1.
pub fn match_fkl(g: &Graph) -> Option<BlowupMap> {
    let nq = clone_quotient(g).classes.len();
    let min_sum = nq.saturating_sub(5).div_ceil(2).max(2);
    for s in min_sum..=nq.max(2) {
        for k in 1..s {
            if let Some(m) = match_blowup(g, &BaseGraph::Fkl { k, l: s - k }) {
                return Some(m);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_is_h1() {
        let m = match_blowup(&named::petersen(), &BaseGraph::H1).unwrap();
        assert_eq!(m.sizes(), vec![1; 10]);
    }

    #[test]
    fn c5_inside_h1_with_empty_bags() {
        let m = match_blowup(&named::c5(), &BaseGraph::H1).unwrap();
        assert_eq!(m.sizes().iter().filter(|&&s| s == 0).count(), 5);
    }

    #[test]
    fn fkl_recovered() {
        let m = match_fkl(&named::fkl(2, 1)).unwrap();
        assert!(matches!(m.base, BaseGraph::Fkl { k: 2, l: 1 } | BaseGraph::Fkl { k: 1, l: 2 }));
        assert!(match_blowup(&named::h5(), &BaseGraph::F3).is_none());
    }
}
