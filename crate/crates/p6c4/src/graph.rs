//! Immutable simple graphs on dense vertex ids, vertex sets and colorings.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("edge #{index} ({u},{v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { index: usize, u: usize, v: usize, n: usize },
    #[error("edge #{index} is a self-loop on {v}")]
    SelfLoop { index: usize, v: usize },
    #[error("vertex {v} is outside 0..{n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("graph has no vertices")]
    Empty,
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> std::iter::Copied<std::slice::Iter<'_, usize>> {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn insert(&mut self, v: usize) {
        if let Err(pos) = self.0.binary_search(&v) {
            self.0.insert(pos, v);
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn to_bits(&self, n: usize) -> FixedBitSet {
        bits(n, self.iter())
    }

    pub fn from_bits(b: &FixedBitSet) -> VertexSet {
        VertexSet(b.ones().collect())
    }

    /// Map every member through `f` (e.g. local ids to host ids).
    pub fn map(&self, f: impl Fn(usize) -> usize) -> VertexSet {
        self.iter().map(f).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;
    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub fn bits(n: usize, members: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    for v in members {
        b.insert(v);
    }
    b
}

/// Total vertex coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>) -> Self {
        let mut seen: Vec<usize> = assignment.clone();
        seen.sort_unstable();
        seen.dedup();
        Coloring { num_colors: seen.len(), assignment }
    }

    /// Relabel colors to 0..k-1 in order of first appearance.
    pub fn normalized(&self) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let assignment = self
            .assignment
            .iter()
            .map(|c| {
                let next = map.len();
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Coloring::new(assignment)
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub max_degree: usize,
    pub degrees: Vec<usize>,
}

/// Simple undirected graph. Adjacency is kept twice: sorted neighbor lists for
/// iteration and bit rows for constant-time tests and set algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<FixedBitSet>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Build from an edge list; duplicates are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { index, u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, v });
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    /// Build from a symmetric adjacency predicate, queried for u < v.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    rows[u].insert(v);
                    rows[v].insert(u);
                }
            }
        }
        Self::from_rows(rows)
    }

    fn from_rows(rows: Vec<FixedBitSet>) -> Graph {
        let adj = rows.iter().map(|r| r.ones().collect()).collect();
        Graph { adj, rows, labels: None }
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_rows(vec![FixedBitSet::with_capacity(n); n])
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount { expected: self.n(), got: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Graph {
        self.labels = None;
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a vertex: its label if present, else its id.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Vertex with the given label.
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn closed_row(&self, v: usize) -> FixedBitSet {
        let mut r = self.rows[v].clone();
        r.insert(v);
        r
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn all_bits(&self) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(self.n());
        b.insert_range(..);
        b
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// G[s] together with the map from new ids to old ids (in sorted order of s).
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut map: Vec<usize> = s.to_vec();
        map.sort_unstable();
        map.dedup();
        if let Some(&v) = map.iter().find(|&&v| v >= self.n()) {
            return Err(GraphError::VertexOutOfRange { v, n: self.n() });
        }
        Ok((self.induced_ordered(&map), map))
    }

    /// G[s] keeping the caller's order: vertex i of the result is s[i].
    /// Members must be distinct and in range.
    pub fn induced_ordered(&self, s: &[usize]) -> Graph {
        let k = s.len();
        let mut rows = vec![FixedBitSet::with_capacity(k); k];
        for i in 0..k {
            for j in i + 1..k {
                if self.has_edge(s[i], s[j]) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        let mut g = Self::from_rows(rows);
        if let Some(l) = &self.labels {
            g.labels = Some(s.iter().map(|&v| l[v].clone()).collect());
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.all_bits())
    }

    /// Components of G[s] in host ids.
    pub fn components_within(&self, s: &FixedBitSet) -> Vec<VertexSet> {
        let mut seen = FixedBitSet::with_capacity(self.n());
        let mut out = Vec::new();
        for start in s.ones() {
            if seen.contains(start) {
                continue;
            }
            seen.insert(start);
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if s.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp.into_iter().collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn degree_stats(&self) -> Result<DegreeStats, GraphError> {
        if self.n() == 0 {
            return Err(GraphError::Empty);
        }
        let degrees: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        Ok(DegreeStats { max_degree, degrees })
    }

    pub fn is_clique(&self, s: &[usize]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    pub fn is_stable(&self, s: &[usize]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// First (a, b) with a in `a`, b in `b`, a != b and ab not an edge.
    pub fn first_non_edge(&self, a: &[usize], b: &[usize]) -> Option<(usize, usize)> {
        a.iter()
            .flat_map(|&x| b.iter().map(move |&y| (x, y)))
            .find(|&(x, y)| x != y && !self.has_edge(x, y))
    }

    /// First edge (a, b) with a in `a`, b in `b`.
    pub fn first_edge(&self, a: &[usize], b: &[usize]) -> Option<(usize, usize)> {
        a.iter()
            .flat_map(|&x| b.iter().map(move |&y| (x, y)))
            .find(|&(x, y)| self.has_edge(x, y))
    }

    pub fn complete_to(&self, a: &[usize], b: &[usize]) -> bool {
        self.first_non_edge(a, b).is_none()
    }

    pub fn anticomplete_to(&self, a: &[usize], b: &[usize]) -> bool {
        self.first_edge(a, b).is_none()
    }

    /// Neighbors of v inside s.
    pub fn neighbors_in(&self, v: usize, s: &VertexSet) -> VertexSet {
        s.iter().filter(|&u| self.has_edge(v, u)).collect()
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n(), |u, v| !self.has_edge(u, v))
    }

    /// Disjoint union; vertices of `other` are shifted by self.n().
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + off, v + off)));
        Graph::new(off + other.n(), &edges).expect("valid by construction")
    }
}

#[derive(Serialize, Deserialize)]
struct GraphData {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphData { n: self.n(), edges: self.edges(), labels: self.labels.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let data = GraphData::deserialize(d)?;
        let g = Graph::new(data.n, &data.edges).map_err(serde::de::Error::custom)?;
        match data.labels {
            Some(l) => g.with_labels(l).map_err(serde::de::Error::custom),
            None => Ok(g),
        }
    }
}
