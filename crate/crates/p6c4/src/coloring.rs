//! Coloring within `ceil(5 * omega / 4)`.
//!
//! The engine recurses on induced subgraphs: components, chordal leaves,
//! universal vertices and clique cutsets are handled directly; everything
//! else is classified and then reduced by one of five tool steps, each of
//! which removes something, colors the rest recursively and extends. A step
//! is only taken after its invariant is checked, so the bound holds at every
//! level by induction. When no step is found the exact oracle is used and the
//! instance is flagged.

use crate::detect::{self, Witness};
use crate::graph::{Coloring, Graph, VertexSet};
use crate::oracle::{self, OracleCaps, OracleWitness};
use crate::structure::{classify, validate_certificate, BaseGraph, BlowupMap, CertKind, ClassifyError, StructureCertificate};
use crate::trivially_perfect::{clone_quotient, CloneClasses};
use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

/// `ceil(5w/4)`.
pub fn bound54(omega: usize) -> usize {
    (5 * omega).div_ceil(4)
}

/// `ceil((delta + omega + 1) / 2)`.
pub fn reed_bound(delta: usize, omega: usize) -> usize {
    (delta + omega + 1).div_ceil(2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub omega: usize,
    pub delta: usize,
    pub bound54: usize,
    pub reed: usize,
    /// Colors used by the engine; absent when only bounds were asked for.
    pub chi_alg: Option<usize>,
    pub chi_exact: Option<usize>,
}

/// Clique number, max degree and the two bounds; the exact chromatic number
/// too when asked and the graph is under the oracle cap.
pub fn bounds(g: &Graph, with_exact: bool) -> BoundReport {
    bounds_with(g, with_exact, OracleCaps::from_env())
}

pub fn bounds_with(g: &Graph, with_exact: bool, caps: OracleCaps) -> BoundReport {
    let omega = clique_number(g);
    let delta = g.vertices().map(|v| g.degree(v)).max().unwrap_or(0);
    let chi_exact = (with_exact && g.n() <= caps.chi).then(|| oracle::exact_chromatic(g).value);
    BoundReport { omega, delta, bound54: bound54(omega), reed: reed_bound(delta, omega), chi_alg: None, chi_exact }
}

/// Maximal cliques by Bron-Kerbosch with pivoting, each sorted, in
/// lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    fn bk(g: &Graph, r: &mut Vec<usize>, p: FixedBitSet, mut x: FixedBitSet, out: &mut Vec<VertexSet>) {
        if p.is_clear() {
            if x.is_clear() {
                out.push(r.iter().copied().collect());
            }
            return;
        }
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| (p.intersection(g.row(u)).count(), std::cmp::Reverse(u)))
            .expect("p is non-empty");
        let mut cand = p.clone();
        cand.difference_with(g.row(pivot));
        let mut p = p;
        for v in cand.ones() {
            r.push(v);
            let mut np = p.clone();
            np.intersect_with(g.row(v));
            let mut nx = x.clone();
            nx.intersect_with(g.row(v));
            bk(g, r, np, nx, out);
            r.pop();
            p.set(v, false);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    if g.n() > 0 {
        bk(g, &mut Vec::new(), g.all_bits(), FixedBitSet::with_capacity(g.n()), &mut out);
    }
    out.sort();
    out
}

pub fn clique_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    Quotient::new(g).omega
}

/// Clone quotient with class sizes as weights and its maximal cliques.
struct Quotient {
    cq: CloneClasses,
    w: Vec<usize>,
    cliques: Vec<Vec<usize>>,
    omega: usize,
}

impl Quotient {
    fn new(g: &Graph) -> Self {
        let cq = clone_quotient(g);
        let w = cq.sizes();
        let cliques: Vec<Vec<usize>> = maximal_cliques(&cq.quotient).into_iter().map(VertexSet::into_vec).collect();
        let omega = cliques.iter().map(|k| k.iter().map(|&c| w[c]).sum()).max().unwrap_or(0);
        Quotient { cq, w, cliques, omega }
    }

    fn weight(&self, k: &[usize]) -> usize {
        k.iter().map(|&c| self.w[c]).sum()
    }

    fn rep(&self, c: usize) -> usize {
        self.cq.classes[c].as_slice()[0]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ToolStep {
    LowDegreeVertex { vertex: usize },
    GoodStableSet { set: VertexSet },
    VeryGoodStableSet { set: VertexSet },
    PerfectRemainderSet { set: VertexSet },
    TStableSets { t: usize, sets: Vec<VertexSet> },
}

impl ToolStep {
    pub fn tag(&self) -> &'static str {
        match self {
            ToolStep::LowDegreeVertex { .. } => "LOW_DEGREE_VERTEX",
            ToolStep::GoodStableSet { .. } => "GOOD_STABLE_SET",
            ToolStep::VeryGoodStableSet { .. } => "VERY_GOOD_STABLE_SET",
            ToolStep::PerfectRemainderSet { .. } => "PERFECT_REMAINDER_SET",
            ToolStep::TStableSets { .. } => "T_STABLE_SETS",
        }
    }

    /// Vertices the step takes out before recursing.
    pub fn removed(&self) -> VertexSet {
        match self {
            ToolStep::LowDegreeVertex { vertex } => VertexSet::from([*vertex]),
            ToolStep::GoodStableSet { set } | ToolStep::VeryGoodStableSet { set } | ToolStep::PerfectRemainderSet { set } => {
                set.clone()
            }
            ToolStep::TStableSets { sets, .. } => sets.iter().flat_map(VertexSet::iter).collect(),
        }
    }

    fn sets(&self) -> Vec<VertexSet> {
        match self {
            ToolStep::LowDegreeVertex { vertex } => vec![VertexSet::from([*vertex])],
            ToolStep::TStableSets { sets, .. } => sets.clone(),
            other => vec![other.removed()],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{check} failed: {detail}")]
pub struct ToolError {
    pub check: &'static str,
    pub detail: String,
}

fn tool_err(check: &'static str, detail: impl Into<String>) -> ToolError {
    ToolError { check, detail: detail.into() }
}

fn rest_of(g: &Graph, removed: &VertexSet) -> Vec<usize> {
    g.vertices().filter(|&v| !removed.contains(v)).collect()
}

/// Check the invariant a step relies on.
pub fn check_step(g: &Graph, step: &ToolStep) -> Result<(), ToolError> {
    let omega = clique_number(g);
    let stable = |s: &VertexSet| -> Result<(), ToolError> {
        if s.iter().any(|v| v >= g.n()) {
            return Err(tool_err("range", format!("{s} has a vertex outside the graph")));
        }
        match g.first_edge(s.as_slice(), s.as_slice()) {
            Some((u, v)) => Err(tool_err("stable", format!("edge ({u},{v})"))),
            None => Ok(()),
        }
    };
    match step {
        ToolStep::LowDegreeVertex { vertex } => {
            if *vertex >= g.n() {
                return Err(tool_err("range", format!("vertex {vertex}")));
            }
            if g.degree(*vertex) + 1 > bound54(omega) {
                return Err(tool_err("low_degree", format!("degree {} with omega {omega}", g.degree(*vertex))));
            }
        }
        ToolStep::GoodStableSet { set } => {
            stable(set)?;
            let (rest, _) = g.induced_subgraph(&rest_of(g, set)).expect("valid subset");
            if clique_number(&rest) >= omega {
                return Err(tool_err("good", format!("{set} misses a maximum clique")));
            }
        }
        ToolStep::VeryGoodStableSet { set } => {
            stable(set)?;
            if let Some(k) = maximal_cliques(g).into_iter().find(|k| k.is_disjoint(set)) {
                return Err(tool_err("very_good", format!("{set} misses maximal clique {k}")));
            }
        }
        ToolStep::PerfectRemainderSet { set } => {
            stable(set)?;
            let (rest, map) = g.induced_subgraph(&rest_of(g, set)).expect("valid subset");
            if let Some(h) = detect::find_hole(&rest) {
                let hole: Vec<usize> = h.vertices.iter().map(|&i| map[i]).collect();
                return Err(tool_err("perfect_remainder", format!("hole {hole:?} remains")));
            }
        }
        ToolStep::TStableSets { t, sets } => {
            if *t < 5 || sets.len() != *t {
                return Err(tool_err("t_count", format!("t = {t} with {} sets", sets.len())));
            }
            let mut seen = VertexSet::new();
            for s in sets {
                stable(s)?;
                if !s.is_disjoint(&seen) {
                    return Err(tool_err("disjoint", format!("{s} overlaps an earlier set")));
                }
                seen = seen.union(s);
            }
            let (rest, _) = g.induced_subgraph(&rest_of(g, &seen)).expect("valid subset");
            let left = clique_number(&rest);
            if left + t - 1 > omega {
                return Err(tool_err("t_drop", format!("omega goes {omega} -> {left} with t = {t}")));
            }
        }
    }
    Ok(())
}

/// Extend a coloring `sub` of g minus the step's removed vertices (vertex i
/// of `sub` is the i-th remaining vertex in increasing order) to all of g.
pub fn apply_tool(g: &Graph, step: &ToolStep, sub: &Coloring) -> Result<Coloring, ToolError> {
    check_step(g, step)?;
    let removed = step.removed();
    let rest = rest_of(g, &removed);
    if sub.len() != rest.len() {
        return Err(tool_err("sub_size", format!("sub colors {} of {} vertices", sub.len(), rest.len())));
    }
    let (rg, _) = g.induced_subgraph(&rest).expect("valid subset");
    if let Err(e) = oracle::verify_coloring(&rg, sub) {
        return Err(tool_err("sub_proper", e.to_string()));
    }
    let sub = sub.normalized();
    let base = sub.num_colors;
    let mut col = vec![usize::MAX; g.n()];
    for (i, &v) in rest.iter().enumerate() {
        col[v] = sub.color(i);
    }
    match step {
        ToolStep::LowDegreeVertex { vertex } => {
            let used: Vec<usize> = g.neighbors(*vertex).iter().map(|&u| col[u]).collect();
            col[*vertex] = (0..).find(|c| !used.contains(c)).expect("a free color");
        }
        other => {
            for (i, s) in other.sets().iter().enumerate() {
                for v in s.iter() {
                    col[v] = base + i;
                }
            }
        }
    }
    let out = Coloring::new(col).normalized();
    let limit = bound54(clique_number(g));
    if out.num_colors > limit {
        return Err(tool_err("bound", format!("{} colors, bound {limit}", out.num_colors)));
    }
    Ok(out)
}

const TRANSVERSAL_BUDGET: u64 = 200_000;
const STABLE_SET_CAP: usize = 3_000;
const T_SEARCH_BUDGET: u64 = 300_000;
const HOLE_SEARCH_BUDGET: u64 = 400;

/// Stable set of quotient classes meeting every target clique; depth-first
/// over the first unmet target.
fn transversal(q: &Graph, targets: &[&Vec<usize>], budget: &mut u64) -> Option<Vec<usize>> {
    fn go(q: &Graph, targets: &[&Vec<usize>], chosen: &mut Vec<usize>, banned: &mut FixedBitSet, budget: &mut u64) -> bool {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let open = |v: usize, banned: &FixedBitSet, chosen: &[usize]| {
            !banned.contains(v) && chosen.iter().all(|&c| !q.has_edge(c, v))
        };
        let mut next = None;
        for t in targets {
            if t.iter().any(|v| chosen.contains(v)) {
                continue;
            }
            if !t.iter().any(|&v| open(v, banned, chosen)) {
                return false;
            }
            next.get_or_insert(*t);
        }
        let Some(t) = next else { return true };
        // Try the vertices that settle the most open targets first.
        let mut order: Vec<(usize, usize)> = t
            .iter()
            .filter(|&&v| open(v, banned, chosen))
            .map(|&v| {
                let gain = targets.iter().filter(|k| k.contains(&v) && !k.iter().any(|u| chosen.contains(u))).count();
                (v, gain)
            })
            .collect();
        order.sort_by_key(|&(v, gain)| (std::cmp::Reverse(gain), v));
        let mut newly = Vec::new();
        let mut found = false;
        for (v, _) in order {
            if !open(v, banned, chosen) {
                continue;
            }
            chosen.push(v);
            if go(q, targets, chosen, banned, budget) {
                found = true;
                break;
            }
            chosen.pop();
            banned.insert(v);
            newly.push(v);
        }
        for v in newly {
            banned.set(v, false);
        }
        found
    }
    let mut chosen = Vec::new();
    let mut banned = FixedBitSet::with_capacity(q.n());
    go(q, targets, &mut chosen, &mut banned, budget).then(|| {
        chosen.sort_unstable();
        chosen
    })
}

/// A stable set meeting every maximal clique.
pub fn find_very_good_stable_set(g: &Graph) -> Option<VertexSet> {
    if g.n() == 0 {
        return None;
    }
    let q = Quotient::new(g);
    very_good_in(&q)
}

fn very_good_in(q: &Quotient) -> Option<VertexSet> {
    let targets: Vec<&Vec<usize>> = q.cliques.iter().collect();
    let s = transversal(&q.cq.quotient, &targets, &mut TRANSVERSAL_BUDGET.clone())?;
    Some(s.iter().map(|&c| q.rep(c)).collect())
}

/// A stable set meeting every maximum clique.
pub fn find_good_stable_set(g: &Graph) -> Option<VertexSet> {
    if g.n() == 0 {
        return None;
    }
    good_in(&Quotient::new(g))
}

fn good_in(q: &Quotient) -> Option<VertexSet> {
    let targets: Vec<&Vec<usize>> = q.cliques.iter().filter(|k| q.weight(k) == q.omega).collect();
    let s = transversal(&q.cq.quotient, &targets, &mut TRANSVERSAL_BUDGET.clone())?;
    Some(s.iter().map(|&c| q.rep(c)).collect())
}

/// A stable set whose removal leaves a chordal graph, searched by branching
/// on the vertices of a remaining hole.
pub fn find_perfect_remainder_set(g: &Graph) -> Option<VertexSet> {
    fn go(g: &Graph, chosen: &mut Vec<usize>, banned: &mut FixedBitSet, budget: &mut u64) -> bool {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let rest: Vec<usize> = g.vertices().filter(|v| !chosen.contains(v)).collect();
        let (sub, map) = g.induced_subgraph(&rest).expect("valid subset");
        let Some(h) = detect::find_hole(&sub) else { return true };
        let hole: Vec<usize> = h.vertices.iter().map(|&i| map[i]).collect();
        let mut newly = Vec::new();
        let mut found = false;
        for v in hole {
            if banned.contains(v) || chosen.iter().any(|&c| g.has_edge(c, v)) {
                continue;
            }
            chosen.push(v);
            if go(g, chosen, banned, budget) {
                found = true;
                break;
            }
            chosen.pop();
            banned.insert(v);
            newly.push(v);
        }
        for v in newly {
            banned.set(v, false);
        }
        found
    }
    let mut chosen = Vec::new();
    let mut banned = FixedBitSet::with_capacity(g.n());
    go(g, &mut chosen, &mut banned, &mut HOLE_SEARCH_BUDGET.clone()).then(|| chosen.into_iter().collect())
}

/// Maximal stable sets of the quotient, or None past the cap.
fn maximal_stable_sets(q: &Graph) -> Option<Vec<Vec<usize>>> {
    if q.n() > 40 {
        return None;
    }
    let sets = maximal_cliques(&q.complement());
    (sets.len() <= STABLE_SET_CAP).then(|| sets.into_iter().map(VertexSet::into_vec).collect())
}

/// t stable sets of classes (each class used at most its size many times)
/// whose removal lowers omega by at least t-1.
fn t_sets_in(q: &Quotient, stables: &[Vec<usize>], t: usize) -> Option<Vec<Vec<usize>>> {
    struct S<'a> {
        q: &'a Quotient,
        stables: &'a [Vec<usize>],
        t: usize,
        used: Vec<usize>,
        picked: Vec<usize>,
        budget: u64,
    }
    impl S<'_> {
        fn need(&self, k: &[usize]) -> isize {
            let left: usize = k.iter().map(|&c| self.q.w[c] - self.used[c].min(self.q.w[c])).sum();
            left as isize - (self.q.omega as isize - self.t as isize + 1)
        }
        fn hits(&self, s: &[usize], k: &[usize]) -> bool {
            s.iter().any(|&c| self.used[c] < self.q.w[c] && k.contains(&c))
        }
        fn go(&mut self, from: usize) -> bool {
            if self.budget == 0 {
                return false;
            }
            self.budget -= 1;
            let rem = (self.t - self.picked.len()) as isize;
            let mut tight = Vec::new();
            let mut done = true;
            for k in &self.q.cliques {
                let n = self.need(k);
                if n > rem {
                    return false;
                }
                if n > 0 {
                    done = false;
                }
                if n == rem {
                    tight.push(k);
                }
            }
            if done {
                return true;
            }
            for i in from..self.stables.len() {
                let s = &self.stables[i];
                if !tight.iter().all(|k| self.hits(s, k)) {
                    continue;
                }
                for &c in s {
                    self.used[c] += 1;
                }
                self.picked.push(i);
                if self.go(i) {
                    return true;
                }
                self.picked.pop();
                for &c in s {
                    self.used[c] -= 1;
                }
            }
            false
        }
    }
    let mut s = S { q, stables, t, used: vec![0; q.w.len()], picked: Vec::new(), budget: T_SEARCH_BUDGET };
    s.go(0).then(|| s.picked.iter().map(|&i| stables[i].clone()).collect())
}

/// Lift class-level stable sets to disjoint vertex sets, taking the next
/// unused vertex of a class each time and skipping exhausted classes.
fn lift_sets(q: &Quotient, sets: &[Vec<usize>], t: usize) -> Vec<VertexSet> {
    let mut used = vec![0; q.w.len()];
    let mut out: Vec<VertexSet> = sets
        .iter()
        .map(|s| {
            s.iter()
                .filter_map(|&c| {
                    let v = q.cq.classes[c].as_slice().get(used[c]).copied();
                    used[c] += 1;
                    v
                })
                .collect()
        })
        .collect();
    out.resize(t, VertexSet::new());
    out
}

/// Up to t in 5..=7 stable sets whose removal drops omega by t-1.
pub fn find_t_stable_sets(g: &Graph) -> Option<(usize, Vec<VertexSet>)> {
    if g.n() == 0 {
        return None;
    }
    t_sets(&Quotient::new(g))
}

fn t_sets(q: &Quotient) -> Option<(usize, Vec<VertexSet>)> {
    let stables = maximal_stable_sets(&q.cq.quotient)?;
    (5..=7).find_map(|t| t_sets_in(q, &stables, t).map(|s| (t, lift_sets(q, &s, t))))
}

/// Stable-set families over the labels of a base graph; a primed label is
/// the second vertex of that bag.
struct Template {
    base: &'static str,
    name: &'static str,
    sets: &'static [&'static [&'static str]],
}

const TEMPLATES: &[Template] = &[
    Template {
        base: "H1",
        name: "petersen_double_cover",
        sets: &[
            &["a", "b", "w3", "w6"],
            &["b'", "c", "w1", "w4"],
            &["a'", "c'", "w2", "w5"],
            &["z", "w1'", "w3'", "w5'"],
            &["z'", "w2'", "w4'", "w6'"],
        ],
    },
    Template {
        base: "F3",
        name: "f3_double_cover",
        sets: &[
            &["x", "v4", "v6"],
            &["y", "v2", "v6'"],
            &["z", "v2'", "v4'"],
            &["x'", "v5"],
            &["y'", "v1"],
            &["z'", "v3"],
            &["v1'", "v3'", "v5'"],
        ],
    },
    Template {
        base: "F3",
        name: "f3_special",
        sets: &[&["v1", "v3", "v5"], &["v2", "y"], &["v2'", "z"], &["v1'", "y'"], &["v3'", "z'"], &["x", "v4", "v6"]],
    },
    Template {
        base: "C5",
        name: "c5_double_cover",
        sets: &[&["v1", "v3"], &["v2", "v4"], &["v3'", "v5"], &["v4'", "v1'"], &["v5'", "v2'"]],
    },
    Template {
        base: "H5",
        name: "h5_hole_cover",
        sets: &[&["v1", "v3'"], &["v2", "v4'"], &["v3", "v5'"], &["v4", "v1'"], &["v5", "v2'"]],
    },
    Template {
        base: "H2",
        name: "h2_big_c",
        sets: &[&["v1", "v3", "v5"], &["v2", "v4", "v6"], &["c", "v1'", "v5'"], &["c'", "v2'", "v4'"], &["v3'", "v6'"]],
    },
    Template {
        base: "H2",
        name: "h2_six",
        sets: &[
            &["v1", "v3", "v5"],
            &["v2", "v4", "v6"],
            &["v3'", "v6'"],
            &["a", "v5'"],
            &["b", "v2'"],
            &["c", "v1'", "v4'"],
        ],
    },
    Template {
        base: "H2",
        name: "h2_no_a",
        sets: &[&["v1", "v3", "v5"], &["v2", "v4", "v6"], &["v2'", "v4'"], &["v3'", "v6'"], &["c", "v1'", "v5'"]],
    },
];

/// All automorphisms of a small graph, identity first.
fn automorphisms(h: &Graph) -> Vec<Vec<usize>> {
    fn go(h: &Graph, img: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let v = img.len();
        if v == h.n() {
            out.push(img.clone());
            return;
        }
        for c in h.vertices() {
            if used[c] || h.degree(c) != h.degree(v) {
                continue;
            }
            if (0..v).any(|u| h.has_edge(u, v) != h.has_edge(img[u], c)) {
                continue;
            }
            img.push(c);
            used[c] = true;
            go(h, img, used, out);
            used[c] = false;
            img.pop();
        }
    }
    let mut out = Vec::new();
    go(h, &mut Vec::new(), &mut vec![false; h.n()], &mut out);
    out
}

/// First template of the map's base that passes the t-set check under some
/// automorphism of the base.
fn template_step(g: &Graph, map: &BlowupMap, omega: usize) -> Option<(&'static str, ToolStep)> {
    let key = match &map.base {
        BaseGraph::H1 => "H1",
        BaseGraph::F3 => "F3",
        BaseGraph::C5 => "C5",
        BaseGraph::H5 => "H5",
        BaseGraph::H2 => "H2",
        _ => return None,
    };
    let h = map.base.graph();
    let autos = automorphisms(&h);
    for tpl in TEMPLATES.iter().filter(|t| t.base == key) {
        let t = tpl.sets.len();
        for sigma in &autos {
            let sets: Vec<VertexSet> = tpl
                .sets
                .iter()
                .map(|s| {
                    s.iter()
                        .filter_map(|lab| {
                            let copy = usize::from(lab.ends_with('\''));
                            let v = h.vertex(lab.trim_end_matches('\'')).expect("template label");
                            map.bags[sigma[v]].as_slice().get(copy).copied()
                        })
                        .collect()
                })
                .collect();
            if sets.iter().all(VertexSet::is_empty) {
                continue;
            }
            let removed: VertexSet = sets.iter().flat_map(VertexSet::iter).collect();
            let (rest, _) = g.induced_subgraph(&rest_of(g, &removed)).expect("valid subset");
            if clique_number(&rest) + t - 1 <= omega {
                return Some((tpl.name, ToolStep::TStableSets { t, sets }));
            }
        }
    }
    None
}

/// One record per recursion step, in original vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub depth: usize,
    pub rule: String,
    pub detail: String,
    pub n: usize,
    pub omega: usize,
    pub sets: Vec<VertexSet>,
    pub new_colors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorResult {
    pub coloring: Coloring,
    pub report: BoundReport,
    pub trace: Vec<TraceStep>,
    /// Subproblems colored by the exact oracle because no step applied.
    pub fallbacks: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColorError {
    #[error("not (P6,C4)-free: {0}")]
    NotMember(Witness),
    #[error("no step applies to a subproblem on {n} vertices and it is over the oracle cap")]
    Stuck { n: usize },
    #[error("certificate rejected: {0}")]
    BadCertificate(String),
    #[error("internal: {0}")]
    Internal(String),
}

/// The recursive engine. Holds the trace and the fallback counter.
pub struct Engine {
    caps: OracleCaps,
    trace: Vec<TraceStep>,
    fallbacks: usize,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(OracleCaps::from_env())
    }
}

fn greedy_in_order(g: &Graph, order: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut col = vec![usize::MAX; g.n()];
    for v in order {
        let used: Vec<usize> = g.neighbors(v).iter().map(|&u| col[u]).collect();
        col[v] = (0..).find(|c| !used.contains(c)).expect("a free color");
    }
    col
}

fn count(col: &[usize]) -> usize {
    col.iter().map(|&c| c + 1).max().unwrap_or(0)
}

impl Engine {
    pub fn new(caps: OracleCaps) -> Self {
        Engine { caps, trace: Vec::new(), fallbacks: 0 }
    }

    #[allow(clippy::too_many_arguments)]
    fn log(&mut self, depth: usize, rule: &str, detail: String, g: &Graph, ids: &[usize], sets: Vec<VertexSet>, new_colors: usize) {
        let sets = sets.into_iter().map(|s| s.map(|v| ids[v])).collect();
        self.trace.push(TraceStep {
            depth,
            rule: rule.to_string(),
            detail,
            n: g.n(),
            omega: clique_number(g),
            sets,
            new_colors,
        });
    }

    fn sub(&mut self, g: &Graph, ids: &[usize], keep: &[usize], depth: usize) -> Result<Vec<usize>, ColorError> {
        let (h, map) = g.induced_subgraph(keep).expect("valid subset");
        let hid: Vec<usize> = map.iter().map(|&i| ids[i]).collect();
        let hc = self.run(&h, &hid, depth + 1)?;
        let mut col = vec![usize::MAX; g.n()];
        for (i, &v) in map.iter().enumerate() {
            col[v] = hc[i];
        }
        Ok(col)
    }

    /// Color g; `ids` maps local vertices to the caller's ids for the trace.
    fn run(&mut self, g: &Graph, ids: &[usize], depth: usize) -> Result<Vec<usize>, ColorError> {
        if g.n() == 0 {
            return Ok(Vec::new());
        }
        let comps = g.components();
        if comps.len() > 1 {
            let mut col = vec![usize::MAX; g.n()];
            for c in &comps {
                let part = self.sub(g, ids, c.as_slice(), depth)?;
                for v in c.iter() {
                    col[v] = part[v];
                }
            }
            self.log(depth, "components", format!("{} components", comps.len()), g, ids, comps, 0);
            return Ok(col);
        }
        if let Ok(peo) = detect::chordality(g) {
            let col = greedy_in_order(g, peo.order.iter().rev().copied());
            self.log(depth, "chordal", String::new(), g, ids, vec![], count(&col));
            return Ok(col);
        }
        let univ = detect::universal_vertices(g);
        if !univ.is_empty() {
            return self.peel_universal(g, ids, &univ, depth);
        }
        if let Ok(Some(cut)) = detect::find_clique_cutset(g) {
            return self.split(g, ids, &cut.clique, &cut.side_a, &cut.side_b, depth);
        }
        match classify(g) {
            Ok(cert) => {
                self.log(depth, "classify", format!("{} via {}", cert.kind.tag(), cert.provenance.branch), g, ids, vec![], 0);
                self.special(g, ids, &cert, depth)
            }
            Err(ClassifyError::NotMember(w)) => Err(ColorError::NotMember(w)),
            Err(e) => {
                self.log(depth, "unclassified", e.to_string(), g, ids, vec![], 0);
                self.tools(g, ids, None, depth)
            }
        }
    }

    fn peel_universal(&mut self, g: &Graph, ids: &[usize], univ: &VertexSet, depth: usize) -> Result<Vec<usize>, ColorError> {
        let rest = rest_of(g, univ);
        let mut col = self.sub(g, ids, &rest, depth)?;
        let base = rest.iter().map(|&v| col[v] + 1).max().unwrap_or(0);
        for (i, v) in univ.iter().enumerate() {
            col[v] = base + i;
        }
        self.log(depth, "universal", String::new(), g, ids, vec![univ.clone()], univ.len());
        Ok(col)
    }

    /// Color both sides of a clique cutset and permute the second side's
    /// colors to agree with the first on the cutset.
    fn split(
        &mut self,
        g: &Graph,
        ids: &[usize],
        k: &VertexSet,
        a: &VertexSet,
        b: &VertexSet,
        depth: usize,
    ) -> Result<Vec<usize>, ColorError> {
        let ka = k.union(a);
        let kb = k.union(b);
        let ca = self.sub(g, ids, ka.as_slice(), depth)?;
        let cb = self.sub(g, ids, kb.as_slice(), depth)?;
        let na = count(&ka.iter().map(|v| ca[v]).collect::<Vec<_>>());
        let nb = count(&kb.iter().map(|v| cb[v]).collect::<Vec<_>>());
        let mut perm = vec![usize::MAX; nb];
        for v in k.iter() {
            perm[cb[v]] = ca[v];
        }
        let taken: Vec<usize> = perm.iter().copied().filter(|&c| c != usize::MAX).collect();
        let mut free = (0..).filter(|c| !taken.contains(c));
        for p in perm.iter_mut().filter(|p| **p == usize::MAX) {
            *p = free.next().expect("unbounded");
        }
        let mut col = vec![usize::MAX; g.n()];
        for v in ka.iter() {
            col[v] = ca[v];
        }
        for v in b.iter() {
            col[v] = perm[cb[v]];
        }
        self.log(depth, "clique_cutset", String::new(), g, ids, vec![k.clone(), a.clone(), b.clone()], 0);
        debug_assert!(count(&col) <= na.max(nb));
        Ok(col)
    }

    /// Color g from a validated certificate.
    fn special(&mut self, g: &Graph, ids: &[usize], cert: &StructureCertificate, depth: usize) -> Result<Vec<usize>, ColorError> {
        match &cert.kind {
            CertKind::ChordalLeaf { order } => Ok(greedy_in_order(g, order.iter().rev().copied())),
            CertKind::UniversalVertex { .. } => self.peel_universal(g, ids, &detect::universal_vertices(g), depth),
            CertKind::CliqueCutset { cutset, side_a, side_b } => self.split(g, ids, cutset, side_a, side_b, depth),
            CertKind::Blowup(map) => self.tools(g, ids, Some(map), depth),
            CertKind::Band(_) | CertKind::Belt(_) | CertKind::Boiler(_) => self.tools(g, ids, None, depth),
        }
    }

    fn take(&mut self, g: &Graph, ids: &[usize], step: ToolStep, why: &str, depth: usize) -> Result<Vec<usize>, ColorError> {
        let removed = step.removed();
        let rest = rest_of(g, &removed);
        let sub = self.sub(g, ids, &rest, depth)?;
        let sub = Coloring::new(rest.iter().map(|&v| sub[v]).collect());
        let before = sub.num_colors;
        let out = apply_tool(g, &step, &sub).map_err(|e| ColorError::Internal(format!("{}: {e}", step.tag())))?;
        self.log(depth, step.tag(), why.to_string(), g, ids, step.sets(), out.num_colors.saturating_sub(before));
        Ok(out.assignment)
    }

    /// Tool steps in a fixed order, then the flagged oracle fallback.
    fn tools(&mut self, g: &Graph, ids: &[usize], map: Option<&BlowupMap>, depth: usize) -> Result<Vec<usize>, ColorError> {
        let q = Quotient::new(g);
        let omega = q.omega;
        if let Some((name, step)) = map.and_then(|m| template_step(g, m, omega)) {
            return self.take(g, ids, step, name, depth);
        }
        if let Some(set) = very_good_in(&q) {
            return self.take(g, ids, ToolStep::VeryGoodStableSet { set }, "", depth);
        }
        if let Some(set) = good_in(&q) {
            return self.take(g, ids, ToolStep::GoodStableSet { set }, "", depth);
        }
        if let Some(v) = g.vertices().find(|&v| g.degree(v) < bound54(omega)) {
            return self.take(g, ids, ToolStep::LowDegreeVertex { vertex: v }, "", depth);
        }
        if let Some(set) = find_perfect_remainder_set(g) {
            return self.take(g, ids, ToolStep::PerfectRemainderSet { set }, "", depth);
        }
        if let Some((t, sets)) = t_sets(&q) {
            return self.take(g, ids, ToolStep::TStableSets { t, sets }, "search", depth);
        }
        if g.n() > self.caps.chi {
            return Err(ColorError::Stuck { n: g.n() });
        }
        let res = oracle::exact_chromatic(g);
        let OracleWitness::Coloring(c) = res.witness else { unreachable!("chromatic oracle returns a coloring") };
        if c.num_colors > bound54(omega) {
            return Err(ColorError::Internal(format!("oracle needs {} colors, above the bound", c.num_colors)));
        }
        self.fallbacks += 1;
        self.log(depth, "ORACLE_FALLBACK", String::new(), g, ids, vec![], c.num_colors);
        Ok(c.assignment)
    }

    fn finish(&mut self, g: &Graph, col: Vec<usize>) -> Result<ColorResult, ColorError> {
        let coloring = Coloring::new(col).normalized();
        oracle::verify_coloring(g, &coloring).map_err(|e| ColorError::Internal(e.to_string()))?;
        let mut report = bounds_with(g, false, self.caps);
        report.chi_alg = Some(coloring.num_colors);
        if coloring.num_colors > report.bound54 {
            return Err(ColorError::Internal(format!("{} colors exceed {}", coloring.num_colors, report.bound54)));
        }
        Ok(ColorResult { coloring, report, trace: std::mem::take(&mut self.trace), fallbacks: std::mem::take(&mut self.fallbacks) })
    }

    pub fn color(&mut self, g: &Graph) -> Result<ColorResult, ColorError> {
        detect::is_p6c4_free(g).map_err(ColorError::NotMember)?;
        let ids: Vec<usize> = g.vertices().collect();
        let col = self.run(g, &ids, 0)?;
        self.finish(g, col)
    }

    pub fn color_special(&mut self, g: &Graph, cert: &StructureCertificate) -> Result<ColorResult, ColorError> {
        validate_certificate(g, cert).map_err(|v| ColorError::BadCertificate(v.to_string()))?;
        let ids: Vec<usize> = g.vertices().collect();
        let col = self.special(g, &ids, cert, 0)?;
        self.finish(g, col)
    }
}

/// Color a (P6,C4)-free graph within `ceil(5 * omega / 4)` colors.
pub fn color(g: &Graph) -> Result<ColorResult, ColorError> {
    Engine::default().color(g)
}

/// Color g using a certificate for it.
pub fn color_special(g: &Graph, cert: &StructureCertificate) -> Result<ColorResult, ColorError> {
    Engine::default().color_special(g, cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn k4_pendant() -> Graph {
        Graph::new(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn bound_arithmetic() {
        assert_eq!((bound54(2), bound54(4), bound54(6), bound54(3)), (3, 5, 8, 4));
        assert_eq!(reed_bound(5, 4), 5);
        assert_eq!(reed_bound(3, 4), 4);
    }

    #[test]
    fn stable_set_searches() {
        assert_eq!(find_very_good_stable_set(&named::p3()), Some(VertexSet::from([1])));
        let c4 = named::cycle(4);
        let s = find_very_good_stable_set(&c4).unwrap();
        assert_eq!(s.len(), 2);
        assert!(c4.is_stable(s.as_slice()));
        assert!(find_very_good_stable_set(&named::c5()).is_none());
        assert!(find_good_stable_set(&named::c5()).is_none());
        let s = find_good_stable_set(&k4_pendant()).unwrap();
        assert!(s.iter().any(|v| v < 4));
    }

    #[test]
    fn tool_examples() {
        let c5 = named::c5();
        let sub = Coloring::new(vec![0, 1, 0, 1]);
        let out = apply_tool(&c5, &ToolStep::LowDegreeVertex { vertex: 0 }, &sub).unwrap();
        assert_eq!(out.num_colors, 3);
        let g = k4_pendant();
        let step = ToolStep::GoodStableSet { set: VertexSet::from([0]) };
        let out = apply_tool(&g, &step, &Coloring::new(vec![0, 1, 2, 0])).unwrap();
        assert_eq!(out.num_colors, 4);
        let bad = ToolStep::GoodStableSet { set: VertexSet::from([4]) };
        assert_eq!(check_step(&g, &bad).unwrap_err().check, "good");
        let bad = ToolStep::VeryGoodStableSet { set: VertexSet::from([0, 1]) };
        assert_eq!(check_step(&g, &bad).unwrap_err().check, "stable");
    }

    #[test]
    fn small_colorings() {
        let r = color(&named::c5()).unwrap();
        assert_eq!((r.coloring.num_colors, r.report.bound54), (3, 3));
        let split = Graph::new(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(color(&split).unwrap().coloring.num_colors, 3);
        assert!(matches!(color(&named::cycle(4)), Err(ColorError::NotMember(_))));
        let r = color(&named::petersen()).unwrap();
        assert_eq!(r.coloring.num_colors, 3);
        assert_eq!(r.fallbacks, 0);
    }

    #[test]
    fn bounds_examples() {
        let b = bounds(&named::complete(4), true);
        assert_eq!((b.omega, b.bound54, b.reed, b.chi_exact), (4, 5, 4, Some(4)));
        let b = bounds(&named::petersen(), true);
        assert_eq!((b.omega, b.delta, b.bound54, b.reed, b.chi_exact), (2, 3, 3, 3, Some(3)));
    }

    #[test]
    fn maximal_clique_listing() {
        assert_eq!(maximal_cliques(&named::c5()).len(), 5);
        assert_eq!(maximal_cliques(&named::complete(4)), vec![VertexSet::from([0, 1, 2, 3])]);
        assert_eq!(maximal_cliques(&Graph::empty(2)).len(), 2);
    }
}
