//! Instances of every special class, plus random (P6,C4)-free graphs.
//!
//! Every generator is a pure function of its parameters and seed. Outputs
//! are checked with the detectors (and the class validator where there is
//! one) before they are returned; the random constructions resample on
//! failure within a fixed retry budget.

use crate::detect;
use crate::graph::{Graph, VertexSet};
use crate::named;
use crate::structure::{
    assemble_boiler, validate_band, validate_belt, validate_blowup, validate_boiler, BandParts, BaseGraph, BeltParts,
    BlowupMap, BoilerParts, CertKind, Provenance, StructureCertificate, Violation,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub const RETRY_BUDGET: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("bad parameters: {0}")]
    Params(String),
    #[error("retry budget exhausted; last failure: {0}")]
    Exhausted(String),
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Edge accumulator over vertices handed out part by part.
#[derive(Default)]
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn part(&mut self, size: usize) -> VertexSet {
        let s = (self.n..self.n + size).collect();
        self.n += size;
        s
    }

    fn clique(&mut self, s: &VertexSet) {
        for (i, u) in s.iter().enumerate() {
            for v in s.as_slice()[i + 1..].iter() {
                self.edges.push((u, *v));
            }
        }
    }

    fn complete(&mut self, a: &VertexSet, b: &VertexSet) {
        for u in a.iter() {
            for v in b.iter() {
                self.edges.push((u, v));
            }
        }
    }

    /// Nested neighborhoods: each vertex of `a` sees a prefix of a shuffled
    /// `b`, of length at least `lo`. When `cover` holds, some vertex of `a`
    /// sees all of `b`.
    fn graded(&mut self, r: &mut ChaCha8Rng, a: &VertexSet, b: &VertexSet, lo: usize, cover: bool) {
        if a.is_empty() || b.is_empty() {
            return;
        }
        let mut order = b.clone().into_vec();
        order.shuffle(r);
        let lo = lo.min(b.len());
        let full = r.gen_range(0..a.len());
        for (i, u) in a.iter().enumerate() {
            let p = if cover && i == full { b.len() } else { r.gen_range(lo..=b.len()) };
            for &v in &order[..p] {
                self.edges.push((u, v));
            }
        }
    }

    fn graph(&self) -> Graph {
        Graph::new(self.n, &self.edges).expect("builder edges are in range")
    }
}

/// Replace every base vertex by a clique of the given size; bags are laid
/// out in base-vertex order.
pub fn gen_blowup(base: &BaseGraph, sizes: &[usize]) -> Result<(Graph, BlowupMap), GenError> {
    let h = base.graph();
    if sizes.len() != h.n() {
        return Err(GenError::Params(format!("{} sizes for a base on {} vertices", sizes.len(), h.n())));
    }
    let mut b = Builder::default();
    let bags: Vec<VertexSet> = sizes.iter().map(|&s| b.part(s)).collect();
    for (u, bag) in bags.iter().enumerate() {
        b.clique(bag);
        for (v, other) in bags.iter().enumerate().skip(u + 1) {
            if h.has_edge(u, v) {
                b.complete(bag, other);
            }
        }
    }
    let map = BlowupMap { base: base.clone(), bags };
    Ok((b.graph(), map))
}

/// F_{k,l} with unit bags, or its blowup with the given sizes.
pub fn gen_fkl(k: usize, l: usize, sizes: Option<&[usize]>) -> Result<(Graph, BlowupMap), GenError> {
    let n = named::FklIndex { k, l }.n();
    let ones = vec![1; n];
    gen_blowup(&BaseGraph::Fkl { k, l }, sizes.unwrap_or(&ones))
}

/// The C5 blowup with all bags of size q: omega = 2q, max degree 3q - 1, and
/// chromatic number ceil(5q/2).
pub fn tight(q: usize) -> (Graph, BlowupMap) {
    gen_blowup(&BaseGraph::C5, &[q; 5]).expect("five sizes")
}

fn sizes_in(r: &mut ChaCha8Rng, n: usize, lo: usize, hi: usize) -> Vec<usize> {
    (0..n).map(|_| r.gen_range(lo..=hi)).collect()
}

/// A random band with Q1..Q5 non-empty and parts of size at most `max_part`.
pub fn gen_band(seed: u64, max_part: usize) -> Result<(Graph, BandParts), GenError> {
    if max_part == 0 {
        return Err(GenError::Params("max_part must be positive".into()));
    }
    let mut r = rng(seed);
    let mut last = String::new();
    for _ in 0..RETRY_BUDGET {
        let s = sizes_in(&mut r, 5, 1, max_part);
        let (r2n, r3n) = (r.gen_range(0..=max_part), r.gen_range(0..=max_part));
        let mut b = Builder::default();
        let q: Vec<VertexSet> = s.iter().map(|&k| b.part(k)).collect();
        let (r2, r3) = (b.part(r2n), b.part(r3n));
        for c in q.iter().chain([&r2, &r3]) {
            b.clique(c);
        }
        b.complete(&q[4], &q[0].union(&q[3]));
        b.complete(&r2, &q[0].union(&q[1]).union(&q[2]));
        b.complete(&r3, &q[1].union(&q[2]).union(&q[3]));
        b.complete(&q[1], &q[2]);
        b.graded(&mut r, &q[0], &q[1], 0, false);
        b.graded(&mut r, &q[3], &q[2], 0, false);
        b.graded(&mut r, &r2, &r3, 0, false);
        let g = b.graph();
        let parts = BandParts {
            q1: q[0].clone(),
            q2: q[1].clone(),
            q3: q[2].clone(),
            q4: q[3].clone(),
            q5: q[4].clone(),
            r2,
            r3,
        };
        match checked(&g, validate_band(&g, &parts)) {
            Ok(()) => return Ok((g, parts)),
            Err(e) => last = e,
        }
    }
    Err(GenError::Exhausted(last))
}

fn checked(g: &Graph, v: Result<(), Violation>) -> Result<(), String> {
    v.map_err(|v| v.to_string())?;
    if !g.is_connected() {
        return Err("disconnected".into());
    }
    detect::is_p6c4_free(g).map_err(|w| format!("not (P6,C4)-free: {w}"))
}

/// Disjoint cliques (two or three of them) so that no vertex is universal.
fn cluster(r: &mut ChaCha8Rng, b: &mut Builder, max_part: usize) -> Vec<VertexSet> {
    let parts = r.gen_range(2..=3);
    (0..parts)
        .map(|_| {
            let c = b.part(r.gen_range(1..=max_part.clamp(1, 2)));
            b.clique(&c);
            c
        })
        .collect()
}

/// A random belt. Each clique of R_j gets its own private, non-empty slice
/// of Q_{5-j}, which is what keeps the R_j side C4-free.
pub fn gen_belt(seed: u64, max_part: usize) -> Result<(Graph, BeltParts), GenError> {
    if max_part == 0 {
        return Err(GenError::Params("max_part must be positive".into()));
    }
    let mut r = rng(seed);
    let mut last = String::new();
    for _ in 0..RETRY_BUDGET {
        let mut b = Builder::default();
        let q1 = b.part(r.gen_range(1..=max_part));
        let q4 = b.part(r.gen_range(1..=max_part));
        let q5 = b.part(r.gen_range(1..=max_part));
        let r2c = if r.gen_bool(0.7) { cluster(&mut r, &mut b, max_part) } else { vec![] };
        let r3c = if r.gen_bool(0.7) { cluster(&mut r, &mut b, max_part) } else { vec![] };
        // Private slices of Q3 for R2's cliques and of Q2 for R3's, plus extras.
        let p3: Vec<VertexSet> = r2c.iter().map(|_| b.part(r.gen_range(1..=max_part))).collect();
        let p2: Vec<VertexSet> = r3c.iter().map(|_| b.part(r.gen_range(1..=max_part))).collect();
        let e3 = b.part(r.gen_range(usize::from(p3.is_empty())..=max_part));
        let e2 = b.part(r.gen_range(usize::from(p2.is_empty())..=max_part));
        let flat = |v: &[VertexSet]| -> VertexSet { v.iter().flat_map(VertexSet::iter).collect() };
        let (r2, r3) = (flat(&r2c), flat(&r3c));
        let (pp3, pp2) = (flat(&p3), flat(&p2));
        let q3 = pp3.union(&e3);
        let q2 = pp2.union(&e2);
        for c in [&q1, &q2, &q3, &q4, &q5] {
            b.clique(c);
        }
        b.complete(&q1, &q2.union(&r2).union(&q5));
        b.complete(&q4, &q3.union(&r3).union(&q5));
        b.complete(&q2, &r2);
        b.complete(&q3, &r3);
        for (c, p) in r2c.iter().zip(&p3) {
            b.graded(&mut r, c, p, 1, true);
        }
        for (c, p) in r3c.iter().zip(&p2) {
            b.graded(&mut r, c, p, 1, true);
        }
        // Q-vertices touching the far R side are complete to the far Q.
        b.complete(&pp3, &q2);
        b.complete(&pp2, &q3);
        b.graded(&mut r, &e2, &e3, 1, true);
        let g = b.graph();
        let parts = BeltParts { q1, q2, q3, q4, q5, r2, r3 };
        match checked(&g, validate_belt(&g, &parts)) {
            Ok(()) => return Ok((g, parts)),
            Err(e) => last = e,
        }
    }
    Err(GenError::Exhausted(last))
}

/// A random boiler with k blocks. When L is not a clique it is built as a
/// set U of universal vertices over two anticomplete cliques whose
/// A-neighborhoods are disjoint; those A-vertices see all blocks but the
/// last, U sees exactly them, and every other A-vertex shares one prefix.
pub fn gen_boiler(seed: u64, k: usize, max_part: usize) -> Result<(Graph, BoilerParts), GenError> {
    if k < 3 {
        return Err(GenError::Params(format!("boilers need k >= 3, got {k}")));
    }
    if max_part == 0 {
        return Err(GenError::Params("max_part must be positive".into()));
    }
    let mut r = rng(seed);
    let mut last = String::new();
    let small = max_part.clamp(1, 2);
    for _ in 0..RETRY_BUDGET {
        let mut b = Builder::default();
        let q = b.part(r.gen_range(1..=max_part));
        let m_blocks: Vec<VertexSet> = (0..k).map(|_| b.part(r.gen_range(1..=small))).collect();
        let b_blocks: Vec<VertexSet> = (0..k).map(|_| b.part(r.gen_range(1..=small))).collect();
        let shape = r.gen_range(0..3);
        let (a_l, a0, l_parts): (Vec<VertexSet>, VertexSet, Vec<VertexSet>) = match shape {
            0 => (vec![], b.part(r.gen_range(1..=max_part)), vec![]),
            1 => {
                let l = b.part(r.gen_range(1..=max_part));
                (vec![], b.part(r.gen_range(1..=max_part)), vec![l])
            }
            _ => {
                let a1 = b.part(r.gen_range(1..=small));
                let a2 = b.part(r.gen_range(1..=small));
                let a0 = b.part(r.gen_range(0..=small));
                let c1 = b.part(r.gen_range(1..=small));
                let c2 = b.part(r.gen_range(1..=small));
                let u = b.part(r.gen_range(0..=1));
                (vec![a1, a2], a0, vec![c1, c2, u])
            }
        };
        let flat = |v: &[VertexSet]| -> VertexSet { v.iter().flat_map(VertexSet::iter).collect() };
        let (m, bb) = (flat(&m_blocks), flat(&b_blocks));
        let a = flat(&a_l).union(&a0);
        let l = flat(&l_parts);
        for s in [&q, &a, &bb] {
            b.clique(s);
        }
        for s in &m_blocks {
            b.clique(s);
        }
        b.complete(&q, &a.union(&m));
        b.complete(&bb, &l);
        for (mi, bi) in m_blocks.iter().zip(&b_blocks) {
            b.graded(&mut r, mi, bi, 1, true);
        }
        let block = |i: usize| m_blocks[i].union(&b_blocks[i]);
        let upto = |b: &mut Builder, s: &VertexSet, p: usize| {
            for i in 0..p {
                b.complete(s, &block(i));
            }
        };
        match shape {
            0 | 1 => {
                for v in a.iter() {
                    upto(&mut b, &VertexSet::from([v]), r.gen_range(2..k));
                }
                if let Some(l) = l_parts.first() {
                    b.clique(l);
                    b.graded(&mut r, l, &a, 1, false);
                }
            }
            _ => {
                let (a1, a2) = (&a_l[0], &a_l[1]);
                let (c1, c2, u) = (&l_parts[0], &l_parts[1], &l_parts[2]);
                upto(&mut b, &a1.union(a2), k - 1);
                upto(&mut b, &a0, r.gen_range(2..k));
                for s in [c1, c2, u] {
                    b.clique(s);
                }
                b.complete(u, &c1.union(c2));
                b.graded(&mut r, c1, a1, 1, true);
                b.graded(&mut r, c2, a2, 1, true);
                b.complete(u, &a1.union(a2));
            }
        }
        let g = b.graph();
        let parts = match assemble_boiler(&g, q, a, bb, l, m) {
            Ok(p) => p,
            Err(v) => {
                last = v.to_string();
                continue;
            }
        };
        match checked(&g, validate_boiler(&g, &parts)) {
            Ok(()) => return Ok((g, parts)),
            Err(e) => last = e,
        }
    }
    Err(GenError::Exhausted(last))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SampleStrategy {
    /// A blowup of a random special graph, sometimes topped with universal
    /// vertices; exactly n vertices in total.
    Structured,
    /// G(n, p) with p drawn per attempt, filtered by the detector; n <= 10.
    Rejection,
}

/// Bases used for structured sampling and the blowup corpus.
pub fn corpus_bases() -> Vec<BaseGraph> {
    vec![BaseGraph::C5, BaseGraph::H1, BaseGraph::H2, BaseGraph::H3, BaseGraph::H4, BaseGraph::H5, BaseGraph::F3]
}

pub fn gen_random_p6c4free(n: usize, seed: u64, strategy: SampleStrategy) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::Params("n must be at least 1".into()));
    }
    let mut r = rng(seed);
    match strategy {
        SampleStrategy::Rejection => {
            if n > 10 {
                return Err(GenError::Params(format!("rejection sampling is for n <= 10, got {n}")));
            }
            for _ in 0..RETRY_BUDGET {
                let p: f64 = r.gen_range(0.15..0.85);
                let g = Graph::from_fn(n, |_, _| r.gen_bool(p));
                if detect::is_p6c4_free(&g).is_ok() {
                    return Ok(g);
                }
            }
            Err(GenError::Exhausted(format!("no (P6,C4)-free G({n}, p) sample")))
        }
        SampleStrategy::Structured => {
            let mut bases = corpus_bases();
            bases.push(BaseGraph::Fkl { k: r.gen_range(0..=2), l: r.gen_range(0..=2) });
            let base = bases.choose(&mut r).expect("non-empty").clone();
            let h = base.graph().n();
            let universal = if n > 1 && r.gen_bool(0.25) { r.gen_range(1..=(n / 4).max(1)) } else { 0 };
            let mut sizes = vec![0; h];
            for _ in 0..n - universal {
                sizes[r.gen_range(0..h)] += 1;
            }
            let g = add_universal(&gen_blowup(&base, &sizes)?.0, universal);
            detect::is_p6c4_free(&g).map_err(|w| GenError::Exhausted(format!("blowup not (P6,C4)-free: {w}")))?;
            Ok(g)
        }
    }
}

/// Identify clique `ka` of `a` with clique `kb` of `b` (same size, matched
/// in order). Vertices of `a` keep their ids; the rest of `b` follows.
pub fn glue(a: &Graph, ka: &[usize], b: &Graph, kb: &[usize]) -> Result<Graph, GenError> {
    if ka.len() != kb.len() || !a.is_clique(ka) || !b.is_clique(kb) {
        return Err(GenError::Params("glue needs two cliques of the same size".into()));
    }
    let mut id = vec![usize::MAX; b.n()];
    for (&x, &y) in ka.iter().zip(kb) {
        id[y] = x;
    }
    let mut next = a.n();
    for v in id.iter_mut().filter(|v| **v == usize::MAX) {
        *v = next;
        next += 1;
    }
    let mut edges = a.edges();
    edges.extend(b.edges().into_iter().map(|(u, v)| (id[u], id[v])));
    Graph::new(next, &edges).map_err(|e| GenError::Params(e.to_string()))
}

/// `h` with `s` new vertices complete to everything (ids n..n+s).
pub fn add_universal(h: &Graph, s: usize) -> Graph {
    let n = h.n();
    let mut edges = h.edges();
    for u in n..n + s {
        edges.extend((0..u).map(|v| (v, u)));
    }
    Graph::new(n + s, &edges).expect("in range")
}

/// Chain `depth` gluings: each step picks a clique K of the current graph
/// and identifies it with the universal clique of a fresh instance plus
/// |K| universal vertices, so K becomes a clique cutset. Two hole-bearing
/// pieces glued directly almost never stay P6-free, hence the universal
/// side. Returns the graph and the first cutset.
pub fn gen_glued(seed: u64, depth: usize) -> Result<(Graph, VertexSet), GenError> {
    let mut r = rng(seed);
    let mut last = String::from("no attempt");
    let mut tries = 0;
    'restart: while tries < RETRY_BUDGET {
        let mut g = small_instance(&mut r)?;
        let mut first_cut = None;
        for _ in 0..depth.max(1) {
            let h = small_instance(&mut r)?;
            let mut cands = glue_candidates(&g);
            cands.shuffle(&mut r);
            let mut next = None;
            for ka in cands {
                tries += 1;
                let kb: Vec<usize> = (h.n()..h.n() + ka.len()).collect();
                let glued = glue(&g, &ka, &add_universal(&h, ka.len()), &kb)?;
                match detect::is_p6c4_free(&glued) {
                    Ok(()) => {
                        next = Some((glued, ka));
                        break;
                    }
                    Err(w) => last = format!("glued graph not (P6,C4)-free: {w}"),
                }
            }
            let Some((glued, ka)) = next else { continue 'restart };
            first_cut.get_or_insert_with(|| ka.into_iter().collect::<VertexSet>());
            g = glued;
        }
        return Ok((g, first_cut.expect("depth >= 1")));
    }
    Err(GenError::Exhausted(last))
}

/// Maximal cliques of g, plus their vertices and edges, deduplicated.
fn glue_candidates(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = std::collections::BTreeSet::new();
    for k in crate::coloring::maximal_cliques(g) {
        let k = k.into_vec();
        for (i, &u) in k.iter().enumerate() {
            out.insert(vec![u]);
            for &v in &k[i + 1..] {
                out.insert(vec![u, v]);
            }
        }
        out.insert(k);
    }
    out.into_iter().collect()
}

fn small_instance(r: &mut ChaCha8Rng) -> Result<Graph, GenError> {
    let seed = r.gen();
    Ok(match r.gen_range(0..4) {
        0 => gen_band(seed, 2)?.0,
        1 => {
            let base = corpus_bases().choose(r).expect("non-empty").clone();
            let n = base.graph().n();
            let sizes = sizes_in(r, n, 1, 2);
            gen_blowup(&base, &sizes)?.0
        }
        2 => gen_belt(seed, 2)?.0,
        _ => gen_boiler(seed, 3, 2)?.0,
    })
}

/// A random trivially perfect graph on n vertices: a clique of universal
/// vertices over a disjoint union of smaller ones. Vertex ids are shuffled.
pub fn gen_trivially_perfect(seed: u64, n: usize) -> Graph {
    fn build(r: &mut ChaCha8Rng, b: &mut Builder, n: usize) -> VertexSet {
        if n == 0 {
            return VertexSet::new();
        }
        let u = b.part(r.gen_range(usize::from(n == 1)..=n.min(3)));
        b.clique(&u);
        let mut rest = n - u.len();
        let mut below = VertexSet::new();
        while rest > 0 {
            let k = r.gen_range(1..=rest);
            below = below.union(&build(r, b, k));
            rest -= k;
        }
        b.complete(&u, &below);
        u.union(&below)
    }
    let mut r = rng(seed);
    let mut b = Builder::default();
    build(&mut r, &mut b, n);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut r);
    let edges: Vec<(usize, usize)> = b.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::new(n, &edges).expect("in range")
}

/// A (P4,C4,2P3)-free graph on n vertices, by rejection over
/// `gen_trivially_perfect`.
pub fn gen_class_c(seed: u64, n: usize) -> Result<Graph, GenError> {
    let mut r = rng(seed);
    for _ in 0..RETRY_BUDGET {
        let g = gen_trivially_perfect(r.gen(), n);
        if crate::trivially_perfect::in_class_c(&g).is_ok() {
            return Ok(g);
        }
    }
    Err(GenError::Exhausted(format!("no (P4,C4,2P3)-free sample on {n} vertices")))
}

/// What to generate. The seed (where present) fully determines the output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GenSpec {
    Blowup { base: String, sizes: Vec<usize> },
    Fkl { k: usize, l: usize, sizes: Option<Vec<usize>> },
    Tight { q: usize },
    Band { seed: u64, max_part: usize },
    Belt { seed: u64, max_part: usize },
    Boiler { seed: u64, k: usize, max_part: usize },
    RandomP6c4 { n: usize, seed: u64, strategy: SampleStrategy },
    Glued { seed: u64, depth: usize },
}

/// A generated graph and, when the construction provides one, its
/// certificate (the sidecar written next to the graph).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generated {
    pub graph: Graph,
    pub certificate: Option<StructureCertificate>,
}

fn cert(kind: CertKind, branch: &str) -> Option<StructureCertificate> {
    Some(StructureCertificate { kind, provenance: Provenance::branch(branch) })
}

pub fn generate(spec: &GenSpec) -> Result<Generated, GenError> {
    let (graph, certificate) = match spec {
        GenSpec::Blowup { base, sizes } => {
            let b = BaseGraph::parse(base).ok_or_else(|| GenError::Params(format!("unknown base {base}")))?;
            let (g, m) = gen_blowup(&b, sizes)?;
            (g, cert(CertKind::Blowup(m), "generator"))
        }
        GenSpec::Fkl { k, l, sizes } => {
            let (g, m) = gen_fkl(*k, *l, sizes.as_deref())?;
            (g, cert(CertKind::Blowup(m), "generator"))
        }
        GenSpec::Tight { q } => {
            let (g, m) = tight(*q);
            (g, cert(CertKind::Blowup(m), "generator"))
        }
        GenSpec::Band { seed, max_part } => {
            let (g, p) = gen_band(*seed, *max_part)?;
            (g, cert(CertKind::Band(p), "generator"))
        }
        GenSpec::Belt { seed, max_part } => {
            let (g, p) = gen_belt(*seed, *max_part)?;
            (g, cert(CertKind::Belt(p), "generator"))
        }
        GenSpec::Boiler { seed, k, max_part } => {
            let (g, p) = gen_boiler(*seed, *k, *max_part)?;
            let mut c = cert(CertKind::Boiler(p.clone()), "generator").expect("some");
            if let Some(r) = &p.refinement {
                c.provenance.sets.insert("A_L".into(), r.a_l.clone());
                c.provenance.sets.insert("A_L_prime".into(), r.a_l_prime.clone());
            }
            (g, Some(c))
        }
        GenSpec::RandomP6c4 { n, seed, strategy } => (gen_random_p6c4free(*n, *seed, *strategy)?, None),
        GenSpec::Glued { seed, depth } => {
            let (g, _) = gen_glued(*seed, *depth)?;
            (g, None)
        }
    };
    if let Some(CertKind::Blowup(m)) = certificate.as_ref().map(|c| &c.kind) {
        validate_blowup(&graph, m).map_err(|v| GenError::Exhausted(v.to_string()))?;
    }
    Ok(Generated { graph, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::validate_certificate;

    #[test]
    fn blowup_examples() {
        let (g, m) = gen_blowup(&BaseGraph::H1, &[2; 10]).unwrap();
        assert_eq!((g.n(), crate::coloring::clique_number(&g)), (20, 4));
        assert_eq!(m.sizes(), vec![2; 10]);
        let (g, _) = tight(2);
        let d = g.vertices().map(|v| g.degree(v)).max().unwrap();
        assert_eq!((crate::coloring::clique_number(&g), d), (4, 5));
        let (g, _) = gen_fkl(2, 2, None).unwrap();
        assert_eq!(g.n(), 13);
        assert_eq!(gen_fkl(0, 0, None).unwrap().0.n(), 5);
    }

    #[test]
    fn boiler_needs_three_blocks() {
        assert!(matches!(gen_boiler(1, 2, 2), Err(GenError::Params(_))));
    }

    #[test]
    fn seeded_classes_validate() {
        for seed in 0..20 {
            let (g, p) = gen_band(seed, 3).unwrap();
            validate_band(&g, &p).unwrap();
            let (g, p) = gen_belt(seed, 2).unwrap();
            validate_belt(&g, &p).unwrap();
            let (g, p) = gen_boiler(seed, 3 + (seed as usize % 2), 2).unwrap();
            validate_boiler(&g, &p).unwrap();
        }
    }

    #[test]
    fn determinism() {
        assert_eq!(gen_band(7, 3).unwrap(), gen_band(7, 3).unwrap());
        let s = GenSpec::Glued { seed: 3, depth: 1 };
        assert_eq!(generate(&s).unwrap(), generate(&s).unwrap());
        assert_eq!(gen_random_p6c4free(1, 0, SampleStrategy::Rejection).unwrap().n(), 1);
    }

    #[test]
    fn spec_round_trip() {
        let s = GenSpec::Boiler { seed: 4, k: 3, max_part: 2 };
        let j = serde_json::to_string(&s).unwrap();
        assert!(j.contains("\"family\":\"BOILER\""));
        assert_eq!(serde_json::from_str::<GenSpec>(&j).unwrap(), s);
        let out = generate(&s).unwrap();
        validate_certificate(&out.graph, out.certificate.as_ref().unwrap()).unwrap();
    }
}
