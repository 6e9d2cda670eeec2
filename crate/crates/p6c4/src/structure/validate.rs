use super::{BandParts, BeltParts, BlowupMap, BoilerParts, BoilerRefinement, CertKind, StructureCertificate, Violation};
use crate::detect::{self, EliminationOrder, Special};
use crate::graph::{Graph, VertexSet};
use crate::trivially_perfect::is_graded;

type Check = Result<(), Violation>;

fn partition(g: &Graph, clause: &str, parts: &[&VertexSet]) -> Check {
    let mut owner = vec![usize::MAX; g.n()];
    for (i, s) in parts.iter().enumerate() {
        for v in s.iter() {
            if v >= g.n() {
                return Err(Violation::new(clause, [v]));
            }
            if owner[v] != usize::MAX {
                return Err(Violation::new(clause, [v]));
            }
            owner[v] = i;
        }
    }
    match owner.iter().position(|&o| o == usize::MAX) {
        Some(v) => Err(Violation::new(clause, [v])),
        None => Ok(()),
    }
}

fn clique(g: &Graph, clause: &str, s: &VertexSet) -> Check {
    match g.first_non_edge(s.as_slice(), s.as_slice()) {
        Some((u, v)) => Err(Violation::new(clause, [u, v])),
        None => Ok(()),
    }
}

fn complete(g: &Graph, clause: &str, a: &VertexSet, b: &VertexSet) -> Check {
    match g.first_non_edge(a.as_slice(), b.as_slice()) {
        Some((u, v)) => Err(Violation::new(clause, [u, v])),
        None => Ok(()),
    }
}

fn empty(g: &Graph, clause: &str, a: &VertexSet, b: &VertexSet) -> Check {
    match g.first_edge(a.as_slice(), b.as_slice()) {
        Some((u, v)) => Err(Violation::new(clause, [u, v])),
        None => Ok(()),
    }
}

fn union(sets: &[&VertexSet]) -> VertexSet {
    sets.iter().flat_map(|s| s.iter()).collect()
}

/// (P4, 2P3)-freeness of G[s].
fn class_c_minus(g: &Graph, clause: &str, s: &VertexSet) -> Check {
    let (h, map) = g.induced_subgraph(s.as_slice()).expect("in range");
    let w = detect::find_induced_path(&h, 4).or_else(|| detect::find_special(&h, Special::TwoP3));
    match w {
        Some(w) => Err(Violation::new(clause, w.vertices.iter().map(|&v| map[v]))),
        None => Ok(()),
    }
}

fn p6c4c6_free(g: &Graph, clause: &str) -> Check {
    if let Err(w) = detect::is_p6c4_free(g) {
        return Err(Violation::new(clause, w.vertices));
    }
    match detect::find_induced_cycle(g, 6) {
        Some(w) => Err(Violation::new(clause, w.vertices)),
        None => Ok(()),
    }
}

pub fn validate_blowup(g: &Graph, map: &BlowupMap) -> Check {
    let h = map.base.graph();
    if map.bags.len() != h.n() {
        return Err(Violation::new("blowup.base", []));
    }
    let bags: Vec<&VertexSet> = map.bags.iter().collect();
    partition(g, "blowup.partition", &bags)?;
    for b in &map.bags {
        clique(g, "blowup.clique", b)?;
    }
    for u in 0..h.n() {
        for v in u + 1..h.n() {
            if h.has_edge(u, v) {
                complete(g, "blowup.complete", &map.bags[u], &map.bags[v])?;
            } else {
                empty(g, "blowup.empty", &map.bags[u], &map.bags[v])?;
            }
        }
    }
    Ok(())
}

pub fn validate_band(g: &Graph, p: &BandParts) -> Check {
    let all: Vec<&VertexSet> = p.named().iter().map(|(_, s)| *s).collect();
    partition(g, "band.partition", &all)?;
    for s in &all {
        clique(g, "band.clique", s)?;
    }
    let (q1, q2, q3, q4, q5, r2, r3) = (&p.q1, &p.q2, &p.q3, &p.q4, &p.q5, &p.r2, &p.r3);
    complete(g, "band.complete[Q5,Q1+Q4]", q5, &union(&[q1, q4]))?;
    complete(g, "band.complete[R2,Q1+Q2+Q3]", r2, &union(&[q1, q2, q3]))?;
    complete(g, "band.complete[R3,Q2+Q3+Q4]", r3, &union(&[q2, q3, q4]))?;
    complete(g, "band.complete[Q2,Q3]", q2, q3)?;
    empty(g, "band.empty[Q1,Q3+R3+Q4]", q1, &union(&[q3, r3, q4]))?;
    empty(g, "band.empty[Q4,Q1+Q2+R2]", q4, &union(&[q1, q2, r2]))?;
    empty(g, "band.empty[Q5,Q2+R2+Q3+R3]", q5, &union(&[q2, r2, q3, r3]))?;
    for (name, a, b) in [("band.graded[Q1,Q2]", q1, q2), ("band.graded[Q3,Q4]", q3, q4), ("band.graded[R2,R3]", r2, r3)] {
        if !is_graded(g, a.as_slice(), b.as_slice()) {
            return Err(Violation::new(name, a.iter().chain(b.iter())));
        }
    }
    Ok(())
}

pub fn validate_belt(g: &Graph, p: &BeltParts) -> Check {
    let all: Vec<&VertexSet> = p.named().iter().map(|(_, s)| *s).collect();
    partition(g, "belt.partition", &all)?;
    for i in 1..=5 {
        clique(g, "belt.clique", p.q(i))?;
    }
    let (q1, q2, q3, q4, q5, r2, r3) = (&p.q1, &p.q2, &p.q3, &p.q4, &p.q5, &p.r2, &p.r3);
    complete(g, "belt.complete[Q1,Q2+R2+Q5]", q1, &union(&[q2, r2, q5]))?;
    complete(g, "belt.complete[Q4,Q3+R3+Q5]", q4, &union(&[q3, r3, q5]))?;
    empty(g, "belt.empty[Q1,Q3+R3+Q4]", q1, &union(&[q3, r3, q4]))?;
    empty(g, "belt.empty[Q4,Q2+R2+Q1]", q4, &union(&[q2, r2, q1]))?;
    empty(g, "belt.empty[Q5,Q2+R2+Q3+R3]", q5, &union(&[q2, r2, q3, r3]))?;
    for j in [2, 3] {
        let (qj, rj) = (p.q(j), p.r(j));
        complete(g, "belt.fourth[Qj,Rj]", qj, rj)?;
        let other = p.q(5 - j).union(p.r(5 - j));
        if let Some(v) = qj.union(rj).iter().find(|&v| g.neighbors_in(v, &other).is_empty()) {
            return Err(Violation::new("belt.fourth.neighbor", [v]));
        }
        if let Some(v) = rj.iter().find(|&v| g.neighbors_in(v, rj).len() + 1 == rj.len()) {
            return Err(Violation::new("belt.fourth.no_universal", [v]));
        }
    }
    p6c4c6_free(g, "belt.free")?;
    for j in [2, 3] {
        let (rj, qo) = (p.r(j), p.q(5 - j));
        for (i, u) in rj.iter().enumerate() {
            for v in rj.as_slice()[i + 1..].iter().copied() {
                if !g.has_edge(u, v) {
                    if let Some(c) = g.neighbors_in(u, qo).intersection(&g.neighbors_in(v, qo)).first() {
                        return Err(Violation::new("belt.derived.private", [u, v, c]));
                    }
                }
            }
        }
        for v in p.q(j).iter() {
            if !g.neighbors_in(v, p.r(5 - j)).is_empty() {
                complete(g, "belt.derived.q_complete", &VertexSet::from([v]), qo)?;
            }
        }
        class_c_minus(g, "belt.derived.r_class", rj)?;
    }
    empty(g, "belt.derived.r_anticomplete", r2, r3)?;
    Ok(())
}

/// Number of leading blocks a is complete to; also whether a is anticomplete
/// to every later block.
fn prefix(g: &Graph, a: usize, blocks: &[VertexSet]) -> (usize, bool) {
    let only_a = VertexSet::from([a]);
    let p = blocks.iter().take_while(|b| g.first_non_edge(&[a], b.as_slice()).is_none()).count();
    let nested = blocks[p..].iter().all(|b| g.first_edge(only_a.as_slice(), b.as_slice()).is_none());
    (p, nested)
}

pub fn validate_boiler(g: &Graph, p: &BoilerParts) -> Check {
    let (q, a, b, l, m) = (&p.q, &p.a, &p.b, &p.l, &p.m);
    partition(g, "boiler.partition", &[q, a, b, l, m])?;
    for s in [q, a, b, m] {
        if s.is_empty() {
            return Err(Violation::new("boiler.nonempty", []));
        }
    }
    for s in [q, a, b] {
        clique(g, "boiler.clique", s)?;
    }
    complete(g, "boiler.complete[Q,A]", q, a)?;
    complete(g, "boiler.complete[Q,M]", q, m)?;
    complete(g, "boiler.complete[B,L]", b, l)?;
    empty(g, "boiler.empty[Q,B]", q, b)?;
    empty(g, "boiler.empty[Q,L]", q, l)?;
    empty(g, "boiler.empty[L,M]", l, m)?;
    class_c_minus(g, "boiler.class[L]", l)?;
    class_c_minus(g, "boiler.class[M]", m)?;
    if let Some(v) = l.iter().find(|&v| g.neighbors_in(v, a).is_empty()) {
        return Err(Violation::new("boiler.l_neighbor", [v]));
    }
    let k = p.k;
    if k < 3 || p.m_blocks.len() != k || p.b_blocks.len() != k {
        return Err(Violation::new("boiler.blocks.k", []));
    }
    partition_within(m, &p.m_blocks, "boiler.blocks.m_partition")?;
    partition_within(b, &p.b_blocks, "boiler.blocks.b_partition")?;
    for i in 0..k {
        for s in [&p.m_blocks[i], &p.b_blocks[i]] {
            if s.is_empty() {
                return Err(Violation::new("boiler.blocks.nonempty", []));
            }
        }
        for j in i + 1..k {
            empty(g, "boiler.blocks.m_anticomplete", &p.m_blocks[i], &p.m_blocks[j])?;
        }
        for v in p.m_blocks[i].iter() {
            let nb = g.neighbors_in(v, b);
            if nb.is_empty() || !nb.is_subset(&p.b_blocks[i]) {
                return Err(Violation::new("boiler.blocks.m_to_b", [v]));
            }
        }
    }
    if let Some(v) = b.iter().find(|&v| g.neighbors_in(v, m).is_empty()) {
        return Err(Violation::new("boiler.blocks.b_neighbor", [v]));
    }
    let block = |i: usize| p.m_blocks[i].union(&p.b_blocks[i]);
    complete(g, "boiler.a_first_blocks", a, &block(0).union(&block(1)))?;
    for i in 2..k {
        let bl = block(i);
        for v in a.iter() {
            let c = g.neighbors_in(v, &bl).len();
            if c != 0 && c != bl.len() {
                return Err(Violation::new("boiler.a_homogeneous", [v, bl.as_slice()[0]]));
            }
        }
    }
    if let Some(v) = a.iter().find(|&v| g.neighbors_in(v, b).len() == b.len()) {
        return Err(Violation::new("boiler.a_not_complete_to_b", [v]));
    }
    p6c4c6_free(g, "boiler.free")?;

    if !p.b_blocks[k - 1].contains(p.b_star) || !g.neighbors_in(p.b_star, a).is_empty() {
        return Err(Violation::new("boiler.derived.b_star", [p.b_star]));
    }
    if !p.m_blocks[k - 1].contains(p.m_star) || !g.has_edge(p.m_star, p.b_star) {
        return Err(Violation::new("boiler.derived.m_star", [p.m_star]));
    }
    if !g.neighbors_in(p.m_star, a).is_empty() {
        return Err(Violation::new("boiler.derived.m_star_anticomplete", [p.m_star]));
    }
    if g.is_clique(l.as_slice()) {
        return Ok(());
    }
    let r = p.refinement.as_ref().ok_or_else(|| Violation::new("boiler.refine.missing", []))?;
    check_refinement(g, p, r)
}

fn partition_within(whole: &VertexSet, parts: &[VertexSet], clause: &str) -> Check {
    let mut seen = VertexSet::new();
    for s in parts {
        if let Some(v) = s.iter().find(|&v| seen.contains(v) || !whole.contains(v)) {
            return Err(Violation::new(clause, [v]));
        }
        seen = seen.union(s);
    }
    match whole.difference(&seen).first() {
        Some(v) => Err(Violation::new(clause, [v])),
        None => Ok(()),
    }
}

fn check_refinement(g: &Graph, p: &BoilerParts, r: &BoilerRefinement) -> Check {
    let (a, l, k) = (&p.a, &p.l, p.k);
    let (gl, map) = g.induced_subgraph(l.as_slice()).expect("in range");
    let u: VertexSet = detect::universal_vertices(&gl).map(|v| map[v]);
    let non_u = l.difference(&u);
    let a_l: VertexSet = a.iter().filter(|&v| !g.neighbors_in(v, l).is_empty()).collect();
    let a_lp: VertexSet = a.iter().filter(|&v| !g.neighbors_in(v, &non_u).is_empty()).collect();
    if r.u != u || r.a_l != a_l || r.a_l_prime != a_lp {
        return Err(Violation::new("boiler.refine.sets", []));
    }
    let blocks: Vec<VertexSet> = (0..k).map(|i| p.m_blocks[i].union(&p.b_blocks[i])).collect();
    let mut pre = Vec::new();
    for v in a.iter() {
        let (pv, nested) = prefix(g, v, &blocks);
        if !nested {
            return Err(Violation::new("boiler.refine.nested", [v]));
        }
        pre.push((v, pv));
    }
    if pre != r.prefix {
        return Err(Violation::new("boiler.refine.prefix", []));
    }
    // J = {i >= 3 : some A-vertex misses block i} = {j, ..., k}, 1-based.
    let j = (3..=k).find(|&i| pre.iter().any(|&(_, pv)| pv < i)).unwrap_or(k + 1);
    if j != r.j {
        return Err(Violation::new("boiler.refine.j", []));
    }
    for &(v, pv) in &pre {
        let ok = if a_lp.contains(v) {
            pv == k - 1
        } else if a_l.contains(v) {
            pv + 1 >= j && pv < k
        } else {
            pv + 1 == j
        };
        if !ok {
            let clause = if a_lp.contains(v) {
                "boiler.refine.ii"
            } else if a_l.contains(v) {
                "boiler.refine.i"
            } else {
                "boiler.refine.iii"
            };
            return Err(Violation::new(clause, [v]));
        }
    }
    Ok(())
}

pub fn validate_certificate(g: &Graph, cert: &StructureCertificate) -> Check {
    match &cert.kind {
        CertKind::CliqueCutset { cutset, side_a, side_b } => {
            clique(g, "cutset.clique", cutset)?;
            if side_a.is_empty() || side_b.is_empty() {
                return Err(Violation::new("cutset.sides", []));
            }
            partition(g, "cutset.partition", &[cutset, side_a, side_b])?;
            empty(g, "cutset.separates", side_a, side_b)
        }
        CertKind::UniversalVertex { vertex } => {
            let v = *vertex;
            if v >= g.n() || g.degree(v) + 1 != g.n() {
                return Err(Violation::new("universal", [v.min(g.n().saturating_sub(1))]));
            }
            Ok(())
        }
        CertKind::ChordalLeaf { order } => {
            let e = EliminationOrder { order: order.clone() };
            if e.is_perfect(g) {
                Ok(())
            } else {
                Err(Violation::new("chordal.order", []))
            }
        }
        CertKind::Blowup(m) => validate_blowup(g, m),
        CertKind::Band(p) => validate_band(g, p),
        CertKind::Belt(p) => validate_belt(g, p),
        CertKind::Boiler(p) => validate_boiler(g, p),
    }
}
