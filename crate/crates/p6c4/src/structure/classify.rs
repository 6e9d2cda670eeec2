use super::partition::{partition_around_c5, C5Partition};
use super::{
    match_blowup, match_fkl, validate_certificate, BandParts, BaseGraph, BeltParts, BlowupMap, BoilerParts,
    BoilerRefinement, CertKind, Provenance, StructureCertificate, Violation,
};
use crate::detect::{self, Special, Witness};
use crate::graph::{Graph, VertexSet};
use crate::trivially_perfect::clone_quotient;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("not (P6,C4)-free: {0}")]
    NotMember(Witness),
    #[error("graph is disconnected")]
    Disconnected,
    /// No branch produced a valid certificate. Every connected member falls
    /// in one of the classes, so this signals a bug.
    #[error("no branch applies ({branch}): {detail}")]
    NoBranch { branch: String, hole: Vec<usize>, detail: String },
}

fn no_branch(branch: &str, hole: &[usize], detail: impl Into<String>) -> ClassifyError {
    ClassifyError::NoBranch { branch: branch.into(), hole: hole.to_vec(), detail: detail.into() }
}

/// First applicable certificate: clique cutset, universal vertex, chordal
/// leaf, then the hole-based branches in a fixed order.
pub fn classify(g: &Graph) -> Result<StructureCertificate, ClassifyError> {
    let cert = classify_unchecked(g)?;
    if let Err(v) = validate_certificate(g, &cert) {
        return Err(no_branch(&cert.provenance.branch, &cert.provenance.hole, format!("invalid certificate: {v}")));
    }
    Ok(cert)
}

fn leaf(g: &Graph) -> Option<StructureCertificate> {
    detect::chordality(g).ok().map(|peo| StructureCertificate {
        kind: CertKind::ChordalLeaf { order: peo.order },
        provenance: Provenance::branch("chordal"),
    })
}

fn classify_unchecked(g: &Graph) -> Result<StructureCertificate, ClassifyError> {
    if g.n() <= 2 {
        return Ok(leaf(g).expect("tiny graphs are chordal"));
    }
    detect::is_p6c4_free(g).map_err(ClassifyError::NotMember)?;
    let cut = detect::find_clique_cutset(g).map_err(|_| ClassifyError::Disconnected)?;
    if let Some(c) = cut {
        return Ok(StructureCertificate {
            kind: CertKind::CliqueCutset { cutset: c.clique, side_a: c.side_a, side_b: c.side_b },
            provenance: Provenance::branch("clique_cutset"),
        });
    }
    if let Some(v) = detect::universal_vertices(g).first() {
        return Ok(StructureCertificate {
            kind: CertKind::UniversalVertex { vertex: v },
            provenance: Provenance::branch("universal_vertex"),
        });
    }
    if let Some(c) = leaf(g) {
        return Ok(c);
    }
    if let Some(w) = detect::find_special(g, Special::F3) {
        let hole = w.vertices[..6].to_vec();
        let m = match_blowup(g, &BaseGraph::F3).ok_or_else(|| no_branch("f3_present", &hole, "no F3 blowup"))?;
        return Ok(blowup_cert(m, "f3_present", hole));
    }
    if let Some(w) = detect::find_special(g, Special::F1) {
        return band_from_f1(g, &w);
    }
    if let Some(w) = detect::find_induced_cycle(g, 6) {
        for base in [BaseGraph::H1, BaseGraph::H2, BaseGraph::H3, BaseGraph::H4] {
            if let Some(m) = match_blowup(g, &base) {
                return Ok(blowup_cert(m, "c6_present", w.vertices));
            }
        }
        return Err(no_branch("c6_present", &w.vertices, "not a blowup of H1..H4"));
    }
    if let Some(w) = detect::find_special(g, Special::F2) {
        let hole = w.vertices[..5].to_vec();
        let m = match_blowup(g, &BaseGraph::H5).or_else(|| match_fkl(g));
        return match m {
            Some(m) => Ok(blowup_cert(m, "f2_present", hole)),
            None => Err(no_branch("f2_present", &hole, "not a blowup of H5 or F_{k,l}")),
        };
    }
    c5_only(g)
}

fn blowup_cert(m: BlowupMap, branch: &str, hole: Vec<usize>) -> StructureCertificate {
    let mut provenance = Provenance::branch(branch);
    provenance.hole = hole;
    StructureCertificate { kind: CertKind::Blowup(m), provenance }
}

fn with(v: usize, s: &VertexSet) -> VertexSet {
    let mut out = s.clone();
    out.insert(v);
    out
}

fn record(p: &C5Partition, sets: &mut std::collections::BTreeMap<String, VertexSet>) {
    let pair = ["12", "23", "34", "45", "51"];
    if !p.a.is_empty() {
        sets.insert("A".into(), p.a.clone());
    }
    for (i, tag) in pair.iter().enumerate() {
        for (name, s) in [(format!("T{}", i + 1), &p.t[i]), (format!("W{}", i + 1), &p.w[i]), (format!("X{tag}"), &p.x[i])] {
            if !s.is_empty() {
                sets.insert(name, s.clone());
            }
        }
    }
}

/// Band parts around the hole of an F1 witness (hole v1..v5 then x, y, z).
fn band_from_f1(g: &Graph, w: &Witness) -> Result<StructureCertificate, ClassifyError> {
    let hole: [usize; 5] = w.vertices[..5].try_into().expect("F1 has a 5-hole");
    let p = partition_around_c5(g, hole).map_err(|v| no_branch("f1_present", &hole, v.to_string()))?;
    let v = |i: usize| hole[i - 1];
    let t = |i: usize| &p.t[i - 1];
    let anti = |x: usize, s: &VertexSet| g.neighbors_in(x, s).is_empty();
    let y1: VertexSet = p.x[1].iter().filter(|&y| anti(y, t(4))).collect();
    let y4 = p.x[1].difference(&y1);
    let q1 = with(v(1), t(1));
    let q4 = with(v(4), t(4));
    let q5 = with(v(5), t(5));
    let side2 = with(v(2), t(2)).union(&p.x[0]).union(&y1);
    let side3 = with(v(3), t(3)).union(&p.x[2]).union(&y4);
    let r2: VertexSet = side2.iter().filter(|&u| g.neighbors_in(u, &q1).len() == q1.len()).collect();
    let r3: VertexSet = side3.iter().filter(|&u| g.neighbors_in(u, &q4).len() == q4.len()).collect();
    let parts = BandParts { q1, q2: side2.difference(&r2), q3: side3.difference(&r3), q4, q5, r2, r3 };
    let mut provenance = Provenance::branch("f1_present");
    provenance.hole = hole.to_vec();
    record(&p, &mut provenance.sets);
    provenance.sets.insert("Y1".into(), y1);
    provenance.sets.insert("Y4".into(), y4);
    Ok(StructureCertificate { kind: CertKind::Band(parts), provenance })
}

/// Every induced C5 of g, one representative per clone-class pattern, each
/// listed once (smallest class first, then the smaller of its two hole
/// neighbors second).
fn c5_holes(g: &Graph) -> Vec<[usize; 5]> {
    let cq = clone_quotient(g);
    let h = &cq.quotient;
    let rep = |c: usize| cq.classes[c].as_slice()[0];
    let mut out = Vec::new();
    for a in h.vertices() {
        for &b in h.neighbors(a).iter().filter(|&&b| b > a) {
            for &c in h.neighbors(b).iter().filter(|&&c| c > a && !h.has_edge(a, c)) {
                for &d in h.neighbors(c).iter().filter(|&&d| d > a && !h.has_edge(a, d) && !h.has_edge(b, d)) {
                    for &e in h.neighbors(d).iter() {
                        if e > b && h.has_edge(e, a) && !h.has_edge(e, b) && !h.has_edge(e, c) {
                            out.push([a, b, c, d, e].map(rep));
                        }
                    }
                }
            }
        }
    }
    out
}

fn t_weight(g: &Graph, hole: &[usize; 5]) -> usize {
    g.vertices()
        .filter(|v| !hole.contains(v))
        .filter(|&v| {
            let nb: Vec<usize> = (0..5).filter(|&i| g.has_edge(v, hole[i])).collect();
            nb.len() == 3 && (0..5).any(|i| nb.contains(&i) && nb.contains(&((i + 1) % 5)) && nb.contains(&((i + 4) % 5)))
        })
        .count()
}

/// The ten relabelings of a 5-hole, identity first.
fn dihedral(h: [usize; 5]) -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    for r in 0..5 {
        out.push(std::array::from_fn(|i| h[(i + r) % 5]));
    }
    for r in 0..5 {
        out.push(std::array::from_fn(|i| h[(r + 5 - i) % 5]));
    }
    out
}

/// Hole with X12, X34 the only X-sets (X34 non-empty), [X12 + X34, T5] = 0
/// and W inside W1.
fn normalized(g: &Graph, p: &C5Partition) -> bool {
    let x = &p.x;
    x[1].is_empty()
        && x[3].is_empty()
        && x[4].is_empty()
        && !x[2].is_empty()
        && g.first_edge(x[0].union(&x[2]).as_slice(), p.t[4].as_slice()).is_none()
        && p.w[1..].iter().all(VertexSet::is_empty)
}

/// C6-free, F2-free graphs with a C5: blowup of C5, belt, or boiler.
/// Holes are tried by increasing T-weight; the error reported is the one
/// for the first hole.
fn c5_only(g: &Graph) -> Result<StructureCertificate, ClassifyError> {
    let mut holes: Vec<(usize, [usize; 5])> = c5_holes(g).into_iter().map(|h| (t_weight(g, &h), h)).collect();
    holes.sort_unstable();
    let mut first = None;
    for &(_, h) in &holes {
        match c5_only_at(g, h) {
            Ok(c) if validate_certificate(g, &c).is_ok() => return Ok(c),
            Ok(_) => {}
            Err(e) => {
                first.get_or_insert(e);
            }
        }
    }
    Err(first.unwrap_or_else(|| no_branch("c5_only", &[], "no induced C5")))
}

fn c5_only_at(g: &Graph, best: [usize; 5]) -> Result<StructureCertificate, ClassifyError> {
    let p0 = partition_around_c5(g, best).map_err(|v| no_branch("c5_only", &best, v.to_string()))?;
    let mut provenance = Provenance::branch("c5_only");
    if p0.x.iter().all(VertexSet::is_empty) {
        provenance.hole = best.to_vec();
        record(&p0, &mut provenance.sets);
        if !p0.a.is_empty() || p0.w.iter().any(|w| !w.is_empty()) || !p0.leftover.is_empty() {
            return Err(no_branch("c5_only", &best, "X empty but A or W not"));
        }
        let bags = (0..5).map(|i| with(best[i], &p0.t[i])).collect();
        return Ok(StructureCertificate { kind: CertKind::Blowup(BlowupMap { base: BaseGraph::C5, bags }), provenance });
    }
    let (hole, p) = dihedral(best)
        .into_iter()
        .filter_map(|h| partition_around_c5(g, h).ok().map(|p| (h, p)))
        .find(|(_, p)| normalized(g, p))
        .ok_or_else(|| no_branch("c5_only", &best, "no relabeling normalizes X, T5 and W"))?;
    provenance.hole = hole.to_vec();
    record(&p, &mut provenance.sets);
    let v = |i: usize| hole[i - 1];
    let t = |i: usize| &p.t[i - 1];
    let (x12, x34, w1) = (&p.x[0], &p.x[2], &p.w[0]);
    let has_nb = |u: usize, s: &VertexSet| !g.neighbors_in(u, s).is_empty();
    let x34t: VertexSet = x34.iter().filter(|&u| has_nb(u, t(2))).collect();
    let x34n: VertexSet = x34.iter().filter(|&u| !has_nb(u, t(2)) && has_nb(u, w1)).collect();
    let x34_0 = x34.difference(&x34t).difference(&x34n);
    let w1t: VertexSet = w1.iter().filter(|&u| has_nb(u, t(2))).collect();
    for (name, s) in [("X34T", &x34t), ("X34N", &x34n), ("X340", &x34_0), ("W1T", &w1t)] {
        if !s.is_empty() {
            provenance.sets.insert(name.into(), s.clone());
        }
    }
    if x34n.is_empty() {
        if !p.a.is_empty() {
            return Err(no_branch("c5_only", &hole, "belt case with A non-empty"));
        }
        let side2 = with(v(2), t(2)).union(x12).union(w1);
        let side3 = with(v(3), t(3)).union(x34);
        let (q2, r2) = split_universal(g, &side2);
        let (q3, r3) = split_universal(g, &side3);
        let parts = BeltParts { q1: with(v(1), t(1)), q2, q3, q4: with(v(4), t(4)), q5: with(v(5), t(5)), r2, r3 };
        return Ok(StructureCertificate { kind: CertKind::Belt(parts), provenance });
    }
    let q = with(v(1), t(1));
    let b = [v(3), v(4)].into_iter().collect::<VertexSet>().union(t(3)).union(t(4)).union(&x34t).union(&x34n);
    let m = [v(2), v(5)].into_iter().collect::<VertexSet>().union(t(2)).union(t(5)).union(x12).union(w1);
    let parts = assemble_boiler(g, q, p.a.clone(), b, x34_0, m).map_err(|e| no_branch("c5_only", &hole, e.to_string()))?;
    Ok(StructureCertificate { kind: CertKind::Boiler(parts), provenance })
}

/// (universal vertices of G[s], the rest).
fn split_universal(g: &Graph, s: &VertexSet) -> (VertexSet, VertexSet) {
    let u: VertexSet = s.iter().filter(|&v| g.neighbors_in(v, s).len() + 1 == s.len()).collect();
    let rest = s.difference(&u);
    (u, rest)
}

/// Blocks, b*, m* and the ordering data for a boiler given its five sets.
///
/// Blocks are the finest grouping of components of G[M] whose B-neighborhoods
/// meet; blocks A is complete to come first, the rest by how many A-vertices
/// are complete to them, and the block of b* (the smallest B-vertex with no
/// A-neighbor) last.
pub fn assemble_boiler(
    g: &Graph,
    q: VertexSet,
    a: VertexSet,
    b: VertexSet,
    l: VertexSet,
    m: VertexSet,
) -> Result<BoilerParts, Violation> {
    let comps = g.components_within(&m.to_bits(g.n()));
    let nbs: Vec<VertexSet> = comps.iter().map(|c| c.iter().flat_map(|v| g.neighbors_in(v, &b).into_vec()).collect()).collect();
    let mut group: Vec<usize> = (0..comps.len()).collect();
    fn find(group: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while group[r] != r {
            r = group[r];
        }
        group[i] = r;
        r
    }
    for i in 0..comps.len() {
        for j in i + 1..comps.len() {
            if !nbs[i].is_disjoint(&nbs[j]) {
                let (ri, rj) = (find(&mut group, i), find(&mut group, j));
                group[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut blocks: Vec<(VertexSet, VertexSet)> = Vec::new();
    let mut slot = vec![usize::MAX; comps.len()];
    for i in 0..comps.len() {
        let r = find(&mut group, i);
        if slot[r] == usize::MAX {
            slot[r] = blocks.len();
            blocks.push((VertexSet::new(), VertexSet::new()));
        }
        let e = &mut blocks[slot[r]];
        e.0 = e.0.union(&comps[i]);
        e.1 = e.1.union(&nbs[i]);
    }
    let b_star = b
        .iter()
        .find(|&v| g.neighbors_in(v, &a).is_empty())
        .ok_or_else(|| Violation::new("boiler.derived.b_star", []))?;
    let full = |bl: &(VertexSet, VertexSet)| {
        let s = bl.0.union(&bl.1);
        a.iter().filter(|&v| g.neighbors_in(v, &s).len() == s.len()).count()
    };
    blocks.sort_by_key(|bl| (bl.1.contains(b_star), std::cmp::Reverse(full(bl)), bl.0.first()));
    let k = blocks.len();
    let (m_blocks, b_blocks): (Vec<VertexSet>, Vec<VertexSet>) = blocks.into_iter().unzip();
    let m_star = g
        .neighbors_in(b_star, &m_blocks[k - 1])
        .first()
        .ok_or_else(|| Violation::new("boiler.derived.m_star", [b_star]))?;
    let refinement = if g.is_clique(l.as_slice()) {
        None
    } else {
        let (gl, map) = g.induced_subgraph(l.as_slice()).expect("in range");
        let u = detect::universal_vertices(&gl).map(|v| map[v]);
        let non_u = l.difference(&u);
        let a_l = a.iter().filter(|&v| !g.neighbors_in(v, &l).is_empty()).collect();
        let a_l_prime = a.iter().filter(|&v| !g.neighbors_in(v, &non_u).is_empty()).collect();
        let whole: Vec<VertexSet> = (0..k).map(|i| m_blocks[i].union(&b_blocks[i])).collect();
        let prefix: Vec<(usize, usize)> = a
            .iter()
            .map(|v| (v, whole.iter().take_while(|s| g.neighbors_in(v, s).len() == s.len()).count()))
            .collect();
        let j = (3..=k).find(|&i| prefix.iter().any(|&(_, p)| p < i)).unwrap_or(k + 1);
        Some(BoilerRefinement { u, a_l, a_l_prime, j, prefix })
    };
    Ok(BoilerParts { q, a, b, l, m, k, m_blocks, b_blocks, b_star, m_star, refinement })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn small_cases() {
        assert_eq!(classify(&named::complete(5)).unwrap().kind, CertKind::UniversalVertex { vertex: 0 });
        assert_eq!(classify(&named::bowtie()).unwrap().kind.tag(), "CliqueCutset");
        assert_eq!(classify(&named::path(2)).unwrap().kind.tag(), "ChordalLeaf");
        assert!(matches!(classify(&named::cycle(4)), Err(ClassifyError::NotMember(_))));
    }

    #[test]
    fn f1_is_a_band() {
        let c = classify(&named::f1()).unwrap();
        assert_eq!(c.kind.tag(), "Band");
        assert_eq!(c.provenance.branch, "f1_present");
    }

    #[test]
    fn special_graphs() {
        let cases = [
            (named::petersen(), "c6_present"),
            (named::h2(), "c6_present"),
            (named::h3(), "c6_present"),
            (named::h4(), "c6_present"),
            (named::h5(), "f2_present"),
            (named::f3(), "f3_present"),
            (named::fkl(1, 1), "f2_present"),
            (named::fkl(2, 3), "f2_present"),
            (named::c5(), "c5_only"),
        ];
        for (g, branch) in cases {
            let c = classify(&g).unwrap();
            assert_eq!(c.kind.tag(), "Blowup", "{branch}");
            assert_eq!(c.provenance.branch, branch);
        }
    }
}
