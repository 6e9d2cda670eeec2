use super::Violation;
use crate::graph::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

/// Vertices grouped by their neighborhood on an induced C5 v1..v5.
///
/// Index i stands for v_{i+1}: t[i] sees v_i's two hole neighbors and v_i,
/// w[i] sees v_i only, x[i] sees exactly {v_i, v_{i+1}} (indices mod 5).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct C5Partition {
    pub hole: [usize; 5],
    pub a: VertexSet,
    pub t: [VertexSet; 5],
    pub w: [VertexSet; 5],
    pub x: [VertexSet; 5],
    /// Vertices with no neighbor on the hole.
    pub leftover: VertexSet,
}

/// Vertices grouped by their neighborhood on an induced C6 v1..v6.
///
/// a[i] sees v_{i-1}, v_i, v_{i+1}; b[i] sees v_{i-1}..v_{i+2}; d[i] sees
/// v_i and v_{i+3} (so d has three entries).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct C6Partition {
    pub hole: [usize; 6],
    pub s: VertexSet,
    pub a: [VertexSet; 6],
    pub b: [VertexSet; 6],
    pub d: [VertexSet; 3],
    pub l: VertexSet,
}

fn trace(g: &Graph, v: usize, hole: &[usize]) -> u32 {
    hole.iter().enumerate().filter(|(_, &h)| g.has_edge(v, h)).fold(0, |m, (i, _)| m | 1 << i)
}

fn check_hole(g: &Graph, hole: &[usize]) -> Result<(), Violation> {
    let k = hole.len();
    let distinct: VertexSet = hole.iter().copied().collect();
    if distinct.len() != k || hole.iter().any(|&v| v >= g.n()) {
        return Err(Violation::new("hole.invalid", hole.iter().copied()));
    }
    for i in 0..k {
        for j in i + 1..k {
            let want = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(hole[i], hole[j]) != want {
                return Err(Violation::new("hole.invalid", [hole[i], hole[j]]));
            }
        }
    }
    Ok(())
}

/// Mask of hole positions {i + d : d in ds} mod k.
fn arc(k: usize, i: usize, ds: &[usize]) -> u32 {
    ds.iter().fold(0, |m, d| m | 1 << ((i + d) % k))
}

pub fn partition_around_c5(g: &Graph, hole: [usize; 5]) -> Result<C5Partition, Violation> {
    check_hole(g, &hole)?;
    let mut p = C5Partition {
        hole,
        a: VertexSet::new(),
        t: Default::default(),
        w: Default::default(),
        x: Default::default(),
        leftover: VertexSet::new(),
    };
    for v in g.vertices().filter(|v| !hole.contains(v)) {
        let tr = trace(g, v, &hole);
        if tr == 0 {
            p.leftover.insert(v);
        } else if tr == 31 {
            p.a.insert(v);
        } else if let Some(i) = (0..5).find(|&i| tr == arc(5, i, &[4, 0, 1])) {
            p.t[i].insert(v);
        } else if let Some(i) = (0..5).find(|&i| tr == arc(5, i, &[0])) {
            p.w[i].insert(v);
        } else if let Some(i) = (0..5).find(|&i| tr == arc(5, i, &[0, 1])) {
            p.x[i].insert(v);
        } else {
            let mut w = vec![v];
            w.extend(hole.iter().enumerate().filter(|(i, _)| tr >> i & 1 == 1).map(|(_, &h)| h));
            return Err(Violation::new("c5.trace", w));
        }
    }
    Ok(p)
}

pub fn partition_around_c6(g: &Graph, hole: [usize; 6]) -> Result<C6Partition, Violation> {
    check_hole(g, &hole)?;
    let mut p = C6Partition {
        hole,
        s: VertexSet::new(),
        a: Default::default(),
        b: Default::default(),
        d: Default::default(),
        l: VertexSet::new(),
    };
    for v in g.vertices().filter(|v| !hole.contains(v)) {
        let tr = trace(g, v, &hole);
        if tr == 0 {
            p.l.insert(v);
        } else if tr == 63 {
            p.s.insert(v);
        } else if let Some(i) = (0..6).find(|&i| tr == arc(6, i, &[5, 0, 1])) {
            p.a[i].insert(v);
        } else if let Some(i) = (0..6).find(|&i| tr == arc(6, i, &[5, 0, 1, 2])) {
            p.b[i].insert(v);
        } else if let Some(i) = (0..3).find(|&i| tr == arc(6, i, &[0, 3])) {
            p.d[i].insert(v);
        } else {
            let mut w = vec![v];
            w.extend(hole.iter().enumerate().filter(|(i, _)| tr >> i & 1 == 1).map(|(_, &h)| h));
            return Err(Violation::new("c6.trace", w));
        }
    }
    Ok(p)
}

fn clique(g: &Graph, clause: &str, s: &VertexSet) -> Result<(), Violation> {
    match g.first_non_edge(s.as_slice(), s.as_slice()) {
        Some((u, v)) => Err(Violation::new(clause, [u, v])),
        None => Ok(()),
    }
}

fn complete(g: &Graph, clause: &str, a: &VertexSet, b: &VertexSet) -> Result<(), Violation> {
    match g.first_non_edge(a.as_slice(), b.as_slice()) {
        Some((u, v)) => Err(Violation::new(clause, [u, v])),
        None => Ok(()),
    }
}

fn empty(g: &Graph, clause: &str, a: &VertexSet, b: &VertexSet) -> Result<(), Violation> {
    match g.first_edge(a.as_slice(), b.as_slice()) {
        Some((u, v)) => Err(Violation::new(clause, [u, v])),
        None => Ok(()),
    }
}

/// The listed properties of a C5 partition. Items that need C6-freeness or
/// the absence of a clique cutset are checked only when the caller says so.
pub fn check_c5_partition(g: &Graph, p: &C5Partition, c6_free: bool, cutset_free: bool) -> Result<(), Violation> {
    let m = |i: usize| (i + 5) % 5;
    let (t, w, x) = (&p.t, &p.w, &p.x);
    for i in 0..5 {
        clique(g, "c5.a", &p.a.union(&t[i]))?;
        empty(g, "c5.b", &t[i], &t[m(i + 2)])?;
        empty(g, "c5.b", &x[i], &x[m(i + 2)])?;
        empty(g, "c5.b", &w[i], &w[m(i + 1)])?;
        empty(g, "c5.b", &t[i], &w[m(i + 3)].union(&w[m(i + 2)]))?;
        empty(g, "c5.b", &t[i], &x[m(i + 2)])?;
        empty(g, "c5.b", &x[i], &w[i].union(&w[m(i + 1)]))?;
        complete(g, "c5.c", &x[i], &x[m(i + 1)])?;
        complete(g, "c5.c", &w[i], &w[m(i + 2)])?;
        complete(g, "c5.c", &x[i], &w[m(i + 4)].union(&w[m(i + 2)]))?;
        if c6_free {
            for (s1, s2) in [
                (&x[i], &x[m(i + 1)]),
                (&w[i], &w[m(i + 2)]),
                (&x[i], &w[m(i + 4)].union(&w[m(i + 2)])),
            ] {
                if !s1.is_empty() && !s2.is_empty() {
                    return Err(Violation::new("c5.d", [s1.as_slice()[0], s2.as_slice()[0]]));
                }
            }
        }
        if cutset_free {
            complete(g, "c5.e", &t[i], &w[i])?;
        }
    }
    if cutset_free && !p.leftover.is_empty() {
        return Err(Violation::new("c5.e", p.leftover.iter()));
    }
    Ok(())
}

/// The listed properties of a C6 partition.
pub fn check_c6_partition(g: &Graph, p: &C6Partition) -> Result<(), Violation> {
    let m = |i: usize| i % 6;
    let d = |i: usize| &p.d[i % 3];
    let (a, b) = (&p.a, &p.b);
    clique(g, "c6.b", &p.s)?;
    for i in 0..6 {
        clique(g, "c6.b", &a[i].union(&b[i]).union(&b[m(i + 5)]))?;
        clique(g, "c6.b", d(i))?;
        complete(g, "c6.c", &a[i], &a[m(i + 1)].union(&a[m(i + 5)]).union(d(i)))?;
        complete(g, "c6.c", &b[i], &b[m(i + 1)].union(&b[m(i + 3)]).union(&b[m(i + 5)]).union(d(i + 2)))?;
        complete(g, "c6.c", &p.s, &a[i].union(&b[i]).union(d(i)))?;
        let far = a[m(i + 3)].union(&b[m(i + 2)]).union(&b[m(i + 3)]).union(d(i + 1)).union(d(i + 2));
        empty(g, "c6.d", &a[i], &far)?;
        empty(g, "c6.d", &b[i], &b[m(i + 2)].union(&b[m(i + 4)]))?;
        empty(g, "c6.d", d(i), d(i + 1))?;
        if !b[i].is_empty() {
            if let Some(v) = d(i).union(d(i + 1)).first() {
                return Err(Violation::new("c6.e", [b[i].as_slice()[0], v]));
            }
            if !b[m(i + 1)].is_empty() {
                if let Some(v) = b[m(i + 3)].union(&b[m(i + 4)]).first() {
                    return Err(Violation::new("c6.f", [b[i].as_slice()[0], b[m(i + 1)].as_slice()[0], v]));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn f(i: usize) -> VertexSet {
        VertexSet::from([i])
    }

    #[test]
    fn f1_traces() {
        let p = partition_around_c5(&named::f1(), [0, 1, 2, 3, 4]).unwrap();
        assert_eq!((p.x[0].clone(), p.x[1].clone(), p.x[2].clone()), (f(5), f(6), f(7)));
    }

    #[test]
    fn f2_traces() {
        let p = partition_around_c5(&named::f2(), [0, 1, 2, 3, 4]).unwrap();
        assert_eq!((p.t[4].clone(), p.x[0].clone(), p.x[2].clone()), (f(7), f(5), f(6)));
    }

    #[test]
    fn bare_holes() {
        let p = partition_around_c5(&named::c5(), [0, 1, 2, 3, 4]).unwrap();
        assert!(p.a.is_empty() && p.leftover.is_empty());
        assert!(p.t.iter().chain(&p.w).chain(&p.x).all(VertexSet::is_empty));
        let p = partition_around_c6(&named::cycle(6), [0, 1, 2, 3, 4, 5]).unwrap();
        assert!(p.a.iter().chain(&p.b).chain(&p.d).all(VertexSet::is_empty));
        assert!(partition_around_c5(&named::cycle(6), [0, 1, 2, 3, 4]).is_err());
    }

    #[test]
    fn f3_traces() {
        let p = partition_around_c6(&named::f3(), [0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!((p.a[1].clone(), p.a[3].clone(), p.a[5].clone()), (f(6), f(7), f(8)));
        check_c6_partition(&named::f3(), &p).unwrap();
    }

    #[test]
    fn petersen_c6_has_d_sets() {
        let g = named::petersen();
        let h = crate::detect::find_induced_cycle(&g, 6).unwrap().vertices;
        let p = partition_around_c6(&g, h.try_into().unwrap()).unwrap();
        assert!(p.b.iter().all(VertexSet::is_empty));
        assert!(p.d.iter().any(|d| !d.is_empty()));
        check_c6_partition(&g, &p).unwrap();
    }
}
