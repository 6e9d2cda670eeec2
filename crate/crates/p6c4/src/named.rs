//! Small named graphs: paths, cycles, the forbidden patterns F1-F3, the
//! special graphs H1-H5, F_{k,l}, and a few test fixtures.
//!
//! Vertex order doubles as the witness order used by the detectors: for the
//! patterns built on a hole, the hole comes first, in cyclic order.

use crate::graph::Graph;

fn labeled(n: usize, edges: &[(usize, usize)], labels: Vec<String>) -> Graph {
    Graph::new(n, edges)
        .and_then(|g| g.with_labels(labels))
        .expect("named graph is well formed")
}

fn names(prefix: &str, range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

fn cycle_edges(k: usize) -> Vec<(usize, usize)> {
    (0..k).map(|i| (i, (i + 1) % k)).collect()
}

pub fn path(k: usize) -> Graph {
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::new(k, &edges).expect("path")
}

pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3, "cycles need at least three vertices");
    Graph::new(k, &cycle_edges(k)).expect("cycle")
}

pub fn complete(k: usize) -> Graph {
    Graph::from_fn(k, |_, _| true)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_fn(a + b, |u, v| (u < a) != (v < a))
}

/// Two disjoint P3's.
pub fn two_p3() -> Graph {
    Graph::new(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).expect("2P3")
}

/// Vertices a,b,c,d,e with edges ab, bc, cd, da, ac, ce.
pub fn dart() -> Graph {
    let l = ["a", "b", "c", "d", "e"].map(String::from).to_vec();
    labeled(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (2, 4)], l)
}

pub fn p3() -> Graph {
    let l = ["x", "m", "y"].map(String::from).to_vec();
    labeled(3, &[(0, 1), (1, 2)], l)
}

/// Two triangles sharing vertex 2.
pub fn bowtie() -> Graph {
    Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).expect("bowtie")
}

pub fn c5() -> Graph {
    labeled(5, &cycle_edges(5), names("v", 1..=5))
}

/// Outer cycle 0..4, spokes i ~ i+5, inner pentagram 5+i ~ 5+(i+2)%5.
pub fn petersen() -> Graph {
    let mut e = cycle_edges(5);
    for i in 0..5 {
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &e).expect("petersen")
}

/// The Petersen graph labeled z, a, b, c, w1..w6: w's form a hole, a ~ w1,w4,
/// b ~ w2,w5, c ~ w3,w6, and z ~ a,b,c.
pub fn h1() -> Graph {
    let mut l: Vec<String> = ["z", "a", "b", "c"].map(String::from).to_vec();
    l.extend(names("w", 1..=6));
    let w = |i: usize| 3 + i;
    let mut e: Vec<_> = (1..=6).map(|i| (w(i), w(i % 6 + 1))).collect();
    e.extend([(0, 1), (0, 2), (0, 3)]);
    e.extend([(1, w(1)), (1, w(4)), (2, w(2)), (2, w(5)), (3, w(3)), (3, w(6))]);
    labeled(10, &e, l)
}

/// Hole v1..v6; a ~ v6,v1,v2,v3; b ~ v3,v4,v5,v6; c ~ v3,v6; a,b,c a triangle.
pub fn h2() -> Graph {
    let mut l = names("v", 1..=6);
    l.extend(["a", "b", "c"].map(String::from));
    let mut e = cycle_edges(6);
    let (a, b, c) = (6, 7, 8);
    e.extend([(a, 5), (a, 0), (a, 1), (a, 2)]);
    e.extend([(b, 2), (b, 3), (b, 4), (b, 5)]);
    e.extend([(c, 2), (c, 5), (a, b), (a, c), (b, c)]);
    labeled(9, &e, l)
}

/// Square of the 9-cycle, v1..v9.
pub fn h3() -> Graph {
    let e: Vec<_> = (0..9).flat_map(|i| [(i, (i + 1) % 9), (i, (i + 2) % 9)]).collect();
    labeled(9, &e, names("v", 1..=9))
}

/// Hole v1..v6 plus b1 ~ v6,v1,v2,v3; b2 ~ v1..v4; b3 ~ v2..v5; b1b2, b2b3.
pub fn h4() -> Graph {
    let mut l = names("v", 1..=6);
    l.extend(names("b", 1..=3));
    let mut e = cycle_edges(6);
    e.extend([(6, 5), (6, 0), (6, 1), (6, 2)]);
    e.extend([(7, 0), (7, 1), (7, 2), (7, 3)]);
    e.extend([(8, 1), (8, 2), (8, 3), (8, 4)]);
    e.extend([(6, 7), (7, 8)]);
    labeled(9, &e, l)
}

/// Hole v1..v5 plus a stable set t1..t5 with t_i ~ v_{i-1}, v_i, v_{i+1}.
pub fn h5() -> Graph {
    let mut l = names("v", 1..=5);
    l.extend(names("t", 1..=5));
    let mut e = cycle_edges(5);
    for i in 0..5 {
        for d in [4, 0, 1] {
            e.push((5 + i, (i + d) % 5));
        }
    }
    labeled(10, &e, l)
}

/// Hole v1..v5; x ~ v1,v2; y ~ v2,v3; z ~ v3,v4; xy and yz edges.
pub fn f1() -> Graph {
    let mut l = names("v", 1..=5);
    l.extend(["x", "y", "z"].map(String::from));
    let mut e = cycle_edges(5);
    e.extend([(5, 0), (5, 1), (6, 1), (6, 2), (7, 2), (7, 3), (5, 6), (6, 7)]);
    labeled(8, &e, l)
}

/// Hole v1..v5; x ~ v1,v2; y ~ v3,v4; t ~ v4,v5,v1,x,y.
pub fn f2() -> Graph {
    let mut l = names("v", 1..=5);
    l.extend(["x", "y", "t"].map(String::from));
    let mut e = cycle_edges(5);
    e.extend([(5, 0), (5, 1), (6, 2), (6, 3)]);
    e.extend([(7, 3), (7, 4), (7, 0), (7, 5), (7, 6)]);
    labeled(8, &e, l)
}

/// Hole v1..v6; x ~ v1,v2,v3; y ~ v3,v4,v5; z ~ v5,v6,v1; x,y,z a triangle.
pub fn f3() -> Graph {
    let mut l = names("v", 1..=6);
    l.extend(["x", "y", "z"].map(String::from));
    let mut e = cycle_edges(6);
    e.extend([(6, 0), (6, 1), (6, 2), (7, 2), (7, 3), (7, 4), (8, 4), (8, 5), (8, 0)]);
    e.extend([(6, 7), (7, 8), (6, 8)]);
    labeled(9, &e, l)
}

/// Vertex indices inside F_{k,l}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FklIndex {
    pub k: usize,
    pub l: usize,
}

impl FklIndex {
    pub fn a(&self, i: usize) -> usize {
        i
    }
    pub fn u(&self, i: usize) -> usize {
        self.k + i
    }
    pub fn b(&self, j: usize) -> usize {
        2 * self.k + 1 + j
    }
    pub fn w(&self, j: usize) -> usize {
        2 * self.k + 1 + self.l + j
    }
    pub fn x(&self) -> usize {
        2 * self.k + 2 * self.l + 2
    }
    pub fn y(&self) -> usize {
        self.x() + 1
    }
    pub fn z(&self) -> usize {
        self.x() + 2
    }
    pub fn n(&self) -> usize {
        2 * self.k + 2 * self.l + 5
    }
}

/// F_{k,l}: cliques A = {a0..ak}, B = {b0..bl}; stable U = {u1..uk},
/// W = {w1..wl} with a_i u_i and b_j w_j edges; N(x) = A u U u W u {y},
/// N(y) = B u U u W u {x}, N(z) = A u B. Order: a's, u's, b's, w's, x, y, z.
pub fn fkl(k: usize, l: usize) -> Graph {
    let ix = FklIndex { k, l };
    let mut labels = names("a", 0..=k);
    labels.extend(names("u", 1..=k));
    labels.extend(names("b", 0..=l));
    labels.extend(names("w", 1..=l));
    labels.extend(["x", "y", "z"].map(String::from));
    let mut e = Vec::new();
    for i in 0..=k {
        for j in i + 1..=k {
            e.push((ix.a(i), ix.a(j)));
        }
        e.push((ix.x(), ix.a(i)));
        e.push((ix.z(), ix.a(i)));
    }
    for i in 0..=l {
        for j in i + 1..=l {
            e.push((ix.b(i), ix.b(j)));
        }
        e.push((ix.y(), ix.b(i)));
        e.push((ix.z(), ix.b(i)));
    }
    for i in 1..=k {
        e.extend([(ix.a(i), ix.u(i)), (ix.x(), ix.u(i)), (ix.y(), ix.u(i))]);
    }
    for j in 1..=l {
        e.extend([(ix.b(j), ix.w(j)), (ix.x(), ix.w(j)), (ix.y(), ix.w(j))]);
    }
    e.push((ix.x(), ix.y()));
    labeled(ix.n(), &e, labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(g: &Graph) -> Vec<usize> {
        let mut d: Vec<_> = g.vertices().map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn sizes() {
        assert_eq!((petersen().n(), petersen().m()), (10, 15));
        assert_eq!((h1().n(), h1().m()), (10, 15));
        assert_eq!(degrees(&h1()), vec![3; 10]);
        assert_eq!((h2().n(), h2().m()), (9, 19));
        assert_eq!((h3().n(), h3().m()), (9, 18));
        assert_eq!((h4().n(), h4().m()), (9, 20));
        assert_eq!((h5().n(), h5().m()), (10, 20));
        assert_eq!((f1().n(), f1().m()), (8, 13));
        assert_eq!((f2().n(), f2().m()), (8, 14));
        assert_eq!((f3().n(), f3().m()), (9, 18));
        assert_eq!(fkl(2, 2).n(), 13);
        assert_eq!(fkl(0, 0).n(), 5);
    }

    #[test]
    fn fkl_neighborhoods() {
        let g = fkl(2, 1);
        let ix = FklIndex { k: 2, l: 1 };
        let nz: Vec<String> = g.neighbors(ix.z()).iter().map(|&v| g.label(v)).collect();
        assert_eq!(nz, ["a0", "a1", "a2", "b0", "b1"]);
        let nx: Vec<String> = g.neighbors(ix.x()).iter().map(|&v| g.label(v)).collect();
        assert_eq!(nx, ["a0", "a1", "a2", "u1", "u2", "w1", "y"]);
        assert_eq!(g.vertex("w1"), Some(ix.w(1)));
    }
}
