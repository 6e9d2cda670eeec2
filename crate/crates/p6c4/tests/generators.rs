use p6c4::detect::is_p6c4_free;
use p6c4::generators::*;
use p6c4::graph::{Graph, VertexSet};
use p6c4::oracle::exact_clique;
use p6c4::structure::{
    assemble_boiler, classify, validate_band, validate_belt, validate_boiler, validate_certificate, BaseGraph,
    BeltParts, CertKind,
};
use proptest::prelude::*;

fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

/// Max over base cliques (brute-force subsets) of the summed bag sizes.
fn blowup_omega_by_subsets(h: &Graph, sizes: &[usize]) -> usize {
    let n = h.n();
    (0u32..1 << n)
        .filter(|m| {
            let s: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
            s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| h.has_edge(u, v)))
        })
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).map(|i| sizes[i]).sum())
        .max()
        .unwrap_or(0)
}

#[test]
fn unit_bags_copy_the_base() {
    for base in corpus_bases() {
        let h = base.graph();
        let (g, _) = gen_blowup(&base, &vec![1; h.n()]).unwrap();
        assert_eq!(g.edges(), h.without_labels().edges());
    }
}

#[test]
fn band_collapses_to_c5() {
    // Singleton parts, empty R, graded pairs complete: the band is C5.
    let mut hits = 0;
    for seed in 0..100 {
        let (g, p) = gen_band(seed, 1).unwrap();
        if p.r2.is_empty() && p.r3.is_empty() && g.m() == 5 {
            assert!(g.vertices().all(|v| g.degree(v) == 2));
            assert!(matches!(classify(&g).unwrap().kind, CertKind::Blowup(_)));
            hits += 1;
        }
    }
    assert!(hits > 0);
}

#[test]
fn planted_band_violation_is_named() {
    let (g, mut p) = gen_band(3, 3).unwrap();
    validate_band(&g, &p).unwrap();
    // Move a Q5 vertex into Q2: Q5 is complete to Q1 while Q2 may not be,
    // and Q5 is anticomplete to Q3 while Q2 is complete to it.
    let v = p.q5.first().unwrap();
    p.q5 = p.q5.difference(&set(&[v]));
    p.q2.insert(v);
    let err = validate_band(&g, &p).unwrap_err();
    assert!(!err.clause.is_empty());
}

#[test]
fn minimal_belt() {
    // q1 q4 q5 | Q2 = {a2, b2} | Q3 = {a3, b3} | R2 = {r, s} | R3 = {t, u}
    let (q1, q4, q5, a2, b2, a3, b3, r, s, t, u) = (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10);
    let mut e = vec![(a2, b2), (a3, b3), (q1, q5), (q4, q5)];
    for x in [a2, b2, r, s] {
        e.push((q1, x));
    }
    for x in [a3, b3, t, u] {
        e.push((q4, x));
    }
    for x in [a2, b2] {
        e.extend([(x, r), (x, s), (x, a3), (x, b3)]);
    }
    for x in [a3, b3] {
        e.extend([(x, t), (x, u)]);
    }
    e.extend([(r, a3), (s, b3), (t, a2), (u, b2)]);
    let g = Graph::new(11, &e).unwrap();
    let p = BeltParts {
        q1: set(&[q1]),
        q2: set(&[a2, b2]),
        q3: set(&[a3, b3]),
        q4: set(&[q4]),
        q5: set(&[q5]),
        r2: set(&[r, s]),
        r3: set(&[t, u]),
    };
    validate_belt(&g, &p).unwrap();
}

#[test]
fn minimal_boiler() {
    // k = 3 singleton blocks (m_i, b_i); A = {a1, a2} complete to blocks 1
    // and 2; L is the path c1 - w - c2 with c1 ~ a1, c2 ~ a2, w ~ a1, a2.
    let (q, a1, a2) = (0, 1, 2);
    let (m, b) = ([3, 4, 5], [6, 7, 8]);
    let (c1, w, c2) = (9, 10, 11);
    let mut e = vec![(q, a1), (q, a2), (a1, a2), (b[0], b[1]), (b[0], b[2]), (b[1], b[2])];
    for i in 0..3 {
        e.extend([(q, m[i]), (m[i], b[i])]);
    }
    for a in [a1, a2] {
        e.extend([(a, m[0]), (a, b[0]), (a, m[1]), (a, b[1]), (a, w)]);
    }
    for x in b {
        e.extend([(x, c1), (x, w), (x, c2)]);
    }
    e.extend([(c1, w), (w, c2), (c1, a1), (c2, a2)]);
    let g = Graph::new(12, &e).unwrap();
    is_p6c4_free(&g).unwrap();
    let parts = assemble_boiler(&g, set(&[q]), set(&[a1, a2]), set(&b), set(&[c1, w, c2]), set(&m)).unwrap();
    validate_boiler(&g, &parts).unwrap();
}

#[test]
fn boiler_rejects_two_blocks() {
    assert!(matches!(generate(&GenSpec::Boiler { seed: 0, k: 2, max_part: 2 }), Err(GenError::Params(_))));
}

#[test]
fn random_small_cases() {
    let k1 = gen_random_p6c4free(1, 9, SampleStrategy::Structured).unwrap();
    assert_eq!((k1.n(), k1.m()), (1, 0));
    for seed in 0..20 {
        let g = gen_random_p6c4free(5, seed, SampleStrategy::Rejection).unwrap();
        assert_eq!(g.n(), 5);
        is_p6c4_free(&g).unwrap();
    }
    assert!(gen_random_p6c4free(11, 0, SampleStrategy::Rejection).is_err());
    assert!(gen_random_p6c4free(0, 0, SampleStrategy::Structured).is_err());
}

#[test]
fn glued_bands_split_at_the_top() {
    let (a, _) = gen_band(1, 2).unwrap();
    let (b, _) = gen_band(2, 2).unwrap();
    let ub = add_universal(&b, 1);
    let glued = (0..a.n())
        .map(|v| glue(&a, &[v], &ub, &[b.n()]).unwrap())
        .find(|g| is_p6c4_free(g).is_ok())
        .expect("some vertex of the first band admits the glue");
    let cert = classify(&glued).unwrap();
    assert!(matches!(cert.kind, CertKind::CliqueCutset { .. }));
    validate_certificate(&glued, &cert).unwrap();
}

fn spec_strategy() -> impl Strategy<Value = GenSpec> {
    let bases = corpus_bases();
    prop_oneof![
        (0..bases.len(), any::<u64>()).prop_map(move |(i, s)| {
            let n = bases[i].graph().n();
            let sizes = (0..n).map(|j| (s >> (j % 60)) as usize % 3).collect();
            GenSpec::Blowup { base: bases[i].name(), sizes }
        }),
        (0..=3usize, 0..=3usize).prop_map(|(k, l)| GenSpec::Fkl { k, l, sizes: None }),
        (1..=3usize).prop_map(|q| GenSpec::Tight { q }),
        (any::<u64>(), 1..=3usize).prop_map(|(seed, max_part)| GenSpec::Band { seed, max_part }),
        (any::<u64>(), 1..=3usize).prop_map(|(seed, max_part)| GenSpec::Belt { seed, max_part }),
        (any::<u64>(), 3..=4usize, 1..=2usize).prop_map(|(seed, k, max_part)| GenSpec::Boiler { seed, k, max_part }),
        (1..=10usize, any::<u64>()).prop_map(|(n, seed)| GenSpec::RandomP6c4 { n, seed, strategy: SampleStrategy::Rejection }),
        (1..=25usize, any::<u64>()).prop_map(|(n, seed)| GenSpec::RandomP6c4 { n, seed, strategy: SampleStrategy::Structured }),
        (any::<u64>(), 1..=2usize).prop_map(|(seed, depth)| GenSpec::Glued { seed, depth }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn outputs_are_members_and_deterministic(spec in spec_strategy()) {
        let a = generate(&spec).unwrap();
        prop_assert!(is_p6c4_free(&a.graph).is_ok());
        if let Some(c) = &a.certificate {
            prop_assert!(validate_certificate(&a.graph, c).is_ok());
        }
        let b = generate(&spec).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn blowup_omega_matches_oracle(i in 0..7usize, sizes in prop::collection::vec(0..=3usize, 10)) {
        let base = corpus_bases()[i].clone();
        let h = base.graph();
        let sizes = &sizes[..h.n()];
        let (g, _) = gen_blowup(&base, sizes).unwrap();
        prop_assert_eq!(g.n(), sizes.iter().sum::<usize>());
        prop_assert_eq!(exact_clique(&g).value, blowup_omega_by_subsets(&h, sizes));
    }
}

#[test]
fn base_names_parse() {
    for b in corpus_bases().into_iter().chain([BaseGraph::Fkl { k: 1, l: 2 }]) {
        assert_eq!(BaseGraph::parse(&b.name()), Some(b));
    }
}
