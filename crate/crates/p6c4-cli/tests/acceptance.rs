//! One PASS/FAIL line per acceptance criterion; exits non-zero if any fail.

use p6c4::coloring::{bound54, color, reed_bound};
use p6c4::detect::{self, Special};
use p6c4::generators::{self, corpus_bases, gen_blowup, gen_class_c, tight};
use p6c4::graph::Graph;
use p6c4::named;
use p6c4::oracle::{exact_chromatic, exact_clique, induced_copy_by_subsets};
use p6c4::structure::{classify, match_blowup, match_fkl, validate_blowup, validate_certificate, BaseGraph};
use p6c4::trivially_perfect::build_bamboo;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use std::process::Command;
use std::time::Instant;

struct Line {
    id: usize,
    pass: bool,
}

fn report(id: usize, pass: bool, text: String) -> Line {
    println!("{} {id}: {text}", if pass { "PASS" } else { "FAIL" });
    Line { id, pass }
}

fn delta(g: &Graph) -> usize {
    g.vertices().map(|v| g.degree(v)).max().unwrap_or(0)
}

fn c1() -> Line {
    let t = Instant::now();
    let (g, _) = gen_blowup(&BaseGraph::H1, &[2; 10]).unwrap();
    let (chi, omega) = (exact_chromatic(&g).value, exact_clique(&g).value);
    let r = color(&g).unwrap();
    let dt = t.elapsed().as_secs_f64();
    let pass = chi == 5 && omega == 4 && r.coloring.num_colors == 5 && r.report.bound54 == 5 && dt < 1.0;
    report(
        1,
        pass,
        format!(
            "Petersen 2-blowup: oracle chi={chi} omega={omega}, chi_alg={} bound54={} in {dt:.3}s (< 1 s)",
            r.coloring.num_colors, r.report.bound54
        ),
    )
}

fn c2() -> Line {
    let t = Instant::now();
    let (g, _) = gen_blowup(&BaseGraph::F3, &[2; 9]).unwrap();
    let chi = exact_chromatic(&g).value;
    let r = color(&g).unwrap();
    let dt = t.elapsed().as_secs_f64();
    let pass = chi == 7 && r.report.bound54 == 8 && r.coloring.num_colors <= 8 && dt < 10.0;
    report(
        2,
        pass,
        format!(
            "F3 2-blowup (n={}): oracle chi={chi}, bound54={}, chi_alg={} in {dt:.3}s (< 10 s)",
            g.n(),
            r.report.bound54,
            r.coloring.num_colors
        ),
    )
}

fn c3() -> Line {
    let t = Instant::now();
    let mut pass = true;
    let mut parts = Vec::new();
    for q in 1..=3 {
        let (g, _) = tight(q);
        let chi = exact_chromatic(&g).value;
        let omega = exact_clique(&g).value;
        let want = (5 * q).div_ceil(2);
        let (b, reed) = (bound54(omega), reed_bound(delta(&g), omega));
        let alg = color(&g).unwrap().coloring.num_colors;
        pass &= chi == want && b == want && reed == want && alg == want;
        parts.push(format!("q={q}: chi={chi} bound54={b} reed={reed} chi_alg={alg}"));
    }
    let dt = t.elapsed().as_secs_f64();
    pass &= dt < 60.0;
    report(3, pass, format!("tight C5 q-blowups: {} in {dt:.3}s (< 60 s)", parts.join("; ")))
}

fn c4() -> Line {
    let t = Instant::now();
    let (mut kept, mut sampled, mut v54, mut vreed) = (0, 0u64, 0, 0);
    let mut seed = 0u64;
    while kept < 10_000 {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        seed += 1;
        let n = r.gen_range(1..=9);
        let p = r.gen_range(0.1..0.9);
        let g = Graph::from_fn(n, |_, _| r.gen_bool(p));
        sampled += 1;
        if detect::is_p6c4_free(&g).is_err() {
            continue;
        }
        kept += 1;
        let chi = exact_chromatic(&g).value;
        let omega = exact_clique(&g).value;
        v54 += usize::from(chi > bound54(omega));
        vreed += usize::from(chi > reed_bound(delta(&g), omega));
    }
    report(
        4,
        v54 == 0 && vreed == 0,
        format!(
            "{kept} (P6,C4)-free G(n,p) graphs, n <= 9 ({sampled} sampled): {v54} violations of chi <= ceil(5w/4), {vreed} of the Reed bound, in {:.1}s",
            t.elapsed().as_secs_f64()
        ),
    )
}

fn c5() -> Line {
    let t = Instant::now();
    let mut families: Vec<(String, Vec<Graph>)> = Vec::new();
    for base in corpus_bases() {
        let h = base.graph().n();
        let gs = (0..500u64)
            .map(|s| {
                let mut r = ChaCha8Rng::seed_from_u64(s);
                let sizes: Vec<usize> = (0..h).map(|_| r.gen_range(1..=3)).collect();
                gen_blowup(&base, &sizes).unwrap().0
            })
            .collect();
        families.push((format!("blowup {}", base.name()), gs));
    }
    let fkl = (0..500u64)
        .map(|s| {
            let (k, l) = ((s % 4) as usize, (s / 4 % 4) as usize);
            let mut r = ChaCha8Rng::seed_from_u64(s);
            let sizes: Vec<usize> = (0..named::FklIndex { k, l }.n()).map(|_| r.gen_range(1..=2)).collect();
            generators::gen_fkl(k, l, Some(&sizes)).unwrap().0
        })
        .collect();
    families.push(("F_{k,l}".into(), fkl));
    families.push(("band".into(), (0..500).map(|s| generators::gen_band(s, 3).unwrap().0).collect()));
    families.push(("belt".into(), (0..500).map(|s| generators::gen_belt(s, 3).unwrap().0).collect()));
    families.push((
        "boiler".into(),
        (0..500).map(|s| generators::gen_boiler(s, 3 + (s as usize % 2), 3).unwrap().0).collect(),
    ));
    families.push((
        "glued".into(),
        (0..500).map(|s| generators::gen_glued(s, 1 + (s as usize % 2)).unwrap().0).collect(),
    ));
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, gs) in &families {
        let (mut certified, mut fallbacks, mut within) = (0, 0, 0);
        for g in gs {
            if classify(g).is_ok_and(|c| validate_certificate(g, &c).is_ok()) {
                certified += 1;
            }
            if let Ok(r) = color(g) {
                fallbacks += r.fallbacks;
                within += usize::from(r.coloring.num_colors <= r.report.bound54);
            }
        }
        pass &= certified == gs.len() && fallbacks == 0 && within == gs.len();
        parts.push(format!("{name} {certified}/{} certified, {fallbacks} fallbacks", gs.len()));
    }
    report(5, pass, format!("{} in {:.1}s", parts.join("; "), t.elapsed().as_secs_f64()))
}

fn c6() -> Line {
    let t = Instant::now();
    let specials = [
        (Special::F1, named::f1()),
        (Special::F2, named::f2()),
        (Special::F3, named::f3()),
        (Special::TwoP3, named::two_p3()),
        (Special::Dart, named::dart()),
    ];
    let (mut checks, mut mismatches) = (0, Vec::new());
    for seed in 0..200u64 {
        let mut r = ChaCha8Rng::seed_from_u64(1_000_000 + seed);
        let n = r.gen_range(1..=10);
        let p = r.gen_range(0.1..0.9);
        let g = Graph::from_fn(n, |_, _| r.gen_bool(p));
        for k in 1..=7 {
            checks += 1;
            if detect::find_induced_path(&g, k).map(|w| w.vertices) != induced_copy_by_subsets(&g, &named::path(k)) {
                mismatches.push(format!("P{k}@{seed}"));
            }
        }
        for k in 3..=8 {
            checks += 1;
            if detect::find_induced_cycle(&g, k).map(|w| w.vertices) != induced_copy_by_subsets(&g, &named::cycle(k)) {
                mismatches.push(format!("C{k}@{seed}"));
            }
        }
        for (s, pat) in &specials {
            checks += 1;
            let found = detect::find_special(&g, *s);
            let brute = induced_copy_by_subsets(&g, pat);
            if found.as_ref().map(|w| &w.vertices) != brute.as_ref() || found.is_some_and(|w| !w.verify(&g)) {
                mismatches.push(format!("{s:?}@{seed}"));
            }
        }
    }
    report(
        6,
        mismatches.is_empty(),
        format!(
            "detectors vs subset enumeration on 200 graphs, n <= 10: {checks} checks, {} mismatches {:?} in {:.1}s",
            mismatches.len(),
            &mismatches[..mismatches.len().min(5)],
            t.elapsed().as_secs_f64()
        ),
    )
}

fn c7() -> Line {
    let mut bamboo_ok = 0;
    let total_bamboo = 1000;
    for s in 0..total_bamboo {
        let g = gen_class_c(s, 1 + s as usize % 14).unwrap();
        if let Ok(forest) = build_bamboo(&g) {
            let mut edges: Vec<(usize, usize)> = forest.iter().flat_map(|t| t.expand_edges()).collect();
            edges.sort_unstable();
            let covered: usize = forest.iter().map(|t| t.vertices().len()).sum();
            bamboo_ok += usize::from(edges == g.edges() && covered == g.n());
        }
    }
    let mut blowup_ok = 0;
    let mut total_blowup = 0;
    for s in 0..700u64 {
        let mut r = ChaCha8Rng::seed_from_u64(s);
        let bases = corpus_bases();
        let base = &bases[s as usize % bases.len()];
        let sizes: Vec<usize> = (0..base.graph().n()).map(|_| r.gen_range(1..=3)).collect();
        let (g, _) = gen_blowup(base, &sizes).unwrap();
        total_blowup += 1;
        blowup_ok += usize::from(match_blowup(&g, base).is_some_and(|m| validate_blowup(&g, &m).is_ok()));
    }
    for s in 0..300u64 {
        let (k, l) = ((s % 4) as usize, (s / 4 % 4) as usize);
        let mut r = ChaCha8Rng::seed_from_u64(s);
        let sizes: Vec<usize> = (0..named::FklIndex { k, l }.n()).map(|_| r.gen_range(1..=2)).collect();
        let (g, _) = generators::gen_fkl(k, l, Some(&sizes)).unwrap();
        total_blowup += 1;
        blowup_ok += usize::from(match_fkl(&g).is_some_and(|m| validate_blowup(&g, &m).is_ok()));
    }
    report(
        7,
        bamboo_ok == total_bamboo as usize && blowup_ok == total_blowup,
        format!("bamboo expansion {bamboo_ok}/{total_bamboo}; blowup -> match {blowup_ok}/{total_blowup}"),
    )
}

fn strip_time(out: &[u8]) -> Vec<Value> {
    String::from_utf8_lossy(out)
        .lines()
        .map(|l| {
            let mut v: Value = serde_json::from_str(l).expect("JSON output");
            v.as_object_mut().expect("object").remove("generated_at");
            v
        })
        .collect()
}

fn c8() -> Line {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_p6c4");
    let mut inputs = Vec::new();
    let specs = [
        vec!["gen", "tight", "--q", "3"],
        vec!["gen", "blowup", "--base", "Petersen", "--sizes", "2,2,2,2,2,2,2,2,2,2"],
        vec!["gen", "band", "--seed", "5"],
        vec!["gen", "belt", "--seed", "6"],
        vec!["gen", "boiler", "--seed", "7", "--k", "4"],
        vec!["gen", "glued", "--seed", "8", "--depth", "2"],
        vec!["gen", "fkl", "--k", "3", "--l", "2"],
    ];
    for (i, args) in specs.iter().enumerate() {
        let path = dir.path().join(format!("g{i}.txt"));
        let st = Command::new(bin).args(args).arg("--out").arg(&path).output().unwrap();
        assert!(st.status.success(), "{args:?}");
        inputs.push(path);
    }
    let manifest = dir.path().join("all.txt");
    std::fs::write(&manifest, inputs.iter().map(|p| format!("{}\n", p.display())).collect::<String>()).unwrap();
    let mut runs = 0;
    let mut diffs = Vec::new();
    let mut stamped = true;
    for p in &inputs {
        for cmd in [vec!["decompose"], vec!["color", "--trace"]] {
            let go = || Command::new(bin).args(&cmd).arg(p).output().unwrap();
            let (a, b) = (go(), go());
            runs += 2;
            stamped &= String::from_utf8_lossy(&a.stdout).contains("\"generated_at\"");
            if strip_time(&a.stdout) != strip_time(&b.stdout) || a.status.code() != b.status.code() {
                diffs.push(format!("{cmd:?} {}", p.display()));
            }
        }
    }
    for cmd in ["decompose", "color"] {
        let go = || Command::new(bin).args([cmd, "--batch"]).arg(&manifest).output().unwrap();
        let (a, b) = (go(), go());
        runs += 2;
        if strip_time(&a.stdout) != strip_time(&b.stdout) || strip_time(&a.stdout).len() != inputs.len() {
            diffs.push(format!("{cmd} --batch"));
        }
    }
    report(
        8,
        diffs.is_empty() && stamped,
        format!("{runs} CLI runs on {} inputs: {} differing outputs modulo generated_at {diffs:?}", inputs.len(), diffs.len()),
    )
}

fn main() {
    // `cargo test -- --list` and filters still call the binary.
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let lines = [c1(), c2(), c3(), c4(), c5(), c6(), c7(), c8()];
    let failed: Vec<usize> = lines.iter().filter(|l| !l.pass).map(|l| l.id).collect();
    if failed.is_empty() {
        println!("acceptance: all 8 criteria PASS");
    } else {
        println!("acceptance: FAIL on criteria {failed:?}");
        std::process::exit(1);
    }
}
