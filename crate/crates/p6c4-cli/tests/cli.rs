use p6c4::io::{to_graph6, write_edge_list};
use p6c4::named;
use p6c4::Graph;
use p6c4_cli::{run, Outcome, INTERNAL, NOT_IN_CLASS, OK, USAGE};
use serde_json::Value;
use std::path::{Path, PathBuf};

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("p6c4").chain(args.iter().copied()))
}

fn json(o: &Outcome) -> Value {
    serde_json::from_str(o.stdout.trim()).unwrap_or_else(|e| panic!("{e}: {:?}", o.stdout))
}

fn write(dir: &Path, name: &str, g: &Graph) -> PathBuf {
    let p = dir.join(name);
    let text = if name.ends_with(".g6") { to_graph6(g) + "\n" } else { write_edge_list(g) };
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn recognize_examples() {
    let d = tempfile::tempdir().unwrap();
    let c4 = write(d.path(), "c4.txt", &named::cycle(4));
    let o = cli(&["recognize", s(&c4), "--text"]);
    assert_eq!(o.code, OK);
    assert!(o.stdout.starts_with("not C4-free"), "{}", o.stdout);
    let v = json(&cli(&["recognize", s(&c4)]));
    assert_eq!(v["member"], false);
    assert_eq!(v["witness"]["vertices"].as_array().unwrap().len(), 4);

    let (t2, _) = p6c4::generators::tight(2);
    let t2 = write(d.path(), "t2.g6", &t2);
    assert_eq!(cli(&["recognize", s(&t2), "--text"]).stdout.trim(), "(P6,C4)-free");

    let bad = d.path().join("bad.txt");
    std::fs::write(&bad, "3 2\n0 1\n1 two\n").unwrap();
    let o = cli(&["recognize", s(&bad)]);
    assert_eq!(o.code, USAGE);
    assert!(o.stderr.contains("line 3"), "{}", o.stderr);
}

#[test]
fn decompose_examples() {
    let d = tempfile::tempdir().unwrap();
    let tag = |g: &Graph, name: &str| {
        let p = write(d.path(), name, g);
        let o = cli(&["decompose", s(&p)]);
        assert_eq!(o.code, OK, "{}", o.stderr);
        let v = json(&o);
        assert_eq!(v["schema"], 1);
        v
    };
    assert_eq!(tag(&named::f1(), "f1.txt")["tag"], "Band");
    let pet = tag(&named::petersen(), "pet.txt");
    assert_eq!((pet["tag"].as_str(), pet["certificate"]["base"]["name"].as_str()), (Some("Blowup"), Some("H1")));
    assert_eq!(tag(&named::complete(5), "k5.txt")["tag"], "UniversalVertex");

    let p = write(d.path(), "c4.txt", &named::cycle(4));
    let o = cli(&["decompose", s(&p)]);
    assert_eq!(o.code, NOT_IN_CLASS);
    assert_eq!(json(&o)["witness"]["kind"], "C4");
    let p = write(d.path(), "e2.txt", &Graph::empty(3));
    assert_eq!(cli(&["decompose", s(&p)]).code, USAGE);
    assert_ne!(INTERNAL, OK);
}

#[test]
fn color_examples() {
    let d = tempfile::tempdir().unwrap();
    let pet = d.path().join("pet.txt");
    assert_eq!(
        cli(&["gen", "blowup", "--base", "petersen", "--sizes", "2,2,2,2,2,2,2,2,2,2", "--out", s(&pet)]).code,
        OK
    );
    let v = json(&cli(&["color", s(&pet)]));
    assert_eq!((v["chi_alg"].as_u64(), v["bound54"].as_u64()), (Some(5), Some(5)));
    assert!(v.get("trace").is_none());

    let c5 = write(d.path(), "c5.txt", &named::cycle(5));
    assert_eq!(json(&cli(&["color", s(&c5)]))["chi_alg"], 3);

    let t3 = d.path().join("t3.txt");
    cli(&["gen", "tight", "--q", "3", "--out", s(&t3)]);
    let v = json(&cli(&["color", s(&t3), "--exact", "--trace"]));
    assert_eq!((v["chi_exact"].as_u64(), v["bound54"].as_u64(), v["chi_alg"].as_u64()), (Some(8), Some(8), Some(8)));
    assert!(!v["trace"].as_array().unwrap().is_empty());

    let o = cli(&["color", s(&t3), "--exact", "--exact-cap", "10"]);
    assert_eq!(o.code, USAGE);
    assert!(o.stderr.contains("--force-exact"));
    assert_eq!(cli(&["color", s(&t3), "--exact", "--exact-cap", "10", "--force-exact"]).code, OK);
    let v = json(&cli(&["exact", s(&t3)]));
    assert_eq!((v["omega"].as_u64(), v["chi"].as_u64()), (Some(6), Some(8)));
}

#[test]
fn gen_examples() {
    let o = cli(&["gen", "tight", "--q", "2"]);
    assert_eq!(o.code, OK);
    assert!(o.stdout.starts_with("10 25\n"));
    assert!(cli(&["gen", "fkl", "--k", "2", "--l", "2"]).stdout.starts_with("13 "));
    let o = cli(&["gen", "boiler", "--k", "2"]);
    assert_eq!(o.code, USAGE);
    assert!(o.stderr.contains("k >= 3"));
    // Same seed, same bytes.
    let a = cli(&["gen", "belt", "--seed", "11", "--format", "graph6"]);
    assert_eq!(a, cli(&["gen", "belt", "--seed", "11", "--format", "graph6"]));

    let d = tempfile::tempdir().unwrap();
    let spec = d.path().join("spec.json");
    std::fs::write(&spec, r#"{"family":"BOILER","seed":3,"k":3,"max_part":2}"#).unwrap();
    let out = d.path().join("b.g6");
    let v = json(&cli(&["gen", "--spec", s(&spec), "--out", s(&out), "--format", "graph6"]));
    let cert = PathBuf::from(v["certificate_path"].as_str().unwrap());
    let o = cli(&["verify", s(&out), "--cert", s(&cert)]);
    assert_eq!(o.code, OK, "{}", o.stderr);
}

#[test]
fn verify_examples() {
    let d = tempfile::tempdir().unwrap();
    let g = d.path().join("h1.txt");
    cli(&["gen", "blowup", "--base", "H1", "--sizes", "2,1,1,1,1,1,1,1,1,1", "--out", s(&g)]);
    let cert = d.path().join("h1.txt.cert.json");
    assert_eq!(cli(&["verify", s(&g), "--cert", s(&cert)]).code, OK);

    // Move vertex 0 out of its bag into bag 1.
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let bags = doc["certificate"]["bags"].as_array_mut().unwrap();
    bags[0] = serde_json::json!([1]);
    bags[1].as_array_mut().unwrap().insert(0, 0.into());
    let moved = d.path().join("moved.json");
    std::fs::write(&moved, doc.to_string()).unwrap();
    let o = cli(&["verify", s(&g), "--cert", s(&moved)]);
    assert_eq!(o.code, NOT_IN_CLASS);
    assert_eq!(json(&o)["pass"], false);
    assert!(!json(&o)["reason"].as_str().unwrap().is_empty());

    let col = d.path().join("col.json");
    std::fs::write(&col, r#"{"assignment":[0,0,1,2,3,4,5,6,7,8,9]}"#).unwrap();
    let o = cli(&["verify", s(&g), "--coloring", s(&col)]);
    assert_eq!(o.code, NOT_IN_CLASS);
    assert!(json(&o)["reason"].as_str().unwrap().contains("(0,1)"));

    doc["schema"] = 2.into();
    std::fs::write(&moved, doc.to_string()).unwrap();
    let o = cli(&["verify", s(&g), "--cert", s(&moved)]);
    assert_eq!(o.code, USAGE);
    assert!(o.stderr.contains("schema mismatch"));
}

#[test]
fn batch_and_multi_graph_inputs() {
    let d = tempfile::tempdir().unwrap();
    write(d.path(), "a.txt", &named::cycle(5));
    write(d.path(), "b.txt", &named::cycle(4));
    let manifest = d.path().join("m.txt");
    std::fs::write(&manifest, "a.txt\n# comment\nb.txt\n").unwrap();
    let o = cli(&["color", "--batch", s(&manifest)]);
    assert_eq!(o.code, NOT_IN_CLASS);
    let lines: Vec<Value> = o.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!((lines[0]["index"].as_u64(), lines[0]["exit_code"].as_u64()), (Some(0), Some(0)));
    assert_eq!(lines[1]["exit_code"], 2);

    let g6 = d.path().join("many.g6");
    std::fs::write(&g6, format!("{}\n{}\n", to_graph6(&named::cycle(5)), to_graph6(&named::petersen()))).unwrap();
    let o = cli(&["recognize", s(&g6)]);
    assert_eq!(o.stdout.lines().count(), 2);
    assert_eq!(o.code, OK);
}

#[test]
fn usage_errors() {
    assert_eq!(cli(&["--help"]).code, OK);
    assert_eq!(cli(&["frobnicate"]).code, USAGE);
    assert_eq!(cli(&["color", "/nonexistent/file.txt"]).code, USAGE);
    assert_eq!(cli(&["verify", "x.txt"]).code, USAGE);
}
