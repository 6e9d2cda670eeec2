//! The `p6c4` command line: recognize, decompose, color, exact, gen, verify
//! and bench. `run` is the whole program minus process plumbing, so tests
//! drive it directly.
//!
//! Exit codes: 0 success, 1 usage or IO, 2 input not in the class (or a
//! failed verification), 3 internal invariant failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use p6c4::coloring::{self, BoundReport, ColorError, Engine};
use p6c4::detect::{self, Witness};
use p6c4::generators::{self, GenSpec, SampleStrategy};
use p6c4::io;
use p6c4::oracle::{self, OracleCaps, OracleWitness};
use p6c4::structure::{self, ClassifyError, StructureCertificate};
use p6c4::{Coloring, Graph};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

pub const SCHEMA: u64 = 1;

pub const OK: i32 = 0;
pub const USAGE: i32 = 1;
pub const NOT_IN_CLASS: i32 = 2;
pub const INTERNAL: i32 = 3;

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "p6c4", version, about = "Recognize, decompose and color (P6,C4)-free graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Is each input graph (P6,C4)-free? Prints a witness when not.
    Recognize(InputArgs),
    /// Structure certificate for a connected (P6,C4)-free graph.
    Decompose(InputArgs),
    /// Coloring with at most ceil(5w/4) colors, plus the bound report.
    Color {
        #[command(flatten)]
        input: InputArgs,
        /// Include the derivation trace.
        #[arg(long)]
        trace: bool,
        /// Also compute the exact chromatic number.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Exact clique and chromatic numbers by branch and bound.
    Exact {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Generate an instance; writes the graph and a sidecar certificate.
    Gen(GenArgs),
    /// Check a certificate or coloring against a graph.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, conflicts_with = "coloring", required_unless_present = "coloring")]
        cert: Option<PathBuf>,
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
    /// Time classify and color over generated corpora.
    Bench {
        /// Instances per family.
        #[arg(long, default_value_t = 50)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug, Clone)]
struct InputArgs {
    /// Graph file ("-" for stdin). A graph6 file may hold one graph per line.
    input: Option<PathBuf>,
    /// File with one graph path per line; output becomes JSON lines.
    #[arg(long, conflicts_with = "input")]
    batch: Option<PathBuf>,
    /// Input format; by default inferred from the extension (.g6 is graph6).
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Pretty-print JSON.
    #[arg(long)]
    pretty: bool,
    /// Plain-text output where a command supports it.
    #[arg(long)]
    text: bool,
}

#[derive(Args, Debug, Clone, Copy)]
struct CapArgs {
    /// Vertex cap for exact coloring (default from P6C4_ORACLE_CAP or 30).
    #[arg(long)]
    exact_cap: Option<usize>,
    /// Run the exact search even above the cap.
    #[arg(long)]
    force_exact: bool,
}

impl CapArgs {
    fn caps(&self) -> OracleCaps {
        let mut c = OracleCaps::from_env();
        if let Some(k) = self.exact_cap {
            c.chi = k;
        }
        c
    }

    fn allows(&self, n: usize) -> bool {
        self.force_exact || n <= self.caps().chi
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    EdgeList,
    Graph6,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Blowup,
    Fkl,
    Tight,
    Band,
    Belt,
    Boiler,
    RandomP6c4,
    Glued,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(value_enum, required_unless_present = "spec")]
    family: Option<Family>,
    /// Read the full GenSpec from a JSON file instead of flags.
    #[arg(long)]
    spec: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Base graph for blowups: C5, H1..H5, F3, Petersen, F{k,l}.
    #[arg(long, default_value = "C5")]
    base: String,
    /// Comma-separated bag sizes (blowup, fkl).
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    #[arg(long, default_value_t = 2)]
    q: usize,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    l: usize,
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    max_part: usize,
    #[arg(long, default_value_t = 1)]
    depth: usize,
    #[arg(long, value_enum, default_value_t = Strat::Structured)]
    strategy: Strat,
    /// Output graph file; the certificate goes to <out>.cert.json.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::EdgeList)]
    format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Strat {
    Structured,
    Rejection,
}

struct Failure {
    code: i32,
    msg: String,
    body: Option<Value>,
}

fn fail(code: i32, msg: impl Into<String>) -> Failure {
    Failure { code, msg: msg.into(), body: None }
}

type Res<T> = Result<T, Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { OK };
            let text = e.render().to_string();
            return if code == OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match cli.cmd {
        Cmd::Recognize(input) => per_graph(&input, "recognize", recognize),
        Cmd::Decompose(input) => per_graph(&input, "decompose", |g, _| decompose(g)),
        Cmd::Color { input, trace, exact, cap } => {
            per_graph(&input, "color", move |g, _| color(g, trace, exact, cap))
        }
        Cmd::Exact { input, cap } => per_graph(&input, "exact", move |g, _| exact(g, cap)),
        Cmd::Gen(args) => single(cmd_gen(&args), false),
        Cmd::Verify { input, cert, coloring } => match read_inputs(&input) {
            Ok(gs) if gs.len() == 1 => single(verify(&gs[0].1, cert.as_deref(), coloring.as_deref()), input.pretty),
            Ok(_) => Outcome { code: USAGE, stderr: "verify takes exactly one graph\n".into(), ..Default::default() },
            Err(f) => single(Err(f), false),
        },
        Cmd::Bench { count, seed, json } => single(bench(count, seed).map(|v| if json { v } else { bench_text(&v) }), true),
    }
}

fn now() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

fn envelope(command: &str, body: Value) -> Value {
    let mut v = json!({ "schema": SCHEMA, "generated_at": now(), "command": command });
    if let (Value::Object(m), Value::Object(b)) = (&mut v, body) {
        m.extend(b);
    }
    v
}

fn render(v: &Value, pretty: bool) -> String {
    match v {
        Value::String(s) => format!("{s}\n"),
        _ if pretty => format!("{}\n", serde_json::to_string_pretty(v).expect("json")),
        _ => format!("{}\n", serde_json::to_string(v).expect("json")),
    }
}

fn single(r: Res<Value>, pretty: bool) -> Outcome {
    match r {
        Ok(v) => Outcome { code: OK, stdout: render(&v, pretty), stderr: String::new() },
        Err(f) => Outcome {
            code: f.code,
            stdout: f.body.map(|b| render(&b, pretty)).unwrap_or_default(),
            stderr: format!("error: {}\n", f.msg),
        },
    }
}

/// Run `f` on every input graph. One graph: one JSON document. Several:
/// JSON lines in input order, exit code the worst seen.
fn per_graph(input: &InputArgs, command: &str, f: impl Fn(&Graph, bool) -> Res<Value>) -> Outcome {
    let graphs = match read_inputs(input) {
        Ok(g) => g,
        Err(e) => return single(Err(e), false),
    };
    if graphs.len() == 1 && input.batch.is_none() {
        let r = f(&graphs[0].1, input.text).map(|b| if b.is_string() { b } else { envelope(command, b) });
        let r = r.map_err(|mut e| {
            e.body = e.body.map(|b| envelope(command, b));
            e
        });
        return single(r, input.pretty);
    }
    let mut out = Outcome::default();
    for (i, (source, g)) in graphs.iter().enumerate() {
        let head = json!({ "index": i, "source": source });
        let (code, body) = match f(g, false) {
            Ok(b) => (OK, b),
            Err(e) => {
                out.stderr.push_str(&format!("error: {source}: {}\n", e.msg));
                (e.code, e.body.unwrap_or_else(|| json!({ "error": e.msg })))
            }
        };
        let mut v = envelope(command, head);
        if let (Value::Object(m), Value::Object(b)) = (&mut v, body) {
            m.extend(b);
        }
        v["exit_code"] = json!(code);
        out.code = out.code.max(code);
        out.stdout.push_str(&render(&v, false));
    }
    out
}

fn format_of(path: &Path, explicit: Option<Format>) -> Format {
    explicit.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some("g6" | "graph6") => Format::Graph6,
        _ => Format::EdgeList,
    })
}

fn read_text(path: &Path) -> Res<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| fail(USAGE, format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| fail(USAGE, format!("{}: {e}", path.display())))
}

fn read_graphs(path: &Path, format: Option<Format>) -> Res<Vec<(String, Graph)>> {
    let text = read_text(path)?;
    let name = path.display().to_string();
    let parsed = match format_of(path, format) {
        Format::EdgeList => io::parse_edge_list(&text).map(|g| vec![g]),
        Format::Graph6 => io::parse_graph6_all(&text),
    };
    let gs = parsed.map_err(|e| fail(USAGE, format!("{name}: parse error: {e}")))?;
    if gs.is_empty() {
        return Err(fail(USAGE, format!("{name}: no graphs")));
    }
    let many = gs.len() > 1;
    Ok(gs.into_iter().enumerate().map(|(i, g)| (if many { format!("{name}:{}", i + 1) } else { name.clone() }, g)).collect())
}

fn read_inputs(input: &InputArgs) -> Res<Vec<(String, Graph)>> {
    if let Some(manifest) = &input.batch {
        let text = read_text(manifest)?;
        let base = manifest.parent().unwrap_or(Path::new("."));
        let mut out = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let p = Path::new(line);
            let p = if p.is_relative() { base.join(p) } else { p.to_path_buf() };
            out.extend(read_graphs(&p, input.format)?);
        }
        return Ok(out);
    }
    let path = input.input.as_ref().ok_or_else(|| fail(USAGE, "no input graph given"))?;
    read_graphs(path, input.format)
}

fn describe(w: &Witness) -> String {
    let which = match w.kind {
        detect::WitnessKind::Cycle(4) => "not C4-free",
        _ => "not P6-free",
    };
    format!("{which}, induced {} on {:?}", w.kind, w.vertices)
}

fn non_member(w: Witness) -> Failure {
    let msg = describe(&w);
    Failure { code: NOT_IN_CLASS, body: Some(json!({ "member": false, "witness": w, "message": msg })), msg }
}

fn recognize(g: &Graph, text: bool) -> Res<Value> {
    let r = detect::is_p6c4_free(g);
    if text {
        return Ok(Value::String(match &r {
            Ok(()) => "(P6,C4)-free".into(),
            Err(w) => describe(w),
        }));
    }
    Ok(match r {
        Ok(()) => json!({ "n": g.n(), "member": true }),
        Err(w) => json!({ "n": g.n(), "member": false, "witness": w, "message": describe(&w) }),
    })
}

fn decompose(g: &Graph) -> Res<Value> {
    match structure::classify(g) {
        Ok(cert) => {
            structure::validate_certificate(g, &cert)
                .map_err(|v| fail(INTERNAL, format!("classifier produced an invalid certificate: {v}")))?;
            Ok(json!({ "n": g.n(), "tag": cert.kind.tag(), "certificate": cert }))
        }
        Err(ClassifyError::NotMember(w)) => Err(non_member(w)),
        Err(ClassifyError::Disconnected) => Err(fail(USAGE, "decompose needs a connected graph")),
        Err(e) => Err(fail(INTERNAL, format!("no certificate: {e}"))),
    }
}

fn report_json(r: &BoundReport) -> Value {
    json!({
        "omega": r.omega, "delta": r.delta, "bound54": r.bound54, "reed": r.reed,
        "chi_alg": r.chi_alg, "chi_exact": r.chi_exact,
    })
}

fn color(g: &Graph, trace: bool, exact: bool, cap: CapArgs) -> Res<Value> {
    if exact && !cap.allows(g.n()) {
        return Err(fail(USAGE, format!("--exact on {} vertices exceeds the cap {}; pass --force-exact", g.n(), cap.caps().chi)));
    }
    let mut engine = Engine::new(cap.caps());
    let mut res = engine.color(g).map_err(|e| match e {
        ColorError::NotMember(w) => non_member(w),
        other => fail(INTERNAL, other.to_string()),
    })?;
    if exact {
        res.report.chi_exact = Some(oracle::exact_chromatic(g).value);
    }
    let mut v = json!({
        "n": g.n(),
        "assignment": res.coloring.assignment,
        "num_colors": res.coloring.num_colors,
        "fallbacks": res.fallbacks,
    });
    v.as_object_mut().unwrap().extend(report_json(&res.report).as_object().unwrap().clone());
    if trace {
        v["trace"] = json!(res.trace);
    }
    Ok(v)
}

fn exact(g: &Graph, cap: CapArgs) -> Res<Value> {
    if !cap.allows(g.n()) {
        return Err(fail(USAGE, format!("{} vertices exceeds the exact cap {}; pass --force-exact", g.n(), cap.caps().chi)));
    }
    let w = oracle::exact_clique(g);
    let c = oracle::exact_chromatic(g);
    let OracleWitness::Clique(clique) = w.witness else { return Err(fail(INTERNAL, "clique oracle witness")) };
    let OracleWitness::Coloring(col) = c.witness else { return Err(fail(INTERNAL, "chromatic oracle witness")) };
    Ok(json!({
        "n": g.n(),
        "omega": w.value, "clique": clique,
        "chi": c.value, "assignment": col.assignment,
        "nodes_explored": w.nodes_explored + c.nodes_explored,
    }))
}

fn gen_spec(a: &GenArgs) -> Res<GenSpec> {
    if let Some(p) = &a.spec {
        return serde_json::from_str(&read_text(p)?).map_err(|e| fail(USAGE, format!("bad GenSpec: {e}")));
    }
    let strategy = match a.strategy {
        Strat::Structured => SampleStrategy::Structured,
        Strat::Rejection => SampleStrategy::Rejection,
    };
    Ok(match a.family.expect("clap requires family or spec") {
        Family::Blowup => {
            let base = structure::BaseGraph::parse(&a.base).ok_or_else(|| fail(USAGE, format!("unknown base {}", a.base)))?;
            let sizes = a.sizes.clone().unwrap_or_else(|| vec![1; base.graph().n()]);
            GenSpec::Blowup { base: base.name(), sizes }
        }
        Family::Fkl => GenSpec::Fkl { k: a.k, l: a.l, sizes: a.sizes.clone() },
        Family::Tight => GenSpec::Tight { q: a.q },
        Family::Band => GenSpec::Band { seed: a.seed, max_part: a.max_part },
        Family::Belt => GenSpec::Belt { seed: a.seed, max_part: a.max_part },
        Family::Boiler => GenSpec::Boiler { seed: a.seed, k: a.k, max_part: a.max_part },
        Family::RandomP6c4 => GenSpec::RandomP6c4 { n: a.n, seed: a.seed, strategy },
        Family::Glued => GenSpec::Glued { seed: a.seed, depth: a.depth },
    })
}

fn write_graph(g: &Graph, f: Format) -> String {
    match f {
        Format::EdgeList => io::write_edge_list(g),
        Format::Graph6 => format!("{}\n", io::to_graph6(g)),
    }
}

fn cmd_gen(a: &GenArgs) -> Res<Value> {
    let spec = gen_spec(a)?;
    let out = generators::generate(&spec).map_err(|e| fail(USAGE, e.to_string()))?;
    let graph_text = write_graph(&out.graph, a.format);
    let Some(path) = &a.out else {
        return Ok(Value::String(graph_text.trim_end().to_string()));
    };
    let write = |p: &Path, s: &str| std::fs::write(p, s).map_err(|e| fail(USAGE, format!("{}: {e}", p.display())));
    write(path, &graph_text)?;
    let mut summary = envelope(
        "gen",
        json!({ "spec": spec, "n": out.graph.n(), "m": out.graph.m(), "graph_path": path.display().to_string() }),
    );
    if let Some(cert) = &out.certificate {
        let cpath = PathBuf::from(format!("{}.cert.json", path.display()));
        let doc = envelope("gen", json!({ "spec": spec, "tag": cert.kind.tag(), "certificate": cert }));
        write(&cpath, &render(&doc, true))?;
        summary["certificate_path"] = json!(cpath.display().to_string());
    }
    Ok(summary)
}

/// A certificate document (decompose or gen output) or a bare certificate.
fn load_certificate(v: Value) -> Res<StructureCertificate> {
    let inner = match v.get("certificate") {
        Some(c) => {
            check_schema(&v)?;
            c.clone()
        }
        None => v,
    };
    serde_json::from_value(inner).map_err(|e| fail(USAGE, format!("schema mismatch: {e}")))
}

fn check_schema(v: &Value) -> Res<()> {
    match v.get("schema").and_then(Value::as_u64) {
        Some(SCHEMA) | None => Ok(()),
        Some(s) => Err(fail(USAGE, format!("schema mismatch: version {s}, expected {SCHEMA}"))),
    }
}

fn verify(g: &Graph, cert: Option<&Path>, coloring: Option<&Path>) -> Res<Value> {
    let parse = |p: &Path| -> Res<Value> {
        serde_json::from_str(&read_text(p)?).map_err(|e| fail(USAGE, format!("{}: {e}", p.display())))
    };
    let (what, verdict) = if let Some(p) = cert {
        let c = load_certificate(parse(p)?)?;
        ("certificate", structure::validate_certificate(g, &c).map_err(|v| v.to_string()))
    } else {
        let v = parse(coloring.expect("clap requires one of the two"))?;
        check_schema(&v)?;
        let assignment: Vec<usize> = serde_json::from_value(v.get("assignment").cloned().unwrap_or(Value::Null))
            .map_err(|e| fail(USAGE, format!("schema mismatch: assignment: {e}")))?;
        let mut c = Coloring::new(assignment);
        if let Some(k) = v.get("num_colors").and_then(Value::as_u64) {
            c.num_colors = k as usize;
        }
        ("coloring", oracle::verify_coloring(g, &c).map_err(|e| e.to_string()))
    };
    match verdict {
        Ok(()) => Ok(envelope("verify", json!({ "checked": what, "pass": true }))),
        Err(reason) => Err(Failure {
            code: NOT_IN_CLASS,
            body: Some(envelope("verify", json!({ "checked": what, "pass": false, "reason": reason }))),
            msg: format!("{what} rejected: {reason}"),
        }),
    }
}

#[derive(Default)]
struct FamilyStats {
    count: u64,
    classify_failures: u64,
    fallbacks: usize,
    over_bound: u64,
    errors: u64,
    max_n: usize,
    total: Duration,
    worst: Duration,
}

/// The benchmark corpus: `count` seeded instances of each family.
pub fn corpus(family: &str, count: u64, seed: u64) -> Vec<Graph> {
    use rand::{Rng, SeedableRng};
    (0..count)
        .filter_map(|i| {
            let s = seed.wrapping_mul(1_000_003).wrapping_add(i);
            let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(s);
            let g = match family {
                "blowup" => {
                    let bases = generators::corpus_bases();
                    let b = &bases[i as usize % bases.len()];
                    let sizes: Vec<usize> = (0..b.graph().n()).map(|_| r.gen_range(1..=3)).collect();
                    generators::gen_blowup(b, &sizes).ok()?.0
                }
                "fkl" => {
                    let (k, l) = (r.gen_range(0..=3), r.gen_range(0..=3));
                    let n = p6c4::named::FklIndex { k, l }.n();
                    let sizes: Vec<usize> = (0..n).map(|_| r.gen_range(1..=2)).collect();
                    generators::gen_fkl(k, l, Some(&sizes)).ok()?.0
                }
                "band" => generators::gen_band(s, 3).ok()?.0,
                "belt" => generators::gen_belt(s, 3).ok()?.0,
                "boiler" => generators::gen_boiler(s, 3 + (i as usize % 2), 3).ok()?.0,
                "glued" => generators::gen_glued(s, 1 + (i as usize % 2)).ok()?.0,
                _ => generators::gen_random_p6c4free(r.gen_range(1..=10), s, SampleStrategy::Rejection).ok()?,
            };
            Some(g)
        })
        .collect()
}

pub const FAMILIES: [&str; 7] = ["blowup", "fkl", "band", "belt", "boiler", "glued", "random"];

fn bench(count: u64, seed: u64) -> Res<Value> {
    let mut rows = Vec::new();
    for fam in FAMILIES {
        let mut st = FamilyStats::default();
        for g in corpus(fam, count, seed) {
            st.count += 1;
            st.max_n = st.max_n.max(g.n());
            let t = Instant::now();
            let cert_ok = structure::classify(&g).is_ok_and(|c| structure::validate_certificate(&g, &c).is_ok());
            if !cert_ok && g.is_connected() {
                st.classify_failures += 1;
            }
            match coloring::color(&g) {
                Ok(r) => {
                    st.fallbacks += r.fallbacks;
                    st.over_bound += u64::from(r.coloring.num_colors > r.report.bound54);
                }
                Err(_) => st.errors += 1,
            }
            let dt = t.elapsed();
            st.total += dt;
            st.worst = st.worst.max(dt);
        }
        rows.push(json!({
            "family": fam, "count": st.count, "max_n": st.max_n,
            "classify_failures": st.classify_failures, "fallbacks": st.fallbacks,
            "over_bound": st.over_bound, "errors": st.errors,
            "total_ms": st.total.as_secs_f64() * 1e3, "worst_ms": st.worst.as_secs_f64() * 1e3,
        }));
    }
    Ok(envelope("bench", json!({ "count": count, "seed": seed, "families": rows })))
}

fn bench_text(v: &Value) -> Value {
    let mut s = format!(
        "{:<8} {:>6} {:>6} {:>9} {:>9} {:>6} {:>10} {:>10}\n",
        "family", "count", "max_n", "cls_fail", "fallback", "over", "total_ms", "worst_ms"
    );
    for r in v["families"].as_array().into_iter().flatten() {
        s.push_str(&format!(
            "{:<8} {:>6} {:>6} {:>9} {:>9} {:>6} {:>10.1} {:>10.2}\n",
            r["family"].as_str().unwrap_or(""),
            r["count"],
            r["max_n"],
            r["classify_failures"],
            r["fallbacks"],
            r["over_bound"],
            r["total_ms"].as_f64().unwrap_or(0.0),
            r["worst_ms"].as_f64().unwrap_or(0.0),
        ));
    }
    Value::String(s.trim_end().to_string())
}
