//! Command-line front end.
//!
//! Exit codes: 0 when a result was computed (and not excluded), 1 when the
//! verdict is `Excluded` or a selftest check fails, 2 on invalid input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arith::{Int, Sign};
use crate::obstruction::{
    characteristic_sphere_check, cobordism_order_certificate, definite_filling_signature, filling_shape, rp2_embedding_check,
    spin_filling_feasible, to_i64, FourManifoldShape, VerdictReport, VerdictStatus, CITE_B1, CITE_FILLING, CITE_KERNEL,
    CITE_RP2, CITE_SPHERE,
};
use crate::plumbing::{
    blow_down, intersection_matrix, lens_to_plumbing, parse_star, plumbing_delta, seifert_to_plumbing, signature, wu_solutions,
    PlumbingGraph, WuVector,
};
use crate::seifert::{delta, spin_enumerate, LensSpace, SeifertData, SpinAssignment, Target};
use crate::sigma::{even_cf_expand, sigma, sigma_by_reciprocity, sigma_trig, sigma_via_cf};

#[derive(Debug, Parser)]
#[command(name = "spindefect", version, about = "Spin defects of spherical 3-manifolds and 10/8-type obstructions")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// sigma(q, p, eps).
    Sigma {
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-1")]
        eps: String,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
    },
    /// Even continued fraction of p/q.
    Evencf {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Spin structures of a Seifert manifold or lens space.
    SpinList {
        #[command(flatten)]
        target: TargetArgs,
    },
    /// delta(S, c) with the closed-form row it falls in.
    Delta {
        #[command(flatten)]
        target: TargetArgs,
        /// One line per spin structure.
        #[arg(long)]
        all_spin: bool,
    },
    /// Inertia, Wu vectors and defects of a plumbing graph.
    Plumbing {
        /// Star shorthand, e.g. "(-2; -2; -2,-2; -2,-2,-2,-2)".
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["graph", "graph_json"])]
        star: Option<String>,
        /// Path to a JSON graph ("-" for stdin).
        #[arg(long, conflicts_with = "graph_json")]
        graph: Option<String>,
        /// Inline JSON graph.
        #[arg(long)]
        graph_json: Option<String>,
        /// Wu vector as comma-separated bits in vertex order.
        #[arg(long)]
        wu: Option<String>,
        /// Blow down this +-1 vertex (needs a Wu vector).
        #[arg(long, allow_hyphen_values = true)]
        blow_down: Option<i64>,
    },
    /// Spin plumbing with zero Wu vector bounded by (S, c).
    SeifertToPlumbing {
        #[command(flatten)]
        target: TargetArgs,
    },
    /// Whether a spin 4-manifold with the given shape can bound (S, c).
    Feasible {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Defect of the boundary; alternative to giving the manifold.
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<String>,
        #[command(flatten)]
        target: TargetArgs,
    },
    /// Definite spin fillings: the forced (b+, b-) for a given defect.
    Definite {
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
    },
    /// Cobordism-order certificate for (S, c).
    Cobordism {
        #[command(flatten)]
        target: TargetArgs,
    },
    /// Characteristic RP^2 with normal Euler number e.
    Rp2 {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, allow_hyphen_values = true)]
        euler: String,
    },
    /// Characteristic sphere of square n.
    CharSphere {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, allow_hyphen_values = true)]
        n: String,
    },
    /// Deterministic regression over the built-in fixtures.
    Selftest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Exact,
    Reciprocity,
    Trig,
    Cf,
    All,
}

#[derive(Debug, Args)]
struct TargetArgs {
    /// Seifert invariants "(a1,b1),(a2,b2),(a3,b3)".
    #[arg(long, allow_hyphen_values = true, conflicts_with = "lens")]
    seifert: Option<String>,
    /// Lens space "p,q".
    #[arg(long, allow_hyphen_values = true)]
    lens: Option<String>,
    /// Spin structure "cg1,cg2,cg3[;ch]".
    #[arg(long, allow_hyphen_values = true)]
    spin: Option<String>,
    /// Lens-space spin sign.
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<String>,
}

impl TargetArgs {
    fn given(&self) -> bool {
        self.seifert.is_some() || self.lens.is_some()
    }
}

#[derive(Debug, Args)]
struct ShapeArgs {
    #[arg(long, allow_hyphen_values = true)]
    bplus: String,
    #[arg(long, allow_hyphen_values = true)]
    bminus: String,
    /// Defaults to b+ - b-.
    #[arg(long, allow_hyphen_values = true)]
    sign: Option<String>,
}

#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

struct Output {
    json: Value,
    text: String,
    code: i32,
}

fn bad(token: &str, reason: &str) -> InputError {
    InputError(format!("invalid value `{token}`: {reason}"))
}

fn parse_big(token: &str) -> Result<Int, InputError> {
    let t = token.trim().replace('\u{2212}', "-");
    t.strip_prefix('+').unwrap_or(&t).parse::<Int>().map_err(|_| bad(token, "not an integer"))
}

fn parse_small(token: &str) -> Result<i64, InputError> {
    to_i64(&parse_big(token)?).map_err(|_| bad(token, "out of range for a 64-bit integer"))
}

fn parse_sign(token: &str) -> Result<Sign, InputError> {
    token.trim().parse::<Sign>().map_err(|_| bad(token, "expected +1 or -1"))
}

fn parse_lens_pair(token: &str) -> Result<(Int, Int), InputError> {
    let t = token.trim().trim_start_matches('(').trim_end_matches(')');
    match t.split(',').collect::<Vec<_>>()[..] {
        [p, q] => Ok((parse_big(p)?, parse_big(q)?)),
        _ => Err(bad(token, "expected `p,q`")),
    }
}

impl ShapeArgs {
    fn shape(&self) -> Result<FourManifoldShape, InputError> {
        let bp = parse_small(&self.bplus)?;
        let bm = parse_small(&self.bminus)?;
        let sign = match &self.sign {
            Some(s) => parse_small(s)?,
            None => bp.checked_sub(bm).ok_or_else(|| bad(&self.bplus, "overflow"))?,
        };
        Ok(FourManifoldShape::new(bp, bm, sign)?)
    }
}

/// Targets named by the flags. Without `--spin`/`--eps` the unique spin
/// structure is used, or all of them when `all` is set.
fn resolve_targets(t: &TargetArgs, all: bool) -> Result<Vec<Target>, InputError> {
    if let Some(text) = &t.seifert {
        let s: SeifertData = text.parse()?;
        if let Some(c) = &t.spin {
            let c: SpinAssignment = c.parse()?;
            c.validate(&s)?;
            return Ok(vec![Target::Seifert(s, c)]);
        }
        let cs = spin_enumerate(&s);
        if cs.is_empty() {
            return Err(InputError(format!("{s} has no spin structure")));
        }
        if cs.len() > 1 && !all {
            return Err(InputError(format!("{s} has {} spin structures; pass --spin or --all-spin", cs.len())));
        }
        return Ok(cs.into_iter().map(|c| Target::Seifert(s.clone(), c)).collect());
    }
    if let Some(text) = &t.lens {
        let (p, q) = parse_lens_pair(text)?;
        if let Some(e) = &t.eps {
            return Ok(vec![Target::Lens(LensSpace::new(p, q, parse_sign(e)?)?)]);
        }
        let signs = LensSpace::spin_signs(&p, &q);
        if signs.len() > 1 && !all {
            return Err(InputError(format!("L({p},{q}) has 2 spin structures; pass --eps or --all-spin")));
        }
        return signs.into_iter().map(|e| Ok(Target::Lens(LensSpace::new(p.clone(), q.clone(), e)?))).collect();
    }
    Err(InputError("give --seifert or --lens".into()))
}

fn resolve_one(t: &TargetArgs) -> Result<Target, InputError> {
    Ok(resolve_targets(t, false)?.remove(0))
}

fn target_json(t: &Target) -> Value {
    match t {
        Target::Lens(l) => json!({"lens": {"p": l.p.to_string(), "q": l.q.to_string(), "eps": l.eps}}),
        Target::Seifert(s, c) => json!({"seifert": s.to_string(), "spin": c.to_string()}),
    }
}

fn target_label(t: &Target) -> String {
    match t {
        Target::Lens(l) => format!("L({},{}) eps={}", l.p, l.q, l.eps),
        Target::Seifert(s, c) => format!("{s} c={c}"),
    }
}

fn verdict_code(s: VerdictStatus) -> i32 {
    if s == VerdictStatus::Excluded {
        1
    } else {
        0
    }
}

fn execute(cmd: &Cmd, argv: &[String]) -> Result<Output, InputError> {
    let input = json!({ "argv": argv });
    let mut text = String::new();
    let out = match cmd {
        Cmd::Sigma { q, p, eps, method } => {
            let (qi, pi, e) = (parse_big(q)?, parse_big(p)?, parse_sign(eps)?);
            let exact = sigma(&qi, &pi, e)?;
            let mut j = json!({"command": "sigma", "input": input, "q": qi.to_string(), "p": pi.to_string(), "eps": e, "sigma": exact.to_string()});
            write!(text, "sigma({qi},{pi},{e}) = {exact}").unwrap();
            if matches!(method, Method::Reciprocity | Method::All) {
                let r = sigma_by_reciprocity(&qi, &pi, e)?;
                j["reciprocity"] = json!(r.to_string());
                write!(text, "\n  reciprocity: {r}").unwrap();
            }
            if matches!(method, Method::Trig | Method::All) {
                let t = sigma_trig(&qi, &pi, e)?;
                write!(text, "\n  trig sum: {:.10} (distance {:.2e})", t.value, t.distance).unwrap();
                j["trig"] = serde_json::to_value(&t)?;
            }
            if matches!(method, Method::Cf | Method::All) {
                let c = sigma_via_cf(&qi, &pi)?;
                write!(text, "\n  continued fraction: {c}").unwrap();
                j["cf"] = json!(c.to_string());
            }
            Output { json: j, text, code: 0 }
        }
        Cmd::Evencf { p, q } => {
            let (pi, qi) = (parse_big(p)?, parse_big(q)?);
            let cf = even_cf_expand(&pi, &qi)?;
            let entries: Vec<String> = cf.entries().iter().map(Int::to_string).collect();
            Output {
                json: json!({"command": "evencf", "input": input, "p": pi.to_string(), "q": qi.to_string(), "entries": entries, "neg_sign_sum": cf.neg_sign_sum().to_string()}),
                text: format!("{pi}/{qi} = {cf}"),
                code: 0,
            }
        }
        Cmd::SpinList { target } => {
            let ts = resolve_targets(target, true)?;
            let items: Vec<Value> = ts.iter().map(target_json).collect();
            for t in &ts {
                writeln!(text, "{}", target_label(t)).unwrap();
            }
            Output { json: json!({"command": "spin-list", "input": input, "count": ts.len(), "spin_structures": items}), text, code: 0 }
        }
        Cmd::Delta { target, all_spin } => {
            let mut rows = Vec::new();
            for t in resolve_targets(target, *all_spin)? {
                let r = delta(&t)?;
                write!(text, "{}  delta = {}  row {}", target_label(&t), r.delta, r.row).unwrap();
                if r.reversed {
                    text.push_str("  (reversed)");
                }
                text.push('\n');
                let mut v = target_json(&t);
                v["report"] = serde_json::to_value(&r)?;
                rows.push(v);
            }
            Output { json: json!({"command": "delta", "input": input, "results": rows}), text, code: 0 }
        }
        Cmd::Plumbing { star, graph, graph_json, wu, blow_down: bd } => {
            let (g, mut w) = load_graph(star, graph, graph_json)?;
            if let Some(bits) = wu {
                let bits = bits
                    .split(',')
                    .map(|b| match b.trim() {
                        "0" => Ok(0u8),
                        "1" => Ok(1u8),
                        other => Err(bad(other, "Wu entries are 0 or 1")),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                w = Some(WuVector::new(&g, bits)?);
            }
            plumbing_report(&g, w.as_ref(), *bd, input, &mut text)?
        }
        Cmd::SeifertToPlumbing { target } => {
            let t = resolve_one(target)?;
            let (g, w) = match &t {
                Target::Lens(l) => lens_to_plumbing(l)?,
                Target::Seifert(s, c) => seifert_to_plumbing(s, c)?,
            };
            let d = plumbing_delta(&g, &w)?;
            let expected = delta(&t)?.delta;
            if d != expected {
                return Err(InputError(format!("internal disagreement: plumbing {d}, delta {expected}")));
            }
            write!(text, "{}\n{g}\nwu {w}\ndelta = {d}", target_label(&t)).unwrap();
            let mut j = json!({"command": "seifert-to-plumbing", "input": input, "graph": g.to_json(Some(&w)), "delta": d.to_string()});
            j["target"] = target_json(&t);
            Output { json: j, text, code: 0 }
        }
        Cmd::Feasible { shape, delta: d, target } => {
            let y = shape.shape()?;
            let (ds, tj) = match (d, target.given()) {
                (Some(_), true) => return Err(InputError("give either --delta or a manifold, not both".into())),
                (Some(d), false) => (parse_small(d)?, Value::Null),
                (None, true) => {
                    let t = resolve_one(target)?;
                    (to_i64(&delta(&t)?.delta)?, target_json(&t))
                }
                (None, false) => return Err(InputError("give --delta or --seifert/--lens".into())),
            };
            let v = spin_filling_feasible(&y, ds);
            let z = filling_shape(&y);
            let mut inp = input;
            inp["shape"] = serde_json::to_value(y)?;
            inp["target"] = tj;
            let r = VerdictReport::new(inp, z, ds, &v, &[CITE_FILLING, CITE_B1, CITE_KERNEL]);
            write!(text, "filling {y} of delta = {ds}: closed shape {z}, {}", verdict_text(&r)).unwrap();
            let mut j = serde_json::to_value(&r)?;
            j["command"] = json!("feasible");
            Output { json: j, text, code: verdict_code(v.status) }
        }
        Cmd::Definite { delta: d } => {
            let ds = parse_small(d)?;
            let r = definite_filling_signature(ds);
            let b = ds.abs();
            let want = if ds >= 0 { format!("({b}, 0)") } else { format!("(0, {b})") };
            if r.scan_forces {
                write!(text, "delta = {ds}: a definite spin filling has (b+, b-) = {want}").unwrap();
            } else {
                let s: Vec<String> = r.survivors.iter().map(|y| format!("({}, {})", y.b_plus, y.b_minus)).collect();
                write!(text, "delta = {ds}: not forced; besides {want}, rank <= {} allows {}", crate::obstruction::DEFINITE_SCAN_MAX, s.join(", ")).unwrap();
            }
            let mut j = serde_json::to_value(&r)?;
            j["command"] = json!("definite");
            j["input"] = input;
            Output { json: j, text, code: 0 }
        }
        Cmd::Cobordism { target } => {
            let t = resolve_one(target)?;
            let c = cobordism_order_certificate(&t)?;
            write!(
                text,
                "{}\ndelta = {}\nbounds no spin rational ball: {}\nZ/2 homology sphere: {}\ninfinite order: {}",
                target_label(&t),
                c.delta,
                c.bounds_no_acyclic,
                c.z2_homology_sphere,
                c.infinite_order
            )
            .unwrap();
            let mut j = serde_json::to_value(&c)?;
            j["command"] = json!("cobordism");
            j["input"] = input;
            j["target"] = target_json(&t);
            Output { json: j, text, code: 0 }
        }
        Cmd::Rp2 { shape, euler } => {
            let x = shape.shape()?;
            let e = parse_small(euler)?;
            let r = rp2_embedding_check(&x, e);
            let verdict = if r.admissible() { "admissible" } else { "excluded" };
            write!(text, "RP^2 with e = {e} in {x}: {verdict}").unwrap();
            for b in &r.branches {
                write!(text, "\n  eps = {}: {} (ind {})", b.eps, b.verdict.status, fmt_ind(b.verdict.ind)).unwrap();
            }
            if let Some(f) = &r.forced {
                write!(text, "\n  forced: e in {{{}, {}}}", f[0], f[1]).unwrap();
            }
            let mut j = serde_json::to_value(&r)?;
            j["command"] = json!("rp2");
            j["input"] = input;
            j["admissible"] = json!(r.admissible());
            j["citations"] = json!([CITE_RP2, CITE_KERNEL]);
            Output { json: j, text, code: if r.admissible() { 0 } else { 1 } }
        }
        Cmd::CharSphere { shape, n } => {
            let x = shape.shape()?;
            let n = parse_small(n)?;
            let (z, v) = characteristic_sphere_check(&x, n)?;
            let mut inp = input;
            inp["shape"] = serde_json::to_value(x)?;
            inp["n"] = json!(n);
            let r = VerdictReport::new(inp, z, -(n - 1), &v, &[CITE_SPHERE, CITE_KERNEL]);
            write!(text, "sphere of square {n} in {x}: shape {z}, {}", verdict_text(&r)).unwrap();
            let mut j = serde_json::to_value(&r)?;
            j["command"] = json!("char-sphere");
            Output { json: j, text, code: verdict_code(v.status) }
        }
        Cmd::Selftest => {
            let checks = crate::selftest::run_all();
            let ok = checks.iter().all(|c| c.passed);
            for c in &checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                write!(text, "{tag} {} ({} cases)", c.name, c.cases).unwrap();
                if !c.passed {
                    write!(text, ": {}", c.detail).unwrap();
                }
                text.push('\n');
            }
            let checks: Vec<Value> = checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "cases": c.cases, "detail": c.detail}))
                .collect();
            Output { json: json!({"command": "selftest", "passed": ok, "checks": checks}), text, code: if ok { 0 } else { 1 } }
        }
    };
    Ok(out)
}

fn fmt_ind(ind: Option<i64>) -> String {
    ind.map_or_else(|| "-".into(), |i| i.to_string())
}

fn verdict_text(r: &VerdictReport) -> String {
    format!("ind = {}, {}{}", fmt_ind(r.ind), r.status, if r.residue_ok { "" } else { " (sign + delta not divisible by 16)" })
}

fn load_graph(
    star: &Option<String>,
    path: &Option<String>,
    inline: &Option<String>,
) -> Result<(PlumbingGraph, Option<WuVector>), InputError> {
    if let Some(s) = star {
        return Ok((parse_star(s)?, None));
    }
    let text = match (path, inline) {
        (Some(p), _) if p == "-" => std::io::read_to_string(std::io::stdin())?,
        (Some(p), _) => std::fs::read_to_string(p).map_err(|e| InputError(format!("cannot read `{p}`: {e}")))?,
        (None, Some(t)) => t.clone(),
        (None, None) => return Err(InputError("give --star, --graph or --graph-json".into())),
    };
    Ok(PlumbingGraph::from_json(&text)?)
}

fn plumbing_report(g: &PlumbingGraph, w: Option<&WuVector>, bd: Option<i64>, input: Value, text: &mut String) -> Result<Output, InputError> {
    let inertia = signature(&intersection_matrix(g));
    let sols = wu_solutions(g)?;
    let mut rows = Vec::new();
    writeln!(text, "{g}").unwrap();
    writeln!(text, "b+ = {}, b- = {}, b0 = {}, sign = {}", inertia.n_plus, inertia.n_minus, inertia.n_zero, inertia.sign()).unwrap();
    for s in &sols {
        let d = plumbing_delta(g, s)?;
        writeln!(text, "wu {s}  delta = {d}").unwrap();
        rows.push(json!({"wu": s.bits(), "delta": d.to_string()}));
    }
    let mut j = json!({"command": "plumbing", "input": input, "graph": g.to_json(w), "inertia": inertia, "wu_vectors": rows});
    if let Some(w) = w {
        let d = plumbing_delta(g, w)?;
        writeln!(text, "given wu {w}: delta = {d}").unwrap();
        j["delta"] = json!(d.to_string());
    }
    if let Some(v) = bd {
        let w = w.cloned().or_else(|| sols.first().cloned()).ok_or_else(|| InputError("no Wu vector".into()))?;
        let r = blow_down(g, &w, v)?;
        let d = plumbing_delta(&r.graph, &r.mapped)?;
        writeln!(text, "blown down at {v}: {}\n  wu {}  delta = {d}", r.graph, r.mapped).unwrap();
        j["blow_down"] = json!({"vertex": v, "graph": r.graph.to_json(Some(&r.mapped)), "delta": d.to_string()});
    }
    Ok(Output { json: j, text: text.trim_end().to_string(), code: 0 })
}

/// Runs the CLI on `argv` (program name first), writing the report to `out`
/// and diagnostics to `err`. Returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let args: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match execute(&cli.cmd, &args) {
        Ok(o) => {
            if cli.json {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("report serializes"));
            } else {
                let _ = writeln!(out, "{}", o.text.trim_end());
            }
            o.code
        }
        Err(InputError(msg)) => {
            if cli.json {
                let _ = writeln!(out, "{}", json!({"error": msg, "input": {"argv": args}}));
            }
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// [`run_with`] on stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
