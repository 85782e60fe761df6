//! The `relfrac` command line. Every command prints one JSON report on
//! stdout and a short summary on stderr.
//!
//! Exit codes: 0 ok, 2 usage or bad input, 3 timeout, 4 mismatch or
//! inconsistency, 5 undecided search.

use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use relfrac_core::expand::{apply_expand, expand_feasibility_prefilter, in_expand, relabels_to};
use relfrac_core::genind::{fractional_multiplier, generalized_independence};
use relfrac_core::graph::{complement, disjoint_union, strong_power, strong_product, Graph};
use relfrac_core::hom::{cayley_homomorphism, find_homomorphism, is_homomorphism};
use relfrac_core::mis::max_independent_set;
use relfrac_core::relfrac::{
    fractional_independence, gamma0, gamma1_certificate, maximizer_from_weights, maximizer_witness, relfrac, verify_distribution,
    GammaValue, MaximizerWitness, MethodChoice,
};
use relfrac_core::{Budget, Rational};
use serde_json::{json, Value};

use crate::deadline::WallClock;
use crate::error::CliError;
use crate::io;
use crate::report::{self, Report, Style};
use crate::{selftest, suites};

#[derive(Parser, Debug)]
#[command(name = "relfrac", version, about = "Exact relative fractional independence numbers α*(G|H)")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Wall-clock limit per command in seconds; 0 disables it.
    #[arg(long, global = true, env = "RELFRAC_TIMEOUT", default_value_t = 300)]
    pub timeout: u64,
    /// Largest product graph any step may build.
    #[arg(long, global = true, default_value_t = 5000)]
    pub max_product_vertices: usize,
    /// Node cap for backtracking searches; hitting it reports "undecided".
    #[arg(long, global = true, default_value_t = 50_000_000)]
    pub max_search_nodes: u64,
    /// Worker threads for commands that run independent instances.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Add six-decimal renderings next to every rational.
    #[arg(long, global = true)]
    pub approx: bool,
    /// Include elapsed_ms in the JSON report (otherwise it only goes to stderr).
    #[arg(long, global = true)]
    pub timing: bool,
    /// Format for graph files written by `make --out`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Edgelist,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodArg {
    Auto,
    Lp,
    Vt,
    Closed,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a graph: a family spec (cycle:7, cayley:10:2, johnson3:6,
    /// complete:4, path:5, empty:3, petersen) or
    /// `complement G`, `union G H`, `sprod G H`, `spower G d`.
    Make {
        #[arg(required = true, num_args = 1..=3)]
        spec: Vec<String>,
        /// Write the graph here in --format instead of only embedding it in the report.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// α*(G|H).
    Relfrac {
        g: String,
        h: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Require a second route to agree exactly.
        #[arg(long)]
        cross_check: bool,
        /// Attach a graph W with α(G⊠W)/α(H⊠W) = α*(G|H).
        #[arg(long)]
        witness: bool,
        /// Attach the Γ1 distribution over assignments.
        #[arg(long)]
        cert: bool,
        /// Also write the certificates to this file.
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// The Table 1 rows at desk scale; exit 4 on any mismatch.
    Table1 {
        /// Add the larger instantiations.
        #[arg(long)]
        big: bool,
    },
    /// Closed form, vertex-transitive formula and LP on every C_n|C_m.
    Cyclegrid {
        #[arg(long, default_value_t = 3)]
        nmin: usize,
        #[arg(long, default_value_t = 9)]
        nmax: usize,
        #[arg(long, default_value_t = 3)]
        mmin: usize,
        #[arg(long, default_value_t = 9)]
        mmax: usize,
    },
    /// Decide G ∈ Expand(H) and replay the script.
    ExpandCheck {
        h: String,
        g: String,
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// A homomorphism H → G, or the explicit circulant map with --cayley n,m,k,l,s.
    Hom {
        #[arg(required_unless_present = "cayley")]
        h: Option<String>,
        #[arg(required_unless_present = "cayley")]
        g: Option<String>,
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["h", "g"])]
        cayley: Option<Vec<usize>>,
    },
    /// Γ0(G,H) with a best assignment.
    Gamma0 { g: String, h: String },
    /// α(G) with a witness.
    Alpha { g: String },
    /// α*(G) and the multiplier N with α_N(G) = N·α*(G).
    Alphafrac { g: String },
    /// α_k(G) with multiplicities.
    Alphak { g: String, k: usize },
    /// A maximizer W for α*(G|H).
    Witness { g: String, h: String },
    /// Randomized property checks and the assignment oracle; exit 4 on any violation.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Multiplies every property's case count.
        #[arg(long, default_value_t = 1)]
        scale: usize,
        #[arg(long, default_value_t = 50)]
        oracle_cases: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Make { .. } => "make",
            Command::Relfrac { .. } => "relfrac",
            Command::Table1 { .. } => "table1",
            Command::Cyclegrid { .. } => "cyclegrid",
            Command::ExpandCheck { .. } => "expand-check",
            Command::Hom { .. } => "hom",
            Command::Gamma0 { .. } => "gamma0",
            Command::Alpha { .. } => "alpha",
            Command::Alphafrac { .. } => "alphafrac",
            Command::Alphak { .. } => "alphak",
            Command::Witness { .. } => "witness",
            Command::Selftest { .. } => "selftest",
        }
    }
}

/// What the process should print and return.
#[derive(Debug)]
pub struct Output {
    pub stdout: String,
    pub stderr: Vec<String>,
    pub code: i32,
}

struct Ctx {
    budget: Budget,
    style: Style,
    format: Format,
}

impl Global {
    fn budget(&self) -> Budget {
        let mut b = Budget { max_product_vertices: self.max_product_vertices, search_nodes: self.max_search_nodes, ..Budget::default() };
        if self.timeout > 0 {
            b.deadline = Some(Arc::new(WallClock::after(Duration::from_secs(self.timeout))));
        }
        b
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Output { stdout: e.to_string(), stderr: Vec::new(), code: 0 };
            }
            let err = CliError::Usage(e.to_string().lines().next().unwrap_or("bad arguments").trim_start_matches("error: ").to_string());
            let mut r = Report::new("");
            r.fail(&err, Style::default());
            return finish(r, None, Some(err), false);
        }
    };
    let started = Instant::now();
    let ctx = Ctx { budget: cli.global.budget(), style: Style { approx: cli.global.approx }, format: cli.global.format };
    let mut report = Report::new(cli.command.name());
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.global.threads.unwrap_or(0)).build();
    let result = match pool {
        Ok(pool) => pool.install(|| dispatch(&cli.command, &ctx, &mut report)),
        Err(e) => Err(CliError::Usage(format!("cannot start thread pool: {e}"))),
    };
    let elapsed = started.elapsed().as_millis();
    if cli.global.timing {
        report.elapsed_ms = Some(elapsed);
    }
    if let Err(e) = &result {
        report.fail(e, ctx.style);
    }
    finish(report, Some(elapsed), result.err(), true)
}

fn finish(report: Report, elapsed: Option<u128>, err: Option<CliError>, labelled: bool) -> Output {
    let mut stdout = serde_json::to_string_pretty(&report.to_value()).expect("report serialises");
    stdout.push('\n');
    let mut stderr: Vec<String> = report.summary.clone();
    let code = err.as_ref().map_or(0, CliError::exit_code);
    if let Some(e) = &err {
        let who = if labelled && !report.command.is_empty() { format!("relfrac {}: ", report.command) } else { "relfrac: ".to_string() };
        stderr.push(format!("{who}{e}"));
    }
    if let Some(ms) = elapsed {
        stderr.push(format!("elapsed {ms} ms"));
    }
    Output { stdout, stderr, code }
}

fn dispatch(cmd: &Command, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    match cmd {
        Command::Make { spec, out } => cmd_make(ctx, r, spec, out.as_ref()),
        Command::Relfrac { g, h, method, cross_check, witness, cert, cert_out } => {
            cmd_relfrac(ctx, r, g, h, *method, *cross_check, *witness, *cert, cert_out.as_ref())
        }
        Command::Table1 { big } => cmd_table1(ctx, r, *big),
        Command::Cyclegrid { nmin, nmax, mmin, mmax } => cmd_cyclegrid(ctx, r, *nmin, *nmax, *mmin, *mmax),
        Command::ExpandCheck { h, g, cert_out } => cmd_expand_check(ctx, r, h, g, cert_out.as_ref()),
        Command::Hom { h, g, cayley } => cmd_hom(ctx, r, h.as_deref(), g.as_deref(), cayley.as_deref()),
        Command::Gamma0 { g, h } => cmd_gamma0(ctx, r, g, h),
        Command::Alpha { g } => cmd_alpha(ctx, r, g),
        Command::Alphafrac { g } => cmd_alphafrac(ctx, r, g),
        Command::Alphak { g, k } => cmd_alphak(ctx, r, g, *k),
        Command::Witness { g, h } => cmd_witness(ctx, r, g, h),
        Command::Selftest { seed, scale, oracle_cases } => cmd_selftest(ctx, r, *seed, *scale, *oracle_cases),
    }
}

fn load(r: &mut Report, key: &str, arg: &str) -> Result<Graph, CliError> {
    r.input(key, arg);
    let g = io::load_graph(arg)?;
    r.stat(&format!("{}_vertices", key.to_lowercase()), g.n());
    Ok(g)
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })
}

fn write_certs(path: Option<&PathBuf>, certs: &Value) -> Result<(), CliError> {
    match path {
        Some(p) => write_file(p, &format!("{}\n", serde_json::to_string_pretty(certs).expect("json"))),
        None => Ok(()),
    }
}

fn cmd_make(ctx: &Ctx, r: &mut Report, spec: &[String], out: Option<&PathBuf>) -> Result<(), CliError> {
    r.input("spec", spec.join(" "));
    let g = match spec {
        [one] => io::load_graph(one)?,
        [op, a] if op == "complement" => complement(&io::load_graph(a)?),
        [op, a, b] if op == "union" => disjoint_union(&io::load_graph(a)?, &io::load_graph(b)?),
        [op, a, b] if op == "sprod" => {
            let (x, y) = (io::load_graph(a)?, io::load_graph(b)?);
            ctx.budget.check_product(x.n() * y.n())?;
            strong_product(&x, &y)
        }
        [op, a, d] if op == "spower" => {
            let x = io::load_graph(a)?;
            let d: usize = d.parse().map_err(|_| CliError::Usage(format!("spower needs an integer exponent, got {d:?}")))?;
            ctx.budget.check_product(x.n().saturating_pow(d as u32))?;
            strong_power(&x, d)?
        }
        _ => return Err(CliError::Usage(format!("unknown make spec {:?}", spec.join(" ")))),
    };
    r.result = io::to_json_value(&g);
    r.stat("vertices", g.n());
    r.stat("edges", g.edge_count());
    if let Some(path) = out {
        let text = match ctx.format {
            Format::Json => format!("{}\n", serde_json::to_string(&r.result).expect("json")),
            Format::Edgelist => io::to_edge_list(&g),
        };
        write_file(path, &text)?;
        r.input("out", path.display().to_string());
    }
    r.say(format!("graph with {} vertices and {} edges", g.n(), g.edge_count()));
    Ok(())
}

fn witness_json(ctx: &Ctx, w: &MaximizerWitness) -> Value {
    json!({
        "graph": io::to_json_value(&w.graph),
        "copies": w.copies,
        "replication": w.replication.to_string(),
        "alpha_g_w": w.alpha_gw,
        "alpha_h_w": w.alpha_hw,
        "ratio": ctx.style.rational(&Rational::new(w.alpha_gw.into(), w.alpha_hw.into())),
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_relfrac(
    ctx: &Ctx,
    r: &mut Report,
    g: &str,
    h: &str,
    method: MethodArg,
    cross_check: bool,
    want_witness: bool,
    want_cert: bool,
    cert_out: Option<&PathBuf>,
) -> Result<(), CliError> {
    let (g, h) = (load(r, "G", g)?, load(r, "H", h)?);
    let choice = match method {
        MethodArg::Auto => MethodChoice::Auto,
        MethodArg::Lp => MethodChoice::Lp,
        MethodArg::Vt => MethodChoice::Vt,
        MethodArg::Closed => MethodChoice::Closed,
    };
    r.input("method", format!("{method:?}").to_lowercase());
    r.input("cross_check", cross_check);
    let res = relfrac(&g, &h, choice, cross_check, &ctx.budget)?;
    r.result = json!({ "value": ctx.style.rational(&res.value) });
    r.method = Some(res.method.name().to_string());
    r.stat("rounds", res.rounds);
    r.stat("nodes", res.nodes);
    r.say(format!("α*(G|H) = {} via {}", res.value, res.method.name()));
    let mut certs = serde_json::Map::new();
    if want_witness {
        let w = maximizer_from_weights(&g, &h, &res.value, &res.weights, &ctx.budget)?;
        r.say(format!("witness W on {} vertices: α(G⊠W)/α(H⊠W) = {}/{}", w.graph.n(), w.alpha_gw, w.alpha_hw));
        certs.insert("witness".into(), witness_json(ctx, &w));
    }
    if want_cert {
        let dist = match res.dual_cert {
            Some(d) => d,
            None => gamma1_certificate(&g, &h, &ctx.budget)?
                .distribution
                .ok_or_else(|| CliError::Mismatch("no Γ1 distribution available".into()))?,
        };
        verify_distribution(&dist, &res.value, &g, &h)?;
        r.say(format!("Γ1 distribution over {} assignments verified", dist.len()));
        certs.insert("gamma1".into(), ctx.style.distribution(&dist));
    }
    if !certs.is_empty() {
        let certs = Value::Object(certs);
        write_certs(cert_out, &certs)?;
        r.certificates = Some(certs);
    }
    Ok(())
}

fn cmd_table1(ctx: &Ctx, r: &mut Report, big: bool) -> Result<(), CliError> {
    r.input("big", big);
    let rows = suites::run_table1(big, &ctx.budget, ctx.style);
    let failed: Vec<String> = rows.iter().filter(|o| !o.ok).map(|o| o.value["row"].as_str().unwrap_or("?").to_string()).collect();
    for o in &rows {
        let checks = o.value["checks"].as_array().map(|cs| {
            cs.iter()
                .map(|c| match (&c["expected"], &c["computed"]) {
                    (e, c2) if !c2.is_null() => format!("{} expected {} got {}", c["quantity"].as_str().unwrap_or(""), show(e), show(c2)),
                    _ => format!("{} {}", c["quantity"].as_str().unwrap_or(""), if c["ok"] == true { "ok" } else { "failed" }),
                })
                .collect::<Vec<_>>()
                .join("; ")
        });
        r.say(format!("{} {}: {}", if o.ok { "ok  " } else { "FAIL" }, o.value["row"].as_str().unwrap_or("?"), checks.unwrap_or_default()));
    }
    r.stat("rows", rows.len());
    r.result = json!({ "rows": rows.iter().map(|o| o.value.clone()).collect::<Vec<_>>(), "ok": failed.is_empty() });
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!("rows failed: {}", failed.join(", "))))
    }
}

fn show(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) => m.get("value").map(show).unwrap_or_default(),
        other => other.to_string(),
    }
}

fn cmd_cyclegrid(ctx: &Ctx, r: &mut Report, nmin: usize, nmax: usize, mmin: usize, mmax: usize) -> Result<(), CliError> {
    for (k, v) in [("nmin", nmin), ("nmax", nmax), ("mmin", mmin), ("mmax", mmax)] {
        r.input(k, v);
    }
    if nmin < 3 || mmin < 3 || nmin > nmax || mmin > mmax {
        return Err(CliError::Usage("cycle lengths need 3 <= min <= max".into()));
    }
    let cells = suites::run_cyclegrid(nmin..=nmax, mmin..=mmax, &ctx.budget, ctx.style);
    let failed: Vec<String> = cells.iter().filter(|c| !c.ok).map(|c| format!("({},{})", c.value["n"], c.value["m"])).collect();
    r.stat("cells", cells.len());
    r.say(format!("{} cells, {} disagreements", cells.len(), failed.len()));
    r.result = json!({ "cells": cells.iter().map(|c| c.value.clone()).collect::<Vec<_>>(), "ok": failed.is_empty() });
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!("routes disagree at {}", failed.join(", "))))
    }
}

fn cmd_expand_check(ctx: &Ctx, r: &mut Report, h: &str, g: &str, cert_out: Option<&PathBuf>) -> Result<(), CliError> {
    let (h, g) = (load(r, "H", h)?, load(r, "G", g)?);
    match expand_feasibility_prefilter(&h, &g, &ctx.budget) {
        Ok(p) => r.stat("prefilter", p),
        Err(relfrac_core::Error::SizeLimit { .. }) => r.stat("prefilter", "skipped"),
        Err(e) => return Err(e.into()),
    }
    match in_expand(&h, &g, &ctx.budget)? {
        None => {
            r.result = json!({ "member": false });
            r.say("G is not in Expand(H) (search exhausted)");
        }
        Some(cert) => {
            let out = apply_expand(&h, &cert.script)?;
            if !relabels_to(&out.graph, &g, &cert.labels) {
                return Err(relfrac_core::Error::Inconsistency("expand script replay does not give G".into()).into());
            }
            r.result = json!({ "member": true, "replay_verified": true });
            r.stat("script_ops", cert.script.ops.len());
            let certs = json!({ "script": report::script(&cert.script), "assignment": cert.assignment, "labels": cert.labels });
            write_certs(cert_out, &certs)?;
            r.certificates = Some(certs);
            r.say(format!("G is in Expand(H); script of {} ops replayed and verified", cert.script.ops.len()));
        }
    }
    Ok(())
}

fn cmd_hom(ctx: &Ctx, r: &mut Report, h: Option<&str>, g: Option<&str>, cayley: Option<&[usize]>) -> Result<(), CliError> {
    if let Some(p) = cayley {
        let [n, m, k, ell, s] = p else {
            return Err(CliError::Usage("--cayley needs n,m,k,l,s".into()));
        };
        r.input("cayley", json!(p));
        let hom = cayley_homomorphism(*n, *m, *k, *ell, *s)?;
        r.result = json!({ "exists": true, "map": hom.map, "verified": true });
        r.method = Some("explicit".into());
        r.say(format!("Cay(Z{m},±1..±{k}) → Cay(Z{n},±1..±{k}) verified"));
        return Ok(());
    }
    let (h, g) = (load(r, "H", h.unwrap_or_default())?, load(r, "G", g.unwrap_or_default())?);
    r.method = Some("search".into());
    match find_homomorphism(&h, &g, &ctx.budget)? {
        Some(hom) => {
            if !is_homomorphism(&h, &g, &hom.map) {
                return Err(relfrac_core::Error::Inconsistency("returned map is not a homomorphism".into()).into());
            }
            r.result = json!({ "exists": true, "map": hom.map, "verified": true });
            r.say("homomorphism H → G found and verified");
        }
        None => {
            r.result = json!({ "exists": false });
            r.say("no homomorphism H → G (search exhausted)");
        }
    }
    Ok(())
}

fn cmd_gamma0(ctx: &Ctx, r: &mut Report, g: &str, h: &str) -> Result<(), CliError> {
    let (g, h) = (load(r, "G", g)?, load(r, "H", h)?);
    let res = gamma0(&g, &h, &ctx.budget)?;
    r.result = json!({ "value": ctx.style.gamma(&res.value) });
    if let Some(f) = &res.best_assignment {
        r.certificates = Some(json!({ "assignment": report::assignment(f) }));
    }
    r.say(match &res.value {
        GammaValue::Finite(v) => format!("Γ0(G,H) = {v}"),
        GammaValue::Infinite => "Γ0(G,H) = inf".to_string(),
    });
    Ok(())
}

fn cmd_alpha(ctx: &Ctx, r: &mut Report, g: &str) -> Result<(), CliError> {
    let g = load(r, "G", g)?;
    let res = max_independent_set(&g, &ctx.budget)?;
    r.result = json!({ "value": res.value, "witness": report::set(&res.witness) });
    r.stat("nodes", res.nodes);
    r.say(format!("α(G) = {}", res.value));
    Ok(())
}

fn cmd_alphafrac(ctx: &Ctx, r: &mut Report, g: &str) -> Result<(), CliError> {
    let g = load(r, "G", g)?;
    let value = fractional_independence(&g, &ctx.budget)?;
    let mut result = json!({ "value": ctx.style.rational(&value) });
    if let Ok((_, n)) = fractional_multiplier(&g, &ctx.budget) {
        result["multiplier"] = json!(n);
    }
    r.result = result;
    r.say(format!("α*(G) = {value}"));
    Ok(())
}

fn cmd_alphak(ctx: &Ctx, r: &mut Report, g: &str, k: usize) -> Result<(), CliError> {
    let g = load(r, "G", g)?;
    r.input("k", k);
    let res = generalized_independence(&g, k, &ctx.budget)?;
    r.result = json!({ "value": res.value, "multiplicities": res.multiplicities });
    r.say(format!("α_{k}(G) = {}", res.value));
    Ok(())
}

fn cmd_witness(ctx: &Ctx, r: &mut Report, g: &str, h: &str) -> Result<(), CliError> {
    let (g, h) = (load(r, "G", g)?, load(r, "H", h)?);
    let w = maximizer_witness(&g, &h, &ctx.budget)?;
    let ratio = Rational::new(w.alpha_gw.into(), w.alpha_hw.into());
    r.result = json!({ "value": ctx.style.rational(&ratio), "witness_vertices": w.graph.n() });
    r.certificates = Some(json!({ "witness": witness_json(ctx, &w) }));
    r.say(format!("W on {} vertices: α(G⊠W)/α(H⊠W) = {}/{} = {ratio}", w.graph.n(), w.alpha_gw, w.alpha_hw));
    Ok(())
}

fn cmd_selftest(ctx: &Ctx, r: &mut Report, seed: u64, scale: usize, oracle_cases: usize) -> Result<(), CliError> {
    r.input("seed", seed);
    r.input("scale", scale);
    r.input("oracle_cases", oracle_cases);
    let tallies = selftest::run_properties(seed, scale, &ctx.budget);
    let oracle = selftest::oracle_cases(seed, oracle_cases, &ctx.budget)?;
    let agree = oracle.iter().filter(|c| c.separation == c.brute).count();
    let checks: usize = tallies.iter().map(|t| t.checks).sum();
    let violations: usize = tallies.iter().map(|t| t.violations.len()).sum::<usize>() + (oracle.len() - agree);
    for t in &tallies {
        r.say(format!("{:<34} {:>4} checks, {} violations", t.name, t.checks, t.violations.len()));
    }
    r.say(format!("oracle equivalence: {agree}/{} cases agree", oracle.len()));
    r.result = json!({
        "properties": tallies.iter().map(|t| json!({ "name": t.name, "checks": t.checks, "violations": t.violations })).collect::<Vec<_>>(),
        "checks": checks,
        "oracle": { "cases": oracle.len(), "agree": agree },
        "violations": violations,
    });
    if violations == 0 {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!("{violations} property violations")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> Value {
        let out = run(std::iter::once("relfrac").chain(args.iter().copied()));
        assert_eq!(out.code, 0, "{}\n{:?}", out.stdout, out.stderr);
        serde_json::from_str(&out.stdout).unwrap()
    }

    #[test]
    fn relfrac_examples() {
        assert_eq!(run_ok(&["relfrac", "cycle:9", "cycle:11"])["result"]["value"], "9/11");
        assert_eq!(run_ok(&["relfrac", "cycle:7", "cycle:5"])["result"]["value"], "7/4");
        assert_eq!(run_ok(&["relfrac", "complete:1", "cycle:5"])["result"]["value"], "1/2");
    }

    #[test]
    fn usage_errors_are_json() {
        let out = run(["relfrac", "relfrac", "cycle:2", "cycle:5"]);
        assert_eq!(out.code, 2);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["error"]["kind"], "invalid_parameter");
        let out = run(["relfrac", "frobnicate"]);
        assert_eq!(out.code, 2);
        assert!(serde_json::from_str::<Value>(&out.stdout).unwrap()["error"].is_object());
    }

    #[test]
    fn wrappers() {
        assert_eq!(run_ok(&["alpha", "johnson3:6"])["result"]["value"], 4);
        assert_eq!(run_ok(&["alphak", "cycle:5", "2"])["result"]["value"], 5);
        assert_eq!(run_ok(&["alphafrac", "cycle:5"])["result"]["value"], "5/2");
        assert_eq!(run_ok(&["gamma0", "cycle:3", "johnson3:6"])["result"]["value"], "1/4");
        assert_eq!(run_ok(&["hom", "cycle:7", "cycle:5"])["result"]["exists"], true);
        assert_eq!(run_ok(&["hom", "cycle:5", "cycle:7"])["result"]["exists"], false);
        assert_eq!(run_ok(&["hom", "--cayley", "5,13,1,1,4"])["result"]["map"][12], 1);
        let e = run_ok(&["expand-check", "cycle:7", "cayley:10:2"]);
        assert_eq!(e["result"]["member"], true);
        assert!(e["certificates"]["script"]["ops"].as_array().unwrap().len() > 3);
        assert_eq!(run_ok(&["make", "sprod", "cycle:5", "cycle:5"])["result"]["n"], 25);
    }
}
