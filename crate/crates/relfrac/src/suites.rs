//! Reproduction suites: the Table 1 rows at desk scale and the cycle grid.
//! Instances run in parallel on the rayon pool; output keeps input order.

use rayon::prelude::*;
use relfrac_core::expand::{apply_expand, in_expand, relabels_to};
use relfrac_core::graph::{make_cycle, Graph};
use relfrac_core::relfrac::{
    gamma0, gamma1_certificate, relfrac, relfrac_cycles, relfrac_lp, relfrac_vertex_transitive, verify_distribution, GammaValue,
    MethodChoice,
};
use relfrac_core::{rat, Budget, Rational};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::report::{self, Style};

#[derive(Clone, Debug)]
pub enum Expect {
    Value(Rational),
    /// The value plus a replayed Expand script turning H into G.
    ValueWithScript(Rational),
    Gammas { gamma1: Rational, gamma0: Rational },
}

#[derive(Clone, Debug)]
pub struct Row {
    pub name: String,
    pub g: String,
    pub h: String,
    pub expect: Expect,
}

fn row(name: &str, g: &str, h: &str, expect: Expect) -> Row {
    Row { name: name.to_string(), g: g.to_string(), h: h.to_string(), expect }
}

/// The default rows, plus larger parameters with `big`.
pub fn table1_rows(big: bool) -> Vec<Row> {
    let mut rows = vec![
        row("Cay(Z5,±1)|Cay(Z13,±1)", "cayley:5:1", "cayley:13:1", Expect::Value(rat(5, 13))),
        row("Cay(Z9,±1..±3)|C9", "cayley:9:3", "cycle:9", Expect::Value(rat(1, 2))),
        row("Cay(Z10,±1,±2)|C7", "cayley:10:2", "cycle:7", Expect::ValueWithScript(rat(1, 1))),
        row("C3|J(6,3)", "cycle:3", "johnson3:6", Expect::Value(rat(1, 4))),
        row("C8|J(15,3)", "cycle:8", "johnson3:15", Expect::Gammas { gamma1: rat(4, 13), gamma0: rat(1, 3) }),
        row("C4|C7 (n even, m odd)", "cycle:4", "cycle:7", Expect::Value(rat(4, 6))),
        row("C6|C8 (m even)", "cycle:6", "cycle:8", Expect::Value(rat(6, 8))),
        row("C5|C7 (both odd, n <= m)", "cycle:5", "cycle:7", Expect::Value(rat(5, 7))),
        row("C7|C5 (both odd, n > m)", "cycle:7", "cycle:5", Expect::Value(rat(7, 4))),
    ];
    if big {
        rows.extend([
            row("Cay(Z7,±1,±2)|Cay(Z10,±1,±2)", "cayley:7:2", "cayley:10:2", Expect::Value(rat(7, 10))),
            row("Cay(Z13,±1..±5)|Cay(Z13,±1,±2)", "cayley:13:5", "cayley:13:2", Expect::Value(rat(1, 2))),
            row("Cay(Z10,±1..±3)|Cay(Z8,±1,±2)", "cayley:10:3", "cayley:8:2", Expect::ValueWithScript(rat(1, 1))),
            row("C5|J(10,3)", "cycle:5", "johnson3:10", Expect::Value(rat(1, 4))),
            row("C7|J(14,3)", "cycle:7", "johnson3:14", Expect::Value(rat(1, 4))),
        ]);
    }
    rows
}

fn check(style: Style, quantity: &str, expected: &Rational, computed: Result<Rational, CliError>) -> (Value, bool) {
    match computed {
        Ok(c) => {
            let ok = &c == expected;
            (json!({ "quantity": quantity, "expected": style.rational(expected), "computed": style.rational(&c), "ok": ok }), ok)
        }
        Err(e) => (json!({ "quantity": quantity, "expected": style.rational(expected), "error": e.to_string(), "ok": false }), false),
    }
}

/// One suite entry: its JSON and whether every check passed.
pub struct Outcome {
    pub value: Value,
    pub ok: bool,
}

pub fn run_row(r: &Row, budget: &Budget, style: Style) -> Outcome {
    let mut checks = Vec::new();
    let mut certs = Map::new();
    let mut all = true;
    let graphs = crate::io::load_graph(&r.g).and_then(|g| Ok((g, crate::io::load_graph(&r.h)?)));
    let (g, h) = match graphs {
        Ok(p) => p,
        Err(e) => {
            return Outcome { value: json!({ "row": r.name, "error": e.to_string(), "ok": false }), ok: false };
        }
    };
    let mut push = |(v, ok): (Value, bool)| {
        all &= ok;
        checks.push(v);
    };
    let mut method = None;
    match &r.expect {
        Expect::Value(want) | Expect::ValueWithScript(want) => {
            let got = relfrac(&g, &h, MethodChoice::Auto, false, budget).map_err(CliError::from);
            if let Ok(res) = &got {
                method = Some(res.method.name());
            }
            push(check(style, "relfrac", want, got.map(|res| res.value)));
            if matches!(r.expect, Expect::ValueWithScript(_)) {
                let (v, ok) = expand_replay(&h, &g, budget);
                certs.insert("expand".into(), v);
                push((json!({ "quantity": "expand script replay", "ok": ok }), ok));
            }
        }
        Expect::Gammas { gamma1, gamma0: want0 } => {
            let g1 = gamma1_certificate(&g, &h, budget).map_err(CliError::from).and_then(|res| {
                let GammaValue::Finite(v) = res.value else {
                    return Err(CliError::Mismatch("Γ1 is infinite".into()));
                };
                match &res.distribution {
                    Some(d) => {
                        verify_distribution(d, &v, &g, &h)?;
                        certs.insert("gamma1_support".into(), json!(d.len()));
                    }
                    None => return Err(CliError::Mismatch("Γ1 came without a distribution".into())),
                }
                Ok(v)
            });
            push(check(style, "gamma1", gamma1, g1));
            let g0 = gamma0(&g, &h, budget).map_err(CliError::from).and_then(|res| match (res.value, res.best_assignment) {
                (GammaValue::Finite(v), Some(f)) => {
                    if !f.is_valid(&g, &h) || f.sizes().into_iter().min().map(|m| rat(1, m as i64)) != Some(v.clone()) {
                        return Err(CliError::Mismatch("Γ0 assignment does not certify its value".into()));
                    }
                    certs.insert("gamma0_assignment".into(), report::assignment(&f));
                    Ok(v)
                }
                _ => Err(CliError::Mismatch("Γ0 is infinite".into())),
            });
            push(check(style, "gamma0", want0, g0));
        }
    }
    let mut v = json!({ "row": r.name, "g": r.g, "h": r.h, "checks": checks, "ok": all });
    if let Some(m) = method {
        v["method"] = json!(m);
    }
    if !certs.is_empty() {
        v["certificates"] = Value::Object(certs);
    }
    Outcome { value: v, ok: all }
}

/// Runs `in_expand(h, g)` and replays the script it returns.
fn expand_replay(h: &Graph, g: &Graph, budget: &Budget) -> (Value, bool) {
    match in_expand(h, g, budget) {
        Ok(Some(cert)) => {
            let replayed = apply_expand(h, &cert.script).map(|out| relabels_to(&out.graph, g, &cert.labels)).unwrap_or(false);
            (json!({ "script": report::script(&cert.script), "labels": cert.labels, "replay_verified": replayed }), replayed)
        }
        Ok(None) => (json!({ "member": false }), false),
        Err(e) => (json!({ "error": e.to_string() }), false),
    }
}

pub fn run_table1(big: bool, budget: &Budget, style: Style) -> Vec<Outcome> {
    table1_rows(big).par_iter().map(|r| run_row(r, budget, style)).collect()
}

/// Closed form, vertex-transitive formula and LP for one (n, m) cell.
pub fn run_cell(n: usize, m: usize, budget: &Budget, style: Style) -> Outcome {
    let computed = (|| -> Result<[Rational; 3], CliError> {
        let (g, h) = (make_cycle(n)?, make_cycle(m)?);
        Ok([relfrac_cycles(n, m)?, relfrac_vertex_transitive(&g, &h, budget)?.value, relfrac_lp(&g, &h, budget)?.value])
    })();
    match computed {
        Ok([closed, vt, lp]) => {
            let ok = closed == vt && vt == lp;
            let value = json!({
                "n": n, "m": m,
                "closed_form": style.rational(&closed),
                "vertex_transitive": style.rational(&vt),
                "lp": style.rational(&lp),
                "ok": ok,
            });
            Outcome { value, ok }
        }
        Err(e) => Outcome { value: json!({ "n": n, "m": m, "error": e.to_string(), "ok": false }), ok: false },
    }
}

pub fn run_cyclegrid(ns: std::ops::RangeInclusive<usize>, ms: std::ops::RangeInclusive<usize>, budget: &Budget, style: Style) -> Vec<Outcome> {
    let cells: Vec<(usize, usize)> = ns.flat_map(|n| ms.clone().map(move |m| (n, m))).collect();
    cells.par_iter().map(|&(n, m)| run_cell(n, m, budget, style)).collect()
}
