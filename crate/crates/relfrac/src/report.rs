//! JSON rendering. Rationals are `"p/q"` strings in lowest terms (`"2"`
//! for integers); with `--approx` they become `{"value": "p/q", "approx":
//! "0.123457"}`. Γ0 = ∞ renders as `"inf"`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use relfrac_core::expand::{ExpandOp, ExpandScript};
use relfrac_core::relfrac::{AssignmentF, Distribution, GammaValue};
use relfrac_core::{Rational, VertexSet};
use serde_json::{json, Map, Value};

use crate::error::CliError;

/// `r` rounded half away from zero to `digits` decimals, exactly.
pub fn decimal(r: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (r.abs() * Rational::from_integer(scale.clone()) + Rational::new(1.into(), 2.into())).floor().to_integer();
    let (q, rem) = (&scaled / &scale, &scaled % &scale);
    let sign = if r.is_negative() && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{q}");
    }
    format!("{sign}{q}.{rem:0>width$}", width = digits as usize)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Style {
    pub approx: bool,
}

impl Style {
    pub fn rational(&self, r: &Rational) -> Value {
        if self.approx {
            json!({ "value": r.to_string(), "approx": decimal(r, 6) })
        } else {
            Value::String(r.to_string())
        }
    }

    pub fn gamma(&self, g: &GammaValue) -> Value {
        match g {
            GammaValue::Finite(r) => self.rational(r),
            GammaValue::Infinite => Value::String("inf".into()),
        }
    }

    pub fn rationals(&self, rs: &[Rational]) -> Value {
        Value::Array(rs.iter().map(|r| self.rational(r)).collect())
    }

    pub fn distribution(&self, d: &Distribution) -> Value {
        Value::Array(d.iter().map(|(f, p)| json!({ "probability": self.rational(p), "assignment": assignment(f) })).collect())
    }
}

pub fn set(s: &VertexSet) -> Value {
    json!(s.to_vec())
}

pub fn assignment(f: &AssignmentF) -> Value {
    Value::Array(f.sets.iter().map(set).collect())
}

pub fn script(s: &ExpandScript) -> Value {
    let ops: Vec<Value> = s
        .ops
        .iter()
        .map(|op| match *op {
            ExpandOp::RemoveVertex { v } => json!({ "op": "remove", "v": v }),
            ExpandOp::ReplaceByClique { v, k } => json!({ "op": "clique", "v": v, "k": k }),
            ExpandOp::AddEdge { u, w } => json!({ "op": "edge", "u": u, "w": w }),
        })
        .collect();
    json!({ "normal_form": s.normal_form, "ops": ops })
}

pub fn parse_script(v: &Value) -> Result<ExpandScript, CliError> {
    let bad = |m: &str| CliError::Usage(format!("bad expand script: {m}"));
    let field = |o: &Value, k: &str| o.get(k).and_then(Value::as_u64).map(|x| x as usize).ok_or_else(|| bad(&format!("missing integer {k:?}")));
    let ops = v.get("ops").and_then(Value::as_array).ok_or_else(|| bad("missing \"ops\" array"))?;
    let mut out = Vec::with_capacity(ops.len());
    for o in ops {
        out.push(match o.get("op").and_then(Value::as_str) {
            Some("remove") => ExpandOp::RemoveVertex { v: field(o, "v")? },
            Some("clique") => ExpandOp::ReplaceByClique { v: field(o, "v")?, k: field(o, "k")? },
            Some("edge") => ExpandOp::AddEdge { u: field(o, "u")?, w: field(o, "w")? },
            other => return Err(bad(&format!("unknown op {other:?}"))),
        });
    }
    let normal_form = v.get("normal_form").and_then(Value::as_bool).unwrap_or(false);
    Ok(ExpandScript { ops: out, normal_form })
}

/// One command's output. Keys are emitted in sorted order, so reports are
/// byte-identical for identical inputs.
#[derive(Debug, Default)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub result: Value,
    pub method: Option<String>,
    pub certificates: Option<Value>,
    pub stats: Map<String, Value>,
    pub elapsed_ms: Option<u128>,
    pub error: Option<Value>,
    /// Human-readable lines for stderr; never part of the JSON.
    pub summary: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report { command: command.to_string(), result: Value::Null, ..Report::default() }
    }

    pub fn input(&mut self, k: &str, v: impl Into<Value>) {
        self.inputs.insert(k.to_string(), v.into());
    }

    pub fn stat(&mut self, k: &str, v: impl Into<Value>) {
        self.stats.insert(k.to_string(), v.into());
    }

    pub fn say(&mut self, line: impl Into<String>) {
        self.summary.push(line.into());
    }

    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), Value::String(self.command.clone()));
        m.insert("inputs".into(), Value::Object(self.inputs.clone()));
        m.insert("result".into(), self.result.clone());
        if let Some(me) = &self.method {
            m.insert("method".into(), Value::String(me.clone()));
        }
        if let Some(c) = &self.certificates {
            m.insert("certificates".into(), c.clone());
        }
        m.insert("stats".into(), Value::Object(self.stats.clone()));
        if let Some(t) = self.elapsed_ms {
            m.insert("elapsed_ms".into(), json!(t as u64));
        }
        if let Some(e) = &self.error {
            m.insert("error".into(), e.clone());
        }
        Value::Object(m)
    }

    pub fn fail(&mut self, e: &CliError, style: Style) {
        let mut err = json!({ "kind": e.kind(), "message": e.to_string(), "exit_code": e.exit_code() });
        if let CliError::Core(relfrac_core::Error::Timeout { lower_bound: Some(lb) }) = e {
            err["lower_bound"] = style.rational(lb);
        }
        self.error = Some(err);
    }
}
