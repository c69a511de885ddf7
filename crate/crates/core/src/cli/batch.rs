//! JSON-lines batch jobs.
//!
//! Each non-blank line is `{"expr": .., "command": .., "params": {..}}`;
//! `command` names a subcommand and `params` holds its flags. The output
//! has one line per record, in input order, either the command's JSON or
//! an `{"error": ..}` object.

use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{Map, Value};

use super::{error_json, execute, parse_knot_expr, Request};
use crate::error::{Error, Result};
use crate::json::rational_from_str;
use crate::multisig::GroupRingForm;
use crate::seifert::KnotExpr;

#[derive(Clone, Debug, Deserialize)]
pub struct BatchRecord {
    #[serde(default)]
    pub expr: Option<String>,
    pub command: String,
    #[serde(default)]
    pub params: Map<String, Value>,
}

impl BatchRecord {
    fn expr(&self) -> Result<KnotExpr> {
        let text = self.expr.as_deref().ok_or_else(|| Error::Format("record needs an \"expr\"".into()))?;
        parse_knot_expr(text)
    }

    fn param(&self, key: &str) -> Result<&Value> {
        self.params.get(key).ok_or_else(|| Error::Format(format!("{} needs parameter \"{key}\"", self.command)))
    }

    fn uint(&self, key: &str) -> Result<u64> {
        self.param(key)?
            .as_u64()
            .ok_or_else(|| Error::Format(format!("parameter \"{key}\" must be a non-negative integer")))
    }

    fn int(&self, key: &str) -> Result<i64> {
        self.param(key)?.as_i64().ok_or_else(|| Error::Format(format!("parameter \"{key}\" must be an integer")))
    }

    fn to_request(&self) -> Result<Request> {
        Ok(match self.command.as_str() {
            "invariants" => Request::Invariants {
                expr: self.expr()?,
                n: if self.params.contains_key("n") { Some(self.uint("n")?) } else { None },
            },
            "shake" => Request::Shake { expr: self.expr()?, n: self.int("n")? },
            "shaking-matrix" => {
                Request::ShakingMatrix { expr: self.expr()?, k: self.uint("k")? as usize, n: self.uint("n")? as usize }
            }
            "witness" => {
                Request::Witness { expr: self.expr()?, g: self.uint("g")? as usize, h: self.uint("h")? as usize }
            }
            "casson-gordon" => Request::CassonGordon { expr: self.expr()?, n: self.uint("n")?, k: self.uint("k")? },
            "multisig" => {
                let form = match self.param("form")? {
                    Value::String(path) => super::read_form(path.as_ref())?,
                    v => GroupRingForm::from_json(v)?,
                };
                Request::Multisig { form }
            }
            "jump" => {
                let res = self
                    .param("resolution")?
                    .as_str()
                    .ok_or_else(|| Error::Format("resolution must be \"p/q\"".into()))?;
                Request::Jump { expr: self.expr()?, resolution: rational_from_str(res)? }
            }
            other => return Err(Error::Format(format!("unknown batch command \"{other}\""))),
        })
    }
}

fn run_line(line: &str) -> String {
    let out = serde_json::from_str::<BatchRecord>(line)
        .map_err(Error::from)
        .and_then(|r| r.to_request())
        .and_then(|r| execute(&r));
    match out {
        Ok(o) => o.value.to_string(),
        Err(e) => error_json(&e).to_string(),
    }
}

/// Evaluates every record of a JSON-lines job on `width` worker threads.
pub fn run_batch(text: &str, width: usize) -> Result<Vec<String>> {
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(width.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(|| lines.par_iter().map(|l| run_line(l)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    const JOB: &str = r#"
{"expr": "T(2,3)", "command": "invariants", "params": {"n": 3}}
{"expr": "sum(twist(1),twist(1))", "command": "shake", "params": {"n": 2}}

{"expr": "T(2,4)", "command": "shake", "params": {"n": 2}}
{"command": "multisig", "params": {"form": {"n": 2, "entries": [[{"lo": 0, "coeffs": [1]}]]}}}
{"expr": "U", "command": "teleport"}
not json
{"expr": "T(2,3)", "command": "jump", "params": {"resolution": "1/50"}}
"#;

    #[test]
    fn one_line_per_record() {
        let out = run_batch(JOB, 1).unwrap();
        assert_eq!(out.len(), 7);
        let v: Vec<Value> = out.iter().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(v[0]["branched_order"], json!(4));
        assert_eq!(v[1]["verdict"], json!(false));
        assert_eq!(v[2]["error"]["kind"], json!("semantic"));
        assert_eq!(v[3]["alpha"], json!([1, 1]));
        assert_eq!(v[4]["error"]["kind"], json!("format"));
        assert_eq!(v[5]["error"]["kind"], json!("format"));
        assert!(v[6]["interval"].is_array());
    }

    #[test]
    fn width_does_not_change_output() {
        let serial = run_batch(JOB, 1).unwrap();
        for w in [2, 4, 8] {
            assert_eq!(run_batch(JOB, w).unwrap(), serial);
        }
    }
}
