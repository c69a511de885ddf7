//! Command-line surface: subcommands, JSON output and batch processing.
//!
//! Exit codes: `0` success, `1` usage error, `2` computation error (an
//! `{"error": ...}` object is written to standard output), `3` obstructed
//! (only with `shake --fail-on-obstructed`).

mod batch;
mod parse;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::invariants::{arf, branched_cover_order, carrier_of, first_jump_bracket, signatures_at, CarrierSource};
use crate::json::{bigint_to_json, rational_from_str, rational_to_string};
use crate::multisig::{coordinates, multisignature, GroupRingForm};
use crate::seifert::{shake1_genus_witness, shaking_matrix, KnotExpr};
use crate::shake::{casson_gordon_sigma, cg_to_json, shake_slice_report};

pub use batch::{run_batch, BatchRecord};
pub use parse::parse_knot_expr;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTATION: i32 = 2;
pub const EXIT_OBSTRUCTED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "knotshake", version, about = "Exact knot invariants and shake-slice obstructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Alexander polynomial, Arf invariant and, with --n, the branched
    /// cover order and signatures at zeta_N^k for k = 0..N/2.
    Invariants {
        expr: String,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Evaluate the Z/n-shake-slice criterion.
    Shake {
        expr: String,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Exit with status 3 when the verdict is negative.
        #[arg(long)]
        fail_on_obstructed: bool,
    },
    /// Seifert matrix of the (2k+1)-component n-shaking.
    ShakingMatrix {
        expr: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Slice-surface witness for the 1-shaking.
    Witness {
        expr: String,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        h: usize,
    },
    /// Surgery Casson-Gordon signature at zeta_N^K.
    CassonGordon {
        expr: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Multisignature of a Hermitian form over Z[Z/n].
    Multisig {
        #[arg(long)]
        form: PathBuf,
    },
    /// Bracket the first jump of the signature function on (0, 1/2].
    Jump {
        expr: String,
        #[arg(long)]
        resolution: String,
    },
    /// Run a JSON-lines job file; one result line per record, in order.
    Batch {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
    },
}

/// A single computation, independent of how it was requested.
#[derive(Clone, Debug)]
pub enum Request {
    Invariants { expr: KnotExpr, n: Option<u64> },
    Shake { expr: KnotExpr, n: i64 },
    ShakingMatrix { expr: KnotExpr, k: usize, n: usize },
    Witness { expr: KnotExpr, g: usize, h: usize },
    CassonGordon { expr: KnotExpr, n: u64, k: u64 },
    Multisig { form: GroupRingForm },
    Jump { expr: KnotExpr, resolution: BigRational },
}

/// Result payload, plus whether it reports an obstruction.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub value: Value,
    pub obstructed: bool,
}

impl From<Value> for Outcome {
    fn from(value: Value) -> Self {
        Outcome { value, obstructed: false }
    }
}

pub fn execute(req: &Request) -> Result<Outcome> {
    match req {
        Request::Invariants { expr, n } => {
            let c = carrier_of(expr)?;
            let source = match c.source() {
                CarrierSource::MatrixBacked => "matrix",
                CarrierSource::FormulaBacked => "formula",
            };
            let mut out = json!({
                "expr": expr.to_string(),
                "alexander": c.delta().to_json(),
                "arf": arf(&c).bit,
                "source": source,
            });
            if let Some(n) = *n {
                let order = branched_cover_order(&c, n)?;
                let ks: Vec<u64> = (0..=n / 2).collect();
                let sigs: Vec<Value> =
                    signatures_at(&c, n, &ks).into_iter().map(|(k, s)| json!({ "k": k, "sigma": s })).collect();
                out["n"] = json!(n);
                out["branched_order"] = bigint_to_json(&order);
                out["signatures"] = Value::Array(sigs);
            }
            Ok(out.into())
        }
        Request::Shake { expr, n } => {
            let r = shake_slice_report(expr, *n)?;
            let mut value = r.to_json();
            value["expr"] = json!(expr.to_string());
            Ok(Outcome { value, obstructed: !r.verdict })
        }
        Request::ShakingMatrix { expr, k, n } => Ok(shaking_matrix(&expr.to_seifert()?, *k, *n)?.to_json().into()),
        Request::Witness { expr, g, h } => Ok(shake1_genus_witness(&expr.to_seifert()?, *g, *h)?.to_json().into()),
        Request::CassonGordon { expr, n, k } => Ok(cg_to_json(&casson_gordon_sigma(expr, *n, *k)?).into()),
        Request::Multisig { form } => {
            let ms = multisignature(form);
            Ok(json!({ "n": form.n(), "alpha": ms.alpha, "l4s": coordinates(&ms) }).into())
        }
        Request::Jump { expr, resolution } => {
            let c = carrier_of(expr)?;
            let interval = first_jump_bracket(&c, resolution)?
                .map(|(a, b)| json!([rational_to_string(&a), rational_to_string(&b)]));
            Ok(json!({ "interval": interval }).into())
        }
    }
}

/// `{"error": {"kind": .., "message": ..}}`, with `offset` for syntax errors.
pub fn error_json(e: &Error) -> Value {
    let kind = match e {
        Error::ZeroResultant => "zero_resultant",
        Error::TorusLink => "torus_link",
        Error::NotKnot(_) => "not_knot",
        Error::NotHermitian => "not_hermitian",
        Error::ParityObstruction => "parity_obstruction",
        Error::NotAlexanderTrivial => "not_alexander_trivial",
        Error::HypothesisViolated(_) => "hypothesis_violated",
        Error::InvalidArgument(_) => "invalid_argument",
        Error::Syntax { .. } => "syntax",
        Error::Semantic(_) => "semantic",
        Error::Format(_) => "format",
        Error::Io(_) => "io",
    };
    let mut inner = json!({ "kind": kind, "message": e.to_string() });
    if let Error::Syntax { offset, .. } = e {
        inner["offset"] = json!(offset);
    }
    json!({ "error": inner })
}

fn read_form(path: &std::path::Path) -> Result<GroupRingForm> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    GroupRingForm::from_json(&serde_json::from_str(&text)?)
}

fn to_request(cmd: Command) -> Result<Request> {
    let p = |s: &str| parse_knot_expr(s);
    Ok(match cmd {
        Command::Invariants { expr, n } => Request::Invariants { expr: p(&expr)?, n },
        Command::Shake { expr, n, .. } => Request::Shake { expr: p(&expr)?, n },
        Command::ShakingMatrix { expr, k, n } => Request::ShakingMatrix { expr: p(&expr)?, k, n },
        Command::Witness { expr, g, h } => Request::Witness { expr: p(&expr)?, g, h },
        Command::CassonGordon { expr, n, k } => Request::CassonGordon { expr: p(&expr)?, n, k },
        Command::Multisig { form } => Request::Multisig { form: read_form(&form)? },
        Command::Jump { expr, resolution } => {
            Request::Jump { expr: p(&expr)?, resolution: rational_from_str(&resolution)? }
        }
        Command::Batch { .. } => unreachable!("batch is dispatched separately"),
    })
}

/// Runs the command line `args` (program name first), writing JSON to `out`
/// and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let fail_on_obstructed = matches!(cli.command, Command::Shake { fail_on_obstructed: true, .. });
    let result = match cli.command {
        Command::Batch { file, parallel } => {
            if parallel == 0 {
                let _ = writeln!(err, "error: --parallel must be at least 1");
                return EXIT_USAGE;
            }
            let lines = std::fs::read_to_string(&file)
                .map_err(|e| Error::Io(format!("{}: {e}", file.display())))
                .and_then(|text| run_batch(&text, parallel));
            match lines {
                Ok(lines) => {
                    for l in lines {
                        let _ = writeln!(out, "{l}");
                    }
                    return EXIT_OK;
                }
                Err(e) => Err(e),
            }
        }
        cmd => to_request(cmd).and_then(|r| execute(&r)),
    };
    match result {
        Ok(o) => {
            let _ = writeln!(out, "{}", o.value);
            if fail_on_obstructed && o.obstructed {
                EXIT_OBSTRUCTED
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(out, "{}", error_json(&e));
            EXIT_COMPUTATION
        }
    }
}
