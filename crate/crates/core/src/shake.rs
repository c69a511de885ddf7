//! The Z/n-shake-slice criterion, the surgery Casson-Gordon signature and
//! bounds on the 1-shaking number.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::invariants::{arf, branched_cover_order, carrier_of, signatures_at, InvariantCarrier};
use crate::json::{bigint_to_json, rational_to_string};
use crate::polyalg::{LaurentPoly, RootOfUnity};
use crate::seifert::{GenusWitness, KnotExpr};

/// Largest denominator sampled for the signature lower bound.
pub const SHAKING_SAMPLE_MAX_DENOMINATOR: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CondIDatum {
    /// `Delta` itself, for `n = 0`.
    Alexander(LaurentPoly),
    /// `|H_1|` of the `|n|`-fold branched cover; `0` when infinite.
    Order(BigInt),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShakeReport {
    pub n: i64,
    pub cond_i: (bool, CondIDatum),
    pub cond_ii: (bool, u8),
    pub cond_iii: (bool, Vec<(u64, i64)>),
    pub verdict: bool,
    pub notes: Vec<String>,
}

impl ShakeReport {
    pub fn to_json(&self) -> Value {
        let datum = match &self.cond_i.1 {
            CondIDatum::Alexander(d) => json!({ "alexander": d.to_json() }),
            CondIDatum::Order(o) => json!({ "branched_order": bigint_to_json(o) }),
        };
        let values: Vec<Value> = self.cond_iii.1.iter().map(|(k, s)| json!({ "k": k, "sigma": s })).collect();
        json!({
            "n": self.n,
            "conditions": {
                "i": { "pass": self.cond_i.0, "datum": datum },
                "ii": { "pass": self.cond_ii.0, "arf": self.cond_ii.1 },
                "iii": { "pass": self.cond_iii.0, "values": values },
            },
            "verdict": self.verdict,
            "notes": self.notes,
        })
    }
}

/// Evaluates the three conditions of the Z/n-shake-slice criterion.
pub fn shake_slice_report(k: &KnotExpr, n: i64) -> Result<ShakeReport> {
    Ok(report_for_carrier(&carrier_of(k)?, n))
}

pub fn report_for_carrier(c: &InvariantCarrier, n: i64) -> ShakeReport {
    let a = arf(c).bit;
    let cond_ii = (a == 0, a);
    let mut notes = Vec::new();
    let (cond_i, cond_iii) = match n.unsigned_abs() {
        0 => {
            notes.push("n = 0: condition (i) is Delta = 1, which implies (ii) and (iii)".to_string());
            ((c.delta().is_unit() && c.delta().lo() == 0, CondIDatum::Alexander(c.delta().clone())), (true, Vec::new()))
        }
        1 => {
            notes.push("n = +-1: conditions (i) and (iii) hold automatically".to_string());
            ((true, CondIDatum::Order(BigInt::one())), (true, Vec::new()))
        }
        m => {
            let order = branched_cover_order(c, m).expect("m >= 2");
            let ks: Vec<u64> = (1..=m / 2).collect();
            let values = signatures_at(c, m, &ks);
            let pass = values.iter().all(|&(_, s)| s == 0);
            ((order.is_one(), CondIDatum::Order(order)), (pass, values))
        }
    };
    if n % 2 == 0 && n != 0 && cond_i.0 {
        debug_assert!(cond_ii.0, "condition (i) at even n implies condition (ii)");
    }
    let verdict = cond_i.0 && cond_ii.0 && cond_iii.0;
    ShakeReport { n, cond_i, cond_ii, cond_iii, verdict, notes }
}

/// `1 - sigma_K(zeta_n^k) - 2k(n - k)/n`.
pub fn casson_gordon_sigma(k: &KnotExpr, n: u64, j: u64) -> Result<BigRational> {
    if n < 2 || j == 0 || j >= n {
        return Err(Error::InvalidArgument(format!("need n >= 2 and 0 < k < n, got n={n}, k={j}")));
    }
    let c = carrier_of(k)?;
    let s = c.signature(RootOfUnity::new(j as i64, n));
    let corr = BigRational::new(BigInt::from(2 * j * (n - j)), BigInt::from(n));
    Ok(BigRational::from_integer(BigInt::from(1 - s)) - corr)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ShakingBounds {
    pub lower: u64,
    pub upper: Option<u64>,
}

/// Bounds on the 1-shaking number of a knot with vanishing Arf invariant.
///
/// The lower bound is `2 ceil(max |sigma| / 2) + 1` over `zeta_d^j`,
/// `d <= 64`; the upper bound is `span(Delta) + 1`, or `2g + 1` when a
/// verified genus-0 witness for the `(2g+1)`-component shaking is supplied
/// and smaller.
pub fn shaking_number_bounds(k: &KnotExpr, witness: Option<&GenusWitness>) -> Result<ShakingBounds> {
    let c = carrier_of(k)?;
    if arf(&c).bit != 0 {
        return Err(Error::HypothesisViolated("Arf invariant is nonzero".into()));
    }
    let roots: Vec<RootOfUnity> = (2..=SHAKING_SAMPLE_MAX_DENOMINATOR)
        .flat_map(|d| (1..=d / 2).filter(move |j| j.gcd(&d) == 1).map(move |j| RootOfUnity::new(j as i64, d)))
        .collect();
    let max_abs = roots.par_iter().map(|&w| c.signature(w).unsigned_abs()).max().unwrap_or(0);
    let lower = 2 * max_abs.div_ceil(2) + 1;
    let mut upper = c.delta().span() + 1;
    if let Some(w) = witness.filter(|w| w.verified && w.h == 0) {
        upper = upper.min(2 * w.g as u64 + 1);
    }
    debug_assert!(lower <= upper);
    Ok(ShakingBounds { lower, upper: Some(upper) })
}

pub fn cg_to_json(v: &BigRational) -> Value {
    json!({ "value": rational_to_string(v) })
}
