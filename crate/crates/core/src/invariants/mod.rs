//! Alexander polynomials, Tristram-Levine signatures, Arf invariants and
//! branched-cover orders, for matrices and for knot expressions.

mod jump;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyalg::{
    eval_at_root, hermitian_signature, intpoly, resultant, Cyclo, Field, HermitianMatrix, Inertia, LaurentPoly,
    RootOfUnity,
};
use crate::seifert::{symplectic_normalize, torus_alexander, torus_seifert, KnotExpr, SeifertMatrix};

pub use jump::{first_jump_bracket, JUMP_SCAN_MAX_DENOMINATOR};

/// `det(t V - V^T)`, normalized to be symmetric with value 1 at `t = 1`.
pub fn alexander_poly(v: &SeifertMatrix) -> Result<LaurentPoly> {
    v.require_knot()?;
    let d = v
        .alexander_determinant()
        .normalize_symmetric()
        .ok_or_else(|| Error::NotKnot("det(tV - V^T) is not symmetric".into()))?;
    debug_assert!(d.eval_int(&BigInt::one()).is_one());
    Ok(d)
}

/// Inertia of `(1 - w) V + (1 - conj w) V^T`, computed exactly in the field
/// of the reduced conductor of `w`.
pub fn tl_inertia(v: &SeifertMatrix, w: RootOfUnity) -> Inertia {
    let w = w.reduced();
    let n = v.size();
    if w.is_one() || n == 0 {
        return Inertia { pos: 0, neg: 0, null: n };
    }
    let field = Field::get(w.n());
    let one = Cyclo::one(field.clone());
    let a = one.sub(&w.to_cyclo());
    let b = a.conj();
    let e = v.entries();
    let entries: Vec<Vec<Cyclo>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x = a.scale_int(&e[i][j]);
                    x.add(&b.scale_int(&e[j][i]))
                })
                .collect()
        })
        .collect();
    let h = HermitianMatrix::new(field, entries).expect("(1-w)V + (1-conj w)V^T is Hermitian");
    hermitian_signature(&h)
}

/// How a carrier evaluates signatures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CarrierSource {
    MatrixBacked,
    FormulaBacked,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Node {
    Matrix(SeifertMatrix),
    Mirror(Box<Node>),
    Sum(Vec<Node>),
    /// `sigma_T(m, r)(w) + sigma_K(w^m)`; `pattern` is `None` when `T(m, r)` is
    /// the unknot.
    Cable {
        m: i64,
        pattern: Option<SeifertMatrix>,
        companion: Box<Node>,
    },
}

impl Node {
    fn signature(&self, w: RootOfUnity) -> i64 {
        if w.is_one() {
            return 0;
        }
        match self {
            Node::Matrix(v) => tl_inertia(v, w).signature(),
            Node::Mirror(k) => -k.signature(w),
            Node::Sum(ks) => {
                let mut counts: Vec<(&Node, i64)> = Vec::new();
                for k in ks {
                    match counts.iter_mut().find(|(n, _)| *n == k) {
                        Some((_, c)) => *c += 1,
                        None => counts.push((k, 1)),
                    }
                }
                counts.into_iter().map(|(k, c)| c * k.signature(w)).sum()
            }
            Node::Cable { m, pattern, companion } => {
                let p = pattern.as_ref().map_or(0, |v| tl_inertia(v, w).signature());
                p + companion.signature(w.pow(*m))
            }
        }
    }
}

/// An Alexander polynomial together with a signature evaluator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantCarrier {
    delta: LaurentPoly,
    node: Node,
    matrix: Option<SeifertMatrix>,
}

impl InvariantCarrier {
    pub fn from_matrix(v: &SeifertMatrix) -> Result<Self> {
        Ok(InvariantCarrier { delta: alexander_poly(v)?, node: Node::Matrix(v.clone()), matrix: Some(v.clone()) })
    }

    pub fn delta(&self) -> &LaurentPoly {
        &self.delta
    }

    pub fn source(&self) -> CarrierSource {
        if self.matrix.is_some() {
            CarrierSource::MatrixBacked
        } else {
            CarrierSource::FormulaBacked
        }
    }

    /// The Seifert matrix, for matrix-backed carriers.
    pub fn matrix(&self) -> Option<&SeifertMatrix> {
        self.matrix.as_ref()
    }

    pub fn signature(&self, w: RootOfUnity) -> i64 {
        self.node.signature(w)
    }

    /// Is `w` a root of the Alexander polynomial?
    pub fn is_singular_at(&self, w: RootOfUnity) -> bool {
        !w.is_one() && eval_at_root(&self.delta, w).is_zero()
    }
}

/// Carrier for a knot expression: matrix-backed unless it contains a cable.
pub fn carrier_of(k: &KnotExpr) -> Result<InvariantCarrier> {
    k.validate()?;
    let (delta, node) = build(k)?;
    debug_assert!(delta.is_symmetric() && delta.eval_int(&BigInt::one()).is_one());
    let matrix = if k.contains_cable() { None } else { Some(k.to_seifert()?) };
    Ok(InvariantCarrier { delta, node, matrix })
}

fn build(k: &KnotExpr) -> Result<(LaurentPoly, Node)> {
    Ok(match k {
        KnotExpr::Unknot => (LaurentPoly::one(), Node::Sum(Vec::new())),
        KnotExpr::Torus(p, q) => (torus_alexander(*p, *q)?, Node::Matrix(torus_seifert(*p, *q)?)),
        KnotExpr::Twist(_) | KnotExpr::Literal(_) => {
            let v = k.to_seifert()?;
            (alexander_poly(&v)?, Node::Matrix(v))
        }
        KnotExpr::Mirror(inner) => {
            let (d, n) = build(inner)?;
            (d, Node::Mirror(Box::new(n)))
        }
        KnotExpr::Sum(ks) => {
            let mut delta = LaurentPoly::one();
            let mut nodes = Vec::with_capacity(ks.len());
            for part in ks {
                let (d, n) = build(part)?;
                delta = &delta * &d;
                nodes.push(n);
            }
            (delta, Node::Sum(nodes))
        }
        KnotExpr::Cable(m, r, inner) => {
            let (d, n) = build(inner)?;
            let nontrivial = *m >= 2 && r.abs() >= 2;
            let (pd, pattern) = if nontrivial {
                (torus_alexander(*m, *r)?, Some(torus_seifert(*m, *r)?))
            } else {
                (LaurentPoly::one(), None)
            };
            (&pd * &d.substitute_power(*m), Node::Cable { m: *m, pattern, companion: Box::new(n) })
        }
    })
}

/// Tristram-Levine signature; `0` at `w = 1`.
pub fn tl_signature(c: &InvariantCarrier, w: RootOfUnity) -> i64 {
    c.signature(w)
}

/// Mean of the one-sided limits at a root of the Alexander polynomial, and
/// the plain signature elsewhere.
///
/// The limits are probed at the roots `theta +- 1/(b N)`, `b` the
/// denominator of `theta`, for `N = 4, 8, ..., 64`, until two successive
/// probes agree.
pub fn tl_signature_averaged(c: &InvariantCarrier, w: RootOfUnity) -> BigRational {
    if !c.is_singular_at(w) {
        return BigRational::from_integer(c.signature(w).into());
    }
    let theta = w.reduced().angle();
    let b = BigInt::from(w.reduced().n());
    let side = |sign: i64| {
        let mut prev: Option<i64> = None;
        let mut last = 0;
        for e in 2..=6 {
            let step = BigRational::new(BigInt::one(), &b << e);
            let probe = if sign > 0 { &theta + &step } else { &theta - &step };
            let s = c.signature(RootOfUnity::from_angle(&probe));
            if prev == Some(s) {
                return s;
            }
            prev = Some(s);
            last = s;
        }
        last
    };
    BigRational::new((side(-1) + side(1)).into(), BigInt::from(2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ArfValue {
    pub bit: u8,
}

/// Levine's criterion: `Arf = 0` iff `Delta(-1) = +-1 mod 8`.
pub fn arf(c: &InvariantCarrier) -> ArfValue {
    arf_from_delta(c.delta())
}

pub fn arf_from_delta(delta: &LaurentPoly) -> ArfValue {
    let d = delta.eval_int(&BigInt::from(-1)).abs();
    let r = d.mod_floor(&BigInt::from(8));
    let bit = if r == BigInt::from(1) || r == BigInt::from(7) { 0 } else { 1 };
    ArfValue { bit }
}

/// `sum q(e_i) q(f_i) mod 2` over a symplectic basis, `q(x) = x^T V x`.
pub fn arf_symplectic(v: &SeifertMatrix) -> Result<ArfValue> {
    v.require_knot()?;
    let s = symplectic_normalize(v)?;
    let w = s.apply(v)?;
    let q = |i: usize| w.get(i, i).is_odd();
    let odd_pairs = (0..w.size() / 2).filter(|&i| q(2 * i) && q(2 * i + 1)).count();
    Ok(ArfValue { bit: (odd_pairs % 2) as u8 })
}

/// `|Res(Delta, t^n - 1)|`: the order of the first homology of the `n`-fold
/// branched cover, or `0` when it is infinite.
pub fn branched_cover_order(c: &InvariantCarrier, n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument("branched cover order needs n >= 1".into()));
    }
    let cyc = LaurentPoly::new(0, intpoly::t_pow_minus_one(n as usize));
    Ok(resultant(c.delta(), &cyc)?.abs())
}

/// `|Res(Delta, (t^n - 1)/(t^m - 1))|` for `m | n`.
pub fn partial_cover_order(c: &InvariantCarrier, n: u64, m: u64) -> Result<BigInt> {
    if m == 0 || !n.is_multiple_of(m) {
        return Err(Error::InvalidArgument(format!("{m} does not divide {n}")));
    }
    let q = intpoly::div_exact(&intpoly::t_pow_minus_one(n as usize), &intpoly::t_pow_minus_one(m as usize))
        .expect("t^m - 1 divides t^n - 1");
    Ok(resultant(c.delta(), &LaurentPoly::new(0, q))?.abs())
}

/// Signatures at `zeta_n^k` for the listed `k`, evaluated in parallel.
pub fn signatures_at(c: &InvariantCarrier, n: u64, ks: &[u64]) -> Vec<(u64, i64)> {
    use rayon::prelude::*;
    let mut memo: HashMap<RootOfUnity, usize> = HashMap::new();
    let mut distinct = Vec::new();
    let idx: Vec<usize> = ks
        .iter()
        .map(|&k| {
            let w = RootOfUnity::new(k as i64, n).reduced();
            *memo.entry(w).or_insert_with(|| {
                distinct.push(w);
                distinct.len() - 1
            })
        })
        .collect();
    let values: Vec<i64> = distinct.par_iter().map(|&w| c.signature(w)).collect();
    ks.iter().zip(idx).map(|(&k, i)| (k, values[i])).collect()
}
