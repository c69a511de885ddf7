use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::intpoly;
use crate::error::{Error, Result};

/// An integer Laurent polynomial `sum c_i t^(lo + i)`.
///
/// The coefficient vector is kept canonical: either empty (the zero
/// polynomial, with `lo == 0`) or with nonzero first and last entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    lo: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new(lo: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { lo, coeffs };
        p.canonicalize();
        p
    }

    pub fn from_i64(lo: i64, coeffs: &[i64]) -> Self {
        Self::new(lo, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        LaurentPoly { lo: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(0, vec![c])
    }

    pub fn monomial(c: BigInt, e: i64) -> Self {
        Self::new(e, vec![c])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    fn canonicalize(&mut self) {
        intpoly::trim(&mut self.coeffs);
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.lo = 0;
            return;
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.lo += lead as i64;
        }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^e`.
    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.lo;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// `hi - lo`, the breadth of the polynomial; 0 for constants and for zero.
    pub fn span(&self) -> u64 {
        if self.is_zero() {
            0
        } else {
            (self.hi() - self.lo) as u64
        }
    }

    /// The ordinary polynomial `t^(-lo) p(t)`.
    pub fn shifted(&self) -> Vec<BigInt> {
        self.coeffs.clone()
    }

    /// True for `+-t^j`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.lo, intpoly::scale(&self.coeffs, c))
    }

    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { lo: self.lo + e, coeffs: self.coeffs.clone() }
    }

    /// `p(t^m)`. For `m == 0` this is the constant `p(1)`.
    pub fn substitute_power(&self, m: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        if m == 0 {
            return Self::constant(self.eval_int(&BigInt::one()));
        }
        let (a, b) = (self.lo * m, self.hi() * m);
        let lo = a.min(b);
        let mut coeffs = vec![BigInt::zero(); (a - b).unsigned_abs() as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = (self.lo + i as i64) * m;
            coeffs[(e - lo) as usize] = c.clone();
        }
        Self::new(lo, coeffs)
    }

    /// `p(t^-1)`.
    pub fn reverse(&self) -> Self {
        self.substitute_power(-1)
    }

    /// Evaluation at an integer; `t = 0` is only allowed when `lo >= 0`.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        let base = intpoly::eval(&self.coeffs, x);
        if self.lo >= 0 {
            base * num_traits::pow(x.clone(), self.lo as usize)
        } else {
            let d = num_traits::pow(x.clone(), (-self.lo) as usize);
            assert!(!d.is_zero(), "negative exponent evaluated at zero");
            base / d
        }
    }

    /// Reduction modulo `t^n - 1`: exponents folded into `0..n`.
    pub fn reduce_mod_cyclic(&self, n: u64) -> Self {
        assert!(n >= 1);
        let mut coeffs = vec![BigInt::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = (self.lo + i as i64).rem_euclid(n as i64) as usize;
            coeffs[e] += c;
        }
        Self::new(0, coeffs)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.reverse()
    }

    /// Normalizes by a unit `+-t^j` so that the result is symmetric under
    /// `t -> t^-1` and takes a positive value at `t = 1`. Returns `None` if no
    /// such unit exists.
    pub fn normalize_symmetric(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let span = self.span() as i64;
        if span % 2 != 0 {
            return None;
        }
        let mut p = self.shift(-self.lo - span / 2);
        if p.eval_int(&BigInt::one()).is_negative() {
            p = -p;
        }
        if p.is_symmetric() {
            Some(p)
        } else {
            None
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lo": self.lo,
            "coeffs": self.coeffs.iter().map(crate::json::bigint_to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let lo = v
            .get("lo")
            .and_then(Value::as_i64)
            .ok_or_else(|| Error::Format("polynomial needs integer field \"lo\"".into()))?;
        let coeffs = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Format("polynomial needs array field \"coeffs\"".into()))?
            .iter()
            .map(crate::json::bigint_from_json)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(lo, coeffs))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(rhs.lo);
        let hi = self.hi().max(rhs.hi());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.lo - lo) as usize + i] += c;
        }
        LaurentPoly::new(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { lo: self.lo, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly::new(self.lo + rhs.lo, intpoly::mul(&self.coeffs, &rhs.coeffs))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = self.lo + i as i64;
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !a.is_one() || e == 0;
            if show_coeff {
                write!(f, "{a}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}
