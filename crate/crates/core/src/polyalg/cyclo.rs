//! Exact arithmetic in the cyclotomic field `Q(zeta_n)`.
//!
//! Elements are stored in the power basis `1, zeta, ..., zeta^(d-1)` with
//! `d = deg Phi_n`, as an integer numerator vector over one positive common
//! denominator. Because the modulus is `Phi_n` (not `t^n - 1`), the
//! representation is canonical and zero testing is exact.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{embed, intpoly};

/// Shared per-conductor data.
#[derive(Debug)]
pub struct Field {
    n: u64,
    phi: Vec<BigInt>,
}

impl Field {
    pub fn get(n: u64) -> Arc<Field> {
        assert!(n >= 1, "conductor must be positive");
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Field>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(f) = cache.lock().unwrap().get(&n) {
            return f.clone();
        }
        let phi = intpoly::cyclotomic_cached(n).as_ref().clone();
        let f = Arc::new(Field { n, phi });
        cache.lock().unwrap().entry(n).or_insert(f).clone()
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Reduces an integer polynomial modulo the (monic) `Phi_n`.
    fn reduce(&self, mut p: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree();
        while p.len() > d {
            let top = p.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = p.len() - d;
            for (j, c) in self.phi[..d].iter().enumerate() {
                if !c.is_zero() {
                    p[shift + j] -= &top * c;
                }
            }
        }
        intpoly::trim(&mut p);
        p
    }
}

/// A root of unity `exp(2 pi i k / n)`, stored with `0 <= k < n`.
///
/// Equality compares the reduced fraction `k / n`, so `(2, 4)` equals `(1, 2)`.
#[derive(Clone, Copy, Debug)]
pub struct RootOfUnity {
    k: u64,
    n: u64,
}

impl RootOfUnity {
    pub fn new(k: i64, n: u64) -> Self {
        assert!(n >= 1, "root of unity order must be positive");
        RootOfUnity { k: k.rem_euclid(n as i64) as u64, n }
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// The same root with `k / n` in lowest terms; `1` becomes `(0, 1)`.
    pub fn reduced(&self) -> Self {
        if self.k == 0 {
            return RootOfUnity { k: 0, n: 1 };
        }
        let g = self.k.gcd(&self.n);
        RootOfUnity { k: self.k / g, n: self.n / g }
    }

    pub fn is_one(&self) -> bool {
        self.k == 0
    }

    pub fn conj(&self) -> Self {
        RootOfUnity::new(-(self.k as i64), self.n)
    }

    /// `self^m`.
    pub fn pow(&self, m: i64) -> Self {
        let k = (self.k as i128 * m as i128).rem_euclid(self.n as i128) as i64;
        RootOfUnity::new(k, self.n)
    }

    /// The angle `k / n` in `[0, 1)`.
    pub fn angle(&self) -> BigRational {
        BigRational::new(self.k.into(), self.n.into())
    }

    /// Root for the rational angle `theta` (taken modulo 1).
    pub fn from_angle(theta: &BigRational) -> Self {
        let n: u64 = theta.denom().try_into().expect("angle denominator too large");
        let k: i64 = (theta.numer() % BigInt::from(n)).try_into().expect("angle numerator too large");
        RootOfUnity::new(k, n).reduced()
    }

    /// The field element `zeta_n^k` in the field of the reduced conductor.
    pub fn to_cyclo(&self) -> Cyclo {
        let r = self.reduced();
        Cyclo::zeta_pow(Field::get(r.n), r.k as i64)
    }
}

impl PartialEq for RootOfUnity {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.reduced(), other.reduced());
        a.k == b.k && a.n == b.n
    }
}

impl Eq for RootOfUnity {}

impl std::hash::Hash for RootOfUnity {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        let r = self.reduced();
        (r.k, r.n).hash(state);
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta_{}^{}", self.n, self.k)
    }
}

/// An element of `Q(zeta_n)`.
#[derive(Clone)]
pub struct Cyclo {
    field: Arc<Field>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclo {
    pub fn zero(field: Arc<Field>) -> Self {
        Cyclo { field, num: Vec::new(), den: BigInt::one() }
    }

    pub fn one(field: Arc<Field>) -> Self {
        Self::from_int(field, BigInt::one())
    }

    pub fn from_int(field: Arc<Field>, c: BigInt) -> Self {
        let mut num = vec![c];
        intpoly::trim(&mut num);
        Cyclo { field, num, den: BigInt::one() }
    }

    pub fn from_rational(field: Arc<Field>, q: &BigRational) -> Self {
        let mut x = Self::from_int(field, q.numer().clone());
        x.den = q.denom().clone();
        x.normalize();
        x
    }

    /// `zeta_n^k` for any integer `k`.
    pub fn zeta_pow(field: Arc<Field>, k: i64) -> Self {
        let e = k.rem_euclid(field.n as i64) as usize;
        let mut p = vec![BigInt::zero(); e + 1];
        p[e] = BigInt::one();
        Self::from_poly(field, p, BigInt::one())
    }

    /// `sum coeffs[j] zeta^j` over a shared denominator, reduced mod `Phi_n`.
    pub fn from_poly(field: Arc<Field>, coeffs: Vec<BigInt>, den: BigInt) -> Self {
        assert!(!den.is_zero());
        let num = field.reduce(coeffs);
        let mut x = Cyclo { field, num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.num.is_empty() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in self.num.iter_mut() {
                *c = -&*c;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.den /= &g;
            for c in self.num.iter_mut() {
                *c /= &g;
            }
        }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn conductor(&self) -> u64 {
        self.field.n
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Power-basis coefficients as rationals (length `deg Phi_n`).
    pub fn coefficients(&self) -> Vec<BigRational> {
        (0..self.field.degree())
            .map(|i| {
                let c = self.num.get(i).cloned().unwrap_or_default();
                BigRational::new(c, self.den.clone())
            })
            .collect()
    }

    /// Some rational `q` with `self == q`, if the element is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.num.len() {
            0 => Some(BigRational::zero()),
            1 => Some(BigRational::new(self.num[0].clone(), self.den.clone())),
            _ => None,
        }
    }

    fn same_field(&self, other: &Cyclo) {
        assert_eq!(self.field.n, other.field.n, "mixing cyclotomic fields");
    }

    pub fn add(&self, other: &Cyclo) -> Cyclo {
        self.same_field(other);
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let (num, den) = if self.den == other.den {
            (intpoly::add(&self.num, &other.num), self.den.clone())
        } else {
            (
                intpoly::add(&intpoly::scale(&self.num, &other.den), &intpoly::scale(&other.num, &self.den)),
                &self.den * &other.den,
            )
        };
        let mut x = Cyclo { field: self.field.clone(), num, den };
        x.normalize();
        x
    }

    pub fn neg(&self) -> Cyclo {
        Cyclo { field: self.field.clone(), num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Cyclo) -> Cyclo {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Cyclo) -> Cyclo {
        self.same_field(other);
        if self.is_zero() || other.is_zero() {
            return Cyclo::zero(self.field.clone());
        }
        let num = self.field.reduce(intpoly::mul(&self.num, &other.num));
        let mut x = Cyclo { field: self.field.clone(), num, den: &self.den * &other.den };
        x.normalize();
        x
    }

    pub fn scale_int(&self, c: &BigInt) -> Cyclo {
        let mut x = Cyclo { field: self.field.clone(), num: intpoly::scale(&self.num, c), den: self.den.clone() };
        x.normalize();
        x
    }

    /// Complex conjugation `zeta -> zeta^(n-1)`.
    pub fn conj(&self) -> Cyclo {
        if self.num.len() <= 1 {
            return self.clone();
        }
        let n = self.field.n as usize;
        let mut p = vec![BigInt::zero(); n];
        for (j, c) in self.num.iter().enumerate() {
            p[(n - j) % n] += c;
        }
        intpoly::trim(&mut p);
        Cyclo::from_poly(self.field.clone(), p, self.den.clone())
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Cyclo> {
        if self.is_zero() {
            return None;
        }
        if self.num.len() == 1 {
            let q = BigRational::new(self.den.clone(), self.num[0].clone());
            return Some(Cyclo::from_rational(self.field.clone(), &q));
        }
        // Solve M y = e_0 for the multiplication-by-num matrix M with
        // fraction-free elimination; y = num^-1.
        let d = self.field.degree();
        let mut m: Vec<Vec<BigInt>> = vec![Vec::with_capacity(d + 1); d];
        let mut col = self.num.clone();
        for _ in 0..d {
            col.resize(d, BigInt::zero());
            for (row, c) in m.iter_mut().zip(&col) {
                row.push(c.clone());
            }
            col.insert(0, BigInt::zero());
            col = self.field.reduce(col);
        }
        for (i, row) in m.iter_mut().enumerate() {
            row.push(if i == 0 { BigInt::one() } else { BigInt::zero() });
        }
        let (y, det) = bareiss_solve(m);
        Some(Cyclo::from_poly(self.field.clone(), intpoly::scale(&y, &self.den), det))
    }

    /// Sign of a real element in the embedding `zeta_n -> exp(2 pi i / n)`.
    ///
    /// Panics in debug builds if the element is not real.
    pub fn sign(&self) -> Ordering {
        debug_assert!(self.is_real(), "sign of a non-real element");
        if self.is_zero() {
            return Ordering::Equal;
        }
        if self.num.len() == 1 {
            return self.num[0].sign().cmp_zero();
        }
        embed::sign_of_cos_combination(&self.num, self.field.n)
    }

    /// Floating-point approximation `(re, im)`, for diagnostics only.
    pub fn approx(&self) -> (f64, f64) {
        let n = self.field.n as f64;
        let den: f64 = self.den.to_string().parse().unwrap_or(f64::INFINITY);
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.num.iter().enumerate() {
            let c: f64 = c.to_string().parse().unwrap_or(f64::NAN);
            let a = 2.0 * std::f64::consts::PI * j as f64 / n;
            re += c * a.cos();
            im += c * a.sin();
        }
        (re / den, im / den)
    }
}

trait CmpZero {
    fn cmp_zero(self) -> Ordering;
}

impl CmpZero for num_bigint::Sign {
    fn cmp_zero(self) -> Ordering {
        match self {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        }
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.num == other.num && self.den == other.den
    }
}

impl Eq for Cyclo {}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}](", self.field.n)?;
        let mut first = true;
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*z^{j}")?;
        }
        if first {
            write!(f, "0")?;
        }
        if !self.den.is_one() {
            write!(f, ")/{}", self.den)
        } else {
            write!(f, ")")
        }
    }
}

/// Solves a nonsingular square system given as an augmented `d x (d+1)`
/// matrix. Returns `(x * det, det)` with integral `x * det`.
fn bareiss_solve(mut a: Vec<Vec<BigInt>>) -> (Vec<BigInt>, BigInt) {
    let d = a.len();
    let mut prev = BigInt::one();
    for k in 0..d {
        if a[k][k].is_zero() {
            let r = (k + 1..d).find(|&r| !a[r][k].is_zero()).expect("nonsingular system");
            a.swap(k, r);
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            let f = row[k].clone();
            for j in k + 1..=d {
                let v = &row[j] * &pivot_row[k] - &f * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    // Bareiss leaves det in the last pivot; back-substitute det * x.
    let det = a[d - 1][d - 1].clone();
    let mut x = vec![BigInt::zero(); d];
    for i in (0..d).rev() {
        let mut s = &det * &a[i][d];
        for j in i + 1..d {
            s -= &a[i][j] * &x[j];
        }
        x[i] = s / &a[i][i];
    }
    (x, det)
}
