//! Fixed-point evaluation of `cos(2 pi j / n)` with explicit error bounds.
//!
//! A value at working precision `w` is an integer `v` together with a bound
//! `e` such that the true real number lies in `[(v - e) / 2^w, (v + e) / 2^w]`.
//! All truncations round toward negative infinity and every one of them is
//! accounted for in `e`, so the resulting intervals are rigorous.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A fixed-point approximation with an error bound in units of `2^-w`.
#[derive(Clone, Debug)]
pub(crate) struct Fixed {
    pub value: BigInt,
    pub err: u64,
}

/// Default starting precision in bits for sign determination.
pub const DEFAULT_PRECISION_BITS: u32 = 128;

/// Initial precision, overridable through `TRACE_EMBED_PRECISION_BITS`.
/// Adaptive doubling continues from whatever value is chosen here.
pub fn initial_precision_bits() -> u32 {
    static BITS: OnceLock<u32> = OnceLock::new();
    *BITS.get_or_init(|| {
        std::env::var("TRACE_EMBED_PRECISION_BITS")
            .ok()
            .and_then(|s| s.trim().parse::<u32>().ok())
            .filter(|&b| b >= 16)
            .unwrap_or(DEFAULT_PRECISION_BITS)
    })
}

fn atan_inv(k: u64, w: u32) -> Fixed {
    // atan(1/k) = sum (-1)^j / ((2j+1) k^(2j+1))
    let k2 = BigInt::from(k * k);
    let mut power: BigInt = (BigInt::one() << w) / BigInt::from(k);
    let mut sum = BigInt::zero();
    let mut j: u64 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * j + 1);
        if j.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &k2;
        j += 1;
    }
    // Each power carries <= 2 ulps of error, each term <= 3, plus a tail < 1.
    Fixed { value: sum, err: 3 * j + 2 }
}

fn pi_fixed(w: u32) -> Fixed {
    static CACHE: OnceLock<Mutex<HashMap<u32, Fixed>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&w) {
        return p.clone();
    }
    let a = atan_inv(5, w);
    let b = atan_inv(239, w);
    let p = Fixed { value: a.value * 16 - b.value * 4, err: 16 * a.err + 4 * b.err };
    cache.lock().unwrap().insert(w, p.clone());
    p
}

/// Fixed-point `2 pi num / den` for `0 <= num / den <= 1/8`.
fn angle(num: u64, den: u64, w: u32) -> Fixed {
    let pi = pi_fixed(w);
    let value = (pi.value * BigInt::from(2 * num)).div_floor_ext(&BigInt::from(den));
    // 2 * num / den <= 1/4 scales the error of pi down.
    Fixed { value, err: pi.err / 4 + 2 }
}

trait DivFloor {
    fn div_floor_ext(&self, d: &BigInt) -> BigInt;
}

impl DivFloor for BigInt {
    fn div_floor_ext(&self, d: &BigInt) -> BigInt {
        num_integer::Integer::div_floor(self, d)
    }
}

fn shr_floor(x: BigInt, w: u32) -> BigInt {
    // Arithmetic shift on BigInt rounds toward negative infinity.
    x >> w
}

/// Taylor series for `cos a` (`odd = false`) or `sin a` (`odd = true`) with
/// `0 <= a <= pi/4`.
fn taylor(a: &Fixed, w: u32, odd: bool) -> Fixed {
    let one = BigInt::one() << w;
    let a2 = shr_floor(&a.value * &a.value, w);
    let a2_err = 2 * a.err + 1;
    let mut term = if odd { a.value.clone() } else { one };
    let mut sum = term.clone();
    let mut k: u64 = 1;
    loop {
        let d = if odd { (2 * k) * (2 * k + 1) } else { (2 * k - 1) * (2 * k) };
        term = shr_floor(&term * &a2, w) / BigInt::from(d);
        if term.is_zero() {
            break;
        }
        if k % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        k += 1;
    }
    let n = k + 1;
    // Error propagated from the argument (|derivative| <= 1), plus per-term
    // truncation and the propagated error of a^2 into every term.
    Fixed { value: sum, err: a.err + n * n * (a2_err + 2) + 2 }
}

/// Fixed-point `cos(2 pi j / n)` at working precision `w`.
pub(crate) fn cos_2pi(j: u64, n: u64, w: u32) -> Fixed {
    let j = j % n;
    // x = num / den in [0, 1)
    let (mut num, mut den) = (j, n);
    if 2 * num > den {
        num = den - num;
    }
    let mut negate = false;
    if 4 * num > den {
        // cos(pi - y) = -cos(y)
        num = den - 2 * num;
        den *= 2;
        negate = true;
    }
    let r = if 8 * num > den {
        // cos(2 pi x) = sin(2 pi (1/4 - x))
        let (n2, d2) = (den - 4 * num, 4 * den);
        taylor(&angle(n2, d2, w), w, true)
    } else {
        taylor(&angle(num, den, w), w, false)
    };
    if negate {
        Fixed { value: -r.value, err: r.err }
    } else {
        r
    }
}

/// Table of `cos(2 pi j / n)` for `j < len` at precision `w`, cached.
pub(crate) fn cos_table(n: u64, len: usize, w: u32) -> Arc<Vec<Fixed>> {
    type Key = (u64, usize, u32);
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<Vec<Fixed>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (n, len, w);
    if let Some(t) = cache.lock().unwrap().get(&key) {
        return t.clone();
    }
    let table: Arc<Vec<Fixed>> = Arc::new((0..len as u64).map(|j| cos_2pi(j, n, w)).collect());
    cache.lock().unwrap().entry(key).or_insert(table).clone()
}

/// Sign of `sum coeffs[j] cos(2 pi j / n)`, which the caller guarantees is
/// nonzero. Precision doubles until the interval excludes zero.
pub(crate) fn sign_of_cos_combination(coeffs: &[BigInt], n: u64) -> std::cmp::Ordering {
    let mut w = initial_precision_bits();
    loop {
        let table = cos_table(n, coeffs.len(), w);
        let mut s = BigInt::zero();
        let mut err = BigInt::zero();
        for (c, f) in coeffs.iter().zip(table.iter()) {
            if c.is_zero() {
                continue;
            }
            s += c * &f.value;
            err += c.abs() * BigInt::from(f.err);
        }
        if s.abs() > err {
            return if s.is_positive() { std::cmp::Ordering::Greater } else { std::cmp::Ordering::Less };
        }
        w = w.checked_mul(2).expect("precision overflow in sign determination");
    }
}
