//! Dense integer polynomials in ascending-coefficient form.
//!
//! These are plain `Vec<BigInt>` helpers; the zero polynomial is the empty
//! vector and every other value has a nonzero last coefficient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub(crate) fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[BigInt], c: &BigInt) -> Vec<BigInt> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

pub(crate) fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Exact division of every coefficient by `c`; panics in debug builds if inexact.
pub(crate) fn div_exact_scalar(a: &[BigInt], c: &BigInt) -> Vec<BigInt> {
    a.iter()
        .map(|x| {
            let (q, r) = x.div_rem(c);
            debug_assert!(r.is_zero(), "inexact scalar division");
            q
        })
        .collect()
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a = q*b + r`.
pub(crate) fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut steps = a.len() as isize - b.len() as isize + 1;
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let shift = dr - db;
        for (j, c) in b.iter().enumerate() {
            r[shift + j] -= &lr * c;
        }
        trim(&mut r);
        steps -= 1;
    }
    if steps > 0 {
        let f = num_traits::pow(lb.clone(), steps as usize);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

/// Exact quotient `a / b` over the integers. Returns `None` when `b` does not
/// divide `a` in `Z[t]`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let (c, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = dr - db;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &c * bc;
        }
        q[shift] = c;
        trim(&mut r);
    }
    if r.is_empty() {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}

pub(crate) fn eval(a: &[BigInt], x: &BigInt) -> BigInt {
    a.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// `t^n - 1`.
pub(crate) fn t_pow_minus_one(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    out[0] = -BigInt::one();
    out[n] = BigInt::one();
    out
}

/// Resultant of two nonzero integer polynomials via the subresultant
/// polynomial remainder sequence.
pub(crate) fn resultant(a: &[BigInt], b: &[BigInt]) -> BigInt {
    assert!(!a.is_empty() && !b.is_empty());
    let da = a.len() - 1;
    let db = b.len() - 1;
    if da == 0 {
        return num_traits::pow(a[0].clone(), db);
    }
    if db == 0 {
        return num_traits::pow(b[0].clone(), da);
    }

    let ca = content(a);
    let cb = content(b);
    let mut scale_factor = num_traits::pow(ca.clone(), db) * num_traits::pow(cb.clone(), da);
    let mut p = div_exact_scalar(a, &ca);
    let mut q = div_exact_scalar(b, &cb);
    let mut sign = BigInt::one();
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
    }

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let dp = p.len() - 1;
        let dq = q.len() - 1;
        let delta = dp - dq;
        if dp % 2 == 1 && dq % 2 == 1 {
            sign = -sign;
        }
        let r = pseudo_rem(&p, &q);
        p = q;
        let divisor = &g * num_traits::pow(h.clone(), delta);
        q = div_exact_scalar(&r, &divisor);
        g = p.last().unwrap().clone();
        if delta > 0 {
            h = num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1);
        }
        if q.is_empty() {
            return BigInt::zero();
        }
        if q.len() == 1 {
            break;
        }
    }
    let dp = p.len() - 1;
    let lq = q[0].clone();
    let h_final = if dp == 0 { BigInt::one() } else { num_traits::pow(lq, dp) / num_traits::pow(h, dp - 1) };
    scale_factor *= sign;
    scale_factor * h_final
}

/// The `n`-th cyclotomic polynomial by dividing `t^n - 1` by the cyclotomic
/// polynomials of all proper divisors of `n`.
pub(crate) fn cyclotomic(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut p = t_pow_minus_one(n as usize);
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_cached(d);
            p = div_exact(&p, &phi_d).expect("cyclotomic divisor must divide t^n - 1");
        }
    }
    p
}

pub(crate) fn cyclotomic_cached(n: u64) -> std::sync::Arc<Vec<BigInt>> {
    use std::collections::HashMap;
    use std::sync::{Arc, Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let p = Arc::new(cyclotomic(n));
    cache.lock().unwrap().entry(n).or_insert(p).clone()
}
