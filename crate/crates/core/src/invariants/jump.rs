use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::InvariantCarrier;
use crate::error::{Error, Result};
use crate::polyalg::RootOfUnity;

/// Largest denominator in the initial Farey scan.
pub const JUMP_SCAN_MAX_DENOMINATOR: u64 = 64;

/// Farey sequence of order `n` restricted to `(0, 1/2]`, ascending.
fn farey_half(n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let (mut a, mut b, mut c, mut d) = (0u64, 1u64, 1u64, n);
    while 2 * c <= d {
        out.push((c, d));
        let k = (n + b) / d;
        let (e, f) = (k * c - a, k * d - b);
        (a, b, c, d) = (c, d, e, f);
    }
    out
}

/// Narrowest interval `[a, b]` in `[0, 1/2]` with width at most `resolution`
/// such that the signature vanishes at `a` and not at `b`, for the first
/// such change along `(0, 1/2]`.
///
/// A Farey scan of order `min(ceil(1/resolution), 64)` finds the first
/// nonzero value; Stern-Brocot mediants then shrink the bracket, with
/// denominators capped at `4 ceil(1/resolution)`.
pub fn first_jump_bracket(
    c: &InvariantCarrier,
    resolution: &BigRational,
) -> Result<Option<(BigRational, BigRational)>> {
    if !resolution.is_positive() {
        return Err(Error::InvalidArgument("resolution must be positive".into()));
    }
    let inv = (BigRational::one() / resolution).ceil().to_integer();
    let order = inv.to_u64().unwrap_or(u64::MAX).min(JUMP_SCAN_MAX_DENOMINATOR);
    let cap = (&inv * 4u32).to_u64().unwrap_or(u64::MAX);
    let sig = |p: u64, q: u64| c.signature(RootOfUnity::new(p as i64, q));

    let mut lo = (0u64, 1u64);
    let mut hi = None;
    for (p, q) in farey_half(order.max(2)) {
        if sig(p, q) != 0 {
            hi = Some((p, q));
            break;
        }
        lo = (p, q);
    }
    let Some(mut hi) = hi else { return Ok(None) };
    let width = |lo: (u64, u64), hi: (u64, u64)| {
        BigRational::new(BigInt::from(hi.0), BigInt::from(hi.1))
            - BigRational::new(BigInt::from(lo.0), BigInt::from(lo.1))
    };
    while width(lo, hi) > *resolution {
        let mid = (lo.0 + hi.0, lo.1 + hi.1);
        if mid.1 > cap {
            break;
        }
        debug_assert_eq!(mid.0.gcd(&mid.1), 1);
        if sig(mid.0, mid.1) != 0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let r = |x: (u64, u64)| {
        if x.0 == 0 {
            BigRational::zero()
        } else {
            BigRational::new(BigInt::from(x.0), BigInt::from(x.1))
        }
    };
    Ok(Some((r(lo), r(hi))))
}
