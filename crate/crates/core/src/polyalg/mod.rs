//! Exact polynomial and cyclotomic arithmetic.

pub mod cyclo;
mod embed;
pub mod hermitian;
pub(crate) mod intpoly;
pub mod laurent;

use num_bigint::BigInt;

pub use cyclo::{Cyclo, Field, RootOfUnity};
pub use embed::{initial_precision_bits, DEFAULT_PRECISION_BITS};
pub use hermitian::{hermitian_signature, HermitianMatrix, Inertia};
pub use laurent::LaurentPoly;

use crate::error::{Error, Result};

/// `Res(p, q)` of the shifted ordinary polynomials `t^-lo(p) p` and
/// `t^-lo(q) q`.
///
/// A Laurent polynomial only determines its resultant up to the unit shift;
/// callers consume absolute values or genuine polynomials.
pub fn resultant(p: &LaurentPoly, q: &LaurentPoly) -> Result<BigInt> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroResultant);
    }
    Ok(intpoly::resultant(&p.shifted(), &q.shifted()))
}

/// Exact value of `p(zeta_n^k)` in the field of the reduced conductor.
pub fn eval_at_root(p: &LaurentPoly, w: RootOfUnity) -> Cyclo {
    let r = w.reduced();
    let n = r.n();
    let field = Field::get(n);
    let mut acc = vec![BigInt::default(); n as usize];
    for (i, c) in p.coeffs().iter().enumerate() {
        let e = p.lo() + i as i64;
        let idx = (e as i128 * r.k() as i128).rem_euclid(n as i128) as usize;
        acc[idx] += c;
    }
    intpoly::trim(&mut acc);
    Cyclo::from_poly(field, acc, BigInt::from(1))
}
