//! Standard knot families.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::intmat::IntMatrix;
use super::matrix::{mirror, SeifertMatrix};
use crate::error::{Error, Result};
use crate::polyalg::{intpoly, LaurentPoly};

/// A band of the braid surface: the disc between strands `col` and
/// `col + 1`, bounded by consecutive crossings at word positions
/// `start < end`.
#[derive(Clone, Copy, Debug)]
struct Loop {
    col: usize,
    start: usize,
    end: usize,
}

fn loops(p: usize, q: usize) -> Vec<Loop> {
    let word_len = q * (p - 1);
    let mut out = Vec::with_capacity((p - 1) * (q - 1));
    for col in 0..p - 1 {
        let occ: Vec<usize> = (0..word_len).filter(|k| k % (p - 1) == col).collect();
        out.extend(occ.windows(2).map(|w| Loop { col, start: w[0], end: w[1] }));
    }
    out.sort_by_key(|l| (l.start, l.col));
    out
}

fn positive_torus(p: usize, q: usize) -> IntMatrix {
    let ls = loops(p, q);
    let n = ls.len();
    let mut v = vec![vec![BigInt::zero(); n]; n];
    for (a, la) in ls.iter().enumerate() {
        v[a][a] = -BigInt::one();
        for (b, lb) in ls.iter().enumerate() {
            if a == b {
                continue;
            }
            if la.col == lb.col && la.end == lb.start {
                v[a][b] = BigInt::one();
            }
            if lb.col == la.col + 1 {
                if la.start < lb.start && lb.start < la.end && la.end < lb.end {
                    v[a][b] = BigInt::one();
                }
                if lb.start < la.start && la.start < lb.end && lb.end < la.end {
                    v[b][a] = -BigInt::one();
                }
            }
        }
    }
    v
}

fn check_torus(p: i64, q: i64) -> Result<()> {
    if p.abs() < 2 || q.abs() < 2 {
        return Err(Error::InvalidArgument(format!("torus parameters need |p|, |q| >= 2, got ({p}, {q})")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::TorusLink);
    }
    Ok(())
}

/// Seifert matrix of `T(p, q)` from the braid closure of
/// `(s_1 ... s_{p-1})^q`, of size `(|p|-1)(|q|-1)`. A negative sign on
/// exactly one parameter gives the mirror image.
pub fn torus_seifert(p: i64, q: i64) -> Result<SeifertMatrix> {
    check_torus(p, q)?;
    let v = SeifertMatrix::knot(positive_torus(p.unsigned_abs() as usize, q.unsigned_abs() as usize))?;
    Ok(if (p < 0) != (q < 0) { mirror(&v) } else { v })
}

/// Symmetrized `(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))`.
pub fn torus_alexander(p: i64, q: i64) -> Result<LaurentPoly> {
    check_torus(p, q)?;
    let (p, q) = (p.unsigned_abs() as usize, q.unsigned_abs() as usize);
    let num = intpoly::mul(&intpoly::t_pow_minus_one(p * q), &intpoly::t_pow_minus_one(1));
    let den = intpoly::mul(&intpoly::t_pow_minus_one(p), &intpoly::t_pow_minus_one(q));
    let d = intpoly::div_exact(&num, &den).expect("torus quotient is exact");
    let half = ((p - 1) * (q - 1) / 2) as i64;
    Ok(LaurentPoly::new(-half, d))
}

/// `[[-1, 1], [0, m]]`: `m = 1` is the figure-eight, `m = -1` the trefoil,
/// `m = -2` the knot `5_2`, `m = 0` the unknot.
pub fn twist_seifert(m: i64) -> SeifertMatrix {
    SeifertMatrix::from_i64(&[&[-1, 1], &[0, m]]).expect("twist matrices are knot matrices")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::intmat;

    fn lp(lo: i64, cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64(lo, cs)
    }

    fn normalized(v: &SeifertMatrix) -> LaurentPoly {
        let d = v.alexander_determinant();
        let c = d.shift(-(d.lo() + d.hi()) / 2);
        c.normalize_symmetric().unwrap_or(c)
    }

    #[test]
    fn trefoil() {
        let v = torus_seifert(2, 3).unwrap();
        assert_eq!(v.entries(), &intmat::from_i64(&[&[-1, 1], &[0, -1]]));
        assert_eq!(normalized(&v), lp(-1, &[1, -1, 1]));
        assert_eq!(torus_alexander(2, 3).unwrap(), lp(-1, &[1, -1, 1]));
    }

    #[test]
    fn small_examples() {
        assert_eq!(torus_alexander(2, 5).unwrap(), lp(-2, &[1, -1, 1, -1, 1]));
        assert_eq!(torus_seifert(2, 5).unwrap().size(), 4);
        assert_eq!(torus_alexander(3, 4).unwrap().eval_int(&BigInt::from(-1)), BigInt::from(-3));
        assert_eq!(torus_seifert(3, 4).unwrap().size(), 6);
    }

    #[test]
    fn errors() {
        assert_eq!(torus_seifert(2, 4), Err(Error::TorusLink));
        assert!(matches!(torus_seifert(1, 3), Err(Error::InvalidArgument(_))));
        assert!(matches!(torus_seifert(0, 3), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn reflected_parameters() {
        let v = torus_seifert(2, 3).unwrap();
        assert_eq!(torus_seifert(-2, 3).unwrap(), mirror(&v));
        assert_eq!(torus_seifert(2, -3).unwrap(), mirror(&v));
        assert_eq!(torus_seifert(-2, -3).unwrap(), v);
    }

    #[test]
    fn matrices_match_divide_out_formula() {
        for p in 2..7i64 {
            for q in 2..9i64 {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let v = torus_seifert(p, q).unwrap();
                assert!(v.is_knot());
                assert_eq!(v.size() as i64, (p - 1) * (q - 1));
                assert_eq!(normalized(&v), torus_alexander(p, q).unwrap(), "T({p},{q})");
            }
        }
    }

    #[test]
    fn twist_family() {
        assert_eq!(normalized(&twist_seifert(1)), lp(-1, &[-1, 3, -1]));
        assert_eq!(normalized(&twist_seifert(-1)), lp(-1, &[1, -1, 1]));
        assert_eq!(normalized(&twist_seifert(-2)), lp(-1, &[2, -3, 2]));
        assert_eq!(normalized(&twist_seifert(0)), LaurentPoly::one());
    }
}
