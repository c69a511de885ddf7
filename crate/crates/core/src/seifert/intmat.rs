//! Small dense integer-matrix routines.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::polyalg::intpoly;

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn transpose(a: &[Vec<BigInt>]) -> IntMatrix {
    let n = a.len();
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| (0..n).map(|i| a[i][j].clone()).collect()).collect()
}

pub fn mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> IntMatrix {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] += &a[i][l] * &b[l][j];
                }
            }
        }
    }
    out
}

/// `U^T A U`.
pub fn congruence(a: &[Vec<BigInt>], u: &[Vec<BigInt>]) -> IntMatrix {
    mul(&transpose(u), &mul(a, u))
}

/// `A - A^T`.
pub fn antisymmetrize(a: &[Vec<BigInt>]) -> IntMatrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| &a[i][j] - &a[j][i]).collect()).collect()
}

/// Determinant by fraction-free Bareiss elimination.
pub fn det(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Determinant of a matrix of integer polynomials (ascending coefficients)
/// by Bareiss elimination over `Z[t]`.
pub fn poly_det(a: Vec<Vec<Vec<BigInt>>>) -> Vec<BigInt> {
    let n = a.len();
    if n == 0 {
        return vec![BigInt::one()];
    }
    let mut a = a;
    let mut negate = false;
    let mut prev: Vec<BigInt> = vec![BigInt::one()];
    for k in 0..n {
        if a[k][k].is_empty() {
            match (k + 1..n).find(|&r| !a[r][k].is_empty()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Vec::new(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = intpoly::sub(&intpoly::mul(&a[i][j], &a[k][k]), &intpoly::mul(&a[i][k], &a[k][j]));
                a[i][j] = intpoly::div_exact(&num, &prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        intpoly::scale(&d, &-BigInt::one())
    } else {
        d
    }
}

/// Inverse of a unimodular integer matrix; `None` if singular or not
/// unimodular.
pub fn inverse_unimodular(a: &[Vec<BigInt>]) -> Option<IntMatrix> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let piv = m[c][c].clone();
        for x in m[c].iter_mut() {
            *x /= &piv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in 0..2 * n {
                    let d = &f * &m[c][j];
                    m[r][j] -= d;
                }
            }
        }
    }
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let x = &m[i][n + j];
            if !x.is_integer() {
                return None;
            }
            out[i][j] = x.to_integer();
        }
    }
    Some(out)
}

pub fn from_i64(rows: &[&[i64]]) -> IntMatrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        assert_eq!(det(&from_i64(&[&[0, 1], &[-1, 0]])), BigInt::from(1));
        assert_eq!(det(&from_i64(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])), BigInt::from(-2));
        assert_eq!(det(&[]), BigInt::from(1));
    }

    #[test]
    fn polynomial_determinant_of_trefoil() {
        // t V - V^T for V = [[-1, 1], [0, -1]]
        let p = |c: &[i64]| c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let m = vec![vec![p(&[1, -1]), p(&[0, 1])], vec![p(&[-1]), p(&[1, -1])]];
        assert_eq!(poly_det(m), p(&[1, -1, 1]));
    }

    #[test]
    fn unimodular_inverse() {
        let a = from_i64(&[&[2, 1], &[1, 1]]);
        let inv = inverse_unimodular(&a).unwrap();
        assert_eq!(mul(&a, &inv), identity(2));
        assert!(inverse_unimodular(&from_i64(&[&[2, 0], &[0, 1]])).is_none());
    }
}
