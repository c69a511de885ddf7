use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use super::intmat::{self, IntMatrix};
use crate::error::{Error, Result};
use crate::json;
use crate::polyalg::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    /// Even size with `det(V - V^T) = 1`.
    Knot,
    /// Any square matrix.
    Link,
}

/// The matrix of a Seifert form `(x, y) -> lk(x, y+)` in some basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    entries: IntMatrix,
    kind: MatrixKind,
}

impl SeifertMatrix {
    pub fn knot(entries: IntMatrix) -> Result<Self> {
        check_square(&entries)?;
        if !entries.len().is_multiple_of(2) {
            return Err(Error::NotKnot(format!("odd size {}", entries.len())));
        }
        let d = intmat::det(&intmat::antisymmetrize(&entries));
        if !d.is_one() {
            return Err(Error::NotKnot(format!("det(V - V^T) = {d}, expected 1")));
        }
        Ok(SeifertMatrix { entries, kind: MatrixKind::Knot })
    }

    pub fn link(entries: IntMatrix) -> Result<Self> {
        check_square(&entries)?;
        Ok(SeifertMatrix { entries, kind: MatrixKind::Link })
    }

    /// Knot if the entries qualify, link otherwise.
    pub fn infer(entries: IntMatrix) -> Result<Self> {
        match Self::knot(entries.clone()) {
            Ok(m) => Ok(m),
            Err(Error::NotKnot(_)) => Self::link(entries),
            Err(e) => Err(e),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::infer(intmat::from_i64(rows))
    }

    /// The empty matrix: the unknot.
    pub fn empty() -> Self {
        SeifertMatrix { entries: Vec::new(), kind: MatrixKind::Knot }
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn is_knot(&self) -> bool {
        self.kind == MatrixKind::Knot
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn transpose(&self) -> IntMatrix {
        intmat::transpose(&self.entries)
    }

    pub fn require_knot(&self) -> Result<()> {
        if self.is_knot() {
            Ok(())
        } else {
            Err(Error::NotKnot("a knot Seifert matrix is required".into()))
        }
    }

    /// `det(t V - V^T)` as a polynomial in `t`.
    pub fn alexander_determinant(&self) -> LaurentPoly {
        let n = self.size();
        let m = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut p = vec![-&self.entries[j][i], self.entries[i][j].clone()];
                        crate::polyalg::intpoly::trim(&mut p);
                        p
                    })
                    .collect()
            })
            .collect();
        LaurentPoly::new(0, intmat::poly_det(m))
    }

    /// `U^T V U`; the kind is re-inferred for knot inputs.
    pub fn congruence(&self, u: &[Vec<BigInt>]) -> Result<Self> {
        let e = intmat::congruence(&self.entries, u);
        match self.kind {
            MatrixKind::Knot => Self::knot(e),
            MatrixKind::Link => Self::link(e),
        }
    }

    /// The principal submatrix on `indices`, as a link-kind matrix.
    pub fn submatrix(&self, indices: &[usize]) -> Self {
        let e = indices.iter().map(|&i| indices.iter().map(|&j| self.entries[i][j].clone()).collect()).collect();
        SeifertMatrix { entries: e, kind: MatrixKind::Link }
    }

    pub fn to_json(&self) -> Value {
        json!({ "matrix": json::matrix_to_json(&self.entries), "kind": self.kind })
    }

    /// Parses `{"matrix": [[...], ...]}`; the kind is inferred.
    pub fn from_json(v: &Value) -> Result<Self> {
        let m = v.get("matrix").ok_or_else(|| Error::Format("Seifert matrix file needs a \"matrix\" field".into()))?;
        Self::infer(json::matrix_from_json(m)?)
    }
}

fn check_square(e: &IntMatrix) -> Result<()> {
    if e.iter().any(|r| r.len() != e.len()) {
        return Err(Error::InvalidArgument("Seifert matrix must be square".into()));
    }
    Ok(())
}

impl fmt::Debug for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeifertMatrix[{:?}](", self.kind)?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", r.join(" "))?;
        }
        write!(f, ")")
    }
}

/// `-V^T`, the Seifert matrix of the mirror image.
pub fn mirror(v: &SeifertMatrix) -> SeifertMatrix {
    let e = intmat::transpose(&v.entries).into_iter().map(|r| r.into_iter().map(|x| -x).collect()).collect();
    SeifertMatrix { entries: e, kind: v.kind }
}

/// Block sum `V1 (+) V2`.
pub fn connected_sum(a: &SeifertMatrix, b: &SeifertMatrix) -> Result<SeifertMatrix> {
    a.require_knot()?;
    b.require_knot()?;
    Ok(SeifertMatrix { entries: block_sum(&a.entries, &b.entries), kind: MatrixKind::Knot })
}

pub(crate) fn block_sum(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> IntMatrix {
    let (n, m) = (a.len(), b.len());
    let mut e = vec![vec![BigInt::zero(); n + m]; n + m];
    for i in 0..n {
        e[i][..n].clone_from_slice(&a[i]);
    }
    for i in 0..m {
        e[n + i][n..].clone_from_slice(&b[i]);
    }
    e
}

/// `V (+) k copies of [[0, Id_n], [Z_n, 0]]`, where `Z_n` is the permutation
/// matrix of the cyclic shift `i -> i + 1`: the Seifert form of the standard
/// surface for the `(2k+1)`-component `n`-shaking.
pub fn shaking_matrix(v: &SeifertMatrix, k: usize, n: usize) -> Result<SeifertMatrix> {
    v.require_knot()?;
    if n < 1 {
        return Err(Error::InvalidArgument("shaking framing block size n must be at least 1".into()));
    }
    let mut block = vec![vec![BigInt::zero(); 2 * n]; 2 * n];
    for i in 0..n {
        block[i][n + i] = BigInt::one();
        // lk(beta_i, alpha_{i+1}^+) = 1
        block[n + i][(i + 1) % n] = BigInt::one();
    }
    let mut e = v.entries.clone();
    for _ in 0..k {
        e = block_sum(&e, &block);
    }
    Ok(SeifertMatrix { entries: e, kind: if k == 0 { v.kind } else { MatrixKind::Link } })
}

/// `det(t P - P^T) = +-t^j` for some `j >= 0`.
pub fn is_alexander_trivial(p: &SeifertMatrix) -> bool {
    let d = p.alexander_determinant();
    d.is_unit() && d.lo() >= 0
}

#[cfg(test)]
/// Nullity of an integer matrix over `Q`.
pub(crate) fn rational_nullity(a: &[Vec<BigInt>]) -> usize {
    use num_rational::BigRational;
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> =
        a.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let mut rank = 0;
    for c in 0..n {
        let Some(p) = (rank..n).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..n {
            if !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for j in c..n {
                    let d = &f * &m[rank][j];
                    m[r][j] -= d;
                }
            }
        }
        rank += 1;
    }
    n - rank
}
