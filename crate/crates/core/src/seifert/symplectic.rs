//! Integer skew-form reduction to hyperbolic pairs.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::intmat::{self, IntMatrix};
use super::matrix::SeifertMatrix;
use crate::error::{Error, Result};

/// One elementary column operation on the working basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Move {
    /// `w[target] += factor * w[source]`
    Add {
        target: usize,
        source: usize,
        #[serde(serialize_with = "crate::json::serialize_bigint")]
        factor: BigInt,
    },
    Swap {
        i: usize,
        j: usize,
    },
    Negate {
        i: usize,
    },
}

/// A unimodular `U` and the moves that produced it from the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SympBasisChange {
    pub u: IntMatrix,
    pub moves: Vec<Move>,
}

impl SympBasisChange {
    /// `U^T V U`.
    pub fn apply(&self, v: &SeifertMatrix) -> Result<SeifertMatrix> {
        v.congruence(&self.u)
    }
}

/// Gram matrix together with the basis that realizes it, updated in step.
pub(crate) struct Workspace {
    pub gram: IntMatrix,
    pub basis: IntMatrix,
    pub moves: Vec<Move>,
}

impl Workspace {
    pub fn new(gram: IntMatrix) -> Self {
        let n = gram.len();
        Workspace { gram, basis: intmat::identity(n), moves: Vec::new() }
    }

    /// `e[target] += c e[source]` as a congruence.
    pub fn add(&mut self, target: usize, source: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let n = self.gram.len();
        for row in self.gram.iter_mut() {
            let s = &row[source] * c;
            row[target] += s;
        }
        let src = self.gram[source].clone();
        for (x, s) in self.gram[target].iter_mut().zip(src) {
            *x += s * c;
        }
        for r in 0..n {
            let s = &self.basis[r][source] * c;
            self.basis[r][target] += s;
        }
        self.moves.push(Move::Add { target, source, factor: c.clone() });
    }

    pub fn swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.gram.swap(i, j);
        for row in self.gram.iter_mut().chain(self.basis.iter_mut()) {
            row.swap(i, j);
        }
        self.moves.push(Move::Swap { i, j });
    }

    pub fn negate(&mut self, i: usize) {
        for row in self.gram.iter_mut().chain(self.basis.iter_mut()) {
            row[i] = -&row[i];
        }
        for x in self.gram[i].iter_mut() {
            *x = -&*x;
        }
        self.moves.push(Move::Negate { i });
    }
}

/// Reduces the skew form on positions `from..` of `ws.gram` to
/// `(+) [[0, 1], [-1, 0]]`, lowest index first.
pub(crate) fn reduce_skew(ws: &mut Workspace, from: usize) -> Result<()> {
    let n = ws.gram.len();
    let not_unimodular = || Error::InvalidArgument("antisymmetrization is not unimodular".into());
    if !(n - from).is_multiple_of(2) {
        return Err(not_unimodular());
    }
    let mut p = from;
    while p < n {
        // Euclid on row p among the later positions.
        loop {
            let nz: Vec<usize> = (p + 1..n).filter(|&j| !ws.gram[p][j].is_zero()).collect();
            let Some(&piv) = nz.iter().min_by_key(|&&j| (ws.gram[p][j].abs(), j)) else {
                return Err(not_unimodular());
            };
            if nz.len() == 1 {
                break;
            }
            for &j in &nz {
                if j != piv {
                    let q = -(&ws.gram[p][j] / &ws.gram[p][piv]);
                    ws.add(j, piv, &q);
                }
            }
        }
        let f = (p + 1..n).find(|&j| !ws.gram[p][j].is_zero()).expect("one nonzero entry");
        if !ws.gram[p][f].abs().is_one() {
            return Err(not_unimodular());
        }
        ws.swap(p + 1, f);
        if ws.gram[p][p + 1].is_negative() {
            ws.negate(p + 1);
        }
        for w in p + 2..n {
            let afw = ws.gram[p + 1][w].clone();
            let aew = -ws.gram[p][w].clone();
            ws.add(w, p, &afw);
            ws.add(w, p + 1, &aew);
        }
        p += 2;
    }
    Ok(())
}

/// Unimodular `U` with `U^T (V - V^T) U = (+) [[0, 1], [-1, 0]]`.
pub fn symplectic_normalize(v: &SeifertMatrix) -> Result<SympBasisChange> {
    let mut ws = Workspace::new(intmat::antisymmetrize(v.entries()));
    reduce_skew(&mut ws, 0)?;
    Ok(SympBasisChange { u: ws.basis, moves: ws.moves })
}

#[cfg(test)]
pub(crate) fn is_standard_skew(a: &[Vec<BigInt>]) -> bool {
    let n = a.len();
    n.is_multiple_of(2)
        && (0..n).all(|i| {
            (0..n).all(|j| {
                let want = if i % 2 == 0 && j == i + 1 {
                    1
                } else if j % 2 == 0 && i == j + 1 {
                    -1
                } else {
                    0
                };
                a[i][j] == BigInt::from(want)
            })
        })
}

#[cfg(test)]
pub(crate) fn is_unimodular(u: &[Vec<BigInt>]) -> bool {
    intmat::det(u).abs().is_one()
}
