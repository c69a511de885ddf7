use std::cmp::Ordering;
use std::sync::Arc;

use serde::Serialize;

use super::cyclo::{Cyclo, Field};
use crate::error::{Error, Result};

/// Counts of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub pos: usize,
    pub neg: usize,
    pub null: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.pos as i64 - self.neg as i64
    }

    pub fn size(&self) -> usize {
        self.pos + self.neg + self.null
    }
}

/// A Hermitian matrix over `Q(zeta_n)`; validated on construction.
#[derive(Clone, Debug)]
pub struct HermitianMatrix {
    field: Arc<Field>,
    entries: Vec<Vec<Cyclo>>,
}

impl HermitianMatrix {
    pub fn new(field: Arc<Field>, entries: Vec<Vec<Cyclo>>) -> Result<Self> {
        let m = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != m {
                return Err(Error::InvalidArgument("hermitian matrix must be square".into()));
            }
            for (j, x) in row.iter().enumerate() {
                if x.conductor() != field.conductor() {
                    return Err(Error::InvalidArgument("entries from different cyclotomic fields".into()));
                }
                if j >= i && *x != entries[j][i].conj() {
                    return Err(Error::NotHermitian);
                }
            }
        }
        Ok(HermitianMatrix { field, entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn entries(&self) -> &[Vec<Cyclo>] {
        &self.entries
    }

    pub fn neg(&self) -> HermitianMatrix {
        HermitianMatrix {
            field: self.field.clone(),
            entries: self.entries.iter().map(|r| r.iter().map(Cyclo::neg).collect()).collect(),
        }
    }

    /// `U* H U`.
    pub fn congruence(&self, u: &[Vec<Cyclo>]) -> Result<HermitianMatrix> {
        let m = self.size();
        let zero = Cyclo::zero(self.field.clone());
        let mut hu = vec![vec![zero.clone(); m]; m];
        for (i, row) in hu.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                for k in 0..m {
                    *out = out.add(&self.entries[i][k].mul(&u[k][j]));
                }
            }
        }
        let mut res = vec![vec![zero; m]; m];
        for (i, row) in res.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                for k in 0..m {
                    *out = out.add(&u[k][i].conj().mul(&hu[k][j]));
                }
            }
        }
        HermitianMatrix::new(self.field.clone(), res)
    }

    /// Exact inertia by Hermitian LDL* elimination over the field.
    ///
    /// Pivots are taken on the first nonzero diagonal entry of the active
    /// block. When the active diagonal vanishes but some off-diagonal entry
    /// `a` does not, the basis vector is replaced by `e_i + conj(a) e_j`,
    /// whose self-pairing is `2|a|^2 > 0`; the pair then contributes one
    /// positive and one negative direction. A zero active block is null.
    pub fn inertia(&self) -> Inertia {
        let mut a = self.entries.clone();
        let mut active: Vec<usize> = (0..self.size()).collect();
        let mut out = Inertia::default();

        while !active.is_empty() {
            let pivot = match active.iter().position(|&i| !a[i][i].is_zero()) {
                Some(p) => p,
                None => match find_offdiagonal(&a, &active) {
                    Some((pi, j)) => {
                        let i = active[pi];
                        let c = a[i][j].conj();
                        let cc = c.conj();
                        for &r in &active {
                            let add = c.mul(&a[r][j]);
                            a[r][i] = a[r][i].add(&add);
                        }
                        for &s in &active {
                            let add = cc.mul(&a[j][s]);
                            a[i][s] = a[i][s].add(&add);
                        }
                        pi
                    }
                    None => {
                        out.null += active.len();
                        break;
                    }
                },
            };
            let p = active.remove(pivot);
            let d = a[p][p].clone();
            match d.sign() {
                Ordering::Greater => out.pos += 1,
                Ordering::Less => out.neg += 1,
                Ordering::Equal => unreachable!("pivot must be nonzero"),
            }
            if active.len() <= FRACTION_FREE_TAIL {
                // |d| (A - a d^-1 a*) = |d| A - sgn(d) a a*, congruent up to a positive scalar
                let abs_d = if d.sign() == Ordering::Less { d.neg() } else { d.clone() };
                let neg = d.sign() == Ordering::Less;
                for (pi, &i) in active.iter().enumerate() {
                    for &j in &active[pi..] {
                        let t = a[i][p].mul(&a[p][j]);
                        let scaled = a[i][j].mul(&abs_d);
                        let upd = if neg { scaled.add(&t) } else { scaled.sub(&t) };
                        if i != j {
                            a[j][i] = upd.conj();
                        }
                        a[i][j] = upd;
                    }
                }
                continue;
            }
            let d_inv = d.inv().expect("nonzero pivot");
            let col: Vec<(usize, Cyclo)> = active
                .iter()
                .enumerate()
                .filter(|(_, &i)| !a[i][p].is_zero())
                .map(|(pos, &i)| (pos, a[i][p].mul(&d_inv)))
                .collect();
            for (ci, (pos_i, f)) in col.iter().enumerate() {
                let i = active[*pos_i];
                for (pos_j, _) in &col[ci..] {
                    let j = active[*pos_j];
                    let upd = a[i][j].sub(&f.mul(&a[p][j]));
                    if i != j {
                        a[j][i] = upd.conj();
                    }
                    a[i][j] = upd;
                }
            }
        }
        out
    }

    pub fn signature(&self) -> i64 {
        self.inertia().signature()
    }
}

/// Below this many remaining rows, eliminate without inverting the pivot.
const FRACTION_FREE_TAIL: usize = 4;

fn find_offdiagonal(a: &[Vec<Cyclo>], active: &[usize]) -> Option<(usize, usize)> {
    for (pi, &i) in active.iter().enumerate() {
        for &j in active {
            if j != i && !a[i][j].is_zero() {
                return Some((pi, j));
            }
        }
    }
    None
}

/// Convenience: inertia of the Hermitian matrix.
pub fn hermitian_signature(h: &HermitianMatrix) -> Inertia {
    h.inertia()
}
