//! Constructive Z-slice surfaces of lower genus inside the 1-shaking.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::intmat::{self, IntMatrix};
use super::matrix::{is_alexander_trivial, shaking_matrix, SeifertMatrix};
use super::symplectic::{reduce_skew, Workspace};
use crate::error::{Error, Result};
use crate::json;
use crate::polyalg::LaurentPoly;

/// A sub-basis of the transformed shaking matrix whose Seifert form is
/// Alexander trivial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusWitness {
    pub m: SeifertMatrix,
    pub subbasis: Vec<usize>,
    pub m_sub: SeifertMatrix,
    pub g: usize,
    pub h: usize,
    pub determinant: LaurentPoly,
    pub verified: bool,
}

impl GenusWitness {
    pub fn to_json(&self) -> Value {
        json!({
            "M": json::matrix_to_json(self.m.entries()),
            "subbasis": self.subbasis,
            "M_sub": json::matrix_to_json(self.m_sub.entries()),
            "g": self.g,
            "h": self.h,
            "determinant": self.determinant.to_json(),
            "verified": self.verified,
        })
    }
}

fn is_odd(x: &BigInt) -> bool {
    x.is_odd()
}

/// Runs the construction for a knot matrix `V` of size `2m` whose leading
/// `2(m-g)` block `P` is Alexander trivial, producing a genus-`h` surface
/// for the 1-shaking with `2(g-h)+1` components.
pub fn shake1_genus_witness(v: &SeifertMatrix, g: usize, h: usize) -> Result<GenusWitness> {
    v.require_knot()?;
    let size = v.size();
    let m = size / 2;
    if g > m || h > g {
        return Err(Error::InvalidArgument(format!("need 0 <= h <= g <= m, got h={h}, g={g}, m={m}")));
    }
    let np = 2 * (m - g);
    let p_idx: Vec<usize> = (0..np).collect();
    if !is_alexander_trivial(&v.submatrix(&p_idx)) {
        return Err(Error::NotAlexanderTrivial);
    }

    // (a) Split off P, then put the complement in the order a_1..a_g, b_1..b_g.
    let a = intmat::antisymmetrize(v.entries());
    let mut u0 = intmat::identity(size);
    if np > 0 {
        let app: IntMatrix = a[..np].iter().map(|r| r[..np].to_vec()).collect();
        let inv = intmat::inverse_unimodular(&app).ok_or(Error::NotAlexanderTrivial)?;
        let apl: IntMatrix = a[..np].iter().map(|r| r[np..].to_vec()).collect();
        let c = intmat::mul(&inv, &apl);
        for (i, row) in c.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                u0[i][np + j] = -x;
            }
        }
    }
    let mut ws = Workspace::new(intmat::congruence(&a, &u0));
    reduce_skew(&mut ws, np)?;
    let mut perm = vec![vec![BigInt::zero(); size]; size];
    for i in 0..np {
        perm[i][i] = BigInt::one();
    }
    for i in 0..g {
        perm[np + 2 * i][np + i] = BigInt::one();
        perm[np + 2 * i + 1][np + g + i] = BigInt::one();
    }
    let u = intmat::mul(&intmat::mul(&u0, &ws.basis), &perm);

    // (b) Make q(a_1), ..., q(a_{g-h}) even.
    let mut ws = Workspace::new(intmat::congruence(v.entries(), &u));
    let ai = |i: usize| np + i;
    let bi = |i: usize| np + g + i;
    let q = |ws: &Workspace, x: usize| is_odd(&ws.gram[x][x]);
    let swap_pair = |ws: &mut Workspace, i: usize| {
        // (a, b) -> (b, -a)
        ws.swap(ai(i), bi(i));
        ws.negate(bi(i));
    };
    for i in 0..g - h {
        if !q(&ws, ai(i)) {
            continue;
        }
        if !q(&ws, bi(i)) {
            swap_pair(&mut ws, i);
            continue;
        }
        let j = i + 1;
        if j >= g {
            return Err(Error::ParityObstruction);
        }
        match (q(&ws, ai(j)), q(&ws, bi(j))) {
            (false, false) => ws.add(ai(j), bi(j), &BigInt::one()),
            (false, true) => swap_pair(&mut ws, j),
            _ => {}
        }
        ws.add(ai(i), ai(j), &BigInt::one());
        ws.add(bi(j), bi(i), &-BigInt::one());
    }
    let vprime = SeifertMatrix::knot(ws.gram)?;

    // (c), (d) Shake and clear.
    let k = g - h;
    let shaken = shaking_matrix(&vprime, k, 1)?;
    let mut ws = Workspace::new(shaken.entries().clone());
    for l in 0..k {
        let al = ai(l);
        let f1 = size + 2 * l;
        let f2 = f1 + 1;
        ws.add(al, f1, &BigInt::one());
        for x in (0..2 * m - h).filter(|&x| x != al) {
            let c = ws.gram[x][al].clone();
            ws.add(x, f2, &-c);
        }
        let half: BigInt = &ws.gram[al][al] / 2;
        ws.add(al, f2, &-half);
    }
    let m_mat = SeifertMatrix::link(ws.gram)?;

    // (e) P, a_1..a_{g-h}, b_1..b_{g-h}.
    let subbasis: Vec<usize> = p_idx.iter().copied().chain((0..k).map(ai)).chain((0..k).map(bi)).collect();
    let m_sub = m_mat.submatrix(&subbasis);
    let determinant = m_sub.alexander_determinant();
    let verified = determinant.is_unit() && determinant.lo() == (m - h) as i64;
    Ok(GenusWitness { m: m_mat, subbasis, m_sub, g, h, determinant, verified })
}
