//! Hermitian forms over `Z[Z/n]` and their character-valued signatures.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::invariants::carrier_of;
use crate::polyalg::{eval_at_root, hermitian_signature, Field, HermitianMatrix, LaurentPoly, RootOfUnity};
use crate::seifert::{KnotExpr, SeifertMatrix};

/// A square matrix over `Z[t]/(t^n - 1)` with `A(t)^T = A(t^-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingForm {
    n: u64,
    entries: Vec<Vec<LaurentPoly>>,
}

impl GroupRingForm {
    pub fn new(n: u64, entries: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("group order n must be positive".into()));
        }
        let m = entries.len();
        if entries.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidArgument("form matrix must be square".into()));
        }
        let entries: Vec<Vec<LaurentPoly>> =
            entries.into_iter().map(|r| r.into_iter().map(|p| p.reduce_mod_cyclic(n)).collect()).collect();
        for i in 0..m {
            for j in i..m {
                if entries[i][j] != entries[j][i].reverse().reduce_mod_cyclic(n) {
                    return Err(Error::NotHermitian);
                }
            }
        }
        Ok(GroupRingForm { n, entries })
    }

    /// `(1 - t) V + (1 - t^-1) V^T`.
    pub fn from_seifert(v: &SeifertMatrix, n: u64) -> Result<Self> {
        let a = LaurentPoly::from_i64(0, &[1, -1]);
        let b = LaurentPoly::from_i64(-1, &[-1, 1]);
        let e = v.entries();
        let m = v.size();
        let entries = (0..m).map(|i| (0..m).map(|j| &a.scale(&e[i][j]) + &b.scale(&e[j][i])).collect()).collect();
        Self::new(n, entries)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn entries(&self) -> &[Vec<LaurentPoly>] {
        &self.entries
    }

    /// `A(zeta_n^k)`, in the field of the reduced conductor.
    pub fn evaluate(&self, k: u64) -> HermitianMatrix {
        let w = RootOfUnity::new(k as i64, self.n).reduced();
        let entries = self.entries.iter().map(|r| r.iter().map(|p| eval_at_root(p, w)).collect()).collect();
        HermitianMatrix::new(Field::get(w.n()), entries).expect("evaluation of a Hermitian form is Hermitian")
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> =
            self.entries.iter().map(|r| Value::Array(r.iter().map(LaurentPoly::to_json).collect())).collect();
        json!({ "n": self.n, "entries": rows })
    }

    /// Parses `{"n": N, "entries": [[{"lo": .., "coeffs": [..]}, ..], ..]}`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Format("form file needs a positive integer \"n\"".into()))?;
        let rows = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Format("form file needs an \"entries\" array".into()))?;
        let entries = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| Error::Format("form rows must be arrays".into()))?
                    .iter()
                    .map(LaurentPoly::from_json)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, entries)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multisignature {
    pub alpha: Vec<i64>,
}

/// `alpha_k` = signature of `A(zeta_n^k)`, `k = 0..n`.
pub fn multisignature(f: &GroupRingForm) -> Multisignature {
    let alpha = (0..f.n).into_par_iter().map(|k| hermitian_signature(&f.evaluate(k)).signature()).collect();
    Multisignature { alpha }
}

/// `(alpha_1, .., alpha_{(n-1)/2}, alpha_0)` for odd `n` and
/// `(alpha_1, .., alpha_{(n-2)/2}, alpha_{n/2}, alpha_0)` for even `n`.
pub fn l4s_coordinates(f: &GroupRingForm) -> Vec<i64> {
    coordinates(&multisignature(f))
}

pub fn coordinates(ms: &Multisignature) -> Vec<i64> {
    let n = ms.alpha.len();
    let mut out: Vec<i64> = ms.alpha[1..=n / 2].to_vec();
    out.push(ms.alpha[0]);
    out
}

/// Whether the Tristram-Levine signatures at `zeta_n^k`,
/// `k = 1..floor(n/2)`, all vanish; also returns them.
pub fn l4s_vanishes_for_knot(k: &KnotExpr, n: u64) -> Result<(bool, Vec<(u64, i64)>)> {
    if n < 2 {
        return Err(Error::InvalidArgument("n must be at least 2".into()));
    }
    let c = carrier_of(k)?;
    let ks: Vec<u64> = (1..=n / 2).collect();
    let values = crate::invariants::signatures_at(&c, n, &ks);
    Ok((values.iter().all(|&(_, s)| s == 0), values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{tl_signature, InvariantCarrier};
    use crate::seifert::{mirror, twist_seifert};
    use proptest::prelude::*;

    fn lp(lo: i64, cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64(lo, cs)
    }

    #[test]
    fn examples() {
        let f = GroupRingForm::new(4, vec![vec![lp(1, &[1, 0, 1])]]).unwrap();
        assert_eq!(multisignature(&f).alpha, vec![1, 0, -1, 0]);
        let h = GroupRingForm::new(3, vec![vec![lp(0, &[0]), lp(0, &[1])], vec![lp(0, &[1]), lp(0, &[0])]]).unwrap();
        assert_eq!(multisignature(&h).alpha, vec![0, 0, 0]);
        assert_eq!(l4s_coordinates(&h), vec![0, 0]);
        let one = GroupRingForm::new(2, vec![vec![lp(0, &[1])]]).unwrap();
        assert_eq!(multisignature(&one).alpha, vec![1, 1]);
        assert_eq!(l4s_coordinates(&one), vec![1, 1]);
        let two = GroupRingForm::new(5, vec![vec![lp(0, &[2])]]).unwrap();
        assert_eq!(l4s_coordinates(&two), vec![1, 1, 1]);
    }

    #[test]
    fn rejects_non_hermitian() {
        assert_eq!(GroupRingForm::new(3, vec![vec![lp(1, &[1])]]), Err(Error::NotHermitian));
        // t + t^2 is Hermitian mod t^3 - 1
        assert!(GroupRingForm::new(3, vec![vec![lp(1, &[1, 1])]]).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let f = GroupRingForm::new(4, vec![vec![lp(1, &[1, 0, 1])]]).unwrap();
        assert_eq!(GroupRingForm::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn knot_vanishing() {
        assert!(l4s_vanishes_for_knot(&KnotExpr::Unknot, 5).unwrap().0);
        assert_eq!(l4s_vanishes_for_knot(&KnotExpr::torus(2, 3), 2).unwrap(), (false, vec![(1, -2)]));
        assert!(l4s_vanishes_for_knot(&KnotExpr::cable(2, 1, KnotExpr::torus(2, 3)), 2).unwrap().0);
    }

    #[test]
    fn agrees_with_tristram_levine() {
        for v in [twist_seifert(-1), twist_seifert(1), twist_seifert(-2), mirror(&twist_seifert(-2))] {
            let c = InvariantCarrier::from_matrix(&v).unwrap();
            for n in [2u64, 3, 4, 6] {
                let ms = multisignature(&GroupRingForm::from_seifert(&v, n).unwrap());
                for k in 1..n {
                    assert_eq!(ms.alpha[k as usize], tl_signature(&c, RootOfUnity::new(k as i64, n)));
                }
            }
        }
    }

    fn arb_form(n: u64) -> impl Strategy<Value = GroupRingForm> {
        prop::collection::vec(prop::collection::vec(-2i64..=2, 0..=n as usize), 4).prop_map(move |cs| {
            // B + B*, B a 2x2 matrix of group-ring elements
            let b: Vec<LaurentPoly> = cs.iter().map(|c| lp(0, c)).collect();
            let e = |i: usize, j: usize| &b[2 * i + j] + &b[2 * j + i].reverse();
            GroupRingForm::new(n, vec![vec![e(0, 0), e(0, 1)], vec![e(1, 0), e(1, 1)]]).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn conjugate_characters_agree(f in (2u64..9).prop_flat_map(arb_form)) {
            let ms = multisignature(&f);
            let n = f.n() as usize;
            for k in 0..n {
                prop_assert_eq!(ms.alpha[k], ms.alpha[(n - k) % n]);
            }
        }

        #[test]
        fn block_sums_add(f in arb_form(5), g in arb_form(5)) {
            let z = LaurentPoly::zero();
            let mut e = vec![vec![z.clone(); 4]; 4];
            for i in 0..2 {
                for j in 0..2 {
                    e[i][j] = f.entries()[i][j].clone();
                    e[2 + i][2 + j] = g.entries()[i][j].clone();
                }
            }
            let s = GroupRingForm::new(5, e).unwrap();
            let (a, b, c) = (multisignature(&f), multisignature(&g), multisignature(&s));
            for k in 0..5 {
                prop_assert_eq!(c.alpha[k], a.alpha[k] + b.alpha[k]);
            }
        }

        #[test]
        fn constant_forms_are_flat(a in -3i64..=3, b in -3i64..=3, d in -3i64..=3, n in 1u64..8) {
            let f = GroupRingForm::new(n, vec![vec![lp(0, &[a]), lp(0, &[b])], vec![lp(0, &[b]), lp(0, &[d])]]).unwrap();
            let ms = multisignature(&f);
            prop_assert!(ms.alpha.iter().all(|&x| x == ms.alpha[0]));
        }
    }
}
