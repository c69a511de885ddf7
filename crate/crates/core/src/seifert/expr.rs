use std::fmt;

use num_integer::Integer;

use super::matrix::{connected_sum, mirror, SeifertMatrix};
use super::torus::{torus_seifert, twist_seifert};
use crate::error::{Error, Result};

/// A knot built from standard families by mirroring, connected sum and
/// cabling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KnotExpr {
    Unknot,
    Torus(i64, i64),
    Twist(i64),
    Literal(SeifertMatrix),
    Mirror(Box<KnotExpr>),
    Sum(Vec<KnotExpr>),
    /// `Cable(m, r, K)`: the `(m, r)` cable, `m` longitudes.
    Cable(i64, i64, Box<KnotExpr>),
}

impl KnotExpr {
    pub fn torus(p: i64, q: i64) -> Self {
        KnotExpr::Torus(p, q)
    }

    pub fn mirror(k: KnotExpr) -> Self {
        KnotExpr::Mirror(Box::new(k))
    }

    pub fn cable(m: i64, r: i64, k: KnotExpr) -> Self {
        KnotExpr::Cable(m, r, Box::new(k))
    }

    pub fn sum(ks: impl IntoIterator<Item = KnotExpr>) -> Self {
        KnotExpr::Sum(ks.into_iter().collect())
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            KnotExpr::Unknot | KnotExpr::Twist(_) => Ok(()),
            KnotExpr::Torus(p, q) => {
                if p.abs() < 2 || q.abs() < 2 {
                    Err(Error::Semantic(format!("torus parameters must satisfy |p|, |q| >= 2: T({p},{q})")))
                } else if p.gcd(q) != 1 {
                    Err(Error::Semantic("torus parameters not coprime: this is a link".into()))
                } else {
                    Ok(())
                }
            }
            KnotExpr::Literal(v) => {
                if v.is_knot() {
                    Ok(())
                } else {
                    Err(Error::Semantic("literal Seifert matrix is not a knot matrix".into()))
                }
            }
            KnotExpr::Mirror(k) => k.validate(),
            KnotExpr::Sum(ks) => ks.iter().try_for_each(KnotExpr::validate),
            KnotExpr::Cable(m, r, k) => {
                if *m < 1 {
                    Err(Error::Semantic(format!("cable needs m >= 1, got {m}")))
                } else if m.gcd(r) != 1 {
                    Err(Error::Semantic(format!("cable parameters not coprime: ({m},{r})")))
                } else {
                    k.validate()
                }
            }
        }
    }

    pub fn contains_cable(&self) -> bool {
        match self {
            KnotExpr::Cable(..) => true,
            KnotExpr::Mirror(k) => k.contains_cable(),
            KnotExpr::Sum(ks) => ks.iter().any(KnotExpr::contains_cable),
            _ => false,
        }
    }

    /// A Seifert matrix, when the expression involves no cabling.
    pub fn to_seifert(&self) -> Result<SeifertMatrix> {
        self.validate()?;
        match self {
            KnotExpr::Unknot => Ok(SeifertMatrix::empty()),
            KnotExpr::Torus(p, q) => torus_seifert(*p, *q),
            KnotExpr::Twist(m) => Ok(twist_seifert(*m)),
            KnotExpr::Literal(v) => Ok(v.clone()),
            KnotExpr::Mirror(k) => Ok(mirror(&k.to_seifert()?)),
            KnotExpr::Sum(ks) => {
                ks.iter().try_fold(SeifertMatrix::empty(), |acc, k| connected_sum(&acc, &k.to_seifert()?))
            }
            KnotExpr::Cable(..) => {
                Err(Error::InvalidArgument("cables have no Seifert matrix here; use the invariant carrier".into()))
            }
        }
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Unknot => write!(f, "U"),
            KnotExpr::Torus(p, q) => write!(f, "T({p},{q})"),
            KnotExpr::Twist(m) => write!(f, "twist({m})"),
            KnotExpr::Literal(v) => {
                let rows: Vec<String> = v
                    .entries()
                    .iter()
                    .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                    .collect();
                write!(f, "seifert([{}])", rows.join(","))
            }
            KnotExpr::Mirror(k) => write!(f, "mirror({k})"),
            KnotExpr::Sum(ks) => {
                let parts: Vec<String> = ks.iter().map(|k| k.to_string()).collect();
                write!(f, "sum({})", parts.join(","))
            }
            KnotExpr::Cable(m, r, k) => write!(f, "cable({m},{r};{k})"),
        }
    }
}
