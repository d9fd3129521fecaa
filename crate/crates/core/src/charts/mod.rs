//! Coordinates on the glued model space: the Hawaiian earring `A`, the cones
//! `C̄_k`, the segment `[0, ∞]`, and the charts `ψ` from these pieces into the
//! space of closed subgroups.

mod denjoy;
mod winding;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_rational, frac, ExtRational, Rational};
use crate::subgroup::ClosedSubgroup;

pub use denjoy::{
    denjoy_xi, denjoy_xi_batch, psi_bracket, total_length_bracket, Bracket, DenjoyCoord,
};
pub use winding::{
    totient, winding_count, winding_count_from_samples, winding_count_sampled, WindingSamples,
};

/// A point of the Hawaiian earring. `OnCircle { circle: n, t }` sits on the
/// circle `A_n` of radius `1/n` at slope coordinate `t = tan θ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EarringPoint {
    Basepoint,
    OnCircle { circle: u64, t: Rational },
}

impl EarringPoint {
    /// Exact planar position `(1/n)·(2/(1+t²), 2t/(1+t²))`; the basepoint is the origin.
    pub fn embed(&self) -> (Rational, Rational) {
        match self {
            EarringPoint::Basepoint => (Rational::zero(), Rational::zero()),
            EarringPoint::OnCircle { circle, t } => {
                let n = Rational::from_integer(BigInt::from(*circle));
                let d = (Rational::one() + t * t) * n;
                let two = Rational::from_integer(BigInt::from(2));
                (&two / &d, two * t / d)
            }
        }
    }
}

impl fmt::Display for EarringPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EarringPoint::Basepoint => f.write_str("earring(basepoint)"),
            EarringPoint::OnCircle { circle, t } => {
                write!(f, "earring(circle={circle},t={})", fmt_rational(t))
            }
        }
    }
}

/// A point of the closed cone `C̄_k = [0, ∞] × ℝ/ℤ` with the `∞` slice collapsed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConePoint {
    pub k: u64,
    pub alpha: ExtRational,
    pub beta: Rational,
}

impl ConePoint {
    /// Reduces `beta` mod 1 and normalizes the apex to `beta = 0`.
    pub fn new(k: u64, alpha: ExtRational, beta: Rational) -> Self {
        let beta = if alpha.is_infinite() {
            Rational::zero()
        } else {
            frac(&beta)
        };
        ConePoint { k, alpha, beta }
    }
}

/// A point of the glued model `C_∞ ∪ A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModelPoint {
    /// The axis `[0, ∞]` where the cones accumulate; `alpha > 0`.
    Segment {
        alpha: ExtRational,
    },
    /// Cone `k` off its boundary circle; `alpha > 0`, apex stored with `beta = 0`.
    ConeInterior {
        k: u64,
        alpha: ExtRational,
        beta: Rational,
    },
    Earring {
        point: EarringPoint,
    },
}

impl fmt::Display for ModelPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelPoint::Segment { alpha } => write!(f, "segment(alpha={alpha})"),
            ModelPoint::ConeInterior { k, alpha, beta } => {
                write!(f, "cone(k={k},alpha={alpha},beta={})", fmt_rational(beta))
            }
            ModelPoint::Earring { point } => point.fmt(f),
        }
    }
}

fn big(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `ψ^I(α) = ℤ(1/α, 0)`.
pub fn chart_psi_i(alpha: ExtRational) -> ClosedSubgroup {
    ClosedSubgroup::TypeI { alpha }
}

pub fn chart_psi_i_inverse(h: &ClosedSubgroup) -> Result<ExtRational> {
    match h {
        ClosedSubgroup::TypeI { alpha } => Ok(alpha.clone()),
        other => Err(Error::InvalidParameter(format!(
            "{other} is not in the image of psi^I"
        ))),
    }
}

/// `ψ_n^II`: a point at slope `t` on `A_b` goes to `ℤ(b·t, b·n)`, the basepoint to `{0}`.
pub fn chart_psi_ii_n(n: u64, p: &EarringPoint) -> Result<ClosedSubgroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    match p {
        EarringPoint::Basepoint => Ok(ClosedSubgroup::trivial()),
        EarringPoint::OnCircle { circle, t } => {
            if *circle == 0 {
                return Err(Error::InvalidParameter(
                    "circle index must be positive".into(),
                ));
            }
            let level = circle
                .checked_mul(n)
                .ok_or_else(|| Error::InvalidParameter("circle index times n overflows".into()))?;
            Ok(ClosedSubgroup::TypeII {
                gamma: big(*circle) * t,
                n: level,
            })
        }
    }
}

/// Inverse of [`chart_psi_ii_n`] on its image.
pub fn chart_psi_ii_n_inverse(n: u64, h: &ClosedSubgroup) -> Result<EarringPoint> {
    match h {
        ClosedSubgroup::TypeI { alpha } if alpha.is_zero() => Ok(EarringPoint::Basepoint),
        ClosedSubgroup::TypeII { gamma, n: level } if n > 0 && level % n == 0 => {
            let b = level / n;
            Ok(EarringPoint::OnCircle {
                circle: b,
                t: gamma / big(b),
            })
        }
        other => Err(Error::InvalidParameter(format!(
            "{other} is not in the image of psi_{n}^II"
        ))),
    }
}

/// `ψ_n^III`: the open cone onto family III at level `n`, apex onto `ℝ × nℤ`.
pub fn chart_psi_iii_n(n: u64, c: &ConePoint) -> Result<ClosedSubgroup> {
    if n == 0 || c.k != n {
        return Err(Error::InvalidParameter(format!(
            "cone point on C_{} used with chart index {n}",
            c.k
        )));
    }
    match &c.alpha {
        ExtRational::Infinity => Ok(ClosedSubgroup::TypeIV { n }),
        ExtRational::Finite(a) if a.is_zero() => Err(Error::BoundaryPoint),
        ExtRational::Finite(a) => Ok(ClosedSubgroup::TypeIII {
            alpha: a.clone(),
            beta: frac(&c.beta),
            n,
        }),
    }
}

pub fn chart_psi_iii_n_inverse(h: &ClosedSubgroup) -> Result<ConePoint> {
    match h {
        ClosedSubgroup::TypeIII { alpha, beta, n } => Ok(ConePoint {
            k: *n,
            alpha: ExtRational::Finite(alpha.clone()),
            beta: beta.clone(),
        }),
        ClosedSubgroup::TypeIV { n } => {
            Ok(ConePoint::new(*n, ExtRational::Infinity, Rational::zero()))
        }
        other => Err(Error::InvalidParameter(format!(
            "{other} is not in a cone chart"
        ))),
    }
}

/// Slope coordinate `t(λ) = (2λ − 1)/(λ(1 − λ))` for `0 < λ < 1`.
pub fn slope_of_lambda(lambda: &Rational) -> Option<Rational> {
    if !lambda.is_positive() || *lambda >= Rational::one() {
        return None;
    }
    let one = Rational::one();
    Some((lambda * Rational::from_integer(BigInt::from(2)) - &one) / (lambda * (&one - lambda)))
}

/// The gluing `g_∞`: boundary circle of cone `k` onto the earring. Level 0 is
/// the basepoint.
pub fn glue_boundary(k: u64, coord: &DenjoyCoord) -> Result<EarringPoint> {
    match coord {
        DenjoyCoord::Unresolved { .. } => Err(Error::UnresolvedInput),
        _ if k == 0 => Ok(EarringPoint::Basepoint),
        DenjoyCoord::IrrationalPoint => Ok(EarringPoint::Basepoint),
        DenjoyCoord::Interval { rational, lambda } => match slope_of_lambda(lambda) {
            None => Ok(EarringPoint::Basepoint),
            Some(t) => {
                let b = rational.denom();
                let circle = u64::try_from(b * BigInt::from(k))
                    .map_err(|_| Error::InvalidParameter("circle index overflows u64".into()))?;
                Ok(EarringPoint::OnCircle { circle, t })
            }
        },
    }
}

/// The global chart of the glued model.
pub fn subgroup_to_model(h: &ClosedSubgroup) -> ModelPoint {
    match h {
        ClosedSubgroup::TypeI { alpha } if alpha.is_zero() => ModelPoint::Earring {
            point: EarringPoint::Basepoint,
        },
        ClosedSubgroup::TypeI { alpha } => ModelPoint::Segment {
            alpha: alpha.clone(),
        },
        ClosedSubgroup::TypeII { gamma, n } => ModelPoint::Earring {
            point: EarringPoint::OnCircle {
                circle: *n,
                t: gamma / big(*n),
            },
        },
        ClosedSubgroup::TypeIII { alpha, beta, n } => ModelPoint::ConeInterior {
            k: *n,
            alpha: ExtRational::Finite(alpha.clone()),
            beta: beta.clone(),
        },
        ClosedSubgroup::TypeIV { n } => ModelPoint::ConeInterior {
            k: *n,
            alpha: ExtRational::Infinity,
            beta: Rational::zero(),
        },
    }
}

pub fn model_to_subgroup(m: &ModelPoint) -> Result<ClosedSubgroup> {
    let bad = |why: &str| Err(Error::NonCanonicalModelPoint(format!("{m}: {why}")));
    match m {
        ModelPoint::Segment { alpha } if alpha.is_zero() => {
            bad("the axis endpoint 0 is the earring basepoint")
        }
        ModelPoint::Segment { alpha } => Ok(ClosedSubgroup::TypeI {
            alpha: alpha.clone(),
        }),
        ModelPoint::ConeInterior { k: 0, .. } => bad("cone index must be positive"),
        ModelPoint::ConeInterior { alpha, .. } if alpha.is_zero() => {
            bad("cone boundary points are stored as earring points")
        }
        ModelPoint::ConeInterior { beta, .. } if beta.is_negative() || *beta >= Rational::one() => {
            bad("beta must lie in [0, 1)")
        }
        ModelPoint::ConeInterior {
            k,
            alpha: ExtRational::Infinity,
            beta,
        } => {
            if !beta.is_zero() {
                return bad("the apex is stored with beta = 0");
            }
            Ok(ClosedSubgroup::TypeIV { n: *k })
        }
        ModelPoint::ConeInterior {
            k,
            alpha: ExtRational::Finite(a),
            beta,
        } => Ok(ClosedSubgroup::TypeIII {
            alpha: a.clone(),
            beta: beta.clone(),
            n: *k,
        }),
        ModelPoint::Earring {
            point: EarringPoint::Basepoint,
        } => Ok(ClosedSubgroup::trivial()),
        ModelPoint::Earring {
            point: EarringPoint::OnCircle { circle: 0, .. },
        } => bad("circle index must be positive"),
        ModelPoint::Earring {
            point: EarringPoint::OnCircle { circle, t },
        } => Ok(ClosedSubgroup::TypeII {
            gamma: big(*circle) * t,
            n: *circle,
        }),
    }
}
