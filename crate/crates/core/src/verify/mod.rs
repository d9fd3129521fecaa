//! Brute-force oracles, the equivalence relation on the disjoint union of
//! cones, and the seeded property suites.

mod report;
pub mod sample;
mod suites;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::ball::BallElements;
use crate::error::{Error, Result};
use crate::rational::{floor, frac, ExtRational, Rational};
use crate::subgroup::{ClosedSubgroup, PointRZ};

pub use report::{CaseResult, SuiteReport};
pub use suites::{
    convergence_sequences, convergence_threshold, convergence_tol, run_suite, ScriptedSequence,
    CONVERGENCE_LAST_K, SUITES,
};

/// Coefficient bound past which [`oracle_closure_ball`] gives up.
pub const ORACLE_COEFF_CAP: i64 = 1 << 14;

// Range of c with |base + c·step| <= r, intersected with [lo, hi].
fn solve_1d(lo: i64, hi: i64, base: i64, step: i64, r: i64) -> (i64, i64) {
    if step == 0 {
        return if base.abs() > r { (1, 0) } else { (lo, hi) };
    }
    let (a, b) = (-r - base, r - base);
    let (a, b) = if step > 0 { (a, b) } else { (-b, -a) };
    let s = step.abs();
    (
        lo.max(Integer::div_ceil(&a, &s)),
        hi.min(Integer::div_floor(&b, &s)),
    )
}

// Over-approximation of the c_u with some |c_v| <= bound such that
// (x, l) + c_u·gu + c_v·gv lies in the box: the projection of a convex
// polygon, read off its vertices and widened by one for rounding.
fn project_2d(
    x: i64,
    l: i64,
    gu: (i64, i64),
    gv: (i64, i64),
    bound: i64,
    rx: i64,
    rl: i64,
) -> (i64, i64) {
    let m = bound as f64;
    let lines = [
        (gu.0 as f64, gv.0 as f64, (rx - x) as f64),
        (-gu.0 as f64, -gv.0 as f64, (rx + x) as f64),
        (gu.1 as f64, gv.1 as f64, (rl - l) as f64),
        (-gu.1 as f64, -gv.1 as f64, (rl + l) as f64),
        (1.0, 0.0, m),
        (-1.0, 0.0, m),
        (0.0, 1.0, m),
        (0.0, -1.0, m),
    ];
    let (mut umin, mut umax) = (f64::INFINITY, f64::NEG_INFINITY);
    for (i, p) in lines.iter().enumerate() {
        for q in &lines[i + 1..] {
            let det = p.0 * q.1 - p.1 * q.0;
            if det == 0.0 {
                continue;
            }
            let u = (p.2 * q.1 - p.1 * q.2) / det;
            let v = (p.0 * q.2 - p.2 * q.0) / det;
            let slack = 1e-6 * (1.0 + u.abs() + v.abs());
            if lines
                .iter()
                .all(|c| c.0 * u + c.1 * v <= c.2 + slack * (1.0 + c.0.abs() + c.1.abs()))
            {
                umin = umin.min(u);
                umax = umax.max(u);
            }
        }
    }
    if umin > umax {
        return (1, 0);
    }
    (
        (umin.floor() as i64 - 1).max(-bound),
        (umax.ceil() as i64 + 1).min(bound),
    )
}

// Integer combinations Σ c_i·g_i with |c_i| <= bound inside the box
// |x| <= rx, |level| <= rl, all in coordinates scaled by the common denominator.
fn combos_in_box(gens: &[(i64, i64)], bound: i64, rx: i64, rl: i64) -> BTreeSet<(i64, i64)> {
    fn walk(
        gens: &[(i64, i64)],
        x: i64,
        l: i64,
        bound: i64,
        rx: i64,
        rl: i64,
        out: &mut BTreeSet<(i64, i64)>,
    ) {
        match gens {
            [] => {
                if x.abs() <= rx && l.abs() <= rl {
                    out.insert((x, l));
                }
            }
            [g] => {
                let (lo, hi) = solve_1d(-bound, bound, x, g.0, rx);
                let (lo, hi) = solve_1d(lo, hi, l, g.1, rl);
                for c in lo..=hi {
                    out.insert((x + c * g.0, l + c * g.1));
                }
            }
            [g, h] => {
                let (lo, hi) = project_2d(x, l, *g, *h, bound, rx, rl);
                for c in lo..=hi {
                    walk(&gens[1..], x + c * g.0, l + c * g.1, bound, rx, rl, out);
                }
            }
            [g, rest @ ..] => {
                for c in -bound..=bound {
                    walk(rest, x + c * g.0, l + c * g.1, bound, rx, rl, out);
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    walk(gens, 0, 0, bound, rx, rl, &mut out);
    out
}

/// Points of the closure of `⟨gens⟩` in the closed ball `B(0, r)`, found by
/// enumerating integer combinations with coefficients up to `max_coeff` and
/// doubling the bound until two consecutive doublings change nothing.
pub fn oracle_closure_ball(gens: &[PointRZ], r: &Rational, max_coeff: u64) -> Result<BallElements> {
    if !r.is_positive() {
        return Err(Error::InvalidParameter(
            "ball radius must be positive".into(),
        ));
    }
    let d = gens
        .iter()
        .fold(BigInt::one(), |acc, g| acc.lcm(g.x.denom()));
    let too_big = || Error::InvalidParameter("generators too large for the oracle".into());
    let scaled: Vec<(i64, i64)> = gens
        .iter()
        .map(|g| {
            let x = (&g.x * Rational::from_integer(d.clone())).to_integer();
            Ok((x.to_i64().ok_or_else(too_big)?, g.level))
        })
        .filter(|p: &Result<(i64, i64)>| !matches!(p, Ok((0, 0))))
        .collect::<Result<_>>()?;
    let rx = floor(&(r * Rational::from_integer(d.clone())))
        .to_i64()
        .ok_or_else(too_big)?;
    let rl = floor(r).to_i64().ok_or_else(too_big)?;
    let mut bound = i64::try_from(max_coeff.max(1)).unwrap_or(ORACLE_COEFF_CAP);
    let mut prev = combos_in_box(&scaled, bound, rx, rl);
    let mut stable = 0;
    while stable < 2 {
        bound *= 2;
        if bound > ORACLE_COEFF_CAP {
            return Err(Error::NonDiscreteSuspected);
        }
        let next = combos_in_box(&scaled, bound, rx, rl);
        stable = if next == prev { stable + 1 } else { 0 };
        prev = next;
    }
    let d = Rational::from_integer(d);
    let points = prev
        .into_iter()
        .map(|(x, l)| PointRZ::new(Rational::from_integer(BigInt::from(x)) / &d, l))
        .collect();
    Ok(BallElements {
        points,
        strips: BTreeSet::new(),
    })
}

/// Coordinate of a point of the disjoint union `X` of the closed cones.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum XCoord {
    /// `(α, β)` on the cone; at level 0 only `α` matters.
    Cone { alpha: ExtRational, beta: Rational },
    /// Boundary point on the blow-up segment of `rational = a/b` with slope `t`.
    Rational { rational: Rational, t: Rational },
    /// Boundary point off every blow-up segment.
    Vertical,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XPoint {
    pub k: u64,
    pub coord: XCoord,
}

impl XPoint {
    pub fn new(k: u64, coord: XCoord) -> Self {
        XPoint { k, coord }
    }
}

fn check_point(p: &XPoint) -> Result<()> {
    match &p.coord {
        XCoord::Cone { alpha, .. } if p.k > 0 && alpha.is_zero() => Err(Error::InvalidParameter(
            "cone boundary points need a Rational or Vertical coordinate".into(),
        )),
        XCoord::Rational { rational, .. }
            if rational.is_negative() || *rational >= Rational::one() =>
        {
            Err(Error::InvalidParameter(
                "boundary rational must lie in [0, 1)".into(),
            ))
        }
        _ => Ok(()),
    }
}

/// The map `φ` from `X` to closed subgroups.
pub fn phi_image(p: &XPoint) -> Result<ClosedSubgroup> {
    check_point(p)?;
    let k = p.k;
    Ok(match (&p.coord, k) {
        (XCoord::Cone { alpha, .. }, 0) => ClosedSubgroup::TypeI {
            alpha: alpha.clone(),
        },
        (_, 0) | (XCoord::Vertical, _) => ClosedSubgroup::trivial(),
        (
            XCoord::Cone {
                alpha: ExtRational::Infinity,
                ..
            },
            _,
        ) => ClosedSubgroup::TypeIV { n: k },
        (
            XCoord::Cone {
                alpha: ExtRational::Finite(a),
                beta,
            },
            _,
        ) => ClosedSubgroup::TypeIII {
            alpha: a.clone(),
            beta: frac(beta),
            n: k,
        },
        (XCoord::Rational { rational, t }, _) => {
            let b = rational
                .denom()
                .to_u64()
                .ok_or_else(|| Error::InvalidParameter("denominator overflows u64".into()))?;
            let n = b
                .checked_mul(k)
                .ok_or_else(|| Error::InvalidParameter("b·k overflows u64".into()))?;
            ClosedSubgroup::TypeII {
                gamma: Rational::from_integer(BigInt::from(b)) * t,
                n,
            }
        }
    })
}

fn is_basepoint_image(p: &XPoint) -> bool {
    match &p.coord {
        XCoord::Vertical => true,
        XCoord::Rational { .. } => p.k == 0,
        XCoord::Cone { alpha, .. } => p.k == 0 && alpha.is_zero(),
    }
}

/// Decides whether two points of `X` are identified in the quotient:
/// both glued to the basepoint; boundary points with `b·k = b'·k'` and
/// `t/k = t'/k'`; axis points at level 0 with equal `α`; or the same cone point.
pub fn check_equivalence(a: &XPoint, b: &XPoint) -> Result<bool> {
    check_point(a)?;
    check_point(b)?;
    if is_basepoint_image(a) || is_basepoint_image(b) {
        return Ok(is_basepoint_image(a) && is_basepoint_image(b));
    }
    Ok(match (&a.coord, &b.coord) {
        (
            XCoord::Rational {
                rational: r1,
                t: t1,
            },
            XCoord::Rational {
                rational: r2,
                t: t2,
            },
        ) => {
            let (k1, k2) = (BigInt::from(a.k), BigInt::from(b.k));
            r1.denom() * &k1 == r2.denom() * &k2
                && t1 / Rational::from_integer(k1) == t2 / Rational::from_integer(k2)
        }
        (
            XCoord::Cone {
                alpha: a1,
                beta: b1,
            },
            XCoord::Cone {
                alpha: a2,
                beta: b2,
            },
        ) => a.k == b.k && a1 == a2 && (a.k == 0 || a1.is_infinite() || frac(b1) == frac(b2)),
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::elements_in_ball;
    use crate::rational::{q, qi};

    #[test]
    fn oracle_examples() {
        let gens = [PointRZ::new(q(1, 2), 0), PointRZ::new(q(1, 3), 0)];
        let b = oracle_closure_ball(&gens, &qi(1), 8).unwrap();
        assert_eq!(b.points.len(), 13);
        assert_eq!(oracle_closure_ball(&[], &qi(5), 8).unwrap().points.len(), 1);
        let c = [PointRZ::new(q(3, 2), 2)];
        let h = ClosedSubgroup::TypeII {
            gamma: q(3, 2),
            n: 2,
        };
        assert_eq!(
            oracle_closure_ball(&c, &qi(4), 8).unwrap(),
            elements_in_ball(&h, &qi(4)).unwrap()
        );
    }

    #[test]
    fn equivalence_examples() {
        let r = |a: i64, b: i64, t: Rational| XCoord::Rational {
            rational: q(a, b),
            t,
        };
        let p = XPoint::new(1, r(1, 2, qi(1)));
        assert!(check_equivalence(&p, &XPoint::new(2, r(0, 1, qi(2)))).unwrap());
        assert!(!check_equivalence(&p, &XPoint::new(2, r(1, 2, qi(1)))).unwrap());
        let axis = XPoint::new(
            0,
            XCoord::Cone {
                alpha: ExtRational::Finite(qi(3)),
                beta: qi(0),
            },
        );
        assert!(check_equivalence(&axis, &axis.clone()).unwrap());
        assert!(check_equivalence(
            &XPoint::new(4, XCoord::Vertical),
            &XPoint::new(0, r(1, 3, qi(5)))
        )
        .unwrap());
        let apex = |beta| {
            XPoint::new(
                2,
                XCoord::Cone {
                    alpha: ExtRational::Infinity,
                    beta,
                },
            )
        };
        assert!(check_equivalence(&apex(q(1, 3)), &apex(q(1, 5))).unwrap());
        assert_eq!(
            phi_image(&p).unwrap(),
            ClosedSubgroup::TypeII { gamma: qi(2), n: 2 }
        );
    }
}
