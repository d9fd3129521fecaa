//! The pointed Hausdorff (Chabauty) metric on closed subgroups.
//!
//! `d(H, H')` is the infimum of the `ε > 0` such that
//! `H ∩ B(0, 1/ε) ⊂ V_ε(H')` and `H' ∩ B(0, 1/ε) ⊂ V_ε(H)`, where `B` is the
//! closed max-metric ball and `V_ε` the open `ε`-neighbourhood. Every test
//! below is an exact rational comparison.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ball::{int_range, levels_within};
use crate::error::{Error, Result};
use crate::rational::{ceil, floor, fmt_rational, qi, rational_lcm, Rational};
use crate::subgroup::{ClosedSubgroup, LevelSet, PointRZ};

/// Closed interval `[lo, hi]` known to contain a distance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistanceBracket {
    pub lo: Rational,
    pub hi: Rational,
}

impl DistanceBracket {
    pub fn zero() -> Self {
        DistanceBracket {
            lo: Rational::zero(),
            hi: Rational::zero(),
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_zero(&self) -> bool {
        self.hi.is_zero()
    }
}

impl fmt::Display for DistanceBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", fmt_rational(&self.lo), fmt_rational(&self.hi))
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact `δ`-distance from `p` to the closed set `h`.
///
/// Scans the levels of `h` outward from `p.level`; a level at height gap `g`
/// can only help while `g` is below the best distance found so far.
pub fn distance_point_to_subgroup(p: &PointRZ, h: &ClosedSubgroup) -> Rational {
    // (0, 0) is in every subgroup
    let mut best = p.norm();
    let consider = |level: i64, best: &mut Rational| -> bool {
        let gap = int((p.level - level).abs());
        if gap >= *best {
            return false;
        }
        if let Some(dx) = h.level_set(level).dist_x(&p.x) {
            let d = gap.max(dx);
            if d < *best {
                *best = d;
            }
        }
        true
    };
    match h.level_step() {
        0 => {
            consider(0, &mut best);
        }
        n => {
            let n = n as i64;
            let base = p.level.div_euclid(n) * n;
            let mut level = base;
            while consider(level, &mut best) {
                level -= n;
            }
            let mut level = base + n;
            while consider(level, &mut best) {
                level += n;
            }
        }
    }
    best
}

/// How `x ↦ δ((x, level), H)` depends on `x`.
enum XPeriod {
    Constant,
    Period(Rational),
    Aperiodic,
}

fn x_period(h: &ClosedSubgroup) -> XPeriod {
    match h {
        ClosedSubgroup::TypeIV { .. } => XPeriod::Constant,
        ClosedSubgroup::TypeI { alpha } => match alpha.as_finite() {
            None => XPeriod::Constant,
            Some(a) if a.is_zero() => XPeriod::Aperiodic,
            Some(a) => XPeriod::Period(a.recip()),
        },
        ClosedSubgroup::TypeIII { alpha, .. } => XPeriod::Period(alpha.recip()),
        ClosedSubgroup::TypeII { .. } => XPeriod::Aperiodic,
    }
}

/// Whether the closed segment `[a, b]` is covered by the open intervals
/// `(c - eps, c + eps)` around the given centers.
fn covered_by_open_intervals(
    mut centers: Vec<Rational>,
    a: &Rational,
    b: &Rational,
    eps: &Rational,
) -> bool {
    centers.sort();
    let mut reach = a.clone();
    for c in &centers {
        let left = c - eps;
        if left >= reach {
            break;
        }
        let right = c + eps;
        if right > reach {
            reach = right;
            if reach > *b {
                return true;
            }
        }
    }
    reach > *b
}

/// Levels `m` of `h` with `|level - m| < eps`.
fn levels_near(h: &ClosedSubgroup, level: i64, eps: &Rational) -> Vec<i64> {
    let lo = &int(level) - eps;
    let hi = &int(level) + eps;
    match h.level_step() {
        0 => {
            if lo < Rational::zero() && Rational::zero() < hi {
                vec![0]
            } else {
                vec![]
            }
        }
        n => {
            let n = Rational::from_integer(BigInt::from(n));
            // strict bounds: floor(x) + 1 and ceil(x) - 1
            let first = floor(&(&lo / &n)) + 1;
            let last = ceil(&(&hi / &n)) - 1;
            let mut out = Vec::new();
            let mut k = first;
            while k <= last {
                let m: BigInt = &k * n.numer();
                let m = m.to_i64().expect("level fits in i64");
                out.push(m);
                k += 1;
            }
            out
        }
    }
}

/// Whether every point of `[a, b] × {level}` is at distance `< eps` from `h`.
///
/// The distance along a horizontal segment is piecewise linear with local
/// maxima at Voronoi midpoints, so this reduces to a cover check of the segment
/// by open `eps`-intervals around the points of `h` on nearby levels.
fn segment_within(
    level: i64,
    a: &Rational,
    b: &Rational,
    h: &ClosedSubgroup,
    eps: &Rational,
) -> bool {
    let mut centers = Vec::new();
    let mut progressions = Vec::new();
    for m in levels_near(h, level, eps) {
        match h.level_set(m) {
            LevelSet::Empty => {}
            LevelSet::Line => return true,
            LevelSet::Point(p) => centers.push(p),
            LevelSet::Progression { offset, step } => {
                if eps * qi(2) > step {
                    return true;
                }
                progressions.push((offset, step));
            }
        }
    }
    if progressions.is_empty() {
        return covered_by_open_intervals(centers, a, b, eps);
    }
    // all slices of one subgroup share the same step, so the union is periodic
    let step = progressions[0].1.clone();
    let (wa, wb) = if b - a >= step {
        (Rational::zero(), step.clone())
    } else {
        (a.clone(), b.clone())
    };
    for (offset, step) in &progressions {
        let lo = (&wa - eps - offset) / step;
        let hi = (&wb + eps - offset) / step;
        if let Some((first, last)) = int_range(&lo, &hi) {
            let mut k = first;
            while k <= last {
                centers.push(offset + step * Rational::from_integer(k.clone()));
                k += 1;
            }
        }
    }
    covered_by_open_intervals(centers, &wa, &wb, eps)
}

/// One-sided condition `H ∩ B(0, 1/eps) ⊂ V_eps(H2)`, decided exactly.
pub fn hausdorff_inclusion_ok(h: &ClosedSubgroup, h2: &ClosedSubgroup, eps: &Rational) -> bool {
    assert!(eps.is_positive(), "eps must be positive");
    let r = eps.recip();
    let close = |p: PointRZ| distance_point_to_subgroup(&p, h2) < *eps;
    for level in levels_within(h, &r) {
        match h.level_set(level) {
            LevelSet::Empty => {}
            LevelSet::Point(x) => {
                if x.abs() <= r && !close(PointRZ::new(x, level)) {
                    return false;
                }
            }
            LevelSet::Progression { offset, step } => {
                let lo = (-&r - &offset) / &step;
                let hi = (&r - &offset) / &step;
                let Some((first, last)) = int_range(&lo, &hi) else {
                    continue;
                };
                let count: BigInt = &last - &first + 1;
                // δ(·, H2) is periodic in x, so one full period of sample points suffices
                let needed = match x_period(h2) {
                    XPeriod::Constant => BigInt::one(),
                    XPeriod::Period(p) => (rational_lcm(&step, &p) / &step).to_integer(),
                    XPeriod::Aperiodic => count.clone(),
                };
                let stop = &first + count.min(needed);
                let mut k = first;
                while k < stop {
                    let x = &offset + &step * Rational::from_integer(k.clone());
                    if !close(PointRZ::new(x, level)) {
                        return false;
                    }
                    k += 1;
                }
            }
            LevelSet::Line => {
                if !segment_within(level, &-&r, &r, h2, eps) {
                    return false;
                }
            }
        }
    }
    true
}

/// Both inclusions at once; this is the predicate bisected by [`chabauty_distance`].
pub fn within_distance(h: &ClosedSubgroup, h2: &ClosedSubgroup, eps: &Rational) -> bool {
    hausdorff_inclusion_ok(h, h2, eps) && hausdorff_inclusion_ok(h2, h, eps)
}

/// Bracket of width at most `tol` around `d(h, h2)`.
///
/// Bisection is sound because the two-sided predicate is monotone in `eps`.
/// Returns `[0, 0]` exactly when the canonical values agree.
pub fn chabauty_distance(
    h: &ClosedSubgroup,
    h2: &ClosedSubgroup,
    tol: &Rational,
) -> Result<DistanceBracket> {
    if !tol.is_positive() {
        return Err(Error::ToleranceInvalid);
    }
    if h == h2 {
        return Ok(DistanceBracket::zero());
    }
    // Any eps > 1 works: the ball of radius 1/eps < 1 only meets level 0 near
    // the origin, and every such point is within 1/eps < eps of (0, 0).
    let mut hi = qi(2);
    while !within_distance(h, h2, &hi) {
        hi *= qi(2);
    }
    let mut lo = Rational::zero();
    let two = qi(2);
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        if within_distance(h, h2, &mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(DistanceBracket { lo, hi })
}

/// Distances from each term of a sequence to a candidate limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitReport {
    pub distances: Vec<DistanceBracket>,
    pub pass: bool,
}

/// Checks that the last `tail` terms of `seq` are within `tol` of `limit`.
pub fn verify_limit(
    seq: &[ClosedSubgroup],
    limit: &ClosedSubgroup,
    tol: &Rational,
    tail: usize,
) -> Result<LimitReport> {
    if seq.is_empty() {
        return Err(Error::InvalidParameter("sequence is empty".into()));
    }
    if tail == 0 || tail > seq.len() {
        return Err(Error::InvalidParameter(format!(
            "tail must be in 1..={}, got {tail}",
            seq.len()
        )));
    }
    let distances = seq
        .iter()
        .map(|h| chabauty_distance(h, limit, tol))
        .collect::<Result<Vec<_>>>()?;
    let pass = distances[distances.len() - tail..]
        .iter()
        .all(|b| b.hi <= *tol);
    Ok(LimitReport { distances, pass })
}
