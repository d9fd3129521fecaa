//! Exact enumeration of `H ∩ B(0, r)` for the closed max-metric ball.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::rational::{ceil, floor, Rational};
use crate::subgroup::{ClosedSubgroup, LevelSet, PointRZ};

/// The segment `[-half_width, half_width] × {level}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Strip {
    pub level: i64,
    pub half_width: Rational,
}

/// Finite description of a subgroup inside a ball: isolated points plus
/// horizontal strips (only for groups containing lines).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BallElements {
    pub points: BTreeSet<PointRZ>,
    pub strips: BTreeSet<Strip>,
}

impl BallElements {
    pub fn len(&self) -> usize {
        self.points.len() + self.strips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.strips.is_empty()
    }

    /// Whether `p` is one of the points or lies on one of the strips.
    pub fn covers(&self, p: &PointRZ) -> bool {
        self.points.contains(p)
            || self
                .strips
                .iter()
                .any(|s| s.level == p.level && p.x.abs() <= s.half_width)
    }
}

/// Integer range `[lo, hi]` from rational bounds, empty when `lo > hi`.
pub(crate) fn int_range(lo: &Rational, hi: &Rational) -> Option<(BigInt, BigInt)> {
    let a = ceil(lo);
    let b = floor(hi);
    if a > b {
        None
    } else {
        Some((a, b))
    }
}

/// Levels of `h` with `|level| <= r`, in increasing order.
pub(crate) fn levels_within(h: &ClosedSubgroup, r: &Rational) -> Vec<i64> {
    let bound = floor(r).to_i64().unwrap_or(i64::MAX);
    match h.level_step() {
        0 => vec![0],
        n => {
            let n = n as i64;
            let top = bound / n;
            (-top..=top).map(|k| k * n).collect()
        }
    }
}

/// `H ∩ B(0, r)` with the closed ball `max(|x|, |level|) <= r`.
pub fn elements_in_ball(h: &ClosedSubgroup, r: &Rational) -> Result<BallElements> {
    if !r.is_positive() {
        return Err(Error::InvalidParameter(
            "ball radius must be positive".into(),
        ));
    }
    let mut out = BallElements::default();
    for level in levels_within(h, r) {
        match h.level_set(level) {
            LevelSet::Empty => {}
            LevelSet::Point(x) => {
                if x.abs() <= *r {
                    out.points.insert(PointRZ::new(x, level));
                }
            }
            LevelSet::Progression { offset, step } => {
                let lo = (-r - &offset) / &step;
                let hi = (r - &offset) / &step;
                if let Some((a, b)) = int_range(&lo, &hi) {
                    let mut k = a;
                    while k <= b {
                        let x = &offset + &step * Rational::from_integer(k.clone());
                        out.points.insert(PointRZ::new(x, level));
                        k += 1;
                    }
                }
            }
            LevelSet::Line => {
                out.strips.insert(Strip {
                    level,
                    half_width: r.clone(),
                });
            }
        }
    }
    debug_assert!(out.points.iter().all(|p| p.norm() <= *r));
    debug_assert!(out.strips.is_empty() || h.is_non_discrete());
    Ok(out)
}
