//! Closed subgroups of `ℝ × ℤ` in canonical form.
//!
//! Every closed subgroup falls in exactly one of four families:
//!
//! | family | group | parameters |
//! |--------|-------|------------|
//! | I      | `ℤ(1/α, 0)` | `α ∈ [0, ∞]` (`α = 0` is `{0}`, `α = ∞` is `ℝ × {0}`) |
//! | II     | `ℤ(γ, n)` | `γ ∈ ℚ`, `n ≥ 1` |
//! | III    | `ℤ(1/α, 0) + ℤ(β/α, n)` | `0 < α < ∞`, `0 ≤ β < 1`, `n ≥ 1` |
//! | IV     | `ℝ × nℤ` | `n ≥ 1` |
//!
//! and the parameters inside each family are unique, so structural equality of
//! [`ClosedSubgroup`] values is equality of subgroups.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{dist_to_progression, fmt_rational, frac, ExtRational, Rational};

/// A point `(x, level)` of `ℝ × ℤ` with rational first coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointRZ {
    pub x: Rational,
    pub level: i64,
}

impl PointRZ {
    pub fn new(x: Rational, level: i64) -> Self {
        PointRZ { x, level }
    }

    pub fn origin() -> Self {
        PointRZ::new(Rational::zero(), 0)
    }

    /// `δ(p, 0) = max(|x|, |level|)`.
    pub fn norm(&self) -> Rational {
        self.x
            .abs()
            .max(Rational::from_integer(BigInt::from(self.level.abs())))
    }

    /// The product metric `max(|x − x'|, |n − n'|)`.
    pub fn dist(&self, other: &PointRZ) -> Rational {
        let dx = (&self.x - &other.x).abs();
        let dl = Rational::from_integer(BigInt::from((self.level - other.level).abs()));
        dx.max(dl)
    }

    pub fn scale(&self, k: i64) -> PointRZ {
        PointRZ::new(
            &self.x * Rational::from_integer(BigInt::from(k)),
            self.level * k,
        )
    }
}

impl fmt::Display for PointRZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", fmt_rational(&self.x), self.level)
    }
}

/// Canonical closed subgroup of `ℝ × ℤ`.
///
/// Build values through [`canonicalize_params`], [`classify_from_generators`] or
/// the checked constructors; the invariants (`n ≥ 1`, `0 < α < ∞` for family III,
/// `0 ≤ β < 1`) are what make derived equality coincide with subgroup equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClosedSubgroup {
    TypeI {
        alpha: ExtRational,
    },
    TypeII {
        gamma: Rational,
        n: u64,
    },
    TypeIII {
        alpha: Rational,
        beta: Rational,
        n: u64,
    },
    TypeIV {
        n: u64,
    },
}

/// Unchecked family parameters, as they come from a user or a chart.
/// `None` for an `alpha` field stands for `∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RawSubgroup {
    I {
        alpha: Option<Rational>,
    },
    II {
        gamma: Rational,
        n: i64,
    },
    III {
        alpha: Option<Rational>,
        beta: Rational,
        n: i64,
    },
    IV {
        n: i64,
    },
}

/// Horizontal slice `H ∩ (ℝ × {level})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LevelSet {
    Empty,
    Point(Rational),
    /// `offset + step·ℤ` with `0 ≤ offset < step`.
    Progression {
        offset: Rational,
        step: Rational,
    },
    Line,
}

impl LevelSet {
    /// Horizontal distance from `x` to the slice, `None` when empty.
    pub fn dist_x(&self, x: &Rational) -> Option<Rational> {
        match self {
            LevelSet::Empty => None,
            LevelSet::Point(p) => Some((x - p).abs()),
            LevelSet::Progression { offset, step } => Some(dist_to_progression(x, offset, step)),
            LevelSet::Line => Some(Rational::zero()),
        }
    }
}

fn positive_n(n: i64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be nonzero".into()));
    }
    Ok(n.unsigned_abs())
}

/// Checks raw family parameters and returns the canonical value.
///
/// `β` is reduced mod 1 and a negative `n` is absorbed by the symmetry
/// `ℤ(γ, n) = ℤ(−γ, −n)` (for family III, `β ↦ −β`).
pub fn canonicalize_params(raw: RawSubgroup) -> Result<ClosedSubgroup> {
    match raw {
        RawSubgroup::I { alpha } => Ok(ClosedSubgroup::TypeI {
            alpha: match alpha {
                Some(a) => ExtRational::finite(a)?,
                None => ExtRational::Infinity,
            },
        }),
        RawSubgroup::II { gamma, n } => {
            let m = positive_n(n)?;
            let gamma = if n < 0 { -gamma } else { gamma };
            Ok(ClosedSubgroup::TypeII { gamma, n: m })
        }
        RawSubgroup::III { alpha, beta, n } => {
            let alpha = match alpha {
                Some(a) if a.is_positive() => a,
                Some(a) if a.is_negative() => {
                    return Err(Error::InvalidParameter(format!(
                        "alpha must be nonnegative, got {}",
                        fmt_rational(&a)
                    )))
                }
                _ => {
                    return Err(Error::InvalidParameter(
                        "family III requires 0 < alpha < inf".into(),
                    ))
                }
            };
            let m = positive_n(n)?;
            let beta = if n < 0 { frac(&-beta) } else { frac(&beta) };
            Ok(ClosedSubgroup::TypeIII { alpha, beta, n: m })
        }
        RawSubgroup::IV { n } => Ok(ClosedSubgroup::TypeIV { n: positive_n(n)? }),
    }
}

impl ClosedSubgroup {
    pub fn trivial() -> Self {
        ClosedSubgroup::TypeI {
            alpha: ExtRational::zero(),
        }
    }

    pub fn type_i(alpha: Rational) -> Result<Self> {
        canonicalize_params(RawSubgroup::I { alpha: Some(alpha) })
    }

    pub fn type_ii(gamma: Rational, n: i64) -> Result<Self> {
        canonicalize_params(RawSubgroup::II { gamma, n })
    }

    pub fn type_iii(alpha: Rational, beta: Rational, n: i64) -> Result<Self> {
        canonicalize_params(RawSubgroup::III {
            alpha: Some(alpha),
            beta,
            n,
        })
    }

    pub fn type_iv(n: i64) -> Result<Self> {
        canonicalize_params(RawSubgroup::IV { n })
    }

    /// Family number, 1 to 4.
    pub fn family(&self) -> u8 {
        match self {
            ClosedSubgroup::TypeI { .. } => 1,
            ClosedSubgroup::TypeII { .. } => 2,
            ClosedSubgroup::TypeIII { .. } => 3,
            ClosedSubgroup::TypeIV { .. } => 4,
        }
    }

    /// `α(H)`: the parameter of `H ∩ (ℝ × {0}) = (1/α)ℤ`.
    pub fn alpha(&self) -> ExtRational {
        match self {
            ClosedSubgroup::TypeI { alpha } => alpha.clone(),
            ClosedSubgroup::TypeII { .. } => ExtRational::zero(),
            ClosedSubgroup::TypeIII { alpha, .. } => ExtRational::Finite(alpha.clone()),
            ClosedSubgroup::TypeIV { .. } => ExtRational::Infinity,
        }
    }

    /// `n(H)`: the generator of the projection to `ℤ`, zero for family I.
    pub fn level_step(&self) -> u64 {
        match self {
            ClosedSubgroup::TypeI { .. } => 0,
            ClosedSubgroup::TypeII { n, .. }
            | ClosedSubgroup::TypeIII { n, .. }
            | ClosedSubgroup::TypeIV { n } => *n,
        }
    }

    /// True when the group contains a full horizontal line.
    pub fn is_non_discrete(&self) -> bool {
        matches!(self.alpha(), ExtRational::Infinity)
    }

    /// The slice of `H` at a given level.
    pub fn level_set(&self, level: i64) -> LevelSet {
        match self {
            ClosedSubgroup::TypeI { alpha } => {
                if level != 0 {
                    return LevelSet::Empty;
                }
                match alpha {
                    ExtRational::Infinity => LevelSet::Line,
                    ExtRational::Finite(a) if a.is_zero() => LevelSet::Point(Rational::zero()),
                    ExtRational::Finite(a) => LevelSet::Progression {
                        offset: Rational::zero(),
                        step: a.recip(),
                    },
                }
            }
            ClosedSubgroup::TypeII { gamma, n } => match level_multiple(level, *n) {
                Some(k) => LevelSet::Point(gamma * Rational::from_integer(BigInt::from(k))),
                None => LevelSet::Empty,
            },
            ClosedSubgroup::TypeIII { alpha, beta, n } => match level_multiple(level, *n) {
                Some(k) => {
                    let shift = frac(&(beta * Rational::from_integer(BigInt::from(k))));
                    LevelSet::Progression {
                        offset: shift / alpha,
                        step: alpha.recip(),
                    }
                }
                None => LevelSet::Empty,
            },
            ClosedSubgroup::TypeIV { n } => match level_multiple(level, *n) {
                Some(_) => LevelSet::Line,
                None => LevelSet::Empty,
            },
        }
    }

    /// Exact membership test.
    pub fn contains(&self, p: &PointRZ) -> bool {
        match self.level_set(p.level) {
            LevelSet::Empty => false,
            LevelSet::Point(x) => x == p.x,
            LevelSet::Progression { offset, step } => ((&p.x - offset) / step).is_integer(),
            LevelSet::Line => true,
        }
    }
}

/// `Some(level / n)` when `n` divides `level`.
pub(crate) fn level_multiple(level: i64, n: u64) -> Option<i64> {
    let n = n as i64;
    if level % n == 0 {
        Some(level / n)
    } else {
        None
    }
}

/// Exact membership of `p` in `h`.
pub fn membership(h: &ClosedSubgroup, p: &PointRZ) -> bool {
    h.contains(p)
}

impl fmt::Display for ClosedSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedSubgroup::TypeI { alpha } => write!(f, "I(alpha={alpha})"),
            ClosedSubgroup::TypeII { gamma, n } => {
                write!(f, "II(gamma={},n={n})", fmt_rational(gamma))
            }
            ClosedSubgroup::TypeIII { alpha, beta, n } => write!(
                f,
                "III(alpha={},beta={},n={n})",
                fmt_rational(alpha),
                fmt_rational(beta)
            ),
            ClosedSubgroup::TypeIV { n } => write!(f, "IV(n={n})"),
        }
    }
}

// Row reduction of the integer lattice spanned by (level, scaled x) rows. The
// pivot row carries the gcd of all levels; everything eliminated from it lands on
// level zero and is folded into a single gcd.
struct LatticeReduction {
    pivot_level: BigInt,
    pivot_x: BigInt,
    level_zero_gcd: BigInt,
}

impl LatticeReduction {
    fn new() -> Self {
        LatticeReduction {
            pivot_level: BigInt::zero(),
            pivot_x: BigInt::zero(),
            level_zero_gcd: BigInt::zero(),
        }
    }

    fn push(&mut self, level: BigInt, x: BigInt) {
        if level.is_zero() {
            self.level_zero_gcd = self.level_zero_gcd.gcd(&x);
            return;
        }
        // [s t; -m/g a/g] is unimodular and maps (a, m) to (g, 0) in the level column.
        let eg = self.pivot_level.extended_gcd(&level);
        let (g, s, t) = (eg.gcd, eg.x, eg.y);
        let new_pivot_x = &s * &self.pivot_x + &t * &x;
        let zero_x = (&level / &g) * &self.pivot_x - (&self.pivot_level / &g) * &x;
        self.level_zero_gcd = self.level_zero_gcd.gcd(&zero_x);
        self.pivot_level = g;
        self.pivot_x = new_pivot_x;
    }
}

/// Canonical form of the closure of the subgroup generated by `gens`.
///
/// Clears x-denominators by their lcm `d`, reduces the integer lattice of rows
/// `(level, d·x)` to the basis `{(n, p), (0, c)}` and reads the family off `n`
/// and `c`. Rational generators always generate a discrete group, so the
/// result is never `I(alpha=inf)` or family IV.
pub fn classify_from_generators(gens: &[PointRZ]) -> ClosedSubgroup {
    let d = gens
        .iter()
        .fold(BigInt::one(), |acc, g| acc.lcm(g.x.denom()));
    let mut red = LatticeReduction::new();
    for g in gens {
        let scaled = &g.x * Rational::from_integer(d.clone());
        red.push(BigInt::from(g.level), scaled.to_integer());
    }
    let d = Rational::from_integer(d);
    let n = red
        .pivot_level
        .to_u64()
        .expect("level gcd bounded by input levels");
    let c = red.level_zero_gcd.abs();

    if n == 0 {
        let alpha = if c.is_zero() {
            Rational::zero()
        } else {
            d / Rational::from_integer(c)
        };
        return ClosedSubgroup::TypeI {
            alpha: ExtRational::Finite(alpha),
        };
    }
    if c.is_zero() {
        let gamma = Rational::from_integer(red.pivot_x) / d;
        return ClosedSubgroup::TypeII { gamma, n };
    }
    let c = Rational::from_integer(c);
    let beta = frac(&(Rational::from_integer(red.pivot_x) / &c));
    ClosedSubgroup::TypeIII {
        alpha: d / c,
        beta,
        n,
    }
}

/// Canonical generator of `ℤ·(x, level)` and the subgroup itself.
///
/// The generator is the representative of `±(x, level)` with `level > 0`, or
/// `level = 0` and `x > 0`.
pub fn eta_cyclic(x: &Rational, level: i64) -> Result<(PointRZ, ClosedSubgroup)> {
    let flip = match level.cmp(&0) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => {
            if x.is_zero() {
                return Err(Error::ZeroPoint);
            }
            x.is_negative()
        }
    };
    let generator = if flip {
        PointRZ::new(-x.clone(), -level)
    } else {
        PointRZ::new(x.clone(), level)
    };
    let subgroup = classify_from_generators(std::slice::from_ref(&generator));
    Ok((generator, subgroup))
}
