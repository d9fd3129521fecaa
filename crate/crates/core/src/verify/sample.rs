//! Seeded random inputs for the suites and property tests.

use num_bigint::BigInt;
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::rational::{q, ExtRational, Rational};
use crate::subgroup::{ClosedSubgroup, PointRZ};
use crate::verify::{XCoord, XPoint};

/// `p/q` with `|p| <= max_num` and `1 <= q <= max_den`.
pub fn rational<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    q(
        rng.gen_range(-max_num..=max_num),
        rng.gen_range(1..=max_den),
    )
}

fn positive<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    q(rng.gen_range(1..=max_num), rng.gen_range(1..=max_den))
}

fn unit<R: Rng>(rng: &mut R, max_den: i64) -> Rational {
    let d = rng.gen_range(1..=max_den);
    q(rng.gen_range(0..d), d)
}

/// Up to three generators with numerators and denominators at most 12 and
/// levels in `-6..=6`.
pub fn generators<R: Rng>(rng: &mut R) -> Vec<PointRZ> {
    let count = rng.gen_range(0..=3);
    (0..count)
        .map(|_| {
            let level = if rng.gen_bool(0.3) {
                0
            } else {
                rng.gen_range(-6..=6)
            };
            PointRZ::new(rational(rng, 12, 12), level)
        })
        .collect()
}

/// A nonzero point with the same ranges as [`generators`].
pub fn nonzero_point<R: Rng>(rng: &mut R) -> PointRZ {
    loop {
        let level = if rng.gen_bool(0.3) {
            0
        } else {
            rng.gen_range(-6..=6)
        };
        let p = PointRZ::new(rational(rng, 12, 12), level);
        if p != PointRZ::origin() {
            return p;
        }
    }
}

/// A canonical subgroup whose parameters have denominators at most `max_den`.
pub fn subgroup<R: Rng>(rng: &mut R, max_den: i64) -> ClosedSubgroup {
    let n = rng.gen_range(1..=3u64);
    match rng.gen_range(0..4) {
        0 => ClosedSubgroup::TypeI {
            alpha: match rng.gen_range(0..8) {
                0 => ExtRational::zero(),
                1 => ExtRational::Infinity,
                _ => ExtRational::Finite(positive(rng, max_den, max_den)),
            },
        },
        1 => ClosedSubgroup::TypeII {
            gamma: rational(rng, max_den, max_den),
            n,
        },
        2 => ClosedSubgroup::TypeIII {
            alpha: positive(rng, max_den, max_den),
            beta: unit(rng, max_den),
            n,
        },
        _ => ClosedSubgroup::TypeIV { n },
    }
}

fn coprime_numerator<R: Rng>(rng: &mut R, b: u64) -> u64 {
    if b == 1 {
        return 0;
    }
    let units: Vec<u64> = (1..b).filter(|a| a.gcd(&b) == 1).collect();
    *units.choose(rng).expect("b > 1 has a unit")
}

fn boundary_rational<R: Rng>(rng: &mut R, b: u64) -> Rational {
    Rational::new(BigInt::from(coprime_numerator(rng, b)), BigInt::from(b))
}

/// A point of `X`: level `k <= 6`, any of the three coordinate kinds.
pub fn x_point<R: Rng>(rng: &mut R) -> XPoint {
    let k = rng.gen_range(0..=6u64);
    let coord = match rng.gen_range(0..5) {
        0 | 1 => XCoord::Cone {
            alpha: match rng.gen_range(0..6) {
                0 => ExtRational::Infinity,
                1 if k == 0 => ExtRational::zero(),
                _ => ExtRational::Finite(positive(rng, 6, 6)),
            },
            beta: unit(rng, 6),
        },
        2 | 3 => {
            let b = rng.gen_range(1..=6);
            XCoord::Rational {
                rational: boundary_rational(rng, b),
                t: rational(rng, 6, 4),
            }
        }
        _ => XCoord::Vertical,
    };
    XPoint { k, coord }
}

/// Another coordinate for the same point of the quotient.
pub fn equivalent_variant<R: Rng>(rng: &mut R, p: &XPoint) -> XPoint {
    let basepoint = match &p.coord {
        XCoord::Vertical => true,
        XCoord::Rational { .. } => p.k == 0,
        XCoord::Cone { alpha, .. } => p.k == 0 && alpha.is_zero(),
    };
    if basepoint {
        return match rng.gen_range(0..3) {
            0 => XPoint {
                k: rng.gen_range(0..=6),
                coord: XCoord::Vertical,
            },
            1 => {
                let b = rng.gen_range(1..=6);
                XPoint {
                    k: 0,
                    coord: XCoord::Rational {
                        rational: boundary_rational(rng, b),
                        t: rational(rng, 6, 4),
                    },
                }
            }
            _ => XPoint {
                k: 0,
                coord: XCoord::Cone {
                    alpha: ExtRational::zero(),
                    beta: unit(rng, 6),
                },
            },
        };
    }
    match &p.coord {
        XCoord::Rational { rational, t } => {
            let b = u64::try_from(rational.denom()).expect("small denominator");
            let level = b * p.k;
            let divisors: Vec<u64> = (1..=level).filter(|d| level.is_multiple_of(*d)).collect();
            let k2 = *divisors.choose(rng).expect("level has divisors");
            let t2 = t * q(k2 as i64, p.k as i64);
            XPoint {
                k: k2,
                coord: XCoord::Rational {
                    rational: boundary_rational(rng, level / k2),
                    t: t2,
                },
            }
        }
        XCoord::Cone { alpha, beta } => {
            let beta = if p.k == 0 || alpha.is_infinite() {
                unit(rng, 6)
            } else {
                beta + q(rng.gen_range(-2..=2), 1)
            };
            XPoint {
                k: p.k,
                coord: XCoord::Cone {
                    alpha: alpha.clone(),
                    beta,
                },
            }
        }
        XCoord::Vertical => unreachable!("vertical points are basepoint images"),
    }
}
