//! A constructive Denjoy blow-up `ξ` of the circle `ℝ/ℤ`.
//!
//! Every rational `a/b ∈ [0, 1)` in lowest terms is replaced by a segment
//! `I_{a/b}` of length `1/b³`. Arc length on the blown-up circle `R` is
//! `Ψ(s) = s + Σ_{a/b < s} 1/b³`, total length `L = 1 + ζ(2)/ζ(3)`.
//!
//! Writing `G(s) = Σ_{a/b < s} 1/b³` over reduced fractions and
//! `F(s) = Σ_{f ≥ 1} ⌈s f⌉ / f³` over all fractions gives `F = ζ(3)·G`, and for
//! `s = a/b`
//!
//! ```text
//! F(a/b) = (a/b)·ζ(2) + (1/b)·Σ_f r_f / f³,   r_f = (−a f) mod b,
//! ```
//!
//! whose truncation after `D` terms is off by at most `1/(2D²)`. All bounds are
//! carried as integer brackets in fixed point with 128 fractional bits.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::{floor, frac, Rational};

const SHIFT: u32 = 128;
const SUM_SHIFT: u32 = 96;
const FIRST_DEPTH: u64 = 32;
/// Largest usable search bound; keeps the inner sums inside `i128`.
pub const MAX_DENOMINATOR: u64 = 1 << 15;

const ZETA2_LO: &str = "16449340668482264364724151666460251892189";
const ZETA2_HI: &str = "16449340668482264364724151666460251892190";
const ZETA3_LO: &str = "12020569031595942853997381615114499907649";
const ZETA3_HI: &str = "12020569031595942853997381615114499907650";
const ZETA_DIGITS: u32 = 40;

/// Output of `ξ`: a point on a blow-up segment, or a point off all of them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DenjoyCoord {
    /// `rational` is `a/b ∈ [0, 1)` and `lambda ∈ [0, 1]` the affine position on `I_{a/b}`.
    Interval {
        rational: Rational,
        lambda: Rational,
    },
    /// Outside every segment `I_{a/b}` with `b` up to the search bound.
    IrrationalPoint,
    /// Precision ran out before the query could be decided.
    Unresolved { precision_used: u64 },
}

impl DenjoyCoord {
    /// Lexicographic position `(a/b, λ)` used to compare points on `R`.
    pub fn position(&self) -> Option<(&Rational, &Rational)> {
        match self {
            DenjoyCoord::Interval { rational, lambda } => Some((rational, lambda)),
            _ => None,
        }
    }
}

/// Closed rational interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    pub lo: Rational,
    pub hi: Rational,
}

impl Bracket {
    pub fn contains(&self, x: &Rational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }
}

// Fixed point bracket with SHIFT fractional bits.
#[derive(Clone, Debug)]
struct Fx {
    lo: BigInt,
    hi: BigInt,
}

impl Fx {
    fn to_bracket(&self) -> Bracket {
        let s = one();
        Bracket {
            lo: Rational::new(self.lo.clone(), s.clone()),
            hi: Rational::new(self.hi.clone(), s),
        }
    }
}

fn one() -> BigInt {
    BigInt::one() << SHIFT
}

fn div_floor(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn div_ceil(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

struct Constants {
    zeta2: Fx,
    zeta3: Fx,
    length: Fx,
}

fn constants() -> &'static Constants {
    static C: OnceLock<Constants> = OnceLock::new();
    C.get_or_init(|| {
        let scale = BigInt::from(10).pow(ZETA_DIGITS);
        let parse = |s: &str| s.parse::<BigInt>().expect("digit string");
        let fx = |lo: &str, hi: &str| Fx {
            lo: div_floor(&(parse(lo) << SHIFT), &scale),
            hi: div_ceil(&(parse(hi) << SHIFT), &scale),
        };
        let zeta2 = fx(ZETA2_LO, ZETA2_HI);
        let zeta3 = fx(ZETA3_LO, ZETA3_HI);
        let length = Fx {
            lo: one() + div_floor(&(&zeta2.lo << SHIFT), &zeta3.hi),
            hi: one() + div_ceil(&(&zeta2.hi << SHIFT), &zeta3.lo),
        };
        Constants {
            zeta2,
            zeta3,
            length,
        }
    })
}

/// Bracket on the total length `L = 1 + ζ(2)/ζ(3)` of `R`.
pub fn total_length_bracket() -> Bracket {
    constants().length.to_bracket()
}

// Partial sums Σ_{f ≤ depth} floor(r_f·2^96 / f³), kept per fraction so that
// deeper requests resume where the last one stopped.
#[derive(Default)]
struct PsiCache {
    sums: HashMap<(u64, u64), (u64, i128)>,
}

impl PsiCache {
    fn partial_sum(&mut self, a: u64, b: u64, depth: u64) -> i128 {
        let entry = self.sums.entry((a, b)).or_insert((0, 0));
        let (mut f, mut acc) = *entry;
        if f >= depth {
            if f == depth {
                return acc;
            }
            f = 0;
            acc = 0;
        }
        let (a, b) = (a as u128, b as u128);
        while f < depth {
            f += 1;
            let ff = f as u128;
            let r = (b - (a * ff) % b) % b;
            acc += ((r << SUM_SHIFT) / (ff * ff * ff)) as i128;
        }
        if f >= entry.0 {
            *entry = (f, acc);
        }
        acc
    }

    // Ψ(a/b) as a fixed point bracket using `depth` terms.
    fn psi(&mut self, a: u64, b: u64, depth: u64) -> Fx {
        if a == 0 {
            return Fx {
                lo: BigInt::zero(),
                hi: BigInt::zero(),
            };
        }
        let c = constants();
        let (ab, bb) = (BigInt::from(a), BigInt::from(b));
        let s = BigInt::from(self.partial_sum(a, b, depth));
        let lift = SHIFT - SUM_SHIFT;
        let d = BigInt::from(depth);
        let tail = div_ceil(&one(), &(BigInt::from(2) * &d * &d));
        let f_lo = div_floor(&(&ab * &c.zeta2.lo), &bb) + div_floor(&(&s << lift), &bb);
        let f_hi = div_ceil(&(&ab * &c.zeta2.hi), &bb) + div_ceil(&((&s + &d) << lift), &bb) + tail;
        let base = &ab << SHIFT;
        Fx {
            lo: div_floor(&base, &bb) + div_floor(&(f_lo << SHIFT), &c.zeta3.hi),
            hi: div_ceil(&base, &bb) + div_ceil(&(f_hi << SHIFT), &c.zeta3.lo),
        }
    }
}

/// Bracket on `Ψ(s)` for a rational `s = a/b ∈ [0, 1)` in lowest terms, using
/// `depth` terms of the series.
pub fn psi_bracket(s: &Rational, depth: u64) -> Option<Bracket> {
    if s.is_negative() || *s >= Rational::one() || depth == 0 {
        return None;
    }
    let a = s.numer().to_u64()?;
    let b = s.denom().to_u64()?;
    if b > MAX_DENOMINATOR {
        return None;
    }
    Some(PsiCache::default().psi(a, b, depth).to_bracket())
}

enum Side {
    Left,
    Right,
    Inside,
    Unknown,
}

fn locate(ell: &Fx, psi: &Fx, b: u64) -> Side {
    let b3 = BigInt::from(b).pow(3);
    let w_lo = div_floor(&one(), &b3);
    let w_hi = div_ceil(&one(), &b3);
    if ell.hi < psi.lo {
        Side::Left
    } else if ell.lo > &psi.hi + &w_hi {
        Side::Right
    } else if ell.lo >= psi.hi && ell.hi <= &psi.lo + &w_lo {
        Side::Inside
    } else {
        Side::Unknown
    }
}

/// Simplest rational within `2^-21` of a certified bracket narrower than that.
fn readable_lambda(lam: &Bracket) -> Rational {
    let pad = lambda_target() / Rational::from_integer(BigInt::from(2));
    if &lam.hi - &lam.lo > lambda_target() {
        return simplest_between(&lam.lo, &lam.hi);
    }
    let mid = lam.midpoint();
    let lo = (&mid - &pad).max(Rational::zero());
    let hi = (&mid + &pad).min(Rational::one());
    simplest_between(&lo, &hi)
}

/// Simplest rational in `[lo, hi]`, for `0 <= lo <= hi`.
fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    let fl = Rational::from_integer(floor(lo));
    if fl == *lo {
        return fl;
    }
    let next = &fl + Rational::one();
    if next <= *hi {
        return next;
    }
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

fn lambda_bracket(ell: &Fx, psi: &Fx, b: u64) -> Bracket {
    let b3 = BigInt::from(b).pow(3);
    let clamp = |x: BigInt| -> Rational {
        let r = Rational::new(x * &b3, one());
        r.max(Rational::zero()).min(Rational::one())
    };
    Bracket {
        lo: clamp(&ell.lo - &psi.hi),
        hi: clamp(&ell.hi - &psi.lo),
    }
}

fn lambda_target() -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << 20)
}

fn xi_with_cache(u: &Rational, max_denominator: u64, cache: &mut PsiCache) -> DenjoyCoord {
    let bound = max_denominator.clamp(1, MAX_DENOMINATOR);
    let max_depth = (4 * bound * bound).max(FIRST_DEPTH);
    let u = frac(u);
    if u.is_zero() {
        return DenjoyCoord::Interval {
            rational: Rational::zero(),
            lambda: Rational::zero(),
        };
    }
    let c = constants();
    let ell = Fx {
        lo: div_floor(&(u.numer() * &c.length.lo), u.denom()),
        hi: div_ceil(&(u.numer() * &c.length.hi), u.denom()),
    };
    // I_{0/1} = [0, 1] is exact.
    if ell.lo <= one() && ell.hi > one() {
        return DenjoyCoord::Unresolved {
            precision_used: bound,
        };
    }
    if ell.hi <= one() {
        let lam = Bracket {
            lo: Rational::new(ell.lo.clone(), one()),
            hi: Rational::new(ell.hi, one()),
        };
        return DenjoyCoord::Interval {
            rational: Rational::zero(),
            lambda: readable_lambda(&lam),
        };
    }
    let (mut la, mut lb, mut ra, mut rb) = (0u64, 1u64, 1u64, 1u64);
    loop {
        let (a, b) = (la + ra, lb + rb);
        if b > bound {
            return DenjoyCoord::IrrationalPoint;
        }
        let mut depth = FIRST_DEPTH;
        let side = loop {
            let psi = cache.psi(a, b, depth);
            match locate(&ell, &psi, b) {
                Side::Unknown if depth < max_depth => depth = (depth * 4).min(max_depth),
                Side::Unknown => {
                    return DenjoyCoord::Unresolved {
                        precision_used: bound,
                    }
                }
                Side::Inside => {
                    let mut lam = lambda_bracket(&ell, &psi, b);
                    while &lam.hi - &lam.lo > lambda_target() && depth < max_depth {
                        depth = (depth * 4).min(max_depth);
                        lam = lambda_bracket(&ell, &cache.psi(a, b, depth), b);
                    }
                    break Some(lam);
                }
                Side::Left => {
                    ra = a;
                    rb = b;
                    break None;
                }
                Side::Right => {
                    la = a;
                    lb = b;
                    break None;
                }
            }
        };
        if let Some(lam) = side {
            return DenjoyCoord::Interval {
                rational: Rational::new(BigInt::from(a), BigInt::from(b)),
                lambda: readable_lambda(&lam),
            };
        }
    }
}

/// `ξ(u)` for `u ∈ [0, 1)` (other values are reduced mod 1), searching blow-up
/// segments with denominators up to `max_denominator`.
///
/// `lambda` is within `2^-20` of the true parameter when the series depth
/// `4·max_denominator²` allows it, and is the simplest rational with that
/// guarantee.
pub fn denjoy_xi(u: &Rational, max_denominator: u64) -> DenjoyCoord {
    xi_with_cache(u, max_denominator, &mut PsiCache::default())
}

/// [`denjoy_xi`] over many points, sharing partial sums between queries.
pub fn denjoy_xi_batch(us: &[Rational], max_denominator: u64) -> Vec<DenjoyCoord> {
    let mut cache = PsiCache::default();
    us.iter()
        .map(|u| xi_with_cache(u, max_denominator, &mut cache))
        .collect()
}
