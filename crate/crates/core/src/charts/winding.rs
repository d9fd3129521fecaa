//! How often the boundary of cone `k` wraps around the earring circle `A_m`.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::charts::denjoy::{denjoy_xi_batch, DenjoyCoord};
use crate::charts::{glue_boundary, EarringPoint};
use crate::error::{Error, Result};
use crate::rational::{fmt_rational, to_f64, Rational};

/// Euler's totient by trial factorization.
pub fn totient(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let (mut n, mut out) = (n, n);
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// Exact winding count: one turn for each reduced `a/b ∈ [0, 1)` with `k·b = m`.
pub fn winding_count(k: u64, m: u64) -> u64 {
    if k == 0 || m == 0 || !m.is_multiple_of(k) {
        return 0;
    }
    totient(m / k)
}

/// Denjoy coordinates of the grid `u = j/grid`, computed once and reused for
/// every `(k, m)`.
#[derive(Clone, Debug)]
pub struct WindingSamples {
    pub grid: u64,
    pub max_denominator: u64,
    pub coords: Vec<DenjoyCoord>,
}

impl WindingSamples {
    pub fn new(grid: u64, max_denominator: u64) -> Result<Self> {
        if grid < 8 {
            return Err(Error::InvalidParameter(format!(
                "grid must be at least 8, got {grid}"
            )));
        }
        let us: Vec<Rational> = (0..grid)
            .map(|j| Rational::new(BigInt::from(j), BigInt::from(grid)))
            .collect();
        Ok(WindingSamples {
            grid,
            max_denominator,
            coords: denjoy_xi_batch(&us, max_denominator),
        })
    }
}

// Angle of a glued point as seen from the centre of A_m; the basepoint and
// the other circles all sit at angle π.
fn angle_on(m: u64, p: &EarringPoint) -> f64 {
    match p {
        EarringPoint::OnCircle { circle, t } if *circle == m => 2.0 * to_f64(t).atan(),
        _ => PI,
    }
}

fn wrap(d: f64) -> f64 {
    let mut d = d % (2.0 * PI);
    if d > PI {
        d -= 2.0 * PI;
    } else if d <= -PI {
        d += 2.0 * PI;
    }
    d
}

pub fn winding_count_from_samples(samples: &WindingSamples, k: u64, m: u64) -> Result<u64> {
    let mut angles = Vec::with_capacity(samples.coords.len());
    for (j, c) in samples.coords.iter().enumerate() {
        let p = glue_boundary(k, c).map_err(|_| {
            let u = Rational::new(BigInt::from(j), BigInt::from(samples.grid));
            Error::UnresolvedSample(fmt_rational(&u))
        })?;
        angles.push(angle_on(m, &p));
    }
    let n = angles.len();
    let total: f64 = (0..n).map(|i| wrap(angles[(i + 1) % n] - angles[i])).sum();
    Ok((total / (2.0 * PI)).round().to_u64().unwrap_or(0))
}

/// Winding count measured by sampling `ξ` and the gluing on a uniform grid.
pub fn winding_count_sampled(k: u64, m: u64, grid: u64, max_denominator: u64) -> Result<u64> {
    winding_count_from_samples(&WindingSamples::new(grid, max_denominator)?, k, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_counts() {
        assert_eq!(winding_count(2, 6), 2);
        assert_eq!(winding_count(2, 5), 0);
        assert_eq!(winding_count(1, 1), 1);
        assert_eq!(totient(36), 12);
    }

    #[test]
    fn sampled_counts() {
        assert_eq!(winding_count_sampled(3, 4, 512, 32).unwrap(), 0);
        let s = WindingSamples::new(4096, 64).unwrap();
        assert_eq!(winding_count_from_samples(&s, 1, 2).unwrap(), 1);
        assert_eq!(winding_count_from_samples(&s, 2, 6).unwrap(), 2);
    }

    #[test]
    fn small_grid_rejected() {
        assert!(matches!(
            winding_count_sampled(1, 1, 4, 8),
            Err(Error::InvalidParameter(_))
        ));
    }
}
