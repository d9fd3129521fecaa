use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ball::elements_in_ball;
use crate::charts::{
    chart_psi_i, chart_psi_i_inverse, chart_psi_ii_n, chart_psi_ii_n_inverse, chart_psi_iii_n,
    chart_psi_iii_n_inverse, denjoy_xi_batch, model_to_subgroup, psi_bracket, subgroup_to_model,
    total_length_bracket, winding_count, winding_count_from_samples, WindingSamples,
};
use crate::error::{Error, Result};
use crate::metric::{chabauty_distance, hausdorff_inclusion_ok};
use crate::rational::{q, qi, ExtRational, Rational};
use crate::subgroup::{classify_from_generators, eta_cyclic, ClosedSubgroup, PointRZ};
use crate::verify::{
    check_equivalence, oracle_closure_ball, phi_image, sample, CaseResult, SuiteReport, XCoord,
    XPoint,
};

pub const SUITES: [&str; 6] = [
    "classification",
    "metric",
    "charts",
    "convergence",
    "winding",
    "equivalence",
];

/// Last index of the scripted sequences and the distance they must reach there.
/// Calibration run (bisection tol 1/100): c, d, e, f end at or below 1/64 + 1/100;
/// a and b stay near 1/8, see `convergence_sequences`.
pub const CONVERGENCE_LAST_K: u64 = 64;
pub fn convergence_threshold() -> Rational {
    q(1, 10)
}
pub fn convergence_tol() -> Rational {
    q(1, 100)
}
const CONVERGENCE_TAIL: u64 = 8;

const WINDING_MAX: u64 = 12;
const WINDING_SAMPLED_MAX: u64 = 6;
const WINDING_GRID: u64 = 4096;
const WINDING_PREC: u64 = 64;

/// A sequence `k ↦ H_k` together with its expected limit.
pub struct ScriptedSequence {
    pub id: &'static str,
    pub limit: ClosedSubgroup,
    term: fn(u64) -> ClosedSubgroup,
}

impl ScriptedSequence {
    pub fn term(&self, k: u64) -> ClosedSubgroup {
        (self.term)(k)
    }
}

fn fib_ratio(k: u64) -> Rational {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..k {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    Rational::new(a, b)
}

fn ki(k: u64) -> Rational {
    qi(k as i64)
}

/// The six proof sequences: cones collapsing onto a rational boundary angle (a)
/// and onto an irrational one (b), cones opening to their apex (c), cyclic
/// groups escaping to the basepoint (d, f), cones at growing level shrinking to
/// the axis (e).
///
/// (a) and (b) converge at rate `k^{-1/2}`: at level `2j` the group of (a) has
/// its nearest point at `x = 2j/k`, and the lattice of (b) has covolume `k`, so
/// it has a nonzero point of norm at most `√k`. Both sit near `1/8` at `k = 64`.
pub fn convergence_sequences() -> Vec<ScriptedSequence> {
    vec![
        ScriptedSequence {
            id: "a-rational-angle",
            limit: ClosedSubgroup::TypeII { gamma: qi(0), n: 2 },
            term: |k| {
                let beta = q(1, 2) + ki(k * k).recip();
                ClosedSubgroup::type_iii(ki(k).recip(), beta, 1).expect("positive alpha")
            },
        },
        ScriptedSequence {
            id: "b-vertical",
            limit: ClosedSubgroup::trivial(),
            term: |k| ClosedSubgroup::TypeIII {
                alpha: ki(k).recip(),
                beta: fib_ratio(k + 2),
                n: 1,
            },
        },
        ScriptedSequence {
            id: "c-apex",
            limit: ClosedSubgroup::TypeIV { n: 1 },
            term: |k| ClosedSubgroup::TypeIII {
                alpha: ki(k),
                beta: qi(0),
                n: 1,
            },
        },
        ScriptedSequence {
            id: "d-basepoint",
            limit: ClosedSubgroup::trivial(),
            term: |k| ClosedSubgroup::TypeII { gamma: ki(k), n: 1 },
        },
        ScriptedSequence {
            id: "e-axis",
            limit: ClosedSubgroup::TypeI {
                alpha: ExtRational::Finite(qi(1)),
            },
            term: |k| ClosedSubgroup::TypeIII {
                alpha: qi(1),
                beta: q(1, 2),
                n: k,
            },
        },
        ScriptedSequence {
            id: "f-cyclic-level",
            limit: ClosedSubgroup::trivial(),
            term: |k| ClosedSubgroup::TypeII {
                gamma: q(1, 2),
                n: k,
            },
        },
    ]
}

/// Runs one named suite. `budget` is the number of random cases for the
/// sampled suites; convergence and winding have fixed case lists.
pub fn run_suite(name: &str, seed: u64, budget: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases = match name {
        "classification" => classification(&mut rng, budget)?,
        "metric" => metric(&mut rng, budget)?,
        "charts" => charts(&mut rng, budget)?,
        "convergence" => convergence()?,
        "winding" => winding()?,
        "equivalence" => equivalence(&mut rng, budget)?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(SuiteReport::new(name, seed, cases))
}

fn list(gens: &[PointRZ]) -> String {
    let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    format!("gen[{}]", parts.join(","))
}

fn classification(rng: &mut ChaCha8Rng, budget: usize) -> Result<Vec<CaseResult>> {
    let r = qi(5);
    (0..budget)
        .map(|i| {
            let gens = sample::generators(rng);
            let h = classify_from_generators(&gens);
            let ours = elements_in_ball(&h, &r)?;
            let oracle = oracle_closure_ball(&gens, &r, 8)?;
            Ok(CaseResult::new(
                format!("gens-{i}"),
                ours == oracle,
                format!("{} -> {h}", list(&gens)),
            )
            .with("points", ours.points.len())
            .with("oracle_points", oracle.points.len()))
        })
        .collect()
}

fn metric(rng: &mut ChaCha8Rng, budget: usize) -> Result<Vec<CaseResult>> {
    let tol = q(1, 1000);
    let mut cases = Vec::with_capacity(budget);
    for i in 0..budget {
        let h = sample::subgroup(rng, 10);
        let j = if rng.gen_bool(0.2) {
            h.clone()
        } else {
            sample::subgroup(rng, 10)
        };
        let k = sample::subgroup(rng, 10);
        let hj = chabauty_distance(&h, &j, &tol)?;
        let jh = chabauty_distance(&j, &h, &tol)?;
        let jk = chabauty_distance(&j, &k, &tol)?;
        let hk = chabauty_distance(&h, &k, &tol)?;
        let symmetric = hj == jh;
        let zero_iff_equal = hj.is_zero() == (h == j);
        let triangle = hk.lo <= &hj.hi + &jk.hi + &tol * qi(2);
        let mut chain: Vec<Rational> = (0..8).map(|_| q(rng.gen_range(1..=40), 20)).collect();
        chain.sort();
        let values: Vec<bool> = chain
            .iter()
            .map(|e| hausdorff_inclusion_ok(&h, &j, e))
            .collect();
        let monotone = values.windows(2).all(|w| !w[0] || w[1]);
        let pass = symmetric && zero_iff_equal && triangle && monotone;
        cases.push(
            CaseResult::new(format!("triple-{i}"), pass, format!("{h} {j} {k}"))
                .with("d_hj", &hj)
                .with("d_jk", &jk)
                .with("d_hk", &hk)
                .with("symmetric", symmetric)
                .with("zero_iff_equal", zero_iff_equal)
                .with("triangle", triangle)
                .with("monotone", monotone),
        );
    }
    Ok(cases)
}

fn chart_round_trip(h: &ClosedSubgroup, rng: &mut ChaCha8Rng) -> Result<bool> {
    Ok(match h {
        ClosedSubgroup::TypeI { .. } => chart_psi_i(chart_psi_i_inverse(h)?) == *h,
        ClosedSubgroup::TypeII { n, .. } => {
            let divisors: Vec<u64> = (1..=*n).filter(|d| n % d == 0).collect();
            let chart = divisors[rng.gen_range(0..divisors.len())];
            let p = chart_psi_ii_n_inverse(chart, h)?;
            let back = chart_psi_ii_n(chart, &p)?;
            back == *h && back.level_step() % chart == 0
        }
        ClosedSubgroup::TypeIII { n, .. } | ClosedSubgroup::TypeIV { n } => {
            let c = chart_psi_iii_n_inverse(h)?;
            let back = chart_psi_iii_n(*n, &c)?;
            back == *h && back.level_step() == *n
        }
    })
}

fn charts(rng: &mut ChaCha8Rng, budget: usize) -> Result<Vec<CaseResult>> {
    let mut cases = Vec::new();
    for i in 0..budget {
        let h = sample::subgroup(rng, 10);
        let m = subgroup_to_model(&h);
        let model_ok = model_to_subgroup(&m)? == h;
        let chart_ok = chart_round_trip(&h, rng)?;
        cases.push(
            CaseResult::new(
                format!("round-trip-{i}"),
                model_ok && chart_ok,
                format!("{h} <-> {m}"),
            )
            .with("model", model_ok)
            .with("chart", chart_ok),
        );
    }
    let groups = budget.div_ceil(10).max(1);
    for i in 0..groups {
        let mut us: Vec<Rational> = (0..16).map(|_| q(rng.gen_range(0..1000), 1000)).collect();
        us.sort();
        let coords = denjoy_xi_batch(&us, 32);
        let positions: Vec<_> = coords.iter().filter_map(|c| c.position()).collect();
        let monotone = positions.windows(2).all(|w| w[0] <= w[1]);
        cases.push(
            CaseResult::new(
                format!("denjoy-order-{i}"),
                monotone,
                "xi preserves the circular order",
            )
            .with("resolved", positions.len()),
        );
    }
    let length = total_length_bracket();
    let mut total = Rational::zero();
    let mut increasing = true;
    let mut bounded = true;
    for b in 1..=64u64 {
        let units = (0..b).filter(|a| a.gcd(&b) == 1).count() as i64;
        let next = &total + q(units, (b * b * b) as i64);
        increasing &= next > total;
        total = next;
        let tail = q(1, b as i64);
        bounded &=
            &total + Rational::one() <= length.hi && length.lo <= &total + Rational::one() + tail;
    }
    cases.push(
        CaseResult::new(
            "denjoy-measure",
            increasing && bounded,
            "truncated lengths increase toward L",
        )
        .with("sum_64", crate::rational::to_f64(&total)),
    );
    let mut nested = true;
    for s in [q(1, 2), q(2, 3), q(3, 7), q(11, 12)] {
        let brackets: Vec<_> = [32, 128, 512]
            .iter()
            .filter_map(|&d| psi_bracket(&s, d))
            .collect();
        nested &= brackets.len() == 3
            && brackets
                .windows(2)
                .all(|w| w[0].lo <= w[1].lo && w[1].hi <= w[0].hi);
    }
    cases.push(CaseResult::new(
        "denjoy-nesting",
        nested,
        "psi brackets nest as the depth grows",
    ));
    Ok(cases)
}

fn convergence() -> Result<Vec<CaseResult>> {
    let tol = convergence_tol();
    let threshold = convergence_threshold();
    let mut cases = Vec::new();
    for s in convergence_sequences() {
        let first_tail = CONVERGENCE_LAST_K - CONVERGENCE_TAIL + 1;
        let mut tail = Vec::new();
        for k in first_tail..=CONVERGENCE_LAST_K {
            tail.push(chabauty_distance(&s.term(k), &s.limit, &tol)?);
        }
        let last = tail.last().expect("nonempty tail");
        let reached = last.hi <= threshold;
        let settled = tail.windows(2).all(|w| w[1].hi <= &w[0].hi + &tol);
        let mut case = CaseResult::new(
            s.id,
            reached && settled,
            format!(
                "{} .. {} -> {}",
                s.term(1),
                s.term(CONVERGENCE_LAST_K),
                s.limit
            ),
        );
        for k in [8, 16, 32] {
            case = case.with(
                &format!("d{k}"),
                chabauty_distance(&s.term(k), &s.limit, &tol)?,
            );
        }
        cases.push(
            case.with(&format!("d{CONVERGENCE_LAST_K}"), last)
                .with("settled", settled),
        );
    }
    Ok(cases)
}

// Count of a in [0, b) with gcd(a, b) = 1.
fn totient_by_gcd(b: u64) -> u64 {
    (0..b).filter(|a| a.gcd(&b) == 1).count() as u64
}

fn winding() -> Result<Vec<CaseResult>> {
    let samples = WindingSamples::new(WINDING_GRID, WINDING_PREC)?;
    let mut cases = Vec::new();
    for k in 1..=WINDING_MAX {
        for m in 1..=WINDING_MAX {
            let expected = if m % k == 0 { totient_by_gcd(m / k) } else { 0 };
            let exact = winding_count(k, m);
            let mut case = CaseResult::new(format!("k{k}-m{m}"), exact == expected, "")
                .with("expected", expected)
                .with("exact", exact);
            if k <= WINDING_SAMPLED_MAX && m <= WINDING_SAMPLED_MAX {
                let sampled = winding_count_from_samples(&samples, k, m)?;
                case.pass &= sampled == expected;
                case = case.with("sampled", sampled);
            }
            case.detail = if m % k == 0 {
                format!("phi({})", m / k)
            } else {
                format!("{k} does not divide {m}")
            };
            cases.push(case);
        }
    }
    Ok(cases)
}

fn describe(p: &XPoint) -> String {
    let c = match &p.coord {
        XCoord::Cone { alpha, beta } => {
            format!("cone({alpha},{})", crate::rational::fmt_rational(beta))
        }
        XCoord::Rational { rational, t } => format!(
            "rational({},{})",
            crate::rational::fmt_rational(rational),
            crate::rational::fmt_rational(t)
        ),
        XCoord::Vertical => "vertical".to_string(),
    };
    format!("k={} {c}", p.k)
}

fn equivalence(rng: &mut ChaCha8Rng, budget: usize) -> Result<Vec<CaseResult>> {
    let mut cases = Vec::new();
    let example = (
        XPoint::new(
            1,
            XCoord::Rational {
                rational: q(1, 2),
                t: qi(1),
            },
        ),
        XPoint::new(
            2,
            XCoord::Rational {
                rational: qi(0),
                t: qi(2),
            },
        ),
    );
    let mut pairs = vec![example];
    for _ in 0..budget {
        let a = sample::x_point(rng);
        let b = if rng.gen_bool(0.5) {
            sample::equivalent_variant(rng, &a)
        } else {
            sample::x_point(rng)
        };
        pairs.push((a, b));
    }
    for (i, (a, b)) in pairs.iter().enumerate() {
        let related = check_equivalence(a, b)?;
        let equal = phi_image(a)? == phi_image(b)?;
        cases.push(
            CaseResult::new(
                format!("pair-{i}"),
                related == equal,
                format!("{} ~ {}", describe(a), describe(b)),
            )
            .with("related", related)
            .with("same_image", equal),
        );
    }
    for i in 0..budget {
        let p = sample::nonzero_point(rng);
        let neg = PointRZ::new(-p.x.clone(), -p.level);
        let eta_ok = eta_cyclic(&p.x, p.level)? == eta_cyclic(&neg.x, neg.level)?;
        let closure_ok =
            classify_from_generators(std::slice::from_ref(&p)) == classify_from_generators(&[neg]);
        cases.push(
            CaseResult::new(
                format!("involution-{i}"),
                eta_ok && closure_ok,
                format!("{p}"),
            )
            .with("eta", eta_ok)
            .with("closure", closure_ok),
        );
    }
    Ok(cases)
}
