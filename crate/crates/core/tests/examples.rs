use chabauty_core::charts::{
    psi_bracket, total_length_bracket, winding_count_from_samples, DenjoyCoord, WindingSamples,
};
use chabauty_core::rational::{q, qi, to_f64};
use chabauty_core::verify::sample;
use chabauty_core::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn i(alpha: Rational) -> ClosedSubgroup {
    ClosedSubgroup::TypeI {
        alpha: ExtRational::Finite(alpha),
    }
}

fn pt(x: Rational, level: i64) -> PointRZ {
    PointRZ::new(x, level)
}

#[test]
fn canonical_parameters() {
    let raw = RawSubgroup::III {
        alpha: Some(q(1, 2)),
        beta: q(7, 3),
        n: 4,
    };
    assert_eq!(
        canonicalize_params(raw).unwrap(),
        ClosedSubgroup::TypeIII {
            alpha: q(1, 2),
            beta: q(1, 3),
            n: 4
        }
    );
    let raw = RawSubgroup::II {
        gamma: q(3, 2),
        n: -2,
    };
    assert_eq!(
        canonicalize_params(raw).unwrap(),
        ClosedSubgroup::TypeII {
            gamma: q(-3, 2),
            n: 2
        }
    );
    let raw = RawSubgroup::III {
        alpha: Some(qi(0)),
        beta: qi(0),
        n: 1,
    };
    assert!(matches!(
        canonicalize_params(raw),
        Err(Error::InvalidParameter(_))
    ));
}

// Integer combinations a·g + b·h with |a|, |b| <= c inside B(0, r).
fn brute_pair_upto(g: &PointRZ, h: &PointRZ, r: &Rational, c: i64) -> Vec<PointRZ> {
    let mut out = Vec::new();
    for b in -c..=c {
        for a in -c..=c {
            let level = g.level * a + h.level * b;
            if Rational::from_integer(level.abs().into()) > *r {
                continue;
            }
            let p = pt(&g.x * qi(a) + &h.x * qi(b), level);
            if p.norm() <= *r {
                out.push(p);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn brute_pair(g: &PointRZ, h: &PointRZ, r: &Rational) -> Vec<PointRZ> {
    brute_pair_upto(g, h, r, 40)
}

#[test]
fn classification_examples() {
    let h = classify_from_generators(&[pt(q(1, 2), 0), pt(q(1, 3), 0)]);
    assert_eq!(h, i(qi(6)));
    let listed: Vec<PointRZ> = elements_in_ball(&h, &qi(5))
        .unwrap()
        .points
        .into_iter()
        .collect();
    assert_eq!(listed, brute_pair(&pt(q(1, 2), 0), &pt(q(1, 3), 0), &qi(5)));

    assert_eq!(
        classify_from_generators(&[pt(q(3, 2), 2)]),
        ClosedSubgroup::TypeII {
            gamma: q(3, 2),
            n: 2
        }
    );

    let gens = [pt(q(1, 2), 2), pt(q(1, 3), 3)];
    let h = classify_from_generators(&gens);
    assert_eq!(
        h,
        ClosedSubgroup::TypeIII {
            alpha: q(6, 5),
            beta: q(4, 5),
            n: 1
        }
    );
    let listed: Vec<PointRZ> = elements_in_ball(&h, &qi(3))
        .unwrap()
        .points
        .into_iter()
        .collect();
    assert_eq!(listed, brute_pair(&gens[0], &gens[1], &qi(3)));
    assert_eq!(
        listed,
        brute_pair(&pt(q(5, 6), 0), &pt(q(-1, 6), 1), &qi(3))
    );

    assert_eq!(classify_from_generators(&[]), ClosedSubgroup::trivial());
}

#[test]
fn membership_examples() {
    let h = ClosedSubgroup::TypeIII {
        alpha: q(6, 5),
        beta: q(4, 5),
        n: 1,
    };
    assert!(membership(&h, &pt(q(5, 2), 0)));
    assert!(membership(&ClosedSubgroup::TypeIV { n: 1 }, &pt(qi(0), 1)));
    assert!(!membership(
        &ClosedSubgroup::TypeII { gamma: qi(1), n: 1 },
        &pt(q(1, 2), 1)
    ));
}

#[test]
fn ball_examples() {
    let b = elements_in_ball(
        &ClosedSubgroup::TypeII {
            gamma: q(3, 2),
            n: 2,
        },
        &qi(4),
    )
    .unwrap();
    let expected: Vec<PointRZ> = (-2..=2).map(|k| pt(q(3 * k, 2), 2 * k)).collect();
    assert_eq!(b.points.into_iter().collect::<Vec<_>>(), expected);
    let b = elements_in_ball(&ClosedSubgroup::trivial(), &qi(10)).unwrap();
    assert_eq!(
        b.points.into_iter().collect::<Vec<_>>(),
        vec![PointRZ::origin()]
    );
    let b = elements_in_ball(&ClosedSubgroup::TypeIV { n: 2 }, &qi(3)).unwrap();
    let strips: Vec<(i64, Rational)> = b
        .strips
        .into_iter()
        .map(|s| (s.level, s.half_width))
        .collect();
    assert_eq!(strips, vec![(-2, qi(3)), (0, qi(3)), (2, qi(3))]);
}

#[test]
fn point_distance_examples() {
    assert_eq!(
        distance_point_to_subgroup(&pt(q(1, 2), 0), &i(qi(1))),
        q(1, 2)
    );
    let h = ClosedSubgroup::TypeIII {
        alpha: q(6, 5),
        beta: q(4, 5),
        n: 1,
    };
    assert_eq!(distance_point_to_subgroup(&PointRZ::origin(), &h), qi(0));
    assert_eq!(
        distance_point_to_subgroup(&pt(q(7, 3), 1), &ClosedSubgroup::TypeIV { n: 1 }),
        qi(0)
    );
}

// Minimum distance over brute-force combinations of a basis (x0, 0), (x1, n);
// the search radius 2|p| + 1 bounds the coefficients.
fn brute_distance(p: &PointRZ, g: &PointRZ, h: &PointRZ) -> Rational {
    let r = p.norm() * qi(2) + qi(1);
    let c = ((&r + &r * h.x.abs()) / g.x.abs() + &r)
        .ceil()
        .to_integer()
        .to_i64()
        .unwrap()
        + 1;
    brute_pair_upto(g, h, &r, c)
        .iter()
        .map(|e| p.dist(e))
        .min()
        .unwrap()
}

#[test]
fn point_distance_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let alpha = q(rng.gen_range(1..=6), rng.gen_range(1..=6));
        let beta = q(rng.gen_range(0..5), 5);
        let n = rng.gen_range(1..=3);
        let h = ClosedSubgroup::TypeIII {
            alpha: alpha.clone(),
            beta: beta.clone(),
            n,
        };
        let (g1, g2) = (pt(alpha.recip(), 0), pt(&beta / &alpha, n as i64));
        let p = pt(
            q(rng.gen_range(-12..=12), rng.gen_range(1..=7)),
            rng.gen_range(-5..=5),
        );
        assert_eq!(
            distance_point_to_subgroup(&p, &h),
            brute_distance(&p, &g1, &g2),
            "{p} {h}"
        );
    }
}

#[test]
fn inclusion_examples() {
    let h = ClosedSubgroup::TypeIII {
        alpha: q(6, 5),
        beta: q(4, 5),
        n: 1,
    };
    assert!(hausdorff_inclusion_ok(&h, &h, &q(1, 7)));
    assert!(!hausdorff_inclusion_ok(&i(qi(2)), &i(qi(1)), &q(1, 2)));
    assert!(hausdorff_inclusion_ok(&i(qi(2)), &i(qi(1)), &q(3, 4)));
}

// The one-sided predicate evaluated straight from the definition for two
// discrete groups given by bases.
fn brute_inclusion(h: (&PointRZ, &PointRZ), h2: (&PointRZ, &PointRZ), eps: &Rational) -> bool {
    let r = eps.recip();
    brute_pair(h.0, h.1, &r)
        .iter()
        .all(|p| brute_distance(p, h2.0, h2.1) < *eps)
}

#[test]
fn inclusion_matches_definition_on_lattices() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..25 {
        let mut lattice = || {
            let alpha = q(rng.gen_range(1..=3), rng.gen_range(1..=3));
            let beta = q(rng.gen_range(0..3), 3);
            let n = rng.gen_range(1..=2);
            let h = ClosedSubgroup::TypeIII {
                alpha: alpha.clone(),
                beta: beta.clone(),
                n,
            };
            (h, pt(alpha.recip(), 0), pt(&beta / &alpha, n as i64))
        };
        let (h, a1, a2) = lattice();
        let (h2, b1, b2) = lattice();
        for e in [q(1, 4), q(1, 3), q(1, 2), q(2, 3), qi(1)] {
            assert_eq!(
                hausdorff_inclusion_ok(&h, &h2, &e),
                brute_inclusion((&a1, &a2), (&b1, &b2), &e),
                "{h} {h2} {e}"
            );
        }
    }
}

#[test]
fn distance_examples() {
    let tol = q(1, 1000);
    let h = ClosedSubgroup::TypeII {
        gamma: q(3, 2),
        n: 2,
    };
    assert_eq!(
        chabauty_distance(&h, &h, &q(1, 100)).unwrap(),
        DistanceBracket::zero()
    );
    let line = ClosedSubgroup::TypeI {
        alpha: ExtRational::Infinity,
    };
    let all = ClosedSubgroup::TypeIV { n: 1 };
    assert!(chabauty_distance(&line, &all, &tol)
        .unwrap()
        .contains(&qi(1)));
    assert!(chabauty_distance(&i(qi(1)), &i(qi(2)), &tol)
        .unwrap()
        .contains(&q(1, 2)));
    assert_eq!(
        chabauty_distance(&h, &all, &qi(0)),
        Err(Error::ToleranceInvalid)
    );
}

#[test]
fn limit_examples() {
    let h = ClosedSubgroup::TypeIII {
        alpha: q(6, 5),
        beta: q(4, 5),
        n: 1,
    };
    let r = verify_limit(&[h.clone(), h.clone(), h.clone()], &h, &q(1, 100), 3).unwrap();
    assert!(r.pass && r.distances.iter().all(|d| d.is_zero()));

    let seq: Vec<ClosedSubgroup> = (1..=32)
        .map(|k| ClosedSubgroup::TypeIII {
            alpha: qi(k),
            beta: qi(0),
            n: 1,
        })
        .collect();
    assert!(
        verify_limit(&seq, &ClosedSubgroup::TypeIV { n: 1 }, &q(1, 10), 4)
            .unwrap()
            .pass
    );

    let seq: Vec<ClosedSubgroup> = (1..=32)
        .map(|k| ClosedSubgroup::TypeII { gamma: qi(k), n: 1 })
        .collect();
    assert!(
        verify_limit(&seq, &ClosedSubgroup::trivial(), &q(1, 10), 4)
            .unwrap()
            .pass
    );
}

#[test]
fn eta_examples() {
    let (g, h) = eta_cyclic(&q(-1, 2), -3).unwrap();
    assert_eq!(g, pt(q(1, 2), 3));
    assert_eq!(
        h,
        ClosedSubgroup::TypeII {
            gamma: q(1, 2),
            n: 3
        }
    );
    let (g, h) = eta_cyclic(&q(2, 3), 0).unwrap();
    assert_eq!(g, pt(q(2, 3), 0));
    assert_eq!(h, i(q(3, 2)));
    assert_eq!(eta_cyclic(&qi(0), 0), Err(Error::ZeroPoint));
}

#[test]
fn chart_examples() {
    assert_eq!(chart_psi_i(ExtRational::zero()), ClosedSubgroup::trivial());
    assert!(chart_psi_i(ExtRational::Infinity).is_non_discrete());
    assert_eq!(
        chart_psi_i(ExtRational::Finite(qi(6))),
        classify_from_generators(&[pt(q(1, 2), 0), pt(q(1, 3), 0)])
    );

    let p = EarringPoint::OnCircle {
        circle: 2,
        t: q(3, 4),
    };
    assert_eq!(
        chart_psi_ii_n(1, &p).unwrap(),
        ClosedSubgroup::TypeII {
            gamma: q(3, 2),
            n: 2
        }
    );
    let p = EarringPoint::OnCircle {
        circle: 2,
        t: qi(0),
    };
    assert_eq!(
        chart_psi_ii_n(3, &p).unwrap(),
        ClosedSubgroup::TypeII { gamma: qi(0), n: 6 }
    );
    assert_eq!(
        chart_psi_ii_n(5, &EarringPoint::Basepoint).unwrap(),
        ClosedSubgroup::trivial()
    );

    let c = ConePoint::new(2, ExtRational::Finite(q(1, 2)), q(1, 3));
    let h = chart_psi_iii_n(2, &c).unwrap();
    assert_eq!(
        h,
        ClosedSubgroup::TypeIII {
            alpha: q(1, 2),
            beta: q(1, 3),
            n: 2
        }
    );
    assert_eq!(chart_psi_iii_n_inverse(&h).unwrap(), c);
    let apex = ConePoint::new(2, ExtRational::Infinity, qi(0));
    assert_eq!(
        chart_psi_iii_n(2, &apex).unwrap(),
        ClosedSubgroup::TypeIV { n: 2 }
    );
}

#[test]
fn model_examples() {
    let h = ClosedSubgroup::TypeII {
        gamma: q(3, 2),
        n: 2,
    };
    let m = ModelPoint::Earring {
        point: EarringPoint::OnCircle {
            circle: 2,
            t: q(3, 4),
        },
    };
    assert_eq!(subgroup_to_model(&h), m);
    assert_eq!(model_to_subgroup(&m).unwrap(), h);
    assert_eq!(
        subgroup_to_model(&i(qi(5))),
        ModelPoint::Segment {
            alpha: ExtRational::Finite(qi(5))
        }
    );
    assert_eq!(
        subgroup_to_model(&ClosedSubgroup::TypeIV { n: 3 }),
        ModelPoint::ConeInterior {
            k: 3,
            alpha: ExtRational::Infinity,
            beta: qi(0)
        }
    );
    assert!(matches!(
        model_to_subgroup(&ModelPoint::Segment {
            alpha: ExtRational::zero()
        }),
        Err(Error::NonCanonicalModelPoint(_))
    ));
    let base = ModelPoint::Earring {
        point: EarringPoint::Basepoint,
    };
    assert_eq!(model_to_subgroup(&base).unwrap(), ClosedSubgroup::trivial());
}

#[test]
fn gluing_composes_with_the_earring_chart() {
    for (a, b) in [(1, 2), (1, 3), (2, 5), (0, 1)] {
        for k in 1..=4u64 {
            let coord = DenjoyCoord::Interval {
                rational: q(a, b),
                lambda: q(1, 3),
            };
            let EarringPoint::OnCircle { circle, t } = glue_boundary(k, &coord).unwrap() else {
                panic!("interior lambda glues onto a circle");
            };
            assert_eq!(circle, k * b as u64);
            let image = chart_psi_ii_n(
                k,
                &EarringPoint::OnCircle {
                    circle: b as u64,
                    t: t.clone(),
                },
            )
            .unwrap();
            assert_eq!(
                image,
                ClosedSubgroup::TypeII {
                    gamma: qi(b) * &t,
                    n: b as u64 * k
                }
            );
        }
    }
}

// Σ φ(b)/b³ for b <= n, by gcd counting.
fn truncated_measure(n: u64) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, b| {
        let units = (0..b).filter(|a| a.gcd(&b) == 1).count() as i64;
        acc + q(units, (b * b * b) as i64)
    })
}

// Ψ(a/b) summed straight from its definition over denominators up to n; the
// omitted terms add at most Σ_{f>n} f/f³ < 1/n.
fn psi_direct(a: i64, b: i64, n: i64) -> Rational {
    let s = q(a, b);
    let mut acc = s.clone();
    for f in 1..=n {
        for p in 0..f {
            if p.gcd(&f) == 1 && q(p, f) < s {
                acc += q(1, f * f * f);
            }
        }
    }
    acc
}

#[test]
fn denjoy_length_and_psi_against_direct_sums() {
    let length = total_length_bracket();
    let lower = truncated_measure(300) + qi(1);
    assert!(lower < length.lo && length.hi < &lower + q(1, 300));

    for (a, b) in [(1, 2), (1, 3), (2, 5), (5, 7)] {
        let direct = psi_direct(a, b, 200);
        let bracket = psi_bracket(&q(a, b), 4096).unwrap();
        assert!(
            direct < bracket.hi && bracket.lo < &direct + q(1, 200),
            "{a}/{b}"
        );
        assert!(bracket.hi - bracket.lo < q(1, 1_000_000));
    }
}

#[test]
fn denjoy_examples() {
    assert_eq!(
        denjoy_xi(&qi(0), 64),
        DenjoyCoord::Interval {
            rational: qi(0),
            lambda: qi(0)
        }
    );

    let psi = psi_bracket(&q(1, 2), 1 << 14).unwrap();
    let length = total_length_bracket();
    let u = (psi.midpoint() + q(1, 16)) / length.midpoint();
    assert_eq!(
        denjoy_xi(&u, 64),
        DenjoyCoord::Interval {
            rational: q(1, 2),
            lambda: q(1, 2)
        }
    );

    let us: Vec<Rational> = (0..200).map(|j| q(j, 200)).collect();
    let coords = chabauty_core::charts::denjoy_xi_batch(&us, 24);
    let positions: Vec<_> = coords.iter().filter_map(|c| c.position()).collect();
    // I_0 alone takes 1/L of the circle, the other segments about a quarter of the rest
    assert!(
        positions.len() > 100 && positions.len() < 150,
        "{}",
        positions.len()
    );
    assert!(positions.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(coords[0], denjoy_xi(&us[0], 24));
}

#[test]
fn denjoy_interval_lengths_match_the_weights() {
    // the share of the grid landing in I_{a/b} approximates 1/(b³ L)
    let grid = 20_000i64;
    let us: Vec<Rational> = (0..grid).map(|j| q(j, grid)).collect();
    let coords = chabauty_core::charts::denjoy_xi_batch(&us, 8);
    let l = to_f64(&total_length_bracket().lo);
    for b in 1..=4i64 {
        let hits = coords
            .iter()
            .filter(|c| matches!(c, DenjoyCoord::Interval { rational, .. } if rational.denom() == &BigInt::from(b) && !rational.is_zero() || (b == 1 && rational.is_zero())))
            .count() as f64;
        let units = (0..b).filter(|a| a.gcd(&b) == 1).count() as f64;
        let expected = units / (b * b * b) as f64 / l * grid as f64;
        assert!(
            (hits - expected).abs() <= units * 2.0,
            "b={b} hits={hits} expected={expected}"
        );
    }
}

#[test]
fn glue_examples() {
    let mid = DenjoyCoord::Interval {
        rational: q(1, 2),
        lambda: q(1, 2),
    };
    assert_eq!(
        glue_boundary(1, &mid).unwrap(),
        EarringPoint::OnCircle {
            circle: 2,
            t: qi(0)
        }
    );
    assert_eq!(
        glue_boundary(3, &DenjoyCoord::IrrationalPoint).unwrap(),
        EarringPoint::Basepoint
    );
    assert_eq!(glue_boundary(0, &mid).unwrap(), EarringPoint::Basepoint);
}

#[test]
fn winding_examples() {
    assert_eq!(winding_count(2, 6), 2);
    assert_eq!(winding_count(2, 5), 0);
    assert_eq!(winding_count(1, 1), 1);
    let samples = WindingSamples::new(4096, 64).unwrap();
    assert_eq!(winding_count_from_samples(&samples, 1, 2).unwrap(), 1);
    assert_eq!(winding_count_from_samples(&samples, 2, 6).unwrap(), 2);
    assert_eq!(winding_count_sampled(3, 4, 512, 32).unwrap(), 0);
}

#[test]
fn oracle_examples() {
    let b = oracle_closure_ball(&[pt(q(1, 2), 0), pt(q(1, 3), 0)], &qi(1), 8).unwrap();
    let expected: Vec<PointRZ> = (-6..=6).map(|k| pt(q(k, 6), 0)).collect();
    assert_eq!(b.points.into_iter().collect::<Vec<_>>(), expected);
    let b = oracle_closure_ball(&[], &qi(5), 3).unwrap();
    assert_eq!(b.points.len(), 1);
    let h = ClosedSubgroup::TypeII {
        gamma: q(3, 2),
        n: 2,
    };
    assert_eq!(
        oracle_closure_ball(&[pt(q(3, 2), 2)], &qi(4), 8).unwrap(),
        elements_in_ball(&h, &qi(4)).unwrap()
    );
}

#[test]
fn equivalence_examples() {
    let rat = |a, b, t| XCoord::Rational {
        rational: q(a, b),
        t,
    };
    let p = XPoint::new(1, rat(1, 2, qi(1)));
    assert!(check_equivalence(&p, &XPoint::new(2, rat(0, 1, qi(2)))).unwrap());
    assert!(!check_equivalence(&p, &XPoint::new(2, rat(1, 2, qi(1)))).unwrap());
    let axis = XPoint::new(
        0,
        XCoord::Cone {
            alpha: ExtRational::Finite(qi(3)),
            beta: qi(0),
        },
    );
    assert!(check_equivalence(&axis, &axis).unwrap());
}

#[test]
fn equivalence_agrees_with_images_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let a = sample::x_point(&mut rng);
        let b = if rng.gen_bool(0.5) {
            sample::equivalent_variant(&mut rng, &a)
        } else {
            sample::x_point(&mut rng)
        };
        let same = chabauty_core::verify::phi_image(&a).unwrap()
            == chabauty_core::verify::phi_image(&b).unwrap();
        assert_eq!(check_equivalence(&a, &b).unwrap(), same, "{a:?} {b:?}");
    }
}

#[test]
fn suite_examples() {
    let w = run_suite("winding", 1, 10).unwrap();
    assert!(w.pass);
    assert_eq!(w.cases.len(), 144);
    assert!(run_suite("metric", 7, 100).unwrap().pass);
    for name in ["classification", "charts", "equivalence"] {
        let r = run_suite(name, 3, 40).unwrap();
        assert!(r.pass, "{r}");
        assert_eq!(r, run_suite(name, 3, 40).unwrap());
    }
    assert_eq!(
        run_suite("homology", 1, 1),
        Err(Error::UnknownSuite("homology".into()))
    );
}

#[test]
fn json_report_has_the_documented_fields() {
    let r = run_suite("equivalence", 2, 5).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    let obj = v.as_object().unwrap();
    let mut keys: Vec<&str> = obj.keys().map(|k| k.as_str()).collect();
    keys.sort();
    assert_eq!(keys, ["cases", "pass", "seed", "suite"]);
    assert_eq!(v["seed"].as_u64(), Some(2));
    for c in v["cases"].as_array().unwrap() {
        let mut keys: Vec<&str> = c.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        keys.sort();
        assert_eq!(keys, ["detail", "id", "pass"]);
    }
}

#[test]
fn convergence_suite_reports_each_sequence() {
    let r = run_suite("convergence", 0, 0).unwrap();
    let verdicts: Vec<(&str, bool)> = r.cases.iter().map(|c| (c.id.as_str(), c.pass)).collect();
    assert_eq!(
        verdicts,
        [
            ("a-rational-angle", false),
            ("b-vertical", false),
            ("c-apex", true),
            ("d-basepoint", true),
            ("e-axis", true),
            ("f-cyclic-level", true),
        ]
    );
}

#[test]
fn slow_sequences_converge_at_rate_inverse_sqrt_k() {
    use chabauty_core::verify::convergence_sequences;
    let tol = q(1, 100);
    for s in convergence_sequences().into_iter().take(2) {
        let d64 = chabauty_distance(&s.term(64), &s.limit, &tol).unwrap();
        let d256 = chabauty_distance(&s.term(256), &s.limit, &tol).unwrap();
        // the lattice at k has covolume k, hence a nonzero point of norm <= √k
        assert!(d64.hi >= q(1, 8), "{} {d64}", s.id);
        assert!(d256.hi <= q(1, 10), "{} {d256}", s.id);
    }
    // exact value for the rational-angle sequence: level 2j sits at x = 2j/k
    let s = &convergence_sequences()[0];
    let d = chabauty_distance(&s.term(64), &s.limit, &q(1, 1000)).unwrap();
    assert!(d.contains(&q(1, 8)));
}
