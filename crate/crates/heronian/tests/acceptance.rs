//! Acceptance suite: one test per criterion, each printing a PASS line with
//! what was checked. Everything asserts exact rational equality or an exact
//! integer comparison; enclosures appear only where a width is the thing
//! being checked.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use heronian::bracket::bracket;
use heronian::certify::{
    certify_bound, compare_errors, smyly_scan, verify_error_identity, wave_samples, BoundKind,
};
use heronian::cli::{self, RunConfig};
use heronian::cuberoot::{
    cube_estimate, enestrom_deltas, enestrom_reconstruct, gradient_identities, heron_family,
    pendlebury_step, CubeMethod,
};
use heronian::exactnum::{int, pow_i, pow_r, rat, rat_int, Int, Rational};
use heronian::rescale::{rescaled_estimate, RescalePlan, RootMethod};
use heronian::segment::{
    choose_estimate, estimate_archimedean, estimate_traditional, true_area_enclosure,
    SegmentChoice, SegmentDims,
};
use heronian::squareroot::{cf_sqrt, heron_iterate, mellema, sqrt_estimate, SqrtMethod};

fn cube(n: i64, method: CubeMethod) -> (Rational, BoundKind) {
    let a = cube_estimate(&int(n), method, 6).unwrap();
    (a.value, a.bound)
}

fn sqrt(n: i64, method: SqrtMethod) -> (Rational, BoundKind) {
    let a = sqrt_estimate(&int(n), method).unwrap();
    (a.value, a.bound)
}

fn rescaled_cube(n: i64, s: i64) -> (Rational, BoundKind) {
    let r = rescaled_estimate(&RescalePlan {
        n: int(n),
        scale: int(s),
        method: RootMethod::Cube(CubeMethod::Heron),
        precision_digits: 6,
    })
    .unwrap();
    (r.value, r.bound)
}

fn rescaled_sqrt(n: i64, s: i64, method: SqrtMethod) -> (Rational, BoundKind) {
    let r = rescaled_estimate(&RescalePlan {
        n: int(n),
        scale: int(s),
        method: RootMethod::Sqrt(method),
        precision_digits: 6,
    })
    .unwrap();
    (r.value, r.bound)
}

fn mixed(whole: i64, num: i64, den: i64) -> Rational {
    rat(whole, 1) + rat(num, den)
}

fn one_step(n: i64, x0: Rational) -> Rational {
    heron_iterate(&rat(n, 1), &x0, 1).unwrap().remove(0)
}

#[test]
fn criterion_01_golden_fractions() {
    // cube estimates
    assert_eq!(cube(100, CubeMethod::Heron).0, mixed(4, 9, 14));
    assert_eq!(cube(85, CubeMethod::Heron).0, mixed(4, 21, 53));
    assert_eq!(cube(100, CubeMethod::ChordLower).0, mixed(4, 36, 61));
    assert_eq!(cube(85, CubeMethod::ChordLower).0, mixed(4, 21, 61));
    assert_eq!(cube(5, CubeMethod::Heron).0, mixed(1, 8, 11));
    assert_eq!(
        pendlebury_step(&int(5), &rat(1, 1), &rat(65, 14)).unwrap(),
        mixed(4, 351, 547)
    );

    // rescaled cube estimates
    assert_eq!(rescaled_cube(100, 2).0, mixed(4, 322, 502));
    assert_eq!(rescaled_cube(100, 3).0, mixed(4, 7328, 11421));
    assert_eq!(rescaled_cube(5, 2).0, mixed(1, 22, 31));
    assert_eq!(rescaled_cube(5, 3).0, mixed(1, 22, 31));
    assert_eq!(rescaled_cube(5, 4).0, mixed(1, 615, 866));

    // square-root values
    assert_eq!(sqrt(75, SqrtMethod::BinomialLow).0, mixed(8, 11, 16));
    assert_eq!(sqrt(75, SqrtMethod::BinomialHigh).0, mixed(8, 2, 3));
    assert_eq!(sqrt(63, SqrtMethod::BinomialHigh).0, mixed(7, 15, 16));
    assert_eq!(one_step(720, rat(27, 1)), mixed(26, 5, 6));
    assert_eq!(one_step(136, rat(12, 1)), mixed(11, 2, 3));
    assert_eq!(sqrt(136, SqrtMethod::BinomialHigh).0, mixed(11, 2, 3));
    assert_eq!(sqrt(135, SqrtMethod::BinomialHigh).0, mixed(11, 5, 8));
    assert_eq!(one_step(135, rat(35, 3)), mixed(11, 13, 21));
    assert_eq!(one_step(135, rat(93, 8)), mixed(11, 307, 496));
    assert_eq!(sqrt(28, SqrtMethod::BinomialLow).0, mixed(5, 3, 10));
    assert_eq!(sqrt(28, SqrtMethod::BinomialHigh).0, mixed(5, 1, 3));
    assert_eq!(
        rescaled_sqrt(28, 3, SqrtMethod::BinomialHigh).0,
        mixed(5, 7, 24)
    );
    assert_eq!(
        rescaled_sqrt(135, 3, SqrtMethod::BinomialHigh).0,
        mixed(11, 13, 21)
    );
    assert_eq!(
        rescaled_sqrt(63, 10, SqrtMethod::WeightedUpper).0,
        mixed(7, 1183, 1262)
    );
    assert_eq!(
        rescaled_sqrt(720, 10, SqrtMethod::WeightedUpper).0,
        mixed(26, 30002, 36023)
    );
    println!("[acceptance] criterion 1 PASS: all golden fractions match exactly");
}

#[test]
fn criterion_02_bound_certifications() {
    assert_eq!(cube(100, CubeMethod::Heron).1, BoundKind::Upper);
    assert_eq!(cube(85, CubeMethod::Heron).1, BoundKind::Lower);
    assert_eq!(cube(100, CubeMethod::ChordLower).1, BoundKind::Lower);
    assert_eq!(cube(85, CubeMethod::ChordLower).1, BoundKind::Lower);
    assert_eq!(cube(5, CubeMethod::Heron).1, BoundKind::Upper);
    assert!(pow_r(&mixed(1, 8, 11), 3) > rat(5153, 1000));

    assert_eq!(rescaled_cube(100, 2).1, BoundKind::Lower);
    assert_eq!(rescaled_cube(100, 3).1, BoundKind::Upper);
    assert_eq!(rescaled_cube(5, 2).1, BoundKind::Lower);
    assert!(pow_r(&rescaled_cube(5, 2).0, 3) > rat(4997, 1000));
    assert_eq!(rescaled_cube(5, 3).1, BoundKind::Lower);
    assert_eq!(rescaled_cube(5, 4).1, BoundKind::Upper);
    assert!(pow_r(&rescaled_cube(5, 4).0, 3) < rat(5002, 1000));

    for (value, bound) in [
        sqrt(75, SqrtMethod::BinomialLow),
        sqrt(75, SqrtMethod::BinomialHigh),
        sqrt(63, SqrtMethod::BinomialHigh),
        sqrt(135, SqrtMethod::BinomialHigh),
        sqrt(28, SqrtMethod::BinomialLow),
        sqrt(28, SqrtMethod::BinomialHigh),
        rescaled_sqrt(28, 3, SqrtMethod::BinomialHigh),
        rescaled_sqrt(135, 3, SqrtMethod::BinomialHigh),
        rescaled_sqrt(63, 10, SqrtMethod::WeightedUpper),
        rescaled_sqrt(720, 10, SqrtMethod::WeightedUpper),
    ] {
        assert_eq!(bound, BoundKind::Upper, "{value} should certify upper");
    }
    println!("[acceptance] criterion 2 PASS: every bound side certified by exact multiplication");
}

#[test]
fn criterion_03_coincidence_at_100() {
    let heron = cube(100, CubeMethod::Heron).0;
    assert_eq!(cube(100, CubeMethod::CurtzeSqrt).0, heron);
    assert_eq!(cube(100, CubeMethod::CurtzeLinear).0, heron);
    assert_eq!(heron, rat(65, 14));
    println!("[acceptance] criterion 3 PASS: all three formulas give 65/14 at N = 100");
}

#[test]
fn criterion_04_identity_suites() {
    let cases = 1000;
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };

    // a rational strictly inside (m, m+1)
    let interior = (1i64..=50).prop_flat_map(|m| {
        (2i64..1000).prop_flat_map(move |q| (Just(m), Just(q), 1..q))
    });

    // delta pair and both reconstruction forms
    let mut runner = TestRunner::new(config.clone());
    runner
        .run(&interior.clone(), |(m, q, p)| {
            let n = rat(m, 1) + rat(p, q);
            let d = enestrom_deltas(&n, &int(m)).unwrap();
            prop_assert_eq!(&d.delta1, &(rat(3, 1) * rat(m, 1) * &n * (&n - rat(m, 1))));
            prop_assert_eq!(
                &d.delta2,
                &(rat(3, 1) * rat(m + 1, 1) * &n * (rat(m + 1, 1) - &n))
            );
            prop_assert_eq!(enestrom_reconstruct(&n, &int(m)).unwrap(), n.clone());
            let additive = rat(m, 1)
                + rat(m + 1, 1) * &d.delta1 / (rat(m + 1, 1) * &d.delta1 + rat(m, 1) * &d.delta2);
            prop_assert_eq!(additive, n);
            Ok(())
        })
        .unwrap();

    // gradient identities
    let mut runner = TestRunner::new(config.clone());
    runner
        .run(&interior.clone(), |(m, q, p)| {
            let n = rat(m, 1) + rat(p, q);
            let g = gradient_identities(&n, &int(m)).unwrap();
            prop_assert_eq!(&g.gap, &(rat(2 * m + 1, 1) + &n));
            prop_assert_eq!(&g.counterpoised, &(pow_r(&n, 2) - rat(m * (m + 1), 1)));
            Ok(())
        })
        .unwrap();

    // exact error identity
    let mut runner = TestRunner::new(config.clone());
    runner
        .run(&interior, |(m, q, p)| {
            let n = rat(m, 1) + rat(p, q);
            let id = verify_error_identity(&n, &int(m)).unwrap();
            prop_assert_eq!(id.lhs, id.rhs);
            Ok(())
        })
        .unwrap();

    // the quadratic false-position formula recomputes q
    let small = || (-50i64..=50, 1i64..=20).prop_map(|(a, b)| rat(a, b));
    let mut runner = TestRunner::new(config);
    runner
        .run(&(small(), small(), small(), small()), |(p, q, a, b)| {
            prop_assume!(pow_r(&(&a + &p), 2) != pow_r(&(&b + &p), 2));
            prop_assert_eq!(mellema(&p, &q, &a, &b).unwrap(), q);
            Ok(())
        })
        .unwrap();

    println!(
        "[acceptance] criterion 4 PASS: delta, reconstruction, gradient, error and \
         false-position identities hold exactly on {cases} random rationals each"
    );
}

#[test]
fn criterion_05_error_bound_scan() {
    let report = smyly_scan(1, 50).unwrap();
    assert_eq!(report.cases, 132_600);
    // the 1/(12 m^2) bound held everywhere or smyly_scan would have erred;
    // the sharper 3/(80 m^2) constant is only reported
    let webb_ok = report.webb.iter().filter(|b| b.holds).count();
    println!(
        "[acceptance] criterion 5 PASS: 1/(12m^2) bound verified on {} integers \
         (m in 1..=50); 3/(80m^2) held on {}/{} bands",
        report.cases,
        webb_ok,
        report.webb.len()
    );
}

#[test]
fn criterion_06_classification_law() {
    let end = pow_i(&int(31), 3);
    let mut n = int(1);
    let mut checked = 0u64;
    while n < end {
        let appr = cube_estimate(&n, CubeMethod::Heron, 1).unwrap();
        let br = bracket(&n, 3).unwrap();
        if br.is_exact() {
            assert_eq!(appr.bound, BoundKind::Exact, "at N = {n}");
            assert_eq!(appr.value, rat_int(&br.m));
        } else {
            let pivot = pow_i(&br.m, 3) * pow_i(&(&br.m + Int::one()), 3);
            let expected = match (&n * &n).cmp(&pivot) {
                Ordering::Greater => BoundKind::Upper,
                Ordering::Less => BoundKind::Lower,
                Ordering::Equal => unreachable!(),
            };
            assert_eq!(appr.bound, expected, "at N = {n}");
        }
        checked += 1;
        n += 1;
    }
    println!(
        "[acceptance] criterion 6 PASS: error sign equals sign(N^2 - m^3(m+1)^3) \
         on {checked} integers (m <= 30), zero exactly at cubes"
    );
}

#[test]
fn criterion_07_example_family() {
    for m in 1..=100i64 {
        let f = heron_family(&int(m)).unwrap();
        let direct = cube_estimate(&f.n, CubeMethod::Heron, 1).unwrap();
        assert_eq!(f.heron, direct.value, "at m = {m}");
        assert!(f.heron < f.binomial_high, "at m = {m}");
        assert!(f.binomial_high < f.binomial_low, "at m = {m}");
        assert_eq!(f.binomial_high, rat(m, 1) + rat(2, 3));
    }
    println!(
        "[acceptance] criterion 7 PASS: family bound equals the general rule and \
         sits below m + 2/3 below the plain binomial bound, m in 1..=100"
    );
}

#[test]
fn criterion_08_domination() {
    let end = pow_i(&int(31), 3);
    let mut n = int(2);
    let mut lower_cases = 0u64;
    while n < end {
        let heron = cube_estimate(&n, CubeMethod::Heron, 1).unwrap();
        if heron.bound == BoundKind::Lower {
            let chord = cube_estimate(&n, CubeMethod::ChordLower, 1).unwrap();
            let br = bracket(&n, 3).unwrap();
            assert!(heron.value >= chord.value, "at N = {n}");
            if !br.d1.is_zero() && !br.d2.is_zero() {
                assert!(heron.value > chord.value, "strictness at N = {n}");
            }
            lower_cases += 1;
        }
        n += 1;
    }
    assert!(lower_cases > 0);
    println!(
        "[acceptance] criterion 8 PASS: on {lower_cases} lower-bound cases (m <= 30) \
         the mediant rule dominates the chord rule, strictly off perfect cubes"
    );
}

#[test]
fn criterion_09_continued_fractions() {
    let cf = cf_sqrt(&int(135), 8).unwrap();
    assert_eq!(cf.convergent(4), Some(&rat(35, 3)));
    assert_eq!(cf.convergent(6), Some(&rat(93, 8)));
    assert_eq!(cf.convergent(8), Some(&rat(244, 21)));
    println!(
        "[acceptance] criterion 9 PASS: convergents 4, 6, 8 of sqrt(135) are \
         35/3, 93/8, 244/21"
    );
}

#[test]
fn criterion_10_segment_estimates() {
    // exact tie on the crossover line
    let tie = SegmentDims::new(rat(3, 2), rat(9, 2)).unwrap();
    assert_eq!(estimate_archimedean(&tie), estimate_traditional(&tie));
    assert_eq!(choose_estimate(&tie).choice, SegmentChoice::Tie);

    // a 20 x 20 grid of valid segments: h = i/4, b/h = (10 + j)/5, so the
    // chord-to-sagitta ratio sweeps 2.2..6.0 crossing the b = 3h line
    let tol = rat(1, 1_000_000);
    for i in 1..=20i64 {
        for j in 1..=20i64 {
            let h = rat(i, 4);
            let b = &h * rat(10 + j, 5);
            let seg = SegmentDims::new(h, b).unwrap();
            let e = true_area_enclosure(&seg, 6);
            assert!(e.width() <= tol);
            assert!(
                estimate_archimedean(&seg) < e.lo,
                "four-thirds estimate at i={i}, j={j}"
            );
            assert!(
                estimate_traditional(&seg) < e.lo,
                "traditional estimate at i={i}, j={j}"
            );
        }
    }
    println!(
        "[acceptance] criterion 10 PASS: estimates tie exactly at b = 3h and stay \
         strictly below the 6-digit area oracle on the 20x20 grid"
    );
}

#[test]
fn criterion_11_wave_figure() {
    // the SVG the CLI emits
    let mut buf = Vec::new();
    let config = RunConfig {
        command: cli::Command::Wave {
            m_lo: 2,
            m_hi: 12,
            digits: 4,
            format: cli::WaveFormat::Svg,
            out: None,
        },
    };
    cli::run(config, &mut buf).unwrap();
    let svg = String::from_utf8(buf).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("polyline"));
    assert!(svg.trim_end().ends_with("</svg>"));

    // per-band sign change matches the classification crossover
    let samples = wave_samples(2, 12, 4).unwrap();
    for m in 2..=12i64 {
        let band: Vec<_> = samples.iter().filter(|s| s.m == int(m)).collect();
        let flip = band
            .windows(2)
            .find(|w| w[0].sign == -1 && w[1].sign == 1)
            .map(|w| w[1].n.clone())
            .expect("each band flips from lower to upper once");
        // the first N in the band with N^2 above m^3 (m+1)^3
        let pivot = pow_i(&int(m), 3) * pow_i(&int(m + 1), 3);
        let mut expected = pow_i(&int(m), 3) + Int::one();
        while &expected * &expected <= pivot {
            expected += 1;
        }
        assert_eq!(flip, expected, "crossover in band m = {m}");
        let flips = band
            .windows(2)
            .filter(|w| w[0].sign != 0 && w[1].sign != 0 && w[0].sign != w[1].sign)
            .count();
        assert_eq!(flips, 1, "band m = {m} must flip exactly once");
    }
    println!(
        "[acceptance] criterion 11 PASS: wave SVG emitted; each band m = 2..=12 \
         flips sign exactly where N^2 crosses m^3(m+1)^3"
    );
}

#[test]
fn criterion_12_averaging_iteration() {
    assert_eq!(one_step(720, rat(27, 1)), mixed(26, 5, 6));
    assert_eq!(one_step(135, rat(35, 3)), mixed(11, 13, 21));

    for (n, x0) in [
        (720i64, rat(27, 1)),
        (720, rat(5, 1)),
        (135, rat(35, 3)),
        (63, rat(8, 1)),
    ] {
        let steps = heron_iterate(&rat(n, 1), &x0, 6).unwrap();
        let mut prev: Option<Rational> = None;
        for x in &steps {
            let side = certify_bound(x, &rat(n, 1), 2).verdict;
            assert!(
                matches!(side, BoundKind::Upper | BoundKind::Exact),
                "iterate {x} of sqrt({n}) must not sink below the root"
            );
            if let Some(p) = &prev {
                assert!(x <= p, "iterates of sqrt({n}) must be non-increasing");
            }
            prev = Some(x.clone());
        }
    }
    println!(
        "[acceptance] criterion 12 PASS: averaging iteration reproduces 26 5/6 and \
         11 13/21, stays upper and non-increasing after step 1"
    );
}

#[test]
fn ledger_runs_clean() {
    let mut buf = Vec::new();
    let config = RunConfig {
        command: cli::Command::Verify,
    };
    cli::run(config, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert!(text.contains("0 failed"));
    assert!(!text.contains("FAIL"));
    // equidistant opposite-side comparisons are decided, not approximated
    assert_eq!(
        compare_errors(&rat(3, 2), &rat(5, 2), &int(8), 3),
        Ordering::Equal
    );
}
