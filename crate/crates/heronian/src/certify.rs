//! Exact bound certification and error comparison.
//!
//! A bound claim is settled the only way this crate allows: raise the
//! candidate to the k-th power and compare with the target. Decimal output
//! is presentation; every verdict in this module is an integer comparison.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed};

use crate::bracket::bracket;
use crate::cuberoot::{cube_estimate, CubeMethod};
use crate::error::{Error, Result};
use crate::exactnum::{
    decimal_string, int, mixed_string, pow_i, pow_r, rat, rat_int, root_enclosure, Int, Rational,
};
use crate::squareroot::{sqrt_estimate, SqrtMethod};

/// Which side of the true root a certified value sits on.
///
/// `Enclosed` is reserved for formula values that are themselves irrational
/// (the square-root-of-`d2` rule at non-square `d2`): the two endpoints are
/// the formula evaluated at a rational enclosure of that square root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundKind {
    Exact,
    Upper,
    Lower,
    Enclosed { lo: Rational, hi: Rational },
}

impl BoundKind {
    /// Lower-case tag for machine-readable output.
    pub fn label(&self) -> &'static str {
        match self {
            BoundKind::Exact => "exact",
            BoundKind::Upper => "upper",
            BoundKind::Lower => "lower",
            BoundKind::Enclosed { .. } => "enclosed",
        }
    }

    /// Signed side: +1 above the root, -1 below, 0 exact or undecided.
    pub fn sign(&self) -> i8 {
        match self {
            BoundKind::Upper => 1,
            BoundKind::Lower => -1,
            _ => 0,
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Exact => write!(f, "EXACT"),
            BoundKind::Upper => write!(f, "UPPER"),
            BoundKind::Lower => write!(f, "LOWER"),
            BoundKind::Enclosed { lo, hi } => write!(f, "ENCLOSED[{lo}, {hi}]"),
        }
    }
}

/// A method tag, its exact rational estimate and the certified bound kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Approximation {
    pub method: &'static str,
    pub value: Rational,
    pub bound: BoundKind,
}

/// Proof-by-multiplication record: `value_power = value^degree` compared
/// exactly against `n` yields the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub value: Rational,
    pub n: Rational,
    pub degree: u32,
    pub value_power: Rational,
    pub verdict: BoundKind,
}

/// Certify on which side of `n^(1/k)` a positive rational sits, by raising
/// it to the k-th power. Never consults enclosures.
pub fn certify_bound(value: &Rational, n: &Rational, k: u32) -> Certificate {
    assert!(value.is_positive(), "certify_bound: value must be > 0");
    assert!(n.is_positive(), "certify_bound: n must be > 0");
    assert!(k >= 2, "certify_bound: k must be >= 2");
    let value_power = pow_r(value, k);
    let verdict = match value_power.cmp(n) {
        Ordering::Equal => BoundKind::Exact,
        Ordering::Greater => BoundKind::Upper,
        Ordering::Less => BoundKind::Lower,
    };
    Certificate {
        value: value.clone(),
        n: n.clone(),
        degree: k,
        value_power,
        verdict,
    }
}

/// Decide `|a - n^(1/k)|` versus `|b - n^(1/k)|` exactly.
///
/// Same-side candidates compare directly; opposite sides reduce to the exact
/// midpoint test `((a+b)/2)^k` against `n`. `Less` means `a` is closer,
/// `Greater` that it is farther, `Equal` that the two are equidistant.
pub fn compare_errors(a: &Rational, b: &Rational, n: &Int, k: u32) -> Ordering {
    let nr = rat_int(n);
    let sa = certify_bound(a, &nr, k).verdict;
    let sb = certify_bound(b, &nr, k).verdict;
    match (sa, sb) {
        (BoundKind::Exact, BoundKind::Exact) => Ordering::Equal,
        (BoundKind::Exact, _) => Ordering::Less,
        (_, BoundKind::Exact) => Ordering::Greater,
        (BoundKind::Upper, BoundKind::Upper) => a.cmp(b),
        (BoundKind::Lower, BoundKind::Lower) => b.cmp(a),
        (BoundKind::Upper, BoundKind::Lower) => {
            let mid = (a + b) / rat(2, 1);
            pow_r(&mid, k).cmp(&nr)
        }
        (BoundKind::Lower, BoundKind::Upper) => {
            let mid = (a + b) / rat(2, 1);
            pow_r(&mid, k).cmp(&nr).reverse()
        }
        _ => unreachable!("certify_bound never yields an enclosed verdict"),
    }
}

/// Both sides of the exact error identity for the weighted-mediant cube rule
/// at a rational cube `n^3`: the signed error equals
/// `(n^2 - m(m+1)) (n-m) (m+1-n) / ((m+1) d1 + m d2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorIdentity {
    pub estimate: Rational,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Evaluate both routes to the signed error at `N = n^3` and check they
/// agree exactly. Requires `m < n < m+1` with `m >= 1`.
pub fn verify_error_identity(n: &Rational, m: &Int) -> Result<ErrorIdentity> {
    if *m < Int::one() {
        return Err(Error::domain("m must be >= 1"));
    }
    let mr = rat_int(m);
    let m1 = &mr + Rational::one();
    if !(*n > mr && *n < m1) {
        return Err(Error::domain(format!("n must satisfy {m} < n < {}", m + 1)));
    }
    let big_n = pow_r(n, 3);
    let d1 = &big_n - pow_r(&mr, 3);
    let d2 = pow_r(&m1, 3) - &big_n;
    let den = &m1 * &d1 + &mr * &d2;
    let estimate = (pow_r(&m1, 2) * &d1 + pow_r(&mr, 2) * &d2) / &den;
    let lhs = &estimate - n;
    let rhs = (pow_r(n, 2) - &mr * &m1) * (n - &mr) * (&m1 - n) / &den;
    if lhs != rhs {
        return Err(Error::BoundViolation(format!(
            "error identity mismatch at n = {n}, m = {m}: {lhs} vs {rhs}"
        )));
    }
    Ok(ErrorIdentity { estimate, lhs, rhs })
}

/// Per-band tally of the reported (not asserted) sharper error constant
/// `3/(80 m^2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WebbBand {
    pub m: u64,
    pub holds: bool,
    pub violations: u64,
    pub first_witness: Option<Int>,
}

/// Result of the exhaustive error-bound scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmylyReport {
    pub m_lo: u64,
    pub m_hi: u64,
    pub cases: u64,
    pub webb: Vec<WebbBand>,
}

/// Exhaustively verify `|heron(N) - N^(1/3)| < 1/(12 m^2)` for every integer
/// `N` strictly between `m^3` and `(m+1)^3`, for every `m` in range.
///
/// The check is the exact cube comparison
/// `(12 m^2 p - q)^3 < N (12 m^2 q)^3 < (12 m^2 p + q)^3` with `p/q` the
/// estimate in lowest-structure form. Any violation is a hard failure
/// carrying the witness `N`. The `3/(80 m^2)` constant is tallied per band
/// but never enforced.
pub fn smyly_scan(m_lo: u64, m_hi: u64) -> Result<SmylyReport> {
    if m_lo < 1 || m_lo > m_hi {
        return Err(Error::domain("need 1 <= m_lo <= m_hi"));
    }
    let mut cases = 0u64;
    let mut webb = Vec::new();
    for m in m_lo..=m_hi {
        let mi = int(m as i64);
        let m1 = &mi + Int::one();
        let cube0 = pow_i(&mi, 3);
        let gap = 3 * (&mi * &mi) + 3 * &mi + 1;
        let smyly_den: Int = 12 * (&mi * &mi);
        let webb_den: Int = 80 * (&mi * &mi);
        let webb_num = int(3);
        let mut band = WebbBand {
            m,
            holds: true,
            violations: 0,
            first_witness: None,
        };
        let mut d1 = Int::one();
        while d1 < gap {
            let d2 = &gap - &d1;
            let n = &cube0 + &d1;
            let q = &m1 * &d1 + &mi * &d2;
            let p = &mi * &q + &m1 * &d1;
            if !power_window(&n, &p, &q, &smyly_den, &Int::one()) {
                return Err(Error::BoundViolation(format!(
                    "1/(12 m^2) bound fails at N = {n} (m = {m})"
                )));
            }
            if !power_window(&n, &p, &q, &webb_den, &webb_num) {
                band.holds = false;
                band.violations += 1;
                if band.first_witness.is_none() {
                    band.first_witness = Some(n.clone());
                }
            }
            cases += 1;
            d1 += 1;
        }
        webb.push(band);
    }
    Ok(SmylyReport {
        m_lo,
        m_hi,
        cases,
        webb,
    })
}

/// `(den*p - num*q)^3 < N (den*q)^3 < (den*p + num*q)^3`, i.e. the estimate
/// `p/q` is within `num/den` of the cube root of `N`.
fn power_window(n: &Int, p: &Int, q: &Int, den: &Int, num: &Int) -> bool {
    let center = den * p;
    let radius = num * q;
    let scale = pow_i(&(den * q), 3);
    let target = n * scale;
    pow_i(&(&center - &radius), 3) < target && target < pow_i(&(&center + &radius), 3)
}

/// One sampled point of the signed-error wave of the weighted-mediant cube
/// rule: the exact estimate, a decimal enclosure of the signed error, and
/// the exactly certified error sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorSample {
    pub n: Int,
    pub m: Int,
    pub method: &'static str,
    pub value: Rational,
    pub err_lo: Rational,
    pub err_hi: Rational,
    pub err_lo_dec: String,
    pub err_hi_dec: String,
    pub sign: i8,
}

/// One sample per integer `N` in the bands `m_lo..=m_hi` (perfect cubes
/// included, with error exactly zero). The certified sign of each non-cube
/// sample is checked against the classification `sign(N^2 - m^3 (m+1)^3)`;
/// disagreement is a hard failure.
pub fn wave_samples(m_lo: u64, m_hi: u64, digits: u32) -> Result<Vec<ErrorSample>> {
    if m_lo < 1 || m_lo > m_hi {
        return Err(Error::domain("need 1 <= m_lo <= m_hi"));
    }
    let mut samples = Vec::new();
    for m in m_lo..=m_hi {
        let mi = int(m as i64);
        let cube0 = pow_i(&mi, 3);
        let cube1 = pow_i(&(&mi + Int::one()), 3);
        let class_pivot = &cube0 * &cube1; // m^3 (m+1)^3
        let mut n = cube0.clone();
        while n < cube1 {
            let appr = cube_estimate(&n, CubeMethod::Heron, digits)?;
            let sign = appr.bound.sign();
            if !matches!(appr.bound, BoundKind::Exact) {
                let class = (&n * &n).cmp(&class_pivot);
                let expected = match class {
                    Ordering::Greater => 1,
                    Ordering::Less => -1,
                    Ordering::Equal => 0,
                };
                if sign != expected {
                    return Err(Error::BoundViolation(format!(
                        "error sign at N = {n} disagrees with N^2 vs m^3(m+1)^3"
                    )));
                }
            }
            let enc = root_enclosure(&rat_int(&n), 3, digits);
            let err_lo = &appr.value - &enc.hi;
            let err_hi = &appr.value - &enc.lo;
            samples.push(ErrorSample {
                n: n.clone(),
                m: mi.clone(),
                method: appr.method,
                value: appr.value,
                err_lo_dec: decimal_string(&err_lo, digits),
                err_hi_dec: decimal_string(&err_hi, digits),
                err_lo,
                err_hi,
                sign,
            });
            n += 1;
        }
    }
    Ok(samples)
}

/// One method's row in a comparison table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodRow {
    pub method: &'static str,
    pub value: Rational,
    pub mixed: String,
    pub bound: BoundKind,
    pub err_lo: Rational,
    pub err_hi: Rational,
    pub err_lo_dec: String,
    pub err_hi_dec: String,
}

/// Every applicable method at one `N`, ordered by true closeness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodTable {
    pub n: Int,
    pub degree: u32,
    pub m: Int,
    pub digits: u32,
    pub rows: Vec<MethodRow>,
}

/// Evaluate every method applicable at degree `k`, certify each bound, and
/// order rows by `|error|` via [`compare_errors`] (ties broken by method
/// name). Enclosed values are represented by their midpoint for ordering.
pub fn method_table(n: &Int, k: u32, digits: u32) -> Result<MethodTable> {
    if *n < int(2) {
        return Err(Error::domain("method table needs n >= 2"));
    }
    let br = bracket(n, k)?;
    let approximations: Vec<Approximation> = match k {
        3 => CubeMethod::ALL
            .iter()
            .map(|meth| cube_estimate(n, *meth, digits))
            .collect::<Result<_>>()?,
        2 => SqrtMethod::ALL
            .iter()
            .map(|meth| sqrt_estimate(n, *meth))
            .collect::<Result<_>>()?,
        _ => return Err(Error::domain("degree must be 2 or 3")),
    };
    let enc = root_enclosure(&rat_int(n), k, digits);
    let mut rows: Vec<MethodRow> = approximations
        .into_iter()
        .map(|a| {
            let (v_lo, v_hi) = match &a.bound {
                BoundKind::Enclosed { lo, hi } => (lo.clone(), hi.clone()),
                _ => (a.value.clone(), a.value.clone()),
            };
            let err_lo = &v_lo - &enc.hi;
            let err_hi = &v_hi - &enc.lo;
            MethodRow {
                method: a.method,
                mixed: mixed_string(&a.value),
                value: a.value,
                bound: a.bound,
                err_lo_dec: decimal_string(&err_lo, digits),
                err_hi_dec: decimal_string(&err_hi, digits),
                err_lo,
                err_hi,
            }
        })
        .collect();
    rows.sort_by(|x, y| {
        compare_errors(&x.value, &y.value, n, k).then_with(|| x.method.cmp(y.method))
    });
    Ok(MethodTable {
        n: n.clone(),
        degree: k,
        m: br.m,
        digits,
        rows,
    })
}
