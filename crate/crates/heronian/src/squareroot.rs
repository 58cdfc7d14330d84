//! Square-root bounds, the averaging iteration, the quadratic
//! false-position formula, and continued-fraction convergents of surds.

use num_traits::{One, Signed, Zero};

use crate::bracket::bracket;
use crate::certify::{certify_bound, Approximation, BoundKind};
use crate::error::{Error, Result};
use crate::exactnum::{floor_root, pow_r, rat, rat_int, Int, Rational};

/// The closed-form square-root estimates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqrtMethod {
    /// `m + d1 / (2m+1)` — the chord (double-false-position) lower bound.
    ChordLower,
    /// `m + (m+1)d1 / ((m+1)d1 + m d2)` — the weighted-mediant upper bound.
    WeightedUpper,
    /// `m + d1 / (2m)` — binomial upper bound from below.
    BinomialLow,
    /// `m+1 - d2 / (2(m+1))` — binomial upper bound from above.
    BinomialHigh,
}

impl SqrtMethod {
    pub fn name(&self) -> &'static str {
        match self {
            SqrtMethod::ChordLower => "chord-lower",
            SqrtMethod::WeightedUpper => "weighted-upper",
            SqrtMethod::BinomialLow => "binomial-low",
            SqrtMethod::BinomialHigh => "binomial-high",
        }
    }

    pub const ALL: [SqrtMethod; 4] = [
        SqrtMethod::ChordLower,
        SqrtMethod::WeightedUpper,
        SqrtMethod::BinomialLow,
        SqrtMethod::BinomialHigh,
    ];

    pub fn parse(name: &str) -> Option<SqrtMethod> {
        SqrtMethod::ALL.iter().copied().find(|m| m.name() == name)
    }
}

/// Evaluate one square-root estimate at `n >= 1`; the bound side is
/// certified by squaring. Perfect squares short-circuit to `m` exactly.
/// No range restriction is imposed on `d1`, `d2`: the formulas are total.
pub fn sqrt_estimate(n: &Int, method: SqrtMethod) -> Result<Approximation> {
    let br = bracket(n, 2)?;
    let name = method.name();
    if br.is_exact() {
        return Ok(Approximation {
            method: name,
            value: rat_int(&br.m),
            bound: BoundKind::Exact,
        });
    }
    let m = rat_int(&br.m);
    let m1 = &m + Rational::one();
    let d1 = rat_int(&br.d1);
    let d2 = rat_int(&br.d2);
    let two = rat(2, 1);
    let value = match method {
        SqrtMethod::ChordLower => &m + &d1 / (&two * &m + Rational::one()),
        SqrtMethod::WeightedUpper => &m + &m1 * &d1 / (&m1 * &d1 + &m * &d2),
        SqrtMethod::BinomialLow => &m + &d1 / (&two * &m),
        SqrtMethod::BinomialHigh => &m1 - &d2 / (&two * &m1),
    };
    let cert = certify_bound(&value, &rat_int(n), 2);
    Ok(Approximation {
        method: name,
        value,
        bound: cert.verdict,
    })
}

/// The averaging iteration `x <- (n/x + x) / 2` for the square root of a
/// positive rational `n`, started from a positive `x0`.
///
/// Returns the iterates `x1..=x_steps`. From the first step onward every
/// iterate is at or above the root (arithmetic mean over geometric mean)
/// and the sequence is non-increasing.
pub fn heron_iterate(n: &Rational, x0: &Rational, steps: u32) -> Result<Vec<Rational>> {
    if !n.is_positive() {
        return Err(Error::domain("n must be > 0"));
    }
    if !x0.is_positive() {
        return Err(Error::domain("x0 must be > 0"));
    }
    let two = rat(2, 1);
    let mut out = Vec::with_capacity(steps as usize);
    let mut x = x0.clone();
    for _ in 0..steps {
        x = (n / &x + &x) / &two;
        out.push(x.clone());
    }
    Ok(out)
}

/// Continued-fraction expansion of `sqrt(n)` for non-square `n`, with its
/// convergents.
///
/// Convergents are 1-indexed with convergent 1 equal to `a0/1`; under this
/// convention they alternate strictly below and above the root, starting
/// below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfExpansion {
    pub n: Int,
    pub terms: Vec<Int>,
    pub convergents: Vec<Rational>,
}

impl CfExpansion {
    /// 1-indexed convergent accessor.
    pub fn convergent(&self, i: usize) -> Option<&Rational> {
        if i == 0 {
            return None;
        }
        self.convergents.get(i - 1)
    }
}

/// Expand `sqrt(n)` to `count` terms by the standard quadratic-surd
/// recurrence and accumulate the convergents. Perfect squares are rejected.
pub fn cf_sqrt(n: &Int, count: u32) -> Result<CfExpansion> {
    if *n < Int::one() {
        return Err(Error::domain("n must be >= 1"));
    }
    if count < 1 {
        return Err(Error::domain("count must be >= 1"));
    }
    let a0 = floor_root(n, 2);
    if &a0 * &a0 == *n {
        return Err(Error::domain(format!("{n} is a perfect square")));
    }
    let mut terms = Vec::with_capacity(count as usize);
    let mut convergents = Vec::with_capacity(count as usize);

    // surd state: sqrt(n) = (sqrt(n) + m_i) / q_i after i steps
    let mut m_i = Int::zero();
    let mut q_i = Int::one();
    let mut a_i = a0.clone();

    // convergent recurrence h_i = a_i h_{i-1} + h_{i-2}, same for k
    let mut h_prev = Int::one();
    let mut h_prev2 = Int::zero();
    let mut k_prev = Int::zero();
    let mut k_prev2 = Int::one();

    for _ in 0..count {
        terms.push(a_i.clone());
        let h = &a_i * &h_prev + &h_prev2;
        let k = &a_i * &k_prev + &k_prev2;
        convergents.push(Rational::new(h.clone(), k.clone()));
        h_prev2 = std::mem::replace(&mut h_prev, h);
        k_prev2 = std::mem::replace(&mut k_prev, k);

        m_i = &q_i * &a_i - &m_i;
        q_i = (n - &m_i * &m_i) / &q_i;
        a_i = (&a0 + &m_i) / &q_i;
    }
    Ok(CfExpansion {
        n: n.clone(),
        terms,
        convergents,
    })
}

/// The quadratic false-position formula: for `f(x) = (x+p)^2 - q` and any
/// two points with `f(a) != f(b)`, the expression
/// `((a+p)^2 f(b) - (b+p)^2 f(a)) / (f(b) - f(a))` just recomputes `q`.
pub fn mellema(p: &Rational, q: &Rational, a: &Rational, b: &Rational) -> Result<Rational> {
    let f = |x: &Rational| pow_r(&(x + p), 2) - q;
    let fa = f(a);
    let fb = f(b);
    if fa == fb {
        return Err(Error::domain("degenerate input: f(a) = f(b)"));
    }
    Ok((pow_r(&(a + p), 2) * &fb - pow_r(&(b + p), 2) * &fa) / (&fb - &fa))
}
