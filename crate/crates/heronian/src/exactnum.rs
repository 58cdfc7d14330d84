//! Arbitrary-precision integers, reduced rationals, integer floor roots and
//! two-sided decimal enclosures of irrational roots.
//!
//! The enclosure produced by [`root_enclosure`] is the only oracle for "true"
//! root values anywhere in this crate; every other verdict is reached by
//! exact integer or rational comparison. No floating point appears in any
//! computation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Arbitrary-precision rational. Always reduced to lowest terms with a
/// strictly positive denominator; equality is value equality.
pub type Rational = BigRational;

/// Small integer constant.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Small rational constant. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(int(num), int(den))
}

/// Rational with the value of an integer.
pub fn rat_int(n: &Int) -> Rational {
    Rational::from(n.clone())
}

/// Checked exact rational from numerator and denominator.
pub fn try_ratio(num: Int, den: Int) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// Exact division; a zero divisor is a domain error rather than a panic.
pub fn try_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// `x^k` for a rational base and small non-negative exponent.
pub fn pow_r(x: &Rational, k: u32) -> Rational {
    x.pow(k as i32)
}

/// `x^k` for an integer base and small non-negative exponent.
pub fn pow_i(x: &Int, k: u32) -> Int {
    x.pow(k)
}

/// `10^digits`.
pub fn ten_pow(digits: u32) -> Int {
    int(10).pow(digits)
}

/// Largest `r >= 0` with `r^k <= x`.
///
/// Binary search on `[0, 2^(ceil(bits(x)/k)+1))`; the upper end exceeds the
/// root by construction, so the loop invariant `lo^k <= x < hi^k` holds
/// throughout. Panics if `x < 0` or `k == 0`.
pub fn floor_root(x: &Int, k: u32) -> Int {
    assert!(k >= 1, "floor_root: k must be >= 1");
    assert!(!x.is_negative(), "floor_root: x must be >= 0");
    if k == 1 || x.is_zero() || x.is_one() {
        return x.clone();
    }
    let shift = x.bits().div_ceil(u64::from(k)) + 1;
    let mut lo = Int::zero();
    let mut hi: Int = Int::one() << shift;
    while &hi - &lo > Int::one() {
        let mid: Int = (&lo + &hi) >> 1;
        if Pow::pow(&mid, k) <= *x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// `Some(r)` with `r^2 == x` when `x` is a perfect square.
pub fn perfect_sqrt(x: &Int) -> Option<Int> {
    if x.is_negative() {
        return None;
    }
    let r = floor_root(x, 2);
    if &r * &r == *x {
        Some(r)
    } else {
        None
    }
}

/// Two-sided rational enclosure `lo <= hi` with an explicit width bound.
///
/// For a root enclosure of `N^(1/k)` the endpoints additionally satisfy
/// `lo^k <= N <= hi^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
    pub width_bound: Rational,
}

impl Enclosure {
    /// Panics unless `lo <= hi` and `hi - lo <= width_bound`.
    pub fn new(lo: Rational, hi: Rational, width_bound: Rational) -> Self {
        assert!(lo <= hi, "enclosure endpoints out of order");
        assert!(&hi - &lo <= width_bound, "enclosure wider than its bound");
        Enclosure { lo, hi, width_bound }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat(2, 1)
    }
}

/// Deterministic decimal enclosure of `n^(1/k)`.
///
/// Both endpoints have denominator dividing `10^digits`; `lo` is the
/// truncation of the root to `digits` decimal places, `hi` is `lo` plus one
/// ulp unless the root is exactly representable, in which case `lo == hi`.
/// Increasing `digits` never widens the enclosure.
pub fn root_enclosure(n: &Rational, k: u32, digits: u32) -> Enclosure {
    assert!(n.is_positive(), "root_enclosure: n must be > 0");
    assert!(k >= 1, "root_enclosure: k must be >= 1");
    let t = ten_pow(digits);
    let scaled = (n.numer() * Pow::pow(&t, k)) / n.denom();
    let r = floor_root(&scaled, k);
    let lo = Rational::new(r.clone(), t.clone());
    if pow_r(&lo, k) == *n {
        Enclosure::new(lo.clone(), lo, Rational::zero())
    } else {
        let hi = Rational::new(r + Int::one(), t.clone());
        Enclosure::new(lo, hi, Rational::new(Int::one(), t))
    }
}

/// Truncated (toward zero) decimal rendering with exactly `digits`
/// fractional digits. The sign survives only when some rendered digit is
/// nonzero, so `-1/300` at 2 digits prints as `0.00`, not `-0.00`.
pub fn decimal_string(x: &Rational, digits: u32) -> String {
    let t = ten_pow(digits);
    let scaled: Int = (x.numer().abs() * &t) / x.denom();
    let whole = &scaled / &t;
    let frac = &scaled % &t;
    let mut s = String::new();
    if x.is_negative() && !scaled.is_zero() {
        s.push('-');
    }
    s.push_str(&whole.to_string());
    if digits > 0 {
        s.push('.');
        let fs = frac.to_string();
        for _ in fs.len()..digits as usize {
            s.push('0');
        }
        s.push_str(&fs);
    }
    s
}

/// Mixed-number rendering: `65/14` prints as `4 9/14`, integers print bare,
/// proper fractions keep the plain `p/q` form.
pub fn mixed_string(x: &Rational) -> String {
    if x.is_integer() {
        return x.numer().to_string();
    }
    let a = x.abs();
    let whole = a.trunc().to_integer();
    let frac = a.fract();
    let sign = if x.is_negative() { "-" } else { "" };
    if whole.is_zero() {
        format!("{sign}{}/{}", frac.numer(), frac.denom())
    } else {
        format!("{sign}{whole} {}/{}", frac.numer(), frac.denom())
    }
}
