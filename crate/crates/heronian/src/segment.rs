//! Circular-segment area estimates and the crossover rule between them,
//! with a rigorous rational enclosure of the true area as oracle.
//!
//! The oracle works from `theta = 4 arctan(2h/b)` (valid for segments less
//! than a semicircle) and `area = r^2 (theta - sin theta) / 2`, evaluating
//! both series with explicit rational remainder bounds. Since
//! `theta - sin theta` is increasing, endpoint evaluation of the enclosure
//! is sound.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{pow_r, rat, ten_pow, Enclosure, Int, Rational};

/// A circular segment given by sagitta `h` and chord `b`, restricted to
/// less than a semicircle: `0 < h < b/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentDims {
    h: Rational,
    b: Rational,
}

impl SegmentDims {
    pub fn new(h: Rational, b: Rational) -> Result<Self> {
        if !h.is_positive() || !b.is_positive() {
            return Err(Error::domain("h and b must be > 0"));
        }
        if &h * rat(2, 1) >= b {
            return Err(Error::domain("need h < b/2 (less than a semicircle)"));
        }
        Ok(SegmentDims { h, b })
    }

    pub fn sagitta(&self) -> &Rational {
        &self.h
    }

    pub fn chord(&self) -> &Rational {
        &self.b
    }

    /// Radius of the circumscribing circle, `(b^2 + 4h^2) / (8h)`.
    pub fn radius(&self) -> Rational {
        (pow_r(&self.b, 2) + rat(4, 1) * pow_r(&self.h, 2)) / (rat(8, 1) * &self.h)
    }
}

/// The four-thirds-triangle estimate `2hb/3`.
pub fn estimate_archimedean(seg: &SegmentDims) -> Rational {
    rat(2, 3) * &seg.h * &seg.b
}

/// The traditional estimate `h(b+h)/2`.
pub fn estimate_traditional(seg: &SegmentDims) -> Rational {
    &seg.h * (&seg.b + &seg.h) / rat(2, 1)
}

/// Which estimate the crossover rule picks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentChoice {
    Archimedean,
    Traditional,
    Tie,
}

impl SegmentChoice {
    pub fn label(&self) -> &'static str {
        match self {
            SegmentChoice::Archimedean => "archimedean",
            SegmentChoice::Traditional => "traditional",
            SegmentChoice::Tie => "tie",
        }
    }
}

/// Both estimates plus the exact choice: traditional below `b = 3h`,
/// the four-thirds rule above, a tie exactly on the crossover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentComparison {
    pub choice: SegmentChoice,
    pub archimedean: Rational,
    pub traditional: Rational,
}

pub fn choose_estimate(seg: &SegmentDims) -> SegmentComparison {
    let archimedean = estimate_archimedean(seg);
    let traditional = estimate_traditional(seg);
    let three_h = rat(3, 1) * &seg.h;
    let choice = match seg.b.cmp(&three_h) {
        std::cmp::Ordering::Greater => SegmentChoice::Archimedean,
        std::cmp::Ordering::Less => SegmentChoice::Traditional,
        std::cmp::Ordering::Equal => SegmentChoice::Tie,
    };
    // the rule picks whichever estimate is exactly larger
    debug_assert!(match choice {
        SegmentChoice::Archimedean => archimedean > traditional,
        SegmentChoice::Traditional => traditional > archimedean,
        SegmentChoice::Tie => archimedean == traditional,
    });
    SegmentComparison {
        choice,
        archimedean,
        traditional,
    }
}

/// Rigorous rational enclosure of the true segment area, width at most
/// `10^-digits`.
pub fn true_area_enclosure(seg: &SegmentDims, digits: u32) -> Enclosure {
    let r = seg.radius();
    let r2 = pow_r(&r, 2);
    let y = rat(2, 1) * &seg.h / &seg.b; // tan(theta/4), in (0, 1)
    let target = Rational::new(Int::one(), ten_pow(digits));

    // Work to a precision that comfortably beats the target, retrying
    // tighter if the assembled width still misses it.
    let mut guard = &target / (rat(64, 1) * (Rational::one() + &r2));
    loop {
        let (at_lo, at_hi) = arctan_enclosure(&y, &guard);
        let theta_lo = rat(4, 1) * at_lo;
        let theta_hi = rat(4, 1) * at_hi;
        // Round outward to a short denominator so the sine series below
        // works on small rationals.
        let t = ten_pow(digits + 6);
        let theta_lo = round_down(&theta_lo, &t);
        let theta_hi = round_up(&theta_hi, &t);

        let (_, sin_hi_at_lo) = sin_enclosure(&theta_lo, &guard);
        let (sin_lo_at_hi, _) = sin_enclosure(&theta_hi, &guard);
        let g_lo = &theta_lo - &sin_hi_at_lo;
        let g_hi = &theta_hi - &sin_lo_at_hi;
        let area_lo = &r2 * &g_lo / rat(2, 1);
        let area_hi = &r2 * &g_hi / rat(2, 1);
        if &area_hi - &area_lo <= target {
            return Enclosure::new(area_lo, area_hi, target);
        }
        guard /= rat(1000, 1);
    }
}

/// `arctan(y)` for `0 < y < 1` by the alternating series, truncated when
/// the next term drops below `eps`; that term bounds the remainder.
fn arctan_enclosure(y: &Rational, eps: &Rational) -> (Rational, Rational) {
    let y2 = pow_r(y, 2);
    let mut sum = Rational::zero();
    let mut y_pow = y.clone();
    let mut k = 0i64;
    let mut negate = false;
    loop {
        let term = &y_pow / rat(2 * k + 1, 1);
        if term <= *eps {
            return (&sum - &term, &sum + &term);
        }
        if negate {
            sum -= term;
        } else {
            sum += term;
        }
        negate = !negate;
        y_pow *= &y2;
        k += 1;
    }
}

/// `sin(x)` for `0 < x < pi` by the Taylor series, truncated at a term that
/// both is below `eps` and has entered the decreasing regime, so it bounds
/// the remainder.
fn sin_enclosure(x: &Rational, eps: &Rational) -> (Rational, Rational) {
    let x2 = pow_r(x, 2);
    let mut sum = Rational::zero();
    let mut x_pow = x.clone();
    let mut factorial = Rational::one();
    let mut k = 0i64;
    let mut negate = false;
    loop {
        let term = &x_pow / &factorial;
        if term <= *eps && x2 <= rat((2 * k + 2) * (2 * k + 3), 1) {
            return (&sum - &term, &sum + &term);
        }
        if negate {
            sum -= term;
        } else {
            sum += term;
        }
        negate = !negate;
        x_pow *= &x2;
        factorial *= rat((2 * k + 2) * (2 * k + 3), 1);
        k += 1;
    }
}

/// Largest multiple of `1/t` at or below `x`.
fn round_down(x: &Rational, t: &Int) -> Rational {
    Rational::new((x.numer() * t).div_floor(x.denom()), t.clone())
}

/// Smallest multiple of `1/t` at or above `x`.
fn round_up(x: &Rational, t: &Int) -> Rational {
    Rational::new((x.numer() * t).div_ceil(x.denom()), t.clone())
}
