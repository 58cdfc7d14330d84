//! Rescaling: estimate the k-th root of `N` as the estimate for `s^k N`
//! divided by `s`. The divided-down bound keeps its side, and the accuracy
//! gain comes from the method improving at larger arguments.

use num_traits::{One, Zero};

use crate::certify::{certify_bound, Approximation, BoundKind};
use crate::cuberoot::{cube_estimate, CubeMethod};
use crate::error::{Error, Result};
use crate::exactnum::{pow_i, rat_int, Int, Rational};
use crate::squareroot::{sqrt_estimate, SqrtMethod};

/// A root-estimation method of either degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootMethod {
    Cube(CubeMethod),
    Sqrt(SqrtMethod),
}

impl RootMethod {
    pub fn degree(&self) -> u32 {
        match self {
            RootMethod::Cube(_) => 3,
            RootMethod::Sqrt(_) => 2,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            RootMethod::Cube(m) => m.name(),
            RootMethod::Sqrt(m) => m.name(),
        }
    }
}

/// What to rescale: the target `n`, the integer scale `s >= 1` and the
/// method to run at `s^k n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RescalePlan {
    pub n: Int,
    pub scale: Int,
    pub method: RootMethod,
    /// Only consulted by the square-root-of-`d2` cube method.
    pub precision_digits: u32,
}

/// Mixed-number parts `whole num/den` of the divided-down estimate kept in
/// the raw form `den = s * (inner fractional denominator)`, the way such
/// results were traditionally written before reducing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedParts {
    pub whole: Int,
    pub num: Int,
    pub den: Int,
}

impl std::fmt::Display for MixedParts {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.num.is_zero() {
            write!(f, "{}", self.whole)
        } else {
            write!(f, "{} {}/{}", self.whole, self.num, self.den)
        }
    }
}

/// A rescaled estimate: the inner approximation at `s^k n`, the divided-down
/// value, its independently re-certified bound side, and the raw mixed
/// rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RescaledEstimate {
    pub plan: RescalePlan,
    pub inner_n: Int,
    pub inner: Approximation,
    pub value: Rational,
    pub bound: BoundKind,
    pub unreduced: MixedParts,
}

/// Run the plan: estimate at `s^k n`, divide by `s`, re-certify.
///
/// Dividing an upper (lower) bound of the root of `s^k n` by `s` gives an
/// upper (lower) bound of the root of `n`, so the re-certified side always
/// matches the inner side; both are reported.
pub fn rescaled_estimate(plan: &RescalePlan) -> Result<RescaledEstimate> {
    if plan.n < Int::one() {
        return Err(Error::domain("n must be >= 1"));
    }
    if plan.scale < Int::one() {
        return Err(Error::domain("scale must be >= 1"));
    }
    let k = plan.method.degree();
    let inner_n = pow_i(&plan.scale, k) * &plan.n;
    let inner = match plan.method {
        RootMethod::Cube(m) => cube_estimate(&inner_n, m, plan.precision_digits)?,
        RootMethod::Sqrt(m) => sqrt_estimate(&inner_n, m)?,
    };
    let s = rat_int(&plan.scale);
    let (value, bound) = match &inner.bound {
        BoundKind::Enclosed { lo, hi } => {
            let lo = lo / &s;
            let hi = hi / &s;
            ((&lo + &hi) / rat_int(&Int::from(2)), BoundKind::Enclosed { lo, hi })
        }
        _ => {
            let value = &inner.value / &s;
            let cert = certify_bound(&value, &rat_int(&plan.n), k);
            (value, cert.verdict)
        }
    };
    let unreduced = raw_mixed(&inner.value, &plan.scale);
    Ok(RescaledEstimate {
        plan: plan.clone(),
        inner_n,
        inner,
        value,
        bound,
        unreduced,
    })
}

/// Divide the mixed number `w + p/q` (reduced inner estimate) by `s`,
/// keeping the denominator `s*q`: `(w q + p) = whole * s q + num`.
fn raw_mixed(inner_value: &Rational, scale: &Int) -> MixedParts {
    let whole_part = inner_value.trunc().to_integer();
    let frac = inner_value.fract();
    let q = frac.denom().clone();
    let total = &whole_part * &q + frac.numer();
    let den = scale * &q;
    let whole = &total / &den;
    let num = &total - &whole * &den;
    MixedParts { whole, num, den }
}
