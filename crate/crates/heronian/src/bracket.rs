//! Bracket an integer between consecutive k-th powers.
//!
//! Every estimate in this crate starts from the same data: the floor root
//! `m`, the gap `d1` up from `m^k` and the gap `d2` down from `(m+1)^k`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{floor_root, pow_i, Int};

/// An integer `n` located between consecutive `k`-th powers:
/// `m^k <= n < (m+1)^k`, with `d1 = n - m^k` and `d2 = (m+1)^k - n`.
///
/// Perfect powers are admitted and always come out with `d1 = 0`, never
/// `d2 = 0`, so downstream formulas can short-circuit to `m` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerBracket {
    pub degree: u32,
    pub n: Int,
    pub m: Int,
    pub d1: Int,
    pub d2: Int,
}

impl PowerBracket {
    /// True when `n` is exactly `m^degree`.
    pub fn is_exact(&self) -> bool {
        self.d1.is_zero()
    }

    /// `d1 + d2 = (m+1)^k - m^k`; for cubes this is `3m^2 + 3m + 1`.
    pub fn gap(&self) -> Int {
        &self.d1 + &self.d2
    }
}

/// Bracket `n >= 1` between consecutive powers of degree `k` (2 or 3).
pub fn bracket(n: &Int, k: u32) -> Result<PowerBracket> {
    if k != 2 && k != 3 {
        return Err(Error::domain(format!("degree must be 2 or 3, got {k}")));
    }
    if *n < Int::one() {
        return Err(Error::domain(format!("n must be >= 1, got {n}")));
    }
    let m = floor_root(n, k);
    let d1 = n - pow_i(&m, k);
    let d2 = pow_i(&(&m + Int::one()), k) - n;
    Ok(PowerBracket {
        degree: k,
        n: n.clone(),
        m,
        d1,
        d2,
    })
}
