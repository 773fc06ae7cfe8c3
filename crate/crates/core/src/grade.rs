//! Exact membership grades: rationals confined to the unit interval.
//!
//! Every comparison in the workbench is exact, so grades are stored as
//! reduced `i64` ratios rather than floats. Decimal text such as `0.3`
//! parses to `3/10` exactly.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

/// A rational in `[0, 1]`, kept in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade(Ratio<i64>);

impl Grade {
    pub fn zero() -> Grade {
        Grade(Ratio::zero())
    }

    pub fn one() -> Grade {
        Grade(Ratio::one())
    }

    /// Builds `numer/denom`, rejecting values outside the unit interval.
    pub fn new(numer: u32, denom: u32) -> Result<Grade, GradeError> {
        if denom == 0 {
            return Err(GradeError::ZeroDenominator);
        }
        if numer > denom {
            return Err(GradeError::AboveOne {
                numer: numer as u64,
                denom: denom as u64,
            });
        }
        Ok(Grade(Ratio::new(numer as i64, denom as i64)))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Exact check of the IFS admissibility constraint `self + other <= 1`.
    pub fn sum_at_most_one(&self, other: &Grade) -> bool {
        self.0 + other.0 <= Ratio::one()
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GradeError {
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("{numer}/{denom} exceeds 1")]
    AboveOne { numer: u64, denom: u64 },
    #[error("cannot parse grade from {text:?}")]
    Unparseable { text: String },
}

impl FromStr for Grade {
    type Err = GradeError;

    /// Accepts `p/q` or a finite decimal literal (`0.3`, `1`, `.25`).
    fn from_str(s: &str) -> Result<Grade, GradeError> {
        let s = s.trim();
        let unparseable = || GradeError::Unparseable { text: s.into() };
        if let Some((p, q)) = s.split_once('/') {
            let numer: u32 = p.trim().parse().map_err(|_| unparseable())?;
            let denom: u32 = q.trim().parse().map_err(|_| unparseable())?;
            return Grade::new(numer, denom);
        }
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(unparseable());
        }
        let int: u64 = if int_part.is_empty() {
            0
        } else {
            int_part.parse().map_err(|_| unparseable())?
        };
        if frac_part.len() > 12 {
            return Err(unparseable());
        }
        let scale = 10u64.pow(frac_part.len() as u32);
        let frac: u64 = if frac_part.is_empty() {
            0
        } else {
            frac_part.parse().map_err(|_| unparseable())?
        };
        let numer = int
            .checked_mul(scale)
            .and_then(|v| v.checked_add(frac))
            .ok_or_else(unparseable)?;
        if numer > scale {
            return Err(GradeError::AboveOne {
                numer,
                denom: scale,
            });
        }
        Ok(Grade(Ratio::new(numer as i64, scale as i64)))
    }
}
