//! Binary floating point with a caller-chosen mantissa width.
//!
//! Only the handful of operations the double-sum kernels need are provided:
//! multiplication, scaling by a ratio of small integers, addition and
//! conversion to `f64`. Every operation truncates the mantissa back to the
//! working precision `prec`, so each one carries a relative error below
//! `2^(1 - prec)`. The exponent is an `i64`, so intermediate values never
//! overflow or underflow in practice.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

/// `mant * 2^exp`, with `|mant| < 2^prec` after every operation.
#[derive(Clone, Debug)]
pub(crate) struct BigFloat {
    mant: BigInt,
    exp: i64,
}

impl BigFloat {
    pub(crate) fn zero() -> Self {
        BigFloat {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub(crate) fn one() -> Self {
        BigFloat {
            mant: BigInt::from(1u8),
            exp: 0,
        }
    }

    /// Exact conversion; `x` must be finite.
    pub(crate) fn from_f64(x: f64) -> Self {
        debug_assert!(x.is_finite());
        if x == 0.0 {
            return Self::zero();
        }
        let bits = x.to_bits();
        let negative = bits >> 63 != 0;
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let fraction = bits & ((1u64 << 52) - 1);
        let (mantissa, exp) = if biased == 0 {
            (fraction, -1074)
        } else {
            (fraction | (1u64 << 52), biased - 1075)
        };
        let mant = BigInt::from(mantissa);
        BigFloat {
            mant: if negative { -mant } else { mant },
            exp,
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    /// `floor(log2 |self|)`, or `None` for zero.
    pub(crate) fn log2_floor(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + self.mant.bits() as i64 - 1)
        }
    }

    fn normalize(&mut self, prec: u64) {
        let bits = self.mant.bits();
        if bits == 0 {
            self.exp = 0;
        } else if bits > prec {
            let shift = bits - prec;
            self.mant >>= shift;
            self.exp += shift as i64;
        }
    }

    pub(crate) fn mul_assign(&mut self, rhs: &BigFloat, prec: u64) {
        if self.is_zero() {
            return;
        }
        self.mant *= &rhs.mant;
        self.exp += rhs.exp;
        self.normalize(prec);
    }

    /// Multiplies by `num / den` with a single rounding.
    pub(crate) fn mul_ratio(&mut self, num: u64, den: u64, prec: u64) {
        debug_assert!(den != 0);
        if self.is_zero() {
            return;
        }
        self.mant *= num;
        self.mant <<= 64u32;
        self.exp -= 64;
        self.mant /= den;
        self.normalize(prec);
    }

    pub(crate) fn add_assign(&mut self, rhs: &BigFloat, prec: u64) {
        let Some(top_rhs) = rhs.log2_floor() else {
            return;
        };
        let Some(top_self) = self.log2_floor() else {
            *self = rhs.clone();
            self.normalize(prec);
            return;
        };
        let guard = prec as i64 + 2;
        if top_self - top_rhs > guard {
            return;
        }
        if top_rhs - top_self > guard {
            *self = rhs.clone();
            self.normalize(prec);
            return;
        }
        match self.exp.cmp(&rhs.exp) {
            Ordering::Greater => {
                self.mant <<= (self.exp - rhs.exp) as u64;
                self.exp = rhs.exp;
                self.mant += &rhs.mant;
            }
            Ordering::Equal => self.mant += &rhs.mant,
            Ordering::Less => {
                let aligned = &rhs.mant << ((rhs.exp - self.exp) as u64);
                self.mant += aligned;
            }
        }
        self.normalize(prec);
    }

    /// Rounds to the nearest `f64`; values beyond the `f64` range become
    /// infinite.
    pub(crate) fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let magnitude = self.mant.magnitude();
        let bits = magnitude.bits();
        let (top, exp) = if bits > 64 {
            let shift = bits - 64;
            let mut top = (magnitude >> shift).to_u64().unwrap_or(u64::MAX);
            // sticky bit keeps the final rounding to 53 bits correct
            if magnitude.trailing_zeros().unwrap_or(0) < shift {
                top |= 1;
            }
            (top, self.exp + shift as i64)
        } else {
            (magnitude.to_u64().unwrap_or(u64::MAX), self.exp)
        };
        let value = scale_by_pow2(top as f64, exp);
        if self.mant.sign() == Sign::Minus {
            -value
        } else {
            value
        }
    }

    /// `log2 |self|` to about 60 bits, or `None` for zero. Unlike `to_f64`
    /// this never overflows.
    pub(crate) fn log2_abs(&self) -> Option<f64> {
        if self.is_zero() {
            return None;
        }
        let magnitude = self.mant.magnitude();
        let bits = magnitude.bits();
        let shift = bits.saturating_sub(64);
        let lead = (magnitude >> shift).to_u64().unwrap_or(u64::MAX) as f64;
        Some(lead.log2() + (self.exp + shift as i64) as f64)
    }

    /// Numeric comparison.
    pub(crate) fn cmp_value(&self, other: &BigFloat) -> Ordering {
        let sa = self.mant.sign();
        let sb = other.mant.sign();
        if sa != sb {
            return sign_rank(sa).cmp(&sign_rank(sb));
        }
        if sa == Sign::NoSign {
            return Ordering::Equal;
        }
        let min_exp = self.exp.min(other.exp);
        let a = &self.mant << ((self.exp - min_exp) as u64);
        let b = &other.mant << ((other.exp - min_exp) as u64);
        a.cmp(&b)
    }

    pub(crate) fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }
}

fn sign_rank(sign: Sign) -> i8 {
    match sign {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

fn scale_by_pow2(mut value: f64, mut exp: i64) -> f64 {
    const STEP: i64 = 1000;
    while exp > STEP {
        value *= 2f64.powi(STEP as i32);
        exp -= STEP;
        if value.is_infinite() {
            return value;
        }
    }
    while exp < -STEP {
        value *= 2f64.powi(-STEP as i32);
        exp += STEP;
        if value == 0.0 {
            return value;
        }
    }
    value * 2f64.powi(exp as i32)
}
