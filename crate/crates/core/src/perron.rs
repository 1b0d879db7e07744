//! Characteristic-root analysis of the limiting recurrence
//! `d̄_{n+1} = A d̄_n + B d̄_{n-1}`.
//!
//! The ratio `d̄_{n+1}/d̄_n` of a generic solution tends to the dominant root
//! of `r² - A r - B = 0`, which gives the ratio-test radius `1/max|r|`. That
//! radius can exceed the absolute-convergence radius: once the coefficients
//! are expanded in powers of `A` and `B`, absolute convergence is governed
//! by `t² = |A| t + |B|`, whose positive root gives the corrected radius
//! `1/t*`. Points between the two radii are where the series is only
//! conditionally convergent.
//!
//! Taking absolute values of the characteristic coefficients literally,
//! `t² + |A| t + |B| = 0` has no positive root, so the corrected polynomial is
//! written with the signs that keep every term of `|d̄_n|` nonnegative.

use crate::domain::{check_series_variable, DomainCriterion};
use crate::error::{Error, Result};
use crate::recurrence::{CoefficientSequence, LimitPair};

/// Roots of `r² - A r - B = 0`, ordered by modulus.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CharacteristicRoots {
    /// Root of smaller modulus.
    pub minor: f64,
    /// Root of larger (or equal) modulus.
    pub dominant: f64,
}

impl CharacteristicRoots {
    /// Distinct roots sharing a modulus (`r` and `-r`).
    pub fn equal_moduli(&self) -> bool {
        let (small, large) = (self.minor.abs(), self.dominant.abs());
        self.minor != self.dominant
            && self.minor.signum() != self.dominant.signum()
            && large - small <= 1e-14 * large
    }

    pub fn sum(&self) -> f64 {
        self.minor + self.dominant
    }

    pub fn product(&self) -> f64 {
        self.minor * self.dominant
    }
}

pub fn characteristic_roots(limits: LimitPair) -> Result<CharacteristicRoots> {
    let LimitPair { linear, quadratic } = limits;
    let discriminant = linear.mul_add(linear, 4.0 * quadratic);
    if discriminant < 0.0 {
        return Err(Error::ComplexRoots { discriminant });
    }
    let root = discriminant.sqrt();
    let (r1, r2) = if linear == 0.0 {
        (-root / 2.0, root / 2.0)
    } else {
        // larger root without cancellation, smaller one from the product
        let large = (linear + linear.signum() * root) / 2.0;
        (-quadratic / large, large)
    };
    let (minor, dominant) = if r1.abs() <= r2.abs() {
        (r1, r2)
    } else {
        (r2, r1)
    };
    Ok(CharacteristicRoots { minor, dominant })
}

/// Ratio-test radius `1 / max(|r1|, |r2|)`.
pub fn pp_radius(limits: LimitPair) -> Result<f64> {
    let roots = characteristic_roots(limits)?;
    if roots.equal_moduli() {
        return Err(Error::EqualModuli {
            r1: roots.minor,
            r2: roots.dominant,
        });
    }
    Ok(1.0 / roots.dominant.abs())
}

/// `1/t*` with `t*` the positive root of `t² = |A| t + |B|`.
pub fn corrected_radius(limits: LimitPair) -> Result<f64> {
    let a = limits.linear.abs();
    let b = limits.quadratic.abs();
    if a == 0.0 && b == 0.0 {
        return Err(Error::argument(
            "limits",
            0.0,
            "A and B must not both vanish",
        ));
    }
    let t_star = (a + (a * a + 4.0 * b).sqrt()) / 2.0;
    Ok(1.0 / t_star)
}

/// Mean of `|d_k / d_{k-1}|` over the last `window` indices.
pub fn ratio_limit_estimate(seq: &CoefficientSequence, window: usize) -> Result<f64> {
    let d = seq.coefficients();
    let order = seq.order();
    if window < 2 || window > order {
        return Err(Error::argument(
            "window",
            window as f64,
            "must satisfy 2 <= window <= order",
        ));
    }
    let first = order - window;
    if let Some(offset) = d[first..].iter().position(|&v| v == 0.0) {
        return Err(Error::ZeroCoefficient {
            index: first + offset,
        });
    }
    let total: f64 = (first + 1..=order).map(|k| (d[k] / d[k - 1]).abs()).sum();
    Ok(total / window as f64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    /// `|ξ| < r*`
    AbsolutelyConvergent,
    /// `r* ≤ |ξ| < r_pp`
    ConditionalRegion,
    /// `|ξ| ≥ r_pp`
    Divergent,
}

impl Region {
    pub fn name(self) -> &'static str {
        match self {
            Region::AbsolutelyConvergent => "AbsolutelyConvergent",
            Region::ConditionalRegion => "ConditionalRegion",
            Region::Divergent => "Divergent",
        }
    }
}

impl std::fmt::Display for Region {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvergenceVerdict {
    pub region: Region,
    /// Absolute-convergence radius.
    pub r_star: f64,
    /// Ratio-test radius.
    pub r_pp: f64,
}

pub fn classify_point(limits: LimitPair, xi: f64) -> Result<ConvergenceVerdict> {
    check_series_variable(xi)?;
    let r_star = DomainCriterion::new(limits).radius();
    let r_pp = pp_radius(limits)?;
    let region = if xi < r_star {
        Region::AbsolutelyConvergent
    } else if xi < r_pp {
        Region::ConditionalRegion
    } else {
        Region::Divergent
    };
    Ok(ConvergenceVerdict {
        region,
        r_star,
        r_pp,
    })
}
