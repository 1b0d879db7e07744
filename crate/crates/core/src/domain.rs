//! Absolute-convergence domain `|A z| + |B z²| < 1` of a three-term
//! recurrence series, its radius, the closed-form radii for sign patterns of
//! the singular points, and the bound on `sn²(z, ρ)` for the Weierstrass form.

use std::f64::consts::SQRT_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::recurrence::{check_open_modulus, AlgebraicParameters, LimitPair};

/// Membership test for `|A z| + |B z²| < 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DomainCriterion {
    limits: LimitPair,
}

impl DomainCriterion {
    pub fn new(limits: LimitPair) -> Self {
        DomainCriterion { limits }
    }

    pub fn limits(&self) -> LimitPair {
        self.limits
    }

    /// `|A||z| + |B||z|²`
    pub fn level(&self, modulus: f64) -> f64 {
        let r = modulus.abs();
        self.limits.linear.abs() * r + self.limits.quadratic.abs() * r * r
    }

    pub fn contains(&self, z: f64) -> bool {
        self.level(z) < 1.0
    }

    pub fn contains_complex(&self, z: Complex64) -> bool {
        self.level(z.norm()) < 1.0
    }

    /// Positive root `r*` of `|B| r² + |A| r = 1`; infinite when `A = B = 0`.
    pub fn radius(&self) -> f64 {
        let a = self.limits.linear.abs();
        let b = self.limits.quadratic.abs();
        if a == 0.0 && b == 0.0 {
            return f64::INFINITY;
        }
        // rationalized root: no cancellation as b → 0
        let mut r = 2.0 / (a + (a * a + 4.0 * b).sqrt());
        // the boundary itself is excluded; round up onto it if needed
        while self.level(r) < 1.0 {
            r = r.next_up();
        }
        r
    }
}

impl From<LimitPair> for DomainCriterion {
    fn from(limits: LimitPair) -> Self {
        DomainCriterion::new(limits)
    }
}

/// Sign patterns of `(a-b, a-c, 2a-b-c)` with a closed-form radius.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `a-b > 0`, `a-c > 0`
    BothPositive,
    /// `a-b < 0`, `a-c < 0`
    BothNegative,
    /// `a-b < 0`, `a-c > 0`, `2a-b-c > 0`
    MixedPos,
    /// `a-b > 0`, `a-c < 0`, `2a-b-c < 0`
    MixedNeg,
    /// `b = c > 0` with `a > b`
    EqualPositive,
    /// `b = c < 0` with `a < b`
    EqualNegative,
    /// Any other nondegenerate pattern; radius from the generic solver.
    General,
}

impl CaseTag {
    pub fn name(self) -> &'static str {
        match self {
            CaseTag::BothPositive => "both_positive",
            CaseTag::BothNegative => "both_negative",
            CaseTag::MixedPos => "mixed_pos",
            CaseTag::MixedNeg => "mixed_neg",
            CaseTag::EqualPositive => "equal_positive",
            CaseTag::EqualNegative => "equal_negative",
            CaseTag::General => "general",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlgebraicCase {
    pub tag: CaseTag,
    pub radius: f64,
}

/// Classifies the singular-point configuration and returns its radius of
/// convergence about `a`.
pub fn classify_algebraic(params: &AlgebraicParameters) -> Result<AlgebraicCase> {
    params.validate()?;
    let (a, b, c) = params.points();
    let ab = a - b;
    let ac = a - c;
    let s = ab + ac;
    let product = ab * ac;

    if b == c {
        let radius = (SQRT_2 - 1.0) * ab.abs();
        let tag = if b > 0.0 && ab > 0.0 {
            CaseTag::EqualPositive
        } else if b < 0.0 && ab < 0.0 {
            CaseTag::EqualNegative
        } else {
            CaseTag::General
        };
        return Ok(AlgebraicCase { tag, radius });
    }

    let case = if ab > 0.0 && ac > 0.0 {
        AlgebraicCase {
            tag: CaseTag::BothPositive,
            radius: (-s + (s * s + 4.0 * product).sqrt()) / 2.0,
        }
    } else if ab < 0.0 && ac < 0.0 {
        AlgebraicCase {
            tag: CaseTag::BothNegative,
            radius: (s + (s * s + 4.0 * product).sqrt()) / 2.0,
        }
    } else if ab < 0.0 && ac > 0.0 && s > 0.0 {
        AlgebraicCase {
            tag: CaseTag::MixedPos,
            radius: -ab,
        }
    } else if ab > 0.0 && ac < 0.0 && s < 0.0 {
        AlgebraicCase {
            tag: CaseTag::MixedNeg,
            radius: ab,
        }
    } else {
        AlgebraicCase {
            tag: CaseTag::General,
            radius: DomainCriterion::new(params.limits()?).radius(),
        }
    };
    Ok(case)
}

/// Upper bound `s*` on `sn²(z, ρ)` for absolute convergence of the
/// Weierstrass-form series:
/// `s* = (-(1+ρ²) + √(ρ⁴ + 6ρ² + 1)) / (2ρ²)`.
pub fn weierstrass_bound(rho: f64) -> Result<f64> {
    check_open_modulus(rho)?;
    let rho2 = rho * rho;
    let disc = rho2 * rho2 + 6.0 * rho2 + 1.0;
    Ok(2.0 / ((1.0 + rho2) + disc.sqrt()))
}

/// `(ρ, s*)` for every grid point, in grid order.
pub fn sample_boundary(rho_grid: &[f64]) -> Result<Vec<(f64, f64)>> {
    rho_grid
        .iter()
        .map(|&rho| weierstrass_bound(rho).map(|s| (rho, s)))
        .collect()
}

/// Rejects `ξ` values the classifiers cannot place.
pub(crate) fn check_series_variable(xi: f64) -> Result<()> {
    if xi.is_finite() && xi >= 0.0 {
        Ok(())
    } else {
        Err(Error::argument("xi", xi, "must be finite and nonnegative"))
    }
}
