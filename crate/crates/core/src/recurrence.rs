//! Lamé equation parameters and the three-term recurrence of its Frobenius
//! coefficients about the singular point `a`.
//!
//! With `z = x - a` and `y = Σ d_n z^(n+λ)`, the coefficients obey
//!
//! ```text
//! d_{n+1} = A_n d_n + B_n d_{n-1},    d_1 = A_0 d_0,
//! A_n = A · Ā_n,   B_n = B · B̄_n,
//! A = -(2a-b-c) / ((a-b)(a-c)),   B = -1 / ((a-b)(a-c)),
//! ```
//!
//! where `Ā_n` and `B̄_n` are ratios of monic quadratics in `n`, so
//! `A_n → A` and `B_n → B`.

use crate::error::{Error, Result};

/// Singular points and parameters of the algebraic form
///
/// ```text
/// y'' + ½(1/(x-a) + 1/(x-b) + 1/(x-c)) y' + (-α(α+1)x + q) / (4(x-a)(x-b)(x-c)) y = 0
/// ```
///
/// The series is expanded about `a` (the `expansion_point`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlgebraicParameters {
    /// `a`
    pub expansion_point: f64,
    /// `b`
    pub second_point: f64,
    /// `c`
    pub third_point: f64,
    /// `α`
    pub degree: f64,
    /// `q`
    pub accessory: f64,
}

impl AlgebraicParameters {
    pub fn new(a: f64, b: f64, c: f64, degree: f64, accessory: f64) -> Self {
        AlgebraicParameters {
            expansion_point: a,
            second_point: b,
            third_point: c,
            degree,
            accessory,
        }
    }

    /// Same parameters with `b` and `c` exchanged.
    pub fn swapped(&self) -> Self {
        AlgebraicParameters {
            second_point: self.third_point,
            third_point: self.second_point,
            ..*self
        }
    }

    /// Rejects non-finite input and a coinciding expansion point.
    pub fn validate(&self) -> Result<()> {
        let (a, b, c) = self.points();
        for (name, value) in [
            ("a", a),
            ("b", b),
            ("c", c),
            ("alpha", self.degree),
            ("q", self.accessory),
        ] {
            if !value.is_finite() {
                return Err(Error::argument(name, value, "must be finite"));
            }
        }
        if a == b || a == c {
            return Err(Error::DegenerateSingularity { a, b, c });
        }
        Ok(())
    }

    pub(crate) fn points(&self) -> (f64, f64, f64) {
        (self.expansion_point, self.second_point, self.third_point)
    }

    /// `(a-b)(a-c)`
    fn separation_product(&self) -> f64 {
        let (a, b, c) = self.points();
        (a - b) * (a - c)
    }

    /// `2a - b - c`
    fn asymmetry(&self) -> f64 {
        let (a, b, c) = self.points();
        (a - b) + (a - c)
    }

    /// Limits `A` and `B` of the recurrence coefficients.
    pub fn limits(&self) -> Result<LimitPair> {
        self.validate()?;
        let product = self.separation_product();
        Ok(LimitPair {
            linear: -self.asymmetry() / product,
            quadratic: -1.0 / product,
        })
    }

    /// The pair `(A_n, B_n)` for indicial exponent `exponent`.
    ///
    /// `B_0` is returned for completeness but never enters the recurrence.
    pub fn coefficients_at(&self, exponent: IndicialExponent, n: usize) -> Result<(f64, f64)> {
        let limits = self.limits()?;
        let (a_bar, b_bar) = self.normalized_coefficients(exponent, n);
        Ok((limits.linear * a_bar, limits.quadratic * b_bar))
    }

    /// `(Ā_n, B̄_n)`; both tend to 1 as `n` grows.
    pub fn normalized_coefficients(&self, exponent: IndicialExponent, n: usize) -> (f64, f64) {
        let lam = exponent.value();
        let n = n as f64;
        let alpha = self.degree;
        let denominator = n * n + (1.5 + 2.0 * lam) * n + (1.0 + lam) * (0.5 + lam);
        let shift = self.asymmetry() / (4.0 * self.separation_product())
            * (alpha * (alpha + 1.0) * self.expansion_point - self.accessory);
        let a_num = n * n + 2.0 * lam * n + lam * lam - shift;
        let b_num = n * n + (2.0 * lam - 1.5) * n + lam * lam
            - 1.5 * lam
            - 0.25 * (alpha - 1.0) * (alpha + 2.0);
        (a_num / denominator, b_num / denominator)
    }
}

/// Modulus, degree and spectral parameter of the Weierstrass form
/// `y'' = (α(α+1) ρ² sn²(z, ρ) - h) y`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeierstrassParameters {
    /// `ρ`, strictly inside `(0, 1)`.
    pub modulus: f64,
    /// `α`
    pub degree: f64,
    /// `h`
    pub spectral: f64,
}

impl WeierstrassParameters {
    pub fn new(modulus: f64, degree: f64, spectral: f64) -> Result<Self> {
        let wp = WeierstrassParameters {
            modulus,
            degree,
            spectral,
        };
        wp.validate()?;
        Ok(wp)
    }

    pub fn validate(&self) -> Result<()> {
        check_open_modulus(self.modulus)?;
        if !self.degree.is_finite() {
            return Err(Error::argument("alpha", self.degree, "must be finite"));
        }
        if !self.spectral.is_finite() {
            return Err(Error::argument("h", self.spectral, "must be finite"));
        }
        Ok(())
    }

    /// Algebraic form with `ξ = sn²(z, ρ)`: `(a, b, c, q) = (0, 1, ρ⁻², hρ⁻²)`.
    pub fn to_algebraic(&self) -> Result<AlgebraicParameters> {
        self.validate()?;
        let inv_rho2 = 1.0 / (self.modulus * self.modulus);
        Ok(AlgebraicParameters::new(
            0.0,
            1.0,
            inv_rho2,
            self.degree,
            self.spectral * inv_rho2,
        ))
    }
}

pub(crate) fn check_open_modulus(rho: f64) -> Result<()> {
    if rho > 0.0 && rho < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidModulus {
            rho,
            expected: "0 < rho < 1",
        })
    }
}

/// One of the two indicial roots at each finite singular point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndicialExponent {
    Zero,
    Half,
}

impl IndicialExponent {
    pub fn value(self) -> f64 {
        match self {
            IndicialExponent::Zero => 0.0,
            IndicialExponent::Half => 0.5,
        }
    }
}

impl TryFrom<f64> for IndicialExponent {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        if value == 0.0 {
            Ok(IndicialExponent::Zero)
        } else if value == 0.5 {
            Ok(IndicialExponent::Half)
        } else {
            Err(Error::InvalidExponent(value))
        }
    }
}

/// Limits `A = lim A_n` (coefficient of `z`) and `B = lim B_n` (coefficient
/// of `z²`) of the recurrence.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimitPair {
    pub linear: f64,
    pub quadratic: f64,
}

impl LimitPair {
    pub fn new(linear: f64, quadratic: f64) -> Self {
        LimitPair { linear, quadratic }
    }

    /// `(1 + ρ², -ρ²)`, the limits for the Weierstrass form written directly.
    pub fn weierstrass(rho: f64) -> Self {
        let rho2 = rho * rho;
        LimitPair::new(1.0 + rho2, -rho2)
    }
}

/// Finite prefix `d_0, …, d_N` of a Frobenius coefficient sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientSequence {
    exponent: IndicialExponent,
    coeffs: Vec<f64>,
}

impl CoefficientSequence {
    /// Iterates the full recurrence up to `d_order`, with `d_0 = 1`.
    pub fn generate(
        params: &AlgebraicParameters,
        exponent: IndicialExponent,
        order: usize,
    ) -> Result<Self> {
        check_order(order)?;
        let limits = params.limits()?;
        let mut coeffs = Vec::with_capacity(order + 1);
        let (a0_bar, _) = params.normalized_coefficients(exponent, 0);
        coeffs.push(1.0);
        coeffs.push(limits.linear * a0_bar);
        for n in 1..order {
            let (a_bar, b_bar) = params.normalized_coefficients(exponent, n);
            let next = limits.linear * a_bar * coeffs[n] + limits.quadratic * b_bar * coeffs[n - 1];
            coeffs.push(next);
        }
        Ok(CoefficientSequence { exponent, coeffs })
    }

    /// Constant-coefficient recurrence `d̄_{n+1} = A d̄_n + B d̄_{n-1}` seeded
    /// with `d̄_0 = 1`, `d̄_1 = A`.
    pub fn asymptotic(limits: LimitPair, order: usize) -> Result<Self> {
        check_order(order)?;
        let LimitPair { linear, quadratic } = limits;
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(1.0);
        coeffs.push(linear);
        for n in 1..order {
            coeffs.push(linear * coeffs[n] + quadratic * coeffs[n - 1]);
        }
        Ok(CoefficientSequence {
            exponent: IndicialExponent::Zero,
            coeffs,
        })
    }

    pub fn exponent(&self) -> IndicialExponent {
        self.exponent
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    /// Truncation order `N` (index of the last coefficient).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `Σ_{n=0}^{N} d_n z^(n+λ)`, summed in ascending `n`.
    pub fn partial_sum(&self, z: f64) -> Result<f64> {
        if !z.is_finite() {
            return Err(Error::argument("z", z, "must be finite"));
        }
        let prefactor = match self.exponent {
            IndicialExponent::Zero => 1.0,
            IndicialExponent::Half if z < 0.0 => {
                return Err(Error::argument(
                    "z",
                    z,
                    "must be nonnegative for the exponent 1/2",
                ))
            }
            IndicialExponent::Half => z.sqrt(),
        };
        let mut sum = 0.0;
        let mut power = 1.0;
        for &d in &self.coeffs {
            sum += d * power;
            power *= z;
        }
        Ok(prefactor * sum)
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        Err(Error::argument("order", 0.0, "must be at least 1"))
    } else {
        Ok(())
    }
}
