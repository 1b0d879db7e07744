//! Jacobi `sn` and the elliptic integral of the first kind, for moving
//! between the Weierstrass variable `z` and the series variable
//! `ξ = sn²(z, ρ)`.
//!
//! `ρ` is the modulus (not the parameter `m = ρ²`).

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Iterations stop once the descending modulus falls below this.
const AGM_TOLERANCE: f64 = 1e-15;
const AGM_MAX_LEVELS: usize = 40;

/// Absolute tolerance of the adaptive quadrature.
const QUAD_TOLERANCE: f64 = 1e-13;
const QUAD_MAX_DEPTH: u32 = 50;

/// Modulus `ρ` with `0 ≤ ρ < 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EllipticModulus(f64);

impl EllipticModulus {
    pub fn new(rho: f64) -> Result<Self> {
        if (0.0..1.0).contains(&rho) {
            Ok(EllipticModulus(rho))
        } else {
            Err(Error::InvalidModulus {
                rho,
                expected: "0 <= rho < 1",
            })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `√(1 - ρ²)`
    fn complementary(self) -> f64 {
        ((1.0 - self.0) * (1.0 + self.0)).sqrt()
    }
}

/// Complete integral `K(ρ)` from the arithmetic-geometric mean of
/// `1` and `√(1 - ρ²)`.
pub fn complete_k(modulus: EllipticModulus) -> f64 {
    let mut a = 1.0;
    let mut b = modulus.complementary();
    for _ in 0..AGM_MAX_LEVELS {
        if (a - b).abs() <= AGM_TOLERANCE * a {
            break;
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    FRAC_PI_2 / a
}

/// Jacobi amplitude `am(z, ρ)`, the angle `φ` with `F(φ, ρ) = z`.
///
/// Descending Landen (AGM) scheme: run the mean to convergence, start from
/// `φ_N = 2^N a_N z` and unwind with
/// `φ_{n-1} = (φ_n + asin(c_n/a_n · sin φ_n)) / 2`.
pub fn amplitude(z: f64, modulus: EllipticModulus) -> f64 {
    let rho = modulus.value();
    if rho == 0.0 {
        return z;
    }
    let mut a = vec![1.0];
    let mut c = vec![rho];
    let mut b = modulus.complementary();
    while c.len() <= AGM_MAX_LEVELS && c[c.len() - 1].abs() >= AGM_TOLERANCE {
        let last = a[a.len() - 1];
        c.push(0.5 * (last - b));
        a.push(0.5 * (last + b));
        b = (last * b).sqrt();
    }
    let levels = a.len() - 1;
    let mut phi = 2f64.powi(levels as i32) * a[levels] * z;
    for n in (1..=levels).rev() {
        phi = 0.5 * (phi + (c[n] / a[n] * phi.sin()).asin());
    }
    phi
}

pub fn sn(z: f64, modulus: EllipticModulus) -> f64 {
    amplitude(z, modulus).sin()
}

/// `ξ = sn²(z, ρ)`, always in `[0, 1]`.
pub fn xi_of_z(z: f64, modulus: EllipticModulus) -> f64 {
    let s = sn(z, modulus);
    (s * s).min(1.0)
}

/// Incomplete integral `F(φ, ρ) = ∫₀^φ dθ / √(1 - ρ² sin²θ)` by adaptive
/// Gauss–Kronrod quadrature.
///
/// Independent of the AGM routines above; it is the reference they are
/// checked against.
pub fn incomplete_f(phi: f64, modulus: EllipticModulus) -> f64 {
    let rho2 = modulus.value() * modulus.value();
    let integrand = |theta: f64| {
        let s = theta.sin();
        1.0 / (1.0 - rho2 * s * s).sqrt()
    };
    if phi == 0.0 {
        return 0.0;
    }
    let (lo, hi, sign) = if phi > 0.0 {
        (0.0, phi, 1.0)
    } else {
        (phi, 0.0, -1.0)
    };
    // quarter periods keep each panel smooth and the tolerance per panel fair
    let panels = ((hi - lo) / FRAC_PI_2).ceil().max(1.0) as usize;
    let width = (hi - lo) / panels as f64;
    let tol = QUAD_TOLERANCE / panels as f64;
    let total: f64 = (0..panels)
        .map(|i| {
            let a = lo + i as f64 * width;
            let b = if i + 1 == panels { hi } else { a + width };
            adaptive_gauss_kronrod(&integrand, a, b, tol, QUAD_MAX_DEPTH)
        })
        .sum();
    sign * total
}

// 15-point Kronrod extension of the 7-point Gauss rule (abscissae in
// decreasing order, the last one is the centre).
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7]
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// `(kronrod, |kronrod - gauss|)` on `[a, b]`.
fn gauss_kronrod_15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(centre - dx) + f(centre + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

fn adaptive_gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let (value, error) = gauss_kronrod_15(f, a, b);
    if error <= tol || depth == 0 {
        return value;
    }
    let mid = 0.5 * (a + b);
    adaptive_gauss_kronrod(f, a, mid, 0.5 * tol, depth - 1)
        + adaptive_gauss_kronrod(f, mid, b, 0.5 * tol, depth - 1)
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn m(rho: f64) -> EllipticModulus {
        EllipticModulus::new(rho).unwrap()
    }

    #[test]
    fn modulus_validation() {
        assert!(EllipticModulus::new(0.0).is_ok());
        assert!(EllipticModulus::new(0.999).is_ok());
        assert!(EllipticModulus::new(1.0).is_err());
        assert!(EllipticModulus::new(-0.1).is_err());
        assert!(EllipticModulus::new(f64::NAN).is_err());
    }

    #[test]
    fn quadrature_rule_integrates_smooth_functions() {
        let v = adaptive_gauss_kronrod(&|x: f64| x.cos(), 0.0, 2.0, 1e-14, 50);
        assert!((v - 2f64.sin()).abs() < 1e-14);
        let v = adaptive_gauss_kronrod(&|x: f64| x.powi(20), 0.0, 1.0, 1e-14, 50);
        assert!((v - 1.0 / 21.0).abs() < 1e-14);
    }

    #[test]
    fn incomplete_integral_special_cases() {
        assert_eq!(incomplete_f(0.0, m(0.8)), 0.0);
        for phi in [0.3, 1.0, 2.5, -0.7] {
            assert!((incomplete_f(phi, m(0.0)) - phi).abs() < 1e-14);
        }
        assert!((incomplete_f(-0.9, m(0.6)) + incomplete_f(0.9, m(0.6))).abs() < 1e-15);
    }

    #[test]
    fn complete_integral_special_cases() {
        assert_eq!(complete_k(m(0.0)), FRAC_PI_2);
        // K(1/√2) = Γ(1/4)² / (4√π)
        let gamma_quarter = 3.625_609_908_221_908_3_f64;
        let expected = gamma_quarter * gamma_quarter / (4.0 * PI.sqrt());
        assert!((complete_k(m(0.5f64.sqrt())) - expected).abs() < 1e-14);
        let ks: Vec<f64> = (1..=9).map(|i| complete_k(m(i as f64 / 10.0))).collect();
        assert!(ks.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn agm_and_quadrature_agree_on_quarter_period() {
        for i in 0..=9 {
            let rho = i as f64 / 10.0;
            let quad = incomplete_f(FRAC_PI_2, m(rho));
            assert!((complete_k(m(rho)) - quad).abs() < 1e-12, "rho = {rho}");
        }
        let k = incomplete_f(FRAC_PI_2, m(0.8));
        assert!((sn(k, m(0.8)) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sn_special_values() {
        assert_eq!(sn(0.0, m(0.7)), 0.0);
        for z in [0.1, 1.0, 2.0, 5.0, -3.0] {
            assert_eq!(sn(z, m(0.0)), z.sin());
        }
        let k = complete_k(m(0.8));
        assert!((sn(k, m(0.8)) - 1.0).abs() < 1e-12);
        assert!((xi_of_z(k, m(0.8)) - 1.0).abs() < 1e-12);
        assert_eq!(xi_of_z(0.0, m(0.8)), 0.0);
        // sn(z, ρ) at ρ → 0 approaches sin z
        let worst = (0..=1000)
            .map(|i| {
                let z = 2.0 * PI * i as f64 / 1000.0;
                (sn(z, m(1e-6)) - z.sin()).abs()
            })
            .fold(0.0, f64::max);
        assert!(worst < 1e-5);
    }

    #[test]
    fn round_trip_through_the_amplitude() {
        for i in 1..=9 {
            let rho = i as f64 / 10.0;
            let k = complete_k(m(rho));
            for j in 1..20 {
                let z = k * j as f64 / 20.0;
                let phi = sn(z, m(rho)).asin();
                assert!((incomplete_f(phi, m(rho)) - z).abs() < 1e-10);
            }
        }
    }

    proptest! {
        #[test]
        fn sn_is_odd(z in -20.0..20.0f64, rho in 0.0..0.99f64) {
            prop_assert_eq!(sn(-z, m(rho)), -sn(z, m(rho)));
        }

        #[test]
        fn sn_is_bounded(z in -50.0..50.0f64, rho in 0.0..0.999f64) {
            let x = xi_of_z(z, m(rho));
            prop_assert!((0.0..=1.0).contains(&x));
        }

        #[test]
        fn sn_has_period_4k(z in -5.0..5.0f64, rho in 0.0..0.95f64) {
            let k = complete_k(m(rho));
            prop_assert!((sn(z + 4.0 * k, m(rho)) - sn(z, m(rho))).abs() < 1e-12);
        }

        #[test]
        fn amplitude_inverts_the_integral(t in 0.001..0.999f64, rho in 0.0..0.95f64) {
            let z = t * complete_k(m(rho));
            prop_assert!((incomplete_f(amplitude(z, m(rho)), m(rho)) - z).abs() < 1e-10);
        }
    }
}
