use lame_core::experiment::DoubleSumSpec;
use lame_core::{
    classify_point, double_sum, generating_value, AlgebraicParameters, CoefficientSequence,
    DomainCriterion, Error, IndicialExponent, LimitPair, Region, WeierstrassParameters,
};
use proptest::prelude::*;

#[test]
fn weierstrass_mapping_to_limits() {
    let wp = WeierstrassParameters::new(0.8, 0.0, 0.0).unwrap();
    let params = wp.to_algebraic().unwrap();
    assert!((params.third_point - 1.5625).abs() < 1e-15);
    assert_eq!(params.accessory, 0.0);
    let limits = params.limits().unwrap();
    assert!((limits.linear - 1.64).abs() < 1e-15);
    assert!((limits.quadratic + 0.64).abs() < 1e-15);

    let params = WeierstrassParameters::new(0.5, 1.5, 1.0)
        .unwrap()
        .to_algebraic()
        .unwrap();
    assert_eq!(
        (params.third_point, params.accessory, params.degree),
        (4.0, 4.0, 1.5)
    );
    assert!(WeierstrassParameters::new(1.0, 0.0, 0.0).is_err());
}

#[test]
fn sequence_prefix() {
    let params = WeierstrassParameters::new(0.8, 0.0, 0.0)
        .unwrap()
        .to_algebraic()
        .unwrap();
    let seq = CoefficientSequence::generate(&params, IndicialExponent::Zero, 5).unwrap();
    let d = seq.coefficients();
    assert_eq!(d.len(), 6);
    assert_eq!(d[0], 1.0);
    assert_eq!(d[1], 0.0);
    let (a2, b2) = params.coefficients_at(IndicialExponent::Zero, 2).unwrap();
    assert_eq!(d[3], a2 * d[2] + b2 * d[1]);

    let degenerate = AlgebraicParameters::new(1.0, 1.0, 2.0, 0.0, 0.0);
    assert!(matches!(
        CoefficientSequence::generate(&degenerate, IndicialExponent::Half, 5),
        Err(Error::DegenerateSingularity { .. })
    ));
}

#[test]
fn verdict_regions_at_rho_08() {
    let limits = LimitPair::weierstrass(0.8);
    let region = |xi| classify_point(limits, xi).unwrap().region;
    assert_eq!(region(0.3), Region::AbsolutelyConvergent);
    assert_eq!(region(0.7), Region::ConditionalRegion);
    assert_eq!(region(1.5), Region::Divergent);
}

/// `ξ` at which `|A|ξ + |B|ξ² = level`.
fn xi_at_level(limits: LimitPair, level: f64) -> f64 {
    let (a, b) = (limits.linear.abs(), limits.quadratic.abs());
    if b == 0.0 {
        level / a
    } else {
        2.0 * level / (a + (a * a + 4.0 * b * level).sqrt())
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn double_sum_matches_closed_form(rho in 0.05..0.95f64, fraction in 0.0..=1.0f64) {
        let limits = LimitPair::weierstrass(rho);
        let xi = xi_at_level(limits, 0.9) * fraction;
        prop_assume!(DomainCriterion::new(limits).level(xi) <= 0.9);
        let closed = generating_value(limits, xi).unwrap();
        let partial = double_sum(&DoubleSumSpec::new(rho, xi, 200).unwrap()).unwrap();
        prop_assert!((partial - closed).abs() <= 1e-6 * closed.abs());
    }

    #[test]
    fn rearrangement_consistency(rho in 0.05..0.95f64, fraction in 0.0..0.95f64, order in 100usize..200) {
        let limits = LimitPair::weierstrass(rho);
        let xi = DomainCriterion::new(limits).radius() * fraction;
        let partial = double_sum(&DoubleSumSpec::new(rho, xi, order).unwrap()).unwrap();
        let series = CoefficientSequence::asymptotic(limits, 2 * order)
            .unwrap()
            .partial_sum(xi)
            .unwrap();
        prop_assert!((partial - series).abs() <= 1e-8 * series.abs());
    }
}
