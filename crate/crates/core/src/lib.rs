//! Series solutions of the Lamé equation in algebraic form.
//!
//! The crate generates the power-series coefficients about a regular
//! singular point from their three-term recurrence, locates the domain of
//! absolute convergence, compares it with the Poincaré–Perron ratio bound,
//! evaluates the Jacobi elliptic functions that connect the algebraic and
//! Weierstrass forms, and reproduces the double-sum divergence experiment.
//!
//! ```
//! use lame_core::{LimitPair, DomainCriterion};
//!
//! let criterion = DomainCriterion::new(LimitPair::weierstrass(0.8));
//! assert!((criterion.radius() - 0.5087504364524608).abs() < 1e-15);
//! assert!(criterion.contains(0.5));
//! ```

mod bigfloat;
pub mod domain;
pub mod elliptic;
pub mod error;
pub mod experiment;
pub mod format;
pub mod perron;
pub mod recurrence;

pub use domain::{
    classify_algebraic, sample_boundary, weierstrass_bound, AlgebraicCase, CaseTag, DomainCriterion,
};
pub use elliptic::{amplitude, complete_k, incomplete_f, sn, xi_of_z, EllipticModulus};
pub use error::{Error, Result};
pub use experiment::{
    domain_scan, double_sum, double_sum_orders, generating_value, run_compare, run_domain_scan,
    run_table2, CompareReport, DomainRow, DoubleSumSeries, DoubleSumSpec, ExperimentRow,
};
pub use perron::{
    characteristic_roots, classify_point, corrected_radius, pp_radius, ratio_limit_estimate,
    CharacteristicRoots, ConvergenceVerdict, Region,
};
pub use recurrence::{
    AlgebraicParameters, CoefficientSequence, IndicialExponent, LimitPair, WeierstrassParameters,
};
