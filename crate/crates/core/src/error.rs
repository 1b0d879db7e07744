use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// The expansion point coincides with another singular point.
    #[error("degenerate singular points: a = {a}, b = {b}, c = {c} (a must differ from b and c)")]
    DegenerateSingularity { a: f64, b: f64, c: f64 },

    #[error("elliptic modulus must satisfy {expected}, got {rho}")]
    InvalidModulus { rho: f64, expected: &'static str },

    #[error("invalid indicial exponent {0}: only 0 and 1/2 are admitted")]
    InvalidExponent(f64),

    #[error("invalid argument `{name}` = {value}: {reason}")]
    InvalidArgument {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error(
        "characteristic roots are complex (discriminant {discriminant:e}); moduli are not distinct"
    )]
    ComplexRoots { discriminant: f64 },

    #[error(
        "characteristic roots {r1} and {r2} have equal moduli; the ratio limit does not exist"
    )]
    EqualModuli { r1: f64, r2: f64 },

    #[error("coefficient d_{index} vanishes; ratio estimate undefined")]
    ZeroCoefficient { index: usize },

    #[error("generating function has a pole at xi = {xi} (denominator {denominator:e})")]
    Pole { xi: f64, denominator: f64 },

    #[error("double sum at order {order} exceeds the double-precision range")]
    Overflow { order: usize },

    #[error("could not reach the requested accuracy within {bits} bits of working precision")]
    PrecisionExhausted { bits: u64 },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn argument(name: &'static str, value: f64, reason: &'static str) -> Self {
        Error::InvalidArgument {
            name,
            value,
            reason,
        }
    }
}
