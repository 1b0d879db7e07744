//! The double-sum divergence experiment and the scans behind the CLI.
//!
//! The generating function of the limiting sequence, `1/(1 - Aξ - Bξ²)`,
//! can be rearranged as
//!
//! ```text
//! ȳ(ξ) = Σ_{n=0}^{N} Σ_{m=0}^{N} (n+m)!/(n! m!) x̃ⁿ ỹᵐ,   x̃ = -ρ²ξ²,  ỹ = (1+ρ²)ξ.
//! ```
//!
//! Rearranging is only legitimate where the series converges absolutely.
//! Outside that region the truncated double sum grows without bound, and
//! because `x̃ < 0` its terms cancel massively: at `ρ = 0.8`, `ξ = 0.7`,
//! `N = 1000` the largest term is about `1e221` while the sum is about
//! `2.9e156`. The kernels therefore accumulate in [`BigFloat`] with a
//! working precision raised until an a-priori error bound certifies about
//! 60 correct bits of every reported value.

use std::cmp::Ordering;
use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::bigfloat::BigFloat;
use crate::domain::{check_series_variable, weierstrass_bound};
use crate::error::{Error, Result};
use crate::format;
use crate::perron::{classify_point, pp_radius, ConvergenceVerdict, Region};
use crate::recurrence::{check_open_modulus, LimitPair, WeierstrassParameters};

/// Bits of accuracy certified for every returned value.
const TARGET_BITS: i64 = 60;
const MAX_PRECISION: u64 = 1 << 18;

/// Orders tabulated in the divergence experiment.
pub const TABLE2_ORDERS: [usize; 12] = [10, 50, 100, 200, 300, 400, 500, 600, 700, 800, 900, 1000];
pub const TABLE2_RHO: f64 = 0.8;
pub const TABLE2_XI: f64 = 0.7;

/// Truncated double sum at modulus `rho`, series variable `xi` and order
/// `order` in each index.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DoubleSumSpec {
    pub rho: f64,
    pub xi: f64,
    pub order: usize,
}

impl DoubleSumSpec {
    pub fn new(rho: f64, xi: f64, order: usize) -> Result<Self> {
        check_finite("rho", rho)?;
        check_finite("xi", xi)?;
        Ok(DoubleSumSpec { rho, xi, order })
    }

    /// `x̃ = -ρ²ξ²`
    pub fn x_tilde(&self) -> f64 {
        x_tilde(self.rho, self.xi)
    }

    /// `ỹ = (1+ρ²)ξ`
    pub fn y_tilde(&self) -> f64 {
        y_tilde(self.rho, self.xi)
    }
}

fn x_tilde(rho: f64, xi: f64) -> f64 {
    let rho2 = rho * rho;
    -rho2 * xi * xi
}

fn y_tilde(rho: f64, xi: f64) -> f64 {
    (1.0 + rho * rho) * xi
}

fn check_finite(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::argument(name, value, "must be finite"))
    }
}

/// Partial result of one accumulation pass.
#[derive(Clone, Debug)]
struct Checkpoint {
    order: usize,
    sum: BigFloat,
    /// Sum of the terms added since the previous checkpoint.
    increment: BigFloat,
    /// `floor(log2)` of the largest term in `sum` and in `increment`.
    sum_term_log2: Option<i64>,
    increment_term_log2: Option<i64>,
    /// Terms contributing to `sum` and to `increment`.
    sum_terms: u64,
    increment_terms: u64,
}

/// Running accumulator that tracks what the error bound needs.
struct Accumulator {
    prec: u64,
    sum: BigFloat,
    increment: BigFloat,
    sum_term_log2: Option<i64>,
    increment_term_log2: Option<i64>,
    sum_terms: u64,
    increment_terms: u64,
}

impl Accumulator {
    fn new(prec: u64) -> Self {
        Accumulator {
            prec,
            sum: BigFloat::zero(),
            increment: BigFloat::zero(),
            sum_term_log2: None,
            increment_term_log2: None,
            sum_terms: 0,
            increment_terms: 0,
        }
    }

    fn add(&mut self, term: &BigFloat) {
        self.sum.add_assign(term, self.prec);
        self.increment.add_assign(term, self.prec);
        self.sum_terms += 1;
        self.increment_terms += 1;
        if let Some(t) = term.log2_floor() {
            self.sum_term_log2 = Some(self.sum_term_log2.map_or(t, |m| m.max(t)));
            self.increment_term_log2 = Some(self.increment_term_log2.map_or(t, |m| m.max(t)));
        }
    }

    fn checkpoint(&mut self, order: usize) -> Checkpoint {
        Checkpoint {
            order,
            sum: self.sum.clone(),
            increment: std::mem::replace(&mut self.increment, BigFloat::zero()),
            sum_term_log2: self.sum_term_log2,
            increment_term_log2: self.increment_term_log2.take(),
            sum_terms: self.sum_terms,
            increment_terms: std::mem::take(&mut self.increment_terms),
        }
    }
}

/// Row-major pass: outer `n` ascending, inner `m` ascending, with
/// `T(n,0) = x̃ⁿ` and `T(n,m) = T(n,m-1)·((n+m)/m)·ỹ`.
fn square_pass(x: &BigFloat, y: &BigFloat, order: usize, prec: u64) -> Checkpoint {
    let mut acc = Accumulator::new(prec);
    let mut row_head = BigFloat::one();
    for n in 0..=order {
        if n > 0 {
            row_head.mul_assign(x, prec);
        }
        let mut term = row_head.clone();
        acc.add(&term);
        for m in 1..=order {
            term.mul_ratio((n + m) as u64, m as u64, prec);
            term.mul_assign(y, prec);
            acc.add(&term);
        }
    }
    acc.checkpoint(order)
}

/// Shell-by-shell pass over `max(n, m) = 0, 1, 2, …`, so that every
/// requested order is a prefix of the same accumulation.
fn shell_pass(x: &BigFloat, y: &BigFloat, orders: &[usize], prec: u64) -> Vec<Checkpoint> {
    let max_order = orders.last().copied().unwrap_or(0);
    let mut acc = Accumulator::new(prec);
    let mut points = Vec::with_capacity(orders.len());
    let mut wanted = orders.iter().peekable();
    let mut x_pow = BigFloat::one();
    let mut y_pow = BigFloat::one();
    for shell in 0..=max_order {
        if shell == 0 {
            acc.add(&BigFloat::one());
        } else {
            x_pow.mul_assign(x, prec);
            y_pow.mul_assign(y, prec);
            // row n = shell, m = 0..=shell
            let mut term = x_pow.clone();
            acc.add(&term);
            for m in 1..=shell {
                term.mul_ratio((shell + m) as u64, m as u64, prec);
                term.mul_assign(y, prec);
                acc.add(&term);
            }
            // column m = shell, n = 0..shell
            let mut term = y_pow.clone();
            acc.add(&term);
            for n in 1..shell {
                term.mul_ratio((shell + n) as u64, n as u64, prec);
                term.mul_assign(x, prec);
                acc.add(&term);
            }
        }
        if wanted.peek() == Some(&&shell) {
            wanted.next();
            points.push(acc.checkpoint(shell));
        }
    }
    points
}

/// `ceil(log2)` of the error-bound multiplier for a value built from `terms`
/// terms, each reached through at most `3·order` roundings:
/// `|error| ≤ 2^(1-prec) · terms · (3·order + terms + 1) · max|term|`.
fn bound_overhead(order: usize, terms: u64) -> i64 {
    let terms = terms.max(1) as f64;
    let factor = terms * (3.0 * order as f64 + terms + 1.0);
    // +1 for the rounding slack, +1 because the max term is only known to floor(log2)
    factor.log2().ceil() as i64 + 2
}

fn initial_precision(max_order: usize) -> u64 {
    let terms = ((max_order + 1) * (max_order + 1)) as u64;
    (bound_overhead(max_order, terms) + TARGET_BITS + 64) as u64
}

/// Precision needed for one value, given how it came out at `prec`.
fn precision_for(value: &BigFloat, term_log2: Option<i64>, overhead: i64, prec: u64) -> u64 {
    let Some(term_log2) = term_log2 else {
        // no nonzero term: the value is exactly zero
        return prec;
    };
    let error_log2 = term_log2 + overhead - prec as i64;
    match value.log2_floor() {
        Some(value_log2) if error_log2 <= value_log2 - TARGET_BITS => prec,
        Some(value_log2) if error_log2 < value_log2 => {
            (term_log2 + overhead - value_log2 + TARGET_BITS + 8) as u64
        }
        _ => 2 * prec,
    }
}

fn required_precision(point: &Checkpoint, prec: u64) -> u64 {
    let sum = precision_for(
        &point.sum,
        point.sum_term_log2,
        bound_overhead(point.order, point.sum_terms),
        prec,
    );
    let increment = precision_for(
        &point.increment,
        point.increment_term_log2,
        bound_overhead(point.order, point.increment_terms),
        prec,
    );
    sum.max(increment)
}

/// Reruns `pass` at increasing precision until every checkpoint is certified.
fn certified<F>(max_order: usize, mut pass: F) -> Result<Vec<Checkpoint>>
where
    F: FnMut(u64) -> Vec<Checkpoint>,
{
    let mut prec = initial_precision(max_order);
    loop {
        let points = pass(prec);
        let needed = points
            .iter()
            .map(|p| required_precision(p, prec))
            .max()
            .unwrap_or(prec);
        if needed <= prec {
            return Ok(points);
        }
        if needed > MAX_PRECISION {
            return Err(Error::PrecisionExhausted {
                bits: MAX_PRECISION,
            });
        }
        prec = needed.max(prec + 32);
    }
}

fn finite_value(value: &BigFloat, order: usize) -> Result<f64> {
    let v = value.to_f64();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow { order })
    }
}

/// The truncated double sum over `0 ≤ n, m ≤ N`, rounded to `f64`.
///
/// Terms come from the factorial-free recursion along rows; no factorial or
/// binomial coefficient is ever formed.
pub fn double_sum(spec: &DoubleSumSpec) -> Result<f64> {
    let x = BigFloat::from_f64(spec.x_tilde());
    let y = BigFloat::from_f64(spec.y_tilde());
    let points = certified(spec.order, |prec| {
        vec![square_pass(&x, &y, spec.order, prec)]
    })?;
    finite_value(&points[0].sum, spec.order)
}

/// Double sums at several orders from one shell-ordered accumulation.
#[derive(Clone, Debug)]
pub struct DoubleSumSeries {
    rho: f64,
    xi: f64,
    points: Vec<Checkpoint>,
}

/// Evaluates the truncated double sum at every order in `orders` (any
/// order; duplicates are ignored).
pub fn double_sum_orders(rho: f64, xi: f64, orders: &[usize]) -> Result<DoubleSumSeries> {
    check_finite("rho", rho)?;
    check_finite("xi", xi)?;
    let mut orders = orders.to_vec();
    orders.sort_unstable();
    orders.dedup();
    let x = BigFloat::from_f64(x_tilde(rho, xi));
    let y = BigFloat::from_f64(y_tilde(rho, xi));
    let max_order = orders.last().copied().unwrap_or(0);
    let points = certified(max_order, |prec| shell_pass(&x, &y, &orders, prec))?;
    Ok(DoubleSumSeries { rho, xi, points })
}

impl DoubleSumSeries {
    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn orders(&self) -> Vec<usize> {
        self.points.iter().map(|p| p.order).collect()
    }

    fn point(&self, order: usize) -> Result<&Checkpoint> {
        self.points
            .iter()
            .find(|p| p.order == order)
            .ok_or_else(|| Error::argument("order", order as f64, "was not evaluated"))
    }

    pub fn value(&self, order: usize) -> Result<f64> {
        finite_value(&self.point(order)?.sum, order)
    }

    /// `log10 |value|`, available even when the value overflows `f64`.
    pub fn log10_abs(&self, order: usize) -> Result<Option<f64>> {
        Ok(self
            .point(order)?
            .sum
            .log2_abs()
            .map(|l| l * std::f64::consts::LOG10_2))
    }

    pub fn is_negative(&self, order: usize) -> Result<bool> {
        Ok(self.point(order)?.sum.is_negative())
    }

    /// Sign of `value(order) - value(previous evaluated order)`, decided from
    /// the separately certified increment rather than from the rounded
    /// values. `None` for the first evaluated order.
    pub fn step_sign(&self, order: usize) -> Result<Option<Ordering>> {
        let index = self
            .points
            .iter()
            .position(|p| p.order == order)
            .ok_or_else(|| Error::argument("order", order as f64, "was not evaluated"))?;
        if index == 0 {
            return Ok(None);
        }
        Ok(Some(
            self.points[index].increment.cmp_value(&BigFloat::zero()),
        ))
    }

    /// Every step between consecutive evaluated orders is an increase.
    pub fn is_strictly_increasing(&self) -> bool {
        self.points[1..]
            .iter()
            .all(|p| p.increment.cmp_value(&BigFloat::zero()) == Ordering::Greater)
    }
}

/// Closed form `1/(1 - Aξ - Bξ²)` of the limiting sequence's generating
/// function.
pub fn generating_value(limits: LimitPair, xi: f64) -> Result<f64> {
    check_finite("xi", xi)?;
    let linear = limits.linear * xi;
    let quadratic = limits.quadratic * xi * xi;
    let denominator = 1.0 - linear - quadratic;
    let scale = 1.0 + linear.abs() + quadratic.abs();
    if denominator.abs() <= 8.0 * f64::EPSILON * scale {
        return Err(Error::Pole { xi, denominator });
    }
    Ok(1.0 / denominator)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExperimentRow {
    pub order: usize,
    pub value: f64,
}

/// The divergence table: double sums at `ρ = 0.8`, `ξ = 0.7`.
pub fn run_table2() -> Result<Vec<ExperimentRow>> {
    let series = double_sum_orders(TABLE2_RHO, TABLE2_XI, &TABLE2_ORDERS)?;
    TABLE2_ORDERS
        .iter()
        .map(|&order| {
            Ok(ExperimentRow {
                order,
                value: series.value(order)?,
            })
        })
        .collect()
}

/// `N,value` with six significant figures.
pub fn write_table2_csv<W: Write>(rows: &[ExperimentRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "N,value")?;
    for row in rows {
        writeln!(out, "{},{}", row.order, format::general(row.value, 6))?;
    }
    Ok(())
}

pub fn write_table2_file(rows: &[ExperimentRow], out: &Path) -> Result<()> {
    write_csv_file(out, |w| write_table2_csv(rows, w))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DomainRow {
    pub rho: f64,
    /// Absolute-convergence bound on `sn²`.
    pub s_star: f64,
    /// Ratio-test bound on `sn²`.
    pub s_pp: f64,
}

/// `steps` interior grid points `ρ_i = i/(steps+1)`, ascending.
pub fn domain_scan(steps: usize) -> Result<Vec<DomainRow>> {
    if steps < 2 {
        return Err(Error::argument("steps", steps as f64, "must be at least 2"));
    }
    (1..=steps)
        .map(|i| {
            let rho = i as f64 / (steps + 1) as f64;
            Ok(DomainRow {
                rho,
                s_star: weierstrass_bound(rho)?,
                s_pp: pp_radius(LimitPair::weierstrass(rho))?,
            })
        })
        .collect()
}

/// `rho,s_star,s_pp` in `%.6e`.
pub fn write_domain_csv<W: Write>(rows: &[DomainRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "rho,s_star,s_pp")?;
    for row in rows {
        writeln!(
            out,
            "{},{},{}",
            format::sci(row.rho, 6),
            format::sci(row.s_star, 6),
            format::sci(row.s_pp, 6)
        )?;
    }
    Ok(())
}

pub fn run_domain_scan(steps: usize, out: &Path) -> Result<Vec<DomainRow>> {
    let rows = domain_scan(steps)?;
    write_csv_file(out, |w| write_domain_csv(&rows, w))?;
    Ok(rows)
}

fn write_csv_file<F>(path: &Path, write: F) -> Result<()>
where
    F: FnOnce(&mut BufWriter<File>) -> std::io::Result<()>,
{
    let io_error = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io_error)?;
    let mut writer = BufWriter::new(file);
    write(&mut writer).map_err(io_error)?;
    writer.flush().map_err(io_error)
}

/// Order at which the closed form and the double sum are compared.
pub const COMPARE_ORDER: usize = 200;
/// Orders whose ratio decides whether the double sum is blowing up.
pub const GROWTH_ORDERS: [usize; 2] = [100, 200];

/// Growth of the double sum between the two [`GROWTH_ORDERS`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GrowthCheck {
    pub log10_low: Option<f64>,
    pub log10_high: Option<f64>,
    /// `|value(200)| / |value(100)| > 10`.
    pub diverging: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompareReport {
    pub rho: f64,
    pub xi: f64,
    pub limits: LimitPair,
    pub verdict: ConvergenceVerdict,
    /// Closed form and double sum at [`COMPARE_ORDER`], inside the
    /// absolute-convergence domain only.
    pub closed_form: Option<f64>,
    pub double_sum: Option<f64>,
    pub abs_difference: Option<f64>,
    /// Outside the absolute-convergence domain only.
    pub growth: Option<GrowthCheck>,
}

/// Classifies `ξ` for modulus `ρ` and backs the verdict with the double sum.
pub fn run_compare(rho: f64, xi: f64) -> Result<CompareReport> {
    check_open_modulus(rho)?;
    check_series_variable(xi)?;
    let limits = WeierstrassParameters::new(rho, 0.0, 0.0)?
        .to_algebraic()?
        .limits()?;
    let verdict = classify_point(limits, xi)?;
    let mut report = CompareReport {
        rho,
        xi,
        limits,
        verdict,
        closed_form: None,
        double_sum: None,
        abs_difference: None,
        growth: None,
    };
    if verdict.region == Region::AbsolutelyConvergent {
        let closed = generating_value(limits, xi)?;
        let partial = double_sum(&DoubleSumSpec::new(rho, xi, COMPARE_ORDER)?)?;
        report.closed_form = Some(closed);
        report.double_sum = Some(partial);
        report.abs_difference = Some((closed - partial).abs());
    } else {
        let series = double_sum_orders(rho, xi, &GROWTH_ORDERS)?;
        let low = series.log10_abs(GROWTH_ORDERS[0])?;
        let high = series.log10_abs(GROWTH_ORDERS[1])?;
        let diverging = match (low, high) {
            (Some(l), Some(h)) => h - l > 1.0,
            (None, Some(_)) => true,
            _ => false,
        };
        report.growth = Some(GrowthCheck {
            log10_low: low,
            log10_high: high,
            diverging,
        });
    }
    Ok(report)
}

impl fmt::Display for CompareReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rho,{}", format::sci(self.rho, 6))?;
        writeln!(f, "xi,{}", format::sci(self.xi, 6))?;
        writeln!(f, "r_star,{}", format::sci(self.verdict.r_star, 6))?;
        writeln!(f, "r_pp,{}", format::sci(self.verdict.r_pp, 6))?;
        writeln!(f, "verdict,{}", self.verdict.region)?;
        if let (Some(closed), Some(partial), Some(diff)) =
            (self.closed_form, self.double_sum, self.abs_difference)
        {
            writeln!(f, "closed_form,{}", format::sci(closed, 6))?;
            writeln!(f, "double_sum_n{COMPARE_ORDER},{}", format::sci(partial, 6))?;
            writeln!(f, "abs_difference,{}", format::sci(diff, 6))?;
        }
        if let Some(growth) = self.growth {
            let show = |v: Option<f64>| v.map_or("-inf".to_string(), |l| format!("{l:.3}"));
            writeln!(
                f,
                "log10_double_sum_n{},{}",
                GROWTH_ORDERS[0],
                show(growth.log10_low)
            )?;
            writeln!(
                f,
                "log10_double_sum_n{},{}",
                GROWTH_ORDERS[1],
                show(growth.log10_high)
            )?;
            writeln!(
                f,
                "double_sum,{}",
                if growth.diverging {
                    "divergent"
                } else {
                    "bounded"
                }
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    #[test]
    fn spec_derives_tilde_variables() {
        let s = DoubleSumSpec::new(0.8, 0.7, 10).unwrap();
        assert!((s.x_tilde() + 0.3136).abs() < 1e-15);
        assert!((s.y_tilde() - 1.148).abs() < 1e-15);
        assert!(DoubleSumSpec::new(f64::NAN, 0.7, 10).is_err());
    }

    #[test]
    fn trivial_orders() {
        // N = 0: only T(0,0) = 1
        assert_eq!(
            double_sum(&DoubleSumSpec::new(0.8, 0.7, 0).unwrap()).unwrap(),
            1.0
        );
        // N = 1: 1 + x + y + 2xy
        let s = DoubleSumSpec::new(0.8, 0.7, 1).unwrap();
        let (x, y) = (s.x_tilde(), s.y_tilde());
        let expected = 1.0 + x + y + 2.0 * x * y;
        assert!((double_sum(&s).unwrap() - expected).abs() < 1e-15);
        // ξ = 0 kills every term but the first
        assert_eq!(
            double_sum(&DoubleSumSpec::new(0.8, 0.0, 50).unwrap()).unwrap(),
            1.0
        );
    }

    #[test]
    fn shell_and_row_orders_agree() {
        let series = double_sum_orders(0.8, 0.7, &[10, 37, 100]).unwrap();
        for order in [10, 37, 100] {
            let direct = double_sum(&DoubleSumSpec::new(0.8, 0.7, order).unwrap()).unwrap();
            let shell = series.value(order).unwrap();
            assert!((direct - shell).abs() <= 4.0 * f64::EPSILON * direct.abs());
        }
        assert!(series.value(11).is_err());
        assert_eq!(series.orders(), vec![10, 37, 100]);
    }

    #[test]
    fn overflow_is_reported() {
        // terms grow like (4|x̃|ỹ)^N ≈ 40^N
        let spec = DoubleSumSpec::new(0.8, 1.5, 400).unwrap();
        assert!(matches!(
            double_sum(&spec),
            Err(Error::Overflow { order: 400 })
        ));
        let series = double_sum_orders(0.8, 1.5, &[400]).unwrap();
        assert!(series.log10_abs(400).unwrap().unwrap() > 308.0);
    }

    #[test]
    fn generating_value_cases() {
        let l = LimitPair::new(1.64, -0.64);
        assert!((generating_value(l, 0.3).unwrap() - 1.0 / 0.5656).abs() < 1e-15);
        assert_eq!(
            generating_value(LimitPair::new(3.0, 7.0), 0.0).unwrap(),
            1.0
        );
        assert!(matches!(generating_value(l, 1.0), Err(Error::Pole { .. })));
        assert!(matches!(
            generating_value(l, 1.5625),
            Err(Error::Pole { .. })
        ));
    }

    #[test]
    fn domain_grid() {
        let rows = domain_scan(2).unwrap();
        assert_eq!(rows.len(), 2);
        assert!((rows[0].rho - 1.0 / 3.0).abs() < 1e-16);
        assert!((rows[1].rho - 2.0 / 3.0).abs() < 1e-16);
        assert!(domain_scan(1).is_err());

        let rows = domain_scan(9).unwrap();
        let row = rows.iter().find(|r| (r.rho - 0.8).abs() < 1e-12).unwrap();
        let mut buf = Vec::new();
        write_domain_csv(&[*row], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "rho,s_star,s_pp\n8.000000e-01,5.087504e-01,1.000000e+00\n"
        );
        assert!(rows.iter().all(|r| r.s_star < r.s_pp));
        assert!(rows.windows(2).all(|w| w[0].rho < w[1].rho));
    }

    #[test]
    fn table_csv_layout() {
        let rows = [
            ExperimentRow {
                order: 10,
                value: 8.9717419964653545,
            },
            ExperimentRow {
                order: 1000,
                value: 2.9061767621691515e156,
            },
        ];
        let mut buf = Vec::new();
        write_table2_csv(&rows, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "N,value\n10,8.97174\n1000,2.90618e+156\n"
        );
    }

    #[test]
    fn io_errors_carry_the_path() {
        let missing = Path::new("/nonexistent-dir/for/scan.csv");
        match run_domain_scan(3, missing) {
            Err(Error::Io { path, .. }) => assert_eq!(path, missing),
            other => panic!("expected an I/O error, got {other:?}"),
        }
    }

    #[test]
    fn compare_inside_the_domain() {
        let report = run_compare(0.8, 0.3).unwrap();
        assert_eq!(report.verdict.region, Region::AbsolutelyConvergent);
        assert!(report.abs_difference.unwrap() < 1e-6);
        assert!(report.growth.is_none());
        let text = report.to_string();
        assert!(text.contains("verdict,AbsolutelyConvergent"));
    }

    #[test]
    fn compare_outside_the_domain() {
        let report = run_compare(0.8, 0.7).unwrap();
        assert_eq!(report.verdict.region, Region::ConditionalRegion);
        assert!(report.growth.unwrap().diverging);
        assert!(report.to_string().contains("double_sum,divergent"));

        let report = run_compare(0.8, 1.5).unwrap();
        assert_eq!(report.verdict.region, Region::Divergent);
        assert!(report.growth.unwrap().diverging);

        assert!(run_compare(1.2, 0.3).is_err());
        assert!(run_compare(0.8, -0.3).is_err());
    }
}
