use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lame_core::experiment::{write_domain_csv, write_table2_csv, write_table2_file};
use lame_core::format::sci;
use lame_core::{
    classify_algebraic, classify_point, generating_value, pp_radius, run_compare, run_domain_scan,
    run_table2, weierstrass_bound, AlgebraicParameters, CoefficientSequence, DomainRow, Error,
    IndicialExponent, LimitPair, WeierstrassParameters,
};

const EXIT_INVALID: u8 = 2;
const EXIT_IO: u8 = 3;

/// Convergence diagnostics for power-series solutions of the Lamé equation.
#[derive(Parser)]
#[command(name = "lame", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Radius of absolute convergence.
    #[command(subcommand)]
    Radius(RadiusCommand),
    /// Evaluate a truncated Frobenius series.
    #[command(subcommand)]
    Series(SeriesCommand),
    /// Reproduce the double-sum divergence table.
    #[command(subcommand)]
    Experiment(ExperimentCommand),
    /// Scan the convergence bounds over the modulus.
    #[command(subcommand)]
    Domain(DomainCommand),
    /// Classify a point and compare the closed form with the double sum.
    Compare {
        #[arg(long, allow_hyphen_values = true)]
        rho: f64,
        #[arg(long, allow_hyphen_values = true)]
        xi: f64,
    },
}

#[derive(Subcommand)]
enum RadiusCommand {
    /// Algebraic form, expansion about `a`.
    Algebraic {
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        b: f64,
        #[arg(long, allow_hyphen_values = true)]
        c: f64,
    },
    /// Weierstrass form with modulus `rho`.
    Weierstrass {
        #[arg(long, allow_hyphen_values = true)]
        rho: f64,
    },
}

#[derive(Subcommand)]
enum SeriesCommand {
    Eval(EvalArgs),
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, allow_hyphen_values = true)]
    rho: f64,
    /// Series variable, `sn²` of the Weierstrass argument.
    #[arg(long, allow_hyphen_values = true)]
    xi: f64,
    /// Accessory parameter of the algebraic form.
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    q: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    alpha: f64,
    /// Indicial exponent: 0 or 1/2.
    #[arg(long, value_parser = parse_exponent)]
    lambda: IndicialExponent,
    #[arg(long, default_value_t = 200)]
    n_max: usize,
}

#[derive(Subcommand)]
enum ExperimentCommand {
    Table2 {
        /// Write the CSV here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum DomainCommand {
    Scan {
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_exponent(text: &str) -> Result<IndicialExponent, String> {
    let value = match text.trim() {
        "1/2" => 0.5,
        other => other.parse::<f64>().map_err(|e| e.to_string())?,
    };
    IndicialExponent::try_from(value).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help and version exit 0, usage errors exit 2
            err.exit();
        }
    };
    let mut stdout = io::stdout().lock();
    match run(cli.command, &mut stdout) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Io { .. } => ExitCode::from(EXIT_IO),
                _ => ExitCode::from(EXIT_INVALID),
            }
        }
    }
}

fn stdout_error(source: io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<stdout>"),
        source,
    }
}

fn run(command: Command, out: &mut impl Write) -> lame_core::Result<()> {
    match command {
        Command::Radius(RadiusCommand::Algebraic { a, b, c }) => {
            let case = classify_algebraic(&AlgebraicParameters::new(a, b, c, 0.0, 0.0))?;
            writeln!(out, "case,radius").map_err(stdout_error)?;
            writeln!(out, "{},{}", case.tag.name(), sci(case.radius, 6)).map_err(stdout_error)
        }
        Command::Radius(RadiusCommand::Weierstrass { rho }) => {
            let row = DomainRow {
                rho,
                s_star: weierstrass_bound(rho)?,
                s_pp: pp_radius(LimitPair::weierstrass(rho))?,
            };
            write_domain_csv(&[row], out).map_err(stdout_error)
        }
        Command::Series(SeriesCommand::Eval(args)) => eval_series(&args, out),
        Command::Experiment(ExperimentCommand::Table2 { out: path }) => {
            let rows = run_table2()?;
            match path {
                Some(path) => write_table2_file(&rows, &path),
                None => write_table2_csv(&rows, out).map_err(stdout_error),
            }
        }
        Command::Domain(DomainCommand::Scan { steps, out: path }) => {
            run_domain_scan(steps, &path).map(|_| ())
        }
        Command::Compare { rho, xi } => {
            let report = run_compare(rho, xi)?;
            write!(out, "{report}").map_err(stdout_error)
        }
    }
}

fn eval_series(args: &EvalArgs, out: &mut impl Write) -> lame_core::Result<()> {
    let weierstrass = WeierstrassParameters::new(args.rho, args.alpha, 0.0)?;
    let params = AlgebraicParameters {
        accessory: args.q,
        ..weierstrass.to_algebraic()?
    };
    let limits = params.limits()?;
    let sequence = CoefficientSequence::generate(&params, args.lambda, args.n_max)?;
    let asymptotic = CoefficientSequence::asymptotic(limits, args.n_max)?;
    let verdict = classify_point(limits, args.xi)?;

    let mut lines = vec![
        ("rho", sci(args.rho, 6)),
        ("xi", sci(args.xi, 6)),
        ("q", sci(args.q, 6)),
        ("alpha", sci(args.alpha, 6)),
        ("lambda", sci(args.lambda.value(), 6)),
        ("n_max", args.n_max.to_string()),
        ("partial_sum", sci(sequence.partial_sum(args.xi)?, 6)),
        (
            "asymptotic_partial_sum",
            sci(asymptotic.partial_sum(args.xi)?, 6),
        ),
    ];
    if let Ok(closed) = generating_value(limits, args.xi) {
        lines.push(("asymptotic_closed_form", sci(closed, 6)));
    }
    lines.push(("r_star", sci(verdict.r_star, 6)));
    lines.push(("r_pp", sci(verdict.r_pp, 6)));
    lines.push(("verdict", verdict.region.to_string()));

    writeln!(out, "key,value").map_err(stdout_error)?;
    for (key, value) in lines {
        writeln!(out, "{key},{value}").map_err(stdout_error)?;
    }
    Ok(())
}
