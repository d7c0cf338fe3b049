//! `mim` — command-line front end for the message importance measure
//! toolkit: point evaluation, figure sweeps, coefficient selection, prior
//! estimation, decision-error bounds, and the prior-mismatch experiment.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mim::bayes::GaussianHypothesis;
use mim::coefficient::ThresholdRule;
use mim::distributions::Distribution;
use mim::prior::PriorBounds;
use mim_cli::table::SweepTable;
use mim_cli::{commands, parse_range, worstcase, CliError};

#[derive(Parser)]
#[command(
    name = "mim",
    version,
    about = "Message importance measure toolkit",
    long_about = "Evaluates the message importance measure \
                  L(p, omega) = ln sum_i p_i exp{omega (1 - p_i)}, selects its \
                  importance coefficient, estimates minority priors, and bounds \
                  Bayes decision errors."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    Theorem1,
    Theorem2,
    Theorem3,
}

impl From<Rule> for ThresholdRule {
    fn from(rule: Rule) -> Self {
        match rule {
            Rule::Theorem1 => ThresholdRule::Theorem1,
            Rule::Theorem2 => ThresholdRule::Theorem2,
            Rule::Theorem3 => ThresholdRule::Theorem3,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Figure {
    #[value(name = "1a")]
    OneA,
    #[value(name = "1b")]
    OneB,
    #[value(name = "3")]
    Three,
}

impl From<Figure> for commands::FigureKind {
    fn from(which: Figure) -> Self {
        match which {
            Figure::OneA => commands::FigureKind::OmegaSweepBinary,
            Figure::OneB => commands::FigureKind::ProbabilitySweepBinary,
            Figure::Three => commands::FigureKind::OmegaSweepFivePoint,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the measure and companion quantities on one distribution
    Eval {
        /// Comma-separated probabilities, e.g. 0.1,0.9
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        dist: Vec<f64>,
        /// Importance coefficient (non-negative)
        #[arg(long)]
        omega: f64,
        /// Renyi order reported alongside (any positive value except 1)
        #[arg(long, default_value_t = 2.0)]
        alpha: f64,
        /// Rescale the input to sum to one before validating
        #[arg(long)]
        normalize: bool,
        /// Write to this path instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep the measure over omega against the uniform baseline
    SweepOmega {
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        dist: Vec<f64>,
        /// Sweep range as min:max:step, e.g. 0:12:0.01
        #[arg(long)]
        range: String,
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Sweep the binary measure over the minority probability p0
    SweepP {
        /// Importance coefficient (non-negative)
        #[arg(long)]
        omega: f64,
        /// Sweep range as min:max:step inside (0, 1)
        #[arg(long)]
        range: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Select the importance coefficient by a threshold rule
    SelectOmega {
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        dist: Vec<f64>,
        #[arg(long, value_enum, default_value_t = Rule::Theorem3)]
        rule: Rule,
        /// Candidate probability, required by rule theorem2
        #[arg(long)]
        p_s: Option<f64>,
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Estimate a minority prior from interval bounds
    EstimatePrior {
        /// Lower prior bound in (0, 0.5)
        #[arg(long)]
        lower: f64,
        /// Upper prior bound in (0, 0.5)
        #[arg(long)]
        upper: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chernoff bound and exact error for a binary Gaussian test
    Chernoff {
        /// Prior of the first hypothesis, in (0, 1)
        #[arg(long)]
        omega0: f64,
        #[arg(long, allow_negative_numbers = true)]
        mu0: f64,
        #[arg(long, allow_negative_numbers = true)]
        mu1: f64,
        /// Common standard deviation (positive)
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare worst-case, estimated, and ideal prior plug-in rules
    CompareWorstcase {
        /// Lower prior bound in (0, 0.5)
        #[arg(long)]
        lower: f64,
        /// Upper prior bound in (0, 0.5)
        #[arg(long)]
        upper: f64,
        #[arg(long, allow_negative_numbers = true)]
        mu0: f64,
        #[arg(long, allow_negative_numbers = true)]
        mu1: f64,
        /// Common standard deviation (positive)
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        /// Number of grid points over [lower, upper]
        #[arg(long, default_value_t = 50)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Emit a preset figure table (1a, 1b, or 3)
    Fig {
        #[arg(long, value_enum)]
        which: Figure,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

fn build_dist(values: &[f64], normalize: bool) -> Result<Distribution, CliError> {
    let d = if normalize {
        Distribution::normalized(values)
    } else {
        Distribution::new(values)
    };
    Ok(d?)
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn emit_json(value: &serde_json::Value, out: Option<&Path>) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Usage(format!("serialization failure: {e}")))?;
    text.push('\n');
    emit(&text, out)
}

fn emit_table(table: &SweepTable, format: Format, out: Option<&Path>) -> Result<(), CliError> {
    match format {
        Format::Csv => emit(&table.to_csv(), out),
        Format::Json => emit_json(&table.to_json(), out),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Eval {
            dist,
            omega,
            alpha,
            normalize,
            out,
        } => {
            let d = build_dist(&dist, normalize)?;
            emit_json(&commands::cmd_eval(&d, omega, alpha)?, out.as_deref())
        }
        Command::SweepOmega {
            dist,
            range,
            normalize,
            out,
            format,
        } => {
            let d = build_dist(&dist, normalize)?;
            let (lo, hi, step) = parse_range(&range)?;
            let table = commands::cmd_sweep_omega(&d, lo, hi, step)?;
            emit_table(&table, format, out.as_deref())
        }
        Command::SweepP {
            omega,
            range,
            out,
            format,
        } => {
            let (lo, hi, step) = parse_range(&range)?;
            let table = commands::cmd_sweep_p(omega, lo, hi, step)?;
            emit_table(&table, format, out.as_deref())
        }
        Command::SelectOmega {
            dist,
            rule,
            p_s,
            normalize,
            out,
        } => {
            let d = build_dist(&dist, normalize)?;
            emit_json(
                &commands::cmd_select_omega(&d, rule.into(), p_s)?,
                out.as_deref(),
            )
        }
        Command::EstimatePrior { lower, upper, out } => {
            emit_json(&commands::cmd_estimate_prior(lower, upper)?, out.as_deref())
        }
        Command::Chernoff {
            omega0,
            mu0,
            mu1,
            sigma,
            out,
        } => emit_json(
            &commands::cmd_chernoff(omega0, mu0, mu1, sigma)?,
            out.as_deref(),
        ),
        Command::CompareWorstcase {
            lower,
            upper,
            mu0,
            mu1,
            sigma,
            points,
            out,
            format,
        } => {
            let bounds = PriorBounds::new(lower, upper)?;
            let h0 = GaussianHypothesis::new(mu0, sigma)?;
            let h1 = GaussianHypothesis::new(mu1, sigma)?;
            let table = worstcase::compare_table(&bounds, h0, h1, points)?;
            emit_table(&table, format, out.as_deref())
        }
        Command::Fig { which, out, format } => {
            let table = commands::cmd_fig(which.into())?;
            emit_table(&table, format, out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
