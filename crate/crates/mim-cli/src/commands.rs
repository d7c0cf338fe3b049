//! Command implementations, kept free of argument parsing and process I/O
//! so they can be exercised directly by tests.

use crate::table::{format_value, SweepTable};
use mim::bayes::{bayes_error_oracle_binary, chernoff_bound_gaussian, shared_beta, GaussianHypothesis};
use mim::coefficient::{theorem1_threshold, theorem2_threshold, theorem3_threshold, ThresholdRule};
use mim::distributions::Distribution;
use mim::measures::{
    mim, mim_asymptote, mim_lower_bound, renyi, shannon, ImportanceCoefficient, RenyiOrder,
};
use mim::prior::{balanced_importance_residual, estimate_prior, select_omega, PriorBounds};
use mim::{MimError, Result};
use serde_json::json;

/// The five-point example distribution used by the `fig 3` preset. Its raw
/// entries sum to 1.0001 and must be normalized before use.
pub const FIVE_POINT_EXAMPLE: [f64; 5] = [0.0925, 0.3156, 0.3887, 0.1484, 0.0549];

/// Figure presets: the binary sweep over ω, the binary sweep over p₀, and
/// the five-point selection sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureKind {
    OmegaSweepBinary,
    ProbabilitySweepBinary,
    OmegaSweepFivePoint,
}

/// Arithmetic grid a, a+step, …, capped at b (inclusive up to a tiny
/// tolerance so that b itself is kept when it lands on the grid).
fn arithmetic_grid(a: f64, b: f64, step: f64) -> Vec<f64> {
    let mut grid = Vec::new();
    let mut k = 0u64;
    loop {
        let v = a + k as f64 * step;
        if v > b + step * 1e-9 {
            break;
        }
        grid.push(v);
        k += 1;
    }
    grid
}

fn check_range(name: &'static str, lo: f64, hi: f64, step: f64) -> Result<()> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(MimError::OutOfRange {
            name,
            value: hi,
            range: "a finite interval with lower < upper",
        });
    }
    if !(step > 0.0 && step.is_finite()) {
        return Err(MimError::OutOfRange {
            name: "step",
            value: step,
            range: "(0, inf)",
        });
    }
    Ok(())
}

fn dist_meta(d: &Distribution) -> String {
    let parts: Vec<String> = d.probs().iter().map(|p| format_value(*p)).collect();
    parts.join(",")
}

fn rule_name(rule: ThresholdRule) -> &'static str {
    match rule {
        ThresholdRule::Theorem1 => "theorem1",
        ThresholdRule::Theorem2 => "theorem2",
        ThresholdRule::Theorem3 => "theorem3",
    }
}

/// Point evaluation: the measure and its companion quantities as one flat
/// JSON object.
pub fn cmd_eval(d: &Distribution, omega_value: f64, alpha: f64) -> Result<serde_json::Value> {
    let w = ImportanceCoefficient::new(omega_value)?;
    let order = RenyiOrder::new(alpha)?;
    Ok(json!({
        "n": d.len(),
        "omega": omega_value,
        "alpha": alpha,
        "mim": mim(d, w),
        "shannon": shannon(d),
        "renyi": renyi(d, order),
        "lower_bound": mim_lower_bound(d, w),
        "asymptote": mim_asymptote(d, w),
    }))
}

fn fill_omega_sweep(table: &mut SweepTable, d: &Distribution, grid: &[f64]) -> Result<()> {
    let uniform = Distribution::uniform(d.len())?;
    for &omega_value in grid {
        let w = ImportanceCoefficient::new(omega_value)?;
        table.push_row(vec![
            omega_value,
            mim(d, w),
            mim(&uniform, w),
            mim_lower_bound(d, w),
            mim_asymptote(d, w),
        ]);
    }
    Ok(())
}

fn omega_sweep_table(
    command: &str,
    extra_meta: &[(&str, String)],
    d: &Distribution,
    lo: f64,
    hi: f64,
    step: f64,
) -> Result<SweepTable> {
    check_range("omega range", lo, hi, step)?;
    if lo < 0.0 {
        return Err(MimError::OutOfRange {
            name: "omega range",
            value: lo,
            range: "[0, inf)",
        });
    }
    let mut table = SweepTable::new(&["omega", "mim", "mim_uniform", "lower_bound", "asymptote"]);
    table.push_meta("command", command);
    for (k, v) in extra_meta {
        table.push_meta(k, v.clone());
    }
    table.push_meta("dist", dist_meta(d));
    table.push_meta("n", d.len().to_string());
    table.push_meta_value("omega_min", lo);
    table.push_meta_value("omega_max", hi);
    table.push_meta_value("step", step);
    // The sufficient threshold is the natural vertical marker for plots;
    // uniform inputs simply have none.
    if let Ok(report) = theorem1_threshold(d) {
        table.push_meta_value("theorem1_threshold", report.threshold);
    }
    fill_omega_sweep(&mut table, d, &arithmetic_grid(lo, hi, step))?;
    Ok(table)
}

/// Sweep of the measure over ω against the uniform baseline, the lower
/// bound, and the large-ω asymptote.
pub fn cmd_sweep_omega(d: &Distribution, lo: f64, hi: f64, step: f64) -> Result<SweepTable> {
    omega_sweep_table("sweep-omega", &[], d, lo, hi, step)
}

/// Sweep of the binary measure over the minority probability p₀ at fixed ω.
pub fn cmd_sweep_p(omega_value: f64, lo: f64, hi: f64, step: f64) -> Result<SweepTable> {
    check_range("p range", lo, hi, step)?;
    if !(lo > 0.0 && hi < 1.0) {
        return Err(MimError::OutOfRange {
            name: "p range",
            value: lo.min(hi),
            range: "the open interval (0, 1)",
        });
    }
    let w = ImportanceCoefficient::new(omega_value)?;
    let uniform = Distribution::uniform(2)?;
    let uniform_value = mim(&uniform, w);
    let mut table = SweepTable::new(&["p0", "mim_bernoulli", "mim_uniform_binary"]);
    table.push_meta("command", "sweep-p");
    table.push_meta_value("omega", omega_value);
    table.push_meta_value("p_min", lo);
    table.push_meta_value("p_max", hi);
    table.push_meta_value("step", step);
    for p in arithmetic_grid(lo, hi, step) {
        let d = Distribution::bernoulli(p)?;
        table.push_row(vec![p, mim(&d, w), uniform_value]);
    }
    Ok(table)
}

/// Coefficient selection by one of the three threshold rules.
///
/// `theorem2` scores a caller-chosen candidate probability `p_s`; the other
/// rules derive their witness from the distribution itself.
pub fn cmd_select_omega(
    d: &Distribution,
    rule: ThresholdRule,
    p_s: Option<f64>,
) -> Result<serde_json::Value> {
    let n = d.len();
    let (threshold, witness, binary_extension) = match rule {
        ThresholdRule::Theorem1 => {
            let r = theorem1_threshold(d)?;
            (r.threshold, r.witness_prob, r.binary_extension)
        }
        ThresholdRule::Theorem3 => {
            let r = theorem3_threshold(d)?;
            (r.threshold, r.witness_prob, r.binary_extension)
        }
        ThresholdRule::Theorem2 => {
            let p_s = p_s.ok_or(MimError::OutOfRange {
                name: "p_s",
                value: f64::NAN,
                range: "required for rule theorem2",
            })?;
            (theorem2_threshold(p_s, n)?, p_s, n == 2)
        }
    };
    Ok(json!({
        "n": n,
        "rule": rule_name(rule),
        "threshold": threshold,
        "witness_prob": witness,
        "binary_extension": binary_extension,
    }))
}

/// Two-step minority-prior estimation from interval bounds: pick ω so the
/// endpoints carry equal importance weight, then read the prior off as 1/ω.
pub fn cmd_estimate_prior(lower: f64, upper: f64) -> Result<serde_json::Value> {
    let bounds = PriorBounds::new(lower, upper)?;
    let (omega_value, p_hat, residual) = if lower == upper {
        // Limit of the balancing equation as the interval collapses.
        (1.0 / upper, upper, 0.0)
    } else {
        let w = select_omega(&bounds)?;
        (
            w.value(),
            estimate_prior(&bounds),
            balanced_importance_residual(&bounds, w),
        )
    };
    Ok(json!({
        "lower": lower,
        "upper": upper,
        "omega": omega_value,
        "p_hat": p_hat,
        "residual": residual,
    }))
}

/// Chernoff bound and exact error for the equal-sigma binary Gaussian test.
pub fn cmd_chernoff(omega0: f64, mu0: f64, mu1: f64, sigma: f64) -> Result<serde_json::Value> {
    let h0 = GaussianHypothesis::new(mu0, sigma)?;
    let h1 = GaussianHypothesis::new(mu1, sigma)?;
    let beta = shared_beta(h0, h1)?;
    let exponent = mim::bayes::chernoff_exponent_gaussian(omega0, beta)?;
    let bound = chernoff_bound_gaussian(omega0, h0, h1)?;
    let oracle = bayes_error_oracle_binary(omega0, h0, h1)?;
    Ok(json!({
        "omega0": omega0,
        "mu0": mu0,
        "mu1": mu1,
        "sigma": sigma,
        "beta": beta,
        "alpha": exponent.alpha,
        "clamped": exponent.clamped,
        "bound": bound,
        "bayes_error": oracle,
    }))
}

/// Figure presets. Each is a fixed, fully deterministic table.
pub fn cmd_fig(which: FigureKind) -> Result<SweepTable> {
    match which {
        FigureKind::OmegaSweepBinary => {
            let d = Distribution::bernoulli(0.1)?;
            omega_sweep_table("fig", &[("which", "1a".into())], &d, 0.0, 12.0, 0.01)
        }
        FigureKind::ProbabilitySweepBinary => fig_probability_sweep(),
        FigureKind::OmegaSweepFivePoint => {
            let d = Distribution::normalized(&FIVE_POINT_EXAMPLE)?;
            omega_sweep_table("fig", &[("which", "3".into())], &d, 0.0, 40.0, 0.01)
        }
    }
}

fn fig_probability_sweep() -> Result<SweepTable> {
    // Small and large coefficients bracketing the crossover, so the sweep
    // shows the measure below the uniform baseline on one curve and above
    // it on the other.
    let (w_small, w_large) = (
        ImportanceCoefficient::new(1.0)?,
        ImportanceCoefficient::new(20.0)?,
    );
    let uniform = Distribution::uniform(2)?;
    let mut table = SweepTable::new(&[
        "p0",
        "mim_omega_1",
        "mim_omega_20",
        "mim_uniform_omega_1",
        "mim_uniform_omega_20",
    ]);
    table.push_meta("command", "fig");
    table.push_meta("which", "1b");
    table.push_meta_value("omega_small", 1.0);
    table.push_meta_value("omega_large", 20.0);
    table.push_meta_value("p_min", 0.01);
    table.push_meta_value("p_max", 0.99);
    table.push_meta_value("step", 0.01);
    let (u_small, u_large) = (mim(&uniform, w_small), mim(&uniform, w_large));
    for p in arithmetic_grid(0.01, 0.99, 0.01) {
        let d = Distribution::bernoulli(p)?;
        table.push_row(vec![p, mim(&d, w_small), mim(&d, w_large), u_small, u_large]);
    }
    Ok(table)
}
