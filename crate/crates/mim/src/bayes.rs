//! Decision-error machinery for Gaussian hypothesis testing with a rare
//! (minority) class: the exact Bayes error by quadrature, the Chernoff-style
//! exponential bound K(α), and the M-ary minority-vs-mixture bound.
//!
//! For equal-σ binary Gaussians with priors (ω₀, ω₁ = 1 − ω₀) and
//! β = (μ₀ − μ₁)²/(2σ²):
//!
//! ```text
//! K(α)  = α ln ω₀ + (1−α) ln ω₁ − α(1−α)β,     Pₑ ≤ exp K(α)
//! α*    = ½ + (ln ω₁ − ln ω₀)/(2β)
//! ```
//!
//! K is quadratic and convex in α; when skewed priors push α* outside
//! (0, 1), the constrained minimum sits at the boundary and α is clamped to
//! ε or 1 − ε (ε = 1e-9), with the `clamped` flag raised.

use crate::distributions::Distribution;
use crate::error::{MimError, Result};
use crate::numeric::{golden_min, integrate};

/// Distance from 0 and 1 at which the Chernoff α is clamped.
pub const ALPHA_CLAMP_EPSILON: f64 = 1e-9;

/// Absolute tolerance of all error-probability quadrature.
const QUADRATURE_TOLERANCE: f64 = 1e-8;

/// Quadrature window: this many max-σ beyond the extreme means
/// (Gaussian mass beyond 10σ is below 1e-23).
const WINDOW_SIGMAS: f64 = 10.0;

/// α-grid resolution for the M-ary bound minimization.
const ALPHA_GRID_POINTS: usize = 512;

/// Width to which the best grid α is refined by golden section.
const ALPHA_REFINE_TOLERANCE: f64 = 1e-6;

/// A scalar Gaussian observation model N(mean, sigma²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianHypothesis {
    mean: f64,
    sigma: f64,
}

impl GaussianHypothesis {
    pub fn new(mean: f64, sigma: f64) -> Result<Self> {
        if !mean.is_finite() {
            return Err(MimError::OutOfRange {
                name: "mean",
                value: mean,
                range: "(-∞, ∞)",
            });
        }
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(MimError::OutOfRange {
                name: "sigma",
                value: sigma,
                range: "(0, ∞)",
            });
        }
        Ok(Self { mean, sigma })
    }

    pub fn mean(self) -> f64 {
        self.mean
    }

    pub fn sigma(self) -> f64 {
        self.sigma
    }

    pub fn log_pdf(self, x: f64) -> f64 {
        let z = (x - self.mean) / self.sigma;
        -0.5 * z * z - (self.sigma * (2.0 * std::f64::consts::PI).sqrt()).ln()
    }

    pub fn pdf(self, x: f64) -> f64 {
        self.log_pdf(x).exp()
    }
}

/// M ≥ 2 Gaussian classes with strictly positive priors summing to one and
/// one class designated as the minority of interest.
#[derive(Debug, Clone, PartialEq)]
pub struct HypothesisEnsemble {
    priors: Vec<f64>,
    hypotheses: Vec<GaussianHypothesis>,
    minority_index: usize,
}

impl HypothesisEnsemble {
    /// Builds an ensemble from (prior, hypothesis) pairs; prior validation
    /// matches [`Distribution::new`] (positivity, sum within 1e-9).
    pub fn new(classes: &[(f64, GaussianHypothesis)], minority_index: usize) -> Result<Self> {
        let priors: Vec<f64> = classes.iter().map(|&(w, _)| w).collect();
        Distribution::new(&priors)?;
        if minority_index >= classes.len() {
            return Err(MimError::IndexOutOfRange {
                index: minority_index,
                len: classes.len(),
            });
        }
        Ok(Self {
            priors,
            hypotheses: classes.iter().map(|&(_, h)| h).collect(),
            minority_index,
        })
    }

    pub fn priors(&self) -> &[f64] {
        &self.priors
    }

    pub fn hypotheses(&self) -> &[GaussianHypothesis] {
        &self.hypotheses
    }

    pub fn minority_index(&self) -> usize {
        self.minority_index
    }
}

/// The constrained Chernoff parameter and whether it hit the boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChernoffExponent {
    pub alpha: f64,
    pub clamped: bool,
}

fn check_unit_interval(name: &'static str, v: f64) -> Result<()> {
    if !(v > 0.0 && v < 1.0) {
        return Err(MimError::OutOfRange {
            name,
            value: v,
            range: "(0, 1)",
        });
    }
    Ok(())
}

/// The exponent K(α) = α ln ω₀ + (1−α) ln ω₁ − α(1−α)β.
pub fn k_alpha(alpha: f64, omega0: f64, beta: f64) -> Result<f64> {
    check_unit_interval("alpha", alpha)?;
    check_unit_interval("omega0", omega0)?;
    if !(beta >= 0.0 && beta.is_finite()) {
        return Err(MimError::OutOfRange {
            name: "beta",
            value: beta,
            range: "[0, ∞)",
        });
    }
    Ok(alpha * omega0.ln() + (1.0 - alpha) * (1.0 - omega0).ln() - alpha * (1.0 - alpha) * beta)
}

/// Closed-form minimizer of K for β > 0: α* = ½ + (ln ω₁ − ln ω₀)/(2β),
/// clamped into (ε, 1 − ε) when the unconstrained value falls outside.
pub fn optimal_alpha_gaussian(omega0: f64, beta: f64) -> Result<ChernoffExponent> {
    check_unit_interval("omega0", omega0)?;
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(MimError::OutOfRange {
            name: "beta",
            value: beta,
            range: "(0, ∞)",
        });
    }
    let raw = 0.5 + ((1.0 - omega0).ln() - omega0.ln()) / (2.0 * beta);
    let exponent = if raw <= ALPHA_CLAMP_EPSILON {
        ChernoffExponent {
            alpha: ALPHA_CLAMP_EPSILON,
            clamped: true,
        }
    } else if raw >= 1.0 - ALPHA_CLAMP_EPSILON {
        ChernoffExponent {
            alpha: 1.0 - ALPHA_CLAMP_EPSILON,
            clamped: true,
        }
    } else {
        ChernoffExponent {
            alpha: raw,
            clamped: false,
        }
    };
    Ok(exponent)
}

/// The constrained minimizer of K, extended to β = 0 (indistinguishable
/// hypotheses): K is then linear in α and its infimum over (0, 1) sits at
/// the endpoint next to the smaller prior.
pub fn chernoff_exponent_gaussian(omega0: f64, beta: f64) -> Result<ChernoffExponent> {
    if beta == 0.0 {
        check_unit_interval("omega0", omega0)?;
        let alpha = if omega0 <= 1.0 - omega0 {
            1.0 - ALPHA_CLAMP_EPSILON
        } else {
            ALPHA_CLAMP_EPSILON
        };
        return Ok(ChernoffExponent {
            alpha,
            clamped: true,
        });
    }
    optimal_alpha_gaussian(omega0, beta)
}

/// β = (μ₀−μ₁)²/(2σ²) for two hypotheses sharing one σ.
pub fn shared_beta(h0: GaussianHypothesis, h1: GaussianHypothesis) -> Result<f64> {
    if h0.sigma != h1.sigma {
        return Err(MimError::ModelMismatch {
            sigma0: h0.sigma,
            sigma1: h1.sigma,
        });
    }
    let d = h0.mean - h1.mean;
    Ok(d * d / (2.0 * h0.sigma * h0.sigma))
}

/// Chernoff-style bound exp K(α̂) on the binary Bayes error for equal-σ
/// Gaussians. Never exceeds min(ω₀, ω₁) by more than the clamping slack.
pub fn chernoff_bound_gaussian(
    omega0: f64,
    h0: GaussianHypothesis,
    h1: GaussianHypothesis,
) -> Result<f64> {
    let beta = shared_beta(h0, h1)?;
    let exponent = chernoff_exponent_gaussian(omega0, beta)?;
    Ok(k_alpha(exponent.alpha, omega0, beta)?.exp())
}

fn window(hypotheses: &[GaussianHypothesis]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let mut sigma_max = 0.0_f64;
    for h in hypotheses {
        lo = lo.min(h.mean);
        hi = hi.max(h.mean);
        sigma_max = sigma_max.max(h.sigma);
    }
    (lo - WINDOW_SIGMAS * sigma_max, hi + WINDOW_SIGMAS * sigma_max)
}

/// Exact binary Bayes error ∫ min{ω₀p₀, ω₁p₁} dx by adaptive quadrature.
/// The σ's need not match.
pub fn bayes_error_oracle_binary(
    omega0: f64,
    h0: GaussianHypothesis,
    h1: GaussianHypothesis,
) -> Result<f64> {
    check_unit_interval("omega0", omega0)?;
    let (lo, hi) = window(&[h0, h1]);
    let omega1 = 1.0 - omega0;
    Ok(integrate(
        |x| (omega0 * h0.pdf(x)).min(omega1 * h1.pdf(x)),
        lo,
        hi,
        QUADRATURE_TOLERANCE,
    ))
}

/// Exact M-ary error of the minority-vs-rest decision:
/// ∫ min{ω₀p₀(x), Σ_{k≠0} ω_k p_k(x)} dx.
pub fn mary_error_oracle(ensemble: &HypothesisEnsemble) -> f64 {
    let m = ensemble.minority_index;
    let w0 = ensemble.priors[m];
    let h0 = ensemble.hypotheses[m];
    let (lo, hi) = window(&ensemble.hypotheses);
    integrate(
        |x| {
            let minority = w0 * h0.pdf(x);
            let rest: f64 = ensemble
                .priors
                .iter()
                .zip(&ensemble.hypotheses)
                .enumerate()
                .filter(|&(k, _)| k != m)
                .map(|(_, (&w, h))| w * h.pdf(x))
                .sum();
            minority.min(rest)
        },
        lo,
        hi,
        QUADRATURE_TOLERANCE,
    )
}

/// Minority-vs-mixture exponential bound on the M-ary error:
///
/// ```text
/// Pₑ(minority) ≤ min_α ω₀^α (1−ω₀)^{1−α} ∫ p₀^α(x) q^{1−α}(x) dx
/// ```
///
/// where q = Σ_{k≠0} ω_k p_k / (1−ω₀) is the normalized majority mixture.
/// The integral is evaluated for each α on a 512-point grid over
/// (ε, 1 − ε); the best grid point is refined by golden section to 1e-6.
/// Always at least [`mary_error_oracle`] (up to quadrature tolerance), and
/// for M = 2 with equal σ it reproduces [`chernoff_bound_gaussian`].
pub fn mary_error_bound(ensemble: &HypothesisEnsemble) -> f64 {
    let m = ensemble.minority_index;
    let w0 = ensemble.priors[m];
    let h0 = ensemble.hypotheses[m];
    let w_rest = 1.0 - w0;
    let mixture: Vec<(f64, GaussianHypothesis)> = ensemble
        .priors
        .iter()
        .zip(&ensemble.hypotheses)
        .enumerate()
        .filter(|&(k, _)| k != m)
        .map(|(_, (&w, &h))| ((w / w_rest).ln(), h))
        .collect();
    let (lo, hi) = window(&ensemble.hypotheses);

    // log-density of the normalized majority mixture, allocation-free
    let ln_q = |x: f64| {
        let mut max = f64::NEG_INFINITY;
        for &(lw, h) in &mixture {
            max = max.max(lw + h.log_pdf(x));
        }
        let sum: f64 = mixture
            .iter()
            .map(|&(lw, h)| (lw + h.log_pdf(x) - max).exp())
            .sum();
        max + sum.ln()
    };
    let bound_at = |alpha: f64| {
        let prior_factor = (alpha * w0.ln() + (1.0 - alpha) * w_rest.ln()).exp();
        let integral = integrate(
            |x| (alpha * h0.log_pdf(x) + (1.0 - alpha) * ln_q(x)).exp(),
            lo,
            hi,
            QUADRATURE_TOLERANCE,
        );
        prior_factor * integral
    };

    let eps = ALPHA_CLAMP_EPSILON;
    let span = 1.0 - 2.0 * eps;
    let grid = |i: usize| eps + span * i as f64 / (ALPHA_GRID_POINTS - 1) as f64;
    let mut best_i = 0;
    let mut best_v = f64::INFINITY;
    for i in 0..ALPHA_GRID_POINTS {
        let v = bound_at(grid(i));
        if v < best_v {
            best_v = v;
            best_i = i;
        }
    }
    let bracket_lo = grid(best_i.saturating_sub(1));
    let bracket_hi = grid((best_i + 1).min(ALPHA_GRID_POINTS - 1));
    let (_, refined) = golden_min(bound_at, bracket_lo, bracket_hi, ALPHA_REFINE_TOLERANCE);
    best_v.min(refined)
}
