//! The message importance measure and its reference entropies.
//!
//! For a distribution p = (p₁, …, pₙ) and importance coefficient ϖ ≥ 0 the
//! measure is
//!
//! ```text
//! L(p, ϖ) = ln Σᵢ pᵢ · exp{ϖ(1 − pᵢ)}
//! ```
//!
//! Each event is weighted by an exponential factor that grows as its
//! probability shrinks, so rare events dominate the sum once ϖ is large.
//! All logarithms in this crate are natural.
//!
//! Everything here is evaluated in the log domain: the summand exponents
//! ϖ(1 − pᵢ) + ln pᵢ reach ~5000 in the asymptotic regime, far beyond what
//! `exp` can represent directly.

use crate::distributions::Distribution;
use crate::error::{MimError, Result};
use crate::numeric::{log1pexp, logsumexp};

/// How close to 1 a Rényi order may get before it is rejected.
pub const RENYI_ORDER_MARGIN: f64 = 1e-9;

/// Where an importance coefficient value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Supplied directly by the caller.
    User,
    /// Smallest-probability threshold rule.
    Theorem1,
    /// Minimum over all below-uniform entries.
    Theorem3,
    /// Balancing / crossing condition against a reference curve.
    Crossing,
}

/// A validated importance coefficient ϖ ≥ 0 together with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImportanceCoefficient {
    value: f64,
    provenance: Provenance,
}

impl ImportanceCoefficient {
    /// A caller-chosen coefficient; must be finite and non-negative.
    pub fn new(value: f64) -> Result<Self> {
        if !(value >= 0.0 && value.is_finite()) {
            return Err(MimError::OutOfRange {
                name: "omega",
                value,
                range: "[0, ∞)",
            });
        }
        Ok(Self {
            value,
            provenance: Provenance::User,
        })
    }

    pub(crate) fn with_provenance(value: f64, provenance: Provenance) -> Self {
        debug_assert!(value >= 0.0 && value.is_finite());
        Self { value, provenance }
    }

    pub fn value(self) -> f64 {
        self.value
    }

    pub fn provenance(self) -> Provenance {
        self.provenance
    }
}

/// A Rényi order α > 0 with α ≠ 1 (orders within [`RENYI_ORDER_MARGIN`] of 1
/// are rejected; use [`shannon`] for the limit).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenyiOrder(f64);

impl RenyiOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) || (alpha - 1.0).abs() <= RENYI_ORDER_MARGIN {
            return Err(MimError::OutOfRange {
                name: "alpha",
                value: alpha,
                range: "(0, 1) ∪ (1, ∞)",
            });
        }
        Ok(Self(alpha))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// The message importance measure L(p, ϖ).
///
/// Computed as a log-sum-exp of ln pᵢ + ϖ(1 − pᵢ), so it stays finite for
/// any finite ϖ (the naive sum overflows near ϖ ≈ 710 already).
/// Non-negative up to the input's normalization slack.
pub fn mim(d: &Distribution, omega: ImportanceCoefficient) -> f64 {
    let w = omega.value();
    let terms: Vec<f64> = d.probs().iter().map(|&p| p.ln() + w * (1.0 - p)).collect();
    logsumexp(&terms)
}

/// Shannon entropy −Σ pᵢ ln pᵢ (nats).
pub fn shannon(d: &Distribution) -> f64 {
    -d.probs().iter().map(|&p| p * p.ln()).sum::<f64>()
}

/// Rényi entropy (1/(1−α)) ln Σ pᵢ^α (nats).
pub fn renyi(d: &Distribution, order: RenyiOrder) -> f64 {
    let a = order.value();
    let terms: Vec<f64> = d.probs().iter().map(|&p| a * p.ln()).collect();
    logsumexp(&terms) / (1.0 - a)
}

/// The quadratic lower bound ϖ(1 − Σ pᵢ²) ≤ L(p, ϖ), tight exactly on the
/// uniform distribution.
pub fn mim_lower_bound(d: &Distribution, omega: ImportanceCoefficient) -> f64 {
    let sum_sq: f64 = d.probs().iter().map(|&p| p * p).sum();
    omega.value() * (1.0 - sum_sq)
}

/// Large-ϖ asymptote ϖ(1 − p_min) + ln p_min: the smallest-probability term
/// dominates the sum once ϖ is large.
pub fn mim_asymptote(d: &Distribution, omega: ImportanceCoefficient) -> f64 {
    let p_min = d.min_prob();
    omega.value() * (1.0 - p_min) + p_min.ln()
}

/// Two-point approximation for the binary case (p, 1 − p):
/// ln(1 + p·e^{ϖ(1−2p)}) + ϖp, with absolute error at most |ln(1 − p)|.
///
/// Requires 0 < p < 1; evaluated through `log1pexp` so large ϖ is safe.
pub fn binary_mim_approx(p: f64, omega: ImportanceCoefficient) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(MimError::OutOfRange {
            name: "p",
            value: p,
            range: "(0, 1)",
        });
    }
    let w = omega.value();
    Ok(log1pexp(p.ln() + w * (1.0 - 2.0 * p)) + w * p)
}

/// Per-event importance weight f(x) = x·e^{ϖ(1−x)} for 0 < x < 1.
///
/// For ϖ > 1 this is unimodal on (0, 1) with its maximum at x = 1/ϖ.
pub fn importance_weight(x: f64, omega: ImportanceCoefficient) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(MimError::OutOfRange {
            name: "x",
            value: x,
            range: "(0, 1)",
        });
    }
    Ok(x * (omega.value() * (1.0 - x)).exp())
}
