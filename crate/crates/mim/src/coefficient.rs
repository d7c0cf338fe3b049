//! Choosing the importance coefficient ϖ.
//!
//! The guiding requirement: rare events should matter, i.e. L(p, ϖ) should
//! exceed the uniform baseline L(u, ϖ) = ϖ(1 − 1/n). Each threshold rule
//! returns a ϖ beyond which that is guaranteed; the crossing finder locates
//! the exact ϖ where a distribution's curve overtakes the baseline.
//!
//! All rules need some entry strictly below 1/n — on the uniform
//! distribution (or within [`DEGENERACY_MARGIN`] of it) there is nothing to
//! emphasize and they report [`MimError::DegenerateDistribution`].

use crate::distributions::Distribution;
use crate::error::{MimError, Result};
use crate::measures::{mim, ImportanceCoefficient, Provenance};
use crate::numeric::bisect;

/// Entries this close to 1/n (or above) are treated as not below uniform.
pub const DEGENERACY_MARGIN: f64 = 1e-12;

/// Grid step used to bracket the uniform crossing before bisection.
const CROSSING_GRID_STEP: f64 = 0.01;

/// Absolute tolerance of the bisected crossing coefficient.
const CROSSING_TOLERANCE: f64 = 1e-6;

/// Which rule produced a threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdRule {
    /// −ln(p_min)/(1/n − p_min) applied to the smallest entry.
    Theorem1,
    /// The same formula applied to one chosen entry below 1/n.
    Theorem2,
    /// Minimum of the formula over all entries below 1/n.
    Theorem3,
}

/// A sufficient coefficient threshold together with the entry it came from.
///
/// The rules are stated for n > 2; n = 2 is admitted here because the binary
/// case is covered by the same dominance argument, and `binary_extension`
/// records when that extension was used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdReport {
    /// For every ϖ ≥ this value, L(p, ϖ) ≥ L(uniform(n), ϖ).
    pub threshold: f64,
    /// The probability entry the threshold formula was evaluated at.
    pub witness_prob: f64,
    pub rule: ThresholdRule,
    /// True when the report was produced for a two-event distribution.
    pub binary_extension: bool,
}

impl ThresholdReport {
    /// The threshold as a coefficient, tagged with the producing rule.
    pub fn importance_coefficient(&self) -> ImportanceCoefficient {
        let provenance = match self.rule {
            ThresholdRule::Theorem1 => Provenance::Theorem1,
            ThresholdRule::Theorem2 | ThresholdRule::Theorem3 => Provenance::Theorem3,
        };
        ImportanceCoefficient::with_provenance(self.threshold, provenance)
    }
}

#[inline]
fn threshold_formula(p: f64, inv_n: f64) -> f64 {
    -p.ln() / (inv_n - p)
}

/// Threshold from the smallest entry: −ln(p_min)/(1/n − p_min).
pub fn theorem1_threshold(d: &Distribution) -> Result<ThresholdReport> {
    let inv_n = 1.0 / d.len() as f64;
    let p_min = d.min_prob();
    if p_min >= inv_n - DEGENERACY_MARGIN {
        return Err(MimError::DegenerateDistribution);
    }
    Ok(ThresholdReport {
        threshold: threshold_formula(p_min, inv_n),
        witness_prob: p_min,
        rule: ThresholdRule::Theorem1,
        binary_extension: d.len() == 2,
    })
}

/// Threshold from one chosen probability p_s ∈ (0, 1/n) for an n-event
/// distribution: −ln(p_s)/(1/n − p_s).
///
/// The value grows without bound as p_s → 1/n; exact equality (and anything
/// beyond) is rejected rather than returned as ∞.
pub fn theorem2_threshold(p_s: f64, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(MimError::TooFewEvents(n));
    }
    let inv_n = 1.0 / n as f64;
    if !(p_s > 0.0 && p_s < inv_n) {
        return Err(MimError::OutOfRange {
            name: "p_s",
            value: p_s,
            range: "(0, 1/n)",
        });
    }
    Ok(threshold_formula(p_s, inv_n))
}

/// Tightest threshold: the minimum of the formula over every entry below
/// 1/n. Never exceeds [`theorem1_threshold`], since p_min is among the
/// candidates.
pub fn theorem3_threshold(d: &Distribution) -> Result<ThresholdReport> {
    let inv_n = 1.0 / d.len() as f64;
    let mut best: Option<(f64, f64)> = None; // (threshold, witness)
    for &p in d.probs() {
        if p < inv_n - DEGENERACY_MARGIN {
            let t = threshold_formula(p, inv_n);
            if best.is_none_or(|(bt, _)| t < bt) {
                best = Some((t, p));
            }
        }
    }
    let (threshold, witness_prob) = best.ok_or(MimError::DegenerateDistribution)?;
    Ok(ThresholdReport {
        threshold,
        witness_prob,
        rule: ThresholdRule::Theorem3,
        binary_extension: d.len() == 2,
    })
}

/// True when ϖ·max pᵢ < 2 — the regime in which the uniform distribution is
/// guaranteed to maximize the measure (so small ϖ cannot emphasize anything).
pub fn max_value_condition(d: &Distribution, omega: ImportanceCoefficient) -> bool {
    omega.value() * d.max_prob() < 2.0
}

/// The smallest ϖ* ∈ (0, search_max] where L(d, ϖ*) = L(uniform(n), ϖ*),
/// located to absolute tolerance 1e-6.
///
/// The difference starts negative (uniform dominates for small ϖ) and is
/// scanned on a 0.01 grid until it turns positive; the sign change is then
/// bisected. If it never turns positive, [`MimError::NoCrossing`] is
/// returned.
pub fn crossing_coefficient(d: &Distribution, search_max: f64) -> Result<f64> {
    if !(search_max > 0.0 && search_max.is_finite()) {
        return Err(MimError::OutOfRange {
            name: "search_max",
            value: search_max,
            range: "(0, ∞)",
        });
    }
    let inv_n = 1.0 / d.len() as f64;
    if d.min_prob() >= inv_n - DEGENERACY_MARGIN {
        return Err(MimError::DegenerateDistribution);
    }
    let uniform_rate = 1.0 - inv_n;
    let g = |om: f64| {
        mim(d, ImportanceCoefficient::with_provenance(om, Provenance::User))
            - om * uniform_rate
    };

    let mut prev = 0.0; // g(0) = 0 and the difference dips negative first
    let mut k = 1u64;
    loop {
        let om = (k as f64 * CROSSING_GRID_STEP).min(search_max);
        if g(om) > 0.0 {
            return Ok(bisect(g, prev, om, CROSSING_TOLERANCE));
        }
        if om >= search_max {
            return Err(MimError::NoCrossing { search_max });
        }
        prev = om;
        k += 1;
    }
}
