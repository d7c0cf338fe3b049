//! Two-step estimation of a minority-class prior known only to lie in an
//! interval [lower, upper] ⊂ (0, ½).
//!
//! Step one balances the binary measure at the interval endpoints:
//! L((a, 1−a), ϖ) = L((b, 1−b), ϖ) has the (dominant-term) solution
//! ϖ̂ = (ln b − ln a)/(b − a). Step two reads the prior off the peak of the
//! importance weight at that coefficient: p̂₀ = 1/ϖ̂, the logarithmic mean
//! of the endpoints — always inside (a, b), and in fact between √(ab) and
//! the arithmetic mean.

use crate::distributions::Distribution;
use crate::error::{MimError, Result};
use crate::measures::{mim, ImportanceCoefficient, Provenance};

/// A prior interval 0 < lower ≤ upper < ½ for the minority class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PriorBounds {
    lower: f64,
    upper: f64,
}

impl PriorBounds {
    pub fn new(lower: f64, upper: f64) -> Result<Self> {
        if !(lower > 0.0 && lower < 0.5 && lower.is_finite()) {
            return Err(MimError::OutOfRange {
                name: "lower",
                value: lower,
                range: "(0, 1/2)",
            });
        }
        if !(upper > 0.0 && upper < 0.5 && upper.is_finite()) {
            return Err(MimError::OutOfRange {
                name: "upper",
                value: upper,
                range: "(0, 1/2)",
            });
        }
        if lower > upper {
            return Err(MimError::OutOfRange {
                name: "lower",
                value: lower,
                range: "(0, upper]",
            });
        }
        Ok(Self { lower, upper })
    }

    pub fn lower(self) -> f64 {
        self.lower
    }

    pub fn upper(self) -> f64 {
        self.upper
    }
}

/// The balancing coefficient ϖ̂ = (ln upper − ln lower)/(upper − lower).
///
/// Exceeds 1/upper (> 2), so the rare end of the interval is genuinely
/// emphasized. A zero-width interval leaves the balancing equation with no
/// information and is reported as [`MimError::DegenerateInterval`].
pub fn select_omega(bounds: &PriorBounds) -> Result<ImportanceCoefficient> {
    let (a, b) = (bounds.lower, bounds.upper);
    if a == b {
        return Err(MimError::DegenerateInterval);
    }
    let omega = (b.ln() - a.ln()) / (b - a);
    Ok(ImportanceCoefficient::with_provenance(
        omega,
        Provenance::Crossing,
    ))
}

/// The prior estimate p̂₀ = (upper − lower)/(ln upper − ln lower), i.e. the
/// logarithmic mean of the endpoints and the reciprocal of
/// [`select_omega`]. For a zero-width interval the point value itself is
/// returned.
pub fn estimate_prior(bounds: &PriorBounds) -> f64 {
    let (a, b) = (bounds.lower, bounds.upper);
    if a == b {
        return b;
    }
    (b - a) / (b.ln() - a.ln())
}

/// How far the balancing equation is from exact at coefficient `omega`:
/// L((lower, 1−lower), ϖ) − L((upper, 1−upper), ϖ).
///
/// Small at ϖ = [`select_omega`] (the balance is built from the dominant
/// terms only, so it is not exactly zero) and exactly zero at ϖ = 0.
pub fn balanced_importance_residual(bounds: &PriorBounds, omega: ImportanceCoefficient) -> f64 {
    let low = Distribution::bernoulli(bounds.lower).expect("bounds lie in (0, 1/2)");
    let high = Distribution::bernoulli(bounds.upper).expect("bounds lie in (0, 1/2)");
    mim(&low, omega) - mim(&high, omega)
}
