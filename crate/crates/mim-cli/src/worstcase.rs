//! Prior-mismatch experiment: how much decision error a plug-in likelihood
//! ratio test loses when it is designed with an assumed minority prior that
//! differs from the true one.
//!
//! Three designs are compared on a grid of true priors: the pessimistic
//! choice (assume the upper bound), the logarithmic-mean estimate, and the
//! ideal rule built from the true prior itself.

use crate::table::SweepTable;
use mim::bayes::GaussianHypothesis;
use mim::numeric::normal_tail;
use mim::prior::{estimate_prior, PriorBounds};
use mim::{MimError, Result};

/// Decision threshold of the likelihood-ratio test for equal-sigma Gaussians
/// when the minority prior is assumed to be `assumed_prior`.
///
/// For means `mu0 < mu1` the rule decides the minority hypothesis on
/// `x < t`; for `mu0 > mu1` on `x > t`.
pub fn plug_in_threshold(
    assumed_prior: f64,
    h0: GaussianHypothesis,
    h1: GaussianHypothesis,
) -> Result<f64> {
    check_prior("assumed_prior", assumed_prior)?;
    check_geometry(h0, h1)?;
    let sigma2 = h0.sigma() * h0.sigma();
    let log_odds = (1.0 - assumed_prior).ln() - assumed_prior.ln();
    Ok(0.5 * (h0.mean() + h1.mean()) + sigma2 * log_odds / (h0.mean() - h1.mean()))
}

/// Exact error probability of the plug-in rule designed with
/// `assumed_prior` when the true minority prior is `true_prior`.
pub fn plug_in_error(
    true_prior: f64,
    assumed_prior: f64,
    h0: GaussianHypothesis,
    h1: GaussianHypothesis,
) -> Result<f64> {
    check_prior("true_prior", true_prior)?;
    let t = plug_in_threshold(assumed_prior, h0, h1)?;
    let s = if h1.mean() > h0.mean() { 1.0 } else { -1.0 };
    let sigma = h0.sigma();
    let miss = normal_tail(s * (t - h0.mean()) / sigma);
    let false_alarm = normal_tail(s * (h1.mean() - t) / sigma);
    Ok(true_prior * miss + (1.0 - true_prior) * false_alarm)
}

/// Geometric grid of `points` values from `lower` to `upper` inclusive.
///
/// A geometric spacing samples each decade of the prior range evenly, which
/// matters because minority priors span orders of magnitude.
pub fn geometric_grid(lower: f64, upper: f64, points: usize) -> Result<Vec<f64>> {
    if points == 0 {
        return Err(MimError::OutOfRange {
            name: "points",
            value: 0.0,
            range: "at least 1",
        });
    }
    if !(lower > 0.0 && upper >= lower && upper.is_finite()) {
        return Err(MimError::OutOfRange {
            name: "lower",
            value: lower,
            range: "0 < lower <= upper < inf",
        });
    }
    if points == 1 || lower == upper {
        return Ok(vec![lower]);
    }
    let (la, lb) = (lower.ln(), upper.ln());
    let mut grid: Vec<f64> = (0..points)
        .map(|k| (la + (lb - la) * k as f64 / (points - 1) as f64).exp())
        .collect();
    grid[0] = lower;
    grid[points - 1] = upper;
    Ok(grid)
}

/// Builds the comparison table over a geometric grid of true priors.
///
/// Columns: `omega_true`, `err_worstcase` (assume the upper bound),
/// `err_mim` (assume the logarithmic-mean estimate), `err_ideal` (assume
/// the true prior). The ideal column lower-bounds the other two on every
/// row by optimality of the true-prior rule.
pub fn compare_table(
    bounds: &PriorBounds,
    h0: GaussianHypothesis,
    h1: GaussianHypothesis,
    points: usize,
) -> Result<SweepTable> {
    check_geometry(h0, h1)?;
    let p_hat = estimate_prior(bounds);
    let grid = geometric_grid(bounds.lower(), bounds.upper(), points)?;
    let mut table = SweepTable::new(&["omega_true", "err_worstcase", "err_mim", "err_ideal"]);
    table.push_meta("command", "compare-worstcase");
    table.push_meta_value("lower", bounds.lower());
    table.push_meta_value("upper", bounds.upper());
    table.push_meta_value("mu0", h0.mean());
    table.push_meta_value("mu1", h1.mean());
    table.push_meta_value("sigma", h0.sigma());
    table.push_meta("points", grid.len().to_string());
    table.push_meta("grid", "geometric");
    table.push_meta_value("p_hat", p_hat);
    for omega_true in grid {
        let worst = plug_in_error(omega_true, bounds.upper(), h0, h1)?;
        let est = plug_in_error(omega_true, p_hat, h0, h1)?;
        let ideal = plug_in_error(omega_true, omega_true, h0, h1)?;
        table.push_row(vec![omega_true, worst, est, ideal]);
    }
    Ok(table)
}

fn check_prior(name: &'static str, value: f64) -> Result<()> {
    if !(value > 0.0 && value < 1.0) {
        return Err(MimError::OutOfRange {
            name,
            value,
            range: "the open interval (0, 1)",
        });
    }
    Ok(())
}

fn check_geometry(h0: GaussianHypothesis, h1: GaussianHypothesis) -> Result<()> {
    if h0.sigma() != h1.sigma() {
        return Err(MimError::ModelMismatch {
            sigma0: h0.sigma(),
            sigma1: h1.sigma(),
        });
    }
    if h0.mean() == h1.mean() {
        return Err(MimError::OutOfRange {
            name: "mean separation",
            value: 0.0,
            range: "non-zero (the threshold formula divides by it)",
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use mim::bayes::bayes_error_oracle_binary;

    fn gauss(mean: f64, sigma: f64) -> GaussianHypothesis {
        GaussianHypothesis::new(mean, sigma).unwrap()
    }

    #[test]
    fn threshold_and_matched_error_reference() {
        let (h0, h1) = (gauss(0.0, 1.0), gauss(2.0, 1.0));
        let t = plug_in_threshold(0.3, h0, h1).unwrap();
        assert!((t - 0.576_351_069_806_398_2).abs() < 1e-12);
        let e = plug_in_error(0.3, 0.3, h0, h1).unwrap();
        assert!((e - 0.138_748_529_970_865_77).abs() < 1e-9);
    }

    #[test]
    fn matched_rule_agrees_with_quadrature() {
        let (h0, h1) = (gauss(0.0, 1.0), gauss(3.0, 1.0));
        for w in [0.01, 0.1, 0.4] {
            let closed = plug_in_error(w, w, h0, h1).unwrap();
            let oracle = bayes_error_oracle_binary(w, h0, h1).unwrap();
            assert!((closed - oracle).abs() < 1e-6);
        }
    }

    #[test]
    fn true_prior_design_is_optimal() {
        let (h0, h1) = (gauss(0.0, 1.0), gauss(3.0, 1.0));
        for w in [0.005, 0.05, 0.3] {
            let ideal = plug_in_error(w, w, h0, h1).unwrap();
            for assumed in [0.001, 0.02, 0.1, 0.5, 0.9] {
                let e = plug_in_error(w, assumed, h0, h1).unwrap();
                assert!(ideal <= e + 1e-15);
            }
        }
    }

    #[test]
    fn class_relabeling_is_consistent() {
        // Swapping the class labels (priors and hypotheses together) must
        // leave the error of the corresponding rule unchanged.
        let (h0, h1) = (gauss(0.0, 1.0), gauss(3.0, 1.0));
        let direct = plug_in_error(0.08, 0.12, h0, h1).unwrap();
        let swapped = plug_in_error(0.92, 0.88, h1, h0).unwrap();
        assert!((direct - swapped).abs() < 1e-12);
    }

    #[test]
    fn degenerate_geometry_is_rejected() {
        let h = gauss(1.0, 1.0);
        assert!(matches!(
            plug_in_threshold(0.2, h, h),
            Err(MimError::OutOfRange { .. })
        ));
        assert!(matches!(
            plug_in_threshold(0.2, gauss(0.0, 1.0), gauss(1.0, 2.0)),
            Err(MimError::ModelMismatch { .. })
        ));
        assert!(plug_in_error(0.0, 0.1, gauss(0.0, 1.0), gauss(1.0, 1.0)).is_err());
    }

    #[test]
    fn geometric_grid_shape() {
        let g = geometric_grid(0.001, 0.1, 5).unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g[0], 0.001);
        assert_eq!(g[4], 0.1);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        // Constant ratio between neighbors.
        let r = g[1] / g[0];
        for w in g.windows(2) {
            assert!((w[1] / w[0] - r).abs() < 1e-12);
        }
        assert_eq!(geometric_grid(0.05, 0.05, 7).unwrap(), vec![0.05]);
        assert!(geometric_grid(0.0, 0.1, 5).is_err());
        assert!(geometric_grid(0.001, 0.1, 0).is_err());
    }

    #[test]
    fn comparison_table_reference_values() {
        let bounds = PriorBounds::new(0.001, 0.1).unwrap();
        let table = compare_table(&bounds, gauss(0.0, 1.0), gauss(3.0, 1.0), 50).unwrap();
        assert_eq!(table.rows().len(), 50);
        let p_hat: f64 = table.meta_value("p_hat").unwrap().parse().unwrap();
        assert!((p_hat - 0.021_497_576_854_210_97).abs() < 1e-12);
        let (mut worst_excess, mut est_excess) = (0.0, 0.0);
        for row in table.rows() {
            let (worst, est, ideal) = (row[1], row[2], row[3]);
            assert!(ideal <= worst + 1e-15);
            assert!(ideal <= est + 1e-15);
            worst_excess += worst - ideal;
            est_excess += est - ideal;
        }
        worst_excess /= 50.0;
        est_excess /= 50.0;
        assert!((worst_excess - 0.007_390_129_6).abs() < 1e-8);
        assert!((est_excess - 0.001_766_689_7).abs() < 1e-8);
        assert!(worst_excess > est_excess);
    }
}
