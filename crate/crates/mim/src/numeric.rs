//! Small numerical toolbox: stable log-domain helpers, root bracketing,
//! golden-section minimization, and adaptive Simpson quadrature.

/// ln(1 + e^x) without overflow for large |x|.
#[inline]
pub fn log1pexp(x: f64) -> f64 {
    x.max(0.0) + (-x.abs()).exp().ln_1p()
}

/// ln Σ e^{tᵢ} computed against the running maximum.
///
/// Returns −∞ for an empty slice; −∞ entries are absorbed harmlessly.
pub fn logsumexp(terms: &[f64]) -> f64 {
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return max;
    }
    let sum: f64 = terms.iter().map(|&t| (t - max).exp()).sum();
    max + sum.ln()
}

/// Upper tail Q(z) = P(Z > z) of the standard normal.
#[inline]
pub fn normal_tail(z: f64) -> f64 {
    0.5 * statrs::function::erf::erfc(z / std::f64::consts::SQRT_2)
}

/// Bisection for a root of `f` on [lo, hi], assuming f(lo) ≤ 0 ≤ f(hi).
/// Stops when the bracket is narrower than `xtol` and returns its midpoint.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, xtol: f64) -> f64 {
    debug_assert!(lo < hi);
    while hi - lo > xtol {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Golden-section minimization of a unimodal `f` on [a, b].
///
/// Shrinks the bracket until it is narrower than `xtol` and returns the best
/// evaluated point `(x, f(x))`.
pub fn golden_min<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, xtol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while b - a > xtol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Adaptive Simpson quadrature of `f` over [a, b] to absolute tolerance `tol`.
///
/// The interval is first cut into 64 uniform slices so that narrow features
/// (Gaussian bumps, kinks of pointwise minima) cannot hide between the initial
/// sample points; each slice is then refined adaptively.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    const INITIAL_SLICES: usize = 64;
    debug_assert!(a < b && tol > 0.0);
    let h = (b - a) / INITIAL_SLICES as f64;
    let slice_tol = tol / INITIAL_SLICES as f64;
    let mut total = 0.0;
    for k in 0..INITIAL_SLICES {
        let (lo, hi) = (a + k as f64 * h, a + (k + 1) as f64 * h);
        let (flo, fhi) = (f(lo), f(hi));
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid);
        let whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        total += adapt(&f, lo, hi, flo, fmid, fhi, whole, slice_tol, 28);
    }
    total
}

#[allow(clippy::too_many_arguments)]
fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}
