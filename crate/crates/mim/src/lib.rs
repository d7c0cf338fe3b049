//! Message importance measure (MIM): an information measure that magnifies
//! rare events instead of averaging them away.
//!
//! For a finite distribution p and an importance coefficient ϖ ≥ 0,
//!
//! ```text
//! L(p, ϖ) = ln Σᵢ pᵢ · exp{ϖ(1 − pᵢ)}
//! ```
//!
//! Small-probability events carry the largest exponential weight, which
//! makes the measure a natural objective for minority-event detection.
//! The crate provides:
//!
//! - [`distributions`]: validated probability vectors and event surgery
//!   (split, merge, product);
//! - [`measures`]: L(p, ϖ) itself plus Shannon / Rényi references, bounds,
//!   the large-ϖ asymptote, and the binary approximation;
//! - [`coefficient`]: threshold rules answering "how large must ϖ be before
//!   rare events dominate?", and the exact uniform-crossing finder;
//! - [`prior`]: the two-step estimator recovering a minority prior from an
//!   interval constraint via the importance-balancing equation;
//! - [`bayes`]: Gaussian hypothesis testing — exact Bayes error by
//!   quadrature, Chernoff-style bounds, and the M-ary minority-vs-mixture
//!   bound;
//! - [`numeric`]: the small log-domain / quadrature toolbox behind it all.
//!
//! # Example
//!
//! ```
//! use mim::{Distribution, ImportanceCoefficient};
//! use mim::measures::mim;
//!
//! let d = Distribution::bernoulli(0.1).unwrap();
//! let w = ImportanceCoefficient::new(10.0).unwrap();
//! assert!((mim(&d, w) - 6.7004295221353554).abs() < 1e-12);
//! ```

pub mod bayes;
pub mod coefficient;
pub mod distributions;
pub mod error;
pub mod measures;
pub mod numeric;
pub mod prior;

pub use bayes::{ChernoffExponent, GaussianHypothesis, HypothesisEnsemble};
pub use coefficient::{ThresholdReport, ThresholdRule};
pub use distributions::Distribution;
pub use error::{MimError, Result};
pub use measures::{ImportanceCoefficient, Provenance, RenyiOrder};
pub use prior::PriorBounds;
