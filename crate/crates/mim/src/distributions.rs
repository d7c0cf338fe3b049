//! Finite discrete probability distributions and the event surgery
//! (split / merge / product) that the measure's structural properties
//! are stated against.
//!
//! Entries are kept strictly positive: the measure takes ln pᵢ per event,
//! and an exactly-zero event contributes nothing to any of the results
//! this crate computes.

use crate::error::{MimError, Result};

/// Accepted deviation of Σpᵢ from one when a vector is used as-is.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

/// A finite distribution with at least two strictly positive entries
/// summing to one (within [`NORMALIZATION_TOLERANCE`]).
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    probs: Vec<f64>,
}

impl Distribution {
    /// Builds a distribution from the entries as given.
    ///
    /// Fails unless there are at least two entries, every entry is strictly
    /// positive and finite, and the sum is one within the tolerance.
    pub fn new(values: &[f64]) -> Result<Self> {
        check_entries(values)?;
        let sum: f64 = values.iter().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(MimError::NotNormalized {
                sum,
                tolerance: NORMALIZATION_TOLERANCE,
            });
        }
        Ok(Self {
            probs: values.to_vec(),
        })
    }

    /// Builds a distribution after rescaling the entries to sum to one.
    /// Positivity and length are still enforced.
    pub fn normalized(values: &[f64]) -> Result<Self> {
        check_entries(values)?;
        let sum: f64 = values.iter().sum();
        Ok(Self {
            probs: values.iter().map(|v| v / sum).collect(),
        })
    }

    /// The uniform distribution on `n` events.
    pub fn uniform(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(MimError::TooFewEvents(n));
        }
        Ok(Self {
            probs: vec![1.0 / n as f64; n],
        })
    }

    /// The two-event distribution (p, 1−p) with the rare event first.
    pub fn bernoulli(p: f64) -> Result<Self> {
        if !(p > 0.0 && p < 1.0) {
            return Err(MimError::OutOfRange {
                name: "p",
                value: p,
                range: "(0, 1)",
            });
        }
        Ok(Self {
            probs: vec![p, 1.0 - p],
        })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: at least two events
    }

    pub fn min_prob(&self) -> f64 {
        self.probs.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_prob(&self) -> f64 {
        self.probs.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Splits event `index` into two children carrying `fraction` and
    /// `1 − fraction` of its mass, placed at `index` and `index + 1`.
    /// `fraction` must lie strictly inside (0, 1) so both children keep
    /// positive mass.
    pub fn split_event(&self, index: usize, fraction: f64) -> Result<Self> {
        if index >= self.len() {
            return Err(MimError::IndexOutOfRange {
                index,
                len: self.len(),
            });
        }
        if !(fraction > 0.0 && fraction < 1.0) {
            return Err(MimError::OutOfRange {
                name: "fraction",
                value: fraction,
                range: "(0, 1)",
            });
        }
        let mut probs = Vec::with_capacity(self.len() + 1);
        probs.extend_from_slice(&self.probs[..index]);
        probs.push(fraction * self.probs[index]);
        probs.push((1.0 - fraction) * self.probs[index]);
        probs.extend_from_slice(&self.probs[index + 1..]);
        Ok(Self { probs })
    }

    /// Merges events `i` and `j` (distinct) into one event at position
    /// min(i, j) carrying their combined mass.
    pub fn merge_events(&self, i: usize, j: usize) -> Result<Self> {
        let len = self.len();
        if i >= len {
            return Err(MimError::IndexOutOfRange { index: i, len });
        }
        if j >= len || j == i {
            return Err(MimError::IndexOutOfRange { index: j, len });
        }
        if len == 2 {
            // merging the only two events would leave a single certain event
            return Err(MimError::TooFewEvents(1));
        }
        let (lo, hi) = (i.min(j), i.max(j));
        let mut probs = self.probs.clone();
        probs[lo] += probs[hi];
        probs.remove(hi);
        Ok(Self { probs })
    }

    /// The independent product distribution with entries pᵢ·qⱼ in
    /// row-major order (i outer, j inner).
    pub fn product(&self, other: &Self) -> Self {
        let mut probs = Vec::with_capacity(self.len() * other.len());
        for &p in &self.probs {
            for &q in &other.probs {
                probs.push(p * q);
            }
        }
        Self { probs }
    }
}

fn check_entries(values: &[f64]) -> Result<()> {
    if values.len() < 2 {
        return Err(MimError::TooFewEvents(values.len()));
    }
    for (index, &value) in values.iter().enumerate() {
        if !(value > 0.0 && value.is_finite()) {
            return Err(MimError::NonPositiveEntry { index, value });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_exact_and_tolerated_sums() {
        assert!(Distribution::new(&[0.5, 0.5]).is_ok());
        assert!(Distribution::new(&[0.5, 0.5 + 0.9e-9]).is_ok());
    }

    #[test]
    fn rejects_unnormalized_without_rescaling() {
        match Distribution::new(&[0.2, 0.2]) {
            Err(MimError::NotNormalized { sum, .. }) => assert!((sum - 0.4).abs() < 1e-15),
            other => panic!("expected NotNormalized, got {other:?}"),
        }
    }

    #[test]
    fn normalizes_on_request() {
        let d = Distribution::normalized(&[0.2, 0.2]).unwrap();
        assert_eq!(d.probs(), &[0.5, 0.5]);
    }

    #[test]
    fn rejects_nonpositive_entries() {
        for bad in [&[0.3, -0.1, 0.8][..], &[0.3, 0.0, 0.7], &[0.3, f64::NAN, 0.4]] {
            match Distribution::new(bad) {
                Err(MimError::NonPositiveEntry { index: 1, .. }) => {}
                other => panic!("expected NonPositiveEntry at 1, got {other:?}"),
            }
        }
    }

    #[test]
    fn five_point_example_needs_normalization() {
        // This vector's printed entries sum to 1.0001.
        let raw = [0.0925, 0.3156, 0.3887, 0.1484, 0.0549];
        assert!(matches!(
            Distribution::new(&raw),
            Err(MimError::NotNormalized { .. })
        ));
        let d = Distribution::normalized(&raw).unwrap();
        let sum: f64 = d.probs().iter().sum();
        assert!((sum - 1.0).abs() < 1e-15);
        assert!((d.min_prob() - 0.054_894_510_548_945_104).abs() < 1e-15);
    }

    #[test]
    fn uniform_and_bernoulli() {
        assert!(matches!(
            Distribution::uniform(1),
            Err(MimError::TooFewEvents(1))
        ));
        let u = Distribution::uniform(4).unwrap();
        assert_eq!(u.probs(), &[0.25; 4]);
        let b = Distribution::bernoulli(0.1).unwrap();
        assert_eq!(b.probs(), &[0.1, 0.9]);
        assert!(matches!(
            Distribution::bernoulli(1.0),
            Err(MimError::OutOfRange { name: "p", .. })
        ));
        assert!(Distribution::bernoulli(0.0).is_err());
    }

    #[test]
    fn split_places_children_in_order() {
        let d = Distribution::new(&[0.2, 0.8]).unwrap();
        let s = d.split_event(1, 0.4).unwrap();
        let expect = [0.2, 0.4 * 0.8, 0.6 * 0.8];
        for (a, b) in s.probs().iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn split_rejects_degenerate_fraction_and_bad_index() {
        let d = Distribution::new(&[0.2, 0.8]).unwrap();
        assert!(matches!(
            d.split_event(0, 0.0),
            Err(MimError::OutOfRange { .. })
        ));
        assert!(matches!(
            d.split_event(0, 1.0),
            Err(MimError::OutOfRange { .. })
        ));
        assert!(matches!(
            d.split_event(2, 0.5),
            Err(MimError::IndexOutOfRange { index: 2, .. })
        ));
    }

    #[test]
    fn merge_combines_and_guards() {
        let d = Distribution::new(&[0.1, 0.2, 0.7]).unwrap();
        let m = d.merge_events(0, 1).unwrap();
        assert_eq!(m.probs(), &[0.1 + 0.2, 0.7]);
        // order of the index pair does not matter
        assert_eq!(d.merge_events(1, 0).unwrap().probs(), m.probs());
        assert!(matches!(
            d.merge_events(1, 1),
            Err(MimError::IndexOutOfRange { .. })
        ));
        let b = Distribution::new(&[0.5, 0.5]).unwrap();
        assert!(matches!(
            b.merge_events(0, 1),
            Err(MimError::TooFewEvents(1))
        ));
    }

    #[test]
    fn split_then_merge_round_trips() {
        let d = Distribution::new(&[0.1, 0.2, 0.7]).unwrap();
        let s = d.split_event(1, 0.3).unwrap();
        let back = s.merge_events(1, 2).unwrap();
        for (a, b) in back.probs().iter().zip(d.probs()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn product_is_row_major() {
        let p = Distribution::new(&[0.5, 0.5]).unwrap();
        let q = Distribution::new(&[0.3, 0.7]).unwrap();
        let pq = p.product(&q);
        assert_eq!(pq.probs(), &[0.15, 0.35, 0.15, 0.35]);
        let sum: f64 = pq.probs().iter().sum();
        assert!((sum - 1.0).abs() < 1e-12);
    }
}
