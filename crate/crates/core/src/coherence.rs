//! Two-slit superposition weights and the decoherence damping factor.

use serde::Serialize;

use crate::error::{Error, Result};

/// Superposition coefficients `c1`, `c2` (normalized so that
/// `c1^2 + c2^2 = 1`) and an optional coherence degree `lambda_t`.
///
/// `lambda_t` in [0, 1] damps the interference cross term; it relates to
/// the modulus of the environment-state overlap by
/// `lambda_t = 2 |alpha| / (1 + |alpha|^2)`, inverted here on the
/// physical branch `|alpha| <= 1`. Absent `lambda_t` means fully
/// coherent superposition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoherenceParams {
    c1: f64,
    c2: f64,
    lambda_t: Option<f64>,
}

/// Coefficients are renormalized only when they miss the constraint by
/// more than this, keeping construction idempotent on already-normalized
/// values.
const NORMALIZATION_TOLERANCE: f64 = 1e-9;

impl CoherenceParams {
    /// Coherent superposition (no environment damping).
    pub fn new(c1: f64, c2: f64) -> Result<Self> {
        Self::build(c1, c2, None)
    }

    /// Superposition with decoherence degree `lambda_t` in [0, 1].
    pub fn with_decoherence(c1: f64, c2: f64, lambda_t: f64) -> Result<Self> {
        if !(lambda_t.is_finite() && (0.0..=1.0).contains(&lambda_t)) {
            return Err(Error::invalid(
                "lambda_t",
                format!("must lie in [0, 1], got {lambda_t}"),
            ));
        }
        Self::build(c1, c2, Some(lambda_t))
    }

    fn build(c1: f64, c2: f64, lambda_t: Option<f64>) -> Result<Self> {
        if !(c1.is_finite() && c2.is_finite() && c1 >= 0.0 && c2 >= 0.0) {
            return Err(Error::invalid(
                "c1/c2",
                format!("must be finite and >= 0, got ({c1}, {c2})"),
            ));
        }
        let norm_sq = c1 * c1 + c2 * c2;
        if norm_sq == 0.0 {
            return Err(Error::invalid("c1/c2", "must not both be zero"));
        }
        let (c1, c2) = if (norm_sq - 1.0).abs() > NORMALIZATION_TOLERANCE {
            let norm = norm_sq.sqrt();
            (c1 / norm, c2 / norm)
        } else {
            (c1, c2)
        };
        Ok(Self { c1, c2, lambda_t })
    }

    pub fn c1(&self) -> f64 {
        self.c1
    }

    pub fn c2(&self) -> f64 {
        self.c2
    }

    pub fn lambda_t(&self) -> Option<f64> {
        self.lambda_t
    }

    /// Modulus of the environment overlap, `|alpha|` in [0, 1], derived
    /// from `lambda_t`; `None` when the parameters are fully coherent.
    pub fn alpha_overlap(&self) -> Option<f64> {
        self.lambda_t.map(|lambda| {
            if lambda == 0.0 {
                0.0
            } else {
                // (1 - sqrt(1 - L^2)) / L, written without cancellation
                lambda / (1.0 + (1.0 - lambda * lambda).sqrt())
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renormalizes_printed_coefficients() {
        // 0.397^2 + 0.918^2 = 1.000297 -> renormalized, ratio preserved.
        let c = CoherenceParams::new(0.397, 0.918).unwrap();
        let norm_sq = c.c1() * c.c1() + c.c2() * c.c2();
        assert!((norm_sq - 1.0).abs() < 1e-12);
        assert!((c.c1() / c.c2() - 0.397 / 0.918).abs() < 1e-15);
    }

    #[test]
    fn normalization_is_idempotent() {
        let a = CoherenceParams::new(0.397, 0.918).unwrap();
        let b = CoherenceParams::new(a.c1(), a.c2()).unwrap();
        assert_eq!(a.c1().to_bits(), b.c1().to_bits());
        assert_eq!(a.c2().to_bits(), b.c2().to_bits());
    }

    #[test]
    fn alpha_overlap_round_trip() {
        for lambda in [0.0, 1e-6, 0.1, 0.3, 0.59, 0.9, 1.0] {
            let c = CoherenceParams::with_decoherence(0.5, 0.5, lambda).unwrap();
            let alpha = c.alpha_overlap().unwrap();
            assert!((0.0..=1.0).contains(&alpha), "alpha = {alpha}");
            let back = 2.0 * alpha / (1.0 + alpha * alpha);
            assert!(
                (back - lambda).abs() <= 1e-12,
                "lambda {lambda} -> alpha {alpha} -> {back}"
            );
        }
    }

    #[test]
    fn lambda_bounds_enforced() {
        assert!(CoherenceParams::with_decoherence(0.5, 0.5, -0.1).is_err());
        assert!(CoherenceParams::with_decoherence(0.5, 0.5, 1.1).is_err());
        assert!(CoherenceParams::with_decoherence(0.5, 0.5, f64::NAN).is_err());
    }

    #[test]
    fn degenerate_coefficients() {
        let c = CoherenceParams::new(1.0, 0.0).unwrap();
        assert_eq!(c.c1(), 1.0);
        assert_eq!(c.c2(), 0.0);
        assert!(CoherenceParams::new(0.0, 0.0).is_err());
        assert!(CoherenceParams::new(-0.1, 1.0).is_err());
    }
}
