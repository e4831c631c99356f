//! Detector scan: where on the screen the intensity is sampled.

use serde::Serialize;

use crate::error::{Error, Result};

/// Linear scan of the screen coordinate `s` at distance `l` behind the
/// slit plane, with out-of-plane angle `alpha` (fixed per scan).
///
/// Every sample must satisfy `cos^2(alpha) >= (s/R)^2` with
/// `R = sqrt(l^2 + s^2)`, so the obliquity square root stays real; the
/// constructor checks the worst-case endpoint. A degenerate single-point
/// scan (`samples == 1`, `s_min == s_max`) is allowed; otherwise at
/// least two samples with `s_min < s_max` are required.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DetectorScan {
    l: f64,
    alpha: f64,
    s_min: f64,
    s_max: f64,
    samples: u32,
}

impl DetectorScan {
    pub fn new(l: f64, alpha: f64, s_min: f64, s_max: f64, samples: u32) -> Result<Self> {
        if !(l.is_finite() && l > 0.0) {
            return Err(Error::invalid("l", format!("must be finite and > 0, got {l}")));
        }
        if !alpha.is_finite() {
            return Err(Error::invalid("alpha", "must be finite"));
        }
        if !(s_min.is_finite() && s_max.is_finite()) {
            return Err(Error::invalid("s_min/s_max", "must be finite"));
        }
        match samples {
            0 => {
                return Err(Error::invalid("samples", "must be >= 1"));
            }
            1 => {
                if s_min != s_max {
                    return Err(Error::invalid(
                        "samples",
                        "a single-sample scan requires s_min == s_max",
                    ));
                }
            }
            _ => {
                if !(s_min < s_max) {
                    return Err(Error::invalid(
                        "s_min/s_max",
                        format!("need s_min < s_max, got [{s_min}, {s_max}]"),
                    ));
                }
            }
        }
        let scan = Self {
            l,
            alpha,
            s_min,
            s_max,
            samples,
        };
        // cos^2(alpha) - (s/R)^2 decreases with |s|; endpoints are the worst case.
        for s in [s_min, s_max] {
            if scan.cos_theta_sq(s) < 0.0 {
                return Err(Error::invalid(
                    "s_min/s_max",
                    format!("cos^2(alpha) < (s/R)^2 at s = {s}"),
                ));
            }
        }
        Ok(scan)
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn s_min(&self) -> f64 {
        self.s_min
    }

    pub fn s_max(&self) -> f64 {
        self.s_max
    }

    pub fn samples(&self) -> u32 {
        self.samples
    }

    /// `cos^2(alpha) - (s/R)^2`, the squared obliquity cosine.
    pub(crate) fn cos_theta_sq(&self, s: f64) -> f64 {
        let r = self.l.hypot(s);
        let sin_beta = s / r;
        let cos_a = self.alpha.cos();
        cos_a * cos_a - sin_beta * sin_beta
    }

    /// Evenly spaced screen coordinates, `samples` of them.
    pub fn grid(&self) -> Vec<f64> {
        if self.samples == 1 {
            return vec![self.s_min];
        }
        let step = (self.s_max - self.s_min) / f64::from(self.samples - 1);
        (0..self.samples)
            .map(|i| self.s_min + f64::from(i) * step)
            .collect()
    }
}
