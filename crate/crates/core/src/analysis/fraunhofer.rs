//! Classical Fraunhofer patterns, used as location oracles.
//!
//! These predict where extrema fall (sinc zeros, fringe period); they
//! deliberately carry none of the thickness or obliquity factors of the
//! waveguide treatment, so only locations are comparable, never
//! magnitudes.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Peak-normalized single-slit pattern `sinc^2(pi a s / (lambda l))`.
pub fn fraunhofer_single(s: f64, a: f64, lambda: f64, l: f64) -> Result<f64> {
    far_field_check(a, lambda, l)?;
    let x = PI * a * s / (lambda * l);
    Ok(sinc(x).powi(2))
}

/// Peak-normalized two-slit pattern with widths `a1`, `a2` and
/// center-to-center separation `center_sep`.
pub fn fraunhofer_double(
    s: f64,
    a1: f64,
    a2: f64,
    center_sep: f64,
    lambda: f64,
    l: f64,
) -> Result<f64> {
    far_field_check(a1, lambda, l)?;
    far_field_check(a2, lambda, l)?;
    let x1 = PI * a1 * s / (lambda * l);
    let x2 = PI * a2 * s / (lambda * l);
    let phase = 2.0 * PI * center_sep * s / (lambda * l);
    let amp = a1 * sinc(x1) + a2 * sinc(x2) * Complex64::from_polar(1.0, phase);
    Ok(amp.norm_sqr() / (a1 + a2).powi(2))
}

/// Location of the j-th single-slit minimum, `j * lambda * l / a`.
pub fn single_slit_minimum(j: u32, a: f64, lambda: f64, l: f64) -> f64 {
    f64::from(j) * lambda * l / a
}

/// Two-slit fringe period `lambda * l / center_sep`.
pub fn fringe_period(center_sep: f64, lambda: f64, l: f64) -> f64 {
    lambda * l / center_sep
}

/// Fraunhofer validity: the Fresnel number `a^2 / (lambda l)` must not
/// exceed 1. Asserted, never silently assumed.
fn far_field_check(a: f64, lambda: f64, l: f64) -> Result<()> {
    let fresnel_number = a * a / (lambda * l);
    if !(fresnel_number.is_finite() && fresnel_number <= 1.0) {
        return Err(Error::FarField { fresnel_number });
    }
    Ok(())
}

fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 * (1.0 - x2 / 20.0)
    } else {
        x.sin() / x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const LAMBDA: f64 = 20e-10;
    const L: f64 = 5.0;

    #[test]
    fn single_slit_first_zero() {
        // a = 90 um: zeros at j * 111.1 um
        let a = 90e-6;
        let s1 = single_slit_minimum(1, a, LAMBDA, L);
        assert!((s1 - 111.1e-6).abs() / 111.1e-6 < 1e-3);
        let v = fraunhofer_single(s1, a, LAMBDA, L).unwrap();
        assert!(v < 1e-20, "pattern at the zero: {v:e}");
    }

    #[test]
    fn double_slit_period() {
        // D = 122.2 um -> period 81.8 um
        let period = fringe_period(122.2e-6, LAMBDA, L);
        assert!((period - 81.8e-6).abs() / 81.8e-6 < 1e-3);
    }

    #[test]
    fn center_is_the_global_maximum() {
        let center = fraunhofer_double(0.0, 21.9e-6, 22.5e-6, 122.2e-6, LAMBDA, L).unwrap();
        assert!((center - 1.0).abs() < 1e-15);
        for i in 1..2000 {
            let s = i as f64 * 5e-7;
            let v = fraunhofer_double(s, 21.9e-6, 22.5e-6, 122.2e-6, LAMBDA, L).unwrap();
            assert!(v <= center);
        }
    }

    #[test]
    fn far_field_violation_is_an_error() {
        // a = 1 mm at l = 5 m, lambda = 20 angstrom: Fresnel number 100
        assert!(matches!(
            fraunhofer_single(0.0, 1e-3, LAMBDA, L),
            Err(Error::FarField { .. })
        ));
    }

    #[test]
    fn sinc_small_argument_expansion_matches_ratio_form() {
        // inside the switchover the series and sin(x)/x agree to rounding
        for x in [1e-5, 5e-5, 0.99e-4] {
            let series = sinc(x);
            let ratio = x.sin() / x;
            assert!((series - ratio).abs() < 1e-15, "x = {x}");
        }
        assert_eq!(sinc(0.0), 1.0);
    }
}
