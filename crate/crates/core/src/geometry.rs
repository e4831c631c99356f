//! Slit aperture geometry.
//!
//! The coordinate origin sits at the lower edge of the first slit:
//! x runs along the slit length (0..b), y across the widths, z through
//! the thickness (0..c). A second slit, when present, occupies
//! y in [a1 + d, a1 + d + a2].

use serde::Serialize;

use crate::error::{Error, Result};

/// Which slit an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Slit {
    First,
    Second,
}

/// Single- or double-slit aperture in an otherwise opaque plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SlitGeometry {
    /// First slit width (m).
    a1: f64,
    /// Second slit width (m); `None` for a single slit.
    a2: Option<f64>,
    /// Slit length (m).
    b: f64,
    /// Slit thickness along the propagation axis (m).
    c: f64,
    /// Edge-to-edge gap between the slits (m); `None` for a single slit.
    d: Option<f64>,
}

impl SlitGeometry {
    pub fn single(a1: f64, b: f64, c: f64) -> Result<Self> {
        check_length("a1", a1)?;
        check_length("b", b)?;
        check_length("c", c)?;
        Ok(Self {
            a1,
            a2: None,
            b,
            c,
            d: None,
        })
    }

    pub fn double(a1: f64, a2: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        check_length("a1", a1)?;
        check_length("a2", a2)?;
        check_length("b", b)?;
        check_length("c", c)?;
        check_length("d", d)?;
        Ok(Self {
            a1,
            a2: Some(a2),
            b,
            c,
            d: Some(d),
        })
    }

    pub fn a1(&self) -> f64 {
        self.a1
    }

    pub fn a2(&self) -> Option<f64> {
        self.a2
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn d(&self) -> Option<f64> {
        self.d
    }

    pub fn is_double(&self) -> bool {
        self.a2.is_some()
    }

    /// Width of the requested slit; rejects the second slit on single-slit geometry.
    pub fn width(&self, slit: Slit) -> Result<f64> {
        match slit {
            Slit::First => Ok(self.a1),
            Slit::Second => self.a2.ok_or(Error::NotDoubleSlit),
        }
    }

    /// y coordinate of the requested slit's lower edge.
    pub fn lower_edge(&self, slit: Slit) -> Result<f64> {
        match slit {
            Slit::First => Ok(0.0),
            Slit::Second => {
                let d = self.d.ok_or(Error::NotDoubleSlit)?;
                Ok(self.a1 + d)
            }
        }
    }

    /// Second-slit parameters (a2, d), or an error for single-slit geometry.
    pub fn double_params(&self) -> Result<(f64, f64)> {
        match (self.a2, self.d) {
            (Some(a2), Some(d)) => Ok((a2, d)),
            _ => Err(Error::NotDoubleSlit),
        }
    }

    /// Center-to-center slit separation d + (a1 + a2)/2.
    pub fn center_separation(&self) -> Result<f64> {
        let (a2, d) = self.double_params()?;
        Ok(d + 0.5 * (self.a1 + a2))
    }
}

fn check_length(name: &'static str, value: f64) -> Result<()> {
    if !(value.is_finite() && value > 0.0) {
        return Err(Error::invalid(name, format!("length must be finite and > 0, got {value}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_slit_rejects_second_slit_ops() {
        let g = SlitGeometry::single(90e-6, 5e-3, 3e-5).unwrap();
        assert!(!g.is_double());
        assert!(matches!(g.width(Slit::Second), Err(Error::NotDoubleSlit)));
        assert!(g.double_params().is_err());
        assert!(g.lower_edge(Slit::Second).is_err());
    }

    #[test]
    fn double_slit_layout() {
        let g = SlitGeometry::double(21.9e-6, 22.5e-6, 5e-3, 3e-5, 100e-6).unwrap();
        assert_eq!(g.width(Slit::Second).unwrap(), 22.5e-6);
        assert_eq!(g.lower_edge(Slit::Second).unwrap(), 21.9e-6 + 100e-6);
        let sep = g.center_separation().unwrap();
        assert!((sep - 122.2e-6).abs() < 1e-12);
    }

    #[test]
    fn rejects_nonpositive_lengths() {
        assert!(SlitGeometry::single(0.0, 1.0, 1.0).is_err());
        assert!(SlitGeometry::double(1.0, 1.0, 1.0, 1.0, -1.0).is_err());
    }
}
