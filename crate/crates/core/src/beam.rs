//! Incident beam: particle mass, kinetic energy and plane-wave amplitude.

use serde::Serialize;

use crate::constants::HBAR;
use crate::error::{Error, Result};

/// Monochromatic incident plane wave travelling along +z.
///
/// The wavenumber is `k = sqrt(2 M E) / hbar`; construction from a
/// wavelength inverts that relation, so `energy`/`wavelength` round-trip
/// to better than 1e-12 relative either way.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BeamParams {
    mass: f64,
    energy: f64,
    amplitude: f64,
    hbar: f64,
}

impl BeamParams {
    /// Beam from kinetic energy (J).
    pub fn from_energy(mass: f64, energy: f64, amplitude: f64) -> Result<Self> {
        Self::from_energy_with_hbar(mass, energy, amplitude, HBAR)
    }

    /// Beam from de Broglie wavelength (m).
    pub fn from_wavelength(mass: f64, wavelength: f64, amplitude: f64) -> Result<Self> {
        Self::from_wavelength_with_hbar(mass, wavelength, amplitude, HBAR)
    }

    pub fn from_energy_with_hbar(mass: f64, energy: f64, amplitude: f64, hbar: f64) -> Result<Self> {
        check_positive("mass", mass)?;
        check_positive("energy", energy)?;
        check_positive("amplitude", amplitude)?;
        check_positive("hbar", hbar)?;
        Ok(Self {
            mass,
            energy,
            amplitude,
            hbar,
        })
    }

    pub fn from_wavelength_with_hbar(
        mass: f64,
        wavelength: f64,
        amplitude: f64,
        hbar: f64,
    ) -> Result<Self> {
        check_positive("wavelength", wavelength)?;
        check_positive("mass", mass)?;
        check_positive("hbar", hbar)?;
        let k = 2.0 * std::f64::consts::PI / wavelength;
        let energy = (hbar * k).powi(2) / (2.0 * mass);
        Self::from_energy_with_hbar(mass, energy, amplitude, hbar)
    }

    /// Particle mass (kg).
    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Kinetic energy (J).
    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// Incident plane-wave amplitude (arbitrary units).
    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    /// Reduced Planck constant in use (J·s).
    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Wavenumber k = sqrt(2 M E) / hbar (1/m).
    pub fn wavenumber(&self) -> f64 {
        (2.0 * self.mass * self.energy).sqrt() / self.hbar
    }

    /// de Broglie wavelength 2*pi/k (m).
    pub fn wavelength(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.wavenumber()
    }
}

fn check_positive(name: &'static str, value: f64) -> Result<()> {
    if !(value.is_finite() && value > 0.0) {
        return Err(Error::invalid(name, format!("must be finite and > 0, got {value}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const NEUTRON_MASS: f64 = 1.67e-27;

    #[test]
    fn cold_neutron_wavenumber() {
        // M = 1.67e-27 kg, E = 3.3e-23 J -> k ~ 3.147e9 1/m, lambda ~ 20 angstrom.
        let beam = BeamParams::from_energy(NEUTRON_MASS, 3.3e-23, 1.0).unwrap();
        let k = beam.wavenumber();
        assert!((k - 3.147e9).abs() / 3.147e9 < 1e-3, "k = {k}");
        let lambda = beam.wavelength();
        assert!((lambda - 19.97e-10).abs() / 19.97e-10 < 1e-3, "lambda = {lambda}");
    }

    #[test]
    fn wavenumber_sqrt_scaling() {
        let b1 = BeamParams::from_energy(NEUTRON_MASS, 3.3e-23, 1.0).unwrap();
        let b4 = BeamParams::from_energy(NEUTRON_MASS, 4.0 * 3.3e-23, 1.0).unwrap();
        assert!((b4.wavenumber() / b1.wavenumber() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn energy_from_wavelength_round_trip() {
        // lambda = 20 angstrom -> E ~ 3.29e-23 J, and back to lambda to 1e-12.
        let beam = BeamParams::from_wavelength(NEUTRON_MASS, 20.0e-10, 1.0).unwrap();
        assert!((beam.energy() - 3.289e-23).abs() / 3.289e-23 < 1e-3);
        assert!((beam.wavelength() - 20.0e-10).abs() / 20.0e-10 < 1e-12);

        let back = BeamParams::from_energy(NEUTRON_MASS, beam.energy(), 1.0).unwrap();
        assert!((back.wavenumber() - beam.wavenumber()).abs() / beam.wavenumber() < 1e-12);
    }

    #[test]
    fn rejects_nonpositive_inputs() {
        assert!(BeamParams::from_energy(0.0, 1.0, 1.0).is_err());
        assert!(BeamParams::from_energy(1.0, -1.0, 1.0).is_err());
        assert!(BeamParams::from_energy(1.0, 1.0, 0.0).is_err());
        assert!(BeamParams::from_wavelength(1.0, f64::NAN, 1.0).is_err());
    }
}
