//! Scalar matter-wave diffraction from single and double slits.
//!
//! The engine treats the aperture as a hard-wall rectangular waveguide:
//! an incident plane wave excites the odd sine modes of the slit opening,
//! each mode propagates (or decays) through the slit thickness with its
//! own longitudinal wavenumber, and the exit field is carried to the
//! detection screen with a far-field Kirchhoff integral. Two-slit runs
//! superpose the per-slit amplitudes coherently or with a decoherence
//! damping of the interference cross term.
//!
//! Everything is strict SI internally and all arithmetic is `f64`.
//! Detector points are independent, so profile scans are data-parallel;
//! the `parallel` feature (on by default) maps the scan over a rayon
//! pool. Per-point summation order is fixed, making results bitwise
//! independent of the thread count.

pub mod analysis;
pub mod beam;
pub mod coherence;
pub mod constants;
mod error;
pub mod farfield;
pub mod geometry;
pub mod modes;
pub mod profile;
pub mod scan;
pub mod slit_field;

pub use beam::BeamParams;
pub use coherence::CoherenceParams;
pub use error::{Error, Result};
pub use farfield::{
    coherent_amplitude, intensity_coherent, intensity_decoherent, intensity_single,
    slit_amplitude, FarField,
};
pub use geometry::{Slit, SlitGeometry};
pub use modes::{
    fourier_coefficient, longitudinal_wavenumber, slit_integral, ModeIndex, Truncation,
};
pub use profile::{IntensityProfile, ProfileKind, ProfileMeta};
pub use scan::DetectorScan;

pub use num_complex::Complex64;
