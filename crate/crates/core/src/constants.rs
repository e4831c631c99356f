//! Physical constants.

/// Reduced Planck constant (J·s).
///
/// Kept at the rounded value commonly used alongside the cold-neutron
/// reference parameters of this engine rather than the full-precision
/// CODATA figure, so that published numbers reproduce exactly.
/// [`crate::BeamParams`] accepts an override for callers who want
/// a different value.
pub const HBAR: f64 = 1.055e-34;
