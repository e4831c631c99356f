//! Independent oracles and fringe analysis.
//!
//! Nothing here shares evaluation code with the diffraction engine: the
//! quadrature oracle integrates the aperture integrand numerically, the
//! Fraunhofer formulas predict extremum locations from classical optics,
//! and the convergence/comparison tools operate on finished profiles.

mod convergence;
mod experiment;
mod fraunhofer;
mod fringe;
mod oracle;
pub mod quadrature;

pub use convergence::{convergence_study, ConvergenceReport};
pub use experiment::{compare_to_experiment, ComparisonReport, ExperimentalTrace};
pub use fraunhofer::{
    fraunhofer_double, fraunhofer_single, fringe_period, single_slit_minimum,
};
pub use fringe::{fringe_visibility, visibility, visibility_refined, FringeReport, MinSide};
pub use oracle::{kirchhoff_amplitude_reference, quadrature_slit_integral};
