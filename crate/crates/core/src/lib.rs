//! Photon-number statistics and quantum Fisher information (QFI) for
//! single-mode phase estimation.
//!
//! For a pure single-mode probe the phase-estimation QFI is four times the
//! photon-number variance, so precision analysis reduces to the statistics of
//! the probe's photon-number distribution. This crate provides:
//!
//! - [`dist`] — a catalog of probe-state photon-number distributions
//!   (two-point superpositions, coherent and squeezed-vacuum states, and a
//!   family of heavy-tailed discrete distributions), with moments computed
//!   both in closed form and by an independent adaptive-summation oracle;
//! - [`qfi`] — QFI, Cramér–Rao precision bounds, and the Popoviciu and
//!   Bhatia–Davis variance inequalities;
//! - [`optimize`] — exact variance maximization at fixed mean on a bounded
//!   support, scaling-exponent fits over mean-photon-number sweeps, and the
//!   logarithmic distribution's variance crossover point;
//! - [`special`] — the Riemann zeta function needed by the zeta-distributed
//!   probe.
//!
//! The crate is `no_std` (it allocates, but performs no IO); all operations
//! are pure functions over immutable inputs and are safe to call from many
//! threads. IO, file formats, and the command-line front end live in the
//! companion `photon-qfi-cli` crate.
//!
//! # Example
//!
//! ```
//! use photon_qfi::dist::{self, DistributionSpec};
//! use photon_qfi::qfi;
//!
//! let moments = dist::moments_closed_form(&DistributionSpec::Geometric { mu: 0.5 }).unwrap();
//! let report = qfi::qfi_from_moments(&moments, 1).unwrap();
//! assert_eq!(report.qfi, 8.0);
//! ```

#![no_std]
#![warn(missing_docs)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod dist;
mod math;
mod numeric;
pub mod optimize;
pub mod qfi;
pub mod special;

pub use dist::{
    compose_small_peak, make_pmf, moments_by_summation, moments_closed_form, DistError,
    DistributionSpec, FamilyTemplate, MomentResult, MomentStatus, Pmf, Support, TruncationConfig,
};
pub use optimize::{
    brute_force_variance, crossover_m, fit_scaling_exponent, logarithmic_critical_mu,
    maximize_variance, OptimizeError, Optimum, ScalingFit, VarianceProblem,
};
pub use qfi::{
    bhatia_davis_bound, crlb, popoviciu_bound, qfi_coherent, qfi_from_moments, qfi_mandm,
    qfi_mandm_fixed_mean, qfi_small_peak, qfi_squeezed, QfiError, QfiReport,
};
