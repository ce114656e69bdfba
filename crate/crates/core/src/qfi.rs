//! Quantum Fisher information and precision bounds for single-mode phase
//! estimation.
//!
//! For a pure probe the QFI is H = 4⟨(Δn̂)²⟩, so everything here is algebra
//! over means and variances: the coherent benchmark H = 4N (the standard
//! quantum limit), the squeezed-vacuum value H = 8(N²+N), the two-point
//! superposition values, and the Popoviciu and Bhatia–Davis ceilings that
//! bound any distribution confined to `[m, M]`.

use core::fmt;

use crate::dist::{MomentResult, MomentStatus};
use crate::math;

/// Errors from the QFI calculators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QfiError {
    /// The input moments carried `NotConverged` and cannot be trusted.
    NotConvergedInput,
    /// The Cramér–Rao bound needs a finite, positive QFI.
    NonPositiveQfi,
    /// A scalar argument violated its documented range.
    InvalidParameter(&'static str),
}

impl fmt::Display for QfiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QfiError::NotConvergedInput => {
                write!(f, "moments did not converge; refusing to derive a QFI")
            }
            QfiError::NonPositiveQfi => {
                write!(f, "precision bound requires a finite positive QFI")
            }
            QfiError::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
        }
    }
}

impl core::error::Error for QfiError {}

/// QFI together with the moments it came from and the implied precision.
#[derive(Clone, Copy, Debug)]
pub struct QfiReport {
    /// Quantum Fisher information, rad⁻²; `f64::INFINITY` when divergent.
    pub qfi: f64,
    /// Photon-number variance behind the QFI.
    pub variance: f64,
    /// Mean photon number.
    pub mean: f64,
    /// Cramér–Rao phase error 1/√(νH); absent when H is infinite or zero.
    pub delta_phi: Option<f64>,
    /// Measurement repetitions ν used for `delta_phi`.
    pub repetitions: u64,
    /// False when the variance (hence the QFI) diverges.
    pub finite: bool,
}

/// QFI from computed moments: H = 4·Var(n̂).
///
/// Divergent variances produce a flagged infinite QFI rather than a silent
/// float infinity flowing into a zero phase error; `NotConverged` moments are
/// refused outright.
pub fn qfi_from_moments(moments: &MomentResult, repetitions: u64) -> Result<QfiReport, QfiError> {
    if repetitions == 0 {
        return Err(QfiError::InvalidParameter("repetitions must be at least 1"));
    }
    match moments.status {
        MomentStatus::NotConverged => Err(QfiError::NotConvergedInput),
        MomentStatus::Diverges => Ok(QfiReport {
            qfi: f64::INFINITY,
            variance: f64::INFINITY,
            mean: moments.mean,
            delta_phi: None,
            repetitions,
            finite: false,
        }),
        MomentStatus::Exact | MomentStatus::Converged { .. } => {
            let qfi = 4.0 * moments.variance;
            Ok(QfiReport {
                qfi,
                variance: moments.variance,
                mean: moments.mean,
                delta_phi: crlb(qfi, repetitions).ok(),
                repetitions,
                finite: true,
            })
        }
    }
}

/// Coherent-state QFI, H = 4N: the standard quantum limit benchmark.
pub fn qfi_coherent(mean: f64) -> f64 {
    4.0 * mean
}

/// Squeezed-vacuum QFI, H = 8(N² + N).
pub fn qfi_squeezed(mean: f64) -> f64 {
    8.0 * (mean * mean + mean)
}

/// QFI of the two-point superposition with probability `weight` on `high`:
/// H = 4·a(1−a)(M−m)².
pub fn qfi_mandm(weight: f64, low: u64, high: u64) -> Result<f64, QfiError> {
    if !(0.0..=1.0).contains(&weight) {
        return Err(QfiError::InvalidParameter("weight must lie in [0, 1]"));
    }
    if low >= high {
        return Err(QfiError::InvalidParameter(
            "low photon number must be below high",
        ));
    }
    let span = (high - low) as f64;
    Ok(4.0 * weight * (1.0 - weight) * span * span)
}

/// Two-point QFI reparameterized at fixed mean: H = 4(M−N)(N−m), the weight
/// being a = (N−m)/(M−m).
pub fn qfi_mandm_fixed_mean(low: u64, high: u64, mean: f64) -> Result<f64, QfiError> {
    if low >= high {
        return Err(QfiError::InvalidParameter(
            "low photon number must be below high",
        ));
    }
    let (low, high) = (low as f64, high as f64);
    if !mean.is_finite() || mean < low || mean > high {
        return Err(QfiError::InvalidParameter("mean must lie within [m, M]"));
    }
    Ok(4.0 * (high - mean) * (mean - low))
}

/// Small-peak QFI, H = 4N(N_π−N) + 4(Δn_π)²·N/N_π with N = a·N_π.
pub fn qfi_small_peak(weight: f64, inner_mean: f64, inner_variance: f64) -> Result<f64, QfiError> {
    if !(0.0..=1.0).contains(&weight) {
        return Err(QfiError::InvalidParameter("weight must lie in [0, 1]"));
    }
    if inner_mean.is_nan() || inner_mean <= 0.0 || !inner_mean.is_finite() {
        return Err(QfiError::InvalidParameter(
            "inner mean must be finite and positive",
        ));
    }
    if inner_variance < 0.0 || !inner_variance.is_finite() {
        return Err(QfiError::InvalidParameter(
            "inner variance must be finite and non-negative",
        ));
    }
    let mean = weight * inner_mean;
    Ok(4.0 * mean * (inner_mean - mean) + 4.0 * inner_variance * mean / inner_mean)
}

/// Cramér–Rao phase-error bound Δφ = 1/√(νH).
pub fn crlb(qfi: f64, repetitions: u64) -> Result<f64, QfiError> {
    if repetitions == 0 {
        return Err(QfiError::InvalidParameter("repetitions must be at least 1"));
    }
    if !qfi.is_finite() || qfi <= 0.0 {
        return Err(QfiError::NonPositiveQfi);
    }
    Ok(1.0 / math::sqrt(repetitions as f64 * qfi))
}

/// Popoviciu variance ceiling (M−m)²/4 for any distribution on `[m, M]`.
///
/// Attained by the balanced two-point distribution. Expects `low ≤ high`.
pub fn popoviciu_bound(low: u64, high: u64) -> f64 {
    let span = high.saturating_sub(low) as f64;
    span * span / 4.0
}

/// Bhatia–Davis variance ceiling (M−N)(N−m), tighter than Popoviciu.
///
/// Attained by the two-point distribution on `{m, M}` with mean N.
pub fn bhatia_davis_bound(low: u64, high: u64, mean: f64) -> Result<f64, QfiError> {
    if low > high {
        return Err(QfiError::InvalidParameter(
            "low photon number must not exceed high",
        ));
    }
    let (low, high) = (low as f64, high as f64);
    if !mean.is_finite() || mean < low || mean > high {
        return Err(QfiError::InvalidParameter("mean must lie within [m, M]"));
    }
    Ok((high - mean) * (mean - low))
}
