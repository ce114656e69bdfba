//! Variance maximization at fixed mean, scaling-exponent fits, and the
//! logarithmic distribution's variance crossover point.
//!
//! The fixed-mean maximization is a linear program over p(m..M) with two
//! equality constraints (normalization and mean), so every vertex of the
//! feasible region carries at most two support points. Enumerating the
//! support pairs and solving each 2×2 weight system in closed form is
//! therefore an exact global solver — no general LP machinery needed — and
//! it lets the optimality claim be certified against an independent
//! dense-distribution search.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dist::{moments_closed_form, DistError, FamilyTemplate, MomentStatus};
use crate::math;
use crate::numeric::bisect;
use crate::qfi::{bhatia_davis_bound, qfi_mandm_fixed_mean};

/// Largest span `M − m` accepted by the brute-force oracle.
const BRUTE_FORCE_SPAN_LIMIT: u64 = 30;

/// Minimum mean decades a scaling sweep must cover.
const SCALING_SPAN_MIN: f64 = 100.0;

/// Minimum points in a scaling fit.
const SCALING_POINTS_MIN: usize = 8;

/// Errors from the optimization operations.
#[derive(Clone, Debug, PartialEq)]
pub enum OptimizeError {
    /// The mean constraint lies outside `[m, M]`.
    Infeasible {
        /// Offending mean constraint.
        mean: f64,
    },
    /// The brute-force oracle only handles spans up to 30.
    InstanceTooLarge {
        /// Requested span `M − m`.
        span: u64,
    },
    /// Scaling sweep spans too little or holds too few points.
    DegenerateSweep(&'static str),
    /// A scaling sweep point has divergent variance.
    DivergentMember {
        /// Parameter value of the divergent point.
        parameter: f64,
    },
    /// A scalar argument violated its documented range.
    InvalidParameter(&'static str),
    /// A sweep point failed distribution validation.
    Spec(DistError),
}

impl fmt::Display for OptimizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OptimizeError::Infeasible { mean } => {
                write!(f, "mean constraint {mean} lies outside the support bounds")
            }
            OptimizeError::InstanceTooLarge { span } => write!(
                f,
                "brute-force oracle handles spans up to {BRUTE_FORCE_SPAN_LIMIT}, got {span}"
            ),
            OptimizeError::DegenerateSweep(why) => write!(f, "degenerate sweep: {why}"),
            OptimizeError::DivergentMember { parameter } => {
                write!(f, "sweep point {parameter} has divergent variance")
            }
            OptimizeError::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            OptimizeError::Spec(err) => write!(f, "{err}"),
        }
    }
}

impl core::error::Error for OptimizeError {}

impl From<DistError> for OptimizeError {
    fn from(err: DistError) -> Self {
        OptimizeError::Spec(err)
    }
}

/// Maximize Var(n) over distributions on `{m..M}` with mean fixed at `mean`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VarianceProblem {
    low: u64,
    high: u64,
    mean: f64,
}

impl VarianceProblem {
    /// Validated problem: requires `low < high` and `low ≤ mean ≤ high`.
    pub fn new(low: u64, high: u64, mean: f64) -> Result<Self, OptimizeError> {
        if low >= high {
            return Err(OptimizeError::InvalidParameter(
                "low photon number must be below high",
            ));
        }
        if !mean.is_finite() || mean < low as f64 || mean > high as f64 {
            return Err(OptimizeError::Infeasible { mean });
        }
        Ok(VarianceProblem { low, high, mean })
    }

    /// Lower support bound m.
    pub fn low(&self) -> u64 {
        self.low
    }

    /// Upper support bound M.
    pub fn high(&self) -> u64 {
        self.high
    }

    /// Mean constraint N.
    pub fn mean(&self) -> f64 {
        self.mean
    }
}

/// Solution of the fixed-mean variance maximization.
#[derive(Clone, Debug)]
pub struct Optimum {
    /// Occupied photon numbers (at most two).
    pub support: Vec<u64>,
    /// Matching probabilities; non-negative, summing to one.
    pub weights: Vec<f64>,
    /// Achieved variance.
    pub variance: f64,
    /// Achieved variance minus the Bhatia–Davis ceiling (zero at optimality).
    pub bound_gap: f64,
}

/// Exact solver by support-pair vertex enumeration.
///
/// Every pair (i, j) with i ≤ N ≤ j admits exactly one feasible weight
/// assignment; scanning all pairs and keeping the best is a global optimum.
/// The winner is always the extreme pair {m, M} with weights
/// ((M−N)/(M−m), (N−m)/(M−m)); a mean pinned at m or M collapses to a
/// one-point distribution with zero variance.
pub fn maximize_variance(problem: &VarianceProblem) -> Optimum {
    let mean = problem.mean;
    let low_candidates = problem.low..=(math::floor(mean) as u64).min(problem.high);
    let mut best_variance = f64::NEG_INFINITY;
    let mut best_pair = (problem.low, problem.high);
    for i in low_candidates {
        let high_start = (math::ceil(mean) as u64).max(i + 1);
        for j in high_start..=problem.high {
            let (fi, fj) = (i as f64, j as f64);
            let weight_high = (mean - fi) / (fj - fi);
            let second = (1.0 - weight_high) * fi * fi + weight_high * fj * fj;
            let variance = second - mean * mean;
            if variance > best_variance {
                best_variance = variance;
                best_pair = (i, j);
            }
        }
    }

    // A mean equal to an endpoint only admits the degenerate point mass.
    let (i, j) = best_pair;
    let weight_high = (mean - i as f64) / ((j - i) as f64);
    let bound = bhatia_davis_bound(problem.low, problem.high, mean)
        .expect("problem is validated feasible");
    if best_variance <= 0.0 {
        let point = if mean == problem.low as f64 { problem.low } else { problem.high };
        return Optimum {
            support: vec![point],
            weights: vec![1.0],
            variance: 0.0,
            bound_gap: -bound,
        };
    }
    Optimum {
        support: vec![i, j],
        weights: vec![1.0 - weight_high, weight_high],
        variance: best_variance,
        bound_gap: best_variance - bound,
    }
}

/// Independent dense-search oracle for [`maximize_variance`].
///
/// Scans every support pair exactly and every support triple on a weight
/// grid of the given resolution, keeping the best variance among feasible
/// distributions (mean met by construction). By LP theory it can never beat
/// the vertex enumeration; tests assert that dominance.
pub fn brute_force_variance(
    problem: &VarianceProblem,
    grid: u32,
) -> Result<f64, OptimizeError> {
    let span = problem.high - problem.low;
    if span > BRUTE_FORCE_SPAN_LIMIT {
        return Err(OptimizeError::InstanceTooLarge { span });
    }
    if grid < 2 {
        return Err(OptimizeError::InvalidParameter(
            "grid resolution must be at least 2",
        ));
    }
    let mean = problem.mean;
    let points: Vec<u64> = (problem.low..=problem.high).collect();
    let mut best = f64::NEG_INFINITY;

    // Singleton: only a point mass exactly at an integer mean.
    if mean == math::floor(mean) && problem.low as f64 <= mean && mean <= problem.high as f64 {
        best = 0.0;
    }

    for (a, &i) in points.iter().enumerate() {
        let fi = i as f64;
        if fi > mean {
            break;
        }
        for &j in &points[a + 1..] {
            let fj = j as f64;
            if fj < mean {
                continue;
            }
            // Pair: the mean constraint fixes both weights.
            let w_j = (mean - fi) / (fj - fi);
            let second = (1.0 - w_j) * fi * fi + w_j * fj * fj;
            best = best.max(second - mean * mean);
        }
    }

    for (a, &i) in points.iter().enumerate() {
        let fi = i as f64;
        if fi > mean {
            break;
        }
        for (b, &j) in points.iter().enumerate().skip(a + 1) {
            let fj = j as f64;
            for &k in &points[b + 1..] {
                let fk = k as f64;
                if fk < mean {
                    continue;
                }
                // Triple: sweep the middle weight, solve the outer two.
                for step in 0..=grid {
                    let w_j = step as f64 / grid as f64;
                    let w_k = (mean - w_j * fj - (1.0 - w_j) * fi) / (fk - fi);
                    let w_i = 1.0 - w_j - w_k;
                    if w_k < -1e-12 || w_i < -1e-12 {
                        continue;
                    }
                    let second = w_i * fi * fi + w_j * fj * fj + w_k * fk * fk;
                    best = best.max(second - mean * mean);
                }
            }
        }
    }

    Ok(best.max(0.0))
}

/// Least-squares slope of log QFI against log mean photon number.
#[derive(Clone, Copy, Debug)]
pub struct ScalingFit {
    /// Fitted exponent (slope).
    pub exponent: f64,
    /// Fitted intercept in ln H.
    pub intercept: f64,
    /// Coefficient of determination of the fit.
    pub r_squared: f64,
    /// Smallest and largest mean photon number in the sweep.
    pub mean_range: (f64, f64),
    /// Number of fitted points.
    pub points: usize,
}

/// Fits H ∝ N^exponent over a family's parameter sweep using the closed-form
/// moments of each point.
///
/// Heisenberg-class families (H ∝ N²) fit to slope 2; the sub-Heisenberg
/// branching family (H = 4N²(N−1)) to slope 3 at large N. Requires at least
/// eight points spanning two decades in the mean.
pub fn fit_scaling_exponent(
    template: &FamilyTemplate,
    params: &[f64],
) -> Result<ScalingFit, OptimizeError> {
    if params.len() < SCALING_POINTS_MIN {
        return Err(OptimizeError::DegenerateSweep("fewer than 8 sweep points"));
    }
    let mut log_points = Vec::with_capacity(params.len());
    let mut mean_lo = f64::INFINITY;
    let mut mean_hi = f64::NEG_INFINITY;
    for &param in params {
        let spec = template.instantiate(param)?;
        let moments = moments_closed_form(&spec)?;
        if moments.status == MomentStatus::Diverges {
            return Err(OptimizeError::DivergentMember { parameter: param });
        }
        let qfi = 4.0 * moments.variance;
        if moments.mean <= 0.0 || qfi <= 0.0 || moments.mean.is_nan() || qfi.is_nan() {
            return Err(OptimizeError::DegenerateSweep(
                "sweep point has zero mean or zero QFI",
            ));
        }
        mean_lo = mean_lo.min(moments.mean);
        mean_hi = mean_hi.max(moments.mean);
        log_points.push((math::ln(moments.mean), math::ln(qfi)));
    }
    // Slack of a few ulps so sweeps built from inverted means that land
    // exactly on the two-decade boundary still qualify.
    if mean_hi < SCALING_SPAN_MIN * mean_lo * (1.0 - 1e-9) {
        return Err(OptimizeError::DegenerateSweep(
            "mean range spans fewer than two decades",
        ));
    }

    let count = log_points.len() as f64;
    let mean_x = log_points.iter().map(|(x, _)| x).sum::<f64>() / count;
    let mean_y = log_points.iter().map(|(_, y)| y).sum::<f64>() / count;
    let mut covariance = 0.0;
    let mut variance_x = 0.0;
    let mut variance_y = 0.0;
    for (x, y) in &log_points {
        covariance += (x - mean_x) * (y - mean_y);
        variance_x += (x - mean_x) * (x - mean_x);
        variance_y += (y - mean_y) * (y - mean_y);
    }
    let exponent = covariance / variance_x;
    let intercept = mean_y - exponent * mean_x;
    let residual: f64 = log_points
        .iter()
        .map(|(x, y)| {
            let fitted = intercept + exponent * x;
            (y - fitted) * (y - fitted)
        })
        .sum();
    let r_squared = if variance_y > 0.0 {
        (1.0 - residual / variance_y).clamp(0.0, 1.0)
    } else {
        1.0
    };
    Ok(ScalingFit {
        exponent,
        intercept,
        r_squared,
        mean_range: (mean_lo, mean_hi),
        points: log_points.len(),
    })
}

/// Parameter where the logarithmic variance excess changes sign, i.e. the
/// root of 2μ + ln(1−μ) on (0.5, 0.999).
///
/// The bracket is analytic — the function is positive at 0.5 and negative at
/// 0.999 — so plain bisection is robust where a derivative method would
/// struggle against the ln(1−μ) blow-up. Tolerances at or below zero are
/// clamped to machine epsilon.
pub fn logarithmic_critical_mu(tol: f64) -> f64 {
    let tol = if tol > 0.0 { tol } else { f64::EPSILON };
    bisect(|mu| 2.0 * mu + math::ln_1p(-mu), 0.5, 0.999, tol, 200)
        .expect("analytic bracket always holds")
}

/// Smallest cutoff M at which the zero-based two-point state reaches
/// `target_qfi` at fixed mean: min { M ≥ ⌈N⌉ : 4N(M−N) ≥ target }.
pub fn crossover_m(mean: f64, target_qfi: f64) -> Result<u64, OptimizeError> {
    if !mean.is_finite() || mean <= 0.0 {
        return Err(OptimizeError::InvalidParameter(
            "mean photon number must be positive",
        ));
    }
    if !target_qfi.is_finite() || target_qfi <= 0.0 {
        return Err(OptimizeError::InvalidParameter(
            "target QFI must be positive",
        ));
    }
    // Closed-form inversion, then a local scan to absorb rounding at ties.
    let floor_m = (math::ceil(mean) as u64).max(1);
    let mut cutoff = (math::ceil(mean + target_qfi / (4.0 * mean)) as u64).max(floor_m);
    let reaches = |m: u64| {
        qfi_mandm_fixed_mean(0, m, mean).is_ok_and(|qfi| qfi >= target_qfi)
    };
    while !reaches(cutoff) {
        cutoff += 1;
    }
    while cutoff > floor_m && reaches(cutoff - 1) {
        cutoff -= 1;
    }
    Ok(cutoff)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(got: f64, want: f64, tol: f64) {
        assert!(math::abs(got - want) <= tol, "got {got}, want {want}");
    }

    #[test]
    fn optimum_sits_on_the_extreme_pair() {
        let problem = VarianceProblem::new(0, 25, 7.46).unwrap();
        let opt = maximize_variance(&problem);
        assert_eq!(opt.support, vec![0, 25]);
        assert_close(opt.weights[0], 0.7016, 1e-12);
        assert_close(opt.weights[1], 0.2984, 1e-12);
        assert_close(opt.variance, 130.8484, 1e-10);
        assert!(math::abs(opt.bound_gap) < 1e-10);
    }

    #[test]
    fn balanced_mean_reaches_popoviciu() {
        let opt = maximize_variance(&VarianceProblem::new(0, 10, 5.0).unwrap());
        assert_eq!(opt.support, vec![0, 10]);
        assert_close(opt.weights[0], 0.5, 1e-12);
        assert_close(opt.variance, 25.0, 1e-12);
    }

    #[test]
    fn shifted_window() {
        let opt = maximize_variance(&VarianceProblem::new(3, 9, 4.0).unwrap());
        assert_close(opt.variance, 5.0, 1e-12);
        assert_eq!(opt.support, vec![3, 9]);
    }

    #[test]
    fn degenerate_mean_is_a_point_mass() {
        let opt = maximize_variance(&VarianceProblem::new(3, 9, 3.0).unwrap());
        assert_eq!(opt.support, vec![3]);
        assert_eq!(opt.weights, vec![1.0]);
        assert_eq!(opt.variance, 0.0);
    }

    #[test]
    fn problem_validation() {
        assert!(matches!(
            VarianceProblem::new(0, 25, 26.0),
            Err(OptimizeError::Infeasible { .. })
        ));
        assert!(VarianceProblem::new(5, 5, 5.0).is_err());
    }

    #[test]
    fn brute_force_respects_known_ceilings() {
        let problem = VarianceProblem::new(0, 5, 2.5).unwrap();
        let best = brute_force_variance(&problem, 100).unwrap();
        assert!(best <= 6.25 + 1e-12);
        assert_close(best, 6.25, 1e-9);

        let problem = VarianceProblem::new(0, 8, 3.0).unwrap();
        let best = brute_force_variance(&problem, 100).unwrap();
        assert!(best <= 15.0 + 1e-12);
        assert_close(best, 15.0, 1e-9);

        let problem = VarianceProblem::new(1, 4, 2.0).unwrap();
        let best = brute_force_variance(&problem, 100).unwrap();
        assert!(best <= 2.0 + 1e-12);
        assert_close(best, 2.0, 1e-9);
    }

    #[test]
    fn brute_force_rejects_large_instances() {
        let problem = VarianceProblem::new(0, 40, 11.0).unwrap();
        assert!(matches!(
            brute_force_variance(&problem, 100),
            Err(OptimizeError::InstanceTooLarge { span: 40 })
        ));
    }

    #[test]
    fn critical_mu_matches_the_known_root() {
        let root = logarithmic_critical_mu(1e-6);
        assert!(math::abs(root - 0.7968) < 5e-5);
        assert!(math::abs(2.0 * root + math::ln_1p(-root)) < 1e-5);
        // Stability: halving the tolerance moves the root by less than tol.
        let finer = logarithmic_critical_mu(5e-7);
        assert!(math::abs(finer - root) < 1e-6);
    }

    #[test]
    fn crossover_reproduces_the_working_point() {
        assert_eq!(crossover_m(7.46, 504.89).unwrap(), 25);
        assert_eq!(crossover_m(1.0, 4.0).unwrap(), 2);
        // 4·7.46·(M−7.46) ≥ 1e5 first holds at M = 3359.
        let m = crossover_m(7.46, 1e5).unwrap();
        assert_eq!(m, 3359);
        assert!(qfi_mandm_fixed_mean(0, m, 7.46).unwrap() >= 1e5);
        assert!(qfi_mandm_fixed_mean(0, m - 1, 7.46).unwrap() < 1e5);
        assert!(crossover_m(0.0, 1.0).is_err());
        assert!(crossover_m(1.0, -1.0).is_err());
    }

    #[test]
    fn scaling_fit_recovers_heisenberg_exponent() {
        let params = FamilyTemplate::Geometric
            .params_for_mean_range(100.0, 10_000.0, 12)
            .unwrap();
        let fit = fit_scaling_exponent(&FamilyTemplate::Geometric, &params).unwrap();
        assert!(math::abs(fit.exponent - 2.0) < 0.02, "slope {}", fit.exponent);
        assert!(fit.r_squared > 0.9999);
        assert_eq!(fit.points, 12);
    }

    #[test]
    fn scaling_fit_negative_binomial_light_branch() {
        // Shape 0.5 keeps the excess term positive for every mu, so the
        // family stays Heisenberg-class.
        let template = FamilyTemplate::NegativeBinomial { shape: 0.5 };
        let params = template.params_for_mean_range(100.0, 10_000.0, 12).unwrap();
        let fit = fit_scaling_exponent(&template, &params).unwrap();
        assert!(math::abs(fit.exponent - 2.0) < 0.02, "slope {}", fit.exponent);
    }

    #[test]
    fn scaling_fit_errors() {
        assert!(matches!(
            fit_scaling_exponent(&FamilyTemplate::Geometric, &[0.1; 4]),
            Err(OptimizeError::DegenerateSweep(_))
        ));
        // Narrow span: all means within one decade.
        let params = FamilyTemplate::Geometric
            .params_for_mean_range(10.0, 20.0, 8)
            .unwrap();
        assert!(matches!(
            fit_scaling_exponent(&FamilyTemplate::Geometric, &params),
            Err(OptimizeError::DegenerateSweep(_))
        ));
        // Divergent member: any zeta sweep with s ≤ 3.
        let result = fit_scaling_exponent(
            &FamilyTemplate::Zeta,
            &[2.1, 2.2, 2.3, 2.4, 2.5, 2.6, 2.7, 2.8],
        );
        assert!(matches!(result, Err(OptimizeError::DivergentMember { .. })));
    }
}
