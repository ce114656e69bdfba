//! Shared scalar root bracketing.

use crate::math;

/// Bisection on `[lo, hi]`; `f(lo)` and `f(hi)` must have opposite signs.
///
/// Returns the midpoint once the bracket half-width drops below `tol`, or
/// `None` when the bracket is invalid or does not change sign.
pub(crate) fn bisect<F: Fn(f64) -> f64>(
    f: F,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
    max_iter: u32,
) -> Option<f64> {
    if lo.is_nan() || hi.is_nan() || lo >= hi {
        return None;
    }
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Some(lo);
    }
    if f_hi == 0.0 {
        return Some(hi);
    }
    if f_lo * f_hi > 0.0 || !f_lo.is_finite() || !f_hi.is_finite() {
        return None;
    }
    let mut mid = 0.5 * (lo + hi);
    for _ in 0..max_iter {
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Some(mid);
        }
        if f_mid * f_lo > 0.0 {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        mid = 0.5 * (lo + hi);
        if math::abs(hi - lo) < 2.0 * tol {
            return Some(mid);
        }
    }
    Some(mid)
}
