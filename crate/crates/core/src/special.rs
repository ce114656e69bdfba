//! Special functions used by the distribution catalog.

use crate::math;

/// Bernoulli numbers over factorials, B_{2j}/(2j)! for j = 1..=6.
const BERNOULLI_OVER_FACTORIAL: [f64; 6] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
];

/// Direct-summation cutoff for the Euler–Maclaurin tail.
const DIRECT_TERMS: u32 = 24;

/// Riemann zeta function ζ(s) for s > 1, evaluated by Euler–Maclaurin
/// summation.
///
/// Returns `f64::INFINITY` for s ≤ 1, where the defining series diverges
/// (this crate never needs the analytic continuation). Relative accuracy is
/// a few ulps over the whole range s ∈ (1, ∞).
pub fn riemann_zeta(s: f64) -> f64 {
    if !s.is_finite() {
        return if s > 0.0 { 1.0 } else { f64::NAN };
    }
    if s <= 1.0 {
        return f64::INFINITY;
    }
    let mut acc = 0.0;
    for k in 1..DIRECT_TERMS {
        acc += math::powf(f64::from(k), -s);
    }
    let n = f64::from(DIRECT_TERMS);
    let n_pow_ms = math::powf(n, -s);
    acc += n * n_pow_ms / (s - 1.0);
    acc += 0.5 * n_pow_ms;
    let mut rising = s;
    let mut n_pow = n_pow_ms / n;
    for (j, coeff) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        acc += coeff * rising * n_pow;
        let j = (j + 1) as f64;
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        n_pow /= n * n;
    }
    acc
}
