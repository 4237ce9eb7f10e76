use alloc::vec::Vec;

use num_complex::Complex64;

use crate::polyalg::binomial;

/// Raw moments `E[X^n]`, `n = 0..=max`, of `X ~ N(mean, variance)`.
///
/// The mean may be complex: the formulas are polynomial in it and the
/// underlying Gaussian integrals continue analytically.
pub(crate) fn shifted_gaussian_moments(max: usize, mean: Complex64, variance: f64) -> Vec<Complex64> {
    // central moments: (k−1)!! σ^k for even k
    let mut central = alloc::vec![0.0; max + 1];
    central[0] = 1.0;
    let mut k = 2;
    while k <= max {
        central[k] = central[k - 2] * (k - 1) as f64 * variance;
        k += 2;
    }
    let mut mean_pow = Vec::with_capacity(max + 1);
    let mut acc = Complex64::new(1.0, 0.0);
    for _ in 0..=max {
        mean_pow.push(acc);
        acc *= mean;
    }
    (0..=max)
        .map(|n| {
            (0..=n)
                .step_by(2)
                .map(|k| mean_pow[n - k] * binomial(n, k) * central[k])
                .sum()
        })
        .collect()
}

/// `∫ x^n e^{−A x² + B x} dx` over the real line for `n = 0..=max`, `A > 0`.
pub(crate) fn gaussian_moment_integrals(max: usize, quad: f64, linear: Complex64) -> Vec<Complex64> {
    let mean = linear / (2.0 * quad);
    let norm = libm::sqrt(core::f64::consts::PI / quad) * (linear * linear / (4.0 * quad)).exp();
    shifted_gaussian_moments(max, mean, 1.0 / (2.0 * quad))
        .into_iter()
        .map(|m| m * norm)
        .collect()
}
