//! Small least-squares helpers for asymptote and decay-rate extraction.

use crate::fp;

/// Ordinary least squares for y ≈ intercept + slope·x.
/// Returns `(intercept, slope)`. Caller guarantees at least two distinct x.
pub fn linear(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    debug_assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        let dx = x - mean_x;
        sxx += dx * dx;
        sxy += dx * (y - mean_y);
    }
    let slope = sxy / sxx;
    (mean_y - slope * mean_x, slope)
}

/// Fits r ≈ amplitude·exp(-rate·x) by least squares on ln r.
/// Returns `(amplitude, rate)`. All r must be strictly positive.
pub fn log_linear_decay(xs: &[f64], rs: &[f64]) -> (f64, f64) {
    debug_assert!(rs.iter().all(|&r| r > 0.0));
    let logs: alloc::vec::Vec<f64> = rs.iter().map(|&r| fp::ln(r)).collect();
    let (ln_a, slope) = linear(xs, &logs);
    (fp::exp(ln_a), -slope)
}
