//! Built-in test sources used by the experiment driver.

/// Superposition of Gaussian bumps with mixed signs; significant mass out to
/// |x| ~ 3, so reconstructions use the compressed variant [`mean_g1`].
pub fn mean_g(x: [f64; 2]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    0.3 * (1.0 - x1) * (1.0 - x1) * (-x1 * x1 - (x2 + 1.0) * (x2 + 1.0)).exp()
        - (0.2 * x1 - x1.powi(3) - x2.powi(5)) * (-x1 * x1 - x2 * x2).exp()
        - 0.03 * (-(x1 + 1.0) * (x1 + 1.0) - x2 * x2).exp()
}

/// `g` compressed into the inner third of the square, so its support is
/// essentially contained in the unit source box.
pub fn mean_g1(x: [f64; 2]) -> f64 {
    mean_g([3.0 * x[0], 3.0 * x[1]])
}

/// Radial standard-deviation profile, peaked near r = 0.5.
pub fn std_sigma(x: [f64; 2]) -> f64 {
    let r = x[0].hypot(x[1]);
    0.6 * (-8.0 * (r.powi(3) - 0.75 * r * r)).exp()
}

/// Variance profile `sigma^2`.
pub fn variance_sigma1(x: [f64; 2]) -> f64 {
    let s = std_sigma(x);
    s * s
}
