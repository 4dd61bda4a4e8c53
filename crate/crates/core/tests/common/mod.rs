#![allow(dead_code)]

#[allow(clippy::excessive_precision)]
pub mod fixtures;

pub fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

/// Brownian Debye function `(2/y⁴)(e^{-y²} - 1 + y²)`.
pub fn bm(y: f64) -> f64 {
    let u = y * y;
    if u < 1e-3 {
        return 1.0 - u / 3.0 + u * u / 12.0 - u * u * u / 60.0;
    }
    2.0 * (f64::exp_m1(-u) + u) / (u * u)
}
