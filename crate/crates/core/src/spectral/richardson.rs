//! Richardson extrapolation for second-order discretizations.

/// `(4 e_{h/2} - e_h) / 3`: removes the `h^2` term from two estimates taken
/// at steps `h` and `h/2`.
pub fn richardson(e_h: f64, e_h2: f64) -> f64 {
    (4.0 * e_h2 - e_h) / 3.0
}

/// Same elimination for an arbitrary step ratio `ratio = h_coarse / h_fine`.
pub fn richardson_with_ratio(e_coarse: f64, e_fine: f64, ratio: f64) -> f64 {
    let r2 = ratio * ratio;
    (r2 * e_fine - e_coarse) / (r2 - 1.0)
}

/// Least-squares slope of `log(error)` against `log(h)`.
pub fn convergence_order(steps: &[f64], errors: &[f64]) -> f64 {
    let xs: Vec<f64> = steps.iter().map(|h| h.ln()).collect();
    let ys: Vec<f64> = errors.iter().map(|e| e.abs().ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        assert!((richardson(10.04, 10.01) - 10.0).abs() < 1e-12);
        assert!((richardson_with_ratio(10.04, 10.01, 2.0) - 10.0).abs() < 1e-12);
    }

    #[test]
    fn exact_on_pure_quadratic_error() {
        let f = |h: f64| 3.0 + 0.7 * h * h;
        assert!((richardson_with_ratio(f(0.3), f(0.1), 3.0) - 3.0).abs() < 1e-14);
    }

    #[test]
    fn slope_of_power_law() {
        let hs = [0.1, 0.05, 0.025, 0.0125];
        let es: Vec<f64> = hs.iter().map(|h| 2.0 * h * h).collect();
        assert!((convergence_order(&hs, &es) - 2.0).abs() < 1e-12);
    }
}
