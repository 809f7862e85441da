//! Sturm-sequence bisection and inverse iteration for symmetric tridiagonal
//! matrices.

use rayon::prelude::*;

use super::grid::Tridiag;
use crate::error::{Error, Result};

/// Absolute bisection tolerance.
pub const BISECTION_TOL: f64 = 1e-12;

/// Number of eigenvalues strictly below `lambda`: the count of negative
/// pivots in the LDLᵀ factorization of `T - lambda I`.
pub fn sturm_count(t: &Tridiag, lambda: f64) -> usize {
    let guard = f64::MIN_POSITIVE.sqrt() * (1.0 + lambda.abs());
    let mut count = 0;
    let mut q = t.diag[0] - lambda;
    for i in 0..t.len() {
        if i > 0 {
            let e = t.off[i - 1];
            q = (t.diag[i] - lambda) - e * e / q;
        }
        if q == 0.0 {
            q = -guard;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `k`-th smallest eigenvalue (0-based) by bisection on the Sturm count.
pub fn kth_eigenvalue(t: &Tridiag, k: usize) -> f64 {
    let (mut lo, mut hi) = t.gershgorin();
    loop {
        let mid = 0.5 * (lo + hi);
        // Stops at the tolerance or at floating-point resolution, whichever comes first.
        if hi - lo <= BISECTION_TOL || mid <= lo || mid >= hi {
            return mid;
        }
        if sturm_count(t, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// The `count` smallest eigenvalues in nondecreasing order, with
/// multiplicity. Each is bracketed independently, so the work is spread
/// across threads.
pub fn lowest_eigenvalues(t: &Tridiag, count: usize) -> Result<Vec<f64>> {
    if count > t.len() {
        return Err(Error::TooManyEigenvalues { requested: count, size: t.len() });
    }
    Ok((0..count).into_par_iter().map(|k| kth_eigenvalue(t, k)).collect())
}

/// Solves `(T - shift I) x = b` by Gaussian elimination with partial
/// pivoting on the band (a fill-in superdiagonal appears).
fn shifted_solve(t: &Tridiag, shift: f64, b: &[f64]) -> Vec<f64> {
    let n = t.len();
    let tiny = f64::EPSILON * t.norm().max(1.0);
    // Row i of U has entries at columns i, i+1, i+2.
    let mut d: Vec<f64> = t.diag.iter().map(|v| v - shift).collect();
    let mut du: Vec<f64> = t.off.clone();
    du.push(0.0);
    let mut du2 = vec![0.0; n];
    let mut dl: Vec<f64> = t.off.clone();
    let mut x = b.to_vec();
    for i in 0..n.saturating_sub(1) {
        if d[i].abs() >= dl[i].abs() {
            if d[i] == 0.0 {
                d[i] = tiny;
            }
            let m = dl[i] / d[i];
            d[i + 1] -= m * du[i];
            x[i + 1] -= m * x[i];
            dl[i] = 0.0;
        } else {
            let m = d[i] / dl[i];
            d[i] = dl[i];
            let tmp = d[i + 1];
            d[i + 1] = du[i] - m * tmp;
            du[i] = tmp;
            if i + 1 < n - 1 {
                du2[i] = du[i + 1];
                du[i + 1] *= -m;
            }
            x.swap(i, i + 1);
            x[i + 1] -= m * x[i];
        }
    }
    if d[n - 1] == 0.0 {
        d[n - 1] = tiny;
    }
    for i in (0..n).rev() {
        let mut s = x[i];
        if i + 1 < n {
            s -= du[i] * x[i + 1];
        }
        if i + 2 < n {
            s -= du2[i] * x[i + 2];
        }
        x[i] = s / d[i];
    }
    x
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= norm);
}

pub const INVERSE_ITERATION_CAP: usize = 60;

/// Unit eigenvector for an eigenvalue approximated by `lambda`, by shifted
/// inverse iteration. The sign is fixed so the first entry of largest
/// magnitude among the leading entries is positive.
pub fn eigenvector(t: &Tridiag, lambda: f64) -> Result<Vec<f64>> {
    let n = t.len();
    let tnorm = t.norm();
    let mut v: Vec<f64> = (0..n).map(|i| 1.0 + 0.1 * ((i * 7919) % 13) as f64).collect();
    normalize(&mut v);
    for _ in 0..INVERSE_ITERATION_CAP {
        let mut next = shifted_solve(t, lambda, &v);
        if next.iter().any(|x| !x.is_finite()) {
            return Err(Error::NoConvergence(lambda));
        }
        normalize(&mut next);
        let tv = t.mul_vec(&next);
        let residual = tv
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - lambda * b).powi(2))
            .sum::<f64>()
            .sqrt();
        let overlap: f64 = next.iter().zip(&v).map(|(a, b)| a * b).sum();
        v = next;
        if residual <= 1e-8 * tnorm && (1.0 - overlap.abs()) < 1e-14 {
            let pivot = v.iter().copied().find(|x| x.abs() > 1e-8).unwrap_or(1.0);
            if pivot < 0.0 {
                v.iter_mut().for_each(|x| *x = -*x);
            }
            return Ok(v);
        }
    }
    Err(Error::NoConvergence(lambda))
}
