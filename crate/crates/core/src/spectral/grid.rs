//! Uniform radial grids and the three-point discretization of
//! `-d²/dr² + V(r)` with Dirichlet ends.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::susy::RadialPotential;

/// Dirichlet boundaries sit at `r_min` and `r_max`; the `n_points` interior
/// nodes are `r_min + i h`, `i = 1..=n_points`, so the potential is never
/// evaluated on a boundary.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub r_min: f64,
    pub r_max: f64,
    pub n_points: usize,
}

pub const DEFAULT_R_MAX: f64 = 12.0;
pub const DEFAULT_POINTS: usize = 4000;

impl GridSpec {
    pub fn new(r_min: f64, r_max: f64, n_points: usize) -> Result<Self> {
        if !(r_min >= 0.0 && r_min.is_finite() && r_max.is_finite()) || r_min >= r_max {
            return Err(Error::InvalidParameter(format!(
                "grid needs 0 <= r_min < r_max, got [{r_min}, {r_max}]"
            )));
        }
        if n_points < 3 {
            return Err(Error::InvalidParameter(format!("grid needs at least 3 points, got {n_points}")));
        }
        Ok(Self { r_min, r_max, n_points })
    }

    /// Boundary at the origin, first node one step off it.
    pub fn radial(r_max: f64, n_points: usize) -> Result<Self> {
        Self::new(0.0, r_max, n_points)
    }

    pub fn step(&self) -> f64 {
        (self.r_max - self.r_min) / (self.n_points as f64 + 1.0)
    }

    pub fn node(&self, i: usize) -> f64 {
        self.r_min + (i as f64 + 1.0) * self.step()
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.node(i)).collect()
    }

    /// Same interval with `2 n + 1` interior points, i.e. exactly half the step.
    pub fn halved(&self) -> Self {
        Self { n_points: 2 * self.n_points + 1, ..*self }
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self { r_min: 0.0, r_max: DEFAULT_R_MAX, n_points: DEFAULT_POINTS }
    }
}

/// Symmetric tridiagonal matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Tridiag {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl Tridiag {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(Error::InvalidParameter(format!(
                "tridiagonal shape mismatch: {} diagonal, {} off-diagonal entries",
                diag.len(),
                off.len()
            )));
        }
        Ok(Self { diag, off })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Row-sum (infinity) norm.
    pub fn norm(&self) -> f64 {
        (0..self.len())
            .map(|i| {
                let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
                let right = if i + 1 < self.len() { self.off[i].abs() } else { 0.0 };
                self.diag[i].abs() + left + right
            })
            .fold(0.0, f64::max)
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..self.len() {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < self.len() { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i] * v[i];
                if i > 0 {
                    s += self.off[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    s += self.off[i] * v[i + 1];
                }
                s
            })
            .collect()
    }
}

/// `diag[i] = 2/h^2 + V(r_i)`, `off[i] = -1/h^2`.
pub fn discretize(potential: &dyn RadialPotential, grid: &GridSpec) -> Result<Tridiag> {
    let h = grid.step();
    let inv_h2 = 1.0 / (h * h);
    let diag = grid
        .nodes()
        .into_iter()
        .map(|r| {
            let v = potential.value(r);
            if v.is_finite() {
                Ok(2.0 * inv_h2 + v)
            } else {
                Err(Error::NonFinitePotential { r, value: v })
            }
        })
        .collect::<Result<Vec<f64>>>()?;
    let off = vec![-inv_h2; grid.n_points - 1];
    Tridiag::new(diag, off)
}
