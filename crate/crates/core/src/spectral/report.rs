//! Two-grid eigenvalue runs paired with analytic values.

use serde::Serialize;

use super::eigen::lowest_eigenvalues;
use super::grid::{discretize, GridSpec};
use super::richardson::richardson_with_ratio;
use crate::error::{Error, Result};
use crate::poly::rational::{to_f64, Rational};
use crate::susy::RadialPotential;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GridMeta {
    pub r_min: f64,
    pub r_max: f64,
    pub coarse_points: usize,
    pub fine_points: usize,
    pub coarse_step: f64,
    pub fine_step: f64,
}

/// Numeric eigenvalues on a coarse and a fine grid and their extrapolation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TwoGridEigenvalues {
    pub coarse: Vec<f64>,
    pub fine: Vec<f64>,
    pub extrapolated: Vec<f64>,
    pub grid: GridMeta,
}

pub fn two_grid_eigenvalues(
    potential: &(dyn RadialPotential + Sync),
    coarse: &GridSpec,
    fine: &GridSpec,
    count: usize,
) -> Result<TwoGridEigenvalues> {
    if coarse.r_min != fine.r_min || coarse.r_max != fine.r_max || fine.n_points <= coarse.n_points {
        return Err(Error::InvalidParameter(
            "fine grid must cover the same interval with more points".into(),
        ));
    }
    let tc = discretize(potential, coarse)?;
    let tf = discretize(potential, fine)?;
    let ec = lowest_eigenvalues(&tc, count)?;
    let ef = lowest_eigenvalues(&tf, count)?;
    let ratio = coarse.step() / fine.step();
    let extrapolated = ec.iter().zip(&ef).map(|(c, f)| richardson_with_ratio(*c, *f, ratio)).collect();
    Ok(TwoGridEigenvalues {
        coarse: ec,
        fine: ef,
        extrapolated,
        grid: GridMeta {
            r_min: coarse.r_min,
            r_max: coarse.r_max,
            coarse_points: coarse.n_points,
            fine_points: fine.n_points,
            coarse_step: coarse.step(),
            fine_step: fine.step(),
        },
    })
}

/// Analytic against numeric eigenvalues. `rel_errors` compare the
/// extrapolated values.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumReport {
    #[serde(with = "crate::poly::rational::serde_string_vec")]
    pub analytic: Vec<Rational>,
    pub numeric: Vec<f64>,
    #[serde(rename = "extrapolated")]
    pub numeric_extrapolated: Vec<f64>,
    pub rel_errors: Vec<f64>,
    pub grid: GridMeta,
}

impl SpectrumReport {
    pub fn max_rel_error(&self) -> f64 {
        self.rel_errors.iter().copied().fold(0.0, f64::max)
    }
}

pub fn spectrum_report(
    potential: &(dyn RadialPotential + Sync),
    analytic: &[Rational],
    coarse: &GridSpec,
    fine: &GridSpec,
) -> Result<SpectrumReport> {
    let run = two_grid_eigenvalues(potential, coarse, fine, analytic.len())?;
    let rel_errors = analytic
        .iter()
        .zip(&run.extrapolated)
        .map(|(a, x)| {
            let a = to_f64(a);
            (x - a).abs() / a.abs()
        })
        .collect();
    Ok(SpectrumReport {
        analytic: analytic.to_vec(),
        numeric: run.fine,
        numeric_extrapolated: run.extrapolated,
        rel_errors,
        grid: run.grid,
    })
}
