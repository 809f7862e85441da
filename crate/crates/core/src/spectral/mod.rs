//! Independent numerics: finite differences, Sturm bisection, inverse
//! iteration, Richardson extrapolation and adaptive quadrature.

pub mod eigen;
pub mod grid;
pub mod quad;
pub mod report;
pub mod richardson;

pub use eigen::{eigenvector, kth_eigenvalue, lowest_eigenvalues, sturm_count};
pub use grid::{discretize, GridSpec, Tridiag, DEFAULT_POINTS, DEFAULT_R_MAX};
pub use quad::integrate;
pub use report::{spectrum_report, two_grid_eigenvalues, GridMeta, SpectrumReport, TwoGridEigenvalues};
pub use richardson::{convergence_order, richardson, richardson_with_ratio};
