//! The N-body side: radial-reduction constants, the symmetric polynomials
//! `P_{k,q}`, the QES potential `U` and finite-difference checks of the
//! assembled eigenfunctions.

pub mod calogero;
pub mod eigen;
pub mod multipoly;
pub mod spec;

pub use calogero::{
    calogero_operator_apply, centered_power_sum, homogeneous_basis, pairwise_term,
    polynomial_rank, solve_pkq, AngularPoly, PkqSolution, PowerSumProduct,
};
pub use eigen::{
    assemble_baseline, assemble_eigenfunction, ground_state_direct, ground_state_ratio_matches,
    potential_u, potential_u_baseline, radius, radius_squared_exact, radius_squared_pairwise,
    residual_check, sample_sector_points, ManyBodyEigenfunction, PointResidual, RadialFactor,
    ResidualReport, DEFAULT_FD_STEP, DEFAULT_MIN_GAP, PSI_FLOOR,
};
pub use multipoly::{MultiIndex, MultiPoly};
pub use spec::{reduction_constants, ManyBodySpec, MaybeExact, ReductionConstants, MAX_RESIDUAL_PARTICLES};
