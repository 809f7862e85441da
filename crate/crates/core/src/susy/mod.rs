//! Supersymmetric pair built on the conditional superpotential: partner
//! potentials, analytic spectra, exact eigenstates and ladder operators.

pub mod params;
pub mod phase;
pub mod potential;
pub mod states;
pub mod wave;

pub use params::{
    analytic_energy, constrained_g1, factorized_potential, make_params, partner_potential,
    partner_potential_ratfunc, superpotential, superpotential_derivative, Sector,
    SuperPotentialParams,
};
pub use phase::{classify_asymptotics, classify_susy, SuperpotentialAsymptotics, SusyPhase, SusyPhaseValue};
pub use potential::{CalogeroForm, PotentialKind, PotentialSpec, RadialPotential};
pub use states::{
    apply_ladder, chi_minus, chi_minus_exceptional, chi_minus_literal_prefactor, chi_minus_two_term, chi_plus,
    chi_plus_literal_prefactor, minus_sector_residual, residual_vanishes, schrodinger_residual,
    LadderDirection,
};
pub use wave::{QuasiPolyWave, RadialShape, ScaleFactor};
