//! Analytic eigenstates of both partners and the exact ladder operators.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::params::{
    analytic_energy, partner_potential_ratfunc, superpotential_times_r, Sector,
    SuperPotentialParams,
};
use super::wave::{QuasiPolyWave, RadialShape, ScaleFactor};
use crate::error::{Error, Result};
use crate::poly::rational::{factorial, int, rat, Rational};
use crate::poly::{
    exceptional_laguerre, laguerre, ExceptionalLaguerreSpec, LaguerreSpec, RatFunc, RationalPoly,
};

/// `A+ = d/dr + W` or `A- = -d/dr + W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LadderDirection {
    Plus,
    Minus,
}

/// `Γ(n + alpha + 3/2) / Γ(alpha + 3/2)` as an exact rational product.
fn gamma_tail(alpha: &Rational, n: u32) -> Rational {
    (0..n).fold(int(1), |acc, j| acc * (alpha + rat(3, 2) + int(j as i64)))
}

/// Squared normalization `2 n! / Γ(n + alpha + 3/2)` of the oscillator
/// partner, split as (rational, Γ argument).
fn plus_norm_square(alpha: &Rational, n: u32) -> (Rational, Rational) {
    let nf = Rational::from_integer(factorial(n as u64));
    (nf * int(2) / gamma_tail(alpha, n), alpha + rat(3, 2))
}

/// `χ_n^+ = c · r^{alpha+1} e^{-r^2/2} L_n^{alpha+1/2}(r^2)` with `c` chosen
/// for unit norm on `(0, ∞)`.
pub fn chi_plus(params: &SuperPotentialParams, n: u32) -> QuasiPolyWave {
    let alpha = params.alpha();
    let (square, gamma) = plus_norm_square(alpha, n);
    let scale = ScaleFactor::new(square, Some(gamma)).expect("positive normalization");
    let num = laguerre(&LaguerreSpec::new(n as i64, alpha + rat(1, 2)));
    QuasiPolyWave::new(scale, alpha + int(1), num, RationalPoly::one())
        .expect("unit denominator is admissible")
}

/// `χ_n^+` with the literal prefactor `sqrt(n! / Γ(n + alpha + 3/2))`,
/// whose norm is `1/2`.
pub fn chi_plus_literal_prefactor(params: &SuperPotentialParams, n: u32) -> QuasiPolyWave {
    let w = chi_plus(params, n);
    w.with_scale(w.scale().times_sqrt(&rat(1, 2)))
}

/// The two-term form
/// `(1 + g1 + g1 x)/(1 + g1 x) · L_n^{alpha+1/2}(x) + L_{n-1}^{alpha+3/2}(x)`.
pub fn chi_minus_two_term(params: &SuperPotentialParams, n: u32) -> RatFunc {
    let alpha = params.alpha();
    let g = params.g1();
    let ratio = RatFunc::new(
        RationalPoly::new(vec![g + int(1), g.clone()]),
        RationalPoly::new(vec![int(1), g.clone()]),
    );
    let ln = RatFunc::from_poly(laguerre(&LaguerreSpec::new(n as i64, alpha + rat(1, 2))));
    let lnm1 = RatFunc::from_poly(laguerre(&LaguerreSpec::new(n as i64 - 1, alpha + rat(3, 2))));
    &(&ratio * &ln) + &lnm1
}

/// The exceptional form `L̂^{alpha+3/2}_{n+1,1}(x) / L_1^{alpha+1/2}(-x)`.
pub fn chi_minus_exceptional(alpha: &Rational, n: u32) -> (RationalPoly, RationalPoly) {
    let num = exceptional_laguerre(&ExceptionalLaguerreSpec::new(n + 1, 1, alpha + rat(3, 2)))
        .expect("n + 1 >= 1");
    let den = laguerre(&LaguerreSpec::new(1, alpha + rat(1, 2))).reflect();
    (num, den)
}

/// `χ_n^- ∝ r^{alpha+2} e^{-r^2/2} L̂^{alpha+3/2}_{n+1,1}(r^2) / L_1^{alpha+1/2}(-r^2)`,
/// normalized like `A- χ_n^+ / sqrt(E_n)` and signed positive near the origin.
///
/// The two-term form is rebuilt from `params.g1()` and must agree exactly
/// with the exceptional form; off the solvability constraint it does not,
/// and an [`Error::IdentityViolated`] is returned.
pub fn chi_minus(params: &SuperPotentialParams, n: u32) -> Result<QuasiPolyWave> {
    let alpha = params.alpha();
    let (num, den) = chi_minus_exceptional(alpha, n);
    let exceptional = RatFunc::new(num.clone(), den.clone());
    let two_term = chi_minus_two_term(params, n);
    if exceptional != two_term {
        return Err(Error::IdentityViolated(format!(
            "two-term and exceptional forms of chi_{n}^- differ (alpha = {alpha}, g1 = {})",
            params.g1()
        )));
    }
    let (square, gamma) = plus_norm_square(alpha, n);
    let energy = analytic_energy(params, Sector::Minus, n);
    let mut scale = ScaleFactor::new(square * int(4) / energy, Some(gamma))?;
    let at_origin = num.coeff(0) / den.coeff(0);
    if at_origin.is_negative() {
        scale = scale.negated();
    }
    QuasiPolyWave::new(scale, alpha + int(2), num, den)
}

/// `χ_n^-` with the literal prefactor `sqrt(4 n! / (E_n Γ(n + alpha + 3/2)))`.
pub fn chi_minus_literal_prefactor(params: &SuperPotentialParams, n: u32) -> Result<QuasiPolyWave> {
    let w = chi_minus(params, n)?;
    Ok(w.with_scale(w.scale().times_sqrt(&rat(1, 2))))
}

/// Exact `A± w = ±w' + W w`.
pub fn apply_ladder(
    params: &SuperPotentialParams,
    dir: LadderDirection,
    w: &QuasiPolyWave,
) -> Result<QuasiPolyWave> {
    let shape = w.shape();
    let derivative = shape.derivative();
    let w_times = shape.times(&superpotential_times_r(params), &int(-1));
    let result = match dir {
        LadderDirection::Plus => derivative.add(&w_times)?,
        LadderDirection::Minus => w_times.sub(&derivative)?,
    };
    if result.is_zero() {
        return Err(Error::Representation("ladder operator annihilated the wave".into()));
    }
    QuasiPolyWave::from_shape(w.scale().clone(), &result)
}

/// `-w'' + V w - E w` as an exact shape, `V` given as a rational function of
/// `x = r^2`. The scale of `w` is irrelevant to whether this vanishes.
pub fn schrodinger_residual(w: &QuasiPolyWave, potential: &RatFunc, energy: &Rational) -> Result<RadialShape> {
    let shape = w.shape();
    let second = shape.derivative().derivative();
    let v_minus_e = potential - &RatFunc::constant(energy.clone());
    let applied = shape.times(&v_minus_e, &Rational::zero());
    applied.sub(&second)
}

/// Residual of `χ_n^-` against the closed-form `V-` built from `params`.
pub fn minus_sector_residual(
    potential_params: &SuperPotentialParams,
    wave: &QuasiPolyWave,
    n: u32,
) -> Result<RadialShape> {
    let v = partner_potential_ratfunc(potential_params, Sector::Minus);
    let e = analytic_energy(potential_params, Sector::Minus, n);
    schrodinger_residual(wave, &v, &e)
}

/// `true` when the residual is the identically zero rational function.
pub fn residual_vanishes(r: &RadialShape) -> bool {
    r.f.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::susy::params::make_params;

    fn params(a: Rational) -> SuperPotentialParams {
        make_params(a).unwrap()
    }

    #[test]
    fn chi_plus_ground_state_shape() {
        let p = params(int(1));
        let w = chi_plus(&p, 0);
        assert_eq!(w.power(), &int(2));
        assert_eq!(w.num(), &RationalPoly::one());
        assert_eq!(w.den(), &RationalPoly::one());
    }

    #[test]
    fn chi_plus_node_counts() {
        for a in [rat(1, 2), int(1), int(2)] {
            for n in 0..8 {
                assert_eq!(chi_plus(&params(a.clone()), n).node_count(), n as usize);
            }
        }
    }

    #[test]
    fn chi_minus_ground_state_is_simple_ratio() {
        let p = params(int(1));
        let w = chi_minus(&p, 0).unwrap();
        assert_eq!(w.power(), &int(3));
        assert_eq!(w.num(), &RationalPoly::new(vec![rat(7, 2), int(1)]));
        assert_eq!(w.den(), &RationalPoly::new(vec![rat(5, 2), int(1)]));
        assert!(w.eval(1e-3) > 0.0);
    }

    #[test]
    fn chi_minus_nodes_and_negative_root() {
        use crate::poly::sturm::count_negative_roots;
        for a in [rat(1, 2), int(1), int(2)] {
            for n in 0..=8 {
                let w = chi_minus(&params(a.clone()), n).unwrap();
                assert_eq!(w.num().degree(), Some(n as usize + 1));
                assert_eq!(w.node_count(), n as usize);
                assert_eq!(count_negative_roots(w.num()), 1);
            }
        }
    }

    #[test]
    fn chi_minus_positive_near_origin() {
        for n in 0..6 {
            let w = chi_minus(&params(rat(3, 2)), n).unwrap();
            assert!(w.eval(1e-2) > 0.0, "n = {n}");
        }
    }

    #[test]
    fn detuned_params_break_the_identity() {
        let p = SuperPotentialParams::detuned(int(1), rat(101, 100)).unwrap();
        assert!(matches!(chi_minus(&p, 1), Err(Error::IdentityViolated(_))));
    }

    #[test]
    fn ladder_maps_plus_to_minus() {
        let p = params(int(1));
        for n in 0..5 {
            let up = chi_plus(&p, n);
            let e = analytic_energy(&p, Sector::Plus, n);
            let down = apply_ladder(&p, LadderDirection::Minus, &up).unwrap();
            let down = down.with_scale(down.scale().times_sqrt(&e.recip()));
            assert!(down.same_function(&chi_minus(&p, n).unwrap()), "n = {n}");
            let back = apply_ladder(&p, LadderDirection::Plus, &chi_minus(&p, n).unwrap()).unwrap();
            let back = back.with_scale(back.scale().times_sqrt(&e.recip()));
            assert!(back.same_function(&up), "n = {n}");
        }
    }

    #[test]
    fn factorized_hamiltonian_on_plus_states() {
        let p = params(rat(1, 2));
        for n in 0..5 {
            let w = chi_plus(&p, n);
            let e = analytic_energy(&p, Sector::Plus, n);
            let twice = apply_ladder(&p, LadderDirection::Plus, &apply_ladder(&p, LadderDirection::Minus, &w).unwrap()).unwrap();
            let expected = w.with_scale(w.scale().times(&e));
            assert!(twice.same_function(&expected));
        }
    }

    #[test]
    fn residuals_vanish_exactly() {
        for a in [rat(1, 2), int(1), int(2)] {
            let p = params(a);
            for n in 0..=4 {
                let w = chi_minus(&p, n).unwrap();
                assert!(residual_vanishes(&minus_sector_residual(&p, &w, n).unwrap()));
                let wp = chi_plus(&p, n);
                let r = schrodinger_residual(
                    &wp,
                    &partner_potential_ratfunc(&p, Sector::Plus),
                    &analytic_energy(&p, Sector::Plus, n),
                )
                .unwrap();
                assert!(residual_vanishes(&r));
            }
        }
    }

    #[test]
    fn wrong_energy_leaves_a_residual() {
        let p = params(int(1));
        let w = chi_minus(&p, 0).unwrap();
        let v = partner_potential_ratfunc(&p, Sector::Minus);
        let r = schrodinger_residual(&w, &v, &int(15)).unwrap();
        assert!(!residual_vanishes(&r));
    }

    #[test]
    fn literal_prefactors_halve_the_squared_scale() {
        let p = params(int(1));
        let a = chi_plus(&p, 2);
        let b = chi_plus_literal_prefactor(&p, 2);
        assert!((a.ratio_to(&b).unwrap() - 2f64.sqrt()).abs() < 1e-14);
        let c = chi_minus(&p, 2).unwrap();
        let d = chi_minus_literal_prefactor(&p, 2).unwrap();
        assert!((c.ratio_to(&d).unwrap() - 2f64.sqrt()).abs() < 1e-14);
    }
}
