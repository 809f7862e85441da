//! The conditional superpotential, its partner potentials and the paired
//! spectrum.

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::rational::{int, rat, to_f64, Rational};
use crate::poly::{RatFunc, RationalPoly};

/// `(alpha, g1)` of `W(r) = r + 2 g1 r / (1 + g1 r^2) + (alpha + 1) / r`.
///
/// Built through [`make_params`], `g1 = 2 / (2 alpha + 3)` exactly. The only
/// other constructor, [`SuperPotentialParams::detuned`], exists to probe what
/// breaks when that constraint is violated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperPotentialParams {
    #[serde(with = "crate::poly::rational::serde_string")]
    alpha: Rational,
    #[serde(with = "crate::poly::rational::serde_string")]
    g1: Rational,
    on_constraint: bool,
}

/// The solvability constraint `g1 = 2 / (2 alpha + 3)`.
pub fn constrained_g1(alpha: &Rational) -> Rational {
    int(2) / (alpha * int(2) + int(3))
}

pub fn make_params(alpha: Rational) -> Result<SuperPotentialParams> {
    SuperPotentialParams::new(alpha)
}

impl SuperPotentialParams {
    pub fn new(alpha: Rational) -> Result<Self> {
        if !alpha.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "alpha must be positive, got {alpha}"
            )));
        }
        let g1 = constrained_g1(&alpha);
        Ok(Self { alpha, g1, on_constraint: true })
    }

    /// Same `alpha`, but `g1` multiplied by `factor`. A factor of exactly one
    /// gives back the constrained parameters.
    pub fn detuned(alpha: Rational, factor: Rational) -> Result<Self> {
        let base = Self::new(alpha)?;
        if !factor.is_positive() {
            return Err(Error::InvalidParameter("detuning factor must be positive".into()));
        }
        let on_constraint = factor.is_one();
        Ok(Self { g1: &base.g1 * factor, on_constraint, ..base })
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn g1(&self) -> &Rational {
        &self.g1
    }

    pub fn is_on_constraint(&self) -> bool {
        self.on_constraint
    }

    pub fn alpha_f64(&self) -> f64 {
        to_f64(&self.alpha)
    }

    pub fn g1_f64(&self) -> f64 {
        to_f64(&self.g1)
    }
}

/// Which member of the partner pair: `V+ = W^2 + W'` or `V- = W^2 - W'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sector {
    Plus,
    Minus,
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("radius must be positive and finite, got {r}")))
    }
}

pub fn superpotential(params: &SuperPotentialParams, r: f64) -> Result<f64> {
    check_radius(r)?;
    let (a, g) = (params.alpha_f64(), params.g1_f64());
    Ok(r + 2.0 * g * r / (1.0 + g * r * r) + (a + 1.0) / r)
}

/// `W'(r)`, differentiated by hand term by term.
pub fn superpotential_derivative(params: &SuperPotentialParams, r: f64) -> Result<f64> {
    check_radius(r)?;
    let (a, g) = (params.alpha_f64(), params.g1_f64());
    let q = 1.0 + g * r * r;
    Ok(1.0 + 2.0 * g * (1.0 - g * r * r) / (q * q) - (a + 1.0) / (r * r))
}

/// `W^2 ± W'` evaluated numerically from the superpotential.
pub fn factorized_potential(params: &SuperPotentialParams, sector: Sector, r: f64) -> Result<f64> {
    let w = superpotential(params, r)?;
    let dw = superpotential_derivative(params, r)?;
    Ok(match sector {
        Sector::Plus => w * w + dw,
        Sector::Minus => w * w - dw,
    })
}

/// Closed forms
/// `V+ = r^2 + alpha(alpha+1)/r^2 + 2 alpha + 7` and
/// `V- = r^2 + (alpha+1)(alpha+2)/r^2 - 4 g1/(1+g1 r^2) + 8 g1^2 r^2/(1+g1 r^2)^2 + 2 alpha + 5`.
pub fn partner_potential(params: &SuperPotentialParams, sector: Sector, r: f64) -> Result<f64> {
    check_radius(r)?;
    let (a, g) = (params.alpha_f64(), params.g1_f64());
    let r2 = r * r;
    Ok(match sector {
        Sector::Plus => r2 + a * (a + 1.0) / r2 + 2.0 * a + 7.0,
        Sector::Minus => {
            let q = 1.0 + g * r2;
            r2 + (a + 1.0) * (a + 2.0) / r2 - 4.0 * g / q + 8.0 * g * g * r2 / (q * q) + 2.0 * a + 5.0
        }
    })
}

/// The same closed forms as exact rational functions of `x = r^2`.
pub fn partner_potential_ratfunc(params: &SuperPotentialParams, sector: Sector) -> RatFunc {
    let a = params.alpha();
    let g = params.g1();
    let x = RatFunc::x();
    let inv_x = x.recip();
    match sector {
        Sector::Plus => {
            let c = a * (a + int(1));
            &(&x + &inv_x.scale(&c)) + &RatFunc::constant(a * int(2) + int(7))
        }
        Sector::Minus => {
            let c = (a + int(1)) * (a + int(2));
            let q = RatFunc::from_poly(RationalPoly::new(vec![Rational::one(), g.clone()]));
            let q2 = &q * &q;
            let t1 = (&RatFunc::constant(g * int(4)) / &q).scale(&int(-1));
            let t2 = &(&x / &q2).scale(&(g * g * int(8))) + &t1;
            &(&(&x + &inv_x.scale(&c)) + &t2) + &RatFunc::constant(a * int(2) + int(5))
        }
    }
}

/// `r W(r)` as a rational function of `x = r^2`:
/// `x + (alpha + 1) + 2 g1 x / (1 + g1 x)`.
pub fn superpotential_times_r(params: &SuperPotentialParams) -> RatFunc {
    let a = params.alpha();
    let g = params.g1();
    let q = RatFunc::from_poly(RationalPoly::new(vec![Rational::one(), g.clone()]));
    let lin = RatFunc::from_poly(RationalPoly::new(vec![a + int(1), int(1)]));
    &lin + &(&RatFunc::x().scale(&(g * int(2))) / &q)
}

/// `E_n = 4 (n + alpha + 5/2)`, shared by both partners because
/// supersymmetry is broken.
pub fn analytic_energy(params: &SuperPotentialParams, _sector: Sector, n: u32) -> Rational {
    (int(n as i64) + params.alpha() + rat(5, 2)) * int(4)
}
