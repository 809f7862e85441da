//! The m = 1 rationally extended radial oscillator from the point canonical
//! transformation, compared against `V-` and `χ_n^-`.
//!
//! With `l = alpha + 1` and `g1 = 2/(2 alpha + 3)`,
//! `V-(r) - V1(r) = 2 alpha + 5` identically: the rational terms match term
//! by term (`4 g1 / (1 + g1 r^2) = 8 / (2 r^2 + 2 l + 1)` and likewise for the
//! squared term) and only the additive constant of `V-` is left over.

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::rational::{factorial, format_rational, int, rat, to_f64, Rational};
use crate::poly::{exceptional_laguerre, laguerre, ExceptionalLaguerreSpec, LaguerreSpec};
use crate::susy::{make_params, partner_potential, QuasiPolyWave, ScaleFactor, Sector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PctSpec {
    l: Rational,
    m: u32,
}

impl PctSpec {
    /// Only `m = 1` is supported.
    pub fn new(l: Rational, m: u32) -> Result<Self> {
        if m != 1 {
            return Err(Error::InvalidParameter(format!("only m = 1 is implemented, got m = {m}")));
        }
        if !(&l + rat(1, 2)).is_positive() {
            return Err(Error::InvalidParameter(format!("need l > -1/2, got l = {l}")));
        }
        Ok(Self { l, m })
    }

    /// The `l` that matches `V-` with parameter `alpha`.
    pub fn matching(alpha: &Rational) -> Result<Self> {
        Self::new(alpha + int(1), 1)
    }

    pub fn l(&self) -> &Rational {
        &self.l
    }

    pub fn m(&self) -> u32 {
        self.m
    }
}

/// `V1 = r^2 + l(l+1)/r^2 - 8/(2r^2 + 2l + 1) + 32 r^2/(2r^2 + 2l + 1)^2`.
pub fn v1_value(l: f64, r: f64) -> f64 {
    let r2 = r * r;
    let q = 2.0 * r2 + 2.0 * l + 1.0;
    r2 + l * (l + 1.0) / r2 - 8.0 / q + 32.0 * r2 / (q * q)
}

pub fn v1_potential(spec: &PctSpec, r: f64) -> Result<f64> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::Domain(format!("radius must be positive and finite, got {r}")));
    }
    Ok(v1_value(to_f64(&spec.l), r))
}

/// The constant `V- - V1` should equal: `2 alpha + 5`.
pub fn expected_shift(alpha: &Rational) -> Rational {
    alpha * int(2) + int(5)
}

#[derive(Clone, Debug, Serialize)]
pub struct PctComparison {
    #[serde(with = "crate::poly::rational::serde_string")]
    pub alpha: Rational,
    #[serde(with = "crate::poly::rational::serde_string")]
    pub l: Rational,
    pub constant: f64,
    pub max_deviation: f64,
    #[serde(with = "crate::poly::rational::serde_string")]
    pub expected_constant: Rational,
    /// Filled in by callers that also compare numeric spectra.
    pub spectra_shift: Option<Vec<f64>>,
}

/// Mean of `V- - V1` over `radii` and the largest departure from it.
pub fn compare_v1_vminus(alpha: &Rational, radii: &[f64]) -> Result<PctComparison> {
    if radii.is_empty() {
        return Err(Error::InvalidParameter("empty radius grid".into()));
    }
    let params = make_params(alpha.clone())?;
    let spec = PctSpec::matching(alpha)?;
    let diffs = radii
        .iter()
        .map(|&r| Ok(partner_potential(&params, Sector::Minus, r)? - v1_potential(&spec, r)?))
        .collect::<Result<Vec<f64>>>()?;
    let constant = diffs.iter().sum::<f64>() / diffs.len() as f64;
    let max_deviation = diffs.iter().map(|d| (d - constant).abs()).fold(0.0, f64::max);
    Ok(PctComparison {
        alpha: alpha.clone(),
        l: spec.l.clone(),
        constant,
        max_deviation,
        expected_constant: expected_shift(alpha),
        spectra_shift: None,
    })
}

/// `E_n = 4n + 2l + 3`, the convention without the additive constant.
pub fn pct_energy(spec: &PctSpec, n: u32) -> Rational {
    int(4 * n as i64) + &spec.l * int(2) + int(3)
}

/// `χ_{n,1} = N · r^{l+1} e^{-r^2/2} L̂^{l+1/2}_{n+1,1}(r^2) / L_1^{l-1/2}(-r^2)`
/// for level `n >= 0`.
///
/// The normalization is `N_{n',1}` with `n' = n + 1`:
/// `N^2 = (n' - 1)! / ((l + 1/2 + n') Γ(l + 1/2 + n' - 1))`.
pub fn pct_wavefunction(spec: &PctSpec, n: u32) -> Result<QuasiPolyWave> {
    let l = &spec.l;
    let num = exceptional_laguerre(&ExceptionalLaguerreSpec::new(n + 1, 1, l + rat(1, 2)))?;
    let den = laguerre(&LaguerreSpec::new(1, l - rat(1, 2))).reflect();
    let n_shift = n + spec.m;
    let tail = (0..n).fold(int(1), |acc, j| acc * (l + rat(1, 2) + int(j as i64)));
    let square = Rational::from_integer(factorial((n_shift - spec.m) as u64))
        / ((l + rat(1, 2) + int(n_shift as i64)) * tail);
    let scale = ScaleFactor::new(square, Some(l + rat(1, 2)))?;
    QuasiPolyWave::new(scale, l + int(1), num, den).map_err(|e| {
        Error::Representation(format!("V1 wavefunction for l = {}: {e}", format_rational(l)))
    })
}
