//! Tagged radial potentials that the discretizer can evaluate.

use serde::Serialize;

use super::params::{partner_potential, Sector, SuperPotentialParams};
use crate::poly::rational::{to_f64, Rational};

/// Anything that can be sampled on `r > 0`.
pub trait RadialPotential {
    fn value(&self, r: f64) -> f64;
}

impl<F: Fn(f64) -> f64> RadialPotential for F {
    fn value(&self, r: f64) -> f64 {
        self(r)
    }
}

/// Which choice of the many-body radial potential `U(√N r)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum CalogeroForm {
    /// `r^2 + [alpha(alpha+1) - l(l+1)]/r^2`; `alpha = l` gives plain `r^2`.
    Oscillator { alpha: f64 },
    /// `V-(r) - l(l+1)/r^2`, the QES choice.
    Qes(SuperPotentialParams),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum PotentialKind {
    VPlus(SuperPotentialParams),
    VMinus(SuperPotentialParams),
    /// `U(√N r)`, plus `l(l+1)/r^2` when `centrifugal` is set.
    CalogeroU { form: CalogeroForm, l: f64, centrifugal: bool },
    /// The m = 1 rationally extended oscillator with angular parameter `l`.
    V1Pct { l: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PotentialSpec {
    pub kind: PotentialKind,
    #[serde(with = "crate::poly::rational::serde_string")]
    pub additive_constant: Rational,
}

impl PotentialSpec {
    pub fn new(kind: PotentialKind) -> Self {
        Self { kind, additive_constant: Rational::from_integer(0.into()) }
    }

    pub fn v_plus(params: &SuperPotentialParams) -> Self {
        Self::new(PotentialKind::VPlus(params.clone()))
    }

    pub fn v_minus(params: &SuperPotentialParams) -> Self {
        Self::new(PotentialKind::VMinus(params.clone()))
    }

    pub fn with_constant(mut self, c: Rational) -> Self {
        self.additive_constant = c;
        self
    }

    /// Value at `r`; `NaN`/infinite outside `r > 0` where the formulas are singular.
    pub fn eval(&self, r: f64) -> f64 {
        let base = match &self.kind {
            PotentialKind::VPlus(p) => partner_potential(p, Sector::Plus, r).unwrap_or(f64::NAN),
            PotentialKind::VMinus(p) => partner_potential(p, Sector::Minus, r).unwrap_or(f64::NAN),
            PotentialKind::CalogeroU { form, l, centrifugal } => {
                let lterm = l * (l + 1.0) / (r * r);
                let u = match form {
                    CalogeroForm::Oscillator { alpha } => r * r + alpha * (alpha + 1.0) / (r * r) - lterm,
                    CalogeroForm::Qes(p) => partner_potential(p, Sector::Minus, r).unwrap_or(f64::NAN) - lterm,
                };
                if *centrifugal {
                    u + lterm
                } else {
                    u
                }
            }
            PotentialKind::V1Pct { l } => crate::pct::v1_value(*l, r),
        };
        base + to_f64(&self.additive_constant)
    }
}

impl RadialPotential for PotentialSpec {
    fn value(&self, r: f64) -> f64 {
        self.eval(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::int;
    use crate::susy::params::make_params;

    #[test]
    fn tagged_values() {
        let p = make_params(int(1)).unwrap();
        assert_eq!(PotentialSpec::v_plus(&p).eval(1.0), 12.0);
        assert_eq!(PotentialSpec::v_plus(&p).with_constant(int(-9)).eval(1.0), 3.0);
        assert!(PotentialSpec::v_minus(&p).eval(0.0).is_nan());
        let u = PotentialSpec::new(PotentialKind::CalogeroU {
            form: CalogeroForm::Oscillator { alpha: 2.5 },
            l: 2.5,
            centrifugal: false,
        });
        assert!((u.eval(1.7) - 1.7 * 1.7).abs() < 1e-14);
        let closure = |r: f64| 2.0 * r;
        assert_eq!(closure.value(3.0), 6.0);
    }
}
