//! Exact polynomial algebra: rationals, univariate polynomials, rational
//! functions, Laguerre and exceptional Laguerre families, Sturm counting and
//! exact elimination.

pub mod laguerre;
pub mod linalg;
pub mod ratfunc;
pub mod rational;
pub mod sturm;
pub mod univariate;

pub use laguerre::{
    exceptional_laguerre, laguerre, laguerre_derivative, laguerre_f64, laguerre_derivative_shifted,
    ExceptionalLaguerreSpec, LaguerreSpec,
};
pub use ratfunc::RatFunc;
pub use rational::{format_rational, int, parse_rational, rat, to_f64, Rational};
pub use univariate::RationalPoly;

/// Evaluates a polynomial at either an exact or a floating-point argument.
pub trait PolyEval<X> {
    fn poly_eval(&self, x: X) -> X;
}

impl PolyEval<Rational> for RationalPoly {
    fn poly_eval(&self, x: Rational) -> Rational {
        self.eval(&x)
    }
}

impl PolyEval<f64> for RationalPoly {
    fn poly_eval(&self, x: f64) -> f64 {
        self.eval_f64(x)
    }
}

/// Horner evaluation, exact for rational arguments.
pub fn poly_eval<X>(p: &RationalPoly, x: X) -> X
where
    RationalPoly: PolyEval<X>,
{
    p.poly_eval(x)
}
