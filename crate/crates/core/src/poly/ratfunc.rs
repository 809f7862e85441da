//! Rational functions `num(x) / den(x)` over the rationals, kept reduced.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;
use super::univariate::RationalPoly;

/// A reduced fraction of polynomials: `gcd(num, den) = 1` and `den` monic.
/// Zero is stored as `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: RationalPoly,
    den: RationalPoly,
}

impl RatFunc {
    /// Panics if `den` is the zero polynomial.
    pub fn new(num: RationalPoly, den: RationalPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut n, _) = num.div_rem(&g);
        let (mut d, _) = den.div_rem(&g);
        let lead = d.leading().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        Self { num: n, den: d }
    }

    pub fn from_poly(p: RationalPoly) -> Self {
        Self { num: p, den: RationalPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(RationalPoly::constant(c))
    }

    pub fn x() -> Self {
        Self::from_poly(RationalPoly::x())
    }

    pub fn zero() -> Self {
        Self { num: RationalPoly::zero(), den: RationalPoly::one() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn num(&self) -> &RationalPoly {
        &self.num
    }

    pub fn den(&self) -> &RationalPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn derivative(&self) -> Self {
        let top = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(top, &self.den * &self.den)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.num.scale(c), self.den.clone())
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl RatFunc {
    pub fn display_in(&self, var: &str) -> String {
        if self.is_polynomial() {
            self.num.display_in(var)
        } else {
            format!("({}) / ({})", self.num.display_in(var), self.den.display_in(var))
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl From<RationalPoly> for RatFunc {
    fn from(p: RationalPoly) -> Self {
        Self::from_poly(p)
    }
}
