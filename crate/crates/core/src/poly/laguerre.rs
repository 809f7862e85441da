//! Classical Laguerre polynomials with a rational parameter and the
//! exceptional X_m family built from them.

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::rational::{int, Rational};
use super::univariate::RationalPoly;
use crate::error::{Error, Result};

/// Index pair of `L_n^alpha`. `n = -1` is legal and denotes the zero
/// polynomial, which keeps the index-shifted identities total.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaguerreSpec {
    pub n: i64,
    #[serde(with = "super::rational::serde_string")]
    pub alpha: Rational,
}

impl LaguerreSpec {
    pub fn new(n: i64, alpha: Rational) -> Self {
        Self { n, alpha }
    }
}

/// Indices of the exceptional polynomial `L̂^k_{n,m}`, degree `n`, `n >= m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalLaguerreSpec {
    pub n: u32,
    pub m: u32,
    #[serde(with = "super::rational::serde_string")]
    pub k: Rational,
}

impl ExceptionalLaguerreSpec {
    pub fn new(n: u32, m: u32, k: Rational) -> Self {
        Self { n, m, k }
    }
}

/// `L_n^alpha(x)` from the three-term recurrence
/// `(k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}`.
///
/// Negative `n` yields the zero polynomial.
pub fn laguerre(spec: &LaguerreSpec) -> RationalPoly {
    if spec.n < 0 {
        return RationalPoly::zero();
    }
    let alpha = &spec.alpha;
    let mut prev = RationalPoly::one();
    if spec.n == 0 {
        return prev;
    }
    let mut cur = RationalPoly::new(vec![alpha + Rational::one(), int(-1)]);
    for k in 1..spec.n {
        let kq = int(k);
        let lin = RationalPoly::new(vec![int(2 * k + 1) + alpha, int(-1)]);
        let next = &(&lin * &cur) - &prev.scale(&(&kq + alpha));
        prev = cur;
        cur = next.scale(&(kq + Rational::one()).recip());
    }
    cur
}

/// Floating-point `L_n^alpha(x)` by the same recurrence, for parameters that
/// are not rational.
pub fn laguerre_f64(n: u32, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let k = k as f64;
        let next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `d^order/dx^order L_n^alpha(x)`, by term-wise differentiation of the
/// recurrence output.
pub fn laguerre_derivative(spec: &LaguerreSpec, order: usize) -> RationalPoly {
    laguerre(spec).nth_derivative(order)
}

/// The closed form of the same derivative: `(-1)^order L_{n-order}^{alpha+order}`,
/// zero once `order > n`.
pub fn laguerre_derivative_shifted(spec: &LaguerreSpec, order: usize) -> RationalPoly {
    let n = spec.n - order as i64;
    if n < 0 {
        return RationalPoly::zero();
    }
    let p = laguerre(&LaguerreSpec::new(n, &spec.alpha + int(order as i64)));
    if order % 2 == 1 {
        -p
    } else {
        p
    }
}

/// Exceptional X_m Laguerre polynomial
/// `L̂^k_{n,m}(x) = L_m^k(-x) L_{n-m}^{k-1}(x) + L_m^{k-1}(-x) L_{n-m-1}^k(x)`.
pub fn exceptional_laguerre(spec: &ExceptionalLaguerreSpec) -> Result<RationalPoly> {
    if spec.n < spec.m {
        return Err(Error::Domain(format!(
            "exceptional Laguerre needs n >= m, got n = {}, m = {}",
            spec.n, spec.m
        )));
    }
    let (n, m) = (spec.n as i64, spec.m as i64);
    let k = &spec.k;
    let km1 = k - Rational::one();
    let first = &laguerre(&LaguerreSpec::new(m, k.clone())).reflect()
        * &laguerre(&LaguerreSpec::new(n - m, km1.clone()));
    let second = &laguerre(&LaguerreSpec::new(m, km1)).reflect()
        * &laguerre(&LaguerreSpec::new(n - m - 1, k.clone()));
    Ok(&first + &second)
}
