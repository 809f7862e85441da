//! Sparse multivariate polynomials in `x_1..x_N` over any [`Field`].

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::linalg::Field;
use crate::poly::rational::{format_rational, to_f64, Rational};
use crate::poly::RatFunc;

/// Exponent vector `(e_1, ..., e_N)`.
pub type MultiIndex = Vec<u32>;

/// `Σ c_e x^e` with no stored zero coefficients.
#[derive(Clone, PartialEq)]
pub struct MultiPoly<C> {
    vars: usize,
    terms: BTreeMap<MultiIndex, C>,
}

impl<C: Field> MultiPoly<C> {
    pub fn zero(vars: usize) -> Self {
        Self { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: C) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars], c);
        p
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, C::one())
    }

    /// The coordinate `x_i`, zero-based.
    pub fn var(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.add_term(e, C::one());
        p
    }

    pub fn from_terms(vars: usize, terms: impl IntoIterator<Item = (MultiIndex, C)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars, "exponent length must match variable count");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: MultiIndex, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<MultiIndex, C> {
        &self.terms
    }

    pub fn coeff(&self, e: &[u32]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree of the highest term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// `Some(d)` when every term has total degree `d`; zero counts as
    /// homogeneous of any degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&C::zero().sub(&C::one())))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        Self {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v.mul(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.vars), |acc, _| acc.mul(self))
    }

    /// `∂/∂x_i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[i] -= 1;
            out.add_term(d, c.mul(&C::from_rational(&Rational::from_integer(e[i].into()))));
        }
        out
    }

    /// `Σ_i ∂²/∂x_i²`.
    pub fn laplacian(&self) -> Self {
        (0..self.vars).fold(Self::zero(self.vars), |acc, i| acc.add(&self.partial(i).partial(i)))
    }

    /// `Σ_i ∂/∂x_i`; zero exactly for translation-invariant polynomials.
    pub fn translation_derivative(&self) -> Self {
        (0..self.vars).fold(Self::zero(self.vars), |acc, i| acc.add(&self.partial(i)))
    }

    /// Exchanges `x_i` and `x_j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        Self {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut s = e.clone();
                    s.swap(i, j);
                    (s, c.clone())
                })
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.vars).all(|i| (i + 1..self.vars).all(|j| self.swap_vars(i, j) == *self))
    }

    pub fn is_translation_invariant(&self) -> bool {
        self.translation_derivative().is_zero()
    }

    /// Exact quotient by `x_i - x_j`; a nonzero remainder is an error.
    ///
    /// Long division with `x_i` as the leading variable: each step removes
    /// the term of highest `x_i` degree, so the loop ends once no term
    /// contains `x_i`, and whatever is left is the remainder.
    pub fn div_difference(&self, i: usize, j: usize) -> Result<Self> {
        assert_ne!(i, j);
        let mut rem = self.clone();
        let mut quot = Self::zero(self.vars);
        loop {
            let lead = rem
                .terms
                .iter()
                .filter(|(e, _)| e[i] > 0)
                .max_by(|a, b| a.0[i].cmp(&b.0[i]).then_with(|| a.0.cmp(b.0)))
                .map(|(e, c)| (e.clone(), c.clone()));
            let Some((e, c)) = lead else { break };
            let mut q = e.clone();
            q[i] -= 1;
            // subtract c x^q (x_i - x_j)
            let mut qj = q.clone();
            qj[j] += 1;
            rem.add_term(e, C::zero().sub(&c));
            rem.add_term(qj, c.clone());
            quot.add_term(q, c);
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::IdentityViolated(format!(
                "division by x_{} - x_{} left {} remainder terms",
                i + 1,
                j + 1,
                rem.len()
            )))
        }
    }

    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly::from_terms(self.vars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Floating-point value, with `coeff` turning each coefficient into a number.
    pub fn eval_with(&self, x: &[f64], coeff: impl Fn(&C) -> f64) -> f64 {
        assert_eq!(x.len(), self.vars);
        self.terms
            .iter()
            .map(|(e, c)| {
                coeff(c) * e.iter().zip(x).map(|(&k, &xi)| xi.powi(k as i32)).product::<f64>()
            })
            .sum()
    }

    /// `Σ |c_e x^e|`, the scale against which cancellation in [`Self::eval_with`]
    /// is judged.
    pub fn abs_sum_with(&self, x: &[f64], coeff: impl Fn(&C) -> f64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                (coeff(c) * e.iter().zip(x).map(|(&k, &xi)| xi.powi(k as i32)).product::<f64>()).abs()
            })
            .sum()
    }

    /// Coefficient vector in the order of `basis`, zeros for absent monomials.
    pub fn coeff_vector(&self, basis: &[MultiIndex]) -> Vec<C> {
        basis.iter().map(|e| self.coeff(e)).collect()
    }
}

impl MultiPoly<Rational> {
    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.vars);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(c.clone(), |acc, (&k, xi)| acc * num_traits::pow(xi.clone(), k as usize))
            })
            .sum()
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.eval_with(x, to_f64)
    }
}

/// How a coefficient type prints inside JSON and `Display`.
pub trait CoeffDisplay {
    fn coeff_string(&self) -> String;
}

impl CoeffDisplay for Rational {
    fn coeff_string(&self) -> String {
        format_rational(self)
    }
}

/// Coefficients in `Q(t)` print as functions of `t = a + 1/2`.
impl CoeffDisplay for RatFunc {
    fn coeff_string(&self) -> String {
        self.display_in("t")
    }
}

fn index_key(e: &[u32]) -> String {
    e.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// JSON object `{"e1,e2,...": "coefficient"}`.
impl<C: Field + CoeffDisplay> Serialize for MultiPoly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&index_key(e), &c.coeff_string())?;
        }
        map.end()
    }
}

impl<C: Field + CoeffDisplay> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                    .collect();
                if mono.is_empty() {
                    format!("({})", c.coeff_string())
                } else {
                    format!("({})*{}", c.coeff_string(), mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Field + CoeffDisplay> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({self})", self.vars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::{int, rat};

    type P = MultiPoly<Rational>;

    #[test]
    fn arithmetic_and_derivatives() {
        let x = P::var(2, 0);
        let y = P::var(2, 1);
        let d = x.sub(&y);
        let sq = d.mul(&d);
        assert_eq!(sq.homogeneous_degree(), Some(2));
        assert_eq!(sq.coeff(&[1, 1]), int(-2));
        assert_eq!(sq.laplacian(), P::constant(2, int(4)));
        assert!(sq.is_translation_invariant());
        assert!(sq.is_symmetric());
        assert!(!x.is_symmetric());
        assert_eq!(sq.div_difference(0, 1).unwrap(), d);
        assert!(x.div_difference(0, 1).is_err());
    }

    #[test]
    fn cubic_antisymmetric_division() {
        // (x^3 - y^3)/(x - y) = x^2 + x y + y^2
        let x = P::var(3, 0);
        let y = P::var(3, 1);
        let f = x.pow(3).sub(&y.pow(3));
        let q = f.div_difference(0, 1).unwrap();
        let expect = x.pow(2).add(&x.mul(&y)).add(&y.pow(2));
        assert_eq!(q, expect);
    }

    #[test]
    fn evaluation_paths_agree() {
        let x = P::var(3, 0);
        let z = P::var(3, 2);
        let p = x.pow(2).scale(&rat(1, 3)).sub(&z);
        let pt = [rat(3, 2), int(0), rat(-1, 4)];
        assert_eq!(p.eval(&pt), rat(3, 4) + rat(1, 4));
        assert!((p.eval_f64(&[1.5, 0.0, -0.25]) - 1.0).abs() < 1e-15);
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.contains("\"2,0,0\":\"1/3\""));
    }
}
