//! Parameters of the many-body problem and the constants of its radial
//! reduction.

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::rational::{exact_sqrt, int, rat, to_f64, Rational};

/// Largest particle number the finite-difference residual accepts. Every
/// extra coordinate multiplies the stencil cost.
pub const MAX_RESIDUAL_PARTICLES: usize = 4;

/// A real number kept exact when it happens to be rational.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MaybeExact {
    #[serde(serialize_with = "ser_opt_rational")]
    pub exact: Option<Rational>,
    pub value: f64,
}

fn ser_opt_rational<S: serde::Serializer>(q: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_some(&crate::poly::format_rational(q)),
        None => s.serialize_none(),
    }
}

impl MaybeExact {
    pub fn exact(q: Rational) -> Self {
        Self { value: to_f64(&q), exact: Some(q) }
    }

    pub fn real(value: f64) -> Self {
        Self { exact: None, value }
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    /// `self * c + d` for rational `c`, `d`.
    pub fn affine(&self, c: &Rational, d: &Rational) -> Self {
        match &self.exact {
            Some(q) => Self::exact(q * c + d),
            None => Self::real(self.value * to_f64(c) + to_f64(d)),
        }
    }
}

/// `a = sqrt(1 + 2g)/2` and `b = N(N-1)a/2 + N(N+1)/4 - 2`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReductionConstants {
    pub a: MaybeExact,
    pub b: MaybeExact,
}

impl ReductionConstants {
    /// `t = a + 1/2`, the coefficient of the pairwise term in the
    /// polynomial condition and the exponent of the pair product.
    pub fn t(&self) -> MaybeExact {
        self.a.affine(&int(1), &rat(1, 2))
    }
}

pub fn reduction_constants(n_particles: usize, g: &Rational) -> Result<ReductionConstants> {
    if n_particles < 2 {
        return Err(Error::InvalidParameter(format!("need N >= 2 particles, got {n_particles}")));
    }
    if g < &rat(-1, 2) {
        return Err(Error::InvalidParameter(format!("coupling g must be >= -1/2, got {g}")));
    }
    let disc = g * int(2) + int(1);
    let a = match exact_sqrt(&disc) {
        Some(s) => MaybeExact::exact(s / int(2)),
        None => MaybeExact::real(to_f64(&disc).sqrt() / 2.0),
    };
    let n = n_particles as i64;
    let b = a.affine(&rat(n * (n - 1), 2), &(rat(n * (n + 1), 4) - int(2)));
    Ok(ReductionConstants { a, b })
}

/// One many-body problem: `N` particles, coupling `g`, polynomial degree
/// `k` and the free radial parameter `alpha`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ManyBodySpec {
    pub n_particles: usize,
    #[serde(with = "crate::poly::rational::serde_string")]
    pub g: Rational,
    pub k: u32,
    #[serde(with = "crate::poly::rational::serde_string")]
    pub alpha: Rational,
    pub constants: ReductionConstants,
}

impl ManyBodySpec {
    pub fn new(n_particles: usize, g: Rational, k: u32, alpha: Rational) -> Result<Self> {
        let constants = reduction_constants(n_particles, &g)?;
        if !alpha.is_positive() {
            return Err(Error::InvalidParameter(format!("alpha must be positive, got {alpha}")));
        }
        Ok(Self { n_particles, g, k, alpha, constants })
    }

    /// `l = k + b`.
    pub fn l(&self) -> MaybeExact {
        self.constants.b.affine(&int(1), &int(self.k as i64))
    }

    pub fn t(&self) -> MaybeExact {
        self.constants.t()
    }
}
