//! Symmetric, translation-invariant homogeneous polynomials annihilated by
//! the Calogero operator
//! `Δ P + t Σ_{j≠k} (∂_j - ∂_k) P / (x_j - x_k)`, `t = a + 1/2`.

use serde::Serialize;

use super::multipoly::{MultiIndex, MultiPoly};
use super::spec::{MaybeExact, ReductionConstants};
use crate::error::{Error, Result};
use crate::poly::linalg::{nullspace, rank, Field, Matrix};
use crate::poly::rational::{int, rat, to_f64, Rational};
use crate::poly::RatFunc;

/// `p_j = Σ_i (x_i - x̄)^j` in `n` variables.
pub fn centered_power_sum(n: usize, j: u32) -> MultiPoly<Rational> {
    let mean = (0..n)
        .fold(MultiPoly::zero(n), |acc, i| acc.add(&MultiPoly::var(n, i)))
        .scale(&rat(1, n as i64));
    (0..n).fold(MultiPoly::zero(n), |acc, i| acc.add(&MultiPoly::var(n, i).sub(&mean).pow(j)))
}

/// Partitions of `k` into parts from `lo..=hi`, parts nonincreasing.
fn partitions(k: u32, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (lo..=hi.min(k)).rev() {
        for mut rest in partitions(k - first, lo, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// One candidate basis element `Π p_{parts[i]}`.
#[derive(Clone, Debug, Serialize)]
pub struct PowerSumProduct {
    pub parts: Vec<u32>,
    pub poly: MultiPoly<Rational>,
}

/// All monomials appearing in `polys`, in a fixed order.
fn support<C: Field>(polys: &[&MultiPoly<C>]) -> Vec<MultiIndex> {
    let mut keys: Vec<MultiIndex> = polys.iter().flat_map(|p| p.terms().keys().cloned()).collect();
    keys.sort();
    keys.dedup();
    keys
}

/// Matrix whose columns are the coefficient vectors of `polys`.
fn coefficient_matrix<C: Field>(polys: &[&MultiPoly<C>]) -> (Matrix<C>, usize) {
    let rows = support(polys);
    let m = rows
        .iter()
        .map(|e| polys.iter().map(|p| p.coeff(e)).collect())
        .collect();
    (m, polys.len())
}

/// Products of centered power sums `p_2 .. p_N` of total degree `k`, pruned
/// to a linearly independent set by exact rank.
pub fn homogeneous_basis(n: usize, k: u32) -> Vec<PowerSumProduct> {
    let top = n as u32;
    let mut kept: Vec<PowerSumProduct> = Vec::new();
    for parts in partitions(k, 2, top.max(2)) {
        let poly = parts
            .iter()
            .fold(MultiPoly::one(n), |acc, &j| acc.mul(&centered_power_sum(n, j)));
        let mut trial: Vec<&MultiPoly<Rational>> = kept.iter().map(|b| &b.poly).collect();
        trial.push(&poly);
        let (m, cols) = coefficient_matrix(&trial);
        if rank(&m, cols) == cols {
            kept.push(PowerSumProduct { parts, poly });
        }
    }
    kept
}

/// Exact rank of a family of polynomials.
pub fn polynomial_rank(polys: &[&MultiPoly<Rational>]) -> usize {
    let (m, cols) = coefficient_matrix(polys);
    rank(&m, cols)
}

/// `Σ_{j≠k} (∂_j - ∂_k) P / (x_j - x_k)`, each quotient exact.
pub fn pairwise_term<C: Field>(p: &MultiPoly<C>) -> Result<MultiPoly<C>> {
    let n = p.vars();
    let mut out = MultiPoly::zero(n);
    for j in 0..n {
        for k in (j + 1)..n {
            let diff = p.partial(j).sub(&p.partial(k));
            out = out.add(&diff.div_difference(j, k)?);
        }
    }
    // each unordered pair appears twice in Σ_{j≠k}
    Ok(out.scale(&C::from_rational(&int(2))))
}

/// `Δ P + t · Σ_{j≠k} (∂_j - ∂_k) P / (x_j - x_k)` with `t = a + 1/2`.
pub fn calogero_operator_apply<C: Field>(p: &MultiPoly<C>, t: &C) -> Result<MultiPoly<C>> {
    Ok(p.laplacian().add(&pairwise_term(p)?.scale(t)))
}

/// A solution of the polynomial condition, over `Q` or over `Q(t)`.
#[derive(Clone, Debug)]
pub enum AngularPoly {
    /// Rational `t`: coefficients are numbers.
    Rational(MultiPoly<Rational>),
    /// Irrational `t`: coefficients are rational functions of `t`, evaluated
    /// at the float value (second field) when a number is needed.
    Symbolic(MultiPoly<RatFunc>, f64),
}

/// `{"field": "rational" | "symbolic", "poly": {...}, "t": value}`.
impl Serialize for AngularPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("AngularPoly", 3)?;
        match self {
            Self::Rational(p) => {
                st.serialize_field("field", "rational")?;
                st.serialize_field("poly", p)?;
                st.serialize_field("t", &Option::<f64>::None)?;
            }
            Self::Symbolic(p, t) => {
                st.serialize_field("field", "symbolic")?;
                st.serialize_field("poly", p)?;
                st.serialize_field("t", &Some(*t))?;
            }
        }
        st.end()
    }
}

impl AngularPoly {
    pub fn vars(&self) -> usize {
        match self {
            Self::Rational(p) => p.vars(),
            Self::Symbolic(p, _) => p.vars(),
        }
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        match self {
            Self::Rational(p) => p.eval_f64(x),
            Self::Symbolic(p, t) => p.eval_with(x, |c| c.eval_f64(*t)),
        }
    }

    pub fn abs_sum(&self, x: &[f64]) -> f64 {
        match self {
            Self::Rational(p) => p.abs_sum_with(x, to_f64),
            Self::Symbolic(p, t) => p.abs_sum_with(x, |c| c.eval_f64(*t).abs()),
        }
    }

    pub fn homogeneous_degree(&self) -> Option<u32> {
        match self {
            Self::Rational(p) => p.homogeneous_degree(),
            Self::Symbolic(p, _) => p.homogeneous_degree(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        match self {
            Self::Rational(p) => p.is_symmetric(),
            Self::Symbolic(p, _) => p.is_symmetric(),
        }
    }

    pub fn is_translation_invariant(&self) -> bool {
        match self {
            Self::Rational(p) => p.is_translation_invariant(),
            Self::Symbolic(p, _) => p.is_translation_invariant(),
        }
    }

    /// Exact check of the polynomial condition. `t` is the rational value
    /// for [`AngularPoly::Rational`]; symbolic polynomials are checked with
    /// `t` kept as the indeterminate.
    pub fn is_annihilated(&self, t: &MaybeExact) -> Result<bool> {
        match self {
            Self::Rational(p) => {
                let t = t.exact.clone().ok_or_else(|| {
                    Error::InvalidParameter("rational polynomial needs a rational t".into())
                })?;
                Ok(calogero_operator_apply(p, &t)?.is_zero())
            }
            Self::Symbolic(p, _) => Ok(calogero_operator_apply(p, &RatFunc::x())?.is_zero()),
        }
    }
}

/// Null space of the operator on the degree-`k` candidates.
#[derive(Clone, Debug, Serialize)]
pub struct PkqSolution {
    pub n_particles: usize,
    pub k: u32,
    pub t: MaybeExact,
    /// Size of the independent candidate set searched.
    pub candidates: usize,
    /// `g(N, k)` as computed.
    pub dimension: usize,
    pub basis: Vec<AngularPoly>,
}

fn combine<C: Field>(n: usize, basis: &[PowerSumProduct], v: &[C]) -> MultiPoly<C> {
    basis.iter().zip(v).fold(MultiPoly::zero(n), |acc, (b, c)| {
        acc.add(&b.poly.map_coeffs(C::from_rational).scale(c))
    })
}

/// Basis of all degree-`k` symmetric translation-invariant polynomials
/// solving the polynomial condition for `N` particles.
///
/// Every returned polynomial is re-checked exactly; a failure is reported as
/// [`Error::IdentityViolated`].
pub fn solve_pkq(n: usize, k: u32, constants: &ReductionConstants) -> Result<PkqSolution> {
    let t = constants.t();
    let cands = homogeneous_basis(n, k);
    let lap: Vec<MultiPoly<Rational>> = cands.iter().map(|b| b.poly.laplacian()).collect();
    let pair = cands.iter().map(|b| pairwise_term(&b.poly)).collect::<Result<Vec<_>>>()?;
    let basis: Vec<AngularPoly> = match &t.exact {
        Some(tq) => {
            let images: Vec<MultiPoly<Rational>> =
                lap.iter().zip(&pair).map(|(l, p)| l.add(&p.scale(tq))).collect();
            let refs: Vec<&MultiPoly<Rational>> = images.iter().collect();
            let (m, cols) = coefficient_matrix(&refs);
            let null = if m.is_empty() { identity(cols) } else { nullspace(&m, cols) };
            null.iter().map(|v| AngularPoly::Rational(combine(n, &cands, v))).collect()
        }
        None => {
            let ts = RatFunc::x();
            let images: Vec<MultiPoly<RatFunc>> = lap
                .iter()
                .zip(&pair)
                .map(|(l, p)| l.map_coeffs(RatFunc::from_rational).add(&p.map_coeffs(RatFunc::from_rational).scale(&ts)))
                .collect();
            let refs: Vec<&MultiPoly<RatFunc>> = images.iter().collect();
            let (m, cols) = coefficient_matrix(&refs);
            let null = if m.is_empty() { identity(cols) } else { nullspace(&m, cols) };
            null.iter()
                .map(|v| AngularPoly::Symbolic(combine(n, &cands, v), t.value))
                .collect()
        }
    };
    for (q, p) in basis.iter().enumerate() {
        if !p.is_annihilated(&t)? || !p.is_symmetric() || !p.is_translation_invariant() {
            return Err(Error::IdentityViolated(format!(
                "P_{{{k},{}}} for N = {n} fails the defining conditions",
                q + 1
            )));
        }
    }
    Ok(PkqSolution { n_particles: n, k, t, candidates: cands.len(), dimension: basis.len(), basis })
}

fn identity<F: Field>(cols: usize) -> Vec<Vec<F>> {
    (0..cols)
        .map(|i| (0..cols).map(|j| if i == j { F::one() } else { F::zero() }).collect())
        .collect()
}
