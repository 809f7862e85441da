//! Many-body eigenfunctions on the ordered sector and a finite-difference
//! check of `H ψ = E ψ`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::calogero::AngularPoly;
use super::spec::{ManyBodySpec, MaybeExact};
use crate::error::{Error, Result};
use crate::poly::rational::{int, rat, to_f64, Rational};
use crate::poly::{laguerre_f64, RationalPoly};
use crate::susy::{
    chi_minus_exceptional, make_params, CalogeroForm, PotentialKind, PotentialSpec, QuasiPolyWave,
    RadialPotential, ScaleFactor,
};

/// Default finite-difference step.
pub const DEFAULT_FD_STEP: f64 = 1e-3;
/// Default minimum gap between neighbouring particles in sampled points.
pub const DEFAULT_MIN_GAP: f64 = 0.2;
/// `|ψ|` below this is treated as underflow and rejected.
pub const PSI_FLOOR: f64 = 1e-200;

/// `Σ_i (x_i - x̄)^2`, which equals `(1/N) Σ_{i<j} (x_i - x_j)^2`.
pub fn radius_squared_exact(x: &[Rational]) -> Rational {
    let n = int(x.len() as i64);
    let mean: Rational = x.iter().sum::<Rational>() / &n;
    x.iter().map(|xi| (xi - &mean) * (xi - &mean)).sum()
}

/// `(1/N) Σ_{i<j} (x_i - x_j)^2`, the literal definition.
pub fn radius_squared_pairwise(x: &[Rational]) -> Rational {
    let mut s = int(0);
    for i in 0..x.len() {
        for j in (i + 1)..x.len() {
            let d = &x[i] - &x[j];
            s += &d * &d;
        }
    }
    s / int(x.len() as i64)
}

pub fn radius(x: &[f64]) -> f64 {
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    x.iter().map(|xi| (xi - mean) * (xi - mean)).sum::<f64>().sqrt()
}

/// `U(√N r)` for the QES choice: `V-(r) - l(l+1)/r^2`.
pub fn potential_u(spec: &ManyBodySpec) -> Result<PotentialSpec> {
    let params = make_params(spec.alpha.clone())?;
    Ok(PotentialSpec::new(PotentialKind::CalogeroU {
        form: CalogeroForm::Qes(params),
        l: spec.l().value,
        centrifugal: false,
    }))
}

/// `U(√N r) = r^2`, the exactly solvable choice `alpha = l`.
pub fn potential_u_baseline(spec: &ManyBodySpec) -> PotentialSpec {
    let l = spec.l().value;
    PotentialSpec::new(PotentialKind::CalogeroU {
        form: CalogeroForm::Oscillator { alpha: l },
        l,
        centrifugal: false,
    })
}

/// Which radial factor multiplies the pair product and `P`.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RadialFactor {
    /// `r^{-(l+1)} · r^{alpha+2} e^{-r^2/2} L̂(r^2)/L_1(-r^2)`, unnormalized.
    Qes { wave: Box<QuasiPolyWave> },
    /// `e^{-r^2/2} L_n^{l+1/2}(r^2)`.
    Baseline { l_plus_half: f64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct ManyBodyEigenfunction {
    pub spec: ManyBodySpec,
    pub n: u32,
    pub p: AngularPoly,
    pub radial: RadialFactor,
    pub energy: MaybeExact,
    pub potential: PotentialSpec,
}

fn check_p(spec: &ManyBodySpec, p: &AngularPoly) -> Result<()> {
    if p.vars() != spec.n_particles {
        return Err(Error::InvalidParameter(format!(
            "polynomial has {} variables, spec has N = {}",
            p.vars(),
            spec.n_particles
        )));
    }
    if p.homogeneous_degree() != Some(spec.k) {
        return Err(Error::InvalidParameter(format!(
            "polynomial is not homogeneous of degree k = {}",
            spec.k
        )));
    }
    Ok(())
}

/// `ψ_n = r^{alpha-l+1} e^{-r^2/2} L̂^{alpha+3/2}_{n+1,1}(r^2)/L_1^{alpha+1/2}(-r^2)
/// · Π_{i<j}(x_i - x_j)^{a+1/2} · P(x)`, energy `4(n + alpha + 5/2)`.
pub fn assemble_eigenfunction(spec: &ManyBodySpec, n: u32, p: AngularPoly) -> Result<ManyBodyEigenfunction> {
    check_p(spec, &p)?;
    let (num, den) = chi_minus_exceptional(&spec.alpha, n);
    let wave = QuasiPolyWave::new(ScaleFactor::one(), &spec.alpha + int(2), num, den)?;
    let energy = MaybeExact::exact((int(n as i64) + &spec.alpha + rat(5, 2)) * int(4));
    Ok(ManyBodyEigenfunction {
        spec: spec.clone(),
        n,
        p,
        radial: RadialFactor::Qes { wave: Box::new(wave) },
        energy,
        potential: potential_u(spec)?,
    })
}

/// The exactly solvable reference with `U = r^2`:
/// `ψ_n = e^{-r^2/2} L_n^{l+1/2}(r^2) Π(x_i - x_j)^{a+1/2} P(x)`, energy `4n + 2l + 3`.
pub fn assemble_baseline(spec: &ManyBodySpec, n: u32, p: AngularPoly) -> Result<ManyBodyEigenfunction> {
    check_p(spec, &p)?;
    let l = spec.l();
    Ok(ManyBodyEigenfunction {
        spec: spec.clone(),
        n,
        p,
        radial: RadialFactor::Baseline { l_plus_half: l.value + 0.5 },
        energy: l.affine(&int(2), &int(4 * n as i64 + 3)),
        potential: potential_u_baseline(spec),
    })
}

impl ManyBodyEigenfunction {
    /// Power of `r` in front of the radial factor at the origin, `alpha - l + 1`
    /// for the QES family. Reported, not judged.
    pub fn origin_exponent(&self) -> f64 {
        match &self.radial {
            RadialFactor::Qes { .. } => to_f64(&self.spec.alpha) - self.spec.l().value + 1.0,
            RadialFactor::Baseline { .. } => 0.0,
        }
    }

    pub fn radial_value(&self, r: f64) -> f64 {
        match &self.radial {
            RadialFactor::Qes { wave } => r.powf(-(self.spec.l().value + 1.0)) * wave.eval(r),
            RadialFactor::Baseline { l_plus_half } => {
                (-0.5 * r * r).exp() * laguerre_f64(self.n, *l_plus_half, r * r)
            }
        }
    }

    fn check_sector(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.spec.n_particles {
            return Err(Error::Domain(format!(
                "expected {} coordinates, got {}",
                self.spec.n_particles,
                x.len()
            )));
        }
        if x.windows(2).any(|w| !(w[0] > w[1])) {
            return Err(Error::Domain(
                "coordinates must be strictly decreasing (ordered sector, no coincidences)".into(),
            ));
        }
        Ok(())
    }

    fn pair_product(&self, x: &[f64]) -> f64 {
        let t = self.spec.t().value;
        let mut prod = 1.0;
        for i in 0..x.len() {
            for j in (i + 1)..x.len() {
                prod *= (x[i] - x[j]).powf(t);
            }
        }
        prod
    }

    fn eval_unchecked(&self, x: &[f64]) -> f64 {
        self.radial_value(radius(x)) * self.pair_product(x) * self.p.eval_f64(x)
    }

    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        self.check_sector(x)?;
        Ok(self.eval_unchecked(x))
    }

    /// `g Σ_{i<j} 1/(x_i - x_j)^2 + U(r)`.
    pub fn potential_energy(&self, x: &[f64]) -> f64 {
        let g = to_f64(&self.spec.g);
        let mut v = 0.0;
        for i in 0..x.len() {
            for j in (i + 1)..x.len() {
                let d = x[i] - x[j];
                v += g / (d * d);
            }
        }
        v + self.potential.value(radius(x))
    }

    /// `(H ψ)(x) / ψ(x)` with the Laplacian from central differences at `h`
    /// and `h/2`, combined by one Richardson step.
    pub fn local_energy(&self, x: &[f64], h: f64) -> Result<(f64, f64)> {
        self.check_sector(x)?;
        let psi = self.eval_unchecked(x);
        if !(psi.abs() >= PSI_FLOOR) {
            return Err(Error::Domain(format!("|psi| = {psi:e} below the underflow floor")));
        }
        let second = |step: f64| -> f64 {
            let mut y = x.to_vec();
            (0..x.len())
                .map(|i| {
                    y[i] = x[i] + step;
                    let up = self.eval_unchecked(&y);
                    y[i] = x[i] - step;
                    let down = self.eval_unchecked(&y);
                    y[i] = x[i];
                    (up - 2.0 * psi + down) / (step * step)
                })
                .sum()
        };
        let lap = (4.0 * second(0.5 * h) - second(h)) / 3.0;
        Ok((psi, -lap / psi + self.potential_energy(x)))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PointResidual {
    pub point: Vec<f64>,
    pub psi: f64,
    #[serde(rename = "H_psi_over_psi")]
    pub h_psi_over_psi: f64,
    #[serde(rename = "E")]
    pub energy: f64,
    pub rel_residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidualReport {
    pub h: f64,
    pub points: Vec<PointResidual>,
    pub max_rel_residual: f64,
}

fn min_gap(x: &[f64]) -> f64 {
    x.windows(2).map(|w| w[0] - w[1]).fold(f64::INFINITY, f64::min)
}

/// Max over `points` of `|(Hψ)/ψ - E| / |E|`, one point per rayon task.
///
/// Points must lie in the ordered sector with neighbouring gaps of at least
/// `10 h`.
pub fn residual_check(eig: &ManyBodyEigenfunction, points: &[Vec<f64>], h: f64) -> Result<ResidualReport> {
    if !(h > 0.0) {
        return Err(Error::InvalidParameter(format!("step must be positive, got {h}")));
    }
    if points.is_empty() {
        return Err(Error::InvalidParameter("no evaluation points".into()));
    }
    let e = eig.energy.value;
    let rows = points
        .par_iter()
        .map(|x| {
            if x.len() == eig.spec.n_particles && min_gap(x) < 10.0 * h {
                return Err(Error::Domain(format!(
                    "point {x:?} has a gap below 10h = {}",
                    10.0 * h
                )));
            }
            let (psi, local) = eig.local_energy(x, h)?;
            Ok(PointResidual {
                point: x.clone(),
                psi,
                h_psi_over_psi: local,
                energy: e,
                rel_residual: (local - e).abs() / e.abs(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let max_rel_residual = rows.iter().map(|p| p.rel_residual).fold(0.0, f64::max);
    Ok(ResidualReport { h, points: rows, max_rel_residual })
}

/// Deterministic points of the ordered sector, neighbouring gaps in
/// `[min_gap, min_gap + 1)`, with those close to a node of ψ thrown out:
/// the radial factor must keep its sign over `r(1 ± 5%)` and `|P|` must not
/// be a small cancellation of its terms.
pub fn sample_sector_points(
    eig: &ManyBodyEigenfunction,
    count: usize,
    seed: u64,
    min_gap: f64,
) -> Result<Vec<Vec<f64>>> {
    let n = eig.spec.n_particles;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        if attempts > 1000 * count.max(1) {
            return Err(Error::Domain(format!(
                "could only place {} of {count} well-conditioned points",
                out.len()
            )));
        }
        let shift: f64 = rng.gen_range(-1.0..1.0);
        let mut x = vec![0.0; n];
        for i in 1..n {
            x[i] = x[i - 1] - rng.gen_range(min_gap..min_gap + 1.0);
        }
        let mean = x.iter().sum::<f64>() / n as f64;
        x.iter_mut().for_each(|xi| *xi += shift - mean);
        let r = radius(&x);
        let f0 = eig.radial_value(r);
        let stable = [0.95, 1.05].iter().all(|s| eig.radial_value(r * s).signum() == f0.signum());
        let p = eig.p.eval_f64(&x);
        let p_ok = p.abs() >= 1e-2 * eig.p.abs_sum(&x);
        if stable && p_ok && eig.eval_unchecked(&x).abs() >= PSI_FLOOR {
            out.push(x);
        }
    }
    Ok(out)
}

/// The simplified ground state
/// `r^{alpha-b+1} e^{-r^2/2} (r^2 + alpha + 5/2)/(r^2 + alpha + 3/2) Π(x_i - x_j)^{a+1/2}`,
/// evaluated without going through the exceptional polynomial.
pub fn ground_state_direct(spec: &ManyBodySpec, x: &[f64]) -> f64 {
    let a = to_f64(&spec.alpha);
    let b = spec.constants.b.value;
    let t = spec.t().value;
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    let r2: f64 = x.iter().map(|v| (v - mean).powi(2)).sum();
    let mut pair = 1.0;
    for i in 0..x.len() {
        for j in (i + 1)..x.len() {
            pair *= (x[i] - x[j]).powf(t);
        }
    }
    r2.sqrt().powf(a - b + 1.0) * (-0.5 * r2).exp() * (r2 + a + 2.5) / (r2 + a + 1.5) * pair
}

/// Exact check at a rational configuration that
/// `L̂^{alpha+3/2}_{1,1}(r^2) / L_1^{alpha+1/2}(-r^2) = (r^2 + alpha + 5/2)/(r^2 + alpha + 3/2)`.
pub fn ground_state_ratio_matches(alpha: &Rational, x: &[Rational]) -> bool {
    let r2 = radius_squared_exact(x);
    let (num, den) = chi_minus_exceptional(alpha, 0);
    let lhs = num.eval(&r2) / den.eval(&r2);
    let simple = RationalPoly::new(vec![alpha + rat(5, 2), int(1)]).eval(&r2)
        / RationalPoly::new(vec![alpha + rat(3, 2), int(1)]).eval(&r2);
    lhs == simple
}
