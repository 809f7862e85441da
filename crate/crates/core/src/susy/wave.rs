//! Radial waves of the form `c · r^s · exp(-r^2/2) · num(r^2) / den(r^2)`.
//!
//! The family is closed under `d/dr` and under multiplication by the
//! superpotential, so ladder operators and the Schrödinger operator act on
//! it exactly. Differentiation lowers `s` by one; [`RadialShape::canonical`]
//! moves any power of `x = r^2` out of the fraction and into `s`.

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::poly::rational::{format_rational, int, to_f64, Rational};
use crate::poly::sturm::count_positive_roots;
use crate::poly::{RatFunc, RationalPoly};

/// `sign · sqrt(square / Γ(gamma_arg))`, kept symbolic so ladder identities
/// can be compared exactly. Without a Γ argument the divisor is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaleFactor {
    negative: bool,
    square: Rational,
    gamma_arg: Option<Rational>,
}

impl ScaleFactor {
    pub fn new(square: Rational, gamma_arg: Option<Rational>) -> Result<Self> {
        if square.is_negative() {
            return Err(Error::Representation("negative squared scale".into()));
        }
        if let Some(g) = &gamma_arg {
            if !g.is_positive() {
                return Err(Error::Representation(format!("Gamma argument {g} must be positive")));
            }
        }
        Ok(Self { negative: false, square, gamma_arg })
    }

    pub fn one() -> Self {
        Self { negative: false, square: Rational::one(), gamma_arg: None }
    }

    pub fn is_zero(&self) -> bool {
        self.square.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.negative && !self.is_zero()
    }

    pub fn square(&self) -> &Rational {
        &self.square
    }

    pub fn gamma_arg(&self) -> Option<&Rational> {
        self.gamma_arg.as_ref()
    }

    /// Multiplies by the rational `c`.
    pub fn times(&self, c: &Rational) -> Self {
        Self {
            negative: self.negative ^ c.is_negative(),
            square: &self.square * c * c,
            gamma_arg: self.gamma_arg.clone(),
        }
    }

    /// Multiplies by `sqrt(c)` for a nonnegative rational `c`.
    pub fn times_sqrt(&self, c: &Rational) -> Self {
        Self { square: &self.square * c, ..self.clone() }
    }

    pub fn negated(&self) -> Self {
        Self { negative: !self.negative, ..self.clone() }
    }

    pub fn value(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let mut log = 0.5 * ln_rational(&self.square);
        if let Some(g) = &self.gamma_arg {
            log -= 0.5 * ln_gamma(to_f64(g));
        }
        let v = log.exp();
        if self.negative {
            -v
        } else {
            v
        }
    }
}

fn ln_rational(q: &Rational) -> f64 {
    // Rational magnitudes here can exceed f64 range for large n.
    let ln_big = |b: &num_bigint::BigInt| -> f64 {
        let bits = b.bits();
        if bits < 1000 {
            b.to_f64().unwrap().ln()
        } else {
            let shift = bits - 900;
            let top: num_bigint::BigInt = b >> shift;
            top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
        }
    };
    ln_big(q.numer()) - ln_big(q.denom())
}

/// `r^power · exp(-r^2/2) · f(r^2)` with no scale attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadialShape {
    pub power: Rational,
    pub f: RatFunc,
}

impl RadialShape {
    pub fn new(power: Rational, f: RatFunc) -> Self {
        Self { power, f }
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero()
    }

    /// Pulls powers of `x` out of numerator and denominator into `power`.
    pub fn canonical(&self) -> Self {
        if self.f.is_zero() {
            return Self { power: Rational::zero(), f: RatFunc::zero() };
        }
        let kn = self.f.num().low_order();
        let kd = self.f.den().low_order();
        let f = RatFunc::new(self.f.num().shift_down(kn), self.f.den().shift_down(kd));
        let power = &self.power + int(2 * kn as i64) - int(2 * kd as i64);
        Self { power, f }
    }

    /// `d/dr [r^s e^{-x/2} f(x)] = r^{s-1} e^{-x/2} [(s - x) f + 2 x f'(x)]`.
    pub fn derivative(&self) -> Self {
        let s_minus_x = RatFunc::from_poly(RationalPoly::new(vec![self.power.clone(), int(-1)]));
        let two_x = RatFunc::from_poly(RationalPoly::monomial(int(2), 1));
        let f = &(&s_minus_x * &self.f) + &(&two_x * &self.f.derivative());
        Self { power: &self.power - int(1), f }.canonical()
    }

    /// Multiplies by `r^shift · g(x)`.
    pub fn times(&self, g: &RatFunc, shift: &Rational) -> Self {
        Self { power: &self.power + shift, f: &self.f * g }.canonical()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { power: self.power.clone(), f: self.f.scale(c) }
    }

    /// Sum of two shapes whose powers differ by an even integer.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let diff = &self.power - &other.power;
        if !diff.is_integer() || !(diff.numer() % 2u32).is_zero() {
            return Err(Error::Representation(format!(
                "cannot add r^{} and r^{} terms as functions of r^2",
                format_rational(&self.power),
                format_rational(&other.power)
            )));
        }
        let k = diff.to_integer().to_i64().unwrap() / 2;
        let (lo, hi, k) = if k >= 0 { (other, self, k) } else { (self, other, -k) };
        let lifted = &hi.f * &RatFunc::from_poly(RationalPoly::monomial(Rational::one(), k as usize));
        Ok(Self { power: lo.power.clone(), f: &lo.f + &lifted }.canonical())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&int(-1)))
    }

    pub fn eval(&self, r: f64) -> f64 {
        r.powf(to_f64(&self.power)) * (-0.5 * r * r).exp() * self.f.eval_f64(r * r)
    }
}

/// A radial wavefunction `scale · r^power · exp(-r^2/2) · num(r^2) / den(r^2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolyWave {
    scale: ScaleFactor,
    power: Rational,
    num: RationalPoly,
    den: RationalPoly,
}

impl QuasiPolyWave {
    /// Rejects a denominator with a root on `r^2 >= 0`.
    pub fn new(scale: ScaleFactor, power: Rational, num: RationalPoly, den: RationalPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Representation("zero denominator".into()));
        }
        if den.coeff(0).is_zero() || count_positive_roots(&den) > 0 {
            return Err(Error::Representation(format!(
                "denominator {den} vanishes for some r >= 0"
            )));
        }
        Ok(Self { scale, power, num, den })
    }

    pub fn from_shape(scale: ScaleFactor, shape: &RadialShape) -> Result<Self> {
        let s = shape.canonical();
        Self::new(scale, s.power, s.f.num().clone(), s.f.den().clone())
    }

    pub fn scale(&self) -> &ScaleFactor {
        &self.scale
    }

    pub fn power(&self) -> &Rational {
        &self.power
    }

    pub fn num(&self) -> &RationalPoly {
        &self.num
    }

    pub fn den(&self) -> &RationalPoly {
        &self.den
    }

    pub fn shape(&self) -> RadialShape {
        RadialShape::new(self.power.clone(), RatFunc::new(self.num.clone(), self.den.clone()))
    }

    pub fn with_scale(&self, scale: ScaleFactor) -> Self {
        Self { scale, ..self.clone() }
    }

    /// Number of distinct positive zeros in `r`, i.e. positive roots of the
    /// numerator in `x = r^2`.
    pub fn node_count(&self) -> usize {
        count_positive_roots(&self.num)
    }

    /// Canonical form: `x` powers pulled into `power`, `num` and `den` coprime
    /// and monic, every constant moved into the scale. Two waves are the
    /// same function exactly when their canonical forms are equal.
    pub fn canonical(&self) -> Self {
        let shape = self.shape().canonical();
        if shape.is_zero() {
            return Self {
                scale: ScaleFactor { square: Rational::zero(), ..ScaleFactor::one() },
                power: Rational::zero(),
                num: RationalPoly::zero(),
                den: RationalPoly::one(),
            };
        }
        let lead = shape.f.num().leading().unwrap().clone();
        Self {
            scale: self.scale.times(&lead),
            power: shape.power,
            num: shape.f.num().monic(),
            den: shape.f.den().clone(),
        }
    }

    pub fn same_function(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Same `r`-dependence up to a nonzero constant factor.
    pub fn proportional_to(&self, other: &Self) -> bool {
        let (a, b) = (self.canonical(), other.canonical());
        !a.num.is_zero() && a.power == b.power && a.num == b.num && a.den == b.den
    }

    /// The constant `c` with `self = c · other`, when proportional.
    pub fn ratio_to(&self, other: &Self) -> Option<f64> {
        if !self.proportional_to(other) {
            return None;
        }
        let (a, b) = (self.canonical(), other.canonical());
        Some(a.scale.value() / b.scale.value())
    }

    pub fn eval(&self, r: f64) -> f64 {
        let x = r * r;
        self.scale.value()
            * r.powf(to_f64(&self.power))
            * (-0.5 * x).exp()
            * self.num.eval_f64(x)
            / self.den.eval_f64(x)
    }

    pub fn tabulate(&self, radii: &[f64]) -> Vec<(f64, f64)> {
        radii.iter().map(|&r| (r, self.eval(r))).collect()
    }
}

/// JSON view: `{scale, power, num, den}` with exact coefficient strings.
#[derive(Serialize, Deserialize)]
struct WaveJson {
    scale: ScaleJson,
    power: String,
    num: RationalPoly,
    den: RationalPoly,
}

#[derive(Serialize, Deserialize)]
struct ScaleJson {
    value: f64,
    sign: i8,
    square: String,
    gamma_arg: Option<String>,
}

impl Serialize for QuasiPolyWave {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WaveJson {
            scale: ScaleJson {
                value: self.scale.value(),
                sign: if self.scale.is_negative() { -1 } else { 1 },
                square: format_rational(&self.scale.square),
                gamma_arg: self.scale.gamma_arg.as_ref().map(format_rational),
            },
            power: format_rational(&self.power),
            num: self.num.clone(),
            den: self.den.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuasiPolyWave {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use crate::poly::rational::parse_rational;
        use serde::de::Error as _;
        let w = WaveJson::deserialize(d)?;
        let square = parse_rational(&w.scale.square).map_err(D::Error::custom)?;
        let gamma_arg = w
            .scale
            .gamma_arg
            .as_deref()
            .map(parse_rational)
            .transpose()
            .map_err(D::Error::custom)?;
        let mut scale = ScaleFactor::new(square, gamma_arg).map_err(D::Error::custom)?;
        if w.scale.sign < 0 {
            scale = scale.negated();
        }
        let power = parse_rational(&w.power).map_err(D::Error::custom)?;
        QuasiPolyWave::new(scale, power, w.num, w.den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::rat;

    fn gaussian_wave(power: Rational) -> QuasiPolyWave {
        QuasiPolyWave::new(ScaleFactor::one(), power, RationalPoly::one(), RationalPoly::one()).unwrap()
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let shape = RadialShape::new(
            rat(5, 2),
            RatFunc::new(RationalPoly::from_ints(&[1, 3, -1]), RationalPoly::from_ints(&[2, 1])),
        );
        let d = shape.derivative();
        for r in [0.4, 1.1, 2.3] {
            let h = 1e-5;
            let fd = (shape.eval(r + h) - shape.eval(r - h)) / (2.0 * h);
            assert!((d.eval(r) - fd).abs() < 1e-8, "r = {r}");
        }
    }

    #[test]
    fn canonical_pulls_out_x_powers() {
        let shape = RadialShape::new(int(1), RatFunc::new(RationalPoly::from_ints(&[0, 0, 3]), RationalPoly::one()));
        let c = shape.canonical();
        assert_eq!(c.power, int(5));
        assert_eq!(c.f, RatFunc::constant(int(3)));
    }

    #[test]
    fn odd_power_gap_is_rejected() {
        let a = RadialShape::new(int(1), RatFunc::one());
        let b = RadialShape::new(int(2), RatFunc::one());
        assert!(a.add(&b).is_err());
        let c = RadialShape::new(int(3), RatFunc::one());
        let s = a.add(&c).unwrap();
        assert!((s.eval(1.5) - (a.eval(1.5) + c.eval(1.5))).abs() < 1e-14);
    }

    #[test]
    fn denominator_with_positive_root_rejected() {
        let bad = RationalPoly::from_ints(&[-1, 1]);
        assert!(QuasiPolyWave::new(ScaleFactor::one(), int(1), RationalPoly::one(), bad).is_err());
        let at_origin = RationalPoly::from_ints(&[0, 1]);
        assert!(QuasiPolyWave::new(ScaleFactor::one(), int(1), RationalPoly::one(), at_origin).is_err());
    }

    #[test]
    fn canonical_equality_absorbs_constants() {
        let a = QuasiPolyWave::new(
            ScaleFactor::one(),
            int(1),
            RationalPoly::from_ints(&[2, 2]),
            RationalPoly::from_ints(&[1]),
        )
        .unwrap();
        let b = QuasiPolyWave::new(
            ScaleFactor::new(int(4), None).unwrap(),
            int(1),
            RationalPoly::from_ints(&[1, 1]),
            RationalPoly::from_ints(&[1]),
        )
        .unwrap();
        assert!(a.same_function(&b));
        assert!((a.eval(0.7) - b.eval(0.7)).abs() < 1e-15);
        let c = b.with_scale(b.scale().negated());
        assert!(!a.same_function(&c));
        assert!(a.proportional_to(&c));
        assert!((a.ratio_to(&c).unwrap() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn scale_with_gamma() {
        // sqrt(2 / Γ(3/2)) = sqrt(4/sqrt(pi))
        let s = ScaleFactor::new(int(2), Some(rat(3, 2))).unwrap();
        let expect = (4.0 / std::f64::consts::PI.sqrt()).sqrt();
        assert!((s.value() - expect).abs() < 1e-13);
        assert!(ScaleFactor::new(int(-1), None).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let w = gaussian_wave(rat(3, 2));
        let text = serde_json::to_string(&w).unwrap();
        assert!(text.contains("\"power\":\"3/2\""));
        let back: QuasiPolyWave = serde_json::from_str(&text).unwrap();
        assert_eq!(back, w);
    }
}
