//! Broken/unbroken classification from the asymptotics of `W`.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::params::SuperPotentialParams;
use crate::poly::rational::{format_rational, int, Rational};

/// Leading behaviour of a superpotential at both ends of `(0, ∞)`:
/// `W ~ origin_pole / r` as `r → 0` and `W ~ growth · r + tail / r` as `r → ∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperpotentialAsymptotics {
    pub origin_pole: Rational,
    pub growth: Rational,
    pub tail: Rational,
}

impl SuperpotentialAsymptotics {
    /// For `W = r + 2 g1 r/(1 + g1 r^2) + (alpha+1)/r` the middle term is
    /// `O(r)` at the origin and `2/r` at infinity.
    pub fn of(params: &SuperPotentialParams) -> Self {
        let c = params.alpha() + int(1);
        Self { tail: &c + int(2), origin_pole: c, growth: int(1) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SusyPhaseValue {
    Broken,
    Unbroken,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SusyPhase {
    pub value: SusyPhaseValue,
    /// Exponents of `r` near the origin in `exp(-∫W)` and `exp(+∫W)`.
    #[serde(with = "crate::poly::rational::serde_string_vec")]
    pub origin_exponents: Vec<Rational>,
    pub evidence: String,
}

/// `r^p` is square-integrable at the origin iff `2p > -1`.
fn integrable_at_origin(p: &Rational) -> bool {
    p * int(2) > int(-1)
}

/// Decides whether `exp(sign · ∫W)` is square-integrable at infinity, where
/// it behaves as `exp(sign · growth r^2/2) · r^{sign · tail}`.
fn integrable_at_infinity(sign: i64, a: &SuperpotentialAsymptotics) -> bool {
    let g = &a.growth * int(sign);
    if g.is_negative() {
        true
    } else if g.is_positive() {
        false
    } else {
        &a.tail * int(sign) * int(2) < int(-1)
    }
}

pub fn classify_asymptotics(a: &SuperpotentialAsymptotics) -> SusyPhase {
    let minus_exp = -a.origin_pole.clone();
    let plus_exp = a.origin_pole.clone();
    let minus_ok = integrable_at_origin(&minus_exp) && integrable_at_infinity(-1, a);
    let plus_ok = integrable_at_origin(&plus_exp) && integrable_at_infinity(1, a);
    let value = if minus_ok || plus_ok { SusyPhaseValue::Unbroken } else { SusyPhaseValue::Broken };
    let describe = |name: &str, exp: &Rational, sign: i64, ok: bool| {
        format!(
            "{name} ~ r^{} at 0 ({}), {} at infinity -> {}",
            format_rational(exp),
            if integrable_at_origin(exp) { "square-integrable" } else { "divergent norm" },
            if integrable_at_infinity(sign, a) { "decays" } else { "not square-integrable" },
            if ok { "normalizable zero mode" } else { "no zero mode" }
        )
    };
    let evidence = format!(
        "{}; {}",
        describe("exp(-∫W)", &minus_exp, -1, minus_ok),
        describe("exp(+∫W)", &plus_exp, 1, plus_ok)
    );
    SusyPhase { value, origin_exponents: vec![minus_exp, plus_exp], evidence }
}

/// Broken for every admissible `alpha`: `exp(-∫W)` has a non-integrable
/// `r^{-(alpha+1)}` at the origin and `exp(+∫W)` grows like a Gaussian.
pub fn classify_susy(params: &SuperPotentialParams) -> SusyPhase {
    classify_asymptotics(&SuperpotentialAsymptotics::of(params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::rat;
    use crate::susy::params::make_params;

    #[test]
    fn family_is_broken() {
        let p = classify_susy(&make_params(int(1)).unwrap());
        assert_eq!(p.value, SusyPhaseValue::Broken);
        assert_eq!(p.origin_exponents, vec![int(-2), int(2)]);
        assert_eq!(classify_susy(&make_params(rat(1, 2)).unwrap()).value, SusyPhaseValue::Broken);
    }

    #[test]
    fn pure_oscillator_is_unbroken() {
        let a = SuperpotentialAsymptotics { origin_pole: int(0), growth: int(1), tail: int(0) };
        assert_eq!(classify_asymptotics(&a).value, SusyPhaseValue::Unbroken);
    }

    #[test]
    fn small_centrifugal_pole_restores_a_zero_mode() {
        // W = r - 1/(4r): exp(-∫W) ~ r^{1/4} at 0, Gaussian at infinity
        let a = SuperpotentialAsymptotics { origin_pole: rat(-1, 4), growth: int(1), tail: rat(-1, 4) };
        assert_eq!(classify_asymptotics(&a).value, SusyPhaseValue::Unbroken);
    }
}
