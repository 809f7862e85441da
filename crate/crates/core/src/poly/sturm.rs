//! Exact real-root counting with Sturm chains.

use num_traits::{Signed, Zero};

use super::rational::Rational;
use super::univariate::RationalPoly;

/// `p, p', -rem(p, p'), ...` until the remainder vanishes.
pub fn sturm_chain(p: &RationalPoly) -> Vec<RationalPoly> {
    let mut chain = Vec::new();
    if p.is_zero() {
        return chain;
    }
    chain.push(p.clone());
    let mut prev = p.clone();
    let mut cur = p.derivative();
    while !cur.is_zero() {
        let (_, r) = prev.div_rem(&cur);
        chain.push(cur.clone());
        prev = cur;
        cur = -r;
    }
    chain
}

fn sign_changes(values: impl Iterator<Item = Rational>) -> usize {
    let signs: Vec<bool> = values.filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn changes_at(chain: &[RationalPoly], x: &Rational) -> usize {
    sign_changes(chain.iter().map(|q| q.eval(x)))
}

fn changes_at_pos_infinity(chain: &[RationalPoly]) -> usize {
    sign_changes(chain.iter().filter_map(|q| q.leading().cloned()))
}

/// Distinct real roots in the half-open interval `(a, b]`.
pub fn count_roots_between(p: &RationalPoly, a: &Rational, b: &Rational) -> usize {
    let chain = sturm_chain(p);
    changes_at(&chain, a).saturating_sub(changes_at(&chain, b))
}

/// Distinct real roots on the open half-line `(0, ∞)`.
pub fn count_positive_roots(p: &RationalPoly) -> usize {
    if p.is_zero() {
        return 0;
    }
    let q = p.shift_down(p.low_order());
    let chain = sturm_chain(&q);
    changes_at(&chain, &Rational::zero()).saturating_sub(changes_at_pos_infinity(&chain))
}

/// Distinct real roots on `(-∞, 0)`.
pub fn count_negative_roots(p: &RationalPoly) -> usize {
    count_positive_roots(&p.reflect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::int;

    fn from_roots(roots: &[i64]) -> RationalPoly {
        roots
            .iter()
            .fold(RationalPoly::one(), |acc, &r| &acc * &RationalPoly::linear_root(int(r)))
    }

    #[test]
    fn counts_simple_roots() {
        let p = from_roots(&[-3, 1, 2, 5]);
        assert_eq!(count_positive_roots(&p), 3);
        assert_eq!(count_negative_roots(&p), 1);
        assert_eq!(count_roots_between(&p, &int(0), &int(2)), 2);
    }

    #[test]
    fn repeated_and_zero_roots() {
        let p = from_roots(&[0, 0, 2, 2, -1]);
        assert_eq!(count_positive_roots(&p), 1);
        assert_eq!(count_negative_roots(&p), 1);
    }

    #[test]
    fn no_real_roots() {
        let p = RationalPoly::from_ints(&[1, 0, 1]);
        assert_eq!(count_positive_roots(&p), 0);
        assert_eq!(count_negative_roots(&p), 0);
    }
}
