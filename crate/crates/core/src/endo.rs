//! Algebra endomorphisms `X -> x, Y -> y` given by pairs with `[y, x] = 1`.

use crate::element::WeylElement;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EndoPair {
    pub x: WeylElement,
    pub y: WeylElement,
    verified: bool,
}

impl EndoPair {
    pub fn identity() -> Self {
        EndoPair {
            x: WeylElement::x(),
            y: WeylElement::y(),
            verified: true,
        }
    }

    pub fn verified(&self) -> bool {
        self.verified
    }

    /// `h = yx`.
    pub fn h(&self) -> WeylElement {
        &self.y * &self.x
    }

    /// Builds the pair without checking the defining relation. Such a pair
    /// is refused by [`apply_endo`].
    pub fn unchecked(x: WeylElement, y: WeylElement) -> Self {
        EndoPair {
            x,
            y,
            verified: false,
        }
    }

    pub fn apply(&self, a: &WeylElement) -> Result<WeylElement> {
        apply_endo(self, a)
    }
}

/// Verifies `[y, x] = 1` and returns the pair, or the offending commutator.
pub fn build_endo(x: WeylElement, y: WeylElement) -> Result<EndoPair> {
    let c = y.commutator(&x);
    if c == WeylElement::one() {
        Ok(EndoPair {
            x,
            y,
            verified: true,
        })
    } else {
        Err(Error::NotAnEndomorphism { commutator: c })
    }
}

/// `sum a_ij y^i x^j`.
pub fn apply_endo(e: &EndoPair, a: &WeylElement) -> Result<WeylElement> {
    if !e.verified {
        return Err(Error::Unverified);
    }
    let max_y = a.support().map(|m| m.y).max().unwrap_or(0);
    let max_x = a.support().map(|m| m.x).max().unwrap_or(0);
    let ypow = powers(&e.y, max_y);
    let xpow = powers(&e.x, max_x);
    Ok(a
        .terms()
        .map(|(m, c)| (&ypow[m.y as usize] * &xpow[m.x as usize]).scale(c))
        .sum())
}

pub(crate) fn powers(a: &WeylElement, n: u32) -> Vec<WeylElement> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(WeylElement::one());
    for k in 0..n as usize {
        let next = &out[k] * a;
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangular() -> EndoPair {
        build_endo(WeylElement::x(), &WeylElement::y() + &WeylElement::x().pow(2)).unwrap()
    }

    #[test]
    fn build_accepts_and_rejects() {
        assert!(build_endo(WeylElement::x(), WeylElement::y()).unwrap().verified());
        assert!(triangular().verified());
        match build_endo(WeylElement::x(), WeylElement::x()) {
            Err(Error::NotAnEndomorphism { commutator }) => assert!(commutator.is_zero()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn apply_examples() {
        let e = triangular();
        let got = apply_endo(&e, &WeylElement::h()).unwrap();
        assert_eq!(got, &WeylElement::h() + &WeylElement::x().pow(3));
        let a = &WeylElement::h().pow(2) + &WeylElement::y();
        assert_eq!(apply_endo(&EndoPair::identity(), &a).unwrap(), a);
        let rel = WeylElement::y().commutator(&WeylElement::x());
        assert_eq!(apply_endo(&e, &rel).unwrap(), WeylElement::one());
    }

    #[test]
    fn unverified_is_refused() {
        let e = EndoPair::unchecked(WeylElement::x(), WeylElement::x());
        assert!(matches!(apply_endo(&e, &WeylElement::x()), Err(Error::Unverified)));
    }
}
