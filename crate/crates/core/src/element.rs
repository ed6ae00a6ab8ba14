//! Elements of the Weyl algebra in the normal basis `Y^i X^j`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Rat;

/// The normal monomial `Y^y X^x`.
///
/// Ordered by total degree, then by the `Y` exponent, which is also the
/// canonical printing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub y: u32,
    pub x: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { y: 0, x: 0 };

    pub fn new(y: u32, x: u32) -> Self {
        Monomial { y, x }
    }

    pub fn total_degree(self) -> u32 {
        self.y + self.x
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y + self.x, self.y).cmp(&(other.y + other.x, other.y))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factor = |name: &str, e: u32| match e {
            0 => None,
            1 => Some(name.to_string()),
            _ => Some(format!("{name}^{e}")),
        };
        let parts: Vec<String> = [factor("Y", self.y), factor("X", self.x)]
            .into_iter()
            .flatten()
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Coefficients of `X^b Y^c = sum_k c_k Y^(c-k) X^(b-k)`, where
/// `c_k = (-1)^k k! C(b,k) C(c,k)`.
pub fn reorder_coefficients(b: u32, c: u32) -> Vec<BigInt> {
    let n = b.min(c);
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut cur = BigInt::one();
    out.push(cur.clone());
    for k in 0..n {
        // c_{k+1} = -c_k (b-k)(c-k)/(k+1)
        cur = -(cur * BigInt::from(b - k) * BigInt::from(c - k)) / BigInt::from(k + 1);
        out.push(cur.clone());
    }
    out
}

/// An exact element `sum a_ij Y^i X^j` of the Weyl algebra.
///
/// Zero coefficients are never stored, so structural equality is equality
/// in the algebra.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct WeylElement {
    terms: BTreeMap<Monomial, Rat>,
}

impl WeylElement {
    pub fn zero() -> Self {
        WeylElement::default()
    }

    pub fn one() -> Self {
        Self::scalar(Rat::one())
    }

    pub fn scalar(c: Rat) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::scalar(crate::scalar::rat(n))
    }

    pub fn monomial(m: Monomial, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        WeylElement { terms }
    }

    /// `Y^y X^x` with coefficient one.
    pub fn yx(y: u32, x: u32) -> Self {
        Self::monomial(Monomial::new(y, x), Rat::one())
    }

    pub fn x() -> Self {
        Self::yx(0, 1)
    }

    pub fn y() -> Self {
        Self::yx(1, 0)
    }

    /// `H = YX`.
    pub fn h() -> Self {
        Self::yx(1, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(iter: I) -> Self {
        let mut terms: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m, c) in iter {
            *terms.entry(m).or_insert_with(Rat::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        WeylElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for elements of `Q` (including zero).
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> Rat {
        self.terms.get(&m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(Monomial::ONE)
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.keys().copied()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        WeylElement {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Leading total degree `max(i + j)`, `None` on zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    fn integer_form(&self) -> (Vec<(Monomial, BigInt)>, BigInt) {
        let den = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, c.numer() * (&den / c.denom())))
            .collect();
        (terms, den)
    }

    pub fn mul_ref(&self, other: &WeylElement) -> WeylElement {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (a, da) = self.integer_form();
        let (b, db) = other.integer_form();
        let mut cache: HashMap<(u32, u32), Vec<BigInt>> = HashMap::new();
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let base = ca * cb;
                let coeffs = cache
                    .entry((ma.x, mb.y))
                    .or_insert_with(|| reorder_coefficients(ma.x, mb.y));
                for (k, ck) in coeffs.iter().enumerate() {
                    let k = k as u32;
                    let m = Monomial::new(ma.y + mb.y - k, ma.x + mb.x - k);
                    *acc.entry(m).or_insert_with(BigInt::zero) += &base * ck;
                }
            }
        }
        let den = da * db;
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m, Rat::new(c, den.clone())))
            .collect();
        WeylElement { terms }
    }

    pub fn pow(&self, n: u32) -> WeylElement {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul_ref(self);
        }
        out
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &WeylElement) -> WeylElement {
        &self.mul_ref(other) - &other.mul_ref(self)
    }

    /// The automorphism `X -> Y, Y -> -X` (so `H -> 1 - H`).
    pub fn theta(&self) -> WeylElement {
        // theta(Y^i X^j) = (-1)^i X^i Y^j
        let terms = self.terms.iter().flat_map(|(m, c)| {
            let sign = if m.y % 2 == 0 { c.clone() } else { -c.clone() };
            reorder_coefficients(m.y, m.x)
                .into_iter()
                .enumerate()
                .map(move |(k, ck)| {
                    let k = k as u32;
                    (Monomial::new(m.x - k, m.y - k), &sign * Rat::from_integer(ck))
                })
        });
        WeylElement::from_terms(terms)
    }

    /// The anti-automorphism `X -> Y, Y -> X` (so `H -> H`).
    pub fn theta_prime(&self) -> WeylElement {
        // theta'(Y^i X^j) = theta'(X)^j theta'(Y)^i = Y^j X^i, already normal
        WeylElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.x, m.y), c.clone()))
                .collect(),
        }
    }
}

impl Add for &WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: &WeylElement) -> WeylElement {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let e = terms.entry(*m).or_insert_with(Rat::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(m);
            }
        }
        WeylElement { terms }
    }
}

impl Sub for &WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: &WeylElement) -> WeylElement {
        self + &(-rhs)
    }
}

impl Neg for &WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        WeylElement {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: &WeylElement) -> WeylElement {
        self.mul_ref(rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for WeylElement {
            type Output = WeylElement;
            fn $f(self, rhs: WeylElement) -> WeylElement {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&WeylElement> for WeylElement {
            type Output = WeylElement;
            fn $f(self, rhs: &WeylElement) -> WeylElement {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        -&self
    }
}

impl std::iter::Sum for WeylElement {
    fn sum<I: Iterator<Item = WeylElement>>(iter: I) -> Self {
        iter.fold(WeylElement::zero(), |acc, e| &acc + &e)
    }
}

impl From<Rat> for WeylElement {
    fn from(c: Rat) -> Self {
        WeylElement::scalar(c)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn el(terms: &[(u32, u32, i64)]) -> WeylElement {
        WeylElement::from_terms(terms.iter().map(|&(y, x, c)| (Monomial::new(y, x), rat(c))))
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let x = WeylElement::x();
        assert_eq!(&x + &WeylElement::zero(), x);
        assert!((&x + &x.scale(&rat(-1))).is_zero());
    }

    #[test]
    fn yx_plus_xy() {
        let xy = &WeylElement::x() * &WeylElement::y();
        assert_eq!(&WeylElement::h() + &xy, el(&[(1, 1, 2), (0, 0, -1)]));
    }

    #[test]
    fn basic_products() {
        let x = WeylElement::x();
        let y = WeylElement::y();
        assert_eq!(&x * &y, el(&[(1, 1, 1), (0, 0, -1)]));
        assert_eq!(
            &x.pow(2) * &y.pow(2),
            el(&[(2, 2, 1), (1, 1, -4), (0, 0, 2)])
        );
        let h = WeylElement::h();
        assert_eq!(&h * &h, el(&[(2, 2, 1), (1, 1, -1)]));
    }

    #[test]
    fn commutators() {
        let x = WeylElement::x();
        let y = WeylElement::y();
        assert_eq!(y.commutator(&x), WeylElement::one());
        assert!(x.commutator(&x).is_zero());
        assert_eq!(WeylElement::h().commutator(&x), x);
    }

    #[test]
    fn theta_examples() {
        let h = WeylElement::h();
        assert_eq!(h.theta(), el(&[(1, 1, -1), (0, 0, 1)]));
        assert_eq!(h.theta_prime(), h);
        assert_eq!(WeylElement::x().theta().theta(), el(&[(0, 1, -1)]));
    }

    #[test]
    fn printing() {
        assert_eq!(WeylElement::zero().to_string(), "0");
        assert_eq!(WeylElement::h().to_string(), "Y*X");
        let xy = &WeylElement::x() * &WeylElement::y();
        assert_eq!(xy.to_string(), "-1 + Y*X");
        let e = WeylElement::from_terms([
            (Monomial::new(2, 0), crate::scalar::ratio(-3, 2)),
            (Monomial::new(0, 1), rat(1)),
        ]);
        assert_eq!(e.to_string(), "X - 3/2*Y^2");
    }

    #[test]
    fn reorder_small_cases() {
        let c = reorder_coefficients(2, 2);
        assert_eq!(c, vec![1.into(), (-4).into(), 2.into()]);
    }
}
