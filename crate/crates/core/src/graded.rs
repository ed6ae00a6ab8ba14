//! The graded view `A1 = Q[H](sigma, H) = (+)_n Q[H] v_n`, with `H = YX`,
//! `sigma(H) = H - 1`, `v_n = X^n` for `n > 0`, `v_n = Y^-n` for `n < 0`.
//!
//! Coefficients sit on the left of `v_n`, and `v_m beta(H) = beta(H - m) v_m`.
//! The same machinery runs over `Q[H]` ([`GradedElement`]) and over the
//! localization at nonzero polynomials in `H` ([`LocalizedElement`]).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::degree::Degree;
use crate::element::{Monomial, WeylElement};
use crate::scalar::{rat, Rat};

/// A polynomial in `H` over the rationals, dense, lowest degree first.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct PolyH {
    coeffs: Vec<Rat>,
}

impl PolyH {
    pub fn zero() -> Self {
        PolyH { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable `H`.
    pub fn var() -> Self {
        Self::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// `H + c`.
    pub fn linear(c: i64) -> Self {
        Self::from_coeffs(vec![rat(c), Rat::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyH { coeffs }
    }

    /// `prod (H + r)` over the given shifts.
    pub fn product_of_linears<I: IntoIterator<Item = i64>>(shifts: I) -> Self {
        shifts
            .into_iter()
            .fold(Self::one(), |acc, r| acc.mul(&Self::linear(r)))
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rat::zero();
        Self::from_coeffs(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        PolyH {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// `p(H - m)`, i.e. `sigma^m(p)`.
    pub fn shift(&self, m: i64) -> Self {
        let step = Self::linear(-m);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            acc.mul(&step).add(&Self::constant(c.clone()))
        })
    }

    pub fn eval(&self, h: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * h + c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dl = d.leading().expect("division by zero polynomial").clone();
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / &dl;
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&(Rat::one() / l)),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `sum c_k H^k` as an element of the Weyl algebra.
    pub fn to_weyl(&self) -> WeylElement {
        let h = WeylElement::h();
        self.coeffs.iter().rev().fold(WeylElement::zero(), |acc, c| {
            &(&acc * &h) + &WeylElement::scalar(c.clone())
        })
    }
}

impl fmt::Display for PolyH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        f.write_str("H")?;
                    } else {
                        write!(f, "H^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyH({self})")
    }
}

/// A reduced fraction of polynomials in `H` with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatH {
    num: PolyH,
    den: PolyH,
}

impl RatH {
    /// Panics if `den` is zero.
    pub fn new(num: PolyH, den: PolyH) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatH {
                num,
                den: PolyH::one(),
            };
        }
        let g = num.gcd(&den);
        let num = num.div_rem(&g).0;
        let den = den.div_rem(&g).0;
        let l = Rat::one() / den.leading().unwrap();
        RatH {
            num: num.scale(&l),
            den: den.scale(&l),
        }
    }

    pub fn from_poly(p: PolyH) -> Self {
        RatH {
            num: p,
            den: PolyH::one(),
        }
    }

    pub fn numer(&self) -> &PolyH {
        &self.num
    }

    pub fn denom(&self) -> &PolyH {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Self {
        RatH::new(self.den.clone(), self.num.clone())
    }
}

impl fmt::Display for RatH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatH({self})")
    }
}

/// Coefficient rings for the graded algebra: commutative, with the shift
/// `sigma^m: H -> H - m`.
pub trait HCoeff: Clone + PartialEq + fmt::Display {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn shift(&self, m: i64) -> Self;
    fn from_poly(p: PolyH) -> Self;
}

impl HCoeff for PolyH {
    fn zero() -> Self {
        PolyH::zero()
    }
    fn is_zero(&self) -> bool {
        PolyH::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        PolyH::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        PolyH::mul(self, other)
    }
    fn neg(&self) -> Self {
        PolyH::neg(self)
    }
    fn shift(&self, m: i64) -> Self {
        PolyH::shift(self, m)
    }
    fn from_poly(p: PolyH) -> Self {
        p
    }
}

impl HCoeff for RatH {
    fn zero() -> Self {
        RatH::from_poly(PolyH::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return RatH::new(self.num.add(&other.num), self.den.clone());
        }
        RatH::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn mul(&self, other: &Self) -> Self {
        RatH::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn neg(&self) -> Self {
        RatH {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn shift(&self, m: i64) -> Self {
        RatH::new(self.num.shift(m), self.den.shift(m))
    }
    fn from_poly(p: PolyH) -> Self {
        RatH::from_poly(p)
    }
}

/// `v_m v_n = gamma(H) v_(m+n)`, by repeated single steps `XY = H - 1`,
/// `YX = H`.
pub fn contraction(m: i64, n: i64) -> PolyH {
    let mut gamma = PolyH::one();
    if m > 0 && n < 0 {
        // X^a Y^b = X^(a-1) (H - 1) Y^(b-1) = (H - a) X^(a-1) Y^(b-1)
        let (mut a, mut b) = (m, -n);
        while a > 0 && b > 0 {
            gamma = gamma.mul(&PolyH::linear(-a));
            a -= 1;
            b -= 1;
        }
    } else if m < 0 && n > 0 {
        // Y^a X^b = Y^(a-1) H X^(b-1) = (H + a - 1) Y^(a-1) X^(b-1)
        let (mut a, mut b) = (-m, n);
        while a > 0 && b > 0 {
            gamma = gamma.mul(&PolyH::linear(a - 1));
            a -= 1;
            b -= 1;
        }
    }
    gamma
}

/// `sum_n alpha_n(H) v_n` with coefficients in `C`.
#[derive(Clone, PartialEq)]
pub struct Graded<C: HCoeff> {
    comps: BTreeMap<i64, C>,
}

pub type GradedElement = Graded<PolyH>;
pub type LocalizedElement = Graded<RatH>;

impl<C: HCoeff> Default for Graded<C> {
    fn default() -> Self {
        Graded {
            comps: BTreeMap::new(),
        }
    }
}

impl<C: HCoeff> Graded<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `alpha v_n`.
    pub fn component(n: i64, alpha: C) -> Self {
        let mut comps = BTreeMap::new();
        if !alpha.is_zero() {
            comps.insert(n, alpha);
        }
        Graded { comps }
    }

    pub fn from_components<I: IntoIterator<Item = (i64, C)>>(iter: I) -> Self {
        iter.into_iter()
            .fold(Self::zero(), |acc, (n, c)| acc.add(&Self::component(n, c)))
    }

    pub fn components(&self) -> impl Iterator<Item = (i64, &C)> {
        self.comps.iter().map(|(n, c)| (*n, c))
    }

    pub fn get(&self, n: i64) -> Option<&C> {
        self.comps.get(&n)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut comps = self.comps.clone();
        for (n, c) in &other.comps {
            let sum = match comps.get(n) {
                Some(a) => a.add(c),
                None => c.clone(),
            };
            if sum.is_zero() {
                comps.remove(n);
            } else {
                comps.insert(*n, sum);
            }
        }
        Graded { comps }
    }

    pub fn neg(&self) -> Self {
        Graded {
            comps: self.comps.iter().map(|(n, c)| (*n, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// `(alpha v_m)(beta v_n) = alpha sigma^m(beta) gamma_(m,n) v_(m+n)`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m, alpha) in &self.comps {
            for (n, beta) in &other.comps {
                let coeff = alpha
                    .mul(&beta.shift(*m))
                    .mul(&C::from_poly(contraction(*m, *n)));
                out = out.add(&Self::component(m + n, coeff));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::component(0, C::from_poly(PolyH::one())), |acc, _| {
            acc.mul(self)
        })
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self.mul(&Self::component(0, C::from_poly(PolyH::constant(c.clone()))))
    }

    /// Largest component index, `-inf` on zero.
    pub fn degree(&self) -> Degree {
        self.comps
            .keys()
            .next_back()
            .map_or(Degree::NegInf, |n| Degree::Finite(*n))
    }
}

impl<C: HCoeff> fmt::Display for Graded<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .comps
            .iter()
            .map(|(n, c)| format!("({c})*v[{n}]"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<C: HCoeff> fmt::Debug for Graded<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graded({self})")
    }
}

impl GradedElement {
    pub fn localize(&self) -> LocalizedElement {
        Graded {
            comps: self
                .comps
                .iter()
                .map(|(n, p)| (*n, RatH::from_poly(p.clone())))
                .collect(),
        }
    }
}

impl LocalizedElement {
    /// The polynomial-coefficient form, when every denominator is one.
    pub fn to_graded(&self) -> Option<GradedElement> {
        let mut comps = BTreeMap::new();
        for (n, c) in &self.comps {
            if !c.is_polynomial() {
                return None;
            }
            comps.insert(*n, c.numer().clone());
        }
        Some(Graded { comps })
    }
}

/// Graded coefficients of a single normal monomial `Y^i X^j`.
pub fn monomial_to_graded(m: Monomial) -> (i64, PolyH) {
    let (i, j) = (m.y as i64, m.x as i64);
    if i <= j {
        (j - i, PolyH::product_of_linears(0..i))
    } else {
        (j - i, PolyH::product_of_linears(i - j..i))
    }
}

pub fn to_graded(a: &WeylElement) -> GradedElement {
    Graded::from_components(a.terms().map(|(m, c)| {
        let (n, p) = monomial_to_graded(*m);
        (n, p.scale(c))
    }))
}

pub fn from_graded(g: &GradedElement) -> WeylElement {
    g.components()
        .map(|(n, alpha)| {
            let v = if n >= 0 {
                WeylElement::yx(0, n as u32)
            } else {
                WeylElement::yx((-n) as u32, 0)
            };
            &alpha.to_weyl() * &v
        })
        .sum()
}

/// Largest graded component `max(j - i)` over the support.
pub fn graded_degree(a: &WeylElement) -> Degree {
    a.support()
        .map(|m| m.x as i64 - m.y as i64)
        .max()
        .map_or(Degree::NegInf, Degree::Finite)
}

/// `-min(j - i)` over the support.
pub fn graded_degree_minus(a: &WeylElement) -> Degree {
    a.support()
        .map(|m| m.y as i64 - m.x as i64)
        .max()
        .map_or(Degree::NegInf, Degree::Finite)
}

/// Graded degrees attained by the nonzero elements of `elems`.
pub fn supp_monoid<'a, I: IntoIterator<Item = &'a WeylElement>>(elems: I) -> BTreeSet<i64> {
    elems
        .into_iter()
        .filter_map(|a| graded_degree(a).finite())
        .collect()
}

pub fn localized_mul(a: &LocalizedElement, b: &LocalizedElement) -> LocalizedElement {
    a.mul(b)
}

pub fn embed(a: &WeylElement) -> LocalizedElement {
    to_graded(a).localize()
}

/// Membership in `A1`: the element as a normal form when all reduced
/// denominators are one.
pub fn in_a1(a: &LocalizedElement) -> Option<WeylElement> {
    a.to_graded().map(|g| from_graded(&g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Monomial;

    fn h() -> PolyH {
        PolyH::var()
    }

    #[test]
    fn to_graded_examples() {
        let g = to_graded(&WeylElement::yx(2, 2));
        assert_eq!(g.get(0), Some(&PolyH::product_of_linears([0, 1])));
        let g = to_graded(&WeylElement::yx(1, 2));
        assert_eq!(g.get(1), Some(&h()));
        let g = to_graded(&WeylElement::x());
        assert_eq!(g.get(1), Some(&PolyH::one()));
        // Y^3 X: component -2, coefficient (H+2)
        let g = to_graded(&WeylElement::yx(3, 1));
        assert_eq!(g.get(-2), Some(&PolyH::linear(2)));
    }

    #[test]
    fn graded_degrees() {
        let xy = &WeylElement::x() + &WeylElement::y();
        assert_eq!(graded_degree(&xy), Degree::Finite(1));
        assert_eq!(graded_degree_minus(&xy), Degree::Finite(1));
        assert_eq!(graded_degree(&WeylElement::h().pow(3)), Degree::Finite(0));
        assert_eq!(graded_degree(&WeylElement::yx(1, 2)), Degree::Finite(1));
        assert_eq!(graded_degree(&WeylElement::zero()), Degree::NegInf);
    }

    #[test]
    fn supp_examples() {
        let hs = [WeylElement::one(), WeylElement::h(), WeylElement::h().pow(2)];
        assert_eq!(supp_monoid(&hs), BTreeSet::from([0]));
        let xs = [WeylElement::x(), WeylElement::x().pow(2)];
        assert_eq!(supp_monoid(&xs), BTreeSet::from([1, 2]));
    }

    #[test]
    fn twist_rule() {
        let x = LocalizedElement::component(1, RatH::from_poly(PolyH::one()));
        let hh = LocalizedElement::component(0, RatH::from_poly(h()));
        let got = localized_mul(&x, &hh);
        assert_eq!(got, LocalizedElement::component(1, RatH::from_poly(PolyH::linear(-1))));
    }

    #[test]
    fn example_four_square() {
        let alpha = RatH::new(h().mul(&PolyH::linear(-2)), PolyH::linear(-1));
        let w = LocalizedElement::component(1, alpha);
        assert!(in_a1(&w).is_none());
        let w2 = localized_mul(&w, &w);
        let expected = LocalizedElement::component(
            2,
            RatH::from_poly(h().mul(&PolyH::linear(-3))),
        );
        assert_eq!(w2, expected);
        assert!(in_a1(&w2).is_some());
        assert_eq!(in_a1(&LocalizedElement::zero()), Some(WeylElement::zero()));
    }

    #[test]
    fn embedding_matches_weyl_product() {
        let x2 = WeylElement::x().pow(2);
        let y2 = WeylElement::y().pow(2);
        assert_eq!(localized_mul(&embed(&x2), &embed(&y2)), embed(&(&x2 * &y2)));
    }

    #[test]
    fn poly_gcd_and_shift() {
        let p = PolyH::product_of_linears([0, -1, -2]);
        let q = PolyH::product_of_linears([-1, 5]);
        assert_eq!(p.gcd(&q), PolyH::linear(-1));
        assert_eq!(h().shift(3), PolyH::linear(-3));
        let r = RatH::new(p.clone(), q.clone());
        assert_eq!(r.denom(), &PolyH::linear(5));
        assert_eq!(r.numer(), &PolyH::product_of_linears([0, -2]));
    }

    #[test]
    fn round_trip_monomials() {
        for i in 0..5 {
            for j in 0..5 {
                let a = WeylElement::yx(i, j);
                assert_eq!(from_graded(&to_graded(&a)), a, "Y^{i} X^{j}");
            }
        }
        let _ = Monomial::ONE;
    }
}
