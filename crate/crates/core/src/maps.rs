//! Linear maps on the Weyl algebra built from inner derivations, and their
//! drops `v(m(a)) - v(a)`.

use std::fmt;

use num_traits::Zero;

use crate::degree::Degree;
use crate::element::WeylElement;
use crate::endo::EndoPair;
use crate::error::{Error, Result};
use crate::newton::{weighted_degree, Weight};
use crate::scalar::Rat;

#[derive(Clone, Debug, PartialEq)]
pub enum MapSpec {
    /// `b -> [a, b]`.
    Ad(WeylElement),
    /// `b -> [y, b] x`.
    DyX(EndoPair),
    /// `b -> [x, b] y`.
    DxY(EndoPair),
    /// `b -> [x, [y, b]]`.
    DeltaXY(EndoPair),
    /// Function composition: the last map is applied first.
    Compose(Vec<MapSpec>),
    /// `b -> m(b) - lambda b`.
    MinusScalar(Box<MapSpec>, Rat),
}

impl MapSpec {
    pub fn ad(a: WeylElement) -> Self {
        MapSpec::Ad(a)
    }

    pub fn minus_scalar(self, lambda: Rat) -> Self {
        MapSpec::MinusScalar(Box::new(self), lambda)
    }

    /// `self` composed with itself `k` times.
    pub fn power(&self, k: usize) -> Self {
        MapSpec::Compose(vec![self.clone(); k])
    }

    pub fn eval(&self, a: &WeylElement) -> WeylElement {
        match self {
            MapSpec::Ad(c) => c.commutator(a),
            MapSpec::DyX(e) => &e.y.commutator(a) * &e.x,
            MapSpec::DxY(e) => &e.x.commutator(a) * &e.y,
            MapSpec::DeltaXY(e) => e.x.commutator(&e.y.commutator(a)),
            MapSpec::Compose(ms) => ms.iter().rev().fold(a.clone(), |acc, m| {
                if acc.is_zero() {
                    acc
                } else {
                    m.eval(&acc)
                }
            }),
            MapSpec::MinusScalar(m, lambda) => &m.eval(a) - &a.scale(lambda),
        }
    }

    /// Upper bound on `v_w(m(a)) - v_w(a)` for positive `w`, from
    /// `v([a,b]) <= v(a) + v(b) - rho - eta`. `-inf` means the zero map.
    pub fn degree_shift(&self, w: Weight) -> Degree {
        let ad_shift = |c: &WeylElement| {
            if c.is_scalar() {
                Degree::NegInf
            } else {
                weighted_degree(w, c).minus(w.sum())
            }
        };
        match self {
            MapSpec::Ad(c) => ad_shift(c),
            MapSpec::DyX(e) | MapSpec::DxY(e) => {
                let (inner, outer) = match self {
                    MapSpec::DyX(_) => (&e.y, &e.x),
                    _ => (&e.x, &e.y),
                };
                ad_shift(inner).plus(weighted_degree(w, outer))
            }
            MapSpec::DeltaXY(e) => ad_shift(&e.x).plus(ad_shift(&e.y)),
            MapSpec::Compose(ms) => ms
                .iter()
                .fold(Degree::Finite(0), |acc, m| acc.plus(m.degree_shift(w))),
            MapSpec::MinusScalar(m, lambda) => {
                let s = m.degree_shift(w);
                if lambda.is_zero() {
                    s
                } else {
                    s.max(Degree::Finite(0))
                }
            }
        }
    }
}

impl fmt::Display for MapSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapSpec::Ad(a) => write!(f, "ad({a})"),
            MapSpec::DyX(e) => write!(f, "[{}, .]*({})", e.y, e.x),
            MapSpec::DxY(e) => write!(f, "[{}, .]*({})", e.x, e.y),
            MapSpec::DeltaXY(e) => write!(f, "ad({})ad({})", e.x, e.y),
            MapSpec::Compose(ms) => {
                let parts: Vec<String> = ms.iter().map(|m| format!("({m})")).collect();
                f.write_str(&parts.join("o"))
            }
            MapSpec::MinusScalar(m, l) => write!(f, "({m}) - {l}"),
        }
    }
}

pub fn eval_map(m: &MapSpec, a: &WeylElement) -> WeylElement {
    m.eval(a)
}

/// `v_w(m(a)) - v_w(a)`; `-inf` when `m(a) = 0`.
pub fn drop(m: &MapSpec, w: Weight, a: &WeylElement) -> Result<Degree> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let va = weighted_degree(w, a).finite().expect("nonzero");
    Ok(weighted_degree(w, &m.eval(a)).minus(va))
}

#[derive(Clone, Debug, PartialEq)]
pub struct DropSample {
    pub element: WeylElement,
    pub degree: Degree,
    pub image_degree: Degree,
    pub drop: Degree,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DropReport {
    pub map: MapSpec,
    pub weight: Weight,
    pub samples: Vec<DropSample>,
    /// All finite drops coincide.
    pub constant: bool,
    pub drop_value: Option<i64>,
}

pub fn drop_profile(m: &MapSpec, w: Weight, samples: &[WeylElement]) -> Result<DropReport> {
    let mut out = Vec::with_capacity(samples.len());
    for a in samples {
        let image = m.eval(a);
        let degree = weighted_degree(w, a);
        let image_degree = weighted_degree(w, &image);
        let drop = match degree.finite() {
            Some(d) => image_degree.minus(d),
            None => return Err(Error::ZeroElement),
        };
        out.push(DropSample {
            element: a.clone(),
            degree,
            image_degree,
            drop,
        });
    }
    let finite: Vec<i64> = out.iter().filter_map(|s| s.drop.finite()).collect();
    let constant = finite.windows(2).all(|p| p[0] == p[1]);
    let drop_value = if constant { finite.first().copied() } else { None };
    Ok(DropReport {
        map: m.clone(),
        weight: w,
        samples: out,
        constant,
        drop_value,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nilpotency {
    /// Least `n` with `m^n(a) = 0`.
    Degree(usize),
    Exceeded,
}

pub fn nilpotency_degree(m: &MapSpec, a: &WeylElement, max_iter: usize) -> Nilpotency {
    let mut cur = a.clone();
    for n in 0..=max_iter {
        if cur.is_zero() {
            return Nilpotency::Degree(n);
        }
        if n < max_iter {
            cur = m.eval(&cur);
        }
    }
    Nilpotency::Exceeded
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::build_endo;
    use crate::scalar::rat;

    fn std_endo() -> EndoPair {
        EndoPair::identity()
    }

    #[test]
    fn eval_examples() {
        let e = std_endo();
        let xy = &WeylElement::x() * &WeylElement::y();
        assert_eq!(MapSpec::DeltaXY(e.clone()).eval(&xy), WeylElement::from_int(-1));
        let y2x2 = WeylElement::yx(2, 2);
        assert_eq!(MapSpec::DyX(e).eval(&y2x2), y2x2.scale(&rat(2)));
        assert!(MapSpec::Ad(WeylElement::h()).eval(&WeylElement::one()).is_zero());
        assert_eq!(
            MapSpec::Ad(WeylElement::x()).eval(&WeylElement::y().pow(3)),
            WeylElement::y().pow(2).scale(&rat(-3))
        );
        assert_eq!(
            MapSpec::Ad(WeylElement::h()).eval(&WeylElement::x().pow(2)),
            WeylElement::x().pow(2).scale(&rat(2))
        );
        assert!(MapSpec::Ad(WeylElement::one()).eval(&WeylElement::yx(3, 2)).is_zero());
    }

    #[test]
    fn delta_is_composition_of_inner_derivations() {
        let e = build_endo(WeylElement::x(), &WeylElement::y() + &WeylElement::x().pow(2)).unwrap();
        let comp = MapSpec::Compose(vec![MapSpec::Ad(e.x.clone()), MapSpec::Ad(e.y.clone())]);
        let a = &WeylElement::yx(2, 3) + &WeylElement::yx(1, 0);
        assert_eq!(MapSpec::DeltaXY(e).eval(&a), comp.eval(&a));
    }

    #[test]
    fn drop_examples() {
        let d = MapSpec::DeltaXY(std_endo());
        let h = WeylElement::h();
        assert_eq!(drop(&d, Weight::STANDARD, &h).unwrap(), Degree::Finite(-2));
        assert_eq!(drop(&d, Weight::STANDARD, &h.pow(2)).unwrap(), Degree::Finite(-2));
        let dyx = MapSpec::DyX(std_endo());
        assert_eq!(drop(&dyx, Weight::STANDARD, &h.pow(2)).unwrap(), Degree::Finite(0));
        assert_eq!(
            drop(&d, Weight::STANDARD, &WeylElement::one()).unwrap(),
            Degree::NegInf
        );
        assert!(drop(&d, Weight::STANDARD, &WeylElement::zero()).is_err());
    }

    #[test]
    fn drop_profiles() {
        let h = WeylElement::h();
        let hs = [h.clone(), h.pow(2), h.pow(3)];
        let r = drop_profile(&MapSpec::DeltaXY(std_endo()), Weight::STANDARD, &hs).unwrap();
        assert!(r.constant);
        assert_eq!(r.drop_value, Some(-2));
        let r = drop_profile(&MapSpec::DyX(std_endo()), Weight::STANDARD, &hs).unwrap();
        assert_eq!(r.drop_value, Some(0));
        let r = drop_profile(&MapSpec::Ad(WeylElement::x()), Weight::STANDARD, &[WeylElement::y()])
            .unwrap();
        assert_eq!(r.drop_value, Some(-1));
        assert_eq!(r.samples.len(), 1);
    }

    #[test]
    fn nilpotency_examples() {
        let adx = MapSpec::Ad(WeylElement::x());
        assert_eq!(nilpotency_degree(&adx, &WeylElement::y().pow(3), 10), Nilpotency::Degree(4));
        assert_eq!(nilpotency_degree(&adx, &WeylElement::x().pow(5), 10), Nilpotency::Degree(1));
        assert_eq!(
            nilpotency_degree(&MapSpec::Ad(WeylElement::h()), &WeylElement::x(), 10),
            Nilpotency::Exceeded
        );
        assert_eq!(nilpotency_degree(&adx, &WeylElement::zero(), 0), Nilpotency::Degree(0));
    }

    #[test]
    fn shifts() {
        let w = Weight::STANDARD;
        assert_eq!(MapSpec::Ad(WeylElement::h()).degree_shift(w), Degree::Finite(0));
        assert_eq!(MapSpec::Ad(WeylElement::x()).degree_shift(w), Degree::Finite(-1));
        assert_eq!(MapSpec::Ad(WeylElement::one()).degree_shift(w), Degree::NegInf);
        assert_eq!(MapSpec::DeltaXY(std_endo()).degree_shift(w), Degree::Finite(-2));
        assert_eq!(MapSpec::DyX(std_endo()).degree_shift(w), Degree::Finite(0));
    }
}
