//! Weighted degrees `v_(rho, eta)(sum a_ij Y^i X^j) = max(rho*i + eta*j)`,
//! Newton polygons and generic weights.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::degree::Degree;
use crate::element::{Monomial, WeylElement};
use crate::error::{Error, Result};

/// Weight `rho` on `Y` and `eta` on `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub rho: i64,
    pub eta: i64,
}

impl Weight {
    pub const STANDARD: Weight = Weight { rho: 1, eta: 1 };

    pub fn new(rho: i64, eta: i64) -> Self {
        Weight { rho, eta }
    }

    pub fn is_positive(self) -> bool {
        self.rho > 0 && self.eta > 0
    }

    pub fn require_positive(self) -> Result<()> {
        if self.is_positive() {
            Ok(())
        } else {
            Err(Error::NonPositiveWeight {
                rho: self.rho,
                eta: self.eta,
            })
        }
    }

    pub fn of(self, m: Monomial) -> i64 {
        self.rho * m.y as i64 + self.eta * m.x as i64
    }

    /// `rho + eta`, the amount a commutator lowers the degree by.
    pub fn sum(self) -> i64 {
        self.rho + self.eta
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.rho, self.eta)
    }
}

/// Accepts arbitrary integer weights; callers enforce their own sign
/// conditions.
pub fn weighted_degree(w: Weight, a: &WeylElement) -> Degree {
    a.support()
        .map(|m| w.of(m))
        .max()
        .map_or(Degree::NegInf, Degree::Finite)
}

/// Support points and the convex hull vertices (counterclockwise, starting
/// from the lexicographically smallest point, collinear points dropped).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    pub support: Vec<(i64, i64)>,
    pub vertices: Vec<(i64, i64)>,
}

impl Polygon {
    /// Hull edges as vertex pairs (empty for a single point).
    pub fn edges(&self) -> Vec<((i64, i64), (i64, i64))> {
        let n = self.vertices.len();
        match n {
            0 | 1 => vec![],
            2 => vec![(self.vertices[0], self.vertices[1])],
            _ => (0..n)
                .map(|k| (self.vertices[k], self.vertices[(k + 1) % n]))
                .collect(),
        }
    }
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Andrew's monotone chain over the exponent support `(i, j)`.
pub fn newton_polygon(a: &WeylElement) -> Result<Polygon> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut pts: Vec<(i64, i64)> = a.support().map(|m| (m.y as i64, m.x as i64)).collect();
    pts.sort_unstable();
    pts.dedup();
    let support = pts.clone();
    if pts.len() < 3 {
        return Ok(Polygon {
            vertices: pts,
            support,
        });
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    Ok(Polygon {
        vertices: lower,
        support,
    })
}

fn maximizers(w: Weight, a: &WeylElement) -> Vec<Monomial> {
    let Some(top) = weighted_degree(w, a).finite() else {
        return vec![];
    };
    a.support().filter(|m| w.of(*m) == top).collect()
}

/// Exactly one support point attains the weighted degree.
pub fn is_generic(w: Weight, a: &WeylElement) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    w.require_positive()?;
    Ok(maximizers(w, a).len() == 1)
}

/// Scans `rho + eta` ascending, then `rho` ascending, with both entries in
/// `1..=bound`.
pub fn find_generic_weight(a: &WeylElement, bound: i64) -> Result<Weight> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    for s in 2..=2 * bound {
        for rho in 1..=bound {
            let eta = s - rho;
            if eta < 1 || eta > bound {
                continue;
            }
            let w = Weight::new(rho, eta);
            if is_generic(w, a)? {
                return Ok(w);
            }
        }
    }
    Err(Error::NoGenericWeight { bound })
}

/// The unique monomial term of `a` attaining `v_w(a)`.
pub fn leading_term(w: Weight, a: &WeylElement) -> Result<WeylElement> {
    if !is_generic(w, a)? {
        return Err(Error::NotGeneric {
            rho: w.rho,
            eta: w.eta,
        });
    }
    let m = maximizers(w, a)[0];
    Ok(WeylElement::monomial(m, a.coeff(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn yx_plus_x3() -> WeylElement {
        &WeylElement::h() + &WeylElement::x().pow(3)
    }

    #[test]
    fn weighted_degree_examples() {
        assert_eq!(weighted_degree(Weight::STANDARD, &yx_plus_x3()), Degree::Finite(3));
        assert_eq!(
            weighted_degree(Weight::STANDARD, &WeylElement::h().pow(2)),
            Degree::Finite(4)
        );
        assert_eq!(
            weighted_degree(Weight::new(2, 3), &WeylElement::yx(2, 1)),
            Degree::Finite(7)
        );
        assert_eq!(weighted_degree(Weight::STANDARD, &WeylElement::zero()), Degree::NegInf);
    }

    #[test]
    fn polygon_examples() {
        let p = newton_polygon(&WeylElement::h()).unwrap();
        assert_eq!(p.vertices, vec![(1, 1)]);
        let p = newton_polygon(&yx_plus_x3()).unwrap();
        assert_eq!(p.vertices, vec![(0, 3), (1, 1)]);
        let a = &(&WeylElement::one() + &WeylElement::h()) + &WeylElement::yx(2, 2);
        let p = newton_polygon(&a).unwrap();
        assert_eq!(p.vertices, vec![(0, 0), (2, 2)]);
        assert_eq!(p.support.len(), 3);
        assert!(newton_polygon(&WeylElement::zero()).is_err());
    }

    #[test]
    fn polygon_triangle_is_counterclockwise() {
        let a = WeylElement::from_terms(
            [(0, 0), (2, 0), (0, 2), (1, 1), (1, 0)]
                .map(|(y, x)| (Monomial::new(y, x), rat(1))),
        );
        let p = newton_polygon(&a).unwrap();
        assert_eq!(p.vertices, vec![(0, 0), (2, 0), (0, 2)]);
        assert_eq!(p.edges().len(), 3);
    }

    #[test]
    fn genericity() {
        assert!(is_generic(Weight::STANDARD, &yx_plus_x3()).unwrap());
        let a = &WeylElement::h() + &WeylElement::y().pow(3);
        assert!(!is_generic(Weight::new(1, 2), &a).unwrap());
        assert!(is_generic(Weight::STANDARD, &WeylElement::x()).unwrap());
        assert!(is_generic(Weight::new(0, 1), &a).is_err());
        assert!(is_generic(Weight::STANDARD, &WeylElement::zero()).is_err());
    }

    #[test]
    fn generic_search() {
        assert_eq!(find_generic_weight(&yx_plus_x3(), 5).unwrap(), Weight::STANDARD);
        let a = &WeylElement::h() + &WeylElement::y().pow(3);
        assert_eq!(find_generic_weight(&a, 5).unwrap(), Weight::STANDARD);
        assert_eq!(find_generic_weight(&WeylElement::x(), 1).unwrap(), Weight::STANDARD);
        // Y + X has a tie at (1,1); (1,2) breaks it
        let b = &WeylElement::y() + &WeylElement::x();
        assert_eq!(find_generic_weight(&b, 2).unwrap(), Weight::new(1, 2));
        assert!(find_generic_weight(&b, 1).is_err());
    }

    #[test]
    fn leading_terms() {
        assert_eq!(
            leading_term(Weight::STANDARD, &yx_plus_x3()).unwrap(),
            WeylElement::x().pow(3)
        );
        let m = WeylElement::yx(2, 1).scale(&rat(5));
        assert_eq!(leading_term(Weight::STANDARD, &m).unwrap(), m);
        assert!(matches!(
            leading_term(Weight::new(2, 1), &yx_plus_x3()),
            Err(Error::NotGeneric { .. })
        ));
    }
}
