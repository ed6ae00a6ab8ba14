//! Filtration windows `{a : v_(rho,eta)(a) <= cap}` and finite-dimensional
//! subspaces of the Weyl algebra.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::element::{Monomial, WeylElement};
use crate::error::{Error, Result};
use crate::linalg::{echelon_basis, nullspace, RatMatrix};
use crate::newton::Weight;
use crate::scalar::Rat;

/// The span of `Y^i X^j` with `rho*i + eta*j <= cap`, with its monomials
/// ordered by `(rho*i + eta*j, i)`. A negative cap gives the zero space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub weight: Weight,
    pub cap: i64,
    #[serde(skip)]
    basis: Vec<Monomial>,
    #[serde(skip)]
    index: HashMap<Monomial, usize>,
}

impl Window {
    pub fn new(weight: Weight, cap: i64) -> Result<Self> {
        weight.require_positive()?;
        let mut basis = Vec::new();
        if cap >= 0 {
            for i in 0..=(cap / weight.rho) {
                for j in 0..=((cap - weight.rho * i) / weight.eta) {
                    basis.push(Monomial::new(i as u32, j as u32));
                }
            }
        }
        basis.sort_by_key(|m| (weight.of(*m), m.y));
        let index = basis.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        Ok(Window {
            weight,
            cap,
            basis,
            index,
        })
    }

    pub fn standard(cap: i64) -> Self {
        Self::new(Weight::STANDARD, cap).expect("positive weight")
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn basis_elements(&self) -> Vec<WeylElement> {
        self.basis.iter().map(|m| WeylElement::yx(m.y, m.x)).collect()
    }

    pub fn contains_monomial(&self, m: Monomial) -> bool {
        self.index.contains_key(&m)
    }

    pub fn contains(&self, a: &WeylElement) -> bool {
        a.support().all(|m| self.contains_monomial(m))
    }

    pub fn position(&self, m: Monomial) -> Option<usize> {
        self.index.get(&m).copied()
    }

    /// Coordinates in the window basis; `source` is only used for the
    /// error report.
    pub fn coordinates(&self, a: &WeylElement, source: &WeylElement) -> Result<Vec<Rat>> {
        let mut v = vec![Rat::zero(); self.dim()];
        for (m, c) in a.terms() {
            match self.position(*m) {
                Some(k) => v[k] = c.clone(),
                None => {
                    return Err(Error::WindowEscape {
                        source_elem: source.clone(),
                        y: m.y,
                        x: m.x,
                        cap: self.cap,
                    })
                }
            }
        }
        Ok(v)
    }

    pub fn element(&self, coords: &[Rat]) -> WeylElement {
        assert_eq!(coords.len(), self.dim());
        WeylElement::from_terms(
            self.basis
                .iter()
                .zip(coords)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (*m, c.clone())),
        )
    }
}

/// Monomials occurring in any of the elements, in canonical order.
pub(crate) fn joint_support<'a, I: IntoIterator<Item = &'a WeylElement>>(elems: I) -> Vec<Monomial> {
    let set: BTreeSet<Monomial> = elems.into_iter().flat_map(|e| e.support()).collect();
    set.into_iter().collect()
}

pub(crate) fn coords_in(a: &WeylElement, index: &HashMap<Monomial, usize>, n: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    for (m, c) in a.terms() {
        v[index[m]] = c.clone();
    }
    v
}

/// Column matrix of `elems` over their joint support.
pub(crate) fn column_matrix(elems: &[WeylElement]) -> (RatMatrix, Vec<Monomial>) {
    let support = joint_support(elems);
    let index: HashMap<Monomial, usize> =
        support.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    let cols = elems
        .iter()
        .map(|e| coords_in(e, &index, support.len()))
        .collect();
    (RatMatrix::from_columns(support.len(), cols), support)
}

fn combine(elems: &[WeylElement], coeffs: &[Rat]) -> WeylElement {
    elems
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| e.scale(c))
        .sum()
}

/// A finite-dimensional subspace of the Weyl algebra, held in a canonical
/// reduced echelon basis over the monomial order, so equal subspaces have
/// equal bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: Vec<WeylElement>,
}

impl Subspace {
    pub fn zero() -> Self {
        Subspace { basis: vec![] }
    }

    pub fn span(gens: &[WeylElement]) -> Self {
        let support = joint_support(gens);
        let index: HashMap<Monomial, usize> =
            support.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        let rows: Vec<Vec<Rat>> = gens
            .iter()
            .map(|g| coords_in(g, &index, support.len()))
            .collect();
        let basis = echelon_basis(&rows, support.len())
            .into_iter()
            .map(|row| {
                WeylElement::from_terms(
                    support
                        .iter()
                        .zip(row)
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(m, c)| (*m, c)),
                )
            })
            .collect();
        Subspace { basis }
    }

    pub fn of_window(win: &Window) -> Self {
        Self::span(&win.basis_elements())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[WeylElement] {
        &self.basis
    }

    pub fn contains(&self, a: &WeylElement) -> bool {
        if a.is_zero() {
            return true;
        }
        let mut gens = self.basis.clone();
        gens.push(a.clone());
        Subspace::span(&gens).dim() == self.dim()
    }

    pub fn contains_all(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero();
        }
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|b| -b));
        let (m, _) = column_matrix(&cols);
        let p = self.dim();
        let gens: Vec<WeylElement> = nullspace(&m)
            .iter()
            .map(|v| combine(&self.basis, &v[..p]))
            .collect();
        Subspace::span(&gens)
    }

    /// The elements of the subspace that lie in the window.
    pub fn restrict_to_window(&self, win: &Window) -> Subspace {
        if self.dim() == 0 {
            return Subspace::zero();
        }
        let (m, support) = column_matrix(&self.basis);
        let outside: Vec<usize> = support
            .iter()
            .enumerate()
            .filter(|(_, mono)| !win.contains_monomial(**mono))
            .map(|(k, _)| k)
            .collect();
        if outside.is_empty() {
            return self.clone();
        }
        let rows: Vec<Vec<Rat>> = outside.iter().map(|&k| m.row(k).to_vec()).collect();
        let gens: Vec<WeylElement> = nullspace(&RatMatrix::from_rows(rows))
            .iter()
            .map(|v| combine(&self.basis, v))
            .collect();
        Subspace::span(&gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_order_and_size() {
        let w = Window::standard(2);
        let got: Vec<(u32, u32)> = w.monomials().iter().map(|m| (m.y, m.x)).collect();
        assert_eq!(got, vec![(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]);
        assert_eq!(Window::standard(-1).dim(), 0);
        let w23 = Window::new(Weight::new(2, 3), 6).unwrap();
        assert!(w23.contains_monomial(Monomial::new(3, 0)));
        assert!(w23.contains_monomial(Monomial::new(0, 2)));
        assert!(!w23.contains_monomial(Monomial::new(1, 2)));
        assert!(Window::new(Weight::new(0, 1), 3).is_err());
    }

    #[test]
    fn escape_is_reported() {
        let w = Window::standard(1);
        let h = WeylElement::h();
        assert!(matches!(w.coordinates(&h, &h), Err(Error::WindowEscape { .. })));
    }

    #[test]
    fn subspace_intersections() {
        let x = WeylElement::x();
        let y = WeylElement::y();
        let a = Subspace::span(&[x.clone(), y.clone()]);
        let b = Subspace::span(&[&x + &y, WeylElement::h()]);
        let i = a.intersect(&b);
        assert_eq!(i, Subspace::span(&[&x + &y]));
        // y - x^2 restricted to degree <= 1 leaves only Y
        let s = Subspace::span(&[&y + &x.pow(2), x.pow(2)]);
        let r = s.restrict_to_window(&Window::standard(1));
        assert_eq!(r, Subspace::span(&[y]));
    }
}
