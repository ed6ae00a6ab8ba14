//! Membership in the subalgebra `K<x, y>` generated by an endomorphism pair,
//! and windowed pieces of that subalgebra.

use rayon::prelude::*;

use crate::element::WeylElement;
use crate::endo::{powers, EndoPair};
use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::newton::{weighted_degree, Weight};
use crate::scalar::Rat;
use crate::window::{column_matrix, Subspace, Window};

#[derive(Clone, Debug, PartialEq)]
pub struct Membership {
    pub member: bool,
    /// `(i, j, c)` with `a = sum c * y^i x^j` when `member` holds.
    pub witness: Vec<(u32, u32, Rat)>,
}

/// The products `y^i x^j` with `i v(y) + j v(x) <= bound`.
fn pbw_products(e: &EndoPair, w: Weight, bound: i64) -> Result<Vec<((u32, u32), WeylElement)>> {
    if !e.verified() {
        return Err(Error::Unverified);
    }
    let vy = weighted_degree(w, &e.y).finite().ok_or(Error::ZeroElement)?;
    let vx = weighted_degree(w, &e.x).finite().ok_or(Error::ZeroElement)?;
    if bound < 0 {
        return Ok(vec![]);
    }
    // [y, x] = 1 forces both degrees to be positive for a positive weight.
    let max_i = (bound / vy.max(1)) as u32;
    let max_j = (bound / vx.max(1)) as u32;
    let ypow = powers(&e.y, max_i);
    let xpow = powers(&e.x, max_j);
    let pairs: Vec<(u32, u32)> = (0..=max_i)
        .flat_map(|i| (0..=max_j).map(move |j| (i, j)))
        .filter(|&(i, j)| i as i64 * vy + j as i64 * vx <= bound)
        .collect();
    Ok(pairs
        .into_par_iter()
        .map(|(i, j)| ((i, j), &ypow[i as usize] * &xpow[j as usize]))
        .collect())
}

/// Decides `a in K<x, y>` by solving for a combination of the `y^i x^j` of
/// total degree at most `deg(a) + slack`. The `y^i x^j` are linearly
/// independent, so a witness is unique.
pub fn subalgebra_membership(e: &EndoPair, a: &WeylElement, slack: i64) -> Result<Membership> {
    let w = Weight::STANDARD;
    let Some(d) = weighted_degree(w, a).finite() else {
        return Ok(Membership {
            member: true,
            witness: vec![],
        });
    };
    let prods = pbw_products(e, w, d + slack)?;
    let mut cols: Vec<WeylElement> = prods.iter().map(|(_, p)| p.clone()).collect();
    cols.push(a.clone());
    let (m, _) = column_matrix(&cols);
    let n = prods.len();
    let lhs = crate::linalg::RatMatrix::from_columns(m.rows(), (0..n).map(|k| m.column(k)).collect());
    let rhs = m.column(n);
    Ok(match solve(&lhs, &rhs) {
        Some(sol) => Membership {
            member: true,
            witness: prods
                .iter()
                .zip(sol)
                .filter(|(_, c)| !num_traits::Zero::is_zero(c))
                .map(|(((i, j), _), c)| (*i, *j, c))
                .collect(),
        },
        None => Membership {
            member: false,
            witness: vec![],
        },
    })
}

/// `K<x, y>` restricted to `win`, generated by the `y^i x^j` of weighted
/// degree up to `win.cap + slack`.
pub fn a1_prime_window(e: &EndoPair, win: &Window, slack: i64) -> Result<Subspace> {
    let prods: Vec<WeylElement> = pbw_products(e, win.weight, win.cap + slack)?
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    Ok(Subspace::span(&prods).restrict_to_window(win))
}

/// `K[x] + K[y]` restricted to `win`, from powers up to `win.cap + slack`.
pub fn kx_plus_ky_window(e: &EndoPair, win: &Window, slack: i64) -> Result<Subspace> {
    let prods: Vec<WeylElement> = pbw_products(e, win.weight, win.cap + slack)?
        .into_iter()
        .filter(|((i, j), _)| *i == 0 || *j == 0)
        .map(|(_, p)| p)
        .collect();
    Ok(Subspace::span(&prods).restrict_to_window(win))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::build_endo;
    use crate::parse::parse;

    fn triangular() -> EndoPair {
        build_endo(parse("X").unwrap(), parse("Y + X^2").unwrap()).unwrap()
    }

    #[test]
    fn y_is_generated() {
        let e = triangular();
        let m = subalgebra_membership(&e, &WeylElement::y(), 1).unwrap();
        assert!(m.member);
        let rebuilt: WeylElement = m
            .witness
            .iter()
            .map(|(i, j, c)| (&e.y.pow(*i) * &e.x.pow(*j)).scale(c))
            .sum();
        assert_eq!(rebuilt, WeylElement::y());
    }

    #[test]
    fn identity_windows_are_full() {
        let e = EndoPair::identity();
        let win = Window::standard(3);
        assert_eq!(a1_prime_window(&e, &win, 0).unwrap(), Subspace::of_window(&win));
        assert_eq!(kx_plus_ky_window(&e, &win, 0).unwrap().dim(), 7);
    }

    #[test]
    fn triangular_window_is_full() {
        let e = triangular();
        let win = Window::standard(3);
        assert_eq!(a1_prime_window(&e, &win, 4).unwrap(), Subspace::of_window(&win));
    }
}
