//! Windowed exact linear algebra for maps on the Weyl algebra: matrices
//! between windows, eigenspaces of inner derivations, centralizers,
//! nilpotent closures, chain bases and cokernel dimensions.

use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::degree::Degree;
use crate::element::{Monomial, WeylElement};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, solve, RatMatrix};
use crate::maps::MapSpec;
use crate::scalar::{ratio, Rat};
use crate::window::{column_matrix, coords_in, joint_support, Subspace, Window};

/// Matrix of `m` restricted to `src`, in the monomial basis of `tgt`.
pub fn map_matrix(m: &MapSpec, src: &Window, tgt: &Window) -> Result<RatMatrix> {
    let cols = src
        .basis_elements()
        .par_iter()
        .map(|b| tgt.coordinates(&m.eval(b), b))
        .collect::<Result<Vec<_>>>()?;
    Ok(RatMatrix::from_columns(tgt.dim(), cols))
}

/// Target window sized by the map's degree shift; empty for the zero map.
pub fn auto_target(m: &MapSpec, src: &Window) -> Window {
    let cap = match m.degree_shift(src.weight) {
        Degree::NegInf => -1,
        Degree::Finite(s) => src.cap + s,
    };
    Window::new(src.weight, cap).expect("source weight is positive")
}

/// Matrix of the inclusion `src -> tgt`.
fn inclusion(src: &Window, tgt: &Window) -> RatMatrix {
    let mut m = RatMatrix::zeros(tgt.dim(), src.dim());
    for (j, mono) in src.monomials().iter().enumerate() {
        let i = tgt.position(*mono).expect("source window inside target");
        m[(i, j)] = Rat::one();
    }
    m
}

/// `ad(a)` on `win` together with the inclusion, both into a target window
/// large enough for `ad(a) - lambda` with any `lambda`.
fn ad_pencil(a: &WeylElement, win: &Window) -> Result<(RatMatrix, RatMatrix)> {
    let ad = MapSpec::Ad(a.clone());
    let shift = ad.degree_shift(win.weight).finite().unwrap_or(0).max(0);
    let tgt = Window::new(win.weight, win.cap + shift)?;
    Ok((map_matrix(&ad, win, &tgt)?, inclusion(win, &tgt)))
}

fn kernel_elements(m: &RatMatrix, win: &Window) -> Vec<WeylElement> {
    nullspace(m).iter().map(|v| win.element(v)).collect()
}

/// Basis of `{u in win : [a, u] = lambda u}`, in reduced echelon form over
/// the window's monomial order.
pub fn eigenspace(a: &WeylElement, lambda: &Rat, win: &Window) -> Result<Vec<WeylElement>> {
    let (ad, inc) = ad_pencil(a, win)?;
    Ok(kernel_elements(&ad.sub_scaled(lambda, &inc), win))
}

/// Integers in `[-cap, cap]` and the non-integers `+-p/q` with `q <= 4`,
/// `1 <= p <= cap`, ascending.
pub fn default_candidates(cap: i64) -> Vec<Rat> {
    candidate_set(cap, cap, 4)
}

/// Integers in `[-int_bound, int_bound]` and non-integers `+-p/q` with
/// `2 <= q <= max_den`, `1 <= p <= num_bound`, ascending.
pub fn candidate_set(int_bound: i64, num_bound: i64, max_den: i64) -> Vec<Rat> {
    let mut set: BTreeSet<Rat> = (-int_bound..=int_bound).map(crate::scalar::rat).collect();
    for q in 2..=max_den {
        for p in 1..=num_bound {
            if p.gcd(&q) == 1 {
                set.insert(ratio(p, q));
                set.insert(ratio(-p, q));
            }
        }
    }
    set.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Eigenspace {
    pub lambda: Rat,
    pub basis: Vec<WeylElement>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigenReport {
    pub element: WeylElement,
    pub window: Window,
    pub candidates: Vec<Rat>,
    /// Nonempty eigenspaces, by ascending eigenvalue.
    pub found: Vec<Eigenspace>,
}

impl EigenReport {
    pub fn eigenvalues(&self) -> Vec<Rat> {
        self.found.iter().map(|e| e.lambda.clone()).collect()
    }
}

/// Solves each candidate eigenvalue independently; the merge order is by
/// ascending eigenvalue.
pub fn eigenvalue_scan(a: &WeylElement, win: &Window, candidates: &[Rat]) -> Result<EigenReport> {
    let (ad, inc) = ad_pencil(a, win)?;
    let mut sorted: Vec<Rat> = candidates.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut found: Vec<Eigenspace> = sorted
        .par_iter()
        .filter_map(|lambda| {
            let basis = kernel_elements(&ad.sub_scaled(lambda, &inc), win);
            (!basis.is_empty()).then(|| Eigenspace {
                lambda: lambda.clone(),
                basis,
            })
        })
        .collect();
    found.sort_by(|p, q| p.lambda.cmp(&q.lambda));
    Ok(EigenReport {
        element: a.clone(),
        window: win.clone(),
        candidates: sorted,
        found,
    })
}

pub fn centralizer_window(a: &WeylElement, win: &Window) -> Result<Vec<WeylElement>> {
    eigenspace(a, &Rat::zero(), win)
}

/// Basis of `{u in win : m^k(u) = 0 for some k <= max_iter}`, which is the
/// kernel of `m^max_iter` on the window.
pub fn nilpotent_closure_window(
    m: &MapSpec,
    win: &Window,
    max_iter: usize,
) -> Result<Vec<WeylElement>> {
    let p = m.power(max_iter);
    let images: Vec<WeylElement> = win.basis_elements().par_iter().map(|b| p.eval(b)).collect();
    let (mat, _) = column_matrix(&images);
    Ok(kernel_elements(&mat, win))
}

fn combine(elems: &[WeylElement], coeffs: &[Rat]) -> WeylElement {
    elems
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| e.scale(c))
        .sum()
}

fn lead(a: &WeylElement) -> Option<(Monomial, Rat)> {
    a.terms().next().map(|(m, c)| (*m, c.clone()))
}

/// A basis `e_0, e_1, ...` of `span(elems)` with `m(e_0) = 0` and
/// `m(e_i) = e_(i-1)`.
///
/// `e_0` is scaled to have leading coefficient one (so it is `1` when the
/// kernel is the scalars); each later `e_i` has zero coefficient on the
/// leading monomial of `e_0`.
pub fn build_chain_basis(m: &MapSpec, elems: &[WeylElement]) -> Result<Vec<WeylElement>> {
    let space = Subspace::span(elems);
    let n = space.dim();
    if n == 0 {
        return Err(Error::Chain("empty input".into()));
    }
    let basis = space.basis().to_vec();
    let images: Vec<WeylElement> = basis.iter().map(|b| m.eval(b)).collect();
    let (img_mat, _) = column_matrix(&images);
    let kernel = nullspace(&img_mat);
    if kernel.len() != 1 {
        return Err(Error::Chain(format!(
            "kernel has dimension {}, expected 1",
            kernel.len()
        )));
    }
    let e0 = combine(&basis, &kernel[0]);
    let (lead_mono, lead_coeff) = lead(&e0).expect("kernel vector is nonzero");
    let e0 = e0.scale(&(Rat::one() / lead_coeff));
    let mut chain = vec![e0.clone()];
    for i in 1..n {
        let prev = &chain[i - 1];
        let mut all = images.clone();
        all.push(prev.clone());
        let support = joint_support(&all);
        let index: HashMap<Monomial, usize> =
            support.iter().enumerate().map(|(k, mo)| (*mo, k)).collect();
        let cols = images
            .iter()
            .map(|e| coords_in(e, &index, support.len()))
            .collect();
        let mat = RatMatrix::from_columns(support.len(), cols);
        let rhs = coords_in(prev, &index, support.len());
        let Some(c) = solve(&mat, &rhs) else {
            return Err(Error::Chain(format!("m(e_{i}) = e_{} has no solution", i - 1)));
        };
        let ei = combine(&basis, &c);
        let ei = &ei - &e0.scale(&ei.coeff(lead_mono));
        chain.push(ei);
    }
    Ok(chain)
}

/// `dim(tgt) - rank(m restricted to src)`, requiring `m(src)` inside `tgt`.
pub fn coker_dim(m: &MapSpec, src: &Subspace, tgt: &Subspace) -> Result<usize> {
    let images: Vec<WeylElement> = src.basis().iter().map(|b| m.eval(b)).collect();
    for (b, img) in src.basis().iter().zip(&images) {
        if !tgt.contains(img) {
            return Err(Error::NotInTarget {
                source_elem: b.clone(),
                image: img.clone(),
            });
        }
    }
    Ok(tgt.dim() - Subspace::span(&images).dim())
}

/// Cokernel dimension of `m: src -> window(src.weight, tgt_cap)`.
pub fn coker_window_dim(m: &MapSpec, src: &Window, tgt_cap: i64) -> Result<usize> {
    let tgt = Window::new(src.weight, tgt_cap)?;
    let mat = map_matrix(m, src, &tgt)?;
    Ok(tgt.dim() - mat.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::EndoPair;
    use crate::scalar::rat;

    #[test]
    fn matrix_examples() {
        let w = Window::standard(2);
        let m = map_matrix(&MapSpec::Ad(WeylElement::h()), &w, &w).unwrap();
        // [H, YX] = 0: the YX column vanishes
        let col = w.position(Monomial::new(1, 1)).unwrap();
        assert!(m.column(col).iter().all(|c| c.is_zero()));
        let m = map_matrix(&MapSpec::Ad(WeylElement::x()), &w, &w).unwrap();
        for i in 0..w.dim() {
            for j in 0..w.dim() {
                if !m[(i, j)].is_zero() {
                    let di = w.weight.of(w.monomials()[i]);
                    let dj = w.weight.of(w.monomials()[j]);
                    assert!(di < dj);
                }
            }
        }
        let zero = MapSpec::Compose(vec![MapSpec::Ad(WeylElement::one())]);
        assert!(map_matrix(&zero, &w, &w).unwrap().is_zero());
        let small = Window::standard(1);
        assert!(map_matrix(&MapSpec::Ad(WeylElement::yx(0, 3)), &w, &small).is_err());
    }

    #[test]
    fn eigenspaces_of_h() {
        let w = Window::standard(4);
        let h = WeylElement::h();
        assert_eq!(
            eigenspace(&h, &rat(1), &w).unwrap(),
            vec![WeylElement::x(), WeylElement::yx(1, 2)]
        );
        assert_eq!(
            eigenspace(&h, &Rat::zero(), &w).unwrap(),
            vec![WeylElement::one(), WeylElement::h(), WeylElement::yx(2, 2)]
        );
        assert!(eigenspace(&h, &ratio(1, 2), &w).unwrap().is_empty());
    }

    #[test]
    fn scans() {
        let w = Window::standard(3);
        let mut cands: Vec<Rat> = (-3..=3).map(rat).collect();
        cands.extend([ratio(1, 2), ratio(-1, 2), ratio(1, 3), ratio(-1, 3)]);
        let r = eigenvalue_scan(&WeylElement::h(), &w, &cands).unwrap();
        assert_eq!(r.eigenvalues(), (-3..=3).map(rat).collect::<Vec<_>>());
        let cands: Vec<Rat> = (-2..=2).map(rat).collect();
        let r = eigenvalue_scan(&WeylElement::x(), &w, &cands).unwrap();
        assert_eq!(r.eigenvalues(), vec![rat(0)]);
        let r = eigenvalue_scan(&WeylElement::one(), &w, &cands).unwrap();
        assert_eq!(r.eigenvalues(), vec![rat(0)]);
        assert_eq!(r.found[0].basis.len(), w.dim());
    }

    #[test]
    fn candidate_defaults() {
        let c = default_candidates(2);
        assert!(c.contains(&ratio(-2, 3)));
        assert!(c.contains(&ratio(1, 4)));
        assert!(!c.contains(&ratio(3, 4)));
        assert!(c.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn centralizers() {
        let c = centralizer_window(&WeylElement::h(), &Window::standard(10)).unwrap();
        assert_eq!(c.len(), 6);
        let c = centralizer_window(&WeylElement::x(), &Window::standard(6)).unwrap();
        assert_eq!(c, (0..=6).map(|k| WeylElement::x().pow(k)).collect::<Vec<_>>());
        let w = Window::standard(2);
        assert_eq!(centralizer_window(&WeylElement::one(), &w).unwrap().len(), w.dim());
    }

    #[test]
    fn nilpotent_closure_of_standard_maps() {
        let w = Window::standard(4);
        let n = nilpotent_closure_window(&MapSpec::Ad(WeylElement::x()), &w, 8).unwrap();
        assert_eq!(n.len(), w.dim());
        let w3 = Window::standard(3);
        let m = MapSpec::Compose(vec![MapSpec::Ad(WeylElement::x()), MapSpec::Ad(WeylElement::y())]);
        assert_eq!(nilpotent_closure_window(&m, &w3, 6).unwrap().len(), w3.dim());
        // ad(H) is not nilpotent on X; only 1 and H survive
        let n = nilpotent_closure_window(&MapSpec::Ad(WeylElement::h()), &w3, 6).unwrap();
        assert_eq!(n.len(), 2);
    }

    #[test]
    fn chain_for_delta() {
        let d = MapSpec::DeltaXY(EndoPair::identity());
        let h = WeylElement::h();
        let elems = [WeylElement::one(), h.clone(), h.pow(2), h.pow(3)];
        let chain = build_chain_basis(&d, &elems).unwrap();
        assert_eq!(chain[0], WeylElement::one());
        assert_eq!(chain[1], -&h);
        assert_eq!(chain[2], (&h.pow(2) + &h).scale(&ratio(1, 4)));
        let e3 = (&(&h * &(&h + &WeylElement::one())) * &(&h + &WeylElement::from_int(2)))
            .scale(&ratio(-1, 36));
        assert_eq!(chain[3], e3);
        assert!(build_chain_basis(&d, &[]).is_err());
        // kernel of dimension two
        assert!(build_chain_basis(&d, &[WeylElement::one(), WeylElement::x()]).is_err());
    }

    #[test]
    fn cokernels() {
        let d = MapSpec::DeltaXY(EndoPair::identity());
        let h = WeylElement::h();
        let src = Subspace::span(&(0..=3).map(|k| h.pow(k)).collect::<Vec<_>>());
        let tgt = Subspace::span(&(0..=2).map(|k| h.pow(k)).collect::<Vec<_>>());
        assert_eq!(coker_dim(&d, &src, &tgt).unwrap(), 0);
        let w = Window::standard(1);
        let zero = MapSpec::Ad(WeylElement::one());
        assert_eq!(coker_window_dim(&zero, &w, 1).unwrap(), 3);
        let w2 = Window::standard(2);
        assert_eq!(coker_window_dim(&MapSpec::Ad(h.clone()), &w2, 2).unwrap(), 2);
        assert!(coker_dim(&d, &tgt, &Subspace::zero()).is_err());
    }
}
