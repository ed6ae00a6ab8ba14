//! Executable checks of structural facts about a pair `(x, y)` with
//! `[y, x] = 1`, run on finite windows, and the configurable suite that
//! bundles them.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::element::{Monomial, WeylElement};
use crate::endo::{apply_endo, powers, EndoPair};
use crate::error::Result;
use crate::graded::{
    embed, in_a1, localized_mul, supp_monoid, LocalizedElement, PolyH, RatH,
};
use crate::maps::{drop, MapSpec};
use crate::membership::{a1_prime_window, kx_plus_ky_window, subalgebra_membership};
use crate::newton::{find_generic_weight, weighted_degree, Weight};
use crate::recipe::{compile, EndoRecipe};
use crate::scalar::{factorial, is_integer, rat, Rat};
use crate::semigroup::semigroup_analyze;
use crate::spectral::{
    build_chain_basis, candidate_set, centralizer_window, coker_dim, eigenvalue_scan,
    nilpotent_closure_window,
};
use crate::window::{Subspace, Window};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endo: Option<String>,
    pub params: BTreeMap<String, String>,
    pub passed: bool,
    pub detail: String,
    /// A counterexample element when the check failed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckResult {
    fn new(name: &str, params: &[(&str, String)]) -> Self {
        CheckResult {
            name: name.into(),
            endo: None,
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            passed: true,
            detail: String::new(),
            witness: None,
        }
    }

    fn fail(mut self, detail: impl Into<String>, witness: &WeylElement) -> Self {
        self.passed = false;
        self.detail = detail.into();
        self.witness = Some(witness.to_string());
        self
    }

    fn ok(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    /// One line: `PASS name [endo] detail`.
    pub fn summary(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let endo = self.endo.as_deref().map(|e| format!(" [{e}]")).unwrap_or_default();
        let mut line = format!("{status} {}{endo}: {}", self.name, self.detail);
        if let Some(w) = &self.witness {
            line.push_str(&format!(" (witness {w})"));
        }
        line
    }
}

/// An element of one subspace missing from the other.
fn span_difference(a: &Subspace, b: &Subspace) -> Option<WeylElement> {
    a.basis()
        .iter()
        .find(|v| !b.contains(v))
        .or_else(|| b.basis().iter().find(|v| !a.contains(v)))
        .cloned()
}

fn std_degree(a: &WeylElement) -> i64 {
    weighted_degree(Weight::STANDARD, a).finite().unwrap_or(-1)
}

/// `y^i x^i / (i!)^2` with sign `(-1)^i`.
fn delta_chain_element(ypow: &[WeylElement], xpow: &[WeylElement], i: usize) -> WeylElement {
    let f = Rat::from_integer(factorial(i as u64));
    let sign = if i.is_multiple_of(2) { Rat::one() } else { -Rat::one() };
    (&ypow[i] * &xpow[i]).scale(&(sign / (&f * &f)))
}

/// Random element with at most `terms` monomials of total degree `<= deg`
/// and integer coefficients in `[-c, c]`.
pub fn random_element<R: Rng>(rng: &mut R, deg: u32, terms: usize, c: i64) -> WeylElement {
    let n = rng.gen_range(1..=terms);
    WeylElement::from_terms((0..n).map(|_| {
        let y = rng.gen_range(0..=deg);
        let x = rng.gen_range(0..=deg - y);
        let mut k = 0;
        while k == 0 {
            k = rng.gen_range(-c..=c);
        }
        (Monomial::new(y, x), rat(k))
    }))
}

/// `C(h) = K[h]` on the standard window of the given cap.
pub fn check_centralizer(e: &EndoPair, cap: i64) -> Result<CheckResult> {
    let r = CheckResult::new("centralizer", &[("cap", cap.to_string())]);
    let h = e.h();
    let win = Window::standard(cap);
    let found = Subspace::span(&centralizer_window(&h, &win)?);
    let vh = std_degree(&h);
    let expected: Vec<WeylElement> = (0..)
        .take_while(|k| k * vh <= cap)
        .map(|k| h.pow(k as u32))
        .collect();
    let expected = Subspace::span(&expected);
    Ok(match span_difference(&found, &expected) {
        None => r.ok(format!("dim {}", found.dim())),
        Some(w) => r.fail(
            format!("dim {} vs {} powers of h", found.dim(), expected.dim()),
            &w,
        ),
    })
}

/// The eigenvalues of `ad(h)` are integers and the eigenspace at `i` is
/// `K[h] v_i` with `v_i = x^i` for `i >= 0` and `y^(-i)` for `i < 0`.
pub fn check_eigenvalues(e: &EndoPair, cap: i64, candidates: &[Rat]) -> Result<CheckResult> {
    let r = CheckResult::new(
        "eigen",
        &[
            ("cap", cap.to_string()),
            ("candidates", candidates.len().to_string()),
        ],
    );
    let h = e.h();
    let win = Window::standard(cap);
    let report = eigenvalue_scan(&h, &win, candidates)?;
    let vh = std_degree(&h);
    let expected_for = |i: i64| -> Vec<WeylElement> {
        let v = if i >= 0 {
            e.x.pow(i as u32)
        } else {
            e.y.pow((-i) as u32)
        };
        let dv = std_degree(&v);
        (0..)
            .take_while(|k| dv + k * vh <= cap)
            .map(|k| &h.pow(k as u32) * &v)
            .collect()
    };
    let mut seen = BTreeSet::new();
    for space in &report.found {
        if !is_integer(&space.lambda) {
            return Ok(r.fail(format!("eigenvalue {} is not an integer", space.lambda), &space.basis[0]));
        }
        let i: i64 = space.lambda.to_integer().try_into().unwrap_or(i64::MAX);
        seen.insert(i);
        let expected = expected_for(i);
        let got = Subspace::span(&space.basis);
        if let Some(w) = span_difference(&got, &Subspace::span(&expected)) {
            return Ok(r.fail(
                format!("eigenspace at {i}: dim {} vs {}", got.dim(), expected.len()),
                &w,
            ));
        }
    }
    for c in candidates.iter().filter(|c| is_integer(c)) {
        let i: i64 = c.to_integer().try_into().unwrap_or(i64::MAX);
        let expected = expected_for(i);
        if !expected.is_empty() && !seen.contains(&i) {
            return Ok(r.fail(format!("eigenvalue {i} missed"), &expected[0]));
        }
    }
    let list: Vec<String> = report
        .found
        .iter()
        .map(|s| format!("{}:{}", s.lambda, s.basis.len()))
        .collect();
    Ok(r.ok(format!("eigenvalues {}", list.join(" "))))
}

/// `y^i x^i = h(h+1)...(h+i-1)`, `x^i y^i = (h-1)...(h-i)` and
/// `delta((-1)^i y^i x^i/(i!)^2) = (-1)^(i-1) y^(i-1) x^(i-1)/((i-1)!)^2`.
pub fn check_klein_basis(e: &EndoPair, imax: u32) -> Result<CheckResult> {
    let r = CheckResult::new("klein_basis", &[("imax", imax.to_string())]);
    let h = e.h();
    let ypow = powers(&e.y, imax);
    let xpow = powers(&e.x, imax);
    let delta = MapSpec::DeltaXY(e.clone());
    let mut rising = WeylElement::one();
    let mut falling = WeylElement::one();
    for i in 1..=imax as usize {
        rising = &rising * &(&h + &WeylElement::from_int(i as i64 - 1));
        falling = &falling * &(&h - &WeylElement::from_int(i as i64));
        let yx = &ypow[i] * &xpow[i];
        if yx != rising {
            return Ok(r.fail(format!("y^{i}x^{i} != h(h+1)..(h+{})", i - 1), &(&yx - &rising)));
        }
        let xy = &xpow[i] * &ypow[i];
        if xy != falling {
            return Ok(r.fail(format!("x^{i}y^{i} != (h-1)..(h-{i})"), &(&xy - &falling)));
        }
        let lhs = delta.eval(&delta_chain_element(&ypow, &xpow, i));
        let rhs = delta_chain_element(&ypow, &xpow, i - 1);
        if lhs != rhs {
            return Ok(r.fail(format!("delta chain breaks at i = {i}"), &(&lhs - &rhs)));
        }
    }
    Ok(r.ok(format!("i <= {imax}")))
}

fn localized_h_inverse(shift: i64) -> LocalizedElement {
    LocalizedElement::component(0, RatH::new(PolyH::one(), PolyH::linear(shift)))
}

/// Product rules for `d = [y, .]x` and `d' = [x, .]y` in their
/// denominator-free form on random pairs; for the identity pair also the
/// localized form with `h^-1` and `(h-1)^-1`.
pub fn check_product_rules(e: &EndoPair, samples: usize, seed: u64) -> Result<CheckResult> {
    let r = CheckResult::new(
        "product_rules",
        &[("samples", samples.to_string()), ("seed", seed.to_string())],
    );
    let d = MapSpec::DyX(e.clone());
    let dp = MapSpec::DxY(e.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(WeylElement, WeylElement)> = (0..samples)
        .map(|_| (random_element(&mut rng, 3, 4, 5), random_element(&mut rng, 3, 4, 5)))
        .collect();
    let literal = *e == EndoPair::identity();
    for (a, b) in &pairs {
        let ab = a * b;
        let rhs = &(&(&d.eval(a) * b) + &(a * &d.eval(b))) + &(&e.y.commutator(a) * &b.commutator(&e.x));
        if d.eval(&ab) != rhs {
            return Ok(r.fail("d(ab) rule", &(&d.eval(&ab) - &rhs)));
        }
        let rhs = &(&(&dp.eval(a) * b) + &(a * &dp.eval(b))) + &(&e.x.commutator(a) * &b.commutator(&e.y));
        if dp.eval(&ab) != rhs {
            return Ok(r.fail("d'(ab) rule", &(&dp.eval(&ab) - &rhs)));
        }
        if literal {
            let (y, x) = (embed(&e.y), embed(&e.x));
            let hinv = localized_h_inverse(0);
            let h1inv = localized_h_inverse(-1);
            let da = embed(&d.eval(a));
            let dpa = embed(&dp.eval(a));
            let t = localized_mul(&localized_mul(&da, &hinv), &y);
            if t != embed(&e.y.commutator(a)) {
                return Ok(r.fail("d(a)h^-1 y != [y, a]", a));
            }
            let t2 = localized_mul(&localized_mul(&dpa, &h1inv), &x);
            if t2 != embed(&e.x.commutator(a)) {
                return Ok(r.fail("d'(a)(h-1)^-1 x != [x, a]", a));
            }
            let lhs = embed(&d.eval(&ab));
            let rhs = embed(&(&(&d.eval(a) * b) + &(a * &d.eval(b))))
                .add(&localized_mul(&t, &embed(&b.commutator(&e.x))));
            if lhs != rhs {
                return Ok(r.fail("localized d(ab) rule", &ab));
            }
            let lhs = embed(&dp.eval(&ab));
            let rhs = embed(&(&(&dp.eval(a) * b) + &(a * &dp.eval(b))))
                .add(&localized_mul(&t2, &embed(&b.commutator(&e.y))));
            if lhs != rhs {
                return Ok(r.fail("localized d'(ab) rule", &ab));
            }
        }
    }
    Ok(r.ok(if literal {
        format!("{samples} pairs, localized form included")
    } else {
        format!("{samples} pairs")
    }))
}

/// `ker(delta) = K[x] + K[y]` on the window and `ker(delta) cap C(h) = K`.
pub fn check_kernel_delta(e: &EndoPair, cap: i64, slack: i64) -> Result<CheckResult> {
    let r = CheckResult::new(
        "kernel_delta",
        &[("cap", cap.to_string()), ("slack", slack.to_string())],
    );
    let win = Window::standard(cap);
    let delta = MapSpec::DeltaXY(e.clone());
    let kernel = Subspace::span(&nilpotent_closure_window(&delta, &win, 1)?);
    let expected = kx_plus_ky_window(e, &win, slack)?;
    if let Some(w) = span_difference(&kernel, &expected) {
        return Ok(r.fail(
            format!("ker dim {} vs K[x]+K[y] dim {}", kernel.dim(), expected.dim()),
            &w,
        ));
    }
    let cent = Subspace::span(&centralizer_window(&e.h(), &win)?);
    let meet = kernel.intersect(&cent);
    let scalars = Subspace::span(&[WeylElement::one()]);
    if let Some(w) = span_difference(&meet, &scalars) {
        return Ok(r.fail("kernel meets C(h) beyond scalars", &w));
    }
    Ok(r.ok(format!("ker dim {}", kernel.dim())))
}

/// The nilpotent closures of `ad(x)`, `ad(y)` and `delta` on the window
/// all equal the windowed subalgebra `K<x, y>`.
pub fn check_nilpotent_closure(
    e: &EndoPair,
    cap: i64,
    max_iter: usize,
    slack: i64,
) -> Result<CheckResult> {
    let r = CheckResult::new(
        "nilpotent_closure",
        &[
            ("cap", cap.to_string()),
            ("max_iter", max_iter.to_string()),
            ("slack", slack.to_string()),
        ],
    );
    let win = Window::standard(cap);
    let maps = [
        ("ad(x)", MapSpec::Ad(e.x.clone())),
        ("ad(y)", MapSpec::Ad(e.y.clone())),
        ("delta", MapSpec::DeltaXY(e.clone())),
    ];
    let closures = maps
        .par_iter()
        .map(|(_, m)| nilpotent_closure_window(m, &win, max_iter).map(|b| Subspace::span(&b)))
        .collect::<Result<Vec<_>>>()?;
    // Membership at a smaller slack is already a certificate, so the slack
    // doubles from 4 up to the configured maximum until the sides agree.
    let mut used = slack.min(4);
    let mut target = a1_prime_window(e, &win, used)?;
    while target != closures[0] && used < slack {
        used = (used * 2).clamp(1, slack);
        target = a1_prime_window(e, &win, used)?;
    }
    for ((name, _), c) in maps.iter().zip(&closures) {
        if let Some(w) = span_difference(c, &target) {
            return Ok(r.fail(
                format!(
                    "N({name}) dim {} vs K<x,y> dim {} at slack {used}",
                    c.dim(),
                    target.dim()
                ),
                &w,
            ));
        }
    }
    Ok(r.ok(format!(
        "dim {} of window {}, slack {used}",
        target.dim(),
        win.dim()
    )))
}

/// If `(dd')^n(a)` lies in `K<x, y>` then so does `a`.
pub fn check_propagation(e: &EndoPair, a: &WeylElement, n: usize, slack: i64) -> Result<CheckResult> {
    let r = CheckResult::new(
        "propagation",
        &[
            ("a", a.to_string()),
            ("n", n.to_string()),
            ("slack", slack.to_string()),
        ],
    );
    let ddp = MapSpec::Compose(vec![MapSpec::DyX(e.clone()), MapSpec::DxY(e.clone())]).power(n);
    let image = ddp.eval(a);
    let image_in = subalgebra_membership(e, &image, slack)?.member;
    let a_in = subalgebra_membership(e, a, slack)?.member;
    let detail = format!("image member {image_in}, a member {a_in}");
    Ok(if image_in && !a_in {
        r.fail(detail, a)
    } else {
        r.ok(detail)
    })
}

/// The eigenvector tables of `d = [y, .]x` and `d' = [x, .]y`.
pub fn check_eigvec_tables(e: &EndoPair, imax: u32, nmax: u32) -> Result<CheckResult> {
    let r = CheckResult::new(
        "eigvec_tables",
        &[("imax", imax.to_string()), ("nmax", nmax.to_string())],
    );
    let d = MapSpec::DyX(e.clone());
    let dp = MapSpec::DxY(e.clone());
    let ypow = powers(&e.y, imax + nmax);
    let xpow = powers(&e.x, imax + nmax);
    let check = |m: &MapSpec, u: &WeylElement, k: i64| {
        let got = m.eval(u);
        let want = u.scale(&rat(k));
        (got != want).then(|| &got - &want)
    };
    for i in 0..=imax as usize {
        let yx = &ypow[i] * &xpow[i];
        let xy = &xpow[i] * &ypow[i];
        let ii = i as i64;
        if let Some(w) = check(&d, &yx, ii) {
            return Ok(r.fail(format!("d(y^{i}x^{i})"), &w));
        }
        if let Some(w) = check(&dp, &xy, -ii) {
            return Ok(r.fail(format!("d'(x^{i}y^{i})"), &w));
        }
        for n in 1..=nmax as usize {
            let nn = n as i64;
            let cases = [
                (&d, &ypow[n] * &yx, ii, "d(y^n y^i x^i)"),
                (&d, &yx * &xpow[n], ii + nn, "d(y^i x^i x^n)"),
                (&dp, &xy * &ypow[n], -(ii + nn), "d'(x^i y^i y^n)"),
                (&dp, &xpow[n] * &xy, -ii, "d'(x^n x^i y^i)"),
            ];
            for (m, u, k, label) in cases {
                if let Some(w) = check(m, &u, k) {
                    return Ok(r.fail(format!("{label} at i = {i}, n = {n}"), &w));
                }
            }
        }
    }
    Ok(r.ok(format!("i <= {imax}, n <= {nmax}")))
}

/// `v(d(a^n)) = v(a^(n-1) d(a))` and `drop(a^n) = drop(a)` for
/// `d in {[y, .]x, [x, .]y}` on random `a` outside `ker(d)`.
pub fn check_power_degree(
    e: &EndoPair,
    weights: &[Weight],
    samples: usize,
    nmax: u32,
    seed: u64,
) -> Result<CheckResult> {
    let ws: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
    let r = CheckResult::new(
        "power_degree",
        &[
            ("weights", ws.join(" ")),
            ("samples", samples.to_string()),
            ("nmax", nmax.to_string()),
            ("seed", seed.to_string()),
        ],
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let elems: Vec<WeylElement> = (0..samples).map(|_| random_element(&mut rng, 2, 3, 4)).collect();
    let maps = [MapSpec::DyX(e.clone()), MapSpec::DxY(e.clone())];
    let mut tested = 0;
    for a in &elems {
        let apow = powers(a, nmax);
        for m in &maps {
            let da = m.eval(a);
            if da.is_zero() {
                continue;
            }
            tested += 1;
            for &w in weights {
                if w.sum() <= 0 {
                    continue;
                }
                let base = drop(m, w, a)?;
                for n in 1..=nmax as usize {
                    let lhs = weighted_degree(w, &m.eval(&apow[n]));
                    let rhs = weighted_degree(w, &(&apow[n - 1] * &da));
                    if lhs != rhs || drop(m, w, &apow[n])? != base {
                        return Ok(r.fail(format!("{m} at n = {n}, weight {w}"), a));
                    }
                }
            }
        }
    }
    Ok(r.ok(format!("{tested} (element, map) cases")))
}

fn h_powers(e: &EndoPair, kmax: u32) -> Vec<WeylElement> {
    powers(&e.h(), kmax)
}

/// For an `h`-generic weight the drop of `delta` on `h^k` is `-v(h)`.
pub fn check_delta_drop(e: &EndoPair, kmax: u32, bound: i64) -> Result<CheckResult> {
    let r = CheckResult::new(
        "delta_drop",
        &[("kmax", kmax.to_string()), ("bound", bound.to_string())],
    );
    let h = e.h();
    let w = find_generic_weight(&h, bound)?;
    let vh = weighted_degree(w, &h).finite().unwrap_or(0);
    let delta = MapSpec::DeltaXY(e.clone());
    let hp = h_powers(e, kmax);
    for (k, hk) in hp.iter().enumerate().skip(1) {
        let got = drop(&delta, w, hk)?;
        if got.finite() != Some(-vh) {
            return Ok(r.fail(format!("drop {got} at k = {k}, expected {}", -vh), hk));
        }
    }
    Ok(r.ok(format!("weight {w}, drop {}", -vh)))
}

/// For an `h`-generic weight the drops of `[y, .]x` and `[x, .]y` on `h^k`
/// are zero.
pub fn check_d_drop(e: &EndoPair, kmax: u32, bound: i64) -> Result<CheckResult> {
    let r = CheckResult::new(
        "d_drop",
        &[("kmax", kmax.to_string()), ("bound", bound.to_string())],
    );
    let h = e.h();
    let w = find_generic_weight(&h, bound)?;
    let maps = [MapSpec::DyX(e.clone()), MapSpec::DxY(e.clone())];
    let hp = h_powers(e, kmax);
    for m in &maps {
        for (k, hk) in hp.iter().enumerate().skip(1) {
            let got = drop(m, w, hk)?;
            if got.finite() != Some(0) {
                return Ok(r.fail(format!("{m}: drop {got} at k = {k}"), hk));
            }
        }
    }
    Ok(r.ok(format!("weight {w}, drop 0")))
}

/// The chain basis of `delta` on `span{1, h, ..., h^kmax}` agrees with
/// `(-1)^i y^i x^i/(i!)^2` up to adding earlier chain elements, and
/// `delta` maps `K[h]_(<= k)` onto `K[h]_(<= k-1)`.
pub fn check_chain_basis(e: &EndoPair, kmax: u32) -> Result<CheckResult> {
    let r = CheckResult::new("chain_basis", &[("kmax", kmax.to_string())]);
    let delta = MapSpec::DeltaXY(e.clone());
    let hp = h_powers(e, kmax);
    let chain = build_chain_basis(&delta, &hp)?;
    let ypow = powers(&e.y, kmax);
    let xpow = powers(&e.x, kmax);
    let reference: Vec<WeylElement> = (0..=kmax as usize)
        .map(|i| delta_chain_element(&ypow, &xpow, i))
        .collect();
    for (i, ei) in chain.iter().enumerate() {
        let diff = ei - &reference[i];
        if !Subspace::span(&reference[..i]).contains(&diff) {
            return Ok(r.fail(format!("e_{i} differs from the reference chain"), ei));
        }
        if i > 0 && delta.eval(ei) != chain[i - 1] {
            return Ok(r.fail(format!("delta(e_{i}) != e_{}", i - 1), ei));
        }
    }
    for k in 1..=kmax as usize {
        let src = Subspace::span(&hp[..=k]);
        let tgt = Subspace::span(&hp[..k]);
        let c = coker_dim(&delta, &src, &tgt)?;
        if c != 0 {
            return Ok(r.fail(format!("cokernel dim {c} at k = {k}"), &hp[k]));
        }
    }
    Ok(r.ok(format!("{} chain elements, cokernels zero", chain.len())))
}

/// `w = H(H-1)^-1(H-2)X` lies outside `A1` while its powers `w^i`,
/// `2 <= i <= imax`, lie in `A1` and are `ad(H)`-eigenvectors; the support
/// monoid `{2, 3, ...}` has the single gap `1`.
pub fn check_cusp(imax: u32) -> Result<CheckResult> {
    let r = CheckResult::new("cusp", &[("imax", imax.to_string())]);
    let h = PolyH::var();
    let w = LocalizedElement::component(1, RatH::new(h.mul(&PolyH::linear(-2)), PolyH::linear(-1)));
    if let Some(a) = in_a1(&w) {
        return Ok(r.fail("w lies in A1", &a));
    }
    let mut members = Vec::new();
    let mut cur = w.clone();
    for i in 2..=imax {
        cur = localized_mul(&cur, &w);
        let Some(a) = in_a1(&cur) else {
            return Ok(r.fail(format!("w^{i} not in A1"), &WeylElement::from_int(i as i64)));
        };
        if i == 2 {
            let expected = &(&WeylElement::h() * &(&WeylElement::h() - &WeylElement::from_int(3)))
                * &WeylElement::x().pow(2);
            if a != expected {
                return Ok(r.fail("w^2 != H(H-3)X^2", &(&a - &expected)));
            }
        }
        let comm = WeylElement::h().commutator(&a);
        if comm != a.scale(&rat(i as i64)) {
            return Ok(r.fail(format!("[H, w^{i}] != {i} w^{i}"), &a));
        }
        members.push(a);
    }
    let supp = supp_monoid(&members);
    let want: BTreeSet<i64> = (2..=imax as i64).collect();
    if supp != want {
        return Ok(r.fail(format!("support {supp:?}"), &WeylElement::zero()));
    }
    let sg = semigroup_analyze(&[2, 3].into_iter().collect(), None)?;
    let gaps: Vec<u64> = sg.gaps.iter().copied().collect();
    if gaps != vec![1] {
        return Ok(r.fail(format!("gaps {gaps:?}"), &WeylElement::zero()));
    }
    Ok(r.ok(format!("w^2..w^{imax} in A1, gaps {{1}}")))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CandidateSpec {
    pub int_bound: i64,
    pub num_bound: i64,
    pub max_den: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SuiteParams {
    pub seed: u64,
    pub slack: i64,
    pub centralizer_cap: i64,
    pub eigen_cap: i64,
    pub candidates: CandidateSpec,
    pub klein_imax: u32,
    pub product_samples: usize,
    pub kernel_cap: i64,
    pub nilpotent_cap: i64,
    pub max_iter: usize,
    /// Membership slack for the windowed `K<x, y>` in `nilpotent_closure`.
    pub closure_slack: i64,
    pub propagation_n: usize,
    pub tables_imax: u32,
    pub tables_nmax: u32,
    pub power_samples: usize,
    pub power_nmax: u32,
    pub power_weights: Vec<Weight>,
    pub drop_kmax: u32,
    pub generic_bound: i64,
    pub chain_kmax: u32,
    pub cusp_imax: u32,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            seed: 7,
            slack: 4,
            centralizer_cap: 10,
            eigen_cap: 8,
            candidates: CandidateSpec {
                int_bound: 5,
                num_bound: 5,
                max_den: 4,
            },
            klein_imax: 10,
            product_samples: 20,
            kernel_cap: 4,
            nilpotent_cap: 6,
            max_iter: 32,
            closure_slack: 42,
            propagation_n: 2,
            tables_imax: 4,
            tables_nmax: 4,
            power_samples: 12,
            power_nmax: 4,
            power_weights: vec![Weight::new(1, 1), Weight::new(2, -1)],
            drop_kmax: 6,
            generic_bound: 10,
            chain_kmax: 6,
            cusp_imax: 6,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NamedRecipe {
    pub name: String,
    #[serde(flatten)]
    pub recipe: EndoRecipe,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    #[serde(default)]
    pub params: SuiteParams,
    #[serde(rename = "endo")]
    pub endos: Vec<NamedRecipe>,
    /// Check names to run; empty means all.
    #[serde(default)]
    pub checks: Vec<String>,
}

pub const CHECK_NAMES: &[&str] = &[
    "centralizer",
    "eigen",
    "klein_basis",
    "product_rules",
    "kernel_delta",
    "nilpotent_closure",
    "propagation",
    "eigvec_tables",
    "power_degree",
    "delta_drop",
    "d_drop",
    "chain_basis",
    "cusp",
];

impl SuiteConfig {
    /// The built-in identity, `(X, Y + X^2)` and `(X + Y^2, Y) o (X, Y + X^2)`.
    pub fn canonical() -> Self {
        SuiteConfig {
            params: SuiteParams::default(),
            endos: crate::recipe::canonical_recipes()
                .into_iter()
                .map(|(name, recipe)| NamedRecipe { name, recipe })
                .collect(),
            checks: vec![],
        }
    }

    fn enabled(&self, name: &str) -> bool {
        self.checks.is_empty() || self.checks.iter().any(|c| c == name)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub version: u32,
    pub params: SuiteParams,
    pub results: Vec<CheckResult>,
    pub passed: bool,
}

fn run_check(name: &str, e: &EndoPair, p: &SuiteParams) -> Result<CheckResult> {
    match name {
        "centralizer" => check_centralizer(e, p.centralizer_cap),
        "eigen" => {
            let c = &p.candidates;
            check_eigenvalues(e, p.eigen_cap, &candidate_set(c.int_bound, c.num_bound, c.max_den))
        }
        "klein_basis" => check_klein_basis(e, p.klein_imax),
        "product_rules" => check_product_rules(e, p.product_samples, p.seed),
        "kernel_delta" => check_kernel_delta(e, p.kernel_cap, p.slack),
        "nilpotent_closure" => check_nilpotent_closure(e, p.nilpotent_cap, p.max_iter, p.closure_slack),
        "propagation" => {
            let a = apply_endo(e, &WeylElement::yx(2, 3))?;
            check_propagation(e, &a, p.propagation_n, p.slack)
        }
        "eigvec_tables" => check_eigvec_tables(e, p.tables_imax, p.tables_nmax),
        "power_degree" => {
            check_power_degree(e, &p.power_weights, p.power_samples, p.power_nmax, p.seed)
        }
        "delta_drop" => check_delta_drop(e, p.drop_kmax, p.generic_bound),
        "d_drop" => check_d_drop(e, p.drop_kmax, p.generic_bound),
        "chain_basis" => check_chain_basis(e, p.chain_kmax),
        "cusp" => check_cusp(p.cusp_imax),
        other => Ok(CheckResult::new(other, &[]).fail("unknown check", &WeylElement::zero())),
    }
}

/// Runs every enabled check on every endomorphism, in parallel; results
/// keep declaration order (endomorphism, then check). `cusp` does not
/// depend on the endomorphism and runs once.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let pairs = cfg
        .endos
        .iter()
        .map(|n| compile(&n.recipe).map(|e| (n.name.clone(), e)))
        .collect::<Result<Vec<_>>>()?;
    let mut tasks: Vec<(Option<usize>, &str)> = Vec::new();
    for (k, _) in pairs.iter().enumerate() {
        for name in CHECK_NAMES.iter().filter(|n| **n != "cusp") {
            if cfg.enabled(name) {
                tasks.push((Some(k), name));
            }
        }
    }
    if cfg.enabled("cusp") {
        tasks.push((None, "cusp"));
    }
    for c in &cfg.checks {
        if !CHECK_NAMES.contains(&c.as_str()) {
            tasks.push((None, c.as_str()));
        }
    }
    let identity = EndoPair::identity();
    let results: Vec<CheckResult> = tasks
        .par_iter()
        .map(|(k, name)| {
            let (label, e) = match k {
                Some(k) => (Some(pairs[*k].0.clone()), &pairs[*k].1),
                None => (None, &identity),
            };
            let mut res = run_check(name, e, &cfg.params).unwrap_or_else(|err| {
                CheckResult::new(name, &[]).fail(format!("error: {err}"), &WeylElement::zero())
            });
            res.endo = label;
            res
        })
        .collect();
    let passed = results.iter().all(|r| r.passed);
    Ok(SuiteReport {
        version: 1,
        params: cfg.params.clone(),
        results,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn triangular() -> EndoPair {
        compile(&crate::recipe::canonical_recipes()[1].1).unwrap()
    }

    #[test]
    fn centralizer_identity() {
        let r = check_centralizer(&EndoPair::identity(), 10).unwrap();
        assert!(r.passed, "{}", r.summary());
        assert_eq!(r.detail, "dim 6");
    }

    #[test]
    fn eigen_identity_small() {
        let r = check_eigenvalues(&EndoPair::identity(), 4, &crate::spectral::default_candidates(4))
            .unwrap();
        assert!(r.passed, "{}", r.summary());
        assert!(r.detail.contains("1:2"));
    }

    #[test]
    fn klein_and_tables() {
        for e in [EndoPair::identity(), triangular()] {
            assert!(check_klein_basis(&e, 4).unwrap().passed);
            assert!(check_eigvec_tables(&e, 3, 3).unwrap().passed);
        }
    }

    #[test]
    fn product_rules_identity() {
        let r = check_product_rules(&EndoPair::identity(), 5, 1).unwrap();
        assert!(r.passed, "{}", r.summary());
        assert!(r.detail.contains("localized"));
    }

    #[test]
    fn kernel_and_closure() {
        let e = triangular();
        let r = check_kernel_delta(&e, 4, 4).unwrap();
        assert!(r.passed, "{}", r.summary());
        let r = check_nilpotent_closure(&EndoPair::identity(), 3, 8, 4).unwrap();
        assert!(r.passed, "{}", r.summary());
    }

    #[test]
    fn propagation_and_drops() {
        let e = triangular();
        let a = apply_endo(&e, &parse("Y^2*X^3").unwrap()).unwrap();
        let r = check_propagation(&e, &a, 2, 4).unwrap();
        assert!(r.passed && r.detail == "image member true, a member true", "{}", r.summary());
        assert!(check_delta_drop(&e, 4, 10).unwrap().passed);
        assert!(check_d_drop(&e, 4, 10).unwrap().passed);
        assert!(check_chain_basis(&EndoPair::identity(), 4).unwrap().passed);
    }

    #[test]
    fn cusp_passes() {
        let r = check_cusp(6).unwrap();
        assert!(r.passed, "{}", r.summary());
    }

    #[test]
    fn failure_carries_witness() {
        let bogus = EndoPair::unchecked(WeylElement::x(), WeylElement::x());
        let r = check_klein_basis(&bogus, 2).unwrap();
        assert!(!r.passed);
        assert!(r.witness.is_some());
    }

    #[test]
    fn config_round_trip() {
        let cfg = SuiteConfig::canonical();
        let text = toml::to_string(&cfg).unwrap();
        let back: SuiteConfig = toml::from_str(&text).unwrap();
        assert_eq!(back, cfg);
    }
}
