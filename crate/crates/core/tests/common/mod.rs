//! Reference implementations that share no code with the library's
//! arithmetic: normal ordering by single-step rewriting `XY -> YX - 1` on
//! words, and brute-force degree computations.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use weyl::{Monomial, WeylElement};

pub type Word = Vec<u8>;

/// Normal form of a linear combination of words in `X` and `Y`, as a map
/// `(i, j) -> coefficient of Y^i X^j`.
pub fn rewrite(words: Vec<(Word, BigInt)>) -> BTreeMap<(u32, u32), BigInt> {
    let mut pending: HashMap<Word, BigInt> = HashMap::new();
    for (w, c) in words {
        *pending.entry(w).or_insert_with(BigInt::zero) += c;
    }
    let mut done: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
    while !pending.is_empty() {
        let mut next: HashMap<Word, BigInt> = HashMap::new();
        for (w, c) in pending {
            if c.is_zero() {
                continue;
            }
            match w.windows(2).position(|p| p == b"XY") {
                None => {
                    let i = w.iter().filter(|&&b| b == b'Y').count() as u32;
                    let j = w.len() as u32 - i;
                    *done.entry((i, j)).or_insert_with(BigInt::zero) += c;
                }
                Some(k) => {
                    let mut swapped = w.clone();
                    swapped[k] = b'Y';
                    swapped[k + 1] = b'X';
                    *next.entry(swapped).or_insert_with(BigInt::zero) += &c;
                    let mut removed = w;
                    removed.drain(k..k + 2);
                    *next.entry(removed).or_insert_with(BigInt::zero) -= c;
                }
            }
        }
        pending = next;
    }
    done.retain(|_, c| !c.is_zero());
    done
}

pub fn word(i: u32, j: u32) -> Word {
    let mut w = vec![b'Y'; i as usize];
    w.extend(std::iter::repeat_n(b'X', j as usize));
    w
}

pub fn to_element(m: &BTreeMap<(u32, u32), BigInt>) -> WeylElement {
    WeylElement::from_terms(
        m.iter()
            .map(|(&(i, j), c)| (Monomial::new(i, j), BigRational::from_integer(c.clone()))),
    )
}

/// `Y^i X^j * Y^k X^l` by rewriting.
pub fn oracle_monomial_product(i: u32, j: u32, k: u32, l: u32) -> WeylElement {
    let mut w = word(i, j);
    w.extend(word(k, l));
    to_element(&rewrite(vec![(w, BigInt::one())]))
}

/// Product of two elements by rewriting every pair of terms.
pub fn oracle_mul(a: &WeylElement, b: &WeylElement) -> WeylElement {
    let mut out = WeylElement::zero();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let p = oracle_monomial_product(ma.y, ma.x, mb.y, mb.x);
            out = &out + &p.scale(&(ca * cb));
        }
    }
    out
}

/// `max(rho*i + eta*j)` over the support, `None` for zero.
pub fn oracle_degree(rho: i64, eta: i64, a: &WeylElement) -> Option<i64> {
    a.terms()
        .map(|(m, _)| rho * m.y as i64 + eta * m.x as i64)
        .max()
}

pub fn random_element<R: Rng>(rng: &mut R, deg: u32, terms: usize, num: i64, den: i64) -> WeylElement {
    let n = rng.gen_range(0..=terms);
    WeylElement::from_terms((0..n).map(|_| {
        let y = rng.gen_range(0..=deg);
        let x = rng.gen_range(0..=deg - y);
        let p = rng.gen_range(-num..=num);
        let q = rng.gen_range(1..=den);
        (Monomial::new(y, x), BigRational::new(p.into(), q.into()))
    }))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}
