//! Submonoids of `N` generated by a finite set: gcd, gaps within `gN`, and
//! the covering residues `h_k = t(m/g - k) + k s` with `s - t = g`.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupData {
    pub generators: BTreeSet<u64>,
    pub horizon: u64,
    /// gcd of the generators.
    pub g: u64,
    /// Least positive element.
    pub m: u64,
    /// Members with `s - t = g`.
    pub s: u64,
    pub t: u64,
    /// Multiples of `g` missing from the monoid.
    pub gaps: BTreeSet<u64>,
    /// `h_k` for `k = 0, ..., m/g - 1`.
    pub h_list: Vec<u64>,
    /// For each `h_k`, multiplicities of the generators (ascending order)
    /// summing to `h_k`.
    pub h_certificates: Vec<Vec<u64>>,
    pub mu: u64,
    pub nu: u64,
    /// Smallest `n` from which `n, n + g, n + 2g, ...` are all members.
    pub stable_from: u64,
}

impl SemigroupData {
    /// `gamma = mu + drop`.
    pub fn gamma_of(&self, drop: i64) -> i64 {
        self.mu as i64 + drop
    }

    pub fn contains(&self, n: u64) -> bool {
        n.is_multiple_of(self.g) && !self.gaps.contains(&n)
    }
}

/// `horizon` of `None` uses `4 * max(generators)^2`.
pub fn semigroup_analyze(generators: &BTreeSet<u64>, horizon: Option<u64>) -> Result<SemigroupData> {
    if generators.is_empty() {
        return Err(Error::BadGenerators("empty generator set".into()));
    }
    if generators.contains(&0) {
        return Err(Error::BadGenerators("generators must be positive".into()));
    }
    let gens: Vec<u64> = generators.iter().copied().collect();
    let max = *gens.last().unwrap();
    let horizon = horizon.unwrap_or(4 * max * max);
    let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
    let m = gens[0];
    let run = m / g;

    // back[n] = index of a generator whose removal leaves a member
    let n = horizon as usize;
    let mut member = vec![false; n + 1];
    let mut back = vec![usize::MAX; n + 1];
    member[0] = true;
    for v in 1..=n {
        for (k, &gen) in gens.iter().enumerate() {
            let gen = gen as usize;
            if gen <= v && member[v - gen] {
                member[v] = true;
                back[v] = k;
                break;
            }
        }
    }

    // m/g consecutive multiples of g certify everything beyond
    let mut stable_from = None;
    let mut streak = 0u64;
    let mut v = 0u64;
    while v <= horizon {
        if member[v as usize] {
            streak += 1;
            if streak == run {
                stable_from = Some(v - (run - 1) * g);
                break;
            }
        } else {
            streak = 0;
        }
        v += g;
    }
    let stable_from = stable_from.ok_or(Error::HorizonTooSmall { horizon })?;
    // the first member of the final streak starts the stable range, but
    // earlier members may already be stable; walk back while members
    let mut start = stable_from;
    while start >= g && member[(start - g) as usize] {
        start -= g;
    }
    let stable_from = start;

    let gaps: BTreeSet<u64> = (0..stable_from)
        .step_by(g as usize)
        .filter(|&v| !member[v as usize])
        .collect();

    let t = (0..=horizon - g)
        .step_by(g as usize)
        .find(|&t| member[t as usize] && member[(t + g) as usize])
        .ok_or(Error::HorizonTooSmall { horizon })?;
    let s = t + g;
    let h_list: Vec<u64> = (0..run).map(|k| t * (run - k) + k * s).collect();
    let certificate = |value: u64| -> Option<Vec<u64>> {
        let mut mult = vec![0u64; gens.len()];
        let mut v = value;
        if v > horizon {
            return None;
        }
        while v > 0 {
            let k = back[v as usize];
            if k == usize::MAX {
                return None;
            }
            mult[k] += 1;
            v -= gens[k];
        }
        Some(mult)
    };
    let h_certificates = h_list
        .iter()
        .map(|&h| certificate(h).ok_or(Error::HorizonTooSmall { horizon }))
        .collect::<Result<Vec<_>>>()?;
    let mu = *h_list.iter().max().unwrap();
    let nu = gaps.len() as u64;
    Ok(SemigroupData {
        generators: generators.clone(),
        horizon,
        g,
        m,
        s,
        t,
        gaps,
        h_list,
        h_certificates,
        mu,
        nu,
        stable_from,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> BTreeSet<u64> {
        v.iter().copied().collect()
    }

    #[test]
    fn two_three() {
        let d = semigroup_analyze(&set(&[2, 3]), None).unwrap();
        assert_eq!(d.g, 1);
        assert_eq!(d.gaps, set(&[1]));
        assert_eq!(d.nu, 1);
        assert_eq!((d.t, d.s), (2, 3));
        assert_eq!(d.h_list, vec![4, 5]);
        assert_eq!(d.mu, 5);
        assert_eq!(d.gamma_of(-1), 4);
        assert_eq!(d.stable_from, 2);
    }

    #[test]
    fn single_generator() {
        let d = semigroup_analyze(&set(&[2]), None).unwrap();
        assert_eq!(d.g, 2);
        assert!(d.gaps.is_empty());
        assert_eq!(d.nu, 0);
        assert_eq!(d.h_list, vec![0]);
    }

    #[test]
    fn four_six() {
        let d = semigroup_analyze(&set(&[4, 6]), None).unwrap();
        assert_eq!(d.g, 2);
        assert_eq!(d.gaps, set(&[2]));
        assert_eq!(d.nu, 1);
    }

    #[test]
    fn certificates_sum_to_h() {
        let d = semigroup_analyze(&set(&[5, 7, 9]), None).unwrap();
        let gens: Vec<u64> = d.generators.iter().copied().collect();
        for (h, cert) in d.h_list.iter().zip(&d.h_certificates) {
            let total: u64 = cert.iter().zip(&gens).map(|(c, g)| c * g).sum();
            assert_eq!(total, *h);
        }
    }

    #[test]
    fn errors() {
        assert!(semigroup_analyze(&set(&[]), None).is_err());
        assert!(semigroup_analyze(&set(&[0, 3]), None).is_err());
        assert!(matches!(
            semigroup_analyze(&set(&[7, 11]), Some(20)),
            Err(Error::HorizonTooSmall { .. })
        ));
    }
}
