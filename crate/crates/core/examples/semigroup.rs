//! Numerical semigroup data for a set of generators.

use std::collections::BTreeSet;

use weyl::semigroup::semigroup_analyze;

fn main() {
    for gens in [vec![2u64, 3], vec![4, 6, 9], vec![6, 10, 15]] {
        let set: BTreeSet<u64> = gens.into_iter().collect();
        let s = semigroup_analyze(&set, None).unwrap();
        println!("<{set:?}>: g = {}, m = {}, gaps {:?}", s.g, s.m, s.gaps);
        println!("    h = {:?}, mu = {}, nu = {}, stable from {}", s.h_list, s.mu, s.nu, s.stable_from);
        println!("    gamma for drop -2: {}", s.gamma_of(-2));
    }
}
