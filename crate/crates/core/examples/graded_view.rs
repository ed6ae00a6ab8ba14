//! The graded view `A1 = sum_n Q[H] v_n` and its localization.

use weyl::graded::{contraction, embed, from_graded, graded_degree, to_graded};
use weyl::parse;

fn main() {
    let a = parse("Y^2*X^3 + Y*X^2 + Y^3").unwrap();
    let g = to_graded(&a);
    println!("a        = {a}");
    println!("graded   = {g}");
    println!("degree   = {}", graded_degree(&a));
    assert_eq!(from_graded(&g), a);

    for (m, n) in [(1, -1), (-1, 1), (2, -3), (-2, 2)] {
        println!("v_{m} v_{n} = ({}) v_{}", contraction(m, n), m + n);
    }

    let b = parse("X^2*Y").unwrap();
    let prod = to_graded(&a).mul(&to_graded(&b));
    assert_eq!(from_graded(&prod), &a * &b);
    println!("a * X^2Y = {}", from_graded(&prod));
    println!("localized = {}", embed(&b));
}
