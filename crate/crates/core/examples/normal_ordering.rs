//! Products and commutators in the normal basis `Y^i X^j`.

use weyl::element::reorder_coefficients;
use weyl::{parse, WeylElement};

fn main() {
    let x = WeylElement::x();
    let y = WeylElement::y();
    println!("X*Y      = {}", &x * &y);
    println!("[Y, X]   = {}", y.commutator(&x));
    println!("X^3*Y^2  = {}", &x.pow(3) * &y.pow(2));

    // X^3 Y^2 = sum_k c_k Y^(2-k) X^(3-k)
    let c = reorder_coefficients(3, 2);
    println!("reorder coefficients for X^3 Y^2: {c:?}");

    let h = WeylElement::h();
    println!("H = {h}, H^2 = {}", h.pow(2));

    let a = parse("(X + Y^2)^2 - 1/2*[X^2, Y]").unwrap();
    println!("a        = {a}");
    println!("theta(a) = {}", a.theta());
    println!("theta'(a) = {}", a.theta_prime());
}
