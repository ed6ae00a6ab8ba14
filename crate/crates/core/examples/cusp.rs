//! An element of the localization whose powers land back in `A1`.

use weyl::graded::{in_a1, localized_mul, PolyH};
use weyl::{LocalizedElement, RatH};

fn main() {
    let h = PolyH::var();
    let num = h.mul(&PolyH::linear(-2));
    let w = LocalizedElement::component(1, RatH::new(num, PolyH::linear(-1)));
    println!("w = {w}");
    let mut power = LocalizedElement::component(0, RatH::from_poly(PolyH::one()));
    for i in 1..=6 {
        power = localized_mul(&power, &w);
        match in_a1(&power) {
            Some(a) => println!("w^{i} = {a}"),
            None => println!("w^{i} = {power} (not in A1)"),
        }
    }
}
