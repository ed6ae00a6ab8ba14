//! Weighted degrees, Newton polygons and generic weights.

use weyl::newton::{find_generic_weight, is_generic, leading_term, newton_polygon, weighted_degree};
use weyl::{parse, Weight};

fn main() {
    let a = parse("1 + Y^3 + Y*X^2 + X^4").unwrap();
    let poly = newton_polygon(&a).unwrap();
    println!("a        = {a}");
    println!("support  = {:?}", poly.support);
    println!("vertices = {:?}", poly.vertices);
    for (p, q) in poly.edges() {
        println!("edge {p:?} -> {q:?}");
    }

    for w in [Weight::new(1, 1), Weight::new(2, 1), Weight::new(1, -1)] {
        println!("v_{w}(a) = {}", weighted_degree(w, &a));
    }
    let w = Weight::new(1, 1);
    println!("generic for {w}: {}", is_generic(w, &a).unwrap());

    let w = find_generic_weight(&a, 10).unwrap();
    println!("first generic weight: {w}, leading term {}", leading_term(w, &a).unwrap());
}
