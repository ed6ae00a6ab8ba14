//! Building endomorphisms from tame generators and testing membership in
//! the subalgebra they generate.

use weyl::membership::subalgebra_membership;
use weyl::recipe::{compile, EndoGenerator, EndoRecipe};
use weyl::{apply_endo, build_endo, parse, WeylElement};

fn main() {
    let recipe = EndoRecipe::from_generators(vec![
        EndoGenerator::add_poly_y([0, 0, 1]),
        EndoGenerator::add_poly_x([0, 0, 1]),
    ]);
    println!("recipe: {}", serde_json::to_string(&recipe).unwrap());
    let e = compile(&recipe).unwrap();
    println!("x = {}\ny = {}\nh = {}", e.x, e.y, e.h());

    let a = parse("X*Y^2").unwrap();
    let image = apply_endo(&e, &a).unwrap();
    println!("phi({a}) = {image}");

    let m = subalgebra_membership(&e, &WeylElement::y(), 4).unwrap();
    println!("Y in K<x, y>: {} via {} words", m.member, m.witness.len());

    match build_endo(parse("2*X").unwrap(), parse("Y").unwrap()) {
        Ok(_) => println!("unexpected"),
        Err(err) => println!("rejected: {err}"),
    }
}
