//! Kernel of `delta = [x, [y, .]]`, its nilpotent closure and a chain basis.

use weyl::membership::a1_prime_window;
use weyl::recipe::{compile, twisted_recipe};
use weyl::spectral::{build_chain_basis, nilpotent_closure_window};
use weyl::{EndoPair, MapSpec, Subspace, Window, WeylElement};

fn main() {
    let e = compile(&twisted_recipe()).unwrap();
    let delta = MapSpec::DeltaXY(e.clone());
    let win = Window::standard(4);

    let kernel = nilpotent_closure_window(&delta, &win, 1).unwrap();
    let closure = nilpotent_closure_window(&delta, &win, 32).unwrap();
    println!("ker delta: dim {}, nilpotent closure: dim {}", kernel.len(), closure.len());

    let sub = a1_prime_window(&e, &win, 8).unwrap();
    println!("K<x, y> on the window: dim {} of {}", sub.dim(), win.dim());

    let d = MapSpec::DeltaXY(EndoPair::identity());
    let powers: Vec<_> = (0..=4).map(|i| WeylElement::h().pow(i)).collect();
    let chain = build_chain_basis(&d, &powers).unwrap();
    for (i, c) in chain.iter().enumerate() {
        println!("e_{i} = {c}");
    }
    assert_eq!(Subspace::span(&chain).dim(), powers.len());
}
