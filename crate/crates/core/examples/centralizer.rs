//! Centralizers of `h` and of plain elements.

use weyl::recipe::{canonical_recipes, compile};
use weyl::spectral::centralizer_window;
use weyl::{parse, Window};

fn main() {
    let win = Window::standard(8);
    for (name, recipe) in canonical_recipes() {
        let e = compile(&recipe).unwrap();
        let basis = centralizer_window(&e.h(), &win).unwrap();
        println!("C(h) for {name}: dim {} in window of dim {}", basis.len(), win.dim());
        for b in basis.iter().take(3) {
            println!("    {b}");
        }
    }
    let a = parse("Y^2 + X").unwrap();
    let basis = centralizer_window(&a, &win).unwrap();
    println!("C({a}):");
    for b in basis {
        println!("    {b}");
    }
}
