//! Eigenvalues and eigenvectors of `ad(h)` on a degree window.

use weyl::recipe::{compile, twisted_recipe};
use weyl::spectral::{candidate_set, eigenvalue_scan};
use weyl::Window;

fn main() {
    let e = compile(&twisted_recipe()).unwrap();
    let h = e.h();
    println!("h = {h}");
    let win = Window::standard(6);
    let report = eigenvalue_scan(&h, &win, &candidate_set(5, 5, 4)).unwrap();
    println!("{} candidates on a window of dimension {}", report.candidates.len(), win.dim());
    for space in &report.found {
        println!("lambda = {:>3}: dim {}", space.lambda, space.basis.len());
        if let Some(v) = space.basis.first() {
            println!("    e.g. {v}");
        }
    }
}
