//! Degree drops of the maps built from an endomorphism.

use weyl::maps::{drop_profile, nilpotency_degree};
use weyl::recipe::{canonical_recipes, compile};
use weyl::{MapSpec, Weight, WeylElement};

fn main() {
    let w = Weight::STANDARD;
    for (name, recipe) in canonical_recipes() {
        let e = compile(&recipe).unwrap();
        let samples: Vec<WeylElement> = (1..=4).map(|k| e.h().pow(k)).collect();
        println!("{name}: x = {}, y = {}", e.x, e.y);
        for (label, m) in [
            ("[y,.]x", MapSpec::DyX(e.clone())),
            ("[x,.]y", MapSpec::DxY(e.clone())),
            ("[x,[y,.]]", MapSpec::DeltaXY(e.clone())),
        ] {
            let report = drop_profile(&m, w, &samples).unwrap();
            println!("  {label:10} drop {:?} (constant {})", report.drop_value, report.constant);
        }
    }

    let ad_x = MapSpec::ad(WeylElement::x());
    let a = WeylElement::y().pow(3);
    println!("ad(X) nilpotency on Y^3: {:?}", nilpotency_degree(&ad_x, &a, 10));
}
