//! Parsing, printing and JSON documents.

use weyl::doc::{ElementDoc, GradedDoc};
use weyl::parse;

fn main() {
    let a = parse("3/2*X^2*Y - [Y, X^3] + 7").unwrap();
    println!("printed: {a}");
    assert_eq!(parse(&a.to_string()).unwrap(), a);

    let json = ElementDoc::from_element(&a).to_json();
    println!("{json}");
    let back = ElementDoc::from_json(&json).unwrap().to_element().unwrap();
    assert_eq!(back, a);

    let graded = GradedDoc::from_element(&a);
    println!("{}", serde_json::to_string_pretty(&graded).unwrap());

    if let Err(e) = parse("X^2 + (Y") {
        println!("error: {e}");
    }
}
