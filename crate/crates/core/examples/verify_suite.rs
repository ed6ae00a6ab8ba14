//! Runs the check suite, optionally from a TOML config given as the first
//! argument.

use weyl::checks::{run_suite, SuiteConfig};
use weyl::doc::load_suite_config;

fn main() {
    let cfg = match std::env::args().nth(1) {
        Some(path) => load_suite_config(path.as_ref()).unwrap(),
        None => SuiteConfig::canonical(),
    };
    let report = run_suite(&cfg).unwrap();
    for r in &report.results {
        println!("{}", r.summary());
    }
    let failed = report.results.iter().filter(|r| !r.passed).count();
    println!("{} checks, {failed} failed", report.results.len());
}
