//! Runs every registered identity check and prints one line per check.
//!
//! `cargo run --release --example verify_all -- 64`

use eisenstein::verify::{run_all, Params};

fn main() {
    let order = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(64);
    let reports = run_all(
        &Params {
            order,
            ..Params::default()
        },
        true,
    );
    let failed = reports.iter().filter(|r| !r.passed()).count();
    for r in &reports {
        println!("{}", r.summary());
    }
    println!("{} checks, {failed} failed", reports.len());
    std::process::exit(i32::from(failed > 0));
}
