//! The differential equations for the level-2 series `E*_{2k}` and the `A, B, C` system.

use eisenstein::graded::ks_coefficient;
use eisenstein::verify::{run_checks, select, Params};
use eisenstein::SeriesCatalog;

fn main() {
    for m in 2..=6 {
        let coeffs: Vec<String> = (1..m).map(|k| ks_coefficient(m, k).to_string()).collect();
        println!(
            "m = {m}: coefficients of E*_2k E*_{{2m-2k}} - E*_2m: [{}]",
            coeffs.join(", ")
        );
    }
    let params = Params {
        order: 48,
        ..Params::default()
    };
    let catalog = SeriesCatalog::new();
    for family in ["KS-DE", "E6STAR-ABC", "HAHN-SYS", "P4", "D-KERNEL"] {
        for report in run_checks(&select(family).unwrap(), &catalog, &params, false) {
            println!("{}", report.summary());
        }
    }
}
