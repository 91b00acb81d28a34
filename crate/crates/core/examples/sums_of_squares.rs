//! Representation numbers `r_s(n)` from `θ3^s`, against lattice enumeration and the level-2 formulas.

use eisenstein::arith::{r_count, r_oracle};
use eisenstein::verify::{run_checks, select, Params};
use eisenstein::SeriesCatalog;

fn main() {
    for s in [2, 4, 8, 16, 24] {
        let table = r_count(s, 6);
        let row: Vec<String> = table.values.iter().map(ToString::to_string).collect();
        println!("r{s:<2}: {}", row.join(" "));
        assert!((0..=6).all(|n| table.get(n).to_integer() == r_oracle(s, n as u64)));
    }
    let catalog = SeriesCatalog::new();
    let checks: Vec<_> = [
        "THETA-REL",
        "JACOBI",
        "T9",
        "R24-FACT",
        "T10",
        "C10",
        "TABLE2",
    ]
    .iter()
    .flat_map(|id| select(id).unwrap())
    .collect();
    for report in run_checks(&checks, &catalog, &Params::default(), true) {
        println!("{}", report.summary());
        for note in &report.notes {
            println!("    {note}");
        }
    }
}
