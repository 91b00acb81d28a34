//! Ramanujan's τ from the eta product, cross-checked against both Eisenstein routes.
//!
//! `cargo run --release --example tau_table -- 1000`

use eisenstein::arith::tau_table;
use eisenstein::series::delta_from_level2;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(30);
    let tau = tau_table(n).expect("eta product and (E4³ - E6²)/1728 agree");
    assert_eq!(tau.as_series(), delta_from_level2(n));
    for (i, t) in tau.values.iter().enumerate().skip(1).take(30) {
        println!("tau({i:>2}) = {t}");
    }
    println!("checked {n} coefficients three ways");
}
