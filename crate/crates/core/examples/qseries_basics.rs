//! Truncated q-series: products, inverses, q d/dq and q -> -q.

use eisenstein::scalars::rat;
use eisenstein::series::{eisenstein_level2, theta3};
use eisenstein::QSeries;

fn main() {
    let n = 10;
    let a = eisenstein_level2(1, n);
    let b = eisenstein_level2(2, n);
    println!("A      = {a}");
    println!("B      = {b}");
    println!("1/B    = {}", b.invert().unwrap());
    println!("qA'    = {}", a.theta());
    println!("(A²-B)/4 = {}", (&(&a * &a) - &b).scale(&rat(1, 4)));

    let t = theta3(n);
    println!("θ3     = {t}");
    println!("θ3(-q)^8 == B: {}", t.pow(8).neg_q() == b);

    // mixing orders truncates to the smaller one
    let short = QSeries::from_integers([1, 1, 1]);
    println!("order of A·(1+q+q²): {}", (&a * &short).order());
}
