//! Determinants of Eisenstein series matrices, expressed through `Δ`.

use eisenstein::qseries::det;
use eisenstein::scalars::rat;
use eisenstein::SeriesCatalog;

fn main() {
    let n = 12;
    let catalog = SeriesCatalog::new();
    let e = |k| catalog.e_star(k, n).unwrap();
    let delta = catalog.delta(n).unwrap();
    let m = det(&[vec![e(2), e(3)], vec![e(3), e(4)]]).unwrap();
    println!("|E*4 E*6; E*6 E*8| = {m}");
    println!("-576/17 Δ          = {}", delta.scale(&rat(-576, 17)));

    let l1 = |k| catalog.e(k, n).unwrap();
    let g = det(&[
        vec![l1(2), l1(3), l1(4)],
        vec![l1(3), l1(4), l1(5)],
        vec![l1(4), l1(5), l1(6)],
    ])
    .unwrap();
    let rhs = (&delta * &delta).scale(&rat(-250 * 1728 * 1728, 691));
    println!(
        "level-1 3x3 determinant equals -(250/691)(1728Δ)²: {}",
        g == rhs
    );
}
