//! Polynomials in `A, B, C`: Serre derivatives, `E*_{2m}` in the basis `B^j C^k`,
//! and decomposition of q-series into that basis.

use eisenstein::graded::{
    check_positivity, decompose_modular, e_star_polys, serre_delta, GradedPoly,
};
use eisenstein::SeriesCatalog;

fn main() {
    let (b, c) = (GradedPoly::b(), GradedPoly::c());
    println!("δ(C²)  = {}", serre_delta(&c.pow(2), 4).unwrap());
    println!("δ(BC)  = {}", serre_delta(&(&b * &c), 6).unwrap());
    println!("δ(D)   = {}", serre_delta(&GradedPoly::d(), 4).unwrap());

    let polys = e_star_polys(10).unwrap();
    for (m, p) in (2..).zip(&polys) {
        println!("E*_{:<2} = {p}", 2 * m);
    }

    let catalog = SeriesCatalog::new();
    let e12 = catalog.e_star(6, 40).unwrap();
    let d = decompose_modular(&e12, 12, &catalog).unwrap();
    println!("E*_12 from its q-expansion: {}", d.to_poly());
    println!(
        "positive for m <= 20: {}",
        (2..=20).all(|m| check_positivity(m, &catalog))
    );
}
