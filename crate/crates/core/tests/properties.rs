use std::sync::OnceLock;

use eisenstein::graded::{evaluate, modular_basis, serre_delta, serre_partial, GradedPoly, Ring};
use eisenstein::qseries::det;
use eisenstein::scalars::{check_scalar_recursion, rat, ScalarKind};
use eisenstein::verify::{run_check, Params};
use eisenstein::{QSeries, Rational, SeriesCatalog};
use num_traits::Zero;
use proptest::prelude::*;

fn catalog() -> &'static SeriesCatalog {
    static CATALOG: OnceLock<SeriesCatalog> = OnceLock::new();
    CATALOG.get_or_init(SeriesCatalog::new)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn series(order: usize) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(rational(), order + 1).prop_map(QSeries::new)
}

fn triple() -> impl Strategy<Value = (QSeries, QSeries, QSeries)> {
    (0usize..=16).prop_flat_map(|n| (series(n), series(n), series(n)))
}

/// Random homogeneous polynomial of the given weight.
fn poly(ring: Ring, weight: u32) -> impl Strategy<Value = GradedPoly> {
    let w = ring.weights();
    let mut monomials = Vec::new();
    for a in 0..=weight / w[0] {
        for b in 0..=weight / w[1] {
            let used = a * w[0] + b * w[1];
            if used <= weight && (weight - used).is_multiple_of(w[2]) {
                monomials.push([a, b, (weight - used) / w[2]]);
            }
        }
    }
    prop::collection::vec(rational(), monomials.len()).prop_map(move |cs| {
        monomials
            .iter()
            .zip(cs)
            .fold(GradedPoly::zero(ring), |acc, (&e, c)| {
                &acc + &GradedPoly::monomial(ring, e, c)
            })
    })
}

fn weighted(ring: Ring) -> impl Strategy<Value = (u32, GradedPoly)> {
    (1u32..=5).prop_flat_map(move |k| (Just(2 * k), poly(ring, 2 * k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_laws((f, g, h) in triple()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &QSeries::one(f.order()), f.clone());
    }

    #[test]
    fn mixed_orders_truncate_to_minimum(f in series(10), g in series(4)) {
        prop_assert_eq!((&f * &g).order(), 4);
        prop_assert_eq!(&f * &g, &f.truncate(4) * &g);
    }

    #[test]
    fn theta_is_a_derivation((f, g, _) in triple()) {
        prop_assert_eq!((&f * &g).theta(), &(&f.theta() * &g) + &(&f * &g.theta()));
    }

    #[test]
    fn inverse_is_two_sided(f in series(12), c0 in (1i64..=9, 1i64..=3)) {
        let mut coeffs = f.into_coeffs();
        coeffs[0] = rat(c0.0, c0.1);
        let f = QSeries::new(coeffs);
        let inv = f.invert().unwrap();
        prop_assert_eq!(&f * &inv, QSeries::one(12));
        prop_assert_eq!(&inv * &f, QSeries::one(12));
    }

    #[test]
    fn neg_q_is_a_ring_involution((f, g, _) in triple()) {
        prop_assert_eq!(f.neg_q().neg_q(), f.clone());
        prop_assert_eq!((&f * &g).neg_q(), &f.neg_q() * &g.neg_q());
    }

    #[test]
    fn det_with_repeated_row_vanishes((f, g, h) in triple()) {
        prop_assert!(det(&[vec![f.clone(), g.clone()], vec![f.clone(), g.clone()]]).unwrap().is_zero());
        let m = vec![
            vec![f.clone(), g.clone(), h.clone()],
            vec![h.clone(), f.clone(), g.clone()],
            vec![f.clone(), g.clone(), h.clone()],
        ];
        prop_assert!(det(&m).unwrap().is_zero());
    }

    #[test]
    fn serre_delta_leibniz((w1, f) in weighted(Ring::Level2), (w2, g) in weighted(Ring::Level2)) {
        let lhs = serre_delta(&(&f * &g), w1 + w2).unwrap();
        let rhs = &(&serre_delta(&f, w1).unwrap() * &g) + &(&f * &serre_delta(&g, w2).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn serre_partial_leibniz((w1, f) in weighted(Ring::Level1), (w2, g) in weighted(Ring::Level1)) {
        let lhs = serre_partial(&(&f * &g), w1 + w2).unwrap();
        let rhs = &(&serre_partial(&f, w1).unwrap() * &g) + &(&f * &serre_partial(&g, w2).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_raises_weight_by_two((w, f) in weighted(Ring::Level2)) {
        let d = serre_delta(&f, w).unwrap();
        prop_assert!(d.is_zero() || d.is_homogeneous_of(w + 2));
    }

    #[test]
    fn delta_commutes_with_d((w, f) in weighted(Ring::Level2)) {
        // δD = 0, so multiplying by D commutes with δ
        let d = GradedPoly::d();
        prop_assert_eq!(serre_delta(&(&d * &f), w + 4).unwrap(), &d * &serre_delta(&f, w).unwrap());
    }

    #[test]
    fn evaluation_is_a_morphism((_, f) in weighted(Ring::Level2), (_, g) in weighted(Ring::Level2)) {
        let n = 32;
        let (ef, eg) = (evaluate(&f, catalog(), n).unwrap(), evaluate(&g, catalog(), n).unwrap());
        prop_assert_eq!(evaluate(&(&f * &g), catalog(), n).unwrap(), &ef * &eg);
        prop_assert_eq!(evaluate(&(&f + &g), catalog(), n).unwrap(), &ef + &eg);
    }

    #[test]
    fn delta_matches_series_derivative((w, f) in weighted(Ring::Level2)) {
        let n = 24;
        let s = evaluate(&f, catalog(), n).unwrap();
        let a = catalog().e_star(1, n).unwrap();
        let expected = &s.theta() - &(&a * &s).scale(&rat(w as i64, 4));
        prop_assert_eq!(evaluate(&serre_delta(&f, w).unwrap(), catalog(), n).unwrap(), expected);
    }

    #[test]
    fn partial_matches_series_derivative((w, f) in weighted(Ring::Level1)) {
        let n = 24;
        let s = evaluate(&f, catalog(), n).unwrap();
        let e2 = catalog().e(1, n).unwrap();
        let expected = &s.theta() - &(&e2 * &s).scale(&rat(w as i64, 12));
        prop_assert_eq!(evaluate(&serre_partial(&f, w).unwrap(), catalog(), n).unwrap(), expected);
    }

    #[test]
    fn delta_of_basis_monomials_is_negative(k in 1u32..=10, pick in 0usize..8, c in 1i64..=9) {
        let basis = modular_basis(2 * k);
        let e = basis[pick % basis.len()];
        let f = GradedPoly::monomial(Ring::Level2, e, rat(c, 1));
        prop_assert!(serre_delta(&f, 2 * k).unwrap().in_b_q_minus());
    }

    #[test]
    fn delta_family_agrees_at_any_order(order in 2usize..=40) {
        let params = Params { order, ..Params::default() };
        prop_assert!(run_check("DELTA-FAMILY", catalog(), &params).unwrap().passed());
    }

    #[test]
    fn scalar_recursions(m in 2u32..=20) {
        prop_assert!(check_scalar_recursion(ScalarKind::Zeta, m));
        prop_assert!(check_scalar_recursion(ScalarKind::Lambda, m));
    }

    #[test]
    fn d_is_in_the_kernel(order in 2usize..=48) {
        let d = catalog().d(order).unwrap();
        let a = catalog().e_star(1, order).unwrap();
        prop_assert_eq!(d.theta(), &a * &d);
        prop_assert!(d.coeff(0).is_zero());
    }
}
