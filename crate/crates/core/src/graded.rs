//! Graded polynomial rings `Q[E2, E4, E6]` (level 1) and `Q[A, B, C]` (level 2)
//! with `A = E*2`, `B = E*4`, `C = E*6/E*4`, their Serre derivatives, evaluation
//! to q-series and decomposition in the modular basis `B^j C^{k-2j}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::qseries::QSeries;
use crate::scalars::{int, lambda_even, pi_squared, rat};
use crate::series::{SeriesCatalog, SeriesName};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    /// Generators `E2, E4, E6` of weights 2, 4, 6.
    Level1,
    /// Generators `A, B, C` of weights 2, 4, 2.
    Level2,
}

impl Ring {
    pub fn weights(self) -> [u32; 3] {
        match self {
            Ring::Level1 => [2, 4, 6],
            Ring::Level2 => [2, 4, 2],
        }
    }

    pub fn generator_names(self) -> [&'static str; 3] {
        match self {
            Ring::Level1 => ["E2", "E4", "E6"],
            Ring::Level2 => ["A", "B", "C"],
        }
    }

    fn generator_series(self) -> [SeriesName; 3] {
        match self {
            Ring::Level1 => [SeriesName::E(1), SeriesName::E(2), SeriesName::E(3)],
            Ring::Level2 => [SeriesName::EStar(1), SeriesName::EStar(2), SeriesName::C],
        }
    }
}

pub type Exponents = [u32; 3];

/// A polynomial in the three weighted generators of a [`Ring`].
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPoly {
    ring: Ring,
    terms: BTreeMap<Exponents, Rational>,
}

impl GradedPoly {
    pub fn zero(ring: Ring) -> Self {
        GradedPoly {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(ring: Ring, exps: Exponents, coeff: Rational) -> Self {
        let mut p = GradedPoly::zero(ring);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn constant(ring: Ring, c: Rational) -> Self {
        GradedPoly::monomial(ring, [0, 0, 0], c)
    }

    pub fn one(ring: Ring) -> Self {
        GradedPoly::constant(ring, Rational::one())
    }

    /// The `i`-th generator (0, 1 or 2).
    pub fn generator(ring: Ring, i: usize) -> Self {
        let mut exps = [0; 3];
        exps[i] = 1;
        GradedPoly::monomial(ring, exps, Rational::one())
    }

    pub fn a() -> Self {
        GradedPoly::generator(Ring::Level2, 0)
    }

    pub fn b() -> Self {
        GradedPoly::generator(Ring::Level2, 1)
    }

    pub fn c() -> Self {
        GradedPoly::generator(Ring::Level2, 2)
    }

    pub fn e2() -> Self {
        GradedPoly::generator(Ring::Level1, 0)
    }

    pub fn e4() -> Self {
        GradedPoly::generator(Ring::Level1, 1)
    }

    pub fn e6() -> Self {
        GradedPoly::generator(Ring::Level1, 2)
    }

    /// `D = -(B - C²)/64`.
    pub fn d() -> Self {
        (&GradedPoly::b() - &GradedPoly::c().pow(2)).scale(&rat(-1, 64))
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, Rational> {
        &self.terms
    }

    pub fn coeff(&self, exps: Exponents) -> Rational {
        self.terms
            .get(&exps)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomial_weight(&self, exps: Exponents) -> u32 {
        self.ring
            .weights()
            .iter()
            .zip(exps)
            .map(|(w, e)| w * e)
            .sum()
    }

    /// `Some(w)` when every monomial has weight `w`; the zero polynomial gives `None`.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(|&e| self.monomial_weight(e));
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, weight: u32) -> bool {
        self.terms
            .keys()
            .all(|&e| self.monomial_weight(e) == weight)
    }

    fn insert_add(&mut self, exps: Exponents, c: Rational) {
        let entry = self.terms.entry(exps).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn try_add(&self, other: &GradedPoly) -> Result<GradedPoly> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.insert_add(e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &GradedPoly) -> Result<GradedPoly> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut out = GradedPoly::zero(self.ring);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.insert_add([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, r: &Rational) -> GradedPoly {
        let mut out = GradedPoly::zero(self.ring);
        if !r.is_zero() {
            out.terms = self.terms.iter().map(|(&e, c)| (e, c * r)).collect();
        }
        out
    }

    pub fn pow(&self, e: u32) -> GradedPoly {
        (0..e).fold(GradedPoly::one(self.ring), |acc, _| &acc * self)
    }

    /// Applies the derivation with the given images of the three generators.
    fn derive(&self, images: &[GradedPoly; 3]) -> GradedPoly {
        let mut out = GradedPoly::zero(self.ring);
        for (&exps, c) in &self.terms {
            for (i, image) in images.iter().enumerate() {
                if exps[i] == 0 {
                    continue;
                }
                let mut rest = exps;
                rest[i] -= 1;
                let factor = GradedPoly::monomial(self.ring, rest, c * int(exps[i] as i64));
                for (&e, v) in &(&factor * image).terms {
                    out.insert_add(e, v.clone());
                }
            }
        }
        out
    }

    /// Every term has positive coefficient and a factor of `B`, and `A` does not occur.
    pub fn in_b_q_plus(&self) -> bool {
        self.ring == Ring::Level2
            && !self.is_zero()
            && self
                .terms
                .iter()
                .all(|(e, c)| e[0] == 0 && e[1] >= 1 && c.is_positive())
    }

    /// Every term has negative coefficient and a factor of `B`, and `A` does not occur.
    pub fn in_b_q_minus(&self) -> bool {
        self.ring == Ring::Level2
            && !self.is_zero()
            && self
                .terms
                .iter()
                .all(|(e, c)| e[0] == 0 && e[1] >= 1 && c.is_negative())
    }

    /// Sorted `(a, b, c, "p/q")` records.
    pub fn records(&self) -> Vec<(u32, u32, u32, String)> {
        self.terms
            .iter()
            .map(|(e, c)| (e[0], e[1], e[2], c.to_string()))
            .collect()
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.ring.generator_names();
        for (idx, (exps, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (name, &e) in names.iter().zip(exps) {
                match e {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl Add for &GradedPoly {
    type Output = GradedPoly;
    /// # Panics
    /// On a ring mismatch; use [`GradedPoly::try_add`] to handle it.
    fn add(self, rhs: &GradedPoly) -> GradedPoly {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: &GradedPoly) -> GradedPoly {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: &GradedPoly) -> GradedPoly {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        self.scale(&int(-1))
    }
}

/// Serre derivative on `Q[A, B, C]`: `δ_{2k} f = q f' - (2k/4) A f`, computed
/// from `δA = -(A² + B)/4`, `δB = -BC`, `δC = -B/2` and the Leibniz rule.
pub fn serre_delta(f: &GradedPoly, weight: u32) -> Result<GradedPoly> {
    if f.ring != Ring::Level2 {
        return Err(Error::RingMismatch);
    }
    if !f.is_homogeneous_of(weight) {
        return Err(Error::NotHomogeneous(weight));
    }
    let (a, b, c) = (GradedPoly::a(), GradedPoly::b(), GradedPoly::c());
    let images = [
        (&(&a * &a) + &b).scale(&rat(-1, 4)),
        -&(&b * &c),
        b.scale(&rat(-1, 2)),
    ];
    Ok(f.derive(&images))
}

/// Serre derivative on `Q[E2, E4, E6]`: `∂ f = q f' - (w/12) E2 f`, computed
/// from `∂E2 = -(E2² + E4)/12`, `∂E4 = -E6/3`, `∂E6 = -E4²/2`.
pub fn serre_partial(f: &GradedPoly, weight: u32) -> Result<GradedPoly> {
    if f.ring != Ring::Level1 {
        return Err(Error::RingMismatch);
    }
    if !f.is_homogeneous_of(weight) {
        return Err(Error::NotHomogeneous(weight));
    }
    let (e2, e4, e6) = (GradedPoly::e2(), GradedPoly::e4(), GradedPoly::e6());
    let images = [
        (&(&e2 * &e2) + &e4).scale(&rat(-1, 12)),
        e6.scale(&rat(-1, 3)),
        (&e4 * &e4).scale(&rat(-1, 2)),
    ];
    Ok(f.derive(&images))
}

/// Substitutes the generator q-expansions into `f`.
pub fn evaluate(f: &GradedPoly, catalog: &SeriesCatalog, order: usize) -> Result<QSeries> {
    let names = f.ring.generator_series();
    let mut powers: Vec<Vec<QSeries>> = Vec::with_capacity(3);
    for (i, name) in names.iter().enumerate() {
        let max_e = f.terms.keys().map(|e| e[i]).max().unwrap_or(0);
        let mut list = vec![QSeries::one(order)];
        if max_e > 0 {
            let g = catalog.get(*name, order)?;
            for _ in 0..max_e {
                let next = list.last().expect("non-empty") * &g;
                list.push(next);
            }
        }
        powers.push(list);
    }
    let mut acc = QSeries::zero(order);
    for (e, c) in &f.terms {
        let term =
            &(&powers[0][e[0] as usize] * &powers[1][e[1] as usize]) * &powers[2][e[2] as usize];
        acc = acc + term.scale(c);
    }
    Ok(acc)
}

/// Coordinates of a weight-`2k` form in the basis `B^j C^{k-2j}`, `j` descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisDecomposition {
    pub weight: u32,
    pub coefficients: Vec<Rational>,
}

/// `dim M_{2k} = ⌊2k/4⌋ + 1` for `k ≥ 1`.
pub fn modular_dimension(weight: u32) -> usize {
    (weight / 4) as usize + 1
}

/// Basis exponents `(0, j, k - 2j)` for `j = ⌊k/2⌋, ..., 0`.
pub fn modular_basis(weight: u32) -> Vec<Exponents> {
    let k = weight / 2;
    (0..=k / 2).rev().map(|j| [0, j, k - 2 * j]).collect()
}

impl BasisDecomposition {
    pub fn basis(&self) -> Vec<Exponents> {
        modular_basis(self.weight)
    }

    pub fn to_poly(&self) -> GradedPoly {
        let mut p = GradedPoly::zero(Ring::Level2);
        for (e, c) in self.basis().into_iter().zip(&self.coefficients) {
            p.insert_add(e, c.clone());
        }
        p
    }

    /// Reads off basis coordinates of a polynomial in `B` and `C` only.
    pub fn from_poly(f: &GradedPoly) -> Result<Self> {
        if f.ring != Ring::Level2 || f.terms.keys().any(|e| e[0] > 0) {
            return Err(Error::QuasiModular);
        }
        let weight = f
            .homogeneous_weight()
            .ok_or_else(|| Error::InvalidArgument("zero or inhomogeneous polynomial".into()))?;
        Ok(BasisDecomposition {
            weight,
            coefficients: modular_basis(weight)
                .into_iter()
                .map(|e| f.coeff(e))
                .collect(),
        })
    }
}

/// Writes `s ∈ M_{2k}` in the basis `B^j C^{k-2j}`.
///
/// Solves the square system on `q^0..q^{d-1}` (`d = dim M_{2k}`) and then
/// checks the result against every remaining coefficient of `s`.
pub fn decompose_modular(
    s: &QSeries,
    weight: u32,
    catalog: &SeriesCatalog,
) -> Result<BasisDecomposition> {
    if weight < 2 || !weight.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "weight {weight} is not a positive even integer"
        )));
    }
    let d = modular_dimension(weight);
    if s.order() < 2 * d {
        return Err(Error::InsufficientOrder {
            have: s.order(),
            need: 2 * d,
        });
    }
    let order = s.order();
    let basis: Vec<QSeries> = modular_basis(weight)
        .into_iter()
        .map(|e| {
            evaluate(
                &GradedPoly::monomial(Ring::Level2, e, Rational::one()),
                catalog,
                order,
            )
        })
        .collect::<Result<_>>()?;
    let matrix: Vec<Vec<Rational>> = (0..d)
        .map(|n| basis.iter().map(|b| b.coeff(n).clone()).collect())
        .collect();
    let rhs: Vec<Rational> = (0..d).map(|n| s.coeff(n).clone()).collect();
    let coefficients = linalg::solve(&matrix, &rhs)?;
    let recombined = basis
        .iter()
        .zip(&coefficients)
        .fold(QSeries::zero(order), |acc, (b, c)| acc + b.scale(c));
    if let Some(diff) = recombined.first_difference(s) {
        return Err(Error::ResidualMismatch(diff.n));
    }
    Ok(BasisDecomposition {
        weight,
        coefficients,
    })
}

/// Like [`decompose_modular`] for a polynomial; refuses anything involving `A` or `E2`.
pub fn decompose_poly(
    f: &GradedPoly,
    catalog: &SeriesCatalog,
    order: usize,
) -> Result<BasisDecomposition> {
    if f.ring != Ring::Level2 || f.terms.keys().any(|e| e[0] > 0) {
        return Err(Error::QuasiModular);
    }
    let weight = f
        .homogeneous_weight()
        .ok_or_else(|| Error::InvalidArgument("zero or inhomogeneous polynomial".into()))?;
    decompose_modular(&evaluate(f, catalog, order)?, weight, catalog)
}

/// `α_{2m} = (2m-2)/(π² λ(2m-2)) · (2m-1)/2 · λ(2m)`, a rational.
pub fn alpha(m: u32) -> Rational {
    let num = lambda_even(m);
    let den = &pi_squared() * &lambda_even(m - 1);
    num.ratio(&den).expect("equal pi powers") * rat((2 * m as i64 - 2) * (2 * m as i64 - 1), 2)
}

/// `(2m-2)/(π² λ(2m-2)) · λ(2k) λ(2m-2k)`, a rational.
pub fn ks_coefficient(m: u32, k: u32) -> Rational {
    let num = &lambda_even(k) * &lambda_even(m - k);
    let den = &pi_squared() * &lambda_even(m - 1);
    num.ratio(&den).expect("equal pi powers") * int(2 * m as i64 - 2)
}

/// `E*_4, E*_6, ..., E*_{2m_max}` as polynomials in `B, C` via
/// `E*_{2m} = (1/α_{2m}) [Σ_{k=2}^{m-2} c_k E*_{2k} E*_{2m-2k} - δ E*_{2m-2}]`.
///
/// Entry `i` of the result is `E*_{2(i+2)}`. Each `α_{2m}` is checked to be positive.
pub fn e_star_polys(m_max: u32) -> Result<Vec<GradedPoly>> {
    if m_max < 2 {
        return Err(Error::InvalidArgument(
            "E*_{2m} recursion starts at m = 2".into(),
        ));
    }
    let mut out = vec![GradedPoly::b()];
    for m in 3..=m_max {
        let get = |j: u32| &out[(j - 2) as usize];
        let mut acc = -&serre_delta(get(m - 1), 2 * m - 2)?;
        for k in 2..=m - 2 {
            acc = &acc + &(get(k) * get(m - k)).scale(&ks_coefficient(m, k));
        }
        let a = alpha(m);
        if !a.is_positive() {
            return Err(Error::NonPositiveAlpha(m));
        }
        out.push(acc.scale(&a.recip()));
    }
    Ok(out)
}

/// `E*_{2m}` as a polynomial in `B, C`, cross-checked against the
/// decomposition of its q-series.
pub fn e_star_poly(m: u32, catalog: &SeriesCatalog) -> Result<GradedPoly> {
    let poly = e_star_polys(m)?.pop().expect("non-empty");
    let weight = 2 * m;
    let order = 2 * modular_dimension(weight) + 8;
    let series = catalog.e_star(m, order)?;
    let from_series = decompose_modular(&series, weight, catalog)?;
    let from_poly = BasisDecomposition::from_poly(&poly)?;
    for (n, (x, y)) in from_poly
        .coefficients
        .iter()
        .zip(&from_series.coefficients)
        .enumerate()
    {
        if x != y {
            return Err(Error::CrossCheckMismatch {
                routes: format!("E*_{weight} recursion vs series decomposition (basis index)"),
                n,
                lhs: Box::new(x.clone()),
                rhs: Box::new(y.clone()),
            });
        }
    }
    Ok(poly)
}

/// `E*_{2m} ∈ B·Q+[B, C]` with every monomial of weight exactly `2m`.
pub fn check_positivity(m: u32, catalog: &SeriesCatalog) -> bool {
    match e_star_poly(m, catalog) {
        Ok(p) => p.in_b_q_plus() && p.is_homogeneous_of(2 * m),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> GradedPoly {
        GradedPoly::b()
    }
    fn c() -> GradedPoly {
        GradedPoly::c()
    }

    #[test]
    fn arithmetic() {
        let bc2 = &b() * &c().pow(2);
        assert_eq!(&bc2 + &GradedPoly::zero(Ring::Level2), bc2);
        let six_ac = &GradedPoly::a().scale(&int(3)) * &c().scale(&int(2));
        assert_eq!(
            six_ac,
            GradedPoly::monomial(Ring::Level2, [1, 0, 1], int(6))
        );
        assert_eq!(six_ac.homogeneous_weight(), Some(4));
        assert_eq!(b().try_add(&GradedPoly::e4()), Err(Error::RingMismatch));
        assert_eq!(b().try_mul(&GradedPoly::e4()), Err(Error::RingMismatch));
        assert!((&b() - &b()).is_zero());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(serre_delta(&c().pow(2), 4).unwrap(), -&(&b() * &c()));
        assert_eq!(
            serre_delta(&(&b() * &c()), 6).unwrap(),
            &(&b() * &b()).scale(&rat(-1, 2)) - &(&b() * &c().pow(2))
        );
        assert_eq!(
            serre_delta(&c().pow(3), 6).unwrap(),
            (&b() * &c().pow(2)).scale(&rat(-3, 2))
        );
        assert!(serre_delta(&GradedPoly::d(), 4).unwrap().is_zero());
        assert_eq!(serre_delta(&b(), 6), Err(Error::NotHomogeneous(6)));
        assert_eq!(serre_delta(&GradedPoly::e4(), 4), Err(Error::RingMismatch));
    }

    #[test]
    fn partial_examples() {
        let (e4, e6) = (GradedPoly::e4(), GradedPoly::e6());
        assert_eq!(serre_partial(&e4, 4).unwrap(), e6.scale(&rat(-1, 3)));
        assert_eq!(
            serre_partial(&e6, 6).unwrap(),
            (&e4 * &e4).scale(&rat(-1, 2))
        );
        let disc = &e4.pow(3) - &e6.pow(2);
        assert!(serre_partial(&disc, 12).unwrap().is_zero());
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha(3), int(1));
        for m in 3..=20 {
            assert!(alpha(m).is_positive());
        }
        // coefficient of E*2 E*_{2m-2} is (2m-2)/4 on each of the two end terms
        for m in 2..=12 {
            assert_eq!(ks_coefficient(m, 1) * int(2), rat(2 * m as i64 - 2, 4));
        }
    }

    #[test]
    fn e_star_polys_known() {
        let polys = e_star_polys(6).unwrap();
        assert_eq!(polys[0], b());
        assert_eq!(polys[1], &b() * &c());
        assert_eq!(
            polys[2],
            (&(&b() * &b()).scale(&int(9)) + &(&b() * &c().pow(2)).scale(&int(8)))
                .scale(&rat(1, 17))
        );
        let e10 = (&(&b().pow(2) * &c()).scale(&int(27)) + &(&b() * &c().pow(3)).scale(&int(4)))
            .scale(&rat(1, 31));
        assert_eq!(polys[3], e10);
        let e12 = [([0, 3, 0], 189), ([0, 2, 2], 486), ([0, 1, 4], 16)]
            .into_iter()
            .fold(GradedPoly::zero(Ring::Level2), |acc, (e, v)| {
                &acc + &GradedPoly::monomial(Ring::Level2, e, rat(v, 691))
            });
        assert_eq!(polys[4], e12);
        assert!(e_star_polys(1).is_err());
    }

    #[test]
    fn decompositions() {
        let cat = SeriesCatalog::new();
        let e8 = cat.e_star(4, 20).unwrap();
        let d = decompose_modular(&e8, 8, &cat).unwrap();
        assert_eq!(d.coefficients, vec![rat(9, 17), rat(8, 17), int(0)]);
        let e12 = cat.e_star(6, 20).unwrap();
        let d = decompose_modular(&e12, 12, &cat).unwrap();
        assert_eq!(
            d.coefficients,
            vec![rat(189, 691), rat(486, 691), rat(16, 691), int(0)]
        );
        let d = decompose_modular(&cat.e_star(2, 10).unwrap(), 4, &cat).unwrap();
        assert_eq!(d.coefficients, vec![int(1), int(0)]);
        assert_eq!(d.to_poly(), b());
    }

    #[test]
    fn decomposition_errors() {
        let cat = SeriesCatalog::new();
        // E2* is quasi-modular: its weight-2 fit (a multiple of C) fails beyond q^0
        let a = cat.e_star(1, 10).unwrap();
        assert!(matches!(
            decompose_modular(&a, 2, &cat),
            Err(Error::ResidualMismatch(_))
        ));
        assert_eq!(
            decompose_poly(&GradedPoly::a(), &cat, 10),
            Err(Error::QuasiModular)
        );
        assert_eq!(
            decompose_poly(&GradedPoly::e4(), &cat, 10),
            Err(Error::QuasiModular)
        );
        assert!(matches!(
            decompose_modular(&cat.e_star(4, 3).unwrap(), 8, &cat),
            Err(Error::InsufficientOrder { .. })
        ));
        let dd = decompose_poly(&GradedPoly::d(), &cat, 16).unwrap();
        assert_eq!(dd.coefficients, vec![rat(-1, 64), rat(1, 64)]);
    }

    #[test]
    fn positivity_small() {
        let cat = SeriesCatalog::new();
        for m in [2, 4, 6, 10] {
            assert!(check_positivity(m, &cat), "m={m}");
        }
        assert!(!GradedPoly::d().in_b_q_plus());
    }

    #[test]
    fn records_sorted() {
        let p = e_star_polys(4).unwrap().pop().unwrap();
        assert_eq!(
            p.records(),
            vec![(0, 1, 2, "8/17".to_string()), (0, 2, 0, "9/17".to_string())]
        );
        assert_eq!(p.to_string(), "9/17*B^2 + 8/17*B*C^2");
    }
}
