//! Named q-series: `E_{2k}`, `E*_{2k}`, `Δ`, `θ3`, `C = E*6/E*4` and
//! `D = -(B - C²)/64`, plus a memoizing [`SeriesCatalog`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{delta8_oracle, sigma, sigma_sharp, sigma_star};
use crate::error::{Error, Result};
use crate::qseries::QSeries;
use crate::scalars::{bernoulli, int, rat};
use crate::Rational;

/// `-4k / B_{2k}`, the coefficient of `Σ σ_{2k-1}(n) q^n` in `E_{2k}`.
pub fn level1_factor(k: u32) -> Rational {
    assert!(k >= 1);
    -int(4 * k as i64) / bernoulli(2 * k as usize)
}

/// `-(1/(1 - 2^{2k})) · 4k / B_{2k}`, the coefficient of `Σ σ*_{2k-1}(n) q^n` in `E*_{2k}`.
pub fn level2_factor(k: u32) -> Rational {
    assert!(k >= 1);
    let denom = Rational::one() - Rational::from_integer(BigInt::from(4).pow(k));
    -(int(4 * k as i64) / bernoulli(2 * k as usize)) / denom
}

fn normalized(factor: Rational, order: usize, mut coeff: impl FnMut(u64) -> Rational) -> QSeries {
    QSeries::from_fn(order, |n| {
        if n == 0 {
            Rational::one()
        } else {
            &factor * coeff(n as u64)
        }
    })
}

/// `E_{2k} = 1 - (4k/B_{2k}) Σ σ_{2k-1}(n) q^n`; `E_0 = 1`.
pub fn eisenstein_level1(k: u32, order: usize) -> QSeries {
    if k == 0 {
        return QSeries::one(order);
    }
    normalized(level1_factor(k), order, |n| sigma(2 * k - 1, n))
}

/// `E*_{2k} = 1 + level2_factor(k) Σ σ*_{2k-1}(n) q^n`; `E*_0 = 1`.
pub fn eisenstein_level2(k: u32, order: usize) -> QSeries {
    if k == 0 {
        return QSeries::one(order);
    }
    normalized(level2_factor(k), order, |n| sigma_star(2 * k - 1, n))
}

/// `Δ = q Π_{n≥1} (1 - q^n)^24`, multiplying in one sparse factor `(1 - q^n)` at a time.
pub fn delta_eta_product(order: usize) -> QSeries {
    // product coefficients for q^0..q^{order-1}, shifted by q at the end
    let len = order;
    let mut prod = vec![BigInt::zero(); len];
    if len > 0 {
        prod[0] = BigInt::one();
    }
    for n in 1..len {
        for _ in 0..24 {
            for i in (n..len).rev() {
                let (lo, hi) = prod.split_at_mut(i);
                hi[0] -= &lo[i - n];
            }
        }
    }
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Rational::zero());
    coeffs.extend(prod.into_iter().map(Rational::from_integer));
    QSeries::new(coeffs)
}

/// `(E4³ - E6²) / 1728`.
pub fn delta_from_level1(order: usize) -> QSeries {
    let e4 = eisenstein_level1(2, order);
    let e6 = eisenstein_level1(3, order);
    (e4.pow(3) - e6.pow(2)).scale(&rat(1, 1728))
}

/// `-(E*4³ - E*6²) / 64`.
pub fn delta_from_level2(order: usize) -> QSeries {
    let b = eisenstein_level2(2, order);
    let e6 = eisenstein_level2(3, order);
    (b.pow(3) - e6.pow(2)).scale(&rat(-1, 64))
}

fn cross_check(routes: &str, lhs: &QSeries, rhs: &QSeries) -> Result<()> {
    match lhs.first_difference(rhs) {
        None => Ok(()),
        Some(d) => Err(Error::CrossCheckMismatch {
            routes: routes.to_string(),
            n: d.n,
            lhs: Box::new(d.lhs),
            rhs: Box::new(d.rhs),
        }),
    }
}

/// `Δ` computed by the eta product, from level 1 and from level 2; all three must agree.
pub fn discriminant(order: usize) -> Result<QSeries> {
    if order == 0 {
        return Err(Error::InvalidArgument("discriminant needs N ≥ 1".into()));
    }
    let eta = delta_eta_product(order);
    cross_check(
        "eta product vs (E4^3 - E6^2)/1728",
        &eta,
        &delta_from_level1(order),
    )?;
    cross_check(
        "eta product vs -(E4*^3 - E6*^2)/64",
        &eta,
        &delta_from_level2(order),
    )?;
    Ok(eta)
}

/// `θ3 = Σ_{m∈Z} q^{m²}`.
pub fn theta3(order: usize) -> QSeries {
    let mut s = QSeries::zero(order).into_coeffs();
    s[0] = Rational::one();
    let mut m = 1usize;
    while m * m <= order {
        s[m * m] = int(2);
        m += 1;
    }
    QSeries::new(s)
}

fn sharp_series(order: usize) -> QSeries {
    normalized(int(24), order, sigma_sharp)
}

/// `C = E*6 / E*4`, checked against `1 + 24 Σ σ#(n) q^n`.
pub fn series_c(order: usize) -> Result<QSeries> {
    let c = eisenstein_level2(3, order).checked_div(&eisenstein_level2(2, order))?;
    cross_check("E6*/E4* vs 1 + 24 sum sigma#", &c, &sharp_series(order))?;
    Ok(c)
}

/// Largest `n` for which [`series_d`] compares against the triangular-number oracle.
pub const DELTA8_ORACLE_LIMIT: usize = 50;

fn d_from(b: &QSeries, c: &QSeries) -> QSeries {
    (b - &(c * c)).scale(&rat(-1, 64))
}

fn check_d_against_oracle(d: &QSeries) -> Result<()> {
    if !d.coeff(0).is_zero() {
        return Err(Error::CrossCheckMismatch {
            routes: "D constant term".into(),
            n: 0,
            lhs: Box::new(d.coeff(0).clone()),
            rhs: Box::new(Rational::zero()),
        });
    }
    let upto = DELTA8_ORACLE_LIMIT.min(d.order().saturating_sub(1));
    for n in 0..=upto {
        if n + 1 > d.order() {
            break;
        }
        let oracle = Rational::from_integer(BigInt::from(delta8_oracle(n as u64)));
        if d.coeff(n + 1) != &oracle {
            return Err(Error::CrossCheckMismatch {
                routes: "D vs delta8 enumeration".into(),
                n: n + 1,
                lhs: Box::new(d.coeff(n + 1).clone()),
                rhs: Box::new(oracle),
            });
        }
    }
    Ok(())
}

/// `D = -(B - C²)/64 = q Σ δ8(n) q^n`, checked against direct enumeration for `n ≤ 50`.
pub fn series_d(order: usize) -> Result<QSeries> {
    let d = d_from(&eisenstein_level2(2, order), &series_c(order)?);
    check_d_against_oracle(&d)?;
    Ok(d)
}

/// Names of the series held by a [`SeriesCatalog`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesName {
    /// `E_{2k}`, indexed by `k`.
    E(u32),
    /// `E*_{2k}`, indexed by `k`.
    EStar(u32),
    Delta,
    Theta3,
    C,
    D,
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesName::E(k) => write!(f, "E{}", 2 * k),
            SeriesName::EStar(k) => write!(f, "E{}star", 2 * k),
            SeriesName::Delta => f.write_str("Delta"),
            SeriesName::Theta3 => f.write_str("theta3"),
            SeriesName::C => f.write_str("C"),
            SeriesName::D => f.write_str("D"),
        }
    }
}

impl FromStr for SeriesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownName(s.to_string());
        match s {
            "Delta" | "delta" => return Ok(SeriesName::Delta),
            "theta3" => return Ok(SeriesName::Theta3),
            "C" => return Ok(SeriesName::C),
            "D" => return Ok(SeriesName::D),
            "A" => return Ok(SeriesName::EStar(1)),
            "B" => return Ok(SeriesName::EStar(2)),
            _ => {}
        }
        let rest = s.strip_prefix('E').ok_or_else(unknown)?;
        let (digits, star) = match rest.strip_suffix("star") {
            Some(d) => (d, true),
            None => (rest, false),
        };
        let weight: u32 = digits.parse().map_err(|_| unknown())?;
        if !weight.is_multiple_of(2) {
            return Err(unknown());
        }
        Ok(if star {
            SeriesName::EStar(weight / 2)
        } else {
            SeriesName::E(weight / 2)
        })
    }
}

/// Which divisor sum a [`Fault`] perturbs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaKind {
    Classical,
    Signed,
}

/// A deliberate perturbation `σ_s(n) += delta`, used to confirm that the
/// checks localize errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fault {
    pub kind: SigmaKind,
    pub s: u32,
    pub n: u64,
    pub delta: Rational,
}

/// Memoized series keyed by name. A request at a lower order truncates the
/// stored series; a higher order recomputes and replaces it.
#[derive(Debug, Default)]
pub struct SeriesCatalog {
    memo: Mutex<HashMap<SeriesName, QSeries>>,
    fault: Option<Fault>,
}

impl SeriesCatalog {
    pub fn new() -> Self {
        SeriesCatalog::default()
    }

    pub fn with_fault(fault: Fault) -> Self {
        SeriesCatalog {
            memo: Mutex::default(),
            fault: Some(fault),
        }
    }

    fn perturb(&self, kind: SigmaKind, s: u32, n: u64, value: Rational) -> Rational {
        match &self.fault {
            Some(f) if f.kind == kind && f.s == s && f.n == n => value + &f.delta,
            _ => value,
        }
    }

    pub fn sigma(&self, s: u32, n: u64) -> Rational {
        self.perturb(SigmaKind::Classical, s, n, sigma(s, n))
    }

    pub fn sigma_star(&self, s: u32, n: u64) -> Rational {
        self.perturb(SigmaKind::Signed, s, n, sigma_star(s, n))
    }

    pub fn get(&self, name: SeriesName, order: usize) -> Result<QSeries> {
        if let Some(s) = self.memo.lock().expect("catalog lock").get(&name) {
            if s.order() >= order {
                return Ok(s.truncate(order));
            }
        }
        let built = self.build(name, order)?;
        self.memo
            .lock()
            .expect("catalog lock")
            .entry(name)
            .and_modify(|s| {
                if s.order() < built.order() {
                    *s = built.clone();
                }
            })
            .or_insert_with(|| built.clone());
        Ok(built)
    }

    fn build(&self, name: SeriesName, order: usize) -> Result<QSeries> {
        Ok(match name {
            SeriesName::E(0) | SeriesName::EStar(0) => QSeries::one(order),
            SeriesName::E(k) => normalized(level1_factor(k), order, |n| self.sigma(2 * k - 1, n)),
            SeriesName::EStar(k) => {
                normalized(level2_factor(k), order, |n| self.sigma_star(2 * k - 1, n))
            }
            SeriesName::Theta3 => theta3(order),
            SeriesName::Delta => {
                if order == 0 {
                    return Err(Error::InvalidArgument("discriminant needs N ≥ 1".into()));
                }
                let eta = delta_eta_product(order);
                let e4 = self.e(2, order)?;
                let e6 = self.e(3, order)?;
                let level1 = (e4.pow(3) - e6.pow(2)).scale(&rat(1, 1728));
                cross_check("eta product vs (E4^3 - E6^2)/1728", &eta, &level1)?;
                let b = self.e_star(2, order)?;
                let e6s = self.e_star(3, order)?;
                let level2 = (b.pow(3) - e6s.pow(2)).scale(&rat(-1, 64));
                cross_check("eta product vs -(E4*^3 - E6*^2)/64", &eta, &level2)?;
                eta
            }
            SeriesName::C => {
                let c = self
                    .e_star(3, order)?
                    .checked_div(&self.e_star(2, order)?)?;
                cross_check("E6*/E4* vs 1 + 24 sum sigma#", &c, &sharp_series(order))?;
                c
            }
            SeriesName::D => {
                let d = d_from(&self.e_star(2, order)?, &self.c(order)?);
                check_d_against_oracle(&d)?;
                d
            }
        })
    }

    pub fn e(&self, k: u32, order: usize) -> Result<QSeries> {
        self.get(SeriesName::E(k), order)
    }

    pub fn e_star(&self, k: u32, order: usize) -> Result<QSeries> {
        self.get(SeriesName::EStar(k), order)
    }

    pub fn delta(&self, order: usize) -> Result<QSeries> {
        self.get(SeriesName::Delta, order)
    }

    pub fn theta3(&self, order: usize) -> Result<QSeries> {
        self.get(SeriesName::Theta3, order)
    }

    pub fn c(&self, order: usize) -> Result<QSeries> {
        self.get(SeriesName::C, order)
    }

    pub fn d(&self, order: usize) -> Result<QSeries> {
        self.get(SeriesName::D, order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries, upto: usize) -> Vec<Rational> {
        s.coeffs()[..=upto].to_vec()
    }

    #[test]
    fn normalization_constants() {
        let level1 = [(1, -24), (2, 240), (3, -504), (4, 480), (5, -264)];
        for (k, v) in level1 {
            assert_eq!(level1_factor(k), int(v), "k={k}");
        }
        assert_eq!(level1_factor(6), rat(65520, 691));
        assert_eq!(level1_factor(7), int(-24));
        let level2 = [
            rat(8, 1),
            rat(-16, 1),
            rat(8, 1),
            rat(-32, 17),
            rat(8, 31),
            rat(-16, 691),
        ];
        for (k, v) in (1..=6).zip(level2) {
            assert_eq!(level2_factor(k), v, "k={k}");
        }
    }

    #[test]
    fn level1_leading_terms() {
        assert_eq!(
            ints(&eisenstein_level1(1, 3), 3),
            vec![int(1), int(-24), int(-72), int(-96)]
        );
        assert_eq!(eisenstein_level1(4, 2).coeff(1), &int(480));
        assert_eq!(eisenstein_level1(5, 2).coeff(1), &int(-264));
    }

    #[test]
    fn level2_leading_terms() {
        assert_eq!(
            eisenstein_level2(1, 3).to_strings(),
            vec!["1", "8", "-8", "32"]
        );
        assert_eq!(eisenstein_level2(4, 2).coeff(1), &rat(-32, 17));
        assert_eq!(eisenstein_level2(0, 5), QSeries::one(5));
        for k in 1..=12 {
            assert_eq!(eisenstein_level2(k, 3).coeff(0), &int(1));
        }
    }

    #[test]
    fn discriminant_routes() {
        let d = discriminant(12).unwrap();
        assert_eq!(d.coeff(0), &int(0));
        assert_eq!(d.coeff(1), &int(1));
        assert_eq!(d.coeff(3), &int(252));
        assert!(discriminant(0).is_err());
    }

    #[test]
    fn theta3_squares() {
        assert_eq!(theta3(4).to_strings(), vec!["1", "2", "0", "0", "2"]);
    }

    #[test]
    fn c_and_d() {
        let c = series_c(10).unwrap();
        assert_eq!(
            (c.coeff(0), c.coeff(1), c.coeff(2)),
            (&int(1), &int(24), &int(24))
        );
        let d = series_d(60).unwrap();
        assert_eq!(
            (d.coeff(0), d.coeff(1), d.coeff(2)),
            (&int(0), &int(1), &int(8))
        );
    }

    #[test]
    fn names_parse_and_print() {
        for name in ["E2", "E12", "E4star", "E0star", "Delta", "theta3", "C", "D"] {
            assert_eq!(name.parse::<SeriesName>().unwrap().to_string(), name);
        }
        assert_eq!("B".parse::<SeriesName>().unwrap(), SeriesName::EStar(2));
        assert!("E3".parse::<SeriesName>().is_err());
        assert!("tau".parse::<SeriesName>().is_err());
    }

    #[test]
    fn catalog_memoizes_and_truncates() {
        let cat = SeriesCatalog::new();
        let big = cat.e_star(2, 20).unwrap();
        let small = cat.e_star(2, 5).unwrap();
        assert_eq!(small, big.truncate(5));
        assert_eq!(cat.e_star(2, 30).unwrap().order(), 30);
        assert_eq!(cat.delta(10).unwrap(), discriminant(10).unwrap());
        assert_eq!(cat.c(10).unwrap(), series_c(10).unwrap());
    }

    #[test]
    fn catalog_fault_changes_one_coefficient() {
        let cat = SeriesCatalog::with_fault(Fault {
            kind: SigmaKind::Signed,
            s: 3,
            n: 5,
            delta: int(1),
        });
        let clean = eisenstein_level2(2, 8);
        let d = cat.e_star(2, 8).unwrap().first_difference(&clean).unwrap();
        assert_eq!(d.n, 5);
        assert!(cat.c(8).is_err());
    }
}
