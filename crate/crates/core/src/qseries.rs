//! Truncated power series in `q` with exact rational coefficients.
//!
//! A [`QSeries`] of order `N` stores `c_0, ..., c_N`. Binary operations
//! return a series of the smaller input order: nothing beyond the computed
//! precision is ever padded in.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

/// The first exponent at which two series disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub n: usize,
    #[serde(serialize_with = "crate::serialize_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "crate::serialize_rational")]
    pub rhs: Rational,
}

impl QSeries {
    /// Builds a series from `c_0..c_N`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series holds at least c_0");
        QSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        QSeries::new((0..=order).map(f).collect())
    }

    pub fn from_integers<I: Into<BigInt>>(coeffs: impl IntoIterator<Item = I>) -> Self {
        QSeries::new(
            coeffs
                .into_iter()
                .map(|c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero(order: usize) -> Self {
        QSeries::new(vec![Rational::zero(); order + 1])
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = QSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        QSeries::constant(Rational::one(), order)
    }

    /// `c · q^k`, truncated at `order`.
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = QSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Highest retained exponent.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `q^n`; zero past the order is *not* implied, so this panics there.
    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> QSeries {
        let order = order.min(self.order());
        QSeries::new(self.coeffs[..=order].to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, r: &Rational) -> QSeries {
        QSeries::new(self.coeffs.iter().map(|c| c * r).collect())
    }

    /// The operator `q d/dq`: `c_n ↦ n c_n`.
    pub fn theta(&self) -> QSeries {
        QSeries::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c * Rational::from_integer(BigInt::from(n)))
                .collect(),
        )
    }

    /// Substitutes `q ↦ -q`.
    pub fn neg_q(&self) -> QSeries {
        QSeries::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Multiplicative inverse up to the order, by the triangular recursion
    /// `b_0 = 1/a_0`, `b_n = -(1/a_0) Σ_{j=1}^{n} a_j b_{n-j}`.
    pub fn invert(&self) -> Result<QSeries> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv_a0 = a0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv_a0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for j in 1..=n {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[n - j];
                }
            }
            out.push(-acc * &inv_a0);
        }
        Ok(QSeries::new(out))
    }

    pub fn checked_div(&self, other: &QSeries) -> Result<QSeries> {
        Ok(self * &other.invert()?)
    }

    /// `self^e` by binary exponentiation; `a^0 = 1`.
    pub fn pow(&self, mut e: u32) -> QSeries {
        let mut result = QSeries::one(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// First exponent `n ≤ min order` where the series differ.
    pub fn first_difference(&self, other: &QSeries) -> Option<Discrepancy> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(n, (a, b))| Discrepancy {
                n,
                lhs: a.clone(),
                rhs: b.clone(),
            })
    }

    /// Exact equality on the common range of exponents.
    pub fn agrees_with(&self, other: &QSeries) -> bool {
        self.first_difference(other).is_none()
    }

    /// Coefficients rendered as `"p/q"`, or `"p"` when the denominator is one.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<QSeries> {
        if items.is_empty() {
            return Err(Error::InvalidArgument("empty coefficient list".into()));
        }
        items
            .iter()
            .map(|s| {
                s.as_ref()
                    .parse::<Rational>()
                    .map_err(|_| Error::InvalidArgument(format!("bad rational `{}`", s.as_ref())))
            })
            .collect::<Result<Vec<_>>>()
            .map(QSeries::new)
    }
}

/// Common denominator and integer numerators of a coefficient list.
fn integerize(coeffs: &[Rational]) -> (BigInt, Vec<BigInt>) {
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = coeffs
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (den, nums)
}

/// Truncated Cauchy product `c_n = Σ a_j b_{n-j}`.
fn cauchy(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().min(b.len());
    let (da, na) = integerize(&a[..len]);
    let (db, nb) = integerize(&b[..len]);
    let den = da * db;
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in na.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in nb[..len - i].iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out.into_iter()
        .map(|n| Rational::new(n, den.clone()))
        .collect()
}

impl Add for &QSeries {
    type Output = QSeries;

    fn add(self, rhs: &QSeries) -> QSeries {
        QSeries::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &QSeries {
    type Output = QSeries;

    fn sub(self, rhs: &QSeries) -> QSeries {
        QSeries::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Mul for &QSeries {
    type Output = QSeries;

    fn mul(self, rhs: &QSeries) -> QSeries {
        QSeries::new(cauchy(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &QSeries {
    type Output = QSeries;

    fn neg(self) -> QSeries {
        QSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QSeries> for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: &QSeries) -> QSeries {
                (&self).$m(rhs)
            }
        }
        impl $tr<QSeries> for &QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QSeries {
    type Output = QSeries;

    fn neg(self) -> QSeries {
        -&self
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})q")?,
                _ => write!(f, "({c})q^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// Determinant of a square matrix of series by cofactor expansion.
pub fn det(matrix: &[Vec<QSeries>]) -> Result<QSeries> {
    let n = matrix.len();
    if n == 0 || matrix.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidArgument(
            "determinant needs a non-empty square matrix".into(),
        ));
    }
    let order = matrix
        .iter()
        .flat_map(|row| row.iter().map(QSeries::order))
        .min()
        .expect("non-empty");
    Ok(cofactor(matrix, order))
}

fn cofactor(m: &[Vec<QSeries>], order: usize) -> QSeries {
    match m.len() {
        1 => m[0][0].truncate(order),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        n => {
            let mut acc = QSeries::zero(order);
            for col in 0..n {
                let minor: Vec<Vec<QSeries>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, s)| s.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * &cofactor(&minor, order);
                acc = if col % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, rat};

    fn s(c: &[i64]) -> QSeries {
        QSeries::from_integers(c.iter().copied())
    }

    #[test]
    fn add_and_identity() {
        assert_eq!(&s(&[1, 1, 0]) + &s(&[1, -1, 0]), s(&[2, 0, 0]));
        assert_eq!(&s(&[1, 8]) + &QSeries::zero(1), s(&[1, 8]));
        assert_eq!((&s(&[1, 2, 3]) + &s(&[1, 1])).order(), 1);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&s(&[1, 1, 0]) * &s(&[1, -1, 0]), s(&[1, 0, -1]));
        assert_eq!(&s(&[1, 8, -8]) * &QSeries::one(2), s(&[1, 8, -8]));
        let half = QSeries::new(vec![rat(1, 2), rat(1, 3)]);
        assert_eq!(&half * &half, QSeries::new(vec![rat(1, 4), rat(1, 3)]));
    }

    #[test]
    fn theta_scales_by_exponent() {
        assert!(QSeries::one(4).theta().is_zero());
        assert_eq!(s(&[1, 8, -8]).theta(), s(&[0, 8, -16]));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(QSeries::one(3).invert().unwrap(), QSeries::one(3));
        assert_eq!(s(&[1, -1, 0, 0, 0]).invert().unwrap(), s(&[1, 1, 1, 1, 1]));
        assert_eq!(s(&[0, 1]).invert(), Err(Error::ZeroConstantTerm));
        let a = QSeries::new(vec![rat(2, 3), int(5), rat(-1, 7)]);
        assert_eq!(&a * &a.invert().unwrap(), QSeries::one(2));
    }

    #[test]
    fn neg_q_and_pow() {
        assert_eq!(s(&[1, 1]).neg_q(), s(&[1, -1]));
        assert_eq!(s(&[1, 1, 0]).pow(0), QSeries::one(2));
        assert_eq!(s(&[1, 1, 0]).pow(2), s(&[1, 2, 1]));
        assert_eq!(s(&[1, 1, 0, 0]).pow(3), s(&[1, 3, 3, 1]));
    }

    #[test]
    fn determinants() {
        assert_eq!(det(&[vec![QSeries::one(3)]]).unwrap(), QSeries::one(3));
        let a = s(&[1, 2, 3]);
        let b = s(&[0, 1, 5]);
        let c = s(&[4, 0, 1]);
        let m = vec![
            vec![a.clone(), b.clone(), c.clone()],
            vec![b.clone(), c.clone(), a.clone()],
            vec![a.clone(), b.clone(), c.clone()],
        ];
        assert!(det(&m).unwrap().is_zero());
        assert!(det(&[vec![a.clone(), b.clone()]]).is_err());
    }

    #[test]
    fn discrepancy_reports_first_exponent() {
        let d = s(&[1, 2, 3, 4])
            .first_difference(&s(&[1, 2, 5, 0]))
            .unwrap();
        assert_eq!((d.n, d.lhs, d.rhs), (2, int(3), int(5)));
        assert!(s(&[1, 2]).agrees_with(&s(&[1, 2, 7])));
    }

    #[test]
    fn string_round_trip() {
        let a = QSeries::new(vec![int(1), rat(-17, 32), int(0)]);
        assert_eq!(a.to_strings(), vec!["1", "-17/32", "0"]);
        assert_eq!(QSeries::from_strings(&a.to_strings()).unwrap(), a);
        assert!(QSeries::from_strings(&["x"]).is_err());
    }
}
