//! Divisor sums, Ramanujan's `τ`, and representation counts, each paired
//! with a direct brute-force route where one is cheap.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qseries::QSeries;
use crate::scalars::bernoulli;
use crate::series;
use crate::Rational;

/// Divisors of `n ≥ 1` in increasing order, by trial division.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0, "divisors of 0 are not finite");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn pow(d: u64, s: u32) -> BigInt {
    BigInt::from(d).pow(s)
}

fn half_weight(s: u32) -> u32 {
    assert!(
        s % 2 == 1,
        "divisor sums are defined here for odd s, got {s}"
    );
    s.div_ceil(2)
}

/// `σ_s(n) = Σ_{d|n} d^s` for odd `s`, with `σ_{2k-1}(0) = -B_{2k} / (4k)`.
pub fn sigma(s: u32, n: u64) -> Rational {
    let k = half_weight(s);
    if n == 0 {
        return -bernoulli(2 * k as usize) / Rational::from_integer(BigInt::from(4 * k));
    }
    Rational::from_integer(divisors(n).into_iter().map(|d| pow(d, s)).sum())
}

/// `σ*_s(n) = -Σ_{d|n} (-1)^d d^s` for odd `s`, with
/// `σ*_{2k-1}(0) = (-(1/(1-2^{2k})) · 4k/B_{2k})^{-1}`.
pub fn sigma_star(s: u32, n: u64) -> Rational {
    let k = half_weight(s);
    if n == 0 {
        return series::level2_factor(k).recip();
    }
    let total: BigInt = divisors(n)
        .into_iter()
        .map(|d| if d % 2 == 0 { -pow(d, s) } else { pow(d, s) })
        .sum();
    Rational::from_integer(total)
}

/// Sum of the odd divisors of `n ≥ 1`.
pub fn sigma_sharp(n: u64) -> Rational {
    assert!(n > 0, "σ# is defined for n ≥ 1");
    Rational::from_integer(
        divisors(n)
            .into_iter()
            .filter(|d| d % 2 == 1)
            .sum::<u64>()
            .into(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArithKind {
    Sigma(u32),
    SigmaStar(u32),
    SigmaSharp,
    Tau,
    R(u32),
    Delta8,
}

impl fmt::Display for ArithKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithKind::Sigma(s) => write!(f, "sigma{s}"),
            ArithKind::SigmaStar(s) => write!(f, "sigmastar{s}"),
            ArithKind::SigmaSharp => f.write_str("sigmasharp"),
            ArithKind::Tau => f.write_str("tau"),
            ArithKind::R(s) => write!(f, "r{s}"),
            ArithKind::Delta8 => f.write_str("delta8"),
        }
    }
}

/// Values of an arithmetic function at `n = 0..=N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArithTable {
    pub kind: ArithKind,
    pub values: Vec<Rational>,
}

impl ArithTable {
    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> &Rational {
        &self.values[n]
    }

    pub fn sigma(s: u32, max_n: usize) -> Self {
        ArithTable {
            kind: ArithKind::Sigma(s),
            values: (0..=max_n as u64).map(|n| sigma(s, n)).collect(),
        }
    }

    pub fn sigma_star(s: u32, max_n: usize) -> Self {
        ArithTable {
            kind: ArithKind::SigmaStar(s),
            values: (0..=max_n as u64).map(|n| sigma_star(s, n)).collect(),
        }
    }

    /// `σ#(0)` has no convention and is stored as 0.
    pub fn sigma_sharp(max_n: usize) -> Self {
        ArithTable {
            kind: ArithKind::SigmaSharp,
            values: (0..=max_n as u64)
                .map(|n| {
                    if n == 0 {
                        Rational::zero()
                    } else {
                        sigma_sharp(n)
                    }
                })
                .collect(),
        }
    }

    pub fn delta8(max_n: usize) -> Result<Self> {
        let d = series::series_d(max_n + 1)?;
        Ok(ArithTable {
            kind: ArithKind::Delta8,
            values: d.coeffs()[1..].to_vec(),
        })
    }

    pub fn as_series(&self) -> QSeries {
        QSeries::new(self.values.clone())
    }
}

/// `τ(0..=N)` from the eta product, cross-checked against `(E4³ - E6²)/1728`.
pub fn tau_table(max_n: usize) -> Result<ArithTable> {
    if max_n == 0 {
        return Err(Error::InvalidArgument("tau table needs N ≥ 1".into()));
    }
    let eta = series::delta_eta_product(max_n);
    let level1 = series::delta_from_level1(max_n);
    if let Some(d) = eta.first_difference(&level1) {
        return Err(Error::CrossCheckMismatch {
            routes: "eta product vs (E4^3 - E6^2)/1728".into(),
            n: d.n,
            lhs: Box::new(d.lhs),
            rhs: Box::new(d.rhs),
        });
    }
    Ok(ArithTable {
        kind: ArithKind::Tau,
        values: eta.into_coeffs(),
    })
}

/// `r_s(0..=N)` as the coefficients of `θ3^s`.
pub fn r_count(s: u32, max_n: usize) -> ArithTable {
    assert!(s >= 1, "r_s needs s ≥ 1");
    ArithTable {
        kind: ArithKind::R(s),
        values: series::theta3(max_n).pow(s).into_coeffs(),
    }
}

/// Ordered `s`-tuples drawn from `parts` (with multiplicity `weight(part)`)
/// summing to `n`, counted by recursion over the first coordinate.
fn count_tuples(
    slots: u32,
    n: u64,
    parts: &[(u64, u64)],
    memo: &mut HashMap<(u32, u64), BigInt>,
) -> BigInt {
    if slots == 0 {
        return if n == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if let Some(v) = memo.get(&(slots, n)) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for &(value, multiplicity) in parts.iter().take_while(|(v, _)| *v <= n) {
        total += count_tuples(slots - 1, n - value, parts, memo) * BigInt::from(multiplicity);
    }
    memo.insert((slots, n), total.clone());
    total
}

/// Number of `(m_1, ..., m_s) ∈ Z^s` with `m_1² + ... + m_s² = n`, by
/// enumerating each coordinate in turn. Touches no series code.
pub fn r_oracle(s: u32, n: u64) -> BigInt {
    // each square m² > 0 is hit by ±m
    let parts: Vec<(u64, u64)> = (0..)
        .map(|m: u64| (m * m, if m == 0 { 1 } else { 2 }))
        .take_while(|(sq, _)| *sq <= n)
        .collect();
    count_tuples(s, n, &parts, &mut HashMap::new())
}

/// Number of ordered 8-tuples of triangular numbers `0, 1, 3, 6, ...` summing to `n`.
pub fn delta8_oracle(n: u64) -> u64 {
    let parts: Vec<(u64, u64)> = (0..)
        .map(|m: u64| (m * (m + 1) / 2, 1))
        .take_while(|(t, _)| *t <= n)
        .collect();
    u64::try_from(count_tuples(8, n, &parts, &mut HashMap::new())).expect("fits in u64")
}
