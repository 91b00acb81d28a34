//! Exact scalars: Bernoulli numbers and the even zeta values
//! `ζ(2k)` and `λ(2k) = (1 - 2^{-2k}) ζ(2k)`, kept as rational multiples of
//! `π^{2k}` so that every ratio used downstream reduces to a rational.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// `n / d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as an exact rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Binomial coefficient `C(n, k)` as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `B_0, ..., B_n` for the generating function `x / (e^x - 1)`.
///
/// Uses `Σ_{j=0}^{n} C(n+1, j) B_j = 0` for `n ≥ 1`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut table: Vec<Rational> = Vec::with_capacity(n + 1);
    table.push(Rational::one());
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            acc += b * Rational::from_integer(binomial(m as u64 + 1, j as u64));
        }
        table.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
    }
    table
}

pub fn bernoulli(n: usize) -> Rational {
    bernoulli_numbers(n).pop().expect("table is never empty")
}

/// A real number of the form `coeff · π^pi_power` with `pi_power` even.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiScaled {
    pub coeff: Rational,
    pub pi_power: u32,
}

impl PiScaled {
    pub fn new(coeff: Rational, pi_power: u32) -> Self {
        debug_assert!(pi_power.is_multiple_of(2), "pi power must be even");
        PiScaled { coeff, pi_power }
    }

    pub fn rational(coeff: Rational) -> Self {
        PiScaled { coeff, pi_power: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn scale(&self, r: &Rational) -> PiScaled {
        PiScaled::new(&self.coeff * r, self.pi_power)
    }

    /// Sum of two values sharing a pi power.
    pub fn checked_add(&self, other: &PiScaled) -> Result<PiScaled> {
        if self.pi_power != other.pi_power {
            return Err(Error::PiPowerMismatch(self.pi_power, other.pi_power));
        }
        Ok(PiScaled::new(&self.coeff + &other.coeff, self.pi_power))
    }

    /// `self / other` when both carry the same pi power.
    pub fn ratio(&self, other: &PiScaled) -> Result<Rational> {
        if self.pi_power != other.pi_power {
            return Err(Error::PiPowerMismatch(self.pi_power, other.pi_power));
        }
        if other.coeff.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&self.coeff / &other.coeff)
    }
}

impl Mul for &PiScaled {
    type Output = PiScaled;

    fn mul(self, rhs: &PiScaled) -> PiScaled {
        PiScaled::new(&self.coeff * &rhs.coeff, self.pi_power + rhs.pi_power)
    }
}

impl Mul for PiScaled {
    type Output = PiScaled;

    fn mul(self, rhs: PiScaled) -> PiScaled {
        &self * &rhs
    }
}

impl fmt::Display for PiScaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_power {
            0 => write!(f, "{}", self.coeff),
            p => write!(f, "{}·π^{}", self.coeff, p),
        }
    }
}

/// `π²` as a [`PiScaled`].
pub fn pi_squared() -> PiScaled {
    PiScaled::new(Rational::one(), 2)
}

/// `ζ(2k) = -(1/2) (2πi)^{2k} / (2k)! · B_{2k}` with `i^{2k}` folded into the sign.
pub fn zeta_even(k: u32) -> PiScaled {
    let n = 2 * k as usize;
    let b = bernoulli(n);
    let sign = if k.is_multiple_of(2) { -1 } else { 1 };
    let two_pow = Rational::from_integer(BigInt::from(2).pow(n as u32));
    let coeff = int(sign) * rat(1, 2) * two_pow * b / Rational::from_integer(factorial(n as u64));
    PiScaled::new(coeff, 2 * k)
}

/// `λ(2k) = (1 - 2^{-2k}) ζ(2k)`; note `λ(0) = 0`.
pub fn lambda_even(k: u32) -> PiScaled {
    let four_pow = Rational::from_integer(BigInt::from(4).pow(k));
    let factor = Rational::one() - four_pow.recip();
    zeta_even(k).scale(&factor)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarKind {
    Zeta,
    Lambda,
}

/// Checks the convolution recursion for `ζ(2m)` or `λ(2m)` exactly.
///
/// `ζ(2m) = 2/(2m+1) Σ_{k=1}^{m-1} ζ(2k) ζ(2m-2k)` and
/// `λ(2m) = 2/(2m-1) Σ_{k=1}^{m-1} λ(2k) λ(2m-2k)`, both for `m ≥ 2`.
pub fn check_scalar_recursion(kind: ScalarKind, m: u32) -> bool {
    if m < 2 {
        return false;
    }
    let (value, denom): (fn(u32) -> PiScaled, i64) = match kind {
        ScalarKind::Zeta => (zeta_even, 2 * m as i64 + 1),
        ScalarKind::Lambda => (lambda_even, 2 * m as i64 - 1),
    };
    let mut sum = PiScaled::new(Rational::zero(), 2 * m);
    for k in 1..m {
        sum = sum
            .checked_add(&(&value(k) * &value(m - k)))
            .expect("all terms carry pi^{2m}");
    }
    sum.scale(&rat(2, denom)) == value(m)
}

/// True when the value is strictly positive (the sign of its coefficient).
pub fn is_positive(x: &PiScaled) -> bool {
    x.coeff.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_known_values() {
        let b = bernoulli_numbers(14);
        let expected = [
            (0, rat(1, 1)),
            (1, rat(-1, 2)),
            (2, rat(1, 6)),
            (3, rat(0, 1)),
            (4, rat(-1, 30)),
            (6, rat(1, 42)),
            (8, rat(-1, 30)),
            (10, rat(5, 66)),
            (12, rat(-691, 2730)),
            (14, rat(7, 6)),
        ];
        for (n, v) in expected {
            assert_eq!(b[n], v, "B_{n}");
        }
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn bernoulli_odd_vanish_and_even_alternate() {
        let b = bernoulli_numbers(60);
        for n in (3..=60).step_by(2) {
            assert!(b[n].is_zero(), "B_{n}");
        }
        for k in 1..30 {
            assert_ne!(b[2 * k].is_positive(), b[2 * k + 2].is_positive());
        }
    }

    #[test]
    fn zeta_and_lambda_small() {
        assert_eq!(zeta_even(0), PiScaled::new(rat(-1, 2), 0));
        assert_eq!(zeta_even(1), PiScaled::new(rat(1, 6), 2));
        assert_eq!(zeta_even(2), PiScaled::new(rat(1, 90), 4));
        assert_eq!(zeta_even(3), PiScaled::new(rat(1, 945), 6));
        assert_eq!(lambda_even(0), PiScaled::new(rat(0, 1), 0));
        assert_eq!(lambda_even(1), PiScaled::new(rat(1, 8), 2));
        assert_eq!(lambda_even(2), PiScaled::new(rat(1, 96), 4));
    }

    #[test]
    fn lambda_over_zeta_ratio() {
        for k in 1..=20u32 {
            let r = lambda_even(k).ratio(&zeta_even(k)).unwrap();
            let expected = Rational::one() - Rational::from_integer(BigInt::from(4).pow(k)).recip();
            assert_eq!(r, expected);
            assert!(is_positive(&zeta_even(k)));
            assert!(is_positive(&lambda_even(k)));
        }
    }

    #[test]
    fn recursions_hold() {
        // (2/3) λ(2)^2 = (2/3)(1/64) π^4 = π^4 / 96 = λ(4)
        assert_eq!(
            (&lambda_even(1) * &lambda_even(1)).scale(&rat(2, 3)),
            lambda_even(2)
        );
        for m in 2..=20 {
            assert!(check_scalar_recursion(ScalarKind::Zeta, m), "zeta m={m}");
            assert!(
                check_scalar_recursion(ScalarKind::Lambda, m),
                "lambda m={m}"
            );
        }
        assert!(!check_scalar_recursion(ScalarKind::Zeta, 1));
    }

    #[test]
    fn ratio_requires_equal_powers() {
        assert_eq!(
            zeta_even(1).ratio(&zeta_even(2)),
            Err(Error::PiPowerMismatch(2, 4))
        );
        assert_eq!(
            zeta_even(1).ratio(&PiScaled::new(Rational::zero(), 2)),
            Err(Error::DivisionByZero)
        );
    }
}
