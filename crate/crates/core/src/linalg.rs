//! Exact square linear solves by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Solves `matrix · x = rhs` exactly.
///
/// Each augmented row is first cleared of denominators, then reduced with
/// Bareiss's integer-preserving update, taking the first nonzero entry in
/// the column as pivot.
pub fn solve(matrix: &[Vec<Rational>], rhs: &[Rational]) -> Result<Vec<Rational>> {
    let n = matrix.len();
    if n == 0 || rhs.len() != n || matrix.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument("solve needs a square system".into()));
    }
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let den = row
                .iter()
                .chain(std::iter::once(b))
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            row.iter()
                .chain(std::iter::once(b))
                .map(|c| c.numer() * (&den / c.denom()))
                .collect()
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..n)
            .find(|&i| !m[i][k].is_zero())
            .ok_or(Error::SingularSystem)?;
        m.swap(k, pivot);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }

    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(m[i][n].clone());
        for j in i + 1..n {
            acc -= Rational::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rational::from_integer(m[i][i].clone());
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, rat};

    /// Leibniz-formula determinant, independent of the elimination above.
    fn det(m: &[Vec<Rational>]) -> Rational {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.len();
        perms(n)
            .into_iter()
            .map(|p| {
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| p[i] > p[j])
                    .count();
                let prod = (0..n).fold(Rational::one(), |acc, i| acc * &m[i][p[i]]);
                if inversions % 2 == 0 {
                    prod
                } else {
                    -prod
                }
            })
            .sum()
    }

    fn cramer(m: &[Vec<Rational>], b: &[Rational]) -> Vec<Rational> {
        let d = det(m);
        (0..m.len())
            .map(|col| {
                let replaced: Vec<Vec<Rational>> = m
                    .iter()
                    .zip(b)
                    .map(|(row, bi)| {
                        let mut r = row.clone();
                        r[col] = bi.clone();
                        r
                    })
                    .collect();
                det(&replaced) / &d
            })
            .collect()
    }

    #[test]
    fn matches_cramer() {
        let m = vec![
            vec![int(0), int(2), rat(1, 3)],
            vec![int(1), int(-1), int(4)],
            vec![rat(5, 2), int(7), int(0)],
        ];
        let b = vec![int(1), rat(-2, 7), int(3)];
        assert_eq!(solve(&m, &b).unwrap(), cramer(&m, &b));
    }

    #[test]
    fn needs_pivot_swap() {
        let m = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(solve(&m, &[int(3), int(4)]).unwrap(), vec![int(4), int(3)]);
    }

    #[test]
    fn singular_is_reported() {
        let m = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(solve(&m, &[int(1), int(1)]), Err(Error::SingularSystem));
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn agrees_with_cramer(entries in proptest::collection::vec(-9i64..=9, 12)) {
            let m: Vec<Vec<Rational>> = entries[..9].chunks(3).map(|r| r.iter().map(|&v| int(v)).collect()).collect();
            let b: Vec<Rational> = entries[9..].iter().map(|&v| int(v)).collect();
            if det(&m).is_zero() {
                prop_assert_eq!(solve(&m, &b), Err(Error::SingularSystem));
            } else {
                prop_assert_eq!(solve(&m, &b).unwrap(), cramer(&m, &b));
            }
        }
    }
}
