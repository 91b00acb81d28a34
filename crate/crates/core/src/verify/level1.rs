//! Level-1 identities: Ramanujan's system, the Ramanujan–Shen family,
//! divisor-sum convolutions, `τ` formulas and Hankel minors of `E_{2k}`.

use num_integer::Integer;
use num_traits::Zero;

use super::{convolve, over_range, r, same, sigma_table, z, Ctx, Outcome, Scope, TheoremCheck};
use crate::arith::{divisors, is_prime};
use crate::error::Result;
use crate::qseries::{det, QSeries};
use crate::scalars::{check_scalar_recursion, pi_squared, zeta_even, ScalarKind};
use crate::series::delta_eta_product;
use crate::Rational;

pub(super) fn register(out: &mut Vec<TheoremCheck>) {
    out.push(TheoremCheck::new(
        "ZETA-REC",
        "zeta(2m) = 2/(2m+1) sum zeta(2k) zeta(2m-2k), 2 <= m <= mmax",
        Scope::Index,
        |ctx| Ok(scalar_recursion(ctx, ScalarKind::Zeta)),
    ));
    out.push(TheoremCheck::new(
        "RAM-DE",
        "Ramanujan's system for P, Q, R",
        Scope::Series,
        ramanujan_system,
    ));
    for m in 2..=12 {
        out.push(
            TheoremCheck::new(
                format!("RS-DE({m})"),
                format!("q E'_{} from zeta-weighted products of E_2k", 2 * m - 2),
                Scope::Series,
                ramanujan_shen,
            )
            .with_arg(m),
        );
    }
    out.push(TheoremCheck::new(
        "LEVEL1-POLY",
        "E8 = E4^2, E10 = E4 E6, 691 E12 = 441 E4^3 + 250 E6^2, E14 = E4^2 E6",
        Scope::Series,
        level1_relations,
    ));
    out.push(TheoremCheck::new(
        "SIGMA3-CLASSICAL",
        "sigma_3(n) = 6/5 (n sigma(n) + 2 sum sigma(j) sigma(n-j))",
        Scope::Range,
        sigma3_classical,
    ));
    out.push(TheoremCheck::new(
        "T7",
        "sigma_13(n) = 2730/691 (24 sum sigma(j) sigma_11(n-j) + n sigma_11(n))",
        Scope::Range,
        sigma13,
    ));
    out.push(TheoremCheck::new(
        "DIS",
        "Delta = (E4^3 - E6^2)/1728",
        Scope::Series,
        dis,
    ));
    out.push(TheoremCheck::new(
        "L4",
        "1728 Delta = 3 E6 qE4' - 2 E4 qE6'",
        Scope::Series,
        delta_from_derivatives,
    ));
    out.push(TheoremCheck::new(
        "T8",
        "tau(n) = 70 sum (2k - 3j) sigma_3(j) sigma_5(k)",
        Scope::Range,
        tau_level1,
    ));
    out.push(TheoremCheck::new(
        "C1",
        "tau(n) - n/12 (5 sigma_3(n) + 7 sigma_5(n)) is an integer divisible by 70",
        Scope::Range,
        tau_mod_70,
    ));
    out.push(TheoremCheck::new(
        "MINORS-L1",
        "2x2 minors with E0, E2 are multiples of qE'_2k",
        Scope::Series,
        minors_level1,
    ));
    out.push(TheoremCheck::new(
        "GARVAN",
        "det[E4 E6 E8; E6 E8 E10; E8 E10 E12] = -250/691 (1728 Delta)^2",
        Scope::Series,
        garvan,
    ));
    out.push(TheoremCheck::new(
        "TAU-PROPS",
        "Mordell multiplicativity and Hecke recursion, tau = sigma_11 mod 691, Deligne bound, tau(n) != 0",
        Scope::Table,
        tau_properties,
    ));
}

fn scalar_recursion(ctx: &Ctx, kind: ScalarKind) -> Outcome {
    for m in 2..=ctx.params.mmax {
        if !check_scalar_recursion(kind, m) {
            return Outcome::fail_at(
                m as usize,
                Rational::zero(),
                Rational::from_integer(1.into()),
            )
            .note(format!("{kind:?} recursion fails at m = {m}"));
        }
    }
    Outcome::pass()
}

fn ramanujan_system(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.params.order;
    let cat = ctx.catalog;
    let (p, q, rr) = (cat.e(1, n)?, cat.e(2, n)?, cat.e(3, n)?);
    Ok(Outcome::all([
        same(&p.theta(), &(&(&p * &p) - &q).scale(&r(1, 12))),
        same(&q.theta(), &(&(&p * &q) - &rr).scale(&r(1, 3))),
        same(&rr.theta(), &(&(&p * &rr) - &(&q * &q)).scale(&r(1, 2))),
    ]))
}

/// `(m-1)/(2π² ζ(2m-2)) · ζ(2k) ζ(2m-2k)`.
pub(super) fn rs_coefficient(m: u32, k: u32) -> Rational {
    let num = &zeta_even(k) * &zeta_even(m - k);
    let den = &pi_squared() * &zeta_even(m - 1);
    num.ratio(&den).expect("equal pi powers") * r(m as i64 - 1, 2)
}

fn ramanujan_shen(ctx: &Ctx) -> Result<Outcome> {
    let m = ctx.arg;
    let n = ctx.params.order;
    let cat = ctx.catalog;
    let e = |k: u32| cat.e(k, n);
    let lhs = e(m - 1)?.theta();
    let e2m = e(m)?;
    let mut rhs = QSeries::zero(n);
    for k in 1..m {
        let term = &(&e(k)? * &e(m - k)?) - &e2m;
        rhs = rhs + term.scale(&rs_coefficient(m, k));
    }
    let mut outcome = same(&lhs, &rhs);
    // displayed special cases
    let displayed = match m {
        2 => Some((&(&e(1)? * &e(1)?) - &e(2)?).scale(&r(1, 12))),
        3 => Some((&(&e(1)? * &e(2)?) - &e(3)?).scale(&r(1, 3))),
        4 => Some((&(&e(1)? * &e(3)?) - &e(4)?).scale(&r(1, 2))),
        5 => Some((&(&e(1)? * &e(4)?) - &e(5)?).scale(&r(2, 3))),
        7 => Some(&(&e(1)? * &e(6)?) - &e(7)?),
        _ => None,
    };
    if let Some(d) = displayed {
        outcome = outcome.and(same(&lhs, &d));
    }
    Ok(outcome)
}

fn level1_relations(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.params.order;
    let cat = ctx.catalog;
    let (e4, e6) = (cat.e(2, n)?, cat.e(3, n)?);
    Ok(Outcome::all([
        same(&cat.e(4, n)?, &(&e4 * &e4)),
        same(&cat.e(5, n)?, &(&e4 * &e6)),
        same(
            &cat.e(6, n)?.scale(&r(691, 1)),
            &(&e4.pow(3).scale(&r(441, 1)) + &e6.pow(2).scale(&r(250, 1))),
        ),
        same(&cat.e(7, n)?, &(&(&e4 * &e4) * &e6)),
    ]))
}

fn sigma3_classical(ctx: &Ctx) -> Result<Outcome> {
    let nmax = ctx.params.nmax;
    let s1 = sigma_table(ctx.catalog, 1, nmax);
    let s3 = sigma_table(ctx.catalog, 3, nmax);
    Ok(over_range(0..=nmax, |n| {
        let rhs = r(6, 5) * (z(n) * &s1[n] + r(2, 1) * convolve(&s1, &s1, n));
        (s3[n].clone(), rhs)
    }))
}

fn sigma13(ctx: &Ctx) -> Result<Outcome> {
    let nmax = ctx.params.nmax;
    let s1 = sigma_table(ctx.catalog, 1, nmax);
    let s11 = sigma_table(ctx.catalog, 11, nmax);
    let s13 = sigma_table(ctx.catalog, 13, nmax);
    Ok(over_range(0..=nmax, |n| {
        let rhs = r(2730, 691) * (r(24, 1) * convolve(&s1, &s11, n) + z(n) * &s11[n]);
        (s13[n].clone(), rhs)
    }))
}

fn dis(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.params.order;
    let (e4, e6) = (ctx.catalog.e(2, n)?, ctx.catalog.e(3, n)?);
    let level1 = (e4.pow(3) - e6.pow(2)).scale(&r(1, 1728));
    let hankel =
        det(&[vec![e4.clone(), e6.clone()], vec![e6, ctx.catalog.e(4, n)?]])?.scale(&r(1, 1728));
    let eta = delta_eta_product(n);
    Ok(same(&eta, &level1).and(same(&eta, &hankel)))
}

fn delta_from_derivatives(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.params.order;
    let (e4, e6) = (ctx.catalog.e(2, n)?, ctx.catalog.e(3, n)?);
    let lhs = ctx.catalog.delta(n)?.scale(&r(1728, 1));
    let rhs = &(&e6 * &e4.theta()).scale(&r(3, 1)) - &(&e4 * &e6.theta()).scale(&r(2, 1));
    Ok(same(&lhs, &rhs))
}

fn tau_level1(ctx: &Ctx) -> Result<Outcome> {
    let nmax = ctx.params.nmax;
    let tau = ctx.catalog.delta(nmax.max(1))?;
    let s3 = sigma_table(ctx.catalog, 3, nmax);
    let s5 = sigma_table(ctx.catalog, 5, nmax);
    Ok(over_range(0..=nmax, |n| {
        let sum: Rational = (0..=n)
            .map(|j| r(2 * (n - j) as i64 - 3 * j as i64, 1) * &s3[j] * &s5[n - j])
            .sum();
        (tau.coeff(n).clone(), r(70, 1) * sum)
    }))
}

fn tau_mod_70(ctx: &Ctx) -> Result<Outcome> {
    let nmax = ctx.params.nmax;
    let tau = ctx.catalog.delta(nmax.max(3))?;
    let s3 = sigma_table(ctx.catalog, 3, nmax.max(3));
    let s5 = sigma_table(ctx.catalog, 5, nmax.max(3));
    let diff = |n: usize| tau.coeff(n) - z(n) * r(1, 12) * (r(5, 1) * &s3[n] + r(7, 1) * &s5[n]);
    let seventy = num_bigint::BigInt::from(70);
    let mut outcome = Outcome::pass();
    // worked example: 252 - (1/4)(5·28 + 7·244) = -210
    let example = diff(3);
    if example != r(-210, 1) {
        outcome = Outcome::fail_at(3, example, r(-210, 1));
    } else {
        outcome = outcome.note("n=3: 252 - 1/4 (5*28 + 7*244) = -210 = 0 mod 70");
    }
    Ok(outcome.and(over_range(0..=nmax, |n| {
        let d = diff(n);
        let ok = d.is_integer() && d.to_integer().is_multiple_of(&seventy);
        if ok {
            (d.clone(), d)
        } else {
            (d, Rational::zero())
        }
    })))
}

fn minors_level1(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.params.order;
    let e = |k: u32| ctx.catalog.e(k, n);
    let minor = |a: u32, b: u32, c: u32, d: u32| -> Result<QSeries> {
        det(&[vec![e(a)?, e(b)?], vec![e(c)?, e(d)?]])
    };
    Ok(Outcome::all([
        same(&minor(0, 1, 1, 2)?, &e(1)?.theta().scale(&r(-12, 1))),
        same(&minor(0, 1, 2, 3)?, &e(2)?.theta().scale(&r(-3, 1))),
        same(&minor(1, 2, 2, 3)?, &e(3)?.theta().scale(&r(2, 1))),
        same(&minor(1, 3, 2, 4)?, &e(4)?.theta().scale(&r(3, 2))),
    ]))
}

fn garvan(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.params.order;
    let e = |k: u32| ctx.catalog.e(k, n);
    let m = vec![
        vec![e(2)?, e(3)?, e(4)?],
        vec![e(3)?, e(4)?, e(5)?],
        vec![e(4)?, e(5)?, e(6)?],
    ];
    let d1728 = ctx.catalog.delta(n)?.scale(&r(1728, 1));
    Ok(same(&det(&m)?, &(&d1728 * &d1728).scale(&r(-250, 691))))
}

fn tau_properties(ctx: &Ctx) -> Result<Outcome> {
    let big_n = ctx.params.table_max.max(2);
    let table = crate::arith::tau_table(big_n)?;
    let tau: Vec<num_bigint::BigInt> = table.values.iter().map(|v| v.to_integer()).collect();
    let t = |n: usize| Rational::from_integer(tau[n].clone());
    let mut outcome = Outcome::pass();

    // multiplicativity on coprime pairs
    outcome = outcome.and(over_range(1..=big_n, |n| {
        for d in divisors(n as u64) {
            let (a, b) = (d as usize, n / d as usize);
            if a > 1 && b > 1 && a.gcd(&b) == 1 {
                let prod = t(a) * t(b);
                if prod != t(n) {
                    return (t(n), prod);
                }
            }
        }
        (t(n), t(n))
    }));

    // τ(p^{k+1}) = τ(p) τ(p^k) - p^11 τ(p^{k-1})
    for p in (2..=big_n).filter(|&p| is_prime(p as u64)) {
        let p11 = Rational::from_integer(num_bigint::BigInt::from(p).pow(11));
        let mut prev = 1usize;
        let mut cur = p;
        while cur * p <= big_n {
            let next = cur * p;
            let rhs = t(p) * t(cur) - &p11 * t(prev);
            if t(next) != rhs {
                outcome = outcome.and(Outcome::fail_at(next, t(next), rhs));
                break;
            }
            prev = cur;
            cur = next;
        }
    }

    // τ(n) ≡ σ_11(n) mod 691
    let m691 = num_bigint::BigInt::from(691);
    outcome = outcome.and(over_range(1..=big_n, |n| {
        let s11 = ctx.catalog.sigma(11, n as u64).to_integer();
        let lhs = tau[n].mod_floor(&m691);
        let rhs = s11.mod_floor(&m691);
        (Rational::from_integer(lhs), Rational::from_integer(rhs))
    }));

    // τ(p)² ≤ 4 p^11 and τ(n) ≠ 0
    outcome = outcome.and(over_range(1..=big_n, |n| {
        if tau[n].is_zero() {
            // Lehmer: nonvanishing; reported as 0 vs a nonzero marker
            return (Rational::zero(), r(1, 1));
        }
        if is_prime(n as u64) {
            let lhs = &tau[n] * &tau[n];
            let bound = num_bigint::BigInt::from(4) * num_bigint::BigInt::from(n).pow(11);
            if lhs > bound {
                return (Rational::from_integer(lhs), Rational::from_integer(bound));
            }
        }
        (t(n), t(n))
    }));
    Ok(outcome)
}
