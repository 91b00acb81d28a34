//! Level-2 identities: the differential equations for `E*_{2k}`, the
//! `A, B, C` system and Serre derivative, `τ` via `σ*`, positivity of the
//! `B, C` expansions and determinants of `E*_{2k}`.

use num_integer::Integer;
use num_traits::Zero;

use super::{
    convolve, over_range, r, same, sigma_star_table, z, Ctx, Outcome, Scope, TheoremCheck,
};
use crate::error::Result;
use crate::graded::{
    check_positivity, e_star_polys, evaluate, ks_coefficient, modular_basis, serre_delta,
    GradedPoly, Ring,
};
use crate::qseries::{det, QSeries};
use crate::scalars::{check_scalar_recursion, ScalarKind};
use crate::series::delta_eta_product;
use crate::Rational;

pub(super) fn register(out: &mut Vec<TheoremCheck>) {
    out.push(TheoremCheck::new(
        "LAMBDA-REC",
        "lambda(2m) = 2/(2m-1) sum lambda(2k) lambda(2m-2k), 2 <= m <= mmax",
        Scope::Index,
        |ctx| {
            for m in 2..=ctx.params.mmax {
                if !check_scalar_recursion(ScalarKind::Lambda, m) {
                    return Ok(Outcome::fail_at(m as usize, Rational::zero(), r(1, 1)));
                }
            }
            Ok(Outcome::pass())
        },
    ));
    for m in 2..=12 {
        out.push(
            TheoremCheck::new(
                format!("KS-DE({m})"),
                format!("q E*'_{} from lambda-weighted products of E*_2k", 2 * m - 2),
                Scope::Series,
                level2_de,
            )
            .with_arg(m),
        );
    }
    out.push(TheoremCheck::new(
        "E6STAR-ABC",
        "q E*6' = 1/2 (3ABC - B^2 - 2BC^2)",
        Scope::Series,
        e6_star_abc,
    ));
    out.push(TheoremCheck::new(
        "HAHN-SYS",
        "qA' = (A^2 - B)/4, qC' = (AC - B)/2, qB' = AB - CB",
        Scope::Series,
        hahn_system,
    ));
    out.push(TheoremCheck::new(
        "E2-ABC",
        "E2 = 3A - 2C, E4 = -3B + 4C^2, E6 = 9BC - 8C^3",
        Scope::Series,
        level1_in_abc,
    ));
    out.push(TheoremCheck::new(
        "T5",
        "sigma*_3(n) = 2n sigma*(n) - 4 sum sigma*(j) sigma*(n-j)",
        Scope::Range,
        sigma_star3,
    ));
    out.push(TheoremCheck::new(
        "DELTA-L2",
        "Delta = -(E4*^3 - E6*^2)/64 and -64 Delta = 3 E6* qE4*' - 2 E4* qE6*'",
        Scope::Series,
        delta_level2,
    ));
    out.push(TheoremCheck::new(
        "T314",
        "tau(n) = 2 sum (3j - 2k) sigma*_3(j) sigma*_5(k)",
        Scope::Range,
        tau_level2,
    ));
    out.push(TheoremCheck::new(
        "C2",
        "tau(n) = n/4 (3 sigma*_3(n) + sigma*_5(n)) mod 2; tau(n) odd iff n(3 sigma*_3 + sigma*_5) = 4 mod 8",
        Scope::Range,
        tau_mod_2,
    ));
    out.push(TheoremCheck::new(
        "P4",
        "dA = -(A^2 + B)/4, dB = -BC, dC = -B/2 for the Serre derivative",
        Scope::Series,
        serre_system,
    ));
    out.push(TheoremCheck::new(
        "T49",
        "E*_2m lies in B Q+[B, C] for 2 <= m <= mmax",
        Scope::Index,
        positivity,
    ));
    out.push(TheoremCheck::new(
        "D-KERNEL",
        "D = -(B - C^2)/64 has dD = 0, qD' = AD and D = q sum delta8(n) q^n",
        Scope::Series,
        d_kernel,
    ));
    out.push(TheoremCheck::new(
        "DELTA-FAMILY",
        "d4 of E6*^2/E4*^2, E4*, E8*/E4*, E10*/E6*, E4 coincide",
        Scope::Series,
        delta_family,
    ));
    out.push(TheoremCheck::new(
        "L5",
        "det[E0* E4*; E4* E8*] = 512/17 B D",
        Scope::Series,
        e0_e8_determinant,
    ));
    out.push(TheoremCheck::new(
        "TB1-CUSP",
        "BD, BCD, B^2D, BD^2 are cusp forms and Delta = B^2 D",
        Scope::Series,
        cusp_bases,
    ));
    out.push(TheoremCheck::new(
        "DET-L2",
        "2x2 and 3x3 Hankel minors of E*_2k in terms of Delta",
        Scope::Series,
        determinants_level2,
    ));
}

fn level2_de(ctx: &Ctx) -> Result<Outcome> {
    let m = ctx.arg;
    let n = ctx.params.order;
    let e = |k: u32| ctx.catalog.e_star(k, n);
    let lhs = e(m - 1)?.theta();
    let e2m = e(m)?;
    let mut rhs = QSeries::zero(n);
    for k in 1..m {
        let term = &(&e(k)? * &e(m - k)?) - &e2m;
        rhs = rhs + term.scale(&ks_coefficient(m, k));
    }
    let mut outcome = same(&lhs, &rhs);
    let displayed = match m {
        2 => Some((&(&e(1)? * &e(1)?) - &e(2)?).scale(&r(1, 4))),
        3 => Some(&(&e(1)? * &e(2)?) - &e(3)?),
        4 => Some(
            (&(&(&e(1)? * &e(3)?).scale(&r(12, 1)) + &(&e(2)? * &e(2)?).scale(&r(5, 1)))
                - e(4)?.scale(&r(17, 1)))
            .scale(&r(1, 8)),
        ),
        5 => Some(
            (&(&(&e(1)? * &e(4)?).scale(&r(34, 1)) + &(&e(2)? * &e(3)?).scale(&r(28, 1)))
                - e(5)?.scale(&r(62, 1)))
            .scale(&r(1, 17)),
        ),
        _ => None,
    };
    if let Some(d) = displayed {
        outcome = outcome.and(same(&lhs, &d));
    }
    Ok(outcome)
}

fn abc(ctx: &Ctx, n: usize) -> Result<(QSeries, QSeries, QSeries)> {
    Ok((
        ctx.catalog.e_star(1, n)?,
        ctx.catalog.e_star(2, n)?,
        ctx.catalog.c(n)?,
    ))
}

fn e6_star_abc(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.params.order;
    let (a, b, c) = abc(ctx, n)?;
    let rhs = (&(&(&(&a * &b) * &c).scale(&r(3, 1)) - &(&b * &b))
        - (&b * &(&c * &c)).scale(&r(2, 1)))
    .scale(&r(1, 2));
    Ok(same(&ctx.catalog.e_star(3, n)?.theta(), &rhs))
}

fn hahn_system(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.params.order;
    let (a, b, c) = abc(ctx, n)?;
    Ok(Outcome::all([
        same(&a.theta(), &(&(&a * &a) - &b).scale(&r(1, 4))),
        same(&c.theta(), &(&(&a * &c) - &b).scale(&r(1, 2))),
        same(&b.theta(), &(&(&a * &b) - &(&c * &b))),
    ]))
}

fn level1_in_abc(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.params.order;
    let (a, b, c) = abc(ctx, n)?;
    let c2 = &c * &c;
    Ok(Outcome::all([
        same(
            &ctx.catalog.e(1, n)?,
            &(&a.scale(&r(3, 1)) - &c.scale(&r(2, 1))),
        ),
        same(
            &ctx.catalog.e(2, n)?,
            &(&b.scale(&r(-3, 1)) + &c2.scale(&r(4, 1))),
        ),
        same(
            &ctx.catalog.e(3, n)?,
            &(&(&b * &c).scale(&r(9, 1)) - &(&c2 * &c).scale(&r(8, 1))),
        ),
    ]))
}

fn sigma_star3(ctx: &Ctx) -> Result<Outcome> {
    let nmax = ctx.params.nmax;
    let s1 = sigma_star_table(ctx.catalog, 1, nmax);
    let s3 = sigma_star_table(ctx.catalog, 3, nmax);
    Ok(over_range(0..=nmax, |n| {
        let rhs = r(2, 1) * z(n) * &s1[n] - r(4, 1) * convolve(&s1, &s1, n);
        (s3[n].clone(), rhs)
    }))
}

fn delta_level2(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.params.order;
    let (b, e6) = (ctx.catalog.e_star(2, n)?, ctx.catalog.e_star(3, n)?);
    let eta = delta_eta_product(n);
    let cubic = (b.pow(3) - e6.pow(2)).scale(&r(-1, 64));
    let differential = (&(&e6 * &b.theta()).scale(&r(3, 1)) - &(&b * &e6.theta()).scale(&r(2, 1)))
        .scale(&r(-1, 64));
    Ok(same(&eta, &cubic).and(same(&eta, &differential)))
}

fn tau_level2(ctx: &Ctx) -> Result<Outcome> {
    let nmax = ctx.params.nmax;
    let tau = ctx.catalog.delta(nmax.max(1))?;
    let s3 = sigma_star_table(ctx.catalog, 3, nmax);
    let s5 = sigma_star_table(ctx.catalog, 5, nmax);
    Ok(over_range(0..=nmax, |n| {
        let sum: Rational = (0..=n)
            .map(|j| r(3 * j as i64 - 2 * (n - j) as i64, 1) * &s3[j] * &s5[n - j])
            .sum();
        (tau.coeff(n).clone(), r(2, 1) * sum)
    }))
}

fn tau_mod_2(ctx: &Ctx) -> Result<Outcome> {
    let nmax = ctx.params.nmax;
    let tau = ctx.catalog.delta(nmax.max(1))?;
    let s3 = sigma_star_table(ctx.catalog, 3, nmax);
    let s5 = sigma_star_table(ctx.catalog, 5, nmax);
    let two = num_bigint::BigInt::from(2);
    let eight = num_bigint::BigInt::from(8);
    Ok(over_range(1..=nmax, |n| {
        let inner = r(3, 1) * &s3[n] + &s5[n];
        let diff = tau.coeff(n) - z(n) * r(1, 4) * &inner;
        if !(diff.is_integer() && diff.to_integer().is_multiple_of(&two)) {
            return (diff, Rational::zero());
        }
        let scaled = z(n) * &inner;
        let tau_odd = tau.coeff(n).to_integer().is_odd();
        let four_mod_8 = scaled.is_integer() && scaled.to_integer().mod_floor(&eight) == 4.into();
        if tau_odd != four_mod_8 {
            return (tau.coeff(n).clone(), scaled);
        }
        (diff.clone(), diff)
    }))
}

fn serre_system(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.params.order;
    let (a, b, c) = abc(ctx, n)?;
    let (pa, pb, pc) = (GradedPoly::a(), GradedPoly::b(), GradedPoly::c());
    // polynomial level
    let mut outcome = Outcome::pass();
    let expected = [
        (&pa, 2, (&(&pa * &pa) + &pb).scale(&r(-1, 4))),
        (&pb, 4, -&(&pb * &pc)),
        (&pc, 2, pb.scale(&r(-1, 2))),
        (&pc.pow(2), 4, -&(&pb * &pc)),
        (
            &(&pb * &pc),
            6,
            &(&pb * &pb).scale(&r(-1, 2)) - &(&pb * &pc.pow(2)),
        ),
        (&pc.pow(3), 6, (&pb * &pc.pow(2)).scale(&r(-3, 2))),
    ];
    for (idx, (f, w, want)) in expected.iter().enumerate() {
        let got = serre_delta(f, *w)?;
        if &got != want {
            outcome = outcome
                .and(Outcome::fail_at(idx, Rational::zero(), r(1, 1)))
                .note(format!("delta({f}) = {got}, expected {want}"));
        }
    }
    // series level: q g' - (w/4) A g equals the evaluated rule
    for (g, w, poly) in [(&a, 2, &pa), (&b, 4, &pb), (&c, 2, &pc)] {
        let lhs = &g.theta() - &(&a * g).scale(&r(w, 4));
        let rhs = evaluate(&serre_delta(poly, w as u32)?, ctx.catalog, n)?;
        outcome = outcome.and(same(&lhs, &rhs));
    }
    Ok(outcome)
}

fn positivity(ctx: &Ctx) -> Result<Outcome> {
    let mmax = ctx.params.mmax.max(6);
    let polys = e_star_polys(mmax)?;
    let mut outcome = Outcome::pass();
    // known expansions of E*8, E*10, E*12
    let (b, c) = (GradedPoly::b(), GradedPoly::c());
    let known = [
        (
            4u32,
            (&(&b * &b).scale(&r(9, 1)) + &(&b * &c.pow(2)).scale(&r(8, 1))).scale(&r(1, 17)),
        ),
        (
            5,
            (&(&b.pow(2) * &c).scale(&r(27, 1)) + &(&b * &c.pow(3)).scale(&r(4, 1)))
                .scale(&r(1, 31)),
        ),
        (
            6,
            (&(&b.pow(3).scale(&r(189, 1)) + &(&b.pow(2) * &c.pow(2)).scale(&r(486, 1)))
                + &(&b * &c.pow(4)).scale(&r(16, 1)))
                .scale(&r(1, 691)),
        ),
    ];
    for (m, want) in known {
        if polys[(m - 2) as usize] != want {
            outcome = outcome
                .and(Outcome::fail_at(m as usize, Rational::zero(), r(1, 1)))
                .note(format!(
                    "E*_{} = {}, expected {}",
                    2 * m,
                    polys[(m - 2) as usize],
                    want
                ));
        }
    }
    for m in 2..=ctx.params.mmax {
        if !check_positivity(m, ctx.catalog) {
            outcome = outcome
                .and(Outcome::fail_at(m as usize, Rational::zero(), r(1, 1)))
                .note(format!(
                    "E*_{} = {} is not in B Q+[B, C]",
                    2 * m,
                    polys[(m - 2) as usize]
                ));
        }
    }
    // δ(B^j C^{k-2j}) ∈ B Q-[B, C] for every basis monomial, k ≤ 10
    for k in 1..=10u32 {
        for e in modular_basis(2 * k) {
            let d = serre_delta(&GradedPoly::monomial(Ring::Level2, e, r(1, 1)), 2 * k)?;
            if !d.in_b_q_minus() {
                outcome = outcome
                    .and(Outcome::fail_at(k as usize, Rational::zero(), r(1, 1)))
                    .note(format!("delta(B^{} C^{}) = {d}", e[1], e[2]));
            }
        }
    }
    Ok(outcome)
}

fn d_kernel(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.params.order;
    let d = ctx.catalog.d(n)?;
    let a = ctx.catalog.e_star(1, n)?;
    let mut outcome = same(&d.theta(), &(&a * &d));
    let dd = serre_delta(&GradedPoly::d(), 4)?;
    if !dd.is_zero() {
        outcome = outcome
            .and(Outcome::fail_at(0, Rational::zero(), r(1, 1)))
            .note(format!("delta D = {dd}"));
    }
    Ok(outcome)
}

fn delta_family(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.params.order;
    let e = |k: u32| ctx.catalog.e_star(k, n);
    let a = e(1)?;
    let d4 = |s: &QSeries| &s.theta() - &(&a * s);
    let c = ctx.catalog.c(n)?;
    let members = [
        &c * &c,
        e(2)?,
        e(4)?.checked_div(&e(2)?)?,
        e(5)?.checked_div(&e(3)?)?,
        ctx.catalog.e(2, n)?,
    ];
    let reference = d4(&members[0]);
    Ok(Outcome::all(
        members[1..].iter().map(|s| same(&d4(s), &reference)),
    ))
}

fn e0_e8_determinant(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.params.order;
    let e = |k: u32| ctx.catalog.e_star(k, n);
    let lhs = det(&[vec![e(0)?, e(2)?], vec![e(2)?, e(4)?]])?;
    let rhs = (&e(2)? * &ctx.catalog.d(n)?).scale(&r(512, 17));
    Ok(same(&lhs, &rhs))
}

fn cusp_bases(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.params.order;
    let (b, c, d) = (
        ctx.catalog.e_star(2, n)?,
        ctx.catalog.c(n)?,
        ctx.catalog.d(n)?,
    );
    let forms = [&b * &d, &(&b * &c) * &d, &(&b * &b) * &d, &b * &(&d * &d)];
    let mut outcome = Outcome::pass();
    for (idx, f) in forms.iter().enumerate() {
        if !f.coeff(0).is_zero() {
            outcome = outcome
                .and(Outcome::fail_at(0, f.coeff(0).clone(), Rational::zero()))
                .note(format!(
                    "cusp basis element {idx} has nonzero constant term"
                ));
        }
    }
    Ok(outcome.and(same(&ctx.catalog.delta(n)?, &forms[2])))
}

fn determinants_level2(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.params.order;
    let e = |k: u32| ctx.catalog.e_star(k, n);
    let (b, c, d, delta) = (
        e(2)?,
        ctx.catalog.c(n)?,
        ctx.catalog.d(n)?,
        ctx.catalog.delta(n)?,
    );
    let m2 = |a: u32, bb: u32, cc: u32, dd: u32| -> Result<QSeries> {
        det(&[vec![e(a)?, e(bb)?], vec![e(cc)?, e(dd)?]])
    };
    let first = same(&m2(2, 3, 3, 4)?, &delta.scale(&r(-(64 * 9), 17)));
    let second = same(
        &m2(2, 4, 3, 5)?,
        &(&c * &delta).scale(&r(-(256 * 9 * 5), 17 * 31)),
    );
    let third_poly = &b.scale(&r(279, 1)) - &(&c * &c).scale(&r(92, 1));
    let third = same(
        &m2(3, 4, 4, 5)?,
        &(&third_poly * &delta).scale(&r(64 * 9, 17 * 17 * 31)),
    );
    let big = det(&[
        vec![e(2)?, e(3)?, e(4)?],
        vec![e(3)?, e(4)?, e(5)?],
        vec![e(4)?, e(5)?, e(6)?],
    ])?;
    let constant = r(-(8192 * 243 * 25), 17 * 17 * 17 * 31 * 31 * 691);
    let poly = &b.scale(&r(961, 1)) + &(&c * &c).scale(&r(3136, 1));
    let rhs = (&(&(&poly * &b) * &d) * &delta).scale(&constant);
    Ok(Outcome::all([first, second, third, same(&big, &rhs)]))
}
