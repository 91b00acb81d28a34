//! Registry of identity checks.
//!
//! Every entry runs one identity with exact arithmetic and produces a
//! [`CheckReport`]. Series identities are compared up to the truncation
//! order; identities over `n` are compared on `0..=nmax` (or the stated
//! sub-range). Nothing beyond those bounds is claimed.

mod level1;
mod level2;
mod squares;

use std::cmp::Ordering;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qseries::{Discrepancy, QSeries};
use crate::series::SeriesCatalog;
use crate::Rational;

/// Bounds shared by all checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    /// Truncation order for series identities.
    pub order: usize,
    /// Upper end of the `n` range for convolution identities.
    pub nmax: usize,
    /// Length of the `τ` table for Mordell, 691, Deligne and Lehmer checks.
    pub table_max: usize,
    /// Largest `m` for the positivity and scalar recursion checks.
    pub mmax: u32,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            order: 64,
            nmax: 200,
            table_max: 1000,
            mmax: 20,
        }
    }
}

/// What a check's bound refers to; decides which parameter is reported as its order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Series,
    Range,
    Table,
    Index,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub order: usize,
    pub status: Status,
    pub first_discrepancy: Option<Discrepancy>,
    pub elapsed_ms: u64,
    /// Human-readable remarks (flagged cells, error text); not part of the JSON schema.
    #[serde(skip)]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// One line: `PASS id (order N)` or `FAIL id (order N) at n: lhs != rhs`.
    pub fn summary(&self) -> String {
        match (&self.status, &self.first_discrepancy) {
            (Status::Pass, _) => format!("PASS {} (order {})", self.id, self.order),
            (Status::Fail, Some(d)) => format!(
                "FAIL {} (order {}) at n={}: {} != {}",
                self.id, self.order, d.n, d.lhs, d.rhs
            ),
            (Status::Fail, None) => format!("FAIL {} (order {})", self.id, self.order),
        }
    }
}

/// Result of running a check body, before timing and bookkeeping.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub discrepancy: Option<Discrepancy>,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome::default()
    }

    fn fail_at(n: usize, lhs: Rational, rhs: Rational) -> Self {
        Outcome {
            discrepancy: Some(Discrepancy { n, lhs, rhs }),
            notes: Vec::new(),
        }
    }

    fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }

    /// Merges outcomes, keeping the discrepancy with the smallest index.
    fn and(mut self, other: Outcome) -> Outcome {
        self.notes.extend(other.notes);
        self.discrepancy = match (self.discrepancy, other.discrepancy) {
            (Some(a), Some(b)) => Some(if b.n < a.n { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }

    fn all(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
        outcomes.into_iter().fold(Outcome::pass(), Outcome::and)
    }
}

/// Coefficient-wise comparison of two series.
fn same(lhs: &QSeries, rhs: &QSeries) -> Outcome {
    Outcome {
        discrepancy: lhs.first_difference(rhs),
        notes: Vec::new(),
    }
}

/// Compares `lhs(n)` with `rhs(n)` over `range`, stopping at the first mismatch.
fn over_range(
    range: impl IntoIterator<Item = usize>,
    mut pair: impl FnMut(usize) -> (Rational, Rational),
) -> Outcome {
    for n in range {
        let (lhs, rhs) = pair(n);
        if lhs != rhs {
            return Outcome::fail_at(n, lhs, rhs);
        }
    }
    Outcome::pass()
}

/// `σ_s(0..=n)` as seen by the catalog (so injected faults propagate).
fn sigma_table(catalog: &SeriesCatalog, s: u32, n: usize) -> Vec<Rational> {
    (0..=n as u64).map(|i| catalog.sigma(s, i)).collect()
}

/// `σ*_s(0..=n)` as seen by the catalog.
fn sigma_star_table(catalog: &SeriesCatalog, s: u32, n: usize) -> Vec<Rational> {
    (0..=n as u64).map(|i| catalog.sigma_star(s, i)).collect()
}

/// `Σ_{j=0}^{n} a_j b_{n-j}`.
fn convolve(a: &[Rational], b: &[Rational], n: usize) -> Rational {
    (0..=n).map(|j| &a[j] * &b[n - j]).sum()
}

fn r(n: i64, d: i64) -> Rational {
    crate::scalars::rat(n, d)
}

fn z(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

/// Inputs handed to a check body.
pub struct Ctx<'a> {
    pub catalog: &'a SeriesCatalog,
    pub params: &'a Params,
    /// Family parameter, e.g. `m` in `KS-DE(m)`.
    pub arg: u32,
}

type Runner = fn(&Ctx) -> Result<Outcome>;

/// One registry entry.
#[derive(Clone)]
pub struct TheoremCheck {
    pub id: String,
    pub description: String,
    pub scope: Scope,
    arg: u32,
    runner: Runner,
}

impl std::fmt::Debug for TheoremCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TheoremCheck")
            .field("id", &self.id)
            .field("scope", &self.scope)
            .finish()
    }
}

impl TheoremCheck {
    fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        scope: Scope,
        runner: Runner,
    ) -> Self {
        TheoremCheck {
            id: id.into(),
            description: description.into(),
            scope,
            arg: 0,
            runner,
        }
    }

    fn with_arg(mut self, arg: u32) -> Self {
        self.arg = arg;
        self
    }

    /// The family part of the id: `KS-DE(3)` → `KS-DE`.
    pub fn family(&self) -> &str {
        self.id.split('(').next().unwrap_or(&self.id)
    }

    fn bound(&self, params: &Params) -> usize {
        match self.scope {
            Scope::Series => params.order,
            Scope::Range => params.nmax,
            Scope::Table => params.table_max,
            Scope::Index => params.mmax as usize,
        }
    }

    pub fn run(&self, catalog: &SeriesCatalog, params: &Params) -> CheckReport {
        let start = Instant::now();
        let ctx = Ctx {
            catalog,
            params,
            arg: self.arg,
        };
        let outcome = (self.runner)(&ctx).unwrap_or_else(outcome_from_error);
        CheckReport {
            id: self.id.clone(),
            order: self.bound(params),
            status: if outcome.discrepancy.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            first_discrepancy: outcome.discrepancy,
            elapsed_ms: start.elapsed().as_millis() as u64,
            notes: outcome.notes,
        }
    }
}

/// Errors become failures; the index is taken from the error when it carries one.
fn outcome_from_error(err: Error) -> Outcome {
    let zero = Rational::from_integer(0.into());
    let outcome = match &err {
        Error::CrossCheckMismatch { n, lhs, rhs, .. } => {
            Outcome::fail_at(*n, (**lhs).clone(), (**rhs).clone())
        }
        Error::ResidualMismatch(n) => Outcome::fail_at(*n, zero.clone(), zero),
        _ => Outcome::fail_at(0, zero.clone(), zero),
    };
    outcome.note(format!("error: {err}"))
}

/// Every check, in registry order.
pub fn registry() -> Vec<TheoremCheck> {
    let mut out = Vec::new();
    level1::register(&mut out);
    level2::register(&mut out);
    squares::register(&mut out);
    out
}

/// Accepts `KS-DE(3)` as well as `KS-DE m=3` and `KS-DE-3`.
pub fn normalize_id(id: &str) -> String {
    let id = id.trim();
    if let Some((family, m)) = id.split_once(" m=") {
        return format!("{}({})", family.trim(), m.trim());
    }
    if let Some((family, m)) = id.rsplit_once('-') {
        if !m.is_empty() && m.chars().all(|c| c.is_ascii_digit()) && family.ends_with("-DE") {
            return format!("{family}({m})");
        }
    }
    id.to_string()
}

pub fn find(id: &str) -> Result<TheoremCheck> {
    let id = normalize_id(id);
    registry()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or(Error::UnknownTheoremId(id))
}

/// Checks whose id or family equals `selector`; `all` selects everything.
pub fn select(selector: &str) -> Result<Vec<TheoremCheck>> {
    if selector == "all" {
        return Ok(registry());
    }
    let id = normalize_id(selector);
    let picked: Vec<_> = registry()
        .into_iter()
        .filter(|c| c.id == id || c.family() == id)
        .collect();
    if picked.is_empty() {
        return Err(Error::UnknownTheoremId(id));
    }
    Ok(picked)
}

pub fn run_check(id: &str, catalog: &SeriesCatalog, params: &Params) -> Result<CheckReport> {
    Ok(find(id)?.run(catalog, params))
}

/// Orders ids with embedded numbers numerically: `KS-DE(2)` before `KS-DE(10)`.
pub fn compare_ids(a: &str, b: &str) -> Ordering {
    fn key(s: &str) -> Vec<(String, u64)> {
        let mut out = Vec::new();
        let mut text = String::new();
        let mut num = String::new();
        for ch in s.chars() {
            if ch.is_ascii_digit() {
                num.push(ch);
            } else {
                if !num.is_empty() {
                    out.push((std::mem::take(&mut text), num.parse().unwrap_or(0)));
                    num.clear();
                }
                text.push(ch);
            }
        }
        out.push((text, num.parse().unwrap_or(0)));
        out
    }
    key(a).cmp(&key(b))
}

/// Runs the given checks, in parallel if asked; reports come back sorted by id.
pub fn run_checks(
    checks: &[TheoremCheck],
    catalog: &SeriesCatalog,
    params: &Params,
    parallel: bool,
) -> Vec<CheckReport> {
    let mut reports: Vec<CheckReport> = if parallel {
        checks.par_iter().map(|c| c.run(catalog, params)).collect()
    } else {
        checks.iter().map(|c| c.run(catalog, params)).collect()
    };
    reports.sort_by(|a, b| compare_ids(&a.id, &b.id));
    reports
}

pub fn run_all(params: &Params, parallel: bool) -> Vec<CheckReport> {
    run_checks(&registry(), &SeriesCatalog::new(), params, parallel)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let reg = registry();
        let mut ids: Vec<_> = reg.iter().map(|c| c.id.clone()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), reg.len());
    }

    #[test]
    fn id_normalization() {
        assert_eq!(normalize_id("KS-DE m=3"), "KS-DE(3)");
        assert_eq!(normalize_id("RS-DE-5"), "RS-DE(5)");
        assert_eq!(normalize_id("R24-FACT"), "R24-FACT");
        assert_eq!(find("KS-DE m=3").unwrap().id, "KS-DE(3)");
        assert!(matches!(find("NOPE"), Err(Error::UnknownTheoremId(_))));
        assert_eq!(select("KS-DE").unwrap().len(), 11);
    }

    #[test]
    fn id_ordering() {
        assert_eq!(compare_ids("KS-DE(2)", "KS-DE(10)"), Ordering::Less);
        assert_eq!(compare_ids("C1", "C10"), Ordering::Less);
        assert_eq!(compare_ids("C2", "C10"), Ordering::Less);
    }

    #[test]
    fn report_json_schema() {
        let r = CheckReport {
            id: "T5".into(),
            order: 200,
            status: Status::Fail,
            first_discrepancy: Some(Discrepancy {
                n: 5,
                lhs: Rational::new(1.into(), 2.into()),
                rhs: Rational::from_integer(3.into()),
            }),
            elapsed_ms: 7,
            notes: vec!["ignored".into()],
        };
        assert_eq!(
            r.to_json(),
            r#"{"id":"T5","order":200,"status":"fail","first_discrepancy":{"n":5,"lhs":"1/2","rhs":"3"},"elapsed_ms":7}"#
        );
    }

    #[test]
    fn errors_become_failures() {
        let o = outcome_from_error(Error::ResidualMismatch(4));
        assert_eq!(o.discrepancy.unwrap().n, 4);
        assert!(o.notes[0].contains("residual"));
    }
}
