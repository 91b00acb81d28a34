//! Text exports of series, arithmetic tables and `E*_{2m}` polynomials.
//!
//! Rationals are written `p/q`, or `p` when `q = 1`. JSON output is compact
//! `{"name", "order", "coefficients"}`; CSV output has header `n,value`.
//! Polynomials (`poly:E8star`) export their sorted `(a, b, c, coeff)` records.

use std::str::FromStr;

use serde::Serialize;

use crate::arith::{self, ArithTable};
use crate::error::{Error, Result};
use crate::graded::e_star_polys;
use crate::series::{SeriesCatalog, SeriesName};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::InvalidArgument(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Serialize)]
struct SeriesDoc<'a> {
    name: &'a str,
    order: usize,
    coefficients: Vec<String>,
}

#[derive(Serialize)]
struct PolyDoc<'a> {
    name: &'a str,
    weight: u32,
    terms: Vec<(u32, u32, u32, String)>,
}

fn parse_suffix(name: &str, prefix: &str) -> Option<u32> {
    name.strip_prefix(prefix)?.parse().ok().filter(|&s| s >= 1)
}

/// Table named `tau`, `sigma{s}`, `sigmastar{s}`, `sigmasharp`, `r{s}` or `delta8`.
fn table(name: &str, order: usize) -> Result<Option<ArithTable>> {
    let odd = |s: u32| -> Result<u32> {
        if s % 2 == 1 {
            Ok(s)
        } else {
            Err(Error::InvalidArgument(format!("{name}: index must be odd")))
        }
    };
    Ok(Some(match name {
        "tau" => arith::tau_table(order.max(1))?,
        "sigmasharp" => ArithTable::sigma_sharp(order),
        "delta8" => ArithTable::delta8(order)?,
        _ => {
            if let Some(s) = parse_suffix(name, "sigmastar") {
                ArithTable::sigma_star(odd(s)?, order)
            } else if let Some(s) = parse_suffix(name, "sigma") {
                ArithTable::sigma(s, order)
            } else if let Some(s) = parse_suffix(name, "r") {
                arith::r_count(s, order)
            } else {
                return Ok(None);
            }
        }
    }))
}

fn coefficients(name: &str, order: usize, catalog: &SeriesCatalog) -> Result<Vec<Rational>> {
    if let Some(t) = table(name, order)? {
        let mut values = t.values;
        values.truncate(order + 1);
        return Ok(values);
    }
    let series: SeriesName = name.parse()?;
    Ok(catalog.get(series, order)?.into_coeffs())
}

/// Renders `name` to `order` in the given format.
pub fn export(name: &str, order: usize, format: Format) -> Result<String> {
    export_with(name, order, format, &SeriesCatalog::new())
}

pub fn export_with(
    name: &str,
    order: usize,
    format: Format,
    catalog: &SeriesCatalog,
) -> Result<String> {
    if let Some(poly) = name.strip_prefix("poly:") {
        return export_poly(name, poly, format);
    }
    let coeffs = coefficients(name, order, catalog)?;
    Ok(match format {
        Format::Json => {
            let doc = SeriesDoc {
                name,
                order,
                coefficients: coeffs.iter().map(ToString::to_string).collect(),
            };
            serde_json::to_string(&doc).expect("document serializes")
        }
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for (n, c) in coeffs.iter().enumerate() {
                out.push_str(&format!("{n},{c}\n"));
            }
            out
        }
    })
}

fn export_poly(full: &str, poly: &str, format: Format) -> Result<String> {
    let unknown = || Error::UnknownName(full.to_string());
    let m = match poly.parse::<SeriesName>() {
        Ok(SeriesName::EStar(m)) if m >= 2 => m,
        _ => return Err(unknown()),
    };
    let f = e_star_polys(m)?.pop().ok_or_else(unknown)?;
    let terms = f.records();
    Ok(match format {
        Format::Json => serde_json::to_string(&PolyDoc {
            name: full,
            weight: 2 * m,
            terms,
        })
        .expect("document serializes"),
        Format::Csv => {
            let mut out = String::from("a,b,c,value\n");
            for (a, b, c, v) in terms {
                out.push_str(&format!("{a},{b},{c},{v}\n"));
            }
            out
        }
    })
}
