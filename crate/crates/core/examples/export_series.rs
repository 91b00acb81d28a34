//! Exports a series, table or polynomial as JSON or CSV.
//!
//! `cargo run --example export_series -- tau 10 csv`

use eisenstein::export::{export, Format};

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "E4star".into());
    let order = args.next().and_then(|s| s.parse().ok()).unwrap_or(10);
    let format: Format = args.next().as_deref().unwrap_or("json").parse().unwrap();
    println!("{}", export(&name, order, format).unwrap());
}
