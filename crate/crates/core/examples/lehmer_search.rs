//! Cyclotomic classification and an exhaustive search of small integer
//! polynomials: ‖P‖₀ = 1 exactly for the cyclotomic ones, and the smallest
//! non-cyclotomic areal measures.
//!
//! Run with `cargo run --release --example lehmer_search`.

use areal_mahler::arithmetic::{classify, cyclotomic_poly, lehmer_search, minimal_non_cyclotomic, SearchOptions};
use areal_mahler::verify::lehmer_polynomial;
use areal_mahler::{IntPoly, Result};

fn main() -> Result<()> {
    for p in [
        cyclotomic_poly(12),
        lehmer_polynomial(),
        IntPoly::from_i64s(&[1, -1, 0, 1]),
    ] {
        let c = classify(&p)?;
        println!("{p}: {:?}, M = {:.10}, ‖P‖₀ = {:.10}", c.kind, c.mahler, c.areal);
    }

    let records = lehmer_search(SearchOptions::new(8, 1))?;
    let cyclotomic = records.iter().filter(|r| r.is_cyclotomic).count();
    let worst = records
        .iter()
        .filter(|r| r.is_cyclotomic)
        .map(|r| (r.areal - 1.0).abs())
        .fold(0.0, f64::max);
    println!(
        "\ndegree ≤ 8, height 1: {} polynomials, {cyclotomic} cyclotomic (max |‖P‖₀ − 1| = {worst:.1e})",
        records.len()
    );
    let min_areal = records
        .iter()
        .filter(|r| !r.is_cyclotomic)
        .map(|r| r.areal)
        .fold(f64::INFINITY, f64::min);
    println!("smallest non-cyclotomic ‖P‖₀ = {min_areal:.12}");
    println!("smallest non-cyclotomic Mahler measures:");
    for r in minimal_non_cyclotomic(&records, 8) {
        println!("  M = {:.12}  ‖P‖₀ = {:.12}  P = {}", r.mahler, r.areal, r.poly);
    }
    Ok(())
}
