//! Zero-distribution diagnostics: the n zⁿ − 1 and zⁿ-reciprocal families,
//! where the roots equidistribute in angle and approach the unit circle, and
//! the discriminant identity for an integer polynomial.
//!
//! Run with `cargo run --release --example zeros`.

use areal_mahler::arithmetic::{family_values, BuiltinFamily};
use areal_mahler::zeros::{discriminant_energy_bound, family_scan, Family};
use areal_mahler::{IntPoly, Result};

fn main() -> Result<()> {
    for family in [BuiltinFamily::NznMinus1, BuiltinFamily::Reciprocal] {
        println!("family {}", family.name());
        for row in family_scan(&Family::Builtin(family), &[8, 32, 128, 512])? {
            println!(
                "  n = {:>3}: |z| ∈ [{:.6}, {:.6}], discrepancy {:.3e}, M^(1/deg) = {:.6}, ‖P‖₀^(1/deg) = {:.6}",
                row.n, row.min_modulus, row.max_modulus, row.angular_discrepancy, row.mahler_root, row.areal_root
            );
        }
    }
    println!("\nclosed form for n zⁿ − 1: ‖P‖₀ → 1 while M = n");
    for n in [10, 100, 1000, 10000] {
        let v = family_values(BuiltinFamily::NznMinus1, n)?;
        println!("  n = {n:>5}: M = {:.1}, ‖P‖₀ = {:.9}", v.mahler, v.areal);
    }

    let p = IntPoly::from_i64s(&[3, -1, 4, 1, -5, 9]);
    let d = discriminant_energy_bound(&p)?;
    println!(
        "\n{p}: discriminant {}, log|Δ| = {:.9} exactly, {:.9} from roots",
        d.disc, d.log_abs_disc, d.log_abs_disc_from_roots
    );
    Ok(())
}
