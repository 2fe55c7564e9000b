//! Multivariate measures: the exact value ‖z₁ + z₂‖₀ = e^{−1/4}, torus
//! quadrature, seeded Monte Carlo, and the two-sided bound
//! e^{−n/2} M(P) ≤ ‖P‖₀ ≤ M(P).
//!
//! Run with `cargo run --release --example multivariate`.

use areal_mahler::multivariate::{
    default_mv_config, dominance_value, mv_areal_mc, mv_areal_quadrature, mv_bounds_check, mv_mahler, MultiPoly,
    DEFAULT_TORUS_NODES,
};
use areal_mahler::Result;

fn main() -> Result<()> {
    let cfg = default_mv_config();
    let sum: MultiPoly = "1 0 : 1\n0 1 : 1".parse()?;
    let quad = mv_areal_quadrature(&sum, &cfg)?;
    let mc = mv_areal_mc(&sum, 200_000, 7)?;
    println!(
        "z₁ + z₂:  ‖P‖₀ quadrature {quad:.6}, Monte Carlo {:.6} ± {:.1e}, exact {:.6}",
        mc.value,
        mc.std_error,
        (-0.25f64).exp()
    );
    println!(
        "          M(P) on the torus {:.6} (exact 1)",
        mv_mahler(&sum, DEFAULT_TORUS_NODES)?
    );

    let dominated: MultiPoly = "0 0 : 4\n1 0 : 1\n1 2 : -2i".parse()?;
    println!(
        "4 + z₁ − 2i z₁z₂²: constant term dominates, both measures = {:?}",
        dominance_value(&dominated)
    );

    let p: MultiPoly = "0 0 : 1\n1 0 : 2\n1 1 : -1\n0 2 : 0.5+1i".parse()?;
    let b = mv_bounds_check(&p)?;
    println!("\n{p}");
    println!("M = {:.9}, ‖P‖₀ = {:.9}", b.mahler, b.areal);
    println!(
        "lower bound holds: {}, upper bound holds: {}",
        b.lower.holds, b.upper.holds
    );
    Ok(())
}
