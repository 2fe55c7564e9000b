//! Szegő composition: the multiplier inequality M(ΛP) ≤ M(Λ) M(P), its areal
//! analog, derivative and coefficient bounds, and the sine-product formula for
//! the antiderivative multiplier.
//!
//! Run with `cargo run --release --example composition`.

use areal_mahler::composition::{
    antiderivative_bound, check_areal_composition, check_debruijn_springer, coefficient_bounds, derivative_bounds,
    lambda_measure_from_roots, lambda_measure_product, szego_compose, SzegoMultiplier,
};
use areal_mahler::{ComplexPoly, Result};

fn main() -> Result<()> {
    let p: ComplexPoly = "2,-1+0.5i,0,3,1".parse()?;
    let n = p.degree();
    let lam = SzegoMultiplier::new("1,2,3,2,1".parse()?, n)?;
    println!(
        "P = {p}\nΛ = {}\nΛP = {}",
        lam.lambda_poly(),
        szego_compose(&lam, &p, n)?
    );
    let ds = check_debruijn_springer(&lam, &p, n)?;
    let ac = check_areal_composition(&lam, &p, n)?;
    println!("M(ΛP) = {:.9} ≤ M(Λ)M(P) = {:.9}: {}", ds.lhs, ds.rhs, ds.holds);
    println!("‖ΛP‖₀ = {:.9} ≤ M(Λ)‖P‖₀ = {:.9}: {}", ac.lhs, ac.rhs, ac.holds);

    let d = derivative_bounds(&p)?;
    println!("‖zP'‖₀ = {:.9} ≤ n‖P‖₀ = {:.9}", d.z_derivative.lhs, d.z_derivative.rhs);
    println!("‖P'‖₀  = {:.9} ≤ √e n‖P‖₀ = {:.9}", d.derivative.lhs, d.derivative.rhs);
    for b in coefficient_bounds(&p)? {
        println!(
            "  |a_{}| = {:.6}: areal bound {:.6}, Mahler bound {:.6}",
            b.k, b.areal.lhs, b.areal.rhs, b.mahler.rhs
        );
    }

    println!("\nM(Λ_(n−1)) for the antiderivative multiplier:");
    for n in [2, 5, 10, 20, 40] {
        println!(
            "  n = {n:>2}: from roots {:.12}, sine product {:.12}",
            lambda_measure_from_roots(n)?,
            lambda_measure_product(n)?
        );
    }
    let a = antiderivative_bound(&p)?;
    println!(
        "antiderivative bound: {:.9} ≤ {:.9}: {}",
        a.check.lhs, a.check.rhs, a.check.holds
    );
    Ok(())
}
