//! Mahler and areal measures of a few polynomials: closed forms from roots,
//! root-free quadrature oracles, and the bounds
//! |a₀| ≤ ‖P‖₀ ≤ M(P) and e^{−n/2} M(P) ≤ ‖P‖₀.
//!
//! Run with `cargo run --release --example measures`.

use areal_mahler::measures::{areal_oracle, bergman_p_norm, hardy_p_norm, mahler_oracle, measure_report};
use areal_mahler::{ComplexPoly, QuadratureConfig, Result};

fn main() -> Result<()> {
    let cfg = QuadratureConfig::new(512, 64)?;
    let examples = [
        ("4z⁴ − 1 (all roots inside)", "-1,0,0,0,4"),
        ("Lehmer's polynomial", "1,1,0,-1,-1,-1,-1,-1,0,1,1"),
        ("z² − 3z + 2 (roots 1, 2)", "2,-3,1"),
        ("complex cubic", "0.3-0.2i,1+1i,0,2"),
    ];
    for (label, coeffs) in examples {
        let p: ComplexPoly = coeffs.parse()?;
        let r = measure_report(&p)?;
        println!("{label}: P = {p}");
        println!(
            "  closed form  M = {:.12}  ‖P‖₀ = {:.12}  ratio = {:.6}",
            r.mahler, r.areal, r.ratio
        );
        println!(
            "  oracle       M = {:.12}  ‖P‖₀ = {:.12}",
            mahler_oracle(&p, &cfg)?,
            areal_oracle(&p, &cfg)?
        );
        println!(
            "  bounds hold: upper {}, |a₀| {}, lower {}",
            r.bounds.upper_ok, r.bounds.a0_ok, r.bounds.lower_ok
        );
        println!(
            "  p = 2 norms: Bergman {:.9}, Hardy {:.9}\n",
            bergman_p_norm(&p, 2.0, &cfg)?,
            hardy_p_norm(&p, 2.0, &cfg)?
        );
    }
    Ok(())
}
