//! Integer partial sums of 1/(1 − z): they converge in the Bergman norm but
//! stay at distance ≥ 1 in the Hardy norm.
//!
//! Run with `cargo run --release --example approximation`.

use areal_mahler::approximation::{integer_approx_table, CoefficientStream, DEFAULT_N_LIST};
use areal_mahler::{QuadratureConfig, Result};

fn main() -> Result<()> {
    let cfg = QuadratureConfig::default();
    for stream in [CoefficientStream::Ones, CoefficientStream::Gap] {
        println!("stream {stream}, p = 3/2");
        println!(
            "{:>5} {:>14} {:>12} {:>14} {:>10}",
            "N", "Bergman dist", "tail bound", "Hardy dist", "Hardy gap"
        );
        for r in integer_approx_table(&stream, 1.5, &DEFAULT_N_LIST, &cfg)? {
            println!(
                "{:>5} {:>14.9} {:>12.3e} {:>14.6} {:>10.6}",
                r.n, r.bergman_distance, r.tail_bound, r.hardy_distance, r.hardy_gap
            );
        }
        println!();
    }
    Ok(())
}
