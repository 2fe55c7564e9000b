//! Runs the full reproduction suite (criteria 1–9) and prints each result
//! with its supporting details and runtime.
//!
//! ```text
//! cargo run --release --example reproduce [seed]
//! ```

use areal_mahler::verify::{run_all, DEFAULT_SEED};

fn main() {
    let seed = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("seed must be an unsigned integer"))
        .unwrap_or(DEFAULT_SEED);
    let results = run_all(seed, |r| {
        println!(
            "[{}] {:>2}. {:<28} {:>8.2}s  {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.name,
            r.elapsed_secs,
            r.observed
        );
        for d in &r.details {
            println!("        {d}");
        }
    });
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    std::process::exit(i32::from(failed > 0));
}
