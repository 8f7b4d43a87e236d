//! Runs the invariant suite on a weight vector and reports timing.
//!
//!     cargo run --example invariant_check -- 3,4,5,6,6

use std::time::Instant;

use wps_cohomology::check::{run_checks, Rings};
use wps_cohomology::WeightVector;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "1,2,2,3,3,3".into());
    let weights: WeightVector = arg.parse()?;
    let start = Instant::now();
    let rings = Rings::new(weights.clone())?;
    let results = run_checks(&rings);
    for r in &results {
        let mark = if r.passed { "ok  " } else { "FAIL" };
        println!(
            "{mark} {}{}",
            r.name,
            if r.detail.is_empty() {
                String::new()
            } else {
                format!(": {}", r.detail)
            }
        );
    }
    println!(
        "{weights}: l = {}, {} checks in {:.2?}",
        rings.chen_ruan.ell(),
        results.len(),
        start.elapsed()
    );
    Ok(())
}
