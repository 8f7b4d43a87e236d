//! Star products of the live twisted sectors, raw and after reduction.
//!
//!     cargo run --example multiplication_table -- 1,2,2,3,3,3

use wps_cohomology::report::multtable_latex;
use wps_cohomology::{CrRing, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "1,2,2,3,3,3".into());
    let ring = CrRing::new(arg.parse::<WeightVector>()?)?;
    for e in ring.mult_table()? {
        println!(
            "a{} * a{} = {:<12} -> {}",
            e.left,
            e.right,
            e.raw.to_string(),
            e.value
        );
    }
    println!();
    print!("{}", multtable_latex(&ring)?);
    Ok(())
}
