//! Generators and relations of the Chen-Ruan ring, with the kernel ideal
//! listed sector by sector.
//!
//!     cargo run --example presentation -- 1,2

use wps_cohomology::arith::format_rational;
use wps_cohomology::{CrRing, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1,2".into());
    let ring = CrRing::new(arg.parse::<WeightVector>()?)?;
    let p = ring.presentation()?;
    for (name, degree) in &p.generators {
        println!("{name:>4}  degree {}", format_rational(degree));
    }
    for (j, m) in p.kernel.iter().enumerate() {
        println!("J[{j}] = {m}");
    }
    for e in &p.products {
        println!("I: {}", e.relation_string());
    }
    Ok(())
}
