//! Two weight vectors with the same orbifold ring can still have
//! different Chen-Ruan rings, e.g. (2,2) and (4,1).
//!
//!     cargo run --example ring_comparison -- 2,2 4,1

use wps_cohomology::report::presentation_text;
use wps_cohomology::{iso_check, presentation_equivalent, CrRing, OrbifoldRing, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let a: WeightVector = args.next().unwrap_or_else(|| "2,2".into()).parse()?;
    let b: WeightVector = args.next().unwrap_or_else(|| "4,1".into()).parse()?;
    println!("{a}: {}", OrbifoldRing::new(a.clone()));
    println!("{b}: {}", OrbifoldRing::new(b.clone()));
    println!("orbifold rings isomorphic: {}", iso_check(&a, &b));
    let (ca, cb) = (CrRing::new(a.clone())?, CrRing::new(b.clone())?);
    print!("\n{a}\n{}", presentation_text(&ca)?);
    print!("\n{b}\n{}", presentation_text(&cb)?);
    println!(
        "\nchen-ruan presentations equivalent: {}",
        presentation_equivalent(&ca, &cb)?
    );
    Ok(())
}
