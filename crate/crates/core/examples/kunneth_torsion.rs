//! Groups of a product of two weighted projective orbifolds and the first
//! odd degree carrying torsion.
//!
//!     cargo run --example kunneth_torsion -- 1,2 1,2 12

use wps_cohomology::{odd_torsion_witness, product_groups, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let a: WeightVector = args.next().unwrap_or_else(|| "1,2".into()).parse()?;
    let b: WeightVector = args.next().unwrap_or_else(|| "1,2".into()).parse()?;
    let max: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(12);
    let p = product_groups(&a, &b, max);
    for (d, g) in p.groups.dense() {
        println!("H^{d:<3} = {g}");
    }
    match odd_torsion_witness(&a, &b, max) {
        Some((d, g)) => println!("odd torsion first appears in degree {d}: {g}"),
        None => println!("no odd torsion up to degree {max}"),
    }
    Ok(())
}
