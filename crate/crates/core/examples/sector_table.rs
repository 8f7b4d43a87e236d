//! Twisted-sector chart of a weighted projective space: fixed loci,
//! rotation numbers, degree shifts and equivariant Euler classes.
//!
//!     cargo run --example sector_table -- 1,2,2,3,3,3

use wps_cohomology::report::{sector_table_latex, sector_table_text};
use wps_cohomology::{CrRing, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "1,2,2,3,3,3".into());
    let ring = CrRing::new(arg.parse::<WeightVector>()?)?;
    print!("{}", sector_table_text(&ring));
    println!();
    print!("{}", sector_table_latex(&ring));
    Ok(())
}
