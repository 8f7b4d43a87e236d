//! Kawasaki's presentation: the l_k table and the products
//! g_k g_m = (l_k l_m / l_(k+m)) g_(k+m).
//!
//!     cargo run --example kawasaki_ring -- 1,2,2,3,3,3

use wps_cohomology::{KawasakiRing, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "1,2,2,3,3,3".into());
    let ring = KawasakiRing::new(arg.parse::<WeightVector>()?);
    for k in 1..=ring.dim() {
        println!("l_{k} = {}", ring.ell(k)?);
    }
    for p in ring.product_table() {
        match p.target {
            Some(t) => println!("g{} g{} = {} g{t}", p.left, p.right, p.coefficient),
            None => println!("g{} g{} = 0", p.left, p.right),
        }
    }
    let spans = ring.gamma1_power_spans();
    println!(
        "g1^k generates degree 2k for k = {:?}",
        spans
            .iter()
            .enumerate()
            .filter(|(_, s)| **s)
            .map(|(k, _)| k + 1)
            .collect::<Vec<_>>()
    );
    Ok(())
}
