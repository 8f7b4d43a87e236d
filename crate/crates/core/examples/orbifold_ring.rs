//! The ring Z[u]/<N u^(n+1)>, its groups, and the images q*(g_k) = l_k u^k.
//!
//!     cargo run --example orbifold_ring -- 2,2 4,1

use wps_cohomology::{iso_check, KawasakiRing, OrbifoldRing, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let args = if args.is_empty() {
        vec!["1,2,2,3,3,3".to_string()]
    } else {
        args
    };
    let mut seen: Vec<WeightVector> = Vec::new();
    for a in &args {
        let w: WeightVector = a.parse()?;
        let orb = OrbifoldRing::new(w.clone());
        let kaw = KawasakiRing::new(w.clone());
        println!("{w}: {orb}");
        for (d, g) in orb.groups(2 * (w.dim() as u32 + 2)).dense() {
            println!("  H^{d} = {g}");
        }
        for k in 1..=kaw.dim() {
            println!("  q*(g{k}) = {}", kaw.qstar(&orb, &kaw.gamma(k)?)?);
        }
        for other in &seen {
            println!("  isomorphic to {other}: {}", iso_check(&w, other));
        }
        seen.push(w);
    }
    Ok(())
}
