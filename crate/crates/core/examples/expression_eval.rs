//! Parses expressions and evaluates them in all three rings where the
//! symbols make sense.
//!
//!     cargo run --example expression_eval -- 1,2,2,3,3,3 "a2^2 + u*a4" "g1^2"

use wps_cohomology::{eval, parse, CrRing, KawasakiRing, OrbifoldRing, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let w: WeightVector = args
        .next()
        .unwrap_or_else(|| "1,2,2,3,3,3".into())
        .parse()?;
    let mut inputs: Vec<String> = args.collect();
    if inputs.is_empty() {
        inputs = vec![
            "a3*a3".into(),
            "(a2 + u)^2".into(),
            "6*g2 - g1^2".into(),
            "u^^2".into(),
        ];
    }
    let kaw = KawasakiRing::new(w.clone());
    let orb = OrbifoldRing::new(w.clone());
    let cr = CrRing::new(w)?;
    for input in &inputs {
        let e = match parse(input) {
            Ok(e) => e,
            Err(err) => {
                println!("{input:>16}  {err}");
                continue;
            }
        };
        println!("{input:>16}  parsed as {e}");
        match eval(&e, &kaw) {
            Ok(x) => println!("{:>16}  kawasaki: {x}", ""),
            Err(err) => println!("{:>16}  kawasaki: {err}", ""),
        }
        match eval(&e, &orb) {
            Ok(x) => println!("{:>16}  orbifold: {x}", ""),
            Err(err) => println!("{:>16}  orbifold: {err}", ""),
        }
        match eval(&e, &cr) {
            Ok(x) => println!(
                "{:>16}  chen-ruan: {x} (degree {})",
                "",
                if x.is_zero() {
                    "any".into()
                } else {
                    cr.degree(&x)?.to_string()
                }
            ),
            Err(err) => println!("{:>16}  chen-ruan: {err}", ""),
        }
    }
    Ok(())
}
