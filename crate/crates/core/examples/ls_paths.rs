//! Partitions as Lakshmibai-Seshadri paths: `Ψ`, its inverse, the
//! `h`-functions and the path root operators.

use affine_crystals::iso::{psi_inverse, to_path};
use affine_crystals::partition::ChargedPartition;
use affine_crystals::weight::rat;
use affine_crystals::weyl::Node;

fn main() -> affine_crystals::Result<()> {
    for input in ["8,6,3,1:0", "5,2:1", ":0"] {
        let b: ChargedPartition = input.parse()?;
        let p = to_path(&b)?;
        println!("{b}");
        println!("  path      {p}");
        println!("  canonical {}", serde_json::to_string(&p).unwrap());
        println!("  endpoint  {}", p.endpoint());
        println!("  π(1/2)    {}", p.evaluate(rat(1, 2))?);
        assert_eq!(psi_inverse(&p), b);
        for i in Node::ALL {
            let h = p.h_function(i);
            println!(
                "  h_{i}: min {} end {} minima [{}]",
                h.min_value(),
                h.end_value(),
                h.local_minima().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
            );
            if let Some(q) = p.f(i) {
                println!("  f_{i} -> {q} = Ψ({})", psi_inverse(&q));
            }
            if let Some(q) = p.e(i) {
                println!("  e_{i} -> {q} = Ψ({})", psi_inverse(&q));
            }
        }
    }
    Ok(())
}
