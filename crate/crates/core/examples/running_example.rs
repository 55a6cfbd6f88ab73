//! Signatures and root operators on the charged partition (8,6,3,1 | c=0).

use affine_crystals::partition::ChargedPartition;
use affine_crystals::weyl::Node;

fn main() -> affine_crystals::Result<()> {
    let b: ChargedPartition = "8,6,3,1:0".parse()?;
    println!("b = {b}");
    println!("weight: {}", b.weight());
    for i in Node::ALL {
        let sig = b.signature(i)?;
        println!(
            "{i}-signature: {sig}  columns {:?}  reduced: {}  ε = {}, φ = {}",
            sig.columns(),
            b.reduced_signature(i)?,
            b.epsilon(i)?,
            b.phi(i)?
        );
    }
    for i in Node::ALL {
        let show = |x: Option<ChargedPartition>| x.map_or("0".to_string(), |c| c.to_string());
        println!("e_{i} b = {}", show(b.e(i)?));
        println!("f_{i} b = {}", show(b.f(i)?));
    }
    Ok(())
}
