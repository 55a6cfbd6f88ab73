//! The tensor rule on `B(λ) ⊗ B(Λ0)`, checked against Littelmann operators
//! on concatenated paths.

use affine_crystals::concat::{concat_path_op, Op};
use affine_crystals::iso::{psi_inverse, to_path};
use affine_crystals::partition::ChargedPartition;
use affine_crystals::tensor::TensorElement;
use affine_crystals::weyl::Node;

fn main() -> affine_crystals::Result<()> {
    let t = TensorElement::new("3,1:0".parse()?, "2:0".parse()?)?;
    println!("t = {t}   weight {}", t.weight_label());
    let (end, start) = t.junction();
    println!("junction {end} | {start}   𝔴(t) = {}", t.w_assoc());
    for i in Node::ALL {
        println!("ε_{i} = {}, φ_{i} = {}", t.epsilon(i), t.phi(i));
        let left = to_path(t.left())?;
        let right = to_path(t.right())?;
        for op in [Op::F, Op::E] {
            let by_rule = match op {
                Op::F => t.f(i),
                Op::E => t.e(i),
            };
            let by_paths = concat_path_op(i, &left, &right, op)
                .map(|(a, b)| TensorElement::new(psi_inverse(&a), psi_inverse(&b)))
                .transpose()?;
            let show = |x: &Option<TensorElement>| x.as_ref().map_or("0".into(), |x| x.to_string());
            println!("  {op:?}_{i}: rule {}   paths {}", show(&by_rule), show(&by_paths));
            assert_eq!(by_rule, by_paths);
        }
    }

    let empty = ChargedPartition::empty(Node::Zero);
    for right in ["1", "3,1", "2", "5,3,1"] {
        let t = TensorElement::new(empty.clone(), right.parse()?)?;
        println!("{t} highest weight: {}", t.is_highest_weight());
    }
    Ok(())
}
