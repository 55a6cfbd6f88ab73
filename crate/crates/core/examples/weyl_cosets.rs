//! The affine Weyl group of `sl2`: Bruhat order, coset representatives,
//! Demazure products and double coset minima.

use affine_crystals::oracle::subword_bruhat;
use affine_crystals::weight::Fundamental;
use affine_crystals::weyl::{bruhat_leq, demazure_min, double_coset_min, kk_index, CosetRep, WeylElement};

fn main() {
    let u: WeylElement = "s1 s0".parse().unwrap();
    let w: WeylElement = "s0 s1 s0".parse().unwrap();
    println!("{u} ≤ {w}: {} (subwords: {})", bruhat_leq(&u, &w), subword_bruhat(&u, &w));
    println!("{w} ≤ {u}: {}", bruhat_leq(&w, &u));

    for k in 0..4 {
        let plus = CosetRep::plus(k);
        let minus = CosetRep::minus(k);
        println!(
            "{plus} = {}   Λ0 ↦ {}   |   {minus} = {}   Λ1 ↦ {}",
            plus.element(),
            Fundamental::L0.weight().act(&plus.element()),
            minus.element(),
            Fundamental::L1.weight().act(&minus.element()),
        );
    }

    let z = demazure_min(w, u);
    println!("min I({w})·{u} = {z}");
    println!("min W_Λ0 {z} W_Λ0 = {}", double_coset_min(Fundamental::L0, z, Fundamental::L0));

    println!("kk_index(λ, n, m) for n, m ≤ 5:");
    for lambda in Fundamental::ALL {
        println!("  {lambda}");
        for n in 0..=5 {
            let row: Vec<String> = (0..=5).map(|m| kk_index(lambda, n, m).to_string()).collect();
            println!("    n = {n}: {}", row.join(" "));
        }
    }
}
