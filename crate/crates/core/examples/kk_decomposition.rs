//! Multiplicities of irreducible summands in Kostant-Kumar modules and in
//! the full tensor product, by generating function and by crystal count.

use affine_crystals::kk::{decomposition, decomposition_via_crystal, full_tensor_decomposition, KkSpec};
use affine_crystals::weight::Fundamental;

fn main() -> affine_crystals::Result<()> {
    let cutoff = 5;
    for lambda in Fundamental::ALL {
        for spec in KkSpec::all_up_to(lambda, 5) {
            let table = decomposition(&spec, cutoff);
            assert_eq!(table, decomposition_via_crystal(&spec, cutoff));
            println!("{spec}");
            print!("{}", table.summand_lines());
        }
        println!("{lambda} ⊗ Λ0 up to n = {cutoff}:");
        print!("{}", full_tensor_decomposition(lambda, cutoff).to_tsv());
    }
    let spec = KkSpec::new(Fundamental::L0, 7)?;
    println!("{}", decomposition(&spec, 4).to_json_value());
    Ok(())
}
