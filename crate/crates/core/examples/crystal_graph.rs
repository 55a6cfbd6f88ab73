//! A truncated crystal graph of a Kostant-Kumar crystal, written as DOT.

use affine_crystals::kk::KkSpec;
use affine_crystals::tensor::crystal_graph;
use affine_crystals::weight::Fundamental;

fn main() -> affine_crystals::Result<()> {
    let spec = KkSpec::new(Fundamental::L0, 1)?;
    let max_boxes = 3;
    let graph = crystal_graph(&spec.members(max_boxes), max_boxes);
    eprintln!("{spec}: {} vertices, {} edges", graph.vertex_count(), graph.edge_count());
    print!("{}", graph.to_dot());
    Ok(())
}
