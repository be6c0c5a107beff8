//! Export the certified closure order on decomposition classes as DOT.
//! `cargo run --example atlas_dot -- 3 | dot -Tsvg > gl3.svg`

use reductive_slices::atlas::build_atlas;
use reductive_slices::lie::LieAlgebraSpec;

fn main() -> reductive_slices::Result<()> {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    print!("{}", build_atlas(LieAlgebraSpec::gl(n), 6)?.to_dot());
    Ok(())
}
