//! The residual group A(x) and the subquotients around it.

use reductive_slices::classes::enumerate_classes;
use reductive_slices::lie::LieAlgebraSpec;
use reductive_slices::residual::{ax_presentation, subquotient_data, trivial_action_core};

fn main() -> reductive_slices::Result<()> {
    let g = LieAlgebraSpec::sl(4);
    for label in enumerate_classes(g) {
        let x = label.representative();
        let d = subquotient_data(&x)?;
        let p = ax_presentation(&x)?;
        println!(
            "{label:<44} rank T {} |C| {} A = Z^{} x (order {}) perp ok {}",
            d.rank_t,
            d.c_order,
            p.direct.free_rank,
            p.direct.torsion,
            trivial_action_core(&x)?.equal()
        );
    }
    Ok(())
}
