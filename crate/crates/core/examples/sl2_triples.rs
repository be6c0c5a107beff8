//! Jacobson–Morozov completion for every nilpotent orbit of gl_4.

use reductive_slices::lie::{jm_complete, LieAlgebraSpec};
use reductive_slices::linalg::rational;
use reductive_slices::roots::Partition;

fn main() -> reductive_slices::Result<()> {
    let g = LieAlgebraSpec::gl(4);
    for lambda in Partition::all(4).into_iter().filter(|l| l.len() < 4) {
        let e = g.element(lambda.nilpotent_representative())?;
        let t = jm_complete(&e)?;
        let h: Vec<String> = t.h.matrix().diagonal().iter().map(rational::format).collect();
        println!("{:?}: relations hold = {}, h = diag({})", lambda.parts(), t.check()?.all(), h.join(", "));
    }
    Ok(())
}
