//! Enumerate decomposition classes and classify a matrix.

use reductive_slices::classes::{class_dimension, classify, enumerate_classes};
use reductive_slices::lie::LieAlgebraSpec;
use reductive_slices::linalg::RationalMatrix;

fn main() -> reductive_slices::Result<()> {
    let g = LieAlgebraSpec::gl(3);
    for label in enumerate_classes(g) {
        println!("{label:<40} dim {}", class_dimension(&label)?);
    }
    let x = g.element(RationalMatrix::from_ints(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 2]]))?;
    println!("classify(x) = {}", classify(&x)?);
    // an irrational spectrum is reported, not approximated
    let y = LieAlgebraSpec::gl(2).element(RationalMatrix::from_ints(&[&[0, 2], &[1, 0]]))?;
    println!("classify(y) -> {}", classify(&y).unwrap_err());
    Ok(())
}
