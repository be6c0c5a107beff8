//! Natural and complementary slices, and membership checks.

use reductive_slices::lie::LieAlgebraSpec;
use reductive_slices::linalg::RationalMatrix;
use reductive_slices::slices::{complementary_slice, membership_sx, natural_slice, saturate_into};

fn main() -> reductive_slices::Result<()> {
    let g = LieAlgebraSpec::gl(3);
    let x = g.element(RationalMatrix::from_ints(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 2]]))?;
    let desc = natural_slice(&x)?;
    println!("{}", serde_json::to_string_pretty(&desc.to_doc()).unwrap());

    let cs = complementary_slice(&x, None)?;
    println!("complementary slice: dim {}", cs.affine.dim());

    let s = g.element(RationalMatrix::diag_ints(&[1, 1, 2]))?;
    for d in [[3, 4, 5], [3, 4, 3]] {
        let y = g.element(RationalMatrix::diag_ints(&d))?;
        let r = membership_sx(&y, &s)?;
        println!("diag{d:?} in S_x for x = diag[1, 1, 2]: {} (rank test {:?})", r.member, r.rank_test);
    }
    let y = g.element(RationalMatrix::from_ints(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 5]]))?;
    if let Some(z) = saturate_into(&cs, &y)? {
        println!("conjugate of y in the complementary slice:\n{}", z.matrix());
    }
    Ok(())
}
