//! Lusztig–Spaltenstein induction and Richardson orbits in type A.

use reductive_slices::roots::{ls_induce, orbit_dimension, richardson, LeviOrbitPair, Partition};

fn main() -> reductive_slices::Result<()> {
    for blocks in [vec![1, 1, 1], vec![2, 1], vec![3, 2, 2]] {
        let r = richardson(&blocks)?;
        println!("Richardson({blocks:?}) = {:?}, dim {}", r.parts(), orbit_dimension(&r, r.total())?);
    }
    let pair = LeviOrbitPair::new(vec![2, 2], vec![Partition::new(vec![2])?, Partition::new(vec![1, 1])?])?;
    let ind = ls_induce(&pair)?;
    println!("Ind from gl_2 x gl_2 of ((2), (1,1)) = {:?}", ind.parts());
    Ok(())
}
