// Block normal form of diag(A, 0) and the block lemma.

use detdiv::smith::{block_normal_form, pad_with_zero, verify_block_lemma};
use detdiv::Matrix;

pub fn run_example() -> detdiv::Result<()> {
    let a = Matrix::from_ints([[2, 1, 0], [0, 3, 1], [1, 0, 4]]);
    let f = block_normal_form(&a)?;
    for (k, b) in f.blocks.iter().enumerate() {
        println!("block {}:\n{b}", k + 1);
    }
    assert_eq!(f.p.mul(&pad_with_zero(&a))?.mul(&f.q)?, f.assembled()?);

    let blk = Matrix::from_quads([[(2, 0), (0, 0)], [(1, 1), (0, 0)]]);
    let report = verify_block_lemma(&[blk.clone(), blk])?;
    println!("lemma over Z[sqrt(-5)]: passed {}, class {}", report.passed(), report.class.label());
    Ok(())
}

fn main() -> detdiv::Result<()> {
    run_example()
}
