// Determinantal and elementary divisors through compound matrices.

use detdiv::{divisor_chain, Matrix};

pub fn run_example() -> detdiv::Result<()> {
    let a = Matrix::from_ints([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    println!("A =\n{a}");
    println!("C_2(A) =\n{}", a.compound(2)?);
    let chain = divisor_chain(&a)?;
    for (k, (d, e)) in chain.determinantal().iter().zip(chain.elementary()).enumerate() {
        println!("d_{} = {:?}  e_{} = {:?}", k + 1, d.int_generator().unwrap(), k + 1, e.int_generator().unwrap());
    }

    let q = Matrix::from_quads([[(2, 0), (0, 0)], [(1, 1), (0, 0)]]);
    let chain = divisor_chain(&q)?;
    println!("rank {} d_1 HNF {:?}", detdiv::rank(&q), chain.determinantal()[0].hnf());
    println!("column class: {}", detdiv::column_class(&q)?.label());
    Ok(())
}

fn main() -> detdiv::Result<()> {
    run_example()
}
