// Smith normal form with certificates, and equivalence testing.

use detdiv::smith::{equivalent, smith_normal_form, transform_certificate};
use detdiv::Matrix;

pub fn run_example() -> detdiv::Result<()> {
    let a = Matrix::from_ints([[2, 4], [6, 8]]);
    let s = smith_normal_form(&a)?;
    println!("P =\n{}\nD =\n{}\nQ =\n{}", s.p, s.d, s.q);
    assert!(s.verify(&a)?);

    let b = Matrix::from_ints([[2, 0], [0, 4]]);
    println!("A ~ diag(2, 4)? {}", equivalent(&a, &b)?);
    if let Some((p, q)) = transform_certificate(&a, &b)? {
        assert_eq!(p.mul(&a)?.mul(&q)?, b);
        println!("certificate checked");
    }
    println!("A ~ diag(1, 8)? {}", equivalent(&a, &Matrix::from_ints([[1, 0], [0, 8]]))?);
    Ok(())
}

fn main() -> detdiv::Result<()> {
    run_example()
}
