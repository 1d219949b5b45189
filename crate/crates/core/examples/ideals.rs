// Ideal arithmetic and the class group of Z[sqrt(-5)].

use detdiv::{Ideal, IdealClass, Ring, RingElem};

pub fn run_example() -> detdiv::Result<()> {
    let r = Ring::ZSqrtMinus5;
    let p = Ideal::from_generators(&[RingElem::quad(2, 0), RingElem::quad(1, 1)])?;
    println!("p = (2, 1+sqrt(-5)), HNF {:?}, norm {}", p.hnf().unwrap(), p.norm());
    println!("p principal? {}", p.is_principal());

    let p2 = p.mul(&p)?;
    assert_eq!(p2, Ideal::from_int(r, 2));
    println!("p^2 = (2)");

    let q = Ideal::from_generators(&[RingElem::quad(3, 0), RingElem::quad(1, 1)])?;
    let pq = p.mul(&q)?;
    println!("p q principal? {} generator {:?}", pq.is_principal(), pq.principal_generator().map(|g| (g.a().clone(), g.b().clone())));

    let c = IdealClass::of(&p)?.mul(&IdealClass::of(&q)?)?;
    println!("[p][q] = {}", c.label());

    let inv = detdiv::FracIdeal::from_ideal(p.clone())?.inverse();
    println!("p^-1 = {:?} / {}", inv.num().hnf().unwrap(), inv.den());
    Ok(())
}

fn main() -> detdiv::Result<()> {
    run_example()
}
