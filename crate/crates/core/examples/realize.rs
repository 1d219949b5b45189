// Realizability of divisor triples.

use detdiv::realize::{check_triple, construct_from_elementary, Triple};
use detdiv::{divisor_chain, Ideal, Ring, RingElem};

pub fn run_example() -> detdiv::Result<()> {
    for (a, b, c) in [
        (&[1, 2][..], &[1, 2][..], &[2, 4][..]),
        (&[1, 4][..], &[1, 4][..], &[2, 16][..]),
        (&[2, 4][..], &[1, 1][..], &[1, 4][..]),
        (&[1, 2, 4][..], &[1, 2, 4][..], &[2, 4, 16][..]),
    ] {
        let v = check_triple(&Triple::from_ints(a, b, c)?)?;
        println!("{a:?} {b:?} {c:?}: {} {:?} ({})", v.outcome, v.violated, v.rationale);
        if let Some((wa, wb)) = v.witness {
            println!("A =\n{wa}\nB =\n{wb}");
        }
    }

    let p = Ideal::from_generators(&[RingElem::quad(2, 0), RingElem::quad(1, 1)])?;
    let m = construct_from_elementary(Ring::ZSqrtMinus5, &[p.clone(), p])?;
    println!("matrix with e = (p, p):\n{m}");
    println!("d_2 = {:?}", divisor_chain(&m)?.last().hnf());
    Ok(())
}

fn main() -> detdiv::Result<()> {
    run_example()
}
