// Brute-force scans over small matrices.

use detdiv::oracle::{cross_check_checker, enumerate_realized_triples, verify_bound_theorems, ScanConfig};
use detdiv::Ring;

pub fn run_example() -> detdiv::Result<()> {
    let cfg = ScanConfig::exhaustive(Ring::Z, 2, 2).with_det_bound(4);
    let report = enumerate_realized_triples(&cfg)?;
    println!("{} realized triples from {} pairs", report.realized.len(), report.stat("pairs"));

    let bounds = verify_bound_theorems(&ScanConfig::sampled(Ring::ZSqrtMinus5, 2, 2, 200, 7))?;
    println!("bounds over Z[sqrt(-5)]: {} counterexamples", bounds.counterexamples.len());

    let cross = cross_check_checker(&cfg)?;
    println!("checker cross-check ok: {} ({:?})", cross.ok(), cross.stats);
    Ok(())
}

fn main() -> detdiv::Result<()> {
    run_example()
}
