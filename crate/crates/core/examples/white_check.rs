// Degree-3 fibers of matroid toric ideals under quadric exchange moves.
//
// cargo run --release --example white_check

use matroid_workbench::catalog;
use matroid_workbench::toric_white::{
    check_degree, symmetric_exchange_neighbors, toric_fibers, DEFAULT_MULTISET_BUDGET,
};
use matroid_workbench::{ElementSet, Matroid, Result};

pub fn run_example() -> Result<()> {
    let u24 = Matroid::uniform(2, 4)?;
    let b1: ElementSet = [0, 1].into_iter().collect();
    let b2: ElementSet = [2, 3].into_iter().collect();
    println!(
        "exchanges of {{01, 23}}: {:?}",
        symmetric_exchange_neighbors(&u24, b1, b2)
    );

    let fibers = toric_fibers(&u24, 2, DEFAULT_MULTISET_BUDGET)?;
    let biggest = fibers.iter().max_by_key(|f| f.vertices.len()).expect("fibers exist");
    println!(
        "U_2,4 degree 2: {} fibers; largest has multidegree {:?} and {} vertices",
        fibers.len(),
        biggest.multidegree,
        biggest.vertices.len()
    );

    for (name, m) in [("U_2,4", u24), ("K4", catalog::k4()), ("Fano", catalog::fano())] {
        let report = check_degree(&m, 3, DEFAULT_MULTISET_BUDGET)?;
        println!(
            "{name}: {} multisets in {} fibers: {}",
            report.multisets, report.fibers, report.verdict
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("white check example");
}
