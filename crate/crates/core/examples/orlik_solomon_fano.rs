// Orlik-Solomon algebra of the Fano plane: nbc bases, normal forms and the
// reduced algebra.
//
// cargo run --example orlik_solomon_fano

use matroid_workbench::catalog;
use matroid_workbench::orlik_solomon::{nbc_sets, ExteriorElement, OsAlgebra};
use matroid_workbench::{ElementSet, PrimeField, Rationals, Result};

pub fn run_example() -> Result<()> {
    let fano = catalog::fano();
    let over_gf2 = OsAlgebra::new(&fano, PrimeField::new(2)?)?;
    let over_q = OsAlgebra::new(&fano, Rationals)?;
    println!("dim OS^k over GF(2): {:?}", over_gf2.dimensions()?);
    println!("dim OS^k over Q:     {:?}", over_q.dimensions()?);
    println!("reduced dims:        {:?}", over_q.reduced_dimensions()?);

    for k in 1..=2 {
        let sets: Vec<Vec<usize>> = nbc_sets(&fano, k)?.iter().map(|s| s.to_vec()).collect();
        println!("nbc sets of size {k}: {sets:?}");
    }

    // e_0 e_1 e_5 is dependent, so its boundary vanishes in OS.
    let line: ElementSet = [0, 1, 5].into_iter().collect();
    let relation = ExteriorElement::monomial(Rationals, line).boundary()?;
    assert!(over_q.reduce(&relation)?.is_zero());
    println!("boundary of e_015 reduces to zero");

    let a = ExteriorElement::difference(Rationals, 1, 0);
    let b = ExteriorElement::difference(Rationals, 2, 0);
    let product = over_q.multiply(&a, &b)?;
    println!("(e1 - e0)(e2 - e0) = {}", product.to_json());

    let reduced = over_q.reduced_space(2)?;
    let index_sets: Vec<Vec<usize>> = reduced.index_sets.iter().map(|s| s.to_vec()).collect();
    println!("reduced nbc monomials in degree 2: {index_sets:?}");
    assert_eq!(reduced.dimension, 8);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("orlik-solomon example");
}
