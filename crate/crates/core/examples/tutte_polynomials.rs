// Tutte, characteristic and h(u,v) polynomials, each by two routes.
//
// cargo run --example tutte_polynomials

use matroid_workbench::catalog;
use matroid_workbench::tutte::{char_poly, h_from_tutte, h_polynomial, h_subset_sum, tutte_dc, tutte_sum, TutteCache};
use matroid_workbench::{Matroid, Result};

pub fn run_example() -> Result<()> {
    let cache = TutteCache::new();
    for (name, m) in [
        ("U_2,3", Matroid::uniform(2, 3)?),
        ("K4", catalog::k4()),
        ("Fano", catalog::fano()),
    ] {
        let sum = tutte_sum(&m)?;
        let dc = tutte_dc(&m, &cache)?;
        assert_eq!(sum, dc);
        println!("{name}: T = {sum}");

        let chi = char_poly(&m)?;
        println!("  chi = {}", chi.chi);
        if let Some(reduced) = &chi.reduced {
            println!("  reduced chi = {reduced}");
        }

        let h = h_polynomial(&m)?;
        assert_eq!(h_subset_sum(&m)?, h_from_tutte(&sum, m.size(), m.rank())?);
        println!("  h = {}", h.poly);
    }
    println!("memo cache: {} entries, {} hits", cache.len(), cache.hits());

    let u23 = Matroid::uniform(2, 3)?;
    println!("JSON: {}", tutte_sum(&u23)?.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("tutte polynomials");
}
