// Build matroids from JSON descriptors and explore rank, minors and duality.
//
// cargo run --example matroid_basics

use matroid_workbench::{catalog, Descriptor, ElementSet, Matroid, Result};

fn set(elems: &[usize]) -> ElementSet {
    elems.iter().copied().collect()
}

pub fn run_example() -> Result<()> {
    let fano = Descriptor::from_json(
        r#"{"type":"linear","field":"GF(2)",
            "matrix":[[1,0,0,0,1,1,1],[0,1,0,1,0,1,1],[0,0,1,1,1,0,1]]}"#,
    )?
    .to_matroid()?;
    println!("Fano: {} elements, rank {}", fano.size(), fano.rank());
    println!("  rank of line {{0,1,5}}: {}", fano.rank_of(set(&[0, 1, 5]))?);
    println!("  bases: {}, circuits: {}", fano.bases()?.len(), fano.circuits()?.len());
    assert_eq!(fano.bases()?.len(), 28);

    let minor = fano.minor(set(&[6]), set(&[0]))?;
    println!("  Fano \\ 6 / 0: {} elements, rank {}", minor.size(), minor.rank());

    let dual = fano.dual();
    println!(
        "  dual: rank {}, loops {:?}, coloops {:?}",
        dual.rank(),
        dual.loops(),
        dual.coloops()
    );
    assert_eq!(dual.dual().bases()?, fano.bases()?);

    let k4 = catalog::k4();
    println!(
        "K4: {} spanning trees, connected: {}",
        k4.bases()?.len(),
        k4.is_connected()?
    );

    let u12 = Matroid::uniform(1, 2)?;
    println!("U_1,2 bases: {:?}", u12.bases()?);
    println!("U_1,2 contract 0 has loops {:?}", u12.contract(0)?.loops());

    let text = serde_json::to_string(&Descriptor::from_matroid(&k4)).expect("descriptors serialize");
    println!("K4 descriptor: {text}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("matroid basics");
}
