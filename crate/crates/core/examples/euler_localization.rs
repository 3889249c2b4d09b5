// Euler characteristics on the permutohedral variety by summing over
// torus-fixed points, checked against h(u,v).
//
// cargo run --release --example euler_localization

use matroid_workbench::catalog;
use matroid_workbench::localization::{
    calibrate, euler_char, euler_table, fixed_point_data, LocalizationOptions, SignConvention,
};
use matroid_workbench::tutte::h_polynomial;
use matroid_workbench::{Matroid, Result};

pub fn run_example() -> Result<()> {
    for result in calibrate()? {
        println!(
            "signs (fiber {:+}, tangent {:+}): {}",
            result.signs.fiber,
            result.signs.tangent,
            if result.passed { "passes" } else { "fails" }
        );
    }

    let u12 = Matroid::uniform(1, 2)?;
    let at = fixed_point_data(&u12, &[0, 1], SignConvention::CALIBRATED)?;
    println!(
        "U_1,2 at w = (0,1): S {:?}, Q {:?}, tangent {:?}",
        at.s_chars, at.q_chars, at.tangent_chars
    );

    let options = LocalizationOptions::default();
    let hyperplane = catalog::generic_hyperplane(5);
    println!(
        "chi(Q_H) for a hyperplane in k^5: {}",
        euler_char(&hyperplane, 0, 1, &options)?
    );

    for (name, m) in [("U_2,4", Matroid::uniform(2, 4)?), ("Fano", catalog::fano())] {
        let table = euler_table(&m, &options)?;
        let h = h_polynomial(&m)?.poly;
        println!(
            "{name}: {} fixed points, a = {:?}",
            table.fixed_points, table.one_parameter_subgroup
        );
        for row in &table.entries {
            let row: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            println!("  {}", row.join(" "));
        }
        assert!(table.matches(&h));
        println!("  matches h = {h}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("localization example");
}
