use super::*;
use crate::catalog;
use crate::tutte::h_polynomial;

fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

fn opts() -> LocalizationOptions {
    LocalizationOptions::default()
}

fn assert_table_matches_h(m: &Matroid) -> EulerTable {
    let table = euler_table(m, &opts()).unwrap();
    let h = h_polynomial(m).unwrap().poly;
    assert!(table.matches(&h), "table {:?} vs h = {h}", table.entries);
    table
}

#[test]
fn boolean_fixed_points_are_all_rank_steps() {
    let m = Matroid::boolean(3).unwrap();
    for w in (0..3).permutations(3) {
        let d = fixed_point_data(&m, &w, SignConvention::CALIBRATED).unwrap();
        assert_eq!(d.s_chars.len(), 3);
        assert!(d.q_chars.is_empty());
        assert_eq!(d.tangent_chars.len(), 2);
        assert!(d.tangent_chars.iter().all(Character::is_orthogonal_to_diagonal));
    }
}

#[test]
fn u12_fixed_point() {
    let m = Matroid::uniform(1, 2).unwrap();
    let d = fixed_point_data(&m, &[0, 1], SignConvention::CALIBRATED).unwrap();
    assert_eq!(d.s_chars, vec![Character::basis(2, 0, -1)]);
    assert_eq!(d.q_chars, vec![Character::basis(2, 1, -1)]);
    assert_eq!(d.tangent_chars, vec![Character::new(vec![1, -1])]);
}

#[test]
fn hyperplane_only_last_step_is_not_a_rank_step() {
    let m = catalog::generic_hyperplane(4);
    let d = fixed_point_data(&m, &[2, 0, 3, 1], SignConvention::CALIBRATED).unwrap();
    assert_eq!(d.s_chars.len(), 3);
    assert_eq!(d.q_chars, vec![Character::basis(4, 1, -1)]);
}

#[test]
fn non_permutations_are_rejected() {
    let m = Matroid::uniform(1, 2).unwrap();
    for w in [&[0, 0][..], &[0, 2], &[0]] {
        assert!(matches!(
            fixed_point_data(&m, w, SignConvention::CALIBRATED),
            Err(WorkbenchError::InvalidInput(_))
        ));
    }
}

#[test]
fn structure_sheaf_has_euler_characteristic_one() {
    for size in 1..=5 {
        let m = Matroid::boolean(size).unwrap();
        assert_eq!(
            euler_char(&m, 0, 0, &opts()).unwrap(),
            BigInt::one(),
            "n = {}",
            size - 1
        );
    }
}

#[test]
fn hyperplane_quotient_bundle() {
    for size in 2..=5 {
        let m = catalog::generic_hyperplane(size);
        assert_eq!(euler_char(&m, 0, 1, &opts()).unwrap(), BigInt::from(size));
    }
}

#[test]
fn out_of_range_entries_are_zero() {
    let m = Matroid::uniform(1, 2).unwrap();
    assert!(euler_char(&m, 2, 0, &opts()).unwrap().is_zero());
    assert!(euler_char(&m, 0, 2, &opts()).unwrap().is_zero());
}

#[test]
fn u12_table() {
    let t = assert_table_matches_h(&Matroid::uniform(1, 2).unwrap());
    assert_eq!(t.entries, ints(&[&[1, 2], &[0, 1]]));
    assert_eq!(t.fixed_points, 2);
}

#[test]
fn boolean_table_is_binomial_column() {
    let t = assert_table_matches_h(&Matroid::boolean(3).unwrap());
    assert_eq!(t.entries, ints(&[&[1], &[3], &[3], &[1]]));
}

#[test]
fn small_tables_match_h() {
    assert_table_matches_h(&Matroid::uniform(2, 3).unwrap());
    assert_table_matches_h(&Matroid::uniform(2, 4).unwrap());
    assert_table_matches_h(&catalog::generic_rational_3x5());
    assert_table_matches_h(&catalog::k4());
}

#[test]
fn independent_of_the_one_parameter_subgroup() {
    let m = Matroid::uniform(2, 4).unwrap();
    let first = euler_table(&m, &opts()).unwrap();
    let other = euler_table(
        &m,
        &LocalizationOptions {
            one_parameter_subgroup: Some(vec![5, -3, 11, 2]),
            ..opts()
        },
    )
    .unwrap();
    assert_ne!(first.one_parameter_subgroup, other.one_parameter_subgroup);
    assert_eq!(first.entries, other.entries);
}

#[test]
fn degenerate_subgroup_falls_back() {
    let m = Matroid::uniform(1, 2).unwrap();
    let t = euler_table(
        &m,
        &LocalizationOptions {
            one_parameter_subgroup: Some(vec![3, 3]),
            ..opts()
        },
    )
    .unwrap();
    assert!(is_generic(&t.one_parameter_subgroup));
    assert_eq!(t.entries, ints(&[&[1, 2], &[0, 1]]));
}

#[test]
fn dual_table_is_cremona_transpose() {
    for m in [
        Matroid::uniform(2, 4).unwrap(),
        Matroid::uniform(1, 3).unwrap(),
        catalog::generic_rational_3x5(),
    ] {
        let t = euler_table(&m, &opts()).unwrap();
        let d = euler_table(&m.dual(), &opts()).unwrap();
        assert_eq!(d.entries, t.cremona_transpose());
    }
}

#[test]
fn budget_is_enforced() {
    let m = Matroid::uniform(2, 8).unwrap();
    assert!(matches!(euler_table(&m, &opts()), Err(WorkbenchError::TooLarge { .. })));
    let small = LocalizationOptions {
        max_fixed_points: 5,
        ..opts()
    };
    assert!(matches!(
        euler_table(&Matroid::uniform(1, 3).unwrap(), &small),
        Err(WorkbenchError::TooLarge { .. })
    ));
}

#[test]
fn calibration_fixes_the_relative_sign() {
    let results = calibrate().unwrap();
    let passing: Vec<SignConvention> = results.iter().filter(|r| r.passed).map(|r| r.signs).collect();
    assert!(passing.contains(&SignConvention::CALIBRATED));
    assert!(passing.iter().all(|s| s.fiber * s.tangent == -1));
    assert_calibrated().unwrap();
}

#[test]
fn subset_sums() {
    let s = subset_sums_by_size(&[1, 2, 3]);
    assert_eq!(s[0][&0], 1);
    assert_eq!(s[2][&3], 1);
    assert_eq!(s[2][&5], 1);
    assert_eq!(s[3][&6], 1);
}

#[test]
fn fano_table_matches_h() {
    let t = assert_table_matches_h(&catalog::fano());
    assert_eq!(t.fixed_points, 5040);
    assert_eq!(t.entries.len(), 4);
    assert_eq!(t.entries[0].len(), 5);
}

#[test]
fn integer_factor_inverse_matches_series_inverse() {
    for c in [-9i64, -2, -1, 1, 3, 64] {
        let order = 6;
        let scale = BigRational::from_integer(num_traits::pow(BigInt::from(c), order));
        let exact = TruncatedSeries::localization_factor(c, order).inverse().unwrap();
        let scaled: Vec<BigRational> = scaled_factor_inverse(c, order)
            .into_iter()
            .map(|x| BigRational::from_integer(x) / &scale)
            .collect();
        assert_eq!(exact.coeffs(), &scaled[..]);
    }
}
