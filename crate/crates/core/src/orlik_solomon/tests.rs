use super::*;
use crate::catalog;
use crate::tutte::char_poly;
use num_traits::Signed;

fn set(v: &[usize]) -> ElementSet {
    v.iter().copied().collect()
}

fn digits(s: &str) -> ElementSet {
    s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
}

fn q(v: i64) -> num_rational::BigRational {
    Rationals.from_i64(v)
}

#[test]
fn u23_degree_one_and_two() {
    let m = Matroid::uniform(2, 3).unwrap();
    let alg = OsAlgebra::new(&m, Rationals).unwrap();
    assert_eq!(alg.space(1).unwrap().dimension(), 3);
    assert_eq!(alg.space(1).unwrap().relation_rank(), 0);
    let s2 = alg.space(2).unwrap();
    assert_eq!(s2.dimension(), 2);
    assert_eq!(s2.relation_rank(), 1);
    // the only relation: e12 - e02 + e01
    let rel = koszul_boundary(Rationals, set(&[0, 1, 2])).unwrap();
    assert!(s2.normal_form(&rel).unwrap().iter().all(|c| c == &q(0)));
}

#[test]
fn u23_normal_form_of_e12() {
    let m = Matroid::uniform(2, 3).unwrap();
    let alg = OsAlgebra::new(&m, Rationals).unwrap();
    let s2 = alg.space(2).unwrap();
    assert_eq!(s2.basis(), &[set(&[0, 1]), set(&[0, 2])]);
    let nf = s2
        .normal_form(&ExteriorElement::monomial(Rationals, set(&[1, 2])))
        .unwrap();
    // e12 = e02 - e01
    assert_eq!(nf, vec![q(-1), q(1)]);
}

#[test]
fn normal_form_is_idempotent_on_basis() {
    let m = catalog::fano();
    let alg = OsAlgebra::new(&m, PrimeField::new(2).unwrap()).unwrap();
    for k in 0..=3 {
        let s = alg.space(k).unwrap();
        for (i, b) in s.basis().iter().enumerate() {
            let nf = s.normal_form(&ExteriorElement::monomial(*alg.field(), *b)).unwrap();
            let unit: Vec<u64> = (0..s.dimension()).map(|j| (i == j) as u64).collect();
            assert_eq!(nf, unit);
        }
    }
}

#[test]
fn circuit_boundaries_die() {
    let m = catalog::fano();
    let alg = OsAlgebra::new(&m, Rationals).unwrap();
    for c in m.circuits().unwrap() {
        let d = koszul_boundary(Rationals, *c).unwrap();
        assert!(alg.normal_form(&d).unwrap().iter().all(|x| x == &q(0)), "{c:?}");
    }
}

#[test]
fn degree_mismatch_rejected() {
    let m = Matroid::uniform(2, 3).unwrap();
    let alg = OsAlgebra::new(&m, Rationals).unwrap();
    let x = ExteriorElement::generator(Rationals, 0);
    assert!(matches!(
        alg.space(2).unwrap().normal_form(&x),
        Err(WorkbenchError::InvalidInput(_))
    ));
}

#[test]
fn loops_rejected() {
    let m = Matroid::graphic(&[(0, 0), (0, 1)]).unwrap();
    assert!(matches!(
        OsAlgebra::new(&m, Rationals),
        Err(WorkbenchError::LooplessRequired(_))
    ));
    assert!(matches!(nbc_sets(&m, 1), Err(WorkbenchError::LooplessRequired(_))));
}

#[test]
fn fano_degree_two_over_two_fields() {
    let m = catalog::fano();
    assert_eq!(os_dimensions(&m, FieldSpec::Prime(2)).unwrap(), vec![1, 7, 14, 8]);
    assert_eq!(os_dimensions(&m, FieldSpec::Rationals).unwrap(), vec![1, 7, 14, 8]);
}

#[test]
fn u23_broken_circuits_and_nbc() {
    let m = Matroid::uniform(2, 3).unwrap();
    assert_eq!(broken_circuits(&m).unwrap(), vec![set(&[1, 2])]);
    let counts: Vec<usize> = (0..=2).map(|k| nbc_sets(&m, k).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 3, 2]);
}

#[test]
fn fano_nbc_table() {
    let m = catalog::fano();
    let counts: Vec<usize> = (0..=3).map(|k| nbc_sets(&m, k).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 7, 14, 8]);
    let singles: Vec<ElementSet> = (0..7).map(ElementSet::singleton).collect();
    assert_eq!(nbc_sets(&m, 1).unwrap(), singles);
    let mut pairs: Vec<ElementSet> = [
        "01", "02", "03", "04", "05", "06", "12", "13", "14", "34", "25", "35", "16", "26",
    ]
    .iter()
    .map(|s| digits(s))
    .collect();
    pairs.sort();
    assert_eq!(nbc_sets(&m, 2).unwrap(), pairs);
    let triples: Vec<ElementSet> = ["012", "013", "014", "016", "025", "026", "034", "035"]
        .iter()
        .map(|s| digits(s))
        .collect();
    assert_eq!(nbc_sets(&m, 3).unwrap(), triples);
}

#[test]
fn boolean_nbc_is_everything() {
    let m = Matroid::boolean(4).unwrap();
    assert!(broken_circuits(&m).unwrap().is_empty());
    for k in 0..=4 {
        let expected = num_integer::binomial(4, k);
        assert_eq!(nbc_sets(&m, k).unwrap().len(), expected);
    }
}

#[test]
fn reduced_nbc_examples() {
    let m = Matroid::uniform(2, 3).unwrap();
    let alg = OsAlgebra::new(&m, Rationals).unwrap();
    let basis = alg.reduced_nbc_basis(1).unwrap();
    assert_eq!(
        basis,
        vec![
            ExteriorElement::difference(Rationals, 1, 0),
            ExteriorElement::difference(Rationals, 2, 0)
        ]
    );
    assert_eq!(alg.reduced_space(1).unwrap().dimension, 2);

    let fano = catalog::fano();
    let expected: Vec<ElementSet> = ["12", "13", "14", "16", "25", "26", "34", "35"]
        .iter()
        .map(|s| digits(s))
        .collect();
    assert_eq!(reduced_nbc_index_sets(&fano, 2).unwrap(), expected);

    let b = Matroid::boolean(4).unwrap();
    let alg = OsAlgebra::new(&b, Rationals).unwrap();
    for k in 0..4 {
        assert_eq!(alg.reduced_space(k).unwrap().dimension, num_integer::binomial(3, k));
    }
}

#[test]
fn products() {
    let m = Matroid::uniform(2, 3).unwrap();
    let alg = OsAlgebra::new(&m, Rationals).unwrap();
    let a = ExteriorElement::difference(Rationals, 1, 0);
    assert!(alg.multiply(&a, &a).unwrap().is_zero());
    // (e1 - e0)(e2 - e0) = e12 - e02 + e01 is the boundary of the circuit 012,
    // matching reduced OS^2 = 0 for a rank-2 matroid.
    let b = ExteriorElement::difference(Rationals, 2, 0);
    assert_eq!(a.wedge(&b), koszul_boundary(Rationals, set(&[0, 1, 2])).unwrap());
    assert!(alg.multiply(&a, &b).unwrap().is_zero());

    let fano = catalog::fano();
    let alg = OsAlgebra::new(&fano, Rationals).unwrap();
    let ab = alg.multiply(&a, &b).unwrap();
    assert!(!ab.is_zero());
    assert!(ab.terms().all(|(s, _)| alg.space(2).unwrap().basis().contains(&s)));
    let ba = alg.multiply(&b, &a).unwrap();
    assert_eq!(ab, ba.scale(&q(-1)));
}

#[test]
fn product_of_generators_gives_reduced_basis_element() {
    let fano = catalog::fano();
    let f2 = PrimeField::new(2).unwrap();
    let alg = OsAlgebra::new(&fano, f2).unwrap();
    for s in reduced_nbc_index_sets(&fano, 2).unwrap() {
        let v = s.to_vec();
        let prod = alg
            .multiply(
                &ExteriorElement::difference(f2, v[0], 0),
                &ExteriorElement::difference(f2, v[1], 0),
            )
            .unwrap();
        assert_eq!(prod, alg.reduce(&alg.reduced_monomial(s)).unwrap());
    }
}

#[test]
fn circuit_only_generators_agree() {
    for m in [catalog::fano(), catalog::k4(), Matroid::uniform(3, 6).unwrap()] {
        let all = OsAlgebra::new(&m, Rationals).unwrap();
        let circ = OsAlgebra::with_generators(&m, Rationals, RelationGenerators::CircuitsOnly).unwrap();
        assert_eq!(all.dimensions().unwrap(), circ.dimensions().unwrap());
    }
}

#[test]
fn dimensions_match_whitney_numbers() {
    for m in [
        catalog::fano(),
        catalog::k4(),
        Matroid::uniform(2, 4).unwrap(),
        catalog::generic_rational_3x6(),
    ] {
        let chi = char_poly(&m).unwrap();
        let r = m.rank() as u32;
        let dims = OsAlgebra::new(&m, Rationals).unwrap().dimensions().unwrap();
        for (k, d) in dims.iter().enumerate() {
            assert_eq!(chi.chi.coeff(r - k as u32).abs(), (*d).into());
        }
        let reduced = chi.reduced.unwrap();
        let rdims = OsAlgebra::new(&m, Rationals).unwrap().reduced_dimensions().unwrap();
        for (k, d) in rdims.iter().enumerate() {
            assert_eq!(reduced.coeff(r - 1 - k as u32).abs(), (*d).into());
        }
    }
}
