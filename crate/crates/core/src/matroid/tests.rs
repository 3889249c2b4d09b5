use super::*;
use crate::catalog;

fn set(v: &[usize]) -> ElementSet {
    v.iter().copied().collect()
}

fn q_matrix(rows: &[Vec<i64>]) -> Matroid {
    Matroid::from_integer_matrix(FieldSpec::Rationals, rows).unwrap()
}

/// Independent rank oracle: brute-force the largest independent subset by
/// determinant-free GF(2) span enumeration.
fn gf2_span_rank(cols: &[u8]) -> usize {
    let mut span = vec![0u8];
    for &c in cols {
        if !span.contains(&c) {
            let more: Vec<u8> = span.iter().map(|s| s ^ c).collect();
            span.extend(more);
        }
    }
    span.len().trailing_zeros() as usize
}

#[test]
fn fano_from_matrix() {
    let m = catalog::fano();
    assert_eq!((m.size(), m.rank()), (7, 3));
    assert!(m.is_loopless());
    // columns as 3-bit vectors, row 0 is the high bit
    let m_cols: Vec<u8> = (0..7)
        .map(|c| {
            catalog::fano_matrix()
                .iter()
                .fold(0u8, |acc, row| acc << 1 | row[c] as u8)
        })
        .collect();
    for a in m.ground_set().subsets() {
        let cols: Vec<u8> = a.iter().map(|c| m_cols[c]).collect();
        assert_eq!(m.rank_of(a).unwrap(), gf2_span_rank(&cols), "{a:?}");
    }
    for line in catalog::FANO_LINES {
        assert_eq!(m.rank_of(set(&line)).unwrap(), 2);
    }
}

#[test]
fn single_generic_row_is_u12() {
    let m = q_matrix(&[vec![1, 1]]);
    assert_eq!(m.rank_of(set(&[0])).unwrap(), 1);
    assert_eq!(m.rank_of(set(&[1])).unwrap(), 1);
    assert_eq!(m.rank_of(set(&[0, 1])).unwrap(), 1);
}

#[test]
fn u23_from_matrix_matches_uniform() {
    let m = q_matrix(&[vec![1, 0, 1], vec![0, 1, 1]]);
    let u = Matroid::uniform(2, 3).unwrap();
    for a in m.ground_set().subsets() {
        assert_eq!(m.rank_of(a).unwrap(), a.len().min(2));
        assert_eq!(u.rank_of(a).unwrap(), a.len().min(2));
    }
    assert_eq!(m.rank_of(set(&[0, 1, 2])).unwrap(), 2);
    assert_eq!(m.canonical_key().unwrap(), u.canonical_key().unwrap());
}

#[test]
fn rank_rejects_out_of_range() {
    let m = Matroid::uniform(2, 3).unwrap();
    assert!(matches!(m.rank_of(set(&[3])), Err(WorkbenchError::InvalidInput(_))));
    assert_eq!(m.rank_of(ElementSet::EMPTY).unwrap(), 0);
}

#[test]
fn empty_inputs_rejected() {
    assert!(matches!(
        Matroid::from_integer_matrix(FieldSpec::Rationals, &[]),
        Err(WorkbenchError::InvalidInput(_))
    ));
    assert!(matches!(
        Matroid::from_integer_matrix(FieldSpec::Rationals, &[vec![]]),
        Err(WorkbenchError::InvalidInput(_))
    ));
    assert!(matches!(
        Matroid::from_integer_matrix(FieldSpec::Prime(9), &[vec![1]]),
        Err(WorkbenchError::InvalidField(_))
    ));
    assert!(Matroid::uniform(0, 0).is_err());
}

#[test]
fn contracting_u23() {
    let m = Matroid::uniform(2, 3).unwrap();
    let c = m.contract(2).unwrap();
    assert_eq!((c.size(), c.rank()), (2, 1));
    let lin = q_matrix(&[vec![1, 0, 1], vec![0, 1, 1]]).contract(2).unwrap();
    for a in c.ground_set().subsets() {
        assert_eq!(c.rank_of(a).unwrap(), a.len().min(1));
        assert_eq!(lin.rank_of(a).unwrap(), a.len().min(1));
    }
}

#[test]
fn trivial_minor_is_identity() {
    let m = catalog::fano();
    let same = m.minor(ElementSet::EMPTY, ElementSet::EMPTY).unwrap();
    assert_eq!(m.rank_table().unwrap(), same.rank_table().unwrap());
}

#[test]
fn minor_argument_errors() {
    let m = catalog::fano();
    assert!(matches!(
        m.minor(set(&[1, 2]), set(&[2])),
        Err(WorkbenchError::InvalidInput(_))
    ));
    assert!(m.minor(m.ground_set(), ElementSet::EMPTY).is_err());
    assert!(m.minor(set(&[9]), ElementSet::EMPTY).is_err());
}

#[test]
fn fano_delete_six() {
    let m = catalog::fano();
    let d = m.delete(6).unwrap();
    assert_eq!((d.size(), d.rank()), (6, 3));
    // Lines avoiding 6: 015, 024, 123, 345.
    let brute = ElementSet::k_subsets(6, 3)
        .filter(|s| m.rank_of(*s).unwrap() == 3)
        .count();
    assert_eq!(brute, 20 - 4);
    assert_eq!(d.bases().unwrap().len(), brute);
    assert_ne!(m.canonical_key().unwrap(), d.canonical_key().unwrap());
}

#[test]
fn minor_rank_formula_matches_backings() {
    let corpus = [
        catalog::fano(),
        catalog::k4(),
        catalog::generic_rational_3x6(),
        Matroid::uniform(3, 6).unwrap(),
        Matroid::from_bases(7, catalog::fano().bases().unwrap().to_vec()).unwrap(),
    ];
    for m in &corpus {
        let full = m.ground_set();
        for (deleted, contracted) in [
            (set(&[0]), set(&[1])),
            (set(&[]), set(&[2, 3])),
            (set(&[1, 4]), set(&[])),
        ] {
            let minor = m.minor(deleted, contracted).unwrap();
            let rest = full.difference(deleted.union(contracted));
            let rc = m.rank_of(contracted).unwrap();
            for a in rest.subsets() {
                let expected = m.rank_of(a.union(contracted)).unwrap() - rc;
                let removed = deleted.union(contracted);
                assert_eq!(minor.rank_of(a.compress(removed)).unwrap(), expected);
            }
        }
    }
}

#[test]
fn u24_is_self_dual() {
    let m = Matroid::uniform(2, 4).unwrap();
    let d = m.dual();
    for a in m.ground_set().subsets() {
        assert_eq!(m.rank_of(a).unwrap(), d.rank_of(a).unwrap());
    }
    let lin = q_matrix(&[vec![1, 0, 1, 1], vec![0, 1, 1, 2]]);
    let ld = lin.dual();
    for a in m.ground_set().subsets() {
        assert_eq!(ld.rank_of(a).unwrap(), a.len().min(2));
    }
}

#[test]
fn boolean_dual_is_all_loops() {
    let m = Matroid::boolean(4).unwrap();
    let d = m.dual();
    assert_eq!(d.rank(), 0);
    assert_eq!(d.loops(), d.ground_set());
    let lin = Matroid::from_integer_matrix(FieldSpec::Rationals, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])
        .unwrap()
        .dual();
    assert_eq!(lin.rank(), 0);
}

#[test]
fn fano_dual_bases() {
    let m = catalog::fano();
    let d = m.dual();
    assert_eq!(d.rank(), 4);
    assert_eq!(d.bases().unwrap().len(), 28);
    let mut complements: Vec<ElementSet> = m
        .bases()
        .unwrap()
        .iter()
        .map(|b| m.ground_set().difference(*b))
        .collect();
    complements.sort();
    assert_eq!(d.bases().unwrap(), &complements[..]);
}

#[test]
fn fano_bases_and_circuits() {
    let m = catalog::fano();
    assert_eq!(m.bases().unwrap().len(), 28);
    let circuits = m.circuits().unwrap();
    assert_eq!(circuits.iter().filter(|c| c.len() == 3).count(), 7);
    assert_eq!(circuits.iter().filter(|c| c.len() == 4).count(), 7);
    assert_eq!(circuits.len(), 14);
    assert!(circuits.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn u12_bases_and_circuits() {
    let m = Matroid::uniform(1, 2).unwrap();
    assert_eq!(m.bases().unwrap(), &[set(&[0]), set(&[1])]);
    assert_eq!(m.circuits().unwrap(), &[set(&[0, 1])]);
    assert!(m.loops().is_empty() && m.coloops().is_empty());
}

#[test]
fn boolean_structure() {
    let m = Matroid::boolean(4).unwrap();
    assert_eq!(m.bases().unwrap(), &[m.ground_set()]);
    assert!(m.circuits().unwrap().is_empty());
    assert_eq!(m.coloops(), m.ground_set());
}

#[test]
fn enumeration_limit() {
    let m = Matroid::uniform(2, 21).unwrap();
    assert!(matches!(m.bases(), Err(WorkbenchError::TooLarge { .. })));
    let m = Matroid::uniform(2, 5).unwrap().with_enumeration_limit(4);
    assert!(matches!(m.circuits(), Err(WorkbenchError::TooLarge { .. })));
}

#[test]
fn explicit_bases_are_validated() {
    // {01, 23} violates exchange
    assert!(Matroid::from_bases(4, vec![set(&[0, 1]), set(&[2, 3])]).is_err());
    let m = Matroid::from_bases(3, vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]).unwrap();
    assert!(!m.is_realized());
    match m.backing() {
        Backing::Bases(b) => assert!(b.validated()),
        _ => unreachable!(),
    }
}

#[test]
fn graphic_k4() {
    let m = catalog::k4();
    assert_eq!(m.rank(), 3);
    assert_eq!(m.bases().unwrap().len(), 16);
    assert!(m.is_connected().unwrap());
}

#[test]
fn loops_and_condition_ll() {
    let m = q_matrix(&[vec![1, 0, 1], vec![0, 0, 1]]);
    assert_eq!(m.loops(), set(&[1]));
    assert!(!m.is_loopless());
    let g = Matroid::graphic(&[(0, 0), (0, 1)]).unwrap();
    assert_eq!(g.loops(), set(&[0]));
    assert_eq!(g.coloops(), set(&[1]));
}

#[test]
fn connectivity() {
    assert!(!Matroid::boolean(3).unwrap().is_connected().unwrap());
    assert!(Matroid::uniform(2, 4).unwrap().is_connected().unwrap());
    assert!(catalog::fano().is_connected().unwrap());
}

#[test]
fn permuted_uniform_key_is_stable() {
    let a = q_matrix(&[vec![1, 0, 1], vec![0, 1, 1]]);
    let b = q_matrix(&[vec![1, 1, 0], vec![1, 0, 1]]);
    assert_eq!(a.canonical_key().unwrap(), b.canonical_key().unwrap());
}
