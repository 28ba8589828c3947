use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::exact_arith::matrix_rank;

fn yp(parts: &[usize]) -> YoungPartition {
    YoungPartition::new(parts.to_vec())
}

#[test]
fn p_restricted_examples() {
    let two_one = vec![yp(&[3]), yp(&[2, 1])];
    assert_eq!(p_restricted_partitions(3, Some(2)), two_one);
    assert_eq!(p_restricted_partitions(3, Some(3)), two_one);
    assert_eq!(p_restricted_partitions(3, Some(5)), vec![yp(&[3]), yp(&[2, 1]), yp(&[1, 1, 1])]);
    assert_eq!(p_restricted_partitions(3, None).len(), 3);
    assert_eq!(p_restricted_partitions(1, Some(2)), vec![yp(&[1])]);
}

#[test]
fn dominance_chain() {
    assert!(dominance_leq(&yp(&[3]), &yp(&[2, 1])).unwrap());
    assert!(dominance_leq(&yp(&[2, 1]), &yp(&[1, 1, 1])).unwrap());
    assert!(!dominance_leq(&yp(&[2, 1]), &yp(&[3])).unwrap());
    assert!(dominance_leq(&yp(&[2, 2]), &yp(&[2, 2])).unwrap());
    // Incomparable pair in size 6.
    assert!(!dominance_leq(&yp(&[3, 1, 1, 1]), &yp(&[2, 2, 2])).unwrap());
    assert!(!dominance_leq(&yp(&[2, 2, 2]), &yp(&[3, 1, 1, 1])).unwrap());
    assert!(dominance_leq(&yp(&[2]), &yp(&[1, 1, 1])).is_err());
}

#[test]
fn rsk_examples() {
    let w = Permutation::from_one_line(&[2, 3, 1]).unwrap();
    let (p, q) = rsk(&w);
    assert_eq!(p, vec![vec![1, 3], vec![2]]);
    assert_eq!(q, vec![vec![1, 2], vec![3]]);
    let (p, q) = rsk(&Permutation::identity(4));
    assert_eq!(p, vec![vec![1, 2, 3, 4]]);
    assert_eq!(q, p);
}

#[test]
fn rsk_round_trip_s4_and_s5() {
    for m in [4, 5] {
        let mut seen = std::collections::HashSet::new();
        for w in all_permutations(m) {
            let (p, q) = rsk(&w);
            assert_eq!(inverse_rsk(&p, &q).unwrap(), w);
            assert!(seen.insert((p, q)));
        }
    }
}

#[test]
fn type_a_cells_s3() {
    let c = type_a_cells(3).unwrap();
    let sizes: Vec<usize> = c.two_sided.iter().map(|(_, v)| v.len()).collect();
    assert_eq!(sizes, vec![1, 4, 1]);
    let mut left: Vec<usize> = c.left.iter().map(|v| v.len()).collect();
    left.sort();
    assert_eq!(left, vec![1, 1, 2, 2]);
    assert_eq!(type_a_cells(1).unwrap().two_sided.len(), 1);
    assert!(type_a_cells(8).is_err());
}

#[test]
fn left_cell_count_is_involution_count() {
    for m in 1..=6 {
        let c = type_a_cells(m).unwrap();
        let involutions = all_permutations(m).iter().filter(|w| Permutation::compose(w, w).is_identity()).count();
        assert_eq!(c.left.len(), involutions);
        let total: usize = c.shape_dims.iter().map(|(_, f)| f * f).sum();
        assert_eq!(total, factorial(m));
    }
}

#[test]
fn character_values() {
    assert_eq!(mn_character(&yp(&[2, 1]), &yp(&[1, 1, 1])).unwrap(), 2);
    assert_eq!(mn_character(&yp(&[4]), &yp(&[3, 1])).unwrap(), 1);
    assert_eq!(mn_character(&yp(&[1, 1, 1, 1]), &yp(&[2, 1, 1])).unwrap(), -1);
    assert_eq!(mn_character(&yp(&[1, 1, 1, 1]), &yp(&[3, 1])).unwrap(), 1);
    assert_eq!(mn_character(&yp(&[2, 2]), &yp(&[2, 2])).unwrap(), 2);
    assert!(mn_character(&yp(&[2]), &yp(&[1])).is_err());
    for s in partitions(6) {
        let ones = yp(&[1; 6]);
        assert_eq!(mn_character(&s, &ones).unwrap() as u128, s.dimension());
    }
}

#[test]
fn character_orthogonality() {
    for m in 1..=6 {
        let t = character_table(m);
        for (i, a) in t.values.iter().enumerate() {
            for (j, b) in t.values.iter().enumerate() {
                let s: i128 = t
                    .classes
                    .iter()
                    .enumerate()
                    .map(|(k, c)| class_size(c) as i128 * a[k] as i128 * b[k] as i128)
                    .sum();
                let expect = if i == j { factorial(m) as i128 } else { 0 };
                assert_eq!(s, expect, "m={m} rows {i},{j}");
            }
        }
    }
}

#[test]
fn central_idempotents_s2_and_s3() {
    let half = BigRational::new(1.into(), 2.into());
    let et = central_idempotent(&yp(&[2]), 2).unwrap();
    let es = central_idempotent(&yp(&[1, 1]), 2).unwrap();
    assert_eq!(et.coeffs, vec![half.clone(), half.clone()]);
    assert_eq!(es.coeffs, vec![half.clone(), -half]);

    let shapes = partitions(3);
    let es: Vec<_> = shapes.iter().map(|s| central_idempotent(s, 3).unwrap()).collect();
    let sum = es.iter().fold(GroupAlgebraElem::zero(3), |a, e| a.add(e));
    assert_eq!(sum, GroupAlgebraElem::one(3));
    for (i, a) in es.iter().enumerate() {
        for (j, b) in es.iter().enumerate() {
            let p = a.mul(b).unwrap();
            if i == j {
                assert_eq!(&p, a);
            } else {
                assert!(p.is_zero());
            }
        }
    }
    let triv = &es[0];
    assert!(triv.coeffs.iter().all(|c| *c == BigRational::new(1.into(), 6.into())));
}

#[test]
fn central_idempotents_are_central_s4() {
    let g = SymGroup::get(4).unwrap();
    for s in partitions(4) {
        let e = central_idempotent(&s, 4).unwrap();
        for h in 0..g.order() {
            let x = GroupAlgebraElem::basis(4, h, BigRational::one());
            assert_eq!(e.mul(&x).unwrap(), x.mul(&e).unwrap());
        }
    }
}

#[test]
fn regular_representation_ranks() {
    for m in 1..=4 {
        for s in partitions(m) {
            let e = central_idempotent(&s, m).unwrap();
            let r = matrix_rank(&regular_representation(&e).unwrap());
            let d = s.dimension() as usize;
            assert_eq!(r, d * d);
        }
    }
    let one = regular_representation(&GroupAlgebraElem::one(3)).unwrap();
    assert_eq!(one, crate::exact_arith::ExactMatrix::identity_like(6, &BigRational::one()));
}

#[test]
fn permutation_basics() {
    let m = 5;
    for (i, p) in all_permutations(m).iter().enumerate() {
        assert_eq!(p.lex_rank(), i);
    }
    let a = Permutation::from_one_line(&[2, 1, 3]).unwrap();
    let b = Permutation::from_one_line(&[1, 3, 2]).unwrap();
    // (a∘b)(1) = a(b(1)) = a(1) = 2 in one-line terms.
    assert_eq!(Permutation::compose(&a, &b).one_line(), vec![2, 3, 1]);
    assert_eq!(a.sign(), -1);
    assert_eq!(Permutation::compose(&a, &b).sign(), 1);
    assert!(Permutation::from_one_line(&[1, 1]).is_err());
    assert!(SymGroup::get(7).is_err());
}

fn ga_elem(m: usize) -> impl Strategy<Value = GroupAlgebraElem> {
    prop::collection::vec(-3i64..=3, factorial(m)).prop_map(move |v| GroupAlgebraElem {
        m,
        coeffs: v.into_iter().map(|x| BigRational::from_integer(x.into())).collect(),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn regular_representation_is_antihomomorphism(x in ga_elem(3), y in ga_elem(3)) {
        let rx = regular_representation(&x).unwrap();
        let ry = regular_representation(&y).unwrap();
        let rxy = regular_representation(&x.mul(&y).unwrap()).unwrap();
        prop_assert_eq!(rxy, ry.mul(&rx).unwrap());
    }

    #[test]
    fn conjugate_is_involution(parts in prop::collection::vec(1usize..6, 0..6)) {
        let p = YoungPartition::new(parts);
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn p_restricted_subset(size in 1usize..8, p in prop::sample::select(vec![2u64, 3, 5, 7, 11])) {
        let all = partitions(size);
        let r = p_restricted_partitions(size, Some(p));
        prop_assert!(r.iter().all(|s| all.contains(s)));
        prop_assert_eq!(r.len() == all.len(), p as usize > size);
    }
}

#[test]
fn zero_elem_is_zero() {
    assert!(GroupAlgebraElem::zero(3).is_zero());
    assert!(GroupAlgebraElem::zero(3).coeffs.iter().all(|c| c.is_zero()));
}
