use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::based_cells::{compute_cells, DeltaSpec, DiagramBasis};
use crate::diagrams::{DiagramFamily as F, HalfDiagram, Side};
use crate::exact_arith::{chebyshev_u, factor_rational, rat, IntPoly, NfElem, NumberField};
use crate::symgroup_kit::{partitions, YoungPartition};

fn q(v: i64) -> BigRational {
    rat(v, 1)
}

fn val(v: i64) -> DeltaSpec {
    DeltaSpec::Value(q(v))
}

fn poly(cs: &[i64]) -> IntPoly {
    IntPoly::from_i64s(cs)
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn tl5_gram_determinants() {
    let d1 = gram_matrix(F::TemperleyLieb, 5, 1).unwrap().determinant().unwrap();
    let expected1 = poly(&[-1, 1]).pow(4).mul(&poly(&[1, 1]).pow(4)).mul(&poly(&[-2, 0, 1]));
    assert_eq!(d1, expected1);
    let d3 = gram_matrix(F::TemperleyLieb, 5, 3).unwrap().determinant().unwrap();
    assert_eq!(d3, poly(&[-1, 1, 1]).mul(&poly(&[-1, -1, 1])));
    let g5 = gram_matrix(F::TemperleyLieb, 5, 5).unwrap();
    assert_eq!(g5.render(), "1");
}

#[test]
fn tl5_middle_gram_is_tridiagonal() {
    let g = gram_matrix(F::TemperleyLieb, 5, 3).unwrap();
    assert_eq!(g.render(), "d 1 0 0\n1 d 1 0\n0 1 d 1\n0 0 1 d");
}

#[test]
fn pairing_examples() {
    let tl4_tops = crate::diagrams::enumerate_halves(F::TemperleyLieb, Side::Top, 4, 2);
    let tl4_bottoms = crate::diagrams::enumerate_halves(F::TemperleyLieb, Side::Bottom, 4, 2);
    let zeros = tl4_tops
        .iter()
        .flat_map(|t| tl4_bottoms.iter().map(move |b| pairing_element(t, b, 2)))
        .filter(Option::is_none)
        .count();
    assert_eq!(zeros, 2);
    // A fully matched cup pair at λ = 1 in TL₅ closes two loops.
    let g = gram_matrix(F::TemperleyLieb, 5, 1).unwrap();
    assert!((0..g.rows()).all(|i| g.exponent(i, i) == Some(2)));
    // Brauer: a cap {0,3} under a cup {2,3} shares one endpoint; both strands
    // survive and cross.
    let cap = HalfDiagram::from_parts(&[0, 1, 2, 0], |x| x != 0);
    let cup = HalfDiagram::from_parts(&[1, 2, 0, 0], |x| x != 0);
    let (k, pi) = pairing_element(&cap, &cup, 2).unwrap();
    assert_eq!(k, 0);
    assert!(!pi.is_identity());
    assert!(pairing_element(&cap, &cup, 1).is_none());
    // A cap {0,1} next to the cup {2,3} joins two lower strands: rank drops.
    let far = HalfDiagram::from_parts(&[0, 0, 1, 2], |x| x != 0);
    assert!(pairing_element(&far, &cup, 2).is_none());
}

#[test]
fn rook_gram_is_scalar_identity() {
    for n in 1..=4 {
        for lambda in 0..=n {
            let g = gram_matrix(F::Rook, n, lambda).unwrap();
            for i in 0..g.rows() {
                for j in 0..g.cols() {
                    assert_eq!(g.exponent(i, j), (i == j).then_some(n - lambda));
                }
            }
        }
    }
}

#[test]
fn planar_transformation_three() {
    let render = |l| gram_matrix(F::PlanarTransformation, 3, l).unwrap().render();
    assert_eq!(render(3), "1");
    assert_eq!(render(2), "1 0\n1 1\n0 1");
    assert_eq!(render(1), "1\n1\n1");
}

/// Left cells counted by the cell engine for small `n`.
#[test]
fn left_cell_formulas_match_engine() {
    for family in F::ALL {
        for n in 1..=3 {
            let basis = DiagramBasis::new(family, n).unwrap();
            let cs = compute_cells(&basis.algebra_generic()).unwrap();
            for cell in &cs.jcells {
                let lambda = basis.elements[cell.elements[0]].through_strands();
                assert_eq!(
                    cell.left_cells.len() as u128,
                    count_left_cells(family, n, lambda),
                    "{family} n={n} λ={lambda}"
                );
                assert_eq!(
                    cell.right_cells.len() as u128,
                    count_right_cells(family, n, lambda),
                    "{family} n={n} λ={lambda}"
                );
            }
        }
    }
}

#[test]
fn left_cell_formulas_match_halves() {
    for family in F::ALL {
        for n in 1..=6 {
            for lambda in 0..=n {
                let b = crate::diagrams::enumerate_halves(family, Side::Bottom, n, lambda).len() as u128;
                let t = crate::diagrams::enumerate_halves(family, Side::Top, n, lambda).len() as u128;
                assert_eq!(count_left_cells(family, n, lambda), b, "{family} n={n} λ={lambda}");
                assert_eq!(count_right_cells(family, n, lambda), t, "{family} n={n} λ={lambda}");
            }
        }
    }
}

#[test]
fn stirling_spot_value() {
    assert_eq!(count_left_cells(F::FullTransformation, 6, 3), 90);
    assert_eq!(count_left_cells(F::FullTransformation, 5, 2), 15);
    assert_eq!(count_left_cells(F::FullTransformation, 5, 3), 25);
    assert_eq!(90, 3 * 25 + 15);
}

#[test]
fn brauer_rank_branches() {
    for n in 4..=6 {
        let g = gram_matrix(F::Brauer, n, n - 2).unwrap();
        assert_eq!(g.determinant().unwrap(), reference_det_formulas(F::Brauer, n).unwrap());
        let ni = n as i64;
        assert_eq!(g.rank(&DeltaSpec::Generic), n * (n - 1) / 2);
        assert_eq!(g.rank(&val(2)), n);
        assert_eq!(g.rank(&val(4 - ni)), n * (n - 3) / 2 + 1);
        assert_eq!(g.rank(&val(4 - 2 * ni)), (n + 1) * (n - 2) / 2);
    }
    assert_eq!(gram_rank(F::Brauer, 4, 2, &DeltaSpec::Generic).unwrap(), 6);
    assert_eq!(gram_rank(F::Brauer, 4, 2, &val(2)).unwrap(), 4);
}

#[test]
fn motzkin_rank_branches() {
    for n in 4..=5 {
        let g = gram_matrix(F::Motzkin, n, n - 2).unwrap();
        assert_eq!(g.determinant().unwrap(), reference_det_formulas(F::Motzkin, n).unwrap());
        assert_eq!(g.rank(&DeltaSpec::Generic), (n * n + n - 2) / 2);
        assert_eq!(g.rank(&val(0)), if n % 2 == 0 { n - 2 } else { n - 1 });
        let u = chebyshev_u(n - 1).compose(&poly(&[-1, 1]));
        for (f, _) in factor_rational(&u).unwrap().factors {
            let rank = if f.degree() == Some(1) {
                let root = rat(-f.coeff(0).try_into().unwrap_or(0i64), 1) / BigRational::from(f.coeff(1).clone());
                if root == q(0) {
                    continue;
                }
                g.rank(&DeltaSpec::Value(root))
            } else {
                let field = NumberField::new(f.clone()).unwrap();
                g.rank_nf(&NfElem::generator(&field))
            };
            assert_eq!(rank, (n * n + n - 4) / 2, "factor {}", f.render("d"));
        }
    }
    assert_eq!(gram_rank(F::Motzkin, 4, 2, &val(0)).unwrap(), 2);
}

/// Branches at generic `δ`, `3` and `5 − 2n` hold for both `n`. At `δ = 0`
/// only the Brauer block survives, which for `n = 4` sits at its own
/// `δ = 4 − n` branch; for `n = 5` the points `0` and `5 − n` coincide.
#[test]
fn rook_brauer_rank_branches() {
    for n in 4..=5 {
        let g = gram_matrix(F::RookBrauer, n, n - 2).unwrap();
        let ni = n as i64;
        assert_eq!(g.rank(&DeltaSpec::Generic), n * (n - 1));
        assert_eq!(g.rank(&val(3)), n * (n + 1) / 2);
        assert_eq!(g.rank(&val(5 - 2 * ni)), n * (n - 1) - 1);
        assert_eq!(g.rank(&val(0)), gram_rank(F::Brauer, n, n - 2, &val(0)).unwrap());
    }
    let g4 = gram_matrix(F::RookBrauer, 4, 2).unwrap();
    assert_eq!(g4.rank(&val(0)), 3);
    assert_eq!(g4.rank(&val(1)), 9);
    let g5 = gram_matrix(F::RookBrauer, 5, 3).unwrap();
    assert_eq!(g5.rank(&val(0)), 10);
}

/// The rook-Brauer reference formula carries `δ^{n(n−1)/2}`; the matrix
/// itself has `δ^{n(n−1)}`: its singleton block is `δ²·I` of size `n(n−1)/2`
/// and the Schur complement removes only one `δ` per row.
#[test]
fn rook_brauer_determinant_differs_by_a_power_of_delta() {
    for n in 4..=5 {
        let det = gram_matrix(F::RookBrauer, n, n - 2).unwrap().determinant().unwrap();
        let reference = reference_det_formulas(F::RookBrauer, n).unwrap();
        assert_ne!(det, reference);
        assert_eq!(det, reference.mul(&IntPoly::x().pow(n * (n - 1) / 2)));
    }
}

#[test]
fn reference_formula_instances() {
    let d = |cs: &[i64]| poly(cs);
    assert_eq!(
        reference_det_formulas(F::Brauer, 4).unwrap(),
        d(&[-2, 1]).pow(2).mul(&d(&[0, 1]).pow(3)).mul(&d(&[4, 1]))
    );
    assert_eq!(
        reference_det_formulas(F::RookBrauer, 4).unwrap(),
        d(&[0, 1]).pow(6).mul(&d(&[-3, 1]).pow(2)).mul(&d(&[-1, 1]).pow(3)).mul(&d(&[3, 1]))
    );
    assert!(reference_det_formulas(F::TemperleyLieb, 4).is_none());
    assert!(reference_det_formulas(F::Brauer, 2).is_none());
}

#[test]
fn apexes_at_zero() {
    let z = val(0);
    assert_eq!(apexes(F::Rook, 3, &z).unwrap(), vec![3]);
    assert_eq!(apexes(F::Brauer, 4, &z).unwrap(), vec![4, 2]);
    assert_eq!(apexes(F::Brauer, 5, &z).unwrap(), vec![5, 3, 1]);
    assert_eq!(apexes(F::TemperleyLieb, 3, &val(1)).unwrap(), vec![3, 1]);
    assert_eq!(apexes(F::FullTransformation, 4, &z).unwrap(), vec![4, 3, 2, 1]);
    assert_eq!(apexes(F::Partition, 3, &z).unwrap(), vec![3, 2, 1]);
    assert_eq!(apexes(F::Partition, 3, &DeltaSpec::Generic).unwrap(), vec![3, 2, 1, 0]);
}

/// Apexes from the Gram route agree with idempotent J-cells found by the engine.
#[test]
fn apexes_match_engine() {
    for family in F::ALL {
        for n in 1..=3 {
            for d in [0, 1] {
                let basis = DiagramBasis::new(family, n).unwrap();
                let cs = compute_cells(&basis.algebra_at(&q(d))).unwrap();
                let mut from_engine: Vec<usize> = cs
                    .jcells
                    .iter()
                    .filter(|c| c.is_idempotent())
                    .map(|c| basis.elements[c.elements[0]].through_strands())
                    .collect();
                from_engine.sort_unstable_by(|a, b| b.cmp(a));
                assert_eq!(apexes(family, n, &val(d)).unwrap(), from_engine, "{family} n={n} δ={d}");
            }
        }
    }
}

#[test]
fn simple_counts() {
    let t5 = simple_count(F::FullTransformation, 5, &DeltaSpec::Generic, None).unwrap();
    assert_eq!(t5.iter().map(|x| x.1).collect::<Vec<_>>(), vec![7, 5, 3, 2, 1]);
    let pt5 = simple_count(F::PlanarTransformation, 5, &DeltaSpec::Generic, None).unwrap();
    assert_eq!(pt5.iter().map(|x| x.1).collect::<Vec<_>>(), vec![1; 5]);
    let s3 = simple_count(F::Symmetric, 3, &DeltaSpec::Generic, Some(2)).unwrap();
    assert_eq!(s3, vec![(3, 2)]);
    assert!(simple_count(F::Brauer, 3, &DeltaSpec::Value(rat(1, 2)), Some(2)).is_err());
    // δ = 3 vanishes modulo 3.
    let br4 = simple_count(F::Brauer, 4, &val(3), Some(3)).unwrap();
    assert_eq!(br4.iter().map(|x| x.0).collect::<Vec<_>>(), vec![4, 2]);
}

#[test]
fn sandwiched_algebras() {
    let t3 = sandwiched_algebra(F::FullTransformation, 3, 2, &DeltaSpec::Generic).unwrap();
    assert_eq!(t3.descriptor, Sandwiched::SymmetricGroup(2));
    let br4 = sandwiched_algebra(F::Brauer, 4, 2, &DeltaSpec::Generic).unwrap();
    assert_eq!(br4.descriptor, Sandwiched::SymmetricGroup(2));
    assert_eq!(br4.elements.len(), 2);
    for family in [F::TemperleyLieb, F::Motzkin, F::PlanarPartition, F::PlanarRook, F::PlanarTransformation] {
        for lambda in family.through_counts(4) {
            let s = sandwiched_algebra(family, 4, lambda, &DeltaSpec::Generic).unwrap();
            assert_eq!(s.descriptor, Sandwiched::Trivial);
        }
    }
    for family in [F::Partition, F::Rook, F::Symmetric, F::RookBrauer] {
        let s = sandwiched_algebra(family, 3, 3, &val(0)).unwrap();
        assert_eq!(s.descriptor, Sandwiched::SymmetricGroup(3));
    }
    assert!(matches!(sandwiched_algebra(F::Rook, 3, 1, &val(0)), Err(SandwichError::NotApex { .. })));
}

fn shape(s: &str) -> YoungPartition {
    YoungPartition::parse(s).unwrap()
}

#[test]
fn transformation_three_simples() {
    let seven = q(7);
    let dims = |lambda: usize| -> Vec<usize> {
        partitions(lambda)
            .iter()
            .map(|chi| simple_dimension(F::FullTransformation, 3, lambda, Some(chi), &seven).unwrap())
            .collect()
    };
    assert_eq!(dims(3), vec![1, 2, 1]);
    assert_eq!(dims(2), vec![3, 2]);
    assert_eq!(simple_dimension(F::FullTransformation, 3, 1, None, &seven).unwrap(), 1);
}

#[test]
fn transformation_dimension_formula() {
    for n in 1..=4 {
        for lambda in 1..=n {
            for chi in partitions(lambda) {
                let d = simple_dimension(F::FullTransformation, n, lambda, Some(&chi), &q(1)).unwrap();
                // For λ = 1 the only label is both trivial and sign.
                let is_sign = chi == YoungPartition::column(lambda);
                let expected =
                    if is_sign { binom(n - 1, lambda - 1) } else { binom(n, lambda) * chi.dimension() as usize };
                assert_eq!(d, expected, "n={n} λ={lambda} χ={chi}");
            }
        }
    }
}

#[test]
fn oracle_agrees_on_small_instances() {
    let cases: Vec<(F, usize)> = vec![
        (F::FullTransformation, 3),
        (F::Brauer, 3),
        (F::Rook, 3),
        (F::TemperleyLieb, 4),
        (F::PlanarTransformation, 3),
        (F::Symmetric, 3),
    ];
    for (family, n) in cases {
        for d in [7, 1, 0] {
            let delta = q(d);
            for lambda in apexes(family, n, &val(d)).unwrap() {
                let labels: Vec<Option<YoungPartition>> = if has_trivial_sandwich(family, lambda) {
                    vec![None]
                } else {
                    partitions(lambda).into_iter().map(Some).collect()
                };
                for chi in labels {
                    let fast = simple_dimension(family, n, lambda, chi.as_ref(), &delta).unwrap();
                    let slow = oracle_simple_dimension(family, n, lambda, chi.as_ref(), &delta).unwrap();
                    assert_eq!(fast, slow, "{family} n={n} λ={lambda} χ={chi:?} δ={d}");
                }
            }
        }
    }
}

#[test]
fn oracle_examples() {
    assert_eq!(oracle_simple_dimension(F::FullTransformation, 3, 2, Some(&shape("(2)")), &q(7)).unwrap(), 3);
    // The λ = 1 Gram matrix of Brauer₃ at δ = 1 is the all-ones 3×3 matrix.
    assert_eq!(oracle_simple_dimension(F::Brauer, 3, 1, Some(&shape("(1)")), &q(1)).unwrap(), 1);
    assert_eq!(oracle_simple_dimension(F::TemperleyLieb, 3, 1, None, &q(7)).unwrap(), 2);
    assert!(matches!(oracle_simple_dimension(F::Rook, 3, 2, None, &q(0)), Err(SandwichError::NotApex { .. })));
}

#[test]
fn semisimplicity() {
    assert!(semisimplicity_check(F::TemperleyLieb, 4, &q(3)).unwrap());
    let table = simple_table(F::TemperleyLieb, 4, &q(3)).unwrap();
    assert_eq!(table.simples.iter().map(|s| s.dim.unwrap()).collect::<Vec<_>>(), vec![1, 3, 2]);
    assert!(!semisimplicity_check(F::Rook, 3, &q(0)).unwrap());
    assert!(!semisimplicity_check(F::TemperleyLieb, 4, &q(0)).unwrap());
    for n in 1..=5 {
        assert!(semisimplicity_check(F::Symmetric, n, &q(1)).unwrap());
    }
}

#[test]
fn sandwich_datum_shapes() {
    let datum = sandwich_datum(F::Brauer, 4, &val(0)).unwrap();
    assert_eq!(datum.cells.iter().map(|c| c.lambda).collect::<Vec<_>>(), vec![4, 2, 0]);
    for c in &datum.cells {
        assert_eq!(c.left_keys.len(), c.right_keys.len());
    }
    assert_eq!(datum.cells[2].descriptor, None);
    assert_eq!(datum.cells[1].descriptor, Some(Sandwiched::SymmetricGroup(2)));
}

#[test]
fn tl_closed_form_generic_and_examples() {
    for n in 0..=9 {
        for lambda in (0..=n).filter(|l| (n - l) % 2 == 0) {
            assert_eq!(
                tl_rank_closed_form(n, lambda, None, None).unwrap(),
                count_left_cells(F::TemperleyLieb, n, lambda)
            );
        }
    }
    assert_eq!(tl_rank_closed_form(4, 2, None, None).unwrap(), 3);
    assert!(tl_rank_closed_form(4, 1, None, None).is_err());
    let (ell, p) = tl_parameters(&val(1), 5);
    assert_eq!(ell, Some(3));
    assert_eq!(
        tl_rank_closed_form(5, 1, ell, p).unwrap() as usize,
        gram_rank(F::TemperleyLieb, 5, 1, &val(1)).unwrap()
    );
}

type RankAt = Box<dyn Fn(&GramMatrix) -> usize>;

#[test]
fn tl_closed_form_matches_rational_and_algebraic_ranks() {
    let mut deltas: Vec<(Option<usize>, RankAt)> = Vec::new();
    for d in [0i64, 1, -1, 2, 3] {
        deltas.push((quantum_characteristic(&q(d), 20), Box::new(move |g: &GramMatrix| g.rank(&val(d)))));
    }
    for modulus in [poly(&[-2, 0, 1]), poly(&[-3, 0, 1]), poly(&[-1, -1, 1]), poly(&[-1, 1, 1])] {
        let field = NumberField::new(modulus).unwrap();
        let delta = NfElem::generator(&field);
        deltas.push((quantum_characteristic_nf(&delta, 20), Box::new(move |g: &GramMatrix| g.rank_nf(&delta))));
    }
    for n in 1..=8 {
        for lambda in (0..=n).filter(|l| (n - l) % 2 == 0) {
            let g = gram_matrix(F::TemperleyLieb, n, lambda).unwrap();
            for (ell, rank) in &deltas {
                assert_eq!(
                    tl_rank_closed_form(n, lambda, *ell, None).unwrap() as usize,
                    rank(&g),
                    "n={n} λ={lambda} ℓ={ell:?}"
                );
            }
        }
    }
}

#[test]
fn tl_closed_form_matches_modular_ranks() {
    for p in [2u64, 3, 5] {
        for d in 0..p {
            let ell = quantum_characteristic_mod_p(d, p);
            for n in 1..=8 {
                for lambda in (0..=n).filter(|l| (n - l) % 2 == 0) {
                    let g = gram_matrix(F::TemperleyLieb, n, lambda).unwrap();
                    assert_eq!(
                        tl_rank_closed_form(n, lambda, Some(ell), Some(p)).unwrap() as usize,
                        g.rank_mod_p(d, p),
                        "p={p} δ={d} n={n} λ={lambda}"
                    );
                }
            }
        }
    }
}

#[test]
fn digit_helpers() {
    assert_eq!(digits(11, Some(3), Some(2)), vec![2, 1, 1]);
    assert_eq!(digits(11, Some(3), None), vec![2, 3]);
    assert_eq!(digits(11, None, None), vec![11]);
    assert!(digit_leq(4, 11, Some(3), Some(2)));
    assert!(digit_leq(3, 4, Some(3), Some(2)));
    assert!(!digit_leq(4, 3, Some(3), Some(2)));
    assert_eq!(digit_valuation(6, Some(3), Some(2)), 2);
    assert!(!digit_leq_prime(3, 4, Some(3), Some(2)));
    assert!(digit_leq_prime(3, 9, Some(3), Some(2)));
    assert_eq!(tilting_support(5, Some(2), None).into_iter().collect::<Vec<_>>(), vec![3, 5]);
    assert_eq!(tilting_support(4, Some(2), None).into_iter().collect::<Vec<_>>(), vec![4]);
    assert_eq!(quantum_characteristic(&q(0), 10), Some(2));
    assert_eq!(quantum_characteristic(&q(2), 10), None);
    assert_eq!(quantum_characteristic_mod_p(2, 5), 5);
}

#[test]
fn error_cases() {
    assert!(matches!(gram_matrix(F::Brauer, 4, 1), Err(SandwichError::BadLambda { .. })));
    assert!(matches!(gram_matrix(F::Brauer, 40, 2), Err(SandwichError::TooManyStrands(40))));
    assert!(matches!(simple_dimension(F::Brauer, 4, 2, None, &q(1)), Err(SandwichError::MissingShape(2))));
    assert!(matches!(
        simple_dimension(F::Brauer, 4, 2, Some(&shape("(3)")), &q(1)),
        Err(SandwichError::BadShape { .. })
    ));
    assert!(matches!(simple_dimension(F::Brauer, 4, 0, None, &q(0)), Err(SandwichError::NotApex { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn gram_entries_are_monomials_and_rank_bounded(fi in 0usize..12, n in 1usize..6, li in 0usize..6, d in -3i64..4) {
        let family = F::ALL[fi];
        let counts = family.through_counts(n);
        let lambda = counts[li % counts.len()];
        let g = gram_matrix(family, n, lambda).unwrap();
        for (k, _) in g.entries.iter().flatten().flatten() {
            prop_assert!(*k <= n);
        }
        let r = g.rank(&val(d));
        prop_assert!(r <= g.rows().min(g.cols()));
        if family.is_planar() {
            prop_assert_eq!(g.rank(&DeltaSpec::Generic), g.cols());
        }
        if family.is_involutive() {
            prop_assert_eq!(g.rows(), g.cols());
            for i in 0..g.rows() {
                prop_assert!(g.exponent(i, i).is_some());
            }
        }
    }

    #[test]
    fn squares_bounded_by_dimension(fi in 0usize..12, n in 1usize..4, d in -2i64..3) {
        let family = F::ALL[fi];
        let table = simple_table(family, n, &q(d)).unwrap();
        let size = crate::diagrams::enumerate(family, n).unwrap().len();
        let sum = table.sum_of_squares.unwrap();
        prop_assert!(sum <= size);
        prop_assert_eq!(sum == size, semisimplicity_check(family, n, &q(d)).unwrap());
    }
}

#[test]
fn partition_left_cells_at_zero_are_bell_numbers() {
    assert_eq!(BigInt::from(count_left_cells(F::Partition, 8, 0)), BigInt::from(4140u32));
}
