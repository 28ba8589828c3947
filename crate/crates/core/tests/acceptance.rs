//! Acceptance criteria 1 to 12. Each criterion prints one PASS/FAIL line with
//! its wall time, followed by the clauses that failed. A criterion that fails
//! is reported, not asserted, so the binary always exits cleanly; panics and
//! errors inside a criterion count as failed clauses.

use std::collections::{BTreeMap, BTreeSet};
use std::error::Error;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use greenbox::based_cells::{compute_cells, compute_cells_with, CellStructure, Closure, DeltaSpec, DiagramBasis};
use greenbox::diagrams::{enumerate, factorize, multiply, DiagramFamily as F};
use greenbox::dihedral_hecke::{
    cg_multiply_finite, cg_multiply_infinite, dihedral_algebra_at_one, dihedral_algebra_generic, dihedral_cells,
    dihedral_character_data, dihedral_sandwich_ranks, dihedral_simples, middle_algebra, p_poly, DihedralWord,
    HeckeElement, VMode,
};
use greenbox::exact_arith::{
    bracket2, chebyshev_u, factor_rational, ExactMatrix, IntPoly, LaurentInt, NfElem, NumberField,
};
use greenbox::exec::Exec;
use greenbox::sandwich_reduction::{
    apexes, count_left_cells, count_right_cells, gram_matrix, has_trivial_sandwich, oracle_simple_dimension,
    semisimplicity_check, simple_count, simple_dimension, simple_table, GramMatrix,
};
use greenbox::symgroup_kit::{
    all_permutations, character_table, class_size, factorial, inverse_rsk, partitions, rsk, shape_of, YoungPartition,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Res = Result<(), Box<dyn Error>>;

const SEED: u64 = 0x5eed;

/// Number, title, time limit in seconds, body.
type Criterion = (u32, &'static str, Option<u64>, fn(&mut Report) -> Res);

#[derive(Default)]
struct Report {
    passed: usize,
    failed: Vec<String>,
}

impl Report {
    fn check(&mut self, label: impl Into<String>, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed.push(label.into());
        }
    }

    /// Clause comparing an expected and an actual value.
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: impl std::fmt::Display, expected: T, got: T) {
        let ok = expected == got;
        self.check(format!("{label}: expected {expected:?}, got {got:?}"), ok);
    }
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn val(v: i64) -> DeltaSpec {
    DeltaSpec::Value(q(v))
}

fn poly(cs: &[i64]) -> IntPoly {
    IntPoly::from_i64s(cs)
}

/// `δ + c`.
fn lin(c: i64) -> IntPoly {
    poly(&[c, 1])
}

fn delta_pow(k: usize) -> IntPoly {
    IntPoly::x().pow(k)
}

fn factored(p: &IntPoly) -> String {
    factor_rational(p).map_or_else(|_| p.render("d"), |f| f.render("d"))
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn main() {
    let criteria: [Criterion; 12] = [
        (1, "TL5 Gram data", Some(1), c1_tl5_gram),
        (2, "Brauer lambda=n-2 determinant and rank branches", Some(30), c2_brauer),
        (3, "Motzkin lambda=n-2 determinant and rank branches", Some(30), c3_motzkin),
        (4, "rook-Brauer lambda=n-2 determinant and rank branches", Some(60), c4_rook_brauer),
        (5, "transformation monoid simples", Some(120), c5_transformation),
        (6, "planar transformation Gram matrices on 3 strands", Some(1), c6_planar_transformation),
        (7, "left-cell closed forms and the Stirling spot value", Some(120), c7_left_cells),
        (8, "apex sets at delta=0", None, c8_apexes_at_zero),
        (9, "dihedral products, cells, sandwich data", Some(10), c9_dihedral),
        (10, "oracle equivalence of simple dimensions", Some(60), c10_oracle),
        (11, "property suites", None, c11_properties),
        (12, "semisimplicity", None, c12_semisimplicity),
    ];
    let mut passing = 0;
    for (id, title, limit, f) in criteria {
        let mut report = Report::default();
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| f(&mut report)));
        let elapsed = start.elapsed();
        match outcome {
            Ok(Ok(())) => {}
            Ok(Err(e)) => report.check(format!("error: {e}"), false),
            Err(p) => {
                let msg = p
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                report.check(format!("panicked: {msg}"), false);
            }
        }
        if let Some(secs) = limit {
            report.check(
                format!("time {:.2} s exceeds {secs} s", elapsed.as_secs_f64()),
                elapsed < Duration::from_secs(secs),
            );
        }
        let pass = report.failed.is_empty();
        passing += usize::from(pass);
        let limit = limit.map_or_else(String::new, |s| format!(", limit {s} s"));
        let total = report.passed + report.failed.len();
        println!(
            "criterion {id}: {} ({:.2} s{limit}; {}/{total} clauses) {title}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            report.passed,
        );
        for clause in &report.failed {
            println!("    failed: {clause}");
        }
    }
    println!("acceptance: {passing} of 12 criteria pass");
}

fn c1_tl5_gram(r: &mut Report) -> Res {
    let tl = F::TemperleyLieb;
    let d1 = gram_matrix(tl, 5, 1)?.determinant()?;
    let expected = lin(-1).pow(4).mul(&lin(1).pow(4)).mul(&poly(&[-2, 0, 1]));
    r.check(format!("det G_1 = (d-1)^4 (d+1)^4 (d^2-2), got {}", factored(&d1)), d1 == expected);
    let d3 = gram_matrix(tl, 5, 3)?.determinant()?;
    let expected = poly(&[-1, 1, 1]).mul(&poly(&[-1, -1, 1]));
    r.check(format!("det G_3 = (d^2+d-1)(d^2-d-1), got {}", factored(&d3)), d3 == expected);
    let g5 = gram_matrix(tl, 5, 5)?.generic();
    r.check("G_5 = (1)", g5 == ExactMatrix::from_rows(vec![vec![IntPoly::one()]]));
    Ok(())
}

/// Rank at a rational `δ`, or at a root of an irreducible factor `f` realized
/// as the generator of `ℚ[t]/(f)`.
fn rank_at_root(g: &GramMatrix, f: &IntPoly) -> Result<usize, Box<dyn Error>> {
    if f.degree() == Some(1) {
        let root = BigRational::new(-f.coeff(0), f.coeff(1));
        return Ok(g.rank(&DeltaSpec::Value(root)));
    }
    let field = NumberField::new(f.clone())?;
    Ok(g.rank_nf(&NfElem::generator(&field)))
}

fn c2_brauer(r: &mut Report) -> Res {
    for n in 4..=6 {
        let g = gram_matrix(F::Brauer, n, n - 2)?;
        let ni = n as i64;
        let det = g.determinant()?;
        let expected = lin(-2).pow(n * (n - 3) / 2).mul(&lin(ni - 4).pow(n - 1)).mul(&lin(2 * ni - 4));
        r.check(
            format!("n={n}: det = (d-2)^(n(n-3)/2) (d+n-4)^(n-1) (d+2n-4), got {}", factored(&det)),
            det == expected,
        );
        r.eq(format!("n={n}: generic rank"), n * (n - 1) / 2, g.rank(&DeltaSpec::Generic));
        r.eq(format!("n={n}: rank at d=7"), n * (n - 1) / 2, g.rank(&val(7)));
        r.eq(format!("n={n}: rank at d=2"), n, g.rank(&val(2)));
        r.eq(format!("n={n}: rank at d=4-n"), n * (n - 3) / 2 + 1, g.rank(&val(4 - ni)));
        r.eq(format!("n={n}: rank at d=4-2n"), (n + 1) * (n - 2) / 2, g.rank(&val(4 - 2 * ni)));
    }
    Ok(())
}

fn c3_motzkin(r: &mut Report) -> Res {
    for n in 4..=5 {
        let g = gram_matrix(F::Motzkin, n, n - 2)?;
        let det = g.determinant()?;
        let u = chebyshev_u(n - 1).compose(&lin(-1));
        let expected = delta_pow(n * (n - 1)).mul(&u);
        r.check(format!("n={n}: det = d^(n(n-1)) U_(n-1)(d-1), got {}", factored(&det)), det == expected);
        let generic = (n * n + n - 2) / 2;
        r.eq(format!("n={n}: generic rank"), generic, g.rank(&DeltaSpec::Generic));
        r.eq(format!("n={n}: rank at d=7"), generic, g.rank(&val(7)));
        let at_zero = if n % 2 == 0 { n - 2 } else { n - 1 };
        r.eq(format!("n={n}: rank at d=0"), at_zero, g.rank(&val(0)));
        let roots = factor_rational(&u)?.factors;
        r.check(format!("n={n}: U_(n-1)(d-1) has a root"), !roots.is_empty());
        for (f, _) in roots {
            let rank = rank_at_root(&g, &f)?;
            r.eq(format!("n={n}: rank at a root of {}", f.render("d")), (n * n + n - 4) / 2, rank);
        }
    }
    Ok(())
}

fn c4_rook_brauer(r: &mut Report) -> Res {
    for n in 4..=5 {
        let g = gram_matrix(F::RookBrauer, n, n - 2)?;
        let ni = n as i64;
        let det = g.determinant()?;
        let expected = delta_pow(n * (n - 1) / 2)
            .mul(&lin(-3).pow(n * (n - 3) / 2))
            .mul(&lin(ni - 5).pow(n - 1))
            .mul(&lin(2 * ni - 5));
        r.check(
            format!("n={n}: det = d^(n(n-1)/2) (d-3)^(n(n-3)/2) (d+n-5)^(n-1) (d+2n-5), got {}", factored(&det)),
            det == expected,
        );
        r.eq(format!("n={n}: generic rank"), n * (n - 1), g.rank(&DeltaSpec::Generic));
        r.eq(format!("n={n}: rank at d=7"), n * (n - 1), g.rank(&val(7)));
        r.eq(format!("n={n}: rank at d=0"), n * (n - 1) / 2, g.rank(&val(0)));
        r.eq(format!("n={n}: rank at d=3"), n * (n + 1) / 2, g.rank(&val(3)));
        r.eq(format!("n={n}: rank at d=5-n"), (n - 1) * (n - 1), g.rank(&val(5 - ni)));
        r.eq(format!("n={n}: rank at d=5-2n"), n * (n - 1) - 1, g.rank(&val(5 - 2 * ni)));
    }
    Ok(())
}

fn shape(s: &str) -> Result<YoungPartition, Box<dyn Error>> {
    Ok(YoungPartition::parse(s)?)
}

fn c5_transformation(r: &mut Report) -> Res {
    let t = F::FullTransformation;
    let one = q(1);
    for (lambda, shapes, dims) in [
        (3, vec!["(3)", "(2,1)", "(1,1,1)"], vec![1, 2, 1]),
        (2, vec!["(2)", "(1,1)"], vec![3, 2]),
        (1, vec!["(1)"], vec![1]),
    ] {
        let mut got = Vec::new();
        for s in &shapes {
            got.push(simple_dimension(t, 3, lambda, Some(&shape(s)?), &one)?);
        }
        r.eq(format!("T3 apex {lambda}: dimensions for {shapes:?}"), dims, got);
    }
    // The apex-2 sandwich matrix lives over Q[S_2]; cut by the two central
    // idempotents its ranks are χ(1)·dim with χ(1) = 1.
    let g = gram_matrix(t, 3, 2)?;
    for (s, rank) in [("(2)", 3), ("(1,1)", 2)] {
        let chi = shape(s)?;
        let dim = greenbox::sandwich_reduction::simple_dimension_with(&g, Some(&chi), &one, Exec::default())?;
        r.eq(format!("T3 apex 2: sandwich matrix rank under {s}"), rank, dim * chi.dimension() as usize);
    }
    let counts: Vec<usize> = simple_count(t, 5, &DeltaSpec::Generic, None)?.into_iter().map(|x| x.1).collect();
    r.eq("T5 simple counts", vec![7, 5, 3, 2, 1], counts);
    for n in 1..=5 {
        let aps = apexes(t, n, &DeltaSpec::Generic)?;
        r.eq(format!("T{n}: apexes"), (1..=n).rev().collect::<Vec<_>>(), aps.clone());
        for lambda in aps {
            for chi in partitions(lambda) {
                let expected = if chi == YoungPartition::column(lambda) {
                    binom(n - 1, lambda - 1)
                } else {
                    binom(n, lambda) * chi.dimension() as usize
                };
                let got = simple_dimension(t, n, lambda, Some(&chi), &one)?;
                r.eq(format!("T{n} apex {lambda} {chi}: dimension formula"), expected, got);
            }
        }
    }
    Ok(())
}

fn c6_planar_transformation(r: &mut Report) -> Res {
    let m = |rows: &[&[i64]]| -> ExactMatrix<IntPoly> {
        ExactMatrix::from_rows(rows.iter().map(|row| row.iter().map(|&c| poly(&[c])).collect()).collect())
    };
    let expected = [(3, m(&[&[1]]), 1), (2, m(&[&[1, 0], &[1, 1], &[0, 1]]), 2), (1, m(&[&[1], &[1], &[1]]), 1)];
    let deltas = [
        DeltaSpec::Generic,
        val(0),
        val(1),
        val(-1),
        val(2),
        val(7),
        DeltaSpec::Value(BigRational::new(1.into(), 2.into())),
    ];
    for (lambda, matrix, rank) in expected {
        let g = gram_matrix(F::PlanarTransformation, 3, lambda)?;
        r.check(format!("lambda={lambda}: Gram matrix"), g.generic() == matrix);
        for d in &deltas {
            r.eq(format!("lambda={lambda}: rank at d={d}"), rank, g.rank(d));
        }
    }
    Ok(())
}

fn c7_left_cells(r: &mut Report) -> Res {
    for family in F::ALL {
        let max = if family == F::Partition { 4 } else { 5 };
        for n in 1..=max {
            let mut bottoms: BTreeMap<usize, BTreeSet<_>> = BTreeMap::new();
            let mut tops: BTreeMap<usize, BTreeSet<_>> = BTreeMap::new();
            for d in enumerate(family, n)? {
                let f = factorize(&d);
                let lambda = f.rank();
                bottoms.entry(lambda).or_default().insert(f.bottom);
                tops.entry(lambda).or_default().insert(f.top);
            }
            let lambdas: Vec<usize> = family.through_counts(n).into_iter().collect();
            r.eq(
                format!("{family} n={n}: through-strand counts"),
                lambdas.iter().copied().collect::<BTreeSet<_>>(),
                bottoms.keys().copied().collect(),
            );
            for lambda in lambdas {
                let left = bottoms.get(&lambda).map_or(0, BTreeSet::len) as u128;
                let right = tops.get(&lambda).map_or(0, BTreeSet::len) as u128;
                r.eq(format!("{family} n={n} lambda={lambda}: #L"), count_left_cells(family, n, lambda), left);
                r.eq(format!("{family} n={n} lambda={lambda}: #R"), count_right_cells(family, n, lambda), right);
            }
        }
    }
    let t = F::FullTransformation;
    let (s63, s53, s52) = (count_left_cells(t, 6, 3), count_left_cells(t, 5, 3), count_left_cells(t, 5, 2));
    r.eq("Stirling S(6,3), S(5,3), S(5,2)", (90, 25, 15), (s63, s53, s52));
    r.check("S(6,3) = 3 S(5,3) + S(5,2)", s63 == 3 * s53 + s52);
    Ok(())
}

/// The table's column for a non-invertible `δ`.
fn table_apexes_at_zero(family: F, n: usize) -> Vec<usize> {
    match family {
        F::Partition | F::PlanarPartition | F::RookBrauer | F::Motzkin => (1..=n).rev().collect(),
        F::Brauer | F::TemperleyLieb => family.through_counts(n).into_iter().rev().filter(|&l| l >= 1).collect(),
        _ => vec![n],
    }
}

fn idempotent_lambdas<C>(basis: &DiagramBasis, cs: &CellStructure<C>) -> Vec<usize> {
    let mut out: Vec<usize> = cs
        .jcells
        .iter()
        .filter(|c| c.is_idempotent())
        .map(|c| basis.elements[c.elements[0]].through_strands())
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn c8_apexes_at_zero(r: &mut Report) -> Res {
    let ten = [
        F::Partition,
        F::PlanarPartition,
        F::RookBrauer,
        F::Motzkin,
        F::Brauer,
        F::TemperleyLieb,
        F::Rook,
        F::PlanarRook,
        F::Symmetric,
        F::PlanarSymmetric,
    ];
    for family in ten {
        for n in 1..=5 {
            let computed = apexes(family, n, &val(0))?;
            r.eq(
                format!("{family} n={n}: apexes at d=0 against the table"),
                table_apexes_at_zero(family, n),
                computed.clone(),
            );
            // The Gram route is cross-checked against idempotent J-cells of the engine.
            if n <= 3 {
                let basis = DiagramBasis::new(family, n)?;
                let cs = compute_cells(&basis.algebra_at(&q(0)))?;
                r.eq(
                    format!("{family} n={n}: Gram apexes agree with the cell engine at d=0"),
                    idempotent_lambdas(&basis, &cs),
                    computed,
                );
            }
        }
    }
    Ok(())
}

fn w(s: &str) -> Result<DihedralWord, Box<dyn Error>> {
    Ok(s.parse()?)
}

fn c9_dihedral(r: &mut Report) -> Res {
    let b2 = bracket2(1);
    let two = |x: LaurentInt| x.scale(&BigInt::from(2));
    let int = LaurentInt::from_int;

    let a = cg_multiply_infinite(w("1212")?, w("21212")?);
    let mut expect = HeckeElement::zero();
    for s in ["12", "1212", "121212", "12121212"] {
        expect.add_term(w(s)?, b2.clone());
    }
    r.check(format!("b1212 b21212 = [2]b12 + [2]b1212 + [2]b121212 + [2]b12121212, got {}", a.render()), a == expect);

    let b = cg_multiply_infinite(w("1212")?, w("121212")?);
    let mut expect = HeckeElement::zero();
    for (s, c) in [("12", 1), ("1212", 2), ("121212", 2), ("12121212", 2), ("1212121212", 1)] {
        expect.add_term(w(s)?, int(c));
    }
    r.check(
        format!("b1212 b121212 = b12 + 2b1212 + 2b121212 + 2b12121212 + b1212121212, got {}", b.render()),
        b == expect,
    );

    let c = cg_multiply_finite(6, w("1212")?, w("21212")?)?;
    let mut expect = HeckeElement::term(w("12")?, b2.clone());
    expect.add_term(w("121212")?, bracket2(3).add(&two(b2.clone())));
    r.check(format!("n=6: b1212 b21212 = [2]b12 + ([2]_3+2[2])b121212, got {}", c.render()), c == expect);

    let d = cg_multiply_finite(6, w("1212")?, w("121212")?)?;
    let printed = bracket2(4).add(&two(bracket2(2))).add(&two(bracket2(0)));
    let expect = HeckeElement::term(w("121212")?, printed);
    r.check(format!("n=6: b1212 b121212 = ([2]_4+2[2]_2+2[2]_0)b121212, got {}", d.render()), d == expect);

    for v in [VMode::Generic, VMode::One] {
        let cells = dihedral_cells(5, v)?;
        let tier = |name: &str| cells.tier(name).map(|t| t.h_cells.clone()).unwrap_or_default();
        r.eq(format!("I2(5) v={v}: bottom tier"), vec![vec![vec!["e".to_string()]]], tier("b"));
        r.eq(format!("I2(5) v={v}: top tier"), vec![vec![vec!["12121".to_string()]]], tier("t"));
        let middle = tier("m");
        let mut h: Vec<Vec<String>> = middle.iter().flatten().cloned().collect();
        h.sort();
        let expected: Vec<Vec<String>> = [["1", "121"], ["12", "1212"], ["2", "212"], ["21", "2121"]]
            .iter()
            .map(|p| p.map(String::from).to_vec())
            .collect();
        r.eq(format!("I2(5) v={v}: middle H-cells"), expected, h);
        r.eq(format!("I2(5) v={v}: middle egg-box shape"), (2, 2), (middle.len(), middle.first().map_or(0, Vec::len)));
        r.check(format!("I2(5) v={v}: sandwich pair verified"), cells.sandwich.pass);
    }

    let four = dihedral_cells(4, VMode::One)?;
    let sizes: BTreeSet<usize> =
        four.tier("m").map(|t| t.h_cells.iter().flatten().map(Vec::len).collect()).unwrap_or_default();
    r.eq("I2(4): middle H-cell sizes", BTreeSet::from([1, 2]), sizes);
    let failing: Vec<_> = four.sandwich.jcells.iter().filter(|c| !c.pass()).collect();
    r.check(
        "I2(4): sandwich-pair verification fails exactly at the middle cell",
        !four.sandwich.pass && failing.len() == 1 && !failing[0].h_sizes_equal,
    );

    let middle = middle_algebra(5, VMode::One)?;
    let p2 = p_poly(2).at_one();
    r.check(
        format!("I2(5) v=1: middle minimal polynomial = {}, got {}", p2.render("X"), middle.minimal_polynomial),
        middle.minimal_poly == p2,
    );

    let ranks = dihedral_sandwich_ranks(5, VMode::One)?;
    r.eq("I2(5) v=1: sandwich ranks", vec![1, 2, 2, 1], ranks.ranks.clone());
    let top = ranks.cells.last().map(|c| c.matrix.clone()).unwrap_or_default();
    r.eq("I2(5) v=1: top sandwich matrix", vec![vec!["10·b12121".to_string()]], top);

    let simples = dihedral_simples(5, VMode::One)?;
    r.eq("I2(5) v=1: simple dimensions", vec![1, 2, 2, 1], simples.simples.iter().map(|s| s.dim).collect());
    r.eq("I2(5) v=1: sum of squared dimensions", 10, simples.sum_of_squares);

    let chars = dihedral_character_data(5)?;
    let factors: Vec<IntPoly> = chars.roots.iter().map(|x| x.factor.clone()).collect();
    r.eq("D5: eigenvalue polynomial factors", vec![poly(&[-1, -1, 1])], factors);
    r.eq("D5: two-dimensional simples", 2, chars.root_count());
    let golden = chars.roots.iter().all(|x| x.root.eval_int_poly(&poly(&[-1, -1, 1])).is_zero());
    r.check("D5: eigenvalues are roots of X^2-X-1", golden && chars.squarefree);
    Ok(())
}

fn c10_oracle(r: &mut Report) -> Res {
    for (family, n) in [(F::FullTransformation, 3), (F::Brauer, 3), (F::Rook, 3), (F::TemperleyLieb, 4)] {
        for d in [7, 1, 0] {
            for lambda in apexes(family, n, &val(d))? {
                let labels: Vec<Option<YoungPartition>> = if has_trivial_sandwich(family, lambda) {
                    vec![None]
                } else {
                    partitions(lambda).into_iter().map(Some).collect()
                };
                for chi in labels {
                    let fast = simple_dimension(family, n, lambda, chi.as_ref(), &q(d))?;
                    let slow = oracle_simple_dimension(family, n, lambda, chi.as_ref(), &q(d))?;
                    let label = chi.map_or_else(|| "unit".to_string(), |c| c.to_string());
                    r.eq(format!("{family} n={n} lambda={lambda} {label} d={d}"), slow, fast);
                }
            }
        }
    }
    Ok(())
}

fn same_cells<C, D>(a: &CellStructure<C>, b: &CellStructure<D>) -> bool {
    a.jcells.len() == b.jcells.len()
        && a.above == b.above
        && a.jcells
            .iter()
            .zip(&b.jcells)
            .all(|(x, y)| x.elements == y.elements && x.left_cells == y.left_cells && x.right_cells == y.right_cells)
}

fn jcell_counts_hold<C>(cs: &CellStructure<C>) -> bool {
    cs.jcells.iter().all(|cell| {
        let sizes: Vec<usize> = cell.h_sizes().into_iter().flatten().collect();
        let h = sizes[0];
        sizes.iter().all(|&x| x == h) && cell.elements.len() == cell.left_cells.len() * h * cell.right_cells.len()
    })
}

fn c11_properties(r: &mut Report) -> Res {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for family in F::ALL {
        let elems = enumerate(family, 4)?;
        let mut assoc = 0;
        let mut star = 0;
        for _ in 0..1000 {
            let [a, b, c] = [0; 3].map(|_| &elems[rng.gen_range(0..elems.len())]);
            let (k1, ab) = multiply(a, b)?;
            let (k2, left) = multiply(&ab, c)?;
            let (k3, bc) = multiply(b, c)?;
            let (k4, right) = multiply(a, &bc)?;
            assoc += usize::from(left == right && k1 + k2 == k3 + k4);
            if family.is_involutive() {
                let (k5, ba) = multiply(&b.star(), &a.star())?;
                star += usize::from(ab.star() == ba && k1 == k5);
            }
        }
        r.eq(format!("{family} n=4: associative triples of 1000"), 1000, assoc);
        if family.is_involutive() {
            r.eq(format!("{family} n=4: (ab)* = b*a* of 1000"), 1000, star);
        }
    }
    for n in 3..=8 {
        let alg = dihedral_algebra_generic(n)?;
        let star = alg.star.clone().unwrap_or_default();
        let ok = (0..2 * n).all(|i| {
            (0..2 * n).all(|j| {
                let mut lhs: Vec<_> = alg.mul(i, j).into_iter().map(|(c, k)| (star[k], c)).collect();
                let mut rhs: Vec<_> = alg.mul(star[j], star[i]).into_iter().map(|(c, k)| (k, c)).collect();
                lhs.sort_by_key(|t| t.0);
                rhs.sort_by_key(|t| t.0);
                lhs == rhs
            })
        });
        r.check(format!("I2({n}): star is an antiautomorphism"), ok);
    }

    for family in F::ALL {
        for n in 1..=4 {
            let basis = DiagramBasis::new(family, n)?;
            let alg = basis.algebra_generic();
            let cs = compute_cells(&alg)?;
            r.check(format!("{family} n={n}: |J| = #L |H| #R on every J-cell"), jcell_counts_hold(&cs));
            if basis.len() > 200 {
                continue;
            }
            let g = compute_cells_with(&alg, Closure::Generators, Exec::default())?;
            let f = compute_cells_with(&alg, Closure::FullBasis, Exec::default())?;
            r.check(format!("{family} n={n} generic: generator and full-basis preorders agree"), same_cells(&g, &f));
            for d in [1, 2] {
                let alg = basis.algebra_at(&q(d));
                let g = compute_cells_with(&alg, Closure::Generators, Exec::default())?;
                let f = compute_cells_with(&alg, Closure::FullBasis, Exec::default())?;
                r.check(format!("{family} n={n} d={d}: generator and full-basis preorders agree"), same_cells(&g, &f));
                r.check(format!("{family} n={n} d={d}: |J| = #L |H| #R on every J-cell"), jcell_counts_hold(&f));
            }
        }
    }
    // For even n the middle H-cells differ in size, so only odd n carry the identity.
    for n in (3..=13).step_by(2) {
        let generic = compute_cells(&dihedral_algebra_generic(n)?)?;
        let at_one = compute_cells(&dihedral_algebra_at_one(n)?)?;
        r.check(
            format!("I2({n}): |J| = #L |H| #R on every J-cell"),
            jcell_counts_hold(&generic) && jcell_counts_hold(&at_one),
        );
    }

    let s5 = all_permutations(5);
    let round = s5.iter().filter(|p| {
        let (pt, qt) = rsk(p);
        shape_of(&pt) == shape_of(&qt) && inverse_rsk(&pt, &qt).is_ok_and(|back| &back == *p)
    });
    r.eq("RSK round trips on S5", 120, round.count());
    for m in 1..=6 {
        let t = character_table(m);
        let order = factorial(m) as i128;
        let sizes: Vec<i128> = t.classes.iter().map(|c| class_size(c) as i128).collect();
        let mut rows = true;
        for (i, a) in t.values.iter().enumerate() {
            for (j, b) in t.values.iter().enumerate() {
                let inner: i128 = (0..sizes.len()).map(|c| sizes[c] * a[c] as i128 * b[c] as i128).sum();
                rows &= inner == if i == j { order } else { 0 };
            }
        }
        let mut cols = true;
        for c in 0..sizes.len() {
            for e in 0..sizes.len() {
                let inner: i128 = t.values.iter().map(|row| row[c] as i128 * row[e] as i128).sum();
                cols &= inner == if c == e { order / sizes[c] } else { 0 };
            }
        }
        r.check(format!("S{m}: row orthogonality"), rows);
        r.check(format!("S{m}: column orthogonality"), cols);
    }
    Ok(())
}

fn c12_semisimplicity(r: &mut Report) -> Res {
    let tl = F::TemperleyLieb;
    r.check("TL4 at d=3 is semisimple", semisimplicity_check(tl, 4, &q(3))?);
    let table = simple_table(tl, 4, &q(3))?;
    let dims: Vec<usize> = table.simples.iter().filter_map(|s| s.dim).collect();
    r.eq("TL4 at d=3: dimensions", vec![1, 3, 2], dims);
    r.eq("TL4 at d=3: sum of squares = dim TL4", (Some(14), 14), (table.sum_of_squares, enumerate(tl, 4)?.len()));
    r.check("Rook3 at d=0 is not semisimple", !semisimplicity_check(F::Rook, 3, &q(0))?);
    for n in 1..=5 {
        r.check(format!("S{n} is semisimple"), semisimplicity_check(F::Symmetric, n, &q(1))?);
    }
    Ok(())
}
