//! Invariant suites behind `greenbox check`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::based_cells::{compute_cells, compute_cells_with, CellStructure, Closure, DeltaSpec, DiagramBasis};
use crate::diagrams::{
    diagram_to_one_line, enumerate, enumerate_by_filtering, in_family, multiply, one_line_to_diagram, DiagramFamily,
};
use crate::dihedral_hecke::{
    cg_multiply_finite, cg_multiply_infinite, dihedral_algebra_generic, dihedral_cells, dihedral_simples,
    middle_algebra, DihedralWord, HeckeElement, VMode,
};
use crate::exact_arith::{chebyshev_u, factor_rational, matrix_det, rank_mod_p, IntPoly};
use crate::exec::Exec;
use crate::sandwich_reduction::{
    apexes, count_left_cells, count_right_cells, gram_matrix, has_trivial_sandwich, oracle_simple_dimension,
    reference_det_formulas, semisimplicity_check, simple_dimension, simple_table,
};
use crate::symgroup_kit::{
    all_permutations, central_idempotent, character_table, class_size, factorial, inverse_rsk, p_restricted_partitions,
    partitions, rsk, shape_of, YoungPartition,
};

pub const SUITES: [&str; 8] = ["exact_arith", "diagrams", "cells", "counts", "gram", "simples", "symgroup", "dihedral"];

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<String>,
    #[serde(skip)]
    pub labels: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport { name: name.to_string(), ..Default::default() }
    }

    fn check(&mut self, label: impl Into<String>, ok: bool) {
        let label = label.into();
        self.total += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(label.clone());
        }
        self.labels.push(label);
    }

    /// A batch of sampled checks counted individually but labelled once.
    fn batch(&mut self, label: impl Into<String>, outcomes: impl IntoIterator<Item = bool>) {
        let label = label.into();
        let (mut ok, mut all) = (0, 0);
        for o in outcomes {
            all += 1;
            ok += usize::from(o);
        }
        self.total += all;
        self.passed += ok;
        if ok < all {
            self.failures.push(format!("{label}: {} of {all} failed", all - ok));
        }
        self.labels.push(format!("{label} ({all} samples)"));
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub seed: u64,
    pub samples: usize,
    pub suites: Vec<SuiteReport>,
    pub pass: bool,
}

impl CheckReport {
    pub fn passed(&self) -> usize {
        self.suites.iter().map(|s| s.passed).sum()
    }

    pub fn total(&self) -> usize {
        self.suites.iter().map(|s| s.total).sum()
    }
}

/// Run the named suites (see [`SUITES`]); unknown names are skipped.
pub fn run_checks(names: &[&str], seed: u64, samples: usize) -> CheckReport {
    let mut suites = Vec::new();
    for (i, &name) in names.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
        let mut s = SuiteReport::new(name);
        match name {
            "exact_arith" => exact_arith_suite(&mut s),
            "diagrams" => diagrams_suite(&mut s, &mut rng, samples),
            "cells" => cells_suite(&mut s),
            "counts" => counts_suite(&mut s),
            "gram" => gram_suite(&mut s),
            "simples" => simples_suite(&mut s),
            "symgroup" => symgroup_suite(&mut s),
            "dihedral" => dihedral_suite(&mut s, &mut rng, samples),
            _ => continue,
        }
        suites.push(s);
    }
    let pass = suites.iter().all(|s| s.failures.is_empty());
    CheckReport { seed, samples, suites, pass }
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn exact_arith_suite(s: &mut SuiteReport) {
    for k in 1..=12 {
        let u = chebyshev_u(k);
        let ok = factor_rational(&u).is_ok_and(|f| f.expand() == u);
        s.check(format!("factor(U_{k}) expands back"), ok);
    }
    let points = [q(-2), BigRational::new((-3).into(), 2.into()), q(0), q(1), q(2), q(5)];
    for (family, n, lambda) in
        [(DiagramFamily::TemperleyLieb, 5, 1), (DiagramFamily::TemperleyLieb, 5, 3), (DiagramFamily::Brauer, 4, 2)]
    {
        let g = gram_matrix(family, n, lambda).expect("valid cell");
        let det = g.determinant().expect("square");
        for d in &points {
            let direct = matrix_det(&g.at(d)).expect("square");
            s.check(format!("{family} n={n} λ={lambda}: det(G)({d}) = det(G({d}))"), det.eval_rat(d) == direct);
        }
        for p in [2u64, 3, 5] {
            for d in 0..3i64 {
                let over_q = g.rank(&DeltaSpec::Value(q(d)));
                let mod_p = rank_mod_p(&g.at_int(&BigInt::from(d)), p);
                s.check(format!("{family} n={n} λ={lambda}: rank mod {p} <= rank over Q at δ={d}"), mod_p <= over_q);
            }
        }
    }
}

fn small_n(family: DiagramFamily) -> usize {
    if family == DiagramFamily::Partition {
        3
    } else {
        4
    }
}

fn diagrams_suite(s: &mut SuiteReport, rng: &mut ChaCha8Rng, samples: usize) {
    for family in DiagramFamily::ALL {
        let n = small_n(family);
        let elems = enumerate(family, n).expect("within bound");
        let pick = |rng: &mut ChaCha8Rng| elems[rng.gen_range(0..elems.len())].clone();
        let triples: Vec<_> = (0..samples).map(|_| (pick(rng), pick(rng), pick(rng))).collect();
        s.batch(
            format!("{family} n={n}: (ab)c = a(bc) with equal loop counts"),
            triples.iter().map(|(a, b, c)| {
                let (k1, ab) = multiply(a, b).expect("same n");
                let (k2, left) = multiply(&ab, c).expect("same n");
                let (k3, bc) = multiply(b, c).expect("same n");
                let (k4, right) = multiply(a, &bc).expect("same n");
                left == right && k1 + k2 == k3 + k4
            }),
        );
        s.batch(
            format!("{family} n={n}: products stay in the family"),
            triples.iter().map(|(a, b, _)| in_family(&multiply(a, b).expect("same n").1, family)),
        );
        if family.is_involutive() {
            s.batch(
                format!("{family} n={n}: (ab)* = b*a*"),
                triples.iter().map(|(a, b, _)| {
                    let (k, ab) = multiply(a, b).expect("same n");
                    let (k2, ba) = multiply(&b.star(), &a.star()).expect("same n");
                    ab.star() == ba && k == k2
                }),
            );
        }
        for m in 1..=3 {
            let mut fast = enumerate(family, m).expect("within bound");
            let mut slow = enumerate_by_filtering(family, m);
            fast.sort();
            slow.sort();
            s.check(format!("{family} n={m}: enumeration agrees with filtering"), fast == slow);
        }
    }
    s.batch(
        "one-line round trip on S_4",
        all_permutations(4).iter().map(|p| {
            let w = p.one_line();
            one_line_to_diagram(&w).and_then(|d| diagram_to_one_line(&d)).is_ok_and(|back| back == w)
        }),
    );
}

fn same_cells<C, D>(a: &CellStructure<C>, b: &CellStructure<D>) -> bool {
    a.jcells.len() == b.jcells.len()
        && a.above == b.above
        && a.jcells
            .iter()
            .zip(&b.jcells)
            .all(|(x, y)| x.elements == y.elements && x.left_cells == y.left_cells && x.right_cells == y.right_cells)
}

fn cells_suite(s: &mut SuiteReport) {
    for family in DiagramFamily::ALL {
        for n in 1..=small_n(family) {
            let basis = DiagramBasis::new(family, n).expect("within bound");
            let alg = basis.algebra_generic();
            let cs = compute_cells(&alg).expect("within bound");
            for cell in &cs.jcells {
                let sizes: Vec<usize> = cell.h_sizes().into_iter().flatten().collect();
                let h = sizes[0];
                let ok = sizes.iter().all(|&x| x == h)
                    && cell.elements.len() == cell.left_cells.len() * h * cell.right_cells.len();
                let lambda = basis.elements[cell.elements[0]].through_strands();
                s.check(format!("{family} n={n} λ={lambda}: |J| = #L·|H|·#R"), ok);
            }
            if basis.len() <= 200 {
                for delta in [None, Some(q(1)), Some(q(2))] {
                    let ok = match &delta {
                        None => {
                            let g = compute_cells_with(&alg, Closure::Generators, Exec::default());
                            let f = compute_cells_with(&alg, Closure::FullBasis, Exec::default());
                            matches!((g, f), (Ok(g), Ok(f)) if same_cells(&g, &f))
                        }
                        Some(d) => {
                            let alg = basis.algebra_at(d);
                            let g = compute_cells_with(&alg, Closure::Generators, Exec::default());
                            let f = compute_cells_with(&alg, Closure::FullBasis, Exec::default());
                            matches!((g, f), (Ok(g), Ok(f)) if same_cells(&g, &f))
                        }
                    };
                    let at = delta.map_or_else(|| "generic".to_string(), |d| d.to_string());
                    s.check(format!("{family} n={n} δ={at}: generator and full-basis preorders agree"), ok);
                }
            }
        }
    }
}

fn counts_suite(s: &mut SuiteReport) {
    for family in DiagramFamily::ALL {
        for n in 1..=small_n(family) {
            let basis = DiagramBasis::new(family, n).expect("within bound");
            let cs = compute_cells(&basis.algebra_generic()).expect("within bound");
            for cell in &cs.jcells {
                let lambda = basis.elements[cell.elements[0]].through_strands();
                s.check(
                    format!("{family} n={n} λ={lambda}: left-cell closed form"),
                    cell.left_cells.len() as u128 == count_left_cells(family, n, lambda),
                );
                s.check(
                    format!("{family} n={n} λ={lambda}: right-cell closed form"),
                    cell.right_cells.len() as u128 == count_right_cells(family, n, lambda),
                );
            }
            if n <= 3 {
                for d in [0, 1] {
                    let cs = compute_cells(&basis.algebra_at(&q(d))).expect("within bound");
                    let mut from_engine: Vec<usize> = cs
                        .jcells
                        .iter()
                        .filter(|c| c.is_idempotent())
                        .map(|c| basis.elements[c.elements[0]].through_strands())
                        .collect();
                    from_engine.sort_unstable_by(|a, b| b.cmp(a));
                    let ok = apexes(family, n, &DeltaSpec::Value(q(d))).is_ok_and(|a| a == from_engine);
                    s.check(format!("{family} n={n} δ={d}: apexes agree with the engine"), ok);
                }
            }
        }
    }
    let t = DiagramFamily::FullTransformation;
    s.check(
        "Stirling recursion S(6,3) = 3·S(5,3) + S(5,2) = 90",
        count_left_cells(t, 6, 3) == 90
            && count_left_cells(t, 6, 3) == 3 * count_left_cells(t, 5, 3) + count_left_cells(t, 5, 2),
    );
}

fn gram_suite(s: &mut SuiteReport) {
    let deltas = [
        DeltaSpec::Generic,
        DeltaSpec::Value(q(0)),
        DeltaSpec::Value(q(1)),
        DeltaSpec::Value(q(-1)),
        DeltaSpec::Value(q(2)),
    ];
    for family in DiagramFamily::ALL {
        for n in 1..=5 {
            for lambda in family.through_counts(n) {
                let g = gram_matrix(family, n, lambda).expect("valid cell");
                // Generic ranks of the large partition-family matrices take minutes.
                let generic_ok = g.rows().max(g.cols()) <= 60;
                for d in deltas.iter().filter(|d| generic_ok || !matches!(d, DeltaSpec::Generic)) {
                    s.check(
                        format!("{family} n={n} λ={lambda} δ={d}: rank <= min(#L, #R)"),
                        g.rank(d) <= g.rows().min(g.cols()),
                    );
                }
                if family.is_planar() && generic_ok {
                    s.check(
                        format!("{family} n={n} λ={lambda}: generic rank = #L"),
                        g.rank(&DeltaSpec::Generic) == g.cols(),
                    );
                }
            }
        }
    }
    // Brauer and Motzkin agree verbatim; for rook-Brauer the matrix carries an
    // extra δ^(n(n-1)/2) over the closed form.
    for family in [DiagramFamily::Brauer, DiagramFamily::Motzkin, DiagramFamily::RookBrauer] {
        for n in [4, 5] {
            let det = gram_matrix(family, n, n - 2).and_then(|g| g.determinant()).expect("square");
            let reference = reference_det_formulas(family, n).expect("closed form");
            let expected = if family == DiagramFamily::RookBrauer {
                reference.mul(&IntPoly::monomial(BigInt::one(), n * (n - 1) / 2))
            } else {
                reference
            };
            s.check(format!("{family} n={n} λ={}: determinant closed form", n - 2), det == expected);
        }
    }
    let tl = DiagramFamily::TemperleyLieb;
    let d1 = gram_matrix(tl, 5, 1).and_then(|g| g.determinant()).expect("square");
    let d3 = gram_matrix(tl, 5, 3).and_then(|g| g.determinant()).expect("square");
    let p = |c: &[i64]| IntPoly::from_i64s(c);
    s.check(
        "TL5 λ=1: det = (d-1)^4 (d+1)^4 (d^2-2)",
        d1 == p(&[-1, 1]).pow(4).mul(&p(&[1, 1]).pow(4)).mul(&p(&[-2, 0, 1])),
    );
    s.check("TL5 λ=3: det = (d^2+d-1)(d^2-d-1)", d3 == p(&[-1, 1, 1]).mul(&p(&[-1, -1, 1])));
}

fn simples_suite(s: &mut SuiteReport) {
    use DiagramFamily as F;
    let cases = [
        (F::FullTransformation, 3),
        (F::Brauer, 3),
        (F::Rook, 3),
        (F::TemperleyLieb, 4),
        (F::PlanarTransformation, 3),
        (F::Symmetric, 3),
    ];
    for (family, n) in cases {
        for d in [7, 1, 0] {
            let Ok(aps) = apexes(family, n, &DeltaSpec::Value(q(d))) else {
                s.check(format!("{family} n={n} δ={d}: apexes"), false);
                continue;
            };
            for lambda in aps {
                let labels: Vec<Option<YoungPartition>> = if has_trivial_sandwich(family, lambda) {
                    vec![None]
                } else {
                    partitions(lambda).into_iter().map(Some).collect()
                };
                for chi in labels {
                    let fast = simple_dimension(family, n, lambda, chi.as_ref(), &q(d));
                    let slow = oracle_simple_dimension(family, n, lambda, chi.as_ref(), &q(d));
                    let ok = matches!((&fast, &slow), (Ok(a), Ok(b)) if a == b);
                    let label = chi.map_or_else(|| "unit".to_string(), |c| c.to_string());
                    s.check(format!("{family} n={n} λ={lambda} {label} δ={d}: dimension = oracle"), ok);
                }
            }
        }
    }
    for n in 1..=4 {
        for lambda in 1..=n {
            for chi in partitions(lambda) {
                let sign = chi == YoungPartition::column(lambda);
                let expected =
                    if sign { binom(n - 1, lambda - 1) } else { binom(n, lambda) * chi.dimension() as usize };
                let got = simple_dimension(F::FullTransformation, n, lambda, Some(&chi), &q(1));
                s.check(format!("T{n} λ={lambda} {chi}: dimension formula"), got.is_ok_and(|g| g == expected));
            }
        }
    }
    for family in F::ALL {
        for n in 1..=3 {
            for d in [0, 1, 3] {
                let (Ok(table), Ok(semi), Ok(all)) =
                    (simple_table(family, n, &q(d)), semisimplicity_check(family, n, &q(d)), enumerate(family, n))
                else {
                    s.check(format!("{family} n={n} δ={d}: simple table"), false);
                    continue;
                };
                let sum = table.sum_of_squares.unwrap_or(usize::MAX);
                s.check(
                    format!("{family} n={n} δ={d}: Σ dim² <= dim, equality iff semisimple"),
                    sum <= all.len() && ((sum == all.len()) == semi),
                );
            }
        }
    }
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn symgroup_suite(s: &mut SuiteReport) {
    for m in [5, 6] {
        s.batch(
            format!("RSK round trip on S_{m}"),
            all_permutations(m).iter().map(|w| {
                let (p, q) = rsk(w);
                shape_of(&p) == shape_of(&q) && inverse_rsk(&p, &q).is_ok_and(|back| &back == w)
            }),
        );
    }
    for m in 1..=6 {
        let t = character_table(m);
        let order = factorial(m) as i128;
        let mut ok = true;
        for (i, a) in t.values.iter().enumerate() {
            for (j, b) in t.values.iter().enumerate() {
                let inner: i128 = t
                    .classes
                    .iter()
                    .enumerate()
                    .map(|(c, cls)| class_size(cls) as i128 * a[c] as i128 * b[c] as i128)
                    .sum();
                ok &= inner == if i == j { order } else { 0 };
            }
        }
        s.check(format!("S_{m}: character orthogonality"), ok);
        let involutions = all_permutations(m).iter().filter(|p| p.inverse() == **p).count();
        let syt: u128 = partitions(m).iter().map(YoungPartition::dimension).sum();
        s.check(format!("S_{m}: involutions = Σ f^λ"), involutions as u128 == syt);
    }
    for m in 1..=4 {
        let shapes = partitions(m);
        let idem: Vec<_> = shapes.iter().map(|c| central_idempotent(c, m).expect("size matches")).collect();
        let mut ok = true;
        for (i, a) in idem.iter().enumerate() {
            for (j, b) in idem.iter().enumerate() {
                let prod = a.mul(b).expect("same degree");
                ok &= if i == j { prod == *a } else { prod.is_zero() };
            }
        }
        s.check(format!("S_{m}: e_χ e_ψ = [χ=ψ] e_χ"), ok);
    }
    for size in 1..=6 {
        let all = partitions(size);
        for p in [2u64, 3, 5, 7] {
            let restricted = p_restricted_partitions(size, Some(p));
            let subset = restricted.iter().all(|x| all.contains(x));
            let equal = restricted.len() == all.len();
            s.check(format!("P({size}|{p}) ⊆ P({size}), equal iff p > size"), subset && equal == (p as usize > size));
        }
    }
}

fn random_word(rng: &mut ChaCha8Rng, max: usize) -> DihedralWord {
    DihedralWord::new(rng.gen_range(0..=max), rng.gen_range(1..=2)).expect("valid letter")
}

fn dihedral_suite(s: &mut SuiteReport, rng: &mut ChaCha8Rng, samples: usize) {
    let m = |a, b| Ok(cg_multiply_infinite(a, b));
    let triples: Vec<_> =
        (0..samples).map(|_| (random_word(rng, 10), random_word(rng, 10), random_word(rng, 10))).collect();
    s.batch(
        "infinite products are associative (length <= 10)",
        triples.iter().map(|&(x, y, z)| {
            let (bx, by, bz) = (HeckeElement::basis(x), HeckeElement::basis(y), HeckeElement::basis(z));
            let left = bx.mul_with(&by, m).and_then(|e| e.mul_with(&bz, m));
            let right = by.mul_with(&bz, m).and_then(|e| bx.mul_with(&e, m));
            matches!((left, right), (Ok(l), Ok(r)) if l == r)
        }),
    );
    s.batch(
        "infinite structure constants are nonnegative",
        triples.iter().map(|&(x, y, _)| cg_multiply_infinite(x, y).is_nonnegative()),
    );
    let pairs: Vec<_> = (0..samples)
        .map(|_| {
            let n = rng.gen_range(3..=12);
            (n, random_word(rng, n - 1), random_word(rng, n - 1))
        })
        .collect();
    s.batch(
        "finite agrees with infinite below the longest element",
        pairs.iter().map(|&(n, x, y)| {
            let inf = cg_multiply_infinite(x, y);
            inf.terms().any(|(w, _)| w.len() >= n) || cg_multiply_finite(n, x, y).is_ok_and(|f| f == inf)
        }),
    );
    for n in 3..=15 {
        let all = DihedralWord::all(n);
        let ok =
            all.iter().all(|&x| all.iter().all(|&y| cg_multiply_finite(n, x, y).is_ok_and(|e| e.is_nonnegative())));
        s.check(format!("I2({n}): structure constants are nonnegative"), ok);
    }
    for n in 3..=8 {
        let Ok(alg) = dihedral_algebra_generic(n) else {
            s.check(format!("I2({n}): algebra"), false);
            continue;
        };
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
        s.check(format!("I2({n}): star is an antiautomorphism"), ok);
    }
    for n in 3..=13 {
        let Ok(cells) = dihedral_cells(n, VMode::One) else {
            s.check(format!("I2({n}): cells"), false);
            continue;
        };
        if n % 2 == 1 {
            s.check(format!("I2({n}): sandwich pair"), cells.sandwich.pass);
            let minimal = middle_algebra(n, VMode::One).is_ok_and(|a| a.matches_p_prime && a.squarefree);
            s.check(format!("I2({n}): c_121 has minimal polynomial P'_{}", (n - 1) / 2), minimal);
            let dims = dihedral_simples(n, VMode::One).is_ok_and(|t| t.sum_of_squares == 2 * n);
            s.check(format!("I2({n}): Σ dim² = {}", 2 * n), dims);
        } else {
            let middle_fails = cells.sandwich.jcells.iter().any(|c| !c.h_sizes_equal);
            s.check(format!("I2({n}): sandwich pair fails at the middle cell"), !cells.sandwich.pass && middle_fails);
        }
    }
}
