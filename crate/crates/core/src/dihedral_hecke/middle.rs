use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::algebra::{dihedral_algebra_at_one, dihedral_algebra_generic, product_table, ProductTable, VMode};
use super::multiply::{render_quantum, HeckeElement};
use super::word::DihedralWord;
use super::DihedralError;
use crate::based_cells::{compute_cells, CellStructure};
use crate::exact_arith::{
    bracket2, factor_rational, minimal_polynomial, ExactMatrix, IntPoly, LaurentInt, NfElem, NumberField, Poly,
    RatPoly, Scalar,
};

/// Largest odd `n` for the middle-cell computations.
pub const MAX_MIDDLE_RANK: usize = 13;

/// `numerator / [2]^bracket_power` with `numerator ∈ ℤ[v, v⁻¹][X]`.
#[derive(Clone, PartialEq, Debug)]
pub struct BracketScaledPoly {
    pub numerator: Poly<LaurentInt>,
    pub bracket_power: u32,
}

impl BracketScaledPoly {
    /// Specialization at `v = 1`, where `[2] = 2`.
    pub fn at_one(&self) -> RatPoly {
        let den = BigRational::from_integer(BigInt::from(2).pow(self.bracket_power));
        RatPoly::new(self.numerator.coeffs().iter().map(|c| BigRational::from_integer(c.at_one()) / &den).collect())
    }

    /// Whether this is a `ℚ(v)`-multiple of a polynomial with integer coefficients.
    pub fn is_proportional_to(&self, p: &IntPoly) -> bool {
        let (Some(d), Some(e)) = (self.numerator.degree(), p.degree()) else {
            return self.numerator.is_zero() && p.is_zero();
        };
        if d != e {
            return false;
        }
        let lead = self.numerator.leading();
        let lp = p.leading();
        (0..=d).all(|i| self.numerator.coeff(i).scale(&lp) == lead.scale(&p.coeff(i)))
    }
}

/// `P_0 = 1`, `P_1 = X`, `P_{k+1} = ((X − [2])/[2])·P_k − P_{k−1}`, stored as
/// `[2]^k·P_k`.
pub fn p_poly(k: usize) -> BracketScaledPoly {
    let two = bracket2(1);
    let x = Poly::<LaurentInt>::x();
    let step = x.sub(&Poly::constant(two.clone()));
    let two_sq = Poly::constant(two.mul(&two));
    let mut prev = Poly::<LaurentInt>::one();
    let mut cur = x.scale(&two);
    if k == 0 {
        return BracketScaledPoly { numerator: prev, bracket_power: 0 };
    }
    for _ in 1..k {
        let next = step.mul(&cur).sub(&two_sq.mul(&prev));
        prev = cur;
        cur = next;
    }
    BracketScaledPoly { numerator: cur, bracket_power: k as u32 }
}

/// `P′_0 = 1`, `P′_1 = X`, `P′_{k+1} = (X − 1)·P′_k − P′_{k−1}`.
pub fn p_prime_poly(k: usize) -> IntPoly {
    let step = IntPoly::from_i64s(&[-1, 1]);
    let mut prev = IntPoly::one();
    let mut cur = IntPoly::x();
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = step.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// The algebra carried by the middle H-cell through `b_1`, in the basis
/// `c_w = b_w/[2]`, computed modulo `b_{w₀}`.
#[derive(Clone, Debug, Serialize)]
pub struct MiddleAlgebra {
    pub n: usize,
    pub v: VMode,
    pub basis: Vec<DihedralWord>,
    /// `c_i·c_j = Σ_k table[i][j][k]·c_k`.
    #[serde(skip)]
    pub table: Vec<Vec<Vec<BigRational>>>,
    /// Matrix of left multiplication by `c_121`.
    #[serde(skip)]
    pub generator_matrix: ExactMatrix<BigRational>,
    pub minimal_polynomial: String,
    #[serde(skip)]
    pub minimal_poly: RatPoly,
    /// `P_{(n−1)/2}` at `v = 1`.
    pub p_at_one: String,
    pub matches_p: bool,
    pub matches_p_prime: bool,
    pub commutative: bool,
    pub squarefree: bool,
    pub simple_count: usize,
}

fn check_odd(n: usize) -> Result<(), DihedralError> {
    if n % 2 == 0 {
        return Err(DihedralError::EvenRank(n));
    }
    if !(3..=MAX_MIDDLE_RANK).contains(&n) {
        return Err(DihedralError::BadRank(n));
    }
    Ok(())
}

/// J-cell membership and the H-cell of `b_1`, from the cell engine.
struct MiddleCell {
    jcell_of: Vec<usize>,
    j: usize,
    h: Vec<usize>,
    h_sizes: Vec<Vec<usize>>,
}

fn middle_cell(n: usize, v: VMode) -> Result<MiddleCell, DihedralError> {
    fn extract<C>(cs: &CellStructure<C>, b1: usize) -> MiddleCell {
        let j = cs.jcell_of[b1];
        let (r, c) = cs.position(b1);
        let cell = &cs.jcells[j];
        MiddleCell { jcell_of: cs.jcell_of.clone(), j, h: cell.h_grid[r][c].clone(), h_sizes: cell.h_sizes() }
    }
    let b1 = DihedralWord::generator(1)?.index_in(n).expect("generator");
    Ok(match v {
        VMode::Generic => extract(&compute_cells(&dihedral_algebra_generic(n)?)?, b1),
        VMode::One => extract(&compute_cells(&dihedral_algebra_at_one(n)?)?, b1),
    })
}

/// Sizes of the H-cells in the J-cell of `b_1`; unequal for even `n`.
pub fn middle_h_sizes(n: usize, v: VMode) -> Result<Vec<Vec<usize>>, DihedralError> {
    Ok(middle_cell(n, v)?.h_sizes)
}

/// Coordinates of `factor·b_x·b_y` on `targets`, modulo everything outside
/// the J-cell; `c_w`-coordinates are `[2]` times `b_w`-coordinates.
///
/// `c_factors` counts how many of `x`, `y` are read as `c` rather than `b`.
fn c_coordinates(
    table: &ProductTable,
    cell: &MiddleCell,
    x: DihedralWord,
    y: DihedralWord,
    c_factors: u32,
    targets: &[usize],
    v: VMode,
) -> Result<Vec<LaurentInt>, DihedralError> {
    let n = table.n;
    let prod = table.get(x.index_in(n).expect("in group"), y.index_in(n).expect("in group"));
    let two = bracket2(1);
    let mut out = vec![LaurentInt::zero(); targets.len()];
    for (w, c) in prod.terms() {
        let idx = w.index_in(n).expect("in group");
        if cell.jcell_of[idx] != cell.j {
            continue;
        }
        let pos = targets
            .iter()
            .position(|&t| t == idx)
            .ok_or_else(|| DihedralError::Structure(format!("b{x}·b{y} leaves the H-cell through b1 at b{w}")))?;
        let scaled = match c_factors {
            0 => c.mul(&two),
            1 => c.clone(),
            _ => c.checked_div(&two).ok_or_else(|| {
                DihedralError::Structure(format!("coefficient of b{w} in b{x}·b{y} is not divisible by [2]"))
            })?,
        };
        out[pos] = match v {
            VMode::Generic => scaled,
            VMode::One => LaurentInt::constant(scaled.at_one()),
        };
    }
    Ok(out)
}

fn constant(c: &LaurentInt) -> Result<BigRational, DihedralError> {
    if c.is_zero() {
        return Ok(BigRational::zero());
    }
    if c.low() != 0 || c.high() != 0 {
        return Err(DihedralError::Structure(format!("structure constant {} depends on v", c.render())));
    }
    Ok(BigRational::from_integer(c.coeff(0)))
}

/// Build the middle H-cell algebra and compare the minimal polynomial of
/// `c_121` with `P_{(n−1)/2}` and `P′_{(n−1)/2}`.
pub fn middle_algebra(n: usize, v: VMode) -> Result<MiddleAlgebra, DihedralError> {
    if n % 2 == 0 && (super::algebra::MIN_RANK..=super::algebra::MAX_RANK).contains(&n) {
        return Err(DihedralError::EvenMiddle { n, h_sizes: middle_h_sizes(n, v)? });
    }
    check_odd(n)?;
    let table = product_table(n)?;
    let cell = middle_cell(n, v)?;
    let mut h = cell.h.clone();
    h.sort_by_key(|&i| table.words[i]);
    let basis: Vec<DihedralWord> = h.iter().map(|&i| table.words[i]).collect();
    let dim = basis.len();

    let mut mult = vec![vec![Vec::new(); dim]; dim];
    for (a, &x) in basis.iter().enumerate() {
        for (b, &y) in basis.iter().enumerate() {
            mult[a][b] =
                c_coordinates(&table, &cell, x, y, 2, &h, v)?.iter().map(constant).collect::<Result<Vec<_>, _>>()?;
        }
    }

    // c_121 reduced into the cell; zero when 121 is the longest element.
    let gen_word: DihedralWord = "121".parse()?;
    let gen_pos = basis.iter().position(|&w| w == gen_word);
    let generator_matrix = ExactMatrix::from_fn(dim, dim, |r, c| match gen_pos {
        Some(g) => mult[g][c][r].clone(),
        None => BigRational::zero(),
    });
    let minimal_poly = minimal_polynomial(&generator_matrix)?;
    let k = (n - 1) / 2;
    let p = p_poly(k);
    let p_prime = p_prime_poly(k);
    let minimal_int = minimal_poly.to_primitive_int();
    let matches_p = match v {
        VMode::Generic => p.is_proportional_to(&minimal_int),
        VMode::One => p.at_one().monic() == minimal_poly,
    };
    let matches_p_prime = p_prime.to_rat().monic() == minimal_poly;
    let commutative = (0..dim).all(|a| (0..dim).all(|b| mult[a][b] == mult[b][a]));
    let gcd = minimal_poly.gcd_field(&minimal_poly.derivative());
    let squarefree = gcd.degree() == Some(0);
    let simple_count = minimal_poly.degree().unwrap_or(0) - gcd.degree().unwrap_or(0);
    Ok(MiddleAlgebra {
        n,
        v,
        basis,
        table: mult,
        minimal_polynomial: minimal_poly.render("X"),
        minimal_poly,
        generator_matrix,
        p_at_one: p.at_one().render("X"),
        matches_p,
        matches_p_prime,
        commutative,
        squarefree,
        simple_count,
    })
}

/// Laurent polynomial in `v` over a number field.
#[derive(Clone, Debug)]
struct LaurentNf(BTreeMap<i64, NfElem>);

impl LaurentNf {
    fn is_zero(&self) -> bool {
        self.0.values().all(NfElem::is_zero)
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out: BTreeMap<i64, NfElem> = BTreeMap::new();
        for (i, a) in &self.0 {
            for (j, b) in &rhs.0 {
                let t = a.mul_ref(b);
                let slot = out.entry(i + j).or_insert_with(|| t.zero_like());
                *slot = slot.add_ref(&t);
            }
        }
        LaurentNf(out)
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.0.clone();
        for (k, b) in &rhs.0 {
            let slot = out.entry(*k).or_insert_with(|| b.zero_like());
            *slot = slot.sub_ref(b);
        }
        LaurentNf(out)
    }
}

/// Rank over `K(v)` of a matrix with at most two rows or columns.
fn small_rank(m: &[Vec<LaurentNf>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if m.iter().flatten().all(LaurentNf::is_zero) {
        return 0;
    }
    if rows.min(cols) == 1 {
        return 1;
    }
    assert!(rows == 2 && cols == 2, "small_rank handles 1x1, 1x2, 2x1 and 2x2");
    let det = m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0]));
    if det.is_zero() {
        1
    } else {
        2
    }
}

/// Rank of one J-cell's sandwich matrix under one simple factor.
#[derive(Clone, Debug, Serialize)]
pub struct CellRank {
    pub cell: String,
    /// Irreducible factor of the minimal polynomial; empty outside the middle cell.
    pub factor: String,
    /// Number of simples sharing this rank (Galois conjugates).
    pub multiplicity: usize,
    pub matrix: Vec<Vec<String>>,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SandwichRanks {
    pub n: usize,
    pub v: VMode,
    pub cells: Vec<CellRank>,
    /// One rank per simple module, bottom to top.
    pub ranks: Vec<usize>,
}

/// `b_{w₀}·b_{w₀}` rendered as `s·b_{w₀}`.
pub fn top_sandwich_entry(n: usize, v: VMode) -> Result<(LaurentInt, String), DihedralError> {
    let table = product_table(n)?;
    let w0 = DihedralWord::longest(n);
    let i = w0.index_in(n).expect("in group");
    let s = table.get(i, i).coeff(&w0);
    let s = match v {
        VMode::Generic => s,
        VMode::One => LaurentInt::constant(s.at_one()),
    };
    let coeff = render_quantum(&s);
    let coeff = if coeff.contains(['+', '-']) { format!("({coeff})") } else { coeff };
    Ok((s, format!("{coeff}·{}", w0.basis_name())))
}

/// Ranks of the sandwich matrices of `I₂(n)`, `n` odd, in characteristic zero.
///
/// Bottom and top are `1×1`. The middle matrix pairs the shortest words with
/// first letter `1, 2` and last letter `1` against the shortest words with
/// first letter `1` and last letter `1, 2`, read in the algebra of the H-cell
/// through `b_1`; every irreducible factor `f` of its minimal polynomial
/// gives a character into `ℚ[t]/(f)` under which the rank is taken.
pub fn dihedral_sandwich_ranks(n: usize, v: VMode) -> Result<SandwichRanks, DihedralError> {
    let alg = middle_algebra(n, v)?;
    let table = product_table(n)?;
    let cell = middle_cell(n, v)?;
    let mut h = cell.h.clone();
    h.sort_by_key(|&i| table.words[i]);
    let dim = h.len();

    let mut cells = Vec::new();
    let e = DihedralWord::IDENTITY;
    let bottom = table.get(0, 0).coeff(&e);
    cells.push(CellRank {
        cell: "b".into(),
        factor: String::new(),
        multiplicity: 1,
        matrix: vec![vec![HeckeElement::term(e, bottom.clone()).render()]],
        rank: usize::from(!bottom.is_zero()),
    });

    // Shortest words in the middle J-cell with the given first and last letter.
    let shortest = |first: u8, last: u8| -> DihedralWord {
        (1..n)
            .flat_map(|l| [DihedralWord::new(l, 1), DihedralWord::new(l, 2)])
            .map(|w| w.expect("valid"))
            .find(|w| {
                w.first() == Some(first) && w.last() == Some(last) && cell.jcell_of[w.index_in(n).unwrap()] == cell.j
            })
            .expect("middle cell contains every letter pattern")
    };
    let tops = [shortest(1, 1), shortest(2, 1)];
    let bottoms = [shortest(1, 1), shortest(1, 2)];
    // The unit c_1 enters as c; the other representatives as b.
    let mut entries: Vec<Vec<Vec<LaurentInt>>> = Vec::new();
    for &bw in &bottoms {
        let mut row = Vec::new();
        for &tw in &tops {
            let c_factors = u32::from(bw.len() == 1) + u32::from(tw.len() == 1);
            row.push(c_coordinates(&table, &cell, bw, tw, c_factors, &h, v)?);
        }
        entries.push(row);
    }

    // Express each H-cell basis element as a polynomial in c_121.
    let in_generator = krylov_coordinates(&alg)?;
    let factorization = factor_rational(&alg.minimal_poly.to_primitive_int())?;
    for (f, _) in &factorization.factors {
        let field = NumberField::new(f.clone())?;
        let images: Vec<NfElem> = in_generator.iter().map(|g| NfElem::from_poly(&field, g.clone())).collect();
        let matrix: Vec<Vec<LaurentNf>> = entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|coords| {
                        let mut out: BTreeMap<i64, NfElem> = BTreeMap::new();
                        for (i, c) in coords.iter().enumerate().take(dim) {
                            for (k, a) in c.terms() {
                                let t =
                                    images[i].mul_ref(&NfElem::from_rat(&field, BigRational::from_integer(a.clone())));
                                let slot = out.entry(k).or_insert_with(|| NfElem::from_int(&field, 0));
                                *slot = slot.add_ref(&t);
                            }
                        }
                        LaurentNf(out)
                    })
                    .collect()
            })
            .collect();
        let rendered = entries
            .iter()
            .map(|row| row.iter().map(|coords| render_cell_element(coords, &alg.basis)).collect())
            .collect();
        cells.push(CellRank {
            cell: "m".into(),
            factor: f.render("t"),
            multiplicity: f.degree().unwrap_or(0),
            matrix: rendered,
            rank: small_rank(&matrix),
        });
    }

    let (s, text) = top_sandwich_entry(n, v)?;
    cells.push(CellRank {
        cell: "t".into(),
        factor: String::new(),
        multiplicity: 1,
        matrix: vec![vec![text]],
        rank: usize::from(!s.is_zero()),
    });

    let ranks = cells.iter().flat_map(|c| std::iter::repeat_n(c.rank, c.multiplicity)).collect();
    Ok(SandwichRanks { n, v, cells, ranks })
}

fn render_cell_element(coords: &[LaurentInt], basis: &[DihedralWord]) -> String {
    let el = HeckeElement::from_terms(basis.iter().zip(coords).map(|(w, c)| (*w, c.clone())));
    el.render().replace('b', "c")
}

/// Polynomials `g_i` with `h_i = g_i(c_121)` in the middle algebra.
fn krylov_coordinates(alg: &MiddleAlgebra) -> Result<Vec<RatPoly>, DihedralError> {
    let dim = alg.basis.len();
    let unit = alg
        .basis
        .iter()
        .position(|w| w.len() == 1)
        .ok_or_else(|| DihedralError::Structure("b1 missing from its H-cell".into()))?;
    let mut columns: Vec<Vec<BigRational>> = Vec::new();
    let mut v: Vec<BigRational> =
        (0..dim).map(|i| if i == unit { BigRational::one() } else { BigRational::zero() }).collect();
    for _ in 0..dim {
        columns.push(v.clone());
        v = (0..dim).map(|r| (0..dim).map(|c| alg.generator_matrix.get(r, c) * &v[c]).sum()).collect();
    }
    let krylov = ExactMatrix::from_fn(dim, dim, |r, c| columns[c][r].clone());
    let inverse =
        invert(&krylov).ok_or_else(|| DihedralError::Structure("c121 does not generate the H-cell algebra".into()))?;
    Ok((0..dim).map(|j| RatPoly::new((0..dim).map(|i| inverse[i][j].clone()).collect())).collect())
}

/// Gauss–Jordan inverse of a square rational matrix.
fn invert(m: &ExactMatrix<BigRational>) -> Option<Vec<Vec<BigRational>>> {
    let n = m.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.extend((0..n).map(|c| if c == r { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let t = &a[col][c] * &f;
                    a[r][c] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct DihedralSimple {
    pub apex: String,
    pub label: String,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DihedralSimpleTable {
    pub n: usize,
    pub v: VMode,
    pub apexes: Vec<String>,
    /// Simples per apex, in the order of `apexes`.
    pub counts: Vec<usize>,
    pub simples: Vec<DihedralSimple>,
    pub sum_of_squares: usize,
    pub group_order: usize,
    pub semisimple: bool,
}

/// Simple modules of `H(I₂(n))`, `n` odd, by H-reduction: one per apex `b`
/// and `t`, one per root of the middle minimal polynomial, each of dimension
/// the rank of its sandwich matrix.
pub fn dihedral_simples(n: usize, v: VMode) -> Result<DihedralSimpleTable, DihedralError> {
    let ranks = dihedral_sandwich_ranks(n, v)?;
    let mut simples = Vec::new();
    for c in &ranks.cells {
        if c.rank == 0 {
            continue;
        }
        if c.factor.is_empty() {
            simples.push(DihedralSimple { apex: c.cell.clone(), label: "unit".into(), dim: c.rank });
        } else {
            for i in 0..c.multiplicity {
                simples.push(DihedralSimple { apex: c.cell.clone(), label: format!("{}:{i}", c.factor), dim: c.rank });
            }
        }
    }
    let apexes: Vec<String> =
        ["b", "m", "t"].into_iter().filter(|a| simples.iter().any(|s| s.apex == *a)).map(String::from).collect();
    let counts = apexes.iter().map(|a| simples.iter().filter(|s| &s.apex == a).count()).collect();
    let sum_of_squares = simples.iter().map(|s| s.dim * s.dim).sum();
    Ok(DihedralSimpleTable {
        n,
        v,
        apexes,
        counts,
        simples,
        sum_of_squares,
        group_order: 2 * n,
        semisimple: sum_of_squares == 2 * n,
    })
}

/// One root of `P′_{(n−1)/2}`: the generator of `ℚ[t]/(f)` for an irreducible factor `f`.
#[derive(Clone, Debug)]
pub struct CharacterRoot {
    pub factor: IntPoly,
    pub field: Arc<NumberField>,
    pub root: NfElem,
    /// `root − 1`, the character value of the two-dimensional simple on the rotation `12`.
    pub rotation_value: NfElem,
}

#[derive(Clone, Debug)]
pub struct DihedralCharacterData {
    pub n: usize,
    pub p_prime: IntPoly,
    pub squarefree: bool,
    pub roots: Vec<CharacterRoot>,
}

impl DihedralCharacterData {
    /// Number of two-dimensional simples (roots over ℂ).
    pub fn root_count(&self) -> usize {
        self.roots.iter().map(|r| r.factor.degree().unwrap_or(0)).sum()
    }
}

/// Eigenvalues of `c_121` on the two-dimensional simples at `v = 1`: the
/// roots of `P′_{(n−1)/2}`, one number-field generator per irreducible factor.
pub fn dihedral_character_data(n: usize) -> Result<DihedralCharacterData, DihedralError> {
    check_odd(n)?;
    let p = p_prime_poly((n - 1) / 2);
    let squarefree = crate::exact_arith::poly_gcd(&p, &p.derivative()).degree() == Some(0);
    let mut roots = Vec::new();
    for (f, _) in factor_rational(&p)?.factors {
        let field = NumberField::new(f.clone())?;
        let root = NfElem::generator(&field);
        let rotation_value = root.sub_ref(&NfElem::from_int(&field, 1));
        roots.push(CharacterRoot { factor: f, field, root, rotation_value });
    }
    Ok(DihedralCharacterData { n, p_prime: p, squarefree, roots })
}
