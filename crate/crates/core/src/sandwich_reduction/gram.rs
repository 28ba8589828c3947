use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::SandwichError;
use crate::based_cells::DeltaSpec;
use crate::diagrams::{enumerate_halves, pairing, DiagramFamily, HalfDiagram, Side, MAX_STRANDS};
use crate::exact_arith::{
    chebyshev_u, matrix_det, matrix_rank, rank_mod_p, rank_rational, ExactMatrix, IntPoly, NfElem, Scalar,
};
use crate::exec::Exec;
use crate::symgroup_kit::Permutation;

/// Glue `top` (a right-cell key) onto `bottom` (a left-cell key) inside J-cell `lambda`.
///
/// `Some((k, π))` when the product keeps all `lambda` strands, closing `k`
/// loops with middle permutation `π`; `None` when the product falls into a
/// lower cell or a half has the wrong rank.
pub fn pairing_element(top: &HalfDiagram, bottom: &HalfDiagram, lambda: usize) -> Option<(usize, Permutation)> {
    if top.rank() != lambda || bottom.rank() != lambda {
        return None;
    }
    pairing(top, bottom)
}

/// Gram matrix of one J-cell: rows are top halves, columns bottom halves.
#[derive(Clone, Debug, Serialize)]
pub struct GramMatrix {
    pub family: DiagramFamily,
    pub n: usize,
    pub lambda: usize,
    pub tops: Vec<HalfDiagram>,
    pub bottoms: Vec<HalfDiagram>,
    /// Loop count and middle permutation of each nonzero entry.
    pub entries: Vec<Vec<Option<(usize, Permutation)>>>,
}

pub fn gram_matrix(family: DiagramFamily, n: usize, lambda: usize) -> Result<GramMatrix, SandwichError> {
    gram_matrix_with(family, n, lambda, Exec::default())
}

pub fn gram_matrix_with(
    family: DiagramFamily,
    n: usize,
    lambda: usize,
    exec: Exec,
) -> Result<GramMatrix, SandwichError> {
    if n > MAX_STRANDS {
        return Err(SandwichError::TooManyStrands(n));
    }
    if !family.through_counts(n).contains(&lambda) {
        return Err(SandwichError::BadLambda { family, n, lambda });
    }
    let tops = enumerate_halves(family, Side::Top, n, lambda);
    let bottoms = enumerate_halves(family, Side::Bottom, n, lambda);
    let entries = exec.map_slice(&tops, |t| bottoms.iter().map(|b| pairing_element(t, b, lambda)).collect());
    Ok(GramMatrix { family, n, lambda, tops, bottoms, entries })
}

impl GramMatrix {
    pub fn rows(&self) -> usize {
        self.tops.len()
    }

    pub fn cols(&self) -> usize {
        self.bottoms.len()
    }

    pub fn exponent(&self, i: usize, j: usize) -> Option<usize> {
        self.entries[i][j].as_ref().map(|(k, _)| *k)
    }

    fn map_entries<T: Scalar>(&self, zero: &T, pow: impl Fn(usize) -> T + Sync + Send) -> ExactMatrix<T> {
        ExactMatrix::from_fn(self.rows(), self.cols(), |i, j| self.exponent(i, j).map_or_else(|| zero.clone(), &pow))
    }

    /// Entries `δ^k` in `ℤ[δ]`.
    pub fn generic(&self) -> ExactMatrix<IntPoly> {
        self.map_entries(&IntPoly::zero(), |k| IntPoly::monomial(BigInt::one(), k))
    }

    pub fn at(&self, delta: &BigRational) -> ExactMatrix<BigRational> {
        self.map_entries(&BigRational::zero(), |k| num_traits::pow(delta.clone(), k))
    }

    pub fn at_nf(&self, delta: &NfElem) -> ExactMatrix<NfElem> {
        let one = delta.one_like();
        self.map_entries(&delta.zero_like(), |k| (0..k).fold(one.clone(), |acc, _| acc.mul_ref(delta)))
    }

    /// Integer matrix of `δ^k`, for reduction modulo a prime.
    pub fn at_int(&self, delta: &BigInt) -> ExactMatrix<BigInt> {
        self.map_entries(&BigInt::zero(), |k| num_traits::pow(delta.clone(), k))
    }

    pub fn rank(&self, delta: &DeltaSpec) -> usize {
        match delta {
            DeltaSpec::Generic => {
                // Specializing never raises the rank, so a full-rank probe settles it.
                let probe = rank_rational(&self.at(&BigRational::new(1009.into(), 7.into())), Exec::default());
                if probe == self.rows().min(self.cols()) {
                    probe
                } else {
                    matrix_rank(&self.generic())
                }
            }
            DeltaSpec::Value(d) => rank_rational(&self.at(d), Exec::default()),
        }
    }

    pub fn rank_nf(&self, delta: &NfElem) -> usize {
        matrix_rank(&self.at_nf(delta))
    }

    /// Rank over `𝔽_p` with `δ` an integer representative.
    pub fn rank_mod_p(&self, delta: u64, p: u64) -> usize {
        rank_mod_p(&self.at_int(&BigInt::from(delta % p)), p)
    }

    pub fn determinant(&self) -> Result<IntPoly, SandwichError> {
        Ok(matrix_det(&self.generic())?)
    }

    /// Whether some entry survives when `δ` is zero (`delta_zero`) or a unit.
    pub fn has_nonzero_entry(&self, delta_zero: bool) -> bool {
        self.entries.iter().flatten().flatten().any(|(k, _)| !delta_zero || *k == 0)
    }

    /// One row per line, entries in polynomial text format.
    pub fn render(&self) -> String {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        None => "0".to_string(),
                        Some((k, _)) => IntPoly::monomial(BigInt::one(), *k).render("d"),
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

pub fn gram_rank(family: DiagramFamily, n: usize, lambda: usize, delta: &DeltaSpec) -> Result<usize, SandwichError> {
    Ok(gram_matrix(family, n, lambda)?.rank(delta))
}

/// Closed-form determinant of the `λ = n−2` Gram matrix for Brauer, Motzkin
/// and rook-Brauer; `None` for other families or `n < 3`.
pub fn reference_det_formulas(family: DiagramFamily, n: usize) -> Option<IntPoly> {
    if n < 3 {
        return None;
    }
    let d = IntPoly::x();
    let lin = |c: i64| d.add(&IntPoly::constant(BigInt::from(c)));
    let ni = n as i64;
    match family {
        DiagramFamily::Brauer => Some(lin(-2).pow(n * (n - 3) / 2).mul(&lin(ni - 4).pow(n - 1)).mul(&lin(2 * ni - 4))),
        DiagramFamily::Motzkin => Some(d.pow(n * (n - 1)).mul(&chebyshev_u(n - 1).compose(&lin(-1)))),
        DiagramFamily::RookBrauer => Some(
            d.pow(n * (n - 1) / 2)
                .mul(&lin(-3).pow(n * (n - 3) / 2))
                .mul(&lin(ni - 5).pow(n - 1))
                .mul(&lin(2 * ni - 5)),
        ),
        _ => None,
    }
}
