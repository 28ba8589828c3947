use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use serde::Serialize;

use super::multiply::{cg_multiply_finite, HeckeElement};
use super::word::DihedralWord;
use super::DihedralError;
use crate::based_cells::{
    compute_cells, eggbox, verify_sandwich_pair, BasedAlgebra, CellStructure, RingTag, SandwichReport, SparseVec,
};
use crate::exact_arith::{LaurentInt, Scalar};
use crate::exec::Exec;

pub const MIN_RANK: usize = 3;
pub const MAX_RANK: usize = 15;

/// Specialization of the quantum parameter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VMode {
    /// `v` an indeterminate: coefficients in `ℤ[v, v⁻¹]`.
    Generic,
    /// `v = 1`: the group algebra of the dihedral group.
    #[serde(rename = "1")]
    One,
}

impl FromStr for VMode {
    type Err = DihedralError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "generic" | "v" => Ok(VMode::Generic),
            "1" | "one" => Ok(VMode::One),
            other => Err(DihedralError::BadVMode(other.to_string())),
        }
    }
}

impl fmt::Display for VMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VMode::Generic => "generic",
            VMode::One => "1",
        })
    }
}

/// Products `b_x·b_y` of `I₂(n)` indexed as in [`DihedralWord::all`].
pub struct ProductTable {
    pub n: usize,
    pub words: Vec<DihedralWord>,
    products: Vec<Vec<HeckeElement>>,
}

impl ProductTable {
    pub fn get(&self, i: usize, j: usize) -> &HeckeElement {
        &self.products[i][j]
    }

    pub fn index_of(&self, w: DihedralWord) -> Option<usize> {
        w.index_in(self.n)
    }

    /// Product as a sparse vector of basis indices.
    pub fn sparse(&self, i: usize, j: usize) -> SparseVec<LaurentInt> {
        self.products[i][j]
            .terms()
            .map(|(w, c)| (c.clone(), w.index_in(self.n).expect("product stays in the group")))
            .collect()
    }
}

fn table_cache() -> &'static RwLock<HashMap<usize, Arc<ProductTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<ProductTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn check_rank(n: usize) -> Result<(), DihedralError> {
    if (MIN_RANK..=MAX_RANK).contains(&n) {
        Ok(())
    } else {
        Err(DihedralError::BadRank(n))
    }
}

/// Memoized multiplication table of `I₂(n)` over `ℤ[v, v⁻¹]`.
pub fn product_table(n: usize) -> Result<Arc<ProductTable>, DihedralError> {
    check_rank(n)?;
    if let Some(t) = table_cache().read().expect("table cache poisoned").get(&n) {
        return Ok(t.clone());
    }
    let words = DihedralWord::all(n);
    let rows: Vec<Result<Vec<HeckeElement>, DihedralError>> =
        Exec::default().map_slice(&words, |&x| words.iter().map(|&y| cg_multiply_finite(n, x, y)).collect());
    let products = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    let table = Arc::new(ProductTable { n, words, products });
    table_cache().write().expect("table cache poisoned").entry(n).or_insert_with(|| table.clone());
    Ok(table)
}

fn decorate<C: Scalar>(alg: BasedAlgebra<C>, table: &ProductTable) -> BasedAlgebra<C> {
    let n = table.n;
    let gens = vec![DihedralWord::generator(1), DihedralWord::generator(2)]
        .into_iter()
        .map(|w| w.expect("letters").index_in(n).expect("generator"))
        .collect();
    let star = table.words.iter().map(|w| w.inverse().index_in(n).expect("inverse")).collect();
    let labels = table.words.iter().map(DihedralWord::basis_name).collect();
    alg.with_generators(gens, true).with_star(star).with_unit(0).with_labels(labels)
}

/// Based algebra `(H(I₂(n)), KL basis)` over `ℤ[v, v⁻¹]`.
///
/// The star is `b_w ↦ b_{w⁻¹}`.
pub fn dihedral_algebra_generic(n: usize) -> Result<BasedAlgebra<LaurentInt>, DihedralError> {
    let table = product_table(n)?;
    let t = table.clone();
    let alg = BasedAlgebra::new(2 * n, RingTag::Laurent, Arc::new(move |i, j| t.sparse(i, j)));
    Ok(decorate(alg, &table))
}

/// The same based algebra at `v = 1`, i.e. `ℚ[D_n]` with its KL basis.
pub fn dihedral_algebra_at_one(n: usize) -> Result<BasedAlgebra<BigRational>, DihedralError> {
    let table = product_table(n)?;
    let t = table.clone();
    let alg = BasedAlgebra::new(
        2 * n,
        RingTag::Rational,
        Arc::new(move |i, j| {
            t.sparse(i, j).into_iter().map(|(c, k)| (BigRational::from_integer(c.at_one()), k)).collect()
        }),
    );
    Ok(decorate(alg, &table))
}

/// One J-cell of `I₂(n)` with its H-cells named by words.
#[derive(Clone, Debug, Serialize)]
pub struct DihedralTier {
    /// `b`, `m` or `t`, from the bottom of the J-order.
    pub name: String,
    pub order_rank: usize,
    /// `h_cells[r][c]`: words in right cell `r` and left cell `c`.
    pub h_cells: Vec<Vec<Vec<String>>>,
    pub strict: Vec<Vec<bool>>,
    pub eggbox: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DihedralCells {
    pub n: usize,
    pub v: VMode,
    pub tiers: Vec<DihedralTier>,
    pub sandwich: SandwichReport,
}

impl DihedralCells {
    pub fn tier(&self, name: &str) -> Option<&DihedralTier> {
        self.tiers.iter().find(|t| t.name == name)
    }

    /// The tiers top to bottom, each egg-box preceded by its name.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for t in self.tiers.iter().rev() {
            let names: Vec<String> = t
                .h_cells
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|h| h.iter().map(|w| format!("b{w}")).collect::<Vec<_>>().join(","))
                        .collect::<Vec<_>>()
                        .join(" | ")
                })
                .collect();
            out.push_str(&format!("J_{}: {}\n", t.name, names.join(" / ")));
            out.push_str(&t.eggbox);
        }
        out
    }
}

fn tiers_from<C>(cs: &CellStructure<C>, words: &[DihedralWord]) -> Vec<DihedralTier> {
    let mut order: Vec<usize> = (0..cs.jcells.len()).collect();
    order.sort_by_key(|&j| (cs.jcells[j].order_rank, cs.jcells[j].elements[0]));
    let count = order.len();
    order
        .into_iter()
        .enumerate()
        .map(|(pos, j)| {
            let cell = &cs.jcells[j];
            let name = match pos {
                0 => "b".to_string(),
                p if p + 1 == count => "t".to_string(),
                _ if count == 3 => "m".to_string(),
                p => format!("m{p}"),
            };
            let eb = eggbox(cs, j).expect("J-cell exists");
            DihedralTier {
                name,
                order_rank: cell.order_rank,
                h_cells: cell
                    .h_grid
                    .iter()
                    .map(|row| row.iter().map(|h| h.iter().map(|&b| words[b].to_string()).collect()).collect())
                    .collect(),
                strict: eb.idempotent.clone(),
                eggbox: eb.ascii(),
            }
        })
        .collect()
}

/// Cells of `I₂(n)` and the outcome of the sandwich-pair check.
pub fn dihedral_cells(n: usize, v: VMode) -> Result<DihedralCells, DihedralError> {
    let words = DihedralWord::all(n);
    let (tiers, sandwich) = match v {
        VMode::Generic => {
            let alg = dihedral_algebra_generic(n)?;
            let cs = compute_cells(&alg)?;
            (tiers_from(&cs, &words), verify_sandwich_pair(&alg, &cs))
        }
        VMode::One => {
            let alg = dihedral_algebra_at_one(n)?;
            let cs = compute_cells(&alg)?;
            (tiers_from(&cs, &words), verify_sandwich_pair(&alg, &cs))
        }
    };
    Ok(DihedralCells { n, v, tiers, sandwich })
}
