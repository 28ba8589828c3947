use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::algebra::CellError;
use super::engine::CellStructure;

/// Egg-box of one J-cell: rows are right cells, columns left cells.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EggBox {
    pub jcell: usize,
    pub order_rank: usize,
    pub h_sizes: Vec<Vec<usize>>,
    pub idempotent: Vec<Vec<bool>>,
}

impl EggBox {
    pub fn rows(&self) -> usize {
        self.h_sizes.len()
    }

    pub fn cols(&self) -> usize {
        self.h_sizes.first().map_or(0, Vec::len)
    }

    /// Boxed grid; `*` marks strictly idempotent H-cells.
    pub fn ascii(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .h_sizes
            .iter()
            .zip(&self.idempotent)
            .map(|(row, marks)| {
                row.iter().zip(marks).map(|(s, &m)| format!("{s}{}", if m { "*" } else { "" })).collect()
            })
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let rule = format!("+{}\n", format!("{}+", "-".repeat(width + 2)).repeat(self.cols()));
        let mut out = rule.clone();
        for row in &cells {
            out.push('|');
            for c in row {
                let _ = write!(out, " {c:>width$} |");
            }
            out.push('\n');
            out.push_str(&rule);
        }
        out
    }
}

pub fn eggbox<C>(cs: &CellStructure<C>, j: usize) -> Result<EggBox, CellError> {
    let cell = cs.jcells.get(j).ok_or(CellError::NoSuchCell(j))?;
    Ok(EggBox {
        jcell: j,
        order_rank: cell.order_rank,
        h_sizes: cell.h_sizes(),
        idempotent: cell.status.iter().map(|row| row.iter().map(|s| s.is_strict()).collect()).collect(),
    })
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct JCellJson {
    pub key: serde_json::Value,
    pub order_rank: usize,
    pub num_left: usize,
    pub num_right: usize,
    pub h_size: usize,
    pub idempotent_grid: Vec<Vec<u8>>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct EggBoxJson {
    pub family: String,
    pub n: usize,
    pub jcells: Vec<JCellJson>,
}

/// Serializable egg-box summary; `key` labels each J-cell (e.g. by through strands).
pub fn eggbox_json<C>(
    family: &str,
    n: usize,
    cs: &CellStructure<C>,
    key: impl Fn(usize) -> serde_json::Value,
) -> EggBoxJson {
    let jcells = cs
        .jcells
        .iter()
        .enumerate()
        .map(|(j, cell)| JCellJson {
            key: key(j),
            order_rank: cell.order_rank,
            num_left: cell.left_cells.len(),
            num_right: cell.right_cells.len(),
            h_size: cell.h_grid.first().and_then(|r| r.first()).map_or(0, Vec::len),
            idempotent_grid: cell
                .status
                .iter()
                .map(|row| row.iter().map(|s| u8::from(s.is_strict())).collect())
                .collect(),
        })
        .collect();
    EggBoxJson { family: family.to_string(), n, jcells }
}

/// Graphviz rendering of the J-order Hasse diagram, edges pointing upward.
pub fn jorder_dot<C>(cs: &CellStructure<C>, name: impl Fn(usize) -> String) -> String {
    let mut out = String::from("digraph jorder {\n  rankdir=BT;\n");
    for j in 0..cs.jcells.len() {
        let _ = writeln!(out, "  j{j} [label=\"{}\"];", name(j).replace('"', "'"));
    }
    for &(lo, hi) in &cs.covers {
        let _ = writeln!(out, "  j{lo} -> j{hi};");
    }
    out.push_str("}\n");
    out
}
