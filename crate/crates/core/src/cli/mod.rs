//! Command-line surface.
//!
//! [`run`] parses an argument vector, writes the report to `out` and
//! diagnostics to `err`, and returns the process exit code: 0 on success, 2 on
//! a usage error, 1 when a computation fails.

mod check;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::based_cells::{
    compute_cells, eggbox, eggbox_json, jorder_dot, CellError, CellStructure, DeltaSpec, DiagramBasis, EggBox,
};
use crate::diagrams::{DiagramFamily, FamilyError};
use crate::dihedral_hecke::{
    cg_multiply_finite, cg_multiply_infinite, dihedral_cells, dihedral_sandwich_ranks, dihedral_simples, DihedralError,
    DihedralWord, HeckeElement, VMode,
};
use crate::exact_arith::{factor_rational, fmt_rational, matrix_det};
use crate::sandwich_reduction::{
    count_left_cells, count_right_cells, gram_matrix, simple_count, simple_table, SandwichError,
};
use crate::symgroup_kit::{rsk, shape_of, PermError, Permutation};

pub use check::{run_checks, CheckReport, SuiteReport, SUITES};

/// Parsed command line.
#[derive(Parser, Debug)]
#[command(
    name = "greenbox",
    version,
    about = "Cells, Gram matrices and simple modules of diagram and dihedral Hecke algebras"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format; each subcommand accepts a subset.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for randomized property runs.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    pub seed: u64,
    /// Repeat for more detail.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// One of t, pt, p, pp, robr, mo, br, tl, ro, pro, sym, psym.
    #[arg(long)]
    pub family: DiagramFamily,
    #[arg(long)]
    pub n: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the diagrams of a family, or count them by through strands.
    Enumerate {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        count: bool,
    },
    /// Two-sided cells with their left/right cell counts.
    Cells {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, default_value = "generic", allow_hyphen_values = true)]
        delta: DeltaSpec,
    },
    /// Egg-box grid of every J-cell (table, dot or json).
    Eggbox {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, default_value = "generic", allow_hyphen_values = true)]
        delta: DeltaSpec,
    },
    /// Gram matrix of one J-cell, its factored determinant and rank.
    Gram {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        lambda: usize,
        #[arg(long, default_value = "generic", allow_hyphen_values = true)]
        delta: DeltaSpec,
    },
    /// Simple modules in characteristic zero: apexes, labels, dimensions.
    Simples {
        #[command(flatten)]
        fam: FamilyArgs,
        /// A rational value; dimensions are computed at a specialization.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        delta: DeltaSpec,
    },
    /// Closed-form cell counts against the cell engine, with simple counts.
    Counts {
        #[command(flatten)]
        fam: FamilyArgs,
        /// Characteristic for the simple counts.
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value = "generic", allow_hyphen_values = true)]
        delta: DeltaSpec,
    },
    /// Kazhdan–Lusztig bases of dihedral Hecke algebras.
    #[command(subcommand)]
    Dihedral(DihedralCommand),
    /// Robinson–Schensted tableaux of a permutation in one-line notation.
    Rsk {
        /// E.g. `231` or `2,3,1`.
        word: String,
    },
    /// Run the invariant suites.
    Check {
        /// Restrict to the named suites.
        #[arg(long)]
        suite: Vec<String>,
        /// Random samples per property.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum DihedralCommand {
    /// Product `b_x·b_y`; without `--n` in the infinite dihedral group.
    Mult {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "generic", allow_hyphen_values = true)]
        v: VMode,
        x: String,
        y: String,
    },
    /// The three-tier cell structure and the sandwich-pair check.
    Cells {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "generic", allow_hyphen_values = true)]
        v: VMode,
    },
    /// Simple modules (JSON by default).
    Simples {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "generic", allow_hyphen_values = true)]
        v: VMode,
    },
    /// Sandwich matrices and their ranks.
    Ranks {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "generic", allow_hyphen_values = true)]
        v: VMode,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Compute(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<SandwichError> for CliError {
    fn from(e: SandwichError) -> Self {
        match e {
            SandwichError::BadLambda { .. } | SandwichError::TooManyStrands(_) | SandwichError::Family(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Compute(e.to_string()),
        }
    }
}

impl From<DihedralError> for CliError {
    fn from(e: DihedralError) -> Self {
        match e {
            DihedralError::BadLetter(_)
            | DihedralError::BadWord(_)
            | DihedralError::BadRank(_)
            | DihedralError::TooLong { .. }
            | DihedralError::BadVMode(_) => CliError::Usage(e.to_string()),
            _ => CliError::Compute(e.to_string()),
        }
    }
}

impl From<CellError> for CliError {
    fn from(e: CellError) -> Self {
        CliError::Compute(e.to_string())
    }
}

impl From<PermError> for CliError {
    fn from(e: PermError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

type CliResult = Result<(), CliError>;

/// Parse `argv` (program name first), run the subcommand and return the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let informational =
                matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion);
            let target: &mut dyn Write = if informational { out } else { err };
            let _ = write!(target, "{}", e.render());
            return if informational { 0 } else { 2 };
        }
    };
    match dispatch(&config, out) {
        Ok(()) => 0,
        Err(e) => {
            let (CliError::Usage(msg) | CliError::Compute(msg)) = &e;
            let _ = writeln!(err, "greenbox: {msg}");
            e.code()
        }
    }
}

fn dispatch(cfg: &CliConfig, out: &mut dyn Write) -> CliResult {
    match &cfg.command {
        Command::Enumerate { fam, count } => enumerate_cmd(cfg, fam, *count, out),
        Command::Cells { fam, delta } => cells_cmd(cfg, fam, delta, out),
        Command::Eggbox { fam, delta } => eggbox_cmd(cfg, fam, delta, out),
        Command::Gram { fam, lambda, delta } => gram_cmd(cfg, fam, *lambda, delta, out),
        Command::Simples { fam, delta } => simples_cmd(cfg, fam, delta, out),
        Command::Counts { fam, p, delta } => counts_cmd(cfg, fam, *p, delta, out),
        Command::Dihedral(d) => dihedral_cmd(cfg, d, out),
        Command::Rsk { word } => rsk_cmd(cfg, word, out),
        Command::Check { suite, samples } => check_cmd(cfg, suite, *samples, out),
    }
}

fn format_of(cfg: &CliConfig, default: Format, allowed: &[Format]) -> Result<Format, CliError> {
    let f = cfg.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        let names: Vec<String> = allowed.iter().map(|a| format!("{a:?}").to_lowercase()).collect();
        Err(CliError::Usage(format!("format {f:?} not supported here (use {})", names.join(", ")).to_lowercase()))
    }
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> CliResult {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn basis_for(fam: &FamilyArgs) -> Result<std::sync::Arc<DiagramBasis>, CliError> {
    Ok(DiagramBasis::new(fam.family, fam.n)?)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn enumerate_cmd(cfg: &CliConfig, fam: &FamilyArgs, count: bool, out: &mut dyn Write) -> CliResult {
    let format = format_of(cfg, Format::Table, &[Format::Table, Format::Json, Format::Csv])?;
    let basis = basis_for(fam)?;
    let mut by_through: BTreeMap<usize, usize> = BTreeMap::new();
    for d in &basis.elements {
        *by_through.entry(d.through_strands()).or_default() += 1;
    }
    match format {
        Format::Json => {
            let mut v = json!({
                "family": fam.family.short_name(),
                "n": fam.n,
                "count": basis.len(),
                "by_through": by_through.iter().map(|(k, c)| (k.to_string(), json!(c))).collect::<serde_json::Map<_, _>>(),
            });
            if !count {
                v["diagrams"] = basis
                    .elements
                    .iter()
                    .enumerate()
                    .map(|(i, d)| json!({"index": i, "through": d.through_strands(), "blocks": d.to_json_blocks()}))
                    .collect();
            }
            emit_json(out, &v)
        }
        Format::Csv => {
            if count {
                writeln!(out, "through,count")?;
                for (k, c) in &by_through {
                    writeln!(out, "{k},{c}")?;
                }
            } else {
                writeln!(out, "index,through,diagram")?;
                for (i, d) in basis.elements.iter().enumerate() {
                    writeln!(out, "{i},{},{}", d.through_strands(), csv_field(&d.render()))?;
                }
            }
            Ok(())
        }
        _ => {
            writeln!(out, "# {} n={}: {} diagrams", fam.family, fam.n, basis.len())?;
            if count {
                for (k, c) in by_through.iter().rev() {
                    writeln!(out, "through {k}: {c}")?;
                }
            } else {
                for (i, d) in basis.elements.iter().enumerate() {
                    writeln!(out, "{i:>5}  {}  {}", d.through_strands(), d.render())?;
                }
            }
            Ok(())
        }
    }
}

/// Coefficient-independent view of a cell structure.
struct CellReport {
    closure: &'static str,
    basis_size: usize,
    /// Engine J-cell indices, through strands descending.
    order: Vec<usize>,
    lambdas: Vec<usize>,
    boxes: Vec<EggBox>,
    json: crate::based_cells::EggBoxJson,
    dot: String,
}

fn cell_report<C>(basis: &DiagramBasis, cs: &CellStructure<C>) -> Result<CellReport, CliError> {
    let lambdas: Vec<usize> = cs.jcells.iter().map(|c| basis.elements[c.elements[0]].through_strands()).collect();
    let boxes = (0..cs.jcells.len()).map(|j| eggbox(cs, j)).collect::<Result<Vec<_>, _>>()?;
    let mut order: Vec<usize> = (0..cs.jcells.len()).collect();
    order.sort_by_key(|&j| (std::cmp::Reverse(lambdas[j]), cs.jcells[j].elements[0]));
    let label = |j: usize| {
        let c = &cs.jcells[j];
        format!("λ={} ({}x{}, |H|={})", lambdas[j], c.right_cells.len(), c.left_cells.len(), c.h_grid[0][0].len())
    };
    Ok(CellReport {
        closure: if cs.used_generators { "generators" } else { "full basis" },
        basis_size: cs.basis_size,
        json: eggbox_json(basis.family.short_name(), basis.n, cs, |j| json!(lambdas[j])),
        dot: jorder_dot(cs, label),
        order,
        lambdas,
        boxes,
    })
}

fn cells_for(fam: &FamilyArgs, delta: &DeltaSpec) -> Result<CellReport, CliError> {
    let basis = basis_for(fam)?;
    match delta {
        DeltaSpec::Generic => cell_report(&basis, &compute_cells(&basis.algebra_generic())?),
        DeltaSpec::Value(d) => cell_report(&basis, &compute_cells(&basis.algebra_at(d))?),
    }
}

fn cells_cmd(cfg: &CliConfig, fam: &FamilyArgs, delta: &DeltaSpec, out: &mut dyn Write) -> CliResult {
    let format = format_of(cfg, Format::Table, &[Format::Table, Format::Json, Format::Csv])?;
    let r = cells_for(fam, delta)?;
    let rows: Vec<Value> = r
        .order
        .iter()
        .map(|&j| {
            let b = &r.boxes[j];
            let h = b.h_sizes[0][0];
            json!({
                "lambda": r.lambdas[j],
                "order_rank": b.order_rank,
                "num_left": b.cols(),
                "num_right": b.rows(),
                "h_size": h,
                "size": b.rows() * b.cols() * h,
                "idempotent": b.idempotent.iter().flatten().any(|&x| x),
            })
        })
        .collect();
    match format {
        Format::Json => emit_json(
            out,
            &json!({
                "family": fam.family.short_name(),
                "n": fam.n,
                "delta": delta.to_string(),
                "closure": r.closure,
                "basis_size": r.basis_size,
                "jcells": rows,
            }),
        ),
        Format::Csv => {
            writeln!(out, "lambda,order_rank,num_left,num_right,h_size,size,idempotent")?;
            for row in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    row["lambda"],
                    row["order_rank"],
                    row["num_left"],
                    row["num_right"],
                    row["h_size"],
                    row["size"],
                    row["idempotent"]
                )?;
            }
            Ok(())
        }
        _ => {
            writeln!(
                out,
                "# {} n={} delta={}: {} elements, {} J-cells ({} closure)",
                fam.family,
                fam.n,
                delta,
                r.basis_size,
                rows.len(),
                r.closure
            )?;
            writeln!(out, "lambda  order  left  right    H    size  idempotent")?;
            for row in &rows {
                writeln!(
                    out,
                    "{:>6}  {:>5}  {:>4}  {:>5}  {:>3}  {:>6}  {}",
                    row["lambda"],
                    row["order_rank"],
                    row["num_left"],
                    row["num_right"],
                    row["h_size"],
                    row["size"],
                    if row["idempotent"] == true { "yes" } else { "no" }
                )?;
            }
            Ok(())
        }
    }
}

fn eggbox_cmd(cfg: &CliConfig, fam: &FamilyArgs, delta: &DeltaSpec, out: &mut dyn Write) -> CliResult {
    let format = format_of(cfg, Format::Table, &[Format::Table, Format::Json, Format::Dot])?;
    let r = cells_for(fam, delta)?;
    match format {
        Format::Json => emit_json(out, &r.json),
        Format::Dot => Ok(out.write_all(r.dot.as_bytes())?),
        _ => {
            writeln!(out, "# {} n={} delta={} (* = strictly idempotent H-cell)", fam.family, fam.n, delta)?;
            for &j in &r.order {
                let b = &r.boxes[j];
                writeln!(
                    out,
                    "J(lambda={}): {} right x {} left cells, |H| = {}",
                    r.lambdas[j],
                    b.rows(),
                    b.cols(),
                    b.h_sizes[0][0]
                )?;
                if b.rows() * b.cols() > 400 {
                    writeln!(out, "  (grid omitted: {} H-cells)", b.rows() * b.cols())?;
                } else {
                    out.write_all(b.ascii().as_bytes())?;
                }
            }
            Ok(())
        }
    }
}

/// Largest Gram matrix whose determinant is expanded over `ℤ[δ]`.
pub const MAX_GENERIC_DET: usize = 64;

fn gram_cmd(cfg: &CliConfig, fam: &FamilyArgs, lambda: usize, delta: &DeltaSpec, out: &mut dyn Write) -> CliResult {
    let format = format_of(cfg, Format::Table, &[Format::Table, Format::Json])?;
    let g = gram_matrix(fam.family, fam.n, lambda)?;
    let matrix: Vec<Vec<String>> = match delta {
        DeltaSpec::Generic => g.render().lines().map(|l| l.split(' ').map(str::to_string).collect()).collect(),
        DeltaSpec::Value(d) => {
            let m = g.at(d);
            (0..m.rows()).map(|i| (0..m.cols()).map(|j| fmt_rational(m.get(i, j))).collect()).collect()
        }
    };
    let mut note = None;
    let (det, det_expanded) = if g.rows() == g.cols() && g.rows() > 0 {
        match delta {
            DeltaSpec::Generic if g.rows() > MAX_GENERIC_DET => {
                note = Some(format!("generic determinant not expanded above {MAX_GENERIC_DET}x{MAX_GENERIC_DET}"));
                (None, None)
            }
            DeltaSpec::Generic => {
                let p = g.determinant()?;
                let factored = if p.is_zero() {
                    "0".to_string()
                } else {
                    factor_rational(&p).map_or_else(|_| p.render("d"), |f| f.render("d"))
                };
                (Some(factored), Some(p.render("d")))
            }
            DeltaSpec::Value(d) => {
                let at = fmt_rational(&matrix_det(&g.at(d)).map_err(|e| CliError::Compute(e.to_string()))?);
                (Some(at.clone()), Some(at))
            }
        }
    } else {
        note = Some(format!("determinant undefined for a {}x{} matrix", g.rows(), g.cols()));
        (None, None)
    };
    let rank = g.rank(delta);
    match format {
        Format::Json => emit_json(
            out,
            &json!({
                "family": fam.family.short_name(),
                "n": fam.n,
                "lambda": lambda,
                "delta": delta.to_string(),
                "rows": g.rows(),
                "cols": g.cols(),
                "matrix": matrix,
                "determinant": det,
                "determinant_expanded": det_expanded,
                "note": note,
                "rank": rank,
            }),
        ),
        _ => {
            writeln!(
                out,
                "# {} n={} lambda={} delta={}: {}x{} Gram matrix",
                fam.family,
                fam.n,
                lambda,
                delta,
                g.rows(),
                g.cols()
            )?;
            let width = matrix.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
            for row in &matrix {
                let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
                writeln!(out, "[ {} ]", cells.join("  "))?;
            }
            match (det, note) {
                (Some(d), _) => writeln!(out, "det: {d}")?,
                (None, note) => writeln!(out, "det: {}", note.unwrap_or_default())?,
            }
            writeln!(out, "rank: {rank}")?;
            Ok(())
        }
    }
}

fn rational_delta(delta: &DeltaSpec) -> Result<&BigRational, CliError> {
    match delta {
        DeltaSpec::Value(d) => Ok(d),
        DeltaSpec::Generic => Err(CliError::Usage("simples needs a rational --delta".into())),
    }
}

fn simples_cmd(cfg: &CliConfig, fam: &FamilyArgs, delta: &DeltaSpec, out: &mut dyn Write) -> CliResult {
    let format = format_of(cfg, Format::Table, &[Format::Table, Format::Json, Format::Csv])?;
    let table = simple_table(fam.family, fam.n, rational_delta(delta)?)?;
    let dim_text = |d: Option<usize>| d.map_or_else(|| "?".to_string(), |d| d.to_string());
    match format {
        Format::Json => {
            let rows: Vec<Value> =
                table.simples.iter().map(|s| json!({"apex": s.apex, "label": s.label, "dim": s.dim})).collect();
            emit_json(out, &rows)
        }
        Format::Csv => {
            writeln!(out, "apex,label,dim")?;
            for s in &table.simples {
                writeln!(out, "{},{},{}", s.apex, csv_field(&s.label), s.dim.map_or(String::new(), |d| d.to_string()))?;
            }
            Ok(())
        }
        _ => {
            writeln!(out, "# {} n={} delta={}", fam.family, fam.n, table.delta)?;
            writeln!(out, "apex  label            dim")?;
            for s in &table.simples {
                writeln!(out, "{:>4}  {:<15}  {}", s.apex, s.label, dim_text(s.dim))?;
            }
            let counts: Vec<String> = table
                .apexes
                .iter()
                .map(|a| table.simples.iter().filter(|s| s.apex == *a).count().to_string())
                .collect();
            writeln!(out, "sum of squares: {}", dim_text(table.sum_of_squares))?;
            writeln!(out, "counts: {}", counts.join(","))?;
            Ok(())
        }
    }
}

fn counts_cmd(cfg: &CliConfig, fam: &FamilyArgs, p: Option<u64>, delta: &DeltaSpec, out: &mut dyn Write) -> CliResult {
    let format = format_of(cfg, Format::Table, &[Format::Table, Format::Json, Format::Csv])?;
    if let Some(p) = p {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(CliError::Usage(format!("p = {p} is not a prime")));
        }
    }
    let r = cells_for(fam, &DeltaSpec::Generic)?;
    let simples: BTreeMap<usize, usize> = simple_count(fam.family, fam.n, delta, p)?.into_iter().collect();
    let mut rows = Vec::new();
    for &j in &r.order {
        let lambda = r.lambdas[j];
        let b = &r.boxes[j];
        let (lc, rc) = (count_left_cells(fam.family, fam.n, lambda), count_right_cells(fam.family, fam.n, lambda));
        rows.push(json!({
            "lambda": lambda,
            "left_closed": lc as u64,
            "left_enumerated": b.cols(),
            "right_closed": rc as u64,
            "right_enumerated": b.rows(),
            "match": lc == b.cols() as u128 && rc == b.rows() as u128,
            "simples": simples.get(&lambda),
        }));
    }
    let all_match = rows.iter().all(|r| r["match"] == true);
    match format {
        Format::Json => emit_json(
            out,
            &json!({
                "family": fam.family.short_name(),
                "n": fam.n,
                "p": p,
                "delta": delta.to_string(),
                "rows": rows,
                "all_match": all_match,
            }),
        ),
        Format::Csv => {
            writeln!(out, "lambda,left_closed,left_enumerated,right_closed,right_enumerated,match,simples")?;
            for r in &rows {
                let s = r["simples"].as_u64().map_or(String::new(), |s| s.to_string());
                writeln!(
                    out,
                    "{},{},{},{},{},{},{s}",
                    r["lambda"],
                    r["left_closed"],
                    r["left_enumerated"],
                    r["right_closed"],
                    r["right_enumerated"],
                    r["match"]
                )?;
            }
            Ok(())
        }
        _ => {
            let char_text = p.map_or_else(|| "0".to_string(), |p| p.to_string());
            writeln!(out, "# {} n={} delta={} characteristic={}", fam.family, fam.n, delta, char_text)?;
            writeln!(out, "lambda  #L formula  #L cells  #R formula  #R cells  simples")?;
            for r in &rows {
                let s = r["simples"].as_u64().map_or_else(|| "-".to_string(), |s| s.to_string());
                let mark = if r["match"] == true { "" } else { "  MISMATCH" };
                writeln!(
                    out,
                    "{:>6}  {:>10}  {:>8}  {:>10}  {:>8}  {:>7}{mark}",
                    r["lambda"], r["left_closed"], r["left_enumerated"], r["right_closed"], r["right_enumerated"], s
                )?;
            }
            writeln!(out, "closed forms match: {}", if all_match { "yes" } else { "no" })?;
            Ok(())
        }
    }
}

fn parse_word(s: &str) -> Result<DihedralWord, CliError> {
    Ok(s.parse::<DihedralWord>()?)
}

/// Coefficients at `v = 1` when asked for, otherwise in quantum numbers.
fn render_element(e: &HeckeElement, v: VMode) -> String {
    match v {
        VMode::Generic => e.render(),
        VMode::One => {
            let terms = e.at_one();
            if terms.is_empty() {
                return "0".into();
            }
            let mut s = String::new();
            for (i, (w, c)) in terms.iter().enumerate() {
                let neg = c < &0.into();
                let mag = if neg { -c.clone() } else { c.clone() };
                match (i, neg) {
                    (0, true) => s.push('-'),
                    (0, false) => {}
                    (_, true) => s.push_str(" - "),
                    (_, false) => s.push_str(" + "),
                }
                if mag != 1.into() {
                    let _ = write!(s, "{mag}");
                }
                s.push_str(&w.basis_name());
            }
            s
        }
    }
}

fn dihedral_cmd(cfg: &CliConfig, cmd: &DihedralCommand, out: &mut dyn Write) -> CliResult {
    match cmd {
        DihedralCommand::Mult { n, v, x, y } => {
            let format = format_of(cfg, Format::Table, &[Format::Table, Format::Json])?;
            let (x, y) = (parse_word(x)?, parse_word(y)?);
            let product = match n {
                Some(n) => {
                    if !(crate::dihedral_hecke::MIN_RANK..=crate::dihedral_hecke::MAX_RANK).contains(n) {
                        return Err(DihedralError::BadRank(*n).into());
                    }
                    cg_multiply_finite(*n, x, y)?
                }
                None => cg_multiply_infinite(x, y),
            };
            let text = render_element(&product, *v);
            match format {
                Format::Json => {
                    let terms: serde_json::Map<String, Value> = match v {
                        VMode::Generic => product.terms().map(|(w, c)| (w.to_string(), json!(c.render()))).collect(),
                        VMode::One => {
                            product.at_one().iter().map(|(w, c)| (w.to_string(), json!(c.to_string()))).collect()
                        }
                    };
                    emit_json(
                        out,
                        &json!({"n": n, "v": v, "x": x.to_string(), "y": y.to_string(), "terms": terms, "text": text}),
                    )
                }
                _ => Ok(writeln!(out, "{text}")?),
            }
        }
        DihedralCommand::Cells { n, v } => {
            let format = format_of(cfg, Format::Table, &[Format::Table, Format::Json])?;
            let cells = dihedral_cells(*n, *v)?;
            match format {
                Format::Json => emit_json(out, &cells),
                _ => {
                    writeln!(out, "# I2({n}) v={v} (* = strictly idempotent H-cell)")?;
                    out.write_all(cells.render().as_bytes())?;
                    let verdict = match &cells.sandwich.first_failure {
                        None => "pass".to_string(),
                        Some(f) => format!("fail ({f})"),
                    };
                    writeln!(out, "sandwich pair: {verdict}")?;
                    Ok(())
                }
            }
        }
        DihedralCommand::Simples { n, v } => {
            let format = format_of(cfg, Format::Json, &[Format::Table, Format::Json, Format::Csv])?;
            let t = dihedral_simples(*n, *v)?;
            match format {
                Format::Json => emit_json(out, &t),
                Format::Csv => {
                    writeln!(out, "apex,label,dim")?;
                    for s in &t.simples {
                        writeln!(out, "{},{},{}", s.apex, csv_field(&s.label), s.dim)?;
                    }
                    Ok(())
                }
                _ => {
                    writeln!(out, "# I2({n}) v={v}")?;
                    writeln!(out, "apex  label            dim")?;
                    for s in &t.simples {
                        writeln!(out, "{:>4}  {:<15}  {}", s.apex, s.label, s.dim)?;
                    }
                    writeln!(out, "sum of squares: {} (group order {})", t.sum_of_squares, t.group_order)?;
                    Ok(())
                }
            }
        }
        DihedralCommand::Ranks { n, v } => {
            let format = format_of(cfg, Format::Table, &[Format::Table, Format::Json])?;
            let r = dihedral_sandwich_ranks(*n, *v)?;
            match format {
                Format::Json => emit_json(out, &r),
                _ => {
                    writeln!(out, "# I2({n}) v={v}")?;
                    for c in &r.cells {
                        let mult = if c.multiplicity > 1 { format!(" x{}", c.multiplicity) } else { String::new() };
                        writeln!(out, "{} [{}]{mult}: rank {}", c.cell, c.factor, c.rank)?;
                        for row in &c.matrix {
                            writeln!(out, "  ( {} )", row.join("  "))?;
                        }
                    }
                    let ranks: Vec<String> = r.ranks.iter().map(usize::to_string).collect();
                    writeln!(out, "ranks: {}", ranks.join(","))?;
                    Ok(())
                }
            }
        }
    }
}

fn parse_one_line(word: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("{word:?} is not a one-line permutation"));
    let trimmed = word.trim().trim_start_matches('[').trim_end_matches(']');
    if trimmed.contains([',', ' ']) {
        trimmed
            .split([',', ' '])
            .filter(|s| !s.is_empty())
            .map(|s| s.trim().parse::<usize>().map_err(|_| bad()))
            .collect()
    } else {
        trimmed.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect()
    }
}

fn tableau_text(t: &[Vec<usize>]) -> String {
    let rows: Vec<String> =
        t.iter().map(|r| format!("[{}]", r.iter().map(usize::to_string).collect::<Vec<_>>().join(","))).collect();
    format!("[{}]", rows.join(","))
}

fn rsk_cmd(cfg: &CliConfig, word: &str, out: &mut dyn Write) -> CliResult {
    let format = format_of(cfg, Format::Table, &[Format::Table, Format::Json])?;
    let w = Permutation::from_one_line(&parse_one_line(word)?)?;
    let (p, q) = rsk(&w);
    let shape = shape_of(&p);
    match format {
        Format::Json => emit_json(out, &json!({"word": w.one_line(), "p": p, "q": q, "shape": shape.parts()})),
        _ => Ok(writeln!(out, "P={} Q={} shape={shape}", tableau_text(&p), tableau_text(&q))?),
    }
}

fn check_cmd(cfg: &CliConfig, suites: &[String], samples: usize, out: &mut dyn Write) -> CliResult {
    let format = format_of(cfg, Format::Table, &[Format::Table, Format::Json])?;
    for s in suites {
        if !SUITES.contains(&s.as_str()) {
            return Err(CliError::Usage(format!("unknown suite {s:?} (expected one of {})", SUITES.join(", "))));
        }
    }
    let selected: Vec<&str> =
        if suites.is_empty() { SUITES.to_vec() } else { suites.iter().map(String::as_str).collect() };
    let report = run_checks(&selected, cfg.seed, samples);
    match format {
        Format::Json => emit_json(out, &report)?,
        _ => {
            writeln!(out, "# seed={} samples={samples}", cfg.seed)?;
            for s in &report.suites {
                writeln!(
                    out,
                    "{:<14} {:>5}/{:<5} {}",
                    s.name,
                    s.passed,
                    s.total,
                    if s.failures.is_empty() { "ok" } else { "FAILED" }
                )?;
                for f in &s.failures {
                    writeln!(out, "  fail: {f}")?;
                }
                if cfg.verbose > 0 {
                    for label in &s.labels {
                        writeln!(out, "  checked: {label}")?;
                    }
                }
            }
            writeln!(out, "total          {:>5}/{:<5}", report.passed(), report.total())?;
        }
    }
    if report.pass {
        Ok(())
    } else {
        Err(CliError::Compute(format!("{} invariant checks failed", report.total() - report.passed())))
    }
}
