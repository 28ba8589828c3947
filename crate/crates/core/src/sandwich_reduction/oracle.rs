use std::collections::{BTreeMap, HashMap, VecDeque};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::SandwichError;
use crate::based_cells::{compute_cells, higher_ideal_reduce, DiagramBasis, HCellStatus, ReduceMode, SparseVec};
use crate::diagrams::DiagramFamily;
use crate::exact_arith::{rank_rational, ExactMatrix};
use crate::exec::Exec;
use crate::symgroup_kit::{Permutation, YoungPartition};

/// Largest basis the brute-force oracle accepts.
pub const MAX_ORACLE_BASIS: usize = 2_000;

/// Simple dimension computed from raw diagram products, independent of the
/// Gram and sandwich-matrix code.
///
/// Finds a strict idempotent `e` of J-cell `lambda` with the cell engine,
/// realises `H(e) ≅ S_λ` by a search for Coxeter generators, and forms the
/// cell module `span(L(e))·y` with `y` the Young symmetrizer of `chi`. The
/// dimension is the rank of `m ↦ (r·m)_{r ∈ R(e)}` with products reduced into
/// the J-cell.
pub fn oracle_simple_dimension(
    family: DiagramFamily,
    n: usize,
    lambda: usize,
    chi: Option<&YoungPartition>,
    delta: &BigRational,
) -> Result<usize, SandwichError> {
    let basis = DiagramBasis::new(family, n)?;
    if basis.len() > MAX_ORACLE_BASIS {
        return Err(SandwichError::OracleBound(basis.len()));
    }
    let alg = basis.algebra_at(delta);
    let cs = compute_cells(&alg)?;
    let j = (0..cs.jcells.len())
        .find(|&j| basis.elements[cs.jcells[j].elements[0]].through_strands() == lambda)
        .ok_or(SandwichError::BadLambda { family, n, lambda })?;
    let cell = &cs.jcells[j];
    let not_apex = || SandwichError::NotApex { lambda, delta: crate::exact_arith::fmt_rational(delta) };
    let (row, col, e, s) = cell
        .status
        .iter()
        .enumerate()
        .flat_map(|(r, st)| st.iter().enumerate().map(move |(c, x)| (r, c, x)))
        .find_map(|(r, c, st)| match st {
            HCellStatus::Strict(found) => Some((r, c, found[0].0, found[0].1.clone())),
            HCellStatus::NoneDetected => None,
        })
        .ok_or_else(not_apex)?;
    let h_cell = &cell.h_grid[row][col];
    let pos: HashMap<usize, usize> = h_cell.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let reduce = |x: SparseVec<BigRational>| higher_ideal_reduce(&cs, &x, j, ReduceMode::InCell);

    // Group table of H(e) under x ⋆ y = x·y / s.
    let hs = h_cell.len();
    let mut table = vec![vec![0usize; hs]; hs];
    for a in 0..hs {
        for b in 0..hs {
            match reduce(alg.mul(h_cell[a], h_cell[b])).as_slice() {
                [(c, z)] if *c == s && pos.contains_key(z) => table[a][b] = pos[z],
                _ => return Err(SandwichError::Isomorphism("H(e) is not a group under the rescaled product".into())),
            }
        }
    }
    let unit = pos[&e];

    let y: Vec<(BigRational, usize)> = if hs == 1 {
        vec![(BigRational::one(), e)]
    } else {
        let chi = chi.ok_or(SandwichError::MissingShape(lambda))?;
        if chi.size() != lambda {
            return Err(SandwichError::BadShape { shape: chi.to_string(), lambda });
        }
        let psi = coxeter_realisation(&table, unit, lambda)
            .ok_or_else(|| SandwichError::Isomorphism(format!("no Coxeter generators for S_{lambda} in H(e)")))?;
        young_symmetrizer(chi).into_iter().map(|(c, sigma)| (c, h_cell[psi[&sigma]])).collect()
    };
    let y: SparseVec<BigRational> = {
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (c, b) in y {
            *acc.entry(b).or_insert_with(BigRational::zero) += c / &s;
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(b, c)| (c, b)).collect()
    };

    let right_cell = &cell.right_cells[row];
    let left_cell = &cell.left_cells[col];
    let columns: Vec<Vec<BigRational>> = Exec::default().map_slice(left_cell, |&l| {
        let ly = reduce(alg.mul_vec(&vec![(BigRational::one(), l)], &y));
        let mut out = vec![BigRational::zero(); right_cell.len() * hs];
        for (ri, &r) in right_cell.iter().enumerate() {
            for (c, z) in reduce(alg.mul_vec(&vec![(BigRational::one(), r)], &ly)) {
                let k = *pos.get(&z).expect("r·l lies in H(e)");
                out[ri * hs + k] = c;
            }
        }
        out
    });
    let m = ExactMatrix::from_fn(right_cell.len() * hs, left_cell.len(), |r, c| columns[c][r].clone());
    Ok(rank_rational(&m, Exec::default()))
}

/// Map `S_λ → H` sending `s_i` to Coxeter generators found among the
/// involutions of the group table, or `None` when no such generators exist.
fn coxeter_realisation(table: &[Vec<usize>], unit: usize, lambda: usize) -> Option<HashMap<Permutation, usize>> {
    let h = table.len();
    let mul = |a: usize, b: usize| table[a][b];
    let power = |a: usize, k: usize| (1..k).fold(a, |acc, _| mul(acc, a));
    let involutions: Vec<usize> = (0..h).filter(|&a| a != unit && mul(a, a) == unit).collect();
    let mut chosen: Vec<usize> = Vec::new();

    fn search(
        chosen: &mut Vec<usize>,
        involutions: &[usize],
        need: usize,
        ok: &dyn Fn(&[usize], usize) -> bool,
        done: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if chosen.len() == need {
            return done(chosen);
        }
        for &g in involutions {
            if ok(chosen, g) {
                chosen.push(g);
                if search(chosen, involutions, need, ok, done) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    let ok = |prev: &[usize], g: usize| {
        let k = prev.len();
        prev.iter().enumerate().all(|(i, &a)| {
            let ag = mul(a, g);
            if i + 1 == k {
                ag != unit && power(ag, 3) == unit
            } else {
                power(ag, 2) == unit
            }
        })
    };
    let mut found = None;
    let mut done = |gens: &[usize]| {
        let map = generate(gens, unit, lambda, &mul);
        if map.len() == h {
            found = Some(map);
            true
        } else {
            false
        }
    };
    search(&mut chosen, &involutions, lambda - 1, &ok, &mut done);
    found
}

/// Breadth-first extension of `s_i ↦ gens[i]` along right multiplication.
fn generate(
    gens: &[usize],
    unit: usize,
    lambda: usize,
    mul: &dyn Fn(usize, usize) -> usize,
) -> HashMap<Permutation, usize> {
    let mut map = HashMap::from([(Permutation::identity(lambda), unit)]);
    let mut queue = VecDeque::from([Permutation::identity(lambda)]);
    while let Some(sigma) = queue.pop_front() {
        for (i, &g) in gens.iter().enumerate() {
            let next = Permutation::compose(&sigma, &Permutation::simple_transposition(lambda, i));
            if !map.contains_key(&next) {
                map.insert(next.clone(), mul(map[&sigma], g));
                queue.push_back(next);
            }
        }
    }
    map
}

/// `Σ_{p ∈ Row, q ∈ Col} sign(q)·(p∘q)` for the row-reading tableau of `shape`.
fn young_symmetrizer(shape: &YoungPartition) -> Vec<(BigRational, Permutation)> {
    let m = shape.size();
    let mut rows = Vec::new();
    let mut next = 0;
    for &len in shape.parts() {
        rows.push((next..next + len).collect::<Vec<usize>>());
        next += len;
    }
    let conj = shape.conjugate();
    let cols: Vec<Vec<usize>> =
        (0..conj.len()).map(|c| rows.iter().filter_map(|r| r.get(c).copied()).collect()).collect();
    let row_group = stabiliser(m, &rows);
    let col_group = stabiliser(m, &cols);
    let mut acc: HashMap<Permutation, BigRational> = HashMap::new();
    for p in &row_group {
        for q in &col_group {
            *acc.entry(Permutation::compose(p, q)).or_insert_with(BigRational::zero) +=
                BigRational::from_integer(q.sign().into());
        }
    }
    let mut out: Vec<(BigRational, Permutation)> =
        acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(p, c)| (c, p)).collect();
    out.sort_by(|a, b| a.1.cmp(&b.1));
    out
}

/// Permutations of `0..m` preserving each block setwise.
fn stabiliser(m: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut out = vec![(0..m).collect::<Vec<usize>>()];
    for block in blocks {
        let perms = crate::symgroup_kit::all_permutations(block.len());
        out = out
            .into_iter()
            .flat_map(|images| {
                perms.iter().map(move |p| {
                    let mut im = images.clone();
                    for (i, &b) in block.iter().enumerate() {
                        im[b] = block[p.apply(i)];
                    }
                    im
                })
            })
            .collect();
    }
    out.into_iter().map(|im| Permutation::from_images(im).expect("block permutation")).collect()
}
