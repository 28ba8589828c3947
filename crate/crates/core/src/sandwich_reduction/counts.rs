use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Zero;

use super::gram::gram_matrix;
use super::SandwichError;
use crate::based_cells::DeltaSpec;
use crate::diagrams::DiagramFamily;
use crate::exact_arith::{chebyshev_u, NfElem, Scalar};
use crate::symgroup_kit::p_restricted_partitions;

pub(crate) fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

fn double_factorial_odd(m: usize) -> u128 {
    // (2t−1)!! for m = 2t; 1 for m = 0.
    (1..m as u128).step_by(2).product::<u128>().max(1)
}

pub(crate) fn stirling2(n: usize, k: usize) -> u128 {
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = j as u128 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

/// Number of left cells (bottom halves) in J-cell `lambda`, by closed form.
pub fn count_left_cells(family: DiagramFamily, n: usize, lambda: usize) -> u128 {
    use DiagramFamily as F;
    if !family.through_counts(n).contains(&lambda) {
        return 0;
    }
    match family {
        F::Partition => (lambda..=n).map(|t| stirling2(n, t) * binom(t, lambda)).sum(),
        F::PlanarPartition => (2 * lambda as u128 + 1) * binom(2 * n, n - lambda) / (n + lambda + 1) as u128,
        F::RookBrauer => (0..=(n - lambda) / 2)
            .map(|t| binom(n, lambda) * binom(n - lambda, 2 * t) * double_factorial_odd(2 * t))
            .sum(),
        F::Motzkin => (0..=(n - lambda) / 2)
            .map(|t| {
                (lambda as u128 + 1) * binom(n, lambda + 2 * t) * binom(lambda + 2 * t, t) / (lambda + t + 1) as u128
            })
            .sum(),
        F::Brauer => binom(n, lambda) * double_factorial_odd(n - lambda),
        F::TemperleyLieb => (2 * lambda as u128 + 2) * binom(n, (n - lambda) / 2) / (n + lambda + 2) as u128,
        F::Rook | F::PlanarRook => binom(n, lambda),
        F::Symmetric | F::PlanarSymmetric => 1,
        F::FullTransformation => stirling2(n, lambda),
        F::PlanarTransformation => binom(n - 1, lambda - 1),
    }
}

/// Number of right cells (top halves) in J-cell `lambda`, by closed form.
pub fn count_right_cells(family: DiagramFamily, n: usize, lambda: usize) -> u128 {
    match family {
        DiagramFamily::FullTransformation | DiagramFamily::PlanarTransformation
            if family.through_counts(n).contains(&lambda) =>
        {
            binom(n, lambda)
        }
        _ => count_left_cells(family, n, lambda),
    }
}

/// Through-strand counts whose J-cell is idempotent at `delta`, bottom of the
/// J-order (`λ = n`) first.
pub fn apexes(family: DiagramFamily, n: usize, delta: &DeltaSpec) -> Result<Vec<usize>, SandwichError> {
    let delta_zero = matches!(delta, DeltaSpec::Value(d) if d.is_zero());
    apexes_where(family, n, delta_zero)
}

/// [`apexes`] with only the information that matters: whether `δ` vanishes.
pub fn apexes_where(family: DiagramFamily, n: usize, delta_zero: bool) -> Result<Vec<usize>, SandwichError> {
    let mut out = Vec::new();
    for lambda in family.through_counts(n).into_iter().rev() {
        if gram_matrix(family, n, lambda)?.has_nonzero_entry(delta_zero) {
            out.push(lambda);
        }
    }
    Ok(out)
}

/// Number of simple modules per apex: `|P(λ|p)|` for symmetric sandwiched
/// algebras, one for planar families. `p = None` is characteristic zero;
/// `delta` is reduced modulo `p` when `p` is given.
pub fn simple_count(
    family: DiagramFamily,
    n: usize,
    delta: &DeltaSpec,
    p: Option<u64>,
) -> Result<Vec<(usize, usize)>, SandwichError> {
    let delta_zero = match (delta, p) {
        (DeltaSpec::Generic, _) => false,
        (DeltaSpec::Value(d), None) => d.is_zero(),
        (DeltaSpec::Value(d), Some(p)) => {
            if divides(p, d.denom()) {
                return Err(SandwichError::DeltaNotInField { delta: delta.to_string(), p });
            }
            divides(p, d.numer())
        }
    };
    Ok(apexes_where(family, n, delta_zero)?
        .into_iter()
        .map(|lambda| {
            let count = if family.is_planar() || lambda <= 1 { 1 } else { p_restricted_partitions(lambda, p).len() };
            (lambda, count)
        })
        .collect())
}

fn divides(p: u64, x: &num_bigint::BigInt) -> bool {
    (x % num_bigint::BigInt::from(p)).is_zero()
}

/// Quantum characteristic at a rational `δ`: least `ℓ ≥ 2` with
/// `U_{ℓ−1}(δ) = 0`, searched up to `max`.
pub fn quantum_characteristic(delta: &BigRational, max: usize) -> Option<usize> {
    (2..=max).find(|&ell| chebyshev_u(ell - 1).eval_rat(delta).is_zero())
}

pub fn quantum_characteristic_nf(delta: &NfElem, max: usize) -> Option<usize> {
    (2..=max).find(|&ell| delta.eval_int_poly(&chebyshev_u(ell - 1)).is_zero_s())
}

/// Quantum characteristic of `δ ∈ 𝔽_p`; always finite.
pub fn quantum_characteristic_mod_p(delta: u64, p: u64) -> usize {
    let d = delta % p;
    let (mut prev, mut cur) = (1u64, d);
    let mut ell = 2;
    while cur != 0 {
        let next = (d * cur % p + p - prev) % p;
        prev = cur;
        cur = next;
        ell += 1;
    }
    ell
}

/// Mixed-radix digits `[x_0, x_1, …]` of `x = x_0 + Σ_{i≥1} ℓ·p^{i−1}·x_i`,
/// with `x_0 < ℓ` and `x_i < p`. Missing radices are infinite.
pub fn digits(x: u128, ell: Option<usize>, p: Option<u64>) -> Vec<u128> {
    let Some(ell) = ell else {
        return vec![x];
    };
    let ell = ell as u128;
    let mut out = vec![x % ell];
    let mut rest = x / ell;
    match p {
        None => {
            if rest > 0 {
                out.push(rest);
            }
        }
        Some(p) => {
            while rest > 0 {
                out.push(rest % p as u128);
                rest /= p as u128;
            }
        }
    }
    out
}

/// Digit-wise `x ≤ y` in the mixed-radix expansion.
pub fn digit_leq(x: u128, y: u128, ell: Option<usize>, p: Option<u64>) -> bool {
    let (dx, dy) = (digits(x, ell, p), digits(y, ell, p));
    dx.iter().enumerate().all(|(i, a)| *a <= dy.get(i).copied().unwrap_or(0))
}

/// Position of the lowest nonzero digit (`0` for `x = 0`).
pub fn digit_valuation(x: u128, ell: Option<usize>, p: Option<u64>) -> usize {
    digits(x, ell, p).iter().position(|&d| d != 0).unwrap_or(0)
}

/// [`digit_leq`] with equal valuations and equal digits at that position.
pub fn digit_leq_prime(x: u128, y: u128, ell: Option<usize>, p: Option<u64>) -> bool {
    let v = digit_valuation(x, ell, p);
    digit_leq(x, y, ell, p) && v == digit_valuation(y, ell, p) && digits(x, ell, p).get(v) == digits(y, ell, p).get(v)
}

/// Values `[a_r, ±a_{r−1}, …, ±a_0]` for the expansion of `v ≥ 1`.
pub fn tilting_support(v: u128, ell: Option<usize>, p: Option<u64>) -> BTreeSet<u128> {
    let ds = digits(v, ell, p);
    let place = |i: usize| -> i128 {
        match (i, ell) {
            (0, _) => 1,
            (_, Some(l)) => l as i128 * p.map_or(1, |p| (p as i128).pow(i as u32 - 1)),
            _ => unreachable!("one digit without ℓ"),
        }
    };
    let top = ds.len() - 1;
    let mut sums: BTreeSet<i128> = BTreeSet::from([ds[top] as i128 * place(top)]);
    for i in (0..top).rev() {
        let term = ds[i] as i128 * place(i);
        sums = sums.iter().flat_map(|&s| [s + term, s - term]).collect();
    }
    sums.into_iter().filter(|&s| s > 0).map(|s| s as u128).collect()
}

/// Rank of the Temperley-Lieb Gram matrix `G_λ` of `TL_n` in quantum
/// characteristic `ell` and characteristic `p`.
///
/// Multiplicities of the indecomposable tilting modules in `V^{⊗n}` solve a
/// unitriangular system against the cell-module dimensions; the multiplicity
/// of `T(λ)` is the rank.
pub fn tl_rank_closed_form(n: usize, lambda: usize, ell: Option<usize>, p: Option<u64>) -> Result<u128, SandwichError> {
    if lambda > n || (n - lambda) % 2 != 0 {
        return Err(SandwichError::BadLambda { family: DiagramFamily::TemperleyLieb, n, lambda });
    }
    let weights: Vec<usize> = (lambda..=n).rev().step_by(2).collect();
    let mut mult: Vec<(usize, u128, BTreeSet<u128>)> = Vec::new();
    for &m in &weights {
        let below: u128 = mult.iter().filter(|(_, _, supp)| supp.contains(&(m as u128 + 1))).map(|(_, a, _)| *a).sum();
        let a = count_left_cells(DiagramFamily::TemperleyLieb, n, m) - below;
        mult.push((m, a, tilting_support(m as u128 + 1, ell, p)));
    }
    Ok(mult.last().map_or(0, |(_, a, _)| *a))
}

/// `(ℓ, p)` for a loop value given as a rational in characteristic zero.
pub fn tl_parameters(delta: &DeltaSpec, n: usize) -> (Option<usize>, Option<u64>) {
    match delta {
        DeltaSpec::Generic => (None, None),
        DeltaSpec::Value(d) => (quantum_characteristic(d, n + 2), None),
    }
}
