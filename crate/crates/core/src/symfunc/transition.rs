//! Transition data between the bases, all routed through `p`.
//!
//! The integer matrix `L` and the rational expansions of `h_mu`, `e_mu` in
//! power sums are computed exactly once per degree and cached; the generic
//! conversion layer maps their entries into the scalar type on use.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::partitions::{multinomial, partition_sequences, partitions_of, Partition};
use crate::scalar::Scalar;
use crate::{Nat, Rational};

use super::{character_table, memoized, Basis, PartitionIndex, SymFunc, SymFuncError};

/// Number of maps `phi: [l(lambda)] -> [l(mu)]` with fiber sums
/// `sum_{phi(i)=j} lambda_i = mu_j`, counted by backtracking over the
/// positions of lambda's parts.
pub fn l_coefficient(lambda: &Partition, mu: &Partition) -> Result<Nat, SymFuncError> {
    if lambda.weight() != mu.weight() {
        return Err(SymFuncError::WeightMismatch {
            left: lambda.weight(),
            right: mu.weight(),
        });
    }
    let mut capacity: Vec<usize> = mu.parts().to_vec();
    Ok(assign(lambda.parts(), 0, &mut capacity))
}

fn assign(parts: &[usize], i: usize, capacity: &mut Vec<usize>) -> Nat {
    if i == parts.len() {
        // weights match, so exhausted parts force every capacity to zero
        return Nat::one();
    }
    let mut count = Nat::zero();
    for j in 0..capacity.len() {
        if capacity[j] >= parts[i] {
            capacity[j] -= parts[i];
            count += assign(parts, i + 1, capacity);
            capacity[j] += parts[i];
        }
    }
    count
}

/// The same count through the part-splitting identity: sum over sequences
/// `(eta_1, ..., eta_{l(mu)})` with `eta_i |- mu_i` whose parts reassemble
/// lambda, of `prod_s multinomial(m_s(lambda); m_s(eta_1), ...)`.
pub fn l_via_splitting(lambda: &Partition, mu: &Partition) -> Result<Nat, SymFuncError> {
    if lambda.weight() != mu.weight() {
        return Err(SymFuncError::WeightMismatch {
            left: lambda.weight(),
            right: mu.weight(),
        });
    }
    let mut total = Nat::zero();
    for seq in partition_sequences(mu.parts()) {
        let merged =
            Partition::from_unsorted(seq.iter().flat_map(|eta| eta.parts().iter().copied()));
        if &merged != lambda {
            // the multinomial factor vanishes unless the multiplicities add up
            continue;
        }
        let mut contribution = Nat::one();
        for s in lambda.distinct_parts() {
            let bottoms: Vec<usize> = seq.iter().map(|eta| eta.multiplicity(s)).collect();
            contribution *= multinomial(lambda.multiplicity(s), &bottoms)
                .expect("reassembled multiplicities sum correctly");
        }
        total += contribution;
    }
    Ok(total)
}

pub(crate) struct LMatrix {
    pub(crate) index: PartitionIndex,
    /// entries[row lambda][col mu]
    pub(crate) entries: Vec<Vec<Nat>>,
}

static L_CACHE: OnceLock<Mutex<HashMap<usize, Arc<LMatrix>>>> = OnceLock::new();

pub(crate) fn l_matrix(n: usize) -> Arc<LMatrix> {
    memoized(&L_CACHE, n, || {
        let index = PartitionIndex::for_degree(n);
        let entries = index
            .list()
            .iter()
            .map(|lambda| {
                index
                    .list()
                    .iter()
                    .map(|mu| l_coefficient(lambda, mu).expect("equal weights"))
                    .collect()
            })
            .collect();
        Arc::new(LMatrix { index, entries })
    })
}

type ExpansionCache = OnceLock<Mutex<HashMap<usize, Arc<Vec<Vec<Rational>>>>>>;

/// Power-sum expansion of `h_mu` (rows) over partitions of `n` (columns).
static H_CACHE: ExpansionCache = OnceLock::new();
/// Power-sum expansion of `e_mu`.
static E_CACHE: ExpansionCache = OnceLock::new();

pub(crate) fn h_in_p(n: usize) -> Arc<Vec<Vec<Rational>>> {
    memoized(&H_CACHE, n, || Arc::new(product_expansions(n, false)))
}

pub(crate) fn e_in_p(n: usize) -> Arc<Vec<Vec<Rational>>> {
    memoized(&E_CACHE, n, || Arc::new(product_expansions(n, true)))
}

fn product_expansions(n: usize, signed: bool) -> Vec<Vec<Rational>> {
    let index = PartitionIndex::for_degree(n);
    index
        .list()
        .iter()
        .map(|mu| {
            let expansion = expand_product(mu.parts(), signed);
            let mut row = vec![Rational::zero(); index.len()];
            for (kappa, coeff) in expansion {
                row[index.position(&kappa)] = coeff;
            }
            row
        })
        .collect()
}

/// Expands `prod_i g_{k_i}` in power sums, where `g_k` is `h_k` (unsigned) or
/// `e_k` (signed): both are `sum_{kappa |- k} (+-) p_kappa / z_kappa`, and
/// `p_alpha * p_kappa` just merges the parts.
fn expand_product(parts: &[usize], signed: bool) -> BTreeMap<Partition, Rational> {
    let mut acc: BTreeMap<Partition, Rational> = BTreeMap::new();
    acc.insert(Partition::empty(), Rational::one());
    for &k in parts {
        let mut next: BTreeMap<Partition, Rational> = BTreeMap::new();
        for kappa in partitions_of(k) {
            let mut coeff = Rational::new(1.into(), crate::Int::from(kappa.centralizer_order()));
            if signed && (k - kappa.length()) % 2 == 1 {
                coeff = -coeff;
            }
            for (alpha, c) in &acc {
                let merged = Partition::from_unsorted(
                    alpha
                        .parts()
                        .iter()
                        .chain(kappa.parts().iter())
                        .copied(),
                );
                let term = c.clone() * coeff.clone();
                *next.entry(merged).or_insert_with(Rational::zero) += term;
            }
        }
        acc = next;
    }
    acc
}

/// Gauss-Jordan with exact division; `None` if singular.
#[allow(clippy::needless_range_loop)] // row/column index form mirrors the math
pub(crate) fn solve_linear<C: Scalar>(mut a: Vec<Vec<C>>, mut b: Vec<C>) -> Option<Vec<C>> {
    let n = b.len();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        let pivot = a[col][col].clone();
        for j in col..n {
            a[col][j] = a[col][j].clone() / pivot.clone();
        }
        b[col] = b[col].clone() / pivot;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in col..n {
                a[r][j] = a[r][j].clone() - factor.clone() * a[col][j].clone();
            }
            b[r] = b[r].clone() - factor * b[col].clone();
        }
    }
    Some(b)
}

pub(super) fn p_to_m<C: Scalar>(f: &SymFunc<C>) -> SymFunc<C> {
    let n = f.degree();
    let l = l_matrix(n);
    let mut out = SymFunc::zero(Basis::M, n);
    for (lambda, coeff) in f.terms() {
        let row = l.index.position(lambda);
        for (col, mu) in l.index.list().iter().enumerate() {
            let entry = &l.entries[row][col];
            if entry.is_zero() {
                continue;
            }
            out.add_term(mu.clone(), coeff.clone() * C::from_nat(entry));
        }
    }
    out
}

/// `p -> target` for targets other than `p`.
pub(super) fn power_sums_to<C: Scalar>(f: &SymFunc<C>, target: Basis) -> SymFunc<C> {
    let n = f.degree();
    match target {
        Basis::P => f.clone(),
        Basis::M => p_to_m(f),
        Basis::S => {
            let table = character_table(n);
            let mut out = SymFunc::zero(Basis::S, n);
            for lambda in table.partitions() {
                let mut coeff = C::zero();
                for (mu, c) in f.terms() {
                    coeff = coeff + c.clone() * C::from_int(table.entry(lambda, mu));
                }
                out.add_term(lambda.clone(), coeff);
            }
            out
        }
        Basis::H => solve_against(f, &h_in_p(n), Basis::H),
        Basis::E => solve_against(f, &e_in_p(n), Basis::E),
    }
}

/// Solves `sum_mu x_mu (row_mu in p) = f` for the coefficients `x_mu`.
fn solve_against<C: Scalar>(f: &SymFunc<C>, rows: &[Vec<Rational>], target: Basis) -> SymFunc<C> {
    let n = f.degree();
    let index = PartitionIndex::for_degree(n);
    let dim = index.len();
    let mut a = vec![vec![C::zero(); dim]; dim];
    for (var, row) in rows.iter().enumerate() {
        for (eq, entry) in row.iter().enumerate() {
            a[eq][var] = C::from_rational(entry);
        }
    }
    let mut b = vec![C::zero(); dim];
    for (lambda, coeff) in f.terms() {
        b[index.position(lambda)] = coeff.clone();
    }
    let x = solve_linear(a, b).expect("transition matrix is invertible");
    let mut out = SymFunc::zero(target, n);
    for (var, mu) in index.list().iter().enumerate() {
        out.add_term(mu.clone(), x[var].clone());
    }
    out
}

/// Any basis into `p`.
pub(super) fn to_power_sums<C: Scalar>(f: &SymFunc<C>) -> SymFunc<C> {
    let n = f.degree();
    match f.basis() {
        Basis::P => f.clone(),
        Basis::M => {
            // solve sum_lambda L_{lambda,mu} c_lambda = d_mu
            let l = l_matrix(n);
            let dim = l.index.len();
            let mut a = vec![vec![C::zero(); dim]; dim];
            for (lambda_pos, row) in l.entries.iter().enumerate() {
                for (mu_pos, entry) in row.iter().enumerate() {
                    a[mu_pos][lambda_pos] = C::from_nat(entry);
                }
            }
            let mut b = vec![C::zero(); dim];
            for (mu, coeff) in f.terms() {
                b[l.index.position(mu)] = coeff.clone();
            }
            let x = solve_linear(a, b).expect("L matrix is invertible");
            let mut out = SymFunc::zero(Basis::P, n);
            for (pos, lambda) in l.index.list().iter().enumerate() {
                out.add_term(lambda.clone(), x[pos].clone());
            }
            out
        }
        Basis::H => expand_rows(f, &h_in_p(n)),
        Basis::E => expand_rows(f, &e_in_p(n)),
        Basis::S => {
            let table = character_table(n);
            let mut out = SymFunc::zero(Basis::P, n);
            for (lambda, coeff) in f.terms() {
                for mu in table.partitions() {
                    let chi = table.entry(lambda, mu);
                    if chi.is_zero() {
                        continue;
                    }
                    let z = mu.centralizer_order();
                    out.add_term(mu.clone(), coeff.clone() * C::from_ratio(chi, &z));
                }
            }
            out
        }
    }
}

fn expand_rows<C: Scalar>(f: &SymFunc<C>, rows: &[Vec<Rational>]) -> SymFunc<C> {
    let n = f.degree();
    let index = PartitionIndex::for_degree(n);
    let mut out = SymFunc::zero(Basis::P, n);
    for (mu, coeff) in f.terms() {
        let row = &rows[index.position(mu)];
        for (pos, entry) in row.iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            out.add_term(
                index.list()[pos].clone(),
                coeff.clone() * C::from_rational(entry),
            );
        }
    }
    out
}
