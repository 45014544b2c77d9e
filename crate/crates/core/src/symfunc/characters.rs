//! Irreducible character tables of symmetric groups via the border-strip
//! (Murnaghan-Nakayama) recursion, in beta-set form: removing a border strip
//! of length `r` from `lambda` corresponds to replacing a beta number `b` by
//! `b - r`, with sign `(-1)^(number of beta numbers strictly between them)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use crate::partitions::Partition;
use crate::Int;

use super::{memoized, PartitionIndex};

/// All values `chi^lambda(mu)` for `lambda, mu` partitions of `n`, rows and
/// columns in canonical order.
pub struct CharacterTable {
    n: usize,
    index: PartitionIndex,
    values: Vec<Vec<Int>>,
}

impl CharacterTable {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        self.index.list()
    }

    /// `chi^lambda(mu)`.
    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> &Int {
        &self.values[self.index.position(lambda)][self.index.position(mu)]
    }

    /// Column orthogonality: `sum_lambda chi^lambda(mu) chi^lambda(nu)` is
    /// `z_mu` for `mu = nu` and zero otherwise.
    pub fn column_orthogonality_holds(&self) -> bool {
        let dim = self.index.len();
        for a in 0..dim {
            for b in 0..dim {
                let mut total = Int::zero();
                for row in &self.values {
                    total += &row[a] * &row[b];
                }
                let expected = if a == b {
                    Int::from(self.index.list()[a].centralizer_order())
                } else {
                    Int::zero()
                };
                if total != expected {
                    return false;
                }
            }
        }
        true
    }
}

static TABLE_CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();

pub fn character_table(n: usize) -> Arc<CharacterTable> {
    memoized(&TABLE_CACHE, n, || {
        let index = PartitionIndex::for_degree(n);
        let values = index
            .list()
            .iter()
            .map(|lambda| {
                index
                    .list()
                    .iter()
                    .map(|mu| {
                        let mut memo = HashMap::new();
                        strip_value(lambda.parts(), mu.parts(), 0, &mut memo)
                    })
                    .collect()
            })
            .collect();
        Arc::new(CharacterTable { n, index, values })
    })
}

type Memo = HashMap<(Vec<usize>, usize), Int>;

fn strip_value(lambda: &[usize], mu: &[usize], idx: usize, memo: &mut Memo) -> Int {
    if idx == mu.len() {
        return if lambda.is_empty() {
            Int::from(1)
        } else {
            Int::zero()
        };
    }
    let key = (lambda.to_vec(), idx);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let r = mu[idx];
    let rows = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (rows - 1 - i))
        .collect();
    let mut total = Int::zero();
    for (pos, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut new_beta = beta.clone();
        new_beta[pos] = target;
        new_beta.sort_unstable_by(|x, y| y.cmp(x));
        let reduced: Vec<usize> = new_beta
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (rows - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let sub = strip_value(&reduced, mu, idx + 1, memo);
        if height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}
