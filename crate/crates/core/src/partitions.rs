//! Integer partitions, permutations, and the cycle-type correspondence.
//!
//! Partitions index both the conjugacy classes of `S_n` and the standard
//! bases of degree-`n` symmetric functions. The canonical ordering used
//! everywhere in this crate is reverse-lexicographic, largest parts first:
//! `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::Nat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    InvalidParts(Vec<usize>),
    #[error("images are not a bijection of 0..{size}: {images:?}")]
    NotABijection { size: usize, images: Vec<usize> },
    #[error("multinomial bottoms sum to {bottom_sum}, expected {top}")]
    MultinomialMismatch { top: usize, bottom_sum: usize },
}

/// A partition: weakly decreasing positive parts. The empty partition is the
/// unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Checked constructor; parts must already be weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(PartitionError::InvalidParts(parts))
        }
    }

    /// Builds a partition from arbitrary part data: zeros are dropped and the
    /// rest is sorted decreasing.
    pub fn from_unsorted(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Convenience for literals known to be valid; panics otherwise.
    pub fn of(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("valid partition literal")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (nonzero) parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of the part `s`, written `m_s` in the usual notation.
    pub fn multiplicity(&self, s: usize) -> usize {
        self.parts.iter().filter(|&&p| p == s).count()
    }

    /// Distinct part sizes, decreasing.
    pub fn distinct_parts(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for &p in &self.parts {
            if out.last() != Some(&p) {
                out.push(p);
            }
        }
        out
    }

    /// Centralizer order of a permutation of this cycle type:
    /// `z = prod_s s^{m_s} * m_s!`.
    pub fn centralizer_order(&self) -> Nat {
        let mut z = Nat::one();
        for s in self.distinct_parts() {
            let m = self.multiplicity(s);
            z *= BigUint::from(s).pow(m as u32);
            z *= factorial(m);
        }
        z
    }

    /// The permutation with cycles `(1..lambda_1)(lambda_1+1..lambda_1+lambda_2)...`,
    /// consecutive blocks cycled. Requires a nonempty partition.
    pub fn canonical_permutation(&self) -> Permutation {
        assert!(!self.is_empty(), "canonical permutation needs weight >= 1");
        let n = self.weight();
        let mut images = vec![0usize; n];
        let mut start = 0;
        for &p in &self.parts {
            for offset in 0..p {
                images[start + offset] = start + (offset + 1) % p;
            }
            start += p;
        }
        Permutation { images }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

// Canonical order: reverse-lexicographic with largest parts first, so that
// sorting partitions of n reproduces the order of `partitions_of(n)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All partitions of `n` in canonical (reverse-lexicographic) order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(n, n, &mut prefix, &mut out);
    out
}

fn descend(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        prefix.push(part);
        descend(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

/// All sequences `(eta_1, ..., eta_k)` of partitions with `eta_i` a partition
/// of `weights[i]` (the conjugacy classes of a Young subgroup, and the index
/// set of the part-splitting identity for `L`).
pub fn partition_sequences(weights: &[usize]) -> Vec<Vec<Partition>> {
    let mut out = vec![Vec::new()];
    for &w in weights {
        let choices = partitions_of(w);
        let mut next = Vec::with_capacity(out.len() * choices.len());
        for seq in &out {
            for choice in &choices {
                let mut extended = seq.clone();
                extended.push(choice.clone());
                next.push(extended);
            }
        }
        out = next;
    }
    out
}

/// Exact multinomial coefficient `top! / prod(bottoms[i]!)`.
pub fn multinomial(top: usize, bottoms: &[usize]) -> Result<Nat, PartitionError> {
    let bottom_sum: usize = bottoms.iter().sum();
    if bottom_sum != top {
        return Err(PartitionError::MultinomialMismatch { top, bottom_sum });
    }
    // Product of binomials binom(s_1, b_1) * binom(s_1 + s_2, b_2) * ...
    // stays integral at every step.
    let mut result = Nat::one();
    let mut used = 0usize;
    for &b in bottoms {
        used += b;
        result *= binomial(used, b);
    }
    Ok(result)
}

pub fn factorial(n: usize) -> Nat {
    let mut f = Nat::one();
    for k in 2..=n {
        f *= BigUint::from(k);
    }
    f
}

pub fn binomial(n: usize, k: usize) -> Nat {
    if k > n {
        return Nat::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = Nat::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// A permutation of `{0, .., size-1}` in one-line notation. The JSON interface
/// is 1-based; see [`Permutation::from_one_based`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PartitionError> {
        let size = images.len();
        let mut seen = vec![false; size];
        for &y in &images {
            if y >= size || seen[y] {
                return Err(PartitionError::NotABijection { size, images });
            }
            seen[y] = true;
        }
        Ok(Permutation { images })
    }

    /// Accepts images of `1..=N` over `{1..N}` as in the wire format.
    pub fn from_one_based(images: &[usize]) -> Result<Self, PartitionError> {
        let shifted: Vec<usize> = images
            .iter()
            .map(|&y| y.checked_sub(1).unwrap_or(usize::MAX))
            .collect();
        Permutation::new(shifted)
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&y| y + 1).collect()
    }

    pub fn identity(size: usize) -> Self {
        Permutation {
            images: (0..size).collect(),
        }
    }

    /// The transposition of `a` and `b`.
    pub fn transposition(size: usize, a: usize, b: usize) -> Self {
        assert!(a < size && b < size);
        let mut images: Vec<usize> = (0..size).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y)
    }

    /// Composition `self . other`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size());
        Permutation {
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0usize; self.size()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    /// The conjugate `h . self . h^-1`, which has the same cycle type.
    pub fn conjugate_by(&self, h: &Permutation) -> Permutation {
        h.compose(self).compose(&h.inverse())
    }

    pub fn fixed_point_count(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &y)| i == y).count()
    }

    /// Multiset of cycle lengths, sorted decreasing.
    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.size()];
        let mut lengths = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths)
    }

    /// Writes the permutation as a product of adjacent transpositions
    /// `s_i = (i, i+1)` (0-based index `i`). The returned word lists the
    /// factors in application order: the first entry acts first.
    pub fn adjacent_word(&self) -> Vec<usize> {
        // Bubble-sorting the one-line notation records g * s_{j_1} * ... * s_{j_r} = id,
        // hence g = s_{j_r} . ... . s_{j_1} with s_{j_1} acting first.
        let mut line = self.images.clone();
        let mut word = Vec::new();
        let n = line.len();
        loop {
            let mut swapped = false;
            for i in 0..n.saturating_sub(1) {
                if line[i] > line[i + 1] {
                    line.swap(i, i + 1);
                    word.push(i);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        word
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.to_one_based())
    }
}

/// All permutations of `{0..size-1}` (Heap's algorithm). Used by the
/// element-by-element Burnside route and by exhaustive tests.
pub fn all_permutations(size: usize) -> Vec<Permutation> {
    let mut items: Vec<usize> = (0..size).collect();
    let mut out = Vec::new();
    heap_recurse(size, &mut items, &mut out);
    out
}

fn heap_recurse(k: usize, items: &mut Vec<usize>, out: &mut Vec<Permutation>) {
    if k <= 1 {
        out.push(Permutation {
            images: items.clone(),
        });
        return;
    }
    for i in 0..k {
        heap_recurse(k - 1, items, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}
