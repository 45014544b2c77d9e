//! Finite `S_n`-sets and their Frobenius characters by independent routes.
//!
//! An action is given by the images of the adjacent transpositions
//! `s_1, ..., s_{n-1}` as permutations of the ground set `{1..m}`; the three
//! Coxeter relation families (involutions, braid, commutation) are exactly
//! what makes those images extend to a homomorphism, and [`FiniteAction::validate`]
//! checks them. Arbitrary group elements act through a bubble-sort word in
//! the generators.
//!
//! The character can then be assembled three ways: fixed-point counts per
//! conjugacy class in the `p` basis, union-find orbit counts of the Young
//! subgroups in the `m` basis, and a Burnside average over Young-subgroup
//! conjugacy classes (sequences of partitions) that must reproduce the
//! union-find counts exactly.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::parking::{self, ParkingError};
use crate::partitions::{
    all_permutations, partition_sequences, partitions_of, Partition, PartitionError, Permutation,
};
use crate::scalar::Scalar;
use crate::symfunc::{Basis, SymFunc};
use crate::{Int, Nat, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoxeterViolation {
    /// `s_i^2` is not the identity (1-based generator index).
    NotInvolution { gen: usize },
    /// `s_i s_{i+1} s_i != s_{i+1} s_i s_{i+1}`.
    Braid { gen: usize },
    /// `s_i s_j != s_j s_i` for `|i - j| >= 2`.
    Commutation { left: usize, right: usize },
}

impl fmt::Display for CoxeterViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterViolation::NotInvolution { gen } => {
                write!(f, "s{gen}^2 != identity")
            }
            CoxeterViolation::Braid { gen } => {
                let next = gen + 1;
                write!(f, "s{gen}*s{next}*s{gen} != s{next}*s{gen}*s{next}")
            }
            CoxeterViolation::Commutation { left, right } => {
                write!(f, "s{left}*s{right} != s{right}*s{left}")
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SetActionError {
    #[error("S_{n} needs {expected} generator images, got {got}")]
    WrongGeneratorCount { n: usize, expected: usize, got: usize },
    #[error("generator {gen} acts on {got} points, expected {expected}")]
    WrongGroundSize { gen: usize, expected: usize, got: usize },
    #[error("coxeter relation violated: {0}")]
    Coxeter(CoxeterViolation),
    #[error("burnside total for mu={mu} is not an integer: {total}")]
    NonIntegerBurnside { mu: String, total: String },
    #[error("invalid subset parameters: k={k} > n={n}")]
    InvalidSubsets { n: usize, k: usize },
    #[error(transparent)]
    Permutation(#[from] PartitionError),
    #[error(transparent)]
    Parking(#[from] ParkingError),
}

/// A finite `S_n`-set: ground-set size `m` and the images of the `n-1`
/// adjacent transpositions.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteAction {
    n: usize,
    m: usize,
    gens: Vec<Permutation>,
}

impl FiniteAction {
    pub fn new(n: usize, m: usize, gens: Vec<Permutation>) -> Result<Self, SetActionError> {
        if n < 1 || gens.len() != n - 1 {
            return Err(SetActionError::WrongGeneratorCount {
                n,
                expected: n.saturating_sub(1),
                got: gens.len(),
            });
        }
        for (i, g) in gens.iter().enumerate() {
            if g.size() != m {
                return Err(SetActionError::WrongGroundSize {
                    gen: i + 1,
                    expected: m,
                    got: g.size(),
                });
            }
        }
        Ok(FiniteAction { n, m, gens })
    }

    /// Rank of the acting symmetric group.
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Size of the ground set.
    pub fn ground_size(&self) -> usize {
        self.m
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    /// Checks the Coxeter presentation: involutions, then braid relations,
    /// then commutations, reporting the first violation in that scan order.
    /// Passing is exactly what guarantees the generator images extend to a
    /// homomorphism `S_n -> S_m`.
    pub fn validate(&self) -> Result<(), CoxeterViolation> {
        for (i, g) in self.gens.iter().enumerate() {
            if !g.compose(g).is_identity() {
                return Err(CoxeterViolation::NotInvolution { gen: i + 1 });
            }
        }
        for i in 0..self.gens.len().saturating_sub(1) {
            let a = &self.gens[i];
            let b = &self.gens[i + 1];
            if a.compose(&b.compose(a)) != b.compose(&a.compose(b)) {
                return Err(CoxeterViolation::Braid { gen: i + 1 });
            }
        }
        for i in 0..self.gens.len() {
            for j in i + 2..self.gens.len() {
                let a = &self.gens[i];
                let b = &self.gens[j];
                if a.compose(b) != b.compose(a) {
                    return Err(CoxeterViolation::Commutation {
                        left: i + 1,
                        right: j + 1,
                    });
                }
            }
        }
        Ok(())
    }

    /// Image of an arbitrary `g` in `S_n`: decompose `g` into adjacent
    /// transpositions and push each point through the generator images in
    /// application order. Well-defined once [`validate`](Self::validate)
    /// passes (word-independence is tested, not assumed).
    pub fn image_of(&self, g: &Permutation) -> Permutation {
        assert_eq!(g.size(), self.n, "element of S_{} expected", self.n);
        let word = g.adjacent_word();
        let images = (0..self.m)
            .map(|x| word.iter().fold(x, |y, &i| self.gens[i].apply(y)))
            .collect();
        Permutation::new(images).expect("generator images are bijections")
    }

    /// Fixed points of the class `lambda`, evaluated on the canonical
    /// representative.
    pub fn fixed_points(&self, lambda: &Partition) -> usize {
        assert_eq!(lambda.weight(), self.n);
        self.image_of(&lambda.canonical_permutation())
            .fixed_point_count()
    }

    /// Frobenius character in the `p` basis:
    /// `sum_lambda #Fix(lambda) p_lambda / z_lambda`.
    pub fn frobenius_p<C: Scalar>(&self) -> SymFunc<C> {
        let mut f = SymFunc::zero(Basis::P, self.n);
        for lambda in partitions_of(self.n) {
            let fix = self.fixed_points(&lambda);
            if fix == 0 {
                continue;
            }
            let z = lambda.centralizer_order();
            let coeff = C::from_ratio(&Int::from(fix), &z);
            f.add_term(lambda, coeff);
        }
        f
    }

    /// Orbit count of the Young subgroup `S_mu` by union-find: points are
    /// united with their images under every adjacent transposition interior
    /// to a block.
    pub fn young_orbits(&self, subgroup: &YoungSubgroup) -> Nat {
        self.orbit_count_for_blocks(subgroup.shape().parts())
    }

    /// Union-find orbit count for consecutive blocks of the given sizes (any
    /// composition of `n`, not necessarily sorted); `young_orbits` is the
    /// partition-shaped entry point, and permuting the sizes must not change
    /// the answer.
    pub fn orbit_count_for_blocks(&self, sizes: &[usize]) -> Nat {
        assert_eq!(sizes.iter().sum::<usize>(), self.n);
        let mut uf = UnionFind::new(self.m);
        let mut start = 0;
        for &size in sizes {
            for offset in 0..size.saturating_sub(1) {
                let gen = &self.gens[start + offset];
                for x in 0..self.m {
                    uf.union(x, gen.apply(x));
                }
            }
            start += size;
        }
        Nat::from(uf.component_count())
    }

    /// Burnside average over the conjugacy classes of `S_mu` (class profiles):
    /// `sum #Fix(representative) / prod z`. Exact arithmetic; a non-integer
    /// total is a bug and is reported as an error rather than rounded.
    pub fn burnside_orbits(&self, subgroup: &YoungSubgroup) -> Result<Nat, SetActionError> {
        let mu = subgroup.shape();
        let mut total = Rational::zero();
        for profile in ClassProfile::enumerate(mu) {
            let fix = self
                .image_of(&profile.representative())
                .fixed_point_count();
            if fix == 0 {
                continue;
            }
            total += Rational::new(Int::from(fix), Int::from(profile.centralizer_product()));
        }
        rational_to_count(total).ok_or_else(|| SetActionError::NonIntegerBurnside {
            mu: mu.to_string(),
            total: "non-integer".into(),
        })
    }

    /// Plain Burnside: materialize every element of `S_mu` and average the
    /// fixed-point counts. Exponentially bigger than the profile route; kept
    /// as the independent cross-check.
    pub fn burnside_orbits_elementwise(
        &self,
        subgroup: &YoungSubgroup,
    ) -> Result<Nat, SetActionError> {
        let mu = subgroup.shape();
        let mut group_order = Nat::one();
        for &size in mu.parts() {
            group_order *= crate::partitions::factorial(size);
        }
        let mut fix_total = Nat::zero();
        for element in young_subgroup_elements(mu) {
            fix_total += Nat::from(self.image_of(&element).fixed_point_count());
        }
        let total = Rational::new(Int::from(fix_total), Int::from(group_order));
        rational_to_count(total).ok_or_else(|| SetActionError::NonIntegerBurnside {
            mu: mu.to_string(),
            total: "non-integer".into(),
        })
    }

    /// Frobenius character in the `m` basis:
    /// `sum_mu #(M/S_mu) m_mu`, orbit counts by union-find.
    pub fn frobenius_m<C: Scalar>(&self) -> SymFunc<C> {
        let mut f = SymFunc::zero(Basis::M, self.n);
        for mu in partitions_of(self.n) {
            let orbits = self.young_orbits(&YoungSubgroup::new(mu.clone()));
            f.add_term(mu, C::from_nat(&orbits));
        }
        f
    }

    /// Orbit counts for every `mu`, the monomial-coefficient table.
    pub fn orbit_report(&self) -> OrbitReport {
        let counts = partitions_of(self.n)
            .into_iter()
            .map(|mu| {
                let orbits = self.young_orbits(&YoungSubgroup::new(mu.clone()));
                (mu, orbits)
            })
            .collect();
        OrbitReport { n: self.n, counts }
    }
}

impl fmt::Debug for FiniteAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteAction(S_{} on {} points)", self.n, self.m)
    }
}

fn rational_to_count(total: Rational) -> Option<Nat> {
    if !total.denom().is_one() {
        return None;
    }
    total.numer().to_biguint()
}

struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        UnionFind {
            parent: (0..size).collect(),
            components: size,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
            self.components -= 1;
        }
    }

    fn component_count(&self) -> usize {
        self.components
    }
}

/// All elements of `S_mu` embedded blockwise in `S_n`.
fn young_subgroup_elements(mu: &Partition) -> Vec<Permutation> {
    let n = mu.weight();
    let mut elements = vec![Permutation::identity(n)];
    let mut start = 0;
    for &size in mu.parts() {
        let block: Vec<Permutation> = all_permutations(size);
        let mut next = Vec::with_capacity(elements.len() * block.len());
        for base in &elements {
            for local in &block {
                let mut images = base.images().to_vec();
                for offset in 0..size {
                    images[start + offset] = start + local.apply(offset);
                }
                next.push(Permutation::new(images).expect("blockwise bijection"));
            }
        }
        elements = next;
        start += size;
    }
    elements
}

/// The Young subgroup `S_mu = S_{mu_1} x S_{mu_2} x ...` embedded on
/// consecutive blocks of `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungSubgroup {
    mu: Partition,
}

impl YoungSubgroup {
    pub fn new(mu: Partition) -> Self {
        YoungSubgroup { mu }
    }

    pub fn shape(&self) -> &Partition {
        &self.mu
    }

    /// Consecutive 0-based position ranges of lengths `mu_1, mu_2, ...`.
    pub fn block_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::with_capacity(self.mu.length());
        let mut start = 0;
        for &size in self.mu.parts() {
            out.push(start..start + size);
            start += size;
        }
        out
    }
}

/// A conjugacy class of a Young subgroup: one partition per block,
/// `profile[i]` a partition of `mu_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassProfile {
    components: Vec<Partition>,
}

impl ClassProfile {
    pub fn new(components: Vec<Partition>, mu: &Partition) -> Option<Self> {
        if components.len() == mu.length()
            && components
                .iter()
                .zip(mu.parts())
                .all(|(eta, &w)| eta.weight() == w)
        {
            Some(ClassProfile { components })
        } else {
            None
        }
    }

    /// All class profiles of `S_mu`.
    pub fn enumerate(mu: &Partition) -> Vec<ClassProfile> {
        partition_sequences(mu.parts())
            .into_iter()
            .map(|components| ClassProfile { components })
            .collect()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// `z_{eta_1} * z_{eta_2} * ...`, the centralizer order inside `S_mu`.
    pub fn centralizer_product(&self) -> Nat {
        let mut z = Nat::one();
        for eta in &self.components {
            z *= eta.centralizer_order();
        }
        z
    }

    /// The canonical representative: each block carries the canonical cycles
    /// of its partition, blocks laid out consecutively.
    pub fn representative(&self) -> Permutation {
        let n: usize = self.components.iter().map(|eta| eta.weight()).sum();
        let mut images: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for eta in &self.components {
            for &len in eta.parts() {
                for offset in 0..len {
                    images[start + offset] = start + (offset + 1) % len;
                }
                start += len;
            }
        }
        Permutation::new(images).expect("cycle layout is a bijection")
    }

    /// Cycle type of the representative in the ambient `S_n`.
    pub fn ambient_cycle_type(&self) -> Partition {
        Partition::from_unsorted(
            self.components
                .iter()
                .flat_map(|eta| eta.parts().iter().copied()),
        )
    }
}

/// Orbit counts `#(M/S_mu)` for all `mu`, i.e. the monomial coefficients of
/// the Frobenius character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    n: usize,
    counts: BTreeMap<Partition, Nat>,
}

impl OrbitReport {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> impl Iterator<Item = (&Partition, &Nat)> {
        self.counts.iter()
    }

    pub fn count(&self, mu: &Partition) -> Option<&Nat> {
        self.counts.get(mu)
    }
}

/// The tautological action of `S_n` on `{1..n}`.
pub fn natural(n: usize) -> FiniteAction {
    assert!(n >= 1);
    let gens = (0..n.saturating_sub(1))
        .map(|i| Permutation::transposition(n, i, i + 1))
        .collect();
    FiniteAction::new(n, n, gens).expect("natural action is well-formed")
}

/// The action of `S_n` on a single point.
pub fn trivial(n: usize) -> FiniteAction {
    assert!(n >= 1);
    let gens = (0..n.saturating_sub(1))
        .map(|_| Permutation::identity(1))
        .collect();
    FiniteAction::new(n, 1, gens).expect("trivial action is well-formed")
}

/// The quotient of `S_4` by the Klein four-group: the nontrivial homomorphism
/// `S_4 -> S_3`, with generator images `s1 -> (1 2)`, `s2 -> (2 3)`,
/// `s3 -> (1 2)`. Any other choice differs by an automorphism of `S_3` and
/// has the same character.
pub fn klein_quotient() -> FiniteAction {
    let s12 = Permutation::from_one_based(&[2, 1, 3]).unwrap();
    let s23 = Permutation::from_one_based(&[1, 3, 2]).unwrap();
    let gens = vec![s12.clone(), s23, s12];
    FiniteAction::new(4, 3, gens).expect("klein quotient is well-formed")
}

/// The action of `S_n` on the `k`-element subsets of `{1..n}`, enumerated in
/// lexicographic order.
pub fn subsets(n: usize, k: usize) -> Result<FiniteAction, SetActionError> {
    if n < 1 || k > n {
        return Err(SetActionError::InvalidSubsets { n, k });
    }
    let ground: Vec<Vec<usize>> = k_subsets(n, k);
    let position: std::collections::HashMap<Vec<usize>, usize> = ground
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    let gens = (0..n - 1)
        .map(|i| {
            let images = ground
                .iter()
                .map(|subset| {
                    // swap membership of i+1 and i+2 (1-based elements)
                    let a = i + 1;
                    let b = i + 2;
                    let mut moved: Vec<usize> = subset
                        .iter()
                        .map(|&e| {
                            if e == a {
                                b
                            } else if e == b {
                                a
                            } else {
                                e
                            }
                        })
                        .collect();
                    moved.sort_unstable();
                    position[&moved]
                })
                .collect();
            Permutation::new(images).expect("subset swap is a bijection")
        })
        .collect();
    FiniteAction::new(n, ground.len(), gens)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    subsets_rec(1, n, k, &mut prefix, &mut out);
    out
}

fn subsets_rec(min: usize, n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == k {
        out.push(prefix.clone());
        return;
    }
    for v in min..=n {
        if n - v + 1 < k - prefix.len() {
            break;
        }
        prefix.push(v);
        subsets_rec(v + 1, n, k, prefix, out);
        prefix.pop();
    }
}

/// The action of `S_n` on parking functions of length `n` by permuting
/// arguments; the ground set is `PF_n` in lexicographic order.
pub fn parking_action(n: usize) -> Result<FiniteAction, SetActionError> {
    let functions = parking::generate_all(n)?;
    let position: std::collections::HashMap<Vec<usize>, usize> = functions
        .iter()
        .enumerate()
        .map(|(i, f)| (f.prefs().to_vec(), i))
        .collect();
    let m = functions.len();
    let gens = (0..n - 1)
        .map(|i| {
            let images = functions
                .iter()
                .map(|f| position[f.swap_arguments(i).prefs()])
                .collect();
            Permutation::new(images).expect("argument swap permutes PF_n")
        })
        .collect();
    FiniteAction::new(n, m, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::p_to_m;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    fn rational_symfunc(f: &FiniteAction) -> SymFunc {
        f.frobenius_p()
    }

    #[test]
    fn natural_action_validates() {
        assert_eq!(natural(3).validate(), Ok(()));
        assert_eq!(natural(1).validate(), Ok(()));
        assert_eq!(klein_quotient().validate(), Ok(()));
    }

    #[test]
    fn violations_are_detected_in_scan_order() {
        // s1 a 3-cycle: not an involution
        let three_cycle = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        let bad = FiniteAction::new(2, 3, vec![three_cycle]).unwrap();
        assert_eq!(
            bad.validate(),
            Err(CoxeterViolation::NotInvolution { gen: 1 })
        );

        // involutions fine, braid broken: s1=(1 2), s2=identity
        let swap = Permutation::from_one_based(&[2, 1, 3]).unwrap();
        let id = Permutation::identity(3);
        let bad = FiniteAction::new(3, 3, vec![swap.clone(), id]).unwrap();
        assert_eq!(bad.validate(), Err(CoxeterViolation::Braid { gen: 1 }));

        // braids fine, commutation broken: s1=(1 2), s2=(2 3), s3=(1 3)
        let s12 = Permutation::from_one_based(&[2, 1, 3]).unwrap();
        let s23 = Permutation::from_one_based(&[1, 3, 2]).unwrap();
        let s13 = Permutation::from_one_based(&[3, 2, 1]).unwrap();
        let bad = FiniteAction::new(4, 3, vec![s12, s23, s13]).unwrap();
        assert_eq!(
            bad.validate(),
            Err(CoxeterViolation::Commutation { left: 1, right: 3 })
        );
    }

    #[test]
    fn image_of_identity_is_identity() {
        let a = klein_quotient();
        assert!(a.image_of(&Permutation::identity(4)).is_identity());
    }

    #[test]
    fn natural_action_is_tautological() {
        let a = natural(4);
        for g in all_permutations(4) {
            assert_eq!(a.image_of(&g), g);
        }
    }

    #[test]
    fn reduced_words_give_the_same_image() {
        // (1 3) in S_3 equals both s1 s2 s1 and s2 s1 s2
        let a = klein_quotient();
        let b = natural(3);
        for action in [&a, &b] {
            let n = action.rank();
            let s: Vec<Permutation> = (0..n - 1)
                .map(|i| Permutation::transposition(n, i, i + 1))
                .collect();
            let word_a = s[0].compose(&s[1].compose(&s[0]));
            let word_b = s[1].compose(&s[0].compose(&s[1]));
            assert_eq!(word_a, word_b);
            assert_eq!(action.image_of(&word_a), action.image_of(&word_b));
        }
    }

    #[test]
    fn image_is_a_homomorphism() {
        let a = klein_quotient();
        for g in all_permutations(4) {
            for h in all_permutations(4).iter().take(8) {
                assert_eq!(
                    a.image_of(&g.compose(h)),
                    a.image_of(&g).compose(&a.image_of(h))
                );
            }
        }
    }

    #[test]
    fn fixed_point_examples() {
        let nat3 = natural(3);
        assert_eq!(nat3.fixed_points(&p(&[1, 1, 1])), 3);
        assert_eq!(nat3.fixed_points(&p(&[2, 1])), 1);
        assert_eq!(klein_quotient().fixed_points(&p(&[2, 2])), 3);
    }

    #[test]
    fn klein_fixed_point_vector() {
        let a = klein_quotient();
        let expected: [(&[usize], usize); 5] = [
            (&[1, 1, 1, 1], 3),
            (&[2, 1, 1], 1),
            (&[2, 2], 3),
            (&[3, 1], 0),
            (&[4], 1),
        ];
        for (parts, fix) in expected {
            assert_eq!(a.fixed_points(&p(parts)), fix, "class {parts:?}");
        }
    }

    #[test]
    fn fixed_points_are_class_functions() {
        let actions = [natural(4), klein_quotient(), subsets(4, 2).unwrap()];
        for a in &actions {
            for lambda in partitions_of(4) {
                let base = a.fixed_points(&lambda);
                let canonical = lambda.canonical_permutation();
                for h in all_permutations(4) {
                    let conj = canonical.conjugate_by(&h);
                    assert_eq!(
                        a.image_of(&conj).fixed_point_count(),
                        base,
                        "lambda={lambda}"
                    );
                }
            }
        }
    }

    #[test]
    fn frobenius_p_of_small_actions() {
        // one-point action: every class fixes the point, giving h_n
        for n in 1..=5 {
            let f = rational_symfunc(&trivial(n));
            let h: SymFunc = SymFunc::basis_element(Basis::H, p(&[n]));
            assert!(f.equivalent(&h), "n={n}");
        }
        // natural S_2: identity fixes 2, the swap fixes 0
        let f = rational_symfunc(&natural(2));
        assert_eq!(f.coefficient(&p(&[1, 1])), Rational::one());
        assert_eq!(f.coefficient(&p(&[2])), Rational::zero());
    }

    #[test]
    fn young_orbit_examples() {
        let nat3 = natural(3);
        assert_eq!(
            nat3.young_orbits(&YoungSubgroup::new(p(&[1, 1, 1]))),
            Nat::from(3u32)
        );
        assert_eq!(nat3.young_orbits(&YoungSubgroup::new(p(&[3]))), Nat::one());
        assert_eq!(
            klein_quotient().young_orbits(&YoungSubgroup::new(p(&[2, 2]))),
            Nat::from(2u32)
        );
    }

    #[test]
    fn burnside_examples() {
        let nat3 = natural(3);
        assert_eq!(
            nat3.burnside_orbits(&YoungSubgroup::new(p(&[2, 1]))).unwrap(),
            Nat::from(2u32)
        );
        assert_eq!(
            klein_quotient()
                .burnside_orbits(&YoungSubgroup::new(p(&[1, 1, 1, 1])))
                .unwrap(),
            Nat::from(3u32)
        );
        // mu = (n): the plain orbit count of the full group
        for a in [natural(4), klein_quotient(), subsets(4, 2).unwrap()] {
            assert_eq!(
                a.burnside_orbits(&YoungSubgroup::new(p(&[4]))).unwrap(),
                a.young_orbits(&YoungSubgroup::new(p(&[4])))
            );
        }
    }

    #[test]
    fn three_orbit_routes_agree() {
        let actions = vec![
            natural(4),
            trivial(4),
            klein_quotient(),
            subsets(4, 2).unwrap(),
            parking_action(3).unwrap(),
        ];
        for a in actions {
            let n = a.rank();
            for mu in partitions_of(n) {
                let subgroup = YoungSubgroup::new(mu.clone());
                let union_find = a.young_orbits(&subgroup);
                let profile = a.burnside_orbits(&subgroup).unwrap();
                let elementwise = a.burnside_orbits_elementwise(&subgroup).unwrap();
                assert_eq!(union_find, profile, "{a:?} mu={mu}");
                assert_eq!(union_find, elementwise, "{a:?} mu={mu}");
            }
        }
    }

    #[test]
    fn frobenius_m_examples() {
        for n in 1..=4 {
            let f: SymFunc = trivial(n).frobenius_m();
            for mu in partitions_of(n) {
                assert_eq!(f.coefficient(&mu), Rational::one());
            }
            let g: SymFunc = natural(n).frobenius_m();
            for mu in partitions_of(n) {
                assert_eq!(
                    g.coefficient(&mu),
                    Rational::from_integer(Int::from(mu.length()))
                );
            }
        }
        let klein: SymFunc = klein_quotient().frobenius_m();
        assert_eq!(klein.coefficient(&p(&[4])), Rational::one());
        assert_eq!(klein.coefficient(&p(&[3, 1])), Rational::one());
        assert_eq!(klein.coefficient(&p(&[2, 2])), Rational::from_integer(2.into()));
        assert_eq!(klein.coefficient(&p(&[2, 1, 1])), Rational::from_integer(2.into()));
        assert_eq!(
            klein.coefficient(&p(&[1, 1, 1, 1])),
            Rational::from_integer(3.into())
        );
    }

    #[test]
    fn main_theorem_on_small_actions() {
        let actions = vec![
            natural(4),
            trivial(5),
            klein_quotient(),
            subsets(5, 2).unwrap(),
            parking_action(3).unwrap(),
        ];
        for a in actions {
            let via_fixed = p_to_m(&rational_symfunc(&a));
            let via_orbits: SymFunc = a.frobenius_m();
            assert_eq!(via_fixed, via_orbits, "{a:?}");
        }
    }

    #[test]
    fn klein_character_is_s4_plus_s22() {
        let s = rational_symfunc(&klein_quotient()).convert(Basis::S);
        assert_eq!(s.coefficient(&p(&[4])), Rational::one());
        assert_eq!(s.coefficient(&p(&[2, 2])), Rational::one());
        assert_eq!(s.terms().count(), 2);
    }

    #[test]
    fn orbit_counts_ignore_block_order() {
        let actions = vec![natural(4), klein_quotient(), subsets(4, 2).unwrap()];
        for a in &actions {
            // compositions (2,1,1), (1,2,1), (1,1,2) all give the S_(2,1,1) count
            let sorted = a.orbit_count_for_blocks(&[2, 1, 1]);
            assert_eq!(a.orbit_count_for_blocks(&[1, 2, 1]), sorted);
            assert_eq!(a.orbit_count_for_blocks(&[1, 1, 2]), sorted);
        }
    }

    #[test]
    fn coarser_subgroups_have_fewer_orbits() {
        for a in [natural(5), subsets(5, 2).unwrap(), parking_action(3).unwrap()] {
            let n = a.rank();
            let report = a.orbit_report();
            assert_eq!(
                report.count(&p(&vec![1; n])).unwrap(),
                &Nat::from(a.ground_size())
            );
            // merging the two smallest parts coarsens the subgroup
            for mu in partitions_of(n) {
                if mu.length() < 2 {
                    continue;
                }
                let mut merged = mu.parts().to_vec();
                let last = merged.pop().unwrap();
                let prev = merged.pop().unwrap();
                merged.push(last + prev);
                let coarser = Partition::from_unsorted(merged);
                assert!(
                    report.count(&mu).unwrap() >= report.count(&coarser).unwrap(),
                    "mu={mu} coarser={coarser}"
                );
            }
        }
    }

    #[test]
    fn builtin_shapes() {
        let nat = natural(3);
        assert_eq!(nat.generators()[0].to_one_based(), vec![2, 1, 3]);
        assert_eq!(nat.generators()[1].to_one_based(), vec![1, 3, 2]);

        assert_eq!(parking_action(2).unwrap().ground_size(), 3);
        assert_eq!(subsets(4, 2).unwrap().ground_size(), 6);
        assert_eq!(subsets(4, 0).unwrap().ground_size(), 1);
        assert!(matches!(
            subsets(3, 5),
            Err(SetActionError::InvalidSubsets { n: 3, k: 5 })
        ));
        assert!(matches!(
            parking_action(9),
            Err(SetActionError::Parking(ParkingError::AboveBound { .. }))
        ));
    }

    #[test]
    fn non_integer_burnside_total_is_reported_not_rounded() {
        // precondition violated on purpose: s1 a 3-cycle is no involution, so
        // the profile sum (3 + 0)/2 is not an integer and the guard must trip
        let three_cycle = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        let invalid = FiniteAction::new(2, 3, vec![three_cycle]).unwrap();
        assert!(invalid.validate().is_err());
        assert!(matches!(
            invalid.burnside_orbits(&YoungSubgroup::new(p(&[2]))),
            Err(SetActionError::NonIntegerBurnside { .. })
        ));
    }

    #[test]
    fn wrong_generator_shapes_are_rejected() {
        let id = Permutation::identity(3);
        assert!(matches!(
            FiniteAction::new(3, 3, vec![id.clone()]),
            Err(SetActionError::WrongGeneratorCount { .. })
        ));
        assert!(matches!(
            FiniteAction::new(2, 4, vec![id]),
            Err(SetActionError::WrongGroundSize { .. })
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn subsets_action_satisfies_the_main_theorem(n in 1usize..=5, k_seed in 0usize..=2) {
            let k = k_seed.min(n / 2);
            let a = subsets(n, k).unwrap();
            prop_assert_eq!(a.validate(), Ok(()));
            let via_fixed = p_to_m(&a.frobenius_p::<Rational>());
            let via_orbits: SymFunc = a.frobenius_m();
            prop_assert_eq!(via_fixed, via_orbits);
        }
    }
}
