//! Sparse homogeneous symmetric functions and basis conversions.
//!
//! Conversions route through the power-sum basis `p`. Forward expansions into
//! `p` are classical: `h_k = sum_{lambda |- k} p_lambda / z_lambda`,
//! `e_k = sum (-1)^{k - l(lambda)} p_lambda / z_lambda`,
//! `s_lambda = sum_mu chi^lambda(mu) p_mu / z_mu`, and
//! `p_lambda = sum_mu L_{lambda,mu} m_mu`. The reverse directions `m -> p`,
//! `p -> h`, `p -> e` solve the corresponding exact linear systems over the
//! scalar type.

mod characters;
mod transition;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use thiserror::Error;

use crate::partitions::{partitions_of, Partition};
use crate::scalar::Scalar;
use crate::Rational;

pub use characters::{character_table, CharacterTable};
pub use transition::{l_coefficient, l_via_splitting};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymFuncError {
    #[error("inhomogeneous terms: declared degree {degree}, found partition of weight {found}")]
    Inhomogeneous { degree: usize, found: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("partition weights differ: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },
}

/// The five classical bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    P,
    M,
    H,
    E,
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::P, Basis::M, Basis::H, Basis::E, Basis::S];

    pub fn tag(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::M => "m",
            Basis::H => "h",
            Basis::E => "e",
            Basis::S => "s",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Basis> {
        match tag {
            "p" | "P" => Some(Basis::P),
            "m" | "M" => Some(Basis::M),
            "h" | "H" => Some(Basis::H),
            "e" | "E" => Some(Basis::E),
            "s" | "S" => Some(Basis::S),
            _ => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A homogeneous symmetric function: a basis tag, a degree, and a sparse
/// mapping from partitions of that degree to nonzero coefficients.
///
/// `==` compares coefficientwise in the stored basis; [`SymFunc::equivalent`]
/// compares as symmetric functions (both sides converted to `p`).
#[derive(Clone, PartialEq)]
pub struct SymFunc<C: Scalar = Rational> {
    basis: Basis,
    degree: usize,
    terms: BTreeMap<Partition, C>,
}

impl<C: Scalar> SymFunc<C> {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc {
            basis,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector `x_lambda` of the given basis.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let degree = lambda.weight();
        let mut f = SymFunc::zero(basis, degree);
        f.add_term(lambda, C::one());
        f
    }

    /// Builds from raw terms: duplicate partitions are summed, zero
    /// coefficients dropped, and every partition must have weight `degree`.
    pub fn from_terms(
        basis: Basis,
        degree: usize,
        terms: impl IntoIterator<Item = (Partition, C)>,
    ) -> Result<Self, SymFuncError> {
        let mut f = SymFunc::zero(basis, degree);
        for (lambda, coeff) in terms {
            if lambda.weight() != degree {
                return Err(SymFuncError::Inhomogeneous {
                    degree,
                    found: lambda.weight(),
                });
            }
            f.add_term(lambda, coeff);
        }
        Ok(f)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x_lambda`, zero when absent.
    pub fn coefficient(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, coeff: C) {
        debug_assert_eq!(lambda.weight(), self.degree);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    slot.insert(sum);
                }
            }
        }
    }

    /// Expresses the function in `target`, routing through the power sums.
    pub fn convert(&self, target: Basis) -> SymFunc<C> {
        if self.basis == target {
            return self.clone();
        }
        let p_form = self.to_power_sums();
        if target == Basis::P {
            return p_form;
        }
        transition::power_sums_to(&p_form, target)
    }

    fn to_power_sums(&self) -> SymFunc<C> {
        match self.basis {
            Basis::P => self.clone(),
            _ => transition::to_power_sums(self),
        }
    }

    /// Equality as symmetric functions, independent of stored basis.
    pub fn equivalent(&self, other: &SymFunc<C>) -> bool {
        self.degree == other.degree
            && self.to_power_sums().terms == other.to_power_sums().terms
    }

    /// The standard inner product `<f, g> = sum_lambda f_lambda g_lambda z_lambda`
    /// in power-sum coordinates.
    pub fn inner_product(&self, other: &SymFunc<C>) -> Result<C, SymFuncError> {
        if self.degree != other.degree {
            return Err(SymFuncError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let f = self.to_power_sums();
        let g = other.to_power_sums();
        let mut total = C::zero();
        for (lambda, a) in f.terms() {
            let b = g.coefficient(lambda);
            if b.is_zero() {
                continue;
            }
            total = total + a.clone() * b * C::from_nat(&lambda.centralizer_order());
        }
        Ok(total)
    }
}

/// Monomial expansion of a power-sum function via the counting matrix `L`:
/// `p_lambda = sum_mu L_{lambda,mu} m_mu`. Requires `f` in basis `p`.
pub fn p_to_m<C: Scalar>(f: &SymFunc<C>) -> SymFunc<C> {
    assert_eq!(f.basis(), Basis::P, "p_to_m expects a power-sum input");
    transition::p_to_m(f)
}

impl<C: Scalar> fmt::Debug for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[{}]", self)
    }
}

impl<C: Scalar> fmt::Display for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 ({} deg {})", self.basis.tag(), self.degree);
        }
        for (i, (lambda, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}{}", coeff, self.basis.tag(), lambda)?;
        }
        Ok(())
    }
}

/// Position lookup for the partitions of a fixed degree, canonical order.
pub(crate) struct PartitionIndex {
    list: Vec<Partition>,
    position: HashMap<Partition, usize>,
}

impl PartitionIndex {
    pub(crate) fn for_degree(n: usize) -> Self {
        let list = partitions_of(n);
        let position = list
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        PartitionIndex { list, position }
    }

    pub(crate) fn list(&self) -> &[Partition] {
        &self.list
    }

    pub(crate) fn len(&self) -> usize {
        self.list.len()
    }

    pub(crate) fn position(&self, p: &Partition) -> usize {
        self.position[p]
    }
}

/// Per-degree cache; builds happen outside the lock, so concurrent callers may
/// race to build but always agree on the value.
pub(crate) fn memoized<T: Clone>(
    cell: &'static OnceLock<Mutex<HashMap<usize, T>>>,
    n: usize,
    build: impl FnOnce() -> T,
) -> T {
    let map = cell.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = map.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let built = build();
    map.lock().unwrap().entry(n).or_insert(built).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Nat;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    #[test]
    fn l_coefficient_examples() {
        assert_eq!(l_coefficient(&p(&[2, 1]), &p(&[3])).unwrap(), Nat::one());
        assert_eq!(l_coefficient(&p(&[1, 1]), &p(&[1, 1])).unwrap(), Nat::from(2u32));
        assert_eq!(l_coefficient(&p(&[2, 2]), &p(&[2, 1, 1])).unwrap(), Nat::zero());
        assert_eq!(
            l_coefficient(&p(&[2]), &p(&[3])),
            Err(SymFuncError::WeightMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn l_via_splitting_examples() {
        assert_eq!(
            l_via_splitting(&p(&[1, 1, 1, 1]), &p(&[2, 2])).unwrap(),
            Nat::from(6u32)
        );
        for n in 1..=8 {
            assert_eq!(l_via_splitting(&p(&[n]), &p(&[n])).unwrap(), Nat::one());
        }
        assert_eq!(l_via_splitting(&p(&[2, 1]), &p(&[2, 1])).unwrap(), Nat::one());
    }

    #[test]
    fn l_routes_agree_and_l_against_single_block_is_one() {
        for n in 0..=6 {
            for lambda in partitions_of(n) {
                for mu in partitions_of(n) {
                    assert_eq!(
                        l_coefficient(&lambda, &mu).unwrap(),
                        l_via_splitting(&lambda, &mu).unwrap(),
                        "lambda={lambda} mu={mu}"
                    );
                }
                if n > 0 {
                    assert_eq!(l_coefficient(&lambda, &p(&[n])).unwrap(), Nat::one());
                    assert!(l_coefficient(&lambda, &lambda).unwrap() >= Nat::one());
                }
            }
        }
    }

    #[test]
    fn p_to_m_examples() {
        let p2: SymFunc = SymFunc::basis_element(Basis::P, p(&[2]));
        let m2 = p_to_m(&p2);
        assert_eq!(m2.coefficient(&p(&[2])), Rational::one());
        assert_eq!(m2.coefficient(&p(&[1, 1])), Rational::zero());

        let p11: SymFunc = SymFunc::basis_element(Basis::P, p(&[1, 1]));
        let m = p_to_m(&p11);
        assert_eq!(m.coefficient(&p(&[2])), Rational::one());
        assert_eq!(m.coefficient(&p(&[1, 1])), rat(2, 1));

        let zero: SymFunc = SymFunc::zero(Basis::P, 3);
        assert!(p_to_m(&zero).is_zero());
    }

    #[test]
    fn h_two_in_power_sums() {
        let h2: SymFunc = SymFunc::basis_element(Basis::H, p(&[2]));
        let in_p = h2.convert(Basis::P);
        assert_eq!(in_p.coefficient(&p(&[2])), rat(1, 2));
        assert_eq!(in_p.coefficient(&p(&[1, 1])), rat(1, 2));
    }

    #[test]
    fn schur_row_sums_to_monomials() {
        // s_(n) is the complete homogeneous function: all m-coefficients 1
        for n in 1..=5 {
            let s: SymFunc = SymFunc::basis_element(Basis::S, p(&[n]));
            let m = s.convert(Basis::M);
            for mu in partitions_of(n) {
                assert_eq!(m.coefficient(&mu), Rational::one(), "mu={mu}");
            }
        }
    }

    #[test]
    fn round_trips_on_basis_vectors() {
        for n in 0..=4 {
            for a in Basis::ALL {
                for b in Basis::ALL {
                    for lambda in partitions_of(n) {
                        let x: SymFunc = SymFunc::basis_element(a, lambda.clone());
                        let back = x.convert(b).convert(a);
                        assert_eq!(back, x, "{a}->{b}->{a} on {lambda}, n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn inner_product_of_power_sums_is_centralizer_order() {
        for n in 1..=5 {
            for lambda in partitions_of(n) {
                let f: SymFunc = SymFunc::basis_element(Basis::P, lambda.clone());
                let val = f.inner_product(&f).unwrap();
                assert_eq!(
                    val,
                    Rational::from_integer(crate::Int::from(lambda.centralizer_order()))
                );
            }
        }
    }

    #[test]
    fn schur_basis_is_orthonormal() {
        for n in 1..=5 {
            for lambda in partitions_of(n) {
                for mu in partitions_of(n) {
                    let a: SymFunc = SymFunc::basis_element(Basis::S, lambda.clone());
                    let b: SymFunc = SymFunc::basis_element(Basis::S, mu.clone());
                    let expected = if lambda == mu {
                        Rational::one()
                    } else {
                        Rational::zero()
                    };
                    assert_eq!(a.inner_product(&b).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn pairing_with_h_reads_off_monomial_coefficients() {
        // <f, h_mu> = coefficient of m_mu in f, for every basis vector f
        for n in 1..=5 {
            for basis in Basis::ALL {
                for lambda in partitions_of(n) {
                    let f: SymFunc = SymFunc::basis_element(basis, lambda);
                    let in_m = f.convert(Basis::M);
                    for mu in partitions_of(n) {
                        let h: SymFunc = SymFunc::basis_element(Basis::H, mu.clone());
                        assert_eq!(
                            f.inner_product(&h).unwrap(),
                            in_m.coefficient(&mu),
                            "basis {basis}, mu={mu}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn power_of_p1_expands_into_dimensions() {
        // p_1^n = p_(1,...,1); its s-coefficients are the character degrees
        for n in 1..=6 {
            let ones = p(&vec![1; n]);
            let f: SymFunc = SymFunc::basis_element(Basis::P, ones.clone());
            let s = f.convert(Basis::S);
            let table = character_table(n);
            for lambda in partitions_of(n) {
                assert_eq!(
                    s.coefficient(&lambda),
                    Rational::from_integer(table.entry(&lambda, &ones).clone())
                );
            }
        }
    }

    #[test]
    fn inner_product_degree_mismatch_is_an_error() {
        let a: SymFunc = SymFunc::basis_element(Basis::P, p(&[2]));
        let b: SymFunc = SymFunc::basis_element(Basis::P, p(&[3]));
        assert_eq!(
            a.inner_product(&b),
            Err(SymFuncError::DegreeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn construction_rejects_inhomogeneous_terms() {
        let err = SymFunc::<Rational>::from_terms(
            Basis::M,
            4,
            vec![(p(&[2, 2]), Rational::one()), (p(&[3]), Rational::one())],
        )
        .unwrap_err();
        assert_eq!(err, SymFuncError::Inhomogeneous { degree: 4, found: 3 });
    }

    #[test]
    fn duplicate_terms_sum_and_zeros_drop() {
        let f = SymFunc::<Rational>::from_terms(
            Basis::P,
            2,
            vec![
                (p(&[2]), rat(1, 2)),
                (p(&[2]), rat(-1, 2)),
                (p(&[1, 1]), rat(1, 3)),
            ],
        )
        .unwrap();
        assert_eq!(f.terms().count(), 1);
        assert_eq!(f.coefficient(&p(&[1, 1])), rat(1, 3));
    }

    #[test]
    fn equivalence_ignores_the_stored_basis() {
        let h2: SymFunc = SymFunc::basis_element(Basis::H, p(&[2]));
        let mut p_version: SymFunc = SymFunc::zero(Basis::P, 2);
        p_version.add_term(p(&[2]), rat(1, 2));
        p_version.add_term(p(&[1, 1]), rat(1, 2));
        assert!(h2.equivalent(&p_version));
        assert!(!h2.equivalent(&SymFunc::basis_element(Basis::P, p(&[2]))));
    }

    #[test]
    fn degree_zero_converts_everywhere() {
        let unit: SymFunc = SymFunc::basis_element(Basis::P, Partition::empty());
        for b in Basis::ALL {
            let conv = unit.convert(b);
            assert_eq!(conv.coefficient(&Partition::empty()), Rational::one());
            assert_eq!(conv.convert(Basis::P), unit);
        }
    }

    #[test]
    fn concurrent_conversions_agree() {
        let handles: Vec<_> = (0..8)
            .map(|i| {
                std::thread::spawn(move || {
                    let n = 3 + (i % 3);
                    let f: SymFunc = SymFunc::basis_element(Basis::S, p(&[n - 1, 1]));
                    f.convert(Basis::M)
                })
            })
            .collect();
        let results: Vec<SymFunc> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (i, f) in results.iter().enumerate() {
            let n = 3 + (i % 3);
            let again: SymFunc =
                SymFunc::basis_element(Basis::S, p(&[n - 1, 1])).convert(Basis::M);
            assert_eq!(f, &again);
        }
    }

    #[test]
    fn float_scalar_runs_the_same_pipeline() {
        let h2: SymFunc<f64> = SymFunc::basis_element(Basis::H, p(&[2]));
        let in_p = h2.convert(Basis::P);
        assert!((in_p.coefficient(&p(&[2])) - 0.5).abs() < 1e-12);
        assert!((in_p.coefficient(&p(&[1, 1])) - 0.5).abs() < 1e-12);
        let back = in_p.convert(Basis::H);
        assert!((back.coefficient(&p(&[2])) - 1.0).abs() < 1e-12);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn random_functions_round_trip_through_every_basis(
            n in 1usize..=5,
            seed_coeffs in proptest::collection::vec((-6i64..=6, 1i64..=4), 8),
            target_idx in 0usize..5,
        ) {
            let parts = partitions_of(n);
            let mut f: SymFunc = SymFunc::zero(Basis::P, n);
            for (lambda, (num, den)) in parts.iter().zip(seed_coeffs.iter()) {
                f.add_term(lambda.clone(), rat(*num, *den));
            }
            let target = Basis::ALL[target_idx];
            let back = f.convert(target).convert(Basis::P);
            prop_assert_eq!(back, f);
        }
    }
}
