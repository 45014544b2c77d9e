//! Parking functions and the circular-street rotation argument.
//!
//! A preference function assigns each of `n` cars a preferred space. On the
//! linear street (spaces `1..n`) a car drives to its preference and then to
//! the next free space, failing past the end; the preferences that always
//! succeed are the parking functions. On the circular street (spaces
//! `1..n+1`, wrapping) the process never fails and leaves exactly one space
//! empty, which is what makes the rotation count work: of the `n+1` rotations
//! of any preference function exactly one parks, giving `(n+1)^(n-1)` parking
//! functions and, blockwise, the orbit formula
//! `(1/(n+1)) * prod binom(mu_i + n, n)`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partitions::{binomial, Partition};
use crate::Nat;

/// Largest `n` for which exhaustive generation is allowed.
pub const GENERATE_BOUND: usize = 7;
/// Largest `n` for the explicit multiset-rotation census.
pub const POLLAK_BOUND: usize = 5;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParkingError {
    #[error("preference {value} out of range 1..={capacity}")]
    PreferenceOutOfRange { value: usize, capacity: usize },
    #[error("a preference function needs at least one car")]
    NoCars,
    #[error("n={n} exceeds the enumeration bound {bound}")]
    AboveBound { n: usize, bound: usize },
    #[error("mu has weight {found}, expected {expected}")]
    WeightMismatch { expected: usize, found: usize },
    #[error("orbit total for mu={mu} is not divisible by {divisor}")]
    NonIntegerCount { mu: String, divisor: usize },
}

/// Preferences of `n` cars over `capacity` spaces; `capacity` is `n` on the
/// linear street and `n + 1` on the circular one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PreferenceFunction {
    prefs: Vec<usize>,
    capacity: usize,
}

impl PreferenceFunction {
    pub fn linear(prefs: Vec<usize>) -> Result<Self, ParkingError> {
        let capacity = prefs.len();
        Self::with_capacity(prefs, capacity)
    }

    pub fn circular(prefs: Vec<usize>) -> Result<Self, ParkingError> {
        let capacity = prefs.len() + 1;
        Self::with_capacity(prefs, capacity)
    }

    fn with_capacity(prefs: Vec<usize>, capacity: usize) -> Result<Self, ParkingError> {
        if prefs.is_empty() {
            return Err(ParkingError::NoCars);
        }
        for &value in &prefs {
            if value < 1 || value > capacity {
                return Err(ParkingError::PreferenceOutOfRange { value, capacity });
            }
        }
        Ok(PreferenceFunction { prefs, capacity })
    }

    pub fn prefs(&self) -> &[usize] {
        &self.prefs
    }

    pub fn cars(&self) -> usize {
        self.prefs.len()
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn is_circular(&self) -> bool {
        self.capacity == self.prefs.len() + 1
    }

    /// The defining condition: at least `k` preferences are `<= k` for every
    /// `k` up to the number of cars.
    pub fn is_parking(&self) -> bool {
        let n = self.prefs.len();
        (1..=n).all(|k| self.prefs.iter().filter(|&&p| p <= k).count() >= k)
    }

    /// Runs the process on the linear street `1..n`. Requires linear capacity.
    pub fn park_linear(&self) -> ParkingOutcome {
        assert!(!self.is_circular(), "park_linear needs capacity n");
        let n = self.prefs.len();
        let mut occupied = vec![false; n + 1];
        let mut assignment = Vec::with_capacity(n);
        for (car, &pref) in self.prefs.iter().enumerate() {
            let mut spot = pref;
            while spot <= n && occupied[spot] {
                spot += 1;
            }
            if spot > n {
                return ParkingOutcome::Failed { car: car + 1 };
            }
            occupied[spot] = true;
            assignment.push(spot);
        }
        ParkingOutcome::Parked {
            assignment,
            unoccupied: None,
        }
    }

    /// Runs the process on the circular street `1..n+1` (space 1 follows
    /// space `n+1`). Never fails; exactly one space stays empty.
    pub fn park_circular(&self) -> ParkingOutcome {
        assert!(self.is_circular(), "park_circular needs capacity n+1");
        let spaces = self.capacity;
        let mut occupied = vec![false; spaces + 1];
        let mut assignment = Vec::with_capacity(self.prefs.len());
        for &pref in &self.prefs {
            let mut spot = pref;
            while occupied[spot] {
                spot = spot % spaces + 1;
            }
            occupied[spot] = true;
            assignment.push(spot);
        }
        let unoccupied = (1..=spaces)
            .find(|&s| !occupied[s])
            .expect("n cars leave one of n+1 spaces empty");
        ParkingOutcome::Parked {
            assignment,
            unoccupied: Some(unoccupied),
        }
    }

    /// Adds `shift` to every preference modulo `n+1`, back into `1..=n+1`.
    /// Requires circular capacity.
    pub fn rotate(&self, shift: usize) -> PreferenceFunction {
        assert!(self.is_circular(), "rotate needs capacity n+1");
        let modulus = self.capacity;
        let prefs = self
            .prefs
            .iter()
            .map(|&p| (p + shift - 1) % modulus + 1)
            .collect();
        PreferenceFunction {
            prefs,
            capacity: self.capacity,
        }
    }

    /// Swaps the preferences of cars `i+1` and `i+2` (0-based position `i`).
    pub fn swap_arguments(&self, i: usize) -> PreferenceFunction {
        let mut prefs = self.prefs.clone();
        prefs.swap(i, i + 1);
        PreferenceFunction {
            prefs,
            capacity: self.capacity,
        }
    }
}

/// Result of a parking process.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParkingOutcome {
    /// Every car parked; `assignment[i]` is the space of car `i+1`;
    /// `unoccupied` is set in circular mode only.
    Parked {
        assignment: Vec<usize>,
        unoccupied: Option<usize>,
    },
    /// Car `car` (1-based) ran off the end of the linear street.
    Failed { car: usize },
}

impl ParkingOutcome {
    pub fn succeeded(&self) -> bool {
        matches!(self, ParkingOutcome::Parked { .. })
    }

    pub fn assignment(&self) -> Option<&[usize]> {
        match self {
            ParkingOutcome::Parked { assignment, .. } => Some(assignment),
            ParkingOutcome::Failed { .. } => None,
        }
    }

    pub fn unoccupied(&self) -> Option<usize> {
        match self {
            ParkingOutcome::Parked { unoccupied, .. } => *unoccupied,
            ParkingOutcome::Failed { .. } => None,
        }
    }
}

/// All parking functions of length `n` in lexicographic order, by filtering
/// the `n^n` candidates. Guarded: this is the oracle, not a clever bijection.
pub fn generate_all(n: usize) -> Result<Vec<PreferenceFunction>, ParkingError> {
    if n == 0 {
        return Err(ParkingError::NoCars);
    }
    if n > GENERATE_BOUND {
        return Err(ParkingError::AboveBound {
            n,
            bound: GENERATE_BOUND,
        });
    }
    let mut out = Vec::new();
    let mut current = vec![1usize; n];
    loop {
        let candidate = PreferenceFunction {
            prefs: current.clone(),
            capacity: n,
        };
        if candidate.is_parking() {
            out.push(candidate);
        }
        // odometer step, last position fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if current[pos] < n {
                current[pos] += 1;
                for later in current.iter_mut().skip(pos + 1) {
                    *later = 1;
                }
                break;
            }
        }
    }
}

/// `(n+1)^(n-1)`, the parking-function count.
pub fn total_count(n: usize) -> Nat {
    assert!(n >= 1);
    BigUint::from(n + 1).pow((n - 1) as u32)
}

/// Orbit count of the Young subgroup `S_mu` on parking functions:
/// `(1/(n+1)) * prod_i binom(mu_i + n, n)`, with the division checked exact.
pub fn orbit_count_formula(n: usize, mu: &Partition) -> Result<Nat, ParkingError> {
    if mu.weight() != n {
        return Err(ParkingError::WeightMismatch {
            expected: n,
            found: mu.weight(),
        });
    }
    let mut product = Nat::one();
    for &part in mu.parts() {
        product *= binomial(part + n, n);
    }
    let (quotient, remainder) = product.div_rem(&BigUint::from(n + 1));
    if !remainder.is_zero() {
        return Err(ParkingError::NonIntegerCount {
            mu: mu.to_string(),
            divisor: n + 1,
        });
    }
    Ok(quotient)
}

/// The same count by Pollak's argument made literal: enumerate the tuples of
/// multisets over `{1..n+1}` with sizes `mu_1, mu_2, ...` (the blockwise
/// preference data), let the cyclic group rotate all entries at once, and
/// count one representative per rotation class. Bounded because it is the
/// independent check, not the formula.
pub fn orbit_count_pollak(n: usize, mu: &Partition) -> Result<Nat, ParkingError> {
    if mu.weight() != n {
        return Err(ParkingError::WeightMismatch {
            expected: n,
            found: mu.weight(),
        });
    }
    if n > POLLAK_BOUND {
        return Err(ParkingError::AboveBound {
            n,
            bound: POLLAK_BOUND,
        });
    }
    let alphabet = n + 1;
    let mut tuples: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for &size in mu.parts() {
        let choices = multisets(size, alphabet);
        let mut next = Vec::with_capacity(tuples.len() * choices.len());
        for tuple in &tuples {
            for choice in &choices {
                let mut extended = tuple.clone();
                extended.push(choice.clone());
                next.push(extended);
            }
        }
        tuples = next;
    }
    let rotate_tuple = |tuple: &[Vec<usize>], shift: usize| -> Vec<Vec<usize>> {
        tuple
            .iter()
            .map(|ms| {
                let mut rotated: Vec<usize> =
                    ms.iter().map(|&v| (v + shift - 1) % alphabet + 1).collect();
                rotated.sort_unstable();
                rotated
            })
            .collect()
    };
    let mut representatives = 0usize;
    for tuple in &tuples {
        let canonical = (0..alphabet)
            .map(|shift| rotate_tuple(tuple, shift))
            .min()
            .expect("alphabet is nonempty");
        if tuple == &canonical {
            representatives += 1;
        }
    }
    Ok(Nat::from(representatives))
}

/// Nondecreasing sequences of the given length over `1..=alphabet`.
fn multisets(size: usize, alphabet: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    multisets_rec(size, alphabet, 1, &mut prefix, &mut out);
    out
}

fn multisets_rec(
    remaining: usize,
    alphabet: usize,
    min: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        out.push(prefix.clone());
        return;
    }
    for v in min..=alphabet {
        prefix.push(v);
        multisets_rec(remaining - 1, alphabet, v, prefix, out);
        prefix.pop();
    }
}

/// All functions `[n] -> [capacity]` in lexicographic order; exhaustive-sweep
/// helper for the rotation and process invariants.
pub fn all_preferences(n: usize, capacity: usize) -> Vec<PreferenceFunction> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut current = vec![1usize; n];
    loop {
        out.push(PreferenceFunction {
            prefs: current.clone(),
            capacity,
        });
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if current[pos] < capacity {
                current[pos] += 1;
                for later in current.iter_mut().skip(pos + 1) {
                    *later = 1;
                }
                break;
            }
        }
    }
}
