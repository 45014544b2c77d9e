//! Runtime self-verification: every module invariant, runnable at a chosen
//! scale. The CLI `selftest` subcommand prints one line per suite; tests and
//! acceptance checks exercise the same properties statically.

use std::time::{Duration, Instant};

use num_traits::One;

use crate::parking;
use crate::partitions::{factorial, partitions_of, Partition, Permutation};
use crate::setaction::{
    klein_quotient, natural, parking_action, subsets, trivial, FiniteAction, YoungSubgroup,
};
use crate::symfunc::{character_table, l_coefficient, l_via_splitting, Basis, SymFunc};
use crate::{Int, Nat, Rational};

/// Outcome of one invariant suite.
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    /// `"ok"` or the first failing condition.
    pub detail: String,
    pub duration: Duration,
}

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

/// Runs the whole invariant suite up to rank `max_n` (1..=6). Per-suite caps
/// keep the exponential oracles at their feasible sizes regardless of
/// `max_n`.
pub fn run_selftest(max_n: usize) -> Vec<SuiteResult> {
    assert!((1..=6).contains(&max_n), "selftest expects 1 <= max_n <= 6");
    vec![
        suite("partitions.enumeration", || partitions_suite(max_n)),
        suite("symfunc.l-identity", || l_identity_suite(max_n)),
        suite("symfunc.round-trips", || round_trip_suite(max_n)),
        suite("symfunc.orthogonality", || orthogonality_suite(max_n)),
        suite("symfunc.h-duality", || duality_suite(max_n)),
        suite("symfunc.dimensions", || dimension_suite(max_n)),
        suite("setaction.main-theorem", || main_theorem_suite(max_n)),
        suite("setaction.orbit-routes", || orbit_routes_suite(max_n)),
        suite("setaction.class-invariance", || class_invariance_suite(max_n)),
        suite("setaction.young-blocks", || young_blocks_suite(max_n)),
        suite("parking.rotation", || rotation_suite(max_n.min(5))),
        suite("parking.count", || count_suite(max_n)),
        suite("parking.process", || process_suite(max_n.min(5))),
        suite("parking.stanley", || stanley_suite(max_n)),
    ]
}

fn suite(name: &'static str, body: impl FnOnce() -> Result<(), String>) -> SuiteResult {
    let start = Instant::now();
    let outcome = body();
    SuiteResult {
        name,
        passed: outcome.is_ok(),
        detail: outcome.err().unwrap_or_else(|| "ok".to_string()),
        duration: start.elapsed(),
    }
}

/// Every built-in action of rank `n` (1..=6), labeled: trivial, natural,
/// subsets for `k <= n/2`, klein at `n = 4`, parking.
pub fn builtin_actions(n: usize) -> Vec<(String, FiniteAction)> {
    let mut out = vec![
        (format!("trivial:{n}"), trivial(n)),
        (format!("natural:{n}"), natural(n)),
    ];
    for k in 0..=n / 2 {
        out.push((
            format!("subsets:{n}:{k}"),
            subsets(n, k).expect("k <= n/2 is valid"),
        ));
    }
    if n == 4 {
        out.push(("klein".to_string(), klein_quotient()));
    }
    out.push((
        format!("parking:{n}"),
        parking_action(n).expect("n <= 6 is under the enumeration bound"),
    ));
    out
}

fn partitions_suite(max_n: usize) -> Result<(), String> {
    for n in 0..=max_n {
        let all = partitions_of(n);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        ensure!(sorted == all, "partitions of {n} not unique or out of order");
        for p in &all {
            ensure!(p.weight() == n, "partition {p} of wrong weight for n={n}");
        }
        if n >= 1 {
            let order = factorial(n);
            let total: Nat = all.iter().map(|p| &order / p.centralizer_order()).sum();
            ensure!(total == order, "class sizes of S_{n} sum to {total}, not {order}");
            for p in &all {
                ensure!(
                    &p.canonical_permutation().cycle_type() == p,
                    "cycle_type(canonical({p})) != {p}"
                );
            }
        }
    }
    Ok(())
}

fn l_identity_suite(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n {
        let all = partitions_of(n);
        let full = Partition::of(&[n]);
        for lambda in &all {
            for mu in &all {
                let direct = l_coefficient(lambda, mu).expect("equal weights");
                let split = l_via_splitting(lambda, mu).expect("equal weights");
                ensure!(
                    direct == split,
                    "L({lambda},{mu}): counting gives {direct}, splitting gives {split}"
                );
            }
            ensure!(
                l_coefficient(lambda, &full).expect("equal weights") == Nat::one(),
                "L({lambda},({n})) != 1"
            );
            ensure!(
                l_coefficient(lambda, lambda).expect("equal weights") >= Nat::one(),
                "L({lambda},{lambda}) < 1"
            );
        }
    }
    Ok(())
}

fn round_trip_suite(max_n: usize) -> Result<(), String> {
    for n in 0..=max_n {
        for a in Basis::ALL {
            for b in Basis::ALL {
                for lambda in partitions_of(n) {
                    let x: SymFunc = SymFunc::basis_element(a, lambda.clone());
                    let back = x.convert(b).convert(a);
                    ensure!(back == x, "{a}->{b}->{a} broke on {lambda} at n={n}");
                }
            }
        }
    }
    Ok(())
}

fn orthogonality_suite(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n {
        ensure!(
            character_table(n).column_orthogonality_holds(),
            "column orthogonality fails at n={n}"
        );
    }
    Ok(())
}

fn duality_suite(max_n: usize) -> Result<(), String> {
    let mut rng = XorShift64::new(0x5eed);
    for n in 1..=max_n {
        let mus = partitions_of(n);
        let mut candidates: Vec<SymFunc> = Vec::new();
        for basis in Basis::ALL {
            for lambda in &mus {
                candidates.push(SymFunc::basis_element(basis, lambda.clone()));
            }
        }
        for _ in 0..3 {
            candidates.push(random_function(n, &mut rng));
        }
        for f in &candidates {
            let in_m = f.convert(Basis::M);
            for mu in &mus {
                let h: SymFunc = SymFunc::basis_element(Basis::H, mu.clone());
                let pairing = f.inner_product(&h).expect("same degree");
                ensure!(
                    pairing == in_m.coefficient(mu),
                    "<f,h_{mu}> != m-coefficient at n={n}"
                );
            }
        }
    }
    Ok(())
}

fn dimension_suite(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n {
        let ones = Partition::of(&vec![1; n]);
        let s = SymFunc::<Rational>::basis_element(Basis::P, ones.clone()).convert(Basis::S);
        for lambda in partitions_of(n) {
            let expected = Rational::from_integer(Int::from(hook_length_dimension(&lambda)));
            ensure!(
                s.coefficient(&lambda) == expected,
                "dimension of {lambda} disagrees with the hook-length formula"
            );
        }
    }
    Ok(())
}

fn main_theorem_suite(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n {
        for (label, action) in builtin_actions(n) {
            ensure!(
                action.validate().is_ok(),
                "{label} fails Coxeter validation"
            );
            let via_fixed = action.frobenius_p::<Rational>().convert(Basis::M);
            let via_orbits: SymFunc = action.frobenius_m();
            ensure!(
                via_fixed == via_orbits,
                "main theorem fails for {label}: fixed-point route != orbit route"
            );
        }
    }
    Ok(())
}

fn orbit_routes_suite(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n {
        for (label, action) in builtin_actions(n) {
            for mu in partitions_of(n) {
                let subgroup = YoungSubgroup::new(mu.clone());
                let union_find = action.young_orbits(&subgroup);
                let profile = action
                    .burnside_orbits(&subgroup)
                    .map_err(|e| format!("{label} mu={mu}: {e}"))?;
                ensure!(
                    union_find == profile,
                    "{label} mu={mu}: union-find {union_find} != profile burnside {profile}"
                );
                if n <= 5 {
                    let elementwise = action
                        .burnside_orbits_elementwise(&subgroup)
                        .map_err(|e| format!("{label} mu={mu}: {e}"))?;
                    ensure!(
                        union_find == elementwise,
                        "{label} mu={mu}: union-find {union_find} != elementwise {elementwise}"
                    );
                }
            }
        }
    }
    Ok(())
}

fn class_invariance_suite(max_n: usize) -> Result<(), String> {
    let mut rng = XorShift64::new(0xfeed);
    for n in 1..=max_n {
        for (label, action) in builtin_actions(n) {
            for lambda in partitions_of(n) {
                let base = action.fixed_points(&lambda);
                let canonical = lambda.canonical_permutation();
                for _ in 0..20 {
                    let h = random_permutation(n, &mut rng);
                    let conj = canonical.conjugate_by(&h);
                    let fix = action.image_of(&conj).fixed_point_count();
                    ensure!(
                        fix == base,
                        "{label}: fixed points not constant on class {lambda}"
                    );
                }
            }
        }
    }
    Ok(())
}

fn young_blocks_suite(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n.min(5) {
        for (label, action) in builtin_actions(n) {
            for mu in partitions_of(n) {
                let reference = action.orbit_count_for_blocks(mu.parts());
                for ordering in orderings(mu.parts()) {
                    ensure!(
                        action.orbit_count_for_blocks(&ordering) == reference,
                        "{label}: block order {ordering:?} changes the orbit count of {mu}"
                    );
                }
            }
        }
    }
    for n in 1..=max_n {
        for (label, action) in builtin_actions(n) {
            let report = action.orbit_report();
            for mu in partitions_of(n) {
                if mu.length() < 2 {
                    continue;
                }
                let mut merged = mu.parts().to_vec();
                let last = merged.pop().unwrap();
                *merged.last_mut().unwrap() += last;
                let coarser = Partition::from_unsorted(merged);
                ensure!(
                    report.count(&mu) >= report.count(&coarser),
                    "{label}: refining {coarser} to {mu} lost orbits"
                );
            }
        }
    }
    Ok(())
}

fn rotation_suite(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n {
        for f in parking::all_preferences(n, n + 1) {
            let parking_shifts: Vec<usize> =
                (0..=n).filter(|&s| f.rotate(s).is_parking()).collect();
            ensure!(
                parking_shifts.len() == 1,
                "{:?}: {} rotations park, expected exactly 1",
                f.prefs(),
                parking_shifts.len()
            );
            let winner = f.rotate(parking_shifts[0]);
            ensure!(
                winner.park_circular().unoccupied() == Some(n + 1),
                "{:?}: the parking rotation does not leave space {} empty",
                f.prefs(),
                n + 1
            );
        }
    }
    Ok(())
}

fn count_suite(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n.min(parking::GENERATE_BOUND) {
        let generated = parking::generate_all(n).map_err(|e| e.to_string())?;
        let expected = parking::total_count(n);
        ensure!(
            Nat::from(generated.len()) == expected,
            "|PF_{n}| = {} but (n+1)^(n-1) = {expected}",
            generated.len()
        );
    }
    Ok(())
}

fn process_suite(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n {
        for f in parking::all_preferences(n, n) {
            ensure!(
                f.is_parking() == f.park_linear().succeeded(),
                "{:?}: defining condition and linear process disagree",
                f.prefs()
            );
        }
    }
    Ok(())
}

fn stanley_suite(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n {
        let action = parking_action(n).expect("n <= 6");
        for mu in partitions_of(n) {
            let formula = parking::orbit_count_formula(n, &mu).map_err(|e| e.to_string())?;
            let subgroup = YoungSubgroup::new(mu.clone());
            let union_find = action.young_orbits(&subgroup);
            let profile = action.burnside_orbits(&subgroup).map_err(|e| e.to_string())?;
            ensure!(
                formula == union_find,
                "mu={mu}: formula {formula} != union-find {union_find}"
            );
            ensure!(
                formula == profile,
                "mu={mu}: formula {formula} != burnside {profile}"
            );
            if n <= parking::POLLAK_BOUND {
                let census = parking::orbit_count_pollak(n, &mu).map_err(|e| e.to_string())?;
                ensure!(
                    formula == census,
                    "mu={mu}: formula {formula} != rotation census {census}"
                );
            }
        }
        if n <= 5 {
            let character: SymFunc = action.frobenius_m();
            for mu in partitions_of(n) {
                let formula = parking::orbit_count_formula(n, &mu).map_err(|e| e.to_string())?;
                ensure!(
                    character.coefficient(&mu)
                        == Rational::from_integer(Int::from(formula.clone())),
                    "mu={mu}: m-coefficient != formula {formula}"
                );
            }
        }
    }
    Ok(())
}

fn hook_length_dimension(lambda: &Partition) -> Nat {
    let n = lambda.weight();
    let cols = lambda.parts().first().copied().unwrap_or(0);
    let conjugate: Vec<usize> = (0..cols)
        .map(|j| lambda.parts().iter().filter(|&&p| p > j).count())
        .collect();
    let mut hooks = Nat::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for (j, &col) in conjugate.iter().enumerate().take(row) {
            let arm = row - 1 - j;
            let leg = col - 1 - i;
            hooks *= Nat::from(arm + leg + 1);
        }
    }
    factorial(n) / hooks
}

/// All distinct orderings of a multiset of block sizes.
fn orderings(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = crate::partitions::all_permutations(sizes.len())
        .into_iter()
        .map(|g| (0..sizes.len()).map(|i| sizes[g.apply(i)]).collect())
        .collect();
    out.sort();
    out.dedup();
    out
}

fn random_function(n: usize, rng: &mut XorShift64) -> SymFunc {
    let mut f: SymFunc = SymFunc::zero(Basis::P, n);
    for lambda in partitions_of(n) {
        let num = rng.below(11) as i64 - 5;
        let den = rng.below(4) as i64 + 1;
        f = SymFunc::from_terms(
            Basis::P,
            n,
            f.terms()
                .map(|(p, c)| (p.clone(), c.clone()))
                .chain(std::iter::once((
                    lambda,
                    Rational::new(num.into(), den.into()),
                ))),
        )
        .expect("homogeneous by construction");
    }
    f
}

fn random_permutation(size: usize, rng: &mut XorShift64) -> Permutation {
    let mut images: Vec<usize> = (0..size).collect();
    for i in (1..size).rev() {
        images.swap(i, rng.below(i + 1));
    }
    Permutation::new(images).expect("shuffle is a bijection")
}

struct XorShift64(u64);

impl XorShift64 {
    fn new(seed: u64) -> Self {
        XorShift64(seed.max(1))
    }

    fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}
