//! Acceptance suite: the quantitative claims the crate is built around, each
//! checked exactly and against its wall-clock budget. Run with
//! `cargo test -p frobset --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::time::{Duration, Instant};

use frobset::parking;
use frobset::partitions::{partitions_of, Partition};
use frobset::setaction::klein_quotient;
use frobset::symfunc::{character_table, l_coefficient, l_via_splitting, p_to_m};
use frobset::verify::builtin_actions;
use frobset::{Basis, Int, Nat, Rational, SymFunc, YoungSubgroup};

fn report(number: usize, name: &str, budget: Duration, start: Instant) {
    let elapsed = start.elapsed();
    println!("criterion {number} ({name}): pass in {elapsed:.2?} (budget {budget:.0?})");
    assert!(
        elapsed <= budget,
        "criterion {number} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

fn rational(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

#[test]
fn criterion_1_klein_example_expansions() {
    let start = Instant::now();
    let f: SymFunc = klein_quotient().frobenius_p();

    let s = f.convert(Basis::S);
    let expected_s = SymFunc::from_terms(
        Basis::S,
        4,
        vec![
            (Partition::of(&[4]), rational(1)),
            (Partition::of(&[2, 2]), rational(1)),
        ],
    )
    .unwrap();
    assert_eq!(s, expected_s, "s-expansion");

    let h = f.convert(Basis::H);
    let expected_h = SymFunc::from_terms(
        Basis::H,
        4,
        vec![
            (Partition::of(&[4]), rational(1)),
            (Partition::of(&[3, 1]), rational(-1)),
            (Partition::of(&[2, 2]), rational(1)),
        ],
    )
    .unwrap();
    assert_eq!(h, expected_h, "h-expansion");

    let e = f.convert(Basis::E);
    let expected_e = SymFunc::from_terms(
        Basis::E,
        4,
        vec![
            (Partition::of(&[4]), rational(-1)),
            (Partition::of(&[3, 1]), rational(1)),
            (Partition::of(&[2, 2]), rational(2)),
            (Partition::of(&[2, 1, 1]), rational(-3)),
            (Partition::of(&[1, 1, 1, 1]), rational(1)),
        ],
    )
    .unwrap();
    assert_eq!(e, expected_e, "e-expansion");

    report(1, "klein s/h/e expansions", Duration::from_secs(1), start);
}

#[test]
fn criterion_2_main_theorem_three_routes() {
    let start = Instant::now();
    for n in 1..=6 {
        for (label, action) in builtin_actions(n) {
            assert_eq!(action.validate(), Ok(()), "{label} validates");
            let monomial = p_to_m(&action.frobenius_p::<Rational>());
            for mu in partitions_of(n) {
                let subgroup = YoungSubgroup::new(mu.clone());
                let union_find = action.young_orbits(&subgroup);
                let profile = action.burnside_orbits(&subgroup).unwrap();
                assert_eq!(
                    monomial.coefficient(&mu),
                    Rational::from_integer(Int::from(union_find.clone())),
                    "{label}: m-coefficient vs union-find at mu={mu}"
                );
                assert_eq!(
                    union_find, profile,
                    "{label}: union-find vs profile burnside at mu={mu}"
                );
                if n <= 5 {
                    let elementwise = action.burnside_orbits_elementwise(&subgroup).unwrap();
                    assert_eq!(
                        union_find, elementwise,
                        "{label}: union-find vs elementwise burnside at mu={mu}"
                    );
                }
            }
        }
    }
    report(
        2,
        "main theorem, three routes, n <= 6",
        Duration::from_secs(600),
        start,
    );
}

#[test]
fn criterion_3_parking_function_counts() {
    let start = Instant::now();
    let expected: [u64; 7] = [1, 3, 16, 125, 1296, 16807, 262144];
    for (n, &count) in (1..=7).zip(expected.iter()) {
        let generated = parking::generate_all(n).unwrap();
        assert_eq!(generated.len() as u64, count, "|PF_{n}|");
        assert_eq!(parking::total_count(n), Nat::from(count), "(n+1)^(n-1) at n={n}");
    }
    report(3, "parking counts n = 1..7", Duration::from_secs(120), start);
}

#[test]
fn criterion_4_stanley_formula() {
    let start = Instant::now();
    for n in 1..=6 {
        let action = frobset::setaction::parking_action(n).unwrap();
        for mu in partitions_of(n) {
            let formula = parking::orbit_count_formula(n, &mu).unwrap();
            let brute = action.young_orbits(&YoungSubgroup::new(mu.clone()));
            assert_eq!(formula, brute, "n={n} mu={mu}");
        }
    }
    report(4, "orbit formula vs union-find, n <= 6", Duration::from_secs(300), start);
}

#[test]
fn criterion_5_pollak_rotation_property() {
    let start = Instant::now();
    for n in 1..=5 {
        for f in parking::all_preferences(n, n + 1) {
            let parking_shifts: Vec<usize> =
                (0..=n).filter(|&s| f.rotate(s).is_parking()).collect();
            assert_eq!(
                parking_shifts.len(),
                1,
                "exactly one rotation of {:?} parks",
                f.prefs()
            );
            let winner = f.rotate(parking_shifts[0]);
            assert_eq!(
                winner.park_circular().unoccupied(),
                Some(n + 1),
                "the parking rotation of {:?} leaves space n+1 empty",
                f.prefs()
            );
        }
    }
    report(5, "pollak rotation property, n <= 5", Duration::from_secs(60), start);
}

#[test]
fn criterion_6_l_matrix_identity() {
    let start = Instant::now();
    for n in 0..=8 {
        for lambda in partitions_of(n) {
            for mu in partitions_of(n) {
                assert_eq!(
                    l_coefficient(&lambda, &mu).unwrap(),
                    l_via_splitting(&lambda, &mu).unwrap(),
                    "n={n} lambda={lambda} mu={mu}"
                );
            }
        }
    }
    report(6, "L identity, n <= 8", Duration::from_secs(60), start);
}

#[test]
fn criterion_7_basis_conversion_soundness() {
    let start = Instant::now();
    // round trips
    for n in 0..=6 {
        for a in Basis::ALL {
            for b in Basis::ALL {
                for lambda in partitions_of(n) {
                    let x: SymFunc = SymFunc::basis_element(a, lambda.clone());
                    assert_eq!(x.convert(b).convert(a), x, "{a}->{b}->{a} on {lambda}");
                }
            }
        }
    }
    // column orthogonality
    for n in 1..=7 {
        assert!(
            character_table(n).column_orthogonality_holds(),
            "orthogonality at n={n}"
        );
    }
    // <f, h_mu> duality
    for n in 1..=6 {
        for basis in Basis::ALL {
            for lambda in partitions_of(n) {
                let f: SymFunc = SymFunc::basis_element(basis, lambda);
                let in_m = f.convert(Basis::M);
                for mu in partitions_of(n) {
                    let h: SymFunc = SymFunc::basis_element(Basis::H, mu.clone());
                    assert_eq!(
                        f.inner_product(&h).unwrap(),
                        in_m.coefficient(&mu),
                        "<., h_{mu}> duality in basis {basis}"
                    );
                }
            }
        }
    }
    // sanity anchor for the inner product convention
    let p22: SymFunc = SymFunc::basis_element(Basis::P, Partition::of(&[2, 2]));
    assert_eq!(p22.inner_product(&p22).unwrap(), rational(8));
    report(
        7,
        "basis conversion soundness",
        Duration::from_secs(120),
        start,
    );
}
