//! `frobset`: Frobenius characters of set representations of symmetric
//! groups, from built-in or file-specified actions, plus basis conversion,
//! parking-function reports, and the library's self-verification suite.
//!
//! All output is canonical JSON on stdout; every error is a single
//! `error: ...` line on stderr with a nonzero exit status.

use std::error::Error;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use frobset::json::{action_from_str, symfunc_from_str, symfunc_to_string};
use frobset::parking;
use frobset::partitions::{binomial, partitions_of};
use frobset::setaction::{
    klein_quotient, natural, parking_action, subsets, trivial, FiniteAction,
};
use frobset::verify::run_selftest;
use frobset::{Basis, Nat, SymFunc, YoungSubgroup};

#[derive(Parser)]
#[command(
    name = "frobset",
    version,
    about = "Frobenius characters of set representations of symmetric groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Frobenius character of an S_n-set
    #[command(group(ArgGroup::new("source").required(true).multiple(false)))]
    Character {
        /// Built-in action: trivial:n, natural:n, subsets:n:k, parking:n, klein
        #[arg(long, group = "source")]
        builtin: Option<String>,
        /// Path to an action JSON file {"n":..,"m":..,"gens":[[..]]}
        #[arg(long, group = "source")]
        action: Option<PathBuf>,
        /// Output basis: p, m, h, e or s
        #[arg(long, default_value = "p")]
        basis: String,
        /// Computation route
        #[arg(long, value_enum, default_value_t = Route::Fixedpoints)]
        route: Route,
        /// Refuse ground sets larger than this
        #[arg(long, default_value_t = 20000)]
        max_ground_set: usize,
    },
    /// Convert a symmetric function JSON between bases
    Convert {
        /// Target basis: p, m, h, e or s
        #[arg(long)]
        target: String,
        /// Input path; standard input when omitted
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Parking-function counts and orbit tables
    Parking {
        /// Length of the parking functions
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        mode: ParkingMode,
        /// Refuse ground sets larger than this
        #[arg(long, default_value_t = 20000)]
        max_ground_set: usize,
    },
    /// Run the full invariant suite up to a given rank
    Selftest {
        /// Largest S_n rank to verify (1..=6)
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    /// Fixed-point counts in the p basis
    Fixedpoints,
    /// Young-subgroup orbit counts in the m basis
    Orbits,
    /// Both, with an equality verdict
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParkingMode {
    /// Total count with enumeration cross-check
    Count,
    /// Orbit-count table from the closed formula
    Orbits,
    /// Formula vs union-find, with per-row verdicts
    Verify,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            let rendered = err.to_string();
            let first = rendered
                .lines()
                .find(|line| !line.trim().is_empty())
                .unwrap_or("invalid arguments");
            eprintln!("error: {}", first.strip_prefix("error: ").unwrap_or(first));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<(), Box<dyn Error>> {
    match command {
        Command::Character {
            builtin,
            action,
            basis,
            route,
            max_ground_set,
        } => {
            let basis = parse_basis(&basis)?;
            let action = load_action(builtin.as_deref(), action.as_deref(), max_ground_set)?;
            action.validate().map_err(|violation| {
                format!("coxeter relation violated: {violation}")
            })?;
            run_character(&action, basis, route)
        }
        Command::Convert { target, input } => {
            let target = parse_basis(&target)?;
            let text = match input {
                Some(path) => std::fs::read_to_string(path)?,
                None => {
                    let mut buffer = String::new();
                    std::io::stdin().read_to_string(&mut buffer)?;
                    buffer
                }
            };
            let f = symfunc_from_str(&text)?;
            println!("{}", symfunc_to_string(&f.convert(target)));
            Ok(())
        }
        Command::Parking {
            n,
            mode,
            max_ground_set,
        } => run_parking(n, mode, max_ground_set),
        Command::Selftest { max_n } => {
            if !(1..=6).contains(&max_n) {
                return Err("selftest supports --max-n between 1 and 6".into());
            }
            let results = run_selftest(max_n);
            let mut failed = 0usize;
            for r in &results {
                if r.passed {
                    println!("{}: pass ({} ms)", r.name, r.duration.as_millis());
                } else {
                    failed += 1;
                    println!(
                        "{}: FAIL ({} ms) {}",
                        r.name,
                        r.duration.as_millis(),
                        r.detail
                    );
                }
            }
            if failed > 0 {
                return Err(format!("{failed} of {} suites failed", results.len()).into());
            }
            println!("selftest: all {} suites passed (max_n={max_n})", results.len());
            Ok(())
        }
    }
}

fn parse_basis(tag: &str) -> Result<Basis, String> {
    Basis::from_tag(tag).ok_or_else(|| format!("unknown basis tag {tag:?}, expected p|m|h|e|s"))
}

type ActionBuilder = Box<dyn FnOnce() -> Result<FiniteAction, Box<dyn Error>>>;

fn load_action(
    builtin: Option<&str>,
    path: Option<&std::path::Path>,
    max_ground_set: usize,
) -> Result<FiniteAction, Box<dyn Error>> {
    if let Some(spec) = builtin {
        let (estimate, build): (Nat, ActionBuilder) =
            match parse_builtin(spec)? {
                BuiltinSpec::Trivial(n) => (Nat::from(1u32), Box::new(move || Ok(trivial(n)))),
                BuiltinSpec::Natural(n) => (Nat::from(n), Box::new(move || Ok(natural(n)))),
                BuiltinSpec::Klein => (Nat::from(3u32), Box::new(|| Ok(klein_quotient()))),
                BuiltinSpec::Subsets(n, k) => (
                    binomial(n, k),
                    Box::new(move || Ok(subsets(n, k)?)),
                ),
                BuiltinSpec::Parking(n) => (
                    parking::total_count(n),
                    Box::new(move || Ok(parking_action(n)?)),
                ),
            };
        if estimate > Nat::from(max_ground_set) {
            return Err(format!(
                "ground set size {estimate} exceeds --max-ground-set {max_ground_set}"
            )
            .into());
        }
        return build();
    }
    let path = path.expect("clap guarantees one action source");
    let text = std::fs::read_to_string(path)?;
    let action = action_from_str(&text)?;
    if Nat::from(action.ground_size()) > Nat::from(max_ground_set) {
        return Err(format!(
            "ground set size {} exceeds --max-ground-set {max_ground_set}",
            action.ground_size()
        )
        .into());
    }
    Ok(action)
}

enum BuiltinSpec {
    Trivial(usize),
    Natural(usize),
    Subsets(usize, usize),
    Parking(usize),
    Klein,
}

fn parse_builtin(spec: &str) -> Result<BuiltinSpec, String> {
    let bad = || {
        format!(
            "unknown builtin {spec:?}, expected trivial:n, natural:n, subsets:n:k, parking:n or klein"
        )
    };
    let mut pieces = spec.split(':');
    let head = pieces.next().ok_or_else(bad)?;
    let mut number = |required: bool| -> Result<Option<usize>, String> {
        match pieces.next() {
            Some(text) => text.parse::<usize>().map(Some).map_err(|_| bad()),
            None if required => Err(bad()),
            None => Ok(None),
        }
    };
    let parsed = match head {
        "klein" => BuiltinSpec::Klein,
        "trivial" => BuiltinSpec::Trivial(number(true)?.unwrap()),
        "natural" => BuiltinSpec::Natural(number(true)?.unwrap()),
        "parking" => BuiltinSpec::Parking(number(true)?.unwrap()),
        "subsets" => {
            let n = number(true)?.unwrap();
            let k = number(true)?.unwrap();
            BuiltinSpec::Subsets(n, k)
        }
        _ => return Err(bad()),
    };
    if pieces.next().is_some() {
        return Err(bad());
    }
    match &parsed {
        BuiltinSpec::Trivial(n) | BuiltinSpec::Natural(n) | BuiltinSpec::Parking(n)
            if *n == 0 =>
        {
            Err("builtin rank n must be at least 1".to_string())
        }
        _ => Ok(parsed),
    }
}

fn run_character(action: &FiniteAction, basis: Basis, route: Route) -> Result<(), Box<dyn Error>> {
    match route {
        Route::Fixedpoints => {
            let f: SymFunc = action.frobenius_p();
            println!("{}", symfunc_to_string(&f.convert(basis)));
        }
        Route::Orbits => {
            let f: SymFunc = action.frobenius_m();
            println!("{}", symfunc_to_string(&f.convert(basis)));
        }
        Route::Both => {
            let fixed: SymFunc = action.frobenius_p();
            let orbits: SymFunc = action.frobenius_m();
            let fixed = fixed.convert(basis);
            let orbits = orbits.convert(basis);
            let equal = fixed == orbits;
            println!(
                "{{\"fixedpoints\":{},\"orbits\":{},\"equal\":{}}}",
                symfunc_to_string(&fixed),
                symfunc_to_string(&orbits),
                equal
            );
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CountReport {
    n: usize,
    formula: String,
    enumerated: String,
    #[serde(rename = "match")]
    matches: bool,
}

#[derive(Serialize)]
struct OrbitRow {
    mu: Vec<usize>,
    count: String,
}

#[derive(Serialize)]
struct OrbitsReport {
    n: usize,
    orbits: Vec<OrbitRow>,
}

#[derive(Serialize)]
struct VerifyRow {
    mu: Vec<usize>,
    formula: String,
    union_find: String,
    ok: bool,
}

#[derive(Serialize)]
struct VerifyReport {
    n: usize,
    rows: Vec<VerifyRow>,
    all_ok: bool,
}

fn run_parking(n: usize, mode: ParkingMode, max_ground_set: usize) -> Result<(), Box<dyn Error>> {
    if n == 0 {
        return Err("parking needs n >= 1".into());
    }
    match mode {
        ParkingMode::Count => {
            let formula = parking::total_count(n);
            if formula > Nat::from(max_ground_set) {
                return Err(format!(
                    "ground set size {formula} exceeds --max-ground-set {max_ground_set}"
                )
                .into());
            }
            let enumerated = Nat::from(parking::generate_all(n)?.len());
            let report = CountReport {
                n,
                formula: formula.to_string(),
                enumerated: enumerated.to_string(),
                matches: formula == enumerated,
            };
            println!("{}", serde_json::to_string(&report)?);
            if formula != enumerated {
                return Err("enumeration disagrees with (n+1)^(n-1)".into());
            }
        }
        ParkingMode::Orbits => {
            let orbits = partitions_of(n)
                .into_iter()
                .map(|mu| {
                    parking::orbit_count_formula(n, &mu).map(|count| OrbitRow {
                        mu: mu.parts().to_vec(),
                        count: count.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            println!("{}", serde_json::to_string(&OrbitsReport { n, orbits })?);
        }
        ParkingMode::Verify => {
            let ground = parking::total_count(n);
            if ground > Nat::from(max_ground_set) {
                return Err(format!(
                    "ground set size {ground} exceeds --max-ground-set {max_ground_set}"
                )
                .into());
            }
            let action = parking_action(n)?;
            let mut rows = Vec::new();
            let mut all_ok = true;
            for mu in partitions_of(n) {
                let formula = parking::orbit_count_formula(n, &mu)?;
                let brute = action.young_orbits(&YoungSubgroup::new(mu.clone()));
                let ok = formula == brute;
                all_ok &= ok;
                rows.push(VerifyRow {
                    mu: mu.parts().to_vec(),
                    formula: formula.to_string(),
                    union_find: brute.to_string(),
                    ok,
                });
            }
            println!("{}", serde_json::to_string(&VerifyReport { n, rows, all_ok })?);
            if !all_ok {
                return Err("orbit formula disagrees with union-find".into());
            }
        }
    }
    Ok(())
}
