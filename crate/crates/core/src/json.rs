//! JSON wire formats.
//!
//! Symmetric function:
//! `{"basis":"m","degree":4,"terms":[{"partition":[2,2],"coeff":"2"}]}`,
//! coefficients as `"num"` or `"num/den"` strings so arbitrary precision
//! survives the trip. Action:
//! `{"n":4,"m":3,"gens":[[2,1,3],[1,3,2],[2,1,3]]}` with 1-based images.
//! Orbit report: `[{"mu":[2,2],"orbits":"2"}]`. Output is canonical: terms in
//! reverse-lexicographic partition order, reduced coefficients, `"num"` form
//! whenever the denominator is 1.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::{Partition, PartitionError, Permutation};
use crate::setaction::{FiniteAction, OrbitReport, SetActionError};
use crate::symfunc::{Basis, SymFunc, SymFuncError};
use crate::Rational;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("json parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unknown basis tag {0:?}")]
    UnknownBasis(String),
    #[error("bad coefficient {0:?}: expected \"num\" or \"num/den\" with nonzero den")]
    BadCoefficient(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    SymFunc(#[from] SymFuncError),
    #[error(transparent)]
    Action(#[from] SetActionError),
}

#[derive(Serialize, Deserialize)]
struct SymFuncDto {
    basis: String,
    degree: usize,
    terms: Vec<TermDto>,
}

#[derive(Serialize, Deserialize)]
struct TermDto {
    partition: Vec<usize>,
    coeff: String,
}

fn coeff_string(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn parse_coeff(text: &str) -> Result<Rational, JsonError> {
    let bad = || JsonError::BadCoefficient(text.to_string());
    let (num, den) = match text.split_once('/') {
        None => (text, "1"),
        Some((num, den)) => (num, den),
    };
    let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
    let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
    if den.is_zero() || den.is_negative() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn symfunc_to_string(f: &SymFunc) -> String {
    let terms = f
        .terms()
        .map(|(partition, coeff)| TermDto {
            partition: partition.parts().to_vec(),
            coeff: coeff_string(coeff),
        })
        .collect();
    let dto = SymFuncDto {
        basis: f.basis().tag().to_string(),
        degree: f.degree(),
        terms,
    };
    serde_json::to_string(&dto).expect("symfunc serializes")
}

pub fn symfunc_from_str(text: &str) -> Result<SymFunc, JsonError> {
    let dto: SymFuncDto = serde_json::from_str(text)?;
    let basis = Basis::from_tag(&dto.basis).ok_or(JsonError::UnknownBasis(dto.basis))?;
    let mut terms = Vec::with_capacity(dto.terms.len());
    for term in dto.terms {
        let partition = Partition::new(term.partition)?;
        let coeff = parse_coeff(&term.coeff)?;
        terms.push((partition, coeff));
    }
    Ok(SymFunc::from_terms(basis, dto.degree, terms)?)
}

#[derive(Serialize, Deserialize)]
struct ActionDto {
    n: usize,
    m: usize,
    gens: Vec<Vec<usize>>,
}

pub fn action_to_string(a: &FiniteAction) -> String {
    let dto = ActionDto {
        n: a.rank(),
        m: a.ground_size(),
        gens: a.generators().iter().map(|g| g.to_one_based()).collect(),
    };
    serde_json::to_string(&dto).expect("action serializes")
}

/// Parses and shape-checks an action. Coxeter validation is left to the
/// caller so that parse errors and relation violations stay distinguishable.
pub fn action_from_str(text: &str) -> Result<FiniteAction, JsonError> {
    let dto: ActionDto = serde_json::from_str(text)?;
    let mut gens = Vec::with_capacity(dto.gens.len());
    for images in &dto.gens {
        gens.push(Permutation::from_one_based(images)?);
    }
    Ok(FiniteAction::new(dto.n, dto.m, gens)?)
}

#[derive(Serialize, Deserialize)]
struct OrbitRowDto {
    mu: Vec<usize>,
    orbits: String,
}

pub fn orbit_report_to_string(report: &OrbitReport) -> String {
    let rows: Vec<OrbitRowDto> = report
        .counts()
        .map(|(mu, orbits)| OrbitRowDto {
            mu: mu.parts().to_vec(),
            orbits: orbits.to_string(),
        })
        .collect();
    serde_json::to_string(&rows).expect("orbit report serializes")
}
