//! Realizable, normal, Lehmer and strongly Lehmer numbers over a field.
//!
//! All predicates are defined for `d >= 2` except realizability, which also
//! accepts `d = 1`. Over `Q` the degree is one and `d^n - 1 = d - 1`.

use serde::{Deserialize, Serialize};

use crate::arith::{self, PrimePower, Sieve, MAX_MODULUS};
use crate::error::{Error, Result};
use crate::field::QuadraticField;
use crate::residue::phi_from_factors;
use crate::scan;
use crate::splitting::{splitting_type_unchecked, SplittingType};

/// Upper limit on `d_max` for range classification (sieve memory).
pub const RANGE_CAP: u64 = 50_000_000;

/// One row of a classification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub d: u64,
    pub squarefree: bool,
    pub phi: u64,
    #[serde(rename = "phiK")]
    pub phi_k: u64,
    /// Present iff `d` is a rational prime and the field is quadratic.
    pub splitting: Option<SplittingType>,
    pub irreducible: bool,
    /// `phi_K(d) | d^n - 1`.
    pub divides: bool,
    pub realizable: bool,
    pub normal: bool,
    pub lehmer: bool,
    pub strongly_lehmer: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub squarefree_only: bool,
    pub threads: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            squarefree_only: false,
            threads: 1,
        }
    }
}

fn require_at_least(d: u64, min: u64) -> Result<()> {
    if d < min {
        return Err(Error::InvalidArgument(format!(
            "d must be >= {min}, got {d}"
        )));
    }
    if d > MAX_MODULUS {
        return Err(Error::ModulusTooLarge(d, MAX_MODULUS));
    }
    Ok(())
}

fn realizable_from_factors(field: QuadraticField, factors: &[PrimePower]) -> bool {
    field.is_rationals()
        || factors
            .iter()
            .all(|&(p, _)| splitting_type_unchecked(field, p) == SplittingType::Inert)
}

fn irreducible_from_factors(field: QuadraticField, factors: &[PrimePower]) -> bool {
    match factors {
        [(p, 1)] => {
            field.is_rationals() || splitting_type_unchecked(field, *p) == SplittingType::Inert
        }
        _ => false,
    }
}

fn normal_from_parts(field: QuadraticField, d: u64, phi: u64, phi_k: u64) -> Result<bool> {
    if !phi_k.is_multiple_of(phi) {
        return Err(Error::InternalInconsistency(format!(
            "phi({d}) = {phi} does not divide phi_K({d}) = {phi_k} over {field}"
        )));
    }
    let top = field.max_totient(d);
    if !top.is_multiple_of(d - 1) {
        return Err(Error::InternalInconsistency(format!(
            "{} does not divide {top}",
            d - 1
        )));
    }
    Ok((top / (d - 1)).is_multiple_of(phi_k / phi))
}

/// Every rational prime divisor of `d` stays irreducible in `O_K`.
pub fn is_realizable(field: QuadraticField, d: u64) -> Result<bool> {
    require_at_least(d, 1)?;
    Ok(realizable_from_factors(field, &arith::factorize(d)))
}

/// For squarefree `d`: realizable iff `phi_K(d) = prod_{p | d} (p^n - 1)`.
///
/// Both sides are evaluated independently and the biconditional returned.
pub fn check_prop12(field: QuadraticField, d: u64) -> Result<bool> {
    require_at_least(d, 1)?;
    let factors = arith::factorize(d);
    if !arith::is_squarefree_factors(&factors) {
        return Err(Error::NotSquarefree(d as i64));
    }
    let product: u64 = factors
        .iter()
        .map(|&(p, _)| p.pow(field.degree()) - 1)
        .product();
    let phi_k = phi_from_factors(field, &factors);
    Ok(realizable_from_factors(field, &factors) == (phi_k == product))
}

/// `phi_K(d) / phi(d)` divides `(d^n - 1) / (d - 1)`.
pub fn is_normal(field: QuadraticField, d: u64) -> Result<bool> {
    require_at_least(d, 2)?;
    let factors = arith::factorize(d);
    normal_from_parts(
        field,
        d,
        arith::euler_phi_factors(&factors),
        phi_from_factors(field, &factors),
    )
}

/// `phi_K(d) | d^n - 1` and "d irreducible in O_K" have the same truth value.
pub fn is_lehmer(field: QuadraticField, d: u64) -> Result<bool> {
    Ok(classify(field, d)?.lehmer)
}

/// Divisibility, irreducibility in `O_K` and primality in `Z` pairwise agree.
pub fn is_strongly_lehmer(field: QuadraticField, d: u64) -> Result<bool> {
    Ok(classify(field, d)?.strongly_lehmer)
}

pub(crate) fn record_from_factors(
    field: QuadraticField,
    d: u64,
    factors: &[PrimePower],
) -> Result<ClassificationRecord> {
    let prime = matches!(factors, [(_, 1)]);
    let phi = arith::euler_phi_factors(factors);
    let phi_k = phi_from_factors(field, factors);
    let splitting = (prime && !field.is_rationals()).then(|| splitting_type_unchecked(field, d));
    let irreducible = irreducible_from_factors(field, factors);
    let divides = field.max_totient(d).is_multiple_of(phi_k);
    let lehmer = divides == irreducible;
    Ok(ClassificationRecord {
        d,
        squarefree: arith::is_squarefree_factors(factors),
        phi,
        phi_k,
        splitting,
        irreducible,
        divides,
        realizable: realizable_from_factors(field, factors),
        normal: normal_from_parts(field, d, phi, phi_k)?,
        lehmer,
        strongly_lehmer: lehmer && (prime == irreducible),
    })
}

pub fn classify(field: QuadraticField, d: u64) -> Result<ClassificationRecord> {
    require_at_least(d, 2)?;
    record_from_factors(field, d, &arith::factorize(d))
}

/// One record per `d` in `[2, d_max]`, ascending.
pub fn classify_range(
    field: QuadraticField,
    d_max: u64,
    options: &ClassifyOptions,
) -> Result<Vec<ClassificationRecord>> {
    if d_max < 2 {
        return Err(Error::InvalidArgument(format!(
            "d_max must be >= 2, got {d_max}"
        )));
    }
    if d_max > RANGE_CAP {
        return Err(Error::BudgetExceeded {
            what: "d_max",
            value: d_max,
            cap: RANGE_CAP,
        });
    }
    let sieve = Sieve::new(d_max);
    scan::filter_map_range(2, d_max, options.threads, |d| {
        let factors = sieve.factorize(d);
        if options.squarefree_only && !arith::is_squarefree_factors(&factors) {
            return Ok(None);
        }
        record_from_factors(field, d, &factors).map(Some)
    })
}
