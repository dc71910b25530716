//! Decomposition of rational primes in `O_K`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::field::QuadraticField;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplittingType {
    Inert,
    Split,
    Ramified,
}

impl SplittingType {
    pub fn as_str(&self) -> &'static str {
        match self {
            SplittingType::Inert => "inert",
            SplittingType::Split => "split",
            SplittingType::Ramified => "ramified",
        }
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SplittingType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inert" => Ok(SplittingType::Inert),
            "split" => Ok(SplittingType::Split),
            "ramified" => Ok(SplittingType::Ramified),
            _ => Err(Error::InvalidArgument(format!(
                "unknown splitting type `{s}`"
            ))),
        }
    }
}

pub fn splitting_type(field: QuadraticField, p: u64) -> Result<SplittingType> {
    if field.is_rationals() {
        return Err(Error::DegreeOne);
    }
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(splitting_type_unchecked(field, p))
}

/// `p` must be prime and the field quadratic.
pub(crate) fn splitting_type_unchecked(field: QuadraticField, p: u64) -> SplittingType {
    if field.disc().unsigned_abs().is_multiple_of(p) {
        return SplittingType::Ramified;
    }
    let m = field.m();
    if p == 2 {
        // 2 unramified forces m = 1 (mod 4)
        return if m.rem_euclid(8) == 1 {
            SplittingType::Split
        } else {
            SplittingType::Inert
        };
    }
    // Euler's criterion for the Legendre symbol (m / p)
    let residue = m.rem_euclid(p as i64) as u64;
    if arith::pow_mod(residue, (p - 1) / 2, p) == 1 {
        SplittingType::Split
    } else {
        SplittingType::Inert
    }
}

/// Whether the natural number `d >= 2` is irreducible as an element of `O_K`.
///
/// Over a quadratic PID this holds exactly for inert rational primes; over
/// `Q` exactly for primes. Returns `false` for `d < 2`.
pub fn is_irreducible_nat(field: QuadraticField, d: u64) -> bool {
    if !arith::is_prime(d) {
        return false;
    }
    field.is_rationals() || splitting_type_unchecked(field, d) == SplittingType::Inert
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_examples() {
        let k = QuadraticField::new(-1).unwrap();
        assert_eq!(splitting_type(k, 7).unwrap(), SplittingType::Inert);
        assert_eq!(splitting_type(k, 5).unwrap(), SplittingType::Split);
        assert_eq!(splitting_type(k, 2).unwrap(), SplittingType::Ramified);
        assert_eq!(splitting_type(k, 9), Err(Error::NotPrime(9)));
        assert_eq!(
            splitting_type(QuadraticField::rationals(), 3),
            Err(Error::DegreeOne)
        );

        assert!(is_irreducible_nat(k, 3));
        assert!(!is_irreducible_nat(k, 9));
        assert!(!is_irreducible_nat(k, 5));
        assert!(!is_irreducible_nat(k, 1));
    }

    #[test]
    fn two_in_half_trace_fields() {
        // -7 = 1 (mod 8): 2 splits; -3 = 5 (mod 8): 2 is inert
        let k = QuadraticField::new(-7).unwrap();
        assert_eq!(splitting_type(k, 2).unwrap(), SplittingType::Split);
        let k = QuadraticField::new(-3).unwrap();
        assert_eq!(splitting_type(k, 2).unwrap(), SplittingType::Inert);
        assert_eq!(splitting_type(k, 3).unwrap(), SplittingType::Ramified);
    }

    #[test]
    fn two_is_ramified_for_plain_root() {
        for k in QuadraticField::quadratic_whitelist() {
            if k.m().rem_euclid(4) != 1 {
                assert_eq!(
                    splitting_type(k, 2).unwrap(),
                    SplittingType::Ramified,
                    "{k}"
                );
            }
        }
    }

    #[test]
    fn rationals_irreducible_iff_prime() {
        let q = QuadraticField::rationals();
        for d in 2..200 {
            assert_eq!(is_irreducible_nat(q, d), arith::is_prime(d));
        }
    }

    #[test]
    fn round_trip_names() {
        for t in [
            SplittingType::Inert,
            SplittingType::Split,
            SplittingType::Ramified,
        ] {
            assert_eq!(t.as_str().parse::<SplittingType>().unwrap(), t);
        }
    }
}
