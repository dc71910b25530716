use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalValue(BigRational);

impl RationalValue {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(Error::InvalidRational(format!("{num}/0")));
        }
        Ok(Self(BigRational::new(num, den)))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn into_inner(self) -> BigRational {
        self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Numerator and denominator as `i128` when both fit.
    pub fn to_i128_parts(&self) -> Option<(i128, i128)> {
        Some((
            i128::try_from(self.numer()).ok()?,
            i128::try_from(self.denom()).ok()?,
        ))
    }

    /// Lossy, for display only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<BigRational> for RationalValue {
    fn from(r: BigRational) -> Self {
        Self(r)
    }
}

impl std::ops::Add for &RationalValue {
    type Output = RationalValue;
    fn add(self, rhs: Self) -> RationalValue {
        RationalValue(&self.0 + &rhs.0)
    }
}

impl std::ops::Sub for &RationalValue {
    type Output = RationalValue;
    fn sub(self, rhs: Self) -> RationalValue {
        RationalValue(&self.0 - &rhs.0)
    }
}

impl std::ops::Mul for &RationalValue {
    type Output = RationalValue;
    fn mul(self, rhs: Self) -> RationalValue {
        RationalValue(&self.0 * &rhs.0)
    }
}

impl fmt::Display for RationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

/// Parses `num/den` or a bare integer.
impl FromStr for RationalValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRational(s.to_string());
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Self::new(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = RationalValue::new(6, -4).unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(r, "-3/2".parse().unwrap());
        assert_eq!(
            "7".parse::<RationalValue>().unwrap(),
            RationalValue::integer(7)
        );
        assert!("1/0".parse::<RationalValue>().is_err());
        assert!("x/2".parse::<RationalValue>().is_err());
        assert!(RationalValue::new(1, 0).is_err());
    }

    #[test]
    fn ordering() {
        let a: RationalValue = "3/2".parse().unwrap();
        let b: RationalValue = "2/1".parse().unwrap();
        assert!(a < b);
        assert_eq!((&a + &a).to_string(), "3/1");
    }
}
