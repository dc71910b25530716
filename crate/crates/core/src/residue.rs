//! The finite ring `O_K / d O_K`, its unit test, and the generalized totient.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::arith::{self, PrimePower, MAX_MODULUS};
use crate::error::{Error, Result};
use crate::field::{AlgInt, QuadraticField};
use crate::splitting::{splitting_type, SplittingType};

/// Largest modulus the exhaustive oracle accepts unless configured otherwise.
pub const DEFAULT_ORACLE_CAP: u64 = 1000;

/// A class `[a + b*w]_d` with canonical coordinates in `[0, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ResidueClass {
    field: QuadraticField,
    d: u64,
    a: u64,
    b: u64,
}

impl ResidueClass {
    pub fn field(&self) -> QuadraticField {
        self.field
    }

    pub fn modulus(&self) -> u64 {
        self.d
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// The canonical lift into `O_K`.
    pub fn lift(&self) -> AlgInt {
        self.field
            .element(self.a as i128, self.b as i128)
            .expect("b = 0 over Q")
    }

    /// Position in enumeration order.
    pub fn index(&self) -> usize {
        (self.a * self.ring_width() + self.b) as usize
    }

    fn ring_width(&self) -> u64 {
        if self.field.is_rationals() {
            1
        } else {
            self.d
        }
    }
}

/// `Z_d|_K`: arithmetic on residue classes for one field and modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidueRing {
    field: QuadraticField,
    d: u64,
    trace: u64,
    constant: u64,
}

impl ResidueRing {
    pub fn new(field: QuadraticField, d: u64) -> Result<Self> {
        check_modulus(d)?;
        let (t, c) = field.omega_relation();
        Ok(Self {
            field,
            d,
            trace: t.rem_euclid(d as i64) as u64,
            constant: c.rem_euclid(d as i64) as u64,
        })
    }

    pub fn field(&self) -> QuadraticField {
        self.field
    }

    pub fn modulus(&self) -> u64 {
        self.d
    }

    /// `d^n`.
    pub fn cardinality(&self) -> u64 {
        self.d.pow(self.field.degree())
    }

    pub fn class(&self, a: i128, b: i128) -> ResidueClass {
        let d = self.d as i128;
        let b = if self.field.is_rationals() {
            0
        } else {
            b.rem_euclid(d) as u64
        };
        ResidueClass {
            field: self.field,
            d: self.d,
            a: a.rem_euclid(d) as u64,
            b,
        }
    }

    pub fn reduce(&self, x: &AlgInt) -> Result<ResidueClass> {
        if x.field() != self.field {
            return Err(Error::FieldMismatch(x.field().m(), self.field.m()));
        }
        Ok(self.class(x.a(), x.b()))
    }

    pub fn zero(&self) -> ResidueClass {
        self.class(0, 0)
    }

    pub fn one(&self) -> ResidueClass {
        self.class(1, 0)
    }

    /// Class at position `i` of [`ResidueRing::iter`].
    pub fn nth(&self, i: u64) -> ResidueClass {
        if self.field.is_rationals() {
            ResidueClass {
                field: self.field,
                d: self.d,
                a: i,
                b: 0,
            }
        } else {
            ResidueClass {
                field: self.field,
                d: self.d,
                a: i / self.d,
                b: i % self.d,
            }
        }
    }

    pub fn iter(&self) -> Residues {
        Residues {
            ring: *self,
            next: 0,
            end: self.cardinality(),
        }
    }

    fn check(&self, x: &ResidueClass) -> Result<()> {
        if x.field != self.field {
            return Err(Error::FieldMismatch(x.field.m(), self.field.m()));
        }
        if x.d != self.d {
            return Err(Error::ModulusMismatch(x.d, self.d));
        }
        Ok(())
    }

    pub fn add(&self, x: &ResidueClass, y: &ResidueClass) -> Result<ResidueClass> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.add_unchecked(x, y))
    }

    pub fn mul(&self, x: &ResidueClass, y: &ResidueClass) -> Result<ResidueClass> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    #[inline]
    pub(crate) fn add_unchecked(&self, x: &ResidueClass, y: &ResidueClass) -> ResidueClass {
        let d = self.d;
        ResidueClass {
            field: self.field,
            d,
            a: (x.a + y.a) % d,
            b: (x.b + y.b) % d,
        }
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, x: &ResidueClass, y: &ResidueClass) -> ResidueClass {
        let (a, b) = self.mul_coords(x.a, x.b, y.a, y.b);
        ResidueClass {
            field: self.field,
            d: self.d,
            a,
            b,
        }
    }

    // (a1 + b1 w)(a2 + b2 w) = (a1 a2 + c b1 b2) + (a1 b2 + a2 b1 + t b1 b2) w
    #[inline]
    fn mul_coords(&self, a1: u64, b1: u64, a2: u64, b2: u64) -> (u64, u64) {
        let d = self.d as u128;
        let (a1, b1, a2, b2) = (a1 as u128, b1 as u128, a2 as u128, b2 as u128);
        let bb = b1 * b2 % d;
        let re = (a1 * a2 + self.constant as u128 * bb) % d;
        let im = (a1 * b2 + a2 * b1 + self.trace as u128 * bb) % d;
        (re as u64, im as u64)
    }
}

/// Iterator over all classes of a [`ResidueRing`], coordinates lexicographic.
#[derive(Debug, Clone)]
pub struct Residues {
    ring: ResidueRing,
    next: u64,
    end: u64,
}

impl Iterator for Residues {
    type Item = ResidueClass;

    fn next(&mut self) -> Option<ResidueClass> {
        if self.next == self.end {
            return None;
        }
        let x = self.ring.nth(self.next);
        self.next += 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Residues {}

fn check_modulus(d: u64) -> Result<()> {
    if d == 0 {
        return Err(Error::ZeroModulus);
    }
    if d > MAX_MODULUS {
        return Err(Error::ModulusTooLarge(d, MAX_MODULUS));
    }
    Ok(())
}

fn check_oracle_budget(d: u64, cap: u64) -> Result<()> {
    if d > cap {
        return Err(Error::BudgetExceeded {
            what: "oracle modulus",
            value: d,
            cap,
        });
    }
    Ok(())
}

/// All `d^n` classes of `Z_d|_K`, refusing moduli above `cap`.
pub fn enumerate_residues(field: QuadraticField, d: u64, cap: u64) -> Result<Residues> {
    check_oracle_budget(d, cap)?;
    Ok(ResidueRing::new(field, d)?.iter())
}

/// Unit test by the norm: `x` is invertible mod `d` iff `gcd(N(x), d) = 1`.
///
/// Returns `false` on the zero ring `d = 1`.
pub fn is_unit(x: &ResidueClass) -> bool {
    if x.d < 2 {
        return false;
    }
    let norm = x
        .lift()
        .norm()
        .expect("coordinates below 2^32 cannot overflow");
    let residue = norm.rem_euclid(x.d as i128) as u64;
    arith::gcd(residue, x.d) == 1
}

/// Invertibility of every class of `Z_d|_K`, indexed like [`ResidueRing::iter`].
///
/// Every element of a finite ring is either invertible or a zero divisor, so
/// each class is settled by scanning for a partner `y` with `xy = 1` or with
/// `xy = 0, y != 0`. No norm or determinant is consulted. On the zero ring the
/// single class is its own inverse.
pub fn unit_table(field: QuadraticField, d: u64, cap: u64) -> Result<Vec<bool>> {
    check_oracle_budget(d, cap)?;
    let ring = ResidueRing::new(field, d)?;
    if d == 1 {
        return Ok(vec![true]);
    }
    let size = ring.cardinality() as usize;
    // 0 = undecided, 1 = unit, 2 = not a unit
    let mut status = vec![0u8; size];
    status[0] = 2;
    for i in 1..size {
        if status[i] != 0 {
            continue;
        }
        let x = ring.nth(i as u64);
        status[i] = 2;
        for j in 1..size {
            let y = ring.nth(j as u64);
            let (a, b) = ring.mul_coords(x.a, x.b, y.a, y.b);
            if a == 1 && b == 0 {
                status[i] = 1;
                status[j] = 1;
                break;
            }
            if a == 0 && b == 0 {
                break;
            }
        }
    }
    Ok(status.into_iter().map(|s| s == 1).collect())
}

/// `phi_K(d)` by exhaustive search in `Z_d|_K`; see [`unit_table`].
pub fn phi_oracle(field: QuadraticField, d: u64, cap: u64) -> Result<u64> {
    Ok(unit_table(field, d, cap)?
        .into_iter()
        .filter(|&u| u)
        .count() as u64)
}

/// `phi_K(p^e)` from the splitting type of `p`.
pub fn local_phi(field: QuadraticField, p: u64, e: u32) -> u64 {
    debug_assert!(e >= 1);
    if field.is_rationals() {
        return p.pow(e - 1) * (p - 1);
    }
    match splitting_type(field, p).expect("p prime, degree two") {
        SplittingType::Inert => p.pow(2 * e - 2) * (p * p - 1),
        SplittingType::Split => {
            let t = p.pow(e - 1) * (p - 1);
            t * t
        }
        SplittingType::Ramified => p.pow(2 * e - 1) * (p - 1),
    }
}

/// `phi_K(d)` as the product of local factors over `d`'s factorization.
pub fn phi_from_factors(field: QuadraticField, factors: &[PrimePower]) -> u64 {
    factors
        .iter()
        .map(|&(p, e)| local_phi(field, p, e))
        .product()
}

/// Closed-form `phi_K` with memoized factorizations and values.
///
/// Caches sit behind mutexes so one engine can serve parallel scans.
#[derive(Debug)]
pub struct TotientEngine {
    field: QuadraticField,
    factor_cache: Mutex<HashMap<u64, Vec<PrimePower>>>,
    phi_cache: Mutex<HashMap<u64, u64>>,
}

impl TotientEngine {
    pub fn new(field: QuadraticField) -> Self {
        Self {
            field,
            factor_cache: Mutex::new(HashMap::new()),
            phi_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn field(&self) -> QuadraticField {
        self.field
    }

    pub fn factorize(&self, d: u64) -> Result<Vec<PrimePower>> {
        check_modulus(d)?;
        if let Some(f) = self.factor_cache.lock().unwrap().get(&d) {
            return Ok(f.clone());
        }
        let f = arith::factorize(d);
        self.factor_cache.lock().unwrap().insert(d, f.clone());
        Ok(f)
    }

    pub fn phi_fast(&self, d: u64) -> Result<u64> {
        check_modulus(d)?;
        if let Some(&v) = self.phi_cache.lock().unwrap().get(&d) {
            return Ok(v);
        }
        let v = phi_from_factors(self.field, &self.factorize(d)?);
        self.phi_cache.lock().unwrap().insert(d, v);
        Ok(v)
    }

    pub fn cached_len(&self) -> usize {
        self.phi_cache.lock().unwrap().len()
    }
}

/// Reduce `x` (mod `m*n`) componentwise to `(x mod m, x mod n)`.
pub fn crt_map(
    field: QuadraticField,
    m: u64,
    n: u64,
    x: &ResidueClass,
) -> Result<(ResidueClass, ResidueClass)> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidArgument(format!(
            "crt moduli must be >= 2, got {m}, {n}"
        )));
    }
    if arith::gcd(m, n) != 1 {
        return Err(Error::NotCoprime(m, n));
    }
    let mn = m.checked_mul(n).ok_or(Error::Overflow("crt modulus"))?;
    if x.field != field {
        return Err(Error::FieldMismatch(x.field.m(), field.m()));
    }
    if x.d != mn {
        return Err(Error::ModulusMismatch(x.d, mn));
    }
    let left = ResidueRing::new(field, m)?;
    let right = ResidueRing::new(field, n)?;
    let (a, b) = (x.a as i128, x.b as i128);
    Ok((left.class(a, b), right.class(a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gauss() -> QuadraticField {
        QuadraticField::new(-1).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_residues(gauss(), 5, 1000).unwrap().count(), 25);
        assert_eq!(enumerate_residues(gauss(), 1, 1000).unwrap().count(), 1);
        assert_eq!(
            enumerate_residues(QuadraticField::rationals(), 7, 1000)
                .unwrap()
                .count(),
            7
        );
        assert!(matches!(
            enumerate_residues(gauss(), 1001, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn unit_examples() {
        let r3 = ResidueRing::new(gauss(), 3).unwrap();
        assert!(is_unit(&r3.class(1, 1)));
        let r5 = ResidueRing::new(gauss(), 5).unwrap();
        assert!(!is_unit(&r5.class(2, 1)));
        assert!(is_unit(&r5.one()));
        let r1 = ResidueRing::new(gauss(), 1).unwrap();
        assert!(!is_unit(&r1.one()));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(phi_oracle(gauss(), 3, 1000).unwrap(), 8);
        assert_eq!(phi_oracle(gauss(), 5, 1000).unwrap(), 16);
        assert_eq!(phi_oracle(gauss(), 2, 1000).unwrap(), 2);
        assert_eq!(phi_oracle(gauss(), 1, 1000).unwrap(), 1);
        assert_eq!(
            phi_oracle(QuadraticField::rationals(), 12, 1000).unwrap(),
            4
        );
    }

    #[test]
    fn fast_examples() {
        let engine = TotientEngine::new(gauss());
        assert_eq!(engine.phi_fast(21).unwrap(), 384);
        assert_eq!(engine.phi_fast(15).unwrap(), 128);
        assert_eq!(engine.phi_fast(1).unwrap(), 1);
        assert_eq!(engine.phi_fast(0), Err(Error::ZeroModulus));
        assert_eq!(engine.cached_len(), 3);
        assert_eq!(engine.phi_fast(21).unwrap(), 384);
    }

    #[test]
    fn crt_examples() {
        let ring = ResidueRing::new(gauss(), 15).unwrap();
        let (l, r) = crt_map(gauss(), 3, 5, &ring.class(7, 7)).unwrap();
        assert_eq!((l.a(), l.b(), r.a(), r.b()), (1, 1, 2, 2));
        let (l, r) = crt_map(gauss(), 3, 5, &ring.zero()).unwrap();
        assert!(l.is_zero() && r.is_zero());
        let ring24 = ResidueRing::new(gauss(), 24).unwrap();
        assert_eq!(
            crt_map(gauss(), 4, 6, &ring24.zero()),
            Err(Error::NotCoprime(4, 6))
        );
    }

    #[test]
    fn ring_ops_reject_mixed_moduli() {
        let r3 = ResidueRing::new(gauss(), 3).unwrap();
        let r5 = ResidueRing::new(gauss(), 5).unwrap();
        assert_eq!(
            r3.mul(&r3.one(), &r5.one()),
            Err(Error::ModulusMismatch(5, 3))
        );
    }
}
