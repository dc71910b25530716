//! Quadratic fields with class number one and exact arithmetic in their
//! rings of integers, in coordinates over the integral basis `{1, w}`.

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};

/// All imaginary quadratic fields with class number one.
pub const IMAGINARY_WHITELIST: [i64; 9] = [-1, -2, -3, -7, -11, -19, -43, -67, -163];

/// Real quadratic fields below 30 with class number one.
pub const REAL_WHITELIST: [i64; 11] = [2, 3, 5, 6, 7, 11, 13, 17, 19, 21, 29];

/// Shape of the second integral basis element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisShape {
    /// `w = sqrt m`, used when `m = 2, 3 (mod 4)`.
    PlainRoot,
    /// `w = (1 + sqrt m) / 2`, used when `m = 1 (mod 4)`.
    HalfTrace,
}

/// `Q(sqrt m)` with `O_K` a UFD, or `Q` itself when `m = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticField {
    m: i64,
    degree: u32,
    disc: i64,
    shape: BasisShape,
}

impl QuadraticField {
    pub fn new(m: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroRadicand);
        }
        if m == 1 {
            return Ok(Self::rationals());
        }
        if !arith::is_squarefree(m.unsigned_abs()) {
            return Err(Error::NotSquarefree(m));
        }
        if !IMAGINARY_WHITELIST.contains(&m) && !REAL_WHITELIST.contains(&m) {
            return Err(Error::UnsupportedField(m));
        }
        let (disc, shape) = if m.rem_euclid(4) == 1 {
            (m, BasisShape::HalfTrace)
        } else {
            (4 * m, BasisShape::PlainRoot)
        };
        Ok(Self {
            m,
            degree: 2,
            disc,
            shape,
        })
    }

    /// The degenerate degree-one case `K = Q`.
    pub const fn rationals() -> Self {
        Self {
            m: 1,
            degree: 1,
            disc: 1,
            shape: BasisShape::PlainRoot,
        }
    }

    /// Every supported field, `Q` first, then imaginary, then real.
    pub fn whitelist() -> impl Iterator<Item = QuadraticField> {
        std::iter::once(1)
            .chain(IMAGINARY_WHITELIST)
            .chain(REAL_WHITELIST)
            .map(|m| Self::new(m).expect("whitelisted"))
    }

    /// Every supported field of degree two.
    pub fn quadratic_whitelist() -> impl Iterator<Item = QuadraticField> {
        Self::whitelist().filter(|k| k.degree() == 2)
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_rationals(&self) -> bool {
        self.degree == 1
    }

    pub fn disc(&self) -> i64 {
        self.disc
    }

    pub fn basis_shape(&self) -> BasisShape {
        self.shape
    }

    /// `(t, c)` with `w^2 = t*w + c`.
    pub fn omega_relation(&self) -> (i64, i64) {
        match self.shape {
            BasisShape::PlainRoot => (0, self.m),
            BasisShape::HalfTrace => (1, (self.m - 1) / 4),
        }
    }

    pub fn element(&self, a: i128, b: i128) -> Result<AlgInt> {
        if self.is_rationals() && b != 0 {
            return Err(Error::InvalidArgument(format!(
                "element of Q must have b = 0, got b = {b}"
            )));
        }
        Ok(AlgInt { a, b, field: *self })
    }

    pub fn one(&self) -> AlgInt {
        AlgInt {
            a: 1,
            b: 0,
            field: *self,
        }
    }

    /// The basis element `w`. Not defined over `Q`.
    pub fn omega(&self) -> Result<AlgInt> {
        self.element(0, 1)
    }

    /// `d^n - 1`.
    pub fn max_totient(&self, d: u64) -> u64 {
        d.pow(self.degree) - 1
    }
}

impl fmt::Display for QuadraticField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree {
            1 => write!(f, "Q"),
            _ if self.m == -1 => write!(f, "Q(i)"),
            _ => write!(f, "Q(sqrt({}))", self.m),
        }
    }
}

/// `a + b*w` in `O_K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgInt {
    a: i128,
    b: i128,
    field: QuadraticField,
}

fn checked(v: Option<i128>, op: &'static str) -> Result<i128> {
    v.ok_or(Error::Overflow(op))
}

impl AlgInt {
    pub fn a(&self) -> i128 {
        self.a
    }

    pub fn b(&self) -> i128 {
        self.b
    }

    pub fn field(&self) -> QuadraticField {
        self.field
    }

    fn same_field(&self, other: &AlgInt) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.m, other.field.m));
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgInt) -> Result<AlgInt> {
        self.same_field(other)?;
        Ok(AlgInt {
            a: checked(self.a.checked_add(other.a), "add")?,
            b: checked(self.b.checked_add(other.b), "add")?,
            field: self.field,
        })
    }

    pub fn mul(&self, other: &AlgInt) -> Result<AlgInt> {
        self.same_field(other)?;
        let (t, c) = self.field.omega_relation();
        let (t, c) = (t as i128, c as i128);
        let bb = checked(self.b.checked_mul(other.b), "mul")?;
        let aa = checked(self.a.checked_mul(other.a), "mul")?;
        let ab = checked(self.a.checked_mul(other.b), "mul")?;
        let ba = checked(self.b.checked_mul(other.a), "mul")?;
        let a = checked(bb.checked_mul(c).and_then(|v| v.checked_add(aa)), "mul")?;
        let b = checked(
            ab.checked_add(ba)
                .and_then(|v| v.checked_add(bb.checked_mul(t)?)),
            "mul",
        )?;
        Ok(AlgInt {
            a,
            b,
            field: self.field,
        })
    }

    /// Field norm down to `Q`. Over `Q` this is `a` itself.
    pub fn norm(&self) -> Result<i128> {
        if self.field.is_rationals() {
            return Ok(self.a);
        }
        // a^2 + t*a*b - c*b^2, which is a^2 - m b^2 or a^2 + ab + b^2 (1-m)/4
        let (t, c) = self.field.omega_relation();
        let aa = checked(self.a.checked_mul(self.a), "norm")?;
        let ab = checked(self.a.checked_mul(self.b), "norm")?;
        let bb = checked(self.b.checked_mul(self.b), "norm")?;
        let tab = checked(ab.checked_mul(t as i128), "norm")?;
        let cbb = checked(bb.checked_mul(c as i128), "norm")?;
        checked(aa.checked_add(tab).and_then(|v| v.checked_sub(cbb)), "norm")
    }

    /// Matrix of multiplication by `self`; column `j` holds the coordinates
    /// of `self * w_j`.
    pub fn mult_matrix(&self) -> Result<[[i128; 2]; 2]> {
        if self.field.is_rationals() {
            return Err(Error::DegreeOne);
        }
        let (t, c) = self.field.omega_relation();
        // self * w = b*c + (a + b*t) w
        let top = checked(self.b.checked_mul(c as i128), "mult_matrix")?;
        let bottom = checked(
            self.b
                .checked_mul(t as i128)
                .and_then(|v| v.checked_add(self.a)),
            "mult_matrix",
        )?;
        Ok([[self.a, top], [self.b, bottom]])
    }
}

impl fmt::Display for AlgInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_rationals() {
            return write!(f, "{}", self.a);
        }
        let sym = match (self.field.m, self.field.shape) {
            (-1, _) => "i",
            (_, BasisShape::PlainRoot) => "sqrt",
            (_, BasisShape::HalfTrace) => "w",
        };
        write!(f, "{} + {}{}", self.a, self.b, sym)
    }
}
