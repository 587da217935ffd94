//! Exact arithmetic in the field Q(√3).
//!
//! Every coordinate produced by the library lives in this field: tile
//! vertices, supervectors, placement translations. Values are kept in
//! canonical form (rationals reduced after every operation), so equality is
//! plain componentwise comparison.

mod parse;
mod vec;

pub use parse::{parse_scalar, ParseError};
pub use vec::VecE;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
}

/// `r + s·√3` with rational `r` and `s`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QSqrt3 {
    r: Rational,
    s: Rational,
}

/// Binary field operation selector for [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies a field operation; division by zero is reported, never a panic.
pub fn arith(op: ArithOp, lhs: &QSqrt3, rhs: &QSqrt3) -> Result<QSqrt3, NumError> {
    match op {
        ArithOp::Add => Ok(lhs + rhs),
        ArithOp::Sub => Ok(lhs - rhs),
        ArithOp::Mul => Ok(lhs * rhs),
        ArithOp::Div => lhs.checked_div(rhs),
    }
}

pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl QSqrt3 {
    pub fn new(r: Rational, s: Rational) -> Self {
        QSqrt3 { r, s }
    }

    pub fn zero() -> Self {
        QSqrt3::default()
    }

    pub fn one() -> Self {
        QSqrt3::from_int(1)
    }

    /// √3 itself.
    pub fn sqrt3() -> Self {
        QSqrt3 {
            r: Rational::zero(),
            s: Rational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QSqrt3 {
            r: Rational::from_integer(n.into()),
            s: Rational::zero(),
        }
    }

    pub fn from_bigint(n: BigInt) -> Self {
        QSqrt3 {
            r: Rational::from_integer(n),
            s: Rational::zero(),
        }
    }

    /// `n/d + (m/e)·√3` from machine integers; panics on a zero denominator.
    pub fn from_ratios(n: i64, d: i64, m: i64, e: i64) -> Self {
        QSqrt3 {
            r: rat(n, d),
            s: rat(m, e),
        }
    }

    /// Rational part.
    pub fn r(&self) -> &Rational {
        &self.r
    }

    /// Coefficient of √3.
    pub fn s(&self) -> &Rational {
        &self.s
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.s.is_zero()
    }

    /// Conjugate `r − s√3`.
    pub fn conj(&self) -> Self {
        QSqrt3 {
            r: self.r.clone(),
            s: -&self.s,
        }
    }

    /// Field norm `r² − 3s²`; nonzero for every nonzero element.
    pub fn norm(&self) -> Rational {
        &self.r * &self.r - Rational::from_integer(3.into()) * &self.s * &self.s
    }

    pub fn recip(&self) -> Result<Self, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let n = self.norm();
        Ok(QSqrt3 {
            r: &self.r / &n,
            s: -(&self.s / &n),
        })
    }

    pub fn checked_div(&self, rhs: &QSqrt3) -> Result<Self, NumError> {
        if rhs.is_rational() {
            if rhs.r.is_zero() {
                return Err(NumError::DivisionByZero);
            }
            return Ok(QSqrt3 {
                r: &self.r / &rhs.r,
                s: &self.s / &rhs.r,
            });
        }
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QSqrt3 {
            r: &self.r * k,
            s: &self.s * k,
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        QSqrt3 {
            r: &self.r * k,
            s: &self.s * k,
        }
    }

    /// `self · √3 / 2` without a general multiplication.
    pub(crate) fn mul_half_sqrt3(&self) -> Self {
        let half = rat(1, 2);
        QSqrt3 {
            r: &self.s * Rational::from_integer(3.into()) * &half,
            s: &self.r * &half,
        }
    }

    pub(crate) fn half(&self) -> Self {
        self.scale(&rat(1, 2))
    }

    /// Exact sign of `r + s√3` as −1, 0 or +1.
    pub fn signum(&self) -> i32 {
        let sr = sign_of(&self.r);
        let ss = sign_of(&self.s);
        if sr == 0 || ss == 0 || sr == ss {
            return if sr != 0 { sr } else { ss };
        }
        // Opposite signs: the term with the larger square wins.
        let r2 = &self.r * &self.r;
        let s2 = Rational::from_integer(3.into()) * &self.s * &self.s;
        match r2.cmp(&s2) {
            Ordering::Greater => sr,
            Ordering::Less => ss,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.r.to_f64().unwrap_or(f64::NAN);
        let s = self.s.to_f64().unwrap_or(f64::NAN);
        r + s * 3f64.sqrt()
    }

    /// Integer value if this is an integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.s.is_zero() && self.r.is_integer() {
            Some(self.r.to_integer())
        } else {
            None
        }
    }
}

fn sign_of(q: &Rational) -> i32 {
    match q.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

impl PartialOrd for QSqrt3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt3 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl From<i64> for QSqrt3 {
    fn from(n: i64) -> Self {
        QSqrt3::from_int(n)
    }
}

impl From<Rational> for QSqrt3 {
    fn from(r: Rational) -> Self {
        QSqrt3 {
            r,
            s: Rational::zero(),
        }
    }
}

impl Neg for QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3 {
            r: -self.r,
            s: -self.s,
        }
    }
}

impl Neg for &QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3 {
            r: -&self.r,
            s: -&self.s,
        }
    }
}

impl Add<&QSqrt3> for &QSqrt3 {
    type Output = QSqrt3;
    fn add(self, rhs: &QSqrt3) -> QSqrt3 {
        QSqrt3 {
            r: &self.r + &rhs.r,
            s: &self.s + &rhs.s,
        }
    }
}

impl Sub<&QSqrt3> for &QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, rhs: &QSqrt3) -> QSqrt3 {
        QSqrt3 {
            r: &self.r - &rhs.r,
            s: &self.s - &rhs.s,
        }
    }
}

impl Mul<&QSqrt3> for &QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, rhs: &QSqrt3) -> QSqrt3 {
        let three = Rational::from_integer(3.into());
        QSqrt3 {
            r: &self.r * &rhs.r + three * &self.s * &rhs.s,
            s: &self.r * &rhs.s + &self.s * &rhs.r,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QSqrt3> for QSqrt3 {
            type Output = QSqrt3;
            fn $m(self, rhs: QSqrt3) -> QSqrt3 {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QSqrt3> for QSqrt3 {
            type Output = QSqrt3;
            fn $m(self, rhs: &QSqrt3) -> QSqrt3 {
                (&self).$m(rhs)
            }
        }
        impl $tr<QSqrt3> for &QSqrt3 {
            type Output = QSqrt3;
            fn $m(self, rhs: QSqrt3) -> QSqrt3 {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn write_rational(f: &mut fmt::Formatter<'_>, q: &Rational) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Canonical text form `p/q+r/s*r3`, omitting zero terms; `1·√3` is `r3`.
impl fmt::Display for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if !self.r.is_zero() {
            write_rational(f, &self.r)?;
        }
        if self.s.is_zero() {
            return Ok(());
        }
        let neg = self.s.is_negative();
        if neg {
            f.write_str("-")?;
        } else if !self.r.is_zero() {
            f.write_str("+")?;
        }
        let mag = self.s.abs();
        if !mag.is_one() {
            write_rational(f, &mag)?;
            f.write_str("*")?;
        }
        f.write_str("r3")
    }
}

impl fmt::Debug for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSqrt3({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64, m: i64, e: i64) -> QSqrt3 {
        QSqrt3::from_ratios(n, d, m, e)
    }

    #[test]
    fn square_of_one_plus_root3() {
        let x = q(1, 1, 1, 1);
        assert_eq!(&x * &x, q(4, 1, 2, 1));
    }

    #[test]
    fn rationalize_inverse_root3() {
        let got = arith(ArithOp::Div, &QSqrt3::one(), &QSqrt3::sqrt3()).unwrap();
        assert_eq!(got, q(0, 1, 1, 3));
    }

    #[test]
    fn v0_from_first_two_supervectors() {
        // 3·V1 − V2 with V1 = (1, 3√3), V2 = (3, 7√3)
        let three = QSqrt3::from_int(3);
        let x = arith(ArithOp::Sub, &three, &QSqrt3::from_int(3)).unwrap();
        let y = arith(ArithOp::Sub, &(&three * &q(0, 1, 3, 1)), &q(0, 1, 7, 1)).unwrap();
        assert!(x.is_zero());
        assert_eq!(y, q(0, 1, 2, 1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            arith(ArithOp::Div, &QSqrt3::one(), &QSqrt3::zero()),
            Err(NumError::DivisionByZero)
        );
        assert_eq!(QSqrt3::zero().recip(), Err(NumError::DivisionByZero));
    }

    #[test]
    fn signs() {
        assert_eq!(q(-2, 1, 2, 1).signum(), 1);
        assert_eq!(q(7, 1, -4, 1).signum(), 1);
        assert_eq!(q(-7, 1, 4, 1).signum(), -1);
        assert_eq!(QSqrt3::zero().signum(), 0);
        assert_eq!(q(0, 1, -1, 5).signum(), -1);
        assert!(q(97, 56, 0, 1) > QSqrt3::sqrt3());
        assert!(q(1732, 1000, 0, 1) < QSqrt3::sqrt3());
    }

    #[test]
    fn display_forms() {
        assert_eq!(QSqrt3::zero().to_string(), "0");
        assert_eq!(QSqrt3::sqrt3().to_string(), "r3");
        assert_eq!(q(3, 2, 1, 2).to_string(), "3/2+1/2*r3");
        assert_eq!(q(1, 1, -1, 1).to_string(), "1-r3");
        assert_eq!(q(0, 1, -2, 3).to_string(), "-2/3*r3");
        assert_eq!(q(-5, 1, 0, 1).to_string(), "-5");
    }

    #[test]
    fn norm_nonzero_for_nonzero() {
        assert!(!q(1, 1, 1, 1).norm().is_zero());
        assert_eq!(q(2, 1, 1, 1).recip().unwrap(), q(2, 1, -1, 1));
    }
}
