//! Exact rational arithmetic and the combinatorial primitives shared by every
//! other module: rising factorials, binomial coefficients, factorials and
//! single-prime residue reduction.

use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator {denominator} is divisible by p = {p}")]
    DenominatorDivisibleByP { denominator: BigInt, p: u64 },
    #[error("cannot parse `{0}` as a rational")]
    Parse(String),
}

/// Arbitrary-precision rational number, always stored reduced with a positive
/// denominator. The scalar type of the whole crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numerator: i64, denominator: i64) -> Self {
        assert!(denominator != 0, "rational with zero denominator");
        Rational(BigRational::new(BigInt::from(numerator), BigInt::from(denominator)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn from_parts(numerator: BigInt, denominator: BigInt) -> Result<Self, ExactError> {
        if denominator.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numerator, denominator)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as an `i64` when it is an integer that fits; `None` otherwise.
    pub fn to_i64(&self) -> Option<i64> {
        if !self.is_integer() {
            return None;
        }
        i64::try_from(self.0.numer().clone()).ok()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ExactError> {
        if other.is_zero() {
            Err(ExactError::DivisionByZero)
        } else {
            Ok(Rational(&self.0 / &other.0))
        }
    }

    /// Integer power; negative exponents invert (zero base with negative
    /// exponent is a division-by-zero panic).
    pub fn pow(&self, exp: i32) -> Self {
        Rational(self.0.pow(exp))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rational {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigRational::from_str(s)
            .map(Rational)
            .map_err(|_| ExactError::Parse(s.to_string()))
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {
        $(impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational(BigRational::from_integer(BigInt::from(n)))
            }
        })*
    };
}

from_int!(i32, i64, u32, u64);

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div<&Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(self.0 / &rhs.0)
    }
}

impl Div<Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(&self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl DivAssign<&Rational> for Rational {
    fn div_assign(&mut self, rhs: &Rational) {
        assert!(!rhs.is_zero(), "rational division by zero");
        self.0 /= &rhs.0;
    }
}

/// Residue class `value mod modulus` for a prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidueClass {
    pub value: u64,
    pub modulus: u64,
}

impl ResidueClass {
    pub fn new(value: u64, modulus: u64) -> Self {
        assert!(modulus > 1, "modulus must exceed 1");
        ResidueClass { value: value % modulus, modulus }
    }

    pub fn add(&self, other: &ResidueClass) -> ResidueClass {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        ResidueClass::new(
            ((self.value as u128 + other.value as u128) % self.modulus as u128) as u64,
            self.modulus,
        )
    }

    pub fn mul(&self, other: &ResidueClass) -> ResidueClass {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        ResidueClass::new(
            ((self.value as u128 * other.value as u128) % self.modulus as u128) as u64,
            self.modulus,
        )
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

/// Rising factorial `(a)_m = a (a+1) ... (a+m-1)`; the empty product `(a)_0` is 1.
///
/// Computed as a left-to-right product, so zero factors simply produce the
/// exact value 0 and nonpositive arguments need no special-casing.
pub fn rising_factorial(a: &Rational, m: u32) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    let one = Rational::one();
    for _ in 0..m {
        acc *= &factor;
        factor += &one;
    }
    acc
}

/// True iff `(a)_m` contains a zero factor, i.e. `a` is an integer in `[-m+1, 0]`.
pub fn rising_factorial_is_zero(a: &Rational, m: u32) -> bool {
    if m == 0 || !a.is_integer() {
        return false;
    }
    let lower = -Rational::from(i64::from(m) - 1);
    *a <= Rational::zero() && *a >= lower
}

/// Binomial coefficient `C(n, k)`, with `C(n, k) = 0` for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= BigInt::from(n - j);
        acc /= BigInt::from(j + 1);
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for j in 2..=n {
        acc *= BigInt::from(j);
    }
    acc
}

/// Reduce a rational `n/d` modulo a prime `p` as `n * d^{-1} mod p`.
///
/// Errors with [`ExactError::DenominatorDivisibleByP`] when `p | d`; callers
/// sampling random instances reject and resample on that error.
pub fn reduce_mod_p(x: &Rational, p: u64) -> Result<ResidueClass, ExactError> {
    let p_big = BigInt::from(p);
    let d = x.denom().mod_floor(&p_big);
    if d.is_zero() {
        return Err(ExactError::DenominatorDivisibleByP { denominator: x.denom().clone(), p });
    }
    let n = x.numer().mod_floor(&p_big);
    let n = u64::try_from(n).expect("mod_floor result fits in u64");
    let d = u64::try_from(d).expect("mod_floor result fits in u64");
    let d_inv = mod_inverse(d, p);
    Ok(ResidueClass::new(((n as u128 * d_inv as u128) % p as u128) as u64, p))
}

/// Modular inverse by extended Euclid; `b` must be coprime to `m`.
fn mod_inverse(b: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (b as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "arguments not coprime");
    old_s.rem_euclid(m as i128) as u64
}

/// Convenience constructor used pervasively in tests.
pub fn rational(numerator: i64, denominator: i64) -> Rational {
    Rational::new(numerator, denominator)
}
