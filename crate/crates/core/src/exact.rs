//! Exact arithmetic substrate: big integers, non-negative reduced rationals used
//! as exponents, signed rationals used as coefficients, and small prime fields.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
/// Signed exact rational; the coefficient type of every polynomial.
pub type Coeff = BigRational;

/// A reduced non-negative rational number `n/d`.
///
/// Exponents of Puiseux polynomials and elements of Puiseux monoids live here.
/// The representation is always reduced and zero is `0/1`, so structural
/// equality is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat(BigRational);

impl Rat {
    /// Reduces `num/den`. Fails when `den` is zero or the quotient is negative.
    pub fn new(num: impl Into<Int>, den: impl Into<Int>) -> Result<Rat> {
        let num = num.into();
        let den = den.into();
        if den.is_zero() {
            return Err(Error::domain("zero denominator"));
        }
        let r = BigRational::new(num, den);
        Rat::from_rational(r)
    }

    pub fn from_rational(r: BigRational) -> Result<Rat> {
        if r.is_negative() {
            return Err(Error::domain(format!("{r} is negative")));
        }
        Ok(Rat(r))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    pub fn from_integer(n: u64) -> Rat {
        Rat(BigRational::from_integer(n.into()))
    }

    /// n(r)
    pub fn numer(&self) -> &Int {
        self.0.numer()
    }

    /// d(r)
    pub fn denom(&self) -> &Int {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }

    /// Integer value if this is an integer that fits into `u64`.
    pub fn to_u64(&self) -> Option<u64> {
        if self.is_integer() {
            self.numer().to_u64()
        } else {
            None
        }
    }

    /// `self - other`, or `None` when the result would be negative.
    pub fn checked_sub(&self, other: &Rat) -> Option<Rat> {
        let d = &self.0 - &other.0;
        if d.is_negative() {
            None
        } else {
            Some(Rat(d))
        }
    }

    pub fn recip(&self) -> Result<Rat> {
        if self.is_zero() {
            return Err(Error::domain("reciprocal of zero"));
        }
        Ok(Rat(self.0.recip()))
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::zero()
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(&self.0, f)
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Writes `a/b`, omitting `/1`.
pub fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_to_string(r: &BigRational) -> String {
    struct D<'a>(&'a BigRational);
    impl fmt::Display for D<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            fmt_rational(self.0, f)
        }
    }
    D(r).to_string()
}

/// Parses `a`, `-a` or `a/b` into a signed rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse {
        offset: 0,
        message: format!("invalid rational `{s}`"),
    };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Semantic {
            offset: 0,
            message: "zero denominator".into(),
        });
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rat> {
        Rat::from_rational(parse_rational(s)?)
    }
}

impl Add for &Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        Rat(&self.0 + &rhs.0)
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0 + rhs.0)
    }
}

impl Mul for &Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        Rat(&self.0 * &rhs.0)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat(self.0 * rhs.0)
    }
}

impl From<u64> for Rat {
    fn from(n: u64) -> Rat {
        Rat::from_integer(n)
    }
}

/// `reduce_rat`: the reduced form of `num/den`.
pub fn reduce_rat(num: impl Into<Int>, den: impl Into<Int>) -> Result<Rat> {
    Rat::new(num, den)
}

/// lcm{ d(r) : r in values }
pub fn lcm_denominators<'a, I>(values: I) -> Result<Int>
where
    I: IntoIterator<Item = &'a Rat>,
{
    let mut it = values.into_iter().peekable();
    if it.peek().is_none() {
        return Err(Error::domain("lcm of denominators of an empty set"));
    }
    Ok(it.fold(Int::one(), |acc, r| acc.lcm(r.denom())))
}

pub fn gcd_all<'a, I: IntoIterator<Item = &'a Int>>(values: I) -> Int {
    values.into_iter().fold(Int::zero(), |acc, v| acc.gcd(v))
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Largest modulus supported for prime-field arithmetic.
pub const MAX_FIELD_PRIME: u64 = 1 << 31;

/// An element of the prime field F_p for a small prime `p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElem {
    value: u64,
    modulus: u64,
}

impl PrimeFieldElem {
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        check_field_prime(modulus)?;
        Ok(PrimeFieldElem {
            value: value.rem_euclid(modulus as i64) as u64,
            modulus,
        })
    }

    /// Reduces a rational modulo `p`; fails when the denominator is divisible by `p`.
    pub fn from_rational(r: &BigRational, modulus: u64) -> Result<Self> {
        check_field_prime(modulus)?;
        let p = BigInt::from(modulus);
        let n = r.numer().mod_floor(&p).to_u64().unwrap();
        let d = r.denom().mod_floor(&p).to_u64().unwrap();
        if d == 0 {
            return Err(Error::domain(format!(
                "denominator of {} is not invertible modulo {modulus}",
                rational_to_string(r)
            )));
        }
        let n = PrimeFieldElem { value: n, modulus };
        let d = PrimeFieldElem { value: d, modulus };
        Ok(n * d.inverse()?)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = PrimeFieldElem {
            value: 1 % self.modulus,
            modulus: self.modulus,
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inverse(self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::domain("inverse of zero in a prime field"));
        }
        Ok(self.pow(self.modulus - 2))
    }
}

fn check_field_prime(p: u64) -> Result<()> {
    if p > MAX_FIELD_PRIME || !is_prime_u64(p) {
        return Err(Error::domain(format!(
            "{p} is not a prime no larger than 2^31"
        )));
    }
    Ok(())
}

impl fmt::Debug for PrimeFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for PrimeFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for PrimeFieldElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        PrimeFieldElem {
            value: (self.value + rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Sub for PrimeFieldElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        PrimeFieldElem {
            value: (self.value + self.modulus - rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Mul for PrimeFieldElem {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        PrimeFieldElem {
            value: self.value * rhs.value % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Neg for PrimeFieldElem {
    type Output = Self;
    fn neg(self) -> Self {
        PrimeFieldElem {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

/// Compares a rational against zero; handy where `Signed` is not in scope.
pub fn sign(r: &BigRational) -> Ordering {
    r.numer().sign().cmp(&num_bigint::Sign::NoSign)
}
