//! Dense univariate polynomials over Q and their factorization.

mod factor;
mod hensel;
pub(crate) mod modp;
pub(crate) mod zpoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{fmt_rational, Coeff, Int};

pub use factor::{factor_over_rationals, QFactorization};

/// A polynomial in `Q[X]`; `coeffs[i]` is the coefficient of `X^i`.
///
/// The highest stored coefficient is never zero, so the zero polynomial is
/// the empty vector and `degree = len - 1` otherwise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Coeff>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Coeff>) -> QPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// From integer coefficients, constant term first.
    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> QPoly {
        QPoly::new(
            coeffs
                .into_iter()
                .map(|c| Coeff::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn from_big_ints(coeffs: &[Int]) -> QPoly {
        QPoly::new(coeffs.iter().cloned().map(Coeff::from_integer).collect())
    }

    pub fn zero() -> QPoly {
        QPoly::default()
    }

    pub fn one() -> QPoly {
        QPoly::constant(Coeff::one())
    }

    pub fn x() -> QPoly {
        QPoly::monomial(Coeff::one(), 1)
    }

    pub fn constant(c: Coeff) -> QPoly {
        QPoly::new(vec![c])
    }

    pub fn monomial(c: Coeff, k: usize) -> QPoly {
        let mut v = vec![Coeff::zero(); k + 1];
        v[k] = c;
        QPoly::new(v)
    }

    /// `X^n - 1`
    pub fn x_pow_minus_one(n: usize) -> QPoly {
        let mut v = vec![Coeff::zero(); n + 1];
        v[0] = -Coeff::one();
        v[n] += Coeff::one();
        QPoly::new(v)
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Coeff> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Coeff {
        self.coeffs.get(i).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Coeff> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Lowest index with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Coeff) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Coeff::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Coeff) -> Coeff {
        self.coeffs
            .iter()
            .rev()
            .fold(Coeff::zero(), |acc, c| acc * x + c)
    }

    /// `f(X^k)`
    pub fn compose_power(&self, k: usize) -> QPoly {
        assert!(k > 0);
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![Coeff::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        QPoly::new(v)
    }

    pub fn pow(&self, e: usize) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `poly_divrem`: `self = q*g + r` with `deg r < deg g`.
    pub fn divrem(&self, g: &QPoly) -> Result<(QPoly, QPoly)> {
        let dg = g
            .degree()
            .ok_or_else(|| Error::domain("division by the zero polynomial"))?;
        let lc_inv = g.coeffs[dg].recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dg {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut q = vec![Coeff::zero(); r.len() - dg];
        for i in (dg..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let c = &r[i] * &lc_inv;
            for (j, gj) in g.coeffs.iter().enumerate() {
                let k = i - dg + j;
                r[k] -= &c * gj;
            }
            q[i - dg] = c;
        }
        r.truncate(dg);
        Ok((QPoly::new(q), QPoly::new(r)))
    }

    /// Exact quotient, or `None` when `g` does not divide `self`.
    pub fn exact_div(&self, g: &QPoly) -> Option<QPoly> {
        match self.divrem(g) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, f: &QPoly) -> bool {
        f.exact_div(self).is_some()
    }

    /// Splits into a rational content and a primitive integer polynomial with
    /// positive leading coefficient: `self = content * primitive`.
    pub fn primitive_int_part(&self) -> (Coeff, Vec<Int>) {
        if self.is_zero() {
            return (Coeff::zero(), Vec::new());
        }
        let den = self
            .coeffs
            .iter()
            .fold(Int::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| (c * Coeff::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(Int::zero(), |acc, c| acc.gcd(c));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (Coeff::new(g, den), prim)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

/// `poly_gcd`: monic greatest common divisor; fails when both inputs are zero.
pub fn poly_gcd(f: &QPoly, g: &QPoly) -> Result<QPoly> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::domain("gcd of two zero polynomials"));
    }
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let r = a.divrem(&b)?.1;
        a = b;
        // Keep intermediate coefficients small.
        b = r.monic();
    }
    Ok(a.monic())
}

pub fn poly_divrem(f: &QPoly, g: &QPoly) -> Result<(QPoly, QPoly)> {
    f.divrem(g)
}

/// Square-free decomposition `f = constant * prod part_i^{mult_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub constant: Coeff,
    /// Monic, squarefree, pairwise coprime parts with strictly increasing multiplicity.
    pub parts: Vec<(QPoly, usize)>,
}

/// Yun's algorithm over Q.
pub fn squarefree_decompose(f: &QPoly) -> Result<SquarefreeDecomposition> {
    let lc = f
        .leading()
        .cloned()
        .ok_or_else(|| Error::domain("square-free decomposition of zero"))?;
    let f = f.monic();
    let mut parts = Vec::new();
    if f.degree() == Some(0) {
        return Ok(SquarefreeDecomposition { constant: lc, parts });
    }
    let d = f.derivative();
    let a0 = poly_gcd(&f, &d)?;
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let mut c = d.exact_div(&a0).expect("gcd divides");
    let mut i = 1;
    loop {
        let dd = &c - &b.derivative();
        if b.degree() == Some(0) {
            break;
        }
        let a = poly_gcd(&b, &dd)?;
        if a.degree() != Some(0) {
            parts.push((a.clone(), i));
        }
        b = b.exact_div(&a).expect("gcd divides");
        c = dd.exact_div(&a).expect("gcd divides");
        i += 1;
    }
    Ok(SquarefreeDecomposition { constant: lc, parts })
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![Coeff::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly::new(v)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Renders in the same descending-exponent syntax the expression parser reads.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if k == 0 {
                fmt_rational(&abs, f)?;
                continue;
            }
            if !abs.is_one() {
                fmt_rational(&abs, f)?;
                f.write_str("*")?;
            }
            f.write_str("X")?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

/// Total order used for canonical output: degree first, then coefficients
/// from the constant term up.
pub(crate) fn canonical_cmp(a: &QPoly, b: &QPoly) -> std::cmp::Ordering {
    a.coeffs.len().cmp(&b.coeffs.len()).then_with(|| {
        for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
            match x.cmp(y) {
                std::cmp::Ordering::Equal => continue,
                o => return o,
            }
        }
        std::cmp::Ordering::Equal
    })
}
