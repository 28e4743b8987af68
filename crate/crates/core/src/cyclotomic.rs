//! Cyclotomic polynomials over Q, elementary symmetric values read off
//! coefficients, and the reciprocal vanishing check for `e_k` / `e_{n-k}`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Coeff, PrimeFieldElem};
use crate::qpoly::{factor_over_rationals, QPoly};

static MEMO: OnceLock<RwLock<HashMap<u64, QPoly>>> = OnceLock::new();

fn memo() -> &'static RwLock<HashMap<u64, QPoly>> {
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Φ_n. Uses `Φ_n(X) = Φ_rad(n)(X^(n / rad n))` and, for squarefree
/// `n = p m` with `p` prime, `Φ_n(X) = Φ_m(X^p) / Φ_m(X)`.
pub fn cyclotomic_poly(n: u64) -> Result<QPoly> {
    if n == 0 {
        return Err(Error::domain("cyclotomic index must be positive"));
    }
    if let Some(p) = memo().read().unwrap().get(&n) {
        return Ok(p.clone());
    }
    let primes = prime_factors(n);
    let rad: u64 = primes.iter().product();
    let poly = if n == 1 {
        QPoly::from_ints([-1, 1])
    } else if rad != n {
        let k = usize::try_from(n / rad).map_err(|_| Error::ResourceLimit(format!("Φ_{n}")))?;
        cyclotomic_poly(rad)?.compose_power(k)
    } else {
        let p = *primes.last().unwrap();
        let base = cyclotomic_poly(n / p)?;
        let k = usize::try_from(p).map_err(|_| Error::ResourceLimit(format!("Φ_{n}")))?;
        base.compose_power(k)
            .exact_div(&base)
            .expect("Φ_m divides Φ_m(X^p)")
    };
    memo().write().unwrap().insert(n, poly.clone());
    Ok(poly)
}

/// Distinct prime factors in increasing order.
fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Every `n` with `φ(n) <= d`, increasing. Relies on `n / φ(n) < 8` for
/// `n < 10^9` (Rosser and Schoenfeld), so `n <= 8d + 30` suffices there.
pub(crate) fn indices_up_to_degree(d: u64) -> impl Iterator<Item = u64> {
    (1..=8 * d + 30).filter(move |&n| euler_phi(n) <= d)
}

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// All `n` with `φ(n) = d`, found by scanning `n <= 2d^2 + 2`
/// (complete since `φ(n) >= sqrt(n/2)`).
pub fn inverse_totient(d: u64) -> BTreeSet<u64> {
    if d == 0 {
        return BTreeSet::new();
    }
    let bound = 2 * d * d + 2;
    (1..=bound).filter(|&n| euler_phi(n) == d).collect()
}

/// The index `n` with `p = Φ_n`, or `None` if `p` is not cyclotomic.
///
/// `p` must be monic and irreducible over Q.
pub fn classify_cyclotomic(p: &QPoly) -> Result<Option<u64>> {
    if !p.is_monic() || p.degree() == Some(0) {
        return Err(Error::domain(format!("{p} is not a monic non-constant polynomial")));
    }
    let fac = factor_over_rationals(p)?;
    if fac.factors.len() != 1 || fac.factors[0].1 != 1 {
        return Err(Error::domain(format!("{p} is reducible over Q")));
    }
    Ok(classify_irreducible(p))
}

/// Same as [`classify_cyclotomic`] without re-checking irreducibility.
pub(crate) fn classify_irreducible(p: &QPoly) -> Option<u64> {
    let deg = p.degree()? as u64;
    inverse_totient(deg)
        .into_iter()
        .find(|&n| cyclotomic_poly(n).is_ok_and(|c| &c == p))
}

/// A product `prod Φ_n^e`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CyclotomicProduct {
    pub components: Vec<(u64, usize)>,
}

impl CyclotomicProduct {
    pub fn new(components: Vec<(u64, usize)>) -> Self {
        CyclotomicProduct { components }
    }

    pub fn expand(&self) -> Result<QPoly> {
        let mut acc = QPoly::one();
        for &(n, e) in &self.components {
            acc = &acc * &cyclotomic_poly(n)?.pow(e);
        }
        Ok(acc)
    }

    /// `sum e * φ(n)`
    pub fn degree(&self) -> u64 {
        self.components
            .iter()
            .map(|&(n, e)| e as u64 * euler_phi(n))
            .sum()
    }
}

/// Field values that [`elementary_symmetric`] can work with.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn negate(&self) -> Self;
}

impl Scalar for Coeff {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl Scalar for PrimeFieldElem {
    fn is_zero(&self) -> bool {
        self.value() == 0
    }
    fn is_one(&self) -> bool {
        self.value() == 1
    }
    fn negate(&self) -> Self {
        -*self
    }
}

/// `(e_0, ..., e_n)` for the roots of a monic degree-`n` polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricVector<T> {
    values: Vec<T>,
}

impl<T: Scalar> SymmetricVector<T> {
    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Number of roots `n`.
    pub fn degree(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, k: usize) -> Option<&T> {
        self.values.get(k)
    }
}

/// Vieta: `e_k = (-1)^k * coeff(X^{n-k})`. Coefficients are given constant
/// term first. Over F_2 the sign is applied in the field and so vanishes.
pub fn elementary_symmetric<T: Scalar>(coeffs: &[T]) -> Result<SymmetricVector<T>> {
    let lc = coeffs
        .last()
        .ok_or_else(|| Error::domain("zero polynomial has no roots"))?;
    if !lc.is_one() {
        return Err(Error::domain(format!("leading coefficient {lc} is not 1")));
    }
    let n = coeffs.len() - 1;
    let values = (0..=n)
        .map(|k| {
            let c = &coeffs[n - k];
            if k % 2 == 1 {
                c.negate()
            } else {
                c.clone()
            }
        })
        .collect();
    Ok(SymmetricVector { values })
}

/// Outcome of testing "e_k = 0 implies e_{n-k} = 0" for every `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocalReport {
    pub holds: bool,
    /// Every `k` with `e_k = 0` but `e_{n-k} != 0`, ascending.
    pub witnesses: Vec<usize>,
}

pub fn reciprocal_vanishing_check<T: Scalar>(coeffs: &[T]) -> Result<ReciprocalReport> {
    let e = elementary_symmetric(coeffs)?;
    let n = e.degree();
    if n == 0 {
        return Err(Error::domain("polynomial must have degree at least 1"));
    }
    let witnesses: Vec<usize> = (0..=n)
        .filter(|&k| e.values[k].is_zero() && !e.values[n - k].is_zero())
        .collect();
    Ok(ReciprocalReport {
        holds: witnesses.is_empty(),
        witnesses,
    })
}

/// Reduces a polynomial over Q coefficient-wise into F_p.
pub fn reduce_mod_prime(f: &QPoly, p: u64) -> Result<Vec<PrimeFieldElem>> {
    let mut v = f
        .coeffs()
        .iter()
        .map(|c| PrimeFieldElem::from_rational(c, p))
        .collect::<Result<Vec<_>>>()?;
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    Ok(v)
}
