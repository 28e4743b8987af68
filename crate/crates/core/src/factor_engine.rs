//! Canonical factorization of elements of Q[Q_+] and exhaustive enumeration
//! of non-associate divisors inside Q[S] for finitely generated S.

use num_traits::{One, ToPrimitive};

use crate::cyclotomic::{classify_irreducible, cyclotomic_poly};
use crate::error::{Error, Result};
use crate::exact::{Coeff, Int, Rat};
use crate::monoid::{NumericalMonoid, PuiseuxMonoid};
use crate::poly::{canonical_cmp, PuiseuxPoly};
use crate::qpoly::zpoly::{self, ZPoly};
use crate::qpoly::{factor_over_rationals, QPoly};

/// Default cap on the number of candidate sub-multisets.
pub const DEFAULT_SUBSET_LIMIT: u64 = 1 << 20;

/// `f = c * X^r * prod Φ_n(X^{1/m})^e * prod q(X^{1/m})^l`.
///
/// The cyclotomic components are canonical only relative to `m`; a factor
/// like `Φ_1(X)` is never refined into `Φ_1(X^{1/2}) Φ_2(X^{1/2})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalFactorization {
    pub constant: Coeff,
    /// lcm of the denominators of the source support.
    pub clearing_denominator: u64,
    pub monomial_exponent: Rat,
    /// `(n, e)` sorted by `n`.
    pub cyclotomic: Vec<(u64, usize)>,
    /// Monic non-cyclotomic irreducibles of `Q[X]` with multiplicities.
    pub primes: Vec<(QPoly, usize)>,
}

pub fn canonical_factorization(f: &PuiseuxPoly) -> Result<CanonicalFactorization> {
    let (m, g) = f.clear_denominators()?;
    let fac = factor_over_rationals(&g)?;
    let x = QPoly::x();
    let mut monomial = 0usize;
    let mut cyclotomic = Vec::new();
    let mut primes = Vec::new();
    for (q, e) in fac.factors {
        if q == x {
            monomial = e;
        } else if let Some(n) = classify_irreducible(&q) {
            cyclotomic.push((n, e));
        } else {
            primes.push((q, e));
        }
    }
    cyclotomic.sort();
    Ok(CanonicalFactorization {
        constant: fac.constant,
        clearing_denominator: m,
        monomial_exponent: Rat::new(monomial, m)?,
        cyclotomic,
        primes,
    })
}

impl CanonicalFactorization {
    /// The exact product described by this factorization.
    pub fn recompose(&self) -> Result<PuiseuxPoly> {
        let m = self.clearing_denominator;
        if m == 0 {
            return Err(Error::domain("clearing denominator must be positive"));
        }
        let k = &self.monomial_exponent * &Rat::from_integer(m);
        let k = k
            .to_u64()
            .and_then(|k| k.to_usize())
            .ok_or_else(|| {
                Error::domain(format!(
                    "monomial exponent {} is not a multiple of 1/{m}",
                    self.monomial_exponent
                ))
            })?;
        let mut dense = QPoly::monomial(self.constant.clone(), k);
        for &(n, e) in &self.cyclotomic {
            dense = &dense * &cyclotomic_poly(n)?.pow(e);
        }
        for (q, l) in &self.primes {
            dense = &dense * &q.pow(*l);
        }
        Ok(PuiseuxPoly::from_dense(&dense, m))
    }
}

pub fn recompose(cf: &CanonicalFactorization) -> Result<PuiseuxPoly> {
    cf.recompose()
}

/// One representative (leading coefficient 1) per associate class of
/// divisors of `element` in `Q[S]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorSet {
    pub element: PuiseuxPoly,
    pub monoid: PuiseuxMonoid,
    /// Sorted canonically (degree first).
    pub divisors: Vec<PuiseuxPoly>,
}

impl DivisorSet {
    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }

    pub fn contains(&self, g: &PuiseuxPoly) -> bool {
        let g = g.monic();
        self.divisors
            .binary_search_by(|d| canonical_cmp(d, &g))
            .is_ok()
    }
}

fn check_support(f: &PuiseuxPoly, s: &PuiseuxMonoid) -> Result<()> {
    if f.is_zero() {
        return Err(Error::domain("zero has no finite divisor set"));
    }
    if let Some(e) = f.supp().find(|e| !s.contains(e)) {
        return Err(Error::domain(format!("exponent {e} of {f} is not in {s}")));
    }
    Ok(())
}

fn support_in(g: &[Int], shift: usize, n: &NumericalMonoid) -> bool {
    g.iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .all(|(i, _)| n.contains((i + shift) as u64))
}

/// All non-associate divisors of `f` in `Q[S]`.
///
/// `f` is carried to `Q[N] ⊆ Q[X]` by the normalizing scale `r`, factored
/// over Q, and every sub-multiset of its irreducible factors (together with a
/// split of the `X`-power) is kept when both it and its cofactor have support
/// in `N`. `limit` caps the number of sub-multisets examined.
pub fn divisors_in_algebra(f: &PuiseuxPoly, s: &PuiseuxMonoid, limit: u64) -> Result<DivisorSet> {
    check_support(f, s)?;
    let (scale, numerical) = s.normalize_to_numerical();
    let dense = f.substitute(scale)?.to_dense(1)?;
    let fac = factor_over_rationals(&dense)?;
    let x = QPoly::x();
    let mut x_power = 0usize;
    let mut parts: Vec<(QPoly, usize)> = Vec::new();
    for (q, e) in fac.factors {
        if q == x {
            x_power = e;
        } else {
            parts.push((q, e));
        }
    }

    let count = parts
        .iter()
        .try_fold((x_power as u64) + 1, |acc, (_, e)| acc.checked_mul(*e as u64 + 1))
        .unwrap_or(u64::MAX);
    if count > limit {
        return Err(Error::ResourceLimit(format!(
            "{count} candidate sub-multisets exceed the limit of {limit}"
        )));
    }

    // Products are formed over Z on primitive parts: only the support matters
    // until a divisor is kept. powers[i][j] = q_i^j.
    let powers: Vec<Vec<ZPoly>> = parts
        .iter()
        .map(|(q, e)| {
            let (_, prim) = q.primitive_int_part();
            let mut v = vec![vec![Int::one()]];
            for j in 1..=*e {
                let next = zpoly::mul(&v[j - 1], &prim);
                v.push(next);
            }
            v
        })
        .collect();

    let mut found: Vec<PuiseuxPoly> = Vec::new();
    let one: ZPoly = vec![Int::one()];
    let mut stack = vec![(0usize, one.clone(), one)];
    let inv = scale.recip()?;
    while let Some((i, g, h)) = stack.pop() {
        if i < parts.len() {
            let e = parts[i].1;
            for b in (0..=e).rev() {
                stack.push((i + 1, zpoly::mul(&g, &powers[i][b]), zpoly::mul(&h, &powers[i][e - b])));
            }
            continue;
        }
        for a in 0..=x_power {
            if support_in(&g, a, numerical) && support_in(&h, x_power - a, numerical) {
                let divisor = &QPoly::monomial(Coeff::one(), a) * &QPoly::from_big_ints(&g);
                let back = PuiseuxPoly::from_dense(&divisor, 1).substitute(&inv)?;
                found.push(back.monic());
            }
        }
    }
    found.sort_by(canonical_cmp);
    found.dedup();
    Ok(DivisorSet {
        element: f.clone(),
        monoid: s.clone(),
        divisors: found,
    })
}

pub fn is_atom_in_algebra(f: &PuiseuxPoly, s: &PuiseuxMonoid, limit: u64) -> Result<bool> {
    if f.is_constant() {
        return Err(Error::domain(format!("{f} is zero or a unit")));
    }
    Ok(divisors_in_algebra(f, s, limit)?.len() == 2)
}

pub fn ff_divisor_count(f: &PuiseuxPoly, s: &PuiseuxMonoid, limit: u64) -> Result<usize> {
    Ok(divisors_in_algebra(f, s, limit)?.len())
}

/// Orders divisor lists by the canonical polynomial order.
pub fn sort_canonical(v: &mut [PuiseuxPoly]) {
    v.sort_by(canonical_cmp);
}
