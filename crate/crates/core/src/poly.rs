//! Elements of the Puiseux algebra Q[Q_+].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{lcm_denominators, Coeff, Int, Rat};
use crate::qpoly::QPoly;

/// Largest dense degree produced when exponents are scaled to integers.
pub const MAX_DENSE_DEGREE: u64 = 1 << 20;

/// A finite sum `a_1 X^{s_1} + ... + a_n X^{s_n}` with `s_1 < ... < s_n` in
/// Q_+ and nonzero rational `a_i`. The zero element has no terms.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PuiseuxPoly {
    terms: Vec<(Rat, Coeff)>,
}

/// Support, order and degree of a nonzero element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdDegSupp {
    pub ord: Rat,
    pub deg: Rat,
    pub supp: Vec<Rat>,
}

impl PuiseuxPoly {
    /// Builds an element from arbitrary terms; like exponents are merged and
    /// cancelled terms dropped.
    pub fn from_terms<I: IntoIterator<Item = (Rat, Coeff)>>(terms: I) -> PuiseuxPoly {
        let mut map: BTreeMap<Rat, Coeff> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(Coeff::zero) += c;
        }
        PuiseuxPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn zero() -> PuiseuxPoly {
        PuiseuxPoly::default()
    }

    pub fn one() -> PuiseuxPoly {
        PuiseuxPoly::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> PuiseuxPoly {
        PuiseuxPoly::monomial(c, Rat::zero())
    }

    pub fn monomial(c: Coeff, exp: Rat) -> PuiseuxPoly {
        PuiseuxPoly::from_terms([(exp, c)])
    }

    /// Embeds `Q[X]` into `Q[Q_+]`.
    pub fn from_qpoly(f: &QPoly) -> PuiseuxPoly {
        PuiseuxPoly::from_terms(
            f.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (Rat::from_integer(i as u64), c.clone())),
        )
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> &[(Rat, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_zero())
    }

    pub fn ord(&self) -> Result<&Rat> {
        self.terms
            .first()
            .map(|t| &t.0)
            .ok_or_else(|| Error::domain("order of the zero element is undefined"))
    }

    pub fn deg(&self) -> Result<&Rat> {
        self.terms
            .last()
            .map(|t| &t.0)
            .ok_or_else(|| Error::domain("degree of the zero element is undefined"))
    }

    pub fn supp(&self) -> impl Iterator<Item = &Rat> + '_ {
        self.terms.iter().map(|t| &t.0)
    }

    pub fn ord_deg_supp(&self) -> Result<OrdDegSupp> {
        Ok(OrdDegSupp {
            ord: self.ord()?.clone(),
            deg: self.deg()?.clone(),
            supp: self.supp().cloned().collect(),
        })
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn coeff(&self, exp: &Rat) -> Coeff {
        self.terms
            .binary_search_by(|t| t.0.cmp(exp))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Coeff::zero())
    }

    pub fn scale(&self, c: &Coeff) -> PuiseuxPoly {
        if c.is_zero() {
            return PuiseuxPoly::zero();
        }
        PuiseuxPoly {
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Associate with leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> PuiseuxPoly {
        match self.leading_coeff() {
            None => PuiseuxPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn pow(&self, e: usize) -> PuiseuxPoly {
        (0..e).fold(PuiseuxPoly::one(), |acc, _| &acc * self)
    }

    /// True iff every `s` in the support has `deg + ord - s` in the support.
    pub fn is_symmetric_support(&self) -> Result<bool> {
        let ord = self.ord()?;
        let deg = self.deg()?;
        let axis = ord + deg;
        let supp = self.supp().collect::<Vec<_>>();
        // ascending support reflected must equal descending support
        Ok(supp
            .iter()
            .zip(supp.iter().rev())
            .all(|(s, t)| (*s + *t) == axis))
    }

    /// Ψ_r: multiplies every exponent by `r > 0`.
    pub fn substitute(&self, r: &Rat) -> Result<PuiseuxPoly> {
        if r.is_zero() {
            return Err(Error::domain("substitution factor must be positive"));
        }
        Ok(PuiseuxPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e * r, c.clone()))
                .collect(),
        })
    }

    /// Returns `(m, g)` with `m = lcm d(supp f)` and `g = Ψ_m(f)` read as a
    /// polynomial in `Q[X]`.
    pub fn clear_denominators(&self) -> Result<(u64, QPoly)> {
        if self.is_zero() {
            return Err(Error::domain("cannot clear denominators of zero"));
        }
        let m = lcm_denominators(self.supp())?;
        let m = m
            .to_u64()
            .ok_or_else(|| Error::ResourceLimit(format!("clearing denominator {m}")))?;
        Ok((m, self.to_dense(m)?))
    }

    /// `Ψ_m(f)` as a dense polynomial; every exponent times `m` must be an integer.
    pub fn to_dense(&self, m: u64) -> Result<QPoly> {
        let scale = Rat::from_integer(m);
        let mut dense: Vec<(usize, Coeff)> = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let k = e * &scale;
            if !k.is_integer() {
                return Err(Error::domain(format!("exponent {e} times {m} is not an integer")));
            }
            let k = k
                .to_u64()
                .filter(|&k| k <= MAX_DENSE_DEGREE)
                .ok_or_else(|| {
                    Error::ResourceLimit(format!("dense degree of {e} times {m} exceeds {MAX_DENSE_DEGREE}"))
                })?;
            dense.push((k as usize, c.clone()));
        }
        let len = dense.last().map_or(0, |t| t.0 + 1);
        let mut v = vec![Coeff::zero(); len];
        for (k, c) in dense {
            v[k] = c;
        }
        Ok(QPoly::new(v))
    }

    /// `Ψ_{1/m}(g)` for `g` in `Q[X]`.
    pub fn from_dense(g: &QPoly, m: u64) -> PuiseuxPoly {
        let m = Int::from(m);
        PuiseuxPoly {
            terms: g
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Rat::new(Int::from(i), m.clone()).unwrap(), c.clone()))
                .collect(),
        }
    }

    /// Quotient in `Q[Q_+]`, or `None` when `g` does not divide `self`.
    pub fn exact_div(&self, g: &PuiseuxPoly) -> Option<PuiseuxPoly> {
        if g.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(PuiseuxPoly::zero());
        }
        let m = lcm_denominators(self.supp().chain(g.supp())).ok()?.to_u64()?;
        let q = self.to_dense(m).ok()?.exact_div(&g.to_dense(m).ok()?)?;
        Some(PuiseuxPoly::from_dense(&q, m))
    }

    pub fn divides(&self, f: &PuiseuxPoly) -> bool {
        f.exact_div(self).is_some()
    }
}

/// The generalized polynomial `h(X^s)`.
pub fn generalized_poly(h: &QPoly, s: &Rat) -> Result<PuiseuxPoly> {
    PuiseuxPoly::from_qpoly(h).substitute(s)
}

pub fn pp_mul(f: &PuiseuxPoly, g: &PuiseuxPoly) -> PuiseuxPoly {
    f * g
}

/// Canonical order: degree, then terms compared from the top exponent down.
pub fn canonical_cmp(a: &PuiseuxPoly, b: &PuiseuxPoly) -> Ordering {
    let da = a.terms.last().map(|t| &t.0);
    let db = b.terms.last().map(|t| &t.0);
    da.cmp(&db).then_with(|| {
        for (x, y) in a.terms.iter().rev().zip(b.terms.iter().rev()) {
            let o = x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1));
            if o != Ordering::Equal {
                return o;
            }
        }
        a.terms.len().cmp(&b.terms.len())
    })
}

impl Add for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn add(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        PuiseuxPoly::from_terms(self.terms.iter().chain(&rhs.terms).cloned())
    }
}

impl Sub for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn sub(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        self + &(-rhs)
    }
}

impl Neg for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn neg(self) -> PuiseuxPoly {
        PuiseuxPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn mul(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        PuiseuxPoly::from_terms(
            self.terms
                .iter()
                .flat_map(|(e, a)| rhs.terms.iter().map(move |(f, b)| (e + f, a * b))),
        )
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PuiseuxPoly {
            type Output = PuiseuxPoly;
            fn $m(self, rhs: PuiseuxPoly) -> PuiseuxPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for PuiseuxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::format_poly(self))
    }
}

impl fmt::Debug for PuiseuxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PuiseuxPoly({self})")
    }
}
