//! Integer polynomial helpers, including arithmetic modulo a big modulus.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn add(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z))
            .collect(),
    )
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect(),
    )
}

pub(crate) fn scale(a: &[BigInt], c: &BigInt) -> ZPoly {
    trim(a.iter().map(|x| x * c).collect())
}

/// Reduces every coefficient into `[0, m)`.
pub(crate) fn reduce(a: &[BigInt], m: &BigInt) -> ZPoly {
    trim(a.iter().map(|x| x.mod_floor(m)).collect())
}

/// Reduces every coefficient into the symmetric range `(-m/2, m/2]`.
pub(crate) fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m >> 1u32;
    trim(
        a.iter()
            .map(|x| {
                let r = x.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

pub(crate) fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    reduce(&mul(a, b), m)
}

/// Division by a monic polynomial modulo `m`.
pub(crate) fn divrem_monic_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    let mut r = reduce(a, m);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let k = i - db + j;
            r[k] = (&r[k] - &c * bj).mod_floor(m);
        }
        q[i - db] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

/// Modular inverse of `a` modulo `m`; `a` must be a unit.
pub(crate) fn inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

pub(crate) fn to_modp(a: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let v = a
        .iter()
        .map(|x| x.mod_floor(&pb).to_u64().unwrap())
        .collect();
    super::modp::trim(v)
}

pub(crate) fn from_modp(a: &[u64]) -> ZPoly {
    a.iter().map(|&x| BigInt::from(x)).collect()
}

/// Exact quotient over Z, or `None` if `b` does not divide `a` in `Z[X]`.
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let db = b.len().checked_sub(1)?;
    let lc = &b[db];
    if a.len() <= db {
        return if a.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (db..r.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let (c, rem) = r[i].div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i - db + j] -= &c * bj;
        }
        q[i - db] = c;
    }
    if r.iter().take(db).all(Zero::is_zero) {
        Some(trim(q))
    } else {
        None
    }
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(a: &[BigInt]) -> ZPoly {
    let mut g = a.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return Vec::new();
    }
    if a.last().unwrap().is_negative() {
        g = -g;
    }
    a.iter().map(|x| x / &g).collect()
}

pub(crate) fn max_norm(a: &[BigInt]) -> BigInt {
    a.iter().map(|x| x.abs()).max().unwrap_or_default()
}

/// Upper bound on the coefficients of `lc(f) * g` for every factor `g` of `f`
/// (Mignotte): `2^n * sqrt(n+1) * |f|_inf * |lc(f)|`.
pub(crate) fn factor_coefficient_bound(f: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let root = BigInt::from(n + 1).sqrt() + 1;
    (BigInt::one() << n) * root * max_norm(f) * f[n].abs()
}
