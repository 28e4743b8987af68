//! Independent oracles and random instance generators shared by the
//! integration tests and the acceptance harness.
//!
//! Nothing here calls the library's factorization or membership code: the
//! factorizer is Kronecker's method over i128 and membership is a plain
//! reachability table.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use puiseux::cyclotomic::cyclotomic_poly;
use puiseux::{Coeff, PuiseuxPoly, QPoly, Rat};

pub type IPoly = Vec<i128>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------- integers

fn trim(mut f: IPoly) -> IPoly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn eval(f: &[i128], x: i128) -> i128 {
    f.iter().rev().fold(0, |acc, &c| acc * x + c)
}

fn content(f: &[i128]) -> i128 {
    f.iter().fold(0i128, |g, &c| g.gcd(&c))
}

/// Primitive with positive leading coefficient.
fn normalize(f: IPoly) -> IPoly {
    let c = content(&f);
    let sign = if f.last().copied().unwrap_or(1) < 0 { -1 } else { 1 };
    f.into_iter().map(|a| a / c * sign).collect()
}

/// `f / g` over Z, or `None`.
fn div_exact(f: &[i128], g: &[i128]) -> Option<IPoly> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    if r.len() < g.len() {
        return None;
    }
    let lg = *g.last().unwrap();
    let mut q = vec![0i128; r.len() - dg];
    for i in (0..q.len()).rev() {
        let top = r[i + dg];
        if top % lg != 0 {
            return None;
        }
        let c = top / lg;
        q[i] = c;
        for (j, &gj) in g.iter().enumerate() {
            r[i + j] = r[i + j].checked_sub(c.checked_mul(gj)?)?;
        }
    }
    r.iter().all(|&c| c == 0).then_some(q)
}

fn signed_divisors(v: i128) -> Vec<i128> {
    let v = v.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1i128;
    while d * d <= v {
        if v % d == 0 {
            small.push(d);
            if d * d != v {
                large.push(v / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Interpolates the polynomial of degree `<= xs.len() - 1` through the points
/// and returns it when every coefficient is an integer.
fn interpolate(xs: &[i128], ys: &[i128]) -> Option<IPoly> {
    let n = xs.len();
    // Newton divided differences
    let mut dd: Vec<Ratio<i128>> = ys.iter().map(|&y| Ratio::from_integer(y)).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (dd[i] - dd[i - 1]) / Ratio::from_integer(xs[i] - xs[i - level]);
        }
    }
    // expand Newton form
    let mut poly: Vec<Ratio<i128>> = vec![Ratio::zero(); n];
    for k in (0..n).rev() {
        // poly = poly * (X - x_k) + dd[k]
        let mut next = vec![Ratio::zero(); n];
        for i in 0..n {
            if poly[i].is_zero() {
                continue;
            }
            if i + 1 < n {
                next[i + 1] += poly[i];
            }
            next[i] -= poly[i] * Ratio::from_integer(xs[k]);
        }
        next[0] += dd[k];
        poly = next;
    }
    poly.iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

/// A factor of exact degree `d` with positive leading coefficient, if any.
fn find_factor(f: &[i128], d: usize) -> Option<IPoly> {
    let mut pts: Vec<(usize, i128, i128)> = (0..=20i128)
        .map(|i| if i % 2 == 0 { i / 2 } else { -(i + 1) / 2 })
        .filter_map(|x| {
            let v = eval(f, x);
            (v != 0).then(|| (signed_divisors(v).len(), x, v))
        })
        .collect();
    pts.sort();
    pts.truncate(d + 1);
    assert_eq!(pts.len(), d + 1, "not enough non-root points");
    let xs: Vec<i128> = pts.iter().map(|p| p.1).collect();
    let choices: Vec<Vec<i128>> = pts
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let pos = signed_divisors(p.2);
            if i == 0 {
                // g and -g are interchangeable
                pos
            } else {
                pos.iter().flat_map(|&a| [a, -a]).collect()
            }
        })
        .collect();
    let mut ys = Vec::with_capacity(d + 1);
    search(f, d, &xs, &choices, &mut ys)
}

fn search(f: &[i128], d: usize, xs: &[i128], choices: &[Vec<i128>], ys: &mut Vec<i128>) -> Option<IPoly> {
    let i = ys.len();
    if i == xs.len() {
        let g = trim(interpolate(xs, ys)?);
        if g.len() != d + 1 {
            return None;
        }
        let g = normalize(g);
        return div_exact(f, &g).map(|_| g);
    }
    for &y in &choices[i] {
        // integer polynomials satisfy (x_i - x_j) | (g(x_i) - g(x_j))
        if (0..i).all(|j| (y - ys[j]) % (xs[i] - xs[j]) == 0) {
            ys.push(y);
            let hit = search(f, d, xs, choices, ys);
            ys.pop();
            if hit.is_some() {
                return hit;
            }
        }
    }
    None
}

/// Irreducible factorization of a nonzero integer polynomial by Kronecker's
/// method: `(content, [(primitive factor with positive lc, multiplicity)])`,
/// factors sorted by (degree, coefficients).
pub fn kronecker_factor(f: &[i128]) -> (i128, Vec<(IPoly, usize)>) {
    let f = trim(f.to_vec());
    assert!(!f.is_empty(), "zero polynomial");
    let c = content(&f) * if *f.last().unwrap() < 0 { -1 } else { 1 };
    let mut rest: IPoly = f.iter().map(|a| a / c).collect();
    let mut found: Vec<IPoly> = Vec::new();
    while rest[0] == 0 {
        found.push(vec![0, 1]);
        rest.remove(0);
    }
    'outer: while rest.len() > 1 {
        let n = rest.len() - 1;
        for d in 1..=n / 2 {
            if let Some(g) = find_factor(&rest, d) {
                rest = div_exact(&rest, &g).unwrap();
                found.push(g);
                continue 'outer;
            }
        }
        found.push(normalize(rest.clone()));
        break;
    }
    found.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    let mut out: Vec<(IPoly, usize)> = Vec::new();
    for g in found {
        match out.last_mut() {
            Some((h, e)) if *h == g => *e += 1,
            _ => out.push((g, 1)),
        }
    }
    (c, out)
}

// ---------------------------------------------------------------- conversions

/// Scales a rational polynomial to a primitive integer one.
pub fn to_ipoly(f: &QPoly) -> IPoly {
    let den = f
        .coeffs()
        .iter()
        .fold(num_bigint::BigInt::from(1), |l, c| l.lcm(c.denom()));
    let ints: Vec<num_bigint::BigInt> = f.coeffs().iter().map(|c| (c * &den).to_integer()).collect();
    normalize(ints.iter().map(|c| c.to_i128().expect("fits i128")).collect())
}

pub fn from_ipoly(f: &[i128]) -> QPoly {
    QPoly::new(f.iter().map(|&c| Coeff::from_integer(c.into())).collect())
}

pub fn rat(s: &str) -> Rat {
    s.parse().unwrap()
}

// ---------------------------------------------------------------- monoids

/// Membership of `n` in the monoid generated by `gens`, by a reachability table.
pub fn dp_member(gens: &[u64], n: u64) -> bool {
    let n = n as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for i in 1..=n {
        reach[i] = gens.iter().any(|&g| (g as usize) <= i && reach[i - g as usize]);
    }
    reach[n]
}

/// Membership of a rational in the monoid generated by rational `gens`.
pub fn dp_member_rat(gens: &[Rat], q: &Rat) -> bool {
    let l = gens
        .iter()
        .chain(std::iter::once(q))
        .fold(num_bigint::BigInt::from(1), |l, g| l.lcm(g.denom()));
    let scale = |r: &Rat| (r.numer() * (&l / r.denom())).to_u64().unwrap();
    let ints: Vec<u64> = gens.iter().map(scale).collect();
    dp_member(&ints, scale(q))
}

// ---------------------------------------------------------------- divisors

/// Monic divisors of a nonzero `f` in `Q[X]` whose support and cofactor
/// support both lie in the numerical monoid generated by `gens`. Every
/// sub-multiset of the Kronecker factors is multiplied out directly.
pub fn brute_divisors(f: &QPoly, gens: &[u64]) -> BTreeSet<String> {
    let (_, factors) = kronecker_factor(&to_ipoly(f));
    let mut flat: Vec<QPoly> = Vec::new();
    for (g, e) in &factors {
        for _ in 0..*e {
            flat.push(from_ipoly(g).monic());
        }
    }
    let monic_f = f.monic();
    let in_s = |g: &QPoly| {
        g.coeffs()
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || dp_member(gens, i as u64))
    };
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << flat.len()) {
        let g = flat
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(QPoly::one(), |acc, (_, q)| &acc * q);
        let h = monic_f.exact_div(&g).expect("sub-product divides");
        if in_s(&g) && in_s(&h) {
            out.insert(PuiseuxPoly::from_qpoly(&g).to_string());
        }
    }
    out
}

// ---------------------------------------------------------------- generators

/// A product of `Φ_n` with `n <= max_n` and total degree `<= max_deg`, as a
/// list of indices (possibly repeated).
pub fn random_cyclotomic_indices(r: &mut ChaCha8Rng, max_n: u64, max_deg: u64) -> Vec<u64> {
    let count = r.gen_range(1..=4);
    let mut out = Vec::new();
    let mut deg = 0;
    for _ in 0..count {
        let n = r.gen_range(1..=max_n);
        let d = puiseux::cyclotomic::euler_phi(n);
        if deg + d <= max_deg {
            deg += d;
            out.push(n);
        }
    }
    if out.is_empty() {
        out.push(r.gen_range(1..=2));
    }
    out
}

pub fn cyclotomic_product(indices: &[u64]) -> QPoly {
    indices
        .iter()
        .fold(QPoly::one(), |acc, &n| &acc * &cyclotomic_poly(n).unwrap())
}

/// A random integer polynomial of exact degree `deg` with nonzero constant term.
pub fn random_int_poly(r: &mut ChaCha8Rng, deg: usize, bound: i64) -> QPoly {
    loop {
        let mut c: Vec<i64> = (0..=deg).map(|_| r.gen_range(-bound..=bound)).collect();
        c[deg] = r.gen_range(1..=bound.min(3));
        if c[0] != 0 {
            return QPoly::from_ints(c);
        }
    }
}

/// A random composite element of Q[Q_+] together with its intended denominator.
/// Built from cyclotomics, random integer polynomials and a monomial, then
/// substituted by `1/m` with `m <= 6`.
pub fn random_composite(r: &mut ChaCha8Rng, max_dense_deg: usize) -> PuiseuxPoly {
    loop {
        let mut dense = QPoly::constant(Coeff::new(r.gen_range(1..=9i64).into(), r.gen_range(1..=4i64).into()));
        if r.gen_bool(0.3) {
            dense = dense.scale(&Coeff::from_integer((-1).into()));
        }
        let pieces = r.gen_range(2..=4);
        for _ in 0..pieces {
            let piece = match r.gen_range(0..3) {
                0 => cyclotomic_poly(r.gen_range(1..=12)).unwrap(),
                1 => {
                    let d = r.gen_range(1..=3);
                    random_int_poly(r, d, 3)
                }
                _ => QPoly::monomial(Coeff::from_integer(1.into()), r.gen_range(1..=2)),
            };
            dense = &dense * &piece;
        }
        let deg = dense.degree().unwrap();
        if deg >= 2 && deg <= max_dense_deg {
            let m = r.gen_range(1..=6u64);
            return PuiseuxPoly::from_dense(&dense, m);
        }
    }
}

pub fn is_positive(c: &Coeff) -> bool {
    c.is_positive()
}

/// Small integer polynomials used to build divisor test instances.
pub fn divisor_pieces() -> Vec<QPoly> {
    [
        &[0, 1][..],
        &[-1, 1],
        &[1, 1],
        &[1, 2],
        &[1, 0, 1],
        &[1, 1, 1],
        &[1, -1, 1],
        &[-2, 0, 1],
        &[-1, -1, 1],
        &[0, 0, 1],
        &[-1, 0, 0, 1],
        &[-1, -1, 0, 1],
        &[1, 0, 1, 1],
    ]
    .iter()
    .map(|c| QPoly::from_ints(c.iter().copied()))
    .collect()
}

/// Every product of the pieces (with repetition) of total degree 1..=6.
pub fn divisor_corpus() -> Vec<QPoly> {
    fn go(p: &[QPoly], start: usize, acc: &QPoly, out: &mut Vec<QPoly>) {
        for i in start..p.len() {
            let next = acc * &p[i];
            if next.degree().unwrap() <= 6 {
                out.push(next.clone());
                go(p, i, &next, out);
            }
        }
    }
    let mut out = Vec::new();
    go(&divisor_pieces(), 0, &QPoly::one(), &mut out);
    out
}

/// A random `(f, S, r)` with `supp f` inside `S`: `f` is a product of
/// [`divisor_pieces`] with `X` replaced by `X^g` for a generator `g` of `S`.
pub fn random_scaling_instance(r: &mut ChaCha8Rng) -> (PuiseuxPoly, puiseux::PuiseuxMonoid, Rat) {
    let monoids = ["<1>", "<2, 3>", "<1/2, 2/3>", "<3, 5, 7>", "<2/5, 3/7>"];
    let s = puiseux::parser::parse_monoid(monoids[r.gen_range(0..monoids.len())]).unwrap();
    let g = s.generators()[r.gen_range(0..s.generators().len())].clone();
    let pieces = divisor_pieces();
    let k = r.gen_range(1..=3);
    let mut dense = QPoly::one();
    for _ in 0..k {
        dense = &dense * &pieces[r.gen_range(1..pieces.len())];
    }
    let f = puiseux::poly::generalized_poly(&dense, &g).unwrap();
    let by = Rat::new(r.gen_range(1..=5u64), r.gen_range(1..=5u64)).unwrap();
    (f, s, by)
}
