//! Quadratic multifactor Hensel lifting.

use num_bigint::BigInt;
use num_traits::One;

use super::modp;
use super::zpoly::{self, ZPoly};

/// One quadratic Hensel step from modulus `m` to `m^2`.
///
/// Requires `f = g*h`, `s*g + t*h = 1` (mod m), `h` monic,
/// `deg s < deg h`, `deg t < deg g`.
fn step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m2: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let e = zpoly::reduce(&zpoly::sub(f, &zpoly::mul(g, h)), m2);
    let r = zpoly::divrem_monic_mod(&zpoly::mul(s, &e), h, m2).1;
    let h_new = zpoly::reduce(&zpoly::add(h, &r), m2);
    // The update g + t*e + q*g is congruent to f / h_new; dividing keeps the degree exact.
    let g_new = zpoly::divrem_monic_mod(f, &h_new, m2).0;

    let b = zpoly::reduce(
        &zpoly::sub(
            &zpoly::add(&zpoly::mul(s, &g_new), &zpoly::mul(t, &h_new)),
            &[BigInt::one()],
        ),
        m2,
    );
    let (c, d) = zpoly::divrem_monic_mod(&zpoly::mul(s, &b), &h_new, m2);
    let s_new = zpoly::reduce(&zpoly::sub(s, &d), m2);
    let t_new = zpoly::reduce(
        &zpoly::sub(&zpoly::sub(t, &zpoly::mul(t, &b)), &zpoly::mul(&c, &g_new)),
        m2,
    );
    // keep deg t < deg g
    let t_new = trim_t(&t_new, &g_new, m2);
    (g_new, h_new, s_new, t_new)
}

/// Reduces `t` modulo `g` when `g` has a unit leading coefficient.
fn trim_t(t: &[BigInt], g: &[BigInt], m: &BigInt) -> ZPoly {
    if t.len() < g.len() {
        return t.to_vec();
    }
    let lc_inv = zpoly::inv_mod(g.last().unwrap(), m);
    let g_monic = zpoly::reduce(&zpoly::scale(g, &lc_inv), m);
    zpoly::divrem_monic_mod(t, &g_monic, m).1
}

/// Lifts `f = lc(f) * prod(factors) (mod p)` to the same identity modulo
/// `p^(2^doublings)`. Factors are monic mod p and pairwise coprime; the
/// results are monic and reduced into `[0, M)`.
pub(crate) fn multifactor_lift(
    f: &[BigInt],
    factors: &[Vec<u64>],
    p: u64,
    doublings: u32,
) -> Vec<ZPoly> {
    let modulus = BigInt::from(p).pow(1u32 << doublings);
    lift_rec(f, factors, p, doublings, &modulus)
}

fn lift_rec(
    f: &[BigInt],
    factors: &[Vec<u64>],
    p: u64,
    doublings: u32,
    modulus: &BigInt,
) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let lc_inv = zpoly::inv_mod(f.last().unwrap(), modulus);
        return vec![zpoly::reduce(&zpoly::scale(f, &lc_inv), modulus)];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let prod = |fs: &[Vec<u64>]| fs.iter().fold(vec![1u64], |acc, u| modp::mul(&acc, u, p));
    let lc_p = zpoly::to_modp(&[f.last().unwrap().clone()], p);
    let g0 = modp::mul(&prod(left), &lc_p, p);
    let h0 = prod(right);
    let (one, s0, t0) = modp::ext_gcd(&g0, &h0, p);
    debug_assert_eq!(one, vec![1]);

    let mut g = zpoly::from_modp(&g0);
    let mut h = zpoly::from_modp(&h0);
    let mut s = zpoly::from_modp(&s0);
    let mut t = zpoly::from_modp(&t0);
    let mut m = BigInt::from(p);
    for _ in 0..doublings {
        m = &m * &m;
        let fm = zpoly::reduce(f, &m);
        (g, h, s, t) = step(&fm, &g, &h, &s, &t, &m);
    }
    debug_assert_eq!(&m, modulus);
    let mut out = lift_rec(&g, left, p, doublings, modulus);
    out.extend(lift_rec(&h, right, p, doublings, modulus));
    out
}
