mod common;

use common::*;
use puiseux::factor_engine::canonical_factorization;
use puiseux::qpoly::factor_over_rationals;
use puiseux::{PuiseuxPoly, QPoly};

/// Irreducible multiset of the canonical factorization, in the oracle's format.
fn engine_multiset(f: &PuiseuxPoly) -> (u64, Vec<(IPoly, usize)>) {
    let cf = canonical_factorization(f).unwrap();
    let m = cf.clearing_denominator;
    let mut out: Vec<(IPoly, usize)> = Vec::new();
    let k = (&cf.monomial_exponent * &puiseux::Rat::from_integer(m)).to_u64().unwrap() as usize;
    if k > 0 {
        out.push((vec![0, 1], k));
    }
    for &(n, e) in &cf.cyclotomic {
        out.push((to_ipoly(&puiseux::cyclotomic::cyclotomic_poly(n).unwrap()), e));
    }
    for (q, e) in &cf.primes {
        out.push((to_ipoly(q), *e));
    }
    out.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    (m, out)
}

#[test]
fn oracle_agrees_on_known_factorizations() {
    // (X - 1)(X + 1)(X^2 + 1) and X^4 - 10X^2 + 1 (irreducible)
    let (_, f) = kronecker_factor(&[-1, 0, 0, 0, 1]);
    assert_eq!(f, vec![(vec![-1, 1], 1), (vec![1, 1], 1), (vec![1, 0, 1], 1)]);
    let (_, f) = kronecker_factor(&[1, 0, -10, 0, 1]);
    assert_eq!(f, vec![(vec![1, 0, -10, 0, 1], 1)]);
    let (c, f) = kronecker_factor(&[0, 0, 4, 4]);
    assert_eq!(c, 4);
    assert_eq!(f, vec![(vec![0, 1], 2), (vec![1, 1], 1)]);
}

#[test]
fn round_trip_on_random_composites() {
    let mut r = rng(11);
    for _ in 0..300 {
        let f = random_composite(&mut r, 16);
        let cf = canonical_factorization(&f).unwrap();
        assert_eq!(cf.recompose().unwrap(), f, "{f}");
    }
}

#[test]
fn irreducible_multiset_matches_kronecker() {
    let mut r = rng(12);
    for _ in 0..120 {
        let f = random_composite(&mut r, 8);
        let (m, engine) = engine_multiset(&f);
        let dense = f.to_dense(m).unwrap();
        let (_, oracle) = kronecker_factor(&to_ipoly(&dense));
        assert_eq!(engine, oracle, "{f}");
    }
}

#[test]
fn dense_factorization_recomposes_with_constant() {
    let mut r = rng(13);
    for _ in 0..100 {
        let f = random_int_poly(&mut r, 6, 20);
        let fac = factor_over_rationals(&f).unwrap();
        assert_eq!(fac.recompose(), f);
        for (q, _) in &fac.factors {
            assert!(q.is_monic());
        }
    }
    assert!(factor_over_rationals(&QPoly::zero()).is_err());
}
