mod common;

use common::{dp_member, dp_member_rat};
use num_bigint::BigInt;
use proptest::prelude::*;
use puiseux::parser::{format_poly, parse_monoid, parse_poly};
use puiseux::qpoly::{poly_divrem, poly_gcd};
use puiseux::{Coeff, Error, PuiseuxMonoid, PuiseuxPoly, QPoly, Rat};

fn arb_rat() -> impl Strategy<Value = Rat> {
    (0u64..60, 1u64..13).prop_map(|(n, d)| Rat::new(n, d).unwrap())
}

fn arb_positive_rat() -> impl Strategy<Value = Rat> {
    (1u64..12, 1u64..8).prop_map(|(n, d)| Rat::new(n, d).unwrap())
}

fn arb_coeff() -> impl Strategy<Value = Coeff> {
    (-30i64..=30, 1i64..8)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Coeff::new(n.into(), d.into()))
}

fn arb_pp() -> impl Strategy<Value = PuiseuxPoly> {
    prop::collection::vec((arb_rat(), arb_coeff()), 0..6).prop_map(PuiseuxPoly::from_terms)
}

fn arb_qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-9i64..=9, 0..7).prop_map(QPoly::from_ints)
}

fn arb_monoid() -> impl Strategy<Value = PuiseuxMonoid> {
    prop::collection::vec(arb_positive_rat(), 1..4).prop_map(|g| PuiseuxMonoid::new(g).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rat_is_invariant_under_common_scaling(n in 0u64..1000, d in 1u64..1000, k in 1u64..1000) {
        prop_assert_eq!(Rat::new(n * k, d * k).unwrap(), Rat::new(n, d).unwrap());
    }

    #[test]
    fn rat_addition_matches_integer_arithmetic(a in 0u64..10_000, b in 1u64..10_000, c in 0u64..10_000, d in 1u64..10_000) {
        let sum = Rat::new(a, b).unwrap() + Rat::new(c, d).unwrap();
        let num = BigInt::from(a) * d + BigInt::from(c) * b;
        let den = BigInt::from(b) * d;
        // cross-multiplied equality and lowest terms
        prop_assert_eq!(sum.numer() * &den, num * sum.denom());
        prop_assert_eq!(num_integer::Integer::gcd(sum.numer(), sum.denom()) <= BigInt::from(1), true);
    }

    #[test]
    fn parse_of_format_is_identity(f in arb_pp()) {
        prop_assert_eq!(parse_poly(&format_poly(&f)).unwrap(), f);
    }

    #[test]
    fn parser_never_panics(text in "[X0-9^()/*+\\- <>,.a]{0,24}") {
        for r in [parse_poly(&text).err(), parse_monoid(&text).err()].into_iter().flatten() {
            match r {
                Error::Parse { offset, .. } | Error::Semantic { offset, .. } => prop_assert!(offset <= text.len()),
                Error::Domain(_) | Error::ResourceLimit(_) => {}
            }
        }
    }

    #[test]
    fn parser_survives_arbitrary_bytes(bytes in prop::collection::vec(any::<u8>(), 0..40)) {
        let text = String::from_utf8_lossy(&bytes);
        let _ = parse_poly(&text);
        let _ = parse_monoid(&text);
    }

    #[test]
    fn monoid_membership_matches_reachability(s in arb_monoid(), n in 0u64..200, d in 1u64..8) {
        let q = Rat::new(n, d).unwrap();
        prop_assert_eq!(s.contains(&q), dp_member_rat(s.generators(), &q));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn substitution_is_a_ring_isomorphism(f in arb_pp(), g in arb_pp(), r in arb_positive_rat()) {
        let psi = |h: &PuiseuxPoly| h.substitute(&r).unwrap();
        prop_assert_eq!(psi(&(&f * &g)), &psi(&f) * &psi(&g));
        prop_assert_eq!(psi(&(&f + &g)), &psi(&f) + &psi(&g));
        prop_assert_eq!(psi(&f).substitute(&r.recip().unwrap()).unwrap(), f);
    }

    #[test]
    fn symmetric_support_survives_substitution(f in arb_pp(), r in arb_positive_rat()) {
        prop_assume!(!f.is_zero());
        prop_assert_eq!(f.substitute(&r).unwrap().is_symmetric_support().unwrap(), f.is_symmetric_support().unwrap());
    }

    #[test]
    fn division_with_remainder(f in arb_qpoly(), g in arb_qpoly()) {
        prop_assume!(!g.is_zero());
        let (q, r) = poly_divrem(&f, &g).unwrap();
        prop_assert_eq!(&(&q * &g) + &r, f);
        prop_assert!(r.is_zero() || r.degree() < g.degree());
    }

    #[test]
    fn gcd_divides_and_scales(f in arb_qpoly(), g in arb_qpoly(), h in arb_qpoly()) {
        prop_assume!(!(f.is_zero() && g.is_zero()) && !h.is_zero());
        let d = poly_gcd(&f, &g).unwrap();
        prop_assert!(d.is_monic());
        prop_assert!(d.divides(&f) && d.divides(&g));
        let dh = poly_gcd(&(&f * &h), &(&g * &h)).unwrap();
        prop_assert_eq!(dh, (&d * &h).monic());
    }

    #[test]
    fn monoid_is_closed_and_divisors_pair_up(s in arb_monoid(), i in 0usize..3, j in 0usize..3, k in 1u64..4) {
        let gens = s.generators();
        let a = &gens[i % gens.len()] * &Rat::from_integer(k);
        let b = gens[j % gens.len()].clone();
        let sum = &a + &b;
        prop_assert!(s.contains(&a) && s.contains(&b) && s.contains(&sum));
        let divs = s.divisors_in_monoid(&sum).unwrap();
        for t in &divs {
            let rest = sum.checked_sub(t).unwrap();
            prop_assert!(divs.contains(&rest));
        }
        prop_assert!(divs.contains(&a) && divs.contains(&b));
    }

    #[test]
    fn atoms_generate_the_monoid(gens in prop::collection::vec(1u64..30, 1..5)) {
        let g = gens.iter().fold(0, |acc, &x| num_integer::gcd(acc, x));
        prop_assume!(g == 1);
        let s = PuiseuxMonoid::new(gens.iter().map(|&x| Rat::from_integer(x)).collect()).unwrap();
        let atoms: Vec<u64> = s.atoms().unwrap().iter().map(|a| a.to_u64().unwrap()).collect();
        for n in 0..120 {
            prop_assert_eq!(dp_member(&atoms, n), dp_member(&gens, n));
        }
        // no atom is a sum of the others
        for (i, &a) in atoms.iter().enumerate() {
            let others: Vec<u64> = atoms.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, &x)| x).collect();
            prop_assert!(!dp_member(&others, a));
        }
    }
}
