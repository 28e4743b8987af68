mod common;

use std::collections::BTreeSet;

use common::*;
use puiseux::factor_engine::{divisors_in_algebra, ff_divisor_count, is_atom_in_algebra, DEFAULT_SUBSET_LIMIT};
use puiseux::parser::{parse_monoid, parse_poly};
use puiseux::poly::generalized_poly;
use puiseux::{Error, PuiseuxMonoid, PuiseuxPoly};

const LIMIT: u64 = DEFAULT_SUBSET_LIMIT;

fn as_strings(f: &PuiseuxPoly, s: &PuiseuxMonoid) -> Result<BTreeSet<String>, Error> {
    Ok(divisors_in_algebra(f, s, LIMIT)?
        .divisors
        .iter()
        .map(|g| g.to_string())
        .collect())
}

#[test]
fn matches_brute_force_oracle_up_to_degree_six() {
    let corpus = divisor_corpus();
    assert!(corpus.len() > 500, "{}", corpus.len());
    for (text, gens) in [("<1>", vec![1u64]), ("<2, 3>", vec![2, 3])] {
        let s = parse_monoid(text).unwrap();
        let mut compared = 0;
        for dense in &corpus {
            let f = PuiseuxPoly::from_qpoly(&dense.scale(&puiseux::Coeff::new(3.into(), 2.into())));
            let in_s = f.supp().all(|e| dp_member(&gens, e.to_u64().unwrap()));
            match as_strings(&f, &s) {
                Ok(got) => {
                    assert!(in_s);
                    assert_eq!(got, brute_divisors(dense, &gens), "{f} in {text}");
                    compared += 1;
                }
                Err(Error::Domain(_)) => assert!(!in_s, "{f} in {text}"),
                Err(e) => panic!("{f}: {e}"),
            }
        }
        assert!(compared > 100, "{text}: {compared}");
    }
}

#[test]
fn divisor_set_is_closed_under_cofactors() {
    let s = parse_monoid("<2, 3>").unwrap();
    for dense in divisor_corpus() {
        let f = PuiseuxPoly::from_qpoly(&dense);
        let Ok(set) = divisors_in_algebra(&f, &s, LIMIT) else { continue };
        for g in &set.divisors {
            let h = f.exact_div(g).expect("divisor divides").monic();
            assert!(set.contains(&h), "{f}: cofactor of {g}");
            assert!(g.supp().all(|e| s.contains(e)));
            assert!(h.supp().all(|e| s.contains(e)));
        }
    }
}

#[test]
fn generalized_cyclotomics_have_symmetric_divisors() {
    let cases: [(&str, &[&str]); 2] = [("<2, 3>", &["2", "3"]), ("<1/2, 2/3>", &["1/2", "2/3"])];
    let phis: [&[u64]; 3] = [&[1, 2], &[3], &[2, 6]];
    for (monoid, shifts) in cases {
        let s = parse_monoid(monoid).unwrap();
        for idx in phis {
            for shift in shifts {
                let f = generalized_poly(&cyclotomic_product(idx), &rat(shift)).unwrap();
                let set = divisors_in_algebra(&f, &s, LIMIT).unwrap();
                assert!(set.len() >= 2);
                for g in set.divisors.iter().filter(|g| !g.is_monomial()) {
                    assert!(g.is_symmetric_support().unwrap(), "{g} divides {f} in {monoid}");
                }
            }
        }
    }
}

#[test]
fn substitution_is_a_bijection_of_divisor_sets() {
    let mut r = rng(31);
    for _ in 0..60 {
        let (f, s, by) = random_scaling_instance(&mut r);
        let rs = s.scaled_by(&by).unwrap();
        let lhs = divisors_in_algebra(&f, &s, LIMIT).unwrap();
        let rhs = divisors_in_algebra(&f.substitute(&by).unwrap(), &rs, LIMIT).unwrap();
        let mapped: Vec<PuiseuxPoly> = lhs.divisors.iter().map(|d| d.substitute(&by).unwrap()).collect();
        let mapped: BTreeSet<String> = mapped.iter().map(|d| d.to_string()).collect();
        let target: BTreeSet<String> = rhs.divisors.iter().map(|d| d.to_string()).collect();
        assert_eq!(lhs.len(), rhs.len());
        assert_eq!(mapped, target, "{f} in {s} by {by}");
    }
}

#[test]
fn examples_from_the_command_line_docs() {
    let s23 = parse_monoid("<2, 3>").unwrap();
    let s1 = parse_monoid("<1>").unwrap();
    let p = |t: &str| parse_poly(t).unwrap();
    assert!(is_atom_in_algebra(&p("X^2 - 1"), &s23, LIMIT).unwrap());
    assert!(!is_atom_in_algebra(&p("X^2 - 1"), &s1, LIMIT).unwrap());
    assert!(is_atom_in_algebra(&p("X^2 + 1"), &s23, LIMIT).unwrap());
    assert!(is_atom_in_algebra(&p("3"), &s23, LIMIT).is_err());
    assert_eq!(ff_divisor_count(&p("2X^2"), &s23, LIMIT).unwrap(), 2);
    assert_eq!(ff_divisor_count(&p("X - 1"), &s1, LIMIT).unwrap(), 2);
    assert!(matches!(
        divisors_in_algebra(&p("X^6 - 1"), &s23, 3),
        Err(Error::ResourceLimit(_))
    ));
    assert!(matches!(divisors_in_algebra(&p("X^(1/2)"), &s23, LIMIT), Err(Error::Domain(_))));
}
