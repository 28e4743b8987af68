//! Complete factorization over Q: square-free decomposition, Berlekamp modulo
//! a small prime, Hensel lifting past the Mignotte bound, and subset
//! recombination.

use num_bigint::BigInt;
use num_traits::Zero;

use super::hensel::multifactor_lift;
use super::zpoly::{self, ZPoly};
use super::{canonical_cmp, modp, squarefree_decompose, QPoly};
use crate::cyclotomic::{cyclotomic_poly, euler_phi, indices_up_to_degree};
use crate::error::{Error, Result};
use crate::exact::{is_prime_u64, Coeff};

/// `f = constant * prod factor_i^{mult_i}` with monic irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFactorization {
    pub constant: Coeff,
    /// Sorted by (degree, coefficients); factors are pairwise distinct.
    pub factors: Vec<(QPoly, usize)>,
}

impl QFactorization {
    pub fn recompose(&self) -> QPoly {
        self.factors
            .iter()
            .fold(QPoly::constant(self.constant.clone()), |acc, (f, e)| {
                &acc * &f.pow(*e)
            })
    }

    /// Sum of multiplicity times degree.
    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(f, e)| e * f.degree().unwrap_or(0))
            .sum()
    }
}

/// Factors a nonzero polynomial into monic irreducibles over Q.
pub fn factor_over_rationals(f: &QPoly) -> Result<QFactorization> {
    if f.is_zero() {
        return Err(Error::domain("factorization of the zero polynomial"));
    }
    let sq = squarefree_decompose(f)?;
    let mut factors = Vec::new();
    for (part, mult) in &sq.parts {
        let (_, prim) = part.primitive_int_part();
        for g in factor_squarefree_primitive(&prim) {
            factors.push((QPoly::from_big_ints(&g).monic(), *mult));
        }
    }
    factors.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
    Ok(QFactorization {
        constant: sq.constant,
        factors,
    })
}

/// Primes `p >= 3` in increasing order that do not divide the leading
/// coefficient and keep `f` square-free modulo `p`. The first one is used for
/// lifting; later ones only contribute degree information.
fn good_primes(f: &[BigInt]) -> impl Iterator<Item = u64> + '_ {
    let lc = f.last().unwrap();
    (3u64..).filter(|&p| is_prime_u64(p)).filter(move |&p| {
        !(lc % BigInt::from(p)).is_zero() && modp::is_squarefree(&zpoly::to_modp(f, p), p)
    })
}

/// Extra primes consulted for the factor-degree pattern.
const PATTERN_PRIMES: usize = 6;

/// `sums[d]` is true when some sub-multiset of `degrees` sums to `d`.
fn subset_sums(degrees: &[usize], n: usize) -> Vec<bool> {
    let mut sums = vec![false; n + 1];
    sums[0] = true;
    for &d in degrees {
        for s in (d..=n).rev() {
            sums[s] |= sums[s - d];
        }
    }
    sums
}

fn local_degrees(f: &[BigInt], p: u64) -> Vec<usize> {
    let fp = modp::make_monic(&zpoly::to_modp(f, p), p);
    modp::berlekamp(&fp, p)
        .iter()
        .map(|g| g.len() - 1)
        .collect()
}

/// Irreducible factors (primitive, positive leading coefficient) of a
/// square-free primitive integer polynomial.
pub(crate) fn factor_squarefree_primitive(f: &[BigInt]) -> Vec<ZPoly> {
    let n = match f.len().checked_sub(1) {
        None | Some(0) => return Vec::new(),
        Some(n) => n,
    };
    if n == 1 {
        return vec![f.to_vec()];
    }
    let (mut found, rest) = split_cyclotomic(f);
    if !found.is_empty() {
        found.extend(factor_squarefree_primitive(&rest));
        return found;
    }
    let mut primes = good_primes(f);
    let p = primes.next().expect("a suitable prime exists for square-free input");
    let fp = modp::make_monic(&zpoly::to_modp(f, p), p);
    let local = modp::berlekamp(&fp, p);
    if local.len() == 1 {
        return vec![f.to_vec()];
    }
    // A true factor's degree is a subset sum of the local degrees mod every prime.
    let mut allowed = subset_sums(&local.iter().map(|g| g.len() - 1).collect::<Vec<_>>(), n);
    for q in primes.take(PATTERN_PRIMES) {
        let other = subset_sums(&local_degrees(f, q), n);
        allowed.iter_mut().zip(other).for_each(|(a, b)| *a &= b);
        if allowed[1..n].iter().all(|&a| !a) {
            return vec![f.to_vec()];
        }
    }

    let bound = zpoly::factor_coefficient_bound(f) * 2u32;
    let pb = BigInt::from(p);
    let mut doublings = 0u32;
    let mut modulus = pb.clone();
    while modulus <= bound {
        doublings += 1;
        modulus = &modulus * &modulus;
    }
    let lifted = multifactor_lift(f, &local, p, doublings);
    recombine(f.to_vec(), lifted, &modulus, &allowed)
}

/// Cyclotomic factors found by trial division, and the cofactor. These are
/// the worst case for recombination (Φ_n splits into φ(n)/ord_n(p) factors
/// mod p), so they are removed before the modular step.
fn split_cyclotomic(f: &[BigInt]) -> (Vec<ZPoly>, ZPoly) {
    let mut rest = f.to_vec();
    let mut found = Vec::new();
    let deg = (f.len() - 1) as u64;
    for n in indices_up_to_degree(deg) {
        if euler_phi(n) > (rest.len() - 1) as u64 {
            continue;
        }
        let phi = cyclotomic_poly(n).expect("n > 0");
        let (_, phi) = phi.primitive_int_part();
        if let Some(q) = zpoly::exact_div(&rest, &phi) {
            found.push(phi);
            rest = q;
            if rest.len() == 1 {
                break;
            }
        }
    }
    (found, rest)
}

/// Zassenhaus recombination: subsets tried in increasing size, then
/// lexicographic order; the first true divisor wins.
fn recombine(mut f: ZPoly, mut local: Vec<ZPoly>, modulus: &BigInt, allowed: &[bool]) -> Vec<ZPoly> {
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= local.len() {
        let mut hit = None;
        for subset in Combinations::new(local.len(), size) {
            let degree: usize = subset.iter().map(|&i| local[i].len() - 1).sum();
            if !allowed[degree] {
                continue;
            }
            let lc = f.last().unwrap().clone();
            let candidate = subset
                .iter()
                .fold(vec![lc.clone()], |acc, &i| zpoly::mul_mod(&acc, &local[i], modulus));
            let candidate = zpoly::symmetric(&candidate, modulus);
            // cheap necessary condition on constant terms
            let scaled_f0 = &lc * &f[0];
            if !candidate[0].is_zero() && !(&scaled_f0 % &candidate[0]).is_zero() {
                continue;
            }
            let factor = zpoly::primitive(&candidate);
            if let Some(q) = zpoly::exact_div(&f, &factor) {
                hit = Some((subset, factor, q));
                break;
            }
        }
        match hit {
            Some((subset, factor, q)) => {
                found.push(factor);
                f = q;
                local = local
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, u)| u)
                    .collect();
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        found.push(zpoly::primitive(&f));
    }
    found
}

/// Index subsets of `{0..n}` of a fixed size in lexicographic order.
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        let current = (k <= n).then(|| (0..k).collect());
        Combinations { n, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c.iter().copied())
    }

    fn factors_of(f: &QPoly) -> Vec<QPoly> {
        let fac = factor_over_rationals(f).unwrap();
        assert_eq!(fac.recompose(), *f);
        fac.factors
            .iter()
            .flat_map(|(g, e)| std::iter::repeat_n(g.clone(), *e))
            .collect()
    }

    #[test]
    fn combinations_lexicographic() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn spec_examples() {
        assert_eq!(factors_of(&p(&[-1, 0, 1])), vec![p(&[-1, 1]), p(&[1, 1])]);
        assert_eq!(factors_of(&p(&[2, 1, 0, 1])), vec![p(&[1, 1]), p(&[2, -1, 1])]);
        assert_eq!(
            factors_of(&p(&[1, 0, 1, 0, 1])),
            vec![p(&[1, -1, 1]), p(&[1, 1, 1])]
        );
        assert_eq!(factors_of(&p(&[-2, 0, 1])), vec![p(&[-2, 0, 1])]);
        assert!(factor_over_rationals(&QPoly::zero()).is_err());
    }

    #[test]
    fn constants_and_content() {
        let f = p(&[6, 6]); // 6(X + 1)
        let fac = factor_over_rationals(&f).unwrap();
        assert_eq!(fac.constant, Coeff::from_integer(6.into()));
        assert_eq!(fac.factors, vec![(p(&[1, 1]), 1)]);
        let c = factor_over_rationals(&p(&[-3])).unwrap();
        assert!(c.factors.is_empty());
    }

    #[test]
    fn x_power_minus_one_splits_into_divisor_count_factors() {
        for n in [12usize, 24, 30] {
            let fac = factor_over_rationals(&QPoly::x_pow_minus_one(n)).unwrap();
            let divisors = (1..=n).filter(|d| n % d == 0).count();
            assert_eq!(fac.factors.len(), divisors, "n = {n}");
            assert_eq!(fac.recompose(), QPoly::x_pow_minus_one(n));
        }
    }

    #[test]
    fn swinnerton_dyer_like_irreducible() {
        // X^4 - 10X^2 + 1 is irreducible over Q but splits modulo every prime.
        let f = p(&[1, 0, -10, 0, 1]);
        assert_eq!(factors_of(&f), vec![f.clone()]);
    }

    #[test]
    fn non_monic_and_repeated() {
        // (2X + 1)^2 (3X - 1)(X^2 + X + 1)
        let f = &(&p(&[1, 2]).pow(2) * &p(&[-1, 3])) * &p(&[1, 1, 1]);
        let fs = factors_of(&f);
        assert_eq!(fs.len(), 4);
    }

    #[test]
    fn binomials_that_split_modulo_every_small_prime() {
        // Eisenstein at 2, but X^28 - 2 has many factors modulo small primes.
        let mut c = vec![0i64; 29];
        c[0] = -2;
        c[28] = 1;
        let f = p(&c);
        assert_eq!(factors_of(&f), vec![f.clone()]);
        let mut c = vec![0i64; 31];
        c[0] = -3;
        c[30] = 1;
        let g = p(&c);
        assert_eq!(factors_of(&(&f * &g)).len(), 2);
    }

    #[test]
    fn cyclotomic_factors_are_split_off_first() {
        let f = QPoly::x_pow_minus_one(105);
        let fs = factors_of(&f);
        assert_eq!(fs.len(), 8);
        // with a non-monic, non-cyclotomic cofactor
        let g = &f * &p(&[1, 0, 3]);
        assert_eq!(factors_of(&g).len(), 9);
    }
}
