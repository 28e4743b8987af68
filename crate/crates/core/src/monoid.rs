//! Finitely generated Puiseux monoids and their numerical normal forms.

use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{gcd_all, lcm_denominators, Int, Rat};

/// Upper bound on the smallest numerical generator and on walk lengths.
pub const MAX_NUMERICAL_SIZE: u64 = 10_000_000;

/// A numerical monoid `<a_1, ..., a_k>` with `gcd(a_i) = 1`.
#[derive(Clone)]
pub struct NumericalMonoid {
    generators: Vec<u64>,
    apery: OnceLock<Vec<u64>>,
}

impl NumericalMonoid {
    pub fn new(mut generators: Vec<u64>) -> Result<NumericalMonoid> {
        generators.sort_unstable();
        generators.dedup();
        if generators.first().is_none_or(|&g| g == 0) {
            return Err(Error::domain("numerical monoid needs positive generators"));
        }
        if generators.iter().fold(0u64, |a, &g| a.gcd(&g)) != 1 {
            return Err(Error::domain("numerical monoid generators must have gcd 1"));
        }
        if generators[0] > MAX_NUMERICAL_SIZE {
            return Err(Error::ResourceLimit(format!(
                "smallest generator {} exceeds {MAX_NUMERICAL_SIZE}",
                generators[0]
            )));
        }
        Ok(NumericalMonoid {
            generators,
            apery: OnceLock::new(),
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Apéry set with respect to the smallest generator `a`: entry `i` is the
    /// least member congruent to `i` mod `a`.
    pub fn apery_set(&self) -> &[u64] {
        self.apery.get_or_init(|| round_robin_apery(&self.generators))
    }

    pub fn contains(&self, n: u64) -> bool {
        let a = self.generators[0];
        let w = self.apery_set();
        n >= w[(n % a) as usize]
    }

    pub fn contains_int(&self, n: &Int) -> bool {
        if n < &Int::zero() {
            return false;
        }
        match n.to_u64() {
            Some(v) => self.contains(v),
            None => {
                let a = self.generators[0];
                let i = (n % a).to_usize().unwrap();
                n >= &Int::from(self.apery_set()[i])
            }
        }
    }

    /// Largest integer not in the monoid, or `None` for `N = Z_+`.
    pub fn frobenius(&self) -> Option<u64> {
        let a = self.generators[0];
        let max = *self.apery_set().iter().max().unwrap();
        (a > 1).then(|| max - a)
    }
}

/// Round-robin relaxation over residue classes modulo the smallest generator.
fn round_robin_apery(gens: &[u64]) -> Vec<u64> {
    let a = gens[0];
    let size = a as usize;
    let mut w = vec![u64::MAX; size];
    w[0] = 0;
    for &g in &gens[1..] {
        let d = a.gcd(&g) as usize;
        let step = (g % a) as usize;
        let cycle = size / d;
        for start in 0..d {
            // minimum of the residue cycle through `start`
            let mut best = start;
            let mut i = start;
            for _ in 0..cycle {
                if w[i] < w[best] {
                    best = i;
                }
                i = (i + step) % size;
            }
            if w[best] == u64::MAX {
                continue;
            }
            let mut n = best;
            for _ in 0..cycle {
                let next = (n + step) % size;
                let cand = w[n].saturating_add(g);
                if cand < w[next] {
                    w[next] = cand;
                }
                n = next;
            }
        }
    }
    w
}

impl fmt::Debug for NumericalMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalMonoid{:?}", self.generators)
    }
}

impl PartialEq for NumericalMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalMonoid {}

/// The submonoid of `Q_+` generated by finitely many positive rationals.
///
/// Every such monoid is reduced and isomorphic, through `x -> r x`, to a
/// numerical monoid; membership and divisor queries go through that image.
#[derive(Clone)]
pub struct PuiseuxMonoid {
    generators: Vec<Rat>,
    scale: Rat,
    numerical: NumericalMonoid,
}

impl PuiseuxMonoid {
    pub fn new(mut generators: Vec<Rat>) -> Result<PuiseuxMonoid> {
        generators.sort();
        generators.dedup();
        if generators.is_empty() {
            return Err(Error::domain("a monoid needs at least one generator"));
        }
        if generators[0].is_zero() {
            return Err(Error::domain("generators must be positive"));
        }
        let l = lcm_denominators(&generators)?;
        let scaled: Vec<Int> = generators
            .iter()
            .map(|g| g.numer() * (&l / g.denom()))
            .collect();
        let g = gcd_all(&scaled);
        let ints = scaled
            .iter()
            .map(|x| {
                (x / &g).to_u64().ok_or_else(|| {
                    Error::ResourceLimit(format!("normalized generator {} is too large", x / &g))
                })
            })
            .collect::<Result<Vec<u64>>>()?;
        let numerical = NumericalMonoid::new(ints)?;
        Ok(PuiseuxMonoid {
            generators,
            scale: Rat::new(l, g)?,
            numerical,
        })
    }

    /// Parses generator literals like `["1/2", "2/3"]`.
    pub fn from_strs(gens: &[&str]) -> Result<PuiseuxMonoid> {
        PuiseuxMonoid::new(gens.iter().map(|s| s.parse()).collect::<Result<_>>()?)
    }

    pub fn generators(&self) -> &[Rat] {
        &self.generators
    }

    /// `(r, N)` with `r * S = N`.
    pub fn normalize_to_numerical(&self) -> (&Rat, &NumericalMonoid) {
        (&self.scale, &self.numerical)
    }

    /// `r * q` as an integer, if it is one.
    fn scaled(&self, q: &Rat) -> Option<Int> {
        let x = q * &self.scale;
        x.is_integer().then(|| x.numer().clone())
    }

    pub fn contains(&self, q: &Rat) -> bool {
        self.scaled(q)
            .is_some_and(|n| self.numerical.contains_int(&n))
    }

    /// `{ t in S : s - t in S }`, ascending.
    pub fn divisors_in_monoid(&self, s: &Rat) -> Result<Vec<Rat>> {
        if !self.contains(s) {
            return Err(Error::domain(format!("{s} is not in the monoid {self}")));
        }
        let n = self.scaled(s).unwrap();
        let n = n
            .to_u64()
            .filter(|&n| n <= MAX_NUMERICAL_SIZE)
            .ok_or_else(|| Error::ResourceLimit(format!("divisor walk up to {n}")))?;
        let inv = self.scale.recip()?;
        Ok((0..=n)
            .filter(|&t| self.numerical.contains(t) && self.numerical.contains(n - t))
            .map(|t| &Rat::from_integer(t) * &inv)
            .collect())
    }

    /// The minimal generating set: generators that are not sums of two
    /// nonzero members.
    pub fn atoms(&self) -> Result<Vec<Rat>> {
        let ints = self.numerical.generators();
        if let Some(&max) = ints.last() {
            if max > MAX_NUMERICAL_SIZE {
                return Err(Error::ResourceLimit(format!("atom search up to {max}")));
            }
        }
        let inv = self.scale.recip()?;
        let mut atoms = Vec::new();
        for (i, &g) in ints.iter().enumerate() {
            let others: Vec<u64> = ints[..i].to_vec();
            if !reachable(&others, g) {
                atoms.push(&Rat::from_integer(g) * &inv);
            }
        }
        Ok(atoms)
    }

    /// The monoid `r S`.
    pub fn scaled_by(&self, r: &Rat) -> Result<PuiseuxMonoid> {
        if r.is_zero() {
            return Err(Error::domain("scaling factor must be positive"));
        }
        PuiseuxMonoid::new(self.generators.iter().map(|g| g * r).collect())
    }
}

/// Whether `target` is a non-negative integer combination of `gens`.
fn reachable(gens: &[u64], target: u64) -> bool {
    let n = target as usize;
    let mut ok = vec![false; n + 1];
    ok[0] = true;
    for x in 1..=n {
        ok[x] = gens.iter().any(|&g| (g as usize) <= x && ok[x - g as usize]);
    }
    ok[n]
}

pub fn normalize_to_numerical(s: &PuiseuxMonoid) -> (Rat, NumericalMonoid) {
    let (r, n) = s.normalize_to_numerical();
    (r.clone(), n.clone())
}

pub fn contains(s: &PuiseuxMonoid, q: &Rat) -> bool {
    s.contains(q)
}

pub fn divisors_in_monoid(s: &PuiseuxMonoid, q: &Rat) -> Result<Vec<Rat>> {
    s.divisors_in_monoid(q)
}

pub fn monoid_atoms(s: &PuiseuxMonoid) -> Result<Vec<Rat>> {
    s.atoms()
}

impl PartialEq for PuiseuxMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for PuiseuxMonoid {}

impl fmt::Display for PuiseuxMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::format_monoid(self))
    }
}

impl fmt::Debug for PuiseuxMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PuiseuxMonoid{self}")
    }
}
