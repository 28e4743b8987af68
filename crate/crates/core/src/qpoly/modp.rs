//! Dense polynomials over F_p (p < 2^31) and Berlekamp factorization.
//!
//! Coefficient vectors are little-endian and kept trimmed: no trailing zeros,
//! the zero polynomial is the empty vector.

pub(crate) type PolyP = Vec<u64>;

pub(crate) fn trim(mut a: PolyP) -> PolyP {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn deg(a: &[u64]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a, p - 2, p)
}

fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
pub(crate) fn add(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(out)
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(out)
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> PolyP {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub(crate) fn scale(a: &[u64], c: u64, p: u64) -> PolyP {
    trim(a.iter().map(|&x| x * c % p).collect())
}

pub(crate) fn make_monic(a: &[u64], p: u64) -> PolyP {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, inv(lc, p), p),
    }
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(a: &[u64], b: &[u64], p: u64) -> (PolyP, PolyP) {
    let db = deg(b).expect("division by zero polynomial");
    let lc_inv = inv(b[db], p);
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![0u64; r.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i] * lc_inv % p;
        if c == 0 {
            continue;
        }
        q[i - db] = c;
        for (j, &bj) in b.iter().enumerate() {
            let k = i - db + j;
            r[k] = (r[k] + p - c * bj % p) % p;
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub(crate) fn rem(a: &[u64], b: &[u64], p: u64) -> PolyP {
    divrem(a, b, p).1
}

/// Monic gcd.
pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    make_monic(&a, p)
}

/// Returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub(crate) fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (PolyP, PolyP, PolyP) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match r0.last() {
        None => (Vec::new(), s0, t0),
        Some(&lc) => {
            let c = inv(lc, p);
            (scale(&r0, c, p), scale(&s0, c, p), scale(&t0, c, p))
        }
    }
}

pub(crate) fn derivative(a: &[u64], p: u64) -> PolyP {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> PolyP {
    rem(&mul(a, b, p), m, p)
}

fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> PolyP {
    let mut acc = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &b, m, p);
        }
        b = mulmod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn is_squarefree(a: &[u64], p: u64) -> bool {
    match deg(a) {
        None => false,
        Some(0) => true,
        Some(_) => {
            let d = derivative(a, p);
            !d.is_empty() && deg(&gcd(a, &d, p)) == Some(0)
        }
    }
}

/// Null space of an `n x n` matrix over F_p, one basis vector per free column.
fn null_space(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let cols = if n == 0 { 0 } else { m[0].len() };
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(piv) = (row..n).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, piv);
        let c = inv(m[row][col], p);
        for x in m[row].iter_mut() {
            *x = *x * c % p;
        }
        let pivot = m[row].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r != row && line[col] != 0 {
                let f = line[col];
                for (x, &y) in line.iter_mut().zip(&pivot) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = (p - m[r][free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// Complete factorization of a monic squarefree polynomial over F_p into
/// monic irreducibles, sorted by (degree, coefficients).
pub(crate) fn berlekamp(f: &[u64], p: u64) -> Vec<PolyP> {
    let n = deg(f).expect("zero polynomial");
    if n <= 1 {
        return vec![f.to_vec()];
    }
    // Row i holds X^{ip} mod f.
    let xp = powmod(&[0, 1], p, f, p);
    let mut rows = Vec::with_capacity(n);
    let mut cur = vec![1u64];
    for _ in 0..n {
        let mut r = cur.clone();
        r.resize(n, 0);
        rows.push(r);
        cur = mulmod(&cur, &xp, f, p);
    }
    // v (Q - I) = 0  <=>  (Q - I)^T v^T = 0
    let mut a = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let q = rows[i][j];
            let v = if i == j { (q + p - 1) % p } else { q };
            a[j][i] = v;
        }
    }
    let basis = null_space(a, p);
    let r = basis.len();
    let mut factors = vec![f.to_vec()];
    if r == 1 {
        return factors;
    }
    'outer: for v in basis.iter().map(|v| trim(v.clone())) {
        if deg(&v).unwrap_or(0) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for u in std::mem::take(&mut factors) {
            if deg(&u) == Some(1) {
                next.push(u);
                continue;
            }
            let mut u = u;
            for s in 0..p {
                if deg(&u) == Some(1) {
                    break;
                }
                let shifted = sub(&v, &[s], p);
                let g = gcd(&u, &shifted, p);
                let dg = deg(&g).unwrap_or(0);
                if dg > 0 && dg < deg(&u).unwrap() {
                    u = divrem(&u, &g, p).0;
                    next.push(g);
                }
            }
            next.push(u);
        }
        factors = next;
        if factors.len() == r {
            break 'outer;
        }
    }
    debug_assert_eq!(factors.len(), r);
    let mut factors: Vec<_> = factors.into_iter().map(|u| make_monic(&u, p)).collect();
    factors.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    factors
}
