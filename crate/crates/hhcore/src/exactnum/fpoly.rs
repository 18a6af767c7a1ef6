//! Polynomials over GF(q): arithmetic, gcd, and factorization.
//!
//! A polynomial is a `Vec<Fe>` with the constant term first and no trailing zeros.

use num_bigint::BigUint;
use num_traits::One;

use super::field::{Fe, Field};

pub type FPoly = Vec<Fe>;

pub fn trim(mut a: FPoly) -> FPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[Fe]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn add(k: &Field, a: &[Fe], b: &[Fe]) -> FPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| k.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect(),
    )
}

pub fn sub(k: &Field, a: &[Fe], b: &[Fe]) -> FPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| k.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect(),
    )
}

pub fn scale(k: &Field, a: &[Fe], c: Fe) -> FPoly {
    trim(a.iter().map(|&x| k.mul(x, c)).collect())
}

pub fn mul(k: &Field, a: &[Fe], b: &[Fe]) -> FPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = k.add(r[i + j], k.mul(x, y));
        }
    }
    trim(r)
}

pub fn monic(k: &Field, a: &[Fe]) -> FPoly {
    match a.last() {
        None => vec![],
        Some(&lc) => scale(k, a, k.inv(lc).unwrap()),
    }
}

pub fn divrem(k: &Field, a: &[Fe], b: &[Fe]) -> (FPoly, FPoly) {
    let db = degree(b).expect("division by zero polynomial");
    let inv = k.inv(b[db]).unwrap();
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![0; r.len() - db];
    while r.len() > db {
        let s = r.len() - 1 - db;
        let c = k.mul(*r.last().unwrap(), inv);
        q[s] = c;
        for j in 0..=db {
            r[s + j] = k.sub(r[s + j], k.mul(c, b[j]));
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(k: &Field, a: &[Fe], b: &[Fe]) -> FPoly {
    divrem(k, a, b).1
}

pub fn gcd(k: &Field, a: &[Fe], b: &[Fe]) -> FPoly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(k, &a, &b);
        a = b;
        b = r;
    }
    monic(k, &a)
}

pub fn derivative(k: &Field, a: &[Fe]) -> FPoly {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| k.mul(c, k.from_int(i as i64)))
            .collect(),
    )
}

pub fn powmod(k: &Field, a: &[Fe], e: &BigUint, m: &[Fe]) -> FPoly {
    let mut r = rem(k, &[1], m);
    let mut b = rem(k, a, m);
    for i in 0..e.bits() {
        if e.bit(i) {
            r = rem(k, &mul(k, &r, &b), m);
        }
        b = rem(k, &mul(k, &b, &b), m);
    }
    r
}

pub fn powmod_u64(k: &Field, a: &[Fe], e: u64, m: &[Fe]) -> FPoly {
    powmod(k, a, &BigUint::from(e), m)
}

pub fn eval(k: &Field, a: &[Fe], x: Fe) -> Fe {
    k.eval_poly(a, x)
}

/// Square-free decomposition: pairs (square-free factor, multiplicity).
pub fn squarefree(k: &Field, f: &[Fe]) -> Vec<(FPoly, usize)> {
    let f = monic(k, f);
    let mut out = Vec::new();
    if degree(&f).unwrap_or(0) == 0 {
        return out;
    }
    let p = k.p() as usize;
    let d = derivative(k, &f);
    if d.is_empty() {
        // f = g(x^p); take p-th roots of coefficients
        let g: FPoly = (0..f.len())
            .step_by(p)
            .map(|i| k.pow(f[i], k.q() as u64 / k.p() as u64))
            .collect();
        for (h, m) in squarefree(k, &g) {
            out.push((h, m * p));
        }
        return out;
    }
    let mut c = gcd(k, &f, &d);
    let mut w = divrem(k, &f, &c).0;
    let mut i = 1;
    while degree(&w).unwrap_or(0) > 0 {
        let y = gcd(k, &w, &c);
        let z = divrem(k, &w, &y).0;
        if degree(&z).unwrap_or(0) > 0 {
            out.push((monic(k, &z), i));
        }
        i += 1;
        w = y;
        c = divrem(k, &c, &w).0;
    }
    if degree(&c).unwrap_or(0) > 0 {
        let g: FPoly = (0..c.len())
            .step_by(p)
            .map(|i| k.pow(c[i], k.q() as u64 / k.p() as u64))
            .collect();
        for (h, m) in squarefree(k, &g) {
            out.push((h, m * p));
        }
    }
    out
}

/// Distinct-degree factorization of a monic square-free polynomial.
pub fn distinct_degree(k: &Field, f: &[Fe]) -> Vec<(FPoly, usize)> {
    let mut out = Vec::new();
    let mut f = monic(k, f);
    let x = vec![0, 1];
    let mut h = rem(k, &x, &f);
    let q = BigUint::from(k.q());
    let mut d = 0;
    while degree(&f).unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = powmod(k, &h, &q, &f);
        let g = gcd(k, &f, &sub(k, &h, &x));
        if degree(&g).unwrap_or(0) > 0 {
            out.push((g.clone(), d));
            f = divrem(k, &f, &g).0;
            h = rem(k, &h, &f);
        }
    }
    if degree(&f).unwrap_or(0) > 0 {
        let df = degree(&f).unwrap();
        out.push((f, df));
    }
    out
}

fn nth_poly(k: &Field, mut idx: u64, len: usize) -> FPoly {
    let q = k.q() as u64;
    let mut v = Vec::with_capacity(len);
    for _ in 0..len {
        v.push((idx % q) as Fe);
        idx /= q;
    }
    trim(v)
}

/// Equal-degree splitting with deterministic candidate sequence.
pub fn equal_degree(k: &Field, f: &[Fe], d: usize) -> Vec<FPoly> {
    let n = degree(f).unwrap();
    if n == d {
        return vec![monic(k, f)];
    }
    let len = n;
    let mut idx = k.q() as u64;
    loop {
        let a = nth_poly(k, idx, len);
        idx += 1;
        if degree(&a).unwrap_or(0) == 0 {
            continue;
        }
        let t = if k.p() == 2 {
            // trace polynomial a + a^2 + ... + a^(2^(f d - 1))
            let mut s: FPoly = vec![];
            let mut cur = rem(k, &a, f);
            for _ in 0..(k.f() as usize * d) {
                s = add(k, &s, &cur);
                cur = rem(k, &mul(k, &cur, &cur), f);
            }
            s
        } else {
            let e = (BigUint::from(k.q()).pow(d as u32) - BigUint::one()) >> 1;
            sub(k, &powmod(k, &a, &e, f), &[1])
        };
        let g = gcd(k, f, &t);
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let h = divrem(k, f, &g).0;
            let mut out = equal_degree(k, &g, d);
            out.extend(equal_degree(k, &h, d));
            return out;
        }
    }
}

/// Monic irreducible factorization, sorted by (degree, coefficients), with multiplicities.
pub fn factor(k: &Field, f: &[Fe]) -> Vec<(FPoly, usize)> {
    let mut out = Vec::new();
    for (s, m) in squarefree(k, f) {
        for (g, d) in distinct_degree(k, &s) {
            for h in equal_degree(k, &g, d) {
                out.push((h, m));
            }
        }
    }
    out.sort_by(|a, b| {
        (a.0.len(), a.0.iter().rev().collect::<Vec<_>>())
            .cmp(&(b.0.len(), b.0.iter().rev().collect::<Vec<_>>()))
    });
    // merge equal factors appearing from different square-free layers
    let mut merged: Vec<(FPoly, usize)> = Vec::new();
    for (g, m) in out {
        match merged.last_mut() {
            Some((h, mm)) if *h == g => *mm += m,
            _ => merged.push((g, m)),
        }
    }
    merged
}

pub fn is_irreducible(k: &Field, f: &[Fe]) -> bool {
    let Some(n) = degree(f) else { return false };
    if n == 0 {
        return false;
    }
    let fac = factor(k, f);
    fac.len() == 1 && fac[0].1 == 1 && degree(&fac[0].0) == Some(n)
}

pub fn roots(k: &Field, f: &[Fe]) -> Vec<Fe> {
    let mut r: Vec<Fe> = factor(k, f)
        .into_iter()
        .filter(|(g, _)| degree(g) == Some(1))
        .map(|(g, _)| k.neg(g[0]))
        .collect();
    r.sort_unstable();
    r
}

pub fn is_zero(a: &[Fe]) -> bool {
    a.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::field::ff_make;

    fn product(k: &Field, fac: &[(FPoly, usize)]) -> FPoly {
        let mut r = vec![1];
        for (g, m) in fac {
            for _ in 0..*m {
                r = mul(k, &r, g);
            }
        }
        r
    }

    #[test]
    fn factor_reconstructs() {
        for (p, f) in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1), (2, 3)] {
            let k = ff_make(p, f).unwrap();
            let q = k.q() as u64;
            for idx in [
                q * q + 1,
                q.pow(5) + 3,
                q.pow(6) + q.pow(3) + 7,
                2 * q.pow(4) + q,
            ] {
                let a = monic(&k, &nth_poly(&k, idx, 12));
                let fac = factor(&k, &a);
                assert_eq!(product(&k, &fac), a, "GF({q}) idx {idx}");
                for (g, _) in &fac {
                    // irreducible: no factor of degree <= deg/2 by brute-force roots when small
                    if degree(g) == Some(2) || degree(g) == Some(3) {
                        assert!(k.elements().all(|x| eval(&k, g, x) != 0));
                    }
                }
            }
        }
    }

    #[test]
    fn x_q_minus_x_splits() {
        let k = ff_make(3, 2).unwrap();
        let mut f = vec![0; 10];
        f[9] = 1;
        f[1] = k.neg(1);
        let r = roots(&k, &f);
        assert_eq!(r, (0..9).collect::<Vec<_>>());
    }

    #[test]
    fn repeated_factors() {
        let k = ff_make(2, 1).unwrap();
        // (x+1)^4 (x^2+x+1)^2
        let a = product(&k, &[(vec![1, 1], 4), (vec![1, 1, 1], 2)]);
        let fac = factor(&k, &a);
        assert_eq!(fac, vec![(vec![1, 1], 4), (vec![1, 1, 1], 2)]);
        assert!(is_irreducible(&k, &[1, 1, 0, 0, 1]));
        assert!(!is_irreducible(&k, &[1, 0, 0, 0, 1]));
    }
}
