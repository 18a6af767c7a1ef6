//! Finite fields GF(p^f) with log/exp tables.
//!
//! An element is a `u32` index whose base-p digits are the coefficients of its
//! polynomial representative modulo the field's modulus.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::primes::{factor, is_prime};
use crate::error::{Error, Result};

pub type Fe = u32;

/// Largest field size the table construction accepts.
pub const FIELD_CAP: u64 = 1 << 20;

pub struct Field {
    p: u32,
    f: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_tab: Option<Vec<u16>>,
    mul_tab: Option<Vec<u16>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

impl PartialEq for Field {
    fn eq(&self, o: &Self) -> bool {
        self.p == o.p && self.f == o.f
    }
}
impl Eq for Field {}

fn registry() -> &'static Mutex<HashMap<(u32, u32), Arc<Field>>> {
    static R: OnceLock<Mutex<HashMap<(u32, u32), Arc<Field>>>> = OnceLock::new();
    R.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Field descriptor for GF(p^f); cached so that equal parameters give the same modulus.
pub fn ff_make(p: u32, f: u32) -> Result<Arc<Field>> {
    if !is_prime(p as u64) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    if f == 0 {
        return Err(Error::Precondition(
            "extension degree must be positive".into(),
        ));
    }
    let q = (p as u64).checked_pow(f).filter(|&q| q <= FIELD_CAP);
    let Some(q) = q else {
        return Err(Error::Cap(format!("{p}^{f} exceeds field cap {FIELD_CAP}")));
    };
    if let Some(k) = registry().lock().unwrap().get(&(p, f)) {
        return Ok(k.clone());
    }
    let k = Arc::new(Field::build(p, f, q as u32));
    Ok(registry()
        .lock()
        .unwrap()
        .entry((p, f))
        .or_insert(k)
        .clone())
}

/// GF(q) for a prime power q.
pub fn ff_of_order(q: u64) -> Result<Arc<Field>> {
    let fac = factor(q);
    if fac.len() != 1 {
        return Err(Error::Precondition(format!("{q} is not a prime power")));
    }
    ff_make(fac[0].0 as u32, fac[0].1)
}

// ---- dense polynomials over GF(p), used only while building tables ----

fn pmul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] += x as u64 * y as u64;
        }
    }
    let mut r: Vec<u32> = prod.iter().map(|&c| (c % p as u64) as u32).collect();
    preduce(&mut r, m, p);
    r
}

/// Reduce modulo a monic polynomial in place, result has length deg(m).
fn preduce(r: &mut Vec<u32>, m: &[u32], p: u32) {
    let d = m.len() - 1;
    while r.len() > d {
        let c = r.pop().unwrap();
        if c != 0 {
            let base = r.len() - d;
            for j in 0..d {
                r[base + j] = (r[base + j] + (p - c) * m[j] % p) % p;
            }
        }
    }
    r.resize(d, 0);
}

fn ppow_mod(a: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
    let d = m.len() - 1;
    let mut r = vec![0u32; d.max(1)];
    r[0] = 1;
    preduce(&mut r, m, p);
    let mut b = a.to_vec();
    preduce(&mut b, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = pmul_mod(&r, &b, m, p);
        }
        b = pmul_mod(&b, &b, m, p);
        e >>= 1;
    }
    r
}

fn pgcd(mut a: Vec<u32>, mut b: Vec<u32>, p: u32) -> Vec<u32> {
    let trim = |v: &mut Vec<u32>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let lb = *b.last().unwrap();
        let inv = super::primes::pow_mod(lb as u64, p as u64 - 2, p as u64) as u32;
        while a.len() >= b.len() {
            let c = (*a.last().unwrap() as u64 * inv as u64 % p as u64) as u32;
            let s = a.len() - b.len();
            for (j, &bj) in b.iter().enumerate() {
                a[s + j] = (a[s + j] + (p - c) * bj % p) % p;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// Rabin irreducibility test for a monic polynomial over GF(p).
pub(crate) fn is_irreducible_prime_field(m: &[u32], p: u32) -> bool {
    let f = m.len() - 1;
    if f == 1 {
        return true;
    }
    let x = vec![0u32, 1];
    let frob = |k: u32| {
        let mut r = x.clone();
        for _ in 0..k {
            r = ppow_mod(&r, p as u64, m, p);
        }
        r
    };
    let mut xf = frob(f as u32);
    let mut xr = x.clone();
    preduce(&mut xr, m, p);
    xf.resize(f, 0);
    if xf != xr {
        return false;
    }
    for (r, _) in factor(f as u64) {
        let mut t = frob(f as u32 / r as u32);
        t.resize(f.max(2), 0);
        t[1] = (t[1] + p - 1) % p;
        let g = pgcd(m.to_vec(), t, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

impl Field {
    fn build(p: u32, f: u32, q: u32) -> Field {
        // least monic irreducible: scan lower coefficients by integer index
        let mut modulus = Vec::new();
        for t in 0..q {
            let mut m: Vec<u32> = (0..f).map(|i| t / p.pow(i) % p).collect();
            m.push(1);
            if f == 1 || (m[0] != 0 && is_irreducible_prime_field(&m, p)) {
                modulus = m;
                break;
            }
        }
        let digits = |x: u32| -> Vec<u32> { (0..f).map(|i| x / p.pow(i) % p).collect() };
        let index = |v: &[u32]| -> u32 { v.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let order_is_full = |g: u32| -> bool {
            let gv = digits(g);
            factor((q - 1) as u64).iter().all(|&(r, _)| {
                let v = ppow_mod(&gv, (q as u64 - 1) / r, &modulus, p);
                index(&v) != 1
            })
        };
        let gen = if q == 2 {
            1
        } else {
            (2..q)
                .find(|&g| order_is_full(g))
                .expect("primitive element")
        };
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let gv = digits(gen);
        let mut cur = digits(1);
        for i in 0..q - 1 {
            let c = index(&cur);
            exp.push(c);
            log[c as usize] = i;
            cur = pmul_mod(&cur, &gv, &modulus, p);
        }
        let mut fld = Field {
            p,
            f,
            q,
            modulus,
            exp,
            log,
            add_tab: None,
            mul_tab: None,
        };
        if q <= 256 {
            let n = q as usize;
            let mut at = vec![0u16; n * n];
            let mut mt = vec![0u16; n * n];
            for a in 0..q {
                for b in 0..q {
                    at[a as usize * n + b as usize] = fld.add_slow(a, b) as u16;
                    mt[a as usize * n + b as usize] = fld.mul_slow(a, b) as u16;
                }
            }
            fld.add_tab = Some(at);
            fld.mul_tab = Some(mt);
        }
        fld
    }

    fn add_slow(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut r = 0;
        let mut pw = 1;
        for _ in 0..self.f {
            r += ((a % self.p + b % self.p) % self.p) * pw;
            a /= self.p;
            b /= self.p;
            pw *= self.p;
        }
        r
    }

    fn mul_slow(&self, a: Fe, b: Fe) -> Fe {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] as u64 + self.log[b as usize] as u64;
        self.exp[(s % (self.q as u64 - 1)) as usize]
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn f(&self) -> u32 {
        self.f
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    /// Monic modulus, low-degree coefficient first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        match &self.add_tab {
            Some(t) => t[a as usize * self.q as usize + b as usize] as Fe,
            None => self.add_slow(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        match &self.mul_tab {
            Some(t) => t[a as usize * self.q as usize + b as usize] as Fe,
            None => self.mul_slow(a, b),
        }
    }

    pub fn neg(&self, a: Fe) -> Fe {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut r = 0;
        let mut pw = 1;
        for _ in 0..self.f {
            r += ((self.p - a % self.p) % self.p) * pw;
            a /= self.p;
            pw *= self.p;
        }
        r
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a == 0 {
            return None;
        }
        let l = self.log[a as usize];
        Some(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn div(&self, a: Fe, b: Fe) -> Option<Fe> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u128 * e as u128 % (self.q as u128 - 1);
        self.exp[l as usize]
    }

    /// a^(p^k)
    pub fn frob(&self, a: Fe, k: u32) -> Fe {
        self.pow(a, (self.p as u64).pow(k % self.f))
    }

    pub fn from_int(&self, x: i64) -> Fe {
        x.rem_euclid(self.p as i64) as Fe
    }

    /// The primitive element used for the log tables (least index of full order).
    pub fn primitive(&self) -> Fe {
        if self.q == 2 {
            1
        } else {
            self.exp[1]
        }
    }

    pub fn log(&self, a: Fe) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn exp(&self, i: u64) -> Fe {
        self.exp[(i % (self.q as u64 - 1)) as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Fe) -> u64 {
        let l = self.log[a as usize] as u64;
        let n = self.q as u64 - 1;
        n / num_integer::gcd(l, n)
    }

    /// Element of exact multiplicative order d (d | q-1), the d-th root of the primitive power.
    pub fn element_of_order(&self, d: u64) -> Option<Fe> {
        let n = self.q as u64 - 1;
        (d > 0 && n % d == 0).then(|| self.exp(n / d))
    }

    pub fn is_square(&self, a: Fe) -> bool {
        a == 0 || self.p == 2 || self.log[a as usize] % 2 == 0
    }

    pub fn sqrt(&self, a: Fe) -> Option<Fe> {
        if a == 0 {
            return Some(0);
        }
        if self.p == 2 {
            return Some(self.pow(a, self.q as u64 / 2));
        }
        let l = self.log[a as usize];
        (l % 2 == 0).then(|| self.exp[(l / 2) as usize])
    }

    pub fn digits(&self, a: Fe) -> Vec<u32> {
        (0..self.f).map(|i| a / self.p.pow(i) % self.p).collect()
    }

    pub fn from_digits(&self, v: &[u32]) -> Fe {
        v.iter().rev().fold(0, |acc, &c| acc * self.p + c % self.p)
    }

    /// Trace to the subfield GF(p^d), d | f.
    pub fn trace_to(&self, a: Fe, d: u32) -> Fe {
        assert!(self.f % d == 0);
        let mut s = 0;
        let mut x = a;
        for _ in 0..self.f / d {
            s = self.add(s, x);
            x = self.frob(x, d);
        }
        s
    }

    /// Whether a lies in the subfield GF(p^d).
    pub fn in_subfield(&self, a: Fe, d: u32) -> bool {
        self.frob(a, d) == a
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        0..self.q
    }

    /// Evaluate a polynomial with coefficients in this field.
    pub fn eval_poly(&self, coeffs: &[Fe], x: Fe) -> Fe {
        coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }
}

/// Embedding small -> big as an index map (small.f must divide big.f, same p).
pub fn embedding(small: &Field, big: &Field) -> Result<Vec<Fe>> {
    if small.p != big.p || big.f % small.f != 0 {
        return Err(Error::Precondition(format!(
            "{small:?} does not embed in {big:?}"
        )));
    }
    let m: Vec<Fe> = small.modulus.iter().map(|&c| c).collect();
    let root = big
        .elements()
        .find(|&x| big.eval_poly(&m, x) == 0)
        .ok_or_else(|| Error::Internal("no root of subfield modulus".into()))?;
    Ok(small
        .elements()
        .map(|a| {
            let d = small.digits(a);
            big.eval_poly(&d, root)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli() {
        assert_eq!(ff_make(2, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(ff_make(2, 2).unwrap().modulus(), &[1, 1, 1]);
        // brute force: least monic quadratic over GF(3) without roots
        let mut want = None;
        'scan: for t in 0..9u32 {
            let (c0, c1) = (t % 3, t / 3);
            for x in 0..3 {
                if (x * x + c1 * x + c0) % 3 == 0 {
                    continue 'scan;
                }
            }
            want = Some(vec![c0, c1, 1]);
            break;
        }
        assert_eq!(ff_make(3, 2).unwrap().modulus(), &want.unwrap()[..]);
        assert!(ff_make(4, 1).is_err());
        assert!(ff_make(2, 40).is_err());
    }

    #[test]
    fn fermat_and_field_axioms() {
        for (p, f) in [
            (2, 1),
            (2, 3),
            (3, 2),
            (5, 1),
            (2, 6),
            (7, 2),
            (3, 5),
            (2, 10),
        ] {
            let k = ff_make(p, f).unwrap();
            let q = k.q() as u64;
            for x in 1..k.q() {
                assert_eq!(k.pow(x, q - 1), 1);
                assert_eq!(k.mul(x, k.inv(x).unwrap()), 1);
                assert_eq!(k.add(x, k.neg(x)), 0);
            }
            let g = k.primitive();
            assert_eq!(k.order(g), q - 1);
            assert!((1..g).all(|h| k.order(h) < q - 1 || q == 2));
            // distributivity spot check
            for a in (0..k.q()).step_by(7) {
                for b in (0..k.q()).step_by(5) {
                    let c = k.q() - 1;
                    assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn subfield_embedding_is_ring_map() {
        let s = ff_make(2, 2).unwrap();
        let b = ff_make(2, 6).unwrap();
        let e = embedding(&s, &b).unwrap();
        for x in s.elements() {
            assert!(b.in_subfield(e[x as usize], 2));
            for y in s.elements() {
                assert_eq!(e[s.mul(x, y) as usize], b.mul(e[x as usize], e[y as usize]));
                assert_eq!(e[s.add(x, y) as usize], b.add(e[x as usize], e[y as usize]));
            }
        }
    }
}
