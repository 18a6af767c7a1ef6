//! Cyclotomic integers: elements of Z[zeta_N] stored as length-N coefficient vectors.

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;

use super::zpoly::cyclotomic_i64;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CycInt {
    n: u32,
    coeffs: Vec<i64>,
}

fn ck(x: Option<i64>) -> i64 {
    x.expect("cyclotomic coefficient overflow")
}

impl CycInt {
    pub fn zero(n: u32) -> Self {
        assert!(n >= 1);
        CycInt {
            n,
            coeffs: vec![0; n as usize],
        }
    }

    pub fn from_int(x: i64) -> Self {
        CycInt {
            n: 1,
            coeffs: vec![x],
        }
    }

    /// zeta_n^k
    pub fn zeta(n: u32, k: i64) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[k.rem_euclid(n as i64) as usize] = 1;
        z
    }

    pub fn from_coeffs(n: u32, coeffs: Vec<i64>) -> Self {
        assert_eq!(
            coeffs.len(),
            n as usize,
            "coefficient vector length must equal conductor"
        );
        CycInt { n, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Same element written over zeta_m, where n | m.
    pub fn embed(&self, m: u32) -> Self {
        assert!(
            m % self.n == 0,
            "conductor {} does not divide {}",
            self.n,
            m
        );
        if m == self.n {
            return self.clone();
        }
        let s = (m / self.n) as usize;
        let mut c = vec![0; m as usize];
        for (j, &x) in self.coeffs.iter().enumerate() {
            c[j * s] = x;
        }
        CycInt { n: m, coeffs: c }
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let m = a.n.lcm(&b.n);
        (a.embed(m), b.embed(m))
    }

    pub fn add(&self, o: &Self) -> Self {
        let (mut a, b) = Self::common(self, o);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x = ck(x.checked_add(*y));
        }
        a
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        CycInt {
            n: self.n,
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        CycInt {
            n: self.n,
            coeffs: self.coeffs.iter().map(|x| ck(x.checked_mul(k))).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = Self::common(self, o);
        let n = a.n as usize;
        let mut c = vec![0i64; n];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                if y != 0 {
                    let k = (i + j) % n;
                    c[k] = ck(c[k].checked_add(ck(x.checked_mul(y))));
                }
            }
        }
        CycInt { n: a.n, coeffs: c }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = CycInt::from_int(1).embed(self.n);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Complex conjugation zeta -> zeta^-1.
    pub fn conj(&self) -> Self {
        self.galois_unchecked(-1)
    }

    /// zeta_N -> zeta_N^t for gcd(t, N) = 1.
    pub fn galois_power(&self, t: i64) -> Result<Self> {
        if t.gcd(&(self.n as i64)) != 1 {
            return Err(Error::Precondition(format!(
                "galois power {t} not coprime to conductor {}",
                self.n
            )));
        }
        Ok(self.galois_unchecked(t))
    }

    fn galois_unchecked(&self, t: i64) -> Self {
        let n = self.n as i64;
        let mut c = vec![0; self.n as usize];
        for (j, &x) in self.coeffs.iter().enumerate() {
            c[(j as i64 * t).rem_euclid(n) as usize] += x;
        }
        CycInt {
            n: self.n,
            coeffs: c,
        }
    }

    /// Coordinates in the power basis 1, zeta, ..., zeta^(phi(N)-1).
    pub fn reduced(&self) -> Vec<i64> {
        let phi = cyclotomic_i64(self.n as usize);
        let d = phi.len() - 1;
        let mut v = self.coeffs.clone();
        for k in (d..v.len()).rev() {
            let c = v[k];
            if c == 0 {
                continue;
            }
            let base = k - d;
            for (j, &pj) in phi.iter().enumerate() {
                v[base + j] = ck(v[base + j].checked_sub(ck(c.checked_mul(pj))));
            }
        }
        v.truncate(d);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&x| x == 0) || self.reduced().iter().all(|&x| x == 0)
    }

    /// The rational integer value, if the element is rational.
    pub fn as_integer(&self) -> Option<i64> {
        let r = self.reduced();
        if r.iter().skip(1).all(|&x| x == 0) {
            Some(r.first().copied().unwrap_or(0))
        } else {
            None
        }
    }

    /// Exact division by a rational integer.
    pub fn div_int(&self, k: i64) -> Result<Self> {
        let r = self.reduced();
        if r.iter().any(|x| x % k != 0) {
            return Err(Error::Inexact(format!("{self} not divisible by {k}")));
        }
        let mut c = vec![0; self.n as usize];
        for (j, x) in r.into_iter().enumerate() {
            c[j] = x / k;
        }
        Ok(CycInt {
            n: self.n,
            coeffs: c,
        })
    }

    /// Canonical form: reduced coordinates padded to length N.
    pub fn canonical(&self) -> Self {
        let mut c = self.reduced();
        c.resize(self.n as usize, 0);
        CycInt {
            n: self.n,
            coeffs: c,
        }
    }
}

impl PartialEq for CycInt {
    fn eq(&self, o: &Self) -> bool {
        self.sub(o).is_zero()
    }
}
impl Eq for CycInt {}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match (j, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => write!(f, "z{}^{}", self.n, j)?,
                _ => write!(f, "{a}*z{}^{}", self.n, j)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_identities() {
        assert_eq!(CycInt::zeta(4, 1).pow(2), CycInt::from_int(-1));
        let s = CycInt::from_int(1)
            .add(&CycInt::zeta(3, 1))
            .add(&CycInt::zeta(3, 2));
        assert!(s.is_zero());
        assert_eq!(
            CycInt::zeta(8, 1).mul(&CycInt::zeta(8, 7)),
            CycInt::from_int(1)
        );
        assert!(CycInt::zeta(6, 1).galois_power(2).is_err());
        assert_eq!(
            CycInt::zeta(5, 1).add(&CycInt::zeta(5, 4)).as_integer(),
            None
        );
    }

    #[test]
    fn mixed_conductors() {
        // zeta_3 = zeta_6^2 and -zeta_6^3 = 1
        assert_eq!(CycInt::zeta(3, 1), CycInt::zeta(6, 2));
        assert_eq!(CycInt::zeta(6, 3).neg(), CycInt::from_int(1));
        let x = CycInt::zeta(4, 1).add(&CycInt::zeta(3, 1));
        assert_eq!(x.conductor(), 12);
    }

    fn arb(n: u32) -> impl Strategy<Value = CycInt> {
        proptest::collection::vec(-20i64..20, n as usize)
            .prop_map(move |c| CycInt::from_coeffs(n, c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb(12), b in arb(8), c in arb(9)) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        }

        #[test]
        fn galois_is_ring_map(a in arb(15), b in arb(15), t in prop::sample::select(vec![1i64, 2, 4, 7, 8, 11, 13, 14])) {
            let g = |x: &CycInt| x.galois_power(t).unwrap();
            prop_assert_eq!(g(&a.mul(&b)), g(&a).mul(&g(&b)));
            prop_assert_eq!(g(&a.add(&b)), g(&a).add(&g(&b)));
        }
    }
}
