//! Polynomials over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZPoly {
    /// Low-degree first; no trailing zeros.
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        ZPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// x^k + c
    pub fn binomial(k: usize, c: i64) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] += 1;
        v[0] += c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, o: &ZPoly) -> ZPoly {
        if self.is_zero() || o.is_zero() {
            return ZPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        ZPoly::new(v)
    }

    /// Exact division; fails unless o divides self over the integers.
    pub fn div_exact(&self, o: &ZPoly) -> Result<ZPoly> {
        let (q, r) = self.divrem_monicish(o)?;
        if !r.is_zero() {
            return Err(Error::Inexact("polynomial division has remainder".into()));
        }
        Ok(q)
    }

    /// Division by a divisor whose leading coefficient is a unit.
    pub fn divrem_monicish(&self, o: &ZPoly) -> Result<(ZPoly, ZPoly)> {
        let d = o
            .degree()
            .ok_or_else(|| Error::Precondition("division by zero polynomial".into()))?;
        let lc = &o.coeffs[d];
        let mut r = self.coeffs.clone();
        if r.len() <= d {
            return Ok((ZPoly::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - d];
        for i in (0..q.len()).rev() {
            let c = &r[i + d];
            if c.is_zero() {
                continue;
            }
            let (qq, rem) = c.div_rem(lc);
            if !rem.is_zero() {
                return Err(Error::Inexact("non-integral quotient coefficient".into()));
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                r[i + j] -= &qq * b;
            }
            q[i] = qq;
        }
        Ok((ZPoly::new(q), ZPoly::new(r)))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{a}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// The m-th cyclotomic polynomial.
pub fn cyclotomic(m: usize) -> ZPoly {
    assert!(m >= 1);
    let mut p = ZPoly::binomial(m, -1);
    for d in 1..m {
        if m % d == 0 {
            p = p.div_exact(&cyclotomic(d)).expect("cyclotomic divisor");
        }
    }
    p
}

/// Cyclotomic polynomial coefficients as machine integers, for reductions in Z[zeta].
pub fn cyclotomic_i64(m: usize) -> Vec<i64> {
    cyclotomic_cached(m)
}

fn cyclotomic_cached(m: usize) -> Vec<i64> {
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&m) {
        return v.clone();
    }
    // x^m - 1 divided by Phi_d for proper divisors, with i64 arithmetic
    let mut num: Vec<i64> = vec![0; m + 1];
    num[0] = -1;
    num[m] = 1;
    for d in 1..m {
        if m % d == 0 {
            let den = cyclotomic_cached(d);
            num = div_monic_i64(&num, &den);
        }
    }
    cache.lock().unwrap().insert(m, num.clone());
    num
}

fn div_monic_i64(a: &[i64], b: &[i64]) -> Vec<i64> {
    let d = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0i64; a.len() - d];
    for i in (0..q.len()).rev() {
        let c = r[i + d];
        if c == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] -= c * bj;
        }
        q[i] = c;
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}
