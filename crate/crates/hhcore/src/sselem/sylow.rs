//! Order polynomials as products of cyclotomic polynomials, and Sylow cyclicity.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

use crate::classgrp::{Eps, Family, GroupSpec};
use crate::error::{Error, Result};
use crate::exactnum::primes::p_part;
use crate::exactnum::{cyclotomic, mult_order, ZPoly};

/// |G| = c * q^N * prod Phi_m(q)^(r_m) with c a power of two.
///
/// The constant is the one for odd q; in even characteristic SO and Omega coincide.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderPoly {
    /// Exponent of 2 in the constant c.
    pub two_exp: i32,
    pub q_exp: usize,
    /// m -> r_m
    pub factors: BTreeMap<usize, u32>,
}

impl OrderPoly {
    pub fn eval(&self, q: u64) -> BigInt {
        let mut v = BigInt::from(q).pow(self.q_exp as u32);
        for (&m, &r) in &self.factors {
            v *= cyclotomic(m).eval_i64(q as i64).pow(r);
        }
        if self.two_exp >= 0 {
            v << self.two_exp as usize
        } else {
            v >> (-self.two_exp) as usize
        }
    }
}

/// Multiply the standard factors (x^i - 1), (x^i + 1) and factor the product into
/// cyclotomic polynomials by exact division.
pub fn order_polynomial(family: Family, n: usize) -> Result<OrderPoly> {
    let bad = || {
        Err(Error::Precondition(format!(
            "no order polynomial for {family}{n}"
        )))
    };
    let mut num: Vec<(usize, i64)> = Vec::new();
    let mut den: Vec<(usize, i64)> = Vec::new();
    let mut two_exp = 0;
    let q_exp;
    match family {
        Family::GL | Family::SL => {
            q_exp = n * (n - 1) / 2;
            num.extend((1..=n).map(|i| (i, -1)));
            if family == Family::SL {
                den.push((1, -1));
            }
        }
        Family::GU | Family::SU => {
            q_exp = n * (n - 1) / 2;
            num.extend((1..=n).map(|i| (i, if i % 2 == 0 { -1 } else { 1 })));
            if family == Family::SU {
                den.push((1, 1));
            }
        }
        Family::Sp | Family::CSp => {
            if n % 2 != 0 {
                return bad();
            }
            let m = n / 2;
            q_exp = m * m;
            num.extend((1..=m).map(|i| (2 * i, -1)));
            if family == Family::CSp {
                num.push((1, -1));
            }
        }
        Family::GO(e) | Family::SO(e) | Family::Omega(e) => {
            two_exp = match family {
                Family::GO(_) => 1,
                Family::SO(_) => 0,
                _ => -1,
            };
            match e {
                Eps::Odd => {
                    let m = n / 2;
                    q_exp = m * m;
                    num.extend((1..=m).map(|i| (2 * i, -1)));
                }
                Eps::Plus | Eps::Minus => {
                    let m = n / 2;
                    q_exp = m * (m - 1);
                    num.push((m, -e.sign()));
                    num.extend((1..m).map(|i| (2 * i, -1)));
                }
            }
        }
    }
    let mut poly = ZPoly::one();
    for (i, c) in num {
        poly = poly.mul(&ZPoly::binomial(i, c));
    }
    for (i, c) in den {
        poly = poly.div_exact(&ZPoly::binomial(i, c))?;
    }
    let deg = poly.degree().unwrap_or(0);
    let mut factors = BTreeMap::new();
    for m in 1..=deg.max(1) {
        let phi = cyclotomic(m);
        loop {
            let (quot, rem) = poly.divrem_monicish(&phi)?;
            if !rem.is_zero() {
                break;
            }
            poly = quot;
            *factors.entry(m).or_insert(0) += 1;
        }
    }
    if poly.degree() != Some(0) || !poly.coeffs()[0].is_one() {
        return Err(Error::Internal(format!("leftover factor {poly}")));
    }
    Ok(OrderPoly {
        two_exp,
        q_exp,
        factors,
    })
}

/// Sylow p-subgroups are cyclic iff exactly one m has p | Phi_m(q), and r_m = 1 for it.
///
/// The constant power of two is ignored; for odd q every family considered here has both
/// Phi_1 and Phi_2 in its order polynomial, which already settles p = 2.
pub fn sylow_cyclic(g: &GroupSpec, p: u64) -> Result<bool> {
    if g.q % p == 0 {
        return Err(Error::Precondition(format!("{p} divides q = {}", g.q)));
    }
    let op = order_polynomial(g.family, g.n)?;
    let bp = BigInt::from(p);
    let hits: Vec<u32> = op
        .factors
        .iter()
        .filter(|(&m, _)| (cyclotomic(m).eval_i64(g.q as i64) % &bp).is_zero())
        .map(|(_, &r)| r)
        .collect();
    Ok(match hits.as_slice() {
        [] => true,
        [r] => *r == 1,
        _ => false,
    })
}

/// Brute-force test: some element has order |G|_p.
///
/// Element orders may be supplied per conjugacy class representative.
pub fn sylow_cyclic_bruteforce(
    group_order: u64,
    element_orders: impl IntoIterator<Item = u64>,
    p: u64,
) -> bool {
    let target = p_part(group_order, p);
    target == 1 || element_orders.into_iter().any(|o| o == target)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PCyclicMatch {
    /// Least m with p | q^m - 1.
    pub m: u64,
    /// Clause label "i" .. "v".
    pub clause: &'static str,
    /// Forced equality p^a = p = value, when the clause imposes one.
    pub forced: Option<u64>,
    pub forced_holds: bool,
}

/// The m-value clause for a simple group with cyclic Sylow p-subgroups whose minimal
/// polynomial degree equals p^(a-1)(p-1).
///
/// SL_2 and SU_2 are treated as PSp_2, and the minus-type dimension 4 orthogonal groups as
/// PSL_2(q^2).
pub fn pcyclic_m(g: &GroupSpec, p: u64, a: u32) -> Result<PCyclicMatch> {
    let q = g.q;
    let n = g.n;
    let m = mult_order(q, p)?;
    let half = |x: u64| x / if q % 2 == 1 { 2 } else { 1 };
    let forced_eq = |v: u64| (Some(v), a == 1 && p == v);
    let (clause, want_m, forced) = match g.family {
        Family::GL | Family::SL if n >= 3 => {
            let f = if n % 2 == 0 {
                forced_eq(half(q.pow(n as u32 / 2) + 1))
            } else {
                (None, true)
            };
            ("i", n as u64, f)
        }
        Family::GU | Family::SU if n >= 3 => ("ii", 4 * ((n as u64 - 1) / 2) + 2, (None, true)),
        Family::GL | Family::SL | Family::GU | Family::SU if n == 2 => {
            ("iii", 2, forced_eq(half(q + 1)))
        }
        Family::Sp | Family::CSp => {
            let h = n as u32 / 2;
            ("iii", n as u64, forced_eq(half(q.pow(h) + 1)))
        }
        Family::GO(Eps::Plus) | Family::SO(Eps::Plus) | Family::Omega(Eps::Plus) if n >= 8 => {
            let h = n as u32 / 2;
            let f = if h % 2 == 1 {
                forced_eq(half(q.pow(h - 1) + 1))
            } else {
                (None, true)
            };
            ("iv", 2 * h as u64 - 2, f)
        }
        Family::GO(Eps::Minus) | Family::SO(Eps::Minus) | Family::Omega(Eps::Minus) if n >= 8 => {
            let h = n as u32 / 2;
            let f = if h % 2 == 0 {
                forced_eq(half(q.pow(h) + 1))
            } else {
                (None, true)
            };
            ("v", 2 * h as u64, f)
        }
        Family::GO(Eps::Minus) | Family::SO(Eps::Minus) | Family::Omega(Eps::Minus) if n == 4 => {
            // as PSL_2(q^2): m(q^2) = 2, i.e. m(q) = 4
            ("iii", 4, forced_eq(half(q * q + 1)))
        }
        _ => {
            return Err(Error::NotFound(format!(
                "no m-clause for {}{n}({q})",
                g.family
            )))
        }
    };
    if m != want_m {
        return Err(Error::NotFound(format!(
            "{}{n}({q}), p = {p}: m = {m} but clause {clause} needs {want_m}",
            g.family
        )));
    }
    Ok(PCyclicMatch {
        m,
        clause,
        forced: forced.0,
        forced_holds: forced.1,
    })
}
