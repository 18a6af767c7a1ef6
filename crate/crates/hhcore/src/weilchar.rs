//! Closed-form Weil characters of GU_n(q).
//!
//! With e(y) = dim ker y on GF(q^2)^n, the reducible Weil character is
//! omega(x) = (-1)^n (-q)^e(x - 1), of degree q^n. For 0 <= i <= q,
//!
//!   zeta^i(x) = (-1)^n / (q + 1) * sum_l xi^(i l) (-q)^e(x - delta^l),
//!
//! the part of omega on which the central element delta * Id acts as xi^i. Here delta is
//! the fixed primitive (q+1)-th root of unity in GF(q^2) and xi = exp(2 pi i / (q+1)); the
//! pairing delta^l <-> xi^l is fixed per context.
//!
//! The sign (-1)^n makes omega(1) = q^n for every n. Some texts write -(-q)^e(x - 1), which
//! agrees for odd n only.

use serde::Serialize;
use std::sync::Arc;

use crate::chartab::{conjugacy, enumerate_group, ClassFunction, ConjData, GroupEnum, DEFAULT_CAP};
use crate::classgrp::{standard_form, Family, GroupSpec};
use crate::error::{Error, Result};
use crate::exactnum::primes::prime_power;
use crate::exactnum::{CycInt, Fe, Field};
use crate::linalg::{self, Mat};

#[derive(Clone, Debug)]
pub struct WeilContext {
    pub n: usize,
    pub q: u64,
    /// GF(q^2)
    pub field: Arc<Field>,
    pub delta: Fe,
}

impl WeilContext {
    pub fn new(n: usize, q: u64) -> Result<WeilContext> {
        if n == 0 {
            return Err(Error::Precondition("n must be positive".into()));
        }
        let field = standard_form(Family::GU, n.max(1), q)?.field;
        // generator^(q-1) has order exactly q + 1
        let delta = field.exp(q - 1);
        Ok(WeilContext { n, q, field, delta })
    }

    /// xi^j as a cyclotomic integer of conductor q + 1.
    pub fn xi(&self, j: i64) -> CycInt {
        CycInt::zeta(self.q as u32 + 1, j)
    }

    fn sign(&self) -> i64 {
        if self.n % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn check(&self, x: &Mat) -> Result<()> {
        if x.rows != self.n || x.cols != self.n {
            return Err(Error::Precondition(format!(
                "expected a {0}x{0} matrix",
                self.n
            )));
        }
        Ok(())
    }
}

/// dim ker(x - lambda Id)
pub fn e_dim(k: &Field, x: &Mat, lambda: Fe) -> usize {
    x.rows - linalg::rank(k, &linalg::minus_scalar(k, x, lambda))
}

fn neg_q_pow(q: u64, e: usize) -> i64 {
    (-(q as i64)).pow(e as u32)
}

/// omega(x) = (-1)^n (-q)^e(x - 1)
pub fn reducible_weil(ctx: &WeilContext, x: &Mat) -> Result<CycInt> {
    ctx.check(x)?;
    let e = e_dim(&ctx.field, x, 1);
    Ok(CycInt::from_int(ctx.sign() * neg_q_pow(ctx.q, e)))
}

/// zeta^i_{n,q}(x), an element of Z[xi].
pub fn weil_value(ctx: &WeilContext, i: u64, x: &Mat) -> Result<CycInt> {
    ctx.check(x)?;
    if i > ctx.q {
        return Err(Error::Precondition(format!(
            "index {i} exceeds q = {}",
            ctx.q
        )));
    }
    let k = &*ctx.field;
    let m = ctx.q as u32 + 1;
    let mut acc = CycInt::zero(m);
    let mut d = 1;
    for l in 0..=ctx.q {
        let e = e_dim(k, x, d);
        acc = acc.add(&ctx.xi((i * l) as i64).scale(neg_q_pow(ctx.q, e)));
        d = k.mul(d, ctx.delta);
    }
    acc.scale(ctx.sign())
        .div_int(ctx.q as i64 + 1)
        .map_err(|_| Error::Internal("Weil value is not integral".into()))
}

/// zeta^i(1)
pub fn weil_degree(n: usize, q: u64, i: u64) -> u64 {
    let qn = q.pow(n as u32) as i64;
    let s = if n % 2 == 0 { 1 } else { -1 };
    let v = if i == 0 { qn + s * q as i64 } else { qn - s };
    (v / (q as i64 + 1)) as u64
}

/// zeta^i as a class function on an enumerated subgroup of GU_n(q).
pub fn weil_class_function(
    ctx: &WeilContext,
    i: u64,
    g: &GroupEnum,
    c: &ConjData,
) -> Result<ClassFunction> {
    let values = c
        .reps
        .iter()
        .map(|&r| weil_value(ctx, i, &g.elem(r)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassFunction {
        conductor: ctx.q as u32 + 1,
        values,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchingReport {
    pub i: u64,
    pub n: usize,
    pub q: u64,
    pub classes_checked: usize,
    /// Class indices of H where the two sides differ.
    pub mismatches: Vec<usize>,
    pub pass: bool,
}

/// zeta^i_{n+1,q} restricted to H = GU_n(q) (embedded as x -> diag(x, 1)) against
/// sum_{j != i} zeta^j_{n,q}, on every class of H, for n = p^b with q + 1 = p^c, p odd.
pub fn branching_verify(i: u64, b: u32, q: u64, cap: usize) -> Result<BranchingReport> {
    let (p, _) = prime_power(q + 1).filter(|&(p, _)| p > 2).ok_or_else(|| {
        Error::Precondition(format!("q + 1 = {} is not a power of an odd prime", q + 1))
    })?;
    let n = p.pow(b) as usize;
    let h = enumerate_group(&GroupSpec::new(Family::GU, n, q)?, cap)?;
    let hc = conjugacy(&h)?;
    let big = WeilContext::new(n + 1, q)?;
    let small = WeilContext::new(n, q)?;
    let mut mismatches = Vec::new();
    for (c, &r) in hc.reps.iter().enumerate() {
        let x = h.elem(r);
        let lhs = weil_value(&big, i, &embed_corner(&x))?;
        let mut rhs = CycInt::zero(q as u32 + 1);
        for j in (0..=q).filter(|&j| j != i) {
            rhs = rhs.add(&weil_value(&small, j, &x)?);
        }
        if lhs != rhs {
            mismatches.push(c);
        }
    }
    Ok(BranchingReport {
        i,
        n,
        q,
        classes_checked: hc.len(),
        pass: mismatches.is_empty(),
        mismatches,
    })
}

/// diag(x, 1)
pub fn embed_corner(x: &Mat) -> Mat {
    x.direct_sum(&Mat::identity(1))
}

/// Default cap for [`branching_verify`].
pub const BRANCHING_CAP: usize = DEFAULT_CAP;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PseudoreflectionRestriction {
    /// Multiplicity of alpha_j, the linear character of A = <g> sending g to xi^j.
    pub mult: Vec<i64>,
    /// Number of nonzero multiplicities, the degree of the minimal polynomial of g.
    pub deg: usize,
}

/// zeta^i_{n,q} restricted to A = <g>, g = diag(delta, 1, ..., 1):
/// (q^(n-1) + (-1)^n)/(q+1) on each nontrivial character, minus (1 - delta_{i,0}) (-1)^n
/// on alpha_i.
pub fn pseudoreflection_restriction(
    i: u64,
    n: usize,
    q: u64,
) -> Result<PseudoreflectionRestriction> {
    if i > q || n == 0 {
        return Err(Error::Precondition("need 0 <= i <= q and n >= 1".into()));
    }
    let s: i64 = if n % 2 == 0 { 1 } else { -1 };
    let base = q.pow(n as u32 - 1) as i64 + s;
    if base % (q as i64 + 1) != 0 {
        return Err(Error::Internal(
            "restriction multiplicity is not integral".into(),
        ));
    }
    let mut mult = vec![base / (q as i64 + 1); q as usize + 1];
    mult[0] = 0;
    if i != 0 {
        mult[i as usize] -= s;
    }
    if mult.iter().any(|&m| m < 0) {
        return Err(Error::Internal("negative multiplicity".into()));
    }
    let deg = mult.iter().filter(|&&m| m > 0).count();
    Ok(PseudoreflectionRestriction { mult, deg })
}

/// The pseudoreflection diag(delta, 1, ..., 1) paired with the restriction formula.
pub fn standard_pseudoreflection(ctx: &WeilContext) -> Mat {
    let mut d = vec![1; ctx.n];
    d[0] = ctx.delta;
    Mat::diag(&d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_at_identity() {
        for (n, q) in [(1, 2), (2, 3), (3, 2), (4, 2), (3, 4)] {
            let ctx = WeilContext::new(n, q).unwrap();
            let id = Mat::identity(n);
            for i in 0..=q {
                let v = weil_value(&ctx, i, &id).unwrap();
                assert_eq!(v.as_integer(), Some(weil_degree(n, q, i) as i64));
            }
            let om = reducible_weil(&ctx, &id).unwrap();
            assert_eq!(om.as_integer(), Some(q.pow(n as u32) as i64));
        }
    }
}
