//! Minimal polynomial degrees: eigenvalue multiplicities from character values, direct
//! matrix computations, and the Jordan-block calculus for unipotent elements.

use serde::Serialize;

use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::exactnum::{CycInt, Fe, Field};
use crate::linalg::{self, Mat};

/// Multiplicity of each eigenvalue zeta_N^j of Theta(g), N = |g|.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultVector {
    pub n: u64,
    pub mult: Vec<u64>,
}

impl MultVector {
    pub fn dim(&self) -> u64 {
        self.mult.iter().sum()
    }

    /// Exponents j with a nonzero multiplicity.
    pub fn support(&self) -> Vec<usize> {
        (0..self.mult.len()).filter(|&j| self.mult[j] > 0).collect()
    }
}

/// mult_j = (1/N) sum_m chi(g^m) zeta_N^(-jm), from the values chi(g^m), m = 0..N-1.
pub fn mults_from_character(values: &[CycInt], n: u64) -> Result<MultVector> {
    if values.len() as u64 != n || n == 0 {
        return Err(Error::Precondition(format!(
            "need chi(g^m) for m = 0..{n}, got {} values",
            values.len()
        )));
    }
    let nn = n as i64;
    let mut mult = Vec::with_capacity(n as usize);
    for j in 0..nn {
        let mut acc = CycInt::zero(n as u32);
        for (m, v) in values.iter().enumerate() {
            acc = acc.add(&v.mul(&CycInt::zeta(n as u32, -j * m as i64)));
        }
        let s = acc
            .as_integer()
            .ok_or_else(|| Error::Inexact(format!("multiplicity of zeta^{j} is not rational")))?;
        if s < 0 || s % nn != 0 {
            return Err(Error::Inexact(format!(
                "multiplicity of zeta^{j} is {s}/{n}, not a nonnegative integer"
            )));
        }
        mult.push((s / nn) as u64);
    }
    Ok(MultVector { n, mult })
}

/// Number of distinct eigenvalues.
pub fn deg_of(m: &MultVector) -> usize {
    m.mult.iter().filter(|&&x| x > 0).count()
}

/// Multiplicities of Theta(g) for g in class `c`, from a character table row.
pub fn mults_from_table(t: &CharacterTable, chi: usize, c: usize) -> Result<MultVector> {
    let n = t.class_orders[c];
    let vals: Vec<CycInt> = (0..n as i64)
        .map(|m| t.value_at_power(chi, c, m).clone())
        .collect();
    mults_from_character(&vals, n)
}

/// Degree of the minimal polynomial: the first d with I, M, ..., M^d linearly dependent.
pub fn matrix_minpoly_deg(k: &Field, m: &Mat) -> usize {
    assert!(m.is_square());
    let n = m.rows;
    // rows of an echelon form, each with its pivot column
    let mut basis: Vec<(usize, Vec<Fe>)> = Vec::new();
    let mut power = Mat::identity(n);
    for d in 0..=n {
        let mut v = power.data.clone();
        for (piv, row) in &basis {
            let c = v[*piv];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = k.sub(*x, k.mul(c, y));
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => return d,
            Some(p) => {
                let inv = k.inv(v[p]).unwrap();
                v.iter_mut().for_each(|x| *x = k.mul(*x, inv));
                basis.push((p, v));
            }
        }
        power = linalg::mul(k, &power, m);
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

/// Jordan block of size a with eigenvalue 1.
pub fn jordan_block(a: usize) -> Mat {
    let mut m = Mat::identity(a);
    for i in 0..a.saturating_sub(1) {
        m.set(i, i + 1, 1);
    }
    m
}

/// Kronecker product a (x) b.
pub fn kronecker(k: &Field, a: &Mat, b: &Mat) -> Mat {
    let mut m = Mat::zeros(a.rows * b.rows, a.cols * b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a.get(i, j);
            if x == 0 {
                continue;
            }
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m.set(i * b.rows + r, j * b.cols + c, k.mul(x, b.get(r, c)));
                }
            }
        }
    }
    m
}

/// Block matrix sending summand i to summand i+1 identically and the last summand back to
/// the first by `last`: its s-th power is `last` on every summand.
pub fn block_cycle(last: &Mat, s: usize) -> Mat {
    let d = last.rows;
    let mut m = Mat::zeros(d * s, d * s);
    for b in 0..s {
        let to = (b + 1) % s;
        for r in 0..d {
            for c in 0..d {
                let x = if b + 1 == s {
                    last.get(r, c)
                } else if r == c {
                    1
                } else {
                    0
                };
                m.set(to * d + r, b * d + c, x);
            }
        }
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JordanType {
    pub p: u64,
    /// Block sizes in decreasing order.
    pub partition: Vec<usize>,
}

/// Jordan type of a unipotent matrix, from the ranks of powers of M - 1.
pub fn unipotent_jordan_type(k: &Field, m: &Mat) -> JordanType {
    let n = m.rows;
    let nil = linalg::minus_scalar(k, m, 1);
    let mut ranks = vec![n];
    let mut pw = Mat::identity(n);
    while *ranks.last().unwrap() > 0 {
        pw = linalg::mul(k, &pw, &nil);
        let r = linalg::rank(k, &pw);
        if r == *ranks.last().unwrap() {
            break;
        }
        ranks.push(r);
    }
    // blocks of size >= i: ranks[i-1] - ranks[i]
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut partition = Vec::new();
    for i in (1..=at_least.len()).rev() {
        let exact = at_least[i - 1] - at_least.get(i).copied().unwrap_or(0);
        partition.extend(std::iter::repeat(i).take(exact));
    }
    JordanType {
        p: k.p() as u64,
        partition,
    }
}

/// Jordan type of J_l (x) J_m in characteristic p, 1 <= l <= m <= p.
pub fn jordan_tensor(l: usize, m: usize, p: usize) -> Result<JordanType> {
    if !(1 <= l && l <= m && m <= p) {
        return Err(Error::Precondition(format!(
            "need 1 <= l <= m <= p, got {l}, {m}, {p}"
        )));
    }
    let mut partition = Vec::with_capacity(l);
    let top = if l + m <= p {
        (m + l - 1) as isize
    } else {
        partition.extend(std::iter::repeat(p).take(m + l - p));
        2 * p as isize - (m + l) as isize - 1
    };
    let mut s = top;
    while s >= (m - l + 1) as isize {
        partition.push(s as usize);
        s -= 2;
    }
    Ok(JordanType {
        p: p as u64,
        partition,
    })
}

/// min{p, 1 - s + sum d_i} for a tensor product of s modules of an element of order p.
pub fn tensor_deg(degs: &[usize], p: usize) -> usize {
    let s = degs.len();
    let sum: usize = degs.iter().sum();
    (sum + 1).saturating_sub(s).min(p)
}

/// s * d_1 for an element permuting s summands transitively.
pub fn perm_rule(s: usize, d1: usize) -> usize {
    s * d1
}

/// (p^i (d - 1) + 1, p^i d) for d = deg(b^(p^i)), b unipotent in characteristic p.
pub fn root1_bounds(deg_of_power: usize, p: usize, i: u32) -> (usize, usize) {
    let pi = p.pow(i);
    (pi * (deg_of_power - 1) + 1, pi * deg_of_power)
}

/// (n - 1) p^b + m
pub fn filtr_deg(n: usize, p: usize, b: u32, m: usize) -> usize {
    (n - 1) * p.pow(b) + m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FreeBound {
    /// ceil(p dim U / dim V)
    pub ceil: usize,
    /// dim U > (p - 1) dim V / p, which forces d_U(g) = p.
    pub forces_p: bool,
    /// The resulting lower bound on d_U(g).
    pub bound: usize,
}

/// Lower bound for d_U(g) when V is free over <g> of order p and U is a subquotient.
pub fn free_bound(p: usize, dim_u: usize, dim_v: usize) -> Result<FreeBound> {
    if dim_v == 0 || dim_u > dim_v {
        return Err(Error::Precondition("need 0 < dim U <= dim V".into()));
    }
    let ceil = (p * dim_u).div_ceil(dim_v);
    let forces_p = dim_u * p > (p - 1) * dim_v;
    Ok(FreeBound {
        ceil,
        forces_p,
        bound: if forces_p { p } else { ceil },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EllContext {
    Zero,
    CoprimeToOrder,
}

#[derive(Clone, Debug, Serialize)]
pub struct MinPolyReport {
    pub group: String,
    pub element: usize,
    pub character: usize,
    pub ell: EllContext,
    pub o: u64,
    pub abs_order: u64,
    pub deg: usize,
    pub mult: MultVector,
}

impl MinPolyReport {
    pub fn from_table(
        group: &str,
        t: &CharacterTable,
        chi: usize,
        c: usize,
        o: u64,
    ) -> Result<MinPolyReport> {
        let mult = mults_from_table(t, chi, c)?;
        Ok(MinPolyReport {
            group: group.to_string(),
            element: c,
            character: chi,
            ell: EllContext::Zero,
            o,
            abs_order: t.class_orders[c],
            deg: deg_of(&mult),
            mult,
        })
    }
}
