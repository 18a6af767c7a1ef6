//! Explicit irreducible elements: the monomial companion element and extension-field tori.

use serde::{Deserialize, Serialize};
use std::sync::Arc;

use super::ext::Ext;
use crate::classgrp::form::combine;
use crate::classgrp::{preserves_form, standard_form, Eps, Family, FormKind, FormSpace};
use crate::error::{Error, Result};
use crate::exactnum::primes::{p_part, prime_power};
use crate::exactnum::{Fe, Field};
use crate::linalg::{self, Mat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    SL,
    SU,
}

/// x(v_i) = v_{i+1}, x(v_n) = alpha v_1 with alpha generating the Sylow p-subgroup of
/// GF(q)^x (SL side) or of the norm-one group in GF(q^2)^x (SU side).
pub fn build_canonical_irreducible(side: Side, n: usize, q: u64) -> Result<Mat> {
    let (p, _) = prime_power(n as u64)
        .filter(|&(p, _)| p > 2)
        .ok_or_else(|| Error::Precondition(format!("n = {n} is not a power of an odd prime")))?;
    let (field, pc) = match side {
        Side::SL => {
            if (q - 1) % p != 0 {
                return Err(Error::Precondition(format!(
                    "{p} does not divide q - 1 = {}",
                    q - 1
                )));
            }
            (standard_form(Family::GL, n, q)?.field, p_part(q - 1, p))
        }
        Side::SU => {
            if (q + 1) % p != 0 {
                return Err(Error::Precondition(format!(
                    "{p} does not divide q + 1 = {}",
                    q + 1
                )));
            }
            (standard_form(Family::GU, n, q)?.field, p_part(q + 1, p))
        }
    };
    let alpha = field
        .element_of_order(pc)
        .ok_or_else(|| Error::Internal("no element of the required order".into()))?;
    Ok(shift_matrix(n, alpha))
}

/// Cyclic shift of the basis with the wrap-around scaled by alpha.
pub fn shift_matrix(n: usize, alpha: Fe) -> Mat {
    let mut m = Mat::zeros(n, n);
    for i in 0..n - 1 {
        m.set(i + 1, i, 1);
    }
    m.set(0, n - 1, alpha);
    m
}

/// Element of order d in the torus of multiplication by norm-one elements of an extension
/// field, written on a basis in which the form is the standard one.
///
/// Sp_n and GO-_n use GF(q^n) with torus order q^(n/2) + 1; GU_n (n odd) uses GF(q^(2n))
/// over GF(q^2) with torus order q^n + 1.
pub fn build_torus_element(family: Family, n: usize, q: u64, d: u64) -> Result<Mat> {
    let bad = |why: String| Err(Error::Precondition(why));
    let std = standard_form(family, n, q)?;
    let small = std.field.clone();
    let (ext_deg, inv_exp, torus) = match family {
        Family::Sp | Family::GO(Eps::Minus) => {
            let m = (n / 2) as u32;
            (n as u32, q.pow(m), q.pow(m) + 1)
        }
        Family::GU => {
            if n % 2 == 0 {
                return bad(format!("unitary torus needs odd dimension, got {n}"));
            }
            (n as u32, q.pow(n as u32), q.pow(n as u32) + 1)
        }
        _ => return bad(format!("no extension-field torus for {family}")),
    };
    if d == 0 || torus % d != 0 {
        return bad(format!("{d} does not divide the torus order {torus}"));
    }
    if d == 1 {
        return Ok(Mat::identity(n));
    }
    let ext = Ext::new(&small, ext_deg)?;
    let big = &*ext.big;
    let big_order = big.q() as u64 - 1;
    let lambda = big.exp(big_order / d);
    // basis 1, w, ..., w^(n-1) of E over the small field
    let w = big.primitive();
    let basis: Vec<Fe> = (0..n as u64).map(|i| big.pow(w, i)).collect();
    let coords = Coordinates::new(&ext, &basis)?;
    let src = source_form(family, &ext, &basis, inv_exp)?;
    let mut mult = Mat::zeros(n, n);
    for (j, &b) in basis.iter().enumerate() {
        let c = coords.of(big.mul(lambda, b));
        for i in 0..n {
            mult.set(i, j, c[i]);
        }
    }
    let u = witt_transport(&src, &std)?;
    let uinv = linalg::inverse(&small, &u)
        .ok_or_else(|| Error::Internal("transport basis is singular".into()))?;
    let m = linalg::mul(&small, &linalg::mul(&small, &uinv, &mult), &u);
    if preserves_form(&m, &std) != Some(1) {
        return Err(Error::Internal(
            "torus element does not preserve the form".into(),
        ));
    }
    Ok(m)
}

/// Coordinates over the small field with respect to a basis of the extension, via the
/// dual basis of the trace form.
struct Coordinates<'a> {
    ext: &'a Ext,
    basis: Vec<Fe>,
    tinv: Mat,
}

impl<'a> Coordinates<'a> {
    fn new(ext: &'a Ext, basis: &[Fe]) -> Result<Self> {
        let n = basis.len();
        let big = &*ext.big;
        let mut t = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                t.set(i, j, ext.trace(big.mul(basis[i], basis[j])));
            }
        }
        let tinv = linalg::inverse(&ext.small, &t).ok_or_else(|| {
            Error::Internal("powers of the primitive element are dependent".into())
        })?;
        Ok(Coordinates {
            ext,
            basis: basis.to_vec(),
            tinv,
        })
    }

    fn of(&self, x: Fe) -> Vec<Fe> {
        let big = &*self.ext.big;
        let rhs: Vec<Fe> = self
            .basis
            .iter()
            .map(|&b| self.ext.trace(big.mul(x, b)))
            .collect();
        linalg::mat_vec(&self.ext.small, &self.tinv, &rhs)
    }
}

/// The trace form on E preserved by the norm-one torus, on the given basis.
fn source_form(family: Family, ext: &Ext, basis: &[Fe], inv_exp: u64) -> Result<FormSpace> {
    let big = &*ext.big;
    let small = ext.small.clone();
    let n = basis.len();
    let bar = |x: Fe| big.pow(x, inv_exp);
    match family.kind() {
        FormKind::Symplectic => {
            // c with c^(q^m) = -c, c != 0
            let c = big
                .elements()
                .skip(1)
                .find(|&c| bar(c) == big.neg(c))
                .ok_or_else(|| Error::Internal("no trace-zero scalar".into()))?;
            let mut g = Mat::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    g.set(
                        i,
                        j,
                        ext.trace(big.mul(c, big.mul(basis[i], bar(basis[j])))),
                    );
                }
            }
            Ok(FormSpace {
                field: small,
                n,
                kind: FormKind::Symplectic,
                eps: None,
                gram: g,
                quad: None,
                conj: 1,
            })
        }
        FormKind::Hermitian => {
            let mut g = Mat::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    g.set(i, j, ext.trace(big.mul(basis[i], bar(basis[j]))));
                }
            }
            let conj = (small.q() as f64).sqrt().round() as u64;
            Ok(FormSpace {
                field: small,
                n,
                kind: FormKind::Hermitian,
                eps: None,
                gram: g,
                quad: None,
                conj,
            })
        }
        FormKind::Quadratic => {
            // Q(x) = Tr(x^(q^m + 1)) from GF(q^m) to GF(q), polar Tr(x bar(y) + y bar(x))
            let m = (n / 2) as u32;
            let tr = |y: Fe| ext.partial_trace(y, m);
            let mut qc = Mat::zeros(n, n);
            for i in 0..n {
                qc.set(i, i, tr(big.mul(basis[i], bar(basis[i]))));
                for j in i + 1..n {
                    let xy = big.mul(basis[i], bar(basis[j]));
                    let yx = big.mul(basis[j], bar(basis[i]));
                    qc.set(i, j, tr(big.add(xy, yx)));
                }
            }
            Ok(FormSpace::from_quadratic(small, qc, Eps::Minus))
        }
        FormKind::None => Err(Error::Internal("no form to transport".into())),
    }
}

/// All vectors of span(basis), in a fixed order.
fn span_vectors<'a>(
    k: &'a Field,
    basis: &'a [Vec<Fe>],
    n: usize,
) -> impl Iterator<Item = Vec<Fe>> + 'a {
    let q = k.q() as u64;
    let total = q.pow(basis.len() as u32);
    (1..total).map(move |mut t| {
        let mut a = Vec::with_capacity(basis.len());
        for _ in 0..basis.len() {
            a.push((t % q) as Fe);
            t /= q;
        }
        combine(k, basis, &a, n)
    })
}

fn unit_vectors(n: usize) -> Vec<Vec<Fe>> {
    (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect()
}

fn scaled(k: &Field, v: &[Fe], c: Fe) -> Vec<Fe> {
    v.iter().map(|&x| k.mul(x, c)).collect()
}

/// A basis (as columns) of the source space in which its form equals the target form.
///
/// Exhaustive searches run inside subspaces of dimension at most 2 except for the initial
/// choice of singular vectors, which scans the current subspace.
pub fn witt_transport(src: &FormSpace, dst: &FormSpace) -> Result<Mat> {
    let k: &Arc<Field> = &src.field;
    let n = src.n;
    let err = || Error::Internal("Witt transport failed".into());
    let mut cols: Vec<Option<Vec<Fe>>> = vec![None; n];
    let mut space = unit_vectors(n);
    match dst.kind {
        FormKind::Hermitian => {
            // orthonormal basis
            for slot in cols.iter_mut() {
                let v = space
                    .iter()
                    .find(|v| src.bilinear(v, v) != 0)
                    .cloned()
                    .or_else(|| span_vectors(k, &space, n).find(|v| src.bilinear(v, v) != 0))
                    .ok_or_else(err)?;
                let h = src.bilinear(&v, &v);
                let s = k
                    .elements()
                    .find(|&s| s != 0 && k.mul(k.mul(s, src.conj_elem(s)), h) == 1)
                    .ok_or_else(err)?;
                let v = scaled(k, &v, s);
                space = src.perp_within(&space, std::slice::from_ref(&v));
                *slot = Some(v);
            }
        }
        FormKind::Symplectic => {
            let m = n / 2;
            for i in 0..m {
                let e = space[0].clone();
                let w = space
                    .iter()
                    .find(|w| src.bilinear(&e, w) != 0)
                    .cloned()
                    .ok_or_else(err)?;
                let f = scaled(k, &w, k.inv(src.bilinear(&e, &w)).unwrap());
                space = src.perp_within(&space, &[e.clone(), f.clone()]);
                cols[i] = Some(e);
                cols[m + i] = Some(f);
            }
        }
        FormKind::Quadratic => {
            if dst.eps != Some(Eps::Minus) {
                return Err(Error::Precondition(
                    "transport implemented for minus type only".into(),
                ));
            }
            let m = n / 2;
            for i in 0..m - 1 {
                let e = span_vectors(k, &space, n)
                    .find(|v| src.quadratic(v) == 0)
                    .ok_or_else(err)?;
                let w = space
                    .iter()
                    .find(|w| src.bilinear(&e, w) != 0)
                    .cloned()
                    .ok_or_else(err)?;
                let f1 = scaled(k, &w, k.inv(src.bilinear(&e, &w)).unwrap());
                let c = src.quadratic(&f1);
                let f: Vec<Fe> = f1
                    .iter()
                    .zip(&e)
                    .map(|(&x, &y)| k.sub(x, k.mul(c, y)))
                    .collect();
                space = src.perp_within(&space, &[e.clone(), f.clone()]);
                cols[i] = Some(e);
                cols[m - 1 + i] = Some(f);
            }
            // anisotropic plane: Q(a) = 1, B(a, b) = 1, Q(b) = mu
            let qd = dst.quad.as_ref().unwrap();
            let mu = qd.get(n - 1, n - 1);
            let a = span_vectors(k, &space, n)
                .find(|v| src.quadratic(v) == 1)
                .ok_or_else(err)?;
            let b = span_vectors(k, &space, n)
                .find(|v| src.bilinear(&a, v) == 1 && src.quadratic(v) == mu)
                .ok_or_else(err)?;
            cols[n - 2] = Some(a);
            cols[n - 1] = Some(b);
        }
        FormKind::None => return Ok(Mat::identity(n)),
    }
    let cols: Vec<Vec<Fe>> = cols.into_iter().collect::<Option<_>>().ok_or_else(err)?;
    let u = Mat::from_cols(&cols);
    // verify the Gram matrix (and Q) in the new basis
    for i in 0..n {
        for j in 0..n {
            if src.bilinear(&cols[i], &cols[j]) != dst.gram.get(i, j) {
                return Err(err());
            }
        }
        if dst.kind == FormKind::Quadratic {
            let mut e = vec![0; n];
            e[i] = 1;
            if src.quadratic(&cols[i]) != dst.quadratic(&e) {
                return Err(err());
            }
        }
    }
    Ok(u)
}
