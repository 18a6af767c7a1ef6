//! Invariants of semisimple elements of prime-power order modulo the center.

use serde::Serialize;
use std::fmt;

use super::ext::Ext;
use crate::classgrp::{
    invariant_totally_singular_subspace, orthogonal_irreducible_decomposition, Decomposition, Eps,
    FormKind, FormSpace, GroupSpec,
};
use crate::error::{Error, Result};
use crate::exactnum::primes::{p_part as int_p_part, prime_power};
use crate::exactnum::{fpoly, fpoly::FPoly, mult_order, Fe, Field};
use crate::linalg::{self, Mat};

/// Characteristic polynomial of g and whether it is irreducible over the form field.
pub fn charpoly_irreducible(g: &Mat, f: &FormSpace) -> (FPoly, bool) {
    let k = &*f.field;
    let cp = linalg::charpoly(k, g);
    let irr = fpoly::is_irreducible(k, &cp);
    (cp, irr)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CenterOrder {
    /// Prime of o(g); 1 when g is central.
    pub p: u64,
    pub a: u32,
    pub o: u64,
    pub abs_order: u64,
}

/// o(g), the order of g modulo Z(G), which must be a prime power.
///
/// Z(G) is taken to be the scalar matrices of G; every power of g lies in G, so this is
/// the order of g modulo scalars.
pub fn o_mod_center(g: &Mat, grp: &GroupSpec) -> Result<CenterOrder> {
    let k = &*grp.form.field;
    let (o, abs_order) = linalg::order_mod_scalars(k, g)?;
    if o == 1 {
        return Ok(CenterOrder {
            p: 1,
            a: 0,
            o,
            abs_order,
        });
    }
    let (p, a) = prime_power(o)
        .ok_or_else(|| Error::Precondition(format!("o(g) = {o} is not a prime power")))?;
    Ok(CenterOrder { p, a, o, abs_order })
}

/// The p-part of g: the power g^e with e = 1 mod |g|_p and e = 0 mod |g|_p'.
pub fn p_part(k: &Field, g: &Mat, p: u64) -> Result<Mat> {
    let ord = linalg::order(k, g)?;
    let pp = int_p_part(ord, p);
    let r = ord / pp;
    if pp == 1 {
        return Ok(Mat::identity(g.rows));
    }
    // r * (r^-1 mod pp)
    let rinv = (1..pp).find(|&s| (r % pp) * s % pp == 1).unwrap_or(1);
    Ok(linalg::pow_u64(k, g, r * rinv))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub ext: std::sync::Arc<Field>,
    pub lambda: Fe,
    pub orbit: Vec<Fe>,
}

/// A root of the characteristic polynomial in GF(Q^n) and its Frobenius orbit.
pub fn spectrum_frobenius_orbit(g: &Mat, f: &FormSpace) -> Result<Spectrum> {
    let (cp, irr) = charpoly_irreducible(g, f);
    if !irr {
        return Err(Error::Precondition("g is not irreducible".into()));
    }
    let n = f.n as u32;
    let ext = Ext::new(&f.field, n)?;
    let up: FPoly = cp.iter().map(|&c| ext.up(c)).collect();
    let big = &*ext.big;
    let lambda = *fpoly::roots(big, &up)
        .first()
        .ok_or_else(|| Error::Internal("irreducible charpoly has no root in GF(Q^n)".into()))?;
    let orbit: Vec<Fe> = (0..n).map(|i| ext.frob(lambda, i)).collect();
    let mut distinct = orbit.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != n as usize {
        return Err(Error::Internal("Frobenius orbit is shorter than n".into()));
    }
    // F_Q(lambda) = F_{Q^n}: lambda lies in no proper intermediate field
    for d in 1..n {
        if n % d == 0 && ext.frob(lambda, d) == lambda {
            return Err(Error::Internal(
                "eigenvalue lies in a proper subfield".into(),
            ));
        }
    }
    for &mu in &orbit {
        if fpoly::eval(big, &up, mu) != 0 {
            return Err(Error::Internal("orbit element is not a root".into()));
        }
    }
    Ok(Spectrum {
        ext: ext.big.clone(),
        lambda,
        orbit,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, PartialOrd, Ord)]
#[serde(rename_all = "kebab-case")]
pub enum Tag {
    Irreducible,
    Parabolic,
    Char2SpException,
    TorusDiagonal,
    BlockDecomposable,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::Irreducible => "irreducible",
            Tag::Parabolic => "parabolic",
            Tag::Char2SpException => "char2-sp-exception",
            Tag::TorusDiagonal => "torus-diagonal",
            Tag::BlockDecomposable => "block-decomposable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemisimpleClassification {
    pub p: u64,
    pub a: u32,
    pub o: u64,
    /// |g| of the element as given.
    pub abs_order: u64,
    /// |h| for the p-part h that was classified.
    pub p_part_order: u64,
    /// Least k with p | Q^k - 1, Q the size of the form field.
    pub k: u64,
    /// n / k = p^b, recorded for irreducible elements.
    pub b: Option<u32>,
    pub tag: Tag,
    pub torus_note: Option<String>,
}

/// Classify the p-part of g.
///
/// Tags are tried in the order irreducible, parabolic (a nonzero invariant totally singular
/// subspace, or any proper invariant subspace without a form), the even-characteristic
/// orthogonal exception, diagonal over the form field, and finally a nontrivial orthogonal
/// block decomposition.
pub fn classify(g: &Mat, grp: &GroupSpec, cap: u64) -> Result<SemisimpleClassification> {
    let f = &grp.form;
    let k = &*f.field;
    let n = f.n;
    let co = o_mod_center(g, grp)?;
    let char_p = k.p() as u64;
    if co.abs_order % char_p == 0 {
        return Err(Error::Precondition(format!(
            "|g| = {} is divisible by the characteristic {char_p}",
            co.abs_order
        )));
    }
    if co.o == 1 {
        return Err(Error::Precondition("g is central".into()));
    }
    let p = co.p;
    let h = p_part(k, g, p)?;
    let p_part_order = linalg::order(k, &h)?;
    let qf = k.q() as u64;
    let kk = mult_order(qf, p)?;
    let (cp, irr) = charpoly_irreducible(&h, f);
    let mut b = None;
    let mut note = None;
    let tag = if irr {
        if n as u64 % kk != 0 {
            return Err(Error::Internal(format!("k = {kk} does not divide n = {n}")));
        }
        let (pb, e) = match n as u64 / kk {
            1 => (1, 0),
            r => prime_power(r).unwrap_or((0, 0)),
        };
        if pb != 1 && pb != p {
            return Err(Error::Internal(format!(
                "n/k = {} is not a power of p",
                n as u64 / kk
            )));
        }
        b = Some(e);
        note = irreducible_checks(&h, grp, p, e)?;
        Tag::Irreducible
    } else if invariant_totally_singular_subspace(&h, f, cap)?.is_some() {
        Tag::Parabolic
    } else {
        match orthogonal_irreducible_decomposition(&h, f, cap)? {
            Decomposition::Char2Exception(_) => Tag::Char2SpException,
            Decomposition::Blocks(_) => {
                // semisimple, so splitting means diagonalizable
                if splits(k, &cp) {
                    Tag::TorusDiagonal
                } else {
                    Tag::BlockDecomposable
                }
            }
        }
    };
    Ok(SemisimpleClassification {
        p,
        a: co.a,
        o: co.o,
        abs_order: co.abs_order,
        p_part_order,
        k: kk,
        b,
        tag,
        torus_note: note,
    })
}

fn splits(k: &Field, cp: &[Fe]) -> bool {
    fpoly::factor(k, cp)
        .iter()
        .all(|(f, _)| fpoly::degree(f) == Some(1))
}

/// Structural assertions for an irreducible p-element h; returns the embedding remark.
fn irreducible_checks(h: &Mat, grp: &GroupSpec, p: u64, b: u32) -> Result<Option<String>> {
    let k = &*grp.form.field;
    let n = grp.n;
    let q = grp.q;
    let fail = |why: String| Err(Error::Internal(why));
    let kills = |e: u64| linalg::pow_u64(k, h, e) == Mat::identity(n);
    match grp.form.kind {
        FormKind::None => {
            if b >= 1 {
                return Ok(Some(format!(
                    "conjugate into GL_{p}({}) with p | Q - 1",
                    q.pow(n as u32 / p as u32)
                )));
            }
            Ok(None)
        }
        FormKind::Hermitian => {
            if n % 2 == 0 {
                return fail(format!("irreducible unitary element in even dimension {n}"));
            }
            if !kills(q.pow(n as u32) + 1) {
                return fail("|g| does not divide q^n + 1".into());
            }
            if b >= 1 {
                return Ok(Some(format!(
                    "conjugate into GU_{p}({}) with p | Q + 1",
                    q.pow(n as u32 / p as u32)
                )));
            }
            Ok(None)
        }
        FormKind::Symplectic => {
            let m = n as u32 / 2;
            if n > 2 && p == 2 {
                return fail("irreducible symplectic 2-element".into());
            }
            if p > 2 && !kills(q.pow(m) + 1) {
                return fail(format!("|g| does not divide q^{m} + 1"));
            }
            Ok(Some(format!(
                "in a torus of order {} of SL_2({})",
                q.pow(m) + 1,
                q.pow(m)
            )))
        }
        FormKind::Quadratic => {
            let m = n as u32 / 2;
            if n % 2 == 1 || grp.form.eps != Some(Eps::Minus) {
                return fail("irreducible orthogonal element outside the minus type".into());
            }
            if !kills(q.pow(m) + 1) {
                return fail(format!("g^(q^{m}+1) != 1"));
            }
            if !(p > 2 || n == 2) {
                return fail("irreducible orthogonal 2-element in dimension > 2".into());
            }
            let note = if n % 4 == 2 {
                format!("conjugate into GU_{m}({q})")
            } else {
                format!("in a torus of PSL_2({})", q.pow(m))
            };
            Ok(Some(note))
        }
    }
}
