//! Invariant subspaces: totally singular ones, and orthogonal decomposition into
//! irreducible nondegenerate blocks.

use serde::Serialize;

use super::form::{FormKind, FormSpace};
use crate::error::{Error, Result};
use crate::exactnum::{fpoly, Fe, Field};
use crate::linalg::{self, Mat};

pub const DEFAULT_LINE_CAP: u64 = 10_000;

/// Span of v, gv, g^2 v, ... as a reduced basis.
pub fn cyclic_span(k: &Field, g: &Mat, v: &[Fe]) -> Vec<Vec<Fe>> {
    let n = g.rows;
    let mut vecs = vec![v.to_vec()];
    let mut r = linalg::span_basis(k, &vecs, n).len();
    loop {
        let next = linalg::mat_vec(k, g, vecs.last().unwrap());
        vecs.push(next);
        let r2 = linalg::span_basis(k, &vecs, n).len();
        if r2 == r {
            vecs.pop();
            return linalg::span_basis(k, &vecs, n);
        }
        r = r2;
    }
}

/// Matrix of g on span(basis); the span must be g-invariant.
pub fn restrict(k: &Field, g: &Mat, basis: &[Vec<Fe>]) -> Mat {
    let s = basis.len();
    let b = Mat::from_cols(basis);
    let cols: Vec<Vec<Fe>> = basis
        .iter()
        .map(|v| linalg::solve(k, &b, &linalg::mat_vec(k, g, v)).expect("subspace not invariant"))
        .collect();
    let m = Mat::from_cols(&cols);
    debug_assert_eq!(m.rows, s);
    m
}

/// Whether span(basis) is g-invariant.
pub fn is_invariant(k: &Field, g: &Mat, basis: &[Vec<Fe>]) -> bool {
    let n = g.rows;
    let mut all = basis.to_vec();
    let d = linalg::span_basis(k, &all, n).len();
    all.extend(basis.iter().map(|v| linalg::mat_vec(k, g, v)));
    linalg::span_basis(k, &all, n).len() == d
}

/// Minimal g-invariant subspaces inside span(space), grouped by irreducible factor.
///
/// Calls `visit` on each minimal subspace until it returns true.
fn scan_minimal(
    k: &Field,
    g: &Mat,
    space: &[Vec<Fe>],
    cap: u64,
    mut visit: impl FnMut(&[Vec<Fe>]) -> bool,
) -> Result<Option<Vec<Vec<Fe>>>> {
    let n = g.rows;
    let gs = restrict(k, g, space);
    let q = k.q() as u64;
    for (f, _) in fpoly::factor(k, &linalg::charpoly(k, &gs)) {
        let d = fpoly::degree(&f).unwrap();
        let ker: Vec<Vec<Fe>> = linalg::nullspace(k, &linalg::poly_eval(k, &f, &gs))
            .into_iter()
            .map(|a| super::form::combine(k, space, &a, n))
            .collect();
        // an E-basis of ker, E = F[x]/(f)
        let mut ebasis: Vec<Vec<Fe>> = Vec::new();
        let mut covered: Vec<Vec<Fe>> = Vec::new();
        for v in &ker {
            let mut t = covered.clone();
            t.push(v.clone());
            if linalg::span_basis(k, &t, n).len() > covered.len() {
                ebasis.push(v.clone());
                covered.extend(cyclic_span(k, g, v));
                covered = linalg::span_basis(k, &covered, n);
            }
        }
        let m = ebasis.len() as u32;
        let big_q = (q as u128).pow(d as u32);
        let lines: u128 = (0..m).map(|t| big_q.pow(t)).sum();
        if lines > cap as u128 {
            return Err(Error::Cap(format!(
                "{lines} minimal invariant subspaces for a factor of degree {d} exceed cap {cap}"
            )));
        }
        // g^j e_i
        let pw: Vec<Vec<Vec<Fe>>> = ebasis
            .iter()
            .map(|v| {
                let mut out = vec![v.clone()];
                for _ in 1..d {
                    out.push(linalg::mat_vec(k, g, out.last().unwrap()));
                }
                out
            })
            .collect();
        let big_q = big_q as u64;
        for lead in 0..m as usize {
            let rest = m as usize - 1 - lead;
            for idx in 0..big_q.pow(rest as u32) {
                let mut v = ebasis[lead].clone();
                let mut x = idx;
                for i in lead + 1..m as usize {
                    let mut c = x % big_q;
                    x /= big_q;
                    for w in &pw[i] {
                        let a = (c % q) as Fe;
                        c /= q;
                        if a != 0 {
                            for (vi, wi) in v.iter_mut().zip(w) {
                                *vi = k.add(*vi, k.mul(a, *wi));
                            }
                        }
                    }
                }
                let w = cyclic_span(k, g, &v);
                if visit(&w) {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

/// A nonzero g-invariant totally singular subspace, if one exists.
///
/// Without a form this returns a proper nonzero invariant subspace when g is reducible.
pub fn invariant_totally_singular_subspace(
    g: &Mat,
    f: &FormSpace,
    cap: u64,
) -> Result<Option<Vec<Vec<Fe>>>> {
    let k = &*f.field;
    let n = f.n;
    let full: Vec<Vec<Fe>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    if f.kind == FormKind::None {
        let gs = g.clone();
        let fac = fpoly::factor(k, &linalg::charpoly(k, &gs));
        let first = &fac[0].0;
        let ker = linalg::nullspace(k, &linalg::poly_eval(k, first, g));
        let w = cyclic_span(k, g, &ker[0]);
        return Ok((w.len() < n).then_some(w));
    }
    scan_minimal(k, g, &full, cap, |w| f.is_totally_singular(w))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Decomposition {
    /// Pairwise orthogonal nondegenerate blocks on which g is irreducible.
    Blocks(Vec<Vec<Vec<Fe>>>),
    /// Even q, orthogonal kind, g fixes the given nonsingular vector.
    Char2Exception(Vec<Fe>),
}

/// Orthogonal decomposition of V into irreducible nondegenerate g-invariant blocks.
///
/// Requires that g fixes no nonzero totally singular subspace.
pub fn orthogonal_irreducible_decomposition(
    g: &Mat,
    f: &FormSpace,
    cap: u64,
) -> Result<Decomposition> {
    let k = &*f.field;
    let n = f.n;
    if invariant_totally_singular_subspace(g, f, cap)?.is_some() {
        return Err(Error::Precondition(
            "g fixes a nonzero totally singular subspace".into(),
        ));
    }
    if f.kind == FormKind::None {
        return Ok(Decomposition::Blocks(vec![linalg::span_basis(
            k,
            &Mat::identity(n)
                .data
                .chunks(n)
                .map(|r| r.to_vec())
                .collect::<Vec<_>>(),
            n,
        )]));
    }
    if f.kind == FormKind::Quadratic && k.p() == 2 {
        let fixed = linalg::nullspace(k, &linalg::minus_scalar(k, g, 1));
        if let Some(u) = fixed.into_iter().next() {
            return Ok(Decomposition::Char2Exception(u));
        }
    }
    let mut space: Vec<Vec<Fe>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut blocks = Vec::new();
    while !space.is_empty() {
        let w = scan_minimal(k, g, &space, u64::MAX, |_| true)?
            .ok_or_else(|| Error::Internal("no minimal subspace in nonzero space".into()))?;
        if !f.nondegenerate_on(&w) {
            return Err(Error::Internal("degenerate minimal block".into()));
        }
        space = f.perp_within(&space, &w);
        blocks.push(w);
    }
    Ok(Decomposition::Blocks(blocks))
}

/// dim of the fixed space of g on V/span(u).
pub fn quotient_fixed_dim(k: &Field, g: &Mat, u: &[Vec<Fe>]) -> usize {
    let n = g.rows;
    let gm1 = linalg::minus_scalar(k, g, 1);
    let mut cols: Vec<Vec<Fe>> = (0..n).map(|j| gm1.col(j)).collect();
    cols.extend(u.iter().cloned());
    let r = linalg::rank(k, &Mat::from_cols(&cols));
    n - r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classgrp::form::{standard_form, Eps, Family};
    use crate::classgrp::member::preserves_form;

    /// Exhaustive oracle: a TS invariant subspace exists iff some cyclic span is TS.
    fn brute_force_exists(g: &Mat, f: &FormSpace) -> bool {
        let k = &*f.field;
        let n = f.n;
        let q = k.q() as u64;
        (1..q.pow(n as u32)).any(|x| {
            let v: Vec<Fe> = (0..n).map(|i| ((x / q.pow(i as u32)) % q) as Fe).collect();
            let w = cyclic_span(k, g, &v);
            f.is_totally_singular(&w)
        })
    }

    fn small_isometries(f: &FormSpace, count: usize) -> Vec<Mat> {
        // products of generators built from transvection-like and diagonal moves
        use rand::{Rng, SeedableRng};
        let k = &*f.field;
        let n = f.n;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut out = Vec::new();
        let mut tries = 0;
        while out.len() < count && tries < 200_000 {
            tries += 1;
            let m = Mat {
                rows: n,
                cols: n,
                data: (0..n * n).map(|_| rng.gen_range(0..k.q())).collect(),
            };
            if preserves_form(&m, f) == Some(1) {
                out.push(m);
            }
        }
        out
    }

    #[test]
    fn ts_matches_brute_force() {
        let cases = [
            (Family::Sp, 4, 2),
            (Family::Sp, 4, 3),
            (Family::GU, 2, 2),
            (Family::GU, 3, 2),
            (Family::GO(Eps::Minus), 4, 2),
            (Family::GO(Eps::Plus), 4, 2),
            (Family::GO(Eps::Odd), 3, 3),
            (Family::GO(Eps::Minus), 4, 3),
        ];
        for (fam, n, q) in cases {
            let f = standard_form(fam, n, q).unwrap();
            let gs = small_isometries(&f, 25);
            assert!(!gs.is_empty(), "{fam} {n} {q}");
            for g in gs {
                let got = invariant_totally_singular_subspace(&g, &f, DEFAULT_LINE_CAP).unwrap();
                assert_eq!(
                    got.is_some(),
                    brute_force_exists(&g, &f),
                    "{fam} {n} {q} {g:?}"
                );
                if let Some(w) = got {
                    assert!(f.is_totally_singular(&w));
                    assert!(is_invariant(&f.field, &g, &w));
                }
            }
        }
    }

    #[test]
    fn twisted_diagonal() {
        // g = lambda * Id on GU_2(q): the TS lines are exactly (1, alpha) with alpha^(q+1) = -1
        for q in [2u64, 3, 4] {
            let f = standard_form(Family::GU, 2, q).unwrap();
            let k = &*f.field;
            let lam = k.pow(k.primitive(), q - 1);
            let g = Mat::scalar(2, lam);
            let w = invariant_totally_singular_subspace(&g, &f, DEFAULT_LINE_CAP)
                .unwrap()
                .unwrap();
            assert_eq!(w.len(), 1);
            let v = &w[0];
            let alpha = k.div(v[1], v[0]).unwrap();
            assert_eq!(k.pow(alpha, q + 1), k.neg(1));
        }
        // two isometric copies of an irreducible element of GU_3(2)
        let f = standard_form(Family::GU, 6, 2).unwrap();
        let k = &*f.field;
        let w3 = k.primitive();
        let h = Mat::diag(&[w3, k.mul(w3, w3), 1]);
        let g = h.direct_sum(&h);
        let alpha = k.elements().find(|&a| k.pow(a, 3) == k.neg(1)).unwrap();
        let wa: Vec<Vec<Fe>> = (0..3)
            .map(|i| {
                let mut v = vec![0; 6];
                v[i] = 1;
                v[3 + i] = alpha;
                v
            })
            .collect();
        assert!(f.is_totally_singular(&wa));
        assert!(is_invariant(k, &g, &wa));
        assert!(
            invariant_totally_singular_subspace(&g, &f, DEFAULT_LINE_CAP)
                .unwrap()
                .is_some()
        );
    }

    #[test]
    fn decomposition_sound() {
        let cases = [
            (Family::Sp, 4, 3),
            (Family::GU, 3, 2),
            (Family::GO(Eps::Minus), 4, 3),
            (Family::GO(Eps::Odd), 3, 5),
            (Family::GO(Eps::Minus), 4, 2),
            (Family::Sp, 6, 2),
        ];
        let mut seen_blocks = 0;
        for (fam, n, q) in cases {
            let f = standard_form(fam, n, q).unwrap();
            let k = &*f.field;
            for g in small_isometries(&f, 40) {
                if invariant_totally_singular_subspace(&g, &f, DEFAULT_LINE_CAP)
                    .unwrap()
                    .is_some()
                {
                    assert!(
                        orthogonal_irreducible_decomposition(&g, &f, DEFAULT_LINE_CAP).is_err()
                    );
                    continue;
                }
                match orthogonal_irreducible_decomposition(&g, &f, DEFAULT_LINE_CAP).unwrap() {
                    Decomposition::Char2Exception(u) => {
                        assert_eq!(k.p(), 2);
                        assert_eq!(linalg::mat_vec(k, &g, &u), u);
                        assert_ne!(f.quadratic(&u), 0);
                    }
                    Decomposition::Blocks(bs) => {
                        seen_blocks += 1;
                        let all: Vec<Vec<Fe>> = bs.iter().flatten().cloned().collect();
                        assert_eq!(linalg::span_basis(k, &all, n).len(), n);
                        let vfix = n - linalg::rank(k, &linalg::minus_scalar(k, &g, 1));
                        for (i, b) in bs.iter().enumerate() {
                            assert!(f.nondegenerate_on(b));
                            assert!(is_invariant(k, &g, b));
                            let gb = restrict(k, &g, b);
                            assert!(fpoly::is_irreducible(k, &linalg::charpoly(k, &gb)));
                            for c in &bs[i + 1..] {
                                for u in b {
                                    for v in c {
                                        assert_eq!(f.bilinear(u, v), 0);
                                    }
                                }
                            }
                            // fixed-point dimensions of U and V/U are bounded by that of V
                            let ufix = b.len() - linalg::rank(k, &linalg::minus_scalar(k, &gb, 1));
                            assert!(ufix <= vfix);
                            assert!(quotient_fixed_dim(k, &g, b) <= vfix);
                        }
                    }
                }
            }
        }
        assert!(seen_blocks > 0);
    }

    #[test]
    fn char2_exception() {
        let f = standard_form(Family::GO(Eps::Minus), 2, 2).unwrap();
        let r =
            orthogonal_irreducible_decomposition(&Mat::identity(2), &f, DEFAULT_LINE_CAP).unwrap();
        match r {
            Decomposition::Char2Exception(u) => assert_ne!(f.quadratic(&u), 0),
            _ => panic!("expected exception"),
        }
    }

    #[test]
    fn no_form_means_reducible() {
        let f = standard_form(Family::GL, 2, 2).unwrap();
        let c = Mat::from_rows(&[vec![0, 1], vec![1, 1]]);
        assert!(invariant_totally_singular_subspace(&c, &f, 10)
            .unwrap()
            .is_none());
        let d = Mat::from_rows(&[vec![1, 1], vec![0, 1]]);
        assert!(invariant_totally_singular_subspace(&d, &f, 10)
            .unwrap()
            .is_some());
    }
}
