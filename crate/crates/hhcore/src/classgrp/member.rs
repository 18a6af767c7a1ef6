//! Membership tests, similitude factors, spinor norms, pseudoreflections.

use super::form::{Eps, Family, FormKind, FormSpace, GroupSpec};
use crate::exactnum::{fpoly, Fe};
use crate::linalg::{self, Mat};

/// Similitude factor tau with B(Mu, Mv) = tau B(u, v) (and Q(Mv) = tau Q(v)), if any.
pub fn preserves_form(m: &Mat, f: &FormSpace) -> Option<Fe> {
    let k = &*f.field;
    if linalg::det(k, m) == 0 {
        return None;
    }
    if f.kind == FormKind::None {
        return Some(1);
    }
    let a = linalg::mul(k, &linalg::mul(k, &m.transpose(), &f.gram), &f.conj_mat(m));
    let tau = (0..f.n * f.n)
        .find(|&i| f.gram.data[i] != 0)
        .map(|i| k.div(a.data[i], f.gram.data[i]).unwrap())
        .unwrap_or(1);
    if a != linalg::scale(k, &f.gram, tau) {
        return None;
    }
    if f.kind == FormKind::Quadratic {
        for j in 0..f.n {
            let mut e = vec![0; f.n];
            e[j] = 1;
            let img = m.col(j);
            if f.quadratic(&img) != k.mul(tau, f.quadratic(&e)) {
                return None;
            }
        }
    }
    Some(tau)
}

/// Dickson invariant rank(M - I) mod 2 (characteristic 2 orthogonal groups).
pub fn dickson_invariant(m: &Mat, f: &FormSpace) -> u32 {
    let k = &*f.field;
    (linalg::rank(k, &linalg::minus_scalar(k, m, 1)) % 2) as u32
}

/// Spinor norm square class in odd characteristic: true when trivial.
///
/// Uses the discriminant of the Wall form [u, w] = B(u', w) on im(1 - g), u = (1 - g)u'.
pub fn spinor_norm_trivial(m: &Mat, f: &FormSpace) -> bool {
    let k = &*f.field;
    let n = f.n;
    let one_minus = linalg::sub(k, &Mat::identity(n), m);
    // basis of the image together with preimages
    let (_, piv) = linalg::rref(k, &one_minus);
    if piv.is_empty() {
        return true;
    }
    let image: Vec<Vec<Fe>> = piv.iter().map(|&c| one_minus.col(c)).collect();
    let pre: Vec<Vec<Fe>> = piv
        .iter()
        .map(|&c| {
            let mut e = vec![0; n];
            e[c] = 1;
            e
        })
        .collect();
    let d = image.len();
    let mut w = Mat::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            w.set(i, j, f.bilinear(&pre[i], &image[j]));
        }
    }
    let disc = linalg::det(k, &w);
    debug_assert!(disc != 0);
    k.is_square(disc)
}

/// Whether M lies in the group.
pub fn in_group(m: &Mat, g: &GroupSpec) -> bool {
    let f = &g.form;
    let k = &*f.field;
    let Some(tau) = preserves_form(m, f) else {
        return false;
    };
    let det = || linalg::det(k, m);
    match g.family {
        Family::GL => true,
        Family::SL => det() == 1,
        Family::GU | Family::Sp => tau == 1,
        Family::SU => tau == 1 && det() == 1,
        Family::CSp => tau != 0,
        Family::GO(_) => tau == 1,
        Family::SO(_) => {
            // in characteristic 2 the special orthogonal group is taken to be the Dickson kernel
            tau == 1
                && if k.p() == 2 {
                    dickson_invariant(m, f) == 0
                } else {
                    det() == 1
                }
        }
        Family::Omega(_) => {
            tau == 1
                && if k.p() == 2 {
                    dickson_invariant(m, f) == 0
                } else {
                    det() == 1 && spinor_norm_trivial(m, f)
                }
        }
    }
}

/// (alpha, beta) when M = diag(alpha, beta, ..., beta) up to conjugacy with alpha != beta.
pub fn is_pseudoreflection(m: &Mat, f: &FormSpace) -> Option<(Fe, Fe)> {
    let k = &*f.field;
    let n = m.rows;
    if n < 2 {
        return None;
    }
    let tr = (0..n).fold(0, |s, i| k.add(s, m.get(i, i)));
    for beta in fpoly::roots(k, &linalg::charpoly(k, m)) {
        if linalg::rank(k, &linalg::minus_scalar(k, m, beta)) == 1 {
            let alpha = k.sub(tr, k.mul(k.from_int(n as i64 - 1), beta));
            if alpha != beta {
                return Some((alpha, beta));
            }
        }
    }
    None
}

/// dim ker(M - lambda I)
pub fn e_dim(m: &Mat, f: &FormSpace, lambda: Fe) -> usize {
    let k = &*f.field;
    m.rows - linalg::rank(k, &linalg::minus_scalar(k, m, lambda))
}

pub fn reflection(f: &FormSpace, v: &[Fe]) -> Option<Mat> {
    let k = &*f.field;
    let qv = f.quadratic(v);
    if qv == 0 {
        return None;
    }
    let n = f.n;
    let mut m = Mat::identity(n);
    for j in 0..n {
        let mut e = vec![0; n];
        e[j] = 1;
        let c = k.div(f.bilinear(&e, v), qv).unwrap();
        for i in 0..n {
            m.set(i, j, k.sub(m.get(i, j), k.mul(c, v[i])));
        }
    }
    Some(m)
}

/// Symplectic transvection x -> x + a B(x, v) v.
pub fn symplectic_transvection(f: &FormSpace, v: &[Fe], a: Fe) -> Mat {
    let k = &*f.field;
    let n = f.n;
    let mut m = Mat::identity(n);
    for j in 0..n {
        let mut e = vec![0; n];
        e[j] = 1;
        let c = k.mul(a, f.bilinear(&e, v));
        for i in 0..n {
            m.set(i, j, k.add(m.get(i, j), k.mul(c, v[i])));
        }
    }
    m
}

pub fn is_orthogonal_eps(f: &FormSpace) -> Option<Eps> {
    f.eps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classgrp::form::standard_form;

    #[test]
    fn identity_and_scalars() {
        for fam in [
            Family::GL,
            Family::SU,
            Family::Sp,
            Family::GO(Eps::Plus),
            Family::Omega(Eps::Minus),
        ] {
            let g = GroupSpec::new(fam, 4, 3).unwrap();
            assert!(in_group(&Mat::identity(4), &g));
        }
        let f = standard_form(Family::Sp, 4, 5).unwrap();
        let k = &f.field;
        assert_eq!(preserves_form(&Mat::scalar(4, 2), &f), Some(k.mul(2, 2)));
    }

    #[test]
    fn reflection_not_special() {
        let g = GroupSpec::new(Family::SO(Eps::Odd), 3, 5).unwrap();
        let r = reflection(&g.form, &[1, 0, 0]).unwrap();
        assert!(preserves_form(&r, &g.form) == Some(1));
        assert!(!in_group(&r, &g));
        let go = GroupSpec::new(Family::GO(Eps::Odd), 3, 5).unwrap();
        assert!(in_group(&r, &go));
    }

    #[test]
    fn sp2_example() {
        let g = GroupSpec::new(Family::Sp, 2, 3).unwrap();
        let m = Mat::from_rows(&[vec![0, 1], vec![2, 0]]);
        assert!(in_group(&m, &g));
        assert_eq!(linalg::det(&g.form.field, &m), 1);
    }

    #[test]
    fn pseudoreflections() {
        let f = standard_form(Family::GU, 4, 2).unwrap();
        let w = f.field.primitive();
        let d = Mat::diag(&[w, 1, 1, 1]);
        assert_eq!(is_pseudoreflection(&d, &f), Some((w, 1)));
        assert_eq!(is_pseudoreflection(&Mat::identity(4), &f), None);
        assert_eq!(e_dim(&d, &f, 1), 3);
        let f2 = standard_form(Family::GL, 2, 2).unwrap();
        let c = Mat::from_rows(&[vec![0, 1], vec![1, 1]]);
        assert_eq!(is_pseudoreflection(&c, &f2), None);
    }
}
