//! Generating sets and orders of the classical groups on their standard forms.

use num_bigint::BigUint;
use num_traits::One;

use super::form::{Eps, Family, FormKind, GroupSpec};
use super::member::{in_group, reflection, symplectic_transvection};
use crate::error::{Error, Result};
use crate::exactnum::Fe;
use crate::linalg::{self, Mat};

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

/// |G| from the standard order formulas.
pub fn group_order(family: Family, n: usize, q: u64) -> Result<BigUint> {
    let qb = big(q);
    let qp = |e: usize| qb.pow(e as u32);
    let prod = |lo: usize, hi: usize, f: &dyn Fn(usize) -> BigUint| {
        (lo..=hi).fold(BigUint::one(), |a, i| a * f(i))
    };
    let gl = || qp(n * (n - 1) / 2) * prod(1, n, &|i| qp(i) - 1u32);
    let gu = || {
        qp(n * (n - 1) / 2)
            * prod(1, n, &|i| {
                if i % 2 == 0 {
                    qp(i) - 1u32
                } else {
                    qp(i) + 1u32
                }
            })
    };
    let sp = |m: usize| qp(m * m) * prod(1, m, &|i| qp(2 * i) - 1u32);
    let go = |eps: Eps| -> Result<BigUint> {
        Ok(match eps {
            Eps::Odd => {
                if n % 2 == 0 || q % 2 == 0 {
                    return Err(Error::Precondition(
                        "odd orthogonal needs odd n and q".into(),
                    ));
                }
                2u32 * sp((n - 1) / 2)
            }
            Eps::Plus | Eps::Minus => {
                let m = n / 2;
                let top = if eps == Eps::Plus {
                    qp(m) - 1u32
                } else {
                    qp(m) + 1u32
                };
                2u32 * qp(m * (m - 1)) * top * prod(1, m - 1, &|i| qp(2 * i) - 1u32)
            }
        })
    };
    Ok(match family {
        Family::GL => gl(),
        Family::SL => gl() / big(q - 1),
        Family::GU => gu(),
        Family::SU => gu() / big(q + 1),
        Family::Sp => sp(n / 2),
        Family::CSp => sp(n / 2) * big(q - 1),
        Family::GO(e) => go(e)?,
        Family::SO(e) => go(e)? / 2u32,
        Family::Omega(e) => {
            if q % 2 == 0 {
                go(e)? / 2u32
            } else {
                go(e)? / 4u32
            }
        }
    })
}

fn unit(n: usize, i: usize) -> Vec<Fe> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

/// Generators of the group (verified members; generation is checked by order in tests).
pub fn generators(g: &GroupSpec) -> Vec<Mat> {
    let f = &g.form;
    let k = &*f.field;
    let n = g.n;
    let p = k.p() as u64;
    let w = k.primitive();
    // F_p-basis of the base field
    let base_q = g.q;
    let base_f = (base_q as f64).log(p as f64).round() as u32;
    let mut out: Vec<Mat> = Vec::new();
    match f.kind {
        FormKind::None => {
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    for t in 0..base_f {
                        let mut m = Mat::identity(n);
                        m.set(i, j, k.exp(t as u64));
                        out.push(m);
                    }
                }
            }
            if g.family == Family::GL {
                let mut d = vec![1; n];
                d[0] = w;
                out.push(Mat::diag(&d));
            }
        }
        FormKind::Symplectic => {
            let m = n / 2;
            let mut vs: Vec<Vec<Fe>> = (0..n).map(|i| unit(n, i)).collect();
            for i in 0..m {
                for j in 0..m {
                    if i != j {
                        let mut v = unit(n, i);
                        v[m + j] = 1;
                        vs.push(v);
                    }
                    if i < j {
                        let mut v = unit(n, i);
                        v[j] = 1;
                        vs.push(v);
                    }
                }
            }
            for v in &vs {
                for t in 0..base_f {
                    out.push(symplectic_transvection(f, v, k.exp(t as u64)));
                }
            }
            if g.family == Family::CSp {
                let mut d = vec![1; n];
                for x in d.iter_mut().skip(m) {
                    *x = w;
                }
                out.push(Mat::diag(&d));
            }
        }
        FormKind::Hermitian => {
            let q = base_q;
            // unitary transvections along isotropic e_i + alpha e_j
            let minus1 = k.neg(1);
            let alphas: Vec<Fe> = k
                .elements()
                .filter(|&a| k.pow(a, q + 1) == minus1)
                .collect();
            let traceless: Vec<Fe> = k
                .elements()
                .filter(|&a| a != 0 && k.add(k.pow(a, q), a) == 0)
                .collect();
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    for &alpha in &alphas {
                        let mut v = unit(n, i);
                        v[j] = alpha;
                        for &a in &traceless {
                            let mut m = Mat::identity(n);
                            for c in 0..n {
                                let e = unit(n, c);
                                let s = k.mul(a, f.bilinear(&e, &v));
                                for r in 0..n {
                                    m.set(r, c, k.add(m.get(r, c), k.mul(s, v[r])));
                                }
                            }
                            out.push(m);
                        }
                    }
                }
            }
            // Eichler-type maps x + B(x,e) a u - B(x, a u) e + c B(x,e) e, e isotropic, u _|_ e
            if n >= 3 {
                let e = {
                    let mut v = unit(n, 0);
                    v[1] = alphas[0];
                    v
                };
                for j in 2..n {
                    for a in k.elements().filter(|&a| a != 0) {
                        let mut u = vec![0; n];
                        u[j] = a;
                        for c in k.elements() {
                            let mut m = Mat::identity(n);
                            for col in 0..n {
                                let x = unit(n, col);
                                let bxe = f.bilinear(&x, &e);
                                let bxu = f.bilinear(&x, &u);
                                for r in 0..n {
                                    let t = k.sub(
                                        k.add(k.mul(bxe, u[r]), k.mul(k.mul(c, bxe), e[r])),
                                        k.mul(bxu, e[r]),
                                    );
                                    m.set(r, col, k.add(m.get(r, col), t));
                                }
                            }
                            if super::member::preserves_form(&m, f) == Some(1) {
                                out.push(m);
                                break;
                            }
                        }
                    }
                }
            }
            // norm-one diagonal and signed transpositions
            let lam = k.pow(w, q - 1);
            let linv = k.inv(lam).unwrap();
            for i in 0..n.saturating_sub(1) {
                let mut d = vec![1; n];
                d[i] = lam;
                d[i + 1] = linv;
                out.push(Mat::diag(&d));
                let mut t = Mat::identity(n);
                t.set(i, i, 0);
                t.set(i + 1, i + 1, 0);
                t.set(i, i + 1, 1);
                t.set(i + 1, i, minus1);
                out.push(t);
            }
            if g.family == Family::GU {
                let mut d = vec![1; n];
                d[0] = lam;
                out.push(Mat::diag(&d));
            }
        }
        FormKind::Quadratic => {
            // reflections in nonsingular vectors with at most three nonzero coordinates
            let mut refl: Vec<(Mat, Fe)> = Vec::new();
            let nz: Vec<Fe> = k.elements().filter(|&c| c != 0).collect();
            let mut vecs: Vec<Vec<Fe>> = Vec::new();
            for i in 0..n {
                vecs.push(unit(n, i));
                for j in i + 1..n {
                    for &c in &nz {
                        let mut v = unit(n, i);
                        v[j] = c;
                        vecs.push(v.clone());
                        for l in j + 1..n {
                            for &d in &nz {
                                let mut w = v.clone();
                                w[l] = d;
                                vecs.push(w);
                            }
                        }
                    }
                }
            }
            for v in &vecs {
                if let Some(r) = reflection(f, v) {
                    if !refl.iter().any(|(m, _)| *m == r) {
                        refl.push((r, f.quadratic(v)));
                    }
                }
            }
            match g.family {
                Family::GO(_) => out = refl.into_iter().map(|(m, _)| m).collect(),
                Family::SO(_) | Family::Omega(_) => {
                    // r_u r_v with u fixed per square class of Q(u)
                    let odd_omega = matches!(g.family, Family::Omega(_)) && p != 2;
                    let class = |x: Fe| !odd_omega || k.is_square(x);
                    for anchor in [true, false] {
                        let Some((r0, _)) = refl.iter().find(|(_, qv)| class(*qv) == anchor) else {
                            continue;
                        };
                        for (r, qv) in &refl {
                            if class(*qv) == anchor {
                                out.push(linalg::mul(k, r0, r));
                            }
                        }
                        if !odd_omega {
                            break;
                        }
                    }
                }
                _ => unreachable!(),
            }
        }
    }
    out.retain(|m| in_group(m, g));
    out.sort();
    out.dedup();
    out
}
