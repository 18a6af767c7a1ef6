//! Forms on F^n and the classical groups they define.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::{ff_of_order, Fe, Field};
use crate::linalg::{self, Mat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum FormKind {
    None,
    Hermitian,
    Symplectic,
    Quadratic,
}

/// Witt type of a quadratic form: split, non-split, or odd dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum Eps {
    Plus,
    Minus,
    Odd,
}

impl Eps {
    pub fn sign(self) -> i64 {
        match self {
            Eps::Plus => 1,
            Eps::Minus => -1,
            Eps::Odd => 0,
        }
    }
    fn suffix(self) -> &'static str {
        match self {
            Eps::Plus => "+",
            Eps::Minus => "-",
            Eps::Odd => "",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum Family {
    GL,
    SL,
    GU,
    SU,
    Sp,
    CSp,
    GO(Eps),
    SO(Eps),
    Omega(Eps),
}

impl Family {
    pub fn kind(self) -> FormKind {
        match self {
            Family::GL | Family::SL => FormKind::None,
            Family::GU | Family::SU => FormKind::Hermitian,
            Family::Sp | Family::CSp => FormKind::Symplectic,
            _ => FormKind::Quadratic,
        }
    }

    pub fn eps(self) -> Option<Eps> {
        match self {
            Family::GO(e) | Family::SO(e) | Family::Omega(e) => Some(e),
            _ => None,
        }
    }

    pub fn is_unitary(self) -> bool {
        self.kind() == FormKind::Hermitian
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::GL => write!(f, "GL"),
            Family::SL => write!(f, "SL"),
            Family::GU => write!(f, "GU"),
            Family::SU => write!(f, "SU"),
            Family::Sp => write!(f, "Sp"),
            Family::CSp => write!(f, "CSp"),
            Family::GO(e) => write!(f, "GO{}", e.suffix()),
            Family::SO(e) => write!(f, "SO{}", e.suffix()),
            Family::Omega(e) => write!(f, "Omega{}", e.suffix()),
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        let (base, eps) = match s.strip_suffix('+') {
            Some(b) => (b, Some(Eps::Plus)),
            None => match s.strip_suffix('-') {
                Some(b) => (b, Some(Eps::Minus)),
                None => (s, None),
            },
        };
        let orth = |e: Option<Eps>| e.unwrap_or(Eps::Odd);
        let fam = match (base, eps) {
            ("GL", None) => Family::GL,
            ("SL", None) => Family::SL,
            ("GU", None) => Family::GU,
            ("SU", None) => Family::SU,
            ("Sp", None) => Family::Sp,
            ("CSp", None) => Family::CSp,
            ("GO", e) => Family::GO(orth(e)),
            ("SO", e) => Family::SO(orth(e)),
            ("Omega", e) => Family::Omega(orth(e)),
            _ => return Err(Error::Precondition(format!("unknown family {s:?}"))),
        };
        Ok(fam)
    }
}

/// A vector space with a (possibly zero) form.
#[derive(Clone, Debug)]
pub struct FormSpace {
    pub field: Arc<Field>,
    pub n: usize,
    pub kind: FormKind,
    pub eps: Option<Eps>,
    /// Gram matrix of the bilinear, hermitian, or polar form.
    pub gram: Mat,
    /// Upper-triangular coefficients of Q (quadratic kind only).
    pub quad: Option<Mat>,
    /// Conjugation exponent: x -> x^conj (q for hermitian over GF(q^2), else 1).
    pub conj: u64,
}

impl FormSpace {
    pub fn conj_elem(&self, x: Fe) -> Fe {
        if self.conj == 1 {
            x
        } else {
            self.field.pow(x, self.conj)
        }
    }

    pub fn conj_vec(&self, v: &[Fe]) -> Vec<Fe> {
        v.iter().map(|&x| self.conj_elem(x)).collect()
    }

    pub fn conj_mat(&self, m: &Mat) -> Mat {
        m.map(|x| self.conj_elem(x))
    }

    /// B(u, v) = u^T G conj(v).
    pub fn bilinear(&self, u: &[Fe], v: &[Fe]) -> Fe {
        let k = &*self.field;
        let gv = linalg::mat_vec(k, &self.gram, &self.conj_vec(v));
        linalg::dot(k, u, &gv)
    }

    pub fn quadratic(&self, v: &[Fe]) -> Fe {
        let k = &*self.field;
        let Some(qc) = &self.quad else { return 0 };
        let mut s = 0;
        for i in 0..self.n {
            if v[i] == 0 {
                continue;
            }
            for j in i..self.n {
                let c = qc.get(i, j);
                if c != 0 {
                    s = k.add(s, k.mul(c, k.mul(v[i], v[j])));
                }
            }
        }
        s
    }

    /// Whether the form (and Q) vanish identically on the span of the vectors.
    pub fn is_totally_singular(&self, basis: &[Vec<Fe>]) -> bool {
        if self.kind == FormKind::None {
            return true;
        }
        for (i, u) in basis.iter().enumerate() {
            if self.kind == FormKind::Quadratic && self.quadratic(u) != 0 {
                return false;
            }
            for w in &basis[i..] {
                if self.bilinear(u, w) != 0 || self.bilinear(w, u) != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Gram matrix of the form restricted to span(basis).
    pub fn restricted_gram(&self, basis: &[Vec<Fe>]) -> Mat {
        let d = basis.len();
        let mut g = Mat::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                g.set(i, j, self.bilinear(&basis[i], &basis[j]));
            }
        }
        g
    }

    /// Basis of {x in span(basis) : B(x, w) = 0 for all w in ws}.
    pub fn perp_within(&self, basis: &[Vec<Fe>], ws: &[Vec<Fe>]) -> Vec<Vec<Fe>> {
        let k = &*self.field;
        // coefficients a with sum a_i B(u_i, w_j) = 0
        let mut m = Mat::zeros(ws.len(), basis.len());
        for (j, w) in ws.iter().enumerate() {
            for (i, u) in basis.iter().enumerate() {
                m.set(j, i, self.bilinear(u, w));
            }
        }
        linalg::nullspace(k, &m)
            .into_iter()
            .map(|a| combine(k, basis, &a, self.n))
            .collect()
    }

    pub fn nondegenerate_on(&self, basis: &[Vec<Fe>]) -> bool {
        let g = self.restricted_gram(basis);
        linalg::rank(&self.field, &g) == basis.len()
    }
}

/// sum a_i b_i
pub fn combine(k: &Field, basis: &[Vec<Fe>], a: &[Fe], n: usize) -> Vec<Fe> {
    let mut v = vec![0; n];
    for (b, &c) in basis.iter().zip(a) {
        if c == 0 {
            continue;
        }
        for i in 0..n {
            v[i] = k.add(v[i], k.mul(c, b[i]));
        }
    }
    v
}

fn gram_from_quad(k: &Field, qc: &Mat) -> Mat {
    let n = qc.rows;
    let mut g = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = if i == j {
                k.add(qc.get(i, i), qc.get(i, i))
            } else if i < j {
                qc.get(i, j)
            } else {
                qc.get(j, i)
            };
            g.set(i, j, v);
        }
    }
    g
}

impl FormSpace {
    pub fn from_quadratic(field: Arc<Field>, qc: Mat, eps: Eps) -> FormSpace {
        let n = qc.rows;
        let mut up = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let (a, b) = if i <= j { (i, j) } else { (j, i) };
                let v = field.add(up.get(a, b), qc.get(i, j));
                up.set(a, b, v);
            }
        }
        let gram = gram_from_quad(&field, &up);
        FormSpace {
            field,
            n,
            kind: FormKind::Quadratic,
            eps: Some(eps),
            gram,
            quad: Some(up),
            conj: 1,
        }
    }
}

/// Smallest mu with t^2 + t + mu irreducible over k.
pub fn anisotropic_constant(k: &Field) -> Fe {
    (0..k.q())
        .find(|&mu| k.elements().all(|t| k.add(k.add(k.mul(t, t), t), mu) != 0))
        .expect("irreducible quadratic exists")
}

/// The canonical form for a family.
pub fn standard_form(family: Family, n: usize, q: u64) -> Result<FormSpace> {
    let bad = |why: &str| Err(Error::Precondition(format!("{family} {n} {q}: {why}")));
    if n == 0 {
        return bad("dimension must be positive");
    }
    let base = ff_of_order(q)?;
    match family.kind() {
        FormKind::None => Ok(FormSpace {
            field: base,
            n,
            kind: FormKind::None,
            eps: None,
            gram: Mat::zeros(n, n),
            quad: None,
            conj: 1,
        }),
        FormKind::Hermitian => {
            let k = ff_of_order(q * q)?;
            Ok(FormSpace {
                field: k,
                n,
                kind: FormKind::Hermitian,
                eps: None,
                gram: Mat::identity(n),
                quad: None,
                conj: q,
            })
        }
        FormKind::Symplectic => {
            if n % 2 != 0 {
                return bad("symplectic dimension must be even");
            }
            let m = n / 2;
            let mut g = Mat::zeros(n, n);
            for i in 0..m {
                g.set(i, m + i, 1);
                g.set(m + i, i, base.neg(1));
            }
            Ok(FormSpace {
                field: base,
                n,
                kind: FormKind::Symplectic,
                eps: None,
                gram: g,
                quad: None,
                conj: 1,
            })
        }
        FormKind::Quadratic => {
            let eps = family.eps().unwrap();
            let mut qc = Mat::zeros(n, n);
            match eps {
                Eps::Odd => {
                    if n % 2 == 0 || q % 2 == 0 {
                        return bad("odd orthogonal needs odd dimension and odd q");
                    }
                    for i in 0..n {
                        qc.set(i, i, 1);
                    }
                }
                Eps::Plus => {
                    if n % 2 != 0 || n < 2 {
                        return bad("split orthogonal needs even dimension");
                    }
                    let m = n / 2;
                    for i in 0..m {
                        qc.set(i, m + i, 1);
                    }
                }
                Eps::Minus => {
                    if n % 2 != 0 || n < 2 {
                        return bad("non-split orthogonal needs even dimension");
                    }
                    let m = n / 2;
                    for i in 0..m - 1 {
                        qc.set(i, m - 1 + i, 1);
                    }
                    let (a, b) = (n - 2, n - 1);
                    qc.set(a, a, 1);
                    qc.set(a, b, 1);
                    qc.set(b, b, anisotropic_constant(&base));
                }
            }
            Ok(FormSpace::from_quadratic(base, qc, eps))
        }
    }
}

/// A named classical group on its natural module.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub family: Family,
    pub n: usize,
    pub q: u64,
    pub form: FormSpace,
}

impl GroupSpec {
    pub fn new(family: Family, n: usize, q: u64) -> Result<GroupSpec> {
        let form = standard_form(family, n, q)?;
        Ok(GroupSpec { family, n, q, form })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.form.field
    }

    /// Fixture identifier such as `GU3_2` or `GO-4_3`.
    pub fn id(&self) -> String {
        format!("{}{}_{}", self.family, self.n, self.q)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}({})", self.family, self.n, self.q)
    }
}

/// Parse a fixture identifier `<family><n>_<q>`.
pub fn parse_group_id(s: &str) -> Result<GroupSpec> {
    let err = || Error::Precondition(format!("bad group id {s:?}"));
    let (head, q) = s.split_once('_').ok_or_else(err)?;
    let q: u64 = q.parse().map_err(|_| err())?;
    let split = head
        .char_indices()
        .find(|(_, c)| c.is_ascii_digit())
        .map(|(i, _)| i)
        .ok_or_else(err)?;
    let (fam, n) = head.split_at(split);
    let n: usize = n.parse().map_err(|_| err())?;
    GroupSpec::new(fam.parse()?, n, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitary_identity_gram() {
        let f = standard_form(Family::GU, 3, 2).unwrap();
        assert_eq!(f.gram, Mat::identity(3));
        assert_eq!(f.field.q(), 4);
    }

    #[test]
    fn minus_type_singular_count() {
        // brute-force count of singular vectors for O^-_4(2) and O^+_4(2)
        for (eps, want_nonzero) in [(Eps::Minus, 5usize), (Eps::Plus, 9)] {
            let f = standard_form(Family::GO(eps), 4, 2).unwrap();
            let mut count = 0;
            for x in 1..16u32 {
                let v: Vec<Fe> = (0..4).map(|i| (x >> i) & 1).collect();
                if f.quadratic(&v) == 0 {
                    count += 1;
                }
            }
            assert_eq!(count, want_nonzero);
        }
        // general formula (q^m - eps)(q^(m-1) + eps) nonzero singular vectors
        for (q, m) in [(3u64, 2usize), (2, 3), (5, 1)] {
            for eps in [Eps::Plus, Eps::Minus] {
                let f = standard_form(Family::GO(eps), 2 * m, q).unwrap();
                let k = &f.field;
                let total = q.pow(2 * m as u32);
                let mut count = 0i64;
                for x in 1..total {
                    let v: Vec<Fe> = (0..2 * m)
                        .map(|i| ((x / q.pow(i as u32)) % q) as Fe)
                        .collect();
                    if f.quadratic(&v) == 0 {
                        count += 1;
                    }
                }
                let e = eps.sign();
                let want = (q.pow(m as u32) as i64 - e) * (q.pow(m as u32 - 1) as i64 + e);
                assert_eq!(count, want, "q={q} m={m} eps={eps:?}");
                let _ = k;
            }
        }
    }

    #[test]
    fn illegal_combinations() {
        assert!(standard_form(Family::Sp, 3, 3).is_err());
        assert!(standard_form(Family::GO(Eps::Odd), 3, 2).is_err());
        assert!("Sp-".parse::<Family>().is_err());
        assert_eq!("GO-".parse::<Family>().unwrap(), Family::GO(Eps::Minus));
        assert_eq!(parse_group_id("GO-4_3").unwrap().id(), "GO-4_3");
        assert_eq!(parse_group_id("Sp6_2").unwrap().n, 6);
    }
}
