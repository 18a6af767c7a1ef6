//! Dense matrices over a finite field.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::fpoly::{self, FPoly};
use crate::exactnum::primes::factor_big;
use crate::exactnum::zpoly::cyclotomic;
use crate::exactnum::{Fe, Field};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, PartialOrd, Ord)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Fe>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        Self::scalar(n, 1)
    }

    pub fn scalar(n: usize, c: Fe) -> Mat {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Fe>]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Mat {
            rows: r,
            cols: c,
            data: rows.concat(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<Fe>]) -> Mat {
        Self::from_rows(cols).transpose()
    }

    pub fn diag(d: &[Fe]) -> Mat {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, &x) in d.iter().enumerate() {
            m.data[i * n + i] = x;
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Fe) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Fe> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j));
            }
        }
        m
    }

    pub fn map(&self, f: impl Fn(Fe) -> Fe) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, o: &Mat) -> Mat {
        let n = self.rows + o.rows;
        let c = self.cols + o.cols;
        let mut m = Self::zeros(n, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j));
            }
        }
        for i in 0..o.rows {
            for j in 0..o.cols {
                m.set(self.rows + i, self.cols + j, o.get(i, j));
            }
        }
        m
    }

    /// Parse whitespace-separated rows of field indices.
    pub fn parse(text: &str) -> Result<Mat> {
        let rows: Vec<Vec<Fe>> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| {
                        t.parse::<Fe>()
                            .map_err(|_| Error::Precondition(format!("bad matrix entry {t:?}")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
            return Err(Error::Precondition("malformed matrix block".into()));
        }
        Ok(Mat::from_rows(&rows))
    }

    pub fn to_text(&self) -> String {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Parse a matrix fixture file: blocks separated by blank lines, '#' comments ignored.
pub fn parse_matrix_file(text: &str) -> Result<Vec<Mat>> {
    let mut out = Vec::new();
    let mut block = String::new();
    for line in text.lines().chain(std::iter::once("")) {
        let l = line.split('#').next().unwrap().trim();
        if l.is_empty() {
            if !block.trim().is_empty() {
                out.push(Mat::parse(&block)?);
            }
            block.clear();
        } else {
            block.push_str(l);
            block.push('\n');
        }
    }
    Ok(out)
}

pub fn write_matrix_file(ms: &[Mat]) -> String {
    let mut s = ms.iter().map(Mat::to_text).collect::<Vec<_>>().join("\n\n");
    s.push('\n');
    s
}

pub fn mul(k: &Field, a: &Mat, b: &Mat) -> Mat {
    assert_eq!(a.cols, b.rows);
    let mut m = Mat::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        for l in 0..a.cols {
            let x = a.get(i, l);
            if x == 0 {
                continue;
            }
            for j in 0..b.cols {
                let y = b.get(l, j);
                if y != 0 {
                    let idx = i * b.cols + j;
                    m.data[idx] = k.add(m.data[idx], k.mul(x, y));
                }
            }
        }
    }
    m
}

pub fn add(k: &Field, a: &Mat, b: &Mat) -> Mat {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Mat {
        rows: a.rows,
        cols: a.cols,
        data: a
            .data
            .iter()
            .zip(&b.data)
            .map(|(&x, &y)| k.add(x, y))
            .collect(),
    }
}

pub fn sub(k: &Field, a: &Mat, b: &Mat) -> Mat {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Mat {
        rows: a.rows,
        cols: a.cols,
        data: a
            .data
            .iter()
            .zip(&b.data)
            .map(|(&x, &y)| k.sub(x, y))
            .collect(),
    }
}

pub fn scale(k: &Field, a: &Mat, c: Fe) -> Mat {
    a.map(|x| k.mul(x, c))
}

pub fn mat_vec(k: &Field, a: &Mat, v: &[Fe]) -> Vec<Fe> {
    (0..a.rows)
        .map(|i| {
            a.row(i)
                .iter()
                .zip(v)
                .fold(0, |s, (&x, &y)| k.add(s, k.mul(x, y)))
        })
        .collect()
}

pub fn dot(k: &Field, u: &[Fe], v: &[Fe]) -> Fe {
    u.iter().zip(v).fold(0, |s, (&x, &y)| k.add(s, k.mul(x, y)))
}

/// a - c*I
pub fn minus_scalar(k: &Field, a: &Mat, c: Fe) -> Mat {
    let mut m = a.clone();
    for i in 0..a.rows {
        m.set(i, i, k.sub(m.get(i, i), c));
    }
    m
}

/// Reduced row echelon form and pivot columns.
pub fn rref(k: &Field, a: &Mat) -> (Mat, Vec<usize>) {
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..m.cols {
                let t = m.get(r, j);
                m.set(r, j, m.get(pr, j));
                m.set(pr, j, t);
            }
        }
        let inv = k.inv(m.get(r, c)).unwrap();
        for j in 0..m.cols {
            m.set(r, j, k.mul(m.get(r, j), inv));
        }
        for i in 0..m.rows {
            if i != r {
                let f = m.get(i, c);
                if f != 0 {
                    for j in 0..m.cols {
                        let v = k.sub(m.get(i, j), k.mul(f, m.get(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank(k: &Field, a: &Mat) -> usize {
    rref(k, a).1.len()
}

/// Basis of {x : a x = 0}.
pub fn nullspace(k: &Field, a: &Mat) -> Vec<Vec<Fe>> {
    let (r, piv) = rref(k, a);
    let free: Vec<usize> = (0..a.cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; a.cols];
            v[f] = 1;
            for (i, &pc) in piv.iter().enumerate() {
                v[pc] = k.neg(r.get(i, f));
            }
            v
        })
        .collect()
}

/// Row-space basis (reduced) of the given vectors.
pub fn span_basis(k: &Field, vecs: &[Vec<Fe>], dim: usize) -> Vec<Vec<Fe>> {
    if vecs.is_empty() {
        return vec![];
    }
    let m = Mat::from_rows(vecs);
    let (r, piv) = rref(k, &m);
    (0..piv.len())
        .map(|i| r.row(i).to_vec())
        .collect::<Vec<_>>()
        .into_iter()
        .map(|v| {
            debug_assert_eq!(v.len(), dim);
            v
        })
        .collect()
}

pub fn inverse(k: &Field, a: &Mat) -> Option<Mat> {
    assert!(a.is_square());
    let n = a.rows;
    let mut aug = Mat::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, a.get(i, j));
        }
        aug.set(i, n + i, 1);
    }
    let (r, piv) = rref(k, &aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    let mut inv = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, r.get(i, n + j));
        }
    }
    Some(inv)
}

pub fn det(k: &Field, a: &Mat) -> Fe {
    assert!(a.is_square());
    let n = a.rows;
    let mut m = a.clone();
    let mut d = 1;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| m.get(i, c) != 0) else {
            return 0;
        };
        if pr != c {
            for j in 0..n {
                let t = m.get(c, j);
                m.set(c, j, m.get(pr, j));
                m.set(pr, j, t);
            }
            d = k.neg(d);
        }
        let piv = m.get(c, c);
        d = k.mul(d, piv);
        let inv = k.inv(piv).unwrap();
        for i in c + 1..n {
            let f = k.mul(m.get(i, c), inv);
            if f != 0 {
                for j in c..n {
                    let v = k.sub(m.get(i, j), k.mul(f, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
    }
    d
}

/// Solve a x = b for one solution, if any.
pub fn solve(k: &Field, a: &Mat, b: &[Fe]) -> Option<Vec<Fe>> {
    let mut aug = Mat::zeros(a.rows, a.cols + 1);
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug.set(i, j, a.get(i, j));
        }
        aug.set(i, a.cols, b[i]);
    }
    let (r, piv) = rref(k, &aug);
    if piv.last() == Some(&a.cols) {
        return None;
    }
    let mut x = vec![0; a.cols];
    for (i, &pc) in piv.iter().enumerate() {
        x[pc] = r.get(i, a.cols);
    }
    Some(x)
}

/// Characteristic polynomial det(tI - a), via Hessenberg reduction.
pub fn charpoly(k: &Field, a: &Mat) -> FPoly {
    assert!(a.is_square());
    let n = a.rows;
    let mut h = a.clone();
    // reduce to upper Hessenberg form by similarity
    for c in 0..n.saturating_sub(2) {
        let Some(pr) = (c + 1..n).find(|&i| h.get(i, c) != 0) else {
            continue;
        };
        if pr != c + 1 {
            let r = c + 1;
            for j in 0..n {
                let t = h.get(r, j);
                h.set(r, j, h.get(pr, j));
                h.set(pr, j, t);
            }
            for i in 0..n {
                let t = h.get(i, r);
                h.set(i, r, h.get(i, pr));
                h.set(i, pr, t);
            }
        }
        let inv = k.inv(h.get(c + 1, c)).unwrap();
        for i in c + 2..n {
            let f = k.mul(h.get(i, c), inv);
            if f == 0 {
                continue;
            }
            for j in 0..n {
                let v = k.sub(h.get(i, j), k.mul(f, h.get(c + 1, j)));
                h.set(i, j, v);
            }
            for j in 0..n {
                let v = k.add(h.get(j, c + 1), k.mul(f, h.get(j, i)));
                h.set(j, c + 1, v);
            }
        }
    }
    // recurrence on leading principal minors
    let mut p: Vec<FPoly> = vec![vec![1]];
    for m in 1..=n {
        let mut pm = fpoly::mul(k, &[k.neg(h.get(m - 1, m - 1)), 1], &p[m - 1]);
        let mut t = 1;
        for i in 1..m {
            t = k.mul(t, h.get(m - i, m - i - 1));
            let c = k.mul(t, h.get(m - i - 1, m - 1));
            pm = fpoly::sub(k, &pm, &fpoly::scale(k, &p[m - i - 1], c));
        }
        p.push(pm);
    }
    p.pop().unwrap()
}

pub fn pow(k: &Field, a: &Mat, e: &BigUint) -> Mat {
    let mut r = Mat::identity(a.rows);
    let mut b = a.clone();
    for i in 0..e.bits() {
        if e.bit(i) {
            r = mul(k, &r, &b);
        }
        b = mul(k, &b, &b);
    }
    r
}

pub fn pow_u64(k: &Field, a: &Mat, e: u64) -> Mat {
    pow(k, a, &BigUint::from(e))
}

/// f(a) for a polynomial f.
pub fn poly_eval(k: &Field, f: &[Fe], a: &Mat) -> Mat {
    let n = a.rows;
    let mut r = Mat::zeros(n, n);
    for &c in f.iter().rev() {
        r = mul(k, &r, a);
        for i in 0..n {
            r.set(i, i, k.add(r.get(i, i), c));
        }
    }
    r
}

pub fn scalar_value(a: &Mat) -> Option<Fe> {
    let n = a.rows;
    let c = a.get(0, 0);
    for i in 0..n {
        for j in 0..n {
            if a.get(i, j) != if i == j { c } else { 0 } {
                return None;
            }
        }
    }
    Some(c)
}

/// A multiple of the multiplicative order of a, with its prime factorization.
fn order_multiple(k: &Field, a: &Mat) -> Result<(BigUint, Vec<(u64, u32)>)> {
    let q = k.q() as u64;
    let mut degs: Vec<usize> = Vec::new();
    let mut maxmult = 1;
    for (f, m) in fpoly::factor(k, &charpoly(k, a)) {
        degs.push(fpoly::degree(&f).unwrap());
        maxmult = maxmult.max(m);
    }
    let mut fac: Vec<(u64, u32)> = Vec::new();
    let mut merge = |p: u64, e: u32| match fac.iter_mut().find(|x| x.0 == p) {
        Some(x) => x.1 = x.1.max(e),
        None => fac.push((p, e)),
    };
    degs.sort_unstable();
    degs.dedup();
    // q^d - 1 = prod over e | d of Phi_e(q); take the max exponent over the degrees d
    let mut seen: Vec<(u64, u32)> = Vec::new();
    for d in degs {
        let mut here: Vec<(u64, u32)> = Vec::new();
        for e in (1..=d).filter(|e| d % e == 0) {
            let v = cyclotomic(e).eval_i64(q as i64).to_biguint().unwrap();
            for (p, m) in factor_big(&v)? {
                match here.iter_mut().find(|x| x.0 == p) {
                    Some(x) => x.1 += m,
                    None => here.push((p, m)),
                }
            }
        }
        for (p, m) in here {
            match seen.iter_mut().find(|x| x.0 == p) {
                Some(x) => x.1 = x.1.max(m),
                None => seen.push((p, m)),
            }
        }
    }
    for (p, m) in seen {
        merge(p, m);
    }
    let p = k.p() as u64;
    let mut pe = 0u32;
    while (p as usize).pow(pe) < maxmult {
        pe += 1;
    }
    if pe > 0 {
        merge(p, pe);
    }
    fac.sort_unstable();
    let n = fac
        .iter()
        .fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e));
    Ok((n, fac))
}

/// Multiplicative order of an invertible matrix.
pub fn order(k: &Field, a: &Mat) -> Result<u64> {
    let (mut n, fac) = order_multiple(k, a)?;
    let id = Mat::identity(a.rows);
    debug_assert!(pow(k, a, &n) == id);
    for (p, e) in fac {
        let bp = BigUint::from(p);
        for _ in 0..e {
            let m = &n / &bp;
            if pow(k, a, &m) == id {
                n = m;
            } else {
                break;
            }
        }
    }
    n.to_u64()
        .ok_or_else(|| Error::TooLarge("element order exceeds 64 bits".into()))
}

/// Least m >= 1 with a^m scalar, together with |a|.
pub fn order_mod_scalars(k: &Field, a: &Mat) -> Result<(u64, u64)> {
    let ord = order(k, a)?;
    let mut m = ord;
    for (p, e) in crate::exactnum::primes::factor(ord) {
        for _ in 0..e {
            if scalar_value(&pow_u64(k, a, m / p)).is_some() {
                m /= p;
            } else {
                break;
            }
        }
    }
    Ok((m, ord))
}
