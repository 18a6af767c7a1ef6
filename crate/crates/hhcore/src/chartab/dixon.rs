//! Exact character tables by simultaneous eigenvectors of the class matrices over a prime
//! field, lifted to cyclotomic integers through the power maps.

use serde::Serialize;

use super::conj::ConjData;
use super::enumerate::GroupEnum;
use crate::error::{Error, Result};
use crate::exactnum::field::FIELD_CAP;
use crate::exactnum::primes::prime_one_mod;
use crate::exactnum::{ff_make, fpoly, CycInt, Fe, Field};
use crate::linalg::{self, Mat};

/// How the class-constant loop is scheduled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Partitioned over classes with rayon; sequential when the `parallel` feature is off.
    #[default]
    Parallel,
}

fn map_classes<T: Send>(exec: Exec, n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    #[cfg(feature = "parallel")]
    if exec == Exec::Parallel {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

/// Class structure constants: `out[k][i * r + j]` counts pairs (x, y) in C_i x C_j with
/// x y = g_k.
///
/// For each k this streams once over the group: with u running over G, x = g_k u and
/// y = u^-1.
pub fn class_constants(g: &GroupEnum, c: &ConjData, exec: Exec) -> Vec<Vec<u32>> {
    let r = c.len();
    map_classes(exec, r, |k| {
        let z = g.elems[c.reps[k]];
        let mut cnt = vec![0u32; r * r];
        for (idx, &u) in g.elems.iter().enumerate() {
            let x = g.index_of(g.mul(z, u)).expect("product lies in the group");
            let i = c.class_of[x] as usize;
            let j = c.inverse[c.class_of[idx] as usize];
            cnt[i * r + j] += 1;
        }
        cnt
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassFunction {
    /// Every value has conductor dividing this.
    pub conductor: u32,
    pub values: Vec<CycInt>,
}

impl ClassFunction {
    /// <self, other> * |G| = sum_C |C| self(C) conj(other(C)), which must be an integer.
    pub fn inner_times_order(&self, other: &ClassFunction, sizes: &[u64]) -> Result<i64> {
        let mut acc = CycInt::zero(self.conductor.max(1));
        for ((a, b), &s) in self.values.iter().zip(&other.values).zip(sizes) {
            acc = acc.add(&a.mul(&b.conj()).scale(s as i64));
        }
        acc.as_integer()
            .ok_or_else(|| Error::Internal("inner product is not rational".into()))
    }

    pub fn add(&self, o: &ClassFunction) -> ClassFunction {
        ClassFunction {
            conductor: num_integer::lcm(self.conductor, o.conductor),
            values: self
                .values
                .iter()
                .zip(&o.values)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    pub group_order: u64,
    /// Exponent of the group; each value lies in Z[zeta_N] for this N.
    pub exponent: u64,
    pub class_sizes: Vec<u64>,
    pub class_orders: Vec<u64>,
    pub powers: Vec<Vec<usize>>,
    pub degrees: Vec<u64>,
    /// `values[chi][class]`, each written over zeta_{|g|} for the class representative g.
    pub values: Vec<Vec<CycInt>>,
    /// The prime used for the modular computation.
    pub prime: u64,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn row(&self, i: usize) -> ClassFunction {
        ClassFunction {
            conductor: self.exponent as u32,
            values: self.values[i].clone(),
        }
    }

    /// chi(g^m) for the class representative g of class c.
    pub fn value_at_power(&self, chi: usize, c: usize, m: i64) -> &CycInt {
        let o = self.class_orders[c] as i64;
        &self.values[chi][self.powers[c][m.rem_euclid(o) as usize]]
    }

    /// Row and column orthogonality, degree sums and divisibility.
    pub fn verify(&self) -> Result<()> {
        let r = self.len();
        let sum_sq: u64 = self.degrees.iter().map(|d| d * d).sum();
        if sum_sq != self.group_order {
            return Err(Error::Internal(format!(
                "sum of squared degrees {sum_sq} != {}",
                self.group_order
            )));
        }
        if let Some(d) = self.degrees.iter().find(|&&d| self.group_order % d != 0) {
            return Err(Error::Internal(format!("degree {d} does not divide |G|")));
        }
        for a in 0..r {
            for b in a..r {
                let v = self
                    .row(a)
                    .inner_times_order(&self.row(b), &self.class_sizes)?;
                let want = if a == b { self.group_order as i64 } else { 0 };
                if v != want {
                    return Err(Error::Internal(format!(
                        "rows {a}, {b}: inner product {v}, expected {want}"
                    )));
                }
            }
        }
        for k in 0..r {
            for l in k..r {
                let mut acc = CycInt::zero(self.exponent as u32);
                for chi in &self.values {
                    acc = acc.add(&chi[k].mul(&chi[l].conj()));
                }
                let want = if k == l {
                    (self.group_order / self.class_sizes[k]) as i64
                } else {
                    0
                };
                if acc.as_integer() != Some(want) {
                    return Err(Error::Internal(format!(
                        "columns {k}, {l}: expected {want}, got {acc}"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct DixonOptions {
    pub max_classes: usize,
    pub exec: Exec,
}

impl Default for DixonOptions {
    fn default() -> Self {
        DixonOptions {
            max_classes: 400,
            exec: Exec::default(),
        }
    }
}

/// Rows of a reduced echelon basis.
fn echelon(k: &Field, vecs: &[Vec<Fe>]) -> (Vec<Vec<Fe>>, Vec<usize>) {
    let (m, piv) = linalg::rref(k, &Mat::from_rows(vecs));
    ((0..piv.len()).map(|i| m.row(i).to_vec()).collect(), piv)
}

/// Split an invariant subspace (echelon basis) into eigenspaces of `m`.
fn split(k: &Field, m: &Mat, basis: Vec<Vec<Fe>>, piv: Vec<usize>) -> Result<Vec<Vec<Vec<Fe>>>> {
    let d = basis.len();
    let mut a = Mat::zeros(d, d);
    for (c, w) in basis.iter().enumerate() {
        let y = linalg::mat_vec(k, m, w);
        for (row, &p) in piv.iter().enumerate() {
            a.set(row, c, y[p]);
        }
    }
    let roots = fpoly::roots(k, &linalg::charpoly(k, &a));
    if roots.len() == 1 {
        return Ok(vec![basis]);
    }
    let mut out = Vec::new();
    let mut total = 0;
    for lam in roots {
        let ker = linalg::nullspace(k, &linalg::minus_scalar(k, &a, lam));
        total += ker.len();
        let vecs: Vec<Vec<Fe>> = ker
            .iter()
            .map(|coef| {
                let mut v = vec![0; m.rows];
                for (w, &x) in basis.iter().zip(coef) {
                    if x != 0 {
                        for (t, &y) in v.iter_mut().zip(w) {
                            *t = k.add(*t, k.mul(x, y));
                        }
                    }
                }
                v
            })
            .collect();
        out.push(echelon(k, &vecs).0);
    }
    if total != d {
        return Err(Error::Internal(
            "class matrix is not diagonalizable over the prime field".into(),
        ));
    }
    Ok(out)
}

/// The complex character table of an enumerated group.
///
/// Rows are sorted by degree, then by the canonical coordinates of their values.
pub fn dixon_table(g: &GroupEnum, c: &ConjData, opts: &DixonOptions) -> Result<CharacterTable> {
    let r = c.len();
    if r > opts.max_classes {
        return Err(Error::TooLarge(format!(
            "{r} classes exceed the bound {}",
            opts.max_classes
        )));
    }
    let order = g.size() as u64;
    let n_exp = c.exponent;
    let lower = 2 * ((order as f64).sqrt().ceil() as u64);
    let prime = prime_one_mod(n_exp, lower);
    if prime >= FIELD_CAP {
        return Err(Error::NotFound(format!(
            "no prime = 1 mod {n_exp} above {lower} within the field cap"
        )));
    }
    let fr = ff_make(prime as u32, 1)?;
    let k = &*fr;
    let consts = class_constants(g, c, opts.exec);

    let mut spaces: Vec<Vec<Vec<Fe>>> = vec![(0..r)
        .map(|i| {
            let mut e = vec![0; r];
            e[i] = 1;
            e
        })
        .collect()];
    for j in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut mj = Mat::zeros(r, r);
        for (kk, cnt) in consts.iter().enumerate() {
            for i in 0..r {
                mj.set(i, kk, (cnt[j * r + i] as u64 % prime) as Fe);
            }
        }
        let mut next = Vec::new();
        for s in spaces {
            if s.len() == 1 {
                next.push(s);
                continue;
            }
            let (b, piv) = echelon(k, &s);
            next.extend(split(k, &mj, b, piv)?);
        }
        spaces = next;
    }
    if spaces.len() != r || spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Internal("eigenspaces did not split to lines".into()));
    }

    let modp = |x: u64| (x % prime) as Fe;
    let z = k.exp((prime - 1) / n_exp);
    let mut rows: Vec<(u64, Vec<CycInt>)> = Vec::with_capacity(r);
    for s in spaces {
        let v0 = &s[0];
        let inv0 = k
            .inv(v0[0])
            .ok_or_else(|| Error::Internal("eigenvector vanishes at the identity".into()))?;
        let v: Vec<Fe> = v0.iter().map(|&x| k.mul(x, inv0)).collect();
        let mut ssum = 0;
        for kk in 0..r {
            let t = k.mul(v[kk], v[c.inverse[kk]]);
            ssum = k.add(ssum, k.div(t, modp(c.sizes[kk])).unwrap());
        }
        let dsq = k.div(modp(order), ssum).unwrap();
        let deg = (1..)
            .take_while(|d| d * d <= order)
            .find(|d| order % d == 0 && modp(d * d) == dsq)
            .ok_or_else(|| Error::Internal("no degree matches".into()))?;
        let chi_mod: Vec<Fe> = (0..r)
            .map(|kk| k.div(k.mul(v[kk], modp(deg)), modp(c.sizes[kk])).unwrap())
            .collect();
        let mut vals = Vec::with_capacity(r);
        for kk in 0..r {
            let o = c.orders[kk];
            let zo = k.pow(z, n_exp / o);
            let oinv = k.inv(modp(o)).unwrap();
            let mut mults = Vec::with_capacity(o as usize);
            for jj in 0..o {
                let mut acc = 0;
                for l in 0..o {
                    let e = (o - (jj * l) % o) % o;
                    acc = k.add(acc, k.mul(chi_mod[c.powers[kk][l as usize]], k.pow(zo, e)));
                }
                let m = k.mul(acc, oinv) as u64;
                if m > deg {
                    return Err(Error::Internal(format!(
                        "eigenvalue multiplicity {m} exceeds degree {deg}"
                    )));
                }
                mults.push(m as i64);
            }
            if mults.iter().sum::<i64>() != deg as i64 {
                return Err(Error::Internal(
                    "multiplicities do not sum to the degree".into(),
                ));
            }
            vals.push(CycInt::from_coeffs(o as u32, mults));
        }
        rows.push((deg, vals));
    }
    let key =
        |row: &(u64, Vec<CycInt>)| (row.0, row.1.iter().map(|x| x.reduced()).collect::<Vec<_>>());
    rows.sort_by_cached_key(key);
    Ok(CharacterTable {
        group_order: order,
        exponent: n_exp,
        class_sizes: c.sizes.clone(),
        class_orders: c.orders.clone(),
        powers: c.powers.clone(),
        degrees: rows.iter().map(|r| r.0).collect(),
        values: rows.into_iter().map(|r| r.1).collect(),
        prime,
    })
}

/// Transport a class function of G to a subgroup H whose elements are mapped into G's
/// element store by `embed`.
pub fn restrict_to_subgroup(
    chi: &ClassFunction,
    g: &GroupEnum,
    gc: &ConjData,
    h: &GroupEnum,
    hc: &ConjData,
    embed: impl Fn(&Mat) -> Mat,
) -> Result<ClassFunction> {
    let values = hc
        .reps
        .iter()
        .map(|&i| {
            let m = embed(&h.elem(i));
            let j = g
                .index_of_mat(&m)
                .ok_or_else(|| Error::NotFound("subgroup element not in G".into()))?;
            Ok(chi.values[gc.class_of[j] as usize].clone())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassFunction {
        conductor: chi.conductor,
        values,
    })
}
