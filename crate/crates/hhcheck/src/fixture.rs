//! A fixture group with its classes, character table and Weil rows.

use anyhow::{bail, Context, Result};

use hhcore::chartab::{
    conjugacy, dixon_table, enumerate, enumerate_group, CharacterTable, ClassFunction, ConjData,
    DixonOptions, Exec, GroupEnum,
};
use hhcore::classgrp::{in_group, Family, GroupSpec};
use hhcore::exactnum::CycInt;
use hhcore::linalg::{self, Mat};
use hhcore::sselem::ext::Ext;
use hhcore::weilchar::{weil_value, WeilContext};

use crate::config::FixtureSpec;

pub struct Fixture {
    pub id: String,
    pub spec: GroupSpec,
    pub group: GroupEnum,
    pub conj: ConjData,
    pub table: CharacterTable,
    /// o(g) for each class.
    pub o: Vec<u64>,
    /// Row is a constituent of zeta^i times a linear character.
    pub weil: Vec<bool>,
}

impl Fixture {
    pub fn build(fs: &FixtureSpec, cap: usize, exec: Exec) -> Result<Fixture> {
        let spec = &fs.spec;
        let group = match &fs.gens {
            None => enumerate_group(spec, cap)?,
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let gens = linalg::parse_matrix_file(&text)?;
                if let Some(bad) = gens.iter().position(|m| !in_group(m, spec)) {
                    bail!("generator {bad} of {} is not in {}", path.display(), fs.id);
                }
                enumerate(spec.field(), &gens, cap)?
            }
        };
        let conj = conjugacy(&group)?;
        let table = dixon_table(
            &group,
            &conj,
            &DixonOptions {
                exec,
                ..DixonOptions::default()
            },
        )?;
        let o = orders_mod_centre(&conj);
        let weil = weil_rows(spec, &group, &conj, &table)?;
        Ok(Fixture {
            id: fs.id.clone(),
            spec: spec.clone(),
            group,
            conj,
            table,
            o,
            weil,
        })
    }

    pub fn rep(&self, c: usize) -> Mat {
        self.group.elem(self.conj.reps[c])
    }
}

/// Least m with g^m central, where the centre is the union of classes of size 1.
pub fn orders_mod_centre(c: &ConjData) -> Vec<u64> {
    (0..c.len())
        .map(|k| {
            let n = c.orders[k];
            (1..=n)
                .filter(|m| n % m == 0)
                .find(|&m| c.sizes[c.power(k, m as i64)] == 1)
                .unwrap()
        })
        .collect()
}

/// Weil class functions zeta^i on every class, or None on classes outside their domain.
fn weil_functions(
    spec: &GroupSpec,
    g: &GroupEnum,
    c: &ConjData,
) -> Result<Vec<Vec<Option<CycInt>>>> {
    let q = spec.q;
    let n = spec.n;
    let ctx = WeilContext::new(n, q)?;
    match spec.family {
        Family::GU | Family::SU => (0..=q)
            .map(|i| {
                c.reps
                    .iter()
                    .map(|&r| weil_value(&ctx, i, &g.elem(r)).map(Some))
                    .collect::<hhcore::Result<Vec<_>>>()
            })
            .collect::<hhcore::Result<_>>()
            .map_err(Into::into),
        Family::SL | Family::GL if n == 2 => {
            // SL_2(q) is conjugate to SU_2(q) inside GL_2(q^2), and the formula only sees
            // eigenspace dimensions, so it can be evaluated after extending scalars.
            let k = spec.field();
            let ext = Ext::new(k, 2)?;
            let reps: Vec<Option<Mat>> = c
                .reps
                .iter()
                .map(|&r| {
                    let m = g.elem(r);
                    (linalg::det(k, &m) == 1).then(|| m.map(|x| ext.up(x)))
                })
                .collect();
            (0..=q)
                .map(|i| {
                    reps.iter()
                        .map(|m| m.as_ref().map(|m| weil_value(&ctx, i, m)).transpose())
                        .collect::<hhcore::Result<Vec<_>>>()
                })
                .collect::<hhcore::Result<_>>()
                .map_err(Into::into)
        }
        _ => Ok(Vec::new()),
    }
}

fn weil_rows(
    spec: &GroupSpec,
    g: &GroupEnum,
    c: &ConjData,
    t: &CharacterTable,
) -> Result<Vec<bool>> {
    let mut weil = vec![false; t.len()];
    let fns = weil_functions(spec, g, c)?;
    if fns.is_empty() {
        return Ok(weil);
    }
    let linear: Vec<usize> = (0..t.len()).filter(|&r| t.degrees[r] == 1).collect();
    let domain: Vec<usize> = (0..c.len()).filter(|&k| fns[0][k].is_some()).collect();
    let sizes: Vec<u64> = domain.iter().map(|&k| c.sizes[k]).collect();
    let restrict = |vals: &[CycInt]| ClassFunction {
        conductor: t.exponent as u32,
        values: domain.iter().map(|&k| vals[k].clone()).collect(),
    };
    for f in &fns {
        let f: Vec<CycInt> = f
            .iter()
            .map(|v| v.clone().unwrap_or_else(|| CycInt::from_int(0)))
            .collect();
        for &lam in &linear {
            let twisted: Vec<CycInt> = f
                .iter()
                .zip(&t.values[lam])
                .map(|(a, b)| a.mul(b))
                .collect();
            let tw = restrict(&twisted);
            for r in 0..t.len() {
                if weil[r] || t.degrees[r] == 1 {
                    continue;
                }
                // the GU characters zeta^i are irreducible; elsewhere they may split
                weil[r] = if spec.family == Family::GU {
                    t.values[r] == twisted
                } else {
                    restrict(&t.values[r]).inner_times_order(&tw, &sizes)? != 0
                };
            }
        }
    }
    Ok(weil)
}
