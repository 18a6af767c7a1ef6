//! The sweep over fixtures: candidates, verdicts, reports.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;

use hhcore::chartab::Exec;
use hhcore::classgrp::is_pseudoreflection;
use hhcore::exactnum::primes::prime_power;
use hhcore::linalg::{self, Mat};
use hhcore::minpoly::{deg_of, mults_from_table};
use hhcore::sselem::charpoly_irreducible;

use crate::config::{CheckConfig, FixtureSpec, Tag};
use crate::fixture::Fixture;
use crate::theory::{classify_clause, CharInfo, Clause, ClauseVerdict, ElementInfo, GroupInfo};

/// One representative per class with |g| a power of a prime p not dividing q and
/// o(g) = p^a > 1.
///
/// A class with prime-power o(g) differs from its p-part by a central factor, which does not
/// change deg(Theta(g)), so only p-elements are listed.
pub fn enumerate_candidates(fx: &Fixture, cfg: &CheckConfig) -> Vec<ElementInfo> {
    let form = &fx.spec.form;
    let k = &*form.field;
    let char_p = k.p() as u64;
    let q = fx.spec.q;
    let mut out = Vec::new();
    for c in 0..fx.conj.len() {
        let abs = fx.conj.orders[c];
        let o = fx.o[c];
        if o < 2 || abs % char_p == 0 || o < cfg.min_o || o > cfg.max_o {
            continue;
        }
        let Some((p, s)) = prime_power(abs) else {
            continue;
        };
        let Some((po, a)) = prime_power(o) else {
            continue;
        };
        debug_assert!(po == p && a <= s);
        let g = fx.rep(c);
        let pseudo = |m: &Mat| is_pseudoreflection(m, form).is_some();
        let e = ElementInfo {
            class: c,
            abs_order: abs,
            o,
            p,
            a,
            pseudoreflection: pseudo(&g),
            root_pseudoreflection: pseudo(&linalg::pow_u64(k, &g, p.pow(a - 1))),
            split_torus: linalg::pow_u64(k, &g, q + 1) == Mat::identity(g.rows),
            irreducible: charpoly_irreducible(&g, form).1,
        };
        let keep = cfg.tags.is_empty()
            || cfg.tags.iter().any(|t| match t {
                Tag::Irreducible => e.irreducible,
                Tag::Pseudoreflection => e.pseudoreflection,
            });
        if keep {
            out.push(e);
        }
    }
    out
}

/// Verdicts for every candidate and every character of degree > 1.
pub fn fixture_verdicts(fx: &Fixture, cfg: &CheckConfig) -> Result<Vec<ClauseVerdict>> {
    let gi = GroupInfo::new(&fx.spec);
    let mut out = Vec::new();
    for e in enumerate_candidates(fx, cfg) {
        for chi in 0..fx.table.len() {
            let degree = fx.table.degrees[chi];
            if degree == 1 {
                continue;
            }
            let deg = deg_of(&mults_from_table(&fx.table, chi, e.class)?);
            let c = CharInfo {
                id: chi,
                degree,
                weil: fx.weil[chi],
            };
            out.push(classify_clause(&gi, &e, &c, deg));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureError {
    pub fixture: String,
    pub error: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiSummary {
    pub rows: usize,
    pub failures: usize,
    /// Rows with deg = phi(o(g)) - 1.
    pub sharp: usize,
    /// Excluded-M rows below the bound, justified by an exception-table row.
    pub exception_rows: usize,
    /// Clause v rows, where the bound is attained by a Weil character.
    pub witnesses: Vec<ClauseVerdict>,
    pub pass: bool,
}

pub fn verify_phi_bound(verdicts: &[ClauseVerdict]) -> PhiSummary {
    let failures = verdicts.iter().filter(|v| v.failed()).count();
    PhiSummary {
        rows: verdicts.len(),
        failures,
        sharp: verdicts.iter().filter(|v| v.deg as u64 == v.bound).count(),
        exception_rows: verdicts
            .iter()
            .filter(|v| v.clause == Clause::ExcludedM && (v.deg as u64) < v.bound)
            .count(),
        witnesses: verdicts
            .iter()
            .filter(|v| v.clause == Clause::V)
            .cloned()
            .collect(),
        pass: failures == 0,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub verdicts: Vec<ClauseVerdict>,
    pub errors: Vec<FixtureError>,
    pub summary: PhiSummary,
}

impl SweepReport {
    /// 0 pass, 1 verdict failure, 2 a fixture could not be processed.
    pub fn exit_code(&self) -> i32 {
        if !self.errors.is_empty() {
            2
        } else if !self.summary.pass {
            1
        } else {
            0
        }
    }
}

fn run_one(fs: &FixtureSpec, cfg: &CheckConfig, exec: Exec) -> Result<Vec<ClauseVerdict>> {
    let fx = Fixture::build(fs, cfg.cap, exec)?;
    fixture_verdicts(&fx, cfg)
}

/// Runs every fixture; results are merged in config order whatever the schedule.
pub fn run_sweep_with(cfg: &CheckConfig, exec: Exec) -> SweepReport {
    let results: Vec<Result<Vec<ClauseVerdict>>> = map_fixtures(cfg, exec);
    let mut verdicts = Vec::new();
    let mut errors = Vec::new();
    for (fs, r) in cfg.fixtures.iter().zip(results) {
        match r {
            Ok(v) => verdicts.extend(v),
            Err(e) => errors.push(FixtureError {
                fixture: fs.id.clone(),
                error: format!("{e:#}"),
            }),
        }
    }
    let summary = verify_phi_bound(&verdicts);
    SweepReport {
        verdicts,
        errors,
        summary,
    }
}

pub fn run_sweep(cfg: &CheckConfig) -> SweepReport {
    run_sweep_with(cfg, Exec::Parallel)
}

fn map_fixtures(cfg: &CheckConfig, exec: Exec) -> Vec<Result<Vec<ClauseVerdict>>> {
    #[cfg(feature = "parallel")]
    if exec == Exec::Parallel {
        use rayon::prelude::*;
        let run = || {
            cfg.fixtures
                .par_iter()
                .map(|fs| run_one(fs, cfg, exec))
                .collect()
        };
        if cfg.workers == 0 {
            return run();
        }
        if let Ok(pool) = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
        {
            return pool.install(run);
        }
    }
    cfg.fixtures
        .iter()
        .map(|fs| run_one(fs, cfg, exec))
        .collect()
}

#[derive(Serialize)]
struct CsvRow<'a> {
    fixture: &'a str,
    class: String,
    #[serde(rename = "|g|")]
    abs_order: String,
    #[serde(rename = "o(g)")]
    o: String,
    #[serde(rename = "char-id")]
    char_id: String,
    degree: String,
    deg: String,
    clause: String,
    pass: &'static str,
}

/// CSV with columns fixture, class, |g|, o(g), char-id, degree, deg, clause, pass. The pass
/// column is `true`, `false` or `skipped`; a fixture that failed to build contributes one row
/// with clause `error`.
pub fn to_csv(r: &SweepReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for v in &r.verdicts {
        w.serialize(CsvRow {
            fixture: &v.fixture,
            class: v.class.to_string(),
            abs_order: v.abs_order.to_string(),
            o: v.o.to_string(),
            char_id: v.char_id.to_string(),
            degree: v.degree.to_string(),
            deg: v.deg.to_string(),
            clause: v.clause.label().to_string(),
            pass: match (v.pass, v.skipped) {
                (true, _) => "true",
                (false, true) => "skipped",
                (false, false) => "false",
            },
        })?;
    }
    for e in &r.errors {
        w.serialize(CsvRow {
            fixture: &e.fixture,
            class: String::new(),
            abs_order: String::new(),
            o: String::new(),
            char_id: String::new(),
            degree: String::new(),
            deg: String::new(),
            clause: format!("error: {}", e.error),
            pass: "false",
        })?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Writes `sweep.csv` and `sweep.json` into `dir`.
pub fn write_reports(r: &SweepReport, dir: &Path) -> Result<(PathBuf, PathBuf)> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let csv_path = dir.join("sweep.csv");
    let json_path = dir.join("sweep.json");
    std::fs::write(&csv_path, to_csv(r)?)?;
    std::fs::write(&json_path, serde_json::to_string_pretty(r)? + "\n")?;
    Ok((csv_path, json_path))
}
