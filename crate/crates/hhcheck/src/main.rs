use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use hhcheck::config::CheckConfig;
use hhcheck::lemmas::{verify_lemma, LemmaParams};
use hhcheck::sweep::{run_sweep, write_reports};
use hhcore::chartab::{
    conjugacy, dixon_table, enumerate_group, functions_to_json, table_to_json, DixonOptions,
};
use hhcore::classgrp::{parse_group_id, Eps, Family, GroupSpec};
use hhcore::weilchar::{weil_class_function, WeilContext};

#[derive(Parser)]
#[command(
    name = "hhcheck",
    version,
    about = "Minimal polynomial degree checker for classical groups"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify every (fixture, element, character) triple and write CSV/JSON reports.
    Sweep {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Re-derive one lemma's conclusions on a concrete group.
    VerifyLemma {
        name: String,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        b: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
        /// + or -
        #[arg(long, allow_hyphen_values = true)]
        eps: Option<String>,
        /// fixture id, for lemmas that take a group
        #[arg(long)]
        group: Option<String>,
    },
    /// Write the character table of a fixture as JSON.
    Chartab {
        #[arg(long)]
        fixture: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the Weil character zeta^i of GU_n(q) on its classes as JSON.
    Weil {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        i: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<u8> {
    match cmd {
        Cmd::Sweep { config, out_dir } => {
            let mut cfg = match config {
                Some(p) => CheckConfig::load(&p)?,
                None => CheckConfig::default(),
            };
            if let Some(d) = out_dir {
                cfg.out_dir = d;
            }
            let report = run_sweep(&cfg);
            let (csv, json) = write_reports(&report, &cfg.out_dir)?;
            let s = &report.summary;
            println!(
                "{} rows, {} failures, {} sharp, {} clause-v witnesses, {} excluded-M rows below the bound",
                s.rows,
                s.failures,
                s.sharp,
                s.witnesses.len(),
                s.exception_rows
            );
            for e in &report.errors {
                println!("{}: {}", e.fixture, e.error);
            }
            println!("wrote {} and {}", csv.display(), json.display());
            Ok(report.exit_code() as u8)
        }
        Cmd::VerifyLemma {
            name,
            q,
            p,
            b,
            n,
            eps,
            group,
        } => {
            let eps = match eps.as_deref() {
                None => None,
                Some("+") => Some(Eps::Plus),
                Some("-") => Some(Eps::Minus),
                Some(other) => anyhow::bail!("eps must be + or -, got {other:?}"),
            };
            let params = LemmaParams {
                q,
                p,
                b,
                n,
                eps,
                group,
            };
            let r = verify_lemma(&name, &params)?;
            println!(
                "{} [{}]: {} ({} rows checked)",
                r.name,
                r.instance,
                if r.pass { "pass" } else { "FAIL" },
                r.checked
            );
            for d in &r.details {
                println!("  {d}");
            }
            for f in &r.failures {
                println!("  failed: {f}");
            }
            Ok(if r.pass { 0 } else { 1 })
        }
        Cmd::Chartab { fixture, out } => {
            let spec = parse_group_id(&fixture)?;
            let g = enumerate_group(&spec, hhcore::chartab::DEFAULT_CAP)?;
            let c = conjugacy(&g)?;
            let t = dixon_table(&g, &c, &DixonOptions::default())?;
            std::fs::write(&out, table_to_json(&t))?;
            println!(
                "{}: {} classes, wrote {}",
                spec.id(),
                t.len(),
                out.display()
            );
            Ok(0)
        }
        Cmd::Weil { n, q, i, out } => {
            if i > q {
                anyhow::bail!("i must lie in 0..={q}");
            }
            let spec = GroupSpec::new(Family::GU, n, q)?;
            let g = enumerate_group(&spec, hhcore::chartab::DEFAULT_CAP)?;
            let c = conjugacy(&g)?;
            let t = dixon_table(&g, &c, &DixonOptions::default())?;
            let f = weil_class_function(&WeilContext::new(n, q)?, i, &g, &c)?;
            std::fs::write(&out, functions_to_json(&t, &[f]))?;
            println!(
                "zeta^{i} of GU{n}({q}) on {} classes, wrote {}",
                c.len(),
                out.display()
            );
            Ok(0)
        }
    }
}
