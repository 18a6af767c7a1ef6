//! Sweep configuration in a plain key-value format.
//!
//! One `key = value` per line, `#` starts a comment, blank lines are ignored.
//!
//! ```text
//! fixture = GU3_2                 # repeatable; family n _ q
//! fixture = SL2_8 gens=sl2_8.txt  # optional generator file, relative to the config
//! ell = 0                         # only characteristic zero is supported
//! min_o = 2
//! max_o = 64
//! tags = irreducible,pseudoreflection   # keep only elements with one of these tags
//! out_dir = reports
//! cap = 2000000                   # enumeration cap per fixture
//! workers = 4                     # 0 = rayon default
//! ```
//!
//! With no `fixture` line the default desk list is used.

use std::path::{Path, PathBuf};

use hhcore::chartab::DEFAULT_CAP;
use hhcore::classgrp::{parse_group_id, GroupSpec};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unknown fixture {id:?}: {msg}")]
    Fixture {
        line: usize,
        id: String,
        msg: String,
    },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

/// The desk list used when a config names no fixture.
pub const DEFAULT_FIXTURES: [&str; 18] = [
    "SL2_4", "SL2_5", "SL2_7", "SL2_8", "SL2_9", "SL2_11", "SL2_13", "GU2_2", "GU2_3", "GU2_4",
    "GU3_2", "GU3_3", "GU4_2", "SL3_2", "SL3_3", "Sp4_3", "Sp6_2", "GO-4_3",
];

#[derive(Clone, Debug)]
pub struct FixtureSpec {
    pub id: String,
    pub spec: GroupSpec,
    pub gens: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tag {
    Irreducible,
    Pseudoreflection,
}

#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub fixtures: Vec<FixtureSpec>,
    pub ell: u64,
    pub min_o: u64,
    pub max_o: u64,
    pub tags: Vec<Tag>,
    pub out_dir: PathBuf,
    pub cap: usize,
    pub workers: usize,
}

impl CheckConfig {
    pub fn with_fixtures(ids: &[&str]) -> Result<CheckConfig, ConfigError> {
        let fixtures = ids
            .iter()
            .map(|id| fixture(id, None, 0))
            .collect::<Result<_, _>>()?;
        Ok(CheckConfig {
            fixtures,
            ..CheckConfig::default()
        })
    }

    pub fn parse(text: &str, base: &Path) -> Result<CheckConfig, ConfigError> {
        let mut cfg = CheckConfig {
            fixtures: Vec::new(),
            ..CheckConfig::default()
        };
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap().trim();
            if body.is_empty() {
                continue;
            }
            let syntax = |msg: String| ConfigError::Syntax { line, msg };
            let (key, value) = body
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| syntax(format!("expected key = value, got {body:?}")))?;
            let num = |v: &str| {
                v.parse::<u64>()
                    .map_err(|_| syntax(format!("{key}: not a number: {v:?}")))
            };
            match key {
                "fixture" => {
                    let mut parts = value.split_whitespace();
                    let id = parts.next().ok_or_else(|| syntax("empty fixture".into()))?;
                    let mut gens = None;
                    for p in parts {
                        match p.strip_prefix("gens=") {
                            Some(path) => gens = Some(base.join(path)),
                            None => return Err(syntax(format!("unknown fixture option {p:?}"))),
                        }
                    }
                    cfg.fixtures.push(fixture(id, gens, line)?);
                }
                "ell" => {
                    cfg.ell = num(value)?;
                    if cfg.ell != 0 {
                        return Err(syntax("only ell = 0 is supported".into()));
                    }
                }
                "min_o" => cfg.min_o = num(value)?,
                "max_o" => cfg.max_o = num(value)?,
                "tags" => {
                    cfg.tags = value
                        .split(',')
                        .map(|t| match t.trim() {
                            "irreducible" => Ok(Tag::Irreducible),
                            "pseudoreflection" => Ok(Tag::Pseudoreflection),
                            other => Err(syntax(format!("unknown tag {other:?}"))),
                        })
                        .collect::<Result<_, _>>()?;
                }
                "out_dir" => cfg.out_dir = base.join(value),
                "cap" => {
                    cfg.cap = num(value)? as usize;
                    if cfg.cap == 0 {
                        return Err(syntax("cap must be positive".into()));
                    }
                }
                "workers" => cfg.workers = num(value)? as usize,
                _ => return Err(syntax(format!("unknown key {key:?}"))),
            }
        }
        if cfg.fixtures.is_empty() {
            cfg.fixtures = CheckConfig::default().fixtures;
        }
        if cfg.min_o > cfg.max_o {
            return Err(ConfigError::Syntax {
                line: 0,
                msg: format!("min_o = {} exceeds max_o = {}", cfg.min_o, cfg.max_o),
            });
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<CheckConfig, ConfigError> {
        let text = std::fs::read_to_string(path)?;
        CheckConfig::parse(&text, path.parent().unwrap_or(Path::new(".")))
    }
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            fixtures: DEFAULT_FIXTURES
                .iter()
                .map(|id| fixture(id, None, 0).expect("default fixture"))
                .collect(),
            ell: 0,
            min_o: 2,
            max_o: u64::MAX,
            tags: Vec::new(),
            out_dir: PathBuf::from("reports"),
            cap: DEFAULT_CAP,
            workers: 0,
        }
    }
}

fn fixture(id: &str, gens: Option<PathBuf>, line: usize) -> Result<FixtureSpec, ConfigError> {
    let spec = parse_group_id(id).map_err(|e| ConfigError::Fixture {
        line,
        id: id.to_string(),
        msg: e.to_string(),
    })?;
    Ok(FixtureSpec {
        id: spec.id(),
        spec,
        gens,
    })
}
