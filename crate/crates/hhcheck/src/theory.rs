//! Group-level hypotheses and the clause structure of the semisimple-element theorem.

use serde::Serialize;
use std::fmt;

use hhcore::classgrp::{Eps, Family, GroupSpec};
use hhcore::exactnum::euler_phi;
use hhcore::exactnum::primes::is_prime;
use hhcore::sselem::{pcyclic_m, sylow_cyclic};

use crate::exceptions::{self, ExceptionRow};

/// Lie type of the simple socle of G/Z(G).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Lie {
    L,
    U,
    S,
    /// Odd-dimensional orthogonal.
    O,
    OPlus,
    OMinus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Socle {
    pub kind: Lie,
    pub n: usize,
    pub q: u64,
}

impl fmt::Display for Socle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            Lie::L => "PSL",
            Lie::U => "PSU",
            Lie::S => "PSp",
            Lie::O => "O",
            Lie::OPlus => "O+",
            Lie::OMinus => "O-",
        };
        write!(f, "{name}{}({})", self.n, self.q)
    }
}

/// soc(G/Z(G)) named in the defining characteristic, using PSU_2 = PSL_2,
/// PSp_2 = PSL_2 and POmega-_4(q) = PSL_2(q^2). None when the socle is not simple.
pub fn socle(spec: &GroupSpec) -> Option<Socle> {
    let (n, q) = (spec.n, spec.q);
    let s = |kind, n, q| Some(Socle { kind, n, q });
    match spec.family {
        Family::GL | Family::SL => s(Lie::L, n, q),
        Family::GU | Family::SU if n == 2 => s(Lie::L, 2, q),
        Family::GU | Family::SU => s(Lie::U, n, q),
        Family::Sp | Family::CSp if n == 2 => s(Lie::L, 2, q),
        Family::Sp | Family::CSp => s(Lie::S, n, q),
        Family::GO(e) | Family::SO(e) | Family::Omega(e) => {
            if n % 2 == 1 {
                s(Lie::O, n, q)
            } else if n == 4 && e == Eps::Minus {
                s(Lie::L, 2, q * q)
            } else if n >= 6 {
                s(
                    if e == Eps::Plus {
                        Lie::OPlus
                    } else {
                        Lie::OMinus
                    },
                    n,
                    q,
                )
            } else {
                None
            }
        }
    }
}

/// Socles with an exceptional Schur multiplier.
pub const EXCEPTIONAL_M: [(Lie, usize, u64); 11] = [
    (Lie::L, 2, 4),
    (Lie::L, 3, 2),
    (Lie::L, 4, 2),
    (Lie::U, 4, 2),
    (Lie::S, 6, 2),
    (Lie::L, 2, 9),
    (Lie::L, 3, 4),
    (Lie::U, 4, 3),
    (Lie::U, 6, 2),
    (Lie::O, 7, 3),
    (Lie::OPlus, 8, 2),
];

pub fn in_m(s: &Socle) -> bool {
    // Sp_4(2)' = A_6 = PSL_2(9)
    (s.kind, s.n, s.q) == (Lie::S, 4, 2) || EXCEPTIONAL_M.contains(&(s.kind, s.n, s.q))
}

/// Whether G lies in the class of insoluble classical groups the theorem covers; the
/// error carries the reason.
pub fn hypothesis(spec: &GroupSpec) -> Result<(), String> {
    let (n, q) = (spec.n, spec.q);
    match spec.family {
        Family::GL | Family::SL | Family::GU | Family::SU => {
            let unitary = matches!(spec.family, Family::GU | Family::SU);
            if n < 2 {
                Err("n < 2".into())
            } else if n == 2 && q <= 3 || unitary && n == 3 && q == 2 {
                Err(format!("{} is soluble", spec.id()))
            } else {
                Ok(())
            }
        }
        Family::Sp | Family::CSp if n >= 4 => Ok(()),
        Family::Sp | Family::CSp => Err("symplectic rank below 2".into()),
        Family::GO(_) | Family::SO(_) | Family::Omega(_) => {
            if n % 2 == 1 && n >= 7 && q % 2 == 1 || n % 2 == 0 && n >= 8 {
                Ok(())
            } else {
                Err(format!("orthogonal dimension {n} below the covered range"))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct GroupInfo {
    pub id: String,
    pub spec: GroupSpec,
    pub socle: Option<Socle>,
    pub in_m: bool,
    pub hypothesis: Result<(), String>,
}

impl GroupInfo {
    pub fn new(spec: &GroupSpec) -> GroupInfo {
        let soc = socle(spec);
        GroupInfo {
            id: spec.id(),
            spec: spec.clone(),
            in_m: soc.as_ref().is_some_and(in_m),
            socle: soc,
            hypothesis: hypothesis(spec),
        }
    }

    fn socle_is(&self, kind: Lie) -> bool {
        self.socle.is_some_and(|s| s.kind == kind)
    }
}

/// Semisimple element data needed by the clauses.
#[derive(Clone, Debug, Serialize)]
pub struct ElementInfo {
    pub class: usize,
    pub abs_order: u64,
    /// Order modulo Z(G), p^a.
    pub o: u64,
    pub p: u64,
    pub a: u32,
    pub pseudoreflection: bool,
    /// g^(p^(a-1)) is a pseudoreflection.
    pub root_pseudoreflection: bool,
    /// g^(q+1) = 1, i.e. g lies in a torus GU_1(q)^n on the unitary side.
    pub split_torus: bool,
    pub irreducible: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CharInfo {
    pub id: usize,
    pub degree: u64,
    pub weil: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Clause {
    #[serde(rename = "main2-i")]
    I,
    #[serde(rename = "main2-ii")]
    II,
    #[serde(rename = "main2-iii")]
    III,
    #[serde(rename = "main2-iv")]
    IV,
    #[serde(rename = "main2-v")]
    V,
    #[serde(rename = "excluded-M")]
    ExcludedM,
    #[serde(rename = "out-of-hypothesis")]
    OutOfHypothesis,
    #[serde(rename = "unmatched")]
    Unmatched,
}

impl Clause {
    pub fn label(self) -> &'static str {
        match self {
            Clause::I => "main2-i",
            Clause::II => "main2-ii",
            Clause::III => "main2-iii",
            Clause::IV => "main2-iv",
            Clause::V => "main2-v",
            Clause::ExcludedM => "excluded-M",
            Clause::OutOfHypothesis => "out-of-hypothesis",
            Clause::Unmatched => "unmatched",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClauseVerdict {
    pub fixture: String,
    pub class: usize,
    pub abs_order: u64,
    pub o: u64,
    pub char_id: usize,
    pub degree: u64,
    pub deg: usize,
    pub clause: Clause,
    /// phi(o(g)) - 1
    pub bound: u64,
    /// deg <= o(g) and deg >= bound, under a matched clause.
    pub pass: bool,
    /// Excluded-M rows are only compared with the exception table, so a row below the bound there is
    /// not a failure.
    pub skipped: bool,
    pub weil: bool,
    pub note: String,
}

impl ClauseVerdict {
    pub fn failed(&self) -> bool {
        !self.pass && !self.skipped
    }
}

/// p^(a-1)(p-1)
pub fn phi_pa(p: u64, a: u32) -> u64 {
    p.pow(a - 1) * (p - 1)
}

fn clause_i(e: &ElementInfo, deg: u64) -> bool {
    e.o >= deg && deg > phi_pa(e.p, e.a)
}

fn clause_v(gi: &GroupInfo, e: &ElementInfo, c: &CharInfo, deg: u64) -> bool {
    let Some(s) = gi.socle else { return false };
    let q = s.q;
    let n = s.n;
    s.kind == Lie::L
        && is_prime(n as u64)
        && (q.pow(n as u32) - 1) / (q - 1) == e.o
        && c.weil
        && (c.degree + 1 == e.o || c.degree + 2 == e.o)
        && c.degree == deg
        // the n > 2 branch needs l = p; only characteristic zero is checked
        && n == 2
        && q % 2 == 0
}

fn clause_iv(gi: &GroupInfo, e: &ElementInfo, c: &CharInfo, deg: u64) -> bool {
    let q = gi.spec.q;
    let n = gi.spec.n as u64;
    gi.socle_is(Lie::U)
        && e.a >= 2
        && n % e.p.pow(e.a - 1) == 1
        && q + 1 == e.p
        && is_prime(e.p)
        && e.root_pseudoreflection
        && c.weil
        && (deg == phi_pa(e.p, e.a) || (n, e.o, q) == (4, 9, 2) && deg == 5)
}

fn clause_iii(gi: &GroupInfo, e: &ElementInfo, c: &CharInfo, deg: u64) -> bool {
    let q = gi.spec.q;
    gi.socle_is(Lie::U)
        && e.o == e.p
        && e.p == q + 1
        && is_prime(e.p)
        && e.split_torus
        && c.weil
        && deg == e.p - 1
        && (gi.spec.n <= 3 || e.pseudoreflection)
}

fn clause_ii(gi: &GroupInfo, e: &ElementInfo, deg: u64) -> Option<String> {
    if e.p <= 2 || deg != phi_pa(e.p, e.a) {
        return None;
    }
    if !sylow_cyclic(&gi.spec, e.p).ok()? {
        return None;
    }
    let m = pcyclic_m(&gi.spec, e.p, e.a).ok()?;
    m.forced_holds
        .then(|| format!("m = {} (clause {})", m.m, m.clause))
}

/// First matching clause in the order i, v, iv, iii, ii, for characteristic zero.
pub fn classify_clause(gi: &GroupInfo, e: &ElementInfo, c: &CharInfo, deg: usize) -> ClauseVerdict {
    let d = deg as u64;
    let bound = euler_phi(e.o) - 1;
    let mut note = String::new();
    let clause = if let Err(why) = &gi.hypothesis {
        note = why.clone();
        Clause::OutOfHypothesis
    } else if clause_i(e, d) {
        Clause::I
    } else if clause_v(gi, e, c, d) {
        Clause::V
    } else if clause_iv(gi, e, c, d) {
        Clause::IV
    } else if clause_iii(gi, e, c, d) {
        Clause::III
    } else if let Some(m) = clause_ii(gi, e, d) {
        note = m;
        Clause::II
    } else if gi.in_m {
        match exception_match(gi, e, c, d) {
            Some(row) => {
                note = format!("exception table: {} {}", row.group, row.names);
                Clause::ExcludedM
            }
            None => {
                note = "no clause and no exception-table row".into();
                Clause::Unmatched
            }
        }
    } else {
        Clause::Unmatched
    };
    let pass = clause != Clause::Unmatched && d <= e.o && d >= bound;
    let skipped = clause == Clause::ExcludedM;
    ClauseVerdict {
        fixture: gi.id.clone(),
        class: e.class,
        abs_order: e.abs_order,
        o: e.o,
        char_id: c.id,
        degree: c.degree,
        deg,
        clause,
        bound,
        pass,
        skipped,
        weil: c.weil,
        note,
    }
}

fn exception_match(
    gi: &GroupInfo,
    e: &ElementInfo,
    c: &CharInfo,
    deg: u64,
) -> Option<&'static ExceptionRow> {
    let name = gi.socle?.to_string();
    exceptions::rows().iter().find(|r| {
        r.group == name && r.applies_at_zero() && r.matches(e.abs_order, e.o, c.degree, deg)
    })
}
