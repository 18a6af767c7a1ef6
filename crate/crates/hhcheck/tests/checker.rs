use std::path::Path;

use hhcheck::config::{CheckConfig, ConfigError, Tag, DEFAULT_FIXTURES};
use hhcheck::fixture::Fixture;
use hhcheck::sweep::{
    enumerate_candidates, fixture_verdicts, run_sweep_with, to_csv, verify_phi_bound,
};
use hhcheck::exceptions::{self, DegCond, DimCond, EllCond};
use hhcheck::theory::{classify_clause, phi_pa, CharInfo, Clause, ElementInfo, GroupInfo};
use hhcore::chartab::Exec;
use hhcore::classgrp::parse_group_id;
use hhcore::exactnum::euler_phi;
use proptest::prelude::*;

fn fixture(id: &str) -> Fixture {
    let cfg = CheckConfig::with_fixtures(&[id]).unwrap();
    Fixture::build(&cfg.fixtures[0], cfg.cap, Exec::Parallel).unwrap()
}

fn info(id: &str) -> GroupInfo {
    GroupInfo::new(&parse_group_id(id).unwrap())
}

fn elem(abs_order: u64, o: u64, p: u64, a: u32) -> ElementInfo {
    ElementInfo {
        class: 0,
        abs_order,
        o,
        p,
        a,
        pseudoreflection: false,
        root_pseudoreflection: false,
        split_torus: false,
        irreducible: false,
    }
}

#[test]
fn config_grammar() {
    let text = "
        # two fixtures
        fixture = GU3_2
        fixture = SL2_8 gens=gens/sl2_8.txt   # relative path
        ell = 0
        min_o = 3
        max_o = 9
        tags = irreducible, pseudoreflection
        out_dir = out
        cap = 5000
        workers = 2
    ";
    let cfg = CheckConfig::parse(text, Path::new("/base")).unwrap();
    let ids: Vec<&str> = cfg.fixtures.iter().map(|f| f.id.as_str()).collect();
    assert_eq!(ids, ["GU3_2", "SL2_8"]);
    assert_eq!(
        cfg.fixtures[1].gens.as_deref(),
        Some(Path::new("/base/gens/sl2_8.txt"))
    );
    assert_eq!(
        (cfg.min_o, cfg.max_o, cfg.cap, cfg.workers),
        (3, 9, 5000, 2)
    );
    assert_eq!(cfg.tags, [Tag::Irreducible, Tag::Pseudoreflection]);
    assert_eq!(cfg.out_dir, Path::new("/base/out"));
}

#[test]
fn config_defaults() {
    let cfg = CheckConfig::parse("# nothing\n\n", Path::new(".")).unwrap();
    assert_eq!(cfg.fixtures.len(), DEFAULT_FIXTURES.len());
    assert_eq!(cfg.ell, 0);
    assert_eq!(cfg.min_o, 2);
    assert!(cfg.tags.is_empty());
}

#[test]
fn config_errors() {
    let err = |t: &str| CheckConfig::parse(t, Path::new(".")).unwrap_err();
    assert!(matches!(
        err("fixture = XY3_2"),
        ConfigError::Fixture { line: 1, .. }
    ));
    assert!(matches!(
        err("min_o = 2\nfixture = GU3"),
        ConfigError::Fixture { line: 2, .. }
    ));
    assert!(matches!(
        err("ell = 3"),
        ConfigError::Syntax { line: 1, .. }
    ));
    assert!(matches!(err("colour = blue"), ConfigError::Syntax { .. }));
    assert!(matches!(err("just words"), ConfigError::Syntax { .. }));
    assert!(matches!(err("min_o = x"), ConfigError::Syntax { .. }));
    assert!(matches!(err("tags = small"), ConfigError::Syntax { .. }));
    assert!(matches!(err("cap = 0"), ConfigError::Syntax { .. }));
    assert!(matches!(
        err("min_o = 9\nmax_o = 3"),
        ConfigError::Syntax { .. }
    ));
    assert!(matches!(
        err("fixture = SL2_8 colour=red"),
        ConfigError::Syntax { .. }
    ));
    let missing = CheckConfig::load(Path::new("/definitely/not/here.conf")).unwrap_err();
    assert!(matches!(missing, ConfigError::Io(_)));
}

#[test]
fn exception_rows_as_stored() {
    let rows = exceptions::rows();
    assert_eq!(rows.len(), 23);
    let groups: Vec<&str> = rows.iter().map(|r| r.group).collect();
    assert_eq!(groups.iter().filter(|g| **g == "PSU4(2)").count(), 7);
    assert_eq!(groups.iter().filter(|g| **g == "PSL3(2)").count(), 4);
    let o7 = rows.iter().find(|r| r.group == "O7(3)").unwrap();
    assert_eq!(o7.ell, EllCond::PEqEll(2));
    assert_eq!(o7.dim, DimCond::Unspecified);
    assert_eq!(o7.deg, DegCond::AtLeast(&[(4, 3), (8, 5)]));
    assert!(o7.modular_only());
    let l34 = rows.iter().find(|r| r.group == "PSL3(4)").unwrap();
    assert_eq!(
        (l34.z0, l34.orders, l34.names),
        (Some(16), &[7u64][..], "7A,7B")
    );
    assert_eq!(rows.iter().filter(|r| r.modular_only()).count(), 6);
}

#[test]
fn exception_matching() {
    let l32 = exceptions::rows()
        .iter()
        .find(|r| r.group == "PSL3(2)" && r.ell == EllCond::Ne(7) && r.orders == [7])
        .unwrap();
    for d in [3, 4, 6] {
        assert!(l32.matches(7, 7, d, d));
    }
    assert!(!l32.matches(7, 7, 7, 7));
    assert!(!l32.matches(7, 7, 3, 2));
    // |g| = 21 with a central factor of order 3, o(g) = 7
    assert!(l32.matches(21, 7, 3, 3));
    let l42 = exceptions::rows()
        .iter()
        .find(|r| r.group == "PSL4(2)")
        .unwrap();
    assert!(l42.matches(5, 5, 8, 4));
    assert!(l42.matches(3, 3, 8, 2));
    assert!(!l42.matches(5, 5, 8, 5));
}

#[test]
fn clause_examples() {
    // Sp6(2), |g| = 9, the 7-dimensional character with deg 7 > phi(9) = 6
    let v = classify_clause(
        &info("Sp6_2"),
        &elem(9, 9, 3, 2),
        &CharInfo {
            id: 1,
            degree: 7,
            weil: false,
        },
        7,
    );
    assert_eq!(v.clause, Clause::I);
    assert!(v.pass && !v.skipped);
    // deg = o(g) always lands in the first clause
    let v = classify_clause(
        &info("SL2_13"),
        &elem(7, 7, 7, 1),
        &CharInfo {
            id: 3,
            degree: 12,
            weil: false,
        },
        7,
    );
    assert_eq!(v.clause, Clause::I);
    assert_eq!(v.bound, 5);
    // a row below the bound in a group outside M matches nothing
    let v = classify_clause(
        &info("SL2_13"),
        &elem(7, 7, 7, 1),
        &CharInfo {
            id: 3,
            degree: 12,
            weil: false,
        },
        3,
    );
    assert_eq!(v.clause, Clause::Unmatched);
    assert!(!v.pass && v.failed());
    // soluble groups are reported, not asserted
    let v = classify_clause(
        &info("GU3_2"),
        &elem(3, 3, 3, 1),
        &CharInfo {
            id: 3,
            degree: 2,
            weil: true,
        },
        2,
    );
    assert_eq!(v.clause, Clause::OutOfHypothesis);
    assert!(v.note.contains("soluble"));
}

#[test]
fn excluded_m_rows_are_compared_with_the_exception_table() {
    let gi = info("SL3_2");
    assert!(gi.in_m);
    let v = classify_clause(
        &gi,
        &elem(7, 7, 7, 1),
        &CharInfo {
            id: 1,
            degree: 3,
            weil: false,
        },
        3,
    );
    assert_eq!(v.clause, Clause::ExcludedM);
    assert!(v.note.contains("PSL3(2)"));
    assert!(!v.pass && v.skipped && !v.failed());
    let v = classify_clause(
        &gi,
        &elem(7, 7, 7, 1),
        &CharInfo {
            id: 1,
            degree: 8,
            weil: false,
        },
        3,
    );
    assert_eq!(v.clause, Clause::Unmatched);
}

#[test]
fn gu4_2_weil_rows_of_degree_five() {
    let fx = fixture("GU4_2");
    let cfg = CheckConfig::with_fixtures(&["GU4_2"]).unwrap();
    let rows = fixture_verdicts(&fx, &cfg).unwrap();
    let iv: Vec<_> = rows.iter().filter(|v| v.clause == Clause::IV).collect();
    assert!(iv.iter().any(|v| v.deg == 5));
    for v in iv {
        assert!(v.weil);
        assert_eq!((v.abs_order, v.o), (9, 9));
        // p^b q - 1 on the degree-5 rows, p^b q on the degree-6 rows
        assert_eq!(v.deg as u64, v.degree);
    }
    let iii: Vec<_> = rows.iter().filter(|v| v.clause == Clause::III).collect();
    assert!(!iii.is_empty());
    assert!(iii.iter().all(|v| v.weil && v.o == 3 && v.deg == 2));
}

#[test]
fn candidates_are_semisimple_prime_power_elements() {
    let fx = fixture("SL2_5");
    let cfg = CheckConfig::with_fixtures(&["SL2_5"]).unwrap();
    let c = enumerate_candidates(&fx, &cfg);
    let os: std::collections::BTreeSet<u64> = c.iter().map(|e| e.o).collect();
    assert_eq!(os, [2, 3].into());
    for e in &c {
        assert_ne!(e.abs_order % 5, 0);
        assert_eq!(e.o, e.p.pow(e.a));
    }
    let fx = fixture("GU3_2");
    let cfg = CheckConfig::with_fixtures(&["GU3_2"]).unwrap();
    let c = enumerate_candidates(&fx, &cfg);
    assert!(c.iter().any(|e| e.abs_order == 9));
    assert!(c.iter().any(|e| e.pseudoreflection));
    let tagged = CheckConfig {
        tags: vec![Tag::Pseudoreflection],
        ..cfg
    };
    assert!(enumerate_candidates(&fx, &tagged)
        .iter()
        .all(|e| e.pseudoreflection));
}

#[test]
fn empty_sweep_passes_vacuously() {
    let s = verify_phi_bound(&[]);
    assert!(s.pass);
    assert_eq!((s.rows, s.failures), (0, 0));
    let cfg = CheckConfig {
        min_o: 1000,
        ..CheckConfig::with_fixtures(&["SL2_7"]).unwrap()
    };
    let r = run_sweep_with(&cfg, Exec::Sequential);
    assert!(r.verdicts.is_empty() && r.errors.is_empty());
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn csv_layout_and_build_errors() {
    let cfg = CheckConfig {
        cap: 50,
        ..CheckConfig::with_fixtures(&["SL2_4", "SL2_7"]).unwrap()
    };
    let r = run_sweep_with(&cfg, Exec::Sequential);
    assert_eq!(r.errors.len(), 2);
    assert_eq!(r.exit_code(), 2);
    let csv = to_csv(&r).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("fixture,class,|g|,o(g),char-id,degree,deg,clause,pass")
    );
    assert!(lines.next().unwrap().starts_with("SL2_4,,,,,,,error: "));
}

#[test]
fn schedules_agree() {
    let cfg = CheckConfig::with_fixtures(&["SL2_8", "GU3_2", "SL3_2"]).unwrap();
    let a = to_csv(&run_sweep_with(&cfg, Exec::Sequential)).unwrap();
    let b = to_csv(&run_sweep_with(&cfg, Exec::Parallel)).unwrap();
    assert_eq!(a, b);
    assert!(a.contains(",excluded-M,skipped"));
}

proptest! {
    #[test]
    fn verdict_invariants(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]), a in 1u32..4, deg in 1usize..400, degree in 2u64..100) {
        let o = p.pow(a);
        let gi = info("SL2_13");
        let v = classify_clause(&gi, &elem(o, o, p, a), &CharInfo { id: 0, degree, weil: false }, deg);
        prop_assert_eq!(v.bound, euler_phi(o) - 1);
        prop_assert_eq!(v.bound, phi_pa(p, a) - 1);
        if v.pass {
            prop_assert!(deg as u64 <= o && deg as u64 >= v.bound);
        }
        prop_assert!(!v.skipped);
    }

    #[test]
    fn exception_matches_need_a_listed_order(row in 0usize..23, g in 2u64..40, dim in 1u64..30, deg in 1u64..30) {
        let r = &exceptions::rows()[row];
        if r.matches(g, g, dim, deg) {
            prop_assert!(r.orders.contains(&g));
            prop_assert!(r.dim_ok(dim));
        }
    }
}
