use hhcheck::config::CheckConfig;
use hhcheck::fixture::Fixture;
use hhcheck::lemmas::{sylow_table, verify_lemma, LemmaParams, LEMMAS};
use hhcore::chartab::Exec;
use hhcore::classgrp::Eps;

fn run(name: &str, params: LemmaParams) -> hhcheck::lemmas::LemmaReport {
    let r = verify_lemma(name, &params).unwrap();
    assert!(r.pass, "{name}: {:?} {:?}", r.failures, r.details);
    assert!(r.checked > 0);
    r
}

fn q(q: u64) -> LemmaParams {
    LemmaParams {
        q: Some(q),
        ..LemmaParams::default()
    }
}

#[test]
fn sl21_on_even_q() {
    let r = run("sl21", q(8));
    assert!(r
        .details
        .iter()
        .any(|d| d == "|g| = 9: (dim, deg) [(7, 7), (8, 8), (9, 9)]"));
    run("sl21", q(4));
    assert!(verify_lemma("sl21", &q(9)).is_err());
}

#[test]
fn sl22_and_su2() {
    run("sl22", LemmaParams::default());
    run("sl22", q(11));
    assert!(verify_lemma("sl22", &q(5)).is_err());
    run("su2", LemmaParams::default());
    run("su2", q(4));
}

#[test]
fn weil_lemmas() {
    let r = run("weil2", LemmaParams::default());
    assert!(r
        .details
        .iter()
        .any(|d| d == "deg of zeta^0..zeta^2: [6, 5, 5]"));
    run("weil1", LemmaParams::default());
}

#[test]
fn slsup_and_its_exception() {
    run("slsup", LemmaParams::default());
    let r = run(
        "slsup",
        LemmaParams {
            q: Some(2),
            eps: Some(Eps::Minus),
            ..LemmaParams::default()
        },
    );
    assert!(r
        .details
        .iter()
        .any(|d| d.starts_with("GU3_2: exception, 6 of")));
    let none = LemmaParams {
        q: Some(4),
        eps: Some(Eps::Minus),
        ..LemmaParams::default()
    };
    assert!(verify_lemma("slsup", &none).is_err());
}

#[test]
fn su31_and_sp1() {
    let r = run("su31", LemmaParams::default());
    assert!(r.details[0].starts_with("4 rows"));
    let r = run(
        "sp1",
        LemmaParams {
            group: Some("Sp4_3".into()),
            ..LemmaParams::default()
        },
    );
    assert!(r
        .details
        .iter()
        .any(|d| d.contains("(4, 4), (5, 5), (6, 5)")));
}

#[test]
fn p_cyclic_table() {
    run("p-cyclic", LemmaParams::default());
}

#[test]
fn unknown_names_and_bad_parameters() {
    assert!(verify_lemma("nope", &LemmaParams::default()).is_err());
    assert!(verify_lemma("sl21", &q(3)).is_err());
    assert_eq!(LEMMAS.len(), 9);
}

#[test]
fn sylow_formula_on_small_fixtures() {
    let cfg = CheckConfig::with_fixtures(&["SL2_9", "SL3_3", "GU3_3"]).unwrap();
    for fs in &cfg.fixtures {
        let fx = Fixture::build(fs, cfg.cap, Exec::Parallel).unwrap();
        let t = sylow_table(&fx);
        assert!(!t.is_empty());
        for (p, formula, brute) in t {
            assert_eq!(formula, brute, "{} p = {p}", fs.id);
        }
    }
}
