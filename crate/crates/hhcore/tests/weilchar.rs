use hhcore::chartab::*;
use hhcore::classgrp::{is_pseudoreflection, parse_group_id};
use hhcore::exactnum::CycInt;
use hhcore::linalg::{self, Mat};
use hhcore::minpoly::{deg_of, mults_from_character};
use hhcore::sselem::{build_canonical_irreducible, Side};
use hhcore::weilchar::*;

fn powers_values(ctx: &WeilContext, i: u64, g: &Mat, n: u64) -> Vec<CycInt> {
    (0..n)
        .map(|m| weil_value(ctx, i, &linalg::pow_u64(&ctx.field, g, m)).unwrap())
        .collect()
}

#[test]
fn e_dim_examples() {
    let ctx = WeilContext::new(3, 2).unwrap();
    let k = &*ctx.field;
    assert_eq!(e_dim(k, &Mat::identity(3), 1), 3);
    let pr = standard_pseudoreflection(&ctx);
    assert_eq!(e_dim(k, &pr, 1), 2);
    let x = build_canonical_irreducible(Side::SU, 3, 2).unwrap();
    for lam in 1..k.q() {
        assert_eq!(e_dim(k, &x, lam), 0);
    }
}

#[test]
fn reducible_weil_values() {
    let c3 = WeilContext::new(3, 2).unwrap();
    assert_eq!(
        reducible_weil(&c3, &Mat::identity(3)).unwrap(),
        CycInt::from_int(8)
    );
    let x = build_canonical_irreducible(Side::SU, 3, 2).unwrap();
    assert_eq!(reducible_weil(&c3, &x).unwrap(), CycInt::from_int(-1));
    // e = 3 in dimension 4: (+1)(-2)^3
    let c4 = WeilContext::new(4, 2).unwrap();
    let pr = standard_pseudoreflection(&c4);
    assert_eq!(reducible_weil(&c4, &pr).unwrap(), CycInt::from_int(-8));
    assert_eq!(
        reducible_weil(&c4, &Mat::identity(4)).unwrap(),
        CycInt::from_int(16)
    );
}

#[test]
fn weil_value_examples() {
    let c3 = WeilContext::new(3, 2).unwrap();
    let id = Mat::identity(3);
    assert_eq!(weil_value(&c3, 0, &id).unwrap(), CycInt::from_int(2));
    assert_eq!(weil_value(&c3, 1, &id).unwrap(), CycInt::from_int(3));
    let x = build_canonical_irreducible(Side::SU, 3, 2).unwrap();
    assert_eq!(weil_value(&c3, 0, &x).unwrap(), CycInt::from_int(-1));
    // n = 1: zeta^i is the linear character delta^m -> xi^(im), and zeta^0 vanishes
    for q in [2u64, 3, 4, 5] {
        let c1 = WeilContext::new(1, q).unwrap();
        for m in 0..=q {
            let x = Mat::diag(&[c1.field.pow(c1.delta, m)]);
            assert!(weil_value(&c1, 0, &x).unwrap().is_zero());
            for i in 1..=q {
                assert_eq!(weil_value(&c1, i, &x).unwrap(), c1.xi((i * m) as i64));
            }
        }
    }
}

#[test]
fn weil_characters_are_rows_of_the_dixon_table() {
    for (id, n) in [("GU3_2", 3), ("GU4_2", 4), ("GU2_3", 2)] {
        let spec = parse_group_id(id).unwrap();
        let g = enumerate_group(&spec, DEFAULT_CAP).unwrap();
        let c = conjugacy(&g).unwrap();
        let t = dixon_table(&g, &c, &DixonOptions::default()).unwrap();
        let ctx = WeilContext::new(n, spec.q).unwrap();
        for i in 0..=spec.q {
            let f = weil_class_function(&ctx, i, &g, &c).unwrap();
            let hit = (0..t.len()).find(|&r| t.values[r] == f.values);
            assert!(hit.is_some(), "{id}: zeta^{i} is not a table row");
            assert_eq!(t.degrees[hit.unwrap()], weil_degree(n, spec.q, i));
        }
    }
}

#[test]
fn weil_values_are_class_functions() {
    let spec = parse_group_id("GU3_2").unwrap();
    let g = enumerate_group(&spec, DEFAULT_CAP).unwrap();
    let ctx = WeilContext::new(3, 2).unwrap();
    let k = &*ctx.field;
    for step in [1usize, 37, 101, 211, 397] {
        for x in (0..g.size()).step_by(step).take(40) {
            let y = (x * 7 + 3) % g.size();
            let gm = g.elem(x);
            let ym = g.elem(y);
            let conj = linalg::mul(
                k,
                &linalg::mul(k, &linalg::inverse(k, &ym).unwrap(), &gm),
                &ym,
            );
            for i in 0..=2 {
                assert_eq!(
                    weil_value(&ctx, i, &gm).unwrap(),
                    weil_value(&ctx, i, &conj).unwrap()
                );
            }
        }
    }
}

#[test]
fn branching_on_gu3_2() {
    for i in 0..=2 {
        let r = branching_verify(i, 1, 2, BRANCHING_CAP).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.classes_checked, 24);
    }
    for q in [2u64, 4, 8] {
        let Some((p, _)) = hhcore::exactnum::primes::prime_power(q + 1) else {
            continue;
        };
        let n = p as usize;
        for i in 0..=q {
            let rhs: u64 = (0..=q)
                .filter(|&j| j != i)
                .map(|j| weil_degree(n, q, j))
                .sum();
            assert_eq!(weil_degree(n + 1, q, i), rhs);
        }
    }
    assert!(branching_verify(0, 1, 3, BRANCHING_CAP).is_err());
}

#[test]
fn pseudoreflection_restriction_formula() {
    let r = pseudoreflection_restriction(0, 4, 2).unwrap();
    assert_eq!(r.mult, vec![0, 3, 3]);
    assert_eq!(r.deg, 2);
    let r = pseudoreflection_restriction(1, 3, 2).unwrap();
    assert_eq!(r.mult, vec![0, 2, 1]);
    for (n, q) in [(3, 2), (4, 2), (2, 3), (3, 3), (3, 4), (5, 2)] {
        let ctx = WeilContext::new(n, q).unwrap();
        let g = standard_pseudoreflection(&ctx);
        assert!(is_pseudoreflection(
            &g,
            &hhcore::classgrp::standard_form(hhcore::classgrp::Family::GU, n, q).unwrap()
        )
        .is_some());
        for i in 0..=q {
            let r = pseudoreflection_restriction(i, n, q).unwrap();
            let dft = mults_from_character(&powers_values(&ctx, i, &g, q + 1), q + 1).unwrap();
            let mult: Vec<i64> = dft.mult.iter().map(|&x| x as i64).collect();
            assert_eq!(r.mult, mult, "n={n} q={q} i={i}");
            assert_eq!(r.mult.iter().sum::<i64>() as u64, weil_degree(n, q, i));
            assert_eq!(r.deg, deg_of(&dft));
        }
    }
}

#[test]
fn irreducible_elements_attain_their_order() {
    // q + 1 = p^c with p odd; (p^b, q) = (3, 2) is the exception
    for (n, q) in [(3usize, 8u64), (9, 2), (5, 4)] {
        let ctx = WeilContext::new(n, q).unwrap();
        let g = build_canonical_irreducible(Side::SU, n, q).unwrap();
        let abs = linalg::order(&ctx.field, &g).unwrap();
        for i in 0..=q {
            let m = mults_from_character(&powers_values(&ctx, i, &g, abs), abs).unwrap();
            assert_eq!(deg_of(&m), n, "n={n} q={q} i={i}");
        }
    }
    let ctx = WeilContext::new(3, 2).unwrap();
    let g = build_canonical_irreducible(Side::SU, 3, 2).unwrap();
    let m = mults_from_character(&powers_values(&ctx, 0, &g, 9), 9).unwrap();
    assert_eq!(deg_of(&m), 2);
}

#[test]
fn order_nine_element_with_pseudoreflection_cube() {
    let x = build_canonical_irreducible(Side::SU, 3, 2).unwrap();
    let g = embed_corner(&x);
    let ctx = WeilContext::new(4, 2).unwrap();
    let k = &*ctx.field;
    assert_eq!(linalg::order(k, &g).unwrap(), 9);
    let f = hhcore::classgrp::standard_form(hhcore::classgrp::Family::GU, 4, 2).unwrap();
    assert!(is_pseudoreflection(&linalg::pow_u64(k, &g, 3), &f).is_some());
    let degs: Vec<usize> = (0..=2)
        .map(|i| deg_of(&mults_from_character(&powers_values(&ctx, i, &g, 9), 9).unwrap()))
        .collect();
    // zeta^0 has degree 6 and reaches p^b q; the degree-5 pair gives p^b q - 1
    assert_eq!(degs, vec![6, 5, 5]);
}
