use hhcore::chartab::*;
use hhcore::classgrp::{group_order, parse_group_id};
use hhcore::exactnum::{ff_make, CycInt};
use hhcore::linalg::Mat;
use proptest::prelude::*;

fn group(id: &str) -> (GroupEnum, ConjData) {
    let g = enumerate_group(&parse_group_id(id).unwrap(), DEFAULT_CAP).unwrap();
    let c = conjugacy(&g).unwrap();
    (g, c)
}

fn degrees(id: &str) -> Vec<u64> {
    let (g, c) = group(id);
    let t = dixon_table(&g, &c, &DixonOptions::default()).unwrap();
    t.verify().unwrap();
    t.degrees
}

/// Number of classes as (number of commuting pairs) / |G|.
fn class_count_by_commuting_pairs(g: &GroupEnum) -> usize {
    let mut pairs = 0usize;
    for &a in &g.elems {
        for &b in &g.elems {
            if g.mul(a, b) == g.mul(b, a) {
                pairs += 1;
            }
        }
    }
    assert_eq!(pairs % g.size(), 0);
    pairs / g.size()
}

#[test]
fn enumeration_sizes() {
    for id in ["SL2_5", "GU3_2", "SL3_2", "Sp4_2", "GO-4_3", "SU3_2"] {
        let spec = parse_group_id(id).unwrap();
        let g = enumerate_group(&spec, DEFAULT_CAP).unwrap();
        let want = group_order(spec.family, spec.n, spec.q).unwrap();
        assert_eq!(g.size().to_string(), want.to_string(), "{id}");
    }
    let (g, _) = group("GU3_2");
    assert_eq!(g.size(), 648);
}

#[test]
fn class_counts_match_commuting_pairs() {
    for (id, want) in [("SL2_5", 9), ("SL3_2", 6), ("GU3_2", 24), ("SL2_8", 9)] {
        let (g, c) = group(id);
        assert_eq!(c.len(), want, "{id}");
        assert_eq!(class_count_by_commuting_pairs(&g), want, "{id}");
        assert_eq!(c.sizes.iter().sum::<u64>(), g.size() as u64);
        assert!(c.sizes.iter().all(|s| g.size() as u64 % s == 0));
        assert_eq!(c.orders[0], 1);
    }
}

#[test]
fn sp6_2_has_thirty_classes() {
    let (g, c) = group("Sp6_2");
    assert_eq!(g.size(), 1_451_520);
    assert_eq!(c.len(), 30);
    assert_eq!(c.sizes.iter().sum::<u64>(), 1_451_520);
}

#[test]
fn power_maps_compose() {
    let (_, c) = group("GU3_2");
    for k in 0..c.len() {
        assert_eq!(c.power(k, 1), k);
        assert_eq!(c.power(k, 0), 0);
        assert_eq!(c.orders[c.inverse[k]], c.orders[k]);
        for a in 1..c.orders[k] as i64 {
            for b in 1..c.orders[k] as i64 {
                assert_eq!(c.power(c.power(k, a), b), c.power(k, a * b));
            }
        }
    }
}

#[test]
fn gu3_2_degree_inventory() {
    let mut want = vec![1; 3];
    want.extend([2; 3]);
    want.extend([3; 7]);
    want.extend([6; 6]);
    want.extend([8; 3]);
    want.extend([9; 2]);
    assert_eq!(degrees("GU3_2"), want);
}

#[test]
fn sl2_5_degrees() {
    let d = degrees("SL2_5");
    assert_eq!(d, vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
    assert_eq!(d.iter().map(|x| x * x).sum::<u64>(), 120);
}

#[test]
fn trivial_group_table() {
    let k = ff_make(3, 1).unwrap();
    let g = enumerate(&k, &[Mat::identity(2)], 10).unwrap();
    let c = conjugacy(&g).unwrap();
    let t = dixon_table(&g, &c, &DixonOptions::default()).unwrap();
    assert_eq!(t.degrees, vec![1]);
    assert_eq!(t.values[0][0], CycInt::from_int(1));
}

#[test]
fn sequential_and_parallel_constants_agree() {
    let (g, c) = group("GU3_2");
    assert_eq!(
        class_constants(&g, &c, Exec::Sequential),
        class_constants(&g, &c, Exec::Parallel)
    );
}

#[test]
fn multiplicities_on_cyclic_subgroups_are_integral() {
    let (g, c) = group("SL2_8");
    let t = dixon_table(&g, &c, &DixonOptions::default()).unwrap();
    for chi in 0..t.len() {
        for k in 0..c.len() {
            let o = c.orders[k] as i64;
            let mut s = CycInt::zero(1);
            for m in 0..o {
                s = s.add(t.value_at_power(chi, k, m));
            }
            let s = s.as_integer().unwrap();
            assert!(s >= 0 && s % o == 0, "chi {chi}, class {k}");
        }
    }
}

#[test]
fn restriction_basics() {
    let (g, gc) = group("SL2_5");
    let t = dixon_table(&g, &gc, &DixonOptions::default()).unwrap();
    // H = <diag(2, 3)>, cyclic of order 4
    let k = ff_make(5, 1).unwrap();
    let h = enumerate(&k, &[Mat::diag(&[2, 3])], 100).unwrap();
    let hc = conjugacy(&h).unwrap();
    let triv = restrict_to_subgroup(&t.row(0), &g, &gc, &h, &hc, |m| m.clone()).unwrap();
    assert!(triv.values.iter().all(|v| *v == CycInt::from_int(1)));
    // regular character: sum of d * chi
    let mut reg = ClassFunction {
        conductor: t.exponent as u32,
        values: vec![CycInt::zero(1); gc.len()],
    };
    for i in 0..t.len() {
        let mut r = t.row(i);
        r.values
            .iter_mut()
            .for_each(|v| *v = v.scale(t.degrees[i] as i64));
        reg = reg.add(&r);
    }
    let res = restrict_to_subgroup(&reg, &g, &gc, &h, &hc, |m| m.clone()).unwrap();
    assert_eq!(res.values[0], CycInt::from_int(120));
    assert!(res.values[1..].iter().all(|v| v.is_zero()));
    let outside = Mat::from_rows(&[vec![1, 1], vec![1, 1]]);
    let bad = enumerate(&k, &[Mat::diag(&[2, 1])], 100).unwrap();
    let badc = conjugacy(&bad).unwrap();
    assert!(restrict_to_subgroup(&t.row(0), &g, &gc, &bad, &badc, |_| outside.clone()).is_err());
}

#[test]
fn json_export_has_schema_fields() {
    let (g, c) = group("SL2_5");
    let t = dixon_table(&g, &c, &DixonOptions::default()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&table_to_json(&t)).unwrap();
    assert_eq!(v["group_order"], 120);
    assert_eq!(v["classes"].as_array().unwrap().len(), 9);
    assert_eq!(v["characters"][8]["degree"], 6);
    assert_eq!(v["characters"][0]["values"][0]["coeffs"][0], 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn random_subgroups_of_gl2_have_valid_tables(
        p in prop::sample::select(vec![2u32, 3, 5]),
        a in prop::collection::vec(0u32..5, 4),
        b in prop::collection::vec(0u32..5, 4),
    ) {
        let k = ff_make(p, 1).unwrap();
        let m = |v: &[u32]| Mat::from_rows(&[vec![v[0] % p, v[1] % p], vec![v[2] % p, v[3] % p]]);
        let (x, y) = (m(&a), m(&b));
        prop_assume!(hhcore::linalg::det(&k, &x) != 0 && hhcore::linalg::det(&k, &y) != 0);
        let g = enumerate(&k, &[x, y], 1000).unwrap();
        let c = conjugacy(&g).unwrap();
        prop_assert_eq!(c.len(), class_count_by_commuting_pairs(&g));
        let t = dixon_table(&g, &c, &DixonOptions::default()).unwrap();
        prop_assert!(t.verify().is_ok());
    }
}
