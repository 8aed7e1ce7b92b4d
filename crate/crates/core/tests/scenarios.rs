use std::sync::Arc;

use modrep_core::grp::sl2;
use modrep_core::modstruct::{chop, find_isomorphism, Module};
use modrep_core::rootsys::Bound;
use modrep_core::sl2lab::*;
use modrep_core::{Elem, Field, Mat, Rep};

fn assert_pass(r: &ScenarioResult) {
    assert!(r.pass, "{} failed: {:?} {:?}", r.id, r.error, r.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>());
}

#[test]
fn head_table_examples() {
    for (p, a, head) in [(5, 3, vec![0, 2, 4]), (5, 4, vec![0, 2, 4, 4]), (7, 3, vec![0, 2, 4, 6])] {
        let r = tensor_head_table(p, a, 0);
        assert_pass(&r);
        assert_eq!(r.check("head").unwrap().computed, Value::List(head));
    }
    let r = tensor_head_table(5, 3, 7);
    assert_eq!(r.check("chop_dims").unwrap().computed, Value::List(vec![1, 1, 3, 3, 3, 5]));
}

#[test]
fn delta_examples() {
    let r = delta_pk_check(7, 3, 1);
    assert_pass(&r);
    let p1: Vec<i64> = (0..=3).map(|l: i64| (2 * l - 3).rem_euclid(7)).collect();
    assert_eq!(r.check("k1_eigenvalues").unwrap().computed, Value::List(p1));
    assert_eq!(r.check("k0_eigenvalues").unwrap().computed, Value::List(vec![1; 4]));
    let r = delta_pk_check(7, 5, 2);
    assert_pass(&r);
    assert_eq!(r.check("k2_leading").unwrap().computed, Value::Int(6));
    assert!(!delta_pk_check(7, 2, 3).pass);
}

#[test]
fn diagonal_span_examples() {
    for (p, a, dim) in [(5, 3, 2), (5, 2, 2), (7, 4, 3)] {
        let r = diagonal_span_check(p, a);
        assert_pass(&r);
        assert_eq!(r.check("span_dim").unwrap().computed, Value::Int(dim));
    }
}

#[test]
fn selfdual_examples() {
    let r = selfdual_indec_check(5, 0);
    assert_pass(&r);
    assert_eq!(r.check("upper_dim").unwrap().computed, Value::Int(6));
    let r = selfdual_indec_check(7, 0);
    assert_pass(&r);
    assert_eq!(r.check("lower_dim").unwrap().computed, Value::Int(6));
}

#[test]
fn atlas_and_roots() {
    for c in ATLAS_IDS {
        assert_pass(&ext_atlas(c, 0));
    }
    assert_pass(&coroot_bounds(Bound::A));
    assert_pass(&coroot_bounds(Bound::B));
}

#[test]
fn weil_modules_are_faithful_on_the_center() {
    let (w1, w2) = weil_modules_sl29().unwrap();
    assert_eq!((w1.dim(), w2.dim()), (4, 4));
    let g = w1.group();
    let f9 = g.field();
    let m1 = f9.neg(Elem::ONE);
    let z = g.index_of(&Mat::diag(f9, &[m1, m1])).unwrap();
    let f25 = w1.field();
    assert_eq!(*w1.image(z), Mat::scalar(f25, 4, f25.neg(Elem::ONE)));
    assert!(find_isomorphism(&Module::from(&w1), &Module::from(&w2), 0).unwrap().is_none());
}

/// The permutation module on the nonzero vectors of `F_9^2` contains no
/// four-dimensional composition factor in characteristic 5.
#[test]
fn eighty_point_module_has_no_weil_factor() {
    let g = Arc::new(sl2(3, 2).unwrap());
    let f9 = g.field().clone();
    let f25 = Field::make(5, 2).unwrap();
    let pts: Vec<(Elem, Elem)> = f9
        .elements()
        .flat_map(|a| f9.elements().map(move |b| (a, b)))
        .filter(|(a, b)| !(a.is_zero() && b.is_zero()))
        .collect();
    let perms: Vec<Vec<usize>> = g
        .gens()
        .iter()
        .map(|s| {
            pts.iter()
                .map(|&(a, b)| {
                    let x = f9.add(f9.mul(s.get(0, 0), a), f9.mul(s.get(0, 1), b));
                    let y = f9.add(f9.mul(s.get(1, 0), a), f9.mul(s.get(1, 1), b));
                    pts.iter().position(|&q| q == (x, y)).unwrap()
                })
                .collect()
        })
        .collect();
    let r = Rep::permutation(&g, &f25, &perms).unwrap();
    let mut dims: Vec<usize> = Vec::new();
    for c in chop(&Module::from(&r), 0).unwrap() {
        dims.extend(std::iter::repeat_n(c.dim, c.multiplicity));
    }
    assert_eq!(dims, vec![1, 1, 5, 5, 8, 10, 10, 10, 10, 10, 10]);
}

#[test]
fn reports_serialise_deterministically() {
    let a = serde_json::to_string(&run(&select(Tier::Acceptance, &["ext_atlas:a".into()])[0], 0, None)).unwrap();
    let b = serde_json::to_string(&run(&select(Tier::Acceptance, &["ext_atlas:a".into()])[0], 0, None)).unwrap();
    assert_eq!(a, b);
    assert!(!a.contains("runtime"));
}

#[test]
fn optional_scenarios_skip_without_fixtures() {
    for s in select(Tier::Stretch, &["sporadic".into()]) {
        assert_eq!(s.tier, Tier::Optional);
        assert_eq!(run(&s, 0, None).status, Status::Skipped);
    }
    assert!(select(Tier::Acceptance, &[]).iter().all(|s| s.tier == Tier::Acceptance));
}

#[test]
fn every_check_names_its_basis() {
    let r = weak_adequacy(5, 2);
    let json = serde_json::to_value(&r).unwrap();
    for c in json["checks"].as_array().unwrap() {
        let b = c["basis"].as_str().unwrap();
        assert!(["theorem", "elementary", "computed"].contains(&b));
    }
}
