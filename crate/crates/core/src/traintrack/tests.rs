use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::scalar::rationals;
use crate::surface::builtin_surface;
use crate::surface::lamination::measure_defect;

type Track = MeasuredTrainTrack<BigRational>;

fn track(name: &str, v: &[i64]) -> Track {
    let tri = builtin_surface(name).unwrap();
    MeasuredTrainTrack::from_triangulation(&tri, &rationals(v)).unwrap()
}

fn total(t: &Track) -> BigRational {
    t.total_measure().unwrap()
}

#[test]
fn degenerate_triangles_lose_branches() {
    // corner (1+1-2)/2 vanishes in both triangles
    let t = track("S_1_1", &[1, 1, 2]);
    t.check().unwrap();
    let strict = track("S_1_1", &[2, 3, 4]);
    assert!(t.num_branches() < strict.num_branches());
    // the track itself has one once-marked bigon as complement, but the
    // curve it carries collapses to a loop after one split
    assert!(t.is_filling());
    assert_eq!(t.census(), vec![(2, 1)]);
    let s = t.split_times(1).unwrap();
    assert!(!s.is_filling());
}

#[test]
fn strict_triangles_give_full_pattern() {
    // three edge branches, six corner branches, six trivalent switches
    let t = track("S_1_1", &[2, 3, 4]);
    assert_eq!(t.num_branches(), 9);
    assert_eq!(t.num_switches(), 6);
    t.check().unwrap();
}

#[test]
fn rejects_non_laminations() {
    let tri = builtin_surface("S_1_1").unwrap();
    assert!(MeasuredTrainTrack::from_triangulation(&tri, &rationals(&[1, 1, 5])).is_err());
    assert!(MeasuredTrainTrack::from_triangulation(&tri, &rationals(&[0, 0, 0])).is_err());
    assert!(MeasuredTrainTrack::from_triangulation(&tri, &rationals(&[1, 1])).is_err());
}

#[test]
fn empty_track_does_not_fill() {
    assert!(!Track::empty(1, 1).is_filling());
}

#[test]
fn split_measures() {
    let t = track("S_1_1", &[2, 3, 4]);
    for e in t.branch_ids() {
        if !t.is_large(e) {
            assert!(t.split_branch(e).is_err());
            continue;
        }
        let (s, kind) = t.split_branch(e).unwrap();
        s.check().unwrap();
        match kind {
            SplitKind::Central => {
                assert!(s.measure(e).is_none());
                assert_eq!(s.num_branches(), t.num_branches() - 3);
            }
            _ => {
                assert!(s.measure(e).unwrap() < t.measure(e).unwrap());
                assert_eq!(s.num_branches(), t.num_branches());
            }
        }
        assert!(total(&s) < total(&t));
    }
}

#[test]
fn left_and_central_cases() {
    // edge 2 of S_1_1 meets corners 5/2 and 3/2 on either side
    let t = track("S_1_1", &[2, 3, 4]);
    let big = t.maximal_branches();
    assert_eq!(big.len(), 1);
    let (s, kind) = t.split_branch(big[0]).unwrap();
    let new = s.measure(big[0]).cloned();
    match kind {
        SplitKind::Central => assert!(new.is_none()),
        _ => assert_eq!(new.unwrap(), BigRational::from_integer(1.into())),
    }
    // all corners equal: the neighbours balance and the split is central
    let t = track("S_1_1", &[2, 2, 2]);
    let e = t.maximal_branches()[0];
    assert_eq!(t.split_branch(e).unwrap().1, SplitKind::Central);
}

#[test]
fn region_census_of_strict_torus_track() {
    let t = track("S_1_1", &[2, 3, 4]);
    let regions = t.region_boundaries();
    let sides: usize = regions.iter().map(|r| r.sides.len()).sum();
    assert_eq!(sides, 2 * t.num_branches());
    assert_eq!(regions.iter().map(|r| r.marked).sum::<usize>(), 1);
    // two trigons, and a smooth once-marked disk around the vertex: the
    // measure has a peripheral component, which a track may not carry
    assert_eq!(t.census(), vec![(0, 1), (3, 0), (3, 0)]);
    assert!(!t.is_filling());
}

fn random_relabel(t: &Track, seed: u64) -> Track {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let bs = t.branch_ids();
    let ss: Vec<usize> = t.dump().switches.iter().map(|s| s.id).collect();
    let mut ids: Vec<usize> = (0..bs.len() + ss.len()).map(|i| 1000 + i).collect();
    ids.shuffle(&mut rng);
    let bmap: BTreeMap<_, _> = bs.iter().copied().zip(ids.iter().copied()).collect();
    let smap: BTreeMap<_, _> = ss.iter().copied().zip(ids[bs.len()..].iter().copied()).collect();
    t.renamed(&bmap, &smap)
}

#[test]
fn canonical_form_ignores_labels_and_scale() {
    for (name, v) in [("S_1_1", vec![2, 3, 4]), ("S_0_4", vec![2, 2, 2, 2, 2, 2]), ("S_1_1", vec![1, 1, 2])] {
        let t = track(name, &v);
        let f = t.canonical_form();
        for seed in 0..100 {
            let r = random_relabel(&t, seed);
            r.check().unwrap();
            let g = r.canonical_form();
            assert_eq!(f.code, g.code);
            assert_eq!(f.measures, g.measures);
        }
        let g = t.scaled(&BigInt::from(7)).canonical_form();
        assert!(f.matches(&g));
    }
}

#[test]
fn census_separates_tracks() {
    let a = track("S_1_1", &[2, 3, 4]);
    let b = track("S_1_1", &[1, 1, 2]);
    assert_ne!(a.census(), b.census());
    assert_ne!(a.canonical_form().code, b.canonical_form().code);
}

#[test]
fn dump_is_json() {
    let t = track("S_1_1", &[2, 3, 4]);
    let js = serde_json::to_value(t.dump()).unwrap();
    assert_eq!(js["branches"].as_array().unwrap().len(), 9);
    assert_eq!(js["filling"], false);
}

fn random_measure(name: &str) -> impl Strategy<Value = (String, Vec<i64>)> {
    let z = builtin_surface(name).unwrap().zeta();
    let name = name.to_string();
    prop::collection::vec(1i64..40, z).prop_filter_map("triangle inequalities", move |v| {
        let tri = builtin_surface(&name).unwrap();
        measure_defect(&tri, &rationals(&v)).ok()?.is_none().then(|| (name.clone(), v))
    })
}

fn any_measure() -> impl Strategy<Value = (String, Vec<i64>)> {
    prop_oneof![random_measure("S_1_1"), random_measure("S_0_4"), random_measure("S_0_5"), random_measure("S_2_1")]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(125))]

    #[test]
    fn splitting_keeps_switch_condition((name, v) in any_measure(), steps in 1usize..12) {
        let mut t = track(&name, &v);
        let zeta = builtin_surface(&name).unwrap().zeta();
        for _ in 0..steps {
            prop_assert!(t.num_branches() <= 3 * zeta);
            let filling = t.is_filling();
            let Ok((s, split)) = t.maximal_split() else { break };
            s.check().unwrap();
            prop_assert!(total(&s) < total(&t));
            prop_assert!(!split.is_empty());
            // only a central split can cost filling: left and right splits keep every region
            if filling {
                prop_assert!(s.is_filling() || split.iter().any(|x| x.1 == SplitKind::Central));
            }
            t = s;
        }
    }

    #[test]
    fn split_order_does_not_matter((name, v) in any_measure()) {
        let t = track(&name, &v);
        let maxes = t.maximal_branches();
        prop_assume!(maxes.len() >= 2 && maxes.iter().all(|&e| t.is_large(e)));
        let mut fwd = t.clone();
        for &e in &maxes { fwd = fwd.split_branch(e).unwrap().0; }
        let mut bwd = t.clone();
        for &e in maxes.iter().rev() { bwd = bwd.split_branch(e).unwrap().0; }
        let (f, b) = (fwd.canonical_form(), bwd.canonical_form());
        prop_assert_eq!(f.code, b.code);
        prop_assert_eq!(f.measures, b.measures);
    }

    #[test]
    fn region_sides_partition((name, v) in any_measure()) {
        let t = track(&name, &v);
        let regions = t.region_boundaries();
        let n: usize = regions.iter().map(|r| r.sides.len()).sum();
        prop_assert_eq!(n, 2 * t.num_branches());
        prop_assert_eq!(regions.iter().map(|r| r.marked).sum::<usize>(), t.num_marked());
        // each trivalent switch contributes exactly one cusp
        let cusps: usize = regions.iter().map(|r| r.cusps).sum();
        prop_assert_eq!(cusps, t.num_switches());
    }
}
