mod common;

use proptest::prelude::*;
use tridisk::subset_params::{
    build_xs, check_phieuler, complement_regions, is_admissible, param_tuple, scan_exhaustive,
    HalfInt, WitnessFamily, RELATIONS,
};
use tridisk::tri_enum::{Census, DiskTriangulation};
use tridisk::{Error, Face};

use common::faces;

fn member(k: usize, index: usize) -> DiskTriangulation {
    let census = Census::standard(k).unwrap();
    let shapes = census.shapes().len();
    census.iter_shapes(index % shapes..index % shapes + 1).next().unwrap()
}

fn subset(t: &DiskTriangulation, mask: u64) -> Vec<Face> {
    let m = t.faces().len();
    let mask = mask % ((1 << m) - 2) + 1;
    (0..m).filter(|i| mask >> i & 1 == 1).map(|i| t.faces()[i]).collect()
}

#[test]
fn scan_csv_reports_every_relation() {
    let scan = scan_exhaustive(3).unwrap();
    assert_eq!(scan.subsets, 78 * 126);
    assert_eq!(scan.total_violations(), 0);
    let csv = scan.to_csv();
    assert!(csv.starts_with("# schema=1\n# k=3 subsets=9828\n"));
    for r in RELATIONS.iter().chain(&["planar_betti"]) {
        assert!(csv.contains(&format!("# relation={r} checked=9828 failures=0 status=PASS")));
    }
    let counted: u64 = scan.histogram.values().map(|s| s.count).sum();
    assert_eq!(counted, scan.subsets);
}

#[test]
fn admissibility() {
    let s = faces(&[[1, 2, 4], [1, 3, 4]]);
    assert!(is_admissible(&s, 1, WitnessFamily::All).unwrap());
    assert!(is_admissible(&s, 3, WitnessFamily::All).unwrap());
    // The only witness at k = 1 is the whole cone.
    let cone = faces(&[[1, 2, 4], [1, 3, 4], [2, 3, 4]]);
    assert!(!is_admissible(&cone, 1, WitnessFamily::All).unwrap());
    // The cone fills [123], so no second vertex fits alongside it.
    assert!(!is_admissible(&cone, 2, WitnessFamily::All).unwrap());
    // Every two-vertex triangulation has a missing face of density 1.
    let one = faces(&[[1, 2, 4]]);
    assert!(is_admissible(&one, 2, WitnessFamily::LSimple(1)).unwrap());
    assert!(!is_admissible(&one, 2, WitnessFamily::LSimple(0)).unwrap());
    assert!(!is_admissible(&faces(&[[1, 2, 3]]), 2, WitnessFamily::All).unwrap());
}

#[test]
fn errors() {
    assert!(matches!(build_xs(&[]), Err(Error::EmptyFaceSet)));
    let fan = faces(&[[1, 4, 5], [2, 4, 5], [3, 4, 5]]);
    assert!(matches!(build_xs(&fan), Err(Error::EdgeDegree { .. })));
    assert!(matches!(param_tuple(&faces(&[[1, 4, 5]]), 1), Err(Error::NegativeOuter { .. })));
    let cone = DiskTriangulation::cone([1, 2, 3], 4).unwrap();
    assert!(matches!(check_phieuler(cone.faces(), &cone), Err(Error::NotProperSubset)));
    assert!(matches!(
        check_phieuler(&faces(&[[1, 2, 5]]), &cone),
        Err(Error::NotProperSubset)
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn relations_hold_on_random_subsets(k in 1usize..=6, index in 0usize..100_000, mask in any::<u64>()) {
        let t = member(k, index);
        let s = subset(&t, mask);
        let report = check_phieuler(&s, &t).unwrap();
        prop_assert!(report.all_hold(), "{:?}", report.failures().collect::<Vec<_>>());
        prop_assert_eq!(complement_regions(&s, &t).unwrap(), report.beta1);
        let tuple = report.tuple;
        prop_assert_eq!(tuple.v_boundary + tuple.v_internal + tuple.v_outer, k);
        prop_assert!(tuple.phi <= HalfInt::ZERO);
    }

    #[test]
    fn subsets_are_admissible(k in 1usize..=4, index in 0usize..1_000, mask in any::<u64>()) {
        let t = member(k, index);
        prop_assert!(is_admissible(&subset(&t, mask), k, WitnessFamily::All).unwrap());
    }

    #[test]
    fn phi_ignores_face_order(k in 1usize..=5, index in 0usize..1_000, mask in any::<u64>()) {
        let t = member(k, index);
        let mut s = subset(&t, mask);
        let a = build_xs(&s).unwrap();
        s.reverse();
        let b = build_xs(&s).unwrap();
        prop_assert_eq!(a.phi(), b.phi());
        prop_assert_eq!(3 * s.len(), a.e1 + 2 * a.e2);
    }
}
