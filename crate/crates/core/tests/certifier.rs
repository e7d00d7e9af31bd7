mod common;

use proptest::prelude::*;
use tridisk::certifier::{
    certify_simply_connected, count_disks, find_triangulated_disk, list_disks,
    triangulated_fraction, CycleSample, CycleStatus, SearchLimits, SearchOutcome, Verdict,
};
use tridisk::random_complex::Complex2;
use tridisk::tri_enum::is_disk_triangulation;
use tridisk::Vertex;

use common::oracle_disk_counts;

#[test]
fn complete_complex_is_certified_without_internal_vertices() {
    let y = Complex2::complete(9).unwrap();
    let r = certify_simply_connected(&y, SearchLimits::new(0, 100)).unwrap();
    assert_eq!(r.verdict, Verdict::Yes);
    assert_eq!(r.certified, 84);
    assert!(r.outcomes.iter().all(|o| o.internal_used == Some(0)));
}

#[test]
fn empty_complex_is_unknown() {
    let y = Complex2::empty(7).unwrap();
    let r = certify_simply_connected(&y, SearchLimits::new(4, 10_000)).unwrap();
    assert_eq!(r.verdict, Verdict::Unknown);
    assert_eq!(r.absent, 35);
}

#[test]
fn octahedron_boundary_is_a_sphere() {
    // Faces of the octahedron with antipodal pairs (1,4), (2,5), (3,6): every
    // 3-cycle in it bounds a disk, but the complex lacks most triples.
    let mut faces = Vec::new();
    for a in [1, 4] {
        for b in [2, 5] {
            for c in [3, 6] {
                faces.push(tridisk::Face::new(a, b, c).unwrap());
            }
        }
    }
    let y = Complex2::from_faces(6, faces).unwrap();
    let limits = SearchLimits::new(3, 100_000);
    // [1,2,3] is a face and bounds the complementary disk too.
    let disks = list_disks(&y, [1, 2, 3], limits).unwrap();
    assert_eq!(disks.len(), 2);
    assert_eq!(count_disks(&y, [1, 2, 3], limits).unwrap(), vec![1, 0, 0, 1]);
    // [1,2,4] has no edge 14 among the faces and bounds nothing.
    assert!(matches!(
        find_triangulated_disk(&y, [1, 2, 4], limits).unwrap(),
        SearchOutcome::Absent(_)
    ));
}

#[test]
fn budget_never_claims_absence() {
    let y = Complex2::sample(40, 0.12, 3).unwrap();
    let r = find_triangulated_disk(&y, [1, 2, 3], SearchLimits::new(8, 5)).unwrap();
    assert!(!matches!(r, SearchOutcome::Absent(_)));
    let sample = CycleSample::Random { count: 6, seed: 1 };
    let tight = triangulated_fraction(&y, SearchLimits::new(3, 50), &sample).unwrap();
    let loose = triangulated_fraction(&y, SearchLimits::new(3, u64::MAX), &sample).unwrap();
    for (t, l) in tight.outcomes.iter().zip(&loose.outcomes) {
        if t.status != CycleStatus::BudgetExhausted {
            assert_eq!(t.status, l.status);
        }
    }
}

#[test]
fn fraction_is_deterministic() {
    let y = Complex2::sample(30, 0.15, 11).unwrap();
    let sample = CycleSample::Random { count: 25, seed: 4 };
    let limits = SearchLimits::new(4, 200_000);
    let a = triangulated_fraction(&y, limits, &sample).unwrap();
    let b = triangulated_fraction(&y, limits, &sample).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.sampled, 25);
}

fn cycle_strategy() -> impl Strategy<Value = (u32, [Vertex; 3])> {
    (6u32..=11).prop_flat_map(|n| {
        (Just(n), proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), 3))
            .prop_map(|(n, v)| (n, [v[0], v[1], v[2]]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn agrees_with_enumeration((n, cycle) in cycle_strategy(), p in 0.25f64..0.8, seed in any::<u64>(), k in 0usize..=3) {
        let y = Complex2::sample(n, p, seed).unwrap();
        let limits = SearchLimits::new(k, u64::MAX);
        let oracle = oracle_disk_counts(&y, cycle, k);
        prop_assert_eq!(count_disks(&y, cycle, limits).unwrap(), oracle.clone());
        let listed = list_disks(&y, cycle, limits).unwrap();
        prop_assert_eq!(listed.len() as u128, oracle.iter().sum::<u128>());
        for d in &listed {
            prop_assert!(is_disk_triangulation(d.faces(), cycle));
            prop_assert!(d.faces().iter().all(|f| y.contains_face(f)));
        }
        match find_triangulated_disk(&y, cycle, limits).unwrap() {
            SearchOutcome::Found(cert) => {
                prop_assert!(cert.validate(&y).is_ok());
                prop_assert_eq!(Some(cert.internal_used), oracle.iter().position(|&c| c > 0));
            }
            SearchOutcome::Absent(_) => prop_assert!(oracle.iter().all(|&c| c == 0)),
            SearchOutcome::BudgetExhausted(_) => prop_assert!(false, "unbounded budget"),
        }
    }

    #[test]
    fn more_faces_never_hurt(n in 6u32..=10, seed in any::<u64>(), lo in 0.1f64..0.5, step in 0.0f64..0.4) {
        let limits = SearchLimits::new(2, u64::MAX);
        let small = certify_simply_connected(&Complex2::sample(n, lo, seed).unwrap(), limits).unwrap();
        let big = certify_simply_connected(&Complex2::sample(n, lo + step, seed).unwrap(), limits).unwrap();
        for (a, b) in small.outcomes.iter().zip(&big.outcomes) {
            prop_assert_eq!(a.cycle, b.cycle);
            if let (Some(x), Some(y)) = (a.internal_used, b.internal_used) {
                prop_assert!(y <= x);
            }
            prop_assert!(a.internal_used.is_none() || b.internal_used.is_some());
        }
    }
}
