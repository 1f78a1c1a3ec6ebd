use num_rational::Ratio;
use proptest::prelude::*;

use rapoly_core::hybrid::{pi_over, Angle, HybridVerdict, InterfaceCheck, PieceAnalysis};
use rapoly_core::{
    antiprism, check_even_angle_interface, classify_link, glue_polygons, hybrid_verdict,
    realize_ideal_right_angled, volume_ideal, ArithmeticConfig, CoxeterPolygon, GluingSpec,
    LinkDescriptor, SolverConfig,
};

/// Two polygons sharing an even-angle interface: side `s1` of the first runs
/// from an angle `pi/(2 m0)` to `pi/(2 m1)`, and side `s2` of the second
/// carries the same angles in the opposite direction.
fn matched_polygons(
) -> impl Strategy<Value = (CoxeterPolygon, usize, CoxeterPolygon, usize, [Angle; 2])> {
    let other = prop_oneof![Just(Angle::from_integer(0)), (2i64..9).prop_map(pi_over)];
    (
        proptest::collection::vec(other.clone(), 3..8),
        proptest::collection::vec(other, 3..8),
        any::<prop::sample::Index>(),
        any::<prop::sample::Index>(),
        1i64..5,
        1i64..5,
    )
        .prop_filter_map("hyperbolic pieces", |(mut a, mut b, i, j, m0, m1)| {
            let (s1, s2) = (i.index(a.len()), j.index(b.len()));
            let e = [pi_over(2 * m0), pi_over(2 * m1)];
            let (n1, n2) = (a.len(), b.len());
            a[s1] = e[0];
            a[(s1 + 1) % n1] = e[1];
            b[s2] = e[1];
            b[(s2 + 1) % n2] = e[0];
            Some((
                CoxeterPolygon::new(a).ok()?,
                s1,
                CoxeterPolygon::new(b).ok()?,
                s2,
                e,
            ))
        })
}

proptest! {
    #[test]
    fn even_angle_gluing_doubles_and_adds((p1, s1, p2, s2, e) in matched_polygons()) {
        let spec = GluingSpec::polygons(p1.clone(), s1, p2.clone(), s2);
        prop_assert!(check_even_angle_interface(&spec).unwrap().ok);
        let merged = spec.merged_angles().unwrap();
        prop_assert_eq!(&merged, &vec![e[0] * 2, e[1] * 2]);
        let glued = glue_polygons(&spec).unwrap();
        let straight = merged.iter().filter(|a| **a == Angle::from_integer(1)).count();
        prop_assert_eq!(glued.len(), p1.len() + p2.len() - 2 - straight);
        prop_assert_eq!(glued.area(), p1.area() + p2.area());
        for a in glued.angles() {
            prop_assert!(*a.numer() == 0 || *a.numer() == 1);
        }
    }

    #[test]
    fn odd_interface_angles_are_refused((p1, s1, p2, s2, _) in matched_polygons(), m in 1i64..5) {
        let mut angles = p1.angles().to_vec();
        angles[s1] = Ratio::new(1, 2 * m + 1);
        prop_assume!(CoxeterPolygon::new(angles.clone()).is_ok());
        let spec = GluingSpec::polygons(CoxeterPolygon::new(angles).unwrap(), s1, p2, s2);
        let check = check_even_angle_interface(&spec).unwrap();
        prop_assert!(!check.ok);
        prop_assert_eq!(check.violations[0].position, 0);
        prop_assert!(glue_polygons(&spec).is_err());
    }
}

#[test]
fn more_evidence_never_withdraws_a_verdict() {
    let solver = SolverConfig::default();
    let arith = ArithmeticConfig::default();
    let pieces: Vec<PieceAnalysis> = (3..=7)
        .map(|n| PieceAnalysis::compute(&antiprism(n).unwrap(), &solver, &arith).unwrap())
        .collect();
    let interface = InterfaceCheck {
        ok: true,
        violations: vec![],
    };
    for a in &pieces {
        for b in &pieces {
            let full = hybrid_verdict(
                &a.arithmeticity,
                &b.arithmeticity,
                &a.fingerprint,
                &b.fingerprint,
                &interface,
            );
            assert!(full.verify_chain(
                &a.arithmeticity,
                &b.arithmeticity,
                &a.fingerprint,
                &b.fingerprint
            ));
            // Hide the fingerprints: what remains is a subset of the evidence.
            let mut fa = a.fingerprint.clone();
            let mut fb = b.fingerprint.clone();
            fa.complete = false;
            fb.complete = false;
            let reduced = hybrid_verdict(&a.arithmeticity, &b.arithmeticity, &fa, &fb, &interface);
            if reduced.verdict == HybridVerdict::Nonarithmetic {
                assert_eq!(full.verdict, HybridVerdict::Nonarithmetic);
            }
            let same = std::ptr::eq(a, b);
            assert_eq!(full.verdict == HybridVerdict::Inconclusive, same);
        }
    }
}

#[test]
fn link_volumes_compose_from_antiprisms() {
    let solver = SolverConfig::default();
    let arith = ArithmeticConfig::default();
    let volume = |n: usize| {
        let p = antiprism(n).unwrap();
        volume_ideal(&p, &realize_ideal_right_angled(&p, &solver).unwrap())
            .unwrap()
            .total
    };
    for n in 2..=6 {
        let report = classify_link(&LinkDescriptor::augmented(n), &solver, &arith).unwrap();
        let expected = 2.0 * (volume(n + 1) + volume(n + 1));
        assert!(
            (report.volume - expected).abs() <= 1e-6,
            "C_{}: {} vs {expected}",
            4 * n + 1,
            report.volume
        );
    }
    for n in 3..=6 {
        let report = classify_link(&LinkDescriptor::chain(n), &solver, &arith).unwrap();
        assert!(
            (report.volume - 2.0 * volume(n)).abs() <= 1e-6,
            "D_{}",
            2 * n
        );
    }
}
