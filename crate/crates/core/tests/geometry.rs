use std::f64::consts::PI;

use nalgebra::Matrix4;
use proptest::prelude::*;

use rapoly_core::combinatorics::{glue_antiprisms, isomorphism};
use rapoly_core::dd::Dd;
use rapoly_core::invariants::volume_with_apex;
use rapoly_core::lorentz::LorentzTransform;
use rapoly_core::{
    antiprism, gram, lobachevsky, realize_ideal_right_angled, twisted_antiprism,
    validate_realization, volume_ideal, CombinatorialPolytope, LorentzVector, Realization,
    SolverConfig,
};

fn realize(p: &CombinatorialPolytope) -> Realization {
    realize_ideal_right_angled(p, &SolverConfig::default()).expect("realizable")
}

fn twist_range(max_n: usize) -> Vec<(usize, usize)> {
    (4..=max_n)
        .flat_map(|n| (3..=n / 2 + 1).map(move |k| (n, k)))
        .collect()
}

fn dot_dd(x: &LorentzVector, y: &LorentzVector) -> f64 {
    let t = |i: usize| Dd::from(x[i]) * Dd::from(y[i]);
    (t(1) + t(2) + t(3) - t(0)).to_f64()
}

/// Exact isometry: the spatial axes permuted and sign-flipped.
fn signed_permutation(perm: &[usize; 3], signs: [f64; 3]) -> LorentzTransform {
    let mut m = Matrix4::zeros();
    m[(0, 0)] = 1.0;
    for i in 0..3 {
        m[(1 + i, 1 + perm[i])] = signs[i];
    }
    LorentzTransform(m)
}

/// Exact isometry: a boost with `cosh = 5/4`, `sinh = +-3/4`, both dyadic.
fn dyadic_boost(axis: usize, sign: f64) -> LorentzTransform {
    let mut m = Matrix4::identity();
    m[(0, 0)] = 1.25;
    m[(axis, axis)] = 1.25;
    m[(0, axis)] = 0.75 * sign;
    m[(axis, 0)] = 0.75 * sign;
    LorentzTransform(m)
}

/// Random isometry preserving the upper sheet, exact in f64: a product of up
/// to four signed axis permutations, each followed by a dyadic boost.
/// Transforms built from `cos`/`sin`/`cosh` carry an isometry defect near
/// 1e-15, which the large normals of `A_n` for big `n` amplify past 1e-12
/// without any error in the pipeline.
fn lorentz_transform() -> impl Strategy<Value = LorentzTransform> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let sign = || prop_oneof![Just(1.0), Just(-1.0)];
    let step = (0..6usize, [sign(), sign(), sign()], 1..=3usize, sign());
    proptest::collection::vec(step, 1..=4).prop_map(|steps| {
        steps
            .into_iter()
            .fold(LorentzTransform::identity(), |t, (p, signs, axis, s)| {
                t.compose(&signed_permutation(&PERMS[p], signs))
                    .compose(&dyadic_boost(axis, s))
            })
    })
}

#[test]
fn solver_and_validator_agree() {
    let cfg = SolverConfig::default();
    let mut polytopes: Vec<CombinatorialPolytope> =
        (3..=12).map(|n| antiprism(n).unwrap()).collect();
    polytopes.extend(
        twist_range(12)
            .into_iter()
            .map(|(n, k)| twisted_antiprism(n, k).unwrap()),
    );
    for p in &polytopes {
        let r = realize(p);
        assert!(r.residual <= cfg.tolerance);
        let report = validate_realization(p, &r).unwrap();
        assert!(
            report.max() <= 10.0 * cfg.tolerance,
            "validator {} vs residual {}",
            report.max(),
            r.residual
        );
    }
}

#[test]
fn twist_and_glue_have_permuted_gram_matrices() {
    for (n, k) in twist_range(12) {
        let t = twisted_antiprism(n, k).unwrap();
        let g = glue_antiprisms(k, n - k + 2).unwrap();
        let iso = isomorphism(&t, &g).unwrap();
        let (gt, gg) = (
            gram(&t, &realize(&t)).unwrap(),
            gram(&g, &realize(&g)).unwrap(),
        );
        for i in 0..gt.size() {
            for j in 0..gt.size() {
                let (a, b) = (gt.get(i, j), gg.get(iso.face_map[i], iso.face_map[j]));
                assert!(
                    (a - b).abs() <= 1e-8,
                    "A_{{{n},{k}}} entry ({i},{j}): {a} vs {b}"
                );
            }
        }
    }
}

#[test]
fn volume_is_apex_independent_and_tetrahedra_are_ideal() {
    for p in (3..=8)
        .map(|n| antiprism(n).unwrap())
        .chain([twisted_antiprism(6, 4).unwrap()])
    {
        let r = realize(&p);
        let reference = volume_ideal(&p, &r).unwrap().total;
        for apex in 0..p.vertex_count() {
            let report = volume_with_apex(&p, &r, apex).unwrap();
            assert!((report.total - reference).abs() <= 1e-8);
            let parts: f64 = report.tetrahedra.iter().map(|t| t.volume).sum();
            assert!((parts - report.total).abs() <= 1e-12);
            for t in &report.tetrahedra {
                assert!((t.angles.iter().sum::<f64>() - PI).abs() <= 1e-9);
                assert!(t.volume >= 0.0);
            }
        }
    }
}

#[test]
fn antiprism_volumes_increase() {
    let volumes: Vec<f64> = (3..=12)
        .map(|n| {
            let p = antiprism(n).unwrap();
            volume_ideal(&p, &realize(&p)).unwrap().total
        })
        .collect();
    assert!(volumes.windows(2).all(|w| w[0] < w[1]), "{volumes:?}");
}

#[test]
fn lobachevsky_is_odd_and_periodic() {
    for i in 0..1000 {
        let x = -PI + 2.0 * PI * i as f64 / 999.0;
        assert!(
            (lobachevsky(-x) + lobachevsky(x)).abs() <= 1e-12,
            "odd at {x}"
        );
        assert!(
            (lobachevsky(x + PI) - lobachevsky(x)).abs() <= 1e-12,
            "periodic at {x}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn products_are_isometry_invariant(t in lorentz_transform(), n in 3usize..=12) {
        prop_assert_eq!(t.isometry_defect(), 0.0);
        prop_assert!(t.is_orthochronous());
        let p = antiprism(n).unwrap();
        let r = realize(&p);
        let moved = r.transformed(&t);
        let (g0, g1) = (gram(&p, &r).unwrap(), gram(&p, &moved).unwrap());
        for i in 0..g0.size() {
            for j in 0..g0.size() {
                prop_assert!((g0.get(i, j) - g1.get(i, j)).abs() <= 1e-12);
            }
        }
        // Rays are projective and stored with x0 = 1, so the image of ray
        // `a` is `T a / s` with `s = (T a)_0`, and its product with `T e` is
        // `(e, a) / s`. Products are taken in double-double so the check
        // adds no rounding of its own.
        for (v, (a, b)) in r.vertex_rays.iter().zip(&moved.vertex_rays).enumerate() {
            let scale = t.apply_dd(&a.0.map(Dd::from))[0];
            for (f, (e, e2)) in r.normals.iter().zip(&moved.normals).enumerate() {
                let (d0, d1) = ((Dd::from(dot_dd(e, a)) / scale).to_f64(), dot_dd(e2, b));
                prop_assert!((d0 - d1).abs() <= 1e-12, "vertex {} face {}: {} vs {}", v, f, d0, d1);
            }
        }
    }
}
