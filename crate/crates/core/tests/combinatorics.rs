use proptest::prelude::*;
use proptest::sample::subsequence;

use rapoly_core::combinatorics::{
    canonical_code, cube, glue_antiprisms, isomorphism, parse_polytope, prism, pyramid,
    triangular_prism,
};
use rapoly_core::{
    antiprism, check_andreev, edge_twist, is_isomorphic, twisted_antiprism, CombinatorialPolytope,
    Edge,
};

fn euler_and_two_sided(p: &CombinatorialPolytope) {
    let (v, e, f) = (p.vertex_count(), p.edge_count(), p.face_count());
    assert_eq!(v + f, e + 2, "V - E + F = 2");
    for &edge in p.edges() {
        let count = (0..f)
            .filter(|&g| {
                let c = p.face(g);
                (0..c.len()).any(|i| Edge::new(c[i], c[(i + 1) % c.len()]) == edge)
            })
            .count();
        assert_eq!(count, 2, "edge {edge:?} lies on exactly two faces");
    }
}

/// Every generator family used in the workspace.
fn corpus() -> Vec<CombinatorialPolytope> {
    let mut out = vec![cube(), triangular_prism()];
    for n in 3..=12 {
        out.push(antiprism(n).unwrap());
        out.push(prism(n).unwrap());
        out.push(pyramid(n).unwrap());
        for k in 3..=n / 2 + 1 {
            if n >= 4 {
                out.push(twisted_antiprism(n, k).unwrap());
                out.push(glue_antiprisms(k, n - k + 2).unwrap());
            }
        }
    }
    out
}

#[test]
fn generated_polytopes_are_spheres() {
    for p in corpus() {
        euler_and_two_sided(&p);
    }
}

#[test]
fn twist_count_law_for_every_twist() {
    for n in 3..=12 {
        let a = antiprism(n).unwrap();
        let mut twists = 0;
        for f in 0..a.face_count() {
            let face = a.face(f);
            let edges: Vec<Edge> = (0..face.len())
                .map(|i| Edge::new(face[i], face[(i + 1) % face.len()]))
                .collect();
            for (i, &e1) in edges.iter().enumerate() {
                for &e2 in &edges[i + 1..] {
                    if e1.touches(&e2) {
                        continue;
                    }
                    let t = edge_twist(&a, e1, e2).unwrap();
                    assert_eq!(
                        (t.vertex_count(), t.edge_count(), t.face_count()),
                        (a.vertex_count() + 1, a.edge_count() + 2, a.face_count() + 1),
                        "twist of A_{n} at {e1:?}, {e2:?}"
                    );
                    euler_and_two_sided(&t);
                    twists += 1;
                }
            }
        }
        // Only the two n-gons carry disjoint edge pairs: n(n-3)/2 each.
        assert_eq!(twists, n * (n - 3), "twist count on A_{n}");
    }
}

#[test]
fn twisted_antiprisms_decompose_into_antiprisms() {
    for n in 4..=12 {
        for k in 3..=n / 2 + 1 {
            let t = twisted_antiprism(n, k).unwrap();
            let g = glue_antiprisms(k, n - k + 2).unwrap();
            let iso = isomorphism(&t, &g)
                .unwrap_or_else(|| panic!("A_{{{n},{k}}} vs glue(A_{k}, A_{})", n - k + 2));
            assert!(iso.verify(&t, &g));
        }
    }
}

#[test]
fn antiprisms_satisfy_andreev_and_known_failures_are_witnessed() {
    for n in 3..=12 {
        assert!(check_andreev(&antiprism(n).unwrap()).ok, "A_{n}");
    }
    for p in corpus() {
        let verdict = check_andreev(&p);
        assert_eq!(verdict.ok, verdict.violations.is_empty());
        for w in &verdict.violations {
            assert!(w.recheck(&p), "witness {w:?} does not recheck");
        }
    }
}

/// A polytope from the corpus together with a random relabeling.
fn relabeled() -> impl Strategy<Value = (CombinatorialPolytope, CombinatorialPolytope)> {
    let corpus = corpus();
    (0..corpus.len()).prop_flat_map(move |i| {
        let p = corpus[i].clone();
        let (v, f) = (p.vertex_count(), p.face_count());
        (
            Just(p),
            Just((0..v).collect::<Vec<_>>()).prop_shuffle(),
            Just((0..f).collect::<Vec<_>>()).prop_shuffle(),
            proptest::collection::vec(0usize..16, f),
            any::<bool>(),
        )
            .prop_map(|(p, vp, fo, rot, mirror)| {
                let base = if mirror { p.mirrored() } else { p.clone() };
                let q = base.relabeled(&vp, &fo, &rot).unwrap();
                (p, q)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeling_preserves_everything((p, q) in relabeled()) {
        prop_assert!(is_isomorphic(&p, &q));
        prop_assert_eq!(canonical_code(&p), canonical_code(&q));
        let iso = isomorphism(&p, &q).unwrap();
        prop_assert!(iso.verify(&p, &q));
        prop_assert_eq!(check_andreev(&p).ok, check_andreev(&q).ok);
        prop_assert_eq!(check_andreev(&p).violated_conditions(), check_andreev(&q).violated_conditions());
    }

    #[test]
    fn text_format_round_trips((_, q) in relabeled()) {
        let text = q.to_string();
        let back = parse_polytope(&text).unwrap();
        prop_assert_eq!(&back, &q);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn isomorphism_is_an_equivalence(picks in subsequence((0..corpus().len()).collect::<Vec<_>>(), 3), seed in any::<u64>()) {
        let corpus = corpus();
        // Mix in a relabeled copy so that equal classes actually occur.
        let shuffle = |p: &CombinatorialPolytope, salt: u64| {
            let v = p.vertex_count();
            let perm: Vec<usize> = (0..v).map(|i| (i + (seed ^ salt) as usize % v) % v).collect();
            let order: Vec<usize> = (0..p.face_count()).rev().collect();
            p.relabeled(&perm, &order, &[]).unwrap()
        };
        let a = corpus[picks[0]].clone();
        let xs = [a.clone(), shuffle(&a, 1), corpus[picks[1]].clone(), corpus[picks[2]].clone()];
        for x in &xs {
            prop_assert!(is_isomorphic(x, x));
            for y in &xs {
                prop_assert_eq!(is_isomorphic(x, y), is_isomorphic(y, x));
                for z in &xs {
                    if is_isomorphic(x, y) && is_isomorphic(y, z) {
                        prop_assert!(is_isomorphic(x, z));
                    }
                }
            }
        }
        prop_assert!(is_isomorphic(&xs[0], &xs[1]));
    }
}
