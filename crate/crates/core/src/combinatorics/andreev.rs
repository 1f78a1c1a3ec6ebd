use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::build::{tetrahedron, triangular_prism};
use super::iso::is_isomorphic;
use super::polytope::{CombinatorialPolytope, Edge};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ForbiddenShape {
    Tetrahedron,
    TriangularPrism,
}

/// A failed realizability condition together with the faces, edges or
/// vertex that make it fail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Condition (1).
    Forbidden { shape: ForbiddenShape },
    /// Condition (2): a vertex lying in more than four faces.
    HighValence { vertex: usize, faces: Vec<usize> },
    /// Condition (3): `f` meets `f1` and `f2` in disjoint edges, yet `f1`
    /// and `f2` intersect.
    BadTriple {
        f: usize,
        f1: usize,
        f2: usize,
        e1: Edge,
        e2: Edge,
    },
    /// Condition (4): a cyclic 4-chain of faces whose consecutive common
    /// edges are pairwise disjoint.
    PrismaticFour { faces: [usize; 4], edges: [Edge; 4] },
}

impl Violation {
    /// Index of the violated condition, 1 to 4.
    pub fn condition(&self) -> u8 {
        match self {
            Violation::Forbidden { .. } => 1,
            Violation::HighValence { .. } => 2,
            Violation::BadTriple { .. } => 3,
            Violation::PrismaticFour { .. } => 4,
        }
    }

    /// Re-evaluate the witness against `p` from scratch.
    pub fn recheck(&self, p: &CombinatorialPolytope) -> bool {
        let edge_between = |f: usize, g: usize, e: &Edge| {
            f < p.face_count() && g < p.face_count() && p.shared_edge(f, g) == Some(*e)
        };
        match self {
            Violation::Forbidden { shape } => {
                let model = match shape {
                    ForbiddenShape::Tetrahedron => tetrahedron(),
                    ForbiddenShape::TriangularPrism => triangular_prism(),
                };
                is_isomorphic(p, &model)
            }
            Violation::HighValence { vertex, faces } => {
                *vertex < p.vertex_count()
                    && faces.len() > 4
                    && faces
                        .iter()
                        .all(|&f| f < p.face_count() && p.face(f).contains(vertex))
                    && faces.iter().collect::<BTreeSet<_>>().len() == faces.len()
            }
            Violation::BadTriple { f, f1, f2, e1, e2 } => {
                edge_between(*f, *f1, e1)
                    && edge_between(*f, *f2, e2)
                    && !e1.touches(e2)
                    && p.faces_meet(*f1, *f2)
            }
            Violation::PrismaticFour { faces, edges } => {
                let distinct = faces.iter().collect::<BTreeSet<_>>().len() == 4;
                let chain = (0..4).all(|i| edge_between(faces[i], faces[(i + 1) % 4], &edges[i]));
                let disjoint = (0..4).all(|i| (i + 1..4).all(|j| !edges[i].touches(&edges[j])));
                distinct && chain && disjoint
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AndreevVerdict {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl AndreevVerdict {
    pub fn violated_conditions(&self) -> BTreeSet<u8> {
        self.violations.iter().map(Violation::condition).collect()
    }
}

/// Check the four conditions for a finite-volume right-angled realization.
///
/// All violations are reported, each with its witness; 4-circuits are
/// listed once up to rotation and reflection.
pub fn check_andreev(p: &CombinatorialPolytope) -> AndreevVerdict {
    let mut violations = Vec::new();

    if p.face_count() == 4 && is_isomorphic(p, &tetrahedron()) {
        violations.push(Violation::Forbidden {
            shape: ForbiddenShape::Tetrahedron,
        });
    }
    if p.face_count() == 5 && is_isomorphic(p, &triangular_prism()) {
        violations.push(Violation::Forbidden {
            shape: ForbiddenShape::TriangularPrism,
        });
    }

    for v in 0..p.vertex_count() {
        if p.valence(v) > 4 {
            violations.push(Violation::HighValence {
                vertex: v,
                faces: p.faces_at_vertex(v).to_vec(),
            });
        }
    }

    for f in 0..p.face_count() {
        let nbrs = p.face_neighbors(f);
        for (i, &f1) in nbrs.iter().enumerate() {
            for &f2 in &nbrs[i + 1..] {
                let e1 = p.shared_edge(f, f1).expect("neighbor");
                let e2 = p.shared_edge(f, f2).expect("neighbor");
                if !e1.touches(&e2) && p.faces_meet(f1, f2) {
                    violations.push(Violation::BadTriple { f, f1, f2, e1, e2 });
                }
            }
        }
    }

    for f0 in 0..p.face_count() {
        for &f1 in p.face_neighbors(f0) {
            for &f2 in p.face_neighbors(f1) {
                for &f3 in p.face_neighbors(f2) {
                    let faces = [f0, f1, f2, f3];
                    // Emit each circuit once: smallest face first, and the
                    // lower of its two neighbors second.
                    if f0 >= f1.min(f2).min(f3) || f1 > f3 || !p.adjacent(f3, f0) {
                        continue;
                    }
                    if faces.iter().collect::<BTreeSet<_>>().len() < 4 {
                        continue;
                    }
                    let edges: [Edge; 4] = std::array::from_fn(|i| {
                        p.shared_edge(faces[i], faces[(i + 1) % 4]).expect("chain")
                    });
                    if (0..4).all(|i| (i + 1..4).all(|j| !edges[i].touches(&edges[j]))) {
                        violations.push(Violation::PrismaticFour { faces, edges });
                    }
                }
            }
        }
    }

    AndreevVerdict {
        ok: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::build::{antiprism, cube, prism, pyramid};
    use crate::combinatorics::surgery::{glue_antiprisms, twisted_antiprism};

    #[test]
    fn tetrahedron_and_prism_fail_condition_one() {
        let t = check_andreev(&tetrahedron());
        assert!(!t.ok);
        assert!(t.violated_conditions().contains(&1));
        let p = check_andreev(&triangular_prism());
        assert!(p.violated_conditions().contains(&1));
    }

    #[test]
    fn cube_has_lateral_circuit() {
        let c = cube();
        let v = check_andreev(&c);
        assert_eq!(v.violated_conditions(), BTreeSet::from([4]));
        // three belts of four faces each
        assert_eq!(v.violations.len(), 3);
        let lateral = Violation::PrismaticFour {
            faces: [2, 3, 4, 5],
            edges: [
                c.shared_edge(2, 3).unwrap(),
                c.shared_edge(3, 4).unwrap(),
                c.shared_edge(4, 5).unwrap(),
                c.shared_edge(5, 2).unwrap(),
            ],
        };
        assert!(v.violations.contains(&lateral));
        for w in &v.violations {
            assert!(w.recheck(&c));
        }
    }

    #[test]
    fn antiprisms_and_twists_pass() {
        for n in 3..=12 {
            assert!(check_andreev(&antiprism(n).unwrap()).ok, "A_{n}");
        }
        for n in 4..=10 {
            for k in 3..=n / 2 + 1 {
                assert!(
                    check_andreev(&twisted_antiprism(n, k).unwrap()).ok,
                    "A_{n},{k}"
                );
                assert!(check_andreev(&glue_antiprisms(k, n - k + 2).unwrap()).ok);
            }
        }
    }

    #[test]
    fn pyramid_apex_is_too_valent() {
        let p = pyramid(6).unwrap();
        let v = check_andreev(&p);
        assert!(v
            .violations
            .iter()
            .any(|w| matches!(w, Violation::HighValence { vertex: 6, .. })));
        for w in &v.violations {
            assert!(w.recheck(&p), "{w:?}");
        }
    }

    #[test]
    fn triangular_prism_also_has_bad_triple() {
        // A lateral face meets the other two laterals in disjoint edges,
        // and those two share the third lateral edge.
        let p = triangular_prism();
        let v = check_andreev(&p);
        assert!(v.violated_conditions().contains(&3));
        for w in &v.violations {
            assert!(w.recheck(&p), "{w:?}");
        }
    }

    #[test]
    fn pentagonal_prism_has_cap_circuit() {
        let p = prism(5).unwrap();
        let v = check_andreev(&p);
        assert_eq!(v.violated_conditions(), BTreeSet::from([4]));
        assert!(v.violations.iter().all(|w| w.recheck(&p)));
    }

    #[test]
    fn recheck_rejects_forged_witness() {
        let a = antiprism(4).unwrap();
        let forged = Violation::PrismaticFour {
            faces: [0, 2, 1, 3],
            edges: [Edge::new(0, 1); 4],
        };
        assert!(!forged.recheck(&a));
        let forged = Violation::Forbidden {
            shape: ForbiddenShape::Tetrahedron,
        };
        assert!(!forged.recheck(&a));
    }
}
