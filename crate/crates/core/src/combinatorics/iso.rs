use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::polytope::CombinatorialPolytope;

/// A combinatorial equivalence `P1 -> P2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isomorphism {
    /// `face_map[f]` is the image in `P2` of face `f` of `P1`.
    pub face_map: Vec<usize>,
    /// `vertex_map[v]` is the image in `P2` of vertex `v` of `P1`.
    pub vertex_map: Vec<usize>,
    /// Whether the map reverses orientation.
    pub reversing: bool,
}

impl Isomorphism {
    /// Check that the maps are bijections carrying every face cycle of `p1`
    /// onto the corresponding face cycle of `p2`, up to rotation and, for
    /// reversing maps, reflection.
    pub fn verify(&self, p1: &CombinatorialPolytope, p2: &CombinatorialPolytope) -> bool {
        if self.face_map.len() != p1.face_count()
            || self.vertex_map.len() != p1.vertex_count()
            || p1.face_count() != p2.face_count()
            || p1.vertex_count() != p2.vertex_count()
            || !is_permutation(&self.face_map)
            || !is_permutation(&self.vertex_map)
        {
            return false;
        }
        (0..p1.face_count()).all(|f| {
            let mut image: Vec<usize> = p1.face(f).iter().map(|&v| self.vertex_map[v]).collect();
            if self.reversing {
                image.reverse();
            }
            same_cycle(&image, p2.face(self.face_map[f]))
        })
    }
}

fn is_permutation(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter()
        .all(|&x| x < map.len() && !std::mem::replace(&mut seen[x], true))
}

fn same_cycle(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && (0..b.len()).any(|r| (0..a.len()).all(|j| a[j] == b[(j + r) % b.len()]))
}

/// Result of a breadth-first traversal of the face map from one dart.
struct Traversal {
    code: Vec<usize>,
    /// Faces in discovery order, each with the index its cycle was entered at.
    order: Vec<(usize, usize)>,
}

/// Walk the dual map from the dart `face[start] -> face[start + 1]` of face
/// `f0`. Each face is read starting from the dart it was entered through;
/// the code lists, face by face, the length followed by the discovery labels
/// of its neighbors in cyclic order. Two traversals produce equal codes iff
/// there is an orientation-preserving equivalence taking one starting dart
/// to the other.
fn traverse(p: &CombinatorialPolytope, f0: usize, start: usize) -> Traversal {
    let n = p.face_count();
    let mut label = vec![usize::MAX; n];
    let mut entry = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let mut code = Vec::with_capacity(2 * p.edge_count() + n);
    let mut queue = VecDeque::from([f0]);
    label[f0] = 0;
    entry[f0] = start;
    let mut next = 1;
    while let Some(f) = queue.pop_front() {
        let face = p.face(f);
        let len = face.len();
        order.push((f, entry[f]));
        code.push(len);
        for t in 0..len {
            let j = (entry[f] + t) % len;
            let g = p.face_neighbors(f)[j];
            if label[g] == usize::MAX {
                label[g] = next;
                next += 1;
                // Enter g through the reverse dart face[j + 1] -> face[j].
                let u = face[(j + 1) % len];
                entry[g] = p.face(g).iter().position(|&x| x == u).expect("shared edge");
                queue.push_back(g);
            }
            code.push(label[g]);
        }
    }
    Traversal { code, order }
}

/// Canonical code: the lexicographically least traversal code over all
/// starting darts and both orientations. Equal codes mean isomorphic.
pub fn canonical_code(p: &CombinatorialPolytope) -> Vec<usize> {
    let mirror = p.mirrored();
    [p, &mirror]
        .into_iter()
        .flat_map(|q| {
            (0..q.face_count())
                .flat_map(move |f| (0..q.face(f).len()).map(move |j| traverse(q, f, j).code))
        })
        .min()
        .expect("nonempty polytope")
}

/// Find a combinatorial equivalence from `p1` to `p2`, allowing reversal of
/// orientation.
pub fn isomorphism(p1: &CombinatorialPolytope, p2: &CombinatorialPolytope) -> Option<Isomorphism> {
    if p1.face_count() != p2.face_count()
        || p1.vertex_count() != p2.vertex_count()
        || p1.edge_count() != p2.edge_count()
    {
        return None;
    }
    let reference = traverse(p1, 0, 0);
    let mirror = p2.mirrored();
    for (q, reversing) in [(p2, false), (&mirror, true)] {
        for f in 0..q.face_count() {
            if q.face(f).len() != p1.face(0).len() {
                continue;
            }
            for j in 0..q.face(f).len() {
                let t = traverse(q, f, j);
                if t.code != reference.code {
                    continue;
                }
                let mut face_map = vec![0; p1.face_count()];
                let mut vertex_map = vec![0; p1.vertex_count()];
                for (&(a, sa), &(b, sb)) in reference.order.iter().zip(&t.order) {
                    face_map[a] = b;
                    let (fa, fb) = (p1.face(a), q.face(b));
                    for s in 0..fa.len() {
                        vertex_map[fa[(sa + s) % fa.len()]] = fb[(sb + s) % fb.len()];
                    }
                }
                // Mirroring keeps face indices and vertex ids, so the maps
                // into the mirror are maps into p2.
                let iso = Isomorphism {
                    face_map,
                    vertex_map,
                    reversing,
                };
                debug_assert!(iso.verify(p1, p2));
                return Some(iso);
            }
        }
    }
    None
}

pub fn is_isomorphic(p1: &CombinatorialPolytope, p2: &CombinatorialPolytope) -> bool {
    isomorphism(p1, p2).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::build::{antiprism, cube, prism, tetrahedron};
    use crate::combinatorics::surgery::{glue_antiprisms, twisted_antiprism};

    #[test]
    fn reflexive_with_identity_like_witness() {
        let a = antiprism(5).unwrap();
        let iso = isomorphism(&a, &a).unwrap();
        assert!(iso.verify(&a, &a));
    }

    #[test]
    fn different_counts_are_not_isomorphic() {
        assert!(!is_isomorphic(&antiprism(3).unwrap(), &cube()));
        assert!(!is_isomorphic(&tetrahedron(), &cube()));
    }

    #[test]
    fn same_counts_different_structure() {
        // equal vertex counts
        assert!(!is_isomorphic(&antiprism(4).unwrap(), &prism(4).unwrap()));
        let t = twisted_antiprism(8, 3).unwrap();
        let u = twisted_antiprism(8, 4).unwrap();
        assert_eq!(
            (t.vertex_count(), t.face_count()),
            (u.vertex_count(), u.face_count())
        );
        assert!(!is_isomorphic(&t, &u));
    }

    #[test]
    fn mirror_image_is_isomorphic() {
        let t = twisted_antiprism(7, 3).unwrap();
        let m = t.mirrored();
        let iso = isomorphism(&t, &m).unwrap();
        assert!(iso.verify(&t, &m));
    }

    #[test]
    fn twist_equals_glue_small_cases() {
        for (n, k) in [(4, 3), (5, 3), (6, 4), (6, 3), (8, 5)] {
            let t = twisted_antiprism(n, k).unwrap();
            let g = glue_antiprisms(k, n - k + 2).unwrap();
            let iso = isomorphism(&t, &g).unwrap_or_else(|| panic!("A_{n},{k}"));
            assert!(iso.verify(&t, &g));
        }
    }

    #[test]
    fn canonical_code_is_relabeling_invariant() {
        let a = twisted_antiprism(6, 4).unwrap();
        let n = a.vertex_count();
        let perm: Vec<usize> = (0..n).map(|v| (v * 5 + 3) % n).collect();
        let order: Vec<usize> = (0..a.face_count()).rev().collect();
        let rot: Vec<usize> = (0..a.face_count()).collect();
        let b = a.relabeled(&perm, &order, &rot).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        assert!(is_isomorphic(&a, &b));
    }
}
