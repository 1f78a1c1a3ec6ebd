use std::collections::HashMap;

use super::build::antiprism;
use super::polytope::{CombinatorialPolytope, Edge};
use crate::error::{Error, Result};

/// Follow the cycle of `face` from `start` to `end`, inclusive.
fn arc(face: &[usize], start: usize, end: usize) -> Vec<usize> {
    let n = face.len();
    let mut j = face
        .iter()
        .position(|&x| x == start)
        .expect("start on face");
    let mut out = vec![start];
    while face[j] != end {
        j = (j + 1) % n;
        out.push(face[j]);
    }
    out
}

/// Edge twist: remove two disjoint edges of a common face, add a vertex and
/// join it to the four endpoints.
///
/// With the face read as `a -> b ... c -> d ... a` (`e1 = ab`, `e2 = cd`),
/// the common face and the two faces across `e1` and `e2` are replaced by
/// the four faces `[a .. b, w]`, `[b .. c, w]`, `[c .. d, w]`, `[d .. a, w]`,
/// where `w` is the new vertex (id `V`).
pub fn edge_twist(p: &CombinatorialPolytope, e1: Edge, e2: Edge) -> Result<CombinatorialPolytope> {
    if !p.has_edge(e1) || !p.has_edge(e2) {
        return Err(Error::domain("twist edges must be edges of the polytope"));
    }
    if e1.touches(&e2) {
        return Err(Error::domain(format!(
            "twist edges {}-{} and {}-{} are not disjoint",
            e1.a, e1.b, e2.a, e2.b
        )));
    }
    let f1 = p.edge_faces(e1).expect("edge exists");
    let f2 = p.edge_faces(e2).expect("edge exists");
    let common = f1
        .iter()
        .find(|f| f2.contains(f))
        .copied()
        .ok_or_else(|| Error::domain("twist edges do not lie on a common face"))?;

    let face = p.face(common);
    let oriented = |e: Edge| {
        if p.face_of_dart(e.a, e.b) == Some(common) {
            (e.a, e.b)
        } else {
            (e.b, e.a)
        }
    };
    let (a, b) = oriented(e1);
    let (c, d) = oriented(e2);
    let across1 = p.face_of_dart(b, a).expect("two-sided edge");
    let across2 = p.face_of_dart(d, c).expect("two-sided edge");
    let w = p.vertex_count();

    let with_w = |mut v: Vec<usize>| {
        v.push(w);
        v
    };
    let side_ab = with_w(arc(p.face(across1), a, b));
    let side_bc = with_w(arc(face, b, c));
    let side_cd = with_w(arc(p.face(across2), c, d));
    let side_da = with_w(arc(face, d, a));

    let mut faces = p.faces().to_vec();
    faces[common] = side_bc;
    faces[across1] = side_ab;
    faces[across2] = side_cd;
    faces.push(side_da);
    CombinatorialPolytope::new(w + 1, faces)
}

/// The twisted antiprism `A_{n,k}`: twist the top `n`-gon of `A_n` at the
/// edges `0 -> 1` and `k-1 -> k`, which leaves `k - 2` edges between them.
pub fn twisted_antiprism(n: usize, k: usize) -> Result<CombinatorialPolytope> {
    if n < 4 || k < 3 || k > n / 2 + 1 {
        return Err(Error::domain(format!(
            "twist placement needs n >= 4 and 3 <= k <= n/2 + 1, got n = {n}, k = {k}"
        )));
    }
    let a = antiprism(n)?;
    edge_twist(&a, Edge::new(0, 1), Edge::new(k - 1, k % n))
}

/// Glue `p2` to `p1` along faces `f1` and `f2`.
///
/// `matching` pairs each vertex of `f1` with a vertex of `f2`; it must
/// reverse cyclic order, since the two pieces sit on opposite sides of the
/// interface. For every interface edge the two faces meeting it from either
/// side are merged into one face (right dihedral angles add up to a straight
/// angle); the interface faces themselves disappear.
///
/// Vertices of `p1` keep their ids. Vertices of `p2` off the interface are
/// renumbered from `p1.vertex_count()` upwards in increasing order.
pub fn glue(
    p1: &CombinatorialPolytope,
    f1: usize,
    p2: &CombinatorialPolytope,
    f2: usize,
    matching: &[(usize, usize)],
) -> Result<CombinatorialPolytope> {
    if f1 >= p1.face_count() || f2 >= p2.face_count() {
        return Err(Error::domain("interface face index out of range"));
    }
    let cyc1 = p1.face(f1);
    let cyc2 = p2.face(f2);
    if cyc1.len() != cyc2.len() {
        return Err(Error::domain(format!(
            "interface faces have {} and {} sides",
            cyc1.len(),
            cyc2.len()
        )));
    }
    let m = cyc1.len();
    let map: HashMap<usize, usize> = matching.iter().copied().collect();
    if matching.len() != m || map.len() != m || cyc1.iter().any(|v| !map.contains_key(v)) {
        return Err(Error::domain(
            "matching must pair every vertex of the first interface face exactly once",
        ));
    }
    let image: Vec<usize> = cyc1.iter().map(|v| map[v]).collect();
    let reversed: Vec<usize> = cyc2.iter().rev().copied().collect();
    let rotation_ok = (0..m).any(|r| (0..m).all(|j| image[j] == reversed[(j + r) % m]));
    if !rotation_ok {
        return Err(Error::domain(
            "matching must be an orientation-reversing bijection of the interface cycles",
        ));
    }

    // Identify p2's vertices with the glued vertex set.
    let inverse: HashMap<usize, usize> = matching.iter().map(|&(a, b)| (b, a)).collect();
    let mut relabel = vec![usize::MAX; p2.vertex_count()];
    let mut next = p1.vertex_count();
    for (v, slot) in relabel.iter_mut().enumerate() {
        *slot = match inverse.get(&v) {
            Some(&u) => u,
            None => {
                next += 1;
                next - 1
            }
        };
    }
    let mapped2: Vec<Vec<usize>> = p2
        .faces()
        .iter()
        .map(|f| f.iter().map(|&v| relabel[v]).collect())
        .collect();

    let mut faces: Vec<Vec<usize>> = Vec::new();
    let mut merged_into: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut consumed2 = vec![false; p2.face_count()];
    consumed2[f2] = true;
    for j in 0..m {
        let (x, y) = (cyc1[j], cyc1[(j + 1) % m]);
        let g1 = p1.face_of_dart(y, x).expect("interface edge is two-sided");
        // After identification p2's face across the interface carries x -> y.
        let g2 = p2
            .face_of_dart(map[&x], map[&y])
            .expect("interface edge is two-sided");
        consumed2[g2] = true;
        let first = arc(p1.face(g1), x, y);
        let second = arc(&mapped2[g2], y, x);
        let mut cycle = first;
        cycle.extend_from_slice(&second[1..second.len() - 1]);
        merged_into.insert(g1, cycle);
    }
    for (i, f) in p1.faces().iter().enumerate() {
        if i == f1 {
            continue;
        }
        faces.push(merged_into.remove(&i).unwrap_or_else(|| f.clone()));
    }
    for (i, f) in mapped2.into_iter().enumerate() {
        if !consumed2[i] {
            faces.push(f);
        }
    }
    CombinatorialPolytope::new(next, faces)
}

/// Glue `A_k` and `A_m` along a triangle, matching the triangle apex on one
/// side with the apex on the other.
///
/// The interface in both is face 2, the triangle `(1, 0, n)` hanging from the
/// top edge `0 -> 1` with apex `n` on the bottom `n`-gon.
pub fn glue_antiprisms(k: usize, m: usize) -> Result<CombinatorialPolytope> {
    let a = antiprism(k)?;
    let b = antiprism(m)?;
    // (1, 0, k) must map onto the reversal of (1, 0, m), i.e. onto (0, 1, m).
    glue(&a, 2, &b, 2, &[(1, 0), (0, 1), (k, m)])
}
