use super::polytope::CombinatorialPolytope;
use crate::error::{Error, Result};

/// The `n`-antiprism `A_n`.
///
/// Vertices `0..n` run around the top `n`-gon (face 0), vertices `n..2n`
/// around the bottom `n`-gon (face 1), with bottom vertex `n + i` sitting
/// between top vertices `i` and `i + 1`. Faces `2 + 2i` are the triangles
/// `(i + 1, i, n + i)` hanging from the top edge `i -> i + 1`; faces
/// `3 + 2i` are the triangles `(n + i, i, n + i - 1)` standing on the
/// bottom edge.
pub fn antiprism(n: usize) -> Result<CombinatorialPolytope> {
    if n < 3 {
        return Err(Error::domain(format!("antiprism needs n >= 3, got {n}")));
    }
    let top = |i: usize| i % n;
    let bot = |i: usize| n + (i % n);
    let mut faces = Vec::with_capacity(2 * n + 2);
    faces.push((0..n).collect());
    faces.push((0..n).rev().map(bot).collect());
    for i in 0..n {
        faces.push(vec![top(i + 1), top(i), bot(i)]);
        faces.push(vec![bot(i), top(i), bot(i + n - 1)]);
    }
    CombinatorialPolytope::new(2 * n, faces)
}

pub fn tetrahedron() -> CombinatorialPolytope {
    CombinatorialPolytope::new(
        4,
        vec![vec![0, 2, 1], vec![0, 1, 3], vec![1, 2, 3], vec![0, 3, 2]],
    )
    .expect("tetrahedron")
}

pub fn triangular_prism() -> CombinatorialPolytope {
    prism(3).expect("triangular prism")
}

pub fn cube() -> CombinatorialPolytope {
    prism(4).expect("cube")
}

/// The `n`-gonal prism; `prism(4)` is the cube. Faces 0 and 1 are the caps,
/// faces `2..n + 2` the lateral quadrilaterals in order.
pub fn prism(n: usize) -> Result<CombinatorialPolytope> {
    if n < 3 {
        return Err(Error::domain(format!("prism needs n >= 3, got {n}")));
    }
    let mut faces = vec![
        (0..n).collect::<Vec<_>>(),
        (0..n).rev().map(|i| n + i).collect(),
    ];
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![j, i, n + i, n + j]);
    }
    CombinatorialPolytope::new(2 * n, faces)
}

/// Pyramid over an `n`-gon; the apex has valence `n`.
pub fn pyramid(n: usize) -> Result<CombinatorialPolytope> {
    if n < 3 {
        return Err(Error::domain(format!("pyramid needs n >= 3, got {n}")));
    }
    let mut faces = vec![(0..n).rev().collect::<Vec<_>>()];
    for i in 0..n {
        faces.push(vec![i, (i + 1) % n, n]);
    }
    CombinatorialPolytope::new(n + 1, faces)
}
