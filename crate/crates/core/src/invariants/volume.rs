use serde::{Deserialize, Serialize};

use super::lobachevsky::lobachevsky;
use crate::combinatorics::CombinatorialPolytope;
use crate::error::{Error, Result};
use crate::realization::Realization;

/// Smallest triangle angle accepted before an apex is declared degenerate.
const MIN_ANGLE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdealTetrahedron {
    /// The apex followed by a triangle of the fan.
    pub vertices: [usize; 4],
    /// Dihedral angles at the three edges through the apex.
    pub angles: [f64; 3],
    pub volume: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VolumeReport {
    pub total: f64,
    pub apex: usize,
    pub tetrahedra: Vec<IdealTetrahedron>,
}

/// Points of the sphere at infinity, as unit vectors of `R^3`.
fn boundary_point(r: &Realization, v: usize) -> [f64; 3] {
    let x = r.vertex_rays[v];
    [x[1] / x[0], x[2] / x[0], x[3] / x[0]]
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn unit(a: [f64; 3]) -> [f64; 3] {
    let n = dot3(a, a).sqrt();
    [a[0] / n, a[1] / n, a[2] / n]
}

/// Stereographic projection from `apex` to the plane through the origin
/// orthogonal to it.
struct Projection {
    apex: [f64; 3],
    b1: [f64; 3],
    b2: [f64; 3],
}

impl Projection {
    fn new(apex: [f64; 3]) -> Self {
        let helper = if apex[0].abs() < 0.6 {
            [1.0, 0.0, 0.0]
        } else {
            [0.0, 1.0, 0.0]
        };
        let b1 = unit(cross(apex, helper));
        let b2 = cross(apex, b1);
        Projection { apex, b1, b2 }
    }

    fn apply(&self, x: [f64; 3]) -> [f64; 2] {
        let s = 1.0 - dot3(x, self.apex);
        [dot3(x, self.b1) / s, dot3(x, self.b2) / s]
    }
}

fn triangle_angles(z: [[f64; 2]; 3]) -> [f64; 3] {
    std::array::from_fn(|i| {
        let (a, b, c) = (z[i], z[(i + 1) % 3], z[(i + 2) % 3]);
        let u = [b[0] - a[0], b[1] - a[1]];
        let v = [c[0] - a[0], c[1] - a[1]];
        (u[0] * v[1] - u[1] * v[0])
            .abs()
            .atan2(u[0] * v[0] + u[1] * v[1])
    })
}

/// Volume of an ideal polyhedron from its vertex rays, coning from `apex`.
///
/// Every face away from the apex is split into a fan of triangles; each
/// triangle spans an ideal tetrahedron with the apex. Sending the apex to
/// infinity, that tetrahedron's dihedral angles along the vertical edges are
/// the angles of the projected triangle, and its volume is the sum of their
/// Lobachevsky values.
pub fn volume_with_apex(
    p: &CombinatorialPolytope,
    r: &Realization,
    apex: usize,
) -> Result<VolumeReport> {
    if r.vertex_rays.len() != p.vertex_count() || apex >= p.vertex_count() {
        return Err(Error::domain("vertex rays do not match the polytope"));
    }
    let proj = Projection::new(boundary_point(r, apex));
    let mut tetrahedra = Vec::new();
    for face in p.faces() {
        if face.contains(&apex) {
            continue;
        }
        let w0 = face[0];
        for i in 1..face.len() - 1 {
            let tri = [w0, face[i], face[i + 1]];
            let z = tri.map(|v| proj.apply(boundary_point(r, v)));
            let angles = triangle_angles(z);
            if angles.iter().any(|&a| a < MIN_ANGLE) {
                return Err(Error::Decomposition(format!(
                    "tetrahedron on {tri:?} with apex {apex} is flat"
                )));
            }
            let volume = angles.iter().map(|&a| lobachevsky(a)).sum();
            tetrahedra.push(IdealTetrahedron {
                vertices: [apex, tri[0], tri[1], tri[2]],
                angles,
                volume,
            });
        }
    }
    let total = tetrahedra.iter().map(|t| t.volume).sum();
    Ok(VolumeReport {
        total,
        apex,
        tetrahedra,
    })
}

/// Volume of an ideal polyhedron, coning from the first vertex that gives a
/// non-degenerate decomposition.
pub fn volume_ideal(p: &CombinatorialPolytope, r: &Realization) -> Result<VolumeReport> {
    let mut last = None;
    for apex in 0..p.vertex_count() {
        match volume_with_apex(p, r, apex) {
            Ok(rep) => return Ok(rep),
            Err(e @ Error::Decomposition(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::Decomposition("polytope has no vertices".into())))
}
