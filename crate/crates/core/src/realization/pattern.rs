//! Initial normals from the orthogonal circle pattern of the polytope.
//!
//! Send one ideal vertex to infinity in the upper half-space model. Its four
//! faces become lines, every other face a circle on the plane at infinity.
//! Adjacent faces give orthogonal circles and the two faces opposite at an
//! ideal vertex give tangent ones, so the radii are pinned down by requiring
//! that the lenses around each circle fill the full angle `2 pi`.

use std::collections::VecDeque;
use std::f64::consts::PI;

use crate::combinatorics::CombinatorialPolytope;
use crate::error::{Error, Result};
use crate::lorentz::LorentzVector;

const MAX_SWEEPS: usize = 200_000;
// Newton polishes the result, so the pattern need not be exact.
const ANGLE_TOL: f64 = 1e-10;

/// Angle at the center of a circle of radius `rc` subtended by the lens it
/// shares with an orthogonal circle of radius `rd`, halved.
fn half_angle(rc: f64, rd: Option<f64>) -> f64 {
    match rd {
        Some(rd) => (rd / rc).atan(),
        None => PI / 2.0,
    }
}

/// Normals of the circle pattern with `apex` sent to infinity.
pub(super) fn circle_pattern(p: &CombinatorialPolytope, apex: usize) -> Result<Vec<LorentzVector>> {
    let nf = p.face_count();
    let mut is_line = vec![false; nf];
    for &f in p.faces_at_vertex(apex) {
        is_line[f] = true;
    }
    let finite: Vec<usize> = (0..nf).filter(|&f| !is_line[f]).collect();
    let radius_of = |r: &[f64], d: usize| (!is_line[d]).then(|| r[d]);

    // Gauss-Seidel on the angle sums; each circle's radius is found by
    // bisection in log r, the angle sum being decreasing in r.
    let mut r = vec![1.0f64; nf];
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut err = 0.0f64;
        for &c in &finite {
            let total = |rc: f64, r: &[f64]| -> f64 {
                p.face_neighbors(c)
                    .iter()
                    .map(|&d| 2.0 * half_angle(rc, radius_of(r, d)))
                    .sum()
            };
            err = err.max((total(r[c], &r) - 2.0 * PI).abs());
            let (mut lo, mut hi) = (r[c].ln() - 8.0, r[c].ln() + 8.0);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if total(mid.exp(), &r) > 2.0 * PI {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            r[c] = (0.5 * (lo + hi)).exp();
        }
        if err < ANGLE_TOL {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Solver {
            iterations: MAX_SWEEPS,
            best_residual: f64::NAN,
        });
    }

    // Lay the circles out breadth first. Around circle c, the neighbor
    // across dart j sits at angle a_j, with consecutive angles separated by
    // the two half lenses.
    let mut center: Vec<Option<[f64; 2]>> = vec![None; nf];
    let mut entry = vec![(0usize, 0.0f64); nf];
    let mut line: Vec<Option<([f64; 2], f64)>> = vec![None; nf];
    let c0 = finite[0];
    center[c0] = Some([0.0, 0.0]);
    let mut queue = VecDeque::from([c0]);
    while let Some(c) = queue.pop_front() {
        let cc = center[c].expect("placed");
        let nb = p.face_neighbors(c);
        let m = nb.len();
        let (k, a0) = entry[c];
        let mut angles = vec![0.0; m];
        let mut a = a0;
        for t in 0..m {
            let j = (k + t) % m;
            if t > 0 {
                let prev = nb[(j + m - 1) % m];
                a += half_angle(r[c], radius_of(&r, prev)) + half_angle(r[c], radius_of(&r, nb[j]));
            }
            angles[j] = a;
        }
        for (j, &d) in nb.iter().enumerate() {
            let u = [angles[j].cos(), angles[j].sin()];
            if is_line[d] {
                if line[d].is_none() {
                    line[d] = Some((u, u[0] * cc[0] + u[1] * cc[1]));
                }
            } else if center[d].is_none() {
                let dist = r[c].hypot(r[d]);
                center[d] = Some([cc[0] + dist * u[0], cc[1] + dist * u[1]]);
                let back = p
                    .face_neighbors(d)
                    .iter()
                    .position(|&x| x == c)
                    .expect("symmetric");
                entry[d] = (back, angles[j] + PI);
                queue.push_back(d);
            }
        }
    }

    (0..nf)
        .map(|f| {
            if is_line[f] {
                let (u, s) =
                    line[f].ok_or_else(|| Error::domain("line face not reached by layout"))?;
                Ok(LorentzVector::new(s, u[0], u[1], s))
            } else {
                let c = center[f].ok_or_else(|| Error::domain("circle not reached by layout"))?;
                let rr = r[f];
                let q = c[0] * c[0] + c[1] * c[1];
                Ok(LorentzVector::new(
                    (q - rr * rr + 1.0) / (2.0 * rr),
                    c[0] / rr,
                    c[1] / rr,
                    (q - rr * rr - 1.0) / (2.0 * rr),
                ))
            }
        })
        .collect()
}
