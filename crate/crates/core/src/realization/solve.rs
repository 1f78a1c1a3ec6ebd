//! Gauss-Newton on the Gram constraints, followed by iterative refinement
//! in double-double arithmetic.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{DMatrix, DVector, SVD};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::CombinatorialPolytope;
use crate::dd::Dd;
use crate::lorentz::{LorentzTransform, LorentzVector};

pub(super) trait Scalar:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self> + From<f64>
{
}

impl Scalar for f64 {}
impl Scalar for Dd {}

pub(super) fn ldot<S: Scalar>(a: &[S; 4], b: &[S; 4]) -> S {
    -(a[0] * b[0]) + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

/// The prescribed products `(e_i, e_j) = target`: unit norms, right angles
/// between adjacent faces and tangency at ideal vertices.
pub(super) struct Constraints {
    rows: Vec<(usize, usize, f64)>,
}

impl Constraints {
    pub(super) fn new(p: &CombinatorialPolytope) -> Self {
        let mut rows: Vec<(usize, usize, f64)> = (0..p.face_count()).map(|f| (f, f, 1.0)).collect();
        for e in p.edges() {
            let [f, g] = p.edge_faces(*e).expect("edge");
            rows.push((f.min(g), f.max(g), 0.0));
        }
        for (_, f, g) in p.opposite_pairs() {
            rows.push((f, g, -1.0));
        }
        Constraints { rows }
    }

    pub(super) fn residual<S: Scalar>(&self, e: &[[S; 4]]) -> Vec<S> {
        self.rows
            .iter()
            .map(|&(i, j, t)| ldot(&e[i], &e[j]) - S::from(t))
            .collect()
    }
}

/// Which coordinates are free. Face `f0` is pinned to `(0, 0, 0, 1)` and
/// face `f1` to the `x2 x3`-plane; one boost along `x1` remains, so the
/// Jacobian has a one-dimensional kernel and steps are taken minimum-norm.
struct Layout {
    index: Vec<[Option<usize>; 4]>,
    count: usize,
}

impl Layout {
    fn new(face_count: usize, f0: usize, f1: usize) -> Self {
        let mut count = 0;
        let index = (0..face_count)
            .map(|f| {
                std::array::from_fn(|c| {
                    if f == f0 || (f == f1 && c < 2) {
                        None
                    } else {
                        count += 1;
                        Some(count - 1)
                    }
                })
            })
            .collect();
        Layout { index, count }
    }
}

fn jacobian(cons: &Constraints, layout: &Layout, e: &[[f64; 4]]) -> DMatrix<f64> {
    let mut j = DMatrix::zeros(cons.rows.len(), layout.count);
    for (row, &(a, b, _)) in cons.rows.iter().enumerate() {
        // d(e_a, e_b)/d e_a = J e_b, and symmetrically.
        for (x, y) in [(a, b), (b, a)] {
            for c in 0..4 {
                if let Some(col) = layout.index[x][c] {
                    let g = if c == 0 { -e[y][0] } else { e[y][c] };
                    j[(row, col)] += g;
                }
            }
        }
    }
    j
}

fn max_abs<S: Scalar + Into<f64>>(r: &[S]) -> f64 {
    r.iter()
        .map(|&x| Into::<f64>::into(x).abs())
        .fold(0.0, f64::max)
}

fn min_norm_step(j: &DMatrix<f64>, r: &[f64]) -> Option<DVector<f64>> {
    let svd = SVD::new(j.clone(), true, true);
    let smax = svd.singular_values.max();
    let rhs = DVector::from_iterator(r.len(), r.iter().map(|x| -x));
    svd.solve(&rhs, smax * 1e-10).ok()
}

fn apply_step<S: Scalar>(e: &mut [[S; 4]], layout: &Layout, step: &DVector<f64>) {
    for (f, idx) in layout.index.iter().enumerate() {
        for c in 0..4 {
            if let Some(k) = idx[c] {
                e[f][c] = e[f][c] + S::from(step[k]);
            }
        }
    }
}

pub(super) struct Solved {
    pub normals: Vec<[f64; 4]>,
    pub precise: Vec<[Dd; 4]>,
    pub iterations: usize,
    pub residual: f64,
}

/// Move `normals` into the pinned frame: `f0` to `(0, 0, 0, 1)`, `f1` to
/// `(0, 0, 1, 0)`, the timelike axis through the centroid of `rays`, and the
/// ray with the largest `|x1|` on the positive side.
pub(super) fn gauge(
    normals: &[LorentzVector],
    rays: &[LorentzVector],
    f0: usize,
    f1: usize,
) -> Vec<LorentzVector> {
    let u3 = normals[f0];
    let u2 = normals[f1];
    let n = rays.len() as f64;
    let centroid = rays
        .iter()
        .fold(LorentzVector::default(), |acc, r| acc + *r)
        * (1.0 / n);
    let strip = |x: LorentzVector| x - u3 * x.dot(&u3) - u2 * x.dot(&u2);
    let mut u0 = strip(centroid).normalized();
    if u0[0] < 0.0 {
        u0 = -u0;
    }
    let u1 = (0..4)
        .map(|i| {
            let mut b = [0.0; 4];
            b[i] = 1.0;
            let b = LorentzVector(b);
            strip(b) + u0 * b.dot(&u0)
        })
        .max_by(|a, b| a.norm_sq().total_cmp(&b.norm_sq()))
        .expect("four candidates")
        .normalized();
    let t = LorentzTransform::from_frame(&[u0, u1, u2, u3]);
    let mut out: Vec<LorentzVector> = normals.iter().map(|e| t.apply(e)).collect();
    let pivot = rays
        .iter()
        .map(|r| t.apply(r))
        .max_by(|a, b| a[1].abs().total_cmp(&b[1].abs()))
        .expect("rays");
    if pivot[1] < 0.0 {
        for e in &mut out {
            e.0[1] = -e.0[1];
        }
    }
    out[f0] = LorentzVector::new(0.0, 0.0, 0.0, 1.0);
    out[f1] = LorentzVector::new(0.0, 0.0, 1.0, 0.0);
    out
}

/// Refine gauged normals. `jitter` perturbs the free coordinates first.
pub(super) fn newton(
    p: &CombinatorialPolytope,
    start: &[LorentzVector],
    f0: usize,
    f1: usize,
    max_iterations: usize,
    jitter: Option<(u64, f64)>,
) -> Solved {
    let cons = Constraints::new(p);
    let layout = Layout::new(p.face_count(), f0, f1);
    let mut e: Vec<[f64; 4]> = start.iter().map(|v| v.0).collect();
    if let Some((seed, scale)) = jitter {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (f, idx) in layout.index.iter().enumerate() {
            for c in 0..4 {
                if idx[c].is_some() {
                    e[f][c] += scale * rng.gen_range(-1.0..1.0);
                }
            }
        }
    }

    let mut best = (f64::INFINITY, e.clone());
    let mut iterations = 0;
    for it in 0..max_iterations {
        let r = cons.residual(&e);
        let res = max_abs(&r);
        // Stop at the rounding floor: once converged, a step that no longer
        // halves the residual means f64 has nothing left to give.
        let stalled = res < 1e-9 && res > 0.5 * best.0;
        if res < best.0 {
            best = (res, e.clone());
        }
        iterations = it + 1;
        if res < 1e-15 || stalled {
            break;
        }
        let Some(step) = min_norm_step(&jacobian(&cons, &layout, &e), &r) else {
            break;
        };
        apply_step(&mut e, &layout, &step);
    }
    let e = best.1;

    // Residuals in double-double, corrections from the f64 Jacobian.
    let mut precise: Vec<[Dd; 4]> = e.iter().map(|v| v.map(Dd::from_f64)).collect();
    let j = jacobian(&cons, &layout, &e);
    for _ in 0..12 {
        let r = cons.residual(&precise);
        if max_abs(&r) < 1e-30 {
            break;
        }
        let r64: Vec<f64> = r.iter().map(|x| x.to_f64()).collect();
        match min_norm_step(&j, &r64) {
            Some(step) => apply_step(&mut precise, &layout, &step),
            None => break,
        }
    }
    let normals: Vec<[f64; 4]> = precise.iter().map(|v| v.map(Dd::to_f64)).collect();
    let residual = max_abs(&cons.residual(&normals));
    Solved {
        normals,
        precise,
        iterations,
        residual,
    }
}

/// Largest `(ray_v, e_f)` over vertices `v` not on face `f`; negative iff
/// every vertex lies strictly inside every other face's half-space.
pub(super) fn convexity_margin(
    p: &CombinatorialPolytope,
    normals: &[LorentzVector],
    rays: &[LorentzVector],
) -> f64 {
    let mut worst = f64::NEG_INFINITY;
    for (v, ray) in rays.iter().enumerate() {
        for (f, e) in normals.iter().enumerate() {
            if !p.face(f).contains(&v) {
                worst = worst.max(ray.dot(e));
            }
        }
    }
    worst
}

/// Smallest such product: positive iff every vertex is on the wrong side.
pub(super) fn inverted_margin(
    p: &CombinatorialPolytope,
    normals: &[LorentzVector],
    rays: &[LorentzVector],
) -> f64 {
    -convexity_margin(p, &normals.iter().map(|e| -*e).collect::<Vec<_>>(), rays)
}
