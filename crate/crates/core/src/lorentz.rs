//! Vectors and isometries of Minkowski space `R^{3,1}` with the form
//! `(x, y) = -x0 y0 + x1 y1 + x2 y2 + x3 y3`.

use std::ops::{Add, Index, Mul, Neg, Sub};

use nalgebra::Matrix4;
use serde::{Deserialize, Serialize};

use crate::dd::Dd;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct LorentzVector(pub [f64; 4]);

/// Causal type of a vector relative to the form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormClass {
    Spacelike,
    Lightlike,
    Timelike,
}

pub fn lorentz_dot(x: &LorentzVector, y: &LorentzVector) -> f64 {
    let (a, b) = (&x.0, &y.0);
    -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

impl LorentzVector {
    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        LorentzVector([x0, x1, x2, x3])
    }

    pub fn dot(&self, other: &Self) -> f64 {
        lorentz_dot(self, other)
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn classify(&self, tol: f64) -> NormClass {
        let q = self.norm_sq();
        if q > tol {
            NormClass::Spacelike
        } else if q < -tol {
            NormClass::Timelike
        } else {
            NormClass::Lightlike
        }
    }

    /// Rescale to unit norm, `|(x, x)| = 1`. Lightlike vectors are returned unchanged.
    pub fn normalized(&self) -> Self {
        let q = self.norm_sq().abs();
        if q == 0.0 {
            *self
        } else {
            *self * (1.0 / q.sqrt())
        }
    }

    /// Rescale so that `x0 = 1`, the affine chart used for ideal points.
    pub fn projectivized(&self) -> Self {
        *self * (1.0 / self.0[0])
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (0..4)
            .map(|i| (self.0[i] - other.0[i]).abs())
            .fold(0.0, f64::max)
    }
}

impl Index<usize> for LorentzVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for LorentzVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        LorentzVector(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Sub for LorentzVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        LorentzVector(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl Neg for LorentzVector {
    type Output = Self;
    fn neg(self) -> Self {
        LorentzVector(self.0.map(|x| -x))
    }
}

impl Mul<f64> for LorentzVector {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        LorentzVector(self.0.map(|x| x * s))
    }
}

/// A linear map of `R^{3,1}`. Isometries satisfy `L^T J L = J` with
/// `J = diag(-1, 1, 1, 1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzTransform(pub Matrix4<f64>);

impl LorentzTransform {
    pub fn identity() -> Self {
        LorentzTransform(Matrix4::identity())
    }

    /// Boost with rapidity `phi` along spatial axis `axis` (1, 2 or 3).
    pub fn boost(axis: usize, phi: f64) -> Self {
        assert!((1..=3).contains(&axis));
        let mut m = Matrix4::identity();
        let (c, s) = (phi.cosh(), phi.sinh());
        m[(0, 0)] = c;
        m[(axis, axis)] = c;
        m[(0, axis)] = s;
        m[(axis, 0)] = s;
        LorentzTransform(m)
    }

    /// Rotation by `theta` in the spatial plane spanned by axes `a` and `b`.
    pub fn rotation(a: usize, b: usize, theta: f64) -> Self {
        assert!(a != b && (1..=3).contains(&a) && (1..=3).contains(&b));
        let mut m = Matrix4::identity();
        let (c, s) = (theta.cos(), theta.sin());
        m[(a, a)] = c;
        m[(b, b)] = c;
        m[(a, b)] = -s;
        m[(b, a)] = s;
        LorentzTransform(m)
    }

    /// The transform sending a vector to its coordinates in the Lorentz
    /// orthonormal frame `(u0, u1, u2, u3)`, `u0` timelike.
    pub fn from_frame(frame: &[LorentzVector; 4]) -> Self {
        let mut m = Matrix4::zeros();
        for j in 0..4 {
            // x'_0 = -(x, u0), x'_i = (x, u_i)
            let sign = if j == 0 { -1.0 } else { 1.0 };
            let u = &frame[j];
            m[(j, 0)] = -sign * u[0];
            for i in 1..4 {
                m[(j, i)] = sign * u[i];
            }
        }
        LorentzTransform(m)
    }

    pub fn compose(&self, other: &Self) -> Self {
        LorentzTransform(self.0 * other.0)
    }

    pub fn apply(&self, v: &LorentzVector) -> LorentzVector {
        let r = self.0 * nalgebra::Vector4::from(v.0);
        LorentzVector([r[0], r[1], r[2], r[3]])
    }

    /// `apply` in double-double arithmetic, for vectors known beyond f64.
    pub fn apply_dd(&self, v: &[Dd; 4]) -> [Dd; 4] {
        std::array::from_fn(|i| (0..4).map(|j| v[j] * self.0[(i, j)]).sum())
    }

    /// Largest entry of `L^T J L - J`.
    pub fn isometry_defect(&self) -> f64 {
        let j = Matrix4::from_diagonal(&nalgebra::Vector4::new(-1.0, 1.0, 1.0, 1.0));
        (self.0.transpose() * j * self.0 - j).amax()
    }

    /// Whether the upper sheet of the hyperboloid is preserved.
    pub fn is_orthochronous(&self) -> bool {
        self.0[(0, 0)] > 0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_examples() {
        let e0 = LorentzVector::new(1.0, 0.0, 0.0, 0.0);
        assert_eq!(lorentz_dot(&e0, &e0), -1.0);
        let a = LorentzVector::new(1.0, 1.0, 1.0, 1.0);
        assert_eq!(a.dot(&LorentzVector::new(1.0, 1.0, 1.0, -1.0)), 0.0);
        assert_eq!(a.dot(&LorentzVector::new(1.0, -1.0, -1.0, -1.0)), -4.0);
    }

    #[test]
    fn classification() {
        assert_eq!(
            LorentzVector::new(0.0, 1.0, 0.0, 0.0).classify(1e-12),
            NormClass::Spacelike
        );
        assert_eq!(
            LorentzVector::new(1.0, 1.0, 0.0, 0.0).classify(1e-12),
            NormClass::Lightlike
        );
        assert_eq!(
            LorentzVector::new(2.0, 1.0, 0.0, 0.0).classify(1e-12),
            NormClass::Timelike
        );
    }

    #[test]
    fn boosts_and_rotations_are_isometries() {
        let t = LorentzTransform::boost(2, 0.7)
            .compose(&LorentzTransform::rotation(1, 3, 1.1))
            .compose(&LorentzTransform::boost(3, -0.4));
        assert!(t.isometry_defect() < 1e-13);
        assert!(t.is_orthochronous());
    }

    #[test]
    fn frame_transform_maps_frame_to_axes() {
        let b = LorentzTransform::boost(1, 0.3).compose(&LorentzTransform::rotation(2, 3, 0.5));
        let frame = [0, 1, 2, 3].map(|i| {
            let mut e = [0.0; 4];
            e[i] = 1.0;
            b.apply(&LorentzVector(e))
        });
        let t = LorentzTransform::from_frame(&frame);
        for (i, u) in frame.iter().enumerate() {
            let img = t.apply(u);
            for j in 0..4 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((img[j] - want).abs() < 1e-12, "{img:?}");
            }
        }
    }
}
