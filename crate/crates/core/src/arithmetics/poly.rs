//! Minimal polynomials of real numbers known to about 30 digits.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::lll::lll;
use crate::dd::Dd;

/// Bits of the value trusted by the relation search.
const TRUSTED_BITS: i32 = 93;
/// A relation is accepted only if it beats the generic lattice bound by
/// this many bits.
const MARGIN_BITS: f64 = 20.0;

/// Coefficients are listed from the leading one down to the constant term.
pub type Poly = Vec<i64>;

/// Evaluate `p` at `x` in double-double.
pub fn eval_dd(p: &[i64], x: Dd) -> Dd {
    p.iter()
        .fold(Dd::ZERO, |acc, &c| acc * x + Dd::from_f64(c as f64))
}

fn content_normalize(c: &mut [BigInt]) {
    let g = c.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() {
        for x in c.iter_mut() {
            *x = &*x / &g;
        }
    }
    if c.first().is_some_and(|x| x.is_negative()) {
        for x in c.iter_mut() {
            *x = -&*x;
        }
    }
}

/// The integer relation among `1, x, ..., x^d` found by LLL, if it is
/// short enough to be believed. Returned leading coefficient first.
fn relation(x: Dd, d: usize) -> Option<Poly> {
    let mut powers = vec![Dd::ONE];
    for i in 1..=d {
        let prev = powers[i - 1];
        powers.push(prev * x);
    }
    let largest = powers.iter().map(|p| p.abs().to_f64()).fold(1.0, f64::max);
    let k = TRUSTED_BITS - largest.log2().ceil() as i32;
    let mut rows = Vec::with_capacity(d + 1);
    for (i, p) in powers.iter().enumerate() {
        let mut row = vec![BigInt::zero(); d + 2];
        row[i] = BigInt::one();
        row[d + 1] = p.ldexp(k).round_to_bigint();
        rows.push(row);
    }
    let reduced = lll(rows);
    let best = &reduced[0];
    // Ascending in the lattice; flip to leading-first.
    let mut c: Vec<BigInt> = best[..=d].iter().rev().cloned().collect();
    if c[0].is_zero() {
        return None;
    }
    content_normalize(&mut c);
    let height = c
        .iter()
        .map(|x| x.abs())
        .max()
        .expect("nonempty")
        .to_f64()?;
    if (height + 1.0).log2() * (d as f64 + 1.0) > TRUSTED_BITS as f64 - MARGIN_BITS {
        return None;
    }
    c.iter().map(|x| x.to_i64()).collect()
}

/// Roots of `p` by Durand-Kerner iteration.
pub fn roots(p: &[i64]) -> Vec<Complex64> {
    let n = p.len() - 1;
    let lead = p[0] as f64;
    let monic: Vec<f64> = p.iter().map(|&c| c as f64 / lead).collect();
    let bound = 1.0 + monic[1..].iter().map(|c| c.abs()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * bound).collect();
    let eval = |x: Complex64| monic.iter().fold(Complex64::zero(), |acc, &c| acc * x + c);
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let denom = (0..n)
                .filter(|&j| j != i)
                .fold(Complex64::one(), |acc, j| acc * (z[i] - z[j]));
            let delta = eval(z[i]) / denom;
            z[i] -= delta;
            moved = moved.max(delta.norm() / (1.0 + z[i].norm()));
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn divides(p: &[i64], g: &[i64]) -> bool {
    let mut rem: Vec<Ratio<i128>> = p.iter().map(|&c| Ratio::from_integer(c as i128)).collect();
    let lead = Ratio::from_integer(g[0] as i128);
    for i in 0..=rem.len() - g.len() {
        let q = rem[i] / lead;
        for (j, &gj) in g.iter().enumerate() {
            rem[i + j] -= q * Ratio::from_integer(gj as i128);
        }
    }
    rem[rem.len() - g.len() + 1..].iter().all(|r| r.is_zero())
}

/// Whether `p` has no integer factor of degree between 1 and `deg/2`.
///
/// A factor of degree `m` is `c * prod (x - r)` over `m` roots `r` of `p`
/// with `c` dividing the leading coefficient; every such candidate with
/// near-integral coefficients is tested by exact division.
pub fn is_irreducible(p: &[i64]) -> bool {
    let n = p.len() - 1;
    if n <= 1 {
        return true;
    }
    let z = roots(p);
    let lead = p[0].unsigned_abs();
    let divisors: Vec<i64> = (1..=lead)
        .filter(|c| lead % c == 0)
        .map(|c| c as i64)
        .collect();
    for mask in 1u32..(1 << n) {
        let m = mask.count_ones() as usize;
        if m > n / 2 {
            continue;
        }
        let mut prod = vec![Complex64::one()];
        for (i, r) in z.iter().enumerate() {
            if mask & (1 << i) != 0 {
                let mut next = vec![Complex64::zero(); prod.len() + 1];
                for (j, &c) in prod.iter().enumerate() {
                    next[j] += c;
                    next[j + 1] -= c * r;
                }
                prod = next;
            }
        }
        for &c in &divisors {
            let scaled: Vec<Complex64> = prod.iter().map(|x| x * c as f64).collect();
            let near = scaled.iter().all(|x| {
                x.im.abs() < 1e-6 * (1.0 + x.re.abs())
                    && (x.re - x.re.round()).abs() < 1e-6 * (1.0 + x.re.abs())
            });
            if near {
                let g: Vec<i64> = scaled.iter().map(|x| x.re.round() as i64).collect();
                if divides(p, &g) {
                    return false;
                }
            }
        }
    }
    true
}

/// The minimal polynomial of `x` over the integers, of degree at most
/// `max_degree`, if one is found with `|P(x)| <= tol * sum |c_i| |x|^i`.
pub fn minimal_polynomial(x: Dd, max_degree: usize, tol: f64) -> Option<Poly> {
    for d in 1..=max_degree {
        let Some(p) = relation(x, d) else { continue };
        if p.len() != d + 1 {
            continue;
        }
        let ax = x.to_f64().abs();
        let scale = p.iter().fold(0.0, |acc, &c| acc * ax + (c as f64).abs());
        if eval_dd(&p, x).abs().to_f64() > tol * scale {
            continue;
        }
        if is_irreducible(&p) {
            return Some(p);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_and_rationals() {
        assert_eq!(
            minimal_polynomial(Dd::from_f64(16.0), 8, 1e-6),
            Some(vec![1, -16])
        );
        let third = Dd::from_f64(16.0) / Dd::from_f64(3.0);
        assert_eq!(minimal_polynomial(third, 8, 1e-6), Some(vec![3, -16]));
    }

    #[test]
    fn quadratic_and_cubic_irrationals() {
        // 16 + 8 sqrt 2 is a root of x^2 - 32x + 128
        let s2 = Dd::from_f64(2.0).sqrt();
        let x = Dd::from_f64(16.0) + s2 * 8.0;
        assert_eq!(minimal_polynomial(x, 8, 1e-6), Some(vec![1, -32, 128]));
        // cube root of 2
        let mut c = Dd::from_f64(2f64.cbrt());
        for _ in 0..3 {
            c = c - (c * c * c - Dd::from_f64(2.0)) / (c * c * 3.0);
        }
        assert_eq!(minimal_polynomial(c, 8, 1e-6), Some(vec![1, 0, 0, -2]));
    }

    #[test]
    fn transcendental_has_no_small_polynomial() {
        // pi to double-double accuracy
        let pi = Dd {
            hi: std::f64::consts::PI,
            lo: 1.2246467991473532e-16,
        };
        assert_eq!(minimal_polynomial(pi, 8, 1e-6), None);
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&[1, -32, 128]));
        assert!(is_irreducible(&[1, 0, 0, -2]));
        // (x - 2)(x^2 + 1)
        assert!(!is_irreducible(&[1, -2, 1, -2]));
        // (2x - 1)(x + 3)
        assert!(!is_irreducible(&[2, 5, -3]));
        // (x^2 - 2)(x^2 - 3)
        assert!(!is_irreducible(&[1, 0, -5, 0, 6]));
    }
}
