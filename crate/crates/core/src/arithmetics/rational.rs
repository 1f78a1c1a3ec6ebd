use num_rational::Ratio;

/// Largest denominator `rational_detect` will return.
pub const MAX_DENOMINATOR: i64 = 1_000_000;

/// How much better than a generic continued-fraction approximation a
/// convergent must be before it is believed: `q^2 |x - p/q| <= SIGNIFICANCE`.
/// Convergents of an irrational number sit near `q^2 |x - p/q| ~ 1/sqrt 5`
/// or above, a rational seen through rounding noise far below.
pub const SIGNIFICANCE: f64 = 1e-3;

/// Recognize `x` as a rational with small denominator.
///
/// Walks the continued-fraction convergents `p/q` of `x` with
/// `q <= 10^6` and returns the first one with `|x - p/q| <= tol` that is
/// also significant in the sense of [`SIGNIFICANCE`]. The second condition
/// keeps irrationals such as `sqrt 2` from being matched by one of their own
/// convergents once `q^-2` drops below `tol`.
pub fn rational_detect(x: f64, tol: f64) -> Option<Ratio<i64>> {
    if !x.is_finite() || !(tol > 0.0) || x.abs() > 1e15 {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    let mut rest = x;
    for _ in 0..64 {
        let a = rest.floor();
        let (p, q) = (a as i128 * p1 + p0, a as i128 * q1 + q0);
        if q > MAX_DENOMINATOR as i128 {
            return None;
        }
        let approx = p as f64 / q as f64;
        let err = (x - approx).abs();
        if err <= tol && (q as f64).powi(2) * err <= SIGNIFICANCE {
            return Some(Ratio::new(p as i64, q as i64));
        }
        let frac = rest - a;
        if frac == 0.0 {
            return None;
        }
        rest = 1.0 / frac;
        (p0, q0, p1, q1) = (p1, q1, p, q);
    }
    None
}

/// Distance from `x` to the nearest integer.
pub fn integer_distance(x: f64) -> f64 {
    (x - x.round()).abs()
}

/// Prime factors occurring to an odd power in `n > 0`, in increasing order.
pub fn odd_primes(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e % 2 == 1 {
            out.push(p);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}
