use std::f64::consts::PI;
use std::sync::OnceLock;

const TERMS: usize = 64;

/// `zeta(2n)` for `n = 1..TERMS`.
fn zeta_even() -> &'static [f64; TERMS] {
    static TABLE: OnceLock<[f64; TERMS]> = OnceLock::new();
    TABLE.get_or_init(|| {
        std::array::from_fn(|i| {
            let s = 2 * (i as i32 + 1);
            match s {
                2 => PI * PI / 6.0,
                4 => PI.powi(4) / 90.0,
                _ => {
                    // The tail beyond k = 1000 is below 1000^(1 - s) / (s - 1) < 1e-15.
                    (2..=1000).rev().map(|k| (k as f64).powi(-s)).sum::<f64>() + 1.0
                }
            }
        })
    })
}

/// The Lobachevsky function `L(t) = -int_0^t log|2 sin u| du`.
///
/// Odd and `pi`-periodic. After reducing to `|t| <= pi/2` it is evaluated
/// from `L(t) = t - t log(2|t|) + sum_n zeta(2n) t^(2n+1) / (n (2n+1) pi^(2n))`,
/// whose terms shrink at least by `(t/pi)^2 <= 1/4`; the sum stops once the
/// geometric bound on the tail drops below `1e-17`.
pub fn lobachevsky(theta: f64) -> f64 {
    let mut t = theta.rem_euclid(PI);
    if t > PI / 2.0 {
        t -= PI;
    }
    if t == 0.0 {
        return 0.0;
    }
    let ratio = (t / PI) * (t / PI);
    let mut sum = t - t * (2.0 * t.abs()).ln();
    let mut power = t; // t^(2n+1) / pi^(2n)
    for (i, z) in zeta_even().iter().enumerate() {
        let n = (i + 1) as f64;
        power *= ratio;
        let term = z * power / (n * (2.0 * n + 1.0));
        sum += term;
        if term.abs() * ratio / (1.0 - ratio) < 1e-17 {
            break;
        }
    }
    sum
}
