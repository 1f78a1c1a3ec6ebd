//! Integral LLL reduction (delta = 3/4) with exact big-integer arithmetic,
//! after Cohen, A Course in Computational Algebraic Number Theory, 2.6.7.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Nearest integer to `a / b` for `b > 0`.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    (a * 2u32 + b).div_floor(&(b * 2u32))
}

/// Reduce the rows of `basis`, which must be linearly independent.
pub(crate) fn lll(mut b: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let n = b.len();
    if n < 2 {
        return b;
    }
    // 1-based as in the reference: d[0] = 1, d[i] for row i - 1.
    let mut d: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    let mut lambda = vec![vec![BigInt::zero(); n + 1]; n + 1];
    d[0] = BigInt::one();
    d[1] = dot(&b[0], &b[0]);
    let mut k = 2;
    let mut k_max = 1;

    let redi = |b: &mut Vec<Vec<BigInt>>,
                lambda: &mut Vec<Vec<BigInt>>,
                d: &[BigInt],
                k: usize,
                l: usize| {
        if (&lambda[k][l] * 2u32).abs() > d[l] {
            let q = round_div(&lambda[k][l], &d[l]);
            let row_l = b[l - 1].clone();
            for (x, y) in b[k - 1].iter_mut().zip(&row_l) {
                *x -= &q * y;
            }
            lambda[k][l] -= &q * &d[l];
            for i in 1..l {
                let t = &q * &lambda[l][i];
                lambda[k][i] -= t;
            }
        }
    };

    while k <= n {
        if k > k_max {
            k_max = k;
            for j in 1..=k {
                let mut u = dot(&b[k - 1], &b[j - 1]);
                for i in 1..j {
                    u = (&d[i] * &u - &lambda[k][i] * &lambda[j][i]) / &d[i - 1];
                }
                if j < k {
                    lambda[k][j] = u;
                } else {
                    assert!(!u.is_zero(), "LLL input rows are dependent");
                    d[k] = u;
                }
            }
        }
        loop {
            redi(&mut b, &mut lambda, &d, k, k - 1);
            let lhs = &d[k] * &d[k - 2] * 4u32;
            let rhs = &d[k - 1] * &d[k - 1] * 3u32 - &lambda[k][k - 1] * &lambda[k][k - 1] * 4u32;
            if lhs < rhs {
                // SWAPI(k)
                b.swap(k - 1, k - 2);
                for j in 1..k - 1 {
                    let t = lambda[k][j].clone();
                    lambda[k][j] = std::mem::replace(&mut lambda[k - 1][j], t);
                }
                let lam = lambda[k][k - 1].clone();
                let big_b = (&d[k - 2] * &d[k] + &lam * &lam) / &d[k - 1];
                for i in k + 1..=k_max {
                    let t = lambda[i][k].clone();
                    lambda[i][k] = (&d[k] * &lambda[i][k - 1] - &lam * &t) / &d[k - 1];
                    lambda[i][k - 1] = (&big_b * &t + &lam * &lambda[i][k]) / &d[k];
                }
                d[k - 1] = big_b;
                if k > 2 {
                    k -= 1;
                }
            } else {
                for l in (1..k - 1).rev() {
                    redi(&mut b, &mut lambda, &d, k, l);
                }
                k += 1;
                break;
            }
        }
    }
    b
}
