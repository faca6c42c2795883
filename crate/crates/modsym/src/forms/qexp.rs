//! Exact q-expansions of the two level-one cusp forms used throughout.
//!
//! The weight-12 form comes from the eighth power of the sparse cube-of-eta
//! series (the pentagonal-style expansion with triangular-number exponents),
//! which keeps the work at `O(N sqrt(N))` integer operations instead of a
//! dense `O(N^2)` power. The weight-16 form is its product with the
//! normalized weight-4 Eisenstein series.

use std::sync::Mutex;

use num_bigint::BigInt;

/// Coefficients with triangular exponents: `sum (-1)^m (2m+1) q^(m(m+1)/2)`
/// truncated at `n_max`, as (exponent, coefficient) pairs.
fn eta_cubed_sparse(n_max: usize) -> Vec<(usize, i128)> {
    let mut out = Vec::new();
    let mut m = 0usize;
    loop {
        let e = m * (m + 1) / 2;
        if e > n_max {
            break;
        }
        let c = (2 * m + 1) as i128;
        out.push((e, if m % 2 == 0 { c } else { -c }));
        m += 1;
    }
    out
}

/// Multiply a dense series by the sparse one, truncating at `n_max`.
/// Checked arithmetic: growth estimates leave wide i128 headroom for
/// `n_max` up to 10^5, and a violation panics rather than wrapping.
fn mul_sparse(dense: &[i128], sparse: &[(usize, i128)], n_max: usize) -> Vec<i128> {
    let mut out = vec![0i128; n_max + 1];
    for (e, c) in sparse {
        for (i, v) in dense.iter().enumerate() {
            if *v == 0 {
                continue;
            }
            let j = i + e;
            if j > n_max {
                break;
            }
            out[j] = out[j]
                .checked_add(v.checked_mul(*c).expect("coefficient overflow"))
                .expect("coefficient overflow");
        }
    }
    out
}

fn delta_i128(n_max: usize) -> Vec<i128> {
    // q * (eta^3 expansion)^8; build the eighth power by seven sparse
    // multiplications, then shift by one power of q.
    let sparse = eta_cubed_sparse(n_max);
    let mut dense = vec![0i128; n_max + 1];
    for (e, c) in &sparse {
        dense[*e] = *c;
    }
    for _ in 0..7 {
        dense = mul_sparse(&dense, &sparse, n_max);
    }
    let mut out = vec![0i128; n_max + 1];
    out[1..].copy_from_slice(&dense[..n_max]);
    out
}

static DELTA_CACHE: Mutex<Vec<i128>> = Mutex::new(Vec::new());

/// Coefficients `a_0 .. a_n` of the weight-12 cusp form, `a_0 = 0`,
/// `a_1 = 1`. Cached across calls.
pub fn delta_coeffs(n: usize) -> Vec<BigInt> {
    let mut cache = DELTA_CACHE.lock().unwrap();
    if cache.len() <= n {
        *cache = delta_i128(n.max(1024));
    }
    cache[..=n].iter().map(|&c| BigInt::from(c)).collect()
}

/// Coefficients `a_0 .. a_n` of the normalized weight-4 Eisenstein series:
/// `1 + 240 sum sigma_3(m) q^m`.
pub fn e4_coeffs(n: usize) -> Vec<BigInt> {
    let mut sigma3 = vec![0i128; n + 1];
    for d in 1..=n as i128 {
        let d3 = d * d * d;
        let mut m = d as usize;
        while m <= n {
            sigma3[m] += d3;
            m += d as usize;
        }
    }
    let mut out: Vec<BigInt> = sigma3.into_iter().map(|s| BigInt::from(240 * s)).collect();
    if !out.is_empty() {
        out[0] = BigInt::from(1);
    }
    out
}

/// Coefficients of the weight-16 cusp form: the product of the weight-12
/// form with the weight-4 Eisenstein series, exact big-integer convolution.
pub fn delta_e4_coeffs(n: usize) -> Vec<BigInt> {
    let delta = delta_coeffs(n);
    let e4 = e4_coeffs(n);
    let mut out = vec![BigInt::from(0); n + 1];
    for (i, a) in delta.iter().enumerate() {
        if a == &BigInt::from(0) {
            continue;
        }
        for (j, b) in e4.iter().take(n + 1 - i).enumerate() {
            if b == &BigInt::from(0) {
                continue;
            }
            out[i + j] += a * b;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn first_weight12_coefficients_are_the_classical_ones() {
        let a = delta_coeffs(10);
        let want: Vec<i64> =
            vec![0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920];
        assert_eq!(a, want.into_iter().map(big).collect::<Vec<_>>());
    }

    #[test]
    fn weight12_coefficients_are_multiplicative() {
        let a = delta_coeffs(100);
        // a(mn) = a(m) a(n) for coprime m, n.
        for (m, n) in [(2usize, 3usize), (2, 5), (3, 4), (4, 5), (6, 7), (9, 10)] {
            assert_eq!(a[m * n], &a[m] * &a[n], "failed at ({m}, {n})");
        }
        // Prime power recursion: a(p^2) = a(p)^2 - p^11 a(1).
        for p in [2usize, 3, 5, 7] {
            let p11 = BigInt::from(p).pow(11);
            assert_eq!(a[p * p], &a[p] * &a[p] - &p11, "failed at p = {p}");
        }
    }

    #[test]
    fn eisenstein_coefficients_match_divisor_sums() {
        let e = e4_coeffs(6);
        let want: Vec<i64> = vec![1, 240, 2160, 6720, 17520, 30240, 60480];
        assert_eq!(e, want.into_iter().map(big).collect::<Vec<_>>());
    }

    #[test]
    fn weight16_product_matches_a_direct_convolution() {
        let got = delta_e4_coeffs(8);
        let delta = delta_coeffs(8);
        let e4 = e4_coeffs(8);
        for n in 0..=8 {
            let mut s = BigInt::from(0);
            for k in 0..=n {
                s += &delta[k] * &e4[n - k];
            }
            assert_eq!(got[n], s, "coefficient {n}");
        }
        // Leading values by hand: b1 = 1, b2 = 240 - 24 = 216.
        assert_eq!(got[1], big(1));
        assert_eq!(got[2], big(216));
        assert_eq!(got[3], big(-3348));
    }

    #[test]
    fn cache_serves_prefixes_consistently() {
        let long = delta_coeffs(2000);
        let short = delta_coeffs(50);
        assert_eq!(&long[..=50], &short[..]);
    }
}
