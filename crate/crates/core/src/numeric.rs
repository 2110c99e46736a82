//! Integer helpers.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Bezout coefficients for a list: `Σ c_i * v_i = gcd(v)`.
pub fn bezout(values: &[i64]) -> (i64, Vec<i64>) {
    let mut coeffs = vec![0i64; values.len()];
    let mut g = 0i64;
    for (i, &v) in values.iter().enumerate() {
        if v == 0 {
            continue;
        }
        let (ng, s, t) = ext_gcd(g, v);
        for c in coeffs.iter_mut().take(i) {
            *c *= s;
        }
        coeffs[i] = t;
        g = ng;
    }
    (g, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bezout_identity() {
        for values in [
            vec![2, 3],
            vec![6, 10, 15],
            vec![0, 0],
            vec![-4, 6],
            vec![0, 5, 0],
        ] {
            let (g, c) = bezout(&values);
            let sum: i64 = values.iter().zip(&c).map(|(v, c)| v * c).sum();
            assert_eq!(sum, g);
            let expected = values
                .iter()
                .fold(0u64, |acc, &v| gcd(acc, v.unsigned_abs()));
            assert_eq!(g as u64, expected);
        }
    }
}
