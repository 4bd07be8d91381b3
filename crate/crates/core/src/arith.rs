//! Small integer helpers shared by the group code.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d as u64);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

/// Prime factorisation as (prime, exponent) pairs.
pub fn factorize(mut n: u128) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d as u64, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n as u64, 1));
    }
    out
}

/// Largest power of `r` dividing `n`.
pub fn r_part(n: u64, r: u64) -> u64 {
    debug_assert!(r >= 2);
    let mut m = n;
    let mut part = 1;
    while m > 0 && m.is_multiple_of(r) {
        m /= r;
        part *= r;
    }
    part
}

/// If `n = p^k` with `k >= 1`, returns `p`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    let f = factorize(n as u128);
    if f.len() == 1 {
        Some(f[0].0)
    } else {
        None
    }
}

pub(crate) fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
