//! Small-integer number theory: factorization, divisors, prime powers, CRT.

use num_integer::Integer;

/// Prime factorization by trial division, as `(prime, exponent)` in
/// increasing prime order. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize(0) is undefined");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some((q, t))` when `n = q^t` with `q` prime and `t >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n.max(1)).as_slice() {
        [single] if n > 1 => Some(*single),
        _ => None,
    }
}

pub fn is_prime_power(n: u64) -> bool {
    prime_power(n).is_some()
}

/// All positive divisors in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .map(|(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

/// Minimal nonnegative `x` with `x ≡ r_i (mod m_i)` for pairwise coprime
/// moduli. Returns `None` if two moduli share a factor.
pub fn crt(congruences: &[(u64, u64)]) -> Option<u64> {
    let mut acc: i128 = 0;
    let mut modulus: i128 = 1;
    for &(r, m) in congruences {
        let m = m as i128;
        let r = (r as i128).rem_euclid(m);
        let ext = modulus.extended_gcd(&m);
        if ext.gcd != 1 {
            return None;
        }
        // acc + modulus * s ≡ r (mod m)  with  s = (r - acc) * modulus^{-1}
        let inv = ext.x.rem_euclid(m);
        let s = ((r - acc).rem_euclid(m) * inv).rem_euclid(m);
        acc += modulus * s;
        modulus *= m;
    }
    u64::try_from(acc).ok()
}
