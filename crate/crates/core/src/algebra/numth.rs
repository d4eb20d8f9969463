//! Elementary number theory over machine integers plus big-integer
//! factorials/binomials for the closed-form degree bounds.

use num_bigint::BigInt;
use num_traits::One;

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map_or(false, |dd| dd <= n) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Prime factorization by trial division; ample for the divisor counts that
/// show up in grading arguments.
pub fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.checked_mul(p).map_or(false, |pp| pp <= n) {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
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

pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut out = vec![1u64];
    for (p, e) in factorize_u64(n) {
        let base = out.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            out.extend(base.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// Moebius function values in {-1, 0, 1}.
pub fn moebius(n: u64) -> i64 {
    assert!(n >= 1);
    let fac = factorize_u64(n);
    if fac.iter().any(|&(_, e)| e > 1) {
        return 0;
    }
    if fac.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn euler_phi(n: u64) -> u64 {
    let mut out = n;
    for (p, _) in factorize_u64(n) {
        out = out / p * (p - 1);
    }
    out
}

pub fn factorial_big(n: u64) -> BigInt {
    let mut out = BigInt::one();
    for k in 2..=n {
        out *= BigInt::from(k);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(101));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(91));
        assert!(is_prime_u64(7919));
    }

    #[test]
    fn moebius_small() {
        let expect = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &m) in expect.iter().enumerate() {
            assert_eq!(moebius(i as u64 + 1), m, "mu({})", i + 1);
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(101), vec![1, 101]);
    }

    #[test]
    fn phi_and_factorial() {
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(101), 100);
        assert_eq!(factorial_big(5), BigInt::from(120));
        assert_eq!(factorial_big(0), BigInt::one());
    }
}
