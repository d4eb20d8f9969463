//! Prime fields F_p with p < 2^31 so products fit in u64 via u128 widening.

use super::numth::is_prime_u64;
use super::ring::{Field, FiniteField, IntegralDomain, Ring};
use crate::error::{Error, Result};
use num_bigint::BigUint;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Field descriptor; primality is checked once here, not per element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::Parse(format!("modulus {p} too large (need p < 2^31)")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: i64) -> Fp {
        let p = self.p as i64;
        let mut r = v % p;
        if r < 0 {
            r += p;
        }
        Fp { p: self.p, v: r as u64 }
    }

    pub fn zero(&self) -> Fp {
        Fp { p: self.p, v: 0 }
    }

    pub fn one(&self) -> Fp {
        Fp { p: self.p, v: 1 % self.p }
    }
}

/// An element of F_p carrying its modulus; mixed-modulus arithmetic panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u64,
    v: u64,
}

impl Fp {
    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    fn check(&self, other: &Fp) {
        assert_eq!(self.p, other.p, "mixed prime-field moduli");
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.v, self.p)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Ring for Fp {
    fn zero_like(&self) -> Self {
        Fp { p: self.p, v: 0 }
    }
    fn one_like(&self) -> Self {
        Fp { p: self.p, v: 1 % self.p }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn is_one(&self) -> bool {
        self.v == 1 % self.p
    }
    fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut v = self.v + other.v;
        if v >= self.p {
            v -= self.p;
        }
        Fp { p: self.p, v }
    }
    fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let v = if self.v >= other.v { self.v - other.v } else { self.v + self.p - other.v };
        Fp { p: self.p, v }
    }
    fn neg(&self) -> Self {
        Fp { p: self.p, v: if self.v == 0 { 0 } else { self.p - self.v } }
    }
    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        Fp { p: self.p, v: ((self.v as u128 * other.v as u128) % self.p as u128) as u64 }
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

impl IntegralDomain for Fp {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            None
        } else {
            Some(self.mul(&other.inv()))
        }
    }
}

impl Field for Fp {
    fn inv(&self) -> Self {
        assert!(self.v != 0, "inverse of zero in F_{}", self.p);
        // extended Euclid on (v, p)
        let (mut r0, mut r1) = (self.v as i128, self.p as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        let p = self.p as i128;
        let mut s = s0 % p;
        if s < 0 {
            s += p;
        }
        Fp { p: self.p, v: s as u64 }
    }
}

impl FiniteField for Fp {
    fn field_order(&self) -> BigUint {
        BigUint::from(self.p)
    }
    fn random_like(&self, rng: &mut ChaCha8Rng) -> Self {
        Fp { p: self.p, v: rng.random_range(0..self.p) }
    }
    fn lift_residue(&self, v: u64) -> Self {
        Fp { p: self.p, v: v % self.p }
    }
    fn as_prime_residue(&self) -> Option<u64> {
        Some(self.v)
    }
    fn canonical_key(&self) -> Vec<u64> {
        vec![self.v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_checks_primality() {
        assert!(PrimeField::new(101).is_ok());
        assert!(PrimeField::new(100).is_err());
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn arithmetic_mod_101() {
        let f = PrimeField::new(101).unwrap();
        let a = f.elem(77);
        let b = f.elem(50);
        assert_eq!(a.add(&b).value(), 26);
        assert_eq!(a.sub(&b).value(), 27);
        assert_eq!(a.mul(&b).value(), 77 * 50 % 101);
        assert_eq!(f.elem(-5).value(), 96);
        assert_eq!(a.mul(&a.inv()).value(), 1);
        assert_eq!(f.elem(10).mul(&f.elem(10)).value(), 100); // 10^2 = -1 mod 101
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let f = PrimeField::new(13).unwrap();
        let a = f.elem(6);
        let mut acc = f.one();
        for _ in 0..9 {
            acc = acc.mul(&a);
        }
        assert_eq!(a.pow(9), acc);
        assert_eq!(a.pow(0), f.one());
    }
}
