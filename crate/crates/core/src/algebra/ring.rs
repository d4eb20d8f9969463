//! Minimal ring/field trait hierarchy used by every exact kernel.
//!
//! Elements carry whatever context they need (a prime modulus, an extension
//! modulus behind an `Arc`, ...), so `zero_like`/`one_like` derive new
//! constants from an existing element instead of from a separate ring handle.

use num_bigint::BigUint;
use rand_chacha::ChaCha8Rng;
use std::fmt::{Debug, Display};

pub trait Ring: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Characteristic of the containing ring; 0 in characteristic zero.
    fn characteristic(&self) -> u64;

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

pub trait IntegralDomain: Ring {
    /// Exact division: returns `q` with `q * other == self`, or `None` when
    /// `other` does not divide `self`.
    fn exact_div(&self, other: &Self) -> Option<Self>;
}

pub trait Field: IntegralDomain {
    /// Multiplicative inverse. Panics on zero; callers check `is_zero` first.
    fn inv(&self) -> Self;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

/// Finite fields expose their order and seeded random sampling, which is all
/// the factorization machinery needs.
pub trait FiniteField: Field {
    fn field_order(&self) -> BigUint;
    /// Uniform random element of the same field as `self`.
    fn random_like(&self, rng: &mut ChaCha8Rng) -> Self;
    /// Canonical embedding of a prime-subfield value given by its residue.
    fn lift_residue(&self, v: u64) -> Self;
    /// The residue of `self` when it lies in the prime subfield.
    fn as_prime_residue(&self) -> Option<u64>;
    /// Total order key for deterministic sorting of field elements.
    fn canonical_key(&self) -> Vec<u64>;

    fn pow_big(&self, e: &BigUint) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = acc.mul(&base);
            }
            if i + 1 < e.bits() {
                base = base.mul(&base);
            }
        }
        acc
    }
}
