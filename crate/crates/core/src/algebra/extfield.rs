//! Extension fields F_{p^k} = F_p[w]/(m(w)) with a monic irreducible modulus.
//!
//! The modulus is verified irreducible at construction. Elements are dense
//! coefficient vectors of length k sharing the context through an `Arc`, so
//! they are cheap to clone and safe to move across threads.

use super::factor::{is_irreducible, random_irreducible};
use super::primefield::{Fp, PrimeField};
use super::ring::{Field, FiniteField, IntegralDomain, Ring};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};
use num_bigint::BigUint;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, PartialEq, Eq)]
struct ExtFieldData {
    field: PrimeField,
    degree: usize,
    /// Monic modulus, ascending coefficients, length degree + 1.
    modulus: Vec<u64>,
}

/// Field handle; clones share the underlying context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    data: Arc<ExtFieldData>,
}

impl ExtField {
    pub fn new(field: PrimeField, modulus: &UniPoly<Fp>) -> Result<Self> {
        let degree = modulus.degree().ok_or_else(|| {
            Error::Parse("zero modulus for extension field".to_string())
        })?;
        if degree < 1 {
            return Err(Error::Parse("constant modulus for extension field".to_string()));
        }
        if !modulus.lc().is_one() {
            return Err(Error::Parse("extension modulus must be monic".to_string()));
        }
        if modulus.exemplar().modulus() != field.modulus() {
            return Err(Error::Parse("modulus coefficients in wrong prime field".to_string()));
        }
        if !is_irreducible(modulus) {
            return Err(Error::Parse("extension modulus is reducible".to_string()));
        }
        let coeffs = modulus.coeffs().iter().map(|c| c.value()).collect();
        Ok(ExtField { data: Arc::new(ExtFieldData { field, degree, modulus: coeffs }) })
    }

    /// Extension with a seeded random irreducible modulus. Coordinates of
    /// elements depend on the seed; anything compared across runs must be
    /// representation independent (counts, prime-subfield residues, minimal
    /// polynomials).
    pub fn with_random_modulus(field: PrimeField, k: usize, seed: u64) -> Self {
        let modulus = random_irreducible(&field, k, seed);
        Self::new(field, &modulus).expect("random irreducible modulus is valid")
    }

    pub fn prime_field(&self) -> PrimeField {
        self.data.field
    }

    pub fn degree(&self) -> usize {
        self.data.degree
    }

    pub fn modulus_coeffs(&self) -> &[u64] {
        &self.data.modulus
    }

    pub fn zero(&self) -> Fq {
        Fq { ctx: Arc::clone(&self.data), c: vec![0; self.data.degree] }
    }

    pub fn one(&self) -> Fq {
        self.embed(self.data.field.one())
    }

    pub fn embed(&self, v: Fp) -> Fq {
        assert_eq!(v.modulus(), self.data.field.modulus());
        let mut c = vec![0; self.data.degree];
        c[0] = v.value();
        Fq { ctx: Arc::clone(&self.data), c }
    }

    /// The class of the generator w.
    pub fn generator(&self) -> Fq {
        let mut c = vec![0; self.data.degree];
        if self.data.degree == 1 {
            // w is congruent to the negated constant term of the modulus
            let p = self.data.field.modulus();
            c[0] = (p - self.data.modulus[0] % p) % p;
        } else {
            c[1] = 1;
        }
        Fq { ctx: Arc::clone(&self.data), c }
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Fq> {
        if coeffs.len() > self.data.degree {
            return Err(Error::Parse(format!(
                "element has {} coefficients but the extension degree is {}",
                coeffs.len(),
                self.data.degree
            )));
        }
        let p = self.data.field.modulus();
        let mut c = vec![0; self.data.degree];
        for (i, &v) in coeffs.iter().enumerate() {
            c[i] = v % p;
        }
        Ok(Fq { ctx: Arc::clone(&self.data), c })
    }
}

/// Element of F_{p^k}.
#[derive(Clone, PartialEq, Eq)]
pub struct Fq {
    ctx: Arc<ExtFieldData>,
    c: Vec<u64>,
}

impl Fq {
    pub fn field(&self) -> ExtField {
        ExtField { data: Arc::clone(&self.ctx) }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    fn p(&self) -> u64 {
        self.ctx.field.modulus()
    }

    fn check(&self, other: &Fq) {
        assert!(
            Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx,
            "mixed extension-field contexts"
        );
    }

    /// Representation as a polynomial in the generator over F_p.
    pub fn as_poly(&self) -> UniPoly<Fp> {
        UniPoly::new(self.c.iter().map(|&v| self.ctx.field.elem(v as i64)).collect())
    }

    /// Monic minimal polynomial over the prime field, computed from the
    /// Frobenius orbit; its coefficients always land in F_p.
    pub fn minimal_polynomial(&self) -> UniPoly<Fp> {
        let p = BigUint::from(self.p());
        let mut conjugates = vec![self.clone()];
        loop {
            let next = conjugates.last().unwrap().pow_big(&p);
            if next == conjugates[0] {
                break;
            }
            conjugates.push(next);
        }
        let one = self.field().one();
        let mut acc = UniPoly::one(&one);
        for conj in &conjugates {
            acc = acc.mul(&UniPoly::new(vec![conj.neg(), one.clone()]));
        }
        let coeffs = acc
            .coeffs()
            .iter()
            .map(|c| {
                let r = c.as_prime_residue().expect("minimal polynomial is defined over F_p");
                self.ctx.field.elem(r as i64)
            })
            .collect();
        UniPoly::new(coeffs)
    }

    fn reduce(ctx: &Arc<ExtFieldData>, mut buf: Vec<u64>) -> Vec<u64> {
        let p = ctx.field.modulus() as u128;
        let k = ctx.degree;
        for i in (k..buf.len()).rev() {
            let c = buf[i];
            if c == 0 {
                continue;
            }
            buf[i] = 0;
            // subtract c * modulus * x^{i - k}
            for (j, &m) in ctx.modulus.iter().enumerate().take(k) {
                let idx = i - k + j;
                let sub = (c as u128 * m as u128) % p;
                let cur = buf[idx] as u128;
                buf[idx] = ((cur + p - sub) % p) as u64;
            }
        }
        buf.truncate(k);
        buf
    }
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in F_{}^{}", self, self.p(), self.ctx.degree)
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_poly().format_with_var("w"))
    }
}

impl Ring for Fq {
    fn zero_like(&self) -> Self {
        Fq { ctx: Arc::clone(&self.ctx), c: vec![0; self.ctx.degree] }
    }
    fn one_like(&self) -> Self {
        let mut c = vec![0; self.ctx.degree];
        c[0] = 1 % self.p();
        Fq { ctx: Arc::clone(&self.ctx), c }
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|&v| v == 0)
    }
    fn is_one(&self) -> bool {
        self.c[0] == 1 % self.p() && self.c[1..].iter().all(|&v| v == 0)
    }
    fn add(&self, other: &Self) -> Self {
        self.check(other);
        let p = self.p();
        let c = self
            .c
            .iter()
            .zip(other.c.iter())
            .map(|(&a, &b)| {
                let s = a + b;
                if s >= p {
                    s - p
                } else {
                    s
                }
            })
            .collect();
        Fq { ctx: Arc::clone(&self.ctx), c }
    }
    fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let p = self.p();
        let c = self
            .c
            .iter()
            .zip(other.c.iter())
            .map(|(&a, &b)| if a >= b { a - b } else { a + p - b })
            .collect();
        Fq { ctx: Arc::clone(&self.ctx), c }
    }
    fn neg(&self) -> Self {
        let p = self.p();
        let c = self.c.iter().map(|&a| if a == 0 { 0 } else { p - a }).collect();
        Fq { ctx: Arc::clone(&self.ctx), c }
    }
    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let p = self.p() as u128;
        let k = self.ctx.degree;
        let mut buf = vec![0u64; 2 * k - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let t = (buf[i + j] as u128 + a as u128 * b as u128) % p;
                buf[i + j] = t as u64;
            }
        }
        Fq { ctx: Arc::clone(&self.ctx), c: Fq::reduce(&self.ctx, buf) }
    }
    fn characteristic(&self) -> u64 {
        self.p()
    }
}

impl IntegralDomain for Fq {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            None
        } else {
            Some(self.mul(&other.inv()))
        }
    }
}

impl Field for Fq {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in extension field");
        let field = self.ctx.field;
        let modulus = UniPoly::new(
            self.ctx.modulus.iter().map(|&v| field.elem(v as i64)).collect(),
        );
        let (g, u, _) = self.as_poly().ext_gcd(&modulus);
        assert!(g.is_one(), "modulus is irreducible so the gcd is 1");
        let r = u.rem(&modulus);
        let mut c = vec![0; self.ctx.degree];
        for (i, coeff) in r.coeffs().iter().enumerate() {
            c[i] = coeff.value();
        }
        Fq { ctx: Arc::clone(&self.ctx), c }
    }
}

impl FiniteField for Fq {
    fn field_order(&self) -> BigUint {
        BigUint::from(self.p()).pow(self.ctx.degree as u32)
    }
    fn random_like(&self, rng: &mut ChaCha8Rng) -> Self {
        let p = self.p();
        let c = (0..self.ctx.degree).map(|_| rng.random_range(0..p)).collect();
        Fq { ctx: Arc::clone(&self.ctx), c }
    }
    fn lift_residue(&self, v: u64) -> Self {
        let mut c = vec![0; self.ctx.degree];
        c[0] = v % self.p();
        Fq { ctx: Arc::clone(&self.ctx), c }
    }
    fn as_prime_residue(&self) -> Option<u64> {
        if self.c[1..].iter().all(|&v| v == 0) {
            Some(self.c[0])
        } else {
            None
        }
    }
    fn canonical_key(&self) -> Vec<u64> {
        let mut key: Vec<u64> = self.c.iter().rev().copied().collect();
        key.insert(0, self.c.iter().rposition(|&v| v != 0).map_or(0, |i| i as u64 + 1));
        key
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn f101_8() -> ExtField {
        ExtField::with_random_modulus(PrimeField::new(101).unwrap(), 8, 2024)
    }

    #[test]
    fn basic_arithmetic() {
        let k = f101_8();
        let w = k.generator();
        let a = w.pow(3).add(&k.embed(k.prime_field().elem(5)));
        let b = w.sub(&k.one());
        assert_eq!(a.mul(&b).exact_div(&b).unwrap(), a);
        assert_eq!(a.mul(&a.inv()), k.one());
        assert_eq!(a.sub(&a), k.zero());
        assert_eq!(k.one().as_prime_residue(), Some(1));
        assert_eq!(w.as_prime_residue(), None);
    }

    #[test]
    fn frobenius_is_an_automorphism_fixing_the_prime_field() {
        let k = f101_8();
        let p = BigUint::from(101u32);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let ex = k.one();
        for _ in 0..20 {
            let a = ex.random_like(&mut rng);
            let b = ex.random_like(&mut rng);
            let fr = |x: &Fq| x.pow_big(&p);
            assert_eq!(fr(&a.add(&b)), fr(&a).add(&fr(&b)));
            assert_eq!(fr(&a.mul(&b)), fr(&a).mul(&fr(&b)));
            // fixed points of Frobenius are exactly the prime subfield
            assert_eq!(fr(&a) == a, a.as_prime_residue().is_some());
        }
        for v in [0u64, 1, 37, 100] {
            let a = ex.lift_residue(v);
            assert_eq!(a.pow_big(&p), a);
        }
    }

    #[test]
    fn order_and_fermat() {
        let field = PrimeField::new(5).unwrap();
        let k = ExtField::with_random_modulus(field, 3, 1);
        let w = k.generator();
        assert_eq!(w.field_order(), BigUint::from(125u32));
        // w^(q-1) = 1
        assert_eq!(w.pow_big(&BigUint::from(124u32)), k.one());
    }

    #[test]
    fn minimal_polynomial_of_generator_is_the_modulus() {
        let field = PrimeField::new(101).unwrap();
        let modulus = random_irreducible(&field, 4, 3);
        let k = ExtField::new(field, &modulus).unwrap();
        assert_eq!(k.generator().minimal_polynomial(), modulus);
        // prime-subfield element has a linear minimal polynomial
        let a = k.embed(field.elem(42));
        let mp = a.minimal_polynomial();
        assert_eq!(mp.degree(), Some(1));
        assert_eq!(mp.coeff(0), field.elem(-42));
    }

    #[test]
    fn rejects_reducible_modulus() {
        let field = PrimeField::new(101).unwrap();
        let x2_minus_1 = UniPoly::new(vec![field.elem(-1), field.zero(), field.one()]);
        assert!(ExtField::new(field, &x2_minus_1).is_err());
    }

    #[test]
    fn degree_one_extension_generator() {
        let field = PrimeField::new(7).unwrap();
        // modulus x - 3: generator is 3
        let m = UniPoly::new(vec![field.elem(-3), field.one()]);
        let k = ExtField::new(field, &m).unwrap();
        assert_eq!(k.generator().as_prime_residue(), Some(3));
    }
}
