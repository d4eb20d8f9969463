//! Dense univariate polynomials over any `Ring`.
//!
//! The coefficient vector is never empty: the zero polynomial is stored as a
//! single zero coefficient so every polynomial carries an exemplar of its
//! coefficient ring. Nonzero polynomials have a nonzero top coefficient.

use super::ring::{Field, IntegralDomain, Ring};
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly<K: Ring> {
    coeffs: Vec<K>,
}

impl<K: Ring> UniPoly<K> {
    /// Builds from coefficients in ascending degree order. Panics on an empty
    /// vector (there would be no coefficient exemplar to keep).
    pub fn new(coeffs: Vec<K>) -> Self {
        assert!(!coeffs.is_empty(), "UniPoly::new on empty coefficient list");
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    pub fn zero(like: &K) -> Self {
        UniPoly { coeffs: vec![like.zero_like()] }
    }

    pub fn one(like: &K) -> Self {
        UniPoly { coeffs: vec![like.one_like()] }
    }

    pub fn constant(c: K) -> Self {
        UniPoly { coeffs: vec![c] }
    }

    pub fn monomial(c: K, deg: usize) -> Self {
        if c.is_zero() {
            return UniPoly::constant(c);
        }
        let mut coeffs = vec![c.zero_like(); deg];
        coeffs.push(c);
        UniPoly { coeffs }
    }

    /// The variable itself, `x`.
    pub fn var(like: &K) -> Self {
        Self::monomial(like.one_like(), 1)
    }

    fn normalize(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().unwrap().is_zero() {
            self.coeffs.pop();
        }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.coeffs[0].zero_like())
    }

    /// Leading coefficient; panics on zero.
    pub fn lc(&self) -> &K {
        assert!(!self.is_zero(), "leading coefficient of zero polynomial");
        self.coeffs.last().unwrap()
    }

    pub fn exemplar(&self) -> &K {
        &self.coeffs[0]
    }

    pub fn map_coeffs<L: Ring>(&self, f: impl Fn(&K) -> L) -> UniPoly<L> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &K) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn mul_xpow(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![self.coeffs[0].zero_like(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Substitutes `x -> c * x`.
    pub fn scale_arg(&self, c: &K) -> Self {
        let mut pow = c.one_like();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| {
                if i > 0 {
                    pow = pow.mul(c);
                }
                a.mul(&pow)
            })
            .collect();
        UniPoly::new(coeffs)
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = self.coeffs.last().unwrap().clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Composition `self(g)`.
    pub fn compose(&self, g: &UniPoly<K>) -> UniPoly<K> {
        let mut acc = UniPoly::constant(self.coeffs.last().unwrap().clone());
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(g).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero(&self.coeffs[0]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                // i * c through repeated doubling to stay in the ring
                let mut n = i as u64;
                let mut add = c.clone();
                let mut acc = c.zero_like();
                while n > 0 {
                    if n & 1 == 1 {
                        acc = acc.add(&add);
                    }
                    n >>= 1;
                    if n > 0 {
                        add = add.add(&add);
                    }
                }
                acc
            })
            .collect();
        UniPoly::new(coeffs)
    }

    pub fn format_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = if i == 0 {
                mag
            } else {
                let xs = if i == 1 { var.to_string() } else { format!("{var}^{i}") };
                if c.is_one() {
                    xs
                } else if neg && mag == "1" {
                    xs
                } else {
                    format!("{mag}*{xs}")
                }
            };
            out.push_str(&body);
        }
        out
    }
}

impl<K: Ring> fmt::Debug for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with_var("x"))
    }
}

impl<K: Ring> fmt::Display for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with_var("x"))
    }
}

impl<K: Ring> Ring for UniPoly<K> {
    fn zero_like(&self) -> Self {
        Self::zero(&self.coeffs[0])
    }
    fn one_like(&self) -> Self {
        Self::one(&self.coeffs[0])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        UniPoly::new(coeffs)
    }
    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect();
        UniPoly::new(coeffs)
    }
    fn neg(&self) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return self.zero_like();
        }
        let z = self.coeffs[0].zero_like();
        let mut out = vec![z; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(out)
    }
    fn characteristic(&self) -> u64 {
        self.coeffs[0].characteristic()
    }
}

impl<K: IntegralDomain> IntegralDomain for UniPoly<K> {
    /// Long division demanding exactness at every step; sound over any
    /// integral domain because divisibility forces each leading-coefficient
    /// division to be exact.
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.zero_like());
        }
        let (dn, dd) = (self.degree().unwrap(), other.degree().unwrap());
        if dn < dd {
            return None;
        }
        let mut rem = self.clone();
        let z = self.coeffs[0].zero_like();
        let mut q = vec![z; dn - dd + 1];
        let lc = other.lc().clone();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                return None;
            }
            let qc = rem.lc().exact_div(&lc)?;
            let shift = dr - dd;
            rem = rem.sub(&other.mul_xpow(shift).scale(&qc));
            q[shift] = qc;
            if rem.is_zero() {
                break;
            }
            if rem.degree().map_or(true, |d| d >= dr) {
                // no progress means the subtraction failed to clear the top
                return None;
            }
        }
        if rem.is_zero() {
            Some(UniPoly::new(q))
        } else {
            None
        }
    }
}

impl<K: Field> UniPoly<K> {
    /// Division with remainder over a field. Panics on zero divisor.
    pub fn divrem(&self, other: &Self) -> (Self, Self) {
        assert!(!other.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let dd = other.degree().unwrap();
        if self.degree().map_or(true, |dn| dn < dd) {
            return (self.zero_like(), rem);
        }
        let dn = self.degree().unwrap();
        let z = self.coeffs[0].zero_like();
        let mut q = vec![z; dn - dd + 1];
        let lc_inv = other.lc().inv();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let qc = rem.lc().mul(&lc_inv);
            let shift = dr - dd;
            rem = rem.sub(&other.mul_xpow(shift).scale(&qc));
            q[shift] = qc;
            debug_assert!(rem.degree().map_or(true, |d| d < dr));
        }
        (UniPoly::new(q), rem)
    }

    pub fn rem(&self, other: &Self) -> Self {
        self.divrem(other).1
    }

    pub fn make_monic(&self) -> Self {
        assert!(!self.is_zero(), "cannot normalize zero polynomial");
        self.scale(&self.lc().inv())
    }

    /// Monic gcd by the Euclidean algorithm; errors when both inputs vanish.
    pub fn gcd_monic(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedResultant);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        Ok(a.make_monic())
    }

    /// Extended gcd: returns monic `g` and `(u, v)` with `u*self + v*other = g`.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (self.one_like(), self.zero_like());
        let (mut t0, mut t1) = (self.zero_like(), self.one_like());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1.clone(), s0.sub(&q.mul(&s1)));
            (t0, t1) = (t1.clone(), t0.sub(&q.mul(&t1)));
        }
        assert!(!r0.is_zero(), "ext_gcd of two zero polynomials");
        let c = r0.lc().inv();
        (r0.scale(&c), s0.scale(&c), t0.scale(&c))
    }

    /// Squarefree part `f / gcd(f, f')`, made monic.
    ///
    /// In characteristic p a vanishing derivative of a nonconstant input is
    /// reported as inseparable rather than silently mishandled.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::UndefinedResultant);
        }
        if self.degree() == Some(0) {
            return Ok(self.one_like());
        }
        let d = self.derivative();
        if d.is_zero() {
            return Err(Error::InseparableInput);
        }
        let g = self.gcd_monic(&d)?;
        let q = self.exact_div(&g).expect("gcd divides");
        Ok(q.make_monic())
    }

    /// Squarefree decomposition: returns pairwise-coprime monic squarefree
    /// `g_i` with multiplicities `e_i` and the leading unit, so that
    /// `unit * prod g_i^{e_i}` reproduces the input. In characteristic p a
    /// leftover p-th-power part is reported as inseparable; the finite-field
    /// factorization routine handles that case with Frobenius roots.
    pub fn squarefree_decomposition(&self) -> Result<(K, Vec<(Self, usize)>)> {
        if self.is_zero() {
            return Err(Error::UndefinedResultant);
        }
        let unit = self.lc().clone();
        let f = self.make_monic();
        if f.degree() == Some(0) {
            return Ok((unit, Vec::new()));
        }
        let mut out: Vec<(Self, usize)> = Vec::new();
        let mut c = f.gcd_monic(&f.derivative())?;
        let mut w = f.exact_div(&c).expect("gcd divides").make_monic();
        let mut mult = 1usize;
        while w.degree() != Some(0) {
            let y = w.gcd_monic(&c)?;
            let z = w.exact_div(&y).expect("gcd divides");
            if z.degree().map_or(false, |d| d > 0) {
                out.push((z.make_monic(), mult));
            }
            mult += 1;
            c = c.exact_div(&y).expect("gcd divides").make_monic();
            w = y;
        }
        if c.degree() != Some(0) {
            return Err(Error::InseparableInput);
        }
        Ok((unit, out))
    }
}
