//! Exact arithmetic in cyclotomic fields Q(zeta_n), used by the
//! root-of-unity filter that extracts Veronese sections of Hilbert series.

use super::rational::Rational;
use super::ring::{Field, IntegralDomain, Ring};
use super::unipoly::UniPoly;
use num_traits::{One, Zero};
use std::fmt;
use std::sync::Arc;

/// The n-th cyclotomic polynomial, monic over Q, by repeated exact division
/// of x^n - 1 by the lower cyclotomic polynomials.
pub fn cyclotomic_polynomial(n: u32) -> UniPoly<Rational> {
    assert!(n >= 1);
    let one: Rational = One::one();
    let mut num = UniPoly::monomial(one.clone(), n as usize)
        .sub(&UniPoly::one(&one)); // x^n - 1
    for d in super::numth::divisors(n as u64) {
        if d == n as u64 {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d as u32);
        num = num.exact_div(&phi_d).expect("cyclotomic polynomials divide x^n - 1");
    }
    num
}

#[derive(Debug, PartialEq)]
struct CycloData {
    order: u32,
    modulus: UniPoly<Rational>,
}

/// Field handle for Q(zeta_n).
#[derive(Debug, Clone, PartialEq)]
pub struct CycloField {
    data: Arc<CycloData>,
}

impl CycloField {
    pub fn new(order: u32) -> Self {
        CycloField {
            data: Arc::new(CycloData { order, modulus: cyclotomic_polynomial(order) }),
        }
    }

    pub fn order(&self) -> u32 {
        self.data.order
    }

    pub fn zero(&self) -> Cyclo {
        self.embed(Zero::zero())
    }

    pub fn one(&self) -> Cyclo {
        self.embed(One::one())
    }

    pub fn embed(&self, r: Rational) -> Cyclo {
        Cyclo { ctx: Arc::clone(&self.data), rep: UniPoly::constant(r) }
    }

    /// A primitive n-th root of unity (the class of x).
    pub fn zeta(&self) -> Cyclo {
        let one: Rational = One::one();
        let x = UniPoly::var(&one);
        Cyclo { ctx: Arc::clone(&self.data), rep: x.rem(&self.data.modulus) }
    }
}

/// Element of Q(zeta_n), reduced modulo the cyclotomic polynomial.
#[derive(Clone, PartialEq)]
pub struct Cyclo {
    ctx: Arc<CycloData>,
    rep: UniPoly<Rational>,
}

impl Cyclo {
    /// Rational coordinate when the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.rep.degree().map_or(true, |d| d == 0) {
            Some(self.rep.coeff(0))
        } else {
            None
        }
    }

    fn check(&self, other: &Cyclo) {
        assert!(
            Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx,
            "mixed cyclotomic orders"
        );
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.rep.format_with_var("z"), self.ctx.order)
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep.format_with_var("z"))
    }
}

impl Ring for Cyclo {
    fn zero_like(&self) -> Self {
        Cyclo { ctx: Arc::clone(&self.ctx), rep: self.rep.zero_like() }
    }
    fn one_like(&self) -> Self {
        Cyclo { ctx: Arc::clone(&self.ctx), rep: self.rep.one_like() }
    }
    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
    fn is_one(&self) -> bool {
        self.rep.is_one()
    }
    fn add(&self, other: &Self) -> Self {
        self.check(other);
        Cyclo { ctx: Arc::clone(&self.ctx), rep: self.rep.add(&other.rep) }
    }
    fn sub(&self, other: &Self) -> Self {
        self.check(other);
        Cyclo { ctx: Arc::clone(&self.ctx), rep: self.rep.sub(&other.rep) }
    }
    fn neg(&self) -> Self {
        Cyclo { ctx: Arc::clone(&self.ctx), rep: self.rep.neg() }
    }
    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        Cyclo {
            ctx: Arc::clone(&self.ctx),
            rep: self.rep.mul(&other.rep).rem(&self.ctx.modulus),
        }
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

impl IntegralDomain for Cyclo {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            None
        } else {
            Some(self.mul(&other.inv()))
        }
    }
}

impl Field for Cyclo {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in cyclotomic field");
        let (g, u, _) = self.rep.ext_gcd(&self.ctx.modulus);
        assert!(g.is_one(), "cyclotomic polynomial is irreducible over Q");
        Cyclo { ctx: Arc::clone(&self.ctx), rep: u.rem(&self.ctx.modulus) }
    }
}
