//! Univariate factorization over finite fields: squarefree decomposition,
//! distinct-degree splitting, and Cantor-Zassenhaus equal-degree splitting
//! (trace-based in characteristic 2).
//!
//! https://en.wikipedia.org/wiki/Factorization_of_polynomials_over_finite_fields

use super::primefield::{Fp, PrimeField};
use super::ring::{Field, FiniteField, IntegralDomain, Ring};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A factored polynomial: `unit * prod factors[i].0 ^ factors[i].1` with
/// monic, irreducible, pairwise distinct factors in canonical order.
#[derive(Debug, Clone, PartialEq)]
pub struct Factored<F: FiniteField> {
    pub unit: F,
    pub factors: Vec<(UniPoly<F>, usize)>,
}

impl<F: FiniteField> Factored<F> {
    pub fn expand(&self) -> UniPoly<F> {
        let mut acc = UniPoly::constant(self.unit.clone());
        for (g, e) in &self.factors {
            acc = acc.mul(&g.pow(*e as u64));
        }
        acc
    }
}

fn poly_key<F: FiniteField>(f: &UniPoly<F>) -> Vec<u64> {
    let mut key = vec![f.coeffs().len() as u64];
    for c in f.coeffs() {
        key.extend(c.canonical_key());
    }
    key
}

pub fn pow_mod<F: Field>(base: &UniPoly<F>, e: &BigUint, modulus: &UniPoly<F>) -> UniPoly<F> {
    let mut acc = UniPoly::one(base.exemplar());
    let mut b = base.rem(modulus);
    for i in 0..e.bits() {
        if e.bit(i) {
            acc = acc.mul(&b).rem(modulus);
        }
        if i + 1 < e.bits() {
            b = b.mul(&b).rem(modulus);
        }
    }
    acc
}

/// Complete squarefree decomposition in characteristic p, including the
/// p-th-power part (handled by Frobenius roots of the coefficients).
pub fn squarefree_decomposition_ff<F: FiniteField>(
    f: &UniPoly<F>,
) -> Result<(F, Vec<(UniPoly<F>, usize)>)> {
    if f.is_zero() {
        return Err(Error::UndefinedResultant);
    }
    let unit = f.lc().clone();
    let f = f.make_monic();
    let mut out: Vec<(UniPoly<F>, usize)> = Vec::new();
    collect_squarefree(&f, 1, &mut out)?;
    out.sort_by(|a, b| (a.1, poly_key(&a.0)).cmp(&(b.1, poly_key(&b.0))));
    Ok((unit, out))
}

fn collect_squarefree<F: FiniteField>(
    f: &UniPoly<F>,
    stride: usize,
    out: &mut Vec<(UniPoly<F>, usize)>,
) -> Result<()> {
    if f.degree() == Some(0) {
        return Ok(());
    }
    let p = f.exemplar().characteristic();
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = g(x^p); take p-th roots of the coefficients
        let root = frobenius_root_poly(f, p)?;
        return collect_squarefree(&root, stride * p as usize, out);
    }
    let mut c = f.gcd_monic(&deriv)?;
    let mut w = f.exact_div(&c).expect("gcd divides").make_monic();
    let mut mult = 1usize;
    while w.degree() != Some(0) {
        let y = w.gcd_monic(&c)?;
        let z = w.exact_div(&y).expect("gcd divides");
        if z.degree().map_or(false, |d| d > 0) {
            out.push((z.make_monic(), mult * stride));
        }
        mult += 1;
        c = c.exact_div(&y).expect("gcd divides").make_monic();
        w = y;
    }
    if c.degree() != Some(0) {
        // leftover p-th power part
        let root = frobenius_root_poly(&c, p)?;
        collect_squarefree(&root, stride * p as usize, out)?;
    }
    Ok(())
}

fn frobenius_root_poly<F: FiniteField>(f: &UniPoly<F>, p: u64) -> Result<UniPoly<F>> {
    let q = f.exemplar().field_order();
    let root_exp = &q / BigUint::from(p); // a^(q/p) is the p-th root
    let mut coeffs = Vec::new();
    for (i, c) in f.coeffs().iter().enumerate() {
        if i as u64 % p == 0 {
            coeffs.push(c.pow_big(&root_exp));
        } else if !c.is_zero() {
            return Err(Error::InseparableInput);
        }
    }
    Ok(UniPoly::new(coeffs))
}

/// Rabin irreducibility test.
pub fn is_irreducible<F: FiniteField>(f: &UniPoly<F>) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(n) => n,
    };
    if n == 1 {
        return true;
    }
    let f = f.make_monic();
    let q = f.exemplar().field_order();
    let x = UniPoly::var(f.exemplar());
    // x^{q^n} == x mod f
    let qn = pow_biguint(&q, n as u32);
    if pow_mod(&x, &qn, &f).sub(&x.rem(&f)).degree().is_some() {
        return false;
    }
    for (t, _) in super::numth::factorize_u64(n as u64) {
        let e = pow_biguint(&q, (n as u64 / t) as u32);
        let h = pow_mod(&x, &e, &f).sub(&x.rem(&f));
        if h.is_zero() {
            return false;
        }
        let g = f.gcd_monic(&h).expect("nonzero");
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}

fn pow_biguint(q: &BigUint, e: u32) -> BigUint {
    q.pow(e)
}

/// Distinct-degree split of a monic squarefree polynomial: returns pairs
/// (product of all irreducible factors of degree d, d).
fn distinct_degree<F: FiniteField>(f: &UniPoly<F>) -> Vec<(UniPoly<F>, usize)> {
    let q = f.exemplar().field_order();
    let x = UniPoly::var(f.exemplar());
    let mut rem = f.clone();
    let mut h = x.rem(&rem);
    let mut out = Vec::new();
    let mut d = 0usize;
    while rem.degree().map_or(false, |deg| deg >= 2 * (d + 1)) {
        d += 1;
        h = pow_mod(&h, &q, &rem);
        let g = rem.gcd_monic(&h.sub(&x.rem(&rem))).expect("nonzero");
        if g.degree() != Some(0) {
            out.push((g.clone(), d));
            rem = rem.exact_div(&g).expect("gcd divides").make_monic();
            h = h.rem(&rem);
        }
    }
    if rem.degree().map_or(false, |deg| deg > 0) {
        let deg = rem.degree().unwrap();
        out.push((rem, deg));
    }
    out
}

/// Equal-degree splitting (Cantor-Zassenhaus); `f` monic squarefree, all
/// irreducible factors of degree `d`.
fn equal_degree<F: FiniteField>(
    f: &UniPoly<F>,
    d: usize,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<UniPoly<F>>,
) {
    let deg = f.degree().unwrap();
    if deg == d {
        out.push(f.clone());
        return;
    }
    let q = f.exemplar().field_order();
    let two = BigUint::from(2u32);
    loop {
        let r = random_poly_below(f, deg, rng);
        if r.degree().is_none() {
            continue;
        }
        let s = if &q % &two == BigUint::one() {
            // odd characteristic: r^((q^d - 1)/2) - 1
            let e = (pow_biguint(&q, d as u32) - BigUint::one()) / &two;
            pow_mod(&r, &e, f).sub(&UniPoly::one(f.exemplar()))
        } else {
            // characteristic 2: additive trace over F_2
            let bits = q.bits() - 1; // q = 2^bits
            let reps = bits as usize * d;
            let mut acc = r.rem(f);
            let mut t = r.rem(f);
            for _ in 1..reps {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        };
        if s.is_zero() {
            continue;
        }
        let g = f.gcd_monic(&s).expect("nonzero");
        if let Some(k) = g.degree() {
            if k > 0 && k < deg {
                equal_degree(&g, d, rng, out);
                equal_degree(&f.exact_div(&g).expect("gcd divides").make_monic(), d, rng, out);
                return;
            }
        }
    }
}

fn random_poly_below<F: FiniteField>(
    like: &UniPoly<F>,
    deg_bound: usize,
    rng: &mut ChaCha8Rng,
) -> UniPoly<F> {
    let ex = like.exemplar();
    let coeffs: Vec<F> = (0..deg_bound).map(|_| ex.random_like(rng)).collect();
    UniPoly::new(if coeffs.is_empty() { vec![ex.zero_like()] } else { coeffs })
}

/// Full factorization into monic irreducibles with multiplicities.
/// Constant inputs yield an empty factor list with the unit recorded.
pub fn factor<F: FiniteField>(f: &UniPoly<F>, seed: u64) -> Result<Factored<F>> {
    if f.is_zero() {
        return Err(Error::UndefinedResultant);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (unit, squarefree) = squarefree_decomposition_ff(f)?;
    let mut factors: Vec<(UniPoly<F>, usize)> = Vec::new();
    for (g, mult) in squarefree {
        for (h, d) in distinct_degree(&g) {
            let mut irred = Vec::new();
            equal_degree(&h, d, &mut rng, &mut irred);
            for piece in irred {
                factors.push((piece, mult));
            }
        }
    }
    factors.sort_by(|a, b| {
        (a.0.degree(), poly_key(&a.0), a.1).cmp(&(b.0.degree(), poly_key(&b.0), b.1))
    });
    let result = Factored { unit, factors };
    debug_assert_eq!(result.expand(), f.clone());
    Ok(result)
}

/// All roots of `f` lying in its coefficient field, with multiplicity,
/// in canonical order.
pub fn roots_in_field<F: FiniteField>(f: &UniPoly<F>, seed: u64) -> Result<Vec<F>> {
    let fac = factor(f, seed)?;
    let mut roots = Vec::new();
    for (g, mult) in &fac.factors {
        if g.degree() == Some(1) {
            // monic x + c has root -c
            let root = g.coeff(0).neg();
            for _ in 0..*mult {
                roots.push(root.clone());
            }
        }
    }
    roots.sort_by_key(|r| r.canonical_key());
    Ok(roots)
}

/// Seeded random monic irreducible of degree `k` over F_p; the returned
/// polynomial is its own certificate via the irreducibility test.
pub fn random_irreducible(field: &PrimeField, k: usize, seed: u64) -> UniPoly<Fp> {
    assert!(k >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = field.one();
    loop {
        let mut coeffs: Vec<Fp> = (0..k).map(|_| one.random_like(&mut rng)).collect();
        coeffs.push(one);
        let f = UniPoly::new(coeffs);
        if is_irreducible(&f) {
            return f;
        }
    }
}
