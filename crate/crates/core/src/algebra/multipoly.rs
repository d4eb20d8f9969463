//! Sparse multivariate polynomials with a graded-lexicographic term order.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so iteration,
//! printing and hashing are deterministic. Like `UniPoly`, every polynomial
//! keeps a coefficient exemplar so zero values still know their ring.

use super::ring::{IntegralDomain, Ring};
use super::unipoly::UniPoly;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector ordered graded-lexicographically (total degree first,
/// then lexicographic). Ascending `BTreeMap` iteration therefore runs from
/// the smallest term to the leading term.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Exponents(pub Vec<u32>);

impl Exponents {
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.total().cmp(&other.total()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone)]
pub struct MultiPoly<K: Ring> {
    arity: usize,
    zero: K,
    terms: BTreeMap<Exponents, K>,
}

impl<K: Ring> PartialEq for MultiPoly<K> {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity && self.terms == other.terms
    }
}

impl<K: Ring> MultiPoly<K> {
    pub fn zero(arity: usize, like: &K) -> Self {
        MultiPoly { arity, zero: like.zero_like(), terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: K) -> Self {
        let mut p = Self::zero(arity, &c);
        if !c.is_zero() {
            p.terms.insert(Exponents(vec![0; arity]), c);
        }
        p
    }

    pub fn variable(arity: usize, idx: usize, like: &K) -> Self {
        assert!(idx < arity);
        let mut exp = vec![0u32; arity];
        exp[idx] = 1;
        Self::from_terms(arity, vec![(exp, like.one_like())], like)
    }

    pub fn monomial(arity: usize, exp: Vec<u32>, c: K) -> Self {
        assert_eq!(exp.len(), arity);
        let mut p = Self::zero(arity, &c);
        if !c.is_zero() {
            p.terms.insert(Exponents(exp), c);
        }
        p
    }

    pub fn from_terms(arity: usize, terms: Vec<(Vec<u32>, K)>, like: &K) -> Self {
        let mut p = Self::zero(arity, like);
        for (exp, c) in terms {
            assert_eq!(exp.len(), arity, "exponent arity mismatch");
            p.add_term(Exponents(exp), c);
        }
        p
    }

    fn add_term(&mut self, exp: Exponents, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &K)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> K {
        self.terms
            .get(&Exponents(exp.to_vec()))
            .cloned()
            .unwrap_or_else(|| self.zero.clone())
    }

    pub fn exemplar(&self) -> &K {
        &self.zero
    }

    pub fn leading_term(&self) -> Option<(&Exponents, &K)> {
        self.terms.iter().next_back()
    }

    pub fn is_single_term(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.total()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e.0[var]).max()
    }

    pub fn map_coeffs<L: Ring>(&self, like: &L, f: impl Fn(&K) -> L) -> MultiPoly<L> {
        let mut out = MultiPoly::zero(self.arity, like);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn scale(&self, c: &K) -> Self {
        let mut out = Self::zero(self.arity, &self.zero);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a.mul(c));
        }
        out
    }

    pub fn eval(&self, point: &[K]) -> K {
        assert_eq!(point.len(), self.arity);
        let mut acc = self.zero.clone();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e.0.iter()) {
                if k > 0 {
                    t = t.mul(&x.pow(k as u64));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Self {
        assert!(var < self.arity);
        let mut out = Self::zero(self.arity, &self.zero);
        for (e, c) in &self.terms {
            let k = e.0[var];
            if k == 0 {
                continue;
            }
            let mut exp = e.0.clone();
            exp[var] -= 1;
            // k * c by doubling
            let mut n = k as u64;
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
            out.add_term(Exponents(exp), acc);
        }
        out
    }

    /// Substitutes polynomials for every variable (classical composition).
    pub fn substitute(&self, args: &[MultiPoly<K>]) -> MultiPoly<K> {
        assert_eq!(args.len(), self.arity);
        let out_arity = args.first().map_or(self.arity, |a| a.arity);
        let mut acc = MultiPoly::zero(out_arity, &self.zero);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(out_arity, c.clone());
            for (arg, &k) in args.iter().zip(e.0.iter()) {
                for _ in 0..k {
                    t = t.mul(arg);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Views the polynomial as univariate in `var`; coefficients keep the
    /// full arity with the chosen variable's exponent zeroed.
    pub fn as_unipoly_in(&self, var: usize) -> UniPoly<MultiPoly<K>> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut buckets: Vec<MultiPoly<K>> =
            vec![MultiPoly::zero(self.arity, &self.zero); deg + 1];
        for (e, c) in &self.terms {
            let k = e.0[var] as usize;
            let mut exp = e.0.clone();
            exp[var] = 0;
            buckets[k].add_term(Exponents(exp), c.clone());
        }
        UniPoly::new(buckets)
    }

    /// Inverse of `as_unipoly_in`.
    pub fn from_unipoly_in(var: usize, p: &UniPoly<MultiPoly<K>>) -> MultiPoly<K> {
        let ex = p.exemplar();
        let mut out = MultiPoly::zero(ex.arity, &ex.zero);
        for (k, coeff) in p.coeffs().iter().enumerate() {
            for (e, c) in &coeff.terms {
                debug_assert_eq!(e.0[var], 0);
                let mut exp = e.0.clone();
                exp[var] = k as u32;
                out.add_term(Exponents(exp), c.clone());
            }
        }
        out
    }

    pub fn format_with_vars(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.arity);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
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
            let mut vars = String::new();
            for (name, &k) in names.iter().zip(e.0.iter()) {
                if k == 0 {
                    continue;
                }
                if !vars.is_empty() {
                    vars.push('*');
                }
                if k == 1 {
                    vars.push_str(name);
                } else {
                    vars.push_str(&format!("{name}^{k}"));
                }
            }
            if vars.is_empty() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&vars);
            } else {
                out.push_str(&format!("{mag}*{vars}"));
            }
        }
        out
    }

    fn default_names(&self) -> Vec<String> {
        (0..self.arity).map(|i| format!("x{i}")).collect()
    }
}

impl<K: Ring> fmt::Debug for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.default_names();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(f, "{}", self.format_with_vars(&refs))
    }
}

impl<K: Ring> fmt::Display for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.default_names();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(f, "{}", self.format_with_vars(&refs))
    }
}

impl<K: Ring> Ring for MultiPoly<K> {
    fn zero_like(&self) -> Self {
        Self::zero(self.arity, &self.zero)
    }
    fn one_like(&self) -> Self {
        Self::constant(self.arity, self.zero.one_like())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.total() == 0 && c.is_one())
    }
    fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
    fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.neg());
        }
        out
    }
    fn neg(&self) -> Self {
        let mut out = Self::zero(self.arity, &self.zero);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c.neg());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = Self::zero(self.arity, &self.zero);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> =
                    ea.0.iter().zip(eb.0.iter()).map(|(a, b)| a + b).collect();
                out.add_term(Exponents(exp), ca.mul(cb));
            }
        }
        out
    }
    fn characteristic(&self) -> u64 {
        self.zero.characteristic()
    }
}

impl<K: IntegralDomain> IntegralDomain for MultiPoly<K> {
    /// Leading-term division in graded-lex order; exact because the leading
    /// term of a product is the product of leading terms.
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.zero_like());
        }
        assert_eq!(self.arity, other.arity);
        let mut rem = self.clone();
        let mut q = Self::zero(self.arity, &self.zero);
        let (lt_e, lt_c) = {
            let (e, c) = other.leading_term().unwrap();
            (e.clone(), c.clone())
        };
        while let Some((re, rc)) = rem.leading_term() {
            if re.0.iter().zip(lt_e.0.iter()).any(|(a, b)| a < b) {
                return None;
            }
            let qc = rc.exact_div(&lt_c)?;
            let qe: Vec<u32> = re.0.iter().zip(lt_e.0.iter()).map(|(a, b)| a - b).collect();
            let term = Self::monomial(self.arity, qe, qc);
            rem = rem.sub(&term.mul(other));
            q = q.add(&term);
        }
        Some(q)
    }
}
