//! Binary forms and bihomogeneous forms with explicit formal degrees.
//!
//! Formal degree matters: a binary form whose top coefficients vanish has
//! roots at infinity, and the periodic-point divisors of special
//! correspondences drop degree exactly that way. Coefficient `c[i]` is the
//! coefficient of `z0^(deg-i) z1^i`.

use crate::algebra::multipoly::MultiPoly;
use crate::algebra::ring::{Field, IntegralDomain, Ring};
use crate::algebra::unipoly::UniPoly;
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct BinaryForm<K: Ring> {
    deg: usize,
    c: Vec<K>,
}

impl<K: Ring> BinaryForm<K> {
    pub fn new(deg: usize, coeffs: Vec<K>) -> Self {
        assert_eq!(
            coeffs.len(),
            deg + 1,
            "binary form of degree {deg} needs {} coefficients",
            deg + 1
        );
        BinaryForm { deg, c: coeffs }
    }

    pub fn zero(deg: usize, like: &K) -> Self {
        BinaryForm { deg, c: vec![like.zero_like(); deg + 1] }
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn coeffs(&self) -> &[K] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> &K {
        &self.c[i]
    }

    pub fn exemplar(&self) -> &K {
        &self.c[0]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// The polynomial in u = z1/z0 (kills the z0-multiplicity information,
    /// which `infinity_multiplicity` retains).
    pub fn dehomogenize(&self) -> UniPoly<K> {
        UniPoly::new(self.c.clone())
    }

    /// Rebuilds a form of stated formal degree from its chart polynomial.
    pub fn from_dehomogenized(deg: usize, p: &UniPoly<K>) -> Self {
        assert!(
            p.degree().map_or(true, |d| d <= deg),
            "chart polynomial exceeds the formal degree"
        );
        let c = (0..=deg).map(|i| p.coeff(i)).collect();
        BinaryForm { deg, c }
    }

    /// Multiplicity of the root (0:1), i.e. the power of z0 dividing the
    /// form. Panics on the zero form.
    pub fn infinity_multiplicity(&self) -> usize {
        let top = self
            .c
            .iter()
            .rposition(|x| !x.is_zero())
            .expect("zero form has no well-defined roots");
        self.deg - top
    }

    pub fn eval(&self, z0: &K, z1: &K) -> K {
        let mut acc = self.c[0].zero_like();
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = c.mul(&z0.pow((self.deg - i) as u64)).mul(&z1.pow(i as u64));
            acc = acc.add(&t);
        }
        acc
    }

    pub fn scale(&self, s: &K) -> Self {
        BinaryForm { deg: self.deg, c: self.c.iter().map(|x| x.mul(s)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let deg = self.deg + other.deg;
        let mut c = vec![self.c[0].zero_like(); deg + 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        BinaryForm { deg, c }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = BinaryForm::new(0, vec![self.c[0].one_like()]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Forms are projective data; equality up to a nonzero scalar is the
    /// right comparison for spectra and periodic divisors.
    pub fn proportional_to(&self, other: &Self) -> bool {
        if self.deg != other.deg {
            return false;
        }
        let (first_self, first_other) = (
            self.c.iter().position(|x| !x.is_zero()),
            other.c.iter().position(|x| !x.is_zero()),
        );
        let (Some(i), Some(j)) = (first_self, first_other) else {
            return self.is_zero() && other.is_zero();
        };
        if i != j {
            return false;
        }
        let (a, b) = (&other.c[i], &self.c[i]);
        self.c
            .iter()
            .zip(other.c.iter())
            .all(|(x, y)| x.mul(a) == y.mul(b))
    }

    pub fn format_with_vars(&self, v0: &str, v1: &str) -> String {
        self.to_multipoly().format_with_vars(&[v0, v1])
    }

    pub fn to_multipoly(&self) -> MultiPoly<K> {
        let mut p = MultiPoly::zero(2, &self.c[0]);
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            p = p.add(&MultiPoly::monomial(
                2,
                vec![(self.deg - i) as u32, i as u32],
                c.clone(),
            ));
        }
        p
    }
}

impl<K: Field> BinaryForm<K> {
    /// Exact division with formal-degree bookkeeping.
    pub fn exact_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::UndefinedResultant);
        }
        if self.deg < other.deg {
            return Err(Error::NonGenericCorrespondence(
                "divisor degree exceeds dividend degree".to_string(),
            ));
        }
        let q = self
            .dehomogenize()
            .exact_div(&other.dehomogenize())
            .ok_or_else(|| {
                Error::NonGenericCorrespondence(
                    "divisor forms are not in general position".to_string(),
                )
            })?;
        Ok(Self::from_dehomogenized(self.deg - other.deg, &q))
    }
}

impl<K: Ring> fmt::Debug for BinaryForm<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "deg {}: {}", self.deg, self.format_with_vars("z0", "z1"))
    }
}

impl<K: Ring> fmt::Display for BinaryForm<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with_vars("z0", "z1"))
    }
}

/// Which variable of a bihomogeneous form to differentiate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X0,
    X1,
    Y0,
    Y1,
}

/// Bihomogeneous form in (x0, x1; y0, y1) of exact formal bidegree
/// (deg_x, deg_y); entry (i, j) is the coefficient of
/// x0^(deg_x - i) x1^i y0^(deg_y - j) y1^j.
#[derive(Clone, PartialEq)]
pub struct BiHomForm<K: Ring> {
    deg_x: usize,
    deg_y: usize,
    c: Vec<K>,
}

impl<K: Ring> BiHomForm<K> {
    pub fn zero(deg_x: usize, deg_y: usize, like: &K) -> Self {
        BiHomForm { deg_x, deg_y, c: vec![like.zero_like(); (deg_x + 1) * (deg_y + 1)] }
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.deg_x, self.deg_y)
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.c[i * (self.deg_y + 1) + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        self.c[i * (self.deg_y + 1) + j] = v;
    }

    pub fn exemplar(&self) -> &K {
        &self.c[0]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Restriction to the diagonal x = y = z; formal degree deg_x + deg_y.
    pub fn diagonal(&self) -> BinaryForm<K> {
        let deg = self.deg_x + self.deg_y;
        let mut out = BinaryForm::zero(deg, &self.c[0]);
        for i in 0..=self.deg_x {
            for j in 0..=self.deg_y {
                let k = i + j;
                out.c[k] = out.c[k].add(self.get(i, j));
            }
        }
        out
    }

    /// Partial derivative; drops the corresponding formal degree by one.
    pub fn partial(&self, var: Var) -> BiHomForm<K> {
        let (dx, dy) = (self.deg_x, self.deg_y);
        match var {
            Var::X0 | Var::X1 => assert!(dx >= 1, "x-degree 0 form has no x-derivative"),
            Var::Y0 | Var::Y1 => assert!(dy >= 1, "y-degree 0 form has no y-derivative"),
        }
        let (ndx, ndy) = match var {
            Var::X0 | Var::X1 => (dx - 1, dy),
            Var::Y0 | Var::Y1 => (dx, dy - 1),
        };
        let mut out = BiHomForm::zero(ndx, ndy, &self.c[0]);
        for i in 0..=dx {
            for j in 0..=dy {
                let c = self.get(i, j);
                if c.is_zero() {
                    continue;
                }
                // exponent of the differentiated variable in this term
                let e = match var {
                    Var::X0 => dx - i,
                    Var::X1 => i,
                    Var::Y0 => dy - j,
                    Var::Y1 => j,
                };
                if e == 0 {
                    continue;
                }
                // target cell after the degree drop
                let (ti, tj) = match var {
                    Var::X0 | Var::Y0 => (i, j),
                    Var::X1 => (i - 1, j),
                    Var::Y1 => (i, j - 1),
                };
                let mut scaled = c.zero_like();
                for _ in 0..e {
                    scaled = scaled.add(c);
                }
                let cur = out.get(ti, tj).add(&scaled);
                out.set(ti, tj, cur);
            }
        }
        out
    }

    /// Conversion to a 4-variable polynomial in (x0, x1, y0, y1).
    pub fn to_multipoly(&self) -> MultiPoly<K> {
        let mut p = MultiPoly::zero(4, &self.c[0]);
        for i in 0..=self.deg_x {
            for j in 0..=self.deg_y {
                let c = self.get(i, j);
                if c.is_zero() {
                    continue;
                }
                let exp = vec![
                    (self.deg_x - i) as u32,
                    i as u32,
                    (self.deg_y - j) as u32,
                    j as u32,
                ];
                p = p.add(&MultiPoly::monomial(4, exp, c.clone()));
            }
        }
        p
    }

    /// Inverse of `to_multipoly`; checks exact bihomogeneity of the stated
    /// bidegree.
    pub fn from_multipoly(deg_x: usize, deg_y: usize, p: &MultiPoly<K>) -> Result<Self> {
        assert_eq!(p.arity(), 4);
        let mut out = BiHomForm::zero(deg_x, deg_y, p.exemplar());
        for (e, c) in p.terms() {
            let (a0, a1, b0, b1) =
                (e.0[0] as usize, e.0[1] as usize, e.0[2] as usize, e.0[3] as usize);
            if a0 + a1 != deg_x || b0 + b1 != deg_y {
                return Err(Error::Parse(format!(
                    "term x0^{a0} x1^{a1} y0^{b0} y1^{b1} is not bihomogeneous of bidegree ({deg_x}, {deg_y})"
                )));
            }
            out.set(a1, b1, c.clone());
        }
        Ok(out)
    }

    pub fn format_with_vars(&self, names: &[&str; 4]) -> String {
        self.to_multipoly().format_with_vars(names)
    }
}

impl<K: Ring> fmt::Debug for BiHomForm<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "bidegree ({}, {}): {}",
            self.deg_x,
            self.deg_y,
            self.format_with_vars(&["x0", "x1", "y0", "y1"])
        )
    }
}

impl<K: Ring> fmt::Display for BiHomForm<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with_vars(&["x0", "x1", "y0", "y1"]))
    }
}

/// Views a bihomogeneous form as a form in its y-pair with coefficients
/// that are 4-variable polynomials supported on the x-pair slots given by
/// `x_slots`. Index k of the result is the coefficient of y0^(deg_y-k) y1^k.
pub fn y_coefficients_as_multipoly<K: Ring>(
    f: &BiHomForm<K>,
    x_slots: (usize, usize),
) -> Vec<MultiPoly<K>> {
    let (dx, dy) = f.bidegree();
    let mut out = vec![MultiPoly::zero(4, f.exemplar()); dy + 1];
    for i in 0..=dx {
        for j in 0..=dy {
            let c = f.get(i, j);
            if c.is_zero() {
                continue;
            }
            let mut exp = vec![0u32; 4];
            exp[x_slots.0] = (dx - i) as u32;
            exp[x_slots.1] = i as u32;
            out[j] = out[j].add(&MultiPoly::monomial(4, exp, c.clone()));
        }
    }
    out
}

/// Same viewed in the x-pair: index k is the coefficient of
/// x0^(deg_x-k) x1^k, supported on the y-pair slots.
pub fn x_coefficients_as_multipoly<K: Ring>(
    f: &BiHomForm<K>,
    y_slots: (usize, usize),
) -> Vec<MultiPoly<K>> {
    let (dx, dy) = f.bidegree();
    let mut out = vec![MultiPoly::zero(4, f.exemplar()); dx + 1];
    for i in 0..=dx {
        for j in 0..=dy {
            let c = f.get(i, j);
            if c.is_zero() {
                continue;
            }
            let mut exp = vec![0u32; 4];
            exp[y_slots.0] = (dy - j) as u32;
            exp[y_slots.1] = j as u32;
            out[i] = out[i].add(&MultiPoly::monomial(4, exp, c.clone()));
        }
    }
    out
}

/// Reads an arity-2 polynomial that should be homogeneous of the stated
/// degree into a binary form.
pub fn binary_from_multipoly<K: Ring>(deg: usize, p: &MultiPoly<K>) -> Result<BinaryForm<K>> {
    assert_eq!(p.arity(), 2);
    let mut out = BinaryForm::zero(deg, p.exemplar());
    for (e, c) in p.terms() {
        let (a, b) = (e.0[0] as usize, e.0[1] as usize);
        if a + b != deg {
            return Err(Error::Parse(format!(
                "term of degree {} in a form of degree {deg}",
                a + b
            )));
        }
        out.c[b] = c.clone();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, Rational};

    fn bf(deg: usize, cs: &[i64]) -> BinaryForm<Rational> {
        BinaryForm::new(deg, cs.iter().map(|&c| rat(c)).collect())
    }

    fn squaring_graph() -> BiHomForm<Rational> {
        // x0 y1^2 - x1 y0^2
        let mut f = BiHomForm::zero(1, 2, &rat(1));
        f.set(0, 2, rat(1));
        f.set(1, 0, rat(-1));
        f
    }

    #[test]
    fn diagonal_restriction() {
        let d = squaring_graph().diagonal();
        // z0 z1^2 - z1 z0^2
        assert_eq!(d, bf(3, &[0, -1, 1, 0]));
        assert_eq!(d.infinity_multiplicity(), 1);
    }

    #[test]
    fn partial_derivatives() {
        let f = squaring_graph();
        // df/dx1 = -y0^2 -> -z0^2 on the diagonal
        assert_eq!(f.partial(Var::X1).diagonal(), bf(2, &[-1, 0, 0]));
        // df/dy1 = 2 x0 y1 -> 2 z0 z1
        assert_eq!(f.partial(Var::Y1).diagonal(), bf(2, &[0, 2, 0]));
        // df/dx0 = y1^2 -> z1^2; df/dy0 = -2 x1 y0 -> -2 z0 z1
        assert_eq!(f.partial(Var::X0).diagonal(), bf(2, &[0, 0, 1]));
        assert_eq!(f.partial(Var::Y0).diagonal(), bf(2, &[0, -2, 0]));
    }

    #[test]
    fn form_division_tracks_formal_degree() {
        let a = bf(2, &[1, 1, 1]);
        let b = bf(2, &[0, 1, 0]); // z0 z1
        let prod = a.mul(&b);
        assert_eq!(prod.degree(), 4);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert!(bf(2, &[1, 0, 1]).exact_div(&bf(1, &[1, 1])).is_err());
    }

    #[test]
    fn proportionality() {
        assert!(bf(2, &[1, 2, 3]).proportional_to(&bf(2, &[2, 4, 6])));
        assert!(!bf(2, &[1, 2, 3]).proportional_to(&bf(2, &[2, 4, 7])));
        assert!(!bf(2, &[0, 2, 3]).proportional_to(&bf(2, &[2, 4, 6])));
    }

    #[test]
    fn multipoly_roundtrip() {
        let mut f: BiHomForm<Rational> = BiHomForm::zero(2, 1, &rat(1));
        f.set(0, 0, rat(3));
        f.set(2, 1, rat(-5));
        f.set(1, 1, rat(2));
        let p = f.to_multipoly();
        assert_eq!(BiHomForm::from_multipoly(2, 1, &p).unwrap(), f);
        assert!(BiHomForm::from_multipoly(1, 2, &p).is_err());
    }
}
