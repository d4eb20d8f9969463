//! Resultants via Sylvester determinants with fraction-free elimination.
//!
//! The determinant route works over any integral domain, which is what the
//! iteration and elimination pipelines need (coefficients there are
//! themselves polynomials). A Euclidean fast path is provided for univariate
//! polynomials over a field; the two routes are cross-checked in tests.
//!
//! Sign convention: the resultant is det of the Sylvester matrix whose first
//! `deg g` rows hold the coefficients of `f` in descending order. With that
//! layout `res(x - a, x - b) = a - b`.

use super::ring::{Field, IntegralDomain, Ring};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Determinant by the Bareiss fraction-free algorithm; every division is
/// exact over an integral domain. Consumes the matrix.
pub fn det_bareiss<D: IntegralDomain>(mut m: Vec<Vec<D>>, one: &D) -> D {
    let n = m.len();
    if n == 0 {
        return one.one_like();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign_flip = false;
    let mut prev = one.one_like();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return one.zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            m[i][k] = m[i][k].zero_like();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

/// Sylvester matrix on full coefficient vectors of formal degrees
/// `f.len() - 1` and `g.len() - 1`, coefficients ascending.
fn sylvester<D: Ring>(f: &[D], g: &[D]) -> Vec<Vec<D>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let zero = f[0].zero_like();
    let mut mat = vec![vec![zero; size]; size];
    for r in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            mat[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            mat[n + r][r + k] = c.clone();
        }
    }
    mat
}

/// Resultant of two univariate polynomials over an integral domain, using
/// their actual degrees. One zero input gives 0; two give an error.
pub fn resultant<D: IntegralDomain>(f: &UniPoly<D>, g: &UniPoly<D>) -> Result<D> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::UndefinedResultant);
    }
    if f.is_zero() || g.is_zero() {
        return Ok(f.exemplar().zero_like());
    }
    Ok(resultant_formal(f.coeffs(), g.coeffs()))
}

/// Resultant of binary forms given by full coefficient vectors (ascending in
/// the second variable); vanishing leading coefficients encode roots at
/// infinity and are part of the formal degree.
pub fn resultant_formal<D: IntegralDomain>(f: &[D], g: &[D]) -> D {
    let one = f[0].one_like();
    let m = f.len() - 1;
    let n = g.len() - 1;
    if m == 0 {
        return f[0].pow(n as u64);
    }
    if n == 0 {
        return g[0].pow(m as u64);
    }
    det_bareiss(sylvester(f, g), &one)
}

/// Euclidean-remainder resultant for univariate polynomials over a field.
/// Much faster than the determinant for the elimination inner loops.
pub fn resultant_field<K: Field>(f: &UniPoly<K>, g: &UniPoly<K>) -> Result<K> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::UndefinedResultant);
    }
    if f.is_zero() || g.is_zero() {
        return Ok(f.exemplar().zero_like());
    }
    let mut a = f.clone();
    let mut b = g.clone();
    let mut acc = f.exemplar().one_like();
    loop {
        let db = b.degree().unwrap();
        if db == 0 {
            let da = a.degree().unwrap();
            return Ok(acc.mul(&b.lc().pow(da as u64)));
        }
        let r = a.rem(&b);
        let da = a.degree().unwrap();
        if r.is_zero() {
            return Ok(acc.zero_like());
        }
        let dr = r.degree().unwrap();
        // res(a, b) = (-1)^{da db} lc(b)^{da - dr} res(b, r)
        let mut step = b.lc().pow((da - dr) as u64);
        if (da * db) % 2 == 1 {
            step = step.neg();
        }
        acc = acc.mul(&step);
        a = b;
        b = r;
    }
}

/// Lagrange interpolation through distinct nodes.
pub fn lagrange_interpolate<K: Field>(points: &[(K, K)]) -> UniPoly<K> {
    assert!(!points.is_empty());
    let one = points[0].0.one_like();
    let mut acc = UniPoly::zero(&one);
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = UniPoly::one(&one);
        let mut denom = one.clone();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&UniPoly::new(vec![xj.neg(), one.clone()]));
            denom = denom.mul(&xi.sub(xj));
        }
        acc = acc.add(&basis.scale(&yi.div(&denom)));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::multipoly::MultiPoly;
    use crate::algebra::primefield::PrimeField;
    use crate::algebra::rational::{rat, Rational};

    fn p(cs: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn linear_case_fixes_sign() {
        // res(x - a, x - b) = a - b with symbolic a, b
        let one = rat(1);
        let a = MultiPoly::variable(2, 0, &one);
        let b = MultiPoly::variable(2, 1, &one);
        let f = UniPoly::new(vec![a.neg(), a.one_like()]);
        let g = UniPoly::new(vec![b.neg(), b.one_like()]);
        let r = resultant(&f, &g).unwrap();
        assert_eq!(r, a.sub(&b));
    }

    #[test]
    fn evaluation_oracle() {
        // res(x^2 - 1, x - 2) = product of (root - evaluations): g at roots
        // 1, -1 gives (1-2)(-1-2) = 3
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-2, 1])).unwrap(), rat(3));
        // shared roots
        let f = p(&[1, 2, 3, 1]);
        assert_eq!(resultant(&f, &f).unwrap(), rat(0));
        assert!(resultant(&p(&[0]), &p(&[0])).is_err());
        assert_eq!(resultant(&p(&[0]), &p(&[1, 1])).unwrap(), rat(0));
    }

    #[test]
    fn binary_forms_with_roots_at_infinity() {
        // F = z1^2 (double root at infinity in our chart), G = z0:
        // full-vector Sylvester determinant is 1, in particular nonzero.
        let f = [rat(0), rat(0), rat(1)];
        let g = [rat(1), rat(0)];
        assert_eq!(resultant_formal(&f, &g), rat(1));
        // F = z0, G = z1 -> +-1
        let r = resultant_formal(&[rat(1), rat(0)], &[rat(0), rat(1)]);
        assert!(r == rat(1) || r == rat(-1));
        // shared root (z0 - z1)
        let sq = [rat(1), rat(-2), rat(1)];
        let lin = [rat(1), rat(-1)];
        assert_eq!(resultant_formal(&sq, &lin), rat(0));
    }

    #[test]
    fn multiplicative_in_second_argument() {
        let f = p(&[2, 0, 1]);
        let g = p(&[-3, 1, 1]);
        let h = p(&[1, 4]);
        let lhs = resultant(&f, &g.mul(&h)).unwrap();
        let rhs = resultant(&f, &g).unwrap() * resultant(&f, &h).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn swap_sign_rule() {
        let f = p(&[1, 2, 0, 1]);
        let g = p(&[-5, 1, 3]);
        let fg = resultant(&f, &g).unwrap();
        let gf = resultant(&g, &f).unwrap();
        // (-1)^{3*2} = +1
        assert_eq!(fg, gf);
        let h = p(&[4, 1]);
        let fh = resultant(&f, &h).unwrap();
        let hf = resultant(&h, &f).unwrap();
        // (-1)^{3*1} = -1
        assert_eq!(fh, -hf);
    }

    #[test]
    fn field_route_matches_determinant() {
        let fld = PrimeField::new(101).unwrap();
        let mk = |cs: &[i64]| UniPoly::new(cs.iter().map(|&c| fld.elem(c)).collect());
        let cases = [
            (vec![3, 1, 0, 2], vec![5, 7, 1]),
            (vec![1, 0, 0, 0, 1], vec![2, 1]),
            (vec![-1, 1], vec![4, 4, 4]),
            (vec![6, 0, 1], vec![6, 0, 1]),
        ];
        for (a, b) in cases {
            let f = mk(&a);
            let g = mk(&b);
            assert_eq!(
                resultant_field(&f, &g).unwrap(),
                resultant(&f, &g).unwrap(),
                "{f} vs {g}"
            );
        }
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = p(&[2, -1, 0, 5]);
        let pts: Vec<(Rational, Rational)> =
            (0..4).map(|i| (rat(i), f.eval(&rat(i)))).collect();
        assert_eq!(lagrange_interpolate(&pts), f);
    }
}
