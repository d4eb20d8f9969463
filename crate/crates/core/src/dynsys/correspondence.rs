//! Correspondences on P^1 x P^1 as bihomogeneous forms: iteration by
//! resultant elimination, periodic-point divisors, and the formal-period
//! refinement obtained by dividing out shorter periods.
//!
//! Orientation: a correspondence of bidegree (d, e) sends y to the d values
//! of x with f(x, y) = 0, so the graph of a rational map phi has bidegree
//! (1, deg phi) with f = x0 * (denominator of phi in y) - x1 * (numerator).

use super::forms::{y_coefficients_as_multipoly, BiHomForm, BinaryForm};
use crate::algebra::multipoly::MultiPoly;
use crate::algebra::numth::{divisors, moebius};
use crate::algebra::rational::Rational;
use crate::algebra::resultant::resultant_formal;
use crate::algebra::ring::{Field, IntegralDomain, Ring};
use crate::algebra::unipoly::UniPoly;
use crate::error::{Error, Result};
use num_bigint::BigInt;

#[derive(Clone, PartialEq, Debug)]
pub struct Correspondence<K: Ring> {
    form: BiHomForm<K>,
}

/// Origin tag of a diagonal binary form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeriodKind {
    /// All points of period dividing n.
    Full,
    /// Points of formal period n (shorter periods divided out).
    Formal,
    Generic,
}

/// A binary form on the diagonal P^1 carrying its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicForm<K: Ring> {
    pub form: BinaryForm<K>,
    pub period: usize,
    pub kind: PeriodKind,
}

impl<K: Ring> Correspondence<K> {
    pub fn new(form: BiHomForm<K>) -> Result<Self> {
        let (d, e) = form.bidegree();
        if d == 0 || e == 0 {
            return Err(Error::Parse("bidegree components must be positive".to_string()));
        }
        if form.is_zero() {
            return Err(Error::Parse("zero form does not define a correspondence".to_string()));
        }
        Ok(Correspondence { form })
    }

    pub fn bidegree(&self) -> (usize, usize) {
        self.form.bidegree()
    }

    pub fn form(&self) -> &BiHomForm<K> {
        &self.form
    }
}

impl<K: IntegralDomain> Correspondence<K> {
    /// The defining form is diagonal-free when the diagonal x0 y1 - x1 y0
    /// does not divide it (checked by an exact division attempt).
    pub fn is_diagonal_free(&self) -> bool {
        let p = self.form.to_multipoly();
        let one = p.exemplar().one_like();
        let diag = MultiPoly::monomial(4, vec![1, 0, 0, 1], one.clone())
            .sub(&MultiPoly::monomial(4, vec![0, 1, 1, 0], one));
        p.exact_div(&diag).is_none()
    }

    /// n-th iterate, composing one step at a time by eliminating the shared
    /// point with a resultant. Bidegree (d^n, e^n).
    pub fn iterate(&self, n: usize) -> Result<Correspondence<K>> {
        assert!(n >= 1);
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.compose_with(self)?;
        }
        Ok(acc)
    }

    /// self o other: (self o other)(x, y) = res_w(self(x, w), other(w, y)).
    fn compose_with(&self, other: &Correspondence<K>) -> Result<Correspondence<K>> {
        let (da, ea) = self.bidegree();
        let (db, eb) = other.bidegree();
        // left factor as a form in w (its y-pair), x-coefficients in slots 0, 1
        let left = y_coefficients_as_multipoly(&self.form, (0, 1));
        // right factor as a form in w (its x-pair), y-coefficients in slots 2, 3
        let right = super::forms::x_coefficients_as_multipoly(&other.form, (2, 3));
        let res = resultant_formal(&left, &right);
        if res.is_zero() {
            return Err(Error::DegenerateComposition);
        }
        let form = BiHomForm::from_multipoly(da * db, ea * eb, &res)
            .expect("resultant of bihomogeneous data is bihomogeneous");
        Ok(Correspondence { form })
    }

    /// Divisor of points of period n: the n-th iterate restricted to the
    /// diagonal, formal degree d^n + e^n.
    pub fn periodic_form(&self, n: usize) -> Result<PeriodicForm<K>> {
        let psi = self.iterate(n)?;
        let diag = psi.form.diagonal();
        if diag.is_zero() {
            return Err(Error::DiagonalComponent);
        }
        Ok(PeriodicForm { form: diag, period: n, kind: PeriodKind::Full })
    }
}

impl<K: Field> Correspondence<K> {
    /// Divisor of points of formal period n: period-n divisor with every
    /// proper-divisor contribution divided out. Formal degree
    /// nu_n(d) + nu_n(e).
    pub fn formal_periodic_form(&self, n: usize) -> Result<PeriodicForm<K>> {
        let mut formal: Vec<(usize, BinaryForm<K>)> = Vec::new();
        for m in divisors(n as u64) {
            let m = m as usize;
            let full = self.periodic_form(m)?;
            let mut quotient = full.form;
            for (_, shorter) in formal.iter().filter(|(k, _)| m % k == 0 && *k < m) {
                quotient = quotient.exact_div(shorter)?;
            }
            formal.push((m, quotient));
        }
        let (_, form) = formal.pop().expect("n divides n");
        let (d, e) = self.bidegree();
        let expected = nu_at(n as u32, &BigInt::from(d as u64))
            + nu_at(n as u32, &BigInt::from(e as u64));
        debug_assert_eq!(BigInt::from(form.degree() as u64), expected);
        Ok(PeriodicForm { form, period: n, kind: PeriodKind::Formal })
    }
}

/// The polynomial counting points of formal period n:
/// nu_n(x) = sum over m | n of mu(n/m) x^m. It satisfies nu_1 = x and
/// nu_n = x^n - sum of nu_m over proper divisors m of n.
pub fn nu_poly(n: u32) -> UniPoly<Rational> {
    assert!(n >= 1);
    let one: Rational = num_traits::One::one();
    let mut acc = UniPoly::zero(&one);
    for m in divisors(n as u64) {
        let mu = moebius(n as u64 / m);
        if mu != 0 {
            acc = acc.add(&UniPoly::monomial(
                Rational::from_integer(BigInt::from(mu)),
                m as usize,
            ));
        }
    }
    acc
}

/// nu_n evaluated at an integer.
pub fn nu_at(n: u32, x: &BigInt) -> BigInt {
    let mut acc = BigInt::from(0);
    for m in divisors(n as u64) {
        let mu = moebius(n as u64 / m);
        if mu != 0 {
            acc += BigInt::from(mu) * x.pow(m as u32);
        }
    }
    acc
}

/// The three degree statistics of the n-th iterate over the universal
/// family: coefficient degree (d^n - e^n)/(d - e) (its polynomial limit
/// n d^(n-1) when d = e), the period-n divisor degree d^n + e^n, and the
/// formal-period divisor degree nu_n(d) + nu_n(e).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeData {
    pub iterate_coefficient_degree: BigInt,
    pub periodic_degree: BigInt,
    pub formal_periodic_degree: BigInt,
}

pub fn degree_formulas(d: u64, e: u64, n: u32) -> DegreeData {
    let (bd, be) = (BigInt::from(d), BigInt::from(e));
    let iterate_coefficient_degree = if d == e {
        // lim (d^n - e^n)/(d - e) = n d^(n-1)
        BigInt::from(n) * bd.pow(n - 1)
    } else {
        let num = bd.pow(n) - be.pow(n);
        let den = &bd - &be;
        num / den
    };
    DegreeData {
        iterate_coefficient_degree,
        periodic_degree: bd.pow(n) + be.pow(n),
        formal_periodic_degree: nu_at(n, &bd) + nu_at(n, &be),
    }
}

/// Embeds a rational map phi = numerator/denominator (univariate
/// coefficients, ascending) as the bidegree-(1, deg) correspondence
/// x0 * denominator_hom(y) - x1 * numerator_hom(y), oriented so that the
/// diagonal multiplier data reproduces phi' at fixed points.
pub fn graph_of_rational_map<K: Field>(
    numerator: &UniPoly<K>,
    denominator: &UniPoly<K>,
) -> Result<Correspondence<K>> {
    if numerator.is_zero() || denominator.is_zero() {
        return Err(Error::Parse("rational map needs nonzero numerator and denominator".to_string()));
    }
    let deg = numerator
        .degree()
        .unwrap()
        .max(denominator.degree().unwrap());
    if deg == 0 {
        return Err(Error::Parse("constant map has bidegree (1, 0)".to_string()));
    }
    let ex = numerator.exemplar();
    let mut form = BiHomForm::zero(1, deg, ex);
    // homogenize p(u) of formal degree `deg` as sum p_j y0^(deg-j) y1^j;
    // the orientation x0 * num - x1 * den makes the diagonal gradient data
    // reproduce phi' at fixed points (checked by the derivative oracle)
    for j in 0..=deg {
        form.set(0, j, numerator.coeff(j));
        form.set(1, j, denominator.coeff(j).neg());
    }
    Correspondence::new(form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, Rational};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub fn monomial_map_graph(e: usize) -> Correspondence<Rational> {
        // graph of z -> z^e: f = x0 y1^e - x1 y0^e
        let num = UniPoly::monomial(rat(1), e);
        let den = UniPoly::one(&rat(1));
        graph_of_rational_map(&num, &den).unwrap()
    }

    fn bf(deg: usize, cs: &[i64]) -> BinaryForm<Rational> {
        BinaryForm::new(deg, cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn squaring_graph_has_expected_form() {
        let c = monomial_map_graph(2);
        assert_eq!(c.bidegree(), (1, 2));
        let p = c.form().to_multipoly();
        assert_eq!(p.format_with_vars(&["x0", "x1", "y0", "y1"]), "x0*y1^2 - x1*y0^2");
        assert!(c.is_diagonal_free());
    }

    #[test]
    fn iterating_squaring_gives_fourth_power() {
        let c = monomial_map_graph(2);
        let c2 = c.iterate(2).unwrap();
        assert_eq!(c2.bidegree(), (1, 4));
        let expected = monomial_map_graph(4);
        // equality up to scalar
        let got = c2.form().diagonal();
        let want = expected.form().diagonal();
        assert!(got.proportional_to(&want));
        // and the full forms agree up to scalar as 4-variable polynomials
        let a = c2.form().to_multipoly();
        let b = expected.form().to_multipoly();
        let (ea, ca) = a.leading_term().unwrap();
        let (eb, cb) = b.leading_term().unwrap();
        assert_eq!(ea, eb);
        assert_eq!(a.scale(cb), b.scale(ca));
    }

    #[test]
    fn iterate_once_is_identity() {
        let c = monomial_map_graph(3);
        assert_eq!(c.iterate(1).unwrap(), c);
    }

    #[test]
    fn iteration_is_multiplicative_up_to_scalar() {
        // graphs of bidegree (1, 2) and (1, 3), and a bidegree-(2, 1)
        // correspondence (the transpose of squaring)
        let mut transpose = BiHomForm::zero(2, 1, &rat(1));
        transpose.set(0, 1, rat(1));
        transpose.set(2, 0, rat(-1));
        let cases = vec![
            monomial_map_graph(2),
            monomial_map_graph(3),
            Correspondence::new(transpose).unwrap(),
        ];
        for (k, c) in cases.into_iter().enumerate() {
            let a = c.iterate(4).unwrap();
            let b = c.iterate(2).unwrap().iterate(2).unwrap();
            assert_eq!(a.bidegree(), b.bidegree());
            let pa = a.form().to_multipoly();
            let pb = b.form().to_multipoly();
            let (_, ca) = pa.leading_term().unwrap();
            let (_, cb) = pb.leading_term().unwrap();
            assert_eq!(pa.scale(cb), pb.scale(ca), "case {k}");
        }
    }

    #[test]
    fn periodic_forms_of_squaring() {
        let c = monomial_map_graph(2);
        let p1 = c.periodic_form(1).unwrap();
        assert_eq!(p1.form, bf(3, &[0, -1, 1, 0])); // z0 z1^2 - z1 z0^2
        let p2 = c.periodic_form(2).unwrap();
        assert_eq!(p2.form.degree(), 5);
        assert!(p2.form.proportional_to(&bf(5, &[0, -1, 0, 0, 1, 0])));
        // formal period 2: the primitive cube roots of unity
        let s2 = c.formal_periodic_form(2).unwrap();
        assert_eq!(s2.form.degree(), 2);
        assert!(s2.form.proportional_to(&bf(2, &[1, 1, 1])));
    }

    #[test]
    fn formal_period_one_is_the_full_divisor() {
        let c = monomial_map_graph(3);
        let full = c.periodic_form(1).unwrap();
        let formal = c.formal_periodic_form(1).unwrap();
        assert_eq!(full.form, formal.form);
        assert_eq!(formal.kind, PeriodKind::Formal);
    }

    #[test]
    fn diagonal_containing_form_is_rejected_by_periodic_form() {
        // f = (x0 y1 - x1 y0) * (x0 y1 + x1 y0): contains the diagonal
        let one = rat(1);
        let diag = MultiPoly::monomial(4, vec![1, 0, 0, 1], one.clone())
            .sub(&MultiPoly::monomial(4, vec![0, 1, 1, 0], one.clone()));
        let other = MultiPoly::monomial(4, vec![1, 0, 0, 1], one.clone())
            .add(&MultiPoly::monomial(4, vec![0, 1, 1, 0], one));
        let form = BiHomForm::from_multipoly(2, 2, &diag.mul(&other)).unwrap();
        let c = Correspondence::new(form).unwrap();
        assert!(!c.is_diagonal_free());
        assert_eq!(c.periodic_form(1), Err(Error::DiagonalComponent));
    }

    #[test]
    fn random_cubic_graph_formal_degree() {
        // degree check: nu_2(1) + nu_2(3) = 0 + 6
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let num = UniPoly::new((0..4).map(|_| rat(rng.random_range(-9..=9))).collect::<Vec<_>>());
        let den = UniPoly::new((0..3).map(|_| rat(rng.random_range(-9..=9))).collect::<Vec<_>>());
        let c = graph_of_rational_map(&num, &den).unwrap();
        assert_eq!(c.bidegree(), (1, 3));
        let s2 = c.formal_periodic_form(2).unwrap();
        assert_eq!(s2.form.degree(), 6);
    }

    #[test]
    fn universal_bidegree_2_1_iterate_coefficient_degree() {
        // all six coefficients symbolic; every coefficient of the second
        // iterate has total degree (d^2 - e^2)/(d - e) = 3 in them
        let one = rat(1);
        let ex = MultiPoly::zero(6, &one);
        let mut form: BiHomForm<MultiPoly<Rational>> = BiHomForm::zero(2, 1, &ex);
        let mut idx = 0;
        for i in 0..=2 {
            for j in 0..=1 {
                form.set(i, j, MultiPoly::variable(6, idx, &one));
                idx += 1;
            }
        }
        let c = Correspondence::new(form).unwrap();
        let c2 = c.iterate(2).unwrap();
        assert_eq!(c2.bidegree(), (4, 1));
        let mut seen = 0;
        let (dx, dy) = c2.bidegree();
        for i in 0..=dx {
            for j in 0..=dy {
                let coeff = c2.form().get(i, j);
                if !coeff.is_zero() {
                    assert_eq!(coeff.total_degree(), Some(3));
                    seen += 1;
                }
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn nu_polynomials() {
        assert_eq!(nu_poly(1).format_with_var("x"), "x");
        assert_eq!(nu_poly(2).format_with_var("x"), "x^2 - x");
        assert_eq!(nu_poly(6).format_with_var("x"), "x^6 - x^3 - x^2 + x");
        // recursive definition as an independent oracle
        fn nu_rec(n: u32) -> UniPoly<Rational> {
            let one = rat(1);
            let mut acc = UniPoly::monomial(one, n as usize);
            for m in divisors(n as u64) {
                if (m as u32) < n {
                    acc = acc.sub(&nu_rec(m as u32));
                }
            }
            acc
        }
        for n in 1..=12u32 {
            assert_eq!(nu_poly(n), nu_rec(n), "n = {n}");
        }
        // sum over divisors recovers x^n
        for n in 1..=24u32 {
            let one = rat(1);
            let mut acc = UniPoly::zero(&one);
            for m in divisors(n as u64) {
                acc = acc.add(&nu_poly(m as u32));
            }
            assert_eq!(acc, UniPoly::monomial(rat(1), n as usize), "n = {n}");
        }
    }

    #[test]
    fn degree_formula_examples() {
        let d = degree_formulas(1, 3, 2);
        assert_eq!(d.iterate_coefficient_degree, BigInt::from(4));
        assert_eq!(d.periodic_degree, BigInt::from(10));
        assert_eq!(d.formal_periodic_degree, BigInt::from(6));
        let d = degree_formulas(2, 1, 2);
        assert_eq!(d.iterate_coefficient_degree, BigInt::from(3));
        assert_eq!(d.periodic_degree, BigInt::from(5));
        assert_eq!(d.formal_periodic_degree, BigInt::from(2));
        let d = degree_formulas(4, 7, 1);
        assert_eq!(d.iterate_coefficient_degree, BigInt::from(1));
        assert_eq!(d.periodic_degree, BigInt::from(11));
        assert_eq!(d.formal_periodic_degree, BigInt::from(11));
        // d = e takes the polynomial limit value n d^(n-1)
        let d = degree_formulas(3, 3, 2);
        assert_eq!(d.iterate_coefficient_degree, BigInt::from(6));
    }

    #[test]
    fn per_star_degrees_sum_to_full_degree() {
        for e in [2usize, 3] {
            let c = monomial_map_graph(e);
            for n in [2usize, 4] {
                let full = c.periodic_form(n).unwrap().form.degree();
                let mut total = 0;
                for m in divisors(n as u64) {
                    total += c.formal_periodic_form(m as usize).unwrap().form.degree();
                }
                assert_eq!(total, full, "e = {e}, n = {n}");
            }
        }
    }
}
