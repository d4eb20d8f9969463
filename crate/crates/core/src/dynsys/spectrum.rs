//! Multiplier spectrum forms.
//!
//! The spectrum of the formal-period-n points of a correspondence is encoded
//! as a binary form in (dx, dy) whose root (-m : 1) corresponds to a
//! periodic point of multiplier m, so the factor attached to multiplier m is
//! dx + m dy. Finite periodic points contribute through the resultant of the
//! formal-period divisor with the diagonal gradient data of the iterate;
//! a periodic point at infinity makes both diagonal partials vanish there,
//! so its factor is computed in the opposite chart and multiplied on.

use super::correspondence::Correspondence;
use super::forms::{binary_from_multipoly, BinaryForm, Var};
use crate::algebra::multipoly::MultiPoly;
use crate::algebra::rational::Rational;
use crate::algebra::resultant::resultant_formal;
use crate::algebra::ring::{Field, FiniteField, IntegralDomain, Ring};
use crate::algebra::unipoly::UniPoly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::Signed;
use std::fmt;

/// A multiplier spectrum, i.e. a point of the projectivized space of binary
/// forms of degree `form.degree()` in (dx, dy). The form is well defined up
/// to a nonzero scalar; `normalization` records how this representative was
/// produced.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumForm<K: Ring> {
    pub form: BinaryForm<K>,
    pub period: usize,
    pub normalization: String,
}

/// A multiplier: an element of the field or the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Multiplier<K> {
    Finite(K),
    Infinity,
}

impl<K: fmt::Display> fmt::Display for Multiplier<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplier::Finite(v) => write!(f, "{v}"),
            Multiplier::Infinity => write!(f, "inf"),
        }
    }
}

/// Point-level spectrum of the formal-period-n points (each orbit of length
/// n contributes its multiplier n times). Degree nu_n(d) + nu_n(e).
pub fn multiplier_spectrum<K: Field>(
    c: &Correspondence<K>,
    n: usize,
) -> Result<SpectrumForm<K>> {
    let psi = c.iterate(n)?;
    let pi_star = c.formal_periodic_form(n)?;
    let m_deg = pi_star.form.degree();

    // diagonal gradient data of the iterate in the finite chart
    let a = psi.form().partial(Var::X1).diagonal();
    let b = psi.form().partial(Var::Y1).diagonal();

    let k_inf = pi_star.form.infinity_multiplicity();
    let finite_part = BinaryForm::from_dehomogenized(
        m_deg - k_inf,
        &pi_star.form.dehomogenize(),
    );

    let zero = a.exemplar().zero_like();
    let one = zero.one_like();

    // res_z(finite part, A dx - B dy): each finite root z contributes the
    // factor A(z) dx - B(z) dy = A(z) (dx + m dy) with m = -B(z)/A(z)
    let pi_coeffs: Vec<MultiPoly<K>> = finite_part
        .coeffs()
        .iter()
        .map(|c| MultiPoly::constant(2, c.clone()))
        .collect();
    let lin_coeffs: Vec<MultiPoly<K>> = a
        .coeffs()
        .iter()
        .zip(b.coeffs().iter())
        .map(|(ai, bi)| {
            MultiPoly::monomial(2, vec![1, 0], ai.clone())
                .add(&MultiPoly::monomial(2, vec![0, 1], bi.neg()))
        })
        .collect();
    let spectrum_fin = if finite_part.degree() == 0 {
        // no finite formal-period points; resultant degenerates to a unit
        MultiPoly::constant(2, finite_part.coeff(0).clone())
    } else {
        resultant_formal(&pi_coeffs, &lin_coeffs)
    };
    if spectrum_fin.is_zero() {
        return Err(Error::MultiplierUndefined);
    }

    let mut total = binary_from_multipoly(m_deg - k_inf, &spectrum_fin)
        .expect("resultant in (dx, dy) is homogeneous of the divisor degree");
    if k_inf > 0 {
        // factor for the formal-period point at infinity, in the chart
        // u = x0/x1: alpha dx - beta dy with the opposite-chart partials
        let alpha = psi
            .form()
            .partial(Var::X0)
            .diagonal()
            .eval(&zero, &one);
        let beta = psi
            .form()
            .partial(Var::Y0)
            .diagonal()
            .eval(&zero, &one);
        if alpha.is_zero() && beta.is_zero() {
            return Err(Error::MultiplierUndefined);
        }
        let inf_factor = BinaryForm::new(1, vec![alpha, beta.neg()]);
        total = total.mul(&inf_factor.pow(k_inf));
    }
    debug_assert_eq!(total.degree(), m_deg);
    Ok(SpectrumForm {
        form: total,
        period: n,
        normalization: "resultant representative; defined up to a nonzero scalar".to_string(),
    })
}

/// Extracts the orbit-level spectrum: an n-th root of the point-level form,
/// of degree M/n. The representative is normalized so its first nonzero
/// coefficient in lex order on (dx, dy) is one, and `normalization` records
/// the scalar c with input = c * root^n.
pub fn spectrum_nth_root<K: Field>(s: &SpectrumForm<K>, n: usize) -> Result<SpectrumForm<K>> {
    assert!(n >= 1);
    if n == 1 {
        return Ok(s.clone());
    }
    let m = s.form.degree();
    if m % n != 0 {
        return Err(Error::NotPerfectPower);
    }
    if s.form.is_zero() {
        return Err(Error::NotPerfectPower);
    }
    let k_inf = s.form.infinity_multiplicity();
    if k_inf % n != 0 {
        return Err(Error::NotPerfectPower);
    }
    let p = s.form.dehomogenize();
    let (_, parts) = p.squarefree_decomposition()?;
    let one = p.exemplar().one_like();
    let mut root = UniPoly::one(&one);
    for (g, e) in &parts {
        if e % n != 0 {
            return Err(Error::NotPerfectPower);
        }
        root = root.mul(&g.pow((e / n) as u64));
    }
    let root_form = BinaryForm::from_dehomogenized(m / n, &root);
    // normalize the first nonzero coefficient (lex: dx^k first) to one
    let lead = root_form
        .coeffs()
        .iter()
        .find(|c| !c.is_zero())
        .expect("nonzero root")
        .clone();
    let normalized = root_form.scale(&lead.inv());
    // the scalar relating input and root^n, then verify exactly
    let power = normalized.pow(n);
    let idx = power
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero power");
    if s.form.coeff(idx).is_zero() {
        return Err(Error::NotPerfectPower);
    }
    let scalar = s.form.coeff(idx).div(power.coeff(idx));
    if power.scale(&scalar) != s.form {
        return Err(Error::NotPerfectPower);
    }
    Ok(SpectrumForm {
        form: normalized,
        period: s.period,
        normalization: format!(
            "first nonzero coefficient normalized to 1; input = ({scalar}) * root^{n}"
        ),
    })
}

/// Dehomogenizes the spectrum so multipliers become negated roots: the
/// polynomial q(w) = s(w, 1) read off the reversed coefficient vector.
fn multiplier_polynomial<K: Ring>(s: &SpectrumForm<K>) -> UniPoly<K> {
    let mut rev = s.form.coeffs().to_vec();
    rev.reverse();
    UniPoly::new(rev)
}

/// Multiplier multiset over a finite field; errors with the irreducible
/// factor degrees when the spectrum does not split.
pub fn multiplier_multiset_ff<K: FiniteField>(
    s: &SpectrumForm<K>,
    seed: u64,
) -> Result<Vec<Multiplier<K>>> {
    let q = multiplier_polynomial(s);
    let m = s.form.degree();
    if q.is_zero() {
        return Err(Error::MultiplierUndefined);
    }
    let finite_count = q.degree().unwrap();
    let fac = crate::algebra::factor::factor(&q, seed)?;
    let nonlinear: Vec<usize> = fac
        .factors
        .iter()
        .filter(|(g, _)| g.degree() != Some(1))
        .flat_map(|(g, e)| std::iter::repeat(g.degree().unwrap()).take(*e))
        .collect();
    if !nonlinear.is_empty() {
        return Err(Error::NonSplit { factor_degrees: nonlinear });
    }
    let mut out: Vec<Multiplier<K>> = Vec::new();
    for _ in 0..m - finite_count {
        out.push(Multiplier::Infinity);
    }
    for (g, e) in &fac.factors {
        // monic w + c has root -c; the multiplier is the negated root = c
        let mult = g.coeff(0);
        for _ in 0..*e {
            out.push(Multiplier::Finite(mult.clone()));
        }
    }
    sort_multipliers(&mut out);
    Ok(out)
}

/// Multiplier multiset over the rationals, by exact rational root
/// extraction; errors with the residual degree when irrational multipliers
/// remain (a splitting extension is then the caller's job).
pub fn multiplier_multiset_rational(
    s: &SpectrumForm<Rational>,
) -> Result<Vec<Multiplier<Rational>>> {
    let q = multiplier_polynomial(s);
    let m = s.form.degree();
    if q.is_zero() {
        return Err(Error::MultiplierUndefined);
    }
    let mut out: Vec<Multiplier<Rational>> = Vec::new();
    for _ in 0..m - q.degree().unwrap() {
        out.push(Multiplier::Infinity);
    }
    let mut rem = q;
    while rem.degree().map_or(false, |d| d >= 1) {
        match rational_root(&rem) {
            Some(r) => {
                let one = rat_one();
                let factor = UniPoly::new(vec![r.clone().neg(), one]);
                rem = rem.exact_div(&factor).expect("root gives a linear factor");
                // multiplier = negated root
                out.push(Multiplier::Finite(r.neg()));
            }
            None => {
                return Err(Error::NonSplit {
                    factor_degrees: vec![rem.degree().unwrap()],
                });
            }
        }
    }
    sort_multipliers(&mut out);
    Ok(out)
}

fn rat_one() -> Rational {
    num_traits::One::one()
}

/// One rational root of a rational polynomial, by the integer root bound on
/// the cleared-denominator form.
fn rational_root(p: &UniPoly<Rational>) -> Option<Rational> {
    // clear denominators
    let mut lcm = BigInt::from(1);
    for c in p.coeffs() {
        let den = c.denom();
        let g = num_integer::Integer::gcd(&lcm, den);
        lcm = lcm / g * den;
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let lead = ints.last().unwrap().clone();
    let low_idx = ints.iter().position(|c| !num_traits::Zero::is_zero(c))?;
    if low_idx > 0 {
        return Some(num_traits::Zero::zero());
    }
    let constant = ints[0].clone();
    for pd in divisors_of_big(&constant) {
        for qd in divisors_of_big(&lead) {
            for sign in [1i64, -1] {
                let cand = Rational::new(&pd * BigInt::from(sign), qd.clone());
                if num_traits::Zero::is_zero(&p.eval(&cand)) {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn divisors_of_big(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(1);
    while &d * &d <= n {
        if num_traits::Zero::is_zero(&(&n % &d)) {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

fn sort_multipliers<K: Ring>(out: &mut [Multiplier<K>]) {
    out.sort_by(|a, b| match (a, b) {
        (Multiplier::Infinity, Multiplier::Infinity) => std::cmp::Ordering::Equal,
        (Multiplier::Infinity, _) => std::cmp::Ordering::Greater,
        (_, Multiplier::Infinity) => std::cmp::Ordering::Less,
        (Multiplier::Finite(x), Multiplier::Finite(y)) => {
            format!("{x}").cmp(&format!("{y}"))
        }
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, rat_frac};
    use crate::dynsys::correspondence::graph_of_rational_map;

    fn bf(deg: usize, cs: &[i64]) -> BinaryForm<Rational> {
        BinaryForm::new(deg, cs.iter().map(|&c| rat(c)).collect())
    }

    fn monomial_graph(e: usize) -> Correspondence<Rational> {
        graph_of_rational_map(&UniPoly::monomial(rat(1), e), &UniPoly::one(&rat(1))).unwrap()
    }

    fn finite(v: i64) -> Multiplier<Rational> {
        Multiplier::Finite(rat(v))
    }

    #[test]
    fn squaring_fixed_point_spectrum() {
        // fixed points 0, 1, infinity with multipliers 0, 2, 0
        let c = monomial_graph(2);
        let s = multiplier_spectrum(&c, 1).unwrap();
        assert_eq!(s.form.degree(), 3);
        // dx^2 (dx + 2 dy) up to scalar
        assert!(s.form.proportional_to(&bf(3, &[1, 2, 0, 0])));
        let mults = multiplier_multiset_rational(&s).unwrap();
        assert_eq!(mults, vec![finite(0), finite(0), finite(2)]);
    }

    #[test]
    fn squaring_period_two_spectrum_is_a_square() {
        // the 2-cycle {omega, omega^2} has multiplier 4, appearing squared
        let c = monomial_graph(2);
        let s = multiplier_spectrum(&c, 2).unwrap();
        assert_eq!(s.form.degree(), 2);
        assert!(s.form.proportional_to(&bf(2, &[1, 8, 16]))); // (dx + 4 dy)^2
        let root = spectrum_nth_root(&s, 2).unwrap();
        assert_eq!(root.form, bf(1, &[1, 4])); // dx + 4 dy, normalized
        let mults = multiplier_multiset_rational(&s).unwrap();
        assert_eq!(mults, vec![finite(4), finite(4)]);
    }

    #[test]
    fn cubing_fixed_point_spectrum() {
        // fixed points 0, infinity, 1, -1 with multipliers 0, 0, 3, 3
        let c = monomial_graph(3);
        let s = multiplier_spectrum(&c, 1).unwrap();
        assert_eq!(s.form.degree(), 4);
        let mults = multiplier_multiset_rational(&s).unwrap();
        assert_eq!(mults, vec![finite(0), finite(0), finite(3), finite(3)]);
    }

    #[test]
    fn fixed_points_of_generic_quadratic_map() {
        // phi(z) = z^2 - 3/4: fixed points 3/2 and -1/2 with phi' = 2z,
        // multipliers 3 and -1; infinity is superattracting
        let num = UniPoly::new(vec![rat_frac(-3, 4), rat(0), rat(1)]);
        let den = UniPoly::one(&rat(1));
        let c = graph_of_rational_map(&num, &den).unwrap();
        let s = multiplier_spectrum(&c, 1).unwrap();
        let mults = multiplier_multiset_rational(&s).unwrap();
        assert_eq!(mults, vec![finite(-1), finite(0), finite(3)]);
    }

    #[test]
    fn conjugated_squaring_has_same_spectrum() {
        // phi(z) = z^2 / (2z - 1) is a Moebius conjugate of z^2: fixed
        // points 0, 1, infinity with multipliers 0, 0, 2
        let num = UniPoly::new(vec![rat(0), rat(0), rat(1)]);
        let den = UniPoly::new(vec![rat(-1), rat(2)]);
        let c = graph_of_rational_map(&num, &den).unwrap();
        let s = multiplier_spectrum(&c, 1).unwrap();
        let mults = multiplier_multiset_rational(&s).unwrap();
        assert_eq!(mults, vec![finite(0), finite(0), finite(2)]);
    }

    #[test]
    fn direct_derivative_oracle_matches_spectrum() {
        // for maps with rational fixed points, compare against direct
        // evaluation of phi' = (num' den - num den')/den^2 at each fixed
        // point, plus the chart-swap value at infinity for polynomials
        let cases: Vec<(Vec<i64>, Vec<i64>)> = vec![
            (vec![0, 0, 1], vec![1]),          // z^2
            (vec![0, 0, 0, 1], vec![1]),       // z^3
            (vec![0, 1, 1], vec![1]),          // z^2 + z
        ];
        for (ncs, dcs) in cases {
            let num = UniPoly::new(ncs.iter().map(|&c| rat(c)).collect::<Vec<_>>());
            let den = UniPoly::new(dcs.iter().map(|&c| rat(c)).collect::<Vec<_>>());
            let c = graph_of_rational_map(&num, &den).unwrap();
            let s = multiplier_spectrum(&c, 1).unwrap();
            let got = multiplier_multiset_rational(&s).unwrap();

            // oracle: roots of num - z den are the finite fixed points
            let fixed = num.sub(&den.mul_xpow(1));
            let dn = num.derivative();
            let dd = den.derivative();
            let mut expect: Vec<Multiplier<Rational>> = Vec::new();
            let mut rem = fixed.clone();
            while rem.degree().map_or(false, |d| d >= 1) {
                let Some(r) = super::rational_root(&rem) else { break };
                let lin = UniPoly::new(vec![r.clone().neg(), rat(1)]);
                rem = rem.exact_div(&lin).unwrap();
                let dv = dn.eval(&r).mul(&den.eval(&r)).sub(&num.eval(&r).mul(&dd.eval(&r)));
                expect.push(Multiplier::Finite(dv.div(&den.eval(&r).pow(2))));
            }
            // infinity is fixed for a polynomial of degree >= 2, multiplier 0
            if num.degree().unwrap() > den.degree().unwrap() {
                expect.push(Multiplier::Finite(rat(0)));
            }
            super::sort_multipliers(&mut expect);
            assert_eq!(got, expect, "map {num} / {den}");
        }
    }

    #[test]
    fn orbit_form_veronese_compatibility() {
        // the point-level form is exactly the orbit-level form raised to
        // the n-th power, up to the recorded scalar
        let c = monomial_graph(2);
        for n in [2usize, 3] {
            let s = multiplier_spectrum(&c, n).unwrap();
            let root = spectrum_nth_root(&s, n).unwrap();
            assert!(s.form.proportional_to(&root.form.pow(n)), "n = {n}");
        }
    }

    #[test]
    fn nth_root_requires_perfect_powers() {
        let s = SpectrumForm {
            form: bf(2, &[1, 1, 0]), // dx (dx + dy): not a square
            period: 2,
            normalization: String::new(),
        };
        assert_eq!(spectrum_nth_root(&s, 2), Err(Error::NotPerfectPower));
        // constructed square works with canonical scalar handling
        let sq = SpectrumForm {
            form: bf(4, &[4, 0, -8, 0, 4]), // 4 (dx^2 - dy^2)^2
            period: 2,
            normalization: String::new(),
        };
        let r = spectrum_nth_root(&sq, 2).unwrap();
        assert_eq!(r.form, bf(2, &[1, 0, -1]));
        // n = 1 returns the input
        let same = spectrum_nth_root(&sq, 1).unwrap();
        assert_eq!(same.form, sq.form);
    }

    #[test]
    fn pure_dx_power_means_all_zero_multipliers() {
        let s = SpectrumForm {
            form: bf(3, &[5, 0, 0, 0]), // 5 dx^3
            period: 1,
            normalization: String::new(),
        };
        let mults = multiplier_multiset_rational(&s).unwrap();
        assert_eq!(mults, vec![finite(0), finite(0), finite(0)]);
    }

    #[test]
    fn non_split_spectrum_reports_factor_degrees() {
        let s = SpectrumForm {
            form: bf(2, &[1, 0, 1]), // dx^2 + dy^2: multipliers +-i
            period: 1,
            normalization: String::new(),
        };
        assert_eq!(
            multiplier_multiset_rational(&s),
            Err(Error::NonSplit { factor_degrees: vec![2] })
        );
    }
}
