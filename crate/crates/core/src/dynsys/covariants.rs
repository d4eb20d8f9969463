//! Covariants of cubic correspondences (bidegree (1, 3)): the diagonal
//! quartic, the transvectant quadratic, and the discriminant-resultants
//! obtained by expanding res_z(f4, f4' + z f2 t) in the formal variable t.

use super::correspondence::Correspondence;
use super::forms::BinaryForm;
use crate::algebra::rational::Rational;
use crate::algebra::resultant::{lagrange_interpolate, resultant_formal};
use crate::algebra::ring::{Field, IntegralDomain, Ring};
use crate::algebra::unipoly::UniPoly;
use crate::error::{Error, Result};
use num_bigint::BigInt;

/// The two fundamental covariants of a bidegree-(1, 3) correspondence.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicCovariants<K: Ring> {
    /// Diagonal restriction, a binary quartic.
    pub quartic: BinaryForm<K>,
    /// Mixed second partial (x0 y1 - x1 y0 direction) on the diagonal,
    /// scaled by 1/3, a binary quadratic.
    pub quadratic: BinaryForm<K>,
}

/// Coefficients of res_z(f4, d_z f4 + z f2 t) as a polynomial in t, plus
/// the two signed combinations used by the fixed-point multiplier system.
///
/// The homogenization pairs the derivative in one chart with the
/// complementary homogenizing variable (d/dz1 with z0 f2 t): among the four
/// possible pairings this is the one (up to swapping charts) whose t^1
/// coefficient vanishes identically, which is why the classical index set
/// is {0, 2, 3, 4}. The t^1 slot is still reported so the vanishing stays
/// observable.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscriminantResultants<K: Ring> {
    /// sigma[r] is the coefficient of t^r, r = 0..4; sigma[1] is identically
    /// zero in this pairing.
    pub sigma: Vec<K>,
    pub sigma_plus: K,
    pub sigma_minus: K,
}

pub fn cubic_covariants<K: Field>(c: &Correspondence<K>) -> Result<CubicCovariants<K>> {
    if c.bidegree() != (1, 3) {
        return Err(Error::OutOfRange(format!(
            "cubic covariants need bidegree (1, 3), got {:?}",
            c.bidegree()
        )));
    }
    let f = c.form();
    let quartic = f.diagonal();
    let mixed = f
        .partial(super::forms::Var::X0)
        .partial(super::forms::Var::Y1)
        .diagonal()
        .sub_form(
            &f.partial(super::forms::Var::X1)
                .partial(super::forms::Var::Y0)
                .diagonal(),
        );
    let one = quartic.exemplar().one_like();
    let three = one.add(&one).add(&one);
    let quadratic = mixed.scale(&three.inv());
    Ok(CubicCovariants { quartic, quadratic })
}

impl<K: Ring> BinaryForm<K> {
    fn sub_form(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        let coeffs = self
            .coeffs()
            .iter()
            .zip(other.coeffs().iter())
            .map(|(a, b)| a.sub(b))
            .collect();
        BinaryForm::new(self.degree(), coeffs)
    }
}

/// Expands res_z(f4, d/dz1 f4 + z0 f2 t) exactly, with t transcendental:
/// the coefficients sigma_r are bihomogeneous of degree (7 - r) in f4 and
/// r in f2.
pub fn discriminant_resultants<K: IntegralDomain>(
    quartic: &BinaryForm<K>,
    quadratic: &BinaryForm<K>,
) -> Result<DiscriminantResultants<K>> {
    if quartic.is_zero() {
        return Err(Error::Parse("zero quartic has no discriminant data".to_string()));
    }
    assert_eq!(quartic.degree(), 4);
    assert_eq!(quadratic.degree(), 2);
    let zero = quartic.exemplar().zero_like();
    let t_zero = UniPoly::zero(&zero);

    // first argument: f4 with t-constant coefficients
    let f4_coeffs: Vec<UniPoly<K>> = quartic
        .coeffs()
        .iter()
        .map(|c| UniPoly::constant(c.clone()))
        .collect();

    // second argument: d/dz1 f4 + z0 * f2 * t, a z-form of degree 3
    let d_f4 = derivative_z1(quartic);
    let shifted_f2 = shift_z0(quadratic); // z0 * f2, degree 3
    let mut second: Vec<UniPoly<K>> = Vec::with_capacity(4);
    for i in 0..=3 {
        let constant = d_f4.coeff(i).clone();
        let linear = shifted_f2.coeff(i).clone();
        let mut coeffs = vec![constant, linear];
        if coeffs.iter().all(|c| c.is_zero()) {
            coeffs = vec![zero.clone()];
        }
        second.push(UniPoly::new(coeffs));
    }
    let _ = t_zero;

    let res = resultant_formal(&f4_coeffs, &second);
    let mut sigma: Vec<K> = (0..=4).map(|r| res.coeff(r)).collect();
    while sigma.len() < 5 {
        sigma.push(zero.clone());
    }
    let sigma_plus = sigma[0].add(&sigma[2]).add(&sigma[3]).add(&sigma[4]);
    let sigma_minus = sigma[0].add(&sigma[2]).sub(&sigma[3]).add(&sigma[4]);
    Ok(DiscriminantResultants { sigma, sigma_plus, sigma_minus })
}

/// d/dz1 of a binary form, kept at formal degree deg - 1.
fn derivative_z1<K: Ring>(f: &BinaryForm<K>) -> BinaryForm<K> {
    let deg = f.degree();
    assert!(deg >= 1);
    let mut c = vec![f.exemplar().zero_like(); deg];
    for i in 1..=deg {
        let mut scaled = f.coeff(i).zero_like();
        for _ in 0..i {
            scaled = scaled.add(f.coeff(i));
        }
        c[i - 1] = scaled;
    }
    BinaryForm::new(deg - 1, c)
}

/// z0 * f, formal degree deg + 1 (z1-exponents unchanged).
fn shift_z0<K: Ring>(f: &BinaryForm<K>) -> BinaryForm<K> {
    let deg = f.degree();
    let mut c = vec![f.exemplar().zero_like(); deg + 2];
    for i in 0..=deg {
        c[i] = f.coeff(i).clone();
    }
    BinaryForm::new(deg + 1, c)
}

/// Independent evaluation route: specialize t to field values and
/// interpolate the degree-at-most-4 polynomial in t.
pub fn discriminant_resultants_by_interpolation(
    quartic: &BinaryForm<Rational>,
    quadratic: &BinaryForm<Rational>,
) -> Result<DiscriminantResultants<Rational>> {
    if quartic.is_zero() {
        return Err(Error::Parse("zero quartic has no discriminant data".to_string()));
    }
    let d_f4 = derivative_z1(quartic);
    let shifted_f2 = shift_z0(quadratic);
    let mut points = Vec::new();
    for t in 0..5i64 {
        let tv = Rational::from_integer(BigInt::from(t));
        let second: Vec<Rational> = (0..=3)
            .map(|i| d_f4.coeff(i).add(&shifted_f2.coeff(i).mul(&tv)))
            .collect();
        let value = resultant_formal(quartic.coeffs(), &second);
        points.push((tv, value));
    }
    let poly = lagrange_interpolate(&points);
    let sigma: Vec<Rational> = (0..=4).map(|r| poly.coeff(r)).collect();
    let sigma_plus = sigma[0].add(&sigma[2]).add(&sigma[3]).add(&sigma[4]);
    let sigma_minus = sigma[0].add(&sigma[2]).sub(&sigma[3]).add(&sigma[4]);
    Ok(DiscriminantResultants { sigma, sigma_plus, sigma_minus })
}
