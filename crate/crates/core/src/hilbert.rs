//! Exact Hilbert series P(t) / prod_i (1 - t^{a_i}): power-series
//! coefficients, pole order and volume at t = 1, saturator, Veronese
//! sections through a cyclotomic root-of-unity filter, and the volume-ratio
//! bound on extension degrees of the associated rational function fields.

use crate::algebra::cyclotomic::CycloField;
use crate::algebra::rational::Rational;
use crate::algebra::ring::{IntegralDomain, Ring};
use crate::algebra::unipoly::UniPoly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::Signed;

/// A rational function P(t) / prod (1 - t^{a_i}) with integer numerator.
/// The representation is kept exactly as constructed (it is part of the
/// interchange format); cancellations happen inside the computations that
/// need them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Vec<BigInt>,
    denominator_exponents: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VolumeReport {
    /// Order of the pole at t = 1 (can be nonpositive for degenerate input).
    pub pole_order: i64,
    /// lim (1-t)^pole_order H(t) at t = 1, as an exact rational.
    pub volume: Rational,
    /// gcd of the degrees carrying nonzero coefficients; `None` when only
    /// degree 0 is occupied.
    pub saturator: Option<u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticReport {
    pub pole_order: i64,
    pub volume: Rational,
    pub i_max: usize,
    /// Smallest C with |coeff(i) (r-1)!/i^{r-1} - Vol| <= C/i on the window
    /// [i_max/2, i_max].
    pub empirical_c: Rational,
    pub error_at_i_max: Rational,
}

impl HilbertSeries {
    pub fn new(numerator: Vec<BigInt>, denominator_exponents: Vec<usize>) -> Result<Self> {
        if numerator.iter().all(|c| c.is_zero()) {
            return Err(Error::Parse("zero numerator".to_string()));
        }
        if denominator_exponents.iter().any(|&a| a == 0) {
            return Err(Error::Parse(
                "denominator factor (1 - t^0) vanishes identically".to_string(),
            ));
        }
        let mut numerator = numerator;
        while numerator.last().map_or(false, |c| c.is_zero()) {
            numerator.pop();
        }
        let mut denominator_exponents = denominator_exponents;
        denominator_exponents.sort_unstable();
        Ok(HilbertSeries { numerator, denominator_exponents })
    }

    /// Convenience: numerator from small integers.
    pub fn from_ints(numerator: &[i64], denominator_exponents: &[usize]) -> Result<Self> {
        Self::new(
            numerator.iter().map(|&c| BigInt::from(c)).collect(),
            denominator_exponents.to_vec(),
        )
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn denominator_exponents(&self) -> &[usize] {
        &self.denominator_exponents
    }

    /// First `n + 1` power-series coefficients.
    pub fn series_coefficients(&self, n: usize) -> Vec<BigInt> {
        let mut c = vec![BigInt::from(0); n + 1];
        for (i, v) in self.numerator.iter().enumerate().take(n + 1) {
            c[i] = v.clone();
        }
        for &a in &self.denominator_exponents {
            for i in a..=n {
                let prev = c[i - a].clone();
                c[i] += prev;
            }
        }
        c
    }

    fn numerator_poly(&self) -> UniPoly<BigInt> {
        UniPoly::new(self.numerator.clone())
    }

    /// Pole order at t = 1 and the exact limit of (1-t)^order * H there.
    pub fn volume(&self) -> VolumeReport {
        let one_minus_t = UniPoly::new(vec![BigInt::from(1), BigInt::from(-1)]);
        let mut num = self.numerator_poly();
        let mut stripped = 0i64;
        while num.eval(&BigInt::from(1)).is_zero() {
            num = num.exact_div(&one_minus_t).expect("root at 1 means (1 - t) divides");
            stripped += 1;
        }
        let pole_order = self.denominator_exponents.len() as i64 - stripped;
        // each factor (1 - t^a) = (1 - t)(1 + t + ... + t^{a-1}) contributes a
        // at t = 1 after the pole is cancelled
        let mut denom_value = BigInt::from(1);
        for &a in &self.denominator_exponents {
            denom_value *= BigInt::from(a as u64);
        }
        let volume = Rational::new(num.eval(&BigInt::from(1)), denom_value);
        VolumeReport { pole_order, volume, saturator: self.saturator().ok() }
    }

    /// gcd of all degrees i >= 1 with a nonzero series coefficient. The
    /// inspection window deg(P) + sum(a_i) suffices: beyond it the occupied
    /// degrees form the numerical semigroup already visible inside it.
    pub fn saturator(&self) -> Result<u64> {
        let window = self.numerator.len() - 1 + self.denominator_exponents.iter().sum::<usize>();
        let coeffs = self.series_coefficients(window);
        let mut g: u64 = 0;
        for (i, c) in coeffs.iter().enumerate().skip(1) {
            if !c.is_zero() {
                g = crate::algebra::numth::gcd_u64(g, i as u64);
            }
        }
        if g == 0 {
            Err(Error::ZeroDimensional)
        } else {
            Ok(g)
        }
    }

    /// Hilbert series of the degree-multiples-of-n subalgebra, regraded so
    /// its coefficient at s^i is the coefficient of t^{ni} here. Computed by
    /// the exact root-of-unity filter (1/n) sum_j H(zeta^j u) in the
    /// cyclotomic field of order n, with the denominator re-expressed on the
    /// exponents a_i / gcd(a_i, n). Errors when the degrees divisible by n
    /// carry nothing at all (the section is the zero series).
    pub fn veronese_section(&self, n: usize) -> Result<HilbertSeries> {
        assert!(n >= 1);
        if n == 1 {
            return Ok(self.clone());
        }
        let field = CycloField::new(n as u32);
        let zeta = field.zeta();
        let one = field.one();
        let target_exponents: Vec<usize> = self
            .denominator_exponents
            .iter()
            .map(|&a| a / (crate::algebra::numth::gcd_u64(a as u64, n as u64) as usize))
            .collect();
        // T(u) = prod (1 - u^{n b_i}) is divisible by every branch
        // denominator D_j(u) = prod (1 - (zeta^j u)^{a_i})
        let mut big_t = UniPoly::one(&one);
        for &b in &target_exponents {
            let factor = UniPoly::one(&one)
                .sub(&UniPoly::monomial(one.clone(), n * b));
            big_t = big_t.mul(&factor);
        }
        let p_cyclo = self
            .numerator_poly()
            .map_coeffs(|c| field.embed(Rational::from_integer(c.clone())));
        let mut acc = UniPoly::zero(&one);
        for j in 0..n {
            let zj = zeta.pow(j as u64);
            let p_branch = p_cyclo.scale_arg(&zj);
            let mut d_branch = UniPoly::one(&one);
            for &a in &self.denominator_exponents {
                let factor = UniPoly::one(&one)
                    .sub(&UniPoly::monomial(zj.pow(a as u64), a));
                d_branch = d_branch.mul(&factor);
            }
            let quotient = big_t
                .exact_div(&d_branch)
                .expect("every branch denominator divides the target denominator");
            acc = acc.add(&p_branch.mul(&quotient));
        }
        let inv_n = field.embed(Rational::new(BigInt::from(1), BigInt::from(n as u64)));
        let filtered = acc.scale(&inv_n);
        // the filter kills every degree not divisible by n; the rest must be
        // integers
        let mut numerator: Vec<BigInt> = Vec::new();
        for (i, c) in filtered.coeffs().iter().enumerate() {
            let r = c
                .as_rational()
                .expect("filtered numerator has rational coefficients");
            if i % n == 0 {
                assert!(r.is_integer(), "Hilbert numerator coefficients are integers");
                numerator.push(r.to_integer());
            } else {
                assert!(r.is_zero(), "filtered series is supported on multiples of n");
            }
        }
        if numerator.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroDimensional);
        }
        Ok(HilbertSeries::new(numerator, target_exponents).expect("nonzero numerator"))
    }

    /// Verifies dim_i ~ Vol * i^{r-1}/(r-1)! on [i_max/2, i_max] and reports
    /// the smallest constant C making the error at most C/i there.
    pub fn asymptotic_check(&self, i_max: usize) -> Result<AsymptoticReport> {
        let sat = self.saturator()?;
        if sat != 1 {
            return Err(Error::SaturatorNotOne { saturator: sat as usize });
        }
        let report = self.volume();
        let r = report.pole_order;
        if r < 1 {
            return Err(Error::ZeroDimensional);
        }
        let coeffs = self.series_coefficients(i_max);
        let fact = crate::algebra::numth::factorial_big((r - 1) as u64);
        let mut c_max = crate::algebra::rational::rat(0);
        let mut err_last = crate::algebra::rational::rat(0);
        for i in (i_max / 2).max(1)..=i_max {
            let ipow = BigInt::from(i as u64).pow((r - 1) as u32);
            let scaled = Rational::new(coeffs[i].clone() * &fact, ipow);
            let err = (scaled - &report.volume).abs();
            let weighted = &err * Rational::from_integer(BigInt::from(i as u64));
            if weighted > c_max {
                c_max = weighted;
            }
            if i == i_max {
                err_last = err;
            }
        }
        Ok(AsymptoticReport {
            pole_order: r,
            volume: report.volume,
            i_max,
            empirical_c: c_max,
            error_at_i_max: err_last,
        })
    }
}

/// Upper bound s_A Vol(A) / (s_B Vol(B)) on the extension degree of the
/// rational function field of Proj A over Proj B, for a graded inclusion
/// B of A with the same dimension. Errors when the pole orders differ.
pub fn extension_degree_bound(ha: &HilbertSeries, hb: &HilbertSeries) -> Result<Rational> {
    let va = ha.volume();
    let vb = hb.volume();
    if va.pole_order != vb.pole_order {
        return Err(Error::DimensionMismatch);
    }
    let sa = ha.saturator()?;
    let sb = hb.saturator()?;
    let num = &va.volume * Rational::from_integer(BigInt::from(sa));
    let den = &vb.volume * Rational::from_integer(BigInt::from(sb));
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, rat_frac};

    /// (1 + t^6) / ((1-t^2)^2 (1-t^3)^2 (1-t^4)): the series of the
    /// invariant ring of a binary quartic plus a binary quadratic.
    fn h_a() -> HilbertSeries {
        HilbertSeries::from_ints(&[1, 0, 0, 0, 0, 0, 1], &[2, 2, 3, 3, 4]).unwrap()
    }

    /// (1 - t^60) / (1 - t^6)^6
    fn h_b2() -> HilbertSeries {
        let mut num = vec![0i64; 61];
        num[0] = 1;
        num[60] = -1;
        HilbertSeries::from_ints(&num, &[6, 6, 6, 6, 6, 6]).unwrap()
    }

    #[test]
    fn geometric_series_coefficients() {
        let h = HilbertSeries::from_ints(&[1], &[1]).unwrap();
        let ones: Vec<BigInt> = vec![BigInt::from(1); 5];
        assert_eq!(h.series_coefficients(4), ones);
    }

    #[test]
    fn quartic_plus_quadratic_ring_dimensions() {
        // two generators in degree 2 and two in degree 3
        let c = h_a().series_coefficients(6);
        let expect: Vec<BigInt> =
            [1, 0, 2, 2, 4, 4, 10].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(c, expect);
    }

    #[test]
    fn six_generators_in_degree_six() {
        let c = h_b2().series_coefficients(6);
        assert_eq!(c[6], BigInt::from(6));
        assert!(c[1..6].iter().all(|x| x.is_zero()));
    }

    #[test]
    fn volume_examples() {
        let v = h_a().volume();
        assert_eq!(v.pole_order, 5);
        assert_eq!(v.volume, rat_frac(1, 72));
        assert_eq!(v.saturator, Some(1));

        let plain = HilbertSeries::from_ints(&[1], &[1, 1, 1]).unwrap().volume();
        assert_eq!(plain.pole_order, 3);
        assert_eq!(plain.volume, rat(1));

        let vb = h_b2().volume();
        assert_eq!(vb.pole_order, 5);
        assert_eq!(vb.volume, rat_frac(10, 7776)); // 10 / 6^5
        assert_eq!(vb.saturator, Some(6));
    }

    #[test]
    fn saturator_examples() {
        let h = HilbertSeries::from_ints(&[1], &[2]).unwrap();
        assert_eq!(h.saturator().unwrap(), 2);
        assert_eq!(h_a().saturator().unwrap(), 1);
        assert_eq!(h_b2().saturator().unwrap(), 6);
        let constant = HilbertSeries::from_ints(&[1], &[]).unwrap();
        assert_eq!(constant.saturator(), Err(Error::ZeroDimensional));
    }

    #[test]
    fn veronese_trivial_cases() {
        let h = HilbertSeries::from_ints(&[1], &[1]).unwrap();
        let v = h.veronese_section(2).unwrap();
        assert_eq!(v.numerator(), &[BigInt::from(1)]);
        assert_eq!(v.denominator_exponents(), &[1]);
    }

    #[test]
    fn veronese_of_degree_six_generated_ring() {
        let v = h_b2().veronese_section(6).unwrap();
        // (1 - s^10) / (1 - s)^6
        let mut expect = vec![BigInt::from(0); 11];
        expect[0] = BigInt::from(1);
        expect[10] = BigInt::from(-1);
        assert_eq!(v.numerator(), &expect[..]);
        assert_eq!(v.denominator_exponents(), &[1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn veronese_coefficients_match_stride() {
        for (h, n) in [(h_a(), 6usize), (h_a(), 4), (h_b2(), 6), (h_b2(), 3)] {
            let v = h.veronese_section(n).unwrap();
            let full = h.series_coefficients(n * 30);
            let section = v.series_coefficients(30);
            for i in 0..=30 {
                assert_eq!(section[i], full[n * i], "n = {n}, i = {i}");
            }
        }
    }

    #[test]
    fn veronese_volume_scaling_for_saturated_series() {
        // Vol(A^{[n]}) = n^{r-1} Vol(A) when the saturator is 1
        let h = h_a();
        let base = h.volume();
        for n in [2usize, 3, 6] {
            let v = h.veronese_section(n).unwrap().volume();
            assert_eq!(v.pole_order, base.pole_order);
            let scale = rat((n as i64).pow(base.pole_order as u32 - 1));
            assert_eq!(v.volume, &base.volume * scale, "n = {n}");
        }
    }

    #[test]
    fn extension_degree_examples() {
        let h = h_a();
        assert_eq!(extension_degree_bound(&h, &h).unwrap(), rat(1));
        // 1/(1-t)^2 vs 1/(1-t^2)^2: volumes 1 and 1/4, saturators 1 and 2
        let a = HilbertSeries::from_ints(&[1], &[1, 1]).unwrap();
        let b = HilbertSeries::from_ints(&[1], &[2, 2]).unwrap();
        assert_eq!(extension_degree_bound(&a, &b).unwrap(), rat(2));
        // pole order mismatch
        let c = HilbertSeries::from_ints(&[1], &[1]).unwrap();
        assert_eq!(extension_degree_bound(&a, &c), Err(Error::DimensionMismatch));
    }

    #[test]
    fn asymptotics_of_plane() {
        // 1/(1-t)^3 has coeff (i+1)(i+2)/2 -> error C/i with small C
        let h = HilbertSeries::from_ints(&[1], &[1, 1, 1]).unwrap();
        let rep = h.asymptotic_check(100).unwrap();
        assert_eq!(rep.volume, rat(1));
        // (i+1)(i+2)/i^2 - 1 = (3i+2)/i^2 <= 4/i
        assert!(rep.empirical_c <= rat(4));
    }

    #[test]
    fn asymptotics_require_saturator_one() {
        let h = HilbertSeries::from_ints(&[1], &[2]).unwrap();
        assert_eq!(
            h.asymptotic_check(50),
            Err(Error::SaturatorNotOne { saturator: 2 })
        );
    }

    #[test]
    fn invariant_ring_series_converges_to_its_volume() {
        let rep = h_a().asymptotic_check(200).unwrap();
        assert_eq!(rep.volume, rat_frac(1, 72));
        // the scaled coefficients approach 1/72 with error O(1/i)
        assert!(rep.error_at_i_max < rat_frac(1, 100));
    }

    #[test]
    fn rejects_bad_constructions() {
        assert!(HilbertSeries::from_ints(&[0, 0], &[1]).is_err());
        assert!(HilbertSeries::from_ints(&[1], &[0]).is_err());
    }
}
