//! Closed-form degree bounds for multiplier maps: the leading Laurent
//! coefficient of invariant-ring Hilbert series via Schur evaluation, its
//! elementary upper bound, the linear-system degrees of the spectrum maps,
//! the generic-finiteness degree bound, its specialization to morphisms,
//! and the fiber-dimension obstruction for the second spectrum.

use crate::algebra::numth::{factorial_big, gcd_u64, is_prime_u64};
use crate::algebra::rational::{rational_floor, Rational};
use crate::algebra::ring::Ring;
use crate::algebra::unipoly::UniPoly;
use crate::dynsys::correspondence::nu_poly;
use crate::error::{Error, Result};
use crate::schur::{schur_eval_kostka, tensor_positive_weights, Partition};
use num_bigint::BigInt;

/// Volume of the invariant ring of V_d (x) V_e, i.e. the leading Laurent
/// coefficient of its Hilbert series at t = 1, computed through Schur
/// evaluation at the positive weights (which repeat, so the tableau route
/// is used; the alternant determinant cannot take repeated points).
pub fn invariant_volume(d: u32, e: u32) -> Result<Rational> {
    let weights = tensor_positive_weights(d, e).weights;
    let l = weights.len();
    if l < 3 {
        return Err(Error::OutOfRange(format!(
            "volume formula needs at least 3 positive weights, got {l}"
        )));
    }
    // alpha = (l-3, l-3, l-3, l-4, ..., 1, 0), delta = (l-1, l-2, ..., 1, 0)
    let mut alpha = vec![(l - 3) as u32; 3];
    alpha.extend((0..l - 3).rev().map(|k| k as u32));
    let delta: Vec<u32> = (0..l).rev().map(|k| k as u32).collect();
    let values: Vec<Rational> = weights
        .iter()
        .map(|&w| Rational::from_integer(BigInt::from(w)))
        .collect();
    let s_alpha = schur_eval_kostka(&Partition::new(alpha)?, &values)?;
    let s_delta = schur_eval_kostka(&Partition::new(delta)?, &values)?;
    let mut g = 2u64;
    for &w in &weights {
        g = gcd_u64(g, w as u64);
    }
    Ok(Rational::from_integer(BigInt::from(g)) * s_alpha / s_delta)
}

/// Elementary bound gcd(n,2) / (2 (n-2)(n-1) n) with n = d + e >= 3.
pub fn volume_upper_bound(d: u32, e: u32) -> Result<Rational> {
    let n = (d + e) as i64;
    if n < 3 {
        return Err(Error::OutOfRange(format!("bound needs d + e >= 3, got {n}")));
    }
    let g = gcd_u64(n as u64, 2) as i64;
    Ok(Rational::new(
        BigInt::from(g),
        BigInt::from(2 * (n - 2) * (n - 1) * n),
    ))
}

/// Degrees of the linear systems giving the n-th spectrum maps over the
/// universal family. For d = e the divided differences take their
/// polynomial limit values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinsysDegrees {
    /// Degree of the point-level period-n spectrum map:
    /// 2 (d^n + e^n - 1)(d^n - e^n)/(d - e). Always an integer.
    pub spectrum_degree: BigInt,
    /// Degree bound for the orbit-level map:
    /// 2 ((d^n - 1) nu_n(d) - (e^n - 1) nu_n(e)) / (n (d - e)).
    /// The true linear-system degree is an integer at most this, but the
    /// expression itself is a rational that is non-integral for some
    /// (d, e, n) -- e.g. (5, 2, 3) -- so it is kept exact.
    pub orbit_degree: Rational,
}

pub fn linsys_degrees(d: u64, e: u64, n: u32) -> LinsysDegrees {
    let one: Rational = num_traits::One::one();
    // x^n as a polynomial, for the divided difference (d^n - e^n)/(d - e)
    let power = UniPoly::monomial(one.clone(), n as usize);
    let dn = BigInt::from(d).pow(n);
    let en = BigInt::from(e).pow(n);
    let front = Rational::from_integer((&dn + &en - BigInt::from(1)) * BigInt::from(2));
    let spectrum = front * divided_difference(&power, d, e);
    // u(x) = (2/n) (x^n - 1) nu_n(x)
    let nu = nu_poly(n);
    let xn_minus_1 = power.sub(&UniPoly::one(&one));
    let u = xn_minus_1
        .mul(&nu)
        .scale(&Rational::new(BigInt::from(2), BigInt::from(n)));
    let orbit = divided_difference(&u, d, e);
    LinsysDegrees { spectrum_degree: expect_integer(&spectrum), orbit_degree: orbit }
}

/// (f(d) - f(e)) / (d - e), or f'(d) when d = e.
fn divided_difference(f: &UniPoly<Rational>, d: u64, e: u64) -> Rational {
    let dv = Rational::from_integer(BigInt::from(d));
    let ev = Rational::from_integer(BigInt::from(e));
    if d == e {
        f.derivative().eval(&dv)
    } else {
        (f.eval(&dv) - f.eval(&ev)) / (dv - ev)
    }
}

fn expect_integer(x: &Rational) -> BigInt {
    assert!(x.is_integer(), "linear-system degree {x} is not an integer");
    x.to_integer()
}

/// Closed-form degree bound for the combined first and p-th spectrum map,
/// with every applicability flag it depends on.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub d: u64,
    pub e: u64,
    pub p: u32,
    /// N = 2(d+e-1) + 2((d^p - 1)(d^p - d) - (e^p - 1)(e^p - e))/(p(d - e)).
    pub n_value: Rational,
    /// de + d + e - 3.
    pub exponent: u64,
    /// gcd(d+e, 2), the parity factor of the volume bound.
    pub gcd_factor: u64,
    pub bound: Rational,
    pub floor_bound: BigInt,
    /// Whether (d-e)^2 < d+e-2, in which case the period-2 orbit spectrum
    /// map cannot be generically finite (positive-dimensional fibers).
    pub lambda2_obstructed: bool,
}

pub fn degree_bound(d: u64, e: u64, p: u32) -> Result<BoundReport> {
    if !is_prime_u64(p as u64) {
        return Err(Error::OutOfRange(format!("{p} is not prime")));
    }
    if d == e {
        return Err(Error::OutOfRange("bound formula requires d != e".to_string()));
    }
    let n = d + e;
    let de = d * e;
    if n < 3 || de < 3 {
        return Err(Error::OutOfRange(format!(
            "factorials need d+e >= 3 and d*e >= 3, got ({d}, {e})"
        )));
    }
    let dp = BigInt::from(d).pow(p);
    let ep = BigInt::from(e).pow(p);
    let num = (&dp - BigInt::from(1)) * (&dp - BigInt::from(d))
        - (&ep - BigInt::from(1)) * (&ep - BigInt::from(e));
    let n_value = Rational::from_integer(BigInt::from(2 * (n - 1)))
        + Rational::new(
            BigInt::from(2) * num,
            BigInt::from(p) * (BigInt::from(d) - BigInt::from(e)),
        );
    let exponent = de + n - 3;
    let gcd_factor = gcd_u64(n, 2);
    let mut bound: Rational = num_traits::One::one();
    for _ in 0..exponent {
        bound = bound * &n_value;
    }
    let numerator = Rational::from_integer(
        BigInt::from(gcd_factor) * factorial_big(n - 3) * factorial_big(de - 3),
    );
    let denominator =
        Rational::from_integer(BigInt::from(2 * n) * factorial_big(exponent));
    let bound = bound * numerator / denominator;
    Ok(BoundReport {
        d,
        e,
        p,
        floor_bound: rational_floor(&bound),
        n_value,
        exponent,
        gcd_factor,
        bound,
        lambda2_obstructed: lambda2_obstruction(d as i64, e as i64),
    })
}

fn lambda2_obstruction(d: i64, e: i64) -> bool {
    (d - e) * (d - e) < d + e - 2
}

/// The printed closed form for morphisms (bidegree (1, d), third spectrum)
/// side by side with the general theorem's value at (d, 1, p = 3). The two
/// differ by the factor 2d - 1 in the denominator factorial; both are
/// reported exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct MorphismBoundReport {
    pub d: u64,
    pub printed_bound: Rational,
    pub printed_floor: BigInt,
    pub theorem: BoundReport,
    /// theorem.bound / printed_bound (equals 2d - 1).
    pub ratio: Rational,
}

pub fn morphism_degree_bound(d: u64) -> Result<MorphismBoundReport> {
    if d <= 2 {
        return Err(Error::OutOfRange(format!(
            "morphism bound needs degree >= 3, got {d}"
        )));
    }
    let e2 = 2 * d - 2;
    let base = BigInt::from(d).pow(5) + BigInt::from(d).pow(4) - BigInt::from(d).pow(2)
        + BigInt::from(2 * d);
    let printed_num = BigInt::from(gcd_u64(d + 1, 2))
        * BigInt::from(2u64).pow(e2 as u32)
        * base.pow(e2 as u32)
        * factorial_big(d - 2)
        * factorial_big(d - 3);
    let printed_den = BigInt::from(2)
        * BigInt::from(3u64).pow(e2 as u32)
        * BigInt::from(d + 1)
        * factorial_big(2 * d - 1);
    let printed_bound = Rational::new(printed_num, printed_den);
    let theorem = degree_bound(d, 1, 3)?;
    let ratio = &theorem.bound / &printed_bound;
    Ok(MorphismBoundReport {
        d,
        printed_floor: rational_floor(&printed_bound),
        printed_bound,
        theorem,
        ratio,
    })
}

/// The two displayed expressions for the fiber-dimension count of the
/// combined period-1/period-2 orbit spectrum, evaluated exactly, plus the
/// finiteness criterion (d-e)^2 >= d+e-2.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberDimensionReport {
    pub d: i64,
    pub e: i64,
    /// (d+e-1) + ((d^2-d) + (e^2-e))/2 - 1 - (de+d+e-3).
    pub orbit_count_expression: Rational,
    /// ((d-e)^2 - (d+e) + 2)/2.
    pub closed_form: Rational,
    pub expressions_equal: bool,
    /// (d-e)^2 < d+e-2: the second orbit spectrum map has
    /// positive-dimensional generic fibers and cannot be generically finite.
    pub finiteness_obstructed: bool,
}

pub fn fiber_dimension_report(d: i64, e: i64) -> FiberDimensionReport {
    let half = |x: i64| Rational::new(BigInt::from(x), BigInt::from(2));
    let orbit_count_expression = Rational::from_integer(BigInt::from(d + e - 1))
        + half(d * d - d + e * e - e)
        - Rational::from_integer(BigInt::from(1))
        - Rational::from_integer(BigInt::from(d * e + d + e - 3));
    let closed_form = half((d - e) * (d - e) - (d + e) + 2);
    FiberDimensionReport {
        d,
        e,
        expressions_equal: orbit_count_expression == closed_form,
        orbit_count_expression,
        closed_form,
        finiteness_obstructed: lambda2_obstruction(d, e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, rat_frac};
    use crate::hilbert::HilbertSeries;

    #[test]
    fn volume_of_cubic_moduli_two_routes() {
        // Schur route
        let v = invariant_volume(1, 3).unwrap();
        assert_eq!(v, rat_frac(1, 72));
        // Hilbert series route
        let h = HilbertSeries::from_ints(&[1, 0, 0, 0, 0, 0, 1], &[2, 2, 3, 3, 4]).unwrap();
        assert_eq!(h.volume().volume, v);
    }

    #[test]
    fn volume_formula_needs_three_weights() {
        assert!(matches!(invariant_volume(1, 1), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn upper_bound_values() {
        assert_eq!(volume_upper_bound(1, 3).unwrap(), rat_frac(1, 24));
        assert_eq!(volume_upper_bound(1, 2).unwrap(), rat_frac(1, 12));
        assert_eq!(volume_upper_bound(2, 2).unwrap(), rat_frac(1, 24));
        assert!(volume_upper_bound(1, 1).is_err());
    }

    #[test]
    fn volume_below_upper_bound() {
        for d in 1..=6u32 {
            for e in d..=6u32 {
                let n = d + e;
                if !(3..=7).contains(&n) {
                    continue;
                }
                let v = invariant_volume(d, e).unwrap();
                let ub = volume_upper_bound(d, e).unwrap();
                assert!(v <= ub, "({d},{e}): {v} > {ub}");
            }
        }
    }

    #[test]
    fn linsys_degree_values() {
        let l = linsys_degrees(1, 3, 2);
        assert_eq!(l.spectrum_degree, BigInt::from(72));
        assert_eq!(l.orbit_degree, rat(24));
        let l = linsys_degrees(2, 1, 2);
        assert_eq!(l.spectrum_degree, BigInt::from(24));
        // n = 1: 2(d + e - 1) * 1 for both
        for (d, e) in [(1u64, 3u64), (2, 5), (4, 3)] {
            let l = linsys_degrees(d, e, 1);
            assert_eq!(l.spectrum_degree, BigInt::from(2 * (d + e - 1)));
            assert_eq!(l.orbit_degree, rat(2 * (d + e - 1) as i64));
        }
        // d = e takes the polynomial limit
        let l = linsys_degrees(2, 2, 2);
        // 2 (d^2 + e^2 - 1) * lim (d^n - e^n)/(d - e) = 2 * 7 * (2*2) = 28...
        assert_eq!(l.spectrum_degree, BigInt::from(2 * 7 * 4));
    }

    #[test]
    fn orbit_degree_matches_bound_increment() {
        // for prime p, the orbit-level degree equals N - 2(d+e-1)
        for p in [2u32, 3, 5, 7] {
            for d in 1..=5u64 {
                for e in 1..d {
                    let l = linsys_degrees(d, e, p);
                    if d * e < 3 || d + e < 3 {
                        continue;
                    }
                    let rep = degree_bound(d, e, p).unwrap();
                    let expect =
                        rep.n_value - Rational::from_integer(BigInt::from(2 * (d + e - 1)));
                    assert_eq!(l.orbit_degree, expect, "(d, e, p) = ({d}, {e}, {p})");
                }
            }
        }
    }

    #[test]
    fn cubic_period_two_bound() {
        let rep = degree_bound(1, 3, 2).unwrap();
        assert_eq!(rep.n_value, rat(30));
        assert_eq!(rep.exponent, 4);
        assert_eq!(rep.bound, rat_frac(16875, 2)); // 8437.5
        assert_eq!(rep.floor_bound, BigInt::from(8437));
        assert!(!rep.lambda2_obstructed);
    }

    #[test]
    fn bound_is_symmetric_in_d_and_e() {
        for (d, e, p) in [(1u64, 3u64, 2u32), (2, 3, 3), (1, 4, 5), (3, 4, 2)] {
            let a = degree_bound(d, e, p).unwrap();
            let b = degree_bound(e, d, p).unwrap();
            assert_eq!(a.n_value, b.n_value);
            assert_eq!(a.bound, b.bound);
        }
    }

    #[test]
    fn bound_rejections() {
        assert!(degree_bound(1, 3, 4).is_err()); // nonprime p
        assert!(degree_bound(2, 2, 2).is_err()); // d = e
        assert!(degree_bound(1, 2, 2).is_err()); // de < 3
        // the (2,2) obstruction flag is visible through the fiber report
        assert!(fiber_dimension_report(2, 2).finiteness_obstructed);
    }

    #[test]
    fn morphism_bound_for_cubic_maps() {
        let rep = morphism_degree_bound(3).unwrap();
        assert_eq!(rep.printed_floor, BigInt::from(4369320));
        // exact value 339758325792 / 77760 = 4369320 + 8/3 * 1/240...
        assert_eq!(
            rep.printed_bound,
            Rational::new(BigInt::from(339758325792u64), BigInt::from(77760))
        );
        // the theorem's value exceeds the printed one by exactly 2d - 1
        assert_eq!(rep.ratio, rat(5));
        assert!(morphism_degree_bound(2).is_err());
        let rep4 = morphism_degree_bound(4).unwrap();
        assert!(rep4.printed_bound > rat(0));
        assert_eq!(rep4.ratio, rat(7));
    }

    #[test]
    fn fiber_dimension_expressions_agree() {
        for d in 1..=6i64 {
            for e in 1..=6i64 {
                let rep = fiber_dimension_report(d, e);
                assert!(rep.expressions_equal, "({d},{e})");
            }
        }
        let r13 = fiber_dimension_report(1, 3);
        assert_eq!(r13.closed_form, rat(1));
        assert!(!r13.finiteness_obstructed); // (d-e)^2 = 4 >= 2
        let r22 = fiber_dimension_report(2, 2);
        assert!(r22.finiteness_obstructed); // 0 < 2
        let r15 = fiber_dimension_report(1, 5);
        assert_eq!(r15.closed_form, rat(6));
        assert!(!r15.finiteness_obstructed); // 16 >= 4
    }
}
