//! Finite-field certification that cubic rational maps sharing their three
//! fixed-point multipliers and one period-2 multiplier are distinguished by
//! the remaining period-2 multipliers.
//!
//! The one-parameter family phi_a fixes 0, 1 and infinity with prescribed
//! multipliers (l0, l1, l8). Imposing one period-2 multiplier lambda cuts a
//! zero-dimensional system in (a, B); eliminating B with a resultant,
//! factoring over F_p and passing to a splitting extension recovers every
//! solution. Six parameter values survive the non-fixed-point condition,
//! and the certificate records the full period-2 multiplier triple of each,
//! compared through representation-independent data (prime-subfield
//! residues and minimal polynomials over F_p).

use crate::algebra::extfield::{ExtField, Fq};
use crate::algebra::factor::{factor, roots_in_field};
use crate::algebra::multipoly::MultiPoly;
use crate::algebra::numth::gcd_u64;
use crate::algebra::primefield::{Fp, PrimeField};
use crate::algebra::resultant::{lagrange_interpolate, resultant, resultant_field};
use crate::algebra::ring::{Field, FiniteField, IntegralDomain, Ring};
use crate::algebra::unipoly::UniPoly;
use crate::error::{Error, Result};

type PolyA = UniPoly<Fp>; // polynomials in the family parameter a
type PolyAB = MultiPoly<Fp>; // polynomials in (a, B)

const VAR_A: usize = 0;
const VAR_B: usize = 1;

/// The one-parameter family of cubic maps with prescribed fixed-point
/// multipliers at 0, 1 and infinity.
#[derive(Debug, Clone)]
pub struct CubicFamily {
    field: PrimeField,
    l0: Fp,
    l1: Fp,
    l8: Fp,
    /// numerator coefficients by x-degree 0..=3; each linear in a
    f_coeffs: [PolyA; 4],
    /// denominator coefficients by x-degree 0..=3
    g_coeffs: [PolyA; 4],
    /// f(phi(B), psi(B)) and g(phi(B), psi(B)) in F_p[a, B], where
    /// phi(B) = f(B, 1) and psi(B) = g(B, 1)
    f_composed: PolyAB,
    g_composed: PolyAB,
    /// f(B,1) - B g(B,1), the fixed-point cubic
    fixed_point_poly: PolyAB,
}

impl CubicFamily {
    pub fn new(p: u64, l0: i64, l1: i64, l8: i64) -> Result<CubicFamily> {
        let field = PrimeField::new(p)?;
        let (l0, l1, l8) = (field.elem(l0), field.elem(l1), field.elem(l8));
        let one = field.one();
        for (name, v) in [("l0", l0), ("l1", l1), ("l8", l8)] {
            if v == one {
                return Err(Error::DegenerateFamily(format!(
                    "multiplier {name} = 1 collapses the parametrization"
                )));
            }
        }

        let a = UniPoly::var(&one);
        let c = |v: Fp| UniPoly::constant(v);
        let k = |v: i64| UniPoly::constant(field.elem(v));

        // numerator: coefficient of x^3 is (l0-1)l1 + (1-l0); of x^2 y is
        // (a l0 l1 + (1 - l0 - a)) l8 + ((1 - (a+1) l0) l1 + (2 l0 + a - 2));
        // of x y^2 is (a l0 - a l0 l1) l8 + (a l0 l1 - a l0)
        let f3 = c(l0).sub(&k(1)).mul(&c(l1)).add(&k(1).sub(&c(l0)));
        let f2 = a
            .scale(&l0.mul(&l1))
            .add(&k(1).sub(&c(l0)).sub(&a))
            .scale(&l8)
            .add(
                &k(1)
                    .sub(&a.add(&k(1)).scale(&l0))
                    .scale(&l1)
                    .add(&c(l0).scale(&field.elem(2)).add(&a).sub(&k(2))),
            );
        let f1 = a
            .scale(&l0)
            .sub(&a.scale(&l0.mul(&l1)))
            .scale(&l8)
            .add(&a.scale(&l0.mul(&l1)).sub(&a.scale(&l0)));
        let f0 = UniPoly::zero(&one);

        // denominator: coefficient of x^2 y is ((l0-1)l1 + (1-l0)) l8; of
        // x y^2 is ((a + 1 - l0) l1 + (a l0 - 2a)) l8 +
        // (-a l1 + (1 - a) l0 + 2a - 1); of y^3 is (a - a l1) l8 + (a l1 - a)
        let g3 = UniPoly::zero(&one);
        let g2 = f3.scale(&l8);
        let g1 = a
            .add(&k(1))
            .sub(&c(l0))
            .scale(&l1)
            .add(&a.scale(&l0).sub(&a.scale(&field.elem(2))))
            .scale(&l8)
            .add(
                &a.scale(&l1)
                    .neg()
                    .add(&k(1).sub(&a).scale(&l0))
                    .add(&a.scale(&field.elem(2)))
                    .sub(&k(1)),
            );
        let g0 = a.sub(&a.scale(&l1)).scale(&l8).add(&a.scale(&l1).sub(&a));

        let f_coeffs = [f0, f1, f2, f3];
        let g_coeffs = [g0, g1, g2, g3];
        if f_coeffs.iter().all(|c| c.is_zero()) || g_coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::DegenerateFamily(
                "family numerator or denominator vanishes identically".to_string(),
            ));
        }
        if f_coeffs[3].is_zero() || g_coeffs[2].is_zero() {
            return Err(Error::DegenerateFamily(
                "leading coefficients vanish; the map degenerates below degree 3".to_string(),
            ));
        }

        // compose in F_p[a, B]
        let to_ab = |poly: &PolyA, bdeg: usize| -> PolyAB {
            let mut out = MultiPoly::zero(2, &one);
            for (i, cf) in poly.coeffs().iter().enumerate() {
                if !cf.is_zero() {
                    out = out.add(&MultiPoly::monomial(2, vec![i as u32, bdeg as u32], *cf));
                }
            }
            out
        };
        let mut f_of_b = MultiPoly::zero(2, &one);
        let mut g_of_b = MultiPoly::zero(2, &one);
        for x_deg in 0..=3 {
            f_of_b = f_of_b.add(&to_ab(&f_coeffs[x_deg], x_deg));
            g_of_b = g_of_b.add(&to_ab(&g_coeffs[x_deg], x_deg));
        }
        let eval_form = |coeffs: &[PolyA; 4], x: &PolyAB, y: &PolyAB| -> PolyAB {
            let mut acc = MultiPoly::zero(2, &one);
            for x_deg in 0..=3usize {
                if coeffs[x_deg].is_zero() {
                    continue;
                }
                let mut term = to_ab(&coeffs[x_deg], 0);
                for _ in 0..x_deg {
                    term = term.mul(x);
                }
                for _ in 0..(3 - x_deg) {
                    term = term.mul(y);
                }
                acc = acc.add(&term);
            }
            acc
        };
        let f_composed = eval_form(&f_coeffs, &f_of_b, &g_of_b);
        let g_composed = eval_form(&g_coeffs, &f_of_b, &g_of_b);
        let b_var = MultiPoly::variable(2, VAR_B, &one);
        let fixed_point_poly = f_of_b.sub(&b_var.mul(&g_of_b));

        Ok(CubicFamily {
            field,
            l0,
            l1,
            l8,
            f_coeffs,
            g_coeffs,
            f_composed,
            g_composed,
            fixed_point_poly,
        })
    }

    pub fn prime_field(&self) -> PrimeField {
        self.field
    }

    /// The fixed-point cubic f(B, 1) - B g(B, 1) in F_p[a, B].
    pub fn fixed_point_polynomial(&self) -> &PolyAB {
        &self.fixed_point_poly
    }

    pub fn multipliers(&self) -> (Fp, Fp, Fp) {
        (self.l0, self.l1, self.l8)
    }

    /// Specializes the parameter and returns the map's numerator and
    /// denominator as univariate polynomials over any extension of F_p.
    pub fn map_at<F: FiniteField>(&self, a0: &F) -> (UniPoly<F>, UniPoly<F>) {
        let num = self.specialized(&self.f_coeffs, a0);
        let den = self.specialized(&self.g_coeffs, a0);
        (num, den)
    }

    fn specialized<F: FiniteField>(&self, coeffs: &[PolyA; 4], a0: &F) -> UniPoly<F> {
        let lifted: Vec<F> = coeffs
            .iter()
            .map(|c| lift_unipoly(c, a0).eval(a0))
            .collect();
        UniPoly::new(lifted)
    }

    /// The period-2 equations in (a, B): the period condition
    /// f1 - B g1 of total degree 9, and the multiplier condition
    /// g1 f1' - f1 g1' - lambda g1^2 of total degree 16, plus their
    /// homogenizations to (a, B, z).
    pub fn period_two_system(&self, lambda: i64) -> Result<PeriodTwoSystem> {
        let lam = self.field.elem(lambda);
        let b_var = MultiPoly::variable(2, VAR_B, &self.field.one());
        let period = self.f_composed.sub(&b_var.mul(&self.g_composed));
        let df = self.f_composed.partial(VAR_B);
        let dg = self.g_composed.partial(VAR_B);
        let multiplier = self
            .g_composed
            .mul(&df)
            .sub(&self.f_composed.mul(&dg))
            .sub(&self.g_composed.mul(&self.g_composed).scale(&lam));
        let period_hom = homogenize(&period, 9)?;
        let multiplier_hom = homogenize(&multiplier, 16)?;
        Ok(PeriodTwoSystem {
            lambda: lam,
            period,
            multiplier,
            period_hom,
            multiplier_hom,
        })
    }

    /// Eliminates B, factors the eliminant, walks the splitting extension
    /// and classifies every support point; then computes the full period-2
    /// multiplier triples of the genuine parameters and the distinctness
    /// verdict.
    pub fn injectivity_report(
        &self,
        lambda: i64,
        extension_cap: usize,
        seed: u64,
    ) -> Result<FiberCertificate> {
        let system = self.period_two_system(lambda)?;
        let eliminant = eliminate_b(&system.period, &system.multiplier)?;
        let elim_degree = eliminant.degree().unwrap_or(0);
        if elim_degree > 144 {
            return Err(Error::UnexpectedFiberStructure(format!(
                "eliminant degree {elim_degree} exceeds the product bound 144"
            )));
        }
        let fac = factor(&eliminant, seed)?;

        // extension degree: lcm over parameter factor degrees, grown until
        // the B-coordinates split as well
        let mut ext_degree: usize = 1;
        for (h, _) in &fac.factors {
            ext_degree = lcm(ext_degree, h.degree().unwrap());
        }
        let (ext, support, genuine) = loop {
            if ext_degree > extension_cap {
                return Err(Error::UnexpectedFiberStructure(format!(
                    "splitting the fiber needs extension degree {ext_degree}, above the cap {extension_cap}"
                )));
            }
            let ext = ExtField::with_random_modulus(self.field, ext_degree, seed);
            match self.collect_support(&system, &fac.factors, &ext, seed)? {
                SupportOutcome::NeedLargerExtension(m) => {
                    ext_degree = lcm(ext_degree, m);
                }
                SupportOutcome::Done { support, genuine } => break (ext, support, genuine),
            }
        };

        // points at infinity of the homogenized system
        let infinity_points =
            common_points_at_infinity(&system.period_hom, &system.multiplier_hom, seed)?;

        // genuine points pair up into orbits (a, b) <-> (a, phi_a(b))
        let mut orbit_pairing_verified = true;
        for (a0, b) in &genuine {
            let (num, den) = self.map_at(a0);
            let (nb, db) = (num.eval(b), den.eval(b));
            let partner_found = genuine.iter().any(|(a1, b1)| {
                a1 == a0 && b1.mul(&db) == nb // (nb : db) == (b1 : 1)
            });
            if !partner_found {
                orbit_pairing_verified = false;
            }
        }

        // multiplier triples per distinct genuine parameter
        let mut params: Vec<Fq> = Vec::new();
        for (a0, _) in &genuine {
            if !params.contains(a0) {
                params.push(a0.clone());
            }
        }
        params.sort_by_key(|a0| parameter_sort_key(a0));
        let mut parameters = Vec::new();
        // distinctness is decided on the actual field elements (sorted
        // canonical keys); the verdict is invariant under field isomorphism,
        // while the minimal-polynomial data in the reports cannot separate
        // Galois-conjugate parameters
        let mut triples: Vec<Vec<Vec<u64>>> = Vec::new();
        for a0 in &params {
            let mults = self.period_two_multipliers(a0, lambda, seed)?;
            let mut triple_key: Vec<Vec<u64>> =
                mults.iter().map(|m| m.canonical_key()).collect();
            triple_key.sort();
            triples.push(triple_key);
            parameters.push(ParameterReport {
                value: a0.coeffs().to_vec(),
                prime_field_value: a0.as_prime_residue(),
                minimal_polynomial: a0.minimal_polynomial().format_with_var("x"),
                multipliers: mults
                    .iter()
                    .map(|m| MultiplierReport {
                        value: m.coeffs().to_vec(),
                        prime_field_value: m.as_prime_residue(),
                        minimal_polynomial: m.minimal_polynomial().format_with_var("z"),
                    })
                    .collect(),
            });
        }
        let mut pairwise_distinct = true;
        for i in 0..triples.len() {
            for j in i + 1..triples.len() {
                if triples[i] == triples[j] {
                    pairwise_distinct = false;
                }
            }
        }

        let support_total = support + infinity_points;
        let verdict = if pairwise_distinct {
            "injective-on-fiber".to_string()
        } else {
            "not-injective-on-fiber".to_string()
        };
        Ok(FiberCertificate {
            p: self.field.modulus(),
            l0: self.l0.value(),
            l1: self.l1.value(),
            l8: self.l8.value(),
            lambda: self.field.elem(lambda).value(),
            seed,
            eliminant_degree: elim_degree,
            eliminant_degree_bound: 144,
            degree_drop_at_infinity: 144 - elim_degree,
            extension_degree: ext.degree(),
            extension_modulus: ext.modulus_coeffs().to_vec(),
            support_points: support_total,
            support_points_at_infinity: infinity_points,
            genuine_points: genuine.len(),
            orbit_pairing_verified,
            parameters,
            pairwise_distinct,
            verdict,
        })
    }

    fn collect_support(
        &self,
        system: &PeriodTwoSystem,
        factors: &[(UniPoly<Fp>, usize)],
        ext: &ExtField,
        seed: u64,
    ) -> Result<SupportOutcome> {
        let mut support = 0usize;
        let mut genuine: Vec<(Fq, Fq)> = Vec::new();
        for (h, _) in factors {
            let lifted = lift_unipoly(h, &ext.one());
            let roots = roots_in_field(&lifted, seed ^ 0x5eed)?;
            let mut distinct = roots.clone();
            distinct.dedup();
            if distinct.len() < h.degree().unwrap() && ext.degree() % h.degree().unwrap() == 0 {
                // an irreducible factor whose degree divides the extension
                // degree must split completely
                return Err(Error::UnexpectedFiberStructure(
                    "eliminant factor failed to split in its splitting field".to_string(),
                ));
            }
            if distinct.is_empty() {
                return Ok(SupportOutcome::NeedLargerExtension(lcm(
                    ext.degree(),
                    h.degree().unwrap(),
                )));
            }
            for a0 in distinct {
                let p1 = specialize_a(&system.period, &a0);
                let p2 = specialize_a(&system.multiplier, &a0);
                if p1.is_zero() || p2.is_zero() {
                    return Err(Error::DegenerateFamily(
                        "period-2 system degenerates at a parameter value".to_string(),
                    ));
                }
                let g = p1.gcd_monic(&p2)?;
                let Some(gdeg) = g.degree() else { continue };
                if gdeg == 0 {
                    continue; // spurious eliminant root (leading-coefficient artifact)
                }
                let bfac = factor(&g, seed ^ 0xb)?;
                for (bf, _) in &bfac.factors {
                    let bd = bf.degree().unwrap();
                    if bd > 1 {
                        return Ok(SupportOutcome::NeedLargerExtension(ext.degree() * bd));
                    }
                }
                let mut broots = roots_in_field(&g, seed ^ 0xb00)?;
                broots.dedup();
                support += broots.len();
                for b in broots {
                    if self.is_genuine(&a0, &b, system)? {
                        genuine.push((a0.clone(), b));
                    }
                }
            }
        }
        Ok(SupportOutcome::Done { support, genuine })
    }

    /// A support point is genuine when the map is defined along its orbit,
    /// the point returns after two steps without being fixed, and the
    /// multiplier matches; everything is re-evaluated directly from the
    /// specialized map, independent of the elimination route.
    fn is_genuine(&self, a0: &Fq, b: &Fq, system: &PeriodTwoSystem) -> Result<bool> {
        let (num, den) = self.map_at(a0);
        let (nb, db) = (num.eval(b), den.eval(b));
        if nb.is_zero() && db.is_zero() {
            return Ok(false); // base point of a degenerate member
        }
        // first step projectively: (nb : db), second step through the
        // homogeneous cubic forms
        let n2 = homogeneous_eval(&num, &nb, &db, 3);
        let d2 = homogeneous_eval(&den, &nb, &db, 3);
        if n2.is_zero() && d2.is_zero() {
            return Ok(false);
        }
        // phi^2(b) = b projectively: n2 = b * d2, with d2 != 0 for an
        // affine return
        if d2.is_zero() || n2 != b.mul(&d2) {
            return Ok(false);
        }
        // not fixed: (nb : db) != (b : 1)
        if nb == b.mul(&db) {
            return Ok(false);
        }
        // multiplier of the two-step return equals lambda: with
        // f1 = num(phi), g1 = den(phi) as univariate compositions,
        // (phi^2)'(b) = (g1 f1' - f1 g1')/g1^2 at b
        let lam = b.lift_residue(system.lambda.value());
        let f1 = compose_map(&num, &num, &den);
        let g1 = compose_map(&den, &num, &den);
        let g1b = g1.eval(b);
        if g1b.is_zero() {
            return Ok(false);
        }
        let deriv = g1.eval(b).mul(&f1.derivative().eval(b))
            .sub(&f1.eval(b).mul(&g1.derivative().eval(b)));
        Ok(deriv == lam.mul(&g1b.mul(&g1b)))
    }

    /// The three multipliers of the period-2 orbits of the map at a genuine
    /// parameter value: the resultant in B of the formal-period-2 sextic
    /// against the multiplier condition is a degree-6 polynomial in z whose
    /// roots are the three orbit multipliers, each doubled.
    pub fn period_two_multipliers(&self, a0: &Fq, lambda: i64, seed: u64) -> Result<Vec<Fq>> {
        let (num, den) = self.map_at(a0);
        let f1 = compose_map(&num, &num, &den);
        let g1 = compose_map(&den, &num, &den);
        let b_shift = UniPoly::monomial(a0.one_like(), 1);
        let period = f1.sub(&b_shift.mul(&g1));
        let fixed = num.sub(&b_shift.mul(&den));
        let reduced = period.exact_div(&fixed).ok_or_else(|| {
            Error::UnexpectedFiberStructure(
                "fixed-point cubic does not divide the period-2 condition".to_string(),
            )
        })?;
        if reduced.degree() != Some(6) {
            return Err(Error::UnexpectedFiberStructure(format!(
                "formal period-2 polynomial has degree {:?}, expected 6",
                reduced.degree()
            )));
        }
        // dF2(B, z) = g1 f1' - f1 g1' - z g1^2: resultant in B, interpolated
        // through z-points where no degree drops
        let core = g1
            .mul(&f1.derivative())
            .sub(&f1.mul(&g1.derivative()));
        let g1_sq = g1.mul(&g1);
        let deg_core = core.degree().unwrap_or(0);
        let deg_sq = g1_sq.degree().unwrap_or(0);
        let target = deg_core.max(deg_sq);
        let mut points = Vec::new();
        let mut z_res = 0u64;
        while points.len() < 7 {
            let z = a0.lift_residue(z_res);
            z_res += 1;
            if z_res > self.field.modulus() {
                return Err(Error::UnexpectedFiberStructure(
                    "no valid interpolation nodes for the multiplier resultant".to_string(),
                ));
            }
            let spec = core.sub(&g1_sq.scale(&z));
            if spec.degree() != Some(target) {
                continue; // leading coefficient drop: resultant would not specialize
            }
            let value = resultant_field(&reduced, &spec)?;
            points.push((z, value));
        }
        let mult_poly = lagrange_interpolate(&points);
        if mult_poly.degree() != Some(6) {
            return Err(Error::UnexpectedFiberStructure(format!(
                "multiplier polynomial has degree {:?}, expected 6",
                mult_poly.degree()
            )));
        }
        let fac = factor(&mult_poly, seed ^ 0x3a)?;
        let mut out = Vec::new();
        for (g, e) in &fac.factors {
            if g.degree() != Some(1) || *e != 2 {
                return Err(Error::UnexpectedFiberStructure(format!(
                    "multiplier polynomial is not three doubled roots: factor of degree {:?} with multiplicity {e}",
                    g.degree()
                )));
            }
            out.push(g.coeff(0).neg()); // root of monic z + c
        }
        if out.len() != 3 {
            return Err(Error::UnexpectedFiberStructure(format!(
                "{} distinct orbit multipliers, expected 3",
                out.len()
            )));
        }
        let lam = a0.lift_residue(self.field.elem(lambda).value());
        if !out.contains(&lam) {
            return Err(Error::UnexpectedFiberStructure(
                "imposed multiplier missing from the orbit triple".to_string(),
            ));
        }
        out.sort_by_key(|m| m.canonical_key());
        Ok(out)
    }
}

/// The pair of period-2 equations, affine in (a, B) and homogenized.
#[derive(Debug, Clone)]
pub struct PeriodTwoSystem {
    pub lambda: Fp,
    pub period: PolyAB,
    pub multiplier: PolyAB,
    pub period_hom: MultiPoly<Fp>,
    pub multiplier_hom: MultiPoly<Fp>,
}

enum SupportOutcome {
    NeedLargerExtension(usize),
    Done { support: usize, genuine: Vec<(Fq, Fq)> },
}

/// Certificate for one fiber: all counts, the parameter values with their
/// period-2 multiplier triples, and the distinctness verdict.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct FiberCertificate {
    pub p: u64,
    pub l0: u64,
    pub l1: u64,
    pub l8: u64,
    pub lambda: u64,
    pub seed: u64,
    pub eliminant_degree: usize,
    pub eliminant_degree_bound: usize,
    pub degree_drop_at_infinity: usize,
    pub extension_degree: usize,
    pub extension_modulus: Vec<u64>,
    pub support_points: usize,
    pub support_points_at_infinity: usize,
    pub genuine_points: usize,
    pub orbit_pairing_verified: bool,
    pub parameters: Vec<ParameterReport>,
    pub pairwise_distinct: bool,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ParameterReport {
    /// coefficients in the extension basis (representation dependent)
    pub value: Vec<u64>,
    pub prime_field_value: Option<u64>,
    /// canonical text of the minimal polynomial over F_p
    pub minimal_polynomial: String,
    pub multipliers: Vec<MultiplierReport>,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct MultiplierReport {
    pub value: Vec<u64>,
    pub prime_field_value: Option<u64>,
    pub minimal_polynomial: String,
}

fn parameter_sort_key(a0: &Fq) -> (Vec<u64>, Vec<u64>) {
    let minpoly: Vec<u64> = a0
        .minimal_polynomial()
        .coeffs()
        .iter()
        .map(|c| c.value())
        .collect();
    (minpoly, a0.canonical_key())
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd_u64(a as u64, b as u64) as usize * b
}

fn lift_unipoly<F: FiniteField>(p: &UniPoly<Fp>, like: &F) -> UniPoly<F> {
    p.map_coeffs(|c| like.lift_residue(c.value()))
}

/// Homogeneous evaluation at the stated formal degree:
/// sum p_i x^i y^(deg - i).
fn homogeneous_eval<F: Field>(p: &UniPoly<F>, x: &F, y: &F, deg: usize) -> F {
    let mut acc = x.zero_like();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&c.mul(&x.pow(i as u64)).mul(&y.pow((deg - i) as u64)));
    }
    acc
}

/// Composition over one variable: form(x, y) with x, y univariate, where
/// `form` is homogeneous cubic data given by coefficients in x-degree order.
fn compose_map<F: Field>(form: &UniPoly<F>, x: &UniPoly<F>, y: &UniPoly<F>) -> UniPoly<F> {
    // form has coefficients c_i of x^i y^(3 - i); substitute
    let zero = form.exemplar().zero_like();
    let mut acc = UniPoly::zero(&zero);
    for (i, c) in form.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut term = UniPoly::constant(c.clone());
        for _ in 0..i {
            term = term.mul(x);
        }
        for _ in 0..(3 - i) {
            term = term.mul(y);
        }
        acc = acc.add(&term);
    }
    acc
}

/// res_B of two bivariate polynomials, as a univariate in a.
fn eliminate_b(p1: &PolyAB, p2: &PolyAB) -> Result<UniPoly<Fp>> {
    let u1 = p1.as_unipoly_in(VAR_B);
    let u2 = p2.as_unipoly_in(VAR_B);
    let res = resultant(&u1, &u2)?;
    if res.is_zero() {
        return Err(Error::DegenerateFamily(
            "period-2 system has a common component".to_string(),
        ));
    }
    // the resultant lives in F_p[a]
    let exemplar = p1.exemplar();
    let mut coeffs = vec![*exemplar; res.degree_in(VAR_A).unwrap_or(0) as usize + 1];
    for (e, c) in res.terms() {
        debug_assert_eq!(e.0[VAR_B], 0);
        coeffs[e.0[VAR_A] as usize] = *c;
    }
    Ok(UniPoly::new(coeffs))
}

fn specialize_a(p: &PolyAB, a0: &Fq) -> UniPoly<Fq> {
    let bdeg = p.degree_in(VAR_B).unwrap_or(0) as usize;
    let mut coeffs = vec![a0.zero_like(); bdeg + 1];
    for (e, c) in p.terms() {
        let term = a0
            .lift_residue(c.value())
            .mul(&a0.pow(e.0[VAR_A] as u64));
        let idx = e.0[VAR_B] as usize;
        coeffs[idx] = coeffs[idx].add(&term);
    }
    UniPoly::new(coeffs)
}

fn homogenize(p: &PolyAB, degree: usize) -> Result<MultiPoly<Fp>> {
    let mut out = MultiPoly::zero(3, p.exemplar());
    for (e, c) in p.terms() {
        let total = (e.0[0] + e.0[1]) as usize;
        if total > degree {
            return Err(Error::UnexpectedFiberStructure(format!(
                "term of degree {total} cannot homogenize to degree {degree}"
            )));
        }
        out = out.add(&MultiPoly::monomial(
            3,
            vec![e.0[0], e.0[1], (degree - total) as u32],
            *c,
        ));
    }
    Ok(out)
}

/// Distinct common projective roots of the two leading forms (z = 0 slice
/// of the homogenized system): the degree of the squarefree part of their
/// gcd as binary forms in (a, B), plus one if both vanish at (0 : 1).
fn common_points_at_infinity(
    hom1: &MultiPoly<Fp>,
    hom2: &MultiPoly<Fp>,
    _seed: u64,
) -> Result<usize> {
    let slice = |h: &MultiPoly<Fp>| -> UniPoly<Fp> {
        // set z = 0, read as a polynomial in u = B/a (coefficients by B-degree)
        let bdeg = h.degree_in(1).unwrap_or(0) as usize;
        let mut coeffs = vec![*h.exemplar(); bdeg + 1];
        for (e, c) in h.terms() {
            if e.0[2] == 0 {
                coeffs[e.0[1] as usize] = *c;
            }
        }
        UniPoly::new(coeffs)
    };
    let s1 = slice(hom1);
    let s2 = slice(hom2);
    if s1.is_zero() || s2.is_zero() {
        return Err(Error::UnexpectedFiberStructure(
            "leading form of the period-2 system vanishes".to_string(),
        ));
    }
    let g = s1.gcd_monic(&s2)?;
    let mut count = match g.degree() {
        None | Some(0) => 0,
        Some(_) => g.squarefree_part()?.degree().unwrap(),
    };
    // shared root at (a : B) = (0 : 1): both forms divisible by a, i.e.
    // their chart polynomials drop below the formal degrees 9 and 16
    if s1.degree().unwrap() < 9 && s2.degree().unwrap() < 16 {
        count += 1;
    }
    Ok(count)
}
