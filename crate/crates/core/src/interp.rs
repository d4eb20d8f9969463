//! Degree-wise random-sampling interpolation: recover h with
//! H = h(g_1, ..., g_beta) from black-box evaluations.
//!
//! The trick is a substitution map sigma collapsing the input variables so
//! that every generator becomes a single monomial; candidate monomials of h
//! then fall into blocks by induced multidegree, the linear system
//! block-diagonalizes, and each block is solved from a handful of random
//! rational samples. Extra sample rows verify the solution instead of
//! trusting a probability estimate.

use crate::algebra::linalg::{solve_linear_system, LinearSolve};
use crate::algebra::multipoly::MultiPoly;
use crate::algebra::rational::Rational;
use crate::algebra::ring::Ring;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Evaluation access to a polynomial: plain rational evaluation plus
/// evaluation at polynomial arguments (needed to read off coefficients of
/// the collapsed substitution). No other structure is assumed.
pub trait BlackBox: Send + Sync {
    fn arity(&self) -> usize;
    fn eval(&self, args: &[Rational]) -> Rational;
    fn eval_poly(&self, args: &[MultiPoly<Rational>]) -> MultiPoly<Rational>;
}

/// A closed-form polynomial used as a black box.
pub struct PolyBox(pub MultiPoly<Rational>);

impl BlackBox for PolyBox {
    fn arity(&self) -> usize {
        self.0.arity()
    }
    fn eval(&self, args: &[Rational]) -> Rational {
        self.0.eval(args)
    }
    fn eval_poly(&self, args: &[MultiPoly<Rational>]) -> MultiPoly<Rational> {
        self.0.substitute(args)
    }
}

/// h(g_1, ..., g_beta) evaluated without ever expanding the composition.
pub struct ComposedBox {
    pub outer: MultiPoly<Rational>,
    pub inner: Vec<MultiPoly<Rational>>,
}

impl BlackBox for ComposedBox {
    fn arity(&self) -> usize {
        self.inner.first().map_or(0, |g| g.arity())
    }
    fn eval(&self, args: &[Rational]) -> Rational {
        let values: Vec<Rational> = self.inner.iter().map(|g| g.eval(args)).collect();
        self.outer.eval(&values)
    }
    fn eval_poly(&self, args: &[MultiPoly<Rational>]) -> MultiPoly<Rational> {
        let values: Vec<MultiPoly<Rational>> =
            self.inner.iter().map(|g| g.substitute(args)).collect();
        self.outer.substitute(&values)
    }
}

pub struct InterpProblem {
    generators: Vec<Box<dyn BlackBox>>,
    target: Box<dyn BlackBox>,
    input_arity: usize,
    collapsed_arity: usize,
    sigma: Vec<usize>,
    support: Vec<Vec<u32>>,
    verify_rows: usize,
    /// induced x-multidegree of each generator under the collapse
    generator_degrees: Vec<Vec<u32>>,
}

/// Partition of the candidate support by induced multidegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPlan {
    pub blocks: Vec<Block>,
    pub max_block_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub multidegree: Vec<u32>,
    /// indices into the support list
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InterpSolution {
    /// exponent vector over the generators -> exact coefficient
    pub coefficients: Vec<(Vec<u32>, Rational)>,
    pub verified_rows: usize,
    pub blocks_used: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityReport {
    pub max_block_size: usize,
    pub block_count: usize,
    pub sample_count: usize,
    pub verify_rows: usize,
    pub block_sizes: Vec<usize>,
}

const SAMPLE_BOUND: i64 = 10_000;
const BLOCK_RETRIES: usize = 3;

impl InterpProblem {
    /// Builds the problem and verifies the substitution property on random
    /// samples: every generator must collapse to a single monomial under
    /// x_t -> a_t X_sigma(t).
    pub fn new(
        generators: Vec<Box<dyn BlackBox>>,
        target: Box<dyn BlackBox>,
        sigma: Vec<usize>,
        collapsed_arity: usize,
        support: Vec<Vec<u32>>,
        verify_rows: usize,
        seed: u64,
    ) -> Result<InterpProblem> {
        if generators.is_empty() {
            return Err(Error::SupportHypothesis("no generators".to_string()));
        }
        let input_arity = generators[0].arity();
        if sigma.len() != input_arity {
            return Err(Error::SupportHypothesis(format!(
                "substitution map has {} entries for {input_arity} variables",
                sigma.len()
            )));
        }
        if sigma.iter().any(|&t| t >= collapsed_arity) {
            return Err(Error::SupportHypothesis(
                "substitution map exceeds the collapsed arity".to_string(),
            ));
        }
        for d in &support {
            if d.len() != generators.len() {
                return Err(Error::SupportHypothesis(format!(
                    "support exponent {d:?} does not match {} generators",
                    generators.len()
                )));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc0115);
        let mut generator_degrees: Vec<Vec<u32>> = Vec::new();
        for round in 0..2 {
            let sample = random_sample(&mut rng, input_arity);
            let args = collapsed_args(&sample, &sigma, collapsed_arity);
            for (i, g) in generators.iter().enumerate() {
                let p = g.eval_poly(&args);
                if !p.is_single_term() {
                    return Err(Error::SupportHypothesis(format!(
                        "generator {i} does not collapse to a monomial ({} terms)",
                        p.num_terms()
                    )));
                }
                let (e, _) = p.leading_term().unwrap();
                if round == 0 {
                    generator_degrees.push(e.0.clone());
                } else if generator_degrees[i] != e.0 {
                    return Err(Error::SupportHypothesis(format!(
                        "generator {i} changes its collapsed degree between samples"
                    )));
                }
            }
        }
        Ok(InterpProblem {
            generators,
            target,
            input_arity,
            collapsed_arity,
            sigma,
            support,
            verify_rows,
            generator_degrees,
        })
    }

    pub fn generator_degrees(&self) -> &[Vec<u32>] {
        &self.generator_degrees
    }

    /// Groups the candidate monomials by the multidegree of g^d under the
    /// collapse.
    pub fn plan_blocks(&self) -> BlockPlan {
        let mut map: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
        for (idx, d) in self.support.iter().enumerate() {
            let mut mu = vec![0u32; self.collapsed_arity];
            for (di, ei) in d.iter().zip(self.generator_degrees.iter()) {
                for (m, e) in mu.iter_mut().zip(ei.iter()) {
                    *m += di * e;
                }
            }
            map.entry(mu).or_default().push(idx);
        }
        let blocks: Vec<Block> = map
            .into_iter()
            .map(|(multidegree, members)| Block { multidegree, members })
            .collect();
        let max_block_size = blocks.iter().map(|b| b.members.len()).max().unwrap_or(0);
        BlockPlan { blocks, max_block_size }
    }

    pub fn complexity_report(&self) -> ComplexityReport {
        let plan = self.plan_blocks();
        let sample_count = if self.support.is_empty() {
            0
        } else {
            plan.max_block_size + self.verify_rows
        };
        ComplexityReport {
            max_block_size: plan.max_block_size,
            block_count: plan.blocks.len(),
            sample_count,
            verify_rows: self.verify_rows,
            block_sizes: plan.blocks.iter().map(|b| b.members.len()).collect(),
        }
    }

    /// Draws max-block-size + verify-rows samples, solves each block on its
    /// leading rows and verifies the assembled candidate on every remaining
    /// row. Singular blocks are resampled with fresh randomness a bounded
    /// number of times before the support hypothesis is rejected.
    pub fn run(&self, seed: u64) -> Result<InterpSolution> {
        let plan = self.plan_blocks();
        if self.support.is_empty() {
            return Ok(InterpSolution {
                coefficients: Vec::new(),
                verified_rows: 0,
                blocks_used: 0,
                seed,
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let total_rows = plan.max_block_size + self.verify_rows;
        let base_rows: Vec<SampleRow> =
            (0..total_rows).map(|_| self.sample_row(&mut rng)).collect();

        let mut coefficients: Vec<(Vec<u32>, Rational)> =
            self.support.iter().map(|d| (d.clone(), rat_zero())).collect();
        for block in &plan.blocks {
            let k = block.members.len();
            let mut solved = None;
            for attempt in 0..=BLOCK_RETRIES {
                let rows: Vec<SampleRow> = if attempt == 0 {
                    base_rows[..k].to_vec()
                } else {
                    (0..k).map(|_| self.sample_row(&mut rng)).collect()
                };
                let matrix: Vec<Vec<Rational>> = rows
                    .iter()
                    .map(|row| {
                        block
                            .members
                            .iter()
                            .map(|&idx| monomial_value(&row.generator_values, &self.support[idx]))
                            .collect()
                    })
                    .collect();
                let rhs: Vec<Rational> = rows
                    .iter()
                    .map(|row| row.target_coefficient(&block.multidegree))
                    .collect();
                match solve_linear_system(&matrix, &rhs) {
                    LinearSolve::Unique(x) => {
                        solved = Some(x);
                        break;
                    }
                    LinearSolve::RankDeficient { .. } | LinearSolve::Inconsistent { .. } => {}
                }
            }
            let Some(x) = solved else {
                return Err(Error::SupportHypothesis(format!(
                    "block of size {k} stayed singular after {BLOCK_RETRIES} resamples"
                )));
            };
            for (&idx, value) in block.members.iter().zip(x.into_iter()) {
                coefficients[idx].1 = value;
            }
        }

        // verification on every base row against every block
        let mut verified = 0usize;
        for row in &base_rows {
            for block in &plan.blocks {
                let mut acc = rat_zero();
                for &idx in &block.members {
                    let v = monomial_value(&row.generator_values, &self.support[idx]);
                    acc = acc.add(&coefficients[idx].1.mul(&v));
                }
                if acc != row.target_coefficient(&block.multidegree) {
                    return Err(Error::VerificationFailed(
                        "candidate support is too small for the target".to_string(),
                    ));
                }
            }
            verified += 1;
        }
        Ok(InterpSolution {
            coefficients,
            verified_rows: verified,
            blocks_used: plan.blocks.len(),
            seed,
        })
    }

    fn sample_row(&self, rng: &mut ChaCha8Rng) -> SampleRow {
        let sample = random_sample(rng, self.input_arity);
        let generator_values: Vec<Rational> =
            self.generators.iter().map(|g| g.eval(&sample)).collect();
        let args = collapsed_args(&sample, &self.sigma, self.collapsed_arity);
        let collapsed_target = self.target.eval_poly(&args);
        SampleRow { generator_values, collapsed_target }
    }
}

#[derive(Clone)]
struct SampleRow {
    generator_values: Vec<Rational>,
    collapsed_target: MultiPoly<Rational>,
}

impl SampleRow {
    fn target_coefficient(&self, multidegree: &[u32]) -> Rational {
        self.collapsed_target.coeff(multidegree)
    }
}

fn rat_zero() -> Rational {
    num_traits::Zero::zero()
}

fn random_sample(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| loop {
            let v = rng.random_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
            if v != 0 {
                break Rational::from_integer(BigInt::from(v));
            }
        })
        .collect()
}

fn collapsed_args(
    sample: &[Rational],
    sigma: &[usize],
    collapsed_arity: usize,
) -> Vec<MultiPoly<Rational>> {
    sample
        .iter()
        .zip(sigma.iter())
        .map(|(a, &t)| {
            let one: Rational = num_traits::One::one();
            MultiPoly::variable(collapsed_arity, t, &one).scale(a)
        })
        .collect()
}

fn monomial_value(values: &[Rational], exponents: &[u32]) -> Rational {
    let mut acc: Rational = num_traits::One::one();
    for (v, &e) in values.iter().zip(exponents.iter()) {
        if e > 0 {
            acc = acc.mul(&Ring::pow(v, e as u64));
        }
    }
    acc
}

/// Random well-posed instance for round-trip testing (also used by the
/// acceptance suite): one input variable per generator, so the generator
/// monomials are multiplicatively independent and each block is generically
/// regular, with a random collapse map.
#[doc(hidden)]
pub fn random_instance(
    rng: &mut ChaCha8Rng,
) -> (usize, Vec<usize>, usize, Vec<MultiPoly<Rational>>, Vec<Vec<u32>>) {
    let beta = rng.random_range(1..=3usize);
    let n = beta;
    let m = rng.random_range(1..=n);
    let sigma: Vec<usize> = (0..n).map(|_| rng.random_range(0..m)).collect();
    let gens: Vec<MultiPoly<Rational>> = (0..beta)
        .map(|i| {
            let mut exp = vec![0u32; n];
            exp[i] = rng.random_range(1..=2);
            let c = Rational::from_integer(BigInt::from(rng.random_range(1..=5i64)));
            MultiPoly::monomial(n, exp, c)
        })
        .collect();
    let max_support = 4usize.pow(beta as u32).min(20);
    let size = rng.random_range(1..=max_support);
    let mut support: Vec<Vec<u32>> = Vec::new();
    while support.len() < size {
        let d: Vec<u32> = (0..beta).map(|_| rng.random_range(0..=3)).collect();
        if !support.contains(&d) {
            support.push(d);
        }
    }
    (beta, sigma, m, gens, support)
}
