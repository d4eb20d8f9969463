//! Command-line front end: every pipeline with JSON output and seedable
//! determinism. Exit codes: 0 success, 1 mathematical error or expectation
//! mismatch, 2 usage error.

use clap::{Args, Parser, Subcommand};
use multspec::algebra::rational::{parse_rational, Rational};
use multspec::algebra::ring::Ring;
use multspec::bounds;
use multspec::dynsys::{
    self, cubic_covariants, discriminant_resultants, multiplier_multiset_ff,
    multiplier_multiset_rational, multiplier_spectrum, spectrum_nth_root, Correspondence,
    Multiplier, SpectrumForm,
};
use multspec::error::{Error, Result};
use multspec::ffverify::CubicFamily;
use multspec::interp::{ComposedBox, InterpProblem, PolyBox};
use multspec::jsonio::{
    emit_correspondence, emit_hilbert, parse_correspondence, parse_hilbert, AnyCorrespondence,
    CorrespondenceDoc, HilbertDoc, JsonInt,
};
use multspec::schur::{schur_eval_bialternant, schur_eval_kostka, Partition};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "multspec",
    version,
    about = "Exact multiplier spectra of self-correspondences of P^1, Hilbert-series degree bounds, and finite-field certification"
)]
struct Cli {
    /// Pretty-print the JSON output
    #[arg(long, global = true)]
    pretty: bool,
    /// Compare the output against a JSON fixture; exit nonzero on mismatch
    #[arg(long, global = true, value_name = "PATH")]
    expect: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The polynomial counting points of formal period n
    Nu {
        #[arg(long)]
        n: u32,
    },
    /// n-th iterate of a correspondence document
    Iterate {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        n: usize,
    },
    /// Divisor of formal-period-n points on the diagonal
    Perstar {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        n: usize,
    },
    /// Multiplier spectrum form of the formal-period-n points
    Spectrum {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        n: usize,
        /// Also extract the orbit-level n-th root
        #[arg(long)]
        orbit: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Diagonal quartic, transvectant quadratic and their
    /// discriminant-resultants for a bidegree-(1,3) correspondence
    Covariants {
        #[command(flatten)]
        input: InputArg,
    },
    /// Schur polynomial evaluation by the tableau and alternant routes
    Schur {
        /// Partition, comma separated, e.g. 2,1,0
        #[arg(long)]
        shape: String,
        /// Evaluation points, comma separated rationals, e.g. 4,2,2
        #[arg(long)]
        values: String,
        #[arg(long, default_value = "both")]
        route: String,
    },
    /// Hilbert series operations on a series document
    Hilbert {
        /// Path to the JSON series document
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
        /// Print the first N+1 power-series coefficients
        #[arg(long)]
        coeffs: Option<usize>,
        /// Pole order, volume and saturator at t = 1
        #[arg(long)]
        volume: bool,
        #[arg(long)]
        saturator: bool,
        /// Veronese section of the given order
        #[arg(long)]
        veronese: Option<usize>,
        /// Growth check window endpoint
        #[arg(long)]
        asymptotic: Option<usize>,
        /// Second series document: report the extension-degree volume ratio
        #[arg(long, value_name = "PATH")]
        degree_bound_vs: Option<PathBuf>,
    },
    /// Closed-form degree bounds for the combined spectrum maps
    Bound {
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        e: Option<u64>,
        #[arg(long)]
        p: Option<u32>,
        /// Bound for degree-d morphisms and the third spectrum instead
        #[arg(long, value_name = "D")]
        morphism_degree: Option<u64>,
    },
    /// Certify distinctness of period-2 multiplier triples on a cubic fiber
    VerifyCubic {
        #[arg(long, default_value_t = 101)]
        p: u64,
        #[arg(long, default_value_t = 3)]
        l0: i64,
        #[arg(long, default_value_t = 2)]
        l1: i64,
        #[arg(long, default_value_t = 4)]
        l8: i64,
        #[arg(long, default_value_t = -5, allow_hyphen_values = true)]
        lambda: i64,
        #[arg(long, default_value_t = 8)]
        extension_cap: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Built-in interpolation demonstrations
    InterpDemo {
        #[arg(long, default_value = "power-sum")]
        demo: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Args)]
struct InputArg {
    /// Path to the JSON input document
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    /// Reinterpret the document's coefficients in this field
    /// (q, fp:<p> or fq:<p>:<k>)
    #[arg(long, value_name = "FIELD")]
    field: Option<String>,
}

impl InputArg {
    fn correspondence(&self) -> Result<AnyCorrespondence> {
        let mut doc: CorrespondenceDoc = read_json(&self.input)?;
        if let Some(flag) = &self.field {
            doc.field = multspec::jsonio::parse_field_flag(flag)?;
        }
        parse_correspondence(&doc)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(value) => {
            let rendered = if cli.pretty {
                serde_json::to_string_pretty(&value).expect("serializable")
            } else {
                serde_json::to_string(&value).expect("serializable")
            };
            println!("{rendered}");
            if let Some(path) = &cli.expect {
                match check_expectation(&value, path) {
                    Ok(true) => ExitCode::SUCCESS,
                    Ok(false) => {
                        eprintln!("output does not match the fixture {}", path.display());
                        ExitCode::FAILURE
                    }
                    Err(err) => {
                        eprintln!("error: {err}");
                        ExitCode::FAILURE
                    }
                }
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}

fn check_expectation(value: &Value, path: &PathBuf) -> Result<bool> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let fixture: Value = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("invalid fixture JSON: {e}")))?;
    Ok(&fixture == value)
}

fn run(cmd: &Command) -> Result<Value> {
    match cmd {
        Command::Nu { n } => {
            if *n == 0 {
                return Err(Error::OutOfRange("period must be positive".to_string()));
            }
            Ok(json!({ "poly": dynsys::nu_poly(*n).format_with_var("x") }))
        }
        Command::Iterate { input, n } => {
            let c = input.correspondence()?;
            if *n == 0 {
                return Err(Error::OutOfRange("iterate needs n >= 1".to_string()));
            }
            let result = match &c {
                AnyCorrespondence::Rational(c) => AnyCorrespondence::Rational(c.iterate(*n)?),
                AnyCorrespondence::Prime(c) => AnyCorrespondence::Prime(c.iterate(*n)?),
                AnyCorrespondence::Extension(c) => AnyCorrespondence::Extension(c.iterate(*n)?),
            };
            Ok(serde_json::to_value(emit_correspondence(&result)).expect("serializable"))
        }
        Command::Perstar { input, n } => {
            let c = input.correspondence()?;
            if *n == 0 {
                return Err(Error::OutOfRange("period must be positive".to_string()));
            }
            match &c {
                AnyCorrespondence::Rational(c) => perstar_output(c, *n),
                AnyCorrespondence::Prime(c) => perstar_output(c, *n),
                AnyCorrespondence::Extension(c) => perstar_output(c, *n),
            }
        }
        Command::Spectrum { input, n, orbit, seed } => {
            let c = input.correspondence()?;
            if *n == 0 {
                return Err(Error::OutOfRange("period must be positive".to_string()));
            }
            match &c {
                AnyCorrespondence::Rational(c) => {
                    let s = multiplier_spectrum(c, *n)?;
                    let mults = match multiplier_multiset_rational(&s) {
                        Ok(list) => Some(list),
                        Err(Error::NonSplit { .. }) => None,
                        Err(other) => return Err(other),
                    };
                    spectrum_output(c, &s, *orbit, mults, *seed)
                }
                AnyCorrespondence::Prime(c) => {
                    let s = multiplier_spectrum(c, *n)?;
                    let mults = match multiplier_multiset_ff(&s, *seed) {
                        Ok(list) => Some(list),
                        Err(Error::NonSplit { .. }) => None,
                        Err(other) => return Err(other),
                    };
                    spectrum_output(c, &s, *orbit, mults, *seed)
                }
                AnyCorrespondence::Extension(c) => {
                    let s = multiplier_spectrum(c, *n)?;
                    let mults = match multiplier_multiset_ff(&s, *seed) {
                        Ok(list) => Some(list),
                        Err(Error::NonSplit { .. }) => None,
                        Err(other) => return Err(other),
                    };
                    spectrum_output(c, &s, *orbit, mults, *seed)
                }
            }
        }
        Command::Covariants { input } => {
            let c = input.correspondence()?;
            match &c {
                AnyCorrespondence::Rational(c) => covariants_output(c),
                AnyCorrespondence::Prime(c) => covariants_output(c),
                AnyCorrespondence::Extension(c) => covariants_output(c),
            }
        }
        Command::Schur { shape, values, route } => {
            let shape = Partition::new(parse_u32_list(shape)?)?;
            let values: Vec<Rational> = values
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?;
            let mut out = serde_json::Map::new();
            out.insert("shape".into(), json!(shape.parts()));
            out.insert(
                "values".into(),
                json!(values.iter().map(|v| v.to_string()).collect::<Vec<_>>()),
            );
            match route.as_str() {
                "kostka" => {
                    out.insert(
                        "kostka".into(),
                        json!(schur_eval_kostka(&shape, &values)?.to_string()),
                    );
                }
                "bialternant" => {
                    out.insert(
                        "bialternant".into(),
                        json!(schur_eval_bialternant(&shape, &values)?.to_string()),
                    );
                }
                "both" => {
                    out.insert(
                        "kostka".into(),
                        json!(schur_eval_kostka(&shape, &values)?.to_string()),
                    );
                    match schur_eval_bialternant(&shape, &values) {
                        Ok(v) => {
                            out.insert("bialternant".into(), json!(v.to_string()));
                        }
                        Err(Error::DegenerateAlternant) => {
                            out.insert("bialternant".into(), Value::Null);
                            out.insert(
                                "bialternant_note".into(),
                                json!("repeated values; alternant degenerates"),
                            );
                        }
                        Err(other) => return Err(other),
                    }
                }
                other => {
                    return Err(Error::Parse(format!(
                        "unknown route {other:?}; use kostka, bialternant or both"
                    )))
                }
            }
            Ok(Value::Object(out))
        }
        Command::Hilbert {
            input,
            coeffs,
            volume,
            saturator,
            veronese,
            asymptotic,
            degree_bound_vs,
        } => {
            let doc: HilbertDoc = read_json(input)?;
            let h = parse_hilbert(&doc)?;
            let mut out = serde_json::Map::new();
            out.insert(
                "series".into(),
                serde_json::to_value(emit_hilbert(&h)).expect("serializable"),
            );
            if let Some(n) = coeffs {
                let cs: Vec<JsonInt> =
                    h.series_coefficients(*n).iter().map(JsonInt::from_bigint).collect();
                out.insert(
                    "coefficients".into(),
                    serde_json::to_value(cs).expect("serializable"),
                );
            }
            if *volume {
                let rep = h.volume();
                out.insert(
                    "volume".into(),
                    json!({
                        "pole_order": rep.pole_order,
                        "volume": rep.volume.to_string(),
                        "saturator": rep.saturator,
                    }),
                );
            }
            if *saturator {
                out.insert("saturator".into(), json!(h.saturator()?));
            }
            if let Some(order) = veronese {
                if *order == 0 {
                    return Err(Error::OutOfRange(
                        "Veronese order must be positive".to_string(),
                    ));
                }
                let section = h.veronese_section(*order)?;
                out.insert(
                    "veronese".into(),
                    serde_json::to_value(emit_hilbert(&section)).expect("serializable"),
                );
            }
            if let Some(imax) = asymptotic {
                let rep = h.asymptotic_check(*imax)?;
                out.insert(
                    "asymptotic".into(),
                    json!({
                        "pole_order": rep.pole_order,
                        "volume": rep.volume.to_string(),
                        "i_max": rep.i_max,
                        "empirical_c": rep.empirical_c.to_string(),
                        "error_at_i_max": rep.error_at_i_max.to_string(),
                    }),
                );
            }
            if let Some(path) = degree_bound_vs {
                let other: HilbertDoc = read_json(path)?;
                let hb = parse_hilbert(&other)?;
                let ratio = multspec::hilbert::extension_degree_bound(&h, &hb)?;
                out.insert("extension_degree_bound".into(), json!(ratio.to_string()));
            }
            Ok(Value::Object(out))
        }
        Command::Bound { d, e, p, morphism_degree } => {
            if let Some(md) = morphism_degree {
                let rep = bounds::morphism_degree_bound(*md)?;
                return Ok(json!({
                    "d": rep.d,
                    "printed_bound": rep.printed_bound.to_string(),
                    "printed_floor": bigint_value(&rep.printed_floor),
                    "ratio_theorem_over_printed": rep.ratio.to_string(),
                    "theorem": bound_report_value(&rep.theorem),
                }));
            }
            let (Some(d), Some(e), Some(p)) = (d, e, p) else {
                return Err(Error::Parse(
                    "bound needs either --d --e --p or --morphism-degree".to_string(),
                ));
            };
            let rep = bounds::degree_bound(*d, *e, *p)?;
            Ok(bound_report_value(&rep))
        }
        Command::VerifyCubic { p, l0, l1, l8, lambda, extension_cap, seed } => {
            let fam = CubicFamily::new(*p, *l0, *l1, *l8)?;
            let cert = fam.injectivity_report(*lambda, *extension_cap, *seed)?;
            Ok(serde_json::to_value(cert).expect("serializable"))
        }
        Command::InterpDemo { demo, seed } => interp_demo(demo, *seed),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("invalid entry {t:?}")))
        })
        .collect()
}

fn bigint_value(v: &BigInt) -> Value {
    match i64::try_from(v.clone()) {
        Ok(n) => json!(n),
        Err(_) => json!(v.to_string()),
    }
}

fn bound_report_value(rep: &bounds::BoundReport) -> Value {
    let fiber = bounds::fiber_dimension_report(rep.d as i64, rep.e as i64);
    json!({
        "d": rep.d,
        "e": rep.e,
        "p": rep.p,
        "N": rep.n_value.to_string(),
        "exponent": rep.exponent,
        "gcd_factor": rep.gcd_factor,
        "bound": rep.bound.to_string(),
        "floor_bound": bigint_value(&rep.floor_bound),
        "lambda2_obstructed": rep.lambda2_obstructed,
        "fiber_dimension": {
            "orbit_count_expression": fiber.orbit_count_expression.to_string(),
            "closed_form": fiber.closed_form.to_string(),
            "expressions_equal": fiber.expressions_equal,
        },
    })
}

fn perstar_output<K: multspec::algebra::ring::Field>(
    c: &Correspondence<K>,
    n: usize,
) -> Result<Value> {
    let form = c.formal_periodic_form(n)?;
    Ok(json!({
        "bidegree": c.bidegree(),
        "period": n,
        "degree": form.form.degree(),
        "kind": "formal",
        "form": form.form.format_with_vars("z0", "z1"),
    }))
}

fn spectrum_output<K: multspec::algebra::ring::Field>(
    c: &Correspondence<K>,
    s: &SpectrumForm<K>,
    orbit: bool,
    mults: Option<Vec<Multiplier<K>>>,
    seed: u64,
) -> Result<Value> {
    let mut out = serde_json::Map::new();
    out.insert("bidegree".into(), json!(c.bidegree()));
    out.insert("period".into(), json!(s.period));
    out.insert("degree".into(), json!(s.form.degree()));
    out.insert("form".into(), json!(s.form.format_with_vars("dx", "dy")));
    out.insert("normalization".into(), json!(s.normalization));
    out.insert("seed".into(), json!(seed));
    if orbit {
        let root = spectrum_nth_root(s, s.period)?;
        out.insert("orbit_form".into(), json!(root.form.format_with_vars("dx", "dy")));
        out.insert("orbit_normalization".into(), json!(root.normalization));
    }
    match mults {
        Some(list) => {
            out.insert(
                "multipliers".into(),
                json!(list.iter().map(|m| m.to_string()).collect::<Vec<_>>()),
            );
        }
        None => {
            out.insert("multipliers".into(), Value::Null);
            out.insert(
                "multipliers_note".into(),
                json!("spectrum does not split over the coefficient field"),
            );
        }
    }
    Ok(Value::Object(out))
}

fn covariants_output<K: multspec::algebra::ring::Field>(c: &Correspondence<K>) -> Result<Value> {
    let cov = cubic_covariants(c)?;
    let dr = discriminant_resultants(&cov.quartic, &cov.quadratic)?;
    Ok(json!({
        "bidegree": c.bidegree(),
        "quartic": cov.quartic.format_with_vars("z0", "z1"),
        "quadratic": cov.quadratic.format_with_vars("z0", "z1"),
        "sigma": dr.sigma.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "sigma_plus": dr.sigma_plus.to_string(),
        "sigma_minus": dr.sigma_minus.to_string(),
    }))
}

#[derive(Serialize)]
struct InterpCoefficient {
    exponents: Vec<u32>,
    coefficient: String,
}

fn interp_demo(demo: &str, seed: u64) -> Result<Value> {
    let one: Rational = num_traits::One::one();
    let var =
        |arity: usize, i: usize| multspec::algebra::multipoly::MultiPoly::variable(arity, i, &one);
    let (problem, description) = match demo {
        "power-sum" => {
            // recover p2 = e1^2 - 2 e2 from black boxes for e1, e2
            let e1 = var(2, 0).add(&var(2, 1));
            let e2 = var(2, 0).mul(&var(2, 1));
            let p2 = var(2, 0).pow(2).add(&var(2, 1).pow(2));
            let problem = InterpProblem::new(
                vec![Box::new(PolyBox(e1)), Box::new(PolyBox(e2))],
                Box::new(PolyBox(p2)),
                vec![0, 0],
                1,
                vec![vec![2, 0], vec![0, 1]],
                5,
                seed,
            )?;
            (problem, "second power sum from the elementary symmetric functions")
        }
        "identity" => {
            let g = var(2, 0)
                .mul(&var(2, 1))
                .scale(&Rational::from_integer(BigInt::from(3)));
            let h = var(1, 0);
            let target = ComposedBox { outer: h, inner: vec![g.clone()] };
            let problem = InterpProblem::new(
                vec![Box::new(PolyBox(g))],
                Box::new(target),
                vec![0, 0],
                1,
                vec![vec![1]],
                5,
                seed,
            )?;
            (problem, "identity recovery of a single generator")
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown demo {other:?}; use power-sum or identity"
            )))
        }
    };
    let complexity = problem.complexity_report();
    let solution = problem.run(seed)?;
    Ok(json!({
        "demo": description,
        "seed": seed,
        "complexity": {
            "max_block_size": complexity.max_block_size,
            "block_count": complexity.block_count,
            "sample_count": complexity.sample_count,
            "verify_rows": complexity.verify_rows,
            "block_sizes": complexity.block_sizes,
        },
        "coefficients": solution
            .coefficients
            .iter()
            .map(|(e, c)| InterpCoefficient {
                exponents: e.clone(),
                coefficient: c.to_string(),
            })
            .map(|c| serde_json::to_value(c).expect("serializable"))
            .collect::<Vec<_>>(),
        "verified_rows": solution.verified_rows,
        "blocks_used": solution.blocks_used,
    }))
}
