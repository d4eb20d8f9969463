//! JSON interchange formats: field descriptors, correspondences as term
//! lists, and Hilbert series documents.
//!
//! Coefficient strings are decimal ("5", "-3", "1/72"); extension-field
//! elements are comma-separated coefficient lists in the generator basis
//! ("3,0,1" means 3 + w^2).

use crate::algebra::extfield::{ExtField, Fq};
use crate::algebra::primefield::{Fp, PrimeField};
use crate::algebra::rational::{parse_rational, Rational};
use crate::algebra::ring::Ring;
use crate::algebra::unipoly::UniPoly;
use crate::dynsys::{BiHomForm, Correspondence};
use crate::error::{Error, Result};
use crate::hilbert::HilbertSeries;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// Field descriptor: "Q", {"p": ...} or {"p": ..., "k": ..., "modulus": [...]}.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldDesc {
    Extension { p: u64, k: usize, modulus: Vec<u64> },
    Prime { p: u64 },
    Named(String),
}

impl FieldDesc {
    pub fn rationals() -> Self {
        FieldDesc::Named("Q".to_string())
    }
}

/// Parses the CLI field flag: "q", "fp:101" or "fq:101:8[:seed]".
pub fn parse_field_flag(s: &str) -> Result<FieldDesc> {
    let lower = s.to_ascii_lowercase();
    if lower == "q" {
        return Ok(FieldDesc::rationals());
    }
    let parts: Vec<&str> = lower.split(':').collect();
    let parse_u64 = |t: &str| -> Result<u64> {
        t.parse::<u64>().map_err(|_| Error::Parse(format!("invalid number {t:?}")))
    };
    match parts.as_slice() {
        ["fp", p] => {
            let p = parse_u64(p)?;
            PrimeField::new(p)?;
            Ok(FieldDesc::Prime { p })
        }
        ["fq", p, k] => {
            let p = parse_u64(p)?;
            let k = parse_u64(k)? as usize;
            let field = PrimeField::new(p)?;
            let ext = ExtField::with_random_modulus(field, k, 0);
            Ok(FieldDesc::Extension { p, k, modulus: ext.modulus_coeffs().to_vec() })
        }
        _ => Err(Error::Parse(format!("unrecognized field descriptor {s:?}"))),
    }
}

/// A correspondence document: terms are [x1-exponent, y1-exponent,
/// coefficient] with the bihomogeneous completion implied.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrespondenceDoc {
    pub bidegree: (usize, usize),
    pub field: FieldDesc,
    pub terms: Vec<(usize, usize, String)>,
}

/// Runtime-dispatched correspondence over the supported coefficient fields.
#[derive(Debug, Clone)]
pub enum AnyCorrespondence {
    Rational(Correspondence<Rational>),
    Prime(Correspondence<Fp>),
    Extension(Correspondence<Fq>),
}

pub fn parse_correspondence(doc: &CorrespondenceDoc) -> Result<AnyCorrespondence> {
    let (d, e) = doc.bidegree;
    match &doc.field {
        FieldDesc::Named(name) if name == "Q" => {
            let form = build_form(d, e, &doc.terms, &num_traits::One::one(), |s, _| {
                parse_rational(s)
            })?;
            Ok(AnyCorrespondence::Rational(Correspondence::new(form)?))
        }
        FieldDesc::Named(name) => Err(Error::Parse(format!("unknown field {name:?}"))),
        FieldDesc::Prime { p } => {
            let field = PrimeField::new(*p)?;
            let form = build_form(d, e, &doc.terms, &field.one(), |s, like| {
                parse_prime_elem(s, &like.field())
            })?;
            Ok(AnyCorrespondence::Prime(Correspondence::new(form)?))
        }
        FieldDesc::Extension { p, k, modulus } => {
            let field = PrimeField::new(*p)?;
            let coeffs: Vec<Fp> = modulus.iter().map(|&v| field.elem(v as i64)).collect();
            if coeffs.len() != k + 1 {
                return Err(Error::Parse(format!(
                    "modulus needs {} coefficients for degree {k}",
                    k + 1
                )));
            }
            let ext = ExtField::new(field, &UniPoly::new(coeffs))?;
            let form = build_form(d, e, &doc.terms, &ext.one(), |s, like| {
                parse_extension_elem(s, like)
            })?;
            Ok(AnyCorrespondence::Extension(Correspondence::new(form)?))
        }
    }
}

fn build_form<K: Ring>(
    d: usize,
    e: usize,
    terms: &[(usize, usize, String)],
    one: &K,
    parse: impl Fn(&str, &K) -> Result<K>,
) -> Result<BiHomForm<K>> {
    let mut form = BiHomForm::zero(d, e, one);
    for (i, j, coeff) in terms {
        if *i > d || *j > e {
            return Err(Error::Parse(format!(
                "term exponents ({i}, {j}) exceed the bidegree ({d}, {e})"
            )));
        }
        let c = parse(coeff, one)?;
        let cur = form.get(*i, *j).add(&c);
        form.set(*i, *j, cur);
    }
    Ok(form)
}

fn parse_prime_elem(s: &str, field: &PrimeField) -> Result<Fp> {
    let v: i64 = s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("invalid prime-field element {s:?}")))?;
    Ok(field.elem(v))
}

fn parse_extension_elem(s: &str, like: &Fq) -> Result<Fq> {
    let field = like.field();
    let p = field.prime_field().modulus() as i64;
    let coeffs: Result<Vec<u64>> = s
        .split(',')
        .map(|t| {
            let v: i64 = t
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid extension coefficient {t:?}")))?;
            Ok(v.rem_euclid(p) as u64)
        })
        .collect();
    field.from_coeffs(&coeffs?)
}

pub fn emit_correspondence(c: &AnyCorrespondence) -> CorrespondenceDoc {
    match c {
        AnyCorrespondence::Rational(c) => {
            emit_terms(c, FieldDesc::rationals(), |v| v.to_string())
        }
        AnyCorrespondence::Prime(c) => {
            let p = c.form().exemplar().modulus();
            emit_terms(c, FieldDesc::Prime { p }, |v| v.to_string())
        }
        AnyCorrespondence::Extension(c) => {
            let field = c.form().exemplar().field();
            let desc = FieldDesc::Extension {
                p: field.prime_field().modulus(),
                k: field.degree(),
                modulus: field.modulus_coeffs().to_vec(),
            };
            emit_terms(c, desc, |v| {
                let mut coeffs = v.coeffs().to_vec();
                while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
                    coeffs.pop();
                }
                coeffs
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
        }
    }
}

fn emit_terms<K: Ring>(
    c: &Correspondence<K>,
    field: FieldDesc,
    show: impl Fn(&K) -> String,
) -> CorrespondenceDoc {
    let (d, e) = c.bidegree();
    let mut terms = Vec::new();
    for i in 0..=d {
        for j in 0..=e {
            let v = c.form().get(i, j);
            if !v.is_zero() {
                terms.push((i, j, show(v)));
            }
        }
    }
    CorrespondenceDoc { bidegree: (d, e), field, terms }
}

/// Hilbert series document; numerator entries may be numbers or decimal
/// strings (for coefficients beyond the double-precision-safe range).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HilbertDoc {
    pub numerator: Vec<JsonInt>,
    pub denominator_exponents: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Num(i64),
    Str(String),
}

impl JsonInt {
    pub fn to_bigint(&self) -> Result<BigInt> {
        match self {
            JsonInt::Num(v) => Ok(BigInt::from(*v)),
            JsonInt::Str(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid integer {s:?}"))),
        }
    }

    pub fn from_bigint(v: &BigInt) -> JsonInt {
        match i64::try_from(v.clone()) {
            Ok(n) => JsonInt::Num(n),
            Err(_) => JsonInt::Str(v.to_string()),
        }
    }
}

pub fn parse_hilbert(doc: &HilbertDoc) -> Result<HilbertSeries> {
    let numerator: Result<Vec<BigInt>> = doc.numerator.iter().map(|v| v.to_bigint()).collect();
    HilbertSeries::new(numerator?, doc.denominator_exponents.clone())
}

pub fn emit_hilbert(h: &HilbertSeries) -> HilbertDoc {
    HilbertDoc {
        numerator: h.numerator().iter().map(JsonInt::from_bigint).collect(),
        denominator_exponents: h.denominator_exponents().to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn correspondence_roundtrip_over_q() {
        let doc: CorrespondenceDoc = serde_json::from_str(
            r#"{"bidegree": [1, 2], "field": "Q",
                "terms": [[0, 2, "1"], [1, 0, "-1"]]}"#,
        )
        .unwrap();
        let c = parse_correspondence(&doc).unwrap();
        let AnyCorrespondence::Rational(inner) = &c else {
            panic!("expected rational coefficients")
        };
        assert_eq!(inner.bidegree(), (1, 2));
        let back = emit_correspondence(&c);
        assert_eq!(back, doc);
    }

    #[test]
    fn correspondence_over_prime_field() {
        let doc: CorrespondenceDoc = serde_json::from_str(
            r#"{"bidegree": [1, 3], "field": {"p": 101},
                "terms": [[0, 3, "1"], [1, 0, "-1"]]}"#,
        )
        .unwrap();
        let c = parse_correspondence(&doc).unwrap();
        assert!(matches!(c, AnyCorrespondence::Prime(_)));
        let back = emit_correspondence(&c);
        // -1 is stored reduced
        assert_eq!(back.terms[1], (1, 0, "100".to_string()));
    }

    #[test]
    fn extension_field_document() {
        let field = PrimeField::new(5).unwrap();
        let ext = ExtField::with_random_modulus(field, 2, 3);
        let desc = FieldDesc::Extension {
            p: 5,
            k: 2,
            modulus: ext.modulus_coeffs().to_vec(),
        };
        let doc = CorrespondenceDoc {
            bidegree: (1, 1),
            field: desc,
            terms: vec![
                (0, 1, "1,2".to_string()),
                (1, 0, "4".to_string()),
            ],
        };
        let c = parse_correspondence(&doc).unwrap();
        let back = emit_correspondence(&c);
        assert_eq!(back, doc);
    }

    #[test]
    fn bad_documents_are_rejected() {
        let doc = CorrespondenceDoc {
            bidegree: (1, 1),
            field: FieldDesc::rationals(),
            terms: vec![(2, 0, "1".to_string())],
        };
        assert!(parse_correspondence(&doc).is_err());
        let doc = CorrespondenceDoc {
            bidegree: (1, 1),
            field: FieldDesc::Named("R".to_string()),
            terms: vec![],
        };
        assert!(parse_correspondence(&doc).is_err());
    }

    #[test]
    fn hilbert_document_roundtrip() {
        let doc: HilbertDoc = serde_json::from_str(
            r#"{"numerator": [1, 0, "2"], "denominator_exponents": [2, 3]}"#,
        )
        .unwrap();
        let h = parse_hilbert(&doc).unwrap();
        assert_eq!(h.numerator(), &[BigInt::from(1), BigInt::from(0), BigInt::from(2)]);
        let back = emit_hilbert(&h);
        assert_eq!(back.numerator, vec![JsonInt::Num(1), JsonInt::Num(0), JsonInt::Num(2)]);
        // huge coefficients go through strings
        let big = BigInt::from(2).pow(80);
        let h2 = HilbertSeries::new(vec![BigInt::from(1), big.clone()], vec![1]).unwrap();
        let doc2 = emit_hilbert(&h2);
        assert_eq!(doc2.numerator[1], JsonInt::Str(big.to_string()));
        assert_eq!(parse_hilbert(&doc2).unwrap(), h2);
    }

    #[test]
    fn field_flags() {
        assert_eq!(parse_field_flag("q").unwrap(), FieldDesc::rationals());
        assert_eq!(parse_field_flag("fp:101").unwrap(), FieldDesc::Prime { p: 101 });
        assert!(matches!(
            parse_field_flag("fq:101:2").unwrap(),
            FieldDesc::Extension { p: 101, k: 2, .. }
        ));
        assert!(parse_field_flag("fp:100").is_err());
        assert!(parse_field_flag("gf2").is_err());
    }
}
