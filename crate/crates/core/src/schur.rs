//! Partitions, semistandard Young tableaux, and exact Schur polynomial
//! evaluation by two independent routes.
//!
//! The tableau route computes the generating sum over semistandard tableaux.
//! It is organized as a dynamic program over interlacing partitions (one
//! variable at a time), which evaluates the same sum as direct enumeration
//! but stays feasible for staircase shapes with ten rows, where the tableau
//! count exceeds 2^45. The determinant (bialternant) route is independent
//! and needs pairwise distinct evaluation points.

use crate::algebra::linalg::det_field;
use crate::algebra::ring::Field;
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Weakly decreasing list of nonnegative integers; trailing zeros are
/// trimmed on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("not weakly decreasing: {parts:?}")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }
}

/// A semistandard tableau stored row-major; rows weakly increase, columns
/// strictly increase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    pub shape: Partition,
    pub rows: Vec<Vec<u32>>,
}

/// All semistandard tableaux of the given shape with entries in 1..=n, in
/// lexicographic order of the row-major reading word. Only sensible for
/// small shapes; the evaluation route below never enumerates.
pub fn ssyt_enumerate(shape: &Partition, n: u32) -> Vec<Tableau> {
    assert!(n >= 1);
    let mut rows: Vec<Vec<u32>> = shape.parts.iter().map(|&l| vec![0; l as usize]).collect();
    let cells: Vec<(usize, usize)> = shape
        .parts
        .iter()
        .enumerate()
        .flat_map(|(r, &l)| (0..l as usize).map(move |c| (r, c)))
        .collect();
    let mut out = Vec::new();
    fill(&mut rows, &cells, 0, n, shape, &mut out);
    out
}

fn fill(
    rows: &mut Vec<Vec<u32>>,
    cells: &[(usize, usize)],
    idx: usize,
    n: u32,
    shape: &Partition,
    out: &mut Vec<Tableau>,
) {
    if idx == cells.len() {
        out.push(Tableau { shape: shape.clone(), rows: rows.clone() });
        return;
    }
    let (r, c) = cells[idx];
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(rows[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(rows[r - 1][c] + 1);
    }
    for v in lo..=n {
        rows[r][c] = v;
        fill(rows, cells, idx + 1, n, shape, out);
    }
    rows[r][c] = 0;
}

/// Schur polynomial evaluated as the tableau generating sum, organized as a
/// dynamic program over interlacing partitions. Repeated values are fine.
pub fn schur_eval_kostka<K: Field>(shape: &Partition, values: &[K]) -> Result<K> {
    if values.is_empty() {
        return Err(Error::OutOfRange("no evaluation points".to_string()));
    }
    if values.len() < shape.len() {
        return Err(Error::OutOfRange(format!(
            "{} values for a partition with {} parts",
            values.len(),
            shape.len()
        )));
    }
    let one = values[0].one_like();
    let mut memo: HashMap<(usize, Vec<u32>), K> = HashMap::new();
    Ok(branch(shape.parts(), values.len(), values, &one, &mut memo))
}

fn branch<K: Field>(
    shape: &[u32],
    k: usize,
    values: &[K],
    one: &K,
    memo: &mut HashMap<(usize, Vec<u32>), K>,
) -> K {
    if shape.is_empty() {
        return one.clone();
    }
    if k == 0 {
        return one.zero_like();
    }
    let key = (k, shape.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let total: u32 = shape.iter().sum();
    let x = &values[k - 1];
    let m = shape.len();
    // mu interlaces the shape: shape[i] >= mu[i] >= shape[i + 1]; every such
    // vector is automatically a partition and shape/mu a horizontal strip
    let lo: Vec<u32> = (0..m).map(|i| if i + 1 < m { shape[i + 1] } else { 0 }).collect();
    let mut mu = lo.clone();
    let mut acc = one.zero_like();
    loop {
        let msize: u32 = mu.iter().sum();
        let mut trimmed = mu.clone();
        while trimmed.last() == Some(&0) {
            trimmed.pop();
        }
        let sub = branch(&trimmed, k - 1, values, one, memo);
        if !sub.is_zero() {
            acc = acc.add(&sub.mul(&x.pow((total - msize) as u64)));
        }
        // mixed-radix increment over the interlacing box
        let mut advanced = false;
        for i in (0..m).rev() {
            if mu[i] < shape[i] {
                mu[i] += 1;
                for j in i + 1..m {
                    mu[j] = lo[j];
                }
                advanced = true;
                break;
            }
            mu[i] = lo[i];
        }
        if !advanced {
            break;
        }
    }
    memo.insert(key, acc.clone());
    acc
}

/// Bialternant route: ratio of the alternant determinant by the Vandermonde
/// determinant. Requires pairwise distinct values.
pub fn schur_eval_bialternant<K: Field>(shape: &Partition, values: &[K]) -> Result<K> {
    if values.is_empty() {
        return Err(Error::OutOfRange("no evaluation points".to_string()));
    }
    if values.len() < shape.len() {
        return Err(Error::OutOfRange(format!(
            "{} values for a partition with {} parts",
            values.len(),
            shape.len()
        )));
    }
    let l = values.len();
    for i in 0..l {
        for j in i + 1..l {
            if values[i] == values[j] {
                return Err(Error::DegenerateAlternant);
            }
        }
    }
    let one = values[0].one_like();
    let mut padded = shape.parts().to_vec();
    padded.resize(l, 0);
    let numer: Vec<Vec<K>> = values
        .iter()
        .map(|x| {
            (0..l)
                .map(|j| x.pow(padded[j] as u64 + (l - 1 - j) as u64))
                .collect()
        })
        .collect();
    let denom: Vec<Vec<K>> = values
        .iter()
        .map(|x| (0..l).map(|j| x.pow((l - 1 - j) as u64)).collect())
        .collect();
    let dd = det_field(denom, &one);
    debug_assert!(!dd.is_zero(), "distinct points give a nonzero Vandermonde");
    Ok(det_field(numer, &one).div(&dd))
}

/// Positive weights of the tensor product V_d (x) V_e of irreducible
/// SL_2-representations, in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightList {
    pub d: u32,
    pub e: u32,
    pub weights: Vec<u32>,
}

pub fn tensor_positive_weights(d: u32, e: u32) -> WeightList {
    let mut weights = Vec::new();
    for i in 0..=d {
        let a = d as i64 - 2 * i as i64;
        for j in 0..=e {
            let b = e as i64 - 2 * j as i64;
            if a + b > 0 {
                weights.push((a + b) as u32);
            }
        }
    }
    weights.sort_unstable_by(|a, b| b.cmp(a));
    WeightList { d, e, weights }
}
