//! Exact dense linear algebra over a field: Gaussian elimination with full
//! solution/rank/consistency reporting.

use super::ring::Field;

#[derive(Debug, Clone, PartialEq)]
pub enum LinearSolve<K> {
    Unique(Vec<K>),
    /// Consistent but underdetermined.
    RankDeficient { rank: usize },
    Inconsistent { rank: usize },
}

/// Solves `a x = b`; `a` is row-major with `rows >= 0`, all rows the same
/// length.
pub fn solve_linear_system<K: Field>(a: &[Vec<K>], b: &[K]) -> LinearSolve<K> {
    assert_eq!(a.len(), b.len());
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    if rows == 0 {
        return if cols == 0 { LinearSolve::Unique(Vec::new()) } else { LinearSolve::RankDeficient { rank: 0 } };
    }
    // augmented matrix
    let mut m: Vec<Vec<K>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            assert_eq!(row.len(), cols);
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].inv();
        for j in c..=cols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..=cols {
                    let t = m[r][j].mul(&factor);
                    m[i][j] = m[i][j].sub(&t);
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let rank = pivot_cols.len();
    // inconsistency: a zero row with nonzero rhs
    for i in rank..rows {
        if !m[i][cols].is_zero() {
            return LinearSolve::Inconsistent { rank };
        }
    }
    if rank < cols {
        return LinearSolve::RankDeficient { rank };
    }
    let zero = b[0].zero_like();
    let mut x = vec![zero; cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    LinearSolve::Unique(x)
}

/// Determinant over a field by fraction Gaussian elimination.
pub fn det_field<K: Field>(mut m: Vec<Vec<K>>, one: &K) -> K {
    let n = m.len();
    if n == 0 {
        return one.one_like();
    }
    let mut det = one.one_like();
    for k in 0..n {
        let Some(pr) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return one.zero_like();
        };
        if pr != k {
            m.swap(k, pr);
            det = det.neg();
        }
        det = det.mul(&m[k][k]);
        let inv = m[k][k].inv();
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = m[i][k].mul(&inv);
            for j in k..n {
                let t = m[k][j].mul(&factor);
                m[i][j] = m[i][j].sub(&t);
            }
        }
    }
    det
}
