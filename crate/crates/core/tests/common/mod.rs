//! Naive reference implementations used as test oracles.
//!
//! Nothing here touches the library's enumeration or elimination code: the
//! degree basis is rebuilt by plain recursion and ranks come from textbook
//! Gaussian elimination over `BigRational`. Small matrices are reduced densely;
//! above [`DENSE_LIMIT`] rows the same elimination runs on rows that store
//! only their nonzero entries, since dense storage of the largest catalog
//! slices does not fit in memory.

#![allow(dead_code)]

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use num_rational::BigRational;
use num_traits::{One, Zero};
use sullivan::differential::Model;
use sullivan::{Element, Monomial};

pub fn catalog_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../catalog")
}

pub fn catalog_models() -> Vec<(String, Model)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(catalog_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "model"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            let text = std::fs::read_to_string(&p).unwrap();
            (name, Model::parse(&text).unwrap())
        })
        .collect()
}

/// Exponent vectors of total degree `n`, odd generators capped at 1.
pub fn naive_basis(degrees: &[u32], n: u32) -> Vec<Vec<u32>> {
    fn rec(degrees: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == degrees.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let d = degrees[i];
        let cap = if d % 2 == 1 { 1 } else { left / d };
        for e in 0..=cap.min(left / d) {
            cur.push(e);
            rec(degrees, i + 1, left - e * d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(degrees, 0, n, &mut Vec::new(), &mut out);
    out
}

fn degrees(m: &Model) -> Vec<u32> {
    m.algebra().generators().iter().map(|g| g.degree()).collect()
}

/// Matrix of `d: A^n → A^{n+1}`, one sparse row per source monomial.
pub fn naive_d_rows(m: &Model, n: u32) -> (Vec<SparseRow>, usize) {
    let deg = degrees(m);
    let src = naive_basis(&deg, n);
    let dst = naive_basis(&deg, n + 1);
    let index: HashMap<&[u32], usize> = dst.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect();
    let rows = src
        .iter()
        .map(|e| {
            let mono = Element::monomial(m.algebra(), Monomial::from_exponents(e.clone()), BigRational::one());
            let mut row: SparseRow = m.d(&mono).terms().map(|(mm, c)| (index[mm.exponents()], c.clone())).collect();
            row.sort_by_key(|&(c, _)| c);
            row
        })
        .collect();
    (rows, dst.len())
}

pub fn naive_d_matrix(m: &Model, n: u32) -> Vec<Vec<BigRational>> {
    let (rows, ncols) = naive_d_rows(m, n);
    rows.into_iter().map(|r| densify(&r, ncols)).collect()
}

fn densify(row: &SparseRow, ncols: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); ncols];
    for (c, v) in row {
        out[*c] = v.clone();
    }
    out
}

pub const DENSE_LIMIT: usize = 400;

pub type SparseRow = Vec<(usize, BigRational)>;

/// `a − f·b` on sorted sparse rows.
fn axpy(a: &SparseRow, f: &BigRational, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - f * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sparse_rank(rows: Vec<SparseRow>) -> usize {
    let mut pivots: HashMap<usize, SparseRow> = HashMap::new();
    for mut row in rows {
        while let Some((lead, v)) = row.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => row = axpy(&row, &v, p),
                None => {
                    let inv = v.recip();
                    let normalized = row.into_iter().map(|(c, x)| (c, x * &inv)).collect();
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    pivots.len()
}

pub fn naive_rank_d(m: &Model, n: u32) -> usize {
    let (rows, ncols) = naive_d_rows(m, n);
    if rows.len() > DENSE_LIMIT {
        sparse_rank(rows)
    } else {
        dense_rank(rows.iter().map(|r| densify(r, ncols)).collect())
    }
}

pub fn dense_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let f = &rows[r][col] / &pivot[col];
            for c in col..ncols {
                if !pivot[c].is_zero() {
                    let t = &f * &pivot[c];
                    rows[r][c] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn naive_dim(m: &Model, n: u32) -> usize {
    naive_basis(&degrees(m), n).len()
}

/// `dim ker d^n − rank d^{n−1}` for `n` in `from..=to`.
pub fn naive_betti_range(m: &Model, from: u32, to: u32) -> Vec<usize> {
    let ranks: Vec<usize> = (from.saturating_sub(1)..=to).map(|n| naive_rank_d(m, n)).collect();
    let offset = usize::from(from > 0);
    (from..=to)
        .enumerate()
        .map(|(i, n)| {
            let rank_in = if n == 0 { 0 } else { ranks[i + offset - 1] };
            naive_dim(m, n) - ranks[i + offset] - rank_in
        })
        .collect()
}

pub fn naive_betti(m: &Model, n: u32) -> usize {
    naive_betti_range(m, n, n)[0]
}
