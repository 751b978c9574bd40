//! Exact linear algebra.
//!
//! The workhorse is [`Echelon`], an incremental fraction-free row echelon
//! form over the integers on sparse rows. Each stored row optionally carries
//! the combination of inserted vectors that produced it, which gives kernels
//! and preimage witnesses for free. Small dense problems use rational
//! reduced row echelon form.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;

/// Sparse integer vector: strictly increasing column indices, nonzero values.
pub type IntRow = Vec<(usize, BigInt)>;

/// Returns `p * a - q * b`.
pub fn combine(p: &BigInt, a: &IntRow, q: &BigInt, b: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push((a[i].0, p * &a[i].1));
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(q * &b[j].1)));
            j += 1;
        } else {
            let v = p * &a[i].1 - q * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn content(rows: &[&IntRow]) -> BigInt {
    let mut g = BigInt::zero();
    for r in rows {
        for (_, x) in r.iter() {
            g = g.gcd(x);
            if g.is_one() {
                return g;
            }
        }
    }
    g
}

fn divide(row: &mut IntRow, g: &BigInt) {
    for (_, x) in row.iter_mut() {
        *x /= g;
    }
}

fn negate(row: &mut IntRow) {
    for (_, x) in row.iter_mut() {
        *x = -&*x;
    }
}

/// Clears denominators; returns the integer row and the positive scale used.
pub fn to_int_row(v: &[Rational]) -> (IntRow, BigInt) {
    let mut l = BigInt::one();
    for x in v {
        if !x.is_zero() {
            l = l.lcm(x.denom());
        }
    }
    let row = v
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.numer() * (&l / x.denom())))
        .collect();
    (row, l)
}

pub fn to_dense(row: &IntRow, ncols: usize, scale: &BigInt) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); ncols];
    for (i, x) in row {
        out[*i] = Rational::new(x.clone(), scale.clone());
    }
    out
}

/// Result of reducing a target vector against an [`Echelon`]:
/// `residual = multiplier * target + sum_j combo[j] * inserted[j]`.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub residual: IntRow,
    pub multiplier: BigInt,
    pub combo: IntRow,
}

impl Reduction {
    pub fn is_zero(&self) -> bool {
        self.residual.is_empty()
    }

    /// The residual divided by the multiplier, as a dense rational vector.
    pub fn normal_form(&self, ncols: usize) -> Vec<Rational> {
        to_dense(&self.residual, ncols, &self.multiplier)
    }

    /// Coefficients `c` with `target = sum_j c[j] * inserted[j]`; only
    /// meaningful when the residual is zero.
    pub fn preimage(&self, ninserted: usize) -> Vec<Rational> {
        let m = -&self.multiplier;
        to_dense(&self.combo, ninserted, &m)
    }
}

#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    track: bool,
    rows: Vec<IntRow>,
    combos: Vec<IntRow>,
    pivot_of_col: HashMap<usize, usize>,
    kernel: Vec<IntRow>,
    inserted: usize,
}

impl Echelon {
    pub fn new(ncols: usize, track: bool) -> Self {
        Echelon {
            ncols,
            track,
            rows: Vec::new(),
            combos: Vec::new(),
            pivot_of_col: HashMap::new(),
            kernel: Vec::new(),
            inserted: 0,
        }
    }

    pub fn from_rows(ncols: usize, track: bool, rows: impl IntoIterator<Item = IntRow>) -> Self {
        let mut e = Echelon::new(ncols, track);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    pub fn rows(&self) -> &[IntRow] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    /// Integer combinations of the inserted vectors that vanish. Empty unless
    /// combinations are tracked.
    pub fn kernel(&self) -> &[IntRow] {
        &self.kernel
    }

    fn eliminate(&self, v: &mut IntRow, combo: &mut IntRow, mult: &mut BigInt) {
        let mut start = 0usize;
        loop {
            let hit = v
                .iter()
                .find(|(c, _)| *c >= start && self.pivot_of_col.contains_key(c))
                .map(|(c, a)| (*c, a.clone()));
            let Some((col, a)) = hit else { break };
            let r = self.pivot_of_col[&col];
            let p = &self.rows[r][0].1;
            let g = p.gcd(&a);
            let (pg, ag) = (p / &g, &a / &g);
            *v = combine(&pg, v, &ag, &self.rows[r]);
            if self.track {
                *combo = combine(&pg, combo, &ag, &self.combos[r]);
            }
            *mult *= &pg;
            let g = if self.track {
                content(&[v, combo]).gcd(mult)
            } else {
                content(&[v]).gcd(mult)
            };
            if !g.is_zero() && !g.is_one() {
                divide(v, &g);
                divide(combo, &g);
                *mult /= &g;
            }
            start = col + 1;
        }
    }

    /// Inserts a vector; returns true when it increased the rank.
    pub fn insert(&mut self, v: IntRow) -> bool {
        debug_assert!(v.iter().all(|(c, x)| *c < self.ncols && !x.is_zero()));
        let idx = self.inserted;
        self.inserted += 1;
        let mut combo: IntRow = if self.track {
            vec![(idx, BigInt::one())]
        } else {
            Vec::new()
        };
        let mut v = v;
        let mut mult = BigInt::one();
        self.eliminate(&mut v, &mut combo, &mut mult);
        if v.is_empty() {
            if self.track && !combo.is_empty() {
                let g = content(&[&combo]);
                divide(&mut combo, &g);
                if combo[0].1.is_negative() {
                    negate(&mut combo);
                }
                self.kernel.push(combo);
            }
            return false;
        }
        let g = content(&[&v, &combo]);
        divide(&mut v, &g);
        divide(&mut combo, &g);
        if v[0].1.is_negative() {
            negate(&mut v);
            negate(&mut combo);
        }
        self.pivot_of_col.insert(v[0].0, self.rows.len());
        self.rows.push(v);
        self.combos.push(combo);
        true
    }

    pub fn reduce(&self, target: &IntRow) -> Reduction {
        let mut v = target.clone();
        let mut combo = IntRow::new();
        let mut mult = BigInt::one();
        self.eliminate(&mut v, &mut combo, &mut mult);
        Reduction {
            residual: v,
            multiplier: mult,
            combo,
        }
    }

    pub fn reduce_rational(&self, target: &[Rational]) -> Reduction {
        let (row, scale) = to_int_row(target);
        let mut r = self.reduce(&row);
        r.multiplier *= scale;
        r
    }

    pub fn contains(&self, target: &IntRow) -> bool {
        self.reduce(target).is_zero()
    }
}

/// Reduced row echelon form in place; zero rows are dropped. Returns the
/// pivot column of each remaining row.
pub fn rref(rows: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..ncols {
                    let delta = &f * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{ x : A x = 0 }` for `A` given by rows with `ncols` columns.
pub fn kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (row, &pc) in m.iter().zip(&pivots) {
                x[pc] = -row[f].clone();
            }
            x
        })
        .collect()
}

/// Solves `sum_i x_i * vectors[i] = target`, if possible.
pub fn solve_combination(vectors: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let n = vectors.len();
    let dim = target.len();
    // augmented system: one row per coordinate
    let mut m: Vec<Vec<Rational>> = (0..dim)
        .map(|j| {
            let mut row: Vec<Rational> = vectors.iter().map(|v| v[j].clone()).collect();
            row.push(target[j].clone());
            row
        })
        .collect();
    if m.is_empty() {
        return Some(vec![Rational::zero(); n]);
    }
    let pivots = rref(&mut m);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &pc) in m.iter().zip(&pivots) {
        x[pc] = row[n].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use proptest::prelude::*;

    fn int_row(v: &[i64]) -> IntRow {
        v.iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| (i, BigInt::from(x)))
            .collect()
    }

    fn dense(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn kernel_and_witness() {
        let rows = [vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        let e = Echelon::from_rows(3, true, rows.iter().map(|r| int_row(r)));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.kernel().len(), 1);
        let red = e.reduce(&int_row(&[1, 3, 4]));
        assert!(red.is_zero());
        let c = red.preimage(3);
        let mut sum = vec![rat(0); 3];
        for (ci, r) in c.iter().zip(&rows) {
            for j in 0..3 {
                sum[j] += ci * rat(r[j]);
            }
        }
        assert_eq!(sum, dense(&[1, 3, 4]));
        assert!(!e.contains(&int_row(&[0, 0, 1])));
    }

    proptest! {
        #[test]
        fn echelon_rank_matches_rref(m in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 0..7)) {
            let e = Echelon::from_rows(5, true, m.iter().map(|r| int_row(r)));
            let dm: Vec<_> = m.iter().map(|r| dense(r)).collect();
            prop_assert_eq!(e.rank(), rank(&dm));
            prop_assert_eq!(e.kernel().len(), m.len() - e.rank());
            for k in e.kernel() {
                let mut sum = vec![BigInt::zero(); 5];
                for (i, c) in k {
                    for j in 0..5 {
                        sum[j] += c * BigInt::from(m[*i][j]);
                    }
                }
                prop_assert!(sum.iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn normal_form_is_independent_of_insertion_order(
            m in prop::collection::vec(prop::collection::vec(-3i64..4, 4), 1..5),
            t in prop::collection::vec(-3i64..4, 4),
        ) {
            let a = Echelon::from_rows(4, false, m.iter().map(|r| int_row(r)));
            let b = Echelon::from_rows(4, false, m.iter().rev().map(|r| int_row(r)));
            let target = int_row(&t);
            prop_assert_eq!(a.reduce(&target).normal_form(4), b.reduce(&target).normal_form(4));
        }
    }

    #[test]
    fn dense_helpers() {
        let a = vec![dense(&[1, 1, 0]), dense(&[0, 1, 1])];
        let k = kernel(&a, 3);
        assert_eq!(k, vec![dense(&[1, -1, 1])]);
        let x = solve_combination(&[dense(&[1, 0]), dense(&[1, 1])], &dense(&[3, 2])).unwrap();
        assert_eq!(x, dense(&[1, 2]));
        assert!(solve_combination(&[dense(&[1, 1])], &dense(&[1, 2])).is_none());
    }
}
