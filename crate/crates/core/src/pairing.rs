//! Pair partitions of sorted sequences and the crosswise bound.
//!
//! Indices are 1-based throughout. For a sorted sequence `a_1 ≤ ⋯ ≤ a_{2n}`
//! the crosswise pairing is `{i, 2n+1−i}`. Any pairing contains a pair whose
//! sum is at least every crosswise sum, so a bound on all pair sums of some
//! pairing transfers to the crosswise one.

use crate::error::{Error, Result};

/// Maximum sequence length accepted by [`brute_force_check`].
pub const BRUTE_FORCE_LIMIT: usize = 12;

/// A partition of `{1..2n}` into unordered pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPartition {
    pairs: Vec<(usize, usize)>,
}

impl PairPartition {
    /// Validates that `pairs` partitions `{1..len}`.
    pub fn new(pairs: Vec<(usize, usize)>, len: usize) -> Result<Self> {
        if len != 2 * pairs.len() {
            return Err(Error::Shape(format!(
                "{} pairs cannot partition {len} indices",
                pairs.len()
            )));
        }
        let mut seen = vec![false; len + 1];
        for &(i, j) in &pairs {
            if i == j {
                return Err(Error::Shape(format!("pair ({i},{j}) repeats an index")));
            }
            for k in [i, j] {
                if k == 0 || k > len {
                    return Err(Error::Shape(format!("index {k} outside 1..{len}")));
                }
                if seen[k] {
                    return Err(Error::Shape(format!("index {k} used twice")));
                }
                seen[k] = true;
            }
        }
        let pairs = pairs.into_iter().map(|(i, j)| (i.min(j), i.max(j))).collect();
        Ok(PairPartition { pairs })
    }

    /// The crosswise pairing `{i, len+1−i}`.
    pub fn crosswise(len: usize) -> Result<Self> {
        if len % 2 != 0 {
            return Err(Error::Shape(format!("odd length {len} has no pairing")));
        }
        PairPartition::new((1..=len / 2).map(|i| (i, len + 1 - i)).collect(), len)
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        2 * self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    fn partner(&self, i: usize) -> usize {
        self.pairs
            .iter()
            .find_map(|&(p, q)| match (p == i, q == i) {
                (true, _) => Some(q),
                (_, true) => Some(p),
                _ => None,
            })
            .expect("partition covers every index")
    }
}

fn check_sorted(a: &[u32]) -> Result<()> {
    if a.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Precondition("values must be sorted non-decreasing".into()));
    }
    if a.is_empty() || a.len() % 2 != 0 {
        return Err(Error::Precondition(format!(
            "expected a positive even number of values, got {}",
            a.len()
        )));
    }
    Ok(())
}

/// Crosswise sums `a_i + a_{2n+1−i}` for `i = 1..n`.
pub fn crosswise_sums(a: &[u32]) -> Vec<u64> {
    let len = a.len();
    (0..len / 2).map(|i| a[i] as u64 + a[len - 1 - i] as u64).collect()
}

/// True when every crosswise sum is at most `bound`.
pub fn crosswise_within(a: &[u32], bound: u64) -> bool {
    crosswise_sums(a).into_iter().all(|s| s <= bound)
}

fn pair_sum(a: &[u32], (i, j): (usize, usize)) -> u64 {
    a[i - 1] as u64 + a[j - 1] as u64
}

/// A pair of `t` whose sum dominates every crosswise sum of `a`.
///
/// Follows the peeling recursion: take the pair containing the largest
/// index; if its partner lies in the upper half it dominates outright,
/// otherwise recurse on the remaining values and keep the larger of the two
/// candidate sums. Ties resolve to the peeled pair, so the result is
/// deterministic but not canonical.
pub fn find_dominant_pair(a: &[u32], t: &PairPartition) -> Result<(usize, usize)> {
    check_sorted(a)?;
    if t.len() != a.len() {
        return Err(Error::Shape(format!(
            "partition of {} indices for {} values",
            t.len(),
            a.len()
        )));
    }
    let index: Vec<usize> = (1..=a.len()).collect();
    Ok(dominant(a, t, &index))
}

/// `index` lists the surviving original indices in sorted position order.
fn dominant(a: &[u32], t: &PairPartition, index: &[usize]) -> (usize, usize) {
    let len = index.len();
    let top = index[len - 1];
    let partner = t.partner(top);
    let pos = index.iter().position(|&k| k == partner).expect("partner survives") + 1;
    let peeled = (partner.min(top), partner.max(top));
    if pos >= len / 2 || len == 2 {
        return peeled;
    }
    let rest: Vec<usize> = index.iter().copied().filter(|&k| k != top && k != partner).collect();
    let inner = dominant(a, t, &rest);
    if pair_sum(a, inner) > pair_sum(a, peeled) {
        inner
    } else {
        peeled
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transfer {
    /// Every pair sum of the partition is within the bound, hence so is
    /// every crosswise sum.
    Holds { dominant: (usize, usize), crosswise: Vec<u64> },
    /// Some pair of the partition already exceeds the bound.
    NotApplicable { pair: (usize, usize), sum: u64 },
}

impl Transfer {
    pub fn holds(&self) -> bool {
        matches!(self, Transfer::Holds { .. })
    }
}

/// Transfers a bound on all pair sums of `t` to the crosswise sums.
pub fn crosswise_transfer(a: &[u32], bound: u64, t: &PairPartition) -> Result<Transfer> {
    let dominant = find_dominant_pair(a, t)?;
    if let Some(&pair) = t.pairs().iter().find(|&&p| pair_sum(a, p) > bound) {
        return Ok(Transfer::NotApplicable { pair, sum: pair_sum(a, pair) });
    }
    let crosswise = crosswise_sums(a);
    let top = pair_sum(a, dominant);
    assert!(
        crosswise.iter().all(|&s| s <= top && s <= bound),
        "dominant pair {dominant:?} fails to bound the crosswise sums"
    );
    Ok(Transfer::Holds { dominant, crosswise })
}

/// Exhaustive search for a pairing with all sums at most `bound`.
pub fn brute_force_check(a: &[u32], bound: u64) -> Result<bool> {
    check_sorted(a)?;
    if a.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::Precondition(format!(
            "brute force limited to {BRUTE_FORCE_LIMIT} values, got {}",
            a.len()
        )));
    }
    let mut used = vec![false; a.len()];
    Ok(search(a, bound, &mut used))
}

fn search(a: &[u32], bound: u64, used: &mut [bool]) -> bool {
    let Some(first) = used.iter().position(|&u| !u) else {
        return true;
    };
    used[first] = true;
    for j in first + 1..a.len() {
        if used[j] || a[first] as u64 + a[j] as u64 > bound {
            continue;
        }
        used[j] = true;
        let found = search(a, bound, used);
        used[j] = false;
        if found {
            used[first] = false;
            return true;
        }
    }
    used[first] = false;
    false
}

/// Every pair partition of `{1..len}`; `(len−1)!!` of them.
pub fn all_partitions(len: usize) -> Vec<PairPartition> {
    fn rec(rest: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(acc.clone());
            return;
        };
        for (k, &j) in tail.iter().enumerate() {
            let remaining: Vec<usize> =
                tail.iter().enumerate().filter(|&(m, _)| m != k).map(|(_, &v)| v).collect();
            acc.push((first, j));
            rec(&remaining, acc, out);
            acc.pop();
        }
    }
    let idx: Vec<usize> = (1..=len).collect();
    let mut out = Vec::new();
    rec(&idx, &mut Vec::new(), &mut out);
    out.into_iter().map(|p| PairPartition { pairs: p }).collect()
}
