//! Kendall rank correlation between two score sequences.
//!
//! Pair counts come from Knight's `O(N log N)` method: sort by `(x, y)`,
//! then count the exchanges a stable merge sort on `y` performs.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Two equal-length score vectors indexed by node.
#[derive(Debug, Clone, PartialEq)]
pub struct RankSequencePair {
    x: Vec<f64>,
    y: Vec<f64>,
}

impl RankSequencePair {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
        }
        if x.len() < 2 {
            return Err(Error::InsufficientLength(x.len()));
        }
        if x.iter().chain(&y).any(|v| v.is_nan()) {
            return Err(Error::NanScore);
        }
        Ok(Self { x, y })
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }
}

/// Pair statistics over all `N (N - 1) / 2` unordered pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PairCounts {
    pub total: u64,
    /// Pairs tied in `x`.
    pub x_ties: u64,
    /// Pairs tied in `y`.
    pub y_ties: u64,
    /// Pairs tied in both.
    pub joint_ties: u64,
    pub concordant: u64,
    pub discordant: u64,
}

impl PairCounts {
    pub fn tau_a(&self) -> f64 {
        (self.concordant as i64 - self.discordant as i64) as f64 / self.total as f64
    }

    pub fn tau_b(&self) -> Result<f64> {
        if self.x_ties == self.total {
            return Err(Error::UndefinedCorrelation("x"));
        }
        if self.y_ties == self.total {
            return Err(Error::UndefinedCorrelation("y"));
        }
        let denom = ((self.total - self.x_ties) as f64 * (self.total - self.y_ties) as f64).sqrt();
        Ok((self.concordant as i64 - self.discordant as i64) as f64 / denom)
    }
}

fn cmp(a: f64, b: f64) -> Ordering {
    a.partial_cmp(&b).expect("NaN rejected on construction")
}

fn tied_pairs<I: Iterator<Item = bool>>(same_as_previous: I) -> u64 {
    let mut pairs = 0;
    let mut run = 0u64;
    for same in same_as_previous {
        if same {
            run += 1;
            pairs += run;
        } else {
            run = 0;
        }
    }
    pairs
}

/// Sorts `v` by `key` ascending (stable) and returns how many inversions it removed.
fn merge_count(v: &mut [usize], buf: &mut [usize], key: &[f64]) -> u64 {
    let n = v.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut swaps = merge_count(&mut v[..mid], &mut buf[..mid], key) + merge_count(&mut v[mid..], &mut buf[mid..], key);
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if cmp(key[v[j]], key[v[i]]) == Ordering::Less {
            buf[k] = v[j];
            j += 1;
            swaps += (mid - i) as u64;
        } else {
            buf[k] = v[i];
            i += 1;
        }
        k += 1;
    }
    buf[k..k + mid - i].copy_from_slice(&v[i..mid]);
    k += mid - i;
    buf[k..k + n - j].copy_from_slice(&v[j..n]);
    v.copy_from_slice(&buf[..n]);
    swaps
}

pub fn pair_counts(pair: &RankSequencePair) -> PairCounts {
    let (x, y) = (pair.x(), pair.y());
    let n = x.len() as u64;
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by(|&a, &b| cmp(x[a], x[b]).then(cmp(y[a], y[b])));

    let x_ties = tied_pairs(order.windows(2).map(|w| x[w[0]] == x[w[1]]));
    let joint_ties = tied_pairs(order.windows(2).map(|w| x[w[0]] == x[w[1]] && y[w[0]] == y[w[1]]));
    let mut buf = vec![0; order.len()];
    let discordant = merge_count(&mut order, &mut buf, y);
    let y_ties = tied_pairs(order.windows(2).map(|w| y[w[0]] == y[w[1]]));

    let total = n * (n - 1) / 2;
    let concordant = total + joint_ties - x_ties - y_ties - discordant;
    PairCounts { total, x_ties, y_ties, joint_ties, concordant, discordant }
}

/// `2 (n_c - n_d) / (N (N - 1))`; pairs tied in either sequence count for neither side.
pub fn kendall_tau_a(pair: &RankSequencePair) -> f64 {
    pair_counts(pair).tau_a()
}

/// `(n_c - n_d) / sqrt((n_0 - n_1)(n_0 - n_2))` with `n_1`, `n_2` the pairs
/// tied in `x` and in `y`.
pub fn kendall_tau_b(pair: &RankSequencePair) -> Result<f64> {
    pair_counts(pair).tau_b()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(x: &[f64], y: &[f64]) -> RankSequencePair {
        RankSequencePair::new(x.to_vec(), y.to_vec()).unwrap()
    }

    #[test]
    fn perfect_agreement_and_reversal() {
        assert_eq!(kendall_tau_a(&pair(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0])), 1.0);
        assert_eq!(kendall_tau_a(&pair(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0])), -1.0);
        assert_eq!(kendall_tau_b(&pair(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0])).unwrap(), -1.0);
    }

    #[test]
    fn one_swap_in_four() {
        let p = pair(&[1.0, 2.0, 3.0, 4.0], &[1.0, 3.0, 2.0, 4.0]);
        let c = pair_counts(&p);
        assert_eq!((c.concordant, c.discordant), (5, 1));
        assert_eq!(kendall_tau_a(&p), 2.0 / 3.0);
        assert_eq!(kendall_tau_b(&p).unwrap(), 2.0 / 3.0);
    }

    #[test]
    fn tie_correction() {
        let p = pair(&[1.0, 1.0, 2.0], &[1.0, 2.0, 3.0]);
        let c = pair_counts(&p);
        assert_eq!((c.concordant, c.discordant, c.total, c.x_ties, c.y_ties), (2, 0, 3, 1, 0));
        assert_eq!(kendall_tau_b(&p).unwrap(), 2.0 / 6f64.sqrt());
        assert_eq!(kendall_tau_a(&p), 2.0 / 3.0);
    }

    #[test]
    fn all_tied_is_undefined() {
        let p = pair(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]);
        assert!(matches!(kendall_tau_b(&p), Err(Error::UndefinedCorrelation("x"))));
        let p = pair(&[1.0, 2.0, 3.0], &[4.0, 4.0, 4.0]);
        assert!(matches!(kendall_tau_b(&p), Err(Error::UndefinedCorrelation("y"))));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(RankSequencePair::new(vec![1.0], vec![1.0]), Err(Error::InsufficientLength(1))));
        assert!(matches!(RankSequencePair::new(vec![1.0, 2.0], vec![1.0]), Err(Error::LengthMismatch { .. })));
        assert!(matches!(RankSequencePair::new(vec![1.0, f64::NAN], vec![1.0, 2.0]), Err(Error::NanScore)));
    }
}
