//! Integer partitions and the partition function `Pa(n)`.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{PermError, Result};

/// A partition of `n` as weakly decreasing positive parts. Ordered
/// lexicographically on the parts, so `[1,1,1] < [2,1] < [3]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(PermError::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(PermError::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PermError::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive sizes into a partition, dropping zeros.
    pub fn from_sizes(sizes: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut parts: Vec<usize> = sizes.into_iter().filter(|&s| s > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `[1, 1, …, 1]`, the class of the bijections.
    pub fn is_all_ones(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PermError;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Every partition of `n`, sorted ascending.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// `Pa(n)` by Euler's pentagonal-number recurrence
/// `p(k) = Σ_{j≥1} (-1)^(j+1) [p(k - j(3j-1)/2) + p(k - j(3j+1)/2)]`.
pub fn partition_count(n: usize) -> BigInt {
    let mut p: Vec<BigInt> = Vec::with_capacity(n + 1);
    p.push(BigInt::from(1));
    for k in 1..=n {
        let mut total = BigInt::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > k {
                break;
            }
            let g2 = j * (3 * j + 1) / 2;
            let mut term = p[k - g1].clone();
            if g2 <= k {
                term += &p[k - g2];
            }
            if j % 2 == 1 {
                total += term;
            } else {
                total -= term;
            }
        }
        p.push(total);
    }
    p.swap_remove(n)
}

/// Leading-order Hardy–Ramanujan asymptotic `exp(π √(2n/3)) / (4 n √3)`.
pub fn hardy_ramanujan_estimate(n: usize) -> f64 {
    let n = n as f64;
    (PI * (2.0 * n / 3.0).sqrt()).exp() / (4.0 * n * 3f64.sqrt())
}

/// `Pa(n)` as `usize`, for the small `n` where classes are enumerated.
pub fn partition_count_small(n: usize) -> usize {
    partition_count(n).to_usize().expect("Pa(n) fits usize")
}
