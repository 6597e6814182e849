//! Integer partitions as Jordan types of nilpotent matrices, with the
//! divisibility and dimension arithmetic used throughout the crate.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{divisors, gcd_all};
use crate::error::{Error, Result};

/// A partition of `n`, stored with parts weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartitionRepr", into = "PartitionRepr")]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    parts: Vec<usize>,
}

impl TryFrom<PartitionRepr> for Partition {
    type Error = Error;

    fn try_from(repr: PartitionRepr) -> Result<Self> {
        Partition::new(repr.parts)
    }
}

impl From<Partition> for PartitionRepr {
    fn from(p: Partition) -> Self {
        PartitionRepr { parts: p.parts }
    }
}

impl Partition {
    /// Builds a partition from positive parts in any order.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The one-row partition `[n]`.
    pub fn row(n: usize) -> Self {
        assert!(n > 0);
        Partition { parts: vec![n] }
    }

    /// The one-column partition `[1^n]`.
    pub fn column(n: usize) -> Self {
        assert!(n > 0);
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of column `c` (0-based), i.e. the number of parts exceeding `c`.
    pub fn column_len(&self, c: usize) -> usize {
        self.parts.iter().take_while(|&&p| p > c).count()
    }

    /// True iff `d` divides every part.
    pub fn is_divisible_by(&self, d: u64) -> bool {
        d >= 1 && self.parts.iter().all(|&p| p as u64 % d == 0)
    }

    /// The partition with parts `λ_i / d`.
    pub fn quotient(&self, d: u64) -> Result<Partition> {
        if !self.is_divisible_by(d) {
            return Err(Error::NotADivisor {
                d,
                what: format!("partition {self}"),
            });
        }
        Ok(Partition {
            parts: self.parts.iter().map(|&p| p / d as usize).collect(),
        })
    }

    /// `Σ_i (i-1) λ_i`, the dimension of the Springer fiber of type `λ`.
    pub fn springer_dim(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| (i * p) as u64)
            .sum()
    }

    /// `dim Sp_λ - dim Sp_{λ/d}`, computed as `(d-1)/d · Σ (i-1) λ_i`.
    pub fn dim_shift(&self, d: u64) -> Result<u64> {
        if !self.is_divisible_by(d) {
            return Err(Error::NotADivisor {
                d,
                what: format!("partition {self}"),
            });
        }
        let total = self.springer_dim() * (d - 1);
        debug_assert_eq!(total % d, 0);
        Ok(total / d)
    }

    /// Every `d ≥ 1` dividing all parts, ascending.
    pub fn divisor_list(&self) -> Vec<u64> {
        divisors(gcd_all(self.parts.iter().map(|&p| p as u64)))
    }

    /// Number of standard tableaux of this shape by the hook length formula.
    pub fn hook_length_count(&self) -> u64 {
        let n = self.n() as u64;
        let mut hooks: Vec<u64> = Vec::with_capacity(self.n());
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = self.column_len(c) - r - 1;
                hooks.push((arm + leg + 1) as u64);
            }
        }
        // Interleave multiplication and division to stay exact and small.
        let mut num: Vec<u64> = (1..=n).collect();
        for h in hooks {
            let mut h = h;
            for x in num.iter_mut() {
                let g = num_integer::gcd(*x, h);
                *x /= g;
                h /= g;
                if h == 1 {
                    break;
                }
            }
            debug_assert_eq!(h, 1);
        }
        num.into_iter().product()
    }

    /// `n! / ∏ λ_i!`, the number of row-strict tableaux of this shape.
    pub fn row_strict_count(&self) -> u64 {
        let mut count: u64 = 1;
        let mut placed: u64 = 0;
        for &p in &self.parts {
            for k in 1..=p as u64 {
                placed += 1;
                // count * placed / k stays integral at each step (binomial build-up).
                count = count * placed / k;
            }
        }
        count
    }
}

/// `n² - n`, the dimension of the nilpotent cone of `sl_n`.
pub fn nilcone_dim(n: u64) -> u64 {
    n * n - n
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// Accepts `4,4,2,2` and the exponent shorthand `4^2,2^2`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut parts = Vec::new();
        for token in trimmed.split(',') {
            let token = token.trim();
            let bad = |reason: &str| Error::Parse {
                token: token.to_string(),
                reason: reason.to_string(),
            };
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let value: usize = base.parse().map_err(|_| bad("expected a positive integer part"))?;
            let times: usize = exp.parse().map_err(|_| bad("expected a repetition count"))?;
            if value == 0 || times == 0 {
                return Err(bad("parts and repetition counts must be positive"));
            }
            parts.extend(std::iter::repeat_n(value, times));
        }
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order (`[n]` first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}
