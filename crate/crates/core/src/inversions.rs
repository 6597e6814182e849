//! Springer inversions and Springer pairs of a row-strict tableau.
//!
//! For labels `i > j`, write `r` for the entry directly right of `j` (if any).
//! `(i, j)` is a Springer pair when `i` sits in the column of `j` or in a
//! column strictly left of it, and `i < r` whenever `r` exists. It is a
//! Springer inversion when additionally, in the same-column case, `i` sits
//! below `j`. Same-row pairs are never counted since `i > j` forces `i` right
//! of `j` in its row.

use serde::{Deserialize, Serialize};

use crate::tableau::RowStrictTableau;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairKind {
    Inv,
    Pairs,
    ITilde,
}

/// A set of pairs `(i, j)` with `i > j`, sorted descending by `i` then `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSet {
    pub kind: PairKind,
    pub pairs: Vec<(usize, usize)>,
}

impl PairSet {
    fn new(kind: PairKind, mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable_by(|a, b| b.cmp(a));
        pairs.dedup();
        PairSet { kind, pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, pair: (usize, usize)) -> bool {
        self.pairs.contains(&pair)
    }

    pub fn is_subset_of(&self, other: &PairSet) -> bool {
        self.pairs.iter().all(|p| other.contains(*p))
    }

    /// Pairs in `self` but not in `other`.
    pub fn difference(&self, other: &PairSet) -> Vec<(usize, usize)> {
        self.pairs
            .iter()
            .copied()
            .filter(|p| !other.contains(*p))
            .collect()
    }
}

fn right_condition(sigma: &RowStrictTableau, i: usize, j: usize) -> bool {
    sigma.right_neighbor(j).is_none_or(|r| i < r)
}

fn is_pair(sigma: &RowStrictTableau, i: usize, j: usize, strict_below: bool) -> bool {
    let (ri, ci) = sigma.position(i);
    let (rj, cj) = sigma.position(j);
    let column_ok = ci < cj || (ci == cj && (!strict_below || ri > rj));
    column_ok && right_condition(sigma, i, j)
}

fn collect(sigma: &RowStrictTableau, strict_below: bool) -> Vec<(usize, usize)> {
    let n = sigma.n();
    let mut out = Vec::new();
    for i in 2..=n {
        for j in 1..i {
            if is_pair(sigma, i, j, strict_below) {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn springer_inversions(sigma: &RowStrictTableau) -> PairSet {
    PairSet::new(PairKind::Inv, collect(sigma, true))
}

/// `|σ|`, the number of Springer inversions.
pub fn inversion_count(sigma: &RowStrictTableau) -> u64 {
    let n = sigma.n();
    let mut count = 0;
    for i in 2..=n {
        for j in 1..i {
            if is_pair(sigma, i, j, true) {
                count += 1;
            }
        }
    }
    count
}

pub fn springer_pairs(sigma: &RowStrictTableau) -> PairSet {
    PairSet::new(PairKind::Pairs, collect(sigma, false))
}

pub fn pair_count(sigma: &RowStrictTableau) -> u64 {
    springer_pairs(sigma).len() as u64
}

/// The inversions `(i, ℓ(i+1))` for `i ∈ I_σ`, where `ℓ(i+1)` is the entry left of `i+1`.
pub fn i_tilde(sigma: &RowStrictTableau) -> PairSet {
    let pairs = sigma
        .ijk_decomposition()
        .i
        .into_iter()
        .map(|i| {
            let left = sigma
                .left_neighbor(i + 1)
                .expect("i+1 is never in the first column when i is in I");
            (i, left)
        })
        .collect();
    PairSet::new(PairKind::ITilde, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::tableau::enumerate_rst;

    fn t(s: &str) -> RowStrictTableau {
        s.parse().unwrap()
    }

    fn ex41() -> RowStrictTableau {
        t("3,4,5,6/1,2,9,10/7,8/11,12")
    }

    #[test]
    fn example_inversion_set() {
        let inv = springer_inversions(&ex41());
        let mut expected = vec![
            (12, 8),
            (12, 10),
            (12, 6),
            (11, 8),
            (11, 10),
            (11, 6),
            (10, 6),
            (9, 6),
            (8, 2),
            (8, 6),
            (7, 2),
            (7, 6),
            (3, 2),
        ];
        expected.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(inv.pairs, expected);
        assert_eq!(inversion_count(&ex41()), 13);
    }

    #[test]
    fn quotient_inversion_set() {
        let q = ex41().quotient(2).unwrap();
        let mut expected = vec![(6, 4), (6, 5), (6, 3), (5, 3), (4, 1), (4, 3)];
        expected.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(springer_inversions(&q).pairs, expected);
    }

    #[test]
    fn small_counts() {
        assert_eq!(inversion_count(&t("2,3/1")), 0);
        assert_eq!(inversion_count(&t("1,2/3")), 1);
        assert_eq!(springer_inversions(&t("1,2/3")).pairs, vec![(3, 2)]);
        assert!(springer_inversions(&t("1,2,3,4,5")).is_empty());
    }

    #[test]
    fn pairs_examples() {
        let sigma = ex41();
        let pairs = springer_pairs(&sigma);
        let inv = springer_inversions(&sigma);
        assert!(pairs.contains((4, 2)));
        assert!(!inv.contains((4, 2)));
        assert!(inv.is_subset_of(&pairs));
        assert_eq!(pairs.len(), 14);
        assert_eq!(springer_pairs(&t("2,3/1")).pairs, vec![(2, 1)]);
    }

    #[test]
    fn pairs_equal_inversions_for_standard() {
        for lam in partitions_of(6) {
            for sigma in enumerate_rst(&lam).filter(|s| s.is_standard()) {
                assert_eq!(
                    springer_pairs(&sigma).pairs,
                    springer_inversions(&sigma).pairs
                );
            }
        }
    }

    #[test]
    fn pair_count_is_dimension() {
        for n in 1..=6 {
            for lam in partitions_of(n) {
                for sigma in enumerate_rst(&lam) {
                    assert_eq!(pair_count(&sigma), lam.springer_dim(), "{sigma}");
                }
            }
        }
    }

    #[test]
    fn i_tilde_examples() {
        assert_eq!(i_tilde(&ex41()).pairs, vec![(8, 2)]);
        assert_eq!(
            i_tilde(&t("1,2,3,4,11,12/5,6,7,8/9,10")).pairs,
            vec![(10, 4)]
        );
        assert!(i_tilde(&t("1,2,3")).is_empty());
    }

    #[test]
    fn i_tilde_inside_inversions() {
        for lam in partitions_of(6) {
            for sigma in enumerate_rst(&lam) {
                let it = i_tilde(&sigma);
                let inv = springer_inversions(&sigma);
                assert!(it.is_subset_of(&inv), "{sigma}");
                assert_eq!(it.len(), sigma.ijk_decomposition().i.len());
            }
        }
    }

    #[test]
    fn json_format() {
        let s = serde_json::to_string(&springer_inversions(&t("1,2/3"))).unwrap();
        assert_eq!(s, r#"{"kind":"inv","pairs":[[3,2]]}"#);
    }
}
