//! Row-strict tableaux in English convention.
//!
//! Rows are listed top to bottom with weakly decreasing lengths. Entries are
//! the labels `1..=n`, each used once, strictly increasing along every row.
//! Row and column indices are 0-based internally; anything user facing
//! (JSON, text) uses rows as nested lists so no index convention leaks out.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{divisors, gcd_all};
use crate::error::{Error, Result};
use crate::frame::{IjkDecomposition, ToricFrame};
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct RowStrictTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    /// `positions[label]` is `(row, col)`; index 0 unused.
    positions: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    shape: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableauRepr> for RowStrictTableau {
    type Error = Error;

    fn try_from(repr: TableauRepr) -> Result<Self> {
        let t = RowStrictTableau::new(repr.rows)?;
        if t.shape.parts() != repr.shape.as_slice() {
            return Err(Error::InvalidTableau(format!(
                "declared shape {:?} does not match row lengths {}",
                repr.shape, t.shape
            )));
        }
        Ok(t)
    }
}

impl From<RowStrictTableau> for TableauRepr {
    fn from(t: RowStrictTableau) -> Self {
        TableauRepr {
            shape: t.shape.parts().to_vec(),
            rows: t.rows,
        }
    }
}

/// A maximal run of boxes in one row holding consecutive labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub row: usize,
    pub first: usize,
    pub len: usize,
}

impl Block {
    pub fn last(&self) -> usize {
        self.first + self.len - 1
    }
}

impl RowStrictTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.is_empty() || rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("rows must be nonempty".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau(
                "row lengths must weakly decrease from top to bottom".into(),
            ));
        }
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut positions = vec![(usize::MAX, usize::MAX); n + 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if e == 0 || e > n {
                    return Err(Error::InvalidTableau(format!(
                        "entry {e} outside 1..={n}"
                    )));
                }
                if positions[e].0 != usize::MAX {
                    return Err(Error::InvalidTableau(format!("entry {e} repeated")));
                }
                positions[e] = (r, c);
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {} is not strictly increasing",
                    r + 1
                )));
            }
        }
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        Ok(RowStrictTableau {
            shape,
            rows,
            positions,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.positions.len() - 1
    }

    /// `(row, col)` of `label`, 0-based.
    pub fn position(&self, label: usize) -> (usize, usize) {
        self.positions[label]
    }

    /// Entry directly right of `label`, if any.
    pub fn right_neighbor(&self, label: usize) -> Option<usize> {
        let (r, c) = self.positions[label];
        self.rows[r].get(c + 1).copied()
    }

    /// Entry directly left of `label`, if any.
    pub fn left_neighbor(&self, label: usize) -> Option<usize> {
        let (r, c) = self.positions[label];
        c.checked_sub(1).map(|c| self.rows[r][c])
    }

    /// Column `c` read top to bottom.
    pub fn column(&self, c: usize) -> Vec<usize> {
        self.rows
            .iter()
            .take_while(|row| row.len() > c)
            .map(|row| row[c])
            .collect()
    }

    pub fn num_columns(&self) -> usize {
        self.rows[0].len()
    }

    /// Concatenated row-reading word, top row first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Fills columns bottom to top, leftmost column first.
    pub fn base_filling(shape: &Partition) -> Self {
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
        let mut label = 1;
        for c in 0..shape.parts()[0] {
            for r in (0..shape.column_len(c)).rev() {
                rows[r][c] = label;
                label += 1;
            }
        }
        RowStrictTableau::new(rows).expect("base filling is row-strict")
    }

    pub fn ijk_decomposition(&self) -> IjkDecomposition {
        let n = self.n();
        let mut dec = IjkDecomposition::default();
        for i in 1..n {
            let (r1, c1) = self.positions[i];
            let (r2, c2) = self.positions[i + 1];
            if r1 == r2 {
                dec.j.push(i);
            } else if (c2 == c1 + 1 && r2 < r1) || c2 >= c1 + 2 {
                dec.i.push(i);
            } else {
                dec.k.push(i);
            }
        }
        dec
    }

    /// The frame `(n, I_σ, J_σ, K_σ)` of the cell indexed by this tableau.
    pub fn cell_frame(&self) -> ToricFrame {
        let dec = self.ijk_decomposition();
        ToricFrame::new(self.n(), dec.i, dec.j, dec.k).expect("decomposition covers [n-1]")
    }

    /// Maximal blocks, ordered by their first label.
    pub fn blocks(&self) -> Vec<Block> {
        let mut out = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            let mut start = 0;
            for c in 1..=row.len() {
                if c == row.len() || row[c] != row[c - 1] + 1 {
                    out.push(Block {
                        row: r,
                        first: row[start],
                        len: c - start,
                    });
                    start = c;
                }
            }
        }
        out.sort_by_key(|b| b.first);
        out
    }

    /// gcd of `I_σ ∪ K_σ ∪ {n}`.
    pub fn max_divisor(&self) -> u64 {
        let dec = self.ijk_decomposition();
        let d = gcd_all(
            dec.i
                .iter()
                .chain(dec.k.iter())
                .map(|&x| x as u64)
                .chain([self.n() as u64]),
        );
        debug_assert_eq!(d, self.block_gcd());
        d
    }

    /// gcd of the maximal block lengths.
    pub fn block_gcd(&self) -> u64 {
        gcd_all(self.blocks().iter().map(|b| b.len as u64))
    }

    /// Every `d` such that the tableau splits into blocks of size exactly `d`.
    pub fn divisor_set(&self) -> Vec<u64> {
        divisors(self.max_divisor())
    }

    pub fn is_divisible_by(&self, d: u64) -> bool {
        d >= 1 && self.max_divisor() % d == 0
    }

    /// Merges size-`d` blocks; the block ending in `m·d` becomes label `m`.
    pub fn quotient(&self, d: u64) -> Result<RowStrictTableau> {
        if !self.is_divisible_by(d) {
            return Err(Error::NotADivisor {
                d,
                what: format!("tableau {self}"),
            });
        }
        let d = d as usize;
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().filter(|&&e| e % d == 0).map(|&e| e / d).collect())
            .collect();
        RowStrictTableau::new(rows)
    }

    /// Sorts each column increasing from top to bottom.
    pub fn standardize(&self) -> RowStrictTableau {
        let mut rows = self.rows.clone();
        for c in 0..self.num_columns() {
            let mut col = self.column(c);
            col.sort_unstable();
            for (r, e) in col.into_iter().enumerate() {
                rows[r][c] = e;
            }
        }
        RowStrictTableau::new(rows).expect("sorting columns keeps rows strict")
    }

    /// Rows increase rightward and columns increase downward.
    pub fn is_standard(&self) -> bool {
        (0..self.num_columns()).all(|c| self.column(c).windows(2).all(|w| w[0] < w[1]))
    }

    /// One-line notation of `w_σ⁻¹`: the entries of σ listed in the box order of the base
    /// filling (columns left to right, each read bottom to top).
    pub fn w_sigma_inverse(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n());
        for c in 0..self.num_columns() {
            let mut col = self.column(c);
            col.reverse();
            out.extend(col);
        }
        out
    }

    /// One-line notation of `w_σ`: `w_σ(p) = q` when `p` sits in the base-filling box `q`.
    pub fn w_sigma(&self) -> Vec<usize> {
        let inv = self.w_sigma_inverse();
        let mut w = vec![0; inv.len()];
        for (q, &p) in inv.iter().enumerate() {
            w[p - 1] = q + 1;
        }
        w
    }
}

/// Pairs `(ℓ, r)` with `r` directly right of `ℓ` in the base filling; the
/// support of the nilpotent `x_λ = Σ E_{ℓr}`.
pub fn x_lambda_positions(shape: &Partition) -> Vec<(usize, usize)> {
    let base = RowStrictTableau::base_filling(shape);
    let mut out: Vec<(usize, usize)> = base
        .rows()
        .iter()
        .flat_map(|row| row.windows(2).map(|w| (w[0], w[1])))
        .collect();
    out.sort_unstable();
    out
}

impl fmt::Display for RowStrictTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Text form: rows separated by `/`, entries by `,`.
impl FromStr for RowStrictTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for row in s.trim().split('/') {
            let mut entries = Vec::new();
            for token in row.split(',') {
                let token = token.trim();
                let e: usize = token.parse().map_err(|_| Error::Parse {
                    token: token.to_string(),
                    reason: "expected a positive integer entry".into(),
                })?;
                entries.push(e);
            }
            rows.push(entries);
        }
        RowStrictTableau::new(rows)
    }
}

/// Every row-strict tableau of shape `shape`, in lexicographic order of the
/// row-reading word. The iterator is cheap to clone and restart.
#[derive(Debug, Clone)]
pub struct RstIter {
    row_lens: Vec<usize>,
    n: usize,
    /// For each row, indices into that row's pool of still-unused labels.
    choice: Vec<Vec<usize>>,
    started: bool,
    done: bool,
}

impl RstIter {
    pub fn new(shape: &Partition) -> Self {
        let row_lens = shape.parts().to_vec();
        let choice = row_lens.iter().map(|&len| (0..len).collect()).collect();
        RstIter {
            row_lens,
            n: shape.n(),
            choice,
            started: false,
            done: false,
        }
    }

    fn current(&self) -> RowStrictTableau {
        let mut used = vec![false; self.n + 1];
        let mut rows = Vec::with_capacity(self.row_lens.len());
        for r in 0..self.row_lens.len() {
            let pool: Vec<usize> = (1..=self.n).filter(|&e| !used[e]).collect();
            let row: Vec<usize> = self.choice[r].iter().map(|&i| pool[i]).collect();
            for &e in &row {
                used[e] = true;
            }
            rows.push(row);
        }
        RowStrictTableau::new(rows).expect("enumerated fillings are row-strict")
    }

    fn advance(&mut self) -> bool {
        for r in (0..self.row_lens.len()).rev() {
            let pool_len = self.n - self.row_lens[..r].iter().sum::<usize>();
            let k = self.row_lens[r];
            let idx = &mut self.choice[r];
            // lexicographic successor of a k-combination of 0..pool_len
            if let Some(pos) = (0..k).rev().find(|&p| idx[p] < pool_len - k + p) {
                idx[pos] += 1;
                for q in pos + 1..k {
                    idx[q] = idx[q - 1] + 1;
                }
                for later in r + 1..self.row_lens.len() {
                    self.choice[later] = (0..self.row_lens[later]).collect();
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for RstIter {
    type Item = RowStrictTableau;

    fn next(&mut self) -> Option<RowStrictTableau> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(self.current())
    }
}

pub fn enumerate_rst(shape: &Partition) -> RstIter {
    RstIter::new(shape)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn t(s: &str) -> RowStrictTableau {
        s.parse().unwrap()
    }

    fn ex41() -> RowStrictTableau {
        t("3,4,5,6/1,2,9,10/7,8/11,12")
    }

    fn ex48() -> RowStrictTableau {
        t("1,2,3,4,11,12/5,6,7,8/9,10")
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_fillings() {
        assert!(RowStrictTableau::new(vec![vec![2, 1]]).is_err());
        assert!(RowStrictTableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(RowStrictTableau::new(vec![vec![1, 1]]).is_err());
        assert!(RowStrictTableau::new(vec![vec![1, 4]]).is_err());
        assert!("1,2/x".parse::<RowStrictTableau>().is_err());
    }

    #[test]
    fn enumeration_small() {
        let all: Vec<String> = enumerate_rst(&p(&[2, 1])).map(|t| t.to_string()).collect();
        assert_eq!(all, vec!["1,2/3", "1,3/2", "2,3/1"]);
        assert_eq!(enumerate_rst(&Partition::row(5)).count(), 1);
        assert_eq!(enumerate_rst(&p(&[4, 3, 1])).count(), 280);
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        for n in 1..=6 {
            for lam in partitions_of(n) {
                let words: Vec<Vec<usize>> =
                    enumerate_rst(&lam).map(|t| t.reading_word()).collect();
                assert!(words.windows(2).all(|w| w[0] < w[1]), "{lam}");
                assert_eq!(words.len() as u64, lam.row_strict_count(), "{lam}");
            }
        }
    }

    #[test]
    fn base_fillings() {
        assert_eq!(
            RowStrictTableau::base_filling(&p(&[4, 3, 1])).to_string(),
            "3,5,7,8/2,4,6/1"
        );
        assert_eq!(
            RowStrictTableau::base_filling(&Partition::row(4)).to_string(),
            "1,2,3,4"
        );
        assert_eq!(
            RowStrictTableau::base_filling(&p(&[2, 2])).to_string(),
            "2,4/1,3"
        );
    }

    #[test]
    fn ijk_examples() {
        let d = ex41().ijk_decomposition();
        assert_eq!(d.i, vec![8]);
        assert_eq!(d.j, vec![1, 3, 4, 5, 7, 9, 11]);
        assert_eq!(d.k, vec![2, 6, 10]);

        let d = ex48().ijk_decomposition();
        assert_eq!(d.i, vec![10]);
        assert_eq!(d.j, vec![1, 2, 3, 5, 6, 7, 9, 11]);
        assert_eq!(d.k, vec![4, 8]);

        let col = t("1/2/3/4");
        assert!(col.ijk_decomposition().j.is_empty());
    }

    #[test]
    fn blocks_examples() {
        let intervals: Vec<(usize, usize)> =
            ex41().blocks().iter().map(|b| (b.first, b.last())).collect();
        assert_eq!(intervals, vec![(1, 2), (3, 6), (7, 8), (9, 10), (11, 12)]);
        assert_eq!(t("1,2,3,4,5").blocks().len(), 1);
        assert!(t("1,3/2").blocks().iter().all(|b| b.len == 1));
        assert_eq!(t("1,3/2").blocks().len(), 3);
    }

    #[test]
    fn max_divisors() {
        assert_eq!(ex41().max_divisor(), 2);
        assert_eq!(ex48().max_divisor(), 2);
        assert_eq!(t("2/1/3").max_divisor(), 1);
        assert_eq!(ex41().divisor_set(), vec![1, 2]);
        assert_eq!(t("1,2,3,4,5,6").divisor_set(), vec![1, 2, 3, 6]);
        assert_eq!(t("1,3/2").divisor_set(), vec![1]);
    }

    /// Blocks of size exactly d, read off directly from the definition.
    fn splits_into(sigma: &RowStrictTableau, d: usize) -> bool {
        sigma.rows().iter().all(|row| {
            row.len() % d == 0
                && row
                    .chunks(d)
                    .all(|ch| ch[0] % d == 1 % d && ch.windows(2).all(|w| w[1] == w[0] + 1))
        })
    }

    #[test]
    fn divisor_set_matches_definition_and_lemma() {
        for n in 1..=7 {
            for lam in partitions_of(n) {
                for sigma in enumerate_rst(&lam) {
                    let brute: Vec<u64> = (1..=n)
                        .filter(|&d| splits_into(&sigma, d))
                        .map(|d| d as u64)
                        .collect();
                    assert_eq!(sigma.divisor_set(), brute, "{sigma}");
                    assert_eq!(sigma.max_divisor(), sigma.block_gcd());
                }
            }
        }
    }

    #[test]
    fn quotients() {
        assert_eq!(ex41().quotient(2).unwrap().to_string(), "2,3/1,5/4/6");
        assert_eq!(ex41().quotient(1).unwrap(), ex41());
        assert_eq!(ex48().quotient(2).unwrap().to_string(), "1,2,6/3,4/5");
        assert!(matches!(ex41().quotient(3), Err(Error::NotADivisor { .. })));
        assert_eq!(ex41().quotient(2).unwrap().shape(), &p(&[2, 2, 1, 1]));
    }

    #[test]
    fn quotient_composes() {
        let sigma = t("1,2,3,4,9,10,11,12/5,6,7,8");
        for d in sigma.divisor_set() {
            let q = sigma.quotient(d).unwrap();
            for e in q.divisor_set() {
                assert_eq!(q.quotient(e).unwrap(), sigma.quotient(d * e).unwrap());
            }
        }
    }

    #[test]
    fn standardization() {
        assert_eq!(t("2,3/1").standardize().to_string(), "1,3/2");
        let s = ex41().standardize();
        assert!(s.is_standard());
        for c in 0..4 {
            let mut before = ex41().column(c);
            before.sort_unstable();
            assert_eq!(s.column(c), before);
        }
        assert_eq!(s.standardize(), s);
        let already = t("1,2,5/3,4");
        assert_eq!(already.standardize(), already);
    }

    #[test]
    fn standard_predicate() {
        assert!(t("1,2/3").is_standard());
        assert!(!t("2,3/1").is_standard());
        assert!(!RowStrictTableau::base_filling(&p(&[4, 3, 1])).is_standard());
        assert!(t("1,2,3,4").is_standard());
    }

    #[test]
    fn standard_count_is_hook_length() {
        for n in 1..=7 {
            for lam in partitions_of(n) {
                let count = enumerate_rst(&lam).filter(|s| s.is_standard()).count() as u64;
                assert_eq!(count, lam.hook_length_count(), "{lam}");
            }
        }
    }

    #[test]
    fn w_sigma_rule() {
        // Entries read column by column, bottom to top.
        assert_eq!(
            ex41().w_sigma_inverse(),
            vec![11, 7, 1, 3, 12, 8, 2, 4, 9, 5, 10, 6]
        );
        assert_eq!(t("1,3/2").w_sigma_inverse(), vec![2, 1, 3]);
        for lam in partitions_of(6) {
            let base = RowStrictTableau::base_filling(&lam);
            assert_eq!(base.w_sigma(), (1..=6).collect::<Vec<_>>());
            for sigma in enumerate_rst(&lam).take(50) {
                let mut w = sigma.w_sigma();
                w.sort_unstable();
                assert_eq!(w, (1..=6).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn x_lambda() {
        assert_eq!(
            x_lambda_positions(&p(&[4, 3, 1])),
            vec![(2, 4), (3, 5), (4, 6), (5, 7), (7, 8)]
        );
        assert!(x_lambda_positions(&Partition::column(4)).is_empty());
        assert_eq!(
            x_lambda_positions(&Partition::row(4)),
            vec![(1, 2), (2, 3), (3, 4)]
        );
    }

    #[test]
    fn frames() {
        let f = ex48().cell_frame();
        assert_eq!(f.i(), &[10]);
        assert_eq!(f.j(), &[1, 2, 3, 5, 6, 7, 9, 11]);
        assert_eq!(f.k(), &[4, 8]);
        let f = t("1,2,3,4").cell_frame();
        assert!(f.i().is_empty() && f.k().is_empty());
        assert_eq!(f.j(), &[1, 2, 3]);
    }

    #[test]
    fn json_round_trip() {
        let s = serde_json::to_string(&ex41()).unwrap();
        assert_eq!(
            s,
            r#"{"shape":[4,4,2,2],"rows":[[3,4,5,6],[1,2,9,10],[7,8],[11,12]]}"#
        );
        assert_eq!(serde_json::from_str::<RowStrictTableau>(&s).unwrap(), ex41());
        assert!(serde_json::from_str::<RowStrictTableau>(
            r#"{"shape":[2,2],"rows":[[1,2],[3]]}"#
        )
        .is_err());
    }
}
