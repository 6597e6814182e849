use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The sets `I_σ`, `J_σ`, `K_σ`, each sorted ascending.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IjkDecomposition {
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    #[serde(rename = "K")]
    pub k: Vec<usize>,
}

/// A decomposition `[n-1] = I ⊔ J ⊔ K`. The subvariety it cuts out of the
/// adjoint toric variety has `x_j = 1` on `J`, `x_k = 0` on `K`, and free
/// coordinates on `I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FrameRepr", into = "FrameRepr")]
pub struct ToricFrame {
    n: usize,
    i: Vec<usize>,
    j: Vec<usize>,
    k: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct FrameRepr {
    n: usize,
    #[serde(rename = "I")]
    i: Vec<usize>,
    #[serde(rename = "J")]
    j: Vec<usize>,
    #[serde(rename = "K")]
    k: Vec<usize>,
}

impl TryFrom<FrameRepr> for ToricFrame {
    type Error = Error;

    fn try_from(r: FrameRepr) -> Result<Self> {
        ToricFrame::new(r.n, r.i, r.j, r.k)
    }
}

impl From<ToricFrame> for FrameRepr {
    fn from(f: ToricFrame) -> Self {
        FrameRepr {
            n: f.n,
            i: f.i,
            j: f.j,
            k: f.k,
        }
    }
}

impl ToricFrame {
    pub fn new(n: usize, mut i: Vec<usize>, mut j: Vec<usize>, mut k: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidFrame("n must be positive".into()));
        }
        let mut seen = vec![false; n];
        for &x in i.iter().chain(&j).chain(&k) {
            if x == 0 || x >= n {
                return Err(Error::InvalidFrame(format!("{x} is not in [1, {}]", n - 1)));
            }
            if seen[x] {
                return Err(Error::InvalidFrame(format!("{x} appears twice")));
            }
            seen[x] = true;
        }
        if let Some(missing) = (1..n).find(|&x| !seen[x]) {
            return Err(Error::InvalidFrame(format!("{missing} is not covered")));
        }
        i.sort_unstable();
        j.sort_unstable();
        k.sort_unstable();
        Ok(ToricFrame { n, i, j, k })
    }

    /// Frame from `J` and `K`; `I` is the rest of `[n-1]`.
    pub fn from_j_k(n: usize, j: Vec<usize>, k: Vec<usize>) -> Result<Self> {
        let i = (1..n).filter(|x| !j.contains(x) && !k.contains(x)).collect();
        ToricFrame::new(n, i, j, k)
    }

    /// All `3^(n-1)` frames for a given `n`, in a fixed order.
    pub fn all(n: usize) -> Vec<ToricFrame> {
        let m = n.saturating_sub(1);
        let total = 3usize.pow(m as u32);
        (0..total)
            .map(|mut code| {
                let (mut i, mut j, mut k) = (Vec::new(), Vec::new(), Vec::new());
                for x in 1..n {
                    match code % 3 {
                        0 => i.push(x),
                        1 => j.push(x),
                        _ => k.push(x),
                    }
                    code /= 3;
                }
                ToricFrame { n, i, j, k }
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn i(&self) -> &[usize] {
        &self.i
    }

    pub fn j(&self) -> &[usize] {
        &self.j
    }

    pub fn k(&self) -> &[usize] {
        &self.k
    }

    /// `I ∪ K`, ascending.
    pub fn j_complement(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.i.iter().chain(&self.k).copied().collect();
        out.sort_unstable();
        out
    }

    pub fn in_j(&self, x: usize) -> bool {
        self.j.binary_search(&x).is_ok()
    }
}

impl fmt::Display for ToricFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} I={:?} J={:?} K={:?}",
            self.n, self.i, self.j, self.k
        )
    }
}
