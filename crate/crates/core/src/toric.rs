//! Character-lattice arithmetic for the tori `T̂ → T → T_ad` of `SL_n`.
//!
//! Coordinates on `T̂` are `z_1, …, z_{n-1}` with `x_i = z_i^n` on `T_ad`.
//! Elements of `Ĥ = ker(T̂ → T_ad)` are tuples `(ω^{a_1}, …, ω^{a_{n-1}})` for a
//! primitive `n`-th root of unity `ω`, stored by their exponents `a_i mod n`.
//! Every scalar root of unity in this module is likewise an exponent mod `n`,
//! so all comparisons are exact.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::arith::gcd_all;
use crate::error::{Error, Result};
use crate::frame::ToricFrame;

/// Exponents `(b_1, …, b_{n-1})` of a monomial `z_1^{b_1} ⋯ z_{n-1}^{b_{n-1}}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExponentVector {
    pub n: u64,
    pub exps: Vec<u64>,
}

impl ExponentVector {
    pub fn new(n: u64, exps: Vec<u64>) -> Result<Self> {
        if n == 0 || exps.len() as u64 != n - 1 {
            return Err(Error::OutOfRange {
                index: exps.len() as u64,
                range: format!("expected {} exponents", n.saturating_sub(1)),
            });
        }
        Ok(ExponentVector { n, exps })
    }

    /// Exponent of `z_index` (1-based).
    pub fn get(&self, index: usize) -> u64 {
        self.exps[index - 1]
    }
}

/// An element of `Ĥ ≅ (Z/n)^{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    pub n: u64,
    pub a: Vec<u64>,
}

impl GroupElement {
    pub fn new(n: u64, a: Vec<u64>) -> Result<Self> {
        if n == 0 || a.len() as u64 != n - 1 {
            return Err(Error::OutOfRange {
                index: a.len() as u64,
                range: format!("expected {} residues", n.saturating_sub(1)),
            });
        }
        Ok(GroupElement {
            n,
            a: a.into_iter().map(|x| x % n).collect(),
        })
    }

    pub fn identity(n: u64) -> Self {
        GroupElement {
            n,
            a: vec![0; n.saturating_sub(1) as usize],
        }
    }

    /// `a_index` (1-based).
    pub fn get(&self, index: usize) -> u64 {
        self.a[index - 1]
    }

    /// Exponent of the scalar by which this element multiplies `z^b`.
    pub fn character_exponent(&self, b: &ExponentVector) -> u64 {
        self.a
            .iter()
            .zip(&b.exps)
            .fold(0, |acc, (a, b)| (acc + a * (b % self.n)) % self.n)
    }

    /// Image in `Z ≅ Z/n` under `(ω^{a_r}) ↦ ω̲^{Σ r a_r}`.
    pub fn central_image(&self) -> u64 {
        weighted_sum(self.n, self.a.iter().enumerate().map(|(i, &a)| (i + 1, a)))
    }
}

fn weighted_sum<I: IntoIterator<Item = (usize, u64)>>(n: u64, terms: I) -> u64 {
    terms
        .into_iter()
        .fold(0, |acc, (r, a)| (acc + (r as u64 % n) * (a % n)) % n)
}

fn check_index(n: u64, k: u64) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::OutOfRange {
            index: k,
            range: format!("[1, {}]", n.saturating_sub(1)),
        });
    }
    Ok(())
}

/// `n` times the coefficients of the fundamental weight `λ_k` in the simple roots:
/// `j(n-k)` for `j ≤ k` and `k(n-j)` for `j ≥ k`.
pub fn weight_numerators(n: u64, k: u64) -> Result<Vec<u64>> {
    check_index(n, k)?;
    Ok((1..n)
        .map(|j| if j <= k { j * (n - k) } else { k * (n - j) })
        .collect())
}

/// Root coefficients of `μ_k`, the representative of `λ_k` modulo the root
/// lattice with every coefficient in `[0, 1)`.
pub fn mu_coefficients(n: u64, k: u64) -> Result<Vec<Ratio<u64>>> {
    Ok(weight_numerators(n, k)?
        .into_iter()
        .map(|w| Ratio::new(w % n, n))
        .collect())
}

/// `v_k = e^{μ_k}` pulled back to `T̂`.
pub fn v_exponents(n: u64, k: u64) -> Result<ExponentVector> {
    let exps = weight_numerators(n, k)?.into_iter().map(|w| w % n).collect();
    ExponentVector::new(n, exps)
}

/// `y_k = e^{λ_k}` pulled back to `T̂`.
pub fn y_exponents(n: u64, k: u64) -> Result<ExponentVector> {
    ExponentVector::new(n, weight_numerators(n, k)?)
}

/// Whether `z_k` divides `v_i`; closed form: `i` is not a multiple of `n / gcd(k, n)`.
pub fn z_divides_v(n: u64, k: u64, i: u64) -> Result<bool> {
    check_index(n, k)?;
    check_index(n, i)?;
    Ok(i % (n / num_integer::gcd(k, n)) != 0)
}

/// Membership in `H`: `Σ r a_r ≡ 0 mod n`.
pub fn in_h(h: &GroupElement) -> bool {
    h.central_image() == 0
}

/// Membership in `H_J`: `a_j ≡ 0` on `J` and `Σ_{r∉J} r a_r ≡ 0 mod n`.
pub fn in_h_j(h: &GroupElement, j_set: &[usize]) -> bool {
    j_set.iter().all(|&j| h.get(j) == 0) && in_h(h)
}

/// The `n-2` generators `e_r + r·e_{n-1}` of `H`.
pub fn h_generators(n: u64) -> Vec<GroupElement> {
    (1..n.saturating_sub(1))
        .map(|r| {
            let mut a = vec![0; (n - 1) as usize];
            a[(r - 1) as usize] = 1;
            a[(n - 2) as usize] = r % n;
            GroupElement { n, a }
        })
        .collect()
}

/// Smallest residue `a` with `b_r ≡ a·r mod n` for every `r ∉ J`, if any.
pub fn proportionality_residue(b: &ExponentVector, j_set: &[usize]) -> Option<u64> {
    let n = b.n;
    (0..n).find(|&a| {
        (1..n as usize)
            .filter(|r| !j_set.contains(r))
            .all(|r| b.get(r) % n == (a * r as u64) % n)
    })
}

/// Whether `z^b` lies in `A^{H_J}`; pass an empty `J` for `A^H`.
pub fn is_invariant_monomial(b: &ExponentVector, j_set: &[usize]) -> bool {
    proportionality_residue(b, j_set).is_some()
}

/// Residues `c_j` for `j ∈ J`, aligned positionally with `J` ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CTuple {
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub c: Vec<u64>,
}

impl CTuple {
    pub fn new(j: Vec<usize>, c: Vec<u64>) -> Result<Self> {
        if j.len() != c.len() {
            return Err(Error::InvalidFrame(format!(
                "{} residues for {} indices",
                c.len(),
                j.len()
            )));
        }
        if j.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidFrame("J must be strictly ascending".into()));
        }
        Ok(CTuple { j, c })
    }

    pub fn zeros(j: &[usize]) -> Self {
        CTuple {
            j: j.to_vec(),
            c: vec![0; j.len()],
        }
    }
}

/// Writes an `H_J`-invariant `f = z^b` as `c^{-1} g + (element of the ideal)` with `g ∈ A^H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantDecomposition {
    /// `g = ∏_{j∈J} z_j^{m_j} · f`.
    pub g: ExponentVector,
    /// `m_j`, aligned with `J`.
    pub m: Vec<u64>,
    /// `c = ∏ ω^{c_j m_j}`, as an exponent of `ω`.
    pub scalar_exponent: u64,
    /// The residue `a` with `b_r ≡ a r` off `J`.
    pub residue: u64,
}

pub fn invariant_sum_decomposition(
    b: &ExponentVector,
    c_tuple: &CTuple,
) -> Result<InvariantDecomposition> {
    let n = b.n;
    let a = proportionality_residue(b, &c_tuple.j)
        .ok_or_else(|| Error::NotInvariant(format!("{:?}", b.exps)))?;
    let mut g = b.clone();
    let mut m = Vec::with_capacity(c_tuple.j.len());
    let mut scalar = 0;
    for (&j, &cj) in c_tuple.j.iter().zip(&c_tuple.c) {
        let target = (a * j as u64) % n;
        let mj = (target + n - g.exps[j - 1] % n) % n;
        g.exps[j - 1] += mj;
        scalar = (scalar + (cj % n) * mj) % n;
        m.push(mj);
    }
    Ok(InvariantDecomposition {
        g,
        m,
        scalar_exponent: scalar,
        residue: a,
    })
}

/// `gcd([n] ∖ J)`.
pub fn d_star(frame: &ToricFrame) -> u64 {
    gcd_all(
        frame
            .j_complement()
            .into_iter()
            .map(|x| x as u64)
            .chain([frame.n() as u64]),
    )
}

/// A component `W_r` of the preimage of the adjoint cell, `r ∈ Z/d*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComponentIndex {
    pub d_star: u64,
    pub r: u64,
}

/// `φ((c_j)) = Σ j c_j mod d*`.
pub fn phi(frame: &ToricFrame, c_tuple: &CTuple) -> Result<ComponentIndex> {
    if c_tuple.j != frame.j() {
        return Err(Error::InvalidFrame(format!(
            "residues indexed by {:?} but J = {:?}",
            c_tuple.j,
            frame.j()
        )));
    }
    let ds = d_star(frame);
    let r = c_tuple
        .j
        .iter()
        .zip(&c_tuple.c)
        .fold(0, |acc, (&j, &c)| (acc + (j as u64 % ds) * (c % ds)) % ds);
    Ok(ComponentIndex { d_star: ds, r })
}

/// Action of the central generator: `W_r ↦ W_{r+1}`.
pub fn z_shift(idx: ComponentIndex) -> ComponentIndex {
    ComponentIndex {
        d_star: idx.d_star,
        r: (idx.r + 1) % idx.d_star,
    }
}

/// Characters `χ_0, χ_q, …, χ_{(d*-1)q}` spanned by the components, `q = n/d*`.
pub fn component_characters(frame: &ToricFrame) -> Vec<u64> {
    let ds = d_star(frame);
    let q = frame.n() as u64 / ds;
    (0..ds).map(|m| m * q).collect()
}
