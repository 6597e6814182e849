//! Poincaré polynomials of Springer fibers and extended Springer fibers.
//!
//! Everything here is built from two per-tableau statistics: the inversion
//! count `|σ|` (the dimension of the affine cell `C_σ`) and the maximal
//! divisor `d_σ` (the number of orbifold cells lying over `C_σ` in the
//! extended fiber). Closed forms that reduce to smaller Springer fibers are
//! computed alongside the cell sums and compared, so a mismatch surfaces as
//! [`Error::IdentityMismatch`] rather than a silently wrong answer.
//!
//! Coefficients count cohomology dimensions; they do not depend on the
//! coefficient field as long as its characteristic is prime to `n`.

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, totient};
use crate::error::{Error, Result};
use crate::inversions::inversion_count;
use crate::partition::{nilcone_dim, Partition};
use crate::poly::{Coefficient, Polynomial};
use crate::tableau::{enumerate_rst, RowStrictTableau};
use crate::IntPolynomial;

/// Per-character polynomials `P_{χ_i}` for `i = 0..n-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equivariant<C> {
    pub n: u64,
    pub by_char: Vec<Polynomial<C>>,
}

impl<C: Coefficient> Equivariant<C> {
    pub fn zero(n: u64) -> Self {
        Equivariant {
            n,
            by_char: vec![Polynomial::zero(); n as usize],
        }
    }

    /// Evaluation at the identity of the centre: the sum over all characters.
    pub fn total(&self) -> Polynomial<C> {
        self.by_char.iter().cloned().sum()
    }

    /// Indices of characters with a nonzero component.
    pub fn support(&self) -> Vec<u64> {
        self.by_char
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, _)| i as u64)
            .collect()
    }
}

/// `t^shift · poly`, kept factored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftedPolynomial {
    pub shift: u64,
    pub poly: IntPolynomial,
}

impl ShiftedPolynomial {
    pub fn zero() -> Self {
        ShiftedPolynomial {
            shift: 0,
            poly: IntPolynomial::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn expand(&self) -> IntPolynomial {
        self.poly.shift(self.shift as usize)
    }
}

/// An orbifold cell `C̃_{σ,r}` of the extended Springer fiber.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedCell {
    pub tableau: RowStrictTableau,
    pub r: u64,
    pub d: u64,
    pub dim: u64,
}

impl ExtendedCell {
    /// The centre's generator moves `C̃_{σ,r}` to `C̃_{σ,r+1}`.
    pub fn z_shift(&self) -> ExtendedCell {
        ExtendedCell {
            r: (self.r + 1) % self.d,
            ..self.clone()
        }
    }
}

/// `(|σ|, d_σ)` for every row-strict tableau of the shape, in canonical order.
pub fn cell_statistics(shape: &Partition) -> Vec<(u64, u64)> {
    enumerate_rst(shape)
        .map(|s| (inversion_count(&s), s.max_divisor()))
        .collect()
}

fn check_char(n: u64, i: u64) -> Result<()> {
    if i >= n {
        return Err(Error::OutOfRange {
            index: i,
            range: format!("characters 0..{n}"),
        });
    }
    Ok(())
}

/// `d = n / gcd(n, i)`, with `gcd(n, 0) = n`.
pub fn char_divisor(n: u64, i: u64) -> Result<u64> {
    check_char(n, i)?;
    Ok(n / gcd(n, i))
}

/// `Σ_σ t^{|σ|}` over all row-strict tableaux.
pub fn springer_poincare(shape: &Partition) -> IntPolynomial {
    let mut p = IntPolynomial::zero();
    for s in enumerate_rst(shape) {
        p.add_term(inversion_count(&s) as usize, 1);
    }
    p
}

/// `Σ t^{|σ|}` over indivisible tableaux (`d_σ = 1`).
pub fn q_poly(shape: &Partition) -> IntPolynomial {
    let mut p = IntPolynomial::zero();
    for (inv, d) in cell_statistics(shape) {
        if d == 1 {
            p.add_term(inv as usize, 1);
        }
    }
    p
}

/// `Σ_{d | λ} t^{D_{λ,d}} Q_{λ/d}(t)`, the Springer polynomial regrouped by maximal divisor.
pub fn springer_poincare_by_quotients(shape: &Partition) -> IntPolynomial {
    shape
        .divisor_list()
        .into_iter()
        .map(|d| {
            let q = shape.quotient(d).expect("d divides the shape");
            let shift = shape.dim_shift(d).expect("d divides the shape");
            q_poly(&q).shift(shift as usize)
        })
        .sum()
}

/// `Σ_σ d_σ t^{|σ|}`.
pub fn extended_poincare(shape: &Partition) -> IntPolynomial {
    let mut p = IntPolynomial::zero();
    for (inv, d) in cell_statistics(shape) {
        p.add_term(inv as usize, d);
    }
    p
}

/// `Σ_{d | λ} φ(d) t^{D_{λ,d}} P(Sp_{λ/d})`.
pub fn extended_poincare_totient(shape: &Partition) -> IntPolynomial {
    shape
        .divisor_list()
        .into_iter()
        .map(|d| {
            let q = shape.quotient(d).expect("d divides the shape");
            let shift = shape.dim_shift(d).expect("d divides the shape");
            springer_poincare(&q).shift(shift as usize).scale(&totient(d))
        })
        .sum()
}

/// Each cell over `σ` spans the regular representation of `Z/d_σ`, contributing
/// `t^{|σ|}` to the characters `0, n/d_σ, 2n/d_σ, …`.
pub fn equivariant_poincare(shape: &Partition) -> Equivariant<u64> {
    let n = shape.n() as u64;
    let mut out = Equivariant::zero(n);
    for (inv, d) in cell_statistics(shape) {
        let step = n / d;
        for m in 0..d {
            out.by_char[(m * step) as usize].add_term(inv as usize, 1);
        }
    }
    out
}

/// Cell-level `P_{χ_i}`: tableaux whose `d_σ` is a multiple of `n / gcd(n, i)`.
pub fn isotypic_cell_level(shape: &Partition, i: u64) -> Result<IntPolynomial> {
    let d = char_divisor(shape.n() as u64, i)?;
    let mut p = IntPolynomial::zero();
    for (inv, ds) in cell_statistics(shape) {
        if ds % d == 0 {
            p.add_term(inv as usize, 1);
        }
    }
    Ok(p)
}

/// Closed-form `P_{χ_i}`: `t^{D_{λ,d}} P(Sp_{λ/d})` when `d | λ`, else zero.
pub fn isotypic_closed_form(shape: &Partition, i: u64) -> Result<ShiftedPolynomial> {
    let d = char_divisor(shape.n() as u64, i)?;
    if !shape.is_divisible_by(d) {
        return Ok(ShiftedPolynomial::zero());
    }
    Ok(ShiftedPolynomial {
        shift: shape.dim_shift(d)?,
        poly: springer_poincare(&shape.quotient(d)?),
    })
}

/// `P_{χ_i}`, computed both from the cells and from the closed form.
pub fn isotypic_poincare(shape: &Partition, i: u64) -> Result<IntPolynomial> {
    let cells = isotypic_cell_level(shape, i)?;
    let closed = isotypic_closed_form(shape, i)?.expand();
    if cells != closed {
        return Err(Error::IdentityMismatch {
            context: format!("isotypic polynomial of {shape} at character {i}"),
            left: cells.to_string(),
            right: closed.to_string(),
        });
    }
    Ok(cells)
}

/// Stalk of the Lusztig sheaf `𝔸_{χ_i}` at `x_λ`: `t^{N + D_{λ,d}} P(Sp_{λ/d})`.
pub fn lusztig_stalk_poincare(shape: &Partition, i: u64) -> Result<ShiftedPolynomial> {
    let n = shape.n() as u64;
    let iso = isotypic_closed_form(shape, i)?;
    if iso.is_zero() {
        return Ok(ShiftedPolynomial::zero());
    }
    Ok(ShiftedPolynomial {
        shift: nilcone_dim(n) + iso.shift,
        poly: iso.poly,
    })
}

/// The stalk rewritten against the Springer sheaf of `SL_{n/d}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallerGroupForm {
    /// `N_d + D_{λ,d}` with `N_d = dim 𝒩_n − dim 𝒩_{n/d}`.
    pub shift: u64,
    pub base_partition: Partition,
    pub rank_divisor: u64,
}

pub fn smaller_group_form(shape: &Partition, i: u64) -> Result<SmallerGroupForm> {
    let n = shape.n() as u64;
    let d = char_divisor(n, i)?;
    if !shape.is_divisible_by(d) {
        return Err(Error::NotADivisor {
            d,
            what: format!("partition {shape}"),
        });
    }
    Ok(SmallerGroupForm {
        shift: nilcone_dim(n) - nilcone_dim(n / d) + shape.dim_shift(d)?,
        base_partition: shape.quotient(d)?,
        rank_divisor: d,
    })
}

/// The cells `C̃_{σ,r}`, `0 ≤ r < d_σ`, in canonical tableau order.
pub fn extended_cells(shape: &Partition) -> Vec<ExtendedCell> {
    let mut out = Vec::new();
    for s in enumerate_rst(shape) {
        let d = s.max_divisor();
        let dim = inversion_count(&s);
        for r in 0..d {
            out.push(ExtendedCell {
                tableau: s.clone(),
                r,
                d,
                dim,
            });
        }
    }
    out
}
