//! Dense univariate polynomials in `t` over an exact coefficient type.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_traits::{FromPrimitive, One, Zero};
use serde::{Deserialize, Serialize};

/// Coefficient ring for [`Polynomial`]: exact, cloneable, additive and multiplicative.
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + AddAssign + Mul<Output = Self> + FromPrimitive
{
}

impl<T> Coefficient for T where
    T: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + AddAssign + Mul<Output = T> + FromPrimitive
{
}

/// `Σ coeffs[j] t^j` with trailing zeros trimmed; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Polynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::monomial(0, C::one())
    }

    /// `c · t^exp`.
    pub fn monomial(exp: usize, c: C) -> Self {
        let mut coeffs = vec![C::zero(); exp + 1];
        coeffs[exp] = c;
        Polynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> C {
        self.coeffs.get(j).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Adds `c · t^exp` in place.
    pub fn add_term(&mut self, exp: usize, c: C) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() <= exp {
            self.coeffs.resize(exp + 1, C::zero());
        }
        self.coeffs[exp] += c;
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn scale(&self, c: &C) -> Self {
        Polynomial::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> C {
        let mut acc = C::zero();
        for c in &self.coeffs {
            acc += c.clone();
        }
        acc
    }

    /// Converts coefficient type through `u64`-sized values.
    pub fn map_coeffs<D: Coefficient, F: Fn(&C) -> D>(&self, f: F) -> Polynomial<D> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// LaTeX rendering, e.g. `1 + 2t + t^{3}`.
    pub fn to_latex(&self) -> String {
        self.render(|j| match j {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{{{j}}}"),
        })
    }

    fn render(&self, power: impl Fn(usize) -> String) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let p = power(j);
                if j == 0 {
                    c.to_string()
                } else if c.is_one() {
                    p
                } else {
                    format!("{c}{p}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl<C: Coefficient> Default for Polynomial<C> {
    fn default() -> Self {
        Polynomial::zero()
    }
}

impl<C: Coefficient> Add for Polynomial<C> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<C: Coefficient> AddAssign for Polynomial<C> {
    fn add_assign(&mut self, rhs: Self) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), C::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: Self) -> Polynomial<C> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a.clone() * b.clone();
            }
        }
        Polynomial::new(coeffs)
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.render(|j| match j {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{j}"),
        });
        f.write_str(&s)
    }
}

impl<C: Coefficient> std::iter::Sum for Polynomial<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    type P = Polynomial<u64>;

    #[test]
    fn basics() {
        let p = P::new(vec![1, 2, 0, 1, 0, 0]);
        assert_eq!(p.coeffs(), &[1, 2, 0, 1]);
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.eval_one(), 4);
        assert_eq!(p.to_string(), "1 + 2t + t^3");
        assert_eq!(p.to_latex(), "1 + 2t + t^{3}");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::zero().degree(), None);
        assert_eq!(p.shift(2).coeffs(), &[0, 0, 1, 2, 0, 1]);
        assert!(P::zero().shift(3).is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = P::new(vec![1, 1]);
        let b = P::new(vec![1, 2]);
        assert_eq!((&a * &b).coeffs(), &[1, 3, 2]);
        assert_eq!((a.clone() + b).coeffs(), &[2, 3]);
        assert_eq!(a.scale(&3).coeffs(), &[3, 3]);
        let mut c = P::zero();
        c.add_term(4, 2);
        c.add_term(0, 1);
        assert_eq!(c.coeffs(), &[1, 0, 0, 0, 2]);
    }

    #[test]
    fn json_format() {
        let p = P::new(vec![1, 2, 0, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"coeffs":[1,2,0,1]}"#);
    }

    proptest! {
        #[test]
        fn big_and_machine_coefficients_agree(
            a in proptest::collection::vec(0u64..1000, 0..8),
            b in proptest::collection::vec(0u64..1000, 0..8),
            k in 0usize..5,
        ) {
            let pa = P::new(a.clone());
            let pb = P::new(b.clone());
            let big = |p: &P| p.map_coeffs(|&c| BigUint::from(c));
            let lhs = big(&(&pa * &pb).shift(k)) + big(&pa);
            let rhs = (&big(&pa) * &big(&pb)).shift(k) + big(&pa);
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!((&pa * &pb).eval_one(), pa.eval_one() * pb.eval_one());
        }
    }
}
