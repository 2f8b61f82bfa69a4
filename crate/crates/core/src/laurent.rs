//! Multivariate Laurent polynomials with arbitrary-precision coefficients,
//! used as torus characters.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial in a fixed number of variables. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentChar {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentChar {
    pub fn zero(nvars: usize) -> Self {
        LaurentChar {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exponents: Vec<i64>, coeff: BigInt) -> Self {
        let mut c = Self::zero(exponents.len());
        c.add_term(exponents, coeff);
        c
    }

    /// The single variable `x_i` among `nvars` variables.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[i64]) -> BigInt {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exponents: Vec<i64>, coeff: BigInt) {
        assert_eq!(
            exponents.len(),
            self.nvars,
            "exponent vector has wrong length"
        );
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponents) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiply by the monomial with the given exponents.
    pub fn shift(&self, exponents: &[i64]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                (
                    e.iter().zip(exponents).map(|(a, b)| a + b).collect(),
                    c.clone(),
                )
            })
            .collect();
        LaurentChar {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        LaurentChar {
            nvars: self.nvars,
            terms,
        }
    }

    /// Value at `x_1 = ... = x_m = 1`.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Lexicographically largest exponent with nonzero coefficient.
    pub fn leading_term(&self) -> Option<(&Vec<i64>, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Substitute each variable `x_i` by a monomial in `target_nvars` new
    /// variables, given by its exponent vector `images[i]`.
    pub fn substitute_monomials(&self, images: &[Vec<i64>], target_nvars: usize) -> Self {
        assert_eq!(images.len(), self.nvars);
        let mut out = Self::zero(target_nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target_nvars];
            for (i, &k) in e.iter().enumerate() {
                for (j, &x) in images[i].iter().enumerate() {
                    ne[j] += k * x;
                }
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Every monomial has total degree `d`.
    pub fn is_homogeneous_of_degree(&self, d: i64) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<i64>() == d)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl Add for &LaurentChar {
    type Output = LaurentChar;
    fn add(self, rhs: &LaurentChar) -> LaurentChar {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentChar {
    type Output = LaurentChar;
    fn sub(self, rhs: &LaurentChar) -> LaurentChar {
        self + &(-rhs)
    }
}

impl Neg for &LaurentChar {
    type Output = LaurentChar;
    fn neg(self) -> LaurentChar {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        LaurentChar {
            nvars: self.nvars,
            terms,
        }
    }
}

impl Mul for &LaurentChar {
    type Output = LaurentChar;
    fn mul(self, rhs: &LaurentChar) -> LaurentChar {
        assert_eq!(self.nvars, rhs.nvars);
        let mut acc: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentChar {
            nvars: self.nvars,
            terms: acc,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_cancels_and_multiplies() {
        let x = LaurentChar::variable(2, 0);
        let y = LaurentChar::variable(2, 1);
        let s = &x + &y;
        let d = &x - &y;
        let p = &s * &d;
        assert_eq!(p.coeff(&[2, 0]), BigInt::from(1));
        assert_eq!(p.coeff(&[0, 2]), BigInt::from(-1));
        assert_eq!(p.coeff(&[1, 1]), BigInt::from(0));
        assert_eq!(p.len(), 2);
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn substitution_and_shift() {
        let x = LaurentChar::variable(1, 0);
        let sq = &x * &x;
        let sub = sq.substitute_monomials(&[vec![1, 1]], 2);
        assert_eq!(sub.coeff(&[2, 2]), BigInt::from(1));
        assert_eq!(sq.shift(&[-2]).coeff(&[0]), BigInt::from(1));
        assert_eq!(sub.leading_term().unwrap().0, &vec![2, 2]);
    }
}
