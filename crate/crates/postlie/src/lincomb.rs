//! Finitely-supported linear combinations over an ordered basis with exact
//! rational coefficients.
//!
//! Invariants: no stored coefficient is zero, and keys are canonical basis
//! values supplied by the caller. All arithmetic preserves both.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// The rational `n`.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The rational `n/d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The rational `n` for an unsigned 128-bit count (binomials, factorials).
pub fn rat_u128(n: u128) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A finite linear combination `Σ c_b · b` with exact rational `c_b ≠ 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<B: Ord + Clone> {
    terms: BTreeMap<B, BigRational>,
}

impl<B: Ord + Clone> Default for LinComb<B> {
    fn default() -> Self {
        LinComb::zero()
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    /// The single term `1 · b`.
    pub fn single(b: B) -> Self {
        Self::with_coef(b, BigRational::one())
    }

    /// The single term `c · b` (empty when `c = 0`).
    pub fn with_coef(b: B, c: BigRational) -> Self {
        let mut l = Self::zero();
        l.add_term(b, c);
        l
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements in the support.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · b`, pruning the entry if the total cancels.
    pub fn add_term(&mut self, b: B, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// The coefficient of `b` (zero if absent).
    pub fn coef(&self, b: &B) -> BigRational {
        self.terms.get(b).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&B, &BigRational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (B, BigRational)> {
        self.terms.into_iter()
    }

    pub fn add_assign(&mut self, other: &LinComb<B>) {
        for (b, c) in &other.terms {
            self.add_term(b.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &BigRational) -> LinComb<B> {
        if c.is_zero() {
            return LinComb::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(b, x)| (b.clone(), x * c)).collect(),
        }
    }

    /// Applies a basis map, merging collisions.
    pub fn map_basis<C: Ord + Clone>(&self, f: impl Fn(&B) -> C) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Applies a linear map given on basis elements.
    pub fn flat_map<C: Ord + Clone>(&self, f: impl Fn(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            for (d, x) in f(b).terms {
                out.add_term(d, c * &x);
            }
        }
        out
    }

    /// True when every coefficient is a positive or negative integer.
    pub fn all_integer(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Largest denominator-free view useful in asserts: max |numerator| over
    /// integer combinations, `None` when non-integer coefficients occur.
    pub fn max_abs_integer(&self) -> Option<BigInt> {
        if !self.all_integer() {
            return None;
        }
        self.terms.values().map(|c| c.to_integer().abs()).max()
    }
}

impl<B: Ord + Clone> FromIterator<(B, BigRational)> for LinComb<B> {
    fn from_iter<T: IntoIterator<Item = (B, BigRational)>>(iter: T) -> Self {
        let mut l = LinComb::zero();
        for (b, c) in iter {
            l.add_term(b, c);
        }
        l
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(b.clone(), -c.clone());
        }
        out
    }
}

impl<B: Ord + Clone> Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (b.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<B: Ord + Clone> Mul<&BigRational> for &LinComb<B> {
    type Output = LinComb<B>;
    fn mul(self, rhs: &BigRational) -> LinComb<B> {
        self.scale(rhs)
    }
}
