//! Dense univariate polynomials in the monomial basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Field;

/// `coeffs[i]` is the coefficient of `x^i`. The highest stored coefficient is
/// never zero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Serialize", deserialize = "T: Deserialize<'de> + Field"))]
#[serde(from = "Vec<T>", into = "Vec<T>")]
pub struct DensePolynomial<T: Field = f64> {
    coeffs: Vec<T>,
}

impl<T: Field> From<Vec<T>> for DensePolynomial<T> {
    fn from(coeffs: Vec<T>) -> Self {
        DensePolynomial::new(coeffs)
    }
}

impl<T: Field> From<DensePolynomial<T>> for Vec<T> {
    fn from(p: DensePolynomial<T>) -> Self {
        p.coeffs
    }
}

impl<T: Field> DensePolynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePolynomial { coeffs }
    }

    pub fn zero() -> Self {
        DensePolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DensePolynomial { coeffs: vec![T::one()] }
    }

    /// `c·x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        DensePolynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<T> {
        self.coeffs.last().copied()
    }

    /// Horner evaluation at any scalar the coefficients embed into.
    pub fn eval<U: Field + From<T>>(&self, x: U) -> U {
        self.coeffs
            .iter()
            .rev()
            .fold(U::zero(), |acc, &c| acc * x + U::from(c))
    }

    pub fn scale(&self, c: T) -> Self {
        DensePolynomial::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Multiplication by `x`.
    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        coeffs.extend_from_slice(&self.coeffs);
        DensePolynomial { coeffs }
    }

    /// Exact division by `x`; fails unless the constant term is exactly zero.
    pub fn div_x(&self) -> Result<Self> {
        match self.coeffs.first() {
            None => Ok(Self::zero()),
            Some(c) if c.is_zero() => Ok(DensePolynomial::new(self.coeffs[1..].to_vec())),
            Some(_) => Err(Error::Consistency(
                "polynomial has a nonzero constant term and is not divisible by x".into(),
            )),
        }
    }

    pub fn derivative(&self) -> Self {
        DensePolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as f64)
                .collect(),
        )
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        DensePolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| if i % 2 == 1 { -c } else { c })
                .collect(),
        )
    }

    pub fn even_part(&self) -> Self {
        self.keep_parity(0)
    }

    pub fn odd_part(&self) -> Self {
        self.keep_parity(1)
    }

    fn keep_parity(&self, parity: usize) -> Self {
        DensePolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| if i % 2 == parity { c } else { T::zero() })
                .collect(),
        )
    }

    /// Largest coefficient magnitude (0 for the zero polynomial).
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.magnitude()).fold(0.0, f64::max)
    }

    /// `max_i |a_i - b_i| / max(|a|_∞, |b|_∞)`; zero when both are zero.
    pub fn max_rel_diff(&self, other: &Self) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Self, i: usize| p.coeffs.get(i).copied().unwrap_or_else(T::zero);
        let diff = (0..n)
            .map(|i| (get(self, i) - get(other, i)).magnitude())
            .fold(0.0, f64::max);
        let scale = self.max_abs_coeff().max(other.max_abs_coeff());
        if scale == 0.0 {
            0.0
        } else {
            diff / scale
        }
    }
}

impl<T: Field> fmt::Debug for DensePolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl<T: Field> Add for &DensePolynomial<T> {
    type Output = DensePolynomial<T>;
    fn add(self, rhs: Self) -> DensePolynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &DensePolynomial<T>, i: usize| p.coeffs.get(i).copied().unwrap_or_else(T::zero);
        DensePolynomial::new((0..n).map(|i| get(self, i) + get(rhs, i)).collect())
    }
}

impl<T: Field> Sub for &DensePolynomial<T> {
    type Output = DensePolynomial<T>;
    fn sub(self, rhs: Self) -> DensePolynomial<T> {
        self + &(-rhs)
    }
}

impl<T: Field> Neg for &DensePolynomial<T> {
    type Output = DensePolynomial<T>;
    fn neg(self) -> DensePolynomial<T> {
        DensePolynomial {
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }
}

impl<T: Field> Mul for &DensePolynomial<T> {
    type Output = DensePolynomial<T>;
    fn mul(self, rhs: Self) -> DensePolynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return DensePolynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        DensePolynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<T: Field> $tr for DensePolynomial<T> {
            type Output = DensePolynomial<T>;
            fn $method(self, rhs: Self) -> DensePolynomial<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
