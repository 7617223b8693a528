//! Scalar abstraction shared by the recurrences.
//!
//! Every evaluator in this crate is generic over [`Field`], so the same code
//! path runs on `f64`, on `Complex64` (Jacobi polynomials at imaginary
//! arguments), and on [`Dual`] numbers, which carry an exact first derivative
//! through the computation.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

pub trait Field:
    Copy
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Mul<f64, Output = Self>
    + Div<f64, Output = Self>
    + From<f64>
    + Send
    + Sync
{
    /// A magnitude used for tolerance checks (modulus of the value part).
    fn magnitude(&self) -> f64;
}

impl Field for f64 {
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Field for Complex64 {
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// Forward-mode dual number `value + deriv·ε` with `ε² = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dual<T> {
    pub value: T,
    pub deriv: T,
}

impl<T: Field> Dual<T> {
    pub fn new(value: T, deriv: T) -> Self {
        Dual { value, deriv }
    }

    pub fn constant(value: T) -> Self {
        Dual { value, deriv: T::zero() }
    }

    /// The independent variable: derivative seeded with one.
    pub fn variable(value: T) -> Self {
        Dual { value, deriv: T::one() }
    }
}

impl Dual<f64> {
    pub fn to_complex(self) -> Dual<Complex64> {
        Dual::new(Complex64::from(self.value), Complex64::from(self.deriv))
    }

    fn chain(self, f: f64, df: f64) -> Self {
        Dual::new(f, df * self.deriv)
    }

    pub fn sin(self) -> Self {
        self.chain(self.value.sin(), self.value.cos())
    }

    pub fn cos(self) -> Self {
        self.chain(self.value.cos(), -self.value.sin())
    }

    pub fn sinh(self) -> Self {
        self.chain(self.value.sinh(), self.value.cosh())
    }

    pub fn cosh(self) -> Self {
        self.chain(self.value.cosh(), self.value.sinh())
    }

    pub fn exp(self) -> Self {
        let e = self.value.exp();
        self.chain(e, e)
    }

    /// `self^p` for a positive base.
    pub fn powf(self, p: f64) -> Self {
        if p == 0.0 {
            return Dual::constant(1.0);
        }
        let v = self.value.powf(p);
        self.chain(v, p * self.value.powf(p - 1.0))
    }

    pub fn recip(self) -> Self {
        let v = 1.0 / self.value;
        self.chain(v, -v * v)
    }
}

impl Dual<Complex64> {
    pub fn re(self) -> Dual<f64> {
        Dual::new(self.value.re, self.deriv.re)
    }

    pub fn scale_complex(self, c: Complex64) -> Self {
        Dual::new(self.value * c, self.deriv * c)
    }
}

impl<T: Field> Add for Dual<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Dual::new(self.value + rhs.value, self.deriv + rhs.deriv)
    }
}

impl<T: Field> Sub for Dual<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Dual::new(self.value - rhs.value, self.deriv - rhs.deriv)
    }
}

impl<T: Field> Mul for Dual<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Dual::new(
            self.value * rhs.value,
            self.deriv * rhs.value + self.value * rhs.deriv,
        )
    }
}

impl Div for Dual<f64> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}

impl<T: Field> Neg for Dual<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Dual::new(-self.value, -self.deriv)
    }
}

impl<T: Field> Mul<f64> for Dual<T> {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        Dual::new(self.value * rhs, self.deriv * rhs)
    }
}

impl<T: Field> Div<f64> for Dual<T> {
    type Output = Self;
    fn div(self, rhs: f64) -> Self {
        Dual::new(self.value / rhs, self.deriv / rhs)
    }
}

impl<T: Field> From<f64> for Dual<T> {
    fn from(v: f64) -> Self {
        Dual::constant(T::from(v))
    }
}

impl<T: Field> Zero for Dual<T> {
    fn zero() -> Self {
        Dual::constant(T::zero())
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.deriv.is_zero()
    }
}

impl<T: Field> One for Dual<T> {
    fn one() -> Self {
        Dual::constant(T::one())
    }
}

impl<T: Field> Field for Dual<T> {
    fn magnitude(&self) -> f64 {
        self.value.magnitude()
    }
}
