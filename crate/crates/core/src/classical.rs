//! Hermite, Laguerre and Jacobi polynomials in their standard normalization,
//! evaluated by forward three-term recurrence.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::error::{domain, Result};
use crate::poly::DensePolynomial;
use crate::scalar::Field;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ClassicalKind {
    Hermite,
    Laguerre { alpha: f64 },
    Jacobi { alpha: f64, beta: f64 },
}

impl ClassicalKind {
    /// Checks integrability of the weight: `alpha > -1` (and `beta > -1`).
    pub fn validate(&self) -> Result<()> {
        match *self {
            ClassicalKind::Hermite => Ok(()),
            ClassicalKind::Laguerre { alpha } => {
                if alpha.is_finite() && alpha > -1.0 {
                    Ok(())
                } else {
                    Err(domain(format!("Laguerre requires alpha > -1, got {alpha}")))
                }
            }
            ClassicalKind::Jacobi { alpha, beta } => {
                if alpha.is_finite() && beta.is_finite() && alpha > -1.0 && beta > -1.0 {
                    Ok(())
                } else {
                    Err(domain(format!(
                        "Jacobi requires alpha, beta > -1, got ({alpha}, {beta})"
                    )))
                }
            }
        }
    }

    /// `(A_n, B_n, C_n)` with `P_n = (A_n x + B_n) P_{n-1} - C_n P_{n-2}`, `n >= 1`.
    fn step(&self, n: usize) -> (f64, f64, f64) {
        let nf = n as f64;
        match *self {
            ClassicalKind::Hermite => (2.0, 0.0, 2.0 * (nf - 1.0)),
            ClassicalKind::Laguerre { alpha } => (
                -1.0 / nf,
                (2.0 * nf - 1.0 + alpha) / nf,
                (nf - 1.0 + alpha) / nf,
            ),
            ClassicalKind::Jacobi { alpha, beta } => {
                if n == 1 {
                    // The general step divides by alpha + beta here.
                    return ((alpha + beta + 2.0) / 2.0, (alpha - beta) / 2.0, 0.0);
                }
                let s = 2.0 * nf + alpha + beta;
                let den = 2.0 * nf * (nf + alpha + beta) * (s - 2.0);
                (
                    (s - 1.0) * s / (2.0 * nf * (nf + alpha + beta)),
                    -(beta * beta - alpha * alpha) * (s - 1.0) / den,
                    2.0 * (nf + alpha - 1.0) * (nf + beta - 1.0) * s / den,
                )
            }
        }
    }

    /// Monic recurrence `p_{n+1} = (x - b_n) p_n - beta_n p_{n-1}` of the same
    /// family, with `beta_0` the total mass of the weight.
    pub fn monic_recurrence(&self, n: usize) -> Result<(f64, f64)> {
        self.validate()?;
        let nf = n as f64;
        Ok(match *self {
            ClassicalKind::Hermite => (0.0, if n == 0 { PI.sqrt() } else { nf / 2.0 }),
            ClassicalKind::Laguerre { alpha } => (
                2.0 * nf + alpha + 1.0,
                if n == 0 {
                    ln_gamma(alpha + 1.0).exp()
                } else {
                    nf * (nf + alpha)
                },
            ),
            ClassicalKind::Jacobi { alpha, beta } => {
                let ab = alpha + beta;
                let b = if n == 0 {
                    (beta - alpha) / (ab + 2.0)
                } else {
                    let s = 2.0 * nf + ab;
                    (beta * beta - alpha * alpha) / (s * (s + 2.0))
                };
                let beta_n = match n {
                    0 => jacobi_mass(alpha, beta),
                    1 => 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab).powi(2) * (3.0 + ab)),
                    _ => {
                        let s = 2.0 * nf + ab;
                        4.0 * nf * (nf + alpha) * (nf + beta) * (nf + ab)
                            / (s * s * (s + 1.0) * (s - 1.0))
                    }
                };
                (b, beta_n)
            }
        })
    }
}

fn jacobi_mass(alpha: f64, beta: f64) -> f64 {
    ((alpha + beta + 1.0) * 2f64.ln() + ln_gamma(alpha + 1.0) + ln_gamma(beta + 1.0)
        - ln_gamma(alpha + beta + 2.0))
        .exp()
}

/// `H_n(x)`, `L_n^(alpha)(x)` or `P_n^(alpha,beta)(x)`.
pub fn eval_classical<T: Field>(kind: ClassicalKind, n: usize, x: T) -> Result<T> {
    kind.validate()?;
    Ok(run_recurrence(kind, n, x))
}

fn run_recurrence<T: Field>(kind: ClassicalKind, n: usize, x: T) -> T {
    let mut prev = T::zero();
    let mut cur = T::one();
    for k in 1..=n {
        let (a, b, c) = kind.step(k);
        let next = (x * a + T::from(b)) * cur - prev * c;
        prev = cur;
        cur = next;
    }
    cur
}

/// Hermite polynomial without parameter checks (there are none to make).
pub fn hermite<T: Field>(n: usize, x: T) -> T {
    run_recurrence(ClassicalKind::Hermite, n, x)
}

/// Laguerre polynomial for any real `alpha`. The recurrence has no
/// singular denominators, so the weight constraint is not needed here.
pub fn laguerre<T: Field>(n: usize, alpha: f64, x: T) -> T {
    run_recurrence(ClassicalKind::Laguerre { alpha }, n, x)
}

/// Jacobi polynomial for arbitrary real parameters, from the explicit sum
/// `sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s)`.
///
/// The potentials catalog needs parameters such as `-A/alpha - 1/2` that lie
/// outside the orthogonality range and can make recurrence denominators vanish;
/// this form is a polynomial in the parameters and has no such poles.
pub fn jacobi_any<T: Field>(n: usize, a: f64, b: f64, x: T) -> T {
    let minus = (x - T::one()) * 0.5;
    let plus = (x + T::one()) * 0.5;
    let mut minus_pow = vec![T::one(); n + 1];
    let mut plus_pow = vec![T::one(); n + 1];
    for k in 1..=n {
        minus_pow[k] = minus_pow[k - 1] * minus;
        plus_pow[k] = plus_pow[k - 1] * plus;
    }
    let nf = n as f64;
    (0..=n).fold(T::zero(), |acc, s| {
        let c = gen_binomial(nf + a, n - s) * gen_binomial(nf + b, s);
        acc + minus_pow[s] * plus_pow[n - s] * c
    })
}

pub(crate) fn gen_binomial(z: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (z - j as f64) / (j + 1) as f64)
}

/// Monomial coefficients of the degree-`n` classical polynomial.
pub fn coeffs_classical(kind: ClassicalKind, n: usize) -> Result<DensePolynomial> {
    kind.validate()?;
    let x = DensePolynomial::monomial(1.0, 1);
    let mut prev = DensePolynomial::zero();
    let mut cur = DensePolynomial::one();
    for k in 1..=n {
        let (a, b, c) = kind.step(k);
        let factor = &x.scale(a) + &DensePolynomial::new(vec![b]);
        let next = &(&factor * &cur) - &prev.scale(c);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// The orthogonality constant `∫ p_n² w`.
pub fn norm_constant(kind: ClassicalKind, n: usize) -> Result<f64> {
    kind.validate()?;
    let nf = n as f64;
    Ok(match kind {
        ClassicalKind::Hermite => (nf * 2f64.ln() + ln_gamma(nf + 1.0)).exp() * PI.sqrt(),
        ClassicalKind::Laguerre { alpha } => {
            (ln_gamma(nf + alpha + 1.0) - ln_gamma(nf + 1.0)).exp()
        }
        ClassicalKind::Jacobi { alpha, beta } => {
            if n == 0 {
                jacobi_mass(alpha, beta)
            } else {
                let ab = alpha + beta;
                ((ab + 1.0) * 2f64.ln() + ln_gamma(alpha + nf + 1.0) + ln_gamma(beta + nf + 1.0)
                    - ln_gamma(nf + 1.0)
                    - ln_gamma(ab + nf + 1.0))
                    .exp()
                    / (ab + 2.0 * nf + 1.0)
            }
        }
    })
}

/// Divisor that turns `p_n` into its orthonormal version: `sqrt(norm_constant)`.
pub fn orthonormalize(kind: ClassicalKind, n: usize) -> Result<f64> {
    Ok(norm_constant(kind, n)?.sqrt())
}

/// Absolute residuals of
/// `H_2n(x) = (-1)^n 2^(2n) n! L_n^(-1/2)(x²)` and
/// `H_2n+1(x) = (-1)^n 2^(2n+1) n! x L_n^(1/2)(x²)`.
pub fn hermite_laguerre_identity_check(n: usize, x: f64) -> (f64, f64) {
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let factor = sign * (0..n).fold(1.0, |acc, k| acc * 4.0 * (k + 1) as f64);
    let even = factor * laguerre(n, -0.5, x * x);
    let odd = 2.0 * factor * x * laguerre(n, 0.5, x * x);
    (
        (hermite(2 * n, x) - even).abs(),
        (hermite(2 * n + 1, x) - odd).abs(),
    )
}
