//! The reflection-differential operator `𝓛 = ∂R + v` and its gauge form
//! `Y = ∂R + v(I - R)`.
//!
//! `∂R` means "reflect, then differentiate": `(∂R f)(x) = d/dx f(-x) = -f'(-x)`.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::DunklSusyFamily;
use crate::poly::DensePolynomial;
use crate::scalar::Dual;
use crate::symmetric::{MonicSymmetricSystem, SymmetricClassical};

/// Evaluation closer than this to a pole of `v` is refused.
pub const POLE_GUARD: f64 = 1e-8;

/// An odd superpotential `v`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum OddPotential {
    /// `s² x`
    Linear { s: f64 },
    /// `s² x - (alpha + 1/2)/x`
    RadialLinear { s: f64, alpha: f64 },
    /// `A tanh(αx)`
    Tanh { a: f64, alpha: f64 },
    /// `A tan(αx)`
    Tan { a: f64, alpha: f64 },
    /// `A coth(αx) - B cosech(αx)`
    CothCosech { a: f64, b: f64, alpha: f64 },
    /// `A tan(αx) - B cot(αx)`
    TanCot { a: f64, b: f64, alpha: f64 },
}

fn distance_to_lattice(t: f64, offset: f64, period: f64) -> f64 {
    let k = ((t - offset) / period).round();
    (t - offset - k * period).abs()
}

impl OddPotential {
    fn guard(&self, x: f64) -> Result<()> {
        let near = match *self {
            OddPotential::Linear { .. } | OddPotential::Tanh { .. } => false,
            OddPotential::RadialLinear { alpha, .. } => alpha + 0.5 != 0.0 && x.abs() < POLE_GUARD,
            OddPotential::CothCosech { .. } => x.abs() < POLE_GUARD,
            OddPotential::Tan { alpha, .. } => {
                distance_to_lattice(alpha * x, FRAC_PI_2, PI) / alpha < POLE_GUARD
            }
            OddPotential::TanCot { alpha, .. } => {
                distance_to_lattice(alpha * x, 0.0, FRAC_PI_2) / alpha < POLE_GUARD
            }
        };
        if near || !x.is_finite() {
            Err(Error::Singular { what: "superpotential", x })
        } else {
            Ok(())
        }
    }

    /// `(v(x), v'(x))` in one pass.
    pub fn eval_dual(&self, x: Dual<f64>) -> Result<Dual<f64>> {
        self.guard(x.value)?;
        Ok(match *self {
            OddPotential::Linear { s } => x * (s * s),
            OddPotential::RadialLinear { s, alpha } => x * (s * s) - x.recip() * (alpha + 0.5),
            OddPotential::Tanh { a, alpha } => {
                let t = x * alpha;
                t.sinh() / t.cosh() * a
            }
            OddPotential::Tan { a, alpha } => {
                let t = x * alpha;
                t.sin() / t.cos() * a
            }
            OddPotential::CothCosech { a, b, alpha } => {
                let t = x * alpha;
                (t.cosh() * a - Dual::constant(b)) / t.sinh()
            }
            OddPotential::TanCot { a, b, alpha } => {
                let t = x * alpha;
                let (s, c) = (t.sin(), t.cos());
                s / c * a - c / s * b
            }
        })
    }

    pub fn value(&self, x: f64) -> Result<f64> {
        self.eval_dual(Dual::constant(x)).map(|d| d.value)
    }

    pub fn derivative(&self, x: f64) -> Result<f64> {
        self.eval_dual(Dual::variable(x)).map(|d| d.deriv)
    }

    /// True for the two kinds under which `Y` maps polynomials to polynomials.
    pub fn preserves_polynomials(&self) -> bool {
        matches!(self, OddPotential::Linear { .. } | OddPotential::RadialLinear { .. })
    }
}

/// A function with first and second derivatives.
///
/// The defaults fall back to central differences with step
/// `1e-6 * max(1, |x|)`; implementors with closed forms should override them.
pub trait Smooth {
    fn value(&self, x: f64) -> f64;

    fn derivative(&self, x: f64) -> f64 {
        central_difference(|t| self.value(t), x)
    }

    fn second_derivative(&self, x: f64) -> f64 {
        central_difference(|t| self.derivative(t), x)
    }
}

pub fn central_difference(f: impl Fn(f64) -> f64, x: f64) -> f64 {
    let h = 1e-6 * x.abs().max(1.0);
    (f(x + h) - f(x - h)) / (2.0 * h)
}

impl<F: Fn(f64) -> f64> Smooth for F {
    fn value(&self, x: f64) -> f64 {
        self(x)
    }
}

/// A function given together with closed-form derivatives.
pub struct Analytic<F, D, D2> {
    pub f: F,
    pub df: D,
    pub d2f: D2,
}

impl<F, D, D2> Smooth for Analytic<F, D, D2>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
    D2: Fn(f64) -> f64,
{
    fn value(&self, x: f64) -> f64 {
        (self.f)(x)
    }
    fn derivative(&self, x: f64) -> f64 {
        (self.df)(x)
    }
    fn second_derivative(&self, x: f64) -> f64 {
        (self.d2f)(x)
    }
}

/// Wraps a dual-number closure: exact first derivative, finite-difference second.
pub struct Differentiable<F>(pub F);

impl<F: Fn(Dual<f64>) -> Dual<f64>> Smooth for Differentiable<F> {
    fn value(&self, x: f64) -> f64 {
        (self.0)(Dual::constant(x)).value
    }
    fn derivative(&self, x: f64) -> f64 {
        (self.0)(Dual::variable(x)).deriv
    }
}

/// `(𝓛f)(x) = -f'(-x) + v(x) f(x)`.
pub fn apply_l(v: &OddPotential, f: &impl Smooth, x: f64) -> Result<f64> {
    Ok(-f.derivative(-x) + v.value(x)? * f.value(x))
}

/// `(Yf)(x) = -f'(-x) + v(x) (f(x) - f(-x))`.
pub fn apply_y(v: &OddPotential, f: &impl Smooth, x: f64) -> Result<f64> {
    Ok(-f.derivative(-x) + v.value(x)? * (f.value(x) - f.value(-x)))
}

/// `(Af, A†f) = (f' + vf, -f' + vf)` at `x`.
pub fn apply_supercharge_pair(v: &OddPotential, f: &impl Smooth, x: f64) -> Result<(f64, f64)> {
    let vf = v.value(x)? * f.value(x);
    let df = f.derivative(x);
    Ok((df + vf, -df + vf))
}

/// Exact `Y p` for polynomial-preserving potentials.
pub fn apply_y_poly(v: &OddPotential, p: &DensePolynomial) -> Result<DensePolynomial> {
    let reflected_derivative = p.derivative().reflect();
    // p - Rp keeps only the odd coefficients, doubled.
    let odd2 = p.odd_part().scale(2.0);
    let mut out = &(-&reflected_derivative) + &odd2.mul_x().scale(match *v {
        OddPotential::Linear { s } | OddPotential::RadialLinear { s, .. } => s * s,
        _ => {
            return Err(Error::Unsupported(format!(
                "Y does not act on polynomials for {v:?}"
            )))
        }
    });
    if let OddPotential::RadialLinear { alpha, .. } = *v {
        out = &out - &odd2.div_x()?.scale(alpha + 0.5);
    }
    Ok(out)
}

/// `𝓛f` viewed as a function, with its derivative from the product rule:
/// `(𝓛f)'(y) = f''(-y) + v'(y) f(y) + v(y) f'(y)`.
pub struct LApplied<'a, S> {
    pub v: &'a OddPotential,
    pub f: &'a S,
}

impl<S: Smooth> Smooth for LApplied<'_, S> {
    fn value(&self, y: f64) -> f64 {
        apply_l(self.v, self.f, y).unwrap_or(f64::NAN)
    }
    fn derivative(&self, y: f64) -> f64 {
        match self.v.eval_dual(Dual::variable(y)) {
            Ok(v) => {
                self.f.second_derivative(-y) + v.deriv * self.f.value(y) + v.value * self.f.derivative(y)
            }
            Err(_) => f64::NAN,
        }
    }
}

/// `(Rf)(x) = f(-x)`.
pub struct Reflected<'a, S>(pub &'a S);

impl<S: Smooth> Smooth for Reflected<'_, S> {
    fn value(&self, x: f64) -> f64 {
        self.0.value(-x)
    }
    fn derivative(&self, x: f64) -> f64 {
        -self.0.derivative(-x)
    }
    fn second_derivative(&self, x: f64) -> f64 {
        self.0.second_derivative(-x)
    }
}

/// `({𝓛, R} f)(x) = (𝓛Rf)(x) + (𝓛f)(-x)`; vanishes for odd `v`.
pub fn anticommutator_l_r(v: &OddPotential, f: &impl Smooth, x: f64) -> Result<f64> {
    Ok(apply_l(v, &Reflected(f), x)? + apply_l(v, f, -x)?)
}

/// `(𝓛(𝓛f))(x)` by composing the operator with itself.
pub fn apply_l_twice(v: &OddPotential, f: &impl Smooth, x: f64) -> Result<f64> {
    v.guard(-x)?;
    apply_l(v, &LApplied { v, f }, x)
}

/// `(-f'' + v² f - v' Rf)(x)`.
pub fn square_rhs(v: &OddPotential, f: &impl Smooth, x: f64) -> Result<f64> {
    let vd = v.eval_dual(Dual::variable(x))?;
    Ok(-f.second_derivative(x) + vd.value * vd.value * f.value(x) - vd.deriv * f.value(-x))
}

/// Outcome of an eigenvalue check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenReport {
    pub n: i64,
    pub lambda: f64,
    /// `‖Yq - λq‖ / (max(1, |λ|) ‖q‖)` in the sup norm over coefficients or grid.
    pub residual: f64,
    pub tol: f64,
    pub pass: bool,
}

impl EigenReport {
    pub fn new(n: i64, lambda: f64, residual: f64, tol: f64) -> Self {
        EigenReport {
            n,
            lambda,
            residual,
            tol,
            pass: residual <= tol,
        }
    }
}

/// The two families whose eigen-equation `Y Q_n = λ_n Q_n` holds in polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PolynomialBinding {
    /// Weight `exp(-s²x²)`, `v = s²x`, `λ_{±n} = ±sqrt(2·2n·s²)`.
    Hermite { s: f64 },
    /// Weight `exp(-s²x²)|sx|^{2α+1}`, `v = s²x - (α+1/2)/x`, `λ_{±n} = ±sqrt(4n s²)`.
    Laguerre { s: f64, alpha: f64 },
}

impl PolynomialBinding {
    pub fn potential(&self) -> OddPotential {
        match *self {
            PolynomialBinding::Hermite { s } => OddPotential::Linear { s },
            PolynomialBinding::Laguerre { s, alpha } => OddPotential::RadialLinear { s, alpha },
        }
    }

    pub fn base(&self) -> SymmetricClassical {
        match *self {
            PolynomialBinding::Hermite { s } => SymmetricClassical::Hermite { s },
            PolynomialBinding::Laguerre { s, alpha } => SymmetricClassical::GeneralizedHermite { s, alpha },
        }
    }

    pub fn family(&self) -> Result<DunklSusyFamily> {
        DunklSusyFamily::build(MonicSymmetricSystem::from_classical(self.base())?)
    }

    /// Energy `E_k` of the underlying Hamiltonian.
    pub fn energy(&self, k: usize) -> f64 {
        match *self {
            PolynomialBinding::Hermite { s } => 2.0 * k as f64 * s * s,
            PolynomialBinding::Laguerre { s, .. } => 4.0 * k as f64 * s * s,
        }
    }

    /// `λ_n = sign(n) sqrt(E)`, with `E_{2|n|}` for Hermite and `E_{|n|}` for Laguerre.
    pub fn lambda(&self, n: i64) -> f64 {
        let m = n.unsigned_abs() as usize;
        let e = match self {
            PolynomialBinding::Hermite { .. } => self.energy(2 * m),
            PolynomialBinding::Laguerre { .. } => self.energy(m),
        };
        n.signum() as f64 * e.sqrt()
    }
}

/// Coefficient-wise check of `Y Q_n = λ_n Q_n`.
pub fn eigencheck(
    binding: &PolynomialBinding,
    family: &DunklSusyFamily,
    n: i64,
    tol: f64,
) -> Result<EigenReport> {
    let q = family.coeffs_q(n)?;
    let yq = apply_y_poly(&binding.potential(), &q)?;
    let lambda = binding.lambda(n);
    let diff = &yq - &q.scale(lambda);
    let residual = diff.max_abs_coeff() / (lambda.abs().max(1.0) * q.max_abs_coeff());
    Ok(EigenReport::new(n, lambda, residual, tol))
}

/// Pointwise check of `Y q = λ q` on a grid for `q` given as a dual closure.
pub fn eigencheck_pointwise<F>(
    v: &OddPotential,
    q: F,
    n: i64,
    lambda: f64,
    grid: &[f64],
    tol: f64,
) -> Result<EigenReport>
where
    F: Fn(Dual<f64>) -> Result<Dual<f64>>,
{
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for &x in grid {
        let here = q(Dual::constant(x))?.value;
        let there = q(Dual::variable(-x))?;
        let yq = -there.deriv + v.value(x)? * (here - there.value);
        worst = worst.max((yq - lambda * here).abs());
        scale = scale.max(here.abs());
    }
    if scale == 0.0 {
        return Err(Error::Numerical("eigenfunction vanishes on the whole grid".into()));
    }
    Ok(EigenReport::new(n, lambda, worst / (lambda.abs().max(1.0) * scale), tol))
}

/// Pointwise check of `𝓛ψ = λψ` on a grid.
pub fn l_eigencheck_pointwise<F>(
    v: &OddPotential,
    psi: F,
    n: i64,
    lambda: f64,
    grid: &[f64],
    tol: f64,
) -> Result<EigenReport>
where
    F: Fn(Dual<f64>) -> Result<Dual<f64>>,
{
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for &x in grid {
        let here = psi(Dual::constant(x))?.value;
        let there = psi(Dual::variable(-x))?;
        let lpsi = -there.deriv + v.value(x)? * here;
        worst = worst.max((lpsi - lambda * here).abs());
        scale = scale.max(here.abs());
    }
    if scale == 0.0 {
        return Err(Error::Numerical("eigenfunction vanishes on the whole grid".into()));
    }
    Ok(EigenReport::new(n, lambda, worst / (lambda.abs().max(1.0) * scale), tol))
}
