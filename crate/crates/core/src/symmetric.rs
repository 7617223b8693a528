//! Monic symmetric orthogonal polynomial systems
//! `S_n = x S_{n-1} - gamma_n S_{n-2}`, `S_{-1} = 0`, `S_0 = 1`.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::error::{domain, Error, Result};
use crate::poly::DensePolynomial;
use crate::scalar::Field;

/// Pointwise weight; used by oracles and custom systems.
pub type WeightFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Clone)]
pub enum WeightFamily {
    /// `exp(-s² x²)` on the real line.
    GaussianEven { s: f64 },
    /// `exp(-s² x²) |s x|^(2 alpha + 1)` on the real line.
    GeneralizedHermite { s: f64, alpha: f64 },
    /// `(1 - x²)^alpha` on `(-1, 1)`; the polynomial part of the
    /// trigonometric Scarf weight after `y = sin(alpha x)`.
    SymmetricJacobi { alpha: f64 },
    Custom(WeightFn),
}

impl fmt::Debug for WeightFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightFamily::GaussianEven { s } => write!(f, "GaussianEven {{ s: {s} }}"),
            WeightFamily::GeneralizedHermite { s, alpha } => {
                write!(f, "GeneralizedHermite {{ s: {s}, alpha: {alpha} }}")
            }
            WeightFamily::SymmetricJacobi { alpha } => write!(f, "SymmetricJacobi {{ alpha: {alpha} }}"),
            WeightFamily::Custom(_) => write!(f, "Custom(..)"),
        }
    }
}

/// A weight on a symmetric interval `(-half_width, half_width)`.
#[derive(Debug, Clone)]
pub struct WeightDescriptor {
    half_width: f64,
    family: WeightFamily,
}

impl WeightDescriptor {
    pub fn new(half_width: f64, family: WeightFamily) -> Result<Self> {
        if !(half_width > 0.0) {
            return Err(domain(format!(
                "interval half-width must be positive, got {half_width}"
            )));
        }
        Ok(WeightDescriptor { half_width, family })
    }

    /// `(lower, upper)`, symmetric about zero; bounds may be infinite.
    pub fn interval(&self) -> (f64, f64) {
        (-self.half_width, self.half_width)
    }

    pub fn family(&self) -> &WeightFamily {
        &self.family
    }

    pub fn density(&self, x: f64) -> f64 {
        if x.abs() >= self.half_width {
            return 0.0;
        }
        match &self.family {
            WeightFamily::GaussianEven { s } => (-(s * x).powi(2)).exp(),
            WeightFamily::GeneralizedHermite { s, alpha } => {
                (-(s * x).powi(2)).exp() * (s * x).abs().powf(2.0 * alpha + 1.0)
            }
            WeightFamily::SymmetricJacobi { alpha } => (1.0 - x * x).powf(*alpha),
            WeightFamily::Custom(w) => w(x),
        }
    }
}

/// The symmetric systems reachable from the classical families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SymmetricClassical {
    /// Monic Hermite in `s x`, weight `exp(-s² x²)`.
    Hermite { s: f64 },
    /// Interleaved `L_n^(alpha)(s²x²)`, `x L_n^(alpha+1)(s²x²)`.
    GeneralizedHermite { s: f64, alpha: f64 },
    /// Gegenbauer: Jacobi with equal parameters.
    SymmetricJacobi { alpha: f64 },
}

impl SymmetricClassical {
    /// Jacobi with `alpha != beta` has no symmetric system; this is the
    /// checked entry point for a general pair.
    pub fn jacobi(alpha: f64, beta: f64) -> Result<Self> {
        if alpha != beta {
            return Err(domain(format!(
                "Jacobi weight with alpha != beta is not symmetric ({alpha}, {beta})"
            )));
        }
        Ok(SymmetricClassical::SymmetricJacobi { alpha })
    }

    fn validate(&self) -> Result<()> {
        let check_s = |s: f64| {
            if s.is_finite() && s > 0.0 {
                Ok(())
            } else {
                Err(domain(format!("scale s must be positive, got {s}")))
            }
        };
        let check_alpha = |a: f64| {
            if a.is_finite() && a > -1.0 {
                Ok(())
            } else {
                Err(domain(format!("alpha must exceed -1, got {a}")))
            }
        };
        match *self {
            SymmetricClassical::Hermite { s } => check_s(s),
            SymmetricClassical::GeneralizedHermite { s, alpha } => {
                check_s(s)?;
                check_alpha(alpha)
            }
            SymmetricClassical::SymmetricJacobi { alpha } => check_alpha(alpha),
        }
    }

    pub(crate) fn scale(&self) -> f64 {
        match *self {
            SymmetricClassical::Hermite { s } | SymmetricClassical::GeneralizedHermite { s, .. } => s,
            SymmetricClassical::SymmetricJacobi { .. } => 1.0,
        }
    }

    /// `gamma_n` at unit scale; `gamma_1 = 0`.
    pub(crate) fn unit_gamma(&self, n: usize) -> f64 {
        match *self {
            SymmetricClassical::Hermite { .. } => (n as f64 - 1.0) / 2.0,
            SymmetricClassical::GeneralizedHermite { alpha, .. } => {
                let m = (n / 2) as f64;
                if n % 2 == 0 {
                    m + alpha
                } else {
                    m
                }
            }
            SymmetricClassical::SymmetricJacobi { alpha } => {
                let k = n as f64 - 1.0;
                match n {
                    1 => 0.0,
                    2 => 1.0 / (2.0 * alpha + 3.0),
                    _ => k * (k + 2.0 * alpha) / ((2.0 * k + 2.0 * alpha + 1.0) * (2.0 * k + 2.0 * alpha - 1.0)),
                }
            }
        }
    }

    pub(crate) fn unit_k0(&self) -> f64 {
        match *self {
            SymmetricClassical::Hermite { .. } => PI.sqrt(),
            SymmetricClassical::GeneralizedHermite { alpha, .. } => ln_gamma(alpha + 1.0).exp(),
            SymmetricClassical::SymmetricJacobi { alpha } => {
                PI.sqrt() * (ln_gamma(alpha + 1.0) - ln_gamma(alpha + 1.5)).exp()
            }
        }
    }

    pub(crate) fn weight(&self) -> WeightDescriptor {
        let (half_width, family) = match *self {
            SymmetricClassical::Hermite { s } => (f64::INFINITY, WeightFamily::GaussianEven { s }),
            SymmetricClassical::GeneralizedHermite { s, alpha } => {
                (f64::INFINITY, WeightFamily::GeneralizedHermite { s, alpha })
            }
            SymmetricClassical::SymmetricJacobi { alpha } => {
                (1.0, WeightFamily::SymmetricJacobi { alpha })
            }
        };
        WeightDescriptor { half_width, family }
    }

    fn label(&self) -> String {
        match *self {
            SymmetricClassical::Hermite { s } => format!("hermite(s={s})"),
            SymmetricClassical::GeneralizedHermite { s, alpha } => {
                format!("generalized-hermite(s={s}, alpha={alpha})")
            }
            SymmetricClassical::SymmetricJacobi { alpha } => format!("symmetric-jacobi(alpha={alpha})"),
        }
    }
}

#[derive(Clone)]
enum GammaSupply {
    Classical(SymmetricClassical),
    /// `table[i]` is `gamma_{i+1}`.
    Table(Arc<[f64]>),
    Generator(Arc<dyn Fn(usize) -> f64 + Send + Sync>),
}

/// A symmetric monic OPS given by its recurrence coefficients, the mass
/// `k_0 = ∫ w`, and the weight it is orthogonal against.
#[derive(Clone)]
pub struct MonicSymmetricSystem {
    name: String,
    gamma: GammaSupply,
    k0: f64,
    weight: WeightDescriptor,
}

impl fmt::Debug for MonicSymmetricSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MonicSymmetricSystem")
            .field("name", &self.name)
            .field("k0", &self.k0)
            .field("weight", &self.weight)
            .finish_non_exhaustive()
    }
}

impl MonicSymmetricSystem {
    pub fn from_classical(kind: SymmetricClassical) -> Result<Self> {
        kind.validate()?;
        Ok(MonicSymmetricSystem {
            name: kind.label(),
            gamma: GammaSupply::Classical(kind),
            k0: kind.unit_k0() / kind.scale(),
            weight: kind.weight(),
        })
    }

    /// A finite table `gammas[i] = gamma_{i+1}`; indices past the end are a
    /// supply error.
    pub fn from_gammas(
        name: impl Into<String>,
        gammas: Vec<f64>,
        k0: f64,
        weight: WeightDescriptor,
    ) -> Result<Self> {
        Self::check_k0(k0)?;
        Ok(MonicSymmetricSystem {
            name: name.into(),
            gamma: GammaSupply::Table(gammas.into()),
            k0,
            weight,
        })
    }

    /// Coefficients produced on demand by `gamma(n)`, `n >= 1`.
    pub fn from_generator(
        name: impl Into<String>,
        gamma: impl Fn(usize) -> f64 + Send + Sync + 'static,
        k0: f64,
        weight: WeightDescriptor,
    ) -> Result<Self> {
        Self::check_k0(k0)?;
        Ok(MonicSymmetricSystem {
            name: name.into(),
            gamma: GammaSupply::Generator(Arc::new(gamma)),
            k0,
            weight,
        })
    }

    fn check_k0(k0: f64) -> Result<()> {
        if k0.is_finite() && k0 > 0.0 {
            Ok(())
        } else {
            Err(Error::Positivity(format!("k0 must be positive, got {k0}")))
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn k0(&self) -> f64 {
        self.k0
    }

    pub fn weight(&self) -> &WeightDescriptor {
        &self.weight
    }

    pub fn classical(&self) -> Option<SymmetricClassical> {
        match self.gamma {
            GammaSupply::Classical(kind) => Some(kind),
            _ => None,
        }
    }

    /// `gamma_n` for `n >= 1`. Values from index 2 on must be positive.
    pub fn gamma(&self, n: usize) -> Result<f64> {
        if n == 0 {
            return Err(Error::Supply { index: 0 });
        }
        let g = match &self.gamma {
            GammaSupply::Classical(kind) => {
                kind.unit_gamma(n) / kind.scale().powi(2)
            }
            GammaSupply::Table(t) => *t.get(n - 1).ok_or(Error::Supply { index: n })?,
            GammaSupply::Generator(f) => f(n),
        };
        if n >= 2 && !(g > 0.0 && g.is_finite()) {
            return Err(Error::Positivity(format!("gamma_{n} = {g} is not positive")));
        }
        Ok(g)
    }

    /// `S_n(x)`.
    pub fn eval<T: Field>(&self, n: usize, x: T) -> Result<T> {
        let mut prev = T::zero();
        let mut cur = T::one();
        for k in 1..=n {
            let next = x * cur - prev * self.gamma(k)?;
            prev = cur;
            cur = next;
        }
        Ok(cur)
    }

    /// `[S_0(x), …, S_{n_max}(x)]`.
    pub fn eval_all<T: Field>(&self, n_max: usize, x: T) -> Result<Vec<T>> {
        let mut out = Vec::with_capacity(n_max + 1);
        out.push(T::one());
        let mut prev = T::zero();
        for k in 1..=n_max {
            let cur = out[k - 1];
            out.push(x * cur - prev * self.gamma(k)?);
            prev = cur;
        }
        Ok(out)
    }

    /// `[S_0, …, S_{n_max}]` as monomial-basis polynomials.
    pub fn coeffs_all(&self, n_max: usize) -> Result<Vec<DensePolynomial>> {
        let mut out = vec![DensePolynomial::one()];
        let mut prev = DensePolynomial::zero();
        for k in 1..=n_max {
            let cur = out[k - 1].clone();
            let next = &cur.mul_x() - &prev.scale(self.gamma(k)?);
            out.push(next);
            prev = cur;
        }
        Ok(out)
    }

    pub fn coeffs(&self, n: usize) -> Result<DensePolynomial> {
        Ok(self.coeffs_all(n)?.pop().expect("non-empty"))
    }

    /// `k_0..k_{n_max}` with `k_m = gamma_{m+1} k_{m-1}`.
    pub fn norms(&self, n_max: usize) -> Result<Vec<f64>> {
        let mut k = Vec::with_capacity(n_max + 1);
        k.push(self.k0);
        for m in 1..=n_max {
            k.push(self.gamma(m + 1)? * k[m - 1]);
        }
        Ok(k)
    }
}
