//! Shape-invariant even potentials, their superpotentials and closed-form
//! spectra, and the eigenfunctions of `𝓛 = ∂R + v` assembled from them.
//!
//! Wavefunctions are unnormalized; every check here is either a residual or a
//! proportionality test.
//!
//! Potentials on a half line (the radial ones) are extended to the whole line
//! by doubling: `ψ̃_{2n}(x) = ψ_n(|x|)` and `ψ̃_{2n+1}(x) = sign(x) ψ_n(|x|)`.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::classical::{gen_binomial, hermite, jacobi_any, laguerre};
use crate::error::{domain, Error, Result};
use crate::operator::{self, EigenReport, OddPotential};
use crate::scalar::Dual;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Grid size used by the default checks.
pub const GRID_POINTS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name")]
pub enum PotentialSpec {
    #[serde(rename = "shifted-oscillator")]
    ShiftedOscillator { s: f64 },
    #[serde(rename = "scarf2")]
    ScarfII {
        #[serde(rename = "A")]
        a: f64,
        alpha: f64,
    },
    #[serde(rename = "scarf1")]
    ScarfI {
        #[serde(rename = "A")]
        a: f64,
        alpha: f64,
    },
    #[serde(rename = "3d-oscillator")]
    ThreeDOscillator { s: f64, l: f64 },
    #[serde(rename = "gen-poschl-teller")]
    GenPoschlTeller {
        #[serde(rename = "A")]
        a: f64,
        #[serde(rename = "B")]
        b: f64,
        alpha: f64,
    },
    #[serde(rename = "poschl-teller")]
    PoschlTeller {
        #[serde(rename = "A")]
        a: f64,
        #[serde(rename = "B")]
        b: f64,
        alpha: f64,
    },
}

/// `A`: the potential lives on a symmetric interval. `B`: it lives on a half
/// line and is doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Case {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Level {
    Partner1,
    Partner2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    None,
}

fn abs_dual(x: Dual<f64>) -> Dual<f64> {
    if x.value < 0.0 {
        -x
    } else {
        x
    }
}

/// Upper bound on the size of the terms in `jacobi_any(n, a, b, z)` for `|z| <= r`.
fn jacobi_term_bound(n: usize, a: f64, b: f64, r: f64) -> f64 {
    let nf = n as f64;
    let sum: f64 = (0..=n)
        .map(|k| (gen_binomial(nf + a, n - k) * gen_binomial(nf + b, k)).abs())
        .sum();
    sum * ((r + 1.0) / 2.0).powi(n as i32)
}

/// Real part of a value that is real in exact arithmetic; the imaginary part
/// must be below `1e-10` of `scale`.
fn realify(z: Dual<Complex64>, scale: f64) -> Result<Dual<f64>> {
    let bound = 1e-10 * scale.max(z.value.norm());
    if z.value.im.abs() > bound {
        return Err(Error::Numerical(format!(
            "imaginary residue {:.3e} exceeds {bound:.3e}",
            z.value.im
        )));
    }
    Ok(z.re())
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(domain(format!("{name} must be positive, got {v}")))
    }
}

impl PotentialSpec {
    /// Selector names accepted by [`PotentialSpec::from_name`].
    pub const NAMES: [&'static str; 6] = [
        "shifted-oscillator",
        "scarf2",
        "scarf1",
        "3d-oscillator",
        "gen-poschl-teller",
        "poschl-teller",
    ];

    /// Builds a spec from its selector name and the parameters it uses.
    pub fn from_name(name: &str, s: f64, a: f64, b: f64, alpha: f64, l: f64) -> Result<Self> {
        let spec = match name {
            "shifted-oscillator" => PotentialSpec::ShiftedOscillator { s },
            "scarf2" => PotentialSpec::ScarfII { a, alpha },
            "scarf1" => PotentialSpec::ScarfI { a, alpha },
            "3d-oscillator" => PotentialSpec::ThreeDOscillator { s, l },
            "gen-poschl-teller" => PotentialSpec::GenPoschlTeller { a, b, alpha },
            "poschl-teller" => PotentialSpec::PoschlTeller { a, b, alpha },
            other => return Err(domain(format!("unknown potential '{other}'"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn name(&self) -> &'static str {
        match self {
            PotentialSpec::ShiftedOscillator { .. } => Self::NAMES[0],
            PotentialSpec::ScarfII { .. } => Self::NAMES[1],
            PotentialSpec::ScarfI { .. } => Self::NAMES[2],
            PotentialSpec::ThreeDOscillator { .. } => Self::NAMES[3],
            PotentialSpec::GenPoschlTeller { .. } => Self::NAMES[4],
            PotentialSpec::PoschlTeller { .. } => Self::NAMES[5],
        }
    }

    /// One representative per potential, with parameters deep enough in the
    /// bound-state range for the first ten levels.
    pub fn catalog() -> Vec<PotentialSpec> {
        vec![
            PotentialSpec::ShiftedOscillator { s: 1.0 },
            PotentialSpec::ScarfII { a: 12.0, alpha: 1.0 },
            PotentialSpec::ScarfI { a: 2.0, alpha: 1.0 },
            PotentialSpec::ThreeDOscillator { s: 1.0, l: 1.0 },
            PotentialSpec::GenPoschlTeller { a: 6.0, b: 9.0, alpha: 1.0 },
            PotentialSpec::PoschlTeller { a: 2.0, b: 3.0, alpha: 1.0 },
        ]
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            PotentialSpec::ShiftedOscillator { s } => positive("s", s),
            PotentialSpec::ScarfII { a, alpha } | PotentialSpec::ScarfI { a, alpha } => {
                positive("A", a)?;
                positive("alpha", alpha)
            }
            PotentialSpec::ThreeDOscillator { s, l } => {
                positive("s", s)?;
                if l.is_finite() && l >= 0.0 {
                    Ok(())
                } else {
                    Err(domain(format!("l must be non-negative, got {l}")))
                }
            }
            PotentialSpec::GenPoschlTeller { a, b, alpha } => {
                positive("A", a)?;
                positive("alpha", alpha)?;
                if b > a && b.is_finite() {
                    Ok(())
                } else {
                    Err(domain(format!("generalized Pöschl-Teller needs A < B, got A={a}, B={b}")))
                }
            }
            PotentialSpec::PoschlTeller { a, b, alpha } => {
                positive("A", a)?;
                positive("B", b)?;
                positive("alpha", alpha)
            }
        }
    }

    pub fn case(&self) -> Case {
        match self {
            PotentialSpec::ShiftedOscillator { .. }
            | PotentialSpec::ScarfII { .. }
            | PotentialSpec::ScarfI { .. } => Case::A,
            _ => Case::B,
        }
    }

    /// The doubled domain is `(-half_width, half_width)`.
    pub fn half_width(&self) -> f64 {
        match *self {
            PotentialSpec::ScarfI { alpha, .. } | PotentialSpec::PoschlTeller { alpha, .. } => {
                FRAC_PI_2 / alpha
            }
            _ => f64::INFINITY,
        }
    }

    /// The translated parameter set `a2`.
    pub fn shifted(&self) -> PotentialSpec {
        match *self {
            PotentialSpec::ShiftedOscillator { s } => PotentialSpec::ShiftedOscillator { s },
            PotentialSpec::ScarfII { a, alpha } => PotentialSpec::ScarfII { a: a - alpha, alpha },
            PotentialSpec::ScarfI { a, alpha } => PotentialSpec::ScarfI { a: a + alpha, alpha },
            PotentialSpec::ThreeDOscillator { s, l } => PotentialSpec::ThreeDOscillator { s, l: l + 1.0 },
            PotentialSpec::GenPoschlTeller { a, b, alpha } => {
                PotentialSpec::GenPoschlTeller { a: a - alpha, b, alpha }
            }
            PotentialSpec::PoschlTeller { a, b, alpha } => PotentialSpec::PoschlTeller {
                a: a + alpha,
                b: b + alpha,
                alpha,
            },
        }
    }

    pub fn superpotential(&self) -> OddPotential {
        match *self {
            PotentialSpec::ShiftedOscillator { s } => OddPotential::Linear { s },
            PotentialSpec::ScarfII { a, alpha } => OddPotential::Tanh { a, alpha },
            PotentialSpec::ScarfI { a, alpha } => OddPotential::Tan { a, alpha },
            PotentialSpec::ThreeDOscillator { s, l } => OddPotential::RadialLinear { s, alpha: l + 0.5 },
            PotentialSpec::GenPoschlTeller { a, b, alpha } => OddPotential::CothCosech { a, b, alpha },
            PotentialSpec::PoschlTeller { a, b, alpha } => OddPotential::TanCot { a, b, alpha },
        }
    }

    fn check_x(&self, x: f64) -> Result<()> {
        if x.abs() < self.half_width() {
            Ok(())
        } else {
            Err(domain(format!(
                "x = {x} is outside the domain of {}",
                self.name()
            )))
        }
    }

    pub fn v(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        self.superpotential().value(x)
    }

    pub fn v_prime(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        self.superpotential().derivative(x)
    }

    /// `(V1, V2) = (v² - v', v² + v')`.
    pub fn partner_potentials(&self, x: f64) -> Result<(f64, f64)> {
        self.check_x(x)?;
        let d = self.superpotential().eval_dual(Dual::variable(x))?;
        let v2 = d.value * d.value;
        Ok((v2 - d.deriv, v2 + d.deriv))
    }

    /// `V1` written out in closed form.
    pub fn v1_closed_form(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        self.superpotential().value(x)?;
        Ok(match *self {
            PotentialSpec::ShiftedOscillator { s } => s * s * (s * s * x * x - 1.0),
            PotentialSpec::ScarfII { a, alpha } => {
                let sech = 1.0 / (alpha * x).cosh();
                a * a - a * (a + alpha) * sech * sech
            }
            PotentialSpec::ScarfI { a, alpha } => {
                let sec = 1.0 / (alpha * x).cos();
                -a * a + a * (a - alpha) * sec * sec
            }
            PotentialSpec::ThreeDOscillator { s, l } => {
                s.powi(4) * x * x + l * (l + 1.0) / (x * x) - (2.0 * l + 3.0) * s * s
            }
            PotentialSpec::GenPoschlTeller { a, b, alpha } => {
                let t = alpha * x;
                let csch = 1.0 / t.sinh();
                a * a + (b * b + a * a + a * alpha) * csch * csch
                    - b * (2.0 * a + alpha) * (t.cosh() / t.sinh()) * csch
            }
            PotentialSpec::PoschlTeller { a, b, alpha } => {
                let t = alpha * x;
                let sec = 1.0 / t.cos();
                let csc = 1.0 / t.sin();
                -(a + b).powi(2) + a * (a - alpha) * sec * sec + b * (b - alpha) * csc * csc
            }
        })
    }

    /// `R(a1)` in closed form.
    pub fn r_a1(&self) -> f64 {
        match *self {
            PotentialSpec::ShiftedOscillator { s } => 2.0 * s * s,
            PotentialSpec::ScarfII { a, alpha } | PotentialSpec::GenPoschlTeller { a, alpha, .. } => {
                a * a - (a - alpha).powi(2)
            }
            PotentialSpec::ScarfI { a, alpha } => (a + alpha).powi(2) - a * a,
            PotentialSpec::ThreeDOscillator { s, .. } => 4.0 * s * s,
            PotentialSpec::PoschlTeller { a, b, alpha } => (a + b + 2.0 * alpha).powi(2) - (a + b).powi(2),
        }
    }

    /// `(|V2(x; a1) - V1(x; a2) - R(a1)|, R(a1))`.
    pub fn shape_invariance_residual(&self, x: f64) -> Result<(f64, f64)> {
        let (_, v2) = self.partner_potentials(x)?;
        let (v1_shifted, _) = self.shifted().partner_potentials(x)?;
        let r = self.r_a1();
        Ok(((v2 - v1_shifted - r).abs(), r))
    }

    /// `E^(1)_n(a1)`; for radial potentials `n` counts radial levels.
    fn e1(&self, n: usize) -> f64 {
        let nf = n as f64;
        match *self {
            PotentialSpec::ShiftedOscillator { s } => 2.0 * nf * s * s,
            PotentialSpec::ScarfII { a, alpha } | PotentialSpec::GenPoschlTeller { a, alpha, .. } => {
                2.0 * nf * a * alpha - nf * nf * alpha * alpha
            }
            PotentialSpec::ScarfI { a, alpha } => 2.0 * nf * a * alpha + nf * nf * alpha * alpha,
            PotentialSpec::ThreeDOscillator { s, .. } => 4.0 * nf * s * s,
            PotentialSpec::PoschlTeller { a, b, alpha } => 4.0 * nf * alpha * (a + b + nf * alpha),
        }
    }

    /// Closed-form energies; `E^(2)_n = E^(1)_{n+1}`.
    pub fn energy(&self, n: usize, level: Level) -> f64 {
        match level {
            Level::Partner1 => self.e1(n),
            Level::Partner2 => self.e1(n + 1),
        }
    }

    /// Energy attached to index `k` of the whole-line eigenfunctions
    /// (`ψ^(1)_k` for case A, `ψ̃_k` for case B).
    pub fn doubled_energy(&self, k: usize) -> f64 {
        match self.case() {
            Case::A => self.e1(k),
            Case::B => self.e1(k / 2),
        }
    }

    /// Normalizable states need `n < A/alpha` for the hyperbolic potentials.
    fn check_level(&self, n: usize) -> Result<()> {
        match *self {
            PotentialSpec::ScarfII { a, alpha } | PotentialSpec::GenPoschlTeller { a, alpha, .. } => {
                if (n as f64) * alpha < a {
                    Ok(())
                } else {
                    Err(domain(format!(
                        "{} has no bound state with n = {n} (needs n < A/alpha = {})",
                        self.name(),
                        a / alpha
                    )))
                }
            }
            _ => Ok(()),
        }
    }

    /// `ψ^(1)_n(x; a1)` with its derivative. Radial potentials need `x > 0`.
    pub fn psi1_dual(&self, n: usize, x: Dual<f64>) -> Result<Dual<f64>> {
        self.check_x(x.value)?;
        self.check_level(n)?;
        if self.case() == Case::B && !(x.value > 0.0) {
            return Err(domain(format!(
                "{} is radial; x = {} must be positive",
                self.name(),
                x.value
            )));
        }
        let one = Dual::constant(1.0);
        Ok(match *self {
            PotentialSpec::ShiftedOscillator { s } => {
                let y = x * s;
                (y * y * -0.5).exp() * hermite(n, y)
            }
            PotentialSpec::ScarfII { a, alpha } => {
                let y = (x * alpha).sinh();
                let p = -a / alpha - 0.5;
                let pre = (y * y + one).powf(-a / (2.0 * alpha));
                let iy = y.to_complex().scale_complex(I);
                let z = jacobi_any(n, p, p, iy).scale_complex(I.powu(n as u32));
                let scale = jacobi_term_bound(n, p, p, y.value.abs());
                return Ok(realify(z, scale)? * pre);
            }
            PotentialSpec::ScarfI { a, alpha } => {
                let y = (x * alpha).sin();
                let p = a / alpha - 0.5;
                (one - y * y).powf(a / (2.0 * alpha)) * jacobi_any(n, p, p, y)
            }
            PotentialSpec::ThreeDOscillator { s, l } => {
                let y = x * x * (s * s);
                y.powf((l + 1.0) / 2.0) * (y * -0.5).exp() * laguerre(n, l + 0.5, y)
            }
            PotentialSpec::GenPoschlTeller { a, b, alpha } => {
                let y = (x * alpha).cosh();
                (y - one).powf((b - a) / (2.0 * alpha))
                    * (y + one).powf(-(a + b) / (2.0 * alpha))
                    * jacobi_any(n, (b - a) / alpha - 0.5, -(a + b) / alpha - 0.5, y)
            }
            PotentialSpec::PoschlTeller { a, b, alpha } => {
                let y = (x * (2.0 * alpha)).cos();
                (one - y).powf(b / (2.0 * alpha))
                    * (one + y).powf(a / (2.0 * alpha))
                    * jacobi_any(n, b / alpha - 0.5, a / alpha - 0.5, y)
            }
        })
    }

    /// Unnormalized `ψ^(1)_n` (`Partner1`) or `ψ^(2)_n ∝ ψ^(1)_n(·; a2)` (`Partner2`).
    pub fn wavefunction(&self, n: usize, level: Level, x: f64) -> Result<f64> {
        let spec = match level {
            Level::Partner1 => *self,
            Level::Partner2 => self.shifted(),
        };
        Ok(spec.psi1_dual(n, Dual::constant(x))?.value)
    }

    /// Parity of `ψ^(1)_n` on the whole line; radial functions have none.
    pub fn parity(&self, n: usize) -> Parity {
        match self.case() {
            Case::B => Parity::None,
            Case::A if n % 2 == 0 => Parity::Even,
            Case::A => Parity::Odd,
        }
    }

    /// `ψ̃_n` for radial potentials: even extension for even `n`, odd for odd `n`.
    pub fn doubled_wavefunction(&self, n: usize, x: f64) -> Result<f64> {
        if self.case() == Case::A {
            return Err(Error::Unsupported(format!(
                "{} already lives on a symmetric interval",
                self.name()
            )));
        }
        Ok(self.whole_line_dual(n, Dual::constant(x))?.value)
    }

    /// `ψ^(1)_k` (case A) or `ψ̃_k` (case B) on the whole line.
    pub fn whole_line_dual(&self, k: usize, x: Dual<f64>) -> Result<Dual<f64>> {
        match self.case() {
            Case::A => self.psi1_dual(k, x),
            Case::B => {
                let r = abs_dual(x);
                let val = self.psi1_dual(k / 2, r)?;
                Ok(if k % 2 == 1 && x.value < 0.0 { -val } else { val })
            }
        }
    }

    /// `C̃_n` in closed form.
    pub fn c_tilde(&self, n: usize) -> f64 {
        let nf = n as f64;
        match *self {
            PotentialSpec::ShiftedOscillator { .. } => 2.0 * nf.sqrt(),
            PotentialSpec::ScarfII { a, alpha } => 0.5 * ((a - nf * alpha) / (nf * alpha)).sqrt(),
            PotentialSpec::ScarfI { a, alpha } => 0.5 * ((a + nf * alpha) / (nf * alpha)).sqrt(),
            PotentialSpec::ThreeDOscillator { .. } => -1.0 / nf.sqrt(),
            PotentialSpec::GenPoschlTeller { a, alpha, .. } => {
                -0.5 * ((2.0 * a - nf * alpha) / (nf * alpha)).sqrt()
            }
            PotentialSpec::PoschlTeller { a, b, alpha } => {
                -0.5 * ((a + b + nf * alpha) / (nf * alpha)).sqrt()
            }
        }
    }

    /// `C̃_n = E_{2n}^{-1/2} (Aψ_{2n})(x; a1) / ψ_{2n-1}(x; a2)` at one point.
    pub fn c_tilde_recomputed(&self, n: usize, x: f64) -> Result<f64> {
        if n == 0 {
            return Err(domain("C̃_n is defined for n >= 1"));
        }
        let psi = self.whole_line_dual(2 * n, Dual::variable(x))?;
        let a_psi = psi.deriv + self.v(x)? * psi.value;
        let den = self.shifted().whole_line_dual(2 * n - 1, Dual::constant(x))?.value;
        if den == 0.0 {
            return Err(Error::Singular { what: "ψ_{2n-1}(x; a2)", x });
        }
        Ok(a_psi / (self.doubled_energy(2 * n).sqrt() * den))
    }

    /// The point of the default grid (x > 0) where `|ψ_{2n-1}(x; a2)|` is largest.
    pub fn reference_point(&self, n: usize) -> Result<f64> {
        let shifted = self.shifted();
        let mut best = (f64::NAN, -1.0);
        for x in self.default_grid().into_iter().filter(|&x| x > 0.0) {
            let v = shifted.whole_line_dual(2 * n - 1, Dual::constant(x))?.value.abs();
            if v > best.1 {
                best = (x, v);
            }
        }
        Ok(best.0)
    }

    /// `λ_n = sign(n) sqrt(E_{2|n|})` in whole-line indexing.
    pub fn lambda(&self, n: i64) -> f64 {
        n.signum() as f64 * self.doubled_energy(2 * n.unsigned_abs() as usize).sqrt()
    }

    /// `ψ_{±n} = ψ_{2n}(x; a1) ± C̃_n ψ_{2n-1}(x; a2)`; `n` carries the sign.
    pub fn psi_pm_dual(&self, n: i64, x: Dual<f64>) -> Result<Dual<f64>> {
        let m = n.unsigned_abs() as usize;
        let even = self.whole_line_dual(2 * m, x)?;
        if m == 0 {
            return Ok(even);
        }
        let odd = self.shifted().whole_line_dual(2 * m - 1, x)?;
        let c = n.signum() as f64 * self.c_tilde(m);
        Ok(even + odd * c)
    }

    /// `(ψ_{+n}(x), ψ_{-n}(x), λ_{+n})`.
    pub fn assemble_l_eigenfunctions(&self, n: usize, x: f64) -> Result<(f64, f64, f64)> {
        if n == 0 {
            return Err(domain("the ± pair is defined for n >= 1"));
        }
        let n = n as i64;
        Ok((
            self.psi_pm_dual(n, Dual::constant(x))?.value,
            self.psi_pm_dual(-n, Dual::constant(x))?.value,
            self.lambda(n),
        ))
    }

    /// `Q_{±n} = ψ_{±n} / ψ_0` in closed form: the polynomial (in `y(x)`)
    /// eigenfunctions of the gauge operator `Y`.
    pub fn gauge_q_dual(&self, n: i64, x: Dual<f64>) -> Result<Dual<f64>> {
        self.check_x(x.value)?;
        self.superpotential().value(x.value)?;
        let m = n.unsigned_abs() as usize;
        if m == 0 {
            return Ok(Dual::constant(1.0));
        }
        self.check_level(match self.case() {
            Case::A => 2 * m,
            Case::B => m,
        })?;
        let c = n.signum() as f64 * self.c_tilde(m);
        Ok(match *self {
            PotentialSpec::ShiftedOscillator { s } => {
                let y = x * s;
                hermite(2 * m, y) + hermite(2 * m - 1, y) * c
            }
            PotentialSpec::ScarfII { a, alpha } => {
                let t = x * alpha;
                let y = t.sinh();
                let iy = y.to_complex().scale_complex(I);
                let p = -a / alpha - 0.5;
                let even = jacobi_any(2 * m, p, p, iy);
                let odd = jacobi_any(2 * m - 1, p + 1.0, p + 1.0, iy) * t.cosh().to_complex();
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                let z = (even - odd.scale_complex(I * c)) * sign;
                let scale = jacobi_term_bound(2 * m, p, p, y.value.abs())
                    + c.abs() * t.value.cosh() * jacobi_term_bound(2 * m - 1, p + 1.0, p + 1.0, y.value.abs());
                realify(z, scale)?
            }
            PotentialSpec::ScarfI { a, alpha } => {
                let t = x * alpha;
                let y = t.sin();
                let p = a / alpha - 0.5;
                jacobi_any(2 * m, p, p, y) + t.cos() * jacobi_any(2 * m - 1, p + 1.0, p + 1.0, y) * c
            }
            PotentialSpec::ThreeDOscillator { s, l } => {
                let y = x * x * (s * s);
                laguerre(m, l + 0.5, y) + x * s * laguerre(m - 1, l + 1.5, y) * c
            }
            PotentialSpec::GenPoschlTeller { a, b, alpha } => {
                let t = x * alpha;
                let y = t.cosh();
                let (p, q) = ((b - a) / alpha - 0.5, -(a + b) / alpha - 0.5);
                jacobi_any(m, p, q, y) + t.sinh() * jacobi_any(m - 1, p + 1.0, q + 1.0, y) * c
            }
            PotentialSpec::PoschlTeller { a, b, alpha } => {
                let t = x * (2.0 * alpha);
                let y = t.cos();
                let (p, q) = (b / alpha - 0.5, a / alpha - 0.5);
                jacobi_any(m, p, q, y) + t.sin() * jacobi_any(m - 1, p + 1.0, q + 1.0, y) * c
            }
        })
    }

    /// 200 midpoints of a symmetric window, never hitting zero or a pole:
    /// `±4/s` for the oscillators, `±3/alpha` (Scarf II), `±4/alpha`
    /// (generalized Pöschl-Teller), and 95% of the interval otherwise.
    pub fn default_grid(&self) -> Vec<f64> {
        let half = match *self {
            PotentialSpec::ShiftedOscillator { s } | PotentialSpec::ThreeDOscillator { s, .. } => 4.0 / s,
            PotentialSpec::ScarfII { alpha, .. } => 3.0 / alpha,
            PotentialSpec::GenPoschlTeller { alpha, .. } => 4.0 / alpha,
            PotentialSpec::ScarfI { .. } | PotentialSpec::PoschlTeller { .. } => 0.95 * self.half_width(),
        };
        symmetric_grid(half, GRID_POINTS)
    }
}

/// `points` cell midpoints of `(-half, half)`; an even count excludes zero.
pub fn symmetric_grid(half: f64, points: usize) -> Vec<f64> {
    let h = 2.0 * half / points as f64;
    (0..points).map(|k| -half + (k as f64 + 0.5) * h).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntertwiningReport {
    pub n: usize,
    /// Mean of `Aψ_{2n}(x; a1) / ψ_{2n-1}(x; a2)` over the points used.
    pub ratio: f64,
    /// `(max - min) / |mean|` of the ratio.
    pub spread: f64,
    pub points_used: usize,
    pub tol: f64,
    pub pass: bool,
}

/// Checks that `Aψ_{2n}(·; a1)` is proportional to `ψ_{2n-1}(·; a2)`.
///
/// Points where `|ψ_{2n-1}(x; a2)|` is below `1e-3` of its grid maximum are
/// skipped so that nodes do not pollute the ratio.
pub fn intertwining_check(spec: &PotentialSpec, n: usize, grid: &[f64], tol: f64) -> Result<IntertwiningReport> {
    if n == 0 {
        return Err(domain("use ground_state_annihilation for n = 0"));
    }
    let shifted = spec.shifted();
    let mut samples = Vec::with_capacity(grid.len());
    for &x in grid {
        let psi = spec.whole_line_dual(2 * n, Dual::variable(x))?;
        let a_psi = psi.deriv + spec.v(x)? * psi.value;
        let den = shifted.whole_line_dual(2 * n - 1, Dual::constant(x))?.value;
        samples.push((a_psi, den));
    }
    let peak = samples.iter().map(|(_, d)| d.abs()).fold(0.0, f64::max);
    let ratios: Vec<f64> = samples
        .iter()
        .filter(|(_, d)| d.abs() >= 1e-3 * peak)
        .map(|(a, d)| a / d)
        .collect();
    if ratios.len() < 2 {
        return Err(Error::Numerical("degenerate grid for the intertwining ratio".into()));
    }
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    let (lo, hi) = ratios
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &r| (lo.min(r), hi.max(r)));
    let spread = (hi - lo) / mean.abs();
    Ok(IntertwiningReport {
        n,
        ratio: mean,
        spread,
        points_used: ratios.len(),
        tol,
        pass: spread <= tol,
    })
}

/// `max |Aψ_0| / max |v ψ_0|` over the grid.
pub fn ground_state_annihilation(spec: &PotentialSpec, grid: &[f64]) -> Result<f64> {
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for &x in grid {
        let psi = spec.whole_line_dual(0, Dual::variable(x))?;
        let vpsi = spec.v(x)? * psi.value;
        worst = worst.max((psi.deriv + vpsi).abs());
        scale = scale.max(vpsi.abs());
    }
    Ok(worst / scale)
}

/// `𝓛ψ_{±n} = λ_{±n} ψ_{±n}` on a grid.
pub fn l_eigencheck(spec: &PotentialSpec, n: i64, grid: &[f64], tol: f64) -> Result<EigenReport> {
    operator::l_eigencheck_pointwise(
        &spec.superpotential(),
        |x| spec.psi_pm_dual(n, x),
        n,
        spec.lambda(n),
        grid,
        tol,
    )
}

/// `Y Q_{±n} = λ_{±n} Q_{±n}` on a grid, using the closed-form `Q`.
pub fn y_eigencheck(spec: &PotentialSpec, n: i64, grid: &[f64], tol: f64) -> Result<EigenReport> {
    operator::eigencheck_pointwise(
        &spec.superpotential(),
        |x| spec.gauge_q_dual(n, x),
        n,
        spec.lambda(n),
        grid,
        tol,
    )
}
