//! Dunkl-SUSY orthogonal polynomials built from a monic symmetric system:
//!
//! ```text
//! Q_0 = 1,   Q_{±n} = S_{2n} ± a_n S_{2n-1},   a_n = sqrt(k_{2n} / k_{2n-1}),
//! h_0 = k_0, h_{±n} = 2 k_{2n}.
//! ```
//!
//! `Q_{-n}(x) = Q_n(-x)`, and the family is orthogonal over all signed indices.

use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::poly::DensePolynomial;
use crate::scalar::Field;
use crate::symmetric::MonicSymmetricSystem;

/// How [`DunklSusyFamily::recurrence_step`] treats `n = 0`, where the block
/// recurrence would need the undefined coupling `a_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroStep {
    /// Reject `n = 0`; callers seed at `n = 1` from the direct construction.
    Refuse,
    /// Treat `gamma_1 / a_0` as zero. With `Q_0 = Q_{-0} = 1` this reproduces
    /// `Q_{±1} = S_2 ± a_1 S_1`.
    VanishingRatio,
}

#[derive(Debug, Default)]
struct Cache {
    /// `k_0..k_{len-1}` of the base system.
    k: Vec<f64>,
    /// `a[m]` is `a_m`; `a[0]` is a placeholder.
    a: Vec<f64>,
}

/// The doubly-indexed family `{Q_n}_{n ∈ ℤ}`.
///
/// Couplings and norms are materialized lazily behind a lock: readers of
/// indices that already exist share the lock, extension takes it exclusively.
#[derive(Debug)]
pub struct DunklSusyFamily {
    base: MonicSymmetricSystem,
    cache: RwLock<Cache>,
}

impl Clone for DunklSusyFamily {
    fn clone(&self) -> Self {
        let cache = self.cache.read().expect("family cache poisoned");
        DunklSusyFamily {
            base: self.base.clone(),
            cache: RwLock::new(Cache {
                k: cache.k.clone(),
                a: cache.a.clone(),
            }),
        }
    }
}

/// Signed indices in the family's natural order `0, 1, -1, 2, -2, …`.
pub fn signed_indices(n_max: usize) -> Vec<i64> {
    let mut out = vec![0];
    for n in 1..=n_max as i64 {
        out.push(n);
        out.push(-n);
    }
    out
}

impl DunklSusyFamily {
    pub fn build(base: MonicSymmetricSystem) -> Result<Self> {
        let fam = DunklSusyFamily {
            cache: RwLock::new(Cache {
                k: vec![base.k0()],
                a: vec![f64::NAN],
            }),
            base,
        };
        fam.ensure(1)?;
        Ok(fam)
    }

    pub fn base(&self) -> &MonicSymmetricSystem {
        &self.base
    }

    /// Materializes `a_1..a_n` and `k_0..k_{2n}`.
    pub fn ensure(&self, n: usize) -> Result<()> {
        if self.cache.read().expect("family cache poisoned").a.len() > n {
            return Ok(());
        }
        let mut cache = self.cache.write().expect("family cache poisoned");
        while cache.k.len() <= 2 * n {
            let m = cache.k.len();
            let next = self.base.gamma(m + 1)? * cache.k[m - 1];
            cache.k.push(next);
        }
        while cache.a.len() <= n {
            let m = cache.a.len();
            let ratio = cache.k[2 * m] / cache.k[2 * m - 1];
            if !(ratio > 0.0 && ratio.is_finite()) {
                return Err(Error::Positivity(format!(
                    "k_{}/k_{} = {ratio} is not positive",
                    2 * m,
                    2 * m - 1
                )));
            }
            cache.a.push(ratio.sqrt());
        }
        Ok(())
    }

    /// `a_n`, `n >= 1`.
    pub fn a(&self, n: usize) -> Result<f64> {
        if n == 0 {
            return Err(Error::Consistency("a_0 is not defined".into()));
        }
        self.ensure(n)?;
        Ok(self.cache.read().expect("family cache poisoned").a[n])
    }

    /// Norm `k_m` of the base system.
    pub fn k(&self, m: usize) -> Result<f64> {
        self.ensure(m.div_ceil(2))?;
        Ok(self.cache.read().expect("family cache poisoned").k[m])
    }

    /// `h_n = ∫ Q_n² w`: `k_0` for `n = 0`, `2 k_{2|n|}` otherwise.
    pub fn h(&self, n: i64) -> Result<f64> {
        let m = n.unsigned_abs() as usize;
        if m == 0 {
            return Ok(self.base.k0());
        }
        Ok(2.0 * self.k(2 * m)?)
    }

    /// The same norm assembled as `k_{2n} + a_n² k_{2n-1}`.
    pub fn h_from_components(&self, n: i64) -> Result<f64> {
        let m = n.unsigned_abs() as usize;
        if m == 0 {
            return Ok(self.base.k0());
        }
        let a = self.a(m)?;
        Ok(self.k(2 * m)? + a * a * self.k(2 * m - 1)?)
    }

    pub fn degree(&self, n: i64) -> usize {
        2 * n.unsigned_abs() as usize
    }

    /// `Q_n(x)` for any signed `n`.
    pub fn eval_q<T: Field>(&self, n: i64, x: T) -> Result<T> {
        let m = n.unsigned_abs() as usize;
        if m == 0 {
            return Ok(T::one());
        }
        let a = self.a(m)?;
        let s = self.base.eval_all(2 * m, x)?;
        let odd = s[2 * m - 1] * a;
        Ok(if n > 0 { s[2 * m] + odd } else { s[2 * m] - odd })
    }

    /// Values of `Q_{i}` at `x` for every `i` in `signed_indices(n_max)`.
    pub fn eval_q_all(&self, n_max: usize, x: f64) -> Result<Vec<f64>> {
        self.ensure(n_max)?;
        let s = self.base.eval_all(2 * n_max, x)?;
        let cache = self.cache.read().expect("family cache poisoned");
        let mut out = Vec::with_capacity(2 * n_max + 1);
        out.push(1.0);
        for m in 1..=n_max {
            let odd = cache.a[m] * s[2 * m - 1];
            out.push(s[2 * m] + odd);
            out.push(s[2 * m] - odd);
        }
        Ok(out)
    }

    /// Monomial coefficients of `Q_n`; degree `2|n|`.
    pub fn coeffs_q(&self, n: i64) -> Result<DensePolynomial> {
        let m = n.unsigned_abs() as usize;
        if m == 0 {
            return Ok(DensePolynomial::one());
        }
        let a = self.a(m)?;
        let s = self.base.coeffs_all(2 * m)?;
        let odd = s[2 * m - 1].scale(if n > 0 { a } else { -a });
        Ok(&s[2 * m] + &odd)
    }

    /// Recovers `(S_{2n}, S_{2n-1})` from `Q_{±n}`:
    /// `S_{2n} = (Q_n + Q_{-n})/2`, `S_{2n-1} = (Q_n - Q_{-n})/(2 a_n)`.
    pub fn split_even_odd(&self, n: usize) -> Result<(DensePolynomial, DensePolynomial)> {
        if n == 0 {
            return Err(Error::Consistency("split_even_odd needs n >= 1".into()));
        }
        let plus = self.coeffs_q(n as i64)?;
        let minus = self.coeffs_q(-(n as i64))?;
        let a = self.a(n)?;
        Ok(((&plus + &minus).scale(0.5), (&plus - &minus).scale(0.5 / a)))
    }

    /// One step of the block recurrence: `(Q_n, Q_{-n}) -> (Q_{n+1}, Q_{-(n+1)})`.
    ///
    /// With `r = gamma_{2n+1}/a_n`, `a = a_{n+1}`, `g = gamma_{2n+2}`:
    ///
    /// ```text
    /// 2 Q_{n+1}    = [x² + (a - r)x - g - r a] Q_n + [x² + (a + r)x - g + r a] Q_{-n}
    /// 2 Q_{-(n+1)} = [x² - (a + r)x - g + r a] Q_n + [x² - (a - r)x - g - r a] Q_{-n}
    /// ```
    pub fn recurrence_step(
        &self,
        n: usize,
        q_n: &DensePolynomial,
        q_neg_n: &DensePolynomial,
        zero: ZeroStep,
    ) -> Result<(DensePolynomial, DensePolynomial)> {
        self.check_pair(n, q_n, q_neg_n)?;
        let ratio = if n == 0 {
            match zero {
                ZeroStep::Refuse => {
                    return Err(Error::Consistency(
                        "the block recurrence starts at n = 1 (a_0 is undefined)".into(),
                    ))
                }
                ZeroStep::VanishingRatio => 0.0,
            }
        } else {
            self.base.gamma(2 * n + 1)? / self.a(n)?
        };
        let a = self.a(n + 1)?;
        let g = self.base.gamma(2 * n + 2)?;
        let quad = |lin: f64, c: f64| DensePolynomial::new(vec![0.5 * c, 0.5 * lin, 0.5]);

        let plus_from_pos = quad(a - ratio, -g - ratio * a);
        let plus_from_neg = quad(a + ratio, -g + ratio * a);
        let minus_from_pos = quad(-(a + ratio), -g + ratio * a);
        let minus_from_neg = quad(-(a - ratio), -g - ratio * a);

        let next_plus = &(&plus_from_pos * q_n) + &(&plus_from_neg * q_neg_n);
        let next_minus = &(&minus_from_pos * q_n) + &(&minus_from_neg * q_neg_n);
        Ok((next_plus, next_minus))
    }

    fn check_pair(&self, n: usize, q_n: &DensePolynomial, q_neg_n: &DensePolynomial) -> Result<()> {
        let want = 2 * n;
        for (label, q) in [("Q_n", q_n), ("Q_-n", q_neg_n)] {
            if q.degree() != Some(want) {
                return Err(Error::Consistency(format!(
                    "{label} has degree {:?}, expected {want}",
                    q.degree()
                )));
            }
            let lead = q.leading().unwrap_or(0.0);
            if (lead - 1.0).abs() > 1e-12 {
                return Err(Error::Consistency(format!("{label} is not monic (leading {lead})")));
            }
        }
        let mismatch = q_n.reflect().max_rel_diff(q_neg_n);
        if mismatch > 1e-9 {
            return Err(Error::Consistency(format!(
                "Q_-n is not the reflection of Q_n (relative mismatch {mismatch:.3e})"
            )));
        }
        Ok(())
    }

    /// `(Q_n, Q_{-n})` for `n = 1..=n_max` generated by the block recurrence,
    /// seeded with the directly constructed `Q_{±1}`.
    pub fn recurrence_generate(&self, n_max: usize) -> Result<Vec<(DensePolynomial, DensePolynomial)>> {
        let mut out = Vec::with_capacity(n_max);
        if n_max == 0 {
            return Ok(out);
        }
        out.push((self.coeffs_q(1)?, self.coeffs_q(-1)?));
        for n in 1..n_max {
            let (p, m) = &out[n - 1];
            let next = self.recurrence_step(n, p, m, ZeroStep::Refuse)?;
            out.push(next);
        }
        Ok(out)
    }
}
