//! Gauss rules from recurrence coefficients (Golub–Welsch) and Gram-matrix
//! orthogonality reports.

use std::io::Write;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::classical::ClassicalKind;
use crate::error::{Error, Result};
use crate::family::{signed_indices, DunklSusyFamily};
use crate::symmetric::{MonicSymmetricSystem, WeightDescriptor};

/// An `order`-point Gauss rule.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// Present for rules built from a symmetric system.
    pub weight: Option<WeightDescriptor>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Sums mirrored nodes pairwise, so odd integrands give exactly zero on
    /// symmetric rules.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        let n = self.nodes.len();
        let term = |i: usize| self.weights[i] * f(self.nodes[i]);
        let mut total: f64 = (0..n / 2).map(|i| term(i) + term(n - 1 - i)).sum();
        if n % 2 == 1 {
            total += term(n / 2);
        }
        total
    }

    pub fn total_mass(&self) -> f64 {
        self.weights.iter().sum()
    }
}

/// Nodes are the eigenvalues of the Jacobi matrix with diagonal `b_0..b_{n-1}`
/// and off-diagonal `sqrt(beta_1..beta_{n-1})`. Weights use the Christoffel
/// form `w_i = 1 / Σ_k p̂_k(x_i)²` with `p̂_k` orthonormal, which keeps the
/// small weights in the tails accurate to full relative precision.
fn golub_welsch(order: usize, b: &[f64], beta: &[f64], mass: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    if order == 0 {
        return Err(Error::Numerical("quadrature order must be at least 1".into()));
    }
    let mut t = DMatrix::<f64>::zeros(order, order);
    for i in 0..order {
        t[(i, i)] = b[i];
        if i + 1 < order {
            let off = beta[i + 1].sqrt();
            t[(i, i + 1)] = off;
            t[(i + 1, i)] = off;
        }
    }
    let eig = SymmetricEigen::try_new(t, f64::EPSILON, 0)
        .ok_or_else(|| Error::Numerical("tridiagonal eigen-solver did not converge".into()))?;
    let mut nodes: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    if nodes.iter().any(|x| !x.is_finite()) {
        return Err(Error::Numerical("non-finite quadrature node".into()));
    }
    nodes.sort_by(|a, c| a.total_cmp(c));

    let weights = nodes
        .iter()
        .map(|&x| {
            let mut prev = 0.0;
            let mut cur = 1.0 / mass.sqrt();
            let mut sum = cur * cur;
            for k in 0..order - 1 {
                let next = ((x - b[k]) * cur - beta[k].sqrt() * prev) / beta[k + 1].sqrt();
                prev = cur;
                cur = next;
                sum += cur * cur;
            }
            1.0 / sum
        })
        .collect();
    Ok((nodes, weights))
}

/// Gauss rule for a symmetric system.
///
/// Classical systems with a scale `s` are built at unit scale and mapped by
/// `x -> x/s`, `w -> w/s`. Nodes are symmetrized about zero.
pub fn gauss_rule(sys: &MonicSymmetricSystem, order: usize) -> Result<QuadratureRule> {
    let (gamma, mass, scale): (Box<dyn Fn(usize) -> Result<f64>>, f64, f64) = match sys.classical() {
        Some(kind) => {
            let s = kind.scale();
            (Box::new(move |n| Ok(kind.unit_gamma(n))), kind.unit_k0(), s)
        }
        None => (Box::new(|n| sys.gamma(n)), sys.k0(), 1.0),
    };
    let mut beta = vec![0.0; order.max(1)];
    for (k, slot) in beta.iter_mut().enumerate().skip(1) {
        let g = gamma(k + 1)?;
        if !(g > 0.0) {
            return Err(Error::Positivity(format!("gamma_{} = {g} is not positive", k + 1)));
        }
        *slot = g;
    }
    beta[0] = mass;
    let b = vec![0.0; order.max(1)];
    let (mut nodes, mut weights) = golub_welsch(order, &b, &beta, mass)?;

    let n = nodes.len();
    for i in 0..n / 2 {
        let x = 0.5 * (nodes[n - 1 - i] - nodes[i]);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 0.5 * (weights[i] + weights[n - 1 - i]);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    for (x, w) in nodes.iter_mut().zip(weights.iter_mut()) {
        *x /= scale;
        *w /= scale;
    }
    Ok(QuadratureRule {
        nodes,
        weights,
        weight: Some(sys.weight().clone()),
    })
}

/// Gauss rule for a classical weight: `exp(-x²)`, `x^alpha e^{-x}` or
/// `(1-x)^alpha (1+x)^beta`.
pub fn gauss_rule_classical(kind: ClassicalKind, order: usize) -> Result<QuadratureRule> {
    let mut b = Vec::with_capacity(order);
    let mut beta = Vec::with_capacity(order);
    for k in 0..order.max(1) {
        let (bk, betak) = kind.monic_recurrence(k)?;
        b.push(bk);
        beta.push(betak);
    }
    let (nodes, weights) = golub_welsch(order, &b, &beta, beta[0])?;
    Ok(QuadratureRule {
        nodes,
        weights,
        weight: None,
    })
}

/// Normalization applied to the family before forming inner products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    Monic,
    Orthonormal,
}

/// `Q̂_n = Q_n / sqrt(h_n)`.
#[derive(Debug, Clone, Copy)]
pub struct OrthonormalView<'a> {
    family: &'a DunklSusyFamily,
}

pub fn orthonormal_view(family: &DunklSusyFamily) -> OrthonormalView<'_> {
    OrthonormalView { family }
}

impl OrthonormalView<'_> {
    pub fn eval(&self, n: i64, x: f64) -> Result<f64> {
        Ok(self.family.eval_q(n, x)? / self.family.h(n)?.sqrt())
    }

    pub fn family(&self) -> &DunklSusyFamily {
        self.family
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GramReport {
    /// Signed indices `0, 1, -1, 2, -2, …` labelling rows and columns.
    pub indices: Vec<i64>,
    pub normalization: Normalization,
    pub order: usize,
    pub matrix: Vec<Vec<f64>>,
    pub expected_diag: Vec<f64>,
    pub max_offdiag_abs: f64,
    pub max_diag_relerr: f64,
    /// `max |G_ij - δ_ij expected_i|`.
    pub max_abs_error: f64,
}

/// Smallest admissible quadrature order for `gram_matrix`.
pub fn min_gram_order(n_max: usize) -> usize {
    2 * n_max + 1
}

/// Gram matrix of `Q_{-n_max}..Q_{n_max}` under the family's weight.
///
/// Products have degree up to `4 n_max`, so an `order`-point Gauss rule is
/// exact once `2 order - 1 >= 4 n_max`.
pub fn gram_matrix(
    family: &DunklSusyFamily,
    n_max: usize,
    order: usize,
    normalization: Normalization,
) -> Result<GramReport> {
    let required = min_gram_order(n_max);
    if order < required {
        return Err(Error::Exactness { order, required });
    }
    let rule = gauss_rule(family.base(), order)?;
    let indices = signed_indices(n_max);
    let dim = indices.len();

    let norms: Vec<f64> = indices.iter().map(|&n| family.h(n)).collect::<Result<_>>()?;
    let divisor: Vec<f64> = match normalization {
        Normalization::Monic => vec![1.0; dim],
        Normalization::Orthonormal => norms.iter().map(|h| h.sqrt()).collect(),
    };
    let expected_diag: Vec<f64> = match normalization {
        Normalization::Monic => norms.clone(),
        Normalization::Orthonormal => vec![1.0; dim],
    };

    let mut values = Vec::with_capacity(rule.order());
    for &x in &rule.nodes {
        let mut row = family.eval_q_all(n_max, x)?;
        for (v, d) in row.iter_mut().zip(&divisor) {
            *v /= d;
        }
        values.push(row);
    }

    let mut matrix = vec![vec![0.0; dim]; dim];
    for i in 0..dim {
        for j in i..dim {
            let g: f64 = values
                .iter()
                .zip(&rule.weights)
                .map(|(row, w)| w * row[i] * row[j])
                .sum();
            matrix[i][j] = g;
            matrix[j][i] = g;
        }
    }

    let mut max_offdiag_abs = 0.0f64;
    let mut max_diag_relerr = 0.0f64;
    let mut max_abs_error = 0.0f64;
    for i in 0..dim {
        for j in 0..dim {
            let target = if i == j { expected_diag[i] } else { 0.0 };
            max_abs_error = max_abs_error.max((matrix[i][j] - target).abs());
            if i == j {
                max_diag_relerr = max_diag_relerr.max((matrix[i][i] - target).abs() / target);
            } else {
                max_offdiag_abs = max_offdiag_abs.max(matrix[i][j].abs());
            }
        }
    }

    Ok(GramReport {
        indices,
        normalization,
        order,
        matrix,
        expected_diag,
        max_offdiag_abs,
        max_diag_relerr,
        max_abs_error,
    })
}

impl GramReport {
    /// CSV with a header row and a leading column of signed indices.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Numerical(format!("csv output failed: {e}"));
        let mut header = vec!["index".to_string()];
        header.extend(self.indices.iter().map(|i| i.to_string()));
        w.write_record(&header).map_err(io)?;
        for (i, row) in self.indices.iter().zip(&self.matrix) {
            let mut rec = vec![i.to_string()];
            rec.extend(row.iter().map(|v| format!("{v:.16e}")));
            w.write_record(&rec).map_err(io)?;
        }
        w.flush().map_err(|e| Error::Numerical(format!("csv output failed: {e}")))?;
        Ok(())
    }

    /// Parses the output of [`GramReport::write_csv`] back into `(indices, matrix)`.
    pub fn read_csv_matrix<R: std::io::Read>(input: R) -> Result<(Vec<i64>, Vec<Vec<f64>>)> {
        let bad = |e: String| Error::Numerical(format!("malformed gram csv: {e}"));
        let mut r = csv::Reader::from_reader(input);
        let header = r.headers().map_err(|e| bad(e.to_string()))?.clone();
        let indices = header
            .iter()
            .skip(1)
            .map(|s| s.parse::<i64>().map_err(|e| bad(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let mut matrix = Vec::new();
        for rec in r.records() {
            let rec = rec.map_err(|e| bad(e.to_string()))?;
            let row = rec
                .iter()
                .skip(1)
                .map(|s| s.parse::<f64>().map_err(|e| bad(e.to_string())))
                .collect::<Result<Vec<_>>>()?;
            matrix.push(row);
        }
        Ok((indices, matrix))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetric::SymmetricClassical;
    use std::f64::consts::PI;

    fn hermite(s: f64) -> MonicSymmetricSystem {
        MonicSymmetricSystem::from_classical(SymmetricClassical::Hermite { s }).unwrap()
    }

    #[test]
    fn small_hermite_rules() {
        let r1 = gauss_rule(&hermite(1.0), 1).unwrap();
        assert_eq!(r1.nodes, vec![0.0]);
        assert!((r1.weights[0] - PI.sqrt()).abs() < 1e-15);
        let r2 = gauss_rule(&hermite(1.0), 2).unwrap();
        let h = 0.5f64.sqrt();
        assert!((r2.nodes[0] + h).abs() < 1e-15 && (r2.nodes[1] - h).abs() < 1e-15);
        for w in &r2.weights {
            assert!((w - PI.sqrt() / 2.0).abs() < 1e-15);
        }
    }

    #[test]
    fn scaled_rule_mass() {
        let r = gauss_rule(&hermite(2.0), 10).unwrap();
        assert!((r.total_mass() - PI.sqrt() / 2.0).abs() < 1e-14);
        // ∫ x² e^{-4x²} = √π / 16
        assert!((r.integrate(|x| x * x) - PI.sqrt() / 16.0).abs() < 1e-15);
    }

    #[test]
    fn classical_rule_moments() {
        // ∫_0^∞ x^k e^{-x} dx = k!
        let r = gauss_rule_classical(ClassicalKind::Laguerre { alpha: 0.0 }, 6).unwrap();
        let mut fact = 1.0;
        for k in 0..12 {
            if k > 0 {
                fact *= k as f64;
            }
            let got = r.integrate(|x| x.powi(k));
            assert!((got - fact).abs() < 1e-11 * fact, "k={k}: {got} vs {fact}");
        }
        let r = gauss_rule_classical(ClassicalKind::Jacobi { alpha: 0.0, beta: 0.0 }, 3).unwrap();
        assert!((r.integrate(|x| x.powi(4)) - 0.4).abs() < 1e-14);
    }

    #[test]
    fn order_is_enforced() {
        let fam = DunklSusyFamily::build(hermite(1.0)).unwrap();
        assert_eq!(
            gram_matrix(&fam, 3, 6, Normalization::Monic).unwrap_err(),
            Error::Exactness { order: 6, required: 7 }
        );
    }

    #[test]
    fn monic_hermite_gram() {
        let fam = DunklSusyFamily::build(hermite(1.0)).unwrap();
        let g = gram_matrix(&fam, 1, 3, Normalization::Monic).unwrap();
        assert_eq!(g.indices, vec![0, 1, -1]);
        for d in &g.expected_diag {
            assert!((d - PI.sqrt()).abs() < 1e-14);
        }
        assert!(g.max_offdiag_abs < 1e-12);
        assert!(g.max_diag_relerr < 1e-13);
    }

    #[test]
    fn csv_round_trip() {
        let fam = DunklSusyFamily::build(hermite(1.0)).unwrap();
        let g = gram_matrix(&fam, 2, 5, Normalization::Orthonormal).unwrap();
        let mut buf = Vec::new();
        g.write_csv(&mut buf).unwrap();
        let (idx, m) = GramReport::read_csv_matrix(buf.as_slice()).unwrap();
        assert_eq!(idx, g.indices);
        assert_eq!(m, g.matrix);
    }
}
