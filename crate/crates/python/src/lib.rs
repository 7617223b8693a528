//! Python bindings, importable as `dunkl_susy`.

use dunkl_susy::classical::{self, ClassicalKind};
use dunkl_susy::operator::{self, OddPotential, PolynomialBinding};
use dunkl_susy::potentials::{self, Level, PotentialSpec};
use dunkl_susy::quadrature::{self, Normalization};
use dunkl_susy::{DensePolynomial, DunklSusyFamily, Error, MonicSymmetricSystem, SymmetricClassical, ZeroStep};
use pyo3::exceptions::{PyArithmeticError, PyNotImplementedError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Unsupported(_) => PyNotImplementedError::new_err(e.to_string()),
        Error::Numerical(_) => PyArithmeticError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

trait IntoPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for dunkl_susy::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

fn coeffs(p: &DensePolynomial) -> Vec<f64> {
    p.coeffs().to_vec()
}

fn symmetric_kind(kind: &str, s: f64, alpha: f64) -> PyResult<SymmetricClassical> {
    match kind {
        "hermite" => Ok(SymmetricClassical::Hermite { s }),
        "generalized-hermite" | "laguerre" => Ok(SymmetricClassical::GeneralizedHermite { s, alpha }),
        "symmetric-jacobi" | "jacobi" => Ok(SymmetricClassical::SymmetricJacobi { alpha }),
        other => Err(PyValueError::new_err(format!(
            "unknown kind '{other}' (expected hermite, generalized-hermite or symmetric-jacobi)"
        ))),
    }
}

fn classical_kind(kind: &str, alpha: f64, beta: Option<f64>) -> PyResult<ClassicalKind> {
    let k = match kind {
        "hermite" => ClassicalKind::Hermite,
        "laguerre" => ClassicalKind::Laguerre { alpha },
        "jacobi" => ClassicalKind::Jacobi {
            alpha,
            beta: beta.unwrap_or(alpha),
        },
        other => return Err(PyValueError::new_err(format!("unknown classical kind '{other}'"))),
    };
    k.validate().py()?;
    Ok(k)
}

fn normalization(name: &str) -> PyResult<Normalization> {
    match name {
        "monic" => Ok(Normalization::Monic),
        "orthonormal" => Ok(Normalization::Orthonormal),
        other => Err(PyValueError::new_err(format!("unknown normalization '{other}'"))),
    }
}

fn level(n: u8) -> PyResult<Level> {
    match n {
        1 => Ok(Level::Partner1),
        2 => Ok(Level::Partner2),
        _ => Err(PyValueError::new_err("level must be 1 or 2")),
    }
}

/// Monic symmetric orthogonal polynomials `S_n` of a classical weight.
#[pyclass(module = "dunkl_susy", frozen)]
struct SymmetricSystem {
    inner: MonicSymmetricSystem,
}

#[pymethods]
impl SymmetricSystem {
    #[new]
    #[pyo3(signature = (kind, s = 1.0, alpha = 0.0))]
    fn new(kind: &str, s: f64, alpha: f64) -> PyResult<Self> {
        let inner = MonicSymmetricSystem::from_classical(symmetric_kind(kind, s, alpha)?).py()?;
        Ok(SymmetricSystem { inner })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    #[getter]
    fn k0(&self) -> f64 {
        self.inner.k0()
    }

    /// Support `(lo, hi)` of the weight.
    #[getter]
    fn interval(&self) -> (f64, f64) {
        self.inner.weight().interval()
    }

    fn weight(&self, x: f64) -> f64 {
        self.inner.weight().density(x)
    }

    fn gamma(&self, n: usize) -> PyResult<f64> {
        self.inner.gamma(n).py()
    }

    fn eval(&self, n: usize, x: f64) -> PyResult<f64> {
        self.inner.eval(n, x).py()
    }

    fn coeffs(&self, n: usize) -> PyResult<Vec<f64>> {
        Ok(coeffs(&self.inner.coeffs(n).py()?))
    }

    /// `[k_0, ..., k_{n_max}]`.
    fn norms(&self, n_max: usize) -> PyResult<Vec<f64>> {
        self.inner.norms(n_max).py()
    }

    /// Gauss rule as `(nodes, weights)`.
    fn gauss_rule(&self, order: usize) -> PyResult<(Vec<f64>, Vec<f64>)> {
        let rule = quadrature::gauss_rule(&self.inner, order).py()?;
        Ok((rule.nodes, rule.weights))
    }

    fn __repr__(&self) -> String {
        format!("SymmetricSystem({})", self.inner.name())
    }
}

#[pyclass(module = "dunkl_susy", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
struct EigenReport {
    n: i64,
    lambda_: f64,
    residual: f64,
    tol: f64,
    passed: bool,
}

#[pymethods]
impl EigenReport {
    fn __repr__(&self) -> String {
        format!(
            "EigenReport(n={}, lambda={}, residual={:e}, pass={})",
            self.n, self.lambda_, self.residual, self.passed
        )
    }
}

impl From<operator::EigenReport> for EigenReport {
    fn from(r: operator::EigenReport) -> Self {
        EigenReport {
            n: r.n,
            lambda_: r.lambda,
            residual: r.residual,
            tol: r.tol,
            passed: r.pass,
        }
    }
}

#[pyclass(module = "dunkl_susy", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
struct GramReport {
    indices: Vec<i64>,
    order: usize,
    matrix: Vec<Vec<f64>>,
    expected_diag: Vec<f64>,
    max_offdiag_abs: f64,
    max_diag_relerr: f64,
    max_abs_error: f64,
}

#[pymethods]
impl GramReport {
    fn __repr__(&self) -> String {
        format!(
            "GramReport(size={}, order={}, max_offdiag_abs={:e}, max_diag_relerr={:e})",
            self.indices.len(),
            self.order,
            self.max_offdiag_abs,
            self.max_diag_relerr
        )
    }
}

impl From<quadrature::GramReport> for GramReport {
    fn from(g: quadrature::GramReport) -> Self {
        GramReport {
            indices: g.indices,
            order: g.order,
            matrix: g.matrix,
            expected_diag: g.expected_diag,
            max_offdiag_abs: g.max_offdiag_abs,
            max_diag_relerr: g.max_diag_relerr,
            max_abs_error: g.max_abs_error,
        }
    }
}

#[pyclass(module = "dunkl_susy", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
struct IntertwiningReport {
    n: usize,
    ratio: f64,
    spread: f64,
    points_used: usize,
    tol: f64,
    passed: bool,
}

#[pymethods]
impl IntertwiningReport {
    fn __repr__(&self) -> String {
        format!(
            "IntertwiningReport(n={}, ratio={}, spread={:e}, points_used={})",
            self.n, self.ratio, self.spread, self.points_used
        )
    }
}

impl From<potentials::IntertwiningReport> for IntertwiningReport {
    fn from(r: potentials::IntertwiningReport) -> Self {
        IntertwiningReport {
            n: r.n,
            ratio: r.ratio,
            spread: r.spread,
            points_used: r.points_used,
            tol: r.tol,
            passed: r.pass,
        }
    }
}

/// The family `Q_0 = 1`, `Q_{±n} = S_{2n} ± a_n S_{2n-1}`.
#[pyclass(module = "dunkl_susy", frozen)]
struct DunklFamily {
    kind: SymmetricClassical,
    inner: DunklSusyFamily,
}

#[pymethods]
impl DunklFamily {
    #[new]
    #[pyo3(signature = (kind, s = 1.0, alpha = 0.0))]
    fn new(kind: &str, s: f64, alpha: f64) -> PyResult<Self> {
        let kind = symmetric_kind(kind, s, alpha)?;
        let inner = DunklSusyFamily::build(MonicSymmetricSystem::from_classical(kind).py()?).py()?;
        Ok(DunklFamily { kind, inner })
    }

    fn base(&self) -> PyResult<SymmetricSystem> {
        Ok(SymmetricSystem {
            inner: MonicSymmetricSystem::from_classical(self.kind).py()?,
        })
    }

    /// Coupling `a_n`, `n >= 1`.
    fn a(&self, n: usize) -> PyResult<f64> {
        self.inner.a(n).py()
    }

    /// Squared norm of `Q_n`.
    fn h(&self, n: i64) -> PyResult<f64> {
        self.inner.h(n).py()
    }

    fn degree(&self, n: i64) -> usize {
        self.inner.degree(n)
    }

    fn eval(&self, n: i64, x: f64) -> PyResult<f64> {
        self.inner.eval_q(n, x).py()
    }

    /// `[Q_0, Q_1, Q_-1, ..., Q_{n_max}, Q_{-n_max}]` at `x`.
    fn eval_all(&self, n_max: usize, x: f64) -> PyResult<Vec<f64>> {
        self.inner.eval_q_all(n_max, x).py()
    }

    fn orthonormal_eval(&self, n: i64, x: f64) -> PyResult<f64> {
        quadrature::orthonormal_view(&self.inner).eval(n, x).py()
    }

    fn coeffs(&self, n: i64) -> PyResult<Vec<f64>> {
        Ok(coeffs(&self.inner.coeffs_q(n).py()?))
    }

    /// `(S_{2n}, a_n S_{2n-1})` as coefficient lists.
    fn split_even_odd(&self, n: usize) -> PyResult<(Vec<f64>, Vec<f64>)> {
        let (e, o) = self.inner.split_even_odd(n).py()?;
        Ok((coeffs(&e), coeffs(&o)))
    }

    /// One block step `(Q_n, Q_{-n}) -> (Q_{n+1}, Q_{-(n+1)})` on coefficient lists.
    fn recurrence_step(&self, n: usize, q_n: Vec<f64>, q_neg_n: Vec<f64>) -> PyResult<(Vec<f64>, Vec<f64>)> {
        let (p, m) = self
            .inner
            .recurrence_step(
                n,
                &DensePolynomial::new(q_n),
                &DensePolynomial::new(q_neg_n),
                ZeroStep::VanishingRatio,
            )
            .py()?;
        Ok((coeffs(&p), coeffs(&m)))
    }

    /// `[(Q_1, Q_-1), ..., (Q_{n_max}, Q_{-n_max})]` from the block recurrence.
    fn recurrence_generate(&self, n_max: usize) -> PyResult<Vec<(Vec<f64>, Vec<f64>)>> {
        let pairs = self.inner.recurrence_generate(n_max).py()?;
        Ok(pairs.iter().map(|(p, m)| (coeffs(p), coeffs(m))).collect())
    }

    #[pyo3(signature = (n_max, order = None, normalization = "monic"))]
    fn gram(&self, n_max: usize, order: Option<usize>, normalization: &str) -> PyResult<GramReport> {
        let order = order.unwrap_or_else(|| quadrature::min_gram_order(n_max));
        let norm = self::normalization(normalization)?;
        Ok(quadrature::gram_matrix(&self.inner, n_max, order, norm).py()?.into())
    }

    /// Checks `Y Q_n = lambda_n Q_n` coefficient by coefficient.
    #[pyo3(signature = (n, tol = 1e-9))]
    fn eigencheck(&self, n: i64, tol: f64) -> PyResult<EigenReport> {
        let binding = match self.kind {
            SymmetricClassical::Hermite { s } => PolynomialBinding::Hermite { s },
            SymmetricClassical::GeneralizedHermite { s, alpha } => PolynomialBinding::Laguerre { s, alpha },
            SymmetricClassical::SymmetricJacobi { .. } => {
                return Err(PyNotImplementedError::new_err(
                    "the Jacobi family has no polynomial gauge operator; use Potential('scarf1')",
                ))
            }
        };
        Ok(operator::eigencheck(&binding, &self.inner, n, tol).py()?.into())
    }

    fn __repr__(&self) -> String {
        format!("DunklFamily({:?})", self.kind)
    }
}

/// A shape-invariant superpotential with its Dunkl eigenfunctions.
#[pyclass(module = "dunkl_susy", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Potential {
    inner: PotentialSpec,
}

#[pymethods]
impl Potential {
    /// Unset parameters take the catalog value for `name`.
    #[new]
    #[pyo3(signature = (name, s = None, A = None, B = None, alpha = None, l = None))]
    #[allow(non_snake_case)]
    fn new(
        name: &str,
        s: Option<f64>,
        A: Option<f64>,
        B: Option<f64>,
        alpha: Option<f64>,
        l: Option<f64>,
    ) -> PyResult<Self> {
        let default = PotentialSpec::catalog()
            .into_iter()
            .find(|p| p.name() == name)
            .ok_or_else(|| {
                PyValueError::new_err(format!(
                    "unknown potential '{name}' (expected one of: {})",
                    PotentialSpec::NAMES.join(", ")
                ))
            })?;
        let inner = match default {
            PotentialSpec::ShiftedOscillator { s: s0 } => PotentialSpec::ShiftedOscillator { s: s.unwrap_or(s0) },
            PotentialSpec::ScarfII { a, alpha: al } => PotentialSpec::ScarfII {
                a: A.unwrap_or(a),
                alpha: alpha.unwrap_or(al),
            },
            PotentialSpec::ScarfI { a, alpha: al } => PotentialSpec::ScarfI {
                a: A.unwrap_or(a),
                alpha: alpha.unwrap_or(al),
            },
            PotentialSpec::ThreeDOscillator { s: s0, l: l0 } => PotentialSpec::ThreeDOscillator {
                s: s.unwrap_or(s0),
                l: l.unwrap_or(l0),
            },
            PotentialSpec::GenPoschlTeller { a, b, alpha: al } => PotentialSpec::GenPoschlTeller {
                a: A.unwrap_or(a),
                b: B.unwrap_or(b),
                alpha: alpha.unwrap_or(al),
            },
            PotentialSpec::PoschlTeller { a, b, alpha: al } => PotentialSpec::PoschlTeller {
                a: A.unwrap_or(a),
                b: B.unwrap_or(b),
                alpha: alpha.unwrap_or(al),
            },
        };
        inner.validate().py()?;
        Ok(Potential { inner })
    }

    #[staticmethod]
    fn names() -> Vec<&'static str> {
        PotentialSpec::NAMES.to_vec()
    }

    #[staticmethod]
    fn catalog() -> Vec<Potential> {
        PotentialSpec::catalog().into_iter().map(|inner| Potential { inner }).collect()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner: PotentialSpec =
            serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        inner.validate().py()?;
        Ok(Potential { inner })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("spec serializes")
    }

    #[getter]
    fn name(&self) -> &'static str {
        self.inner.name()
    }

    /// `"A"` (symmetric interval) or `"B"` (doubled half line).
    #[getter]
    fn case(&self) -> &'static str {
        match self.inner.case() {
            potentials::Case::A => "A",
            potentials::Case::B => "B",
        }
    }

    #[getter]
    fn half_width(&self) -> f64 {
        self.inner.half_width()
    }

    /// Same potential with parameters shifted `a1 -> a2`.
    fn shifted(&self) -> Potential {
        Potential {
            inner: self.inner.shifted(),
        }
    }

    fn v(&self, x: f64) -> PyResult<f64> {
        self.inner.v(x).py()
    }

    fn v_prime(&self, x: f64) -> PyResult<f64> {
        self.inner.v_prime(x).py()
    }

    /// `(V1(x), V2(x))`.
    fn partner_potentials(&self, x: f64) -> PyResult<(f64, f64)> {
        self.inner.partner_potentials(x).py()
    }

    #[getter]
    fn remainder(&self) -> f64 {
        self.inner.r_a1()
    }

    /// `(residual, R(a1))` of `V2(x; a1) = V1(x; a2) + R(a1)` at `x`.
    fn shape_invariance_residual(&self, x: f64) -> PyResult<(f64, f64)> {
        self.inner.shape_invariance_residual(x).py()
    }

    #[pyo3(signature = (n, level = 1))]
    fn energy(&self, n: usize, level: u8) -> PyResult<f64> {
        Ok(self.inner.energy(n, self::level(level)?))
    }

    #[pyo3(signature = (n, x, level = 1))]
    fn wavefunction(&self, n: usize, x: f64, level: u8) -> PyResult<f64> {
        self.inner.wavefunction(n, self::level(level)?, x).py()
    }

    fn doubled_energy(&self, k: usize) -> f64 {
        self.inner.doubled_energy(k)
    }

    fn doubled_wavefunction(&self, n: usize, x: f64) -> PyResult<f64> {
        self.inner.doubled_wavefunction(n, x).py()
    }

    fn c_tilde(&self, n: usize) -> f64 {
        self.inner.c_tilde(n)
    }

    /// `C̃_n` recomputed from the wavefunctions at `x` (default: a reference point).
    #[pyo3(signature = (n, x = None))]
    fn c_tilde_recomputed(&self, n: usize, x: Option<f64>) -> PyResult<f64> {
        let x = match x {
            Some(x) => x,
            None => self.inner.reference_point(n).py()?,
        };
        self.inner.c_tilde_recomputed(n, x).py()
    }

    /// Eigenvalue `lambda_n` of `L` and `Y`.
    fn lambda_(&self, n: i64) -> f64 {
        self.inner.lambda(n)
    }

    /// `(psi_0, psi_+n, psi_-n)` at `x`.
    fn eigenfunctions(&self, n: usize, x: f64) -> PyResult<(f64, f64, f64)> {
        self.inner.assemble_l_eigenfunctions(n, x).py()
    }

    fn default_grid(&self) -> Vec<f64> {
        self.inner.default_grid()
    }

    #[pyo3(signature = (n, grid = None, tol = 1e-7))]
    fn intertwining(&self, n: usize, grid: Option<Vec<f64>>, tol: f64) -> PyResult<IntertwiningReport> {
        let grid = grid.unwrap_or_else(|| self.inner.default_grid());
        Ok(potentials::intertwining_check(&self.inner, n, &grid, tol).py()?.into())
    }

    /// `max |A psi_0| / max |v psi_0|` over the grid.
    #[pyo3(signature = (grid = None))]
    fn ground_state_annihilation(&self, grid: Option<Vec<f64>>) -> PyResult<f64> {
        let grid = grid.unwrap_or_else(|| self.inner.default_grid());
        potentials::ground_state_annihilation(&self.inner, &grid).py()
    }

    #[pyo3(signature = (n, grid = None, tol = 1e-7))]
    fn l_eigencheck(&self, n: i64, grid: Option<Vec<f64>>, tol: f64) -> PyResult<EigenReport> {
        let grid = grid.unwrap_or_else(|| self.inner.default_grid());
        Ok(potentials::l_eigencheck(&self.inner, n, &grid, tol).py()?.into())
    }

    #[pyo3(signature = (n, grid = None, tol = 1e-7))]
    fn y_eigencheck(&self, n: i64, grid: Option<Vec<f64>>, tol: f64) -> PyResult<EigenReport> {
        let grid = grid.unwrap_or_else(|| self.inner.default_grid());
        Ok(potentials::y_eigencheck(&self.inner, n, &grid, tol).py()?.into())
    }

    fn __repr__(&self) -> String {
        format!("Potential({})", self.to_json())
    }

    fn __eq__(&self, other: &Potential) -> bool {
        self.inner == other.inner
    }
}

#[pyfunction]
#[pyo3(signature = (kind, n, x, alpha = 0.0, beta = None))]
fn eval_classical(kind: &str, n: usize, x: f64, alpha: f64, beta: Option<f64>) -> PyResult<f64> {
    classical::eval_classical(classical_kind(kind, alpha, beta)?, n, x).py()
}

#[pyfunction]
#[pyo3(signature = (kind, n, alpha = 0.0, beta = None))]
fn coeffs_classical(kind: &str, n: usize, alpha: f64, beta: Option<f64>) -> PyResult<Vec<f64>> {
    Ok(coeffs(&classical::coeffs_classical(classical_kind(kind, alpha, beta)?, n).py()?))
}

#[pyfunction]
#[pyo3(signature = (kind, n, alpha = 0.0, beta = None))]
fn norm_constant(kind: &str, n: usize, alpha: f64, beta: Option<f64>) -> PyResult<f64> {
    classical::norm_constant(classical_kind(kind, alpha, beta)?, n).py()
}

/// Both sides of the Hermite-Laguerre relations at `(n, x)`.
#[pyfunction]
fn hermite_laguerre_identity_check(n: usize, x: f64) -> (f64, f64) {
    classical::hermite_laguerre_identity_check(n, x)
}

/// `[0, 1, -1, 2, -2, ..., n_max, -n_max]`.
#[pyfunction]
fn signed_indices(n_max: usize) -> Vec<i64> {
    dunkl_susy::signed_indices(n_max)
}

/// `Y p` for `v = s²x`, or `v = s²x - (alpha + 1/2)/x` when `alpha` is given.
#[pyfunction]
#[pyo3(signature = (coeffs, s = 1.0, alpha = None))]
fn apply_y_poly(coeffs: Vec<f64>, s: f64, alpha: Option<f64>) -> PyResult<Vec<f64>> {
    let v = match alpha {
        None => OddPotential::Linear { s },
        Some(alpha) => OddPotential::RadialLinear { s, alpha },
    };
    Ok(self::coeffs(&operator::apply_y_poly(&v, &DensePolynomial::new(coeffs)).py()?))
}

#[pymodule]
#[pyo3(name = "dunkl_susy")]
pub fn init(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<SymmetricSystem>()?;
    m.add_class::<DunklFamily>()?;
    m.add_class::<Potential>()?;
    m.add_class::<EigenReport>()?;
    m.add_class::<GramReport>()?;
    m.add_class::<IntertwiningReport>()?;
    m.add_function(wrap_pyfunction!(eval_classical, m)?)?;
    m.add_function(wrap_pyfunction!(coeffs_classical, m)?)?;
    m.add_function(wrap_pyfunction!(norm_constant, m)?)?;
    m.add_function(wrap_pyfunction!(hermite_laguerre_identity_check, m)?)?;
    m.add_function(wrap_pyfunction!(signed_indices, m)?)?;
    m.add_function(wrap_pyfunction!(apply_y_poly, m)?)?;
    Ok(())
}
