use dunkl_susy::classical::{coeffs_classical, eval_classical};
use dunkl_susy::operator::{eigencheck, PolynomialBinding};
use dunkl_susy::potentials::{
    ground_state_annihilation, intertwining_check, y_eigencheck, Level, PotentialSpec,
};
use dunkl_susy::quadrature::{gram_matrix, min_gram_order, Normalization};
use dunkl_susy::{signed_indices, Error, Result, SymmetricClassical};
use serde_json::{Map, Value};

use crate::report::{sig6, Cell, Output, Report, Table};
use crate::selector::{Selector, ENTRIES};

fn output(command: &str, params: Map<String, Value>, table: Table, max_residual: f64, pass: bool) -> Output {
    Output {
        report: Report {
            command: command.into(),
            params,
            results: table.records(),
            max_residual,
            pass,
        },
        table,
        summary: None,
        bare: false,
    }
}

fn set(params: &mut Map<String, Value>, key: &str, v: impl Into<Value>) {
    params.insert(key.into(), v.into());
}

pub fn eval(sel: &Selector, n: i64, xs: &[f64]) -> Result<Output> {
    let mut params = sel.describe();
    set(&mut params, "n", n);
    let mut table = Table::new(&["n", "x", "value"]);
    for &x in xs {
        let value = match sel {
            Selector::Susy(_) => sel.family()?.eval_q(n, x)?,
            Selector::Classical(kind) => eval_classical(*kind, non_negative(n)?, x)?,
            Selector::Potential(spec) => spec.wavefunction(non_negative(n)?, Level::Partner1, x)?,
        };
        table.push(vec![n.into(), x.into(), value.into()]);
    }
    let mut out = output("eval", params, table, 0.0, true);
    out.bare = true;
    Ok(out)
}

fn non_negative(n: i64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::Domain(format!("index must be non-negative for this family, got {n}")))
}

pub fn coeffs(sel: &Selector, n: i64) -> Result<Output> {
    let poly = match sel {
        Selector::Susy(_) => sel.family()?.coeffs_q(n)?,
        Selector::Classical(kind) => coeffs_classical(*kind, non_negative(n)?)?,
        Selector::Potential(spec) => {
            return Err(Error::Unsupported(format!(
                "{} wavefunctions are not polynomials",
                spec.name()
            )))
        }
    };
    let mut params = sel.describe();
    set(&mut params, "n", n);
    let mut table = Table::new(&["power", "coefficient"]);
    for (k, c) in poly.coeffs().iter().enumerate() {
        table.push(vec![k.into(), (*c).into()]);
    }
    Ok(output("coeffs", params, table, 0.0, true))
}

pub fn gram(sel: &Selector, n_max: usize, order: Option<usize>, normalization: Normalization, tol: f64) -> Result<Output> {
    let family = sel.family()?;
    let order = order.unwrap_or_else(|| min_gram_order(n_max));
    let g = gram_matrix(&family, n_max, order, normalization)?;

    let max_diag = g.expected_diag.iter().cloned().fold(0.0, f64::max);
    let offdiag_rel = g.max_offdiag_abs / max_diag;
    let pass = offdiag_rel <= tol && g.max_diag_relerr <= tol;

    let mut headers = vec!["index".to_string()];
    headers.extend(g.indices.iter().map(|i| i.to_string()));
    let mut table = Table {
        headers,
        rows: Vec::new(),
    };
    for (i, row) in g.indices.iter().zip(&g.matrix) {
        let mut cells = vec![Cell::Int(*i)];
        cells.extend(row.iter().map(|v| Cell::Num(*v)));
        table.rows.push(cells);
    }

    let mut params = sel.describe();
    set(&mut params, "nmax", n_max);
    set(&mut params, "order", order);
    set(&mut params, "normalization", format!("{normalization:?}").to_lowercase());
    set(&mut params, "tol", tol);
    let mut out = output("gram", params, table, offdiag_rel.max(g.max_diag_relerr), pass);
    out.report.results = vec![serde_json::to_value(&g).expect("gram report serializes")];
    out.summary = Some(format!(
        "max_offdiag={} max_diag_relerr={} {}",
        sig6(g.max_offdiag_abs),
        sig6(g.max_diag_relerr),
        verdict(pass)
    ));
    Ok(out)
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn indices(n: Option<i64>, n_max: usize) -> Vec<i64> {
    match n {
        Some(n) => vec![n],
        None => signed_indices(n_max),
    }
}

pub fn eigen(sel: &Selector, n: Option<i64>, n_max: usize, tol: Option<f64>) -> Result<Output> {
    let mut table = Table::new(&["n", "lambda", "residual", "pass"]);
    let mut worst = 0.0f64;
    let mut all = true;
    let tol = match sel {
        Selector::Susy(kind) => {
            let binding = match *kind {
                SymmetricClassical::Hermite { s } => PolynomialBinding::Hermite { s },
                SymmetricClassical::GeneralizedHermite { s, alpha } => PolynomialBinding::Laguerre { s, alpha },
                SymmetricClassical::SymmetricJacobi { .. } => {
                    return Err(Error::Unsupported(
                        "jacobi-susy has no polynomial gauge operator; check scarf1 instead".into(),
                    ))
                }
            };
            let tol = tol.unwrap_or(1e-9);
            let family = sel.family()?;
            for k in indices(n, n_max) {
                let r = eigencheck(&binding, &family, k, tol)?;
                worst = worst.max(r.residual);
                all &= r.pass;
                table.push(vec![k.into(), r.lambda.into(), r.residual.into(), r.pass.into()]);
            }
            tol
        }
        Selector::Potential(spec) => {
            let tol = tol.unwrap_or(1e-7);
            let grid = spec.default_grid();
            for k in indices(n, n_max) {
                let r = y_eigencheck(spec, k, &grid, tol)?;
                worst = worst.max(r.residual);
                all &= r.pass;
                table.push(vec![k.into(), r.lambda.into(), r.residual.into(), r.pass.into()]);
            }
            tol
        }
        Selector::Classical(_) => {
            return Err(Error::Unsupported(format!(
                "{} has no Dunkl eigen-equation; use a -susy family or a potential",
                sel.name()
            )))
        }
    };
    let mut params = sel.describe();
    match n {
        Some(n) => set(&mut params, "n", n),
        None => set(&mut params, "nmax", n_max),
    }
    set(&mut params, "tol", tol);
    let mut out = output("eigencheck", params, table, worst, all);
    out.summary = Some(format!("max_residual={} {}", sig6(worst), verdict(all)));
    Ok(out)
}

/// Tolerances for `potentials`.
pub struct PotentialTols {
    pub shape: f64,
    pub ratio: f64,
}

struct SpecReport {
    r: f64,
    shape: f64,
    energy: f64,
    ground: f64,
    spread: f64,
    c_tilde: f64,
    levels: usize,
}

fn check_spec(spec: &PotentialSpec, n_max: usize) -> Result<SpecReport> {
    let grid = spec.default_grid();
    let mut shape = 0.0f64;
    let mut r = spec.r_a1();
    for &x in &grid {
        let (res, ra) = spec.shape_invariance_residual(x)?;
        shape = shape.max(res);
        r = ra;
    }
    let mut energy = 0.0f64;
    for n in 0..=10 {
        let lhs = spec.shifted().energy(n, Level::Partner1) + spec.r_a1();
        let rhs = spec.energy(n, Level::Partner2);
        energy = energy.max((lhs - rhs).abs() / rhs.abs().max(1.0));
    }
    let ground = ground_state_annihilation(spec, &grid)?;
    let mut spread = 0.0f64;
    let mut c_tilde = 0.0f64;
    let mut levels = 0;
    for n in 1..=n_max {
        // Shallow wells run out of bound states; check the ones that exist.
        let report = match intertwining_check(spec, n, &grid, f64::INFINITY) {
            Ok(rep) => rep,
            Err(Error::Domain(_)) => break,
            Err(e) => return Err(e),
        };
        spread = spread.max(report.spread);
        let c = spec.c_tilde(n);
        let recomputed = spec.c_tilde_recomputed(n, spec.reference_point(n)?)?;
        c_tilde = c_tilde.max((recomputed - c).abs() / c.abs());
        levels = n;
    }
    Ok(SpecReport {
        r,
        shape,
        energy,
        ground,
        spread,
        c_tilde,
        levels,
    })
}

pub fn potentials(specs: &[PotentialSpec], n_max: usize, tols: &PotentialTols) -> Result<Output> {
    let mut table = Table::new(&[
        "spec",
        "R",
        "shape_residual",
        "energy_identity",
        "ground_state",
        "intertwining_spread",
        "c_tilde_diff",
        "levels",
        "pass",
    ]);
    let mut worst = 0.0f64;
    let mut all = true;
    for spec in specs {
        let rep = check_spec(spec, n_max)?;
        let pass = rep.shape <= tols.shape
            && rep.energy <= 1e-12
            && rep.ground <= 1e-10
            && rep.spread <= tols.ratio
            && rep.c_tilde <= 1e-8;
        worst = worst.max(rep.shape).max(rep.energy).max(rep.ground).max(rep.spread).max(rep.c_tilde);
        all &= pass;
        table.push(vec![
            spec.name().into(),
            rep.r.into(),
            rep.shape.into(),
            rep.energy.into(),
            rep.ground.into(),
            rep.spread.into(),
            rep.c_tilde.into(),
            rep.levels.into(),
            pass.into(),
        ]);
    }
    let mut params = Map::new();
    match specs {
        [one] => params = Selector::Potential(*one).describe(),
        _ => set(&mut params, "family", "all"),
    }
    set(&mut params, "nmax", n_max);
    set(&mut params, "tol", tols.shape);
    set(&mut params, "tol_ratio", tols.ratio);
    let mut out = output("potentials", params, table, worst, all);
    out.summary = Some(format!("max_residual={} {}", sig6(worst), verdict(all)));
    Ok(out)
}

pub fn recurrence(sel: &Selector, n_max: usize, tol: f64) -> Result<Output> {
    let family = sel.family()?;
    let generated = family.recurrence_generate(n_max)?;
    let mut table = Table::new(&["n", "diff_plus", "diff_minus"]);
    let mut worst = 0.0f64;
    for (k, (p, m)) in generated.iter().enumerate() {
        let n = k as i64 + 1;
        let dp = p.max_rel_diff(&family.coeffs_q(n)?);
        let dm = m.max_rel_diff(&family.coeffs_q(-n)?);
        worst = worst.max(dp).max(dm);
        table.push(vec![n.into(), dp.into(), dm.into()]);
    }
    let pass = worst <= tol;
    let mut params = sel.describe();
    set(&mut params, "nmax", n_max);
    set(&mut params, "tol", tol);
    let mut out = output("recurrence-check", params, table, worst, pass);
    out.summary = Some(format!("max_coefficient_diff={} {}", sig6(worst), verdict(pass)));
    Ok(out)
}

pub fn list() -> Output {
    let mut table = Table::new(&["name", "kind", "params", "description"]);
    for e in &ENTRIES {
        table.push(vec![e.name.into(), e.kind.into(), e.params.into(), e.about.into()]);
    }
    output("list", Map::new(), table, 0.0, true)
}
