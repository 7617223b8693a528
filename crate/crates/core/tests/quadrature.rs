use std::f64::consts::PI;

use dunkl_susy::classical::hermite;
use dunkl_susy::quadrature::{
    gauss_rule, gauss_rule_classical, gram_matrix, min_gram_order, orthonormal_view, GramReport, Normalization,
};
use dunkl_susy::{ClassicalKind, DunklSusyFamily, Error, MonicSymmetricSystem, SymmetricClassical};
use proptest::prelude::*;
use statrs::function::gamma::{gamma, ln_gamma};

fn system(kind: SymmetricClassical) -> MonicSymmetricSystem {
    MonicSymmetricSystem::from_classical(kind).unwrap()
}

fn family(kind: SymmetricClassical) -> DunklSusyFamily {
    DunklSusyFamily::build(system(kind)).unwrap()
}

/// `∫ x^j w(x) dx` in closed form (Gamma and Beta functions).
fn moment(kind: SymmetricClassical, j: usize) -> f64 {
    if j % 2 == 1 {
        return 0.0;
    }
    let k = (j / 2) as f64;
    match kind {
        SymmetricClassical::Hermite { s } => gamma(k + 0.5) / s.powi(j as i32 + 1),
        SymmetricClassical::GeneralizedHermite { s, alpha } => gamma(k + alpha + 1.0) / s.powi(j as i32 + 1),
        SymmetricClassical::SymmetricJacobi { alpha } => {
            (ln_gamma(k + 0.5) + ln_gamma(alpha + 1.0) - ln_gamma(k + alpha + 1.5)).exp()
        }
    }
}

const KINDS: [SymmetricClassical; 6] = [
    SymmetricClassical::Hermite { s: 1.0 },
    SymmetricClassical::Hermite { s: 1.75 },
    SymmetricClassical::GeneralizedHermite { s: 1.0, alpha: 0.5 },
    SymmetricClassical::GeneralizedHermite { s: 0.8, alpha: 1.5 },
    SymmetricClassical::SymmetricJacobi { alpha: 0.0 },
    SymmetricClassical::SymmetricJacobi { alpha: 1.5 },
];

#[test]
fn small_hermite_rules() {
    let sys = system(SymmetricClassical::Hermite { s: 1.0 });
    let r1 = gauss_rule(&sys, 1).unwrap();
    assert_eq!(r1.nodes, vec![0.0]);
    assert!((r1.weights[0] - PI.sqrt()).abs() < 1e-15);
    let r2 = gauss_rule(&sys, 2).unwrap();
    let h = 0.5f64.sqrt();
    assert!((r2.nodes[0] + h).abs() < 1e-15 && (r2.nodes[1] - h).abs() < 1e-15);
    for w in &r2.weights {
        assert!((w - PI.sqrt() / 2.0).abs() < 1e-15);
    }
    assert!(gauss_rule(&sys, 0).is_err());
}

#[test]
fn monomial_exactness() {
    for kind in KINDS {
        let sys = system(kind);
        for order in [1, 4, 9, 16] {
            let rule = gauss_rule(&sys, order).unwrap();
            for j in 0..=(2 * order - 1) {
                let q = rule.integrate(|x| x.powi(j as i32));
                let m = moment(kind, j);
                if j % 2 == 1 {
                    assert_eq!(q, 0.0, "{kind:?} order {order} odd moment {j}");
                } else {
                    assert!((q - m).abs() <= 1e-11 * m, "{kind:?} order {order} moment {j}: {q} vs {m}");
                }
            }
        }
    }
}

#[test]
fn mass_and_symmetry() {
    for kind in KINDS {
        let sys = system(kind);
        for order in [3, 10, 25] {
            let rule = gauss_rule(&sys, order).unwrap();
            assert!((rule.total_mass() - sys.k0()).abs() <= 1e-11 * sys.k0());
            assert!(rule.nodes.windows(2).all(|w| w[0] < w[1]));
            for (a, b) in rule.nodes.iter().zip(rule.nodes.iter().rev()) {
                assert!((a + b).abs() <= 1e-12);
            }
            assert!(rule.weights.iter().all(|&w| w > 0.0));
        }
    }
}

#[test]
fn classical_rules() {
    let lag = gauss_rule_classical(ClassicalKind::Laguerre { alpha: 0.5 }, 8).unwrap();
    for j in 0..16 {
        let want = gamma(j as f64 + 1.5);
        let got = lag.integrate(|x| x.powi(j));
        assert!((got - want).abs() <= 1e-11 * want, "moment {j}");
    }
    let jac = gauss_rule_classical(ClassicalKind::Jacobi { alpha: 1.0, beta: 0.0 }, 6).unwrap();
    // ∫_{-1}^{1} (1 - x) dx = 2
    assert!((jac.total_mass() - 2.0).abs() < 1e-13);
}

#[test]
fn gram_examples() {
    let fam = family(SymmetricClassical::Hermite { s: 1.0 });
    let g = gram_matrix(&fam, 1, 3, Normalization::Monic).unwrap();
    assert_eq!(g.indices, vec![0, 1, -1]);
    for i in 0..3 {
        assert!((g.matrix[i][i] - PI.sqrt()).abs() <= 1e-12);
        assert!((g.expected_diag[i] - PI.sqrt()).abs() <= 1e-12);
    }
    assert!(g.max_offdiag_abs <= 1e-12);

    let g = gram_matrix(&fam, 3, min_gram_order(3), Normalization::Orthonormal).unwrap();
    assert!(g.max_abs_error <= 1e-10);

    assert!(matches!(
        gram_matrix(&fam, 4, 8, Normalization::Monic),
        Err(Error::Exactness { order: 8, required: 9 })
    ));
}

#[test]
fn gram_is_diagonal_for_all_bases() {
    for kind in KINDS {
        let fam = family(kind);
        let g = gram_matrix(&fam, 12, 25, Normalization::Monic).unwrap();
        let max_diag = g.expected_diag.iter().cloned().fold(0.0, f64::max);
        for i in 0..g.matrix.len() {
            for j in 0..g.matrix.len() {
                assert_eq!(g.matrix[i][j], g.matrix[j][i]);
            }
        }
        assert!(g.max_offdiag_abs <= 1e-9 * max_diag, "{kind:?}");
        assert!(g.max_diag_relerr <= 1e-9, "{kind:?}");
    }
}

#[test]
fn orthonormal_view_matches_normalized_hermite() {
    let hat = |k: usize, y: f64| {
        let norm = (k as f64 * 2f64.ln() + ln_gamma(k as f64 + 1.0) + 0.5 * PI.ln()).exp().sqrt();
        hermite::<f64>(k, y) / norm
    };
    for s in [1.0, 1.5] {
        let fam = family(SymmetricClassical::Hermite { s });
        let view = orthonormal_view(&fam);
        assert!((view.eval(0, 0.3).unwrap() - fam.base().k0().powf(-0.5)).abs() < 1e-15);
        for n in 1..=8i64 {
            for x in [-2.0, -0.4, 0.0, 0.7, 1.9] {
                let m = 2 * n as usize;
                let (e, o) = (hat(m, s * x), hat(m - 1, s * x));
                let plus = s.sqrt() * (e + o) / 2f64.sqrt();
                let minus = s.sqrt() * (e - o) / 2f64.sqrt();
                assert!((view.eval(n, x).unwrap() - plus).abs() <= 1e-10, "s={s} n={n} x={x}");
                assert!((view.eval(-n, x).unwrap() - minus).abs() <= 1e-10, "s={s} n=-{n} x={x}");
            }
        }
    }
    let fam = family(SymmetricClassical::Hermite { s: 1.0 });
    let want = (-2.0 / (8.0 * PI.sqrt()).sqrt()) / 2f64.sqrt();
    assert!((orthonormal_view(&fam).eval(1, 0.0).unwrap() - want).abs() < 1e-15);

    let g = gram_matrix(&fam, 8, 17, Normalization::Orthonormal).unwrap();
    for i in 0..g.matrix.len() {
        assert!((g.matrix[i][i] - 1.0).abs() <= 1e-10);
    }
}

#[test]
fn laguerre_family_gram() {
    for alpha in [-0.5, 0.0, 1.5] {
        let fam = family(SymmetricClassical::GeneralizedHermite { s: 1.25, alpha });
        let g = gram_matrix(&fam, 10, 21, Normalization::Orthonormal).unwrap();
        assert!(g.max_abs_error <= 1e-9, "alpha={alpha}: {}", g.max_abs_error);
    }
}

#[test]
fn report_serialization() {
    let fam = family(SymmetricClassical::SymmetricJacobi { alpha: 0.5 });
    let g = gram_matrix(&fam, 3, 7, Normalization::Monic).unwrap();

    let text = serde_json::to_string(&g).unwrap();
    let back: GramReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, g);

    let mut buf = Vec::new();
    g.write_csv(&mut buf).unwrap();
    let csv = String::from_utf8(buf.clone()).unwrap();
    assert!(csv.starts_with("index,0,1,-1,2,-2,3,-3"));
    let (indices, matrix) = GramReport::read_csv_matrix(buf.as_slice()).unwrap();
    assert_eq!(indices, g.indices);
    assert_eq!(matrix, g.matrix);
}

proptest! {
    #[test]
    fn random_polynomial_exactness(pick in 0usize..6, order in 2usize..14, c in prop::collection::vec(-1.0f64..1.0, 28)) {
        let kind = KINDS[pick];
        let rule = gauss_rule(&system(kind), order).unwrap();
        let deg = 2 * order - 1;
        let p = |x: f64| c[..=deg].iter().rev().fold(0.0, |acc, a| acc * x + a);
        let exact: f64 = c[..=deg].iter().enumerate().map(|(j, a)| a * moment(kind, j)).sum();
        let scale: f64 = c[..=deg].iter().enumerate().map(|(j, a)| (a * moment(kind, j)).abs()).sum();
        prop_assert!((rule.integrate(p) - exact).abs() <= 1e-11 * scale);
    }
}
