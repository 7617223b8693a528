mod common;

use dunkl_susy::classical::{laguerre, norm_constant};
use dunkl_susy::quadrature::gauss_rule;
use dunkl_susy::{ClassicalKind, MonicSymmetricSystem, SymmetricClassical};
use proptest::prelude::*;

fn system(kind: SymmetricClassical) -> MonicSymmetricSystem {
    MonicSymmetricSystem::from_classical(kind).unwrap()
}

/// Inner products `∫ S_m² w` by adaptive integration.
fn oracle_norms(kind: SymmetricClassical, n_max: usize) -> Vec<f64> {
    let sys = system(kind);
    (0..=n_max)
        .map(|m| {
            let p = |x: f64| sys.eval(m, x).unwrap().powi(2);
            match kind {
                SymmetricClassical::Hermite { s } => common::gaussian_moment(&p, s, None),
                SymmetricClassical::GeneralizedHermite { s, alpha } => common::gaussian_moment(&p, s, Some(alpha)),
                SymmetricClassical::SymmetricJacobi { alpha } => common::jacobi_moment(&p, alpha),
            }
        })
        .collect()
}

const KINDS: [SymmetricClassical; 6] = [
    SymmetricClassical::Hermite { s: 1.0 },
    SymmetricClassical::Hermite { s: 2.0 },
    SymmetricClassical::GeneralizedHermite { s: 1.0, alpha: 0.5 },
    SymmetricClassical::GeneralizedHermite { s: 1.5, alpha: 1.5 },
    SymmetricClassical::SymmetricJacobi { alpha: 0.5 },
    SymmetricClassical::SymmetricJacobi { alpha: 1.0 },
];

#[test]
fn ratio_rule_against_oracle() {
    for kind in KINDS {
        let sys = system(kind);
        let oracle = oracle_norms(kind, 24);
        let norms = sys.norms(24).unwrap();
        for m in 0..=24 {
            assert!(
                (norms[m] - oracle[m]).abs() <= 1e-9 * oracle[m],
                "{kind:?} k_{m}: {} vs oracle {}",
                norms[m],
                oracle[m]
            );
            if m >= 1 {
                let ratio = oracle[m] / oracle[m - 1];
                let g = sys.gamma(m + 1).unwrap();
                assert!((ratio - g).abs() <= 1e-9 * g, "{kind:?} gamma_{}", m + 1);
            }
        }
    }
}

#[test]
fn gauss_gram_is_diagonal() {
    for kind in KINDS {
        let sys = system(kind);
        let rule = gauss_rule(&sys, 25).unwrap();
        let k = sys.norms(24).unwrap();
        let vals: Vec<Vec<f64>> = rule.nodes.iter().map(|&x| sys.eval_all(24, x).unwrap()).collect();
        for i in 0..=24 {
            for j in 0..=24 {
                let g: f64 = vals.iter().zip(&rule.weights).map(|(v, w)| w * v[i] * v[j]).sum();
                let target = if i == j { k[i] } else { 0.0 };
                assert!((g - target).abs() <= 1e-9 * (k[i] * k[j]).sqrt(), "{kind:?} ({i},{j})");
            }
        }
    }
}

#[test]
fn generalized_hermite_interleaves_laguerre() {
    // S_{2n}(x) ∝ L_n^(α)(s²x²), S_{2n+1}(x) ∝ x L_n^(α+1)(s²x²).
    let (s, alpha) = (1.3, 0.75);
    let sys = system(SymmetricClassical::GeneralizedHermite { s, alpha });
    for n in 0..6 {
        let lead = (-1.0f64).powi(n as i32) / (1..=n).map(|k| k as f64).product::<f64>() * s.powi(2 * n as i32);
        for x in [0.2, 0.9, 1.7] {
            let y = s * s * x * x;
            let even = laguerre(n, alpha, y) / lead;
            let odd = x * laguerre(n, alpha + 1.0, y) / lead;
            assert!((sys.eval(2 * n, x).unwrap() - even).abs() <= 1e-12 * even.abs().max(1.0));
            assert!((sys.eval(2 * n + 1, x).unwrap() - odd).abs() <= 1e-12 * odd.abs().max(1.0));
        }
    }
}

#[test]
fn half_integer_generalized_hermite_is_hermite() {
    let a = system(SymmetricClassical::GeneralizedHermite { s: 1.0, alpha: -0.5 });
    let b = system(SymmetricClassical::Hermite { s: 1.0 });
    for n in 1..40 {
        assert_eq!(a.gamma(n).unwrap(), b.gamma(n).unwrap());
    }
    assert!((a.k0() - b.k0()).abs() < 1e-15);
}

#[test]
fn legendre_mass_is_two() {
    let sys = system(SymmetricClassical::SymmetricJacobi { alpha: 0.0 });
    assert!((sys.k0() - 2.0).abs() < 1e-14);
    let legendre = ClassicalKind::Jacobi { alpha: 0.0, beta: 0.0 };
    assert!((sys.k0() - norm_constant(legendre, 0).unwrap()).abs() < 1e-14);
}

proptest! {
    #[test]
    fn parity_under_reflection(pick in 0usize..6, n in 0usize..=30, x in -1.0f64..1.0) {
        let sys = system(KINDS[pick]);
        let p = sys.eval(n, x).unwrap();
        let m = sys.eval(n, -x).unwrap();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((p - sign * m).abs() <= 1e-12 * p.abs().max(1.0));
    }

    #[test]
    fn custom_generator_matches_table(gs in prop::collection::vec(0.05f64..3.0, 8)) {
        let w = dunkl_susy::WeightDescriptor::new(1.0, dunkl_susy::WeightFamily::SymmetricJacobi { alpha: 0.0 }).unwrap();
        let mut table = vec![0.0];
        table.extend(gs.iter().copied());
        let t = MonicSymmetricSystem::from_gammas("table", table.clone(), 2.0, w.clone()).unwrap();
        let g = MonicSymmetricSystem::from_generator("gen", move |n| table[n - 1], 2.0, w).unwrap();
        for n in 0..=8 {
            prop_assert_eq!(t.eval(n, 0.3).unwrap(), g.eval(n, 0.3).unwrap());
        }
        prop_assert!(t.eval(10, 0.3).is_err());
    }
}
