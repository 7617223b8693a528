mod common;

use dunkl_susy::quadrature::{gram_matrix, Normalization};
use dunkl_susy::{DensePolynomial, DunklSusyFamily, Error, MonicSymmetricSystem, SymmetricClassical, ZeroStep};
use proptest::prelude::*;

fn family(kind: SymmetricClassical) -> DunklSusyFamily {
    DunklSusyFamily::build(MonicSymmetricSystem::from_classical(kind).unwrap()).unwrap()
}

fn bases() -> Vec<SymmetricClassical> {
    vec![
        SymmetricClassical::Hermite { s: 1.0 },
        SymmetricClassical::Hermite { s: 0.75 },
        SymmetricClassical::GeneralizedHermite { s: 1.0, alpha: 1.5 },
        SymmetricClassical::GeneralizedHermite { s: 2.0, alpha: -0.25 },
        SymmetricClassical::SymmetricJacobi { alpha: 0.5 },
        SymmetricClassical::SymmetricJacobi { alpha: 2.0 },
    ]
}

#[test]
fn hermite_examples() {
    let fam = family(SymmetricClassical::Hermite { s: 1.0 });
    for n in 1..=10 {
        assert!((fam.a(n).unwrap() - (n as f64).sqrt()).abs() < 1e-13, "a_{n}");
    }
    assert_eq!(fam.eval_q(0, 0.3).unwrap(), 1.0);
    assert!((fam.eval_q(1, 0.5).unwrap() - 0.25).abs() < 1e-15);
    assert!((fam.eval_q(-1, 0.5).unwrap() + 0.75).abs() < 1e-15);
    assert_eq!(fam.coeffs_q(0).unwrap().coeffs(), &[1.0]);
    assert_eq!(fam.coeffs_q(1).unwrap().coeffs(), &[-0.5, 1.0, 1.0]);
    assert_eq!(fam.coeffs_q(-1).unwrap().coeffs(), &[-0.5, -1.0, 1.0]);

    let (even, odd) = fam.split_even_odd(1).unwrap();
    assert!(even.max_rel_diff(&DensePolynomial::new(vec![-0.5, 0.0, 1.0])) < 1e-15);
    assert!(odd.max_rel_diff(&DensePolynomial::new(vec![0.0, 1.0])) < 1e-15);

    let s4 = DensePolynomial::new(vec![0.75, 0.0, -3.0, 0.0, 1.0]);
    let s3 = DensePolynomial::new(vec![0.0, -1.5, 0.0, 1.0]);
    let (even, odd) = fam.split_even_odd(2).unwrap();
    assert!(even.max_rel_diff(&s4) < 1e-14);
    assert!(odd.max_rel_diff(&s3) < 1e-14);
    let q2 = &s4 + &s3.scale(2f64.sqrt());
    assert!(fam.coeffs_q(2).unwrap().max_rel_diff(&q2) < 1e-14);
}

#[test]
fn h0_is_k0_and_norm_forms_agree() {
    for kind in bases() {
        let fam = family(kind);
        assert_eq!(fam.h(0).unwrap(), fam.base().k0());
        for n in 1..=15i64 {
            let a = fam.h(n).unwrap();
            let b = fam.h_from_components(n).unwrap();
            assert!((a - b).abs() <= 1e-12 * a, "{kind:?} n={n}");
            assert_eq!(fam.h(-n).unwrap(), a);
        }
    }
}

#[test]
fn couplings_against_oracle_norms() {
    // a_n² = k_{2n}/k_{2n-1} with both norms from adaptive integration.
    let kind = SymmetricClassical::GeneralizedHermite { s: 1.0, alpha: 0.5 };
    let fam = family(kind);
    let sys = fam.base().clone();
    let k = |m: usize| common::gaussian_moment(&|x| sys.eval(m, x).unwrap().powi(2), 1.0, Some(0.5));
    for n in 1..=6 {
        let a = (k(2 * n) / k(2 * n - 1)).sqrt();
        assert!((fam.a(n).unwrap() - a).abs() <= 1e-10 * a, "a_{n}");
    }
}

#[test]
fn full_gram_is_diagonal() {
    for kind in bases() {
        let fam = family(kind);
        let g = gram_matrix(&fam, 12, 25, Normalization::Monic).unwrap();
        for (i, row) in g.matrix.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let scale = (g.expected_diag[i] * g.expected_diag[j]).sqrt();
                let target = if i == j { g.expected_diag[i] } else { 0.0 };
                assert!((v - target).abs() <= 1e-9 * scale, "{kind:?} ({i},{j})");
            }
        }
    }
}

#[test]
fn gram_against_oracle_integration() {
    let fam = family(SymmetricClassical::Hermite { s: 1.0 });
    for n in -3i64..=3 {
        for m in -3i64..=3 {
            let g = common::gaussian_moment(
                &|x| fam.eval_q(n, x).unwrap() * fam.eval_q(m, x).unwrap(),
                1.0,
                None,
            );
            let target = if n == m { fam.h(n).unwrap() } else { 0.0 };
            assert!((g - target).abs() <= 1e-9 * fam.h(n).unwrap().max(fam.h(m).unwrap()), "({n},{m})");
        }
    }
}

#[test]
fn recurrence_reproduces_direct_construction() {
    for kind in bases() {
        let fam = family(kind);
        for (k, (p, m)) in fam.recurrence_generate(20).unwrap().iter().enumerate() {
            let n = k as i64 + 1;
            assert!(p.max_rel_diff(&fam.coeffs_q(n).unwrap()) <= 1e-11, "{kind:?} Q_{n}");
            assert!(m.max_rel_diff(&fam.coeffs_q(-n).unwrap()) <= 1e-11, "{kind:?} Q_-{n}");
        }
    }
}

#[test]
fn recurrence_outputs_sum_to_twice_the_even_member() {
    for kind in bases() {
        let fam = family(kind);
        for n in 1..=10usize {
            let (p, m) = fam
                .recurrence_step(n, &fam.coeffs_q(n as i64).unwrap(), &fam.coeffs_q(-(n as i64)).unwrap(), ZeroStep::Refuse)
                .unwrap();
            let twice = fam.base().coeffs(2 * n + 2).unwrap().scale(2.0);
            assert!((&p + &m).max_rel_diff(&twice) <= 1e-11);
        }
    }
}

#[test]
fn zero_step_convention() {
    let fam = family(SymmetricClassical::Hermite { s: 1.0 });
    let one = DensePolynomial::one();
    assert!(matches!(fam.recurrence_step(0, &one, &one, ZeroStep::Refuse), Err(Error::Consistency(_))));
    let (p, m) = fam.recurrence_step(0, &one, &one, ZeroStep::VanishingRatio).unwrap();
    assert_eq!(p.coeffs(), &[-0.5, 1.0, 1.0]);
    assert_eq!(m.coeffs(), &[-0.5, -1.0, 1.0]);
}

#[test]
fn mismatched_inputs_are_rejected() {
    let fam = family(SymmetricClassical::Hermite { s: 1.0 });
    let q1 = fam.coeffs_q(1).unwrap();
    let q2 = fam.coeffs_q(2).unwrap();
    // wrong degree, swapped pair, non-monic
    assert!(fam.recurrence_step(1, &q2, &q2.reflect(), ZeroStep::Refuse).is_err());
    assert!(fam.recurrence_step(1, &q1, &q1, ZeroStep::Refuse).is_err());
    assert!(fam.recurrence_step(1, &q1.scale(2.0), &q1.reflect().scale(2.0), ZeroStep::Refuse).is_err());
}

#[test]
fn exhausted_table_is_a_supply_error() {
    let w = dunkl_susy::WeightDescriptor::new(1.0, dunkl_susy::WeightFamily::SymmetricJacobi { alpha: 0.0 }).unwrap();
    let sys = MonicSymmetricSystem::from_gammas("short", vec![0.0, 1.0 / 3.0, 4.0 / 15.0], 2.0, w).unwrap();
    let fam = DunklSusyFamily::build(sys).unwrap();
    assert!(fam.eval_q(1, 0.2).is_ok());
    assert!(fam.eval_q(2, 0.2).is_err());
}

#[test]
fn degrees_pair_up() {
    let fam = family(SymmetricClassical::SymmetricJacobi { alpha: 0.5 });
    for n in 0..=12i64 {
        assert_eq!(fam.coeffs_q(n).unwrap().degree(), fam.coeffs_q(-n).unwrap().degree());
        assert_eq!(fam.degree(n), 2 * n as usize);
    }
}

proptest! {
    #[test]
    fn reflection(pick in 0usize..6, n in 1i64..=15, x in -1.0f64..1.0) {
        let fam = family(bases()[pick]);
        let a = fam.eval_q(-n, x).unwrap();
        let b = fam.eval_q(n, -x).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
    }

    #[test]
    fn split_recovers_base(pick in 0usize..6, n in 1usize..=12, x in -1.0f64..1.0) {
        let fam = family(bases()[pick]);
        let (even, odd) = fam.split_even_odd(n).unwrap();
        let sys = fam.base();
        let e = sys.eval(2 * n, x).unwrap();
        let o = sys.eval(2 * n - 1, x).unwrap();
        prop_assert!((even.eval(x) - e).abs() <= 1e-11 * e.abs().max(1.0));
        prop_assert!((odd.eval(x) - o).abs() <= 1e-11 * o.abs().max(1.0));
        prop_assert!((even.eval(x) - even.eval(-x)).abs() <= 1e-12 * e.abs().max(1.0));
    }
}
