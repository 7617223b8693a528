"""Smoke test for the `dunkl_susy` extension module.

Build and install first:

    pip install maturin
    maturin build --release -m crates/python/Cargo.toml -o target/wheels
    pip install --force-reinstall target/wheels/dunkl_susy-*.whl
    python python/smoke_test.py
"""

import math

import dunkl_susy as ds


def close(a, b, tol=1e-12):
    return abs(a - b) <= tol * max(1.0, abs(b))


def main():
    fam = ds.DunklFamily("hermite", s=1.0)
    assert fam.eval(0, 9.9) == 1.0
    assert close(fam.eval(1, 0.5), 0.25)
    assert close(fam.eval(-1, 0.5), -0.75)
    assert fam.coeffs(-1) == [-0.5, -1.0, 1.0]
    assert close(fam.a(1), 1.0)
    assert close(fam.h(0), math.sqrt(math.pi))
    assert ds.signed_indices(2) == [0, 1, -1, 2, -2]

    g = fam.gram(6)
    assert g.order == 13
    assert g.max_offdiag_abs <= 1e-10 * max(g.expected_diag), g
    assert g.max_diag_relerr <= 1e-12, g

    for n in ds.signed_indices(6):
        r = fam.eigencheck(n)
        want = math.copysign(2.0 * math.sqrt(abs(n)), n) if n else 0.0
        assert r.passed and close(r.lambda_, want), r

    pairs = fam.recurrence_generate(8)
    for n, (p, m) in enumerate(pairs, start=1):
        assert max(abs(x - y) for x, y in zip(p, fam.coeffs(n))) < 1e-9
        assert max(abs(x - y) for x, y in zip(m, fam.coeffs(-n))) < 1e-9

    lag = ds.DunklFamily("generalized-hermite", s=1.0, alpha=0.5)
    assert lag.gram(4).max_diag_relerr <= 1e-12
    assert lag.eigencheck(-3).passed

    base = ds.SymmetricSystem("hermite")
    nodes, weights = base.gauss_rule(20)
    assert close(sum(weights), math.sqrt(math.pi))
    assert abs(sum(w * x**3 for x, w in zip(nodes, weights))) < 1e-14

    assert ds.eval_classical("hermite", 2, 1.0) == 2.0
    assert close(ds.norm_constant("hermite", 3), 48 * math.sqrt(math.pi))

    assert ds.Potential.names() == [p.name for p in ds.Potential.catalog()]
    for pot in ds.Potential.catalog():
        grid = pot.default_grid()
        worst = max(pot.shape_invariance_residual(x)[0] for x in grid[::7])
        assert worst <= 1e-10, (pot, worst)
        assert pot.ground_state_annihilation() <= 1e-10, pot
        assert pot.intertwining(1).passed, pot
        assert close(pot.c_tilde_recomputed(1), pot.c_tilde(1), 1e-8), pot
        assert ds.Potential.from_json(pot.to_json()) == pot

    so = ds.Potential("shifted-oscillator", s=1.0)
    assert so.remainder == 2.0
    assert so.l_eigencheck(2).passed

    try:
        ds.Potential("gen-poschl-teller", A=9.0, B=6.0)
    except ValueError:
        pass
    else:
        raise AssertionError("A >= B must be rejected")

    try:
        fam.gram(4, order=5)
    except ValueError as e:
        assert "order" in str(e)
    else:
        raise AssertionError("low quadrature order must be rejected")

    print("smoke test passed")


if __name__ == "__main__":
    main()
