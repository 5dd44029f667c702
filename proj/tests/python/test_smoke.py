"""Smoke tests for the python bindings."""

import math

import pytest

import fenchel


def test_closed_form_constants():
    assert fenchel.hamiltonian_closed_form(0.0) == 0.25
    assert abs(fenchel.hamiltonian_closed_form(6.0) - 10.0) < 1e-12
    lo, hi = fenchel.hamiltonian_subgradient(0.0)
    assert (lo, hi) == (-1.0, 1.0)
    assert abs(fenchel.hamiltonian_subgradient(6.0) - 2.0) < 1e-12


def test_model_evaluations():
    params = fenchel.ModelParams(kappa=1.0)
    assert fenchel.lagrangian_eval(1.0, params) == -0.25
    assert fenchel.legendre_map(2.0, params) == 6.0
    assert abs(fenchel.multivalued_hamiltonian(1.0, params) - 0.25) < 1e-15

    roots = fenchel.invert_legendre_map(0.0, params)
    assert [r.multiplicity for r in roots] == [1, 1, 1]
    assert [round(r.value, 12) for r in roots] == [-1.0, 0.0, 1.0]

    p1, p2 = fenchel.cusp_momenta(params)
    assert p1 == -p2
    assert abs(p2 - 2.0 / (3.0 * math.sqrt(3.0))) < 1e-15


def test_vacua():
    lft = fenchel.vacuum_lft()
    assert lft.energy == 0.25
    assert lft.velocity_is_interval
    assert lft.velocities == (-1.0, 1.0)

    cusp = fenchel.vacuum_cusp()
    assert abs(cusp.energy + 1.0 / 12.0) < 1e-15
    assert not cusp.velocity_is_interval
    assert len(cusp.momenta) == 2


def test_conjugate_engine():
    xs = [i * 0.01 - 3.0 for i in range(601)]
    f = fenchel.SampledFunction(xs, [0.25 * x**4 - 0.5 * x**2 for x in xs])
    grid = fenchel.SlopeGrid([-1.0, 0.0, 1.0])
    fast = fenchel.conjugate_fast(f, grid)
    slow = fenchel.conjugate_bruteforce(f, grid)
    assert fast.values == pytest.approx(slow.values, abs=1e-12)
    assert abs(fast.values[1] - 0.25) < 1e-3
    assert all(fast.finite)

    hull = fenchel.biconjugate(f)
    assert all(h <= y + 1e-12 for h, y in zip(hull.values, f.values))

    segs = fenchel.flat_regions(f)
    assert len(segs.flat_regions) == 1


def test_invalid_inputs_raise():
    with pytest.raises(ValueError):
        fenchel.SampledFunction([0.0, 0.0], [1.0, 1.0])
    with pytest.raises(ValueError):
        fenchel.cusp_momenta(fenchel.ModelParams(kappa=-1.0))


def test_branches_and_remap():
    params = fenchel.ModelParams(1.0)
    bs = fenchel.enumerate_branches(params)
    assert bs.p1 == -bs.p2
    assert abs(bs.velocity(fenchel.RootSelector.HIGHEST, 0.0) - 1.0) < 1e-12
    assert abs(bs.hamiltonian(fenchel.RootSelector.LOWEST, 0.0) - 0.25) < 1e-12

    remap = fenchel.XiRemap.for_model(params)
    assert len(fenchel.xi_remap(0.0, remap)) == 3
    assert fenchel.xi_multiplicity_audit(0.0, params) == 3
    assert fenchel.xi_multiplicity_audit(1.0, params) == 1


def test_effective_domain():
    poly = fenchel.PolynomialLagrangian([0.0, 0.0, -0.5, 0.0, 0.25])
    assert fenchel.effective_domain(poly).kind == fenchel.DomainKind.ALL_MOMENTA
    concave = fenchel.PolynomialLagrangian([0.0, 0.0, -1.0])
    assert fenchel.effective_domain(concave).kind == fenchel.DomainKind.EMPTY
