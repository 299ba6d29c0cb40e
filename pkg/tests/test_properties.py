"""Randomized invariants over admissible grids (hypothesis)."""
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from collections import Counter

from peri_couple.analysis import VHCM_RAMP, CONSTANT, solve_case, v_reference
from peri_couple.assembly import (
    DISPLACEMENT_CONSTRAINT,
    LOCAL_INTERIOR,
    OVERLAP_DISPLACEMENT,
    PD_INTERIOR,
    STRESS_MINUS,
    STRESS_PLUS,
    CouplingScheme,
    assemble,
)
from peri_couple.linalg import condition_number_2, lu_solve, solve_dense
from peri_couple.mesh import LOCAL, PERIDYNAMIC, GridConfig, Scheme, build_dof_map, build_grid
from peri_couple.problems import DIRICHLET_BOTH, MIXED, catalog_get
from peri_couple.stencils import (
    BACKWARD,
    FORWARD,
    central_second_difference,
    one_sided_third_order,
    peridynamic_row,
)

from test_linalg import jacobi_condition

SETTINGS = settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def grid_configs(draw, symmetric=False):
    """Admissible (a, b, h, m) on (0, 3) where every scheme can be assembled."""
    q = draw(st.integers(4, 16))  # h = 1/q
    m = draw(st.integers(1, 3))
    n = 3 * q
    lo = m + 3
    room = n - 2 * lo - (2 * m + 2)  # spare intervals once every block has its minimum
    assume(room >= 0)
    if symmetric:
        n1 = n2 = lo + draw(st.integers(0, room // 2))
    else:
        n1 = lo + draw(st.integers(0, room))
        n2 = lo + draw(st.integers(0, room - (n1 - lo)))
    n_delta = n - n1 - n2
    h = Fraction(1, q)
    return GridConfig(3, n1 * h, (n1 + n_delta) * h, h, m)


# mesh ------------------------------------------------------------------------------

@SETTINGS
@given(grid_configs(), st.sampled_from(["mdcm", "mscm", "vhcm", "fdm"]))
def test_dof_round_trip_and_coverage(config, scheme):
    grid = build_grid(config)
    assert abs(grid.nodes[grid.k_a] - config.a) <= 1e-12 and abs(grid.nodes[grid.k_b] - config.b) <= 1e-12
    d = build_dof_map(grid, scheme)
    for i in range(d.N):
        assert d.dof(d.model(i), d.point(i)) == i
    if scheme in ("mdcm", "mscm"):
        assert d.N == grid.n + 3 + 2 * grid.m
        dup = set(range(grid.n1 - grid.m, grid.n1 + 1)) | set(range(grid.k_b, grid.k_b + grid.m + 1))
    elif scheme == "vhcm":
        assert d.N == grid.n + 3
        dup = {grid.k_a, grid.k_b}
    else:
        assert d.N == grid.n + 1
        dup = set()
    for k in range(grid.n + 1):
        models = sorted(d.model(i) for i in d.dofs_at(k))
        assert models == ([LOCAL, PERIDYNAMIC] if k in dup else models)
        assert len(models) == (2 if k in dup else 1)


# stencils --------------------------------------------------------------------------

@SETTINGS
@given(st.integers(1, 12), st.floats(1e-3, 0.5), st.floats(-2, 2), st.lists(st.floats(-3, 3), min_size=4, max_size=4))
def test_stencils_exact_on_cubics(m, h, x, coeffs):
    c0, c1, c2, c3 = coeffs
    u = lambda t: c0 + c1 * t + c2 * t**2 + c3 * t**3  # noqa: E731
    du = c1 + 2 * c2 * x + 3 * c3 * x**2
    d2u = 2 * c2 + 6 * c3 * x
    scale = 1 + abs(c0) + abs(c1) + abs(c2) + abs(c3)
    E = 1.0
    kappa = 2 * E / (m * h) ** 2
    # roundoff grows like |u| / h^2 for the second-difference rows
    tol2 = 1e-9 * scale * (1 + 1 / h**2)
    assert abs(central_second_difference(E, h).apply_function(u, x, h) + E * d2u) <= tol2
    assert abs(peridynamic_row(kappa, m, h).apply_function(u, x, h) + E * d2u) <= tol2 * m
    for direction in (FORWARD, BACKWARD):
        assert abs(one_sided_third_order(direction, h).apply_function(u, x, h) - du) <= 1e-9 * scale * (1 + 1 / h)
    for st_ in (central_second_difference(E, h), peridynamic_row(kappa, m, h), one_sided_third_order(FORWARD, h)):
        assert abs(st_.apply_function(lambda t: 7.5, x, h)) <= 1e-13 * np.abs(st_.weights).sum() * 7.5


# assembly --------------------------------------------------------------------------

@SETTINGS
@given(grid_configs(), st.sampled_from(["mdcm", "mscm", "vhcm"]), st.sampled_from(["cubic_mixed", "cubic_dirichlet"]))
def test_cubic_patch_random_grids(config, scheme, name):
    p = catalog_get(name)
    grid = build_grid(config)
    system = assemble(grid, p, scheme)
    assert system.matrix.shape == (system.N, system.N)
    assert np.all(np.abs(system.matrix).sum(axis=1) > 0)
    pd_rows = system.rows_labelled(PD_INTERIOR)
    sums = system.matrix[pd_rows].sum(axis=1)
    assert np.all(np.abs(sums) <= 1e-10 * np.abs(system.matrix[pd_rows]).sum(axis=1))
    sol = lu_solve(system)
    exact = np.array([p.u_exact(grid.nodes[sol.dof_map.point(i)]) for i in range(sol.dof_map.N)])
    assert np.abs(sol.values - exact).max() <= 1e-8


def expected_counts(grid, scheme):
    n1, nd, n2, m = grid.n1, grid.n_delta, grid.n2, grid.m
    if scheme == "fdm":
        return {LOCAL_INTERIOR: grid.n - 1}
    counts = {LOCAL_INTERIOR: n1 + n2 - 2}
    if scheme == "mdcm":
        counts.update({OVERLAP_DISPLACEMENT: 2 * (m + 1), PD_INTERIOR: nd + 1})
    elif scheme == "mscm":
        counts.update({DISPLACEMENT_CONSTRAINT: 2, STRESS_PLUS: m + 1, STRESS_MINUS: m + 1, PD_INTERIOR: nd - 1})
    else:
        counts.update({DISPLACEMENT_CONSTRAINT: 2, STRESS_PLUS: 1, STRESS_MINUS: 1, PD_INTERIOR: nd - 1})
    return counts


@SETTINGS
@given(grid_configs(), st.sampled_from(["fdm", "mdcm", "mscm", "vhcm"]), st.sampled_from(["cubic_mixed", "cubic_dirichlet"]))
def test_row_groups_and_sparsity(config, scheme, name):
    grid = build_grid(config)
    system = assemble(grid, catalog_get(name), scheme)
    counts = Counter(system.row_labels)
    assert sum(counts.values()) == system.N
    for label, expected in expected_counts(grid, scheme).items():
        assert counts[label] == expected
    # one row per boundary condition
    assert system.N - sum(expected_counts(grid, scheme).values()) == 2
    nnz = np.count_nonzero(system.matrix, axis=1)
    assert nnz.max() <= max(5, 2 * grid.m + 1, 8)


@SETTINGS
@given(grid_configs(), st.sampled_from(["cubic_mixed", "quartic_mixed", "quartic_dirichlet"]))
def test_mdcm_duplicates_agree_and_kappa_matters(config, name):
    grid = build_grid(config)
    p = catalog_get(name)
    sol = lu_solve(assemble(grid, p, "mdcm"))
    d = sol.dof_map
    shared = [k for k in range(grid.n + 1) if len(d.dofs_at(k)) == 2]
    assert len(shared) == 2 * (grid.m + 1)
    for k in shared:
        assert abs(sol.at(LOCAL, k) - sol.at(PERIDYNAMIC, k)) <= 1e-12 * (1 + abs(sol.at(LOCAL, k)))
    nominal = 2.0 / grid.delta**2
    other = lu_solve(assemble(grid, p, CouplingScheme(Scheme.MDCM, nominal * 120 / 128)))
    assert np.abs(other.values - sol.values).max() > 1e-8


# problems --------------------------------------------------------------------------

@SETTINGS
@given(st.floats(-1, 4))
def test_quartic_dirichlet_symmetric(x):
    p = catalog_get("quartic_dirichlet")
    assert abs(p.u_exact(x) - p.u_exact(3 - x)) <= 1e-12 * (1 + abs(p.u_exact(x)))


# dense linalg ----------------------------------------------------------------------

@SETTINGS
@given(st.integers(1, 200), st.integers(0, 2**32 - 1))
def test_solve_round_trip(n, seed):
    rng = np.random.default_rng(seed)
    A = rng.standard_normal((n, n)) + 2 * np.sqrt(n) * np.eye(n)
    x = rng.standard_normal(n)
    b = A @ x
    got = solve_dense(A, b)
    assert np.abs(A @ got - b).max() <= 1e-10 * (np.abs(A).sum(axis=1).max() * np.abs(got).max() + np.abs(b).max())


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 40), st.integers(0, 2**32 - 1))
def test_condition_matches_jacobi(n, seed):
    rng = np.random.default_rng(seed)
    A = rng.standard_normal((n, n)) + np.sqrt(n) * np.eye(n)
    assert condition_number_2(A) == pytest.approx(jacobi_condition(A), rel=0.01)


# analysis --------------------------------------------------------------------------

@SETTINGS
@given(grid_configs(symmetric=True), st.sampled_from(["mdcm", "mscm", "vhcm"]))
def test_symmetric_problem_symmetric_error(config, scheme):
    assume(config.a + config.b == 3)
    r = solve_case(catalog_get("quartic_dirichlet"), config, scheme)
    vals = r.field.values
    assert np.abs(vals - vals[::-1]).max() <= 1e-9


@SETTINGS
@given(st.floats(0.1, 1.4), st.floats(1.6, 2.9), st.floats(0.01, 0.6), st.floats(0.1, 30),
       st.sampled_from([MIXED, DIRICHLET_BOTH]), st.sampled_from([CONSTANT, VHCM_RAMP]))
def test_v_reference_conditions(a, b, delta, lam, bc, profile):
    v = v_reference(bc, a, b, 3.0, lam, delta, profile)
    assert abs(v(0.0)) <= 1e-12
    if bc == DIRICHLET_BOTH:
        assert abs(v(3.0)) <= 1e-12
    else:
        assert abs(v.derivative(3.0)) <= 1e-12
    eps = 1e-9
    for point in (a, b):
        for order in (0, 1):
            # evaluate the neighbouring pieces at the joint itself
            left = v.pieces[v._piece(point - eps)].deriv(order)(point)
            right = v.pieces[v._piece(point + eps)].deriv(order)(point)
            assert abs(left - right) <= 1e-9
    xs = np.linspace(0, 3, 301)
    assert v.v_max >= v(xs).max() - 1e-12
    assert abs(v(v.argmax) - v.v_max) <= 1e-12
