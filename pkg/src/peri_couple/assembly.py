"""Assembly of the dense linear systems for FDM, MDCM, MSCM and VHCM.

Inside the assemblers rows and DOFs are numbered 1-based (``i = 1..N``) so
that each block reads like the enumerated discrete equations; ``_Rows``
translates to array indices.  Stress-constraint rows carry the overall sign
of the reference matrix sketches, which is the negative of the written
equation on the overlap rows; the solution is unaffected.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import DomainTooNarrow, InconsistentDofMap, StencilOutOfRange
from .mesh import Grid, Scheme, build_dof_map
from .problems import DIRICHLET_BOTH, MIXED, BoundaryCondition, ManufacturedProblem
from .stencils import (
    BACKWARD,
    FORWARD,
    MINUS,
    PLUS,
    Stencil,
    central_second_difference,
    discrete_stress_row,
    one_sided_third_order,
    peridynamic_row,
)

# row provenance labels
DIRICHLET_LEFT = "dirichlet_left"
LOCAL_INTERIOR = "local_interior"
OVERLAP_DISPLACEMENT = "overlap_displacement"
DISPLACEMENT_CONSTRAINT = "displacement_constraint"
PD_INTERIOR = "pd_interior"
STRESS_PLUS = "stress_constraint_plus"
STRESS_MINUS = "stress_constraint_minus"
NEUMANN_RIGHT = "neumann_right"
DIRICHLET_RIGHT = "dirichlet_right"


@dataclass(frozen=True)
class CouplingScheme:
    kind: Scheme
    kappa_override: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Scheme.parse(self.kind))
        if self.kappa_override is not None and not self.kappa_override > 0:
            raise ValueError(f"kappa_override must be positive, got {self.kappa_override!r}")

    @classmethod
    def of(cls, scheme) -> "CouplingScheme":
        if isinstance(scheme, cls):
            return scheme
        return cls(Scheme.parse(scheme))


@dataclass
class LinearSystem:
    matrix: np.ndarray
    rhs: np.ndarray
    row_labels: list
    dof_map: object = field(repr=False)
    grid: Grid = field(repr=False)
    scheme: CouplingScheme = None

    @property
    def N(self) -> int:
        return self.rhs.shape[0]

    def rows_labelled(self, label: str) -> list[int]:
        return [i for i, lab in enumerate(self.row_labels) if lab == label]


def nominal_kappa(E: float, delta: float) -> float:
    """Bond stiffness ``2 E / delta^2`` matching the local modulus."""
    if not delta > 0:
        raise ValueError("delta must be positive")
    return 2.0 * E / delta**2


class _Rows:
    """Dense system filled with 1-based row/DOF indices."""

    def __init__(self, N: int):
        self.N = N
        self.matrix = np.zeros((N, N))
        self.rhs = np.zeros(N)
        self.labels = [None] * N

    def _claim(self, i, label):
        if not 1 <= i <= self.N:
            raise StencilOutOfRange(f"row {i} outside 1..{self.N}")
        if self.labels[i - 1] is not None:
            raise AssertionError(f"row {i} assembled twice ({self.labels[i - 1]}, {label})")
        self.labels[i - 1] = label

    def stencil(self, i, center, stencil: Stencil, sign=1.0):
        for offset, w in stencil.items():
            j = center + offset
            if not 1 <= j <= self.N:
                raise StencilOutOfRange(f"row {i}: DOF {j} outside 1..{self.N}")
            self.matrix[i - 1, j - 1] += sign * w

    def equation(self, i, label, terms, rhs=0.0):
        """Row ``i``: sum of (center, stencil, sign) terms = rhs."""
        self._claim(i, label)
        for center, st, sign in terms:
            self.stencil(i, center, st, sign)
        self.rhs[i - 1] = rhs

    def difference(self, i, label, plus, minus):
        """Row ``i``: u_plus - u_minus = 0."""
        self._claim(i, label)
        self.matrix[i - 1, plus - 1] = 1.0
        self.matrix[i - 1, minus - 1] = -1.0

    def finish(self, dof_map, grid, scheme) -> LinearSystem:
        missing = [i + 1 for i, lab in enumerate(self.labels) if lab is None]
        if missing:
            raise AssertionError(f"rows never assembled: {missing}")
        return LinearSystem(self.matrix, self.rhs, self.labels, dof_map, grid, scheme)


def _bc(problem: ManufacturedProblem, bc: BoundaryCondition | None) -> BoundaryCondition:
    return problem.bc if bc is None else bc


def _kappa(grid: Grid, problem: ManufacturedProblem, scheme: CouplingScheme) -> float:
    if scheme.kappa_override is not None:
        return float(scheme.kappa_override)
    return nominal_kappa(problem.E, grid.delta)


def _local_rows(rows: _Rows, first, last, k_of, grid, problem):
    """Central-difference rows ``-E u'' = f_b`` for DOFs first..last."""
    st = central_second_difference(problem.E, grid.h)
    for i in range(first, last + 1):
        rows.equation(i, LOCAL_INTERIOR, [(i, st, 1.0)], problem.f_b(k_of(i) * grid.h))


def _boundary_rows(rows: _Rows, N, grid, problem, bc):
    rows._claim(1, DIRICHLET_LEFT)
    rows.matrix[0, 0] = 1.0
    if bc.kind == MIXED:
        st = one_sided_third_order(BACKWARD, grid.h)
        rows.equation(N, NEUMANN_RIGHT, [(N, st, problem.E)], bc.g)
    elif bc.kind == DIRICHLET_BOTH:
        rows._claim(N, DIRICHLET_RIGHT)
        rows.matrix[N - 1, N - 1] = 1.0
    else:  # pragma: no cover - BoundaryCondition validates kind
        raise ValueError(bc.kind)


def _require(condition, exc, message):
    if not condition:
        raise exc(message)


def assemble_fdm(grid: Grid, problem: ManufacturedProblem, bc=None, scheme=None) -> LinearSystem:
    """Classical elasticity on the whole bar, one DOF per grid point."""
    bc = _bc(problem, bc)
    _require(grid.n >= 3, StencilOutOfRange, "FDM needs at least 3 intervals")
    dof_map = build_dof_map(grid, Scheme.FDM)
    N = dof_map.N
    rows = _Rows(N)
    _boundary_rows(rows, N, grid, problem, bc)
    _local_rows(rows, 2, N - 1, lambda i: i - 1, grid, problem)
    return rows.finish(dof_map, grid, CouplingScheme(Scheme.FDM))


def _check_local_blocks(grid: Grid, m_reach: int = 0):
    _require(grid.n1 >= 3 + m_reach, StencilOutOfRange,
             f"n1={grid.n1} too small for the one-sided stencils (need >= {3 + m_reach})")
    _require(grid.n2 >= 3 + m_reach, StencilOutOfRange,
             f"n2={grid.n2} too small for the one-sided stencils (need >= {3 + m_reach})")


def assemble_mdcm(grid: Grid, problem: ManufacturedProblem, bc=None, scheme=None) -> LinearSystem:
    """Matching displacements on the closed overlaps."""
    scheme = CouplingScheme.of(scheme or Scheme.MDCM)
    bc = _bc(problem, bc)
    dof_map = build_dof_map(grid, Scheme.MDCM)
    if dof_map.scheme_kind != "overlap":
        raise InconsistentDofMap(f"MDCM needs the overlap numbering, got {dof_map.scheme_kind}")
    _check_local_blocks(grid)
    m, N1, Nd, N = grid.m, dof_map.N1, dof_map.N_delta, dof_map.N
    kappa = _kappa(grid, problem, scheme)
    pd = peridynamic_row(kappa, m, grid.h)

    rows = _Rows(N)
    _boundary_rows(rows, N, grid, problem, bc)
    _local_rows(rows, 2, N1 - 1, lambda i: i - 1, grid, problem)
    for i in range(N1, N1 + m + 1):
        rows.difference(i, OVERLAP_DISPLACEMENT, i - m, i + 1)
    for i in range(N1 + 1 + m, N1 + Nd - m + 1):
        rows.equation(i, PD_INTERIOR, [(i, pd, 1.0)], problem.f_b((i - 2 - m) * grid.h))
    for i in range(N1 + Nd + 1 - m, N1 + Nd + 2):
        rows.difference(i, OVERLAP_DISPLACEMENT, i - 1, i + m)
    _local_rows(rows, N1 + Nd + 2, N - 1, lambda i: i - 3 - 2 * m, grid, problem)
    return rows.finish(dof_map, grid, scheme)


def assemble_mscm(grid: Grid, problem: ManufacturedProblem, bc=None, scheme=None,
                  pd_at_interfaces: bool = False) -> LinearSystem:
    """Matching stresses on the overlaps plus displacement continuity at a and b.

    By default the stress constraint is imposed at the m+1 grid points of each
    closed overlap and the peridynamic equation only strictly inside (a, b).
    ``pd_at_interfaces=True`` selects the alternative layout where the
    peridynamic equation also holds at a and b and the stress constraint at
    the m points of each overlap away from the interface.
    """
    scheme = CouplingScheme.of(scheme or Scheme.MSCM)
    bc = _bc(problem, bc)
    dof_map = build_dof_map(grid, Scheme.MSCM)
    if dof_map.scheme_kind != "overlap":
        raise InconsistentDofMap(f"MSCM needs the overlap numbering, got {dof_map.scheme_kind}")
    m, N1, Nd, N, h, E = grid.m, dof_map.N1, dof_map.N_delta, dof_map.N, grid.h, problem.E
    _check_local_blocks(grid, m_reach=m)
    _require(grid.n_delta >= 2, DomainTooNarrow, "MSCM needs at least 2 intervals in (a, b)")
    kappa = _kappa(grid, problem, scheme)
    pd = peridynamic_row(kappa, m, h)
    sigma_plus = discrete_stress_row(PLUS, kappa, grid.delta, h)
    sigma_minus = discrete_stress_row(MINUS, kappa, grid.delta, h)
    du_back = one_sided_third_order(BACKWARD, h)
    du_fwd = one_sided_third_order(FORWARD, h)
    p = 0 if pd_at_interfaces else 1

    rows = _Rows(N)
    _boundary_rows(rows, N, grid, problem, bc)
    _local_rows(rows, 2, N1 - 1, lambda i: i - 1, grid, problem)
    rows.difference(N1, DISPLACEMENT_CONSTRAINT, N1, N1 + 1 + m)
    for i in range(N1 + 1, N1 + m + p + 1):
        # E u'(x_k) - sigma_h^+(x_k) = 0; the local DOF for x_k is i - 1 - m
        rows.equation(i, STRESS_PLUS, [(i - 1 - m, du_back, E), (i, sigma_plus, -1.0)])
    for i in range(N1 + 1 + m + p, N1 + Nd - m - p + 1):
        rows.equation(i, PD_INTERIOR, [(i, pd, 1.0)], problem.f_b((i - 2 - m) * h))
    for i in range(N1 + Nd - m - p + 1, N1 + Nd + 1):
        # E u'(x_k) - sigma_h^-(x_k) = 0; the local DOF for x_k is i + 1 + m
        rows.equation(i, STRESS_MINUS, [(i, sigma_minus, -1.0), (i + 1 + m, du_fwd, E)])
    rows.difference(N1 + Nd + 1, DISPLACEMENT_CONSTRAINT, N1 + Nd - m, N1 + Nd + 1)
    _local_rows(rows, N1 + Nd + 2, N - 1, lambda i: i - 3 - 2 * m, grid, problem)
    return rows.finish(dof_map, grid, scheme)


def vhcm_horizon_ratio(grid: Grid, k: int) -> int:
    """Effective horizon ratio at grid point k of (a, b): min(distance to interface, m)."""
    j = min(k - grid.k_a, grid.k_b - k)
    if j < 1:
        raise ValueError(f"grid point {k} is not strictly inside (a, b)")
    return min(j, grid.m)


def assemble_vhcm(grid: Grid, problem: ManufacturedProblem, bc=None, scheme=None) -> LinearSystem:
    """Variable horizon ramping linearly to zero at a and b, no overlaps.

    A node at grid distance j from the nearer interface uses the horizon
    ``min(j, m) h`` and ``kappa_bar = 2E / (min(j, m) h)^2`` so that
    ``kappa_bar * delta_v^2`` stays ``2E``.
    """
    scheme = CouplingScheme.of(scheme or Scheme.VHCM)
    bc = _bc(problem, bc)
    dof_map = build_dof_map(grid, Scheme.VHCM)
    if dof_map.scheme_kind != "no_overlap":
        raise InconsistentDofMap(f"VHCM needs the no-overlap numbering, got {dof_map.scheme_kind}")
    m, N1, Nd, N, h, E = grid.m, dof_map.N1, dof_map.N_delta, dof_map.N, grid.h, problem.E
    _check_local_blocks(grid)
    _require(grid.n_delta >= 2 * m + 2, DomainTooNarrow,
             f"(b-a)/h={grid.n_delta} leaves no constant-horizon zone (need >= {2 * m + 2})")
    kappa = _kappa(grid, problem, scheme)
    ratio = kappa / nominal_kappa(E, grid.delta)  # 1 unless overridden
    stress_scale = ratio * E  # kappa_bar * delta_v^2 / 2
    sigma_plus = one_sided_third_order(FORWARD, h)
    sigma_minus = one_sided_third_order(BACKWARD, h)
    du_back = one_sided_third_order(BACKWARD, h)
    du_fwd = one_sided_third_order(FORWARD, h)

    rows = _Rows(N)
    _boundary_rows(rows, N, grid, problem, bc)
    _local_rows(rows, 2, N1 - 1, lambda i: i - 1, grid, problem)
    rows.difference(N1, DISPLACEMENT_CONSTRAINT, N1, N1 + 1)
    rows.equation(N1 + 1, STRESS_PLUS, [(N1, du_back, E), (N1 + 1, sigma_plus, -stress_scale)])
    for i in range(N1 + 2, N1 + Nd):
        k = i - 2
        m_eff = vhcm_horizon_ratio(grid, k)
        kappa_bar = ratio * nominal_kappa(E, m_eff * h)
        rows.equation(i, PD_INTERIOR, [(i, peridynamic_row(kappa_bar, m_eff, h), 1.0)], problem.f_b(k * h))
    # this row keeps the sign sigma_h^- - E u' of the matrix sketch
    rows.equation(N1 + Nd, STRESS_MINUS, [(N1 + Nd, sigma_minus, stress_scale), (N1 + Nd + 1, du_fwd, -E)])
    rows.difference(N1 + Nd + 1, DISPLACEMENT_CONSTRAINT, N1 + Nd, N1 + Nd + 1)
    _local_rows(rows, N1 + Nd + 2, N - 1, lambda i: i - 3, grid, problem)
    return rows.finish(dof_map, grid, scheme)


_ASSEMBLERS = {
    Scheme.FDM: assemble_fdm,
    Scheme.MDCM: assemble_mdcm,
    Scheme.MSCM: assemble_mscm,
    Scheme.VHCM: assemble_vhcm,
}


def assemble(grid: Grid, problem: ManufacturedProblem, scheme, bc=None, **options) -> LinearSystem:
    scheme = CouplingScheme.of(scheme)
    return _ASSEMBLERS[scheme.kind](grid, problem, bc, scheme, **options)


# Matrix dumps ------------------------------------------------------------------

def write_dense(system: LinearSystem, path) -> None:
    """Whitespace-separated dense matrix, one row per line."""
    np.savetxt(Path(path), system.matrix, fmt="%.17g")


def write_triplets(system: LinearSystem, path) -> None:
    """Nonzeros as ``row col value`` lines with 1-based indices."""
    rows, cols = np.nonzero(system.matrix)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{system.N} {system.N}\n")
        for r, c in zip(rows, cols):
            fh.write(f"{r + 1} {c + 1} {system.matrix[r, c]:.17g}\n")


def read_triplets(path) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        n_rows, n_cols = (int(t) for t in fh.readline().split())
        matrix = np.zeros((n_rows, n_cols))
        for line in fh:
            r, c, v = line.split()
            matrix[int(r) - 1, int(c) - 1] = float(v)
    return matrix
