"""Error fields, the modeling-error reference v(x), stress oracles and studies."""
from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from numpy.polynomial import Polynomial

from .assembly import CouplingScheme, assemble
from .errors import GridMismatch, QuadratureFailure
from .linalg import condition_number_2, lu_solve
from .mesh import LOCAL, PERIDYNAMIC, GridConfig, Scheme, build_grid
from .problems import DIRICHLET_BOTH, MIXED
from .stencils import MINUS, PLUS

CONSTANT = "constant"
VHCM_RAMP = "vhcm_ramp"


# Error field -------------------------------------------------------------------

@dataclass(frozen=True)
class ErrorField:
    grid: object = field(repr=False)
    values: np.ndarray

    def __post_init__(self):
        if self.values.shape != (self.grid.n + 1,):
            raise ValueError(f"expected {self.grid.n + 1} values, got {self.values.shape}")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("non-finite error value")

    @property
    def x(self) -> np.ndarray:
        return self.grid.nodes


def nodal_values(solution) -> np.ndarray:
    """One value per grid point: local model on [0,a] and [b,ell], PD model inside."""
    grid, dof_map = solution.grid, solution.dof_map
    if dof_map.scheme_kind == "fdm":
        return np.asarray(solution.values, dtype=float).copy()
    out = np.empty(grid.n + 1)
    for k in range(grid.n + 1):
        model = PERIDYNAMIC if grid.k_a < k < grid.k_b else LOCAL
        out[k] = solution.at(model, k)
    return out


def delta_field(coupled, fdm) -> ErrorField:
    """Δ(x_k) = coupled value - FDM value at every grid point."""
    if not coupled.grid.same_as(fdm.grid):
        raise GridMismatch("coupled and FDM solutions live on different grids")
    return ErrorField(coupled.grid, nodal_values(coupled) - nodal_values(fdm))


def delta_max(err: ErrorField) -> float:
    """Signed maximum of the error field."""
    if err.values.size == 0:
        raise ValueError("empty error field")
    return float(err.values.max())


def relative_error(d_max: float, v_max: float) -> float:
    if v_max == 0:
        raise ZeroDivisionError("v_max is zero, E_r is undefined")
    return abs(d_max - v_max) / v_max


# Modeling-error reference -------------------------------------------------------

@dataclass(frozen=True)
class VReference:
    """Piecewise polynomial v on breakpoints ``0 = p_0 < ... < p_r = ell``."""

    bc_kind: str
    lam: float
    a: float
    b: float
    ell: float
    delta: float
    profile: str
    breaks: tuple
    pieces: tuple = field(repr=False)
    v_max: float = 0.0
    argmax: float = 0.0

    def _piece(self, x):
        j = int(np.searchsorted(self.breaks, x, side="right")) - 1
        return min(max(j, 0), len(self.pieces) - 1)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        flat = np.array([self.pieces[self._piece(t)](t) for t in x.ravel()])
        return flat.reshape(x.shape) if x.ndim else float(flat[0])

    def derivative(self, x, order: int = 1):
        return float(self.pieces[self._piece(x)].deriv(order)(x))


def _horizon_pieces(a, b, delta, profile):
    """Breakpoints inside [a, b] and the (linear) horizon on each piece."""
    if profile == CONSTANT:
        return [a, b], [Polynomial([delta])]
    if profile != VHCM_RAMP:
        raise ValueError(f"unknown horizon profile {profile!r}")
    mid = 0.5 * (a + b)
    pts = sorted({a, min(a + delta, mid), max(b - delta, mid), b})
    candidates = [Polynomial([-a, 1.0]), Polynomial([b, -1.0]), Polynomial([delta])]
    polys = []
    for p, q in zip(pts, pts[1:]):
        c = 0.5 * (p + q)
        polys.append(min(candidates, key=lambda poly: poly(c)))
    return pts, polys


def v_reference(bc_kind: str, a, b, ell, lam: float, delta, profile: str = CONSTANT) -> VReference:
    """Solve -v'' = lam * delta(x)^2 / 24 on (a, b), v'' = 0 elsewhere.

    v and v' are continuous, v(0) = 0 and v'(ell) = 0 (mixed) or v(ell) = 0
    (dirichlet_both).  The solution is integrated piece by piece from x = 0
    with v'(0) = 0, then the free slope c is fixed by the right boundary
    condition; c enters as ``c * x`` on every piece.
    """
    a, b, ell, delta = float(a), float(b), float(ell), float(delta)
    if lam < 0:
        raise ValueError("lambda must be nonnegative")
    if not 0 < a < b < ell or not delta > 0:
        raise ValueError("need 0 < a < b < ell and delta > 0")
    inner, profs = _horizon_pieces(a, b, delta, profile)
    breaks = [0.0] + inner + [ell]
    sources = [Polynomial([0.0])] + [lam * p**2 / 24.0 for p in profs] + [Polynomial([0.0])]

    pieces = []
    v0, dv0 = 0.0, 0.0
    for (p, q), s in zip(zip(breaks, breaks[1:]), sources):
        # v = v0 + dv0 (x - p) - double integral of s from p
        acc = -s.integ(lbnd=p).integ(lbnd=p)
        v = acc + Polynomial([v0 - dv0 * p, dv0])
        pieces.append(v)
        v0, dv0 = float(v(q)), float(v.deriv()(q))
    if bc_kind == MIXED:
        c = -dv0
    elif bc_kind == DIRICHLET_BOTH:
        c = -v0 / ell
    else:
        raise ValueError(f"unknown boundary condition kind {bc_kind!r}")
    pieces = [v + Polynomial([0.0, c]) for v in pieces]

    best_v, best_x = -np.inf, 0.0
    for (p, q), v in zip(zip(breaks, breaks[1:]), pieces):
        cands = [p, q]
        for r in v.deriv().roots():
            if abs(r.imag) < 1e-12 and p <= r.real <= q:
                cands.append(r.real)
        for t in cands:
            # ties (flat tails) resolve to the leftmost point
            if v(t) > best_v + 1e-15:
                best_v, best_x = float(v(t)), float(t)
    return VReference(bc_kind, float(lam), a, b, ell, delta, profile, tuple(breaks), tuple(pieces), best_v, best_x)


def v_reference_for(problem, config: GridConfig, scheme) -> VReference:
    kind = Scheme.parse(scheme)
    profile = VHCM_RAMP if kind is Scheme.VHCM else CONSTANT
    return v_reference(problem.bc.kind, config.a, config.b, config.ell, problem.lambda4, config.delta, profile)


# Continuous stress ---------------------------------------------------------------

STRESS_PANELS = 64
STRESS_MAX_PANELS = 1024
STRESS_RTOL = 1e-8


def _vectorized(u):
    def call(x):
        x = np.asarray(x, dtype=float)
        try:
            y = np.asarray(u(x), dtype=float)
            if y.shape == x.shape:
                return y
        except TypeError:
            pass
        return np.vectorize(lambda t: float(u(t)))(x)
    return call


def _derivative(u, z):
    try:
        d = u(complex(z, 1e-30)).imag / 1e-30
        if np.isfinite(d):
            return float(d)
    except TypeError:
        pass
    s = 1e-6 * max(1.0, abs(z))
    return (float(u(z + s)) - float(u(z - s))) / (2 * s)


def _simpson_weights(n):
    w = np.ones(2 * n + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return w / 3.0


def _inner(uv, u, z, lo, hi, n, sign):
    """int_lo^hi (u(y) - u(z)) / |y - z| dy and the same integral of the absolute value."""
    if hi == lo:
        return 0.0, 0.0
    y = np.linspace(lo, hi, 2 * n + 1)
    dist = np.abs(y - z)
    f = np.empty_like(y)
    off = dist > 0
    f[off] = (uv(y[off]) - float(u(z))) / dist[off]
    if not off.all():
        f[~off] = sign * _derivative(u, z)
    w = _simpson_weights(n) * (hi - lo) / (2 * n)
    return float(w @ f), float(w @ np.abs(f))


def _double_integral(u, x, delta, side, n):
    """Bonds (z, y) crossing x; the plus side integrates z over [x - delta, x],
    the minus side mirrors it with z over [x, x + delta]."""
    uv = _vectorized(u)
    if side == PLUS:
        z = np.linspace(x - delta, x, 2 * n + 1)
    else:
        z = np.linspace(x, x + delta, 2 * n + 1)
    vals = np.empty_like(z)
    mags = np.empty_like(z)
    for idx, zj in enumerate(z):
        if side == PLUS:
            vals[idx], mags[idx] = _inner(uv, u, zj, x, zj + delta, n, 1.0)
        else:
            # int_x^{z-delta} runs backwards; y <= z so the diagonal limit is -u'(z)
            v, mag = _inner(uv, u, zj, zj - delta, x, n, -1.0)
            vals[idx], mags[idx] = -v, mag
    w = _simpson_weights(n) * delta / (2 * n)
    return float(w @ vals), float(w @ mags)


def continuous_stress(u, x: float, delta: float, kappa: float, order: str = "two", side: str = PLUS,
                      panels: int = STRESS_PANELS) -> float:
    """Nonlocal stress at ``x`` as a double integral over bonds crossing ``x``.

    ``order="two"`` returns the plain integral, which equals ``E u'`` for
    quadratics (``E = kappa delta^2 / 2``).  ``order="three"`` subtracts the
    leading error ``kappa delta^4 u'''(x) / 48`` so cubics are exact as well.
    The quadrature is nested composite Simpson, doubled until two levels agree.
    """
    if side not in (PLUS, MINUS):
        raise ValueError(f"side must be {PLUS!r} or {MINUS!r}")
    if order not in ("two", "three"):
        raise ValueError(f"order must be 'two' or 'three', got {order!r}")
    n = int(panels)
    coarse, _ = _double_integral(u, x, delta, side, n)
    while True:
        n *= 2
        fine, scale = _double_integral(u, x, delta, side, n)
        if abs(fine - coarse) <= STRESS_RTOL * max(abs(fine), 1e-3 * scale):
            break
        if n >= STRESS_MAX_PANELS:
            raise QuadratureFailure(f"stress quadrature at x={x} not settled: {coarse!r} vs {fine!r}")
        coarse = fine
    sigma = kappa * fine
    if order == "three":
        s = delta / 16
        d3 = (-u(x - 2 * s) + 2 * u(x - s) - 2 * u(x + s) + u(x + 2 * s)) / (2 * s**3)
        sigma -= kappa * delta**4 / 48 * float(d3)
    return sigma


# Studies ------------------------------------------------------------------------

@dataclass
class StudyResult:
    scheme: str
    delta: object
    m: int
    delta_max: float
    v_max: float | None = None
    E_r: float | None = None
    cond: float | None = None
    runtime: float = 0.0
    kappa: float | None = None
    field: ErrorField | None = field(default=None, repr=False)


def solve_case(problem, config: GridConfig, scheme, kappa: float | None = None,
               with_condition: bool = False, **options) -> StudyResult:
    """Solve one coupled case, compare with FDM on the same grid and with v."""
    start = time.perf_counter()
    kind = Scheme.parse(scheme)
    grid = build_grid(config)
    fdm = lu_solve(assemble(grid, problem, Scheme.FDM))
    system = assemble(grid, problem, CouplingScheme(kind, kappa), **options)
    err = delta_field(lu_solve(system), fdm)
    d_max = delta_max(err)
    v = v_reference_for(problem, config, kind)
    e_r = relative_error(d_max, v.v_max) if v.v_max > 0 else None
    cond = condition_number_2(system.matrix) if with_condition else None
    return StudyResult(kind.value, config.delta, config.m, d_max, v.v_max, e_r, cond,
                       time.perf_counter() - start, kappa, err)


def fdm_error(problem, config: GridConfig) -> StudyResult:
    """max |u_h - u_exact| over the nodes for the pure local model."""
    start = time.perf_counter()
    grid = build_grid(config)
    sol = lu_solve(assemble(grid, problem, Scheme.FDM))
    exact = np.array([problem.u_exact(x) for x in grid.nodes])
    err = float(np.abs(sol.values - exact).max())
    return StudyResult("fdm", config.h, config.m, err, runtime=time.perf_counter() - start)


def thread_count(n_cases: int) -> int:
    env = os.environ.get("PERI_COUPLE_THREADS")
    if env:
        try:
            return max(1, min(int(env), max(n_cases, 1)))
        except ValueError:
            raise ValueError(f"PERI_COUPLE_THREADS must be an integer, got {env!r}") from None
    return max(1, n_cases)


def run_cases(fn, cases) -> list:
    """Apply ``fn`` to every case, possibly in parallel, keeping input order."""
    cases = list(cases)
    workers = thread_count(len(cases))
    if workers == 1:
        return [fn(c) for c in cases]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, cases))


def loglog_slope(xs, ys) -> float:
    """Least-squares slope of log y against log x."""
    lx = np.log(np.asarray(xs, dtype=float))
    ly = np.log(np.asarray(ys, dtype=float))
    return float(np.polyfit(lx, ly, 1)[0])


def convergence_study(scheme, problem, m_fixed: int, deltas, a=1, b=2, ell=3):
    """Δ_max for decreasing δ at fixed m and the fitted log-log slope.

    For ``fdm`` the entries of ``deltas`` are grid spacings and the error is
    measured against the exact solution.
    """
    deltas = list(deltas)
    if len(deltas) < 3:
        raise ValueError("need at least 3 deltas for a slope")
    kind = Scheme.parse(scheme)
    if kind is Scheme.FDM:
        results = run_cases(lambda h: fdm_error(problem, GridConfig(ell, a, b, h, 1)), deltas)
    else:
        results = run_cases(
            lambda d: solve_case(problem, GridConfig.from_delta(ell, a, b, d, m_fixed), kind), deltas)
    slope = loglog_slope([float(r.delta) for r in results], [abs(r.delta_max) for r in results])
    return results, slope


def m_study(scheme, problem, delta_fixed, ms, a=1, b=2, ell=3) -> list:
    return run_cases(
        lambda m: solve_case(problem, GridConfig.from_delta(ell, a, b, delta_fixed, m), scheme), list(ms))


def exact_fraction(value) -> Fraction | float:
    return value if isinstance(value, Fraction) else float(value)
