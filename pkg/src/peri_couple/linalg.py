"""Dense LU solves and 2-norm condition numbers.

The factorization is ordinary row-pivoted Gaussian elimination on a dense
array.  Elimination work is restricted to the band the matrix actually
occupies (measured from its nonzeros), which keeps the coupled systems with a
few thousand unknowns cheap without changing the dense storage.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, SingularMatrix

PIVOT_RTOL = 1e-14
RESIDUAL_RTOL = 1e-10


def bandwidths(matrix: np.ndarray) -> tuple[int, int]:
    """Lower and upper bandwidth of the nonzero pattern."""
    rows, cols = np.nonzero(matrix)
    if rows.size == 0:
        return 0, 0
    diff = cols - rows
    return int(max(0, -diff.min())), int(max(0, diff.max()))


@dataclass
class LuFactorization:
    """``P A = L U`` with unit-diagonal ``L`` stored below the diagonal of ``lu``.

    Row ``i`` of ``P A`` is row ``perm[i]`` of ``A``.
    """

    lu: np.ndarray
    perm: np.ndarray
    norm_inf: float

    @property
    def n(self) -> int:
        return self.lu.shape[0]

    def solve(self, rhs) -> np.ndarray:
        lu = self.lu
        y = np.asarray(rhs, dtype=float)[self.perm].copy()
        for i in range(1, self.n):
            y[i] -= lu[i, :i] @ y[:i]
        for i in range(self.n - 1, -1, -1):
            y[i] = (y[i] - lu[i, i + 1:] @ y[i + 1:]) / lu[i, i]
        return y

    def solve_transpose(self, rhs) -> np.ndarray:
        """Solve ``A^T x = rhs`` with the same factors."""
        lu = self.lu
        z = np.asarray(rhs, dtype=float).copy()
        for i in range(self.n):
            z[i] = (z[i] - lu[:i, i] @ z[:i]) / lu[i, i]
        for i in range(self.n - 2, -1, -1):
            z[i] -= lu[i + 1:, i] @ z[i + 1:]
        x = np.empty_like(z)
        x[self.perm] = z
        return x


def lu_factor(matrix) -> LuFactorization:
    a = np.array(matrix, dtype=float, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    n = a.shape[0]
    norm_inf = float(np.abs(a).sum(axis=1).max()) if n else 0.0
    tol = PIVOT_RTOL * norm_inf
    kl, ku = bandwidths(a)
    perm = np.arange(n)
    for k in range(n):
        r_end = min(n, k + kl + 1)
        c_end = min(n, k + kl + ku + 1)
        p = k + int(np.argmax(np.abs(a[k:r_end, k])))
        pivot = a[p, k]
        if not abs(pivot) > tol:
            raise SingularMatrix(f"pivot {abs(pivot):.3e} at column {k} below {tol:.3e}")
        if p != k:
            a[[k, p]] = a[[p, k]]
            perm[[k, p]] = perm[[p, k]]
        if k + 1 < r_end:
            a[k + 1:r_end, k] /= pivot
            a[k + 1:r_end, k + 1:c_end] -= np.outer(a[k + 1:r_end, k], a[k, k + 1:c_end])
    return LuFactorization(a, perm, norm_inf)


def solve_dense(matrix, rhs) -> np.ndarray:
    """Solve ``matrix @ x = rhs`` and check the backward-error bound."""
    a = np.asarray(matrix, dtype=float)
    b = np.asarray(rhs, dtype=float)
    if b.shape != (a.shape[0],):
        raise ValueError(f"rhs shape {b.shape} does not match matrix {a.shape}")
    fact = lu_factor(a)
    x = fact.solve(b)
    bound = RESIDUAL_RTOL * (fact.norm_inf * np.abs(x).max(initial=0.0) + np.abs(b).max(initial=0.0))
    residual = b - a @ x
    if np.abs(residual).max(initial=0.0) > bound:
        x = x + fact.solve(residual)
        residual = b - a @ x
        if np.abs(residual).max(initial=0.0) > bound:
            raise SingularMatrix(f"residual {np.abs(residual).max():.3e} exceeds {bound:.3e}")
    return x


@dataclass(frozen=True)
class Solution:
    """Solved DOF vector together with the numbering it refers to."""

    values: np.ndarray
    dof_map: object
    grid: object
    scheme: object = None

    def at(self, model: str, k: int) -> float:
        return float(self.values[self.dof_map.dof(model, k)])


def lu_solve(system) -> Solution:
    """Solve an assembled ``LinearSystem``."""
    x = solve_dense(system.matrix, system.rhs)
    return Solution(x, system.dof_map, system.grid, getattr(system, "scheme", None))


# Singular values -------------------------------------------------------------

MAX_ITER = 10_000
RQ_RTOL = 1e-6
RESTART_EVERY = 2_000


def _dominant_eigenvalue(apply, n, rng, what):
    """Power iteration for the largest eigenvalue of an SPD operator.

    Returns the converged Rayleigh quotient.  Restarts from a fresh random
    vector every RESTART_EVERY iterations when the quotient stalls short of
    the tolerance; raises NoConvergence with the best value after MAX_ITER.
    """
    best = 0.0
    v = rng.standard_normal(n)
    v /= np.linalg.norm(v)
    rq_old = None
    for it in range(1, MAX_ITER + 1):
        w = apply(v)
        rq = float(v @ w)
        best = max(best, rq)
        norm = np.linalg.norm(w)
        if norm == 0.0:
            raise SingularMatrix(f"operator annihilated the iterate while estimating {what}")
        if rq_old is not None and abs(rq - rq_old) < RQ_RTOL * abs(rq):
            return rq
        rq_old = rq
        v = w / norm
        if it % RESTART_EVERY == 0:
            v = rng.standard_normal(n)
            v /= np.linalg.norm(v)
            rq_old = None
    raise NoConvergence(f"{what} did not converge in {MAX_ITER} iterations", estimate=best)


def extreme_singular_values(matrix, seed: int = 0) -> tuple[float, float]:
    """(sigma_max, sigma_min) by power iteration on A^T A and inverse iteration.

    On NoConvergence the exception's ``estimate`` is the best
    ``(sigma_max, sigma_min)`` pair reached.
    """
    a = np.asarray(matrix, dtype=float)
    n = a.shape[0]
    rng = np.random.default_rng(seed)
    fact = lu_factor(a)
    failed = None
    try:
        lam_max = _dominant_eigenvalue(lambda v: a.T @ (a @ v), n, rng, "sigma_max")
    except NoConvergence as exc:
        lam_max, failed = exc.estimate, exc
    # (A^T A)^{-1} = A^{-1} A^{-T}
    try:
        mu = _dominant_eigenvalue(lambda v: fact.solve(fact.solve_transpose(v)), n, rng, "sigma_min")
    except NoConvergence as exc:
        mu, failed = exc.estimate, exc
    pair = (float(np.sqrt(lam_max)), float(1.0 / np.sqrt(mu)))
    if failed is not None:
        raise NoConvergence(str(failed), estimate=pair)
    return pair


def condition_number_2(matrix, seed: int = 0) -> float:
    """``||A||_2 ||A^{-1}||_2`` to about 1% relative accuracy.

    Raises NoConvergence carrying the best condition estimate.
    """
    try:
        s_max, s_min = extreme_singular_values(matrix, seed)
    except NoConvergence as exc:
        s_max, s_min = exc.estimate
        raise NoConvergence(str(exc), estimate=s_max / s_min) from None
    return s_max / s_min
