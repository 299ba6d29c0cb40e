"""Row stencils for the finite-difference and peridynamic equations.

A stencil is a set of integer node offsets with coefficients and a common
scale; assemblers drop it into whatever block of the matrix they need.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

FORWARD = "forward"
BACKWARD = "backward"
PLUS = "plus"
MINUS = "minus"


@dataclass(frozen=True)
class Stencil:
    offsets: tuple
    coefficients: tuple
    scale: float = 1.0

    def __post_init__(self):
        offsets = tuple(int(o) for o in self.offsets)
        coefficients = tuple(float(c) for c in self.coefficients)
        if len(offsets) != len(coefficients):
            raise ValueError("offsets and coefficients differ in length")
        if any(b <= a for a, b in zip(offsets, offsets[1:])):
            raise ValueError("offsets must be strictly increasing")
        if not np.all(np.isfinite(coefficients)):
            raise ValueError("non-finite stencil coefficient")
        object.__setattr__(self, "offsets", offsets)
        object.__setattr__(self, "coefficients", coefficients)

    @property
    def weights(self) -> np.ndarray:
        """Coefficients with the scale folded in."""
        return self.scale * np.asarray(self.coefficients)

    def items(self):
        return zip(self.offsets, self.weights)

    def apply(self, values, center: int) -> float:
        """Evaluate the stencil on nodal ``values`` around index ``center``."""
        values = np.asarray(values, dtype=float)
        idx = center + np.asarray(self.offsets)
        return float(self.weights @ values[idx])

    def apply_function(self, u, x: float, h: float) -> float:
        """Evaluate the stencil on samples ``u(x + offset * h)``."""
        samples = np.array([u(x + o * h) for o in self.offsets], dtype=float)
        return float(self.weights @ samples)


def central_second_difference(E: float, h: float) -> Stencil:
    """Row for ``-E u''``: (E/h^2) * [-1, 2, -1]."""
    if h <= 0:
        raise ValueError("h must be positive")
    return Stencil((-1, 0, 1), (-1.0, 2.0, -1.0), E / h**2)


def one_sided_third_order(direction: str, h: float) -> Stencil:
    """Four-point one-sided approximation of ``u'`` exact for cubics."""
    if h <= 0:
        raise ValueError("h must be positive")
    if direction == FORWARD:
        return Stencil((0, 1, 2, 3), (-11.0, 18.0, -9.0, 2.0), 1.0 / (6.0 * h))
    if direction == BACKWARD:
        return Stencil((-3, -2, -1, 0), (-2.0, 9.0, -18.0, 11.0), 1.0 / (6.0 * h))
    raise ValueError(f"direction must be {FORWARD!r} or {BACKWARD!r}, got {direction!r}")


def peridynamic_row(kappa: float, m_eff: int, h: float | None = None) -> Stencil:
    """Collocated bond-based operator ``-int kappa (u(y)-u(x))/|y-x| dy``.

    Composite trapezoid rule on the nodes ``x +- j h``, ``j = 1..m_eff``; the
    node ``y = x`` contributes nothing.  The neighbour weight is ``kappa/j``
    (``kappa/(2 m_eff)`` at the horizon), independent of ``h`` because the
    quadrature spacing cancels the bond length.  ``h`` is accepted for
    symmetry with the other builders and ignored.
    """
    m_eff = int(m_eff)
    if m_eff < 1:
        raise ValueError("m_eff must be >= 1")
    if not kappa > 0:
        raise ValueError("kappa must be positive")
    j = np.arange(1, m_eff + 1, dtype=float)
    w = 1.0 / j
    w[-1] *= 0.5
    side = -w
    coefficients = np.concatenate([side[::-1], [2.0 * w.sum()], side])
    offsets = tuple(range(-m_eff, m_eff + 1))
    return Stencil(offsets, tuple(coefficients), float(kappa))


def discrete_stress_row(side: str, kappa: float, delta: float, h: float) -> Stencil:
    """Discrete peridynamic stress ``(kappa delta^2 / 2) u'`` at a node.

    The plus side looks forward into the peridynamic region, the minus side
    backward.
    """
    direction = {PLUS: FORWARD, MINUS: BACKWARD}.get(side)
    if direction is None:
        raise ValueError(f"side must be {PLUS!r} or {MINUS!r}, got {side!r}")
    base = one_sided_third_order(direction, h)
    return Stencil(base.offsets, base.coefficients, base.scale * kappa * delta**2 / 2.0)
