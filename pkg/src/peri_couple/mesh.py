"""Uniform grid over (0, ell) with interfaces a, b and the DOF numbering.

Degrees of freedom are stored 0-based.  The block formulas in the docstrings
use 1-based numbering, matching the discrete equations, so DOF ``i`` in a
docstring is array index ``i - 1``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import NonDivisibleSpacing, OverlapOutOfDomain

DIVISIBILITY_RTOL = 1e-12

LOCAL = "local"
PERIDYNAMIC = "peridynamic"


class Scheme(enum.Enum):
    FDM = "fdm"
    MDCM = "mdcm"
    MSCM = "mscm"
    VHCM = "vhcm"

    @classmethod
    def parse(cls, value) -> "Scheme":
        if isinstance(value, cls):
            return value
        kind = getattr(value, "kind", None)
        if isinstance(kind, cls):
            return kind
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown scheme {value!r}") from None

    @property
    def overlap(self) -> bool:
        return self in (Scheme.MDCM, Scheme.MSCM)


def _as_number(x):
    if isinstance(x, (Fraction, int)):
        return Fraction(x)
    return float(x)


@dataclass(frozen=True)
class GridConfig:
    """Geometry of the bar and the discretization.

    ``h`` is the grid spacing and ``m`` the horizon ratio, so the horizon is
    ``delta = m * h``.  Lengths may be given as ``Fraction`` to keep them exact.
    """

    ell: float
    a: float
    b: float
    h: float
    m: int = 1

    def __post_init__(self):
        for name in ("ell", "a", "b", "h"):
            object.__setattr__(self, name, _as_number(getattr(self, name)))
        if int(self.m) != self.m or self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m!r}")
        object.__setattr__(self, "m", int(self.m))
        if not self.h > 0:
            raise ValueError("h must be positive")
        if not 0 < self.a < self.b < self.ell:
            raise ValueError(f"need 0 < a < b < ell, got a={self.a}, b={self.b}, ell={self.ell}")

    @property
    def delta(self):
        return self.m * self.h

    @classmethod
    def from_delta(cls, ell, a, b, delta, m) -> "GridConfig":
        delta = _as_number(delta)
        return cls(ell=ell, a=a, b=b, h=delta / m, m=m)


def _interval_count(length, h, what: str) -> int:
    if isinstance(length, Fraction) and isinstance(h, Fraction):
        ratio = length / h
        if ratio.denominator != 1:
            raise NonDivisibleSpacing(f"h={h} does not divide {what}={length} ({what}/h={ratio})")
        return int(ratio)
    ratio = float(length) / float(h)
    count = round(ratio)
    if count < 1 or abs(ratio - count) >= DIVISIBILITY_RTOL * ratio:
        raise NonDivisibleSpacing(f"h={float(h)!r} does not divide {what}={float(length)!r} ({what}/h={ratio!r})")
    return int(count)


@dataclass(frozen=True)
class Grid:
    config: GridConfig
    n1: int
    n_delta: int
    n2: int
    nodes: np.ndarray = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.n1 + self.n_delta + self.n2

    @property
    def h(self) -> float:
        return float(self.config.h)

    @property
    def m(self) -> int:
        return self.config.m

    @property
    def delta(self) -> float:
        return float(self.config.delta)

    @property
    def k_a(self) -> int:
        """Grid index of the interface point a."""
        return self.n1

    @property
    def k_b(self) -> int:
        return self.n1 + self.n_delta

    def same_as(self, other: "Grid") -> bool:
        return (self.n1, self.n_delta, self.n2) == (other.n1, other.n_delta, other.n2) and np.isclose(self.h, other.h)


def build_grid(config: GridConfig) -> Grid:
    """Build the uniform grid ``x_k = k h``, ``k = 0..n``.

    Raises NonDivisibleSpacing when h does not divide a, b - a and ell - b, and
    OverlapOutOfDomain when the overlaps of width m*h leave (0, ell).
    """
    c = config
    n1 = _interval_count(c.a, c.h, "a")
    n_delta = _interval_count(c.b - c.a, c.h, "b-a")
    n2 = _interval_count(c.ell - c.b, c.h, "ell-b")
    if n1 < c.m or n2 < c.m:
        raise OverlapOutOfDomain(
            f"overlaps of width m*h={float(c.delta)!r} do not fit: a-m*h={float(c.a - c.delta)!r}, "
            f"b+m*h={float(c.b + c.delta)!r}, ell={float(c.ell)!r}"
        )
    n = n1 + n_delta + n2
    nodes = np.arange(n + 1) * float(c.h)
    nodes.flags.writeable = False
    return Grid(config=c, n1=n1, n_delta=n_delta, n2=n2, nodes=nodes)


@dataclass(frozen=True)
class DofMap:
    """Correspondence between DOF indices and (model, grid index) pairs.

    Overlap numbering (MDCM, MSCM), 1-based::

        i = 1..N1                 local,        k = i - 1
        i = N1+1..N1+N_delta      peridynamic,  k = i - 2 - m
        i = N1+N_delta+1..N       local,        k = i - 3 - 2m

    The no-overlap numbering (VHCM) is the same with m = 0.  FDM uses one DOF
    per grid point.
    """

    scheme_kind: str  # "overlap", "no_overlap" or "fdm"
    shift: int  # m for overlap, 0 otherwise
    N1: int
    N_delta: int
    N2: int
    models: tuple = field(repr=False)
    points: np.ndarray = field(repr=False, compare=False)

    @property
    def N(self) -> int:
        return self.N1 + self.N_delta + self.N2

    def point(self, i: int) -> int:
        """Grid index of the 0-based DOF ``i``."""
        return int(self.points[i])

    def model(self, i: int) -> str:
        return self.models[i]

    def dof(self, model: str, k: int) -> int:
        """0-based DOF carrying ``model`` at grid point ``k``."""
        s = self.shift
        if self.scheme_kind == "fdm":
            if model != LOCAL or not 0 <= k < self.N:
                raise KeyError((model, k))
            return k
        if model == PERIDYNAMIC:
            i = k + 2 + s
            if not self.N1 + 1 <= i <= self.N1 + self.N_delta:
                raise KeyError((model, k))
        elif model == LOCAL:
            i = k + 1
            if i > self.N1:
                i = k + 3 + 2 * s
                if not self.N1 + self.N_delta + 1 <= i <= self.N:
                    raise KeyError((model, k))
        else:
            raise KeyError((model, k))
        return i - 1

    def dofs_at(self, k: int) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.points == k)]


def build_dof_map(grid: Grid, scheme) -> DofMap:
    scheme = Scheme.parse(scheme)
    n = grid.n
    if scheme is Scheme.FDM:
        points = np.arange(n + 1)
        return DofMap("fdm", 0, n + 1, 0, 0, (LOCAL,) * (n + 1), points)
    s = grid.m if scheme.overlap else 0
    N1 = grid.n1 + 1
    N_delta = grid.n_delta + 1 + 2 * s
    N2 = grid.n2 + 1
    one_based = np.arange(1, N1 + N_delta + N2 + 1)
    points = np.where(
        one_based <= N1,
        one_based - 1,
        np.where(one_based <= N1 + N_delta, one_based - 2 - s, one_based - 3 - 2 * s),
    )
    models = (LOCAL,) * N1 + (PERIDYNAMIC,) * N_delta + (LOCAL,) * N2
    points.flags.writeable = False
    return DofMap("overlap" if s else "no_overlap", s, N1, N_delta, N2, models, points)
