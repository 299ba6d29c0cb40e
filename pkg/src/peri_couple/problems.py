"""Manufactured problems on the bar (0, 3) with E = 1."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import UnknownProblem

MIXED = "mixed"
DIRICHLET_BOTH = "dirichlet_both"


@dataclass(frozen=True)
class BoundaryCondition:
    """``mixed``: u(0) = 0 and E u'(ell) = g.  ``dirichlet_both``: u(0) = u(ell) = 0."""

    kind: str
    g: float = 0.0

    def __post_init__(self):
        if self.kind not in (MIXED, DIRICHLET_BOTH):
            raise ValueError(f"unknown boundary condition kind {self.kind!r}")


@dataclass(frozen=True)
class ManufacturedProblem:
    name: str
    u_exact: Callable[[float], float]
    du_exact: Callable[[float], float]
    f_b: Callable[[float], float]
    bc: BoundaryCondition
    lambda4: float
    E: float = 1.0
    ell: float = 3.0


_ELL = 3.0
_C3 = 2.0 / (3.0 * math.sqrt(3.0))


def _cubic_mixed() -> ManufacturedProblem:
    return ManufacturedProblem(
        name="cubic_mixed",
        u_exact=lambda x: x**3,
        du_exact=lambda x: 3 * x**2,
        f_b=lambda x: -6 * x,
        bc=BoundaryCondition(MIXED, g=3 * _ELL**2),
        lambda4=0.0,
    )


def _cubic_dirichlet() -> ManufacturedProblem:
    # x(3-2x)(3-x) = 2x^3 - 9x^2 + 9x
    return ManufacturedProblem(
        name="cubic_dirichlet",
        u_exact=lambda x: _C3 * x * (3 - 2 * x) * (3 - x),
        du_exact=lambda x: _C3 * (6 * x**2 - 18 * x + 9),
        f_b=lambda x: -(2 / math.sqrt(3.0)) * (-6 + 4 * x),
        bc=BoundaryCondition(DIRICHLET_BOTH),
        lambda4=0.0,
    )


def _quartic_mixed() -> ManufacturedProblem:
    return ManufacturedProblem(
        name="quartic_mixed",
        u_exact=lambda x: x**4,
        du_exact=lambda x: 4 * x**3,
        f_b=lambda x: -12 * x**2,
        bc=BoundaryCondition(MIXED, g=4 * _ELL**3),
        lambda4=24.0,
    )


def _quartic_dirichlet() -> ManufacturedProblem:
    return ManufacturedProblem(
        name="quartic_dirichlet",
        u_exact=lambda x: (16 / 81) * x**2 * (3 - x) ** 2,
        du_exact=lambda x: (32 / 81) * x * (3 - x) * (3 - 2 * x),
        f_b=lambda x: -32 / 9 + 64 * x / 9 - 64 * x**2 / 27,
        bc=BoundaryCondition(DIRICHLET_BOTH),
        lambda4=128 / 27,
    )


CATALOG = {
    "cubic_mixed": _cubic_mixed,
    "cubic_dirichlet": _cubic_dirichlet,
    "quartic_mixed": _quartic_mixed,
    "quartic_dirichlet": _quartic_dirichlet,
}


def catalog_get(name: str) -> ManufacturedProblem:
    try:
        return CATALOG[name]()
    except KeyError:
        raise UnknownProblem(f"unknown problem {name!r}; choose from {sorted(CATALOG)}") from None


def problem_names() -> list[str]:
    return list(CATALOG)
