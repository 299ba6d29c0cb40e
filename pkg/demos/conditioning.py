"""Condition numbers of the assembled matrices.

Displacement matching duplicates unknowns across the overlaps, and the
resulting matrix is noticeably worse conditioned than the stress-matching
or variable-horizon ones.  numpy's SVD is used here only as a cross-check
of the iterative estimate.
"""
from fractions import Fraction

import numpy as np

from peri_couple import GridConfig, assemble, build_grid, catalog_get, condition_number_2

for name in ("quartic_mixed", "quartic_dirichlet"):
    problem = catalog_get(name)
    print(name)
    for delta in (Fraction(1, 8), Fraction(1, 16), Fraction(1, 32), Fraction(1, 64)):
        grid = build_grid(GridConfig.from_delta(3, 1, 2, delta, 2))
        cond = {s: condition_number_2(assemble(grid, problem, s).matrix) for s in ("fdm", "mdcm", "mscm", "vhcm")}
        check = np.linalg.cond(assemble(grid, problem, "mdcm").matrix)
        row = "  ".join(f"{s}={c:9.3e}" for s, c in cond.items())
        print(f"  delta={str(delta):5s} {row}  (numpy mdcm {check:9.3e}, ratio mdcm/mscm {cond['mdcm'] / cond['mscm']:.1f})")
