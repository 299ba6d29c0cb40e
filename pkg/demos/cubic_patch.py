"""A cubic displacement is reproduced exactly by every coupling scheme.

The peridynamic operator with kappa = 2E/delta^2 agrees with -E u'' on
polynomials up to degree three, so for u = x^3 the coupled solution should
match the exact solution to round-off, overlaps included.
"""
from fractions import Fraction

import numpy as np

from peri_couple import GridConfig, assemble, build_grid, catalog_get, lu_solve

grid = build_grid(GridConfig.from_delta(3, 1, 2, Fraction(1, 8), 2))
print(f"h = {grid.h}, delta = {grid.delta}, {grid.n + 1} grid points")

for name in ("cubic_mixed", "cubic_dirichlet"):
    problem = catalog_get(name)
    for scheme in ("fdm", "mdcm", "mscm", "vhcm"):
        sol = lu_solve(assemble(grid, problem, scheme))
        exact = np.array([problem.u_exact(grid.nodes[sol.dof_map.point(i)]) for i in range(sol.dof_map.N)])
        print(f"{name:16s} {scheme:5s} N={sol.dof_map.N:3d}  max |u - u_exact| = {np.abs(sol.values - exact).max():.1e}")
