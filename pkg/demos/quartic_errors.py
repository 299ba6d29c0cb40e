"""Coupling error for the quartic solution with a mixed boundary condition.

For u = x^4 the peridynamic model is no longer exact: inside (a, b) it adds
a modeling error v(x) of size lambda delta^2 / 48.  The coupled solution
minus the classical FDM solution, Delta(x), should follow v(x), and its
maximum should fall off like delta^2.
"""
from fractions import Fraction

from peri_couple import GridConfig, catalog_get, solve_case
from peri_couple.analysis import loglog_slope

problem = catalog_get("quartic_mixed")
deltas = [Fraction(1, 8), Fraction(1, 16), Fraction(1, 32), Fraction(1, 64)]

print(f"{'delta':>6} {'m':>2} {'scheme':>6} {'Delta_max':>11} {'v_max':>11} {'E_r':>8}")
for delta in deltas:
    for m in (2, 4, 8):
        config = GridConfig.from_delta(3, 1, 2, delta, m)
        for scheme in ("mdcm", "mscm", "vhcm"):
            r = solve_case(problem, config, scheme)
            print(f"{str(delta):>6} {m:2d} {scheme:>6} {r.delta_max:11.7f} {r.v_max:11.7f} {r.E_r:8.4f}")

# delta-convergence at fixed m
for scheme in ("mdcm", "mscm", "vhcm"):
    d_max = [solve_case(problem, GridConfig.from_delta(3, 1, 2, d, 2), scheme).delta_max for d in deltas]
    print(f"{scheme}: log-log slope of Delta_max against delta = {loglog_slope([float(d) for d in deltas], d_max):.3f}")
