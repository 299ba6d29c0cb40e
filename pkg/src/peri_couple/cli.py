"""Command-line driver writing plot-ready CSV/TSV files.

Exit codes: 0 success, 2 invalid input, 3 solver failure.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .analysis import convergence_study, delta_field, delta_max, run_cases, solve_case
from .assembly import CouplingScheme, assemble, nominal_kappa
from .errors import CouplingError, NoConvergence, UnknownProblem
from .linalg import condition_number_2, lu_solve
from .mesh import GridConfig, Scheme, build_grid
from .problems import DIRICHLET_BOTH, MIXED, catalog_get

EXIT_INVALID = 2
EXIT_SOLVER = 3

COUPLED = ("mdcm", "mscm", "vhcm")
CONDITION_PROBLEMS = {MIXED: "quartic_mixed", DIRICHLET_BOTH: "quartic_dirichlet"}


class InvalidInput(Exception):
    pass


def parse_number(text: str) -> Fraction:
    """Exact value from '1/8', '0.125' or '3'."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidInput(f"not a number: {text!r}") from None


def parse_list(text: str, conv=parse_number) -> list:
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise InvalidInput("empty list")
    return [conv(t) for t in items]


def parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InvalidInput(f"not an integer: {text!r}") from None


def fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (int, str)):
        return str(value)
    return format(float(value) + 0.0, ".10g")  # no "-0"


def write_table(path: Path, header, rows, sep: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(sep.join(header) + "\n")
        for row in rows:
            fh.write(sep.join(fmt(v) for v in row) + "\n")


# input validation -----------------------------------------------------------------

def _config(args, delta, m) -> GridConfig:
    if delta <= 0:
        raise InvalidInput(f"delta must be positive, got {delta}")
    if m < 1:
        raise InvalidInput(f"m must be >= 1, got {m}")
    return GridConfig.from_delta(args.ell, args.a, args.b, delta, m)


def _check_case(problem, config, scheme, kappa=None):
    """Build the grid and assemble once so precondition failures surface before any solve."""
    if kappa is not None and not kappa > 0:
        raise InvalidInput(f"kappa must be positive, got {kappa}")
    grid = build_grid(config)
    assemble(grid, problem, CouplingScheme(Scheme.parse(scheme), None if kappa is None else float(kappa)))


def _scheme(name: str) -> str:
    try:
        return Scheme.parse(name).value
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None


# commands ---------------------------------------------------------------------------

def cmd_solve(args):
    problem = catalog_get(args.problem)
    scheme = _scheme(args.scheme)
    if scheme == "fdm" and args.h is not None:
        config = GridConfig(args.ell, args.a, args.b, args.h, 1)
    else:
        if args.delta is None:
            raise InvalidInput("--delta is required (or --h with --scheme fdm)")
        config = _config(args, args.delta, args.m)
    kappa = args.kappa
    _check_case(problem, config, scheme, kappa)

    grid = build_grid(config)
    fdm = lu_solve(assemble(grid, problem, Scheme.FDM))
    sol = lu_solve(assemble(grid, problem, CouplingScheme(Scheme.parse(scheme), None if kappa is None else float(kappa))))
    err = delta_field(sol, fdm)
    sol_rows = [(sol.dof_map.point(i), grid.nodes[sol.dof_map.point(i)], sol.dof_map.model(i), v)
                for i, v in enumerate(sol.values)]
    out = Path(args.out)
    write_table(out / f"solution.{args.ext}", ("k", "x", "model", "value"), sol_rows, args.sep)
    write_table(out / f"delta_field.{args.ext}", ("x", "delta"), zip(grid.nodes, err.values), args.sep)
    print(f"{scheme} {args.problem}: delta_max = {fmt(delta_max(err))}")


def cmd_table(args):
    problem = catalog_get(args.problem)
    cases = []
    for d in args.deltas:
        for m in args.ms:
            config = _config(args, d, m)
            for s in COUPLED:
                _check_case(problem, config, s)
                cases.append((d, m, s, config))
    results = run_cases(lambda c: solve_case(problem, c[3], c[2]), cases)
    rows = [(d, m, s, r.delta_max, r.v_max, r.E_r) for (d, m, s, _), r in zip(cases, results)]
    write_table(Path(args.out) / f"table.{args.ext}", ("delta", "m", "scheme", "delta_max", "v_max", "E_r"),
                rows, args.sep)


def cmd_convergence(args):
    problem = catalog_get(args.problem)
    schemes = [_scheme(s) for s in args.schemes]
    if len(args.deltas) < 3:
        raise InvalidInput("convergence needs at least 3 deltas")
    for s in schemes:
        for d in args.deltas:
            if s == "fdm":
                config = GridConfig(args.ell, args.a, args.b, d, 1)
            else:
                config = _config(args, d, args.m)
            _check_case(problem, config, s)
    rows = []
    for s in schemes:
        results, slope = convergence_study(s, problem, args.m, args.deltas, args.a, args.b, args.ell)
        for d, r in zip(args.deltas, results):
            rows.append((s, d, 1 if s == "fdm" else args.m, r.delta_max, slope))
    write_table(Path(args.out) / f"convergence.{args.ext}", ("scheme", "delta", "m", "delta_max", "slope"),
                rows, args.sep)


def cmd_condition(args):
    schemes = [_scheme(s) for s in args.schemes]
    cases = []
    for bc in args.bcs:
        if bc not in CONDITION_PROBLEMS:
            raise InvalidInput(f"unknown boundary condition {bc!r}; choose from {sorted(CONDITION_PROBLEMS)}")
        problem = catalog_get(CONDITION_PROBLEMS[bc])
        for d in args.deltas:
            config = _config(args, d, args.m)
            for s in schemes:
                _check_case(problem, config, s)
                cases.append((bc, d, s, problem, config))

    def work(case):
        _, _, s, problem, config = case
        system = assemble(build_grid(config), problem, s)
        try:
            return condition_number_2(system.matrix), True
        except NoConvergence as exc:
            return exc.estimate, False

    results = run_cases(work, cases)
    rows = [(bc, d, s, cond, "yes" if ok else "no") for (bc, d, s, _, _), (cond, ok) in zip(cases, results)]
    write_table(Path(args.out) / f"condition.{args.ext}", ("bc", "delta", "scheme", "cond", "converged"),
                rows, args.sep)


def cmd_kappa_sweep(args):
    problem = catalog_get(args.problem)
    scheme = _scheme(args.scheme)
    if scheme not in ("mdcm", "mscm"):
        raise InvalidInput(f"kappa-sweep supports mdcm and mscm, got {scheme}")
    config = _config(args, args.delta, args.m)
    nominal = Fraction(nominal_kappa(problem.E, float(config.delta))).limit_denominator(10**9)
    kappas = list(args.kappas)
    if nominal not in kappas:
        kappas.append(nominal)
    kappas.sort()
    for k in kappas:
        _check_case(problem, config, scheme, k)
    results = run_cases(lambda k: solve_case(problem, config, scheme, kappa=float(k)), kappas)
    rows = []
    for k, r in zip(kappas, results):
        for x, d in zip(r.field.x, r.field.values):
            rows.append((float(k), x, d, r.delta_max))
    write_table(Path(args.out) / f"kappa.{args.ext}", ("kappa", "x", "delta", "delta_max"), rows, args.sep)


# argument parsing -------------------------------------------------------------------

def _arg(conv):
    def inner(text):
        try:
            return conv(text)
        except InvalidInput as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    return inner


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="peri-couple",
                                     description="1D local/nonlocal coupling solver (FDM, MDCM, MSCM, VHCM).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, geometry=True):
        p.add_argument("--out", default=".", help="output directory")
        p.add_argument("--format", choices=("csv", "tsv"), default="csv")
        if geometry:
            p.add_argument("--ell", type=_arg(parse_number), default=Fraction(3))
            p.add_argument("--a", type=_arg(parse_number), default=Fraction(1))
            p.add_argument("--b", type=_arg(parse_number), default=Fraction(2))

    p = sub.add_parser("solve", help="single case: solution.csv and delta_field.csv")
    common(p)
    p.add_argument("--scheme", required=True)
    p.add_argument("--problem", required=True)
    p.add_argument("--delta", type=_arg(parse_number))
    p.add_argument("--m", type=_arg(parse_int), default=2)
    p.add_argument("--h", type=_arg(parse_number), help="grid spacing for --scheme fdm")
    p.add_argument("--kappa", type=_arg(parse_number))
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("table", help="Δ_max, v_max and E_r for all coupled schemes")
    common(p)
    p.add_argument("--problem", required=True)
    p.add_argument("--deltas", type=_arg(parse_list), default=parse_list("1/8,1/16,1/32,1/64"))
    p.add_argument("--ms", type=_arg(lambda t: parse_list(t, parse_int)), default=[2, 4, 8])
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("convergence", help="Δ_max against δ at fixed m with fitted slope")
    common(p)
    p.add_argument("--problem", required=True)
    p.add_argument("--schemes", type=_arg(lambda t: parse_list(t, str.strip)), default=list(COUPLED))
    p.add_argument("--m", type=_arg(parse_int), default=2)
    p.add_argument("--deltas", type=_arg(parse_list), default=parse_list("1/8,1/16,1/32,1/64"))
    p.set_defaults(func=cmd_convergence)

    p = sub.add_parser("condition", help="2-norm condition numbers of the assembled matrices")
    common(p)
    p.add_argument("--bcs", type=_arg(lambda t: parse_list(t, str.strip)), default=[MIXED, DIRICHLET_BOTH])
    p.add_argument("--schemes", type=_arg(lambda t: parse_list(t, str.strip)), default=["fdm", *COUPLED])
    p.add_argument("--m", type=_arg(parse_int), default=2)
    p.add_argument("--deltas", type=_arg(parse_list), default=parse_list("1/8,1/16,1/32,1/64"))
    p.set_defaults(func=cmd_condition)

    p = sub.add_parser("kappa-sweep", help="Δ(x) for several bond stiffnesses")
    common(p)
    p.add_argument("--scheme", default="mdcm")
    p.add_argument("--problem", required=True)
    p.add_argument("--kappas", type=_arg(parse_list), default=parse_list("126,127,127.96,128.2,129,130"))
    p.add_argument("--delta", type=_arg(parse_number), default=Fraction(1, 8))
    p.add_argument("--m", type=_arg(parse_int), default=2)
    p.set_defaults(func=cmd_kappa_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.sep = "," if args.format == "csv" else "\t"
    args.ext = args.format
    try:
        args.func(args)
    except (InvalidInput, UnknownProblem, ValueError) as exc:
        # GridError subclasses are ValueErrors too
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ArithmeticError, CouplingError) as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    return 0


if __name__ == "__main__":
    sys.exit(main())
