"""Command line interface.

Exit codes: 0 success, 1 a verification check failed, 2 usage or input
error, 3 cycle enumeration budget exceeded. Reports go to stdout as JSON (or
CSV for ``limit --table --format csv``); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import checks
from .cycles import DEFAULT_BUDGET
from .errors import BudgetExceededError, IharaError
from .graph import arcs, load_graph
from .lattice import (
    QuadratureSpec,
    laplacian_form_reciprocal,
    limit_reciprocal_closed_form,
    limit_reciprocal_quadrature,
    theorem4_table,
)
from .report import dumps, fmt_number
from .walk import (
    arc_state,
    evolve,
    grover_char_poly,
    grover_matrix,
    grover_spectrum,
    multiset_distance,
    random_state,
    uniform_state,
    vertex_state,
)
from .zeta import (
    cjk_evaluate,
    generalized_zeta_reciprocal,
    ihara_reciprocal_polynomial,
    rooted_zeta_series,
    zeta_series_truncated,
)

EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 1, 2, 3


class UsageError(Exception):
    pass


def _graph_info(g):
    return {"name": g.name, "n": g.n, "m": g.m}


def run_zeta(args):
    g = load_graph(args.graph)
    report = {"command": "zeta", "graph": _graph_info(g), "route": args.route}
    if args.route == "poly":
        poly = ihara_reciprocal_polynomial(g)
        report.update(quantity="Z(G,u)^-1", coefficients=poly.to_json(), tolerance=0)
        if args.at is not None:
            report["value"] = fmt_number(poly(Fraction(args.at)))
    elif args.route in ("series", "rooted"):
        if args.order is None:
            raise UsageError(f"--route {args.route} needs --order")
        if args.route == "series":
            series = zeta_series_truncated(g, args.order, budget=args.budget)
            report["quantity"] = "Z(G,u)"
        else:
            series = rooted_zeta_series(g, args.root, args.order, budget=args.budget)
            report.update(quantity="zeta_G(u) rooted", root=args.root)
        report.update(order=args.order, coefficients=[str(c) for c in series.coeffs],
                      tolerance=0)
    elif args.route == "cjk":
        if args.at is None:
            raise UsageError("--route cjk needs --at")
        ev = cjk_evaluate(g, args.at)
        ref = generalized_zeta_reciprocal(g, args.at)
        report.update(quantity="zeta_G(u)^-1", evaluation=ev.to_json(),
                      check={"route": ref.route.value, "value": fmt_number(ref.value),
                             "abs_diff": fmt_number(abs(ev.value - ref.value)),
                             "tolerance": checks.CJK_TOL})
    return report, 0


def _initial_state(g, spec):
    kind, _, arg = spec.partition(":")
    if kind == "uniform":
        return uniform_state(g)
    if kind == "arc":
        e = int(arg)
        if not 0 <= e < 2 * g.m:
            raise UsageError(f"arc index {e} outside [0, {2 * g.m})")
        return arc_state(g, e)
    if kind == "vertex":
        return vertex_state(g, int(arg))
    if kind == "random":
        return random_state(g, int(arg) if arg else 0)
    raise UsageError(f"unknown --init {spec!r}")


def run_grover(args):
    g = load_graph(args.graph)
    report = {"command": "grover", "graph": _graph_info(g)}
    if args.charpoly:
        report.update(quantity="det(lambda I - U)", route="konno_sato",
                      coefficients=grover_char_poly(g).to_json(), tolerance=0)
    elif args.spectrum:
        mapped, direct, trans = grover_spectrum(g)
        dist = multiset_distance(mapped.values, direct.values)
        report.update(quantity="Spec(U)", mapped=mapped.to_json(), direct=direct.to_json(),
                      transition=trans.to_json(), multiset_distance=fmt_number(dist),
                      tolerance=checks.SPECTRUM_TOL, agree=bool(dist <= checks.SPECTRUM_TOL))
    else:
        U = grover_matrix(g)
        psi0 = _initial_state(g, args.init)
        psi = evolve(U, psi0, args.evolve)
        report.update(quantity="U^t psi0", init=args.init, state=psi.to_json(),
                      norm=fmt_number(psi.norm()), arcs=[list(a) for a in arcs(g).arcs])
    return report, 0


def run_limit(args):
    if args.table:
        try:
            n_list = [int(x) for x in args.table.split(",")]
        except ValueError as exc:
            raise UsageError(f"bad --table {args.table!r}") from exc
        tab = theorem4_table(args.at, n_list)
        if args.format == "csv":
            return tab.to_csv(), 0
        return {"command": "limit", "table": tab.to_json()}, 0
    spec = QuadratureSpec(args.nodes)
    quad = limit_reciprocal_quadrature(args.at, spec)
    return {
        "command": "limit",
        "nodes": args.nodes,
        "quadrature": quad.to_json(),
        "laplacian_form": laplacian_form_reciprocal(args.at, spec).to_json(),
        "closed_form": limit_reciprocal_closed_form(args.at).to_json(),
    }, 0


def run_verify(args):
    results = checks.SUITES[args.suite]()
    failures = [c.name for c in results if not bool(c.passed)]
    report = {"command": "verify", "suite": args.suite,
              "passed": not failures, "failures": failures,
              "checks": [c.to_json() for c in results]}
    return report, EXIT_FAIL if failures else 0


def build_parser():
    p = argparse.ArgumentParser(prog="ihara", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    z = sub.add_parser("zeta", help="Ihara / generalized zeta of a graph")
    z.add_argument("--graph", required=True, help="cycle:n, complete:n, path:n, petersen, cube or a JSON file")
    z.add_argument("--route", choices=["poly", "series", "cjk", "rooted"], default="poly")
    z.add_argument("--order", type=int)
    z.add_argument("--at", type=float)
    z.add_argument("--root", type=int, default=0)
    z.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    z.set_defaults(func=run_zeta)

    gr = sub.add_parser("grover", help="Grover walk: spectrum, characteristic polynomial, evolution")
    gr.add_argument("--graph", required=True)
    act = gr.add_mutually_exclusive_group(required=True)
    act.add_argument("--spectrum", action="store_true")
    act.add_argument("--charpoly", action="store_true")
    act.add_argument("--evolve", type=int, metavar="T")
    gr.add_argument("--init", default="uniform", help="uniform, arc:i, vertex:u or random:seed")
    gr.set_defaults(func=run_grover)

    lim = sub.add_parser("limit", help="C_n -> Z limit of the generalized zeta")
    lim.add_argument("--at", type=float, required=True)
    lim.add_argument("--nodes", type=int, default=1024)
    lim.add_argument("--table", help="comma separated ascending n values")
    lim.add_argument("--format", choices=["json", "csv"], default="json")
    lim.set_defaults(func=run_limit)

    v = sub.add_parser("verify", help="run a cross-check suite")
    v.add_argument("--suite", choices=sorted(checks.SUITES), required=True)
    v.set_defaults(func=run_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "grover" and args.evolve is not None and args.evolve < 0:
        parser.error("--evolve needs a non-negative step count")
    try:
        report, code = args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, IharaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(report if isinstance(report, str) else dumps(report) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
