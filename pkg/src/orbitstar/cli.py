"""Command-line front end.

Subcommands: algebra, nf, star, reduce, verify, rep, cohomology.  Exit
codes: 0 on success, 1 when a verification suite fails, 2 on configuration
or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cohomology import Cochain1, d1, h2_dimension, solve_coboundary
from .envelope import NCPoly
from .exprs import (
    ExprSyntaxError,
    format_cpoly,
    format_ncpoly,
    parse_expression,
    parse_hpoly,
    parse_rational,
)
from .lie import (
    LieAlgebra,
    adjoint_rep,
    algebra_from_json,
    check_jacobi,
    is_semisimple,
    killing_det,
    killing_form,
    predefined,
)
from .orbit import Orbit, orbit_from_json, sphere_orbit
from .poly import CPoly, monomials_of_degree
from .quantize import symmetrizer_product, pbw_basis_product
from .reps import (
    casimir_scalar,
    highest_weight_casimir,
    nonisomorphism_witness,
    sl2_casimir,
    su2_defining_rep,
)
from .scalars import H_ONE
from .verify import SUITES, SUITES_VERSION, run_suite, run_suites


class CLIError(Exception):
    """A configuration problem; reported on stderr with exit code 2."""


def _load_config(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CLIError(f"cannot read config {path}: {exc}") from exc


def _resolve_algebra(args) -> LieAlgebra:
    config = getattr(args, "config", None)
    if config:
        data = _load_config(config)
        if "algebra" in data and "dim" not in data:
            entry = data["algebra"]
            return predefined(entry) if isinstance(entry, str) else algebra_from_json(entry)
        return algebra_from_json(data)
    return predefined(getattr(args, "name", None) or "su2")


def _resolve_orbit(args, algebra=None) -> Orbit:
    config = getattr(args, "config", None)
    if config:
        data = _load_config(config)
        if "invariants" in data:
            return orbit_from_json(data, algebra=algebra)
        if "orbit" in data:
            return orbit_from_json(data["orbit"], algebra=algebra)
    c0 = Fraction(1)
    if getattr(args, "c", None):
        c0 = parse_rational(args.c)
    lift = None
    if getattr(args, "lift", None):
        lift = parse_hpoly(args.lift)
    return sphere_orbit(c0, lift=lift, algebra=algebra)


def _emit(args, text_lines, payload):
    if args.format == "json":
        print(json.dumps(payload, indent=2, default=str))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# Subcommands.

def cmd_algebra(args):
    L = _resolve_algebra(args)
    K = killing_form(L)
    payload = {
        "dim": L.dim,
        "names": list(L.names),
        "varnames": list(L.varnames),
        "jacobi": check_jacobi(L),
        "killing": [[str(x) for x in row] for row in K],
        "killing_det": str(killing_det(L)),
        "semisimple": is_semisimple(L),
    }
    lines = [
        f"algebra: dim {L.dim}, generators {', '.join(L.names)}",
        f"jacobi identity: {'ok' if payload['jacobi'] else 'FAILS'}",
        f"killing determinant: {payload['killing_det']}"
        f" ({'semisimple' if payload['semisimple'] else 'degenerate'})",
    ]
    _emit(args, lines, payload)
    return 0


def cmd_nf(args):
    L = _resolve_algebra(args)
    value = parse_expression(args.expr, mode="noncommutative", algebra=L)
    nf = value.normal_form()
    text = format_ncpoly(nf)
    _emit(args, [text], {"input": args.expr, "normal_form": text})
    return 0


def _select_product(args, L):
    name = args.product
    if name == "sym":
        return symmetrizer_product(L), None
    if name == "pbw":
        return pbw_basis_product(L), None
    orbit = _resolve_orbit(args, algebra=L)
    if name == "orbit":
        return orbit.star_product(), orbit
    if name == "tangential":
        return orbit.tangential_product(), orbit
    if name == "split":
        return orbit.split_product(), orbit
    raise CLIError(f"unknown product {name!r}")


def cmd_star(args):
    L = _resolve_algebra(args)
    star, _ = _select_product(args, L)
    f = parse_expression(args.left, mode="commutative", algebra=L)
    g = parse_expression(args.right, mode="commutative", algebra=L)
    result = star.star(f, g)
    text = format_cpoly(result, L.varnames)
    orders = {}
    max_h = result.h_degree() or 0
    for n in range(max_h + 1):
        layer = result.h_coefficient(n)
        if not layer.is_zero() or n == 0:
            orders[str(n)] = format_cpoly(layer, L.varnames)
    lines = [text]
    for n, layer in orders.items():
        lines.append(f"h^{n}: {layer}")
    _emit(args, lines, {"product": star.name, "result": text, "orders": orders})
    return 0


def cmd_reduce(args):
    L = _resolve_algebra(args)
    orbit = _resolve_orbit(args, algebra=L)
    if args.mode == "orbit":
        f = parse_expression(args.expr, mode="commutative", algebra=L)
        out = orbit.orbit_reduce(f)
        text = format_cpoly(out, L.varnames)
    else:
        u = parse_expression(args.expr, mode="noncommutative", algebra=L)
        out = orbit.ideal_reduce(u.normal_form())
        text = format_ncpoly(out)
    _emit(args, [text], {"mode": args.mode, "input": args.expr, "result": text})
    return 0


def cmd_verify(args):
    if args.list:
        lines = sorted(SUITES)
        _emit(args, lines, {"suites": lines, "version": SUITES_VERSION})
        return 0
    options = {}
    if args.max_degree is not None:
        options["max_degree"] = args.max_degree
    if args.lambda_bound is not None:
        options["lambda_bound"] = args.lambda_bound
    options["seed"] = args.seed
    if args.c:
        options["c0"] = parse_rational(args.c)
    if args.lift:
        options["lift"] = parse_hpoly(args.lift)
    if args.suite in (None, "all"):
        reports = run_suites(**options)
    else:
        if args.suite not in SUITES:
            raise CLIError(
                f"unknown suite {args.suite!r}; use verify --list"
            )
        reports = run_suite(args.suite, **options)
    lines = []
    for rep in reports:
        mark = "PASS" if rep["status"] == "pass" else "FAIL"
        lines.append(f"[{mark}] {rep['suite']}: {rep['case']}")
        if rep["status"] != "pass" and rep.get("witness") is not None:
            lines.append(f"       witness: {rep['witness']}")
    failed = [r for r in reports if r["status"] != "pass"]
    lines.append(f"{len(reports) - len(failed)}/{len(reports)} cases passed")
    _emit(args, lines, reports)
    return 1 if failed else 0


def cmd_rep(args):
    su2 = predefined("su2")
    sl2 = predefined("sl2")
    P = NCPoly(su2, {(0, 0): H_ONE, (1, 1): H_ONE, (2, 2): H_ONE})
    scalars = {
        "defining": str(casimir_scalar(P, su2_defining_rep(), 1)),
        "adjoint": str(casimir_scalar(P, adjoint_rep(su2), 1)),
    }
    omega = sl2_casimir(sl2)
    hw = highest_weight_casimir(sl2, omega)
    lift_a = parse_hpoly(args.lift) if args.lift else parse_hpoly("4")
    lift_b = parse_hpoly(args.lift_b) if args.lift_b else parse_hpoly("4 + h*(1/3)")
    witness = nonisomorphism_witness(lift_a, lift_b, args.lambda_bound)
    payload = {
        "casimir_scalars_h1": scalars,
        "highest_weight_casimir": format_cpoly(hw, ("lambda",)),
        "witness": witness,
    }
    lines = [
        f"casimir scalar on the defining rep (h=1): {scalars['defining']}",
        f"casimir scalar on the adjoint rep (h=1): {scalars['adjoint']}",
        f"highest-weight casimir: {payload['highest_weight_casimir']}",
        f"lift {witness['lift_a']}: weights {witness['spectrum_a']}",
        f"lift {witness['lift_b']}: weights {witness['spectrum_b']}",
        ("disjoint spectra witness found" if witness["witness_found"]
         else "no disjointness witness"),
    ]
    _emit(args, lines, payload)
    return 0


def cmd_cohomology(args):
    L = _resolve_algebra(args)
    bound = args.max_degree if args.max_degree is not None else 4
    dims = {d: h2_dimension(L, d) for d in range(bound + 1)}
    certificates = {}
    import random

    rng = random.Random(args.seed)
    for d in range(bound + 1):
        basis = monomials_of_degree(L.dim, d)
        values = []
        for _ in range(L.dim):
            p = CPoly.zero(L.dim)
            for exps in basis:
                p = p + CPoly.monomial(L.dim, exps, rng.randint(-2, 2))
            values.append(p)
        target = d1(L, Cochain1(L, values))
        sol = solve_coboundary(L, target, d)
        certificates[d] = bool(sol is not None and d1(L, sol) == target)
    payload = {
        "h2_dimension": {str(d): v for d, v in dims.items()},
        "solver_roundtrip": {str(d): v for d, v in certificates.items()},
    }
    lines = [f"h2 dimension at degree {d}: {v}" for d, v in dims.items()]
    lines += [
        f"coboundary solver round-trip at degree {d}: "
        f"{'ok' if v else 'FAILS'}"
        for d, v in certificates.items()
    ]
    _emit(args, lines, payload)
    return 0


# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="orbitstar",
        description="Exact star products on coadjoint orbits",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, orbit_flags=True):
        p.add_argument("--config", help="JSON config file (algebra/orbit)")
        p.add_argument("--name", choices=("su2", "sl2"),
                       help="predefined algebra (default su2)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if orbit_flags:
            p.add_argument("--c", help="orbit level constant (rational)")
            p.add_argument("--lift", help="ideal lift, a polynomial in h")

    p = sub.add_parser("algebra", help="validate and inspect an algebra")
    common(p, orbit_flags=False)
    p.set_defaults(fn=cmd_algebra)

    p = sub.add_parser("nf", help="normal form of a noncommutative expression")
    common(p, orbit_flags=False)
    p.add_argument("expr")
    p.set_defaults(fn=cmd_nf)

    p = sub.add_parser("star", help="star product of two polynomials")
    common(p)
    p.add_argument("--product", default="sym",
                   choices=("sym", "pbw", "orbit", "tangential", "split"))
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(fn=cmd_star)

    p = sub.add_parser("reduce", help="reduce modulo the orbit ideal")
    common(p)
    p.add_argument("--mode", choices=("orbit", "ideal"), default="orbit",
                   help="orbit: commutative input; ideal: noncommutative")
    p.add_argument("expr")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("verify", help="run a named verification suite")
    common(p)
    p.add_argument("suite", nargs="?", help="suite name, or 'all'")
    p.add_argument("--list", action="store_true", help="list suites")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--lambda-bound", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("rep", help="casimir scalars and the spectrum witness")
    common(p, orbit_flags=False)
    p.add_argument("--lift", help="first ideal lift (default 4)")
    p.add_argument("--lift-b", help="second ideal lift (default 4 + h/3)")
    p.add_argument("--lambda-bound", type=int, default=20)
    p.set_defaults(fn=cmd_rep)

    p = sub.add_parser("cohomology", help="h2 dimensions and solver runs")
    common(p, orbit_flags=False)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_cohomology)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (CLIError, ExprSyntaxError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run():
    raise SystemExit(main())


if __name__ == "__main__":
    run()
