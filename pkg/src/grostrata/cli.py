"""Batch command line front end.

Every invocation writes exactly one JSON document (with a top-level
"version": 1) to stdout and diagnostics to stderr.  Exit codes: 0 success,
1 domain error (with an {"error": ...} document), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .diagram import ascii_diagram, svg_diagram
from .errors import DomainError, InternalConsistencyError
from .hilbert import gotzmann_number
from .ideals import colon_by_irrelevant, initial_standard_set, saturate_ideal, truncate_ideal
from .orders import order_by_name
from .poly import buchberger, normal_form
from .scheme import (
    degree_up,
    ingest_coefficient_table,
    point_to_basis,
    scheme_ideal,
    verify_point,
)
from .staircase import StandardSet
from .textio import default_names, format_polynomial, parse_polynomial, parse_polynomial_list

VERSION = 1


def _emit(doc: dict) -> int:
    sys.stdout.write(json.dumps(doc) + "\n")
    return 0


def _read_input(arg: str) -> str:
    if os.path.isfile(arg):
        with open(arg, "r", encoding="utf-8") as handle:
            return handle.read()
    return arg


def _parse_corners(text: str) -> StandardSet:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"corners must be a JSON array: {exc}") from None
    if isinstance(data, dict):
        return StandardSet.from_json(data)
    if not isinstance(data, list):
        raise DomainError("corners must be a JSON array of integer arrays")
    if not data:
        raise DomainError("empty corner list needs the document form with n_plus_1")
    return StandardSet.from_corners(data)


def _parse_vars(arg: str | None) -> list[str] | None:
    if arg is None:
        return None
    names = [n.strip() for n in arg.split(",")]
    if not all(names) or len(set(names)) != len(names):
        raise DomainError(f"bad variable list {arg!r}")
    return names


def _fraction_str(x: Fraction) -> str:
    return str(x)


def _parse_fraction(text) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad rational {text!r}: {exc}") from None


def _parse_point_table(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"point must be JSON: {exc}") from None
    if isinstance(data, dict):
        data = data.get("point", data.get("coefficients"))
    if not isinstance(data, list):
        raise DomainError("point must be a list of {alpha, beta, value} entries")
    table = {}
    for entry in data:
        try:
            key = (tuple(int(c) for c in entry["alpha"]), tuple(int(c) for c in entry["beta"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"bad point entry {entry!r}: {exc}") from None
        table[key] = _parse_fraction(entry["value"])
    return table


def _point_json(point) -> list[dict]:
    out = []
    for tv in sorted(point.coefficients):
        out.append({"alpha": list(tv.alpha), "beta": list(tv.beta),
                    "value": _fraction_str(point.coefficients[tv])})
    return out


def _hilbert_json(delta: StandardSet) -> dict:
    p, _ = delta.hilbert_polynomial()
    return {"coeffs": [_fraction_str(c) for c in p.coeffs], "gotzmann": gotzmann_number(p)}


# -- subcommand handlers -----------------------------------------------------


def _cmd_sset_analyze(args) -> int:
    delta = _parse_corners(args.corners)
    doc = {"version": VERSION}
    doc.update(delta.to_json())
    top_degree = delta.max_corner_degree() + 1
    doc["border_slices"] = [
        {"degree": d, "border": [list(v) for v in delta.border_slice(d)]}
        for d in range(top_degree + 1)]
    doc["top_points"] = [list(v) for v in sorted(delta.top_points())]
    doc["edge_triples"] = [
        {"epsilon": list(t.epsilon), "lambda": list(t.lam), "mu": list(t.mu)}
        for t in delta.edge_triples()]
    doc["saturated"] = delta.is_saturated()
    if delta.is_empty() or delta.is_whole_space():
        doc["complete_intersection"] = None
    else:
        doc["complete_intersection"] = delta.defines_complete_intersection()
    doc["dimension"] = delta.dimension()
    doc["hilbert_polynomial"] = _hilbert_json(delta)
    return _emit(doc)


def _cmd_sset_saturate(args) -> int:
    delta = _parse_corners(args.corners)
    saturated, steps = delta.saturate()
    return _emit({"version": VERSION, **saturated.to_json(), "steps": steps})


def _cmd_sset_truncate(args) -> int:
    delta = _parse_corners(args.corners)
    return _emit({"version": VERSION, **delta.truncate(args.r).to_json()})


def _cmd_sset_diagram(args) -> int:
    delta = _parse_corners(args.corners)
    if args.format == "svg":
        return _emit({"version": VERSION, "format": "svg", "diagram": svg_diagram(delta)})
    return _emit({"version": VERSION, "format": "ascii", "diagram": ascii_diagram(delta)})


def _parse_ideal_args(args) -> tuple[list, list[str], object]:
    order = order_by_name(args.order)
    names = _parse_vars(args.vars)
    polys, names = parse_polynomial_list(_read_input(args.input), names)
    return polys, names, order


def _cmd_gb_compute(args) -> int:
    polys, names, order = _parse_ideal_args(args)
    gb = buchberger(polys, order)
    return _emit({
        "version": VERSION, "order": args.order, "vars": names,
        "zero_ideal": gb.is_zero_ideal(),
        "basis": [format_polynomial(g, order, names) for g in gb.generators]})


def _cmd_gb_normal_form(args) -> int:
    polys, names, order = _parse_ideal_args(args)
    f = parse_polynomial(args.poly, names)
    r = normal_form(f, [g for g in polys if g], order)
    return _emit({"version": VERSION, "remainder": format_polynomial(r, order, names)})


def _cmd_ideal_initial(args) -> int:
    polys, names, order = _parse_ideal_args(args)
    delta = initial_standard_set(polys, order)
    return _emit({"version": VERSION, **delta.to_json()})


def _cmd_ideal_saturate(args) -> int:
    polys, names, order = _parse_ideal_args(args)
    gb = saturate_ideal(polys, order)
    return _emit({"version": VERSION, "order": args.order, "vars": names,
                  "basis": [format_polynomial(g, order, names) for g in gb.generators]})


def _cmd_ideal_truncate(args) -> int:
    polys, names, order = _parse_ideal_args(args)
    gb = truncate_ideal(polys, args.r, order)
    return _emit({"version": VERSION, "order": args.order, "vars": names,
                  "basis": [format_polynomial(g, order, names) for g in gb.generators]})


def _cmd_ideal_colon(args) -> int:
    polys, names, order = _parse_ideal_args(args)
    gb = colon_by_irrelevant(polys, args.l, order)
    return _emit({"version": VERSION, "order": args.order, "vars": names,
                  "basis": [format_polynomial(g, order, names) for g in gb.generators]})


def _cmd_scheme_equations(args) -> int:
    delta = _parse_corners(args.corners)
    order = order_by_name(args.order)
    si = scheme_ideal(delta, order)
    return _emit({
        "version": VERSION, "order": args.order, **delta.to_json(),
        "variables": [{"alpha": list(v.alpha), "beta": list(v.beta)} for v in si.variables],
        "i1": [str(g) for g in si.i1],
        "i2": [str(g) for g in si.i2]})


def _cmd_scheme_verify(args) -> int:
    delta = _parse_corners(args.corners)
    order = order_by_name(args.order)
    table = _parse_point_table(args.point)
    point, residues = ingest_coefficient_table(delta, order, table)
    k3 = [{"alpha": list(tv.alpha), "beta": list(tv.beta), "value": _fraction_str(v)}
          for tv, v in residues if v != 0]
    valid = not k3 and verify_point(point)
    doc = {"version": VERSION, "valid": valid, "k3_residues": k3}
    if valid:
        doc["basis"] = [format_polynomial(g, order, default_names(delta.dim))
                        for g in point_to_basis(point)]
    return _emit(doc)


def _cmd_scheme_degree_up(args) -> int:
    delta = _parse_corners(args.corners)
    order = order_by_name(args.order)
    table = _parse_point_table(args.point)
    truncated = delta.truncate(args.r)
    point, residues = ingest_coefficient_table(truncated, order, table)
    bad = [tv for tv, v in residues if v != 0]
    if bad:
        raise DomainError(f"point has nonzero coefficients above the leading monomial: {bad}")
    lifted = degree_up(delta, order, args.r, point)
    return _emit({"version": VERSION, **delta.to_json(), "point": _point_json(lifted)})


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grostrata",
        description="standard-set combinatorics, Groebner bases and Groebner-stratum equations")
    groups = parser.add_subparsers(dest="group", required=True)

    def add_order(p):
        p.add_argument("--order", default="lex", choices=["lex", "grlex", "grevlex"])

    sset = groups.add_parser("sset", help="standard-set combinatorics").add_subparsers(
        dest="command", required=True)
    p = sset.add_parser("analyze", help="corners, border, top points, Hilbert data")
    p.add_argument("--corners", required=True)
    add_order(p)
    p.set_defaults(func=_cmd_sset_analyze)
    p = sset.add_parser("saturate", help="saturation and step count")
    p.add_argument("--corners", required=True)
    p.set_defaults(func=_cmd_sset_saturate)
    p = sset.add_parser("truncate", help="standard set of the degree >= r part")
    p.add_argument("--corners", required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=_cmd_sset_truncate)
    p = sset.add_parser("diagram", help="ASCII or SVG staircase picture")
    p.add_argument("--corners", required=True)
    p.add_argument("--format", default="ascii", choices=["ascii", "svg"])
    p.set_defaults(func=_cmd_sset_diagram)

    gb = groups.add_parser("gb", help="Groebner bases").add_subparsers(
        dest="command", required=True)
    p = gb.add_parser("compute", help="reduced Groebner basis")
    p.add_argument("input", help="polynomials separated by ';' (inline or a file path)")
    p.add_argument("--vars", default=None)
    add_order(p)
    p.set_defaults(func=_cmd_gb_compute)
    p = gb.add_parser("normal-form", help="remainder of --poly modulo the input list")
    p.add_argument("input")
    p.add_argument("--poly", required=True)
    p.add_argument("--vars", default=None)
    add_order(p)
    p.set_defaults(func=_cmd_gb_normal_form)

    ideal = groups.add_parser("ideal", help="ideal-level operations").add_subparsers(
        dest="command", required=True)
    for name, helptext, func in [
            ("initial", "standard set of the initial ideal", _cmd_ideal_initial),
            ("saturate", "saturation with respect to the irrelevant ideal", _cmd_ideal_saturate)]:
        p = ideal.add_parser(name, help=helptext)
        p.add_argument("input")
        p.add_argument("--vars", default=None)
        add_order(p)
        p.set_defaults(func=func)
    p = ideal.add_parser("truncate", help="degree >= r part")
    p.add_argument("input")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--vars", default=None)
    add_order(p)
    p.set_defaults(func=_cmd_ideal_truncate)
    p = ideal.add_parser("colon", help="quotient by the l-th power of the irrelevant ideal")
    p.add_argument("input")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--vars", default=None)
    add_order(p)
    p.set_defaults(func=_cmd_ideal_colon)

    scheme = groups.add_parser("scheme", help="Groebner stratum equations").add_subparsers(
        dest="command", required=True)
    p = scheme.add_parser("equations", help="T-ring variables and defining relations")
    p.add_argument("--corners", required=True)
    add_order(p)
    p.set_defaults(func=_cmd_scheme_equations)
    p = scheme.add_parser("verify", help="check a coefficient table against the oracle")
    p.add_argument("--corners", required=True)
    p.add_argument("--point", required=True)
    add_order(p)
    p.set_defaults(func=_cmd_scheme_verify)
    p = scheme.add_parser("degree-up", help="reconstruct a point from its r-truncation")
    p.add_argument("--corners", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--r", type=int, required=True)
    add_order(p)
    p.set_defaults(func=_cmd_scheme_degree_up)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DomainError, InternalConsistencyError) as exc:
        sys.stdout.write(json.dumps({"version": VERSION, "error": str(exc)}) + "\n")
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
