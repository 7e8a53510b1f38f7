"""Command line: construct, verify, table, gaps, render.

Exit codes: 0 success, 1 usage error, 2 solve failure, 3 certificate failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .document import (
    ALL_CLAIMS,
    DocumentError,
    PolygonDocument,
    dumps_csv,
    load_polygon_source,
    required_flags,
)
from .errors import DomainError, SolveError
from .families import FAMILIES, construct
from .fixtures import FIXTURE_PRECISION, SYMMETRIC_FIXTURES
from .geometry import DEFAULT_TOL, ToleranceConfig, certify, upper_bound_perimeter
from .render import render_svg
from .report import format_gaps, format_table, gap_analysis, perimeter_table, table_csv

EXIT_OK, EXIT_USAGE, EXIT_SOLVE, EXIT_CERT = 0, 1, 2, 3

# 4-decimal fixture coordinates support certificates only to about this slack
FIXTURE_CERT_TOL = 10 * FIXTURE_PRECISION


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _family_and_n(args):
    family = args.family_opt or args.family
    n = args.n_opt if args.n_opt is not None else args.n
    if family is None:
        raise UsageError(f"a family is required ({', '.join(FAMILIES)})")
    return family, n


def _tol(args) -> ToleranceConfig | None:
    if args.tol is None:
        return None
    if args.tol <= DEFAULT_TOL.root_tol:
        raise UsageError(f"--tol must exceed {DEFAULT_TOL.root_tol:g}")
    return ToleranceConfig(cert_tol=args.tol)


def _document(family: str, n) -> PolygonDocument:
    inst = construct(family, n)
    if inst.family.startswith("fixture:"):
        name = inst.family.split(":", 1)[1]
        claims = [c for c in ALL_CLAIMS if c != "symmetric" or name in SYMMETRIC_FIXTURES]
        if inst.side is None:
            claims.remove("equilateral")
        return PolygonDocument.from_instance(inst, cert_tol=FIXTURE_CERT_TOL, claims=claims)
    return PolygonDocument.from_instance(inst)


def cmd_construct(args) -> int:
    family, n = _family_and_n(args)
    doc = _document(family, n)
    ub = upper_bound_perimeter(doc.n)
    info = sys.stderr if args.out == "-" else sys.stdout
    print(f"family     {doc.family}", file=info)
    print(f"n          {doc.n}", file=info)
    if doc.t is not None:
        print(f"t          {doc.t:.10f}", file=info)
    print(f"perimeter  {doc.perimeter:.10f}", file=info)
    print(f"ub         {ub:.10f}", file=info)
    print(f"gap        {ub - doc.perimeter:.4e}", file=info)
    if args.out:
        fmt = args.format or ("csv" if args.out.endswith(".csv") else "json")
        _write(args.out, dumps_csv(doc.polygon) if fmt == "csv" else doc.dumps())
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        doc = load_polygon_source(_read(args.path))
    except (DocumentError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    tol = _tol(args) or ToleranceConfig(cert_tol=doc.cert_tol)
    report = certify(doc.polygon, doc.side, tol)
    needed = required_flags(doc, report)

    def mark(name, flag):
        state = "pass" if flag else "FAIL"
        return state if name in needed else f"{state} (not claimed)"

    print(f"source       {args.path}  ({doc.family}, n = {doc.n}, cert_tol = {tol.cert_tol:g})")
    print(f"small        {mark('small', report.is_small):<22} margin {report.small_margin:+.3e}")
    print(f"convex       {mark('convex', report.is_convex):<22} min sigma {report.min_sigma:+.3e}")
    print(f"equilateral  {mark('equilateral', report.is_equilateral):<22} max side deviation {report.side_deviation:.3e}")
    print(f"symmetric    {mark('symmetric', report.is_symmetric):<22} mirror mismatch {report.mirror_mismatch:.3e}")
    print(f"diameter graph edges {len(report.diameter_pairs)}")
    return EXIT_OK if all(needed.values()) else EXIT_CERT


def cmd_table(args) -> int:
    rows = perimeter_table()
    text = table_csv(rows) if args.format == "csv" else format_table(rows)
    _write(args.out or "-", text)
    return EXIT_OK


def cmd_gaps(args) -> int:
    _write(args.out or "-", format_gaps(gap_analysis()))
    return EXIT_OK


def cmd_render(args) -> int:
    source = args.source
    tol = _tol(args) or DEFAULT_TOL
    if source is not None and (source == "-" or Path(source).is_file()):
        try:
            doc = load_polygon_source(_read(source))
        except (DocumentError, ValueError) as exc:
            raise UsageError(str(exc)) from None
        if args.tol is None:
            tol = ToleranceConfig(cert_tol=doc.cert_tol)
    else:
        args.family = source
        doc = _document(*_family_and_n(args))
        tol = ToleranceConfig(cert_tol=doc.cert_tol) if args.tol is None else tol
    svg = render_svg(doc.polygon, args.show_diameter_graph, tol, title=f"{doc.family} n={doc.n}")
    _write(args.out, svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="smallgons", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def family_args(p, positional=True):
        if positional:
            p.add_argument("family", nargs="?", help=", ".join(FAMILIES))
            p.add_argument("n", nargs="?", type=int)
        p.add_argument("--family", dest="family_opt")
        p.add_argument("--n", dest="n_opt", type=int)

    p = sub.add_parser("construct", help="build a polygon and write its document")
    family_args(p)
    p.add_argument("--out", help="document path ('-' for stdout)")
    p.add_argument("--format", choices=["json", "csv"])
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="certify a polygon document or x,y CSV")
    p.add_argument("path", nargs="?", default="-")
    p.add_argument("--tol", type=float, help="certificate tolerance")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="recompute the B_n perimeter table")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("gaps", help="Z_32 / Z_64 gaps to the upper bound")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("render", help="draw a polygon as SVG")
    p.add_argument("source", nargs="?", help="document/CSV path or a family spec")
    p.add_argument("n", nargs="?", type=int)
    p.add_argument("--family", dest="family_opt")
    p.add_argument("--n", dest="n_opt", type=int)
    p.add_argument("--out", required=True)
    p.add_argument("--tol", type=float)
    p.add_argument("--show-diameter-graph", action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(func=cmd_render, family=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, OSError) as exc:
        print(f"smallgons: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SolveError as exc:
        print(f"smallgons: solve failed: {exc}", file=sys.stderr)
        return EXIT_SOLVE


if __name__ == "__main__":
    sys.exit(main())
