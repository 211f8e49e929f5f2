"""Command line interface.

Exit codes: 0 success (routes agree), 1 usage error, 2 the two verification
routes disagree.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections import defaultdict
from fractions import Fraction

from . import __version__
from .diophantine import DEFAULT_BRUTEFORCE_BOUND, enumerate_uvw_bruteforce, enumerate_xyz, xyz_to_sides
from .eisenstein import EisensteinInt, integer_sqrt, squarefree_part
from .render import DEFAULT_RANGE, write_svg
from .report import classify
from .search import DEFAULT_WINDOW, realize_sides
from .triangle import LatticeTriangle, area_quanta, equable_decomposition, side_norms, sqrt3_side_decomposition

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {value}")
    return value


def parse_point(text: str) -> EisensteinInt:
    """Parse ``"a,b"`` (optionally parenthesised) as a + b*w."""
    body = text.strip().strip("()")
    parts = body.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected 'a,b' for the point a+b*w, got {text!r}")
    try:
        return EisensteinInt(int(parts[0]), int(parts[1]))
    except ValueError:
        raise UsageError(f"non-integer coordinate in {text!r}")


def format_radical(k: int | Fraction, d: int) -> str:
    """``k * sqrt(d)`` as text, e.g. ``4√3``, ``√3/4``, ``7``."""
    k = Fraction(k)
    if k == 0:
        return "0"
    root = "" if d == 1 else f"√{d}"
    num, den = k.numerator, k.denominator
    if root and abs(num) == 1:
        head = ("-" if num < 0 else "") + root
    else:
        head = f"{num}{root}"
    return head if den == 1 else f"{head}/{den}"


def format_sqrt(N: int) -> str:
    """Simplified sqrt(N)."""
    if N == 0:
        return "0"
    d = squarefree_part(N)
    return format_radical(integer_sqrt(N // d), d)


def format_sum_of_sqrts(norms) -> str:
    by_radicand: dict[int, int] = defaultdict(int)
    for N in norms:
        if N:
            d = squarefree_part(N)
            by_radicand[d] += integer_sqrt(N // d)
    if not by_radicand:
        return "0"
    return " + ".join(format_radical(k, d) for d, k in sorted(by_radicand.items()))


def _cmd_classify(args) -> int:
    report = classify(args.window, workers=args.workers, method=args.method)
    if args.format == "json":
        print(report.to_json())
    else:
        print("Diophantine route (3xyz = 4(x+y+z)):")
        for s, ns in zip(report.xyz_solutions, report.side_triples):
            sides = ", ".join(format_radical(n, 3) for n in ns)
            print(f"  x,y,z = {s[0]},{s[1]},{s[2]}  ->  sides {sides}")
        print("Realizations (A, B, C), up to lattice symmetry:")
        for r in report.realizations:
            print(f"  sides {r.sides}:")
            for tri in r.vertices:
                print("    " + "  ".join(str(EisensteinInt(*v)) for v in tri))
        print(f"Lattice search, window max_norm={report.oracle_window}:")
        if report.oracle_keys:
            for key in report.oracle_keys:
                print(f"  squared sides {key}")
        else:
            print("  no equable triangles in window")
        print(f"Diophantine classes: {report.diophantine_keys}")
        print(f"Agreement: {'yes' if report.agreement else 'NO'}")
        print(f"Note: {report.note}")
    return EXIT_OK if report.agreement else EXIT_DISAGREE


def verify_lines(T: LatticeTriangle) -> list[str]:
    norms = side_norms(T)
    D = area_quanta(T)
    lines = [f"vertices: A={T.A}  B={T.B}  C={T.C}"]
    for label, N in zip(("a=|CA|", "b=|CB|", "c=|AB|"), norms):
        n = sqrt3_side_decomposition(N) if N else None
        decomposition = f"3*{n}^2" if n is not None else "not of the form 3n^2"
        lines.append(f"{label}: norm {N} = {decomposition}, length {format_sqrt(N)}")
    lines.append(f"area quanta D = {D}")
    lines.append(f"perimeter = {format_sum_of_sqrts(norms)}")
    lines.append(f"area = {format_radical(Fraction(abs(D), 4), 3)}")
    ns = equable_decomposition(T)
    lines.append(f"equable: {'yes' if ns is not None else 'no'}")
    return lines


def _cmd_verify(args) -> int:
    T = LatticeTriangle(*(parse_point(p) for p in (args.A, args.B, args.C)))
    for line in verify_lines(T):
        print(line)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    xyz = enumerate_xyz()
    sides = [[s.n for s in xyz_to_sides(sol)] for sol in xyz]
    brute = enumerate_uvw_bruteforce(args.bound)
    doubled = sorted(s.doubled() for s in xyz if max(s.doubled()) <= args.bound)
    agreement = doubled == brute
    odd = [list(s) for s in brute if any(c % 2 for c in s)]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "xyz_solutions": [list(s) for s in xyz],
                    "side_triples": sides,
                    "uvw_bruteforce": [list(s) for s in brute],
                    "bound": args.bound,
                    "odd_components": odd,
                    "agreement": agreement,
                },
                indent=2,
            )
        )
    else:
        print("3xyz = 4(x+y+z):")
        for s, ns in zip(xyz, sides):
            print(f"  {s.x},{s.y},{s.z}  ->  sides " + ", ".join(format_radical(n, 3) for n in ns))
        print(f"3uvw = 16(u+v+w), brute force up to {args.bound}:")
        for s in brute:
            print(f"  {s.u},{s.v},{s.w}")
        print(f"odd components: {'none' if not odd else odd}")
        print(f"Agreement: {'yes' if agreement else 'NO'}")
    return EXIT_OK if agreement and not odd else EXIT_DISAGREE


def _cmd_realize(args) -> int:
    ns = (args.na, args.nb, args.nc)
    try:
        triangles = realize_sides(ns)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.format == "json":
        print(json.dumps({"sides": list(ns), "vertices": [[[v.c1, v.cw] for v in T.vertices] for T in triangles]}, indent=2))
    else:
        print(f"sides {', '.join(format_radical(n, 3) for n in ns)}: {len(triangles)} realization(s)")
        for T in triangles:
            print(f"  A={T.A}  B={T.B}  C={T.C}")
    return EXIT_OK


def _cmd_render(args) -> int:
    try:
        path = write_svg(args.out, grid=not args.no_grid, coefficient_range=args.range)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wrote {path}")
    return EXIT_OK


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eisequable", description="Equable triangles on the Eisenstein lattice.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="run both routes and compare them")
    p.add_argument("--window", type=_positive, default=DEFAULT_WINDOW, help="max norm of CA and CB in the lattice search")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--method", choices=("exact", "float"), default="exact")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="check one triangle; points are 'a,b' meaning a+b*w")
    # let points such as "-2,-13" through as positionals
    p._negative_number_matcher = re.compile(r"^-\d+,-?\d+$|^-\d+$")
    p.add_argument("A")
    p.add_argument("B")
    p.add_argument("C")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate", help="Diophantine solutions by case analysis and by brute force")
    p.add_argument("--bound", type=_positive, default=DEFAULT_BRUTEFORCE_BOUND)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("realize", help="lattice triangles with sides na*√3, nb*√3, nc*√3")
    p.add_argument("na", type=_positive)
    p.add_argument("nb", type=_positive)
    p.add_argument("nc", type=_positive)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("render", help="write the two triangles as SVG")
    p.add_argument("--out", default="equable_triangles.svg")
    p.add_argument("--no-grid", action="store_true")
    p.add_argument("--range", type=_non_negative, default=DEFAULT_RANGE, help="coefficient range of the dot grid")
    p.set_defaults(func=_cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
