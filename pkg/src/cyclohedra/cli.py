"""Command-line entry point: ``cyclohedra <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import farey, thompson, verify
from .errors import CapacityError, InputError
from .facelattice import build_face_lattice, f_vector, flip_graph
from .secondary import TOL, affine_dimension, export_off, gkz_json, gkz_vertices
from .triangulations import (
    PartialTriangulation,
    enumerate_symmetric_triangulations,
    enumerate_triangulations,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3

# largest inputs each command accepts; beyond these the work is not desk scale
MAX_ENUMERATE = 16
MAX_LATTICE = 12
MAX_GKZ = 12
MAX_FLIPGRAPH = 12
MAX_DEN = 256
MAX_DEPTH = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _check_range(name, value, lo, hi, even=False):
    if value < lo:
        raise UsageError(f"--{name} must be at least {lo}, got {value}")
    if even and value % 2:
        raise UsageError(f"--{name} must be even with --symmetric, got {value}")
    if value > hi:
        raise CapacityError(f"--{name} {value} exceeds the capacity limit {hi}")


def _polygon(args, cap):
    _check_range("n", args.n, 4 if args.symmetric else 3, cap, even=args.symmetric)


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _read_arg(text):
    """Inline JSON, or @FILE / a path to a JSON file."""
    if text.startswith("@"):
        text = text[1:]
    elif text.lstrip().startswith(("{", "[")):
        return text
    with open(text) as fh:
        return fh.read()


def cmd_enumerate(args):
    _polygon(args, MAX_ENUMERATE)
    ts = enumerate_symmetric_triangulations(args.n) if args.symmetric else enumerate_triangulations(args.n)
    print(len(ts))
    if args.json:
        data = {"n": args.n, "symmetric": args.symmetric, "triangulations": [t.to_dict() for t in ts]}
        _write(args.json, json.dumps(data) + "\n")
    return EXIT_OK


def cmd_fvector(args):
    _polygon(args, MAX_LATTICE)
    lattice = build_face_lattice(args.n, args.symmetric)
    print(" ".join(str(c) for c in f_vector(lattice, include_top=args.include_top)))
    if args.json:
        _write(args.json, lattice.to_json() + "\n")
    return EXIT_OK


def cmd_gkz(args):
    _polygon(args, MAX_GKZ)
    if args.tol <= 0:
        raise UsageError("--tol must be positive")
    verts = gkz_vertices(args.n, args.symmetric)
    dim = affine_dimension([v.coords for _, v in verts], args.tol)
    print(f"vertices={len(verts)} dimension={dim}")
    _write(args.out, gkz_json(args.n, args.symmetric) + "\n")
    if args.off:
        _write(args.off, export_off(args.n, args.symmetric))
    return EXIT_OK


def cmd_flipgraph(args):
    _polygon(args, MAX_FLIPGRAPH)
    g = flip_graph(args.n, args.symmetric)
    print(f"vertices={len(g.vertices)} edges={len(g.edges)} connected={str(g.is_connected()).lower()}")
    _write(args.dot, g.to_dot())
    return EXIT_OK


def cmd_farey(args):
    if args.dyadic:
        if args.depth is None:
            raise UsageError("farey --dyadic needs --depth")
        _check_range("depth", args.depth, 0, MAX_DEPTH)
        arcs = farey.dyadic_farey_arcs(args.depth)
        svg = farey.dyadic_disc_svg(args.depth, klein=args.klein)
    else:
        if args.max_den is None:
            raise UsageError("farey needs --max-den (or --dyadic --depth)")
        _check_range("max-den", args.max_den, 1, MAX_DEN)
        if args.halfplane:
            arcs = [a for k in range(4) for a in farey.enumerate_rational_arcs(
                args.max_den, farey.Rational(k, 1), farey.Rational(k + 1, 1))]
            svg = farey.halfplane_svg(args.max_den)
        else:
            arcs = farey.rational_disc_arcs(args.max_den)
            svg = farey.rational_disc_svg(args.max_den)
    print(f"arcs={len(arcs)}")
    _write(args.svg, svg)
    if args.json:
        _write(args.json, farey.arcs_json(arcs, args.dyadic) + "\n")
    return EXIT_OK


def _element(text):
    return thompson.parse_element(_read_arg(text) if text.startswith("@") else text)


def cmd_thompson(args):
    elems = [_element(e) for e in args.elem]
    if not elems:
        raise UsageError("thompson needs at least one --elem")
    op = args.op
    if op == "compose":
        out = elems[0]
        for g in elems[1:]:
            out = thompson.compose(out, g)
        print(thompson.element_json(out) if args.json else thompson.format_element(out))
    elif op == "eval":
        if args.at is None:
            raise UsageError("thompson eval needs --at")
        try:
            t = Fraction(args.at)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--at {args.at!r} is not a rational number") from None
        print(thompson.evaluate(elems[0], t))
    elif op == "order":
        _check_range("cap", args.cap, 1, 10 ** 6)
        k = thompson.order(elems[0], args.cap)
        print("infinite" if k is None else k)
    elif op == "quotient":
        out = thompson.quotient_mod_tau(elems[0])
        print(thompson.element_json(out) if args.json else thompson.format_element(out))
    elif op == "inverse":
        out = thompson.inverse(elems[0])
        print(thompson.element_json(out) if args.json else thompson.format_element(out))
    elif op == "lift":
        out = thompson.lift_to_double_cover(elems[0])
        print(thompson.element_json(out) if args.json else thompson.format_element(out))
    elif op == "conjugate":
        out = thompson.conjugate_by_reflection(elems[0])
        print(thompson.element_json(out) if args.json else thompson.format_element(out))
    return EXIT_OK


def _vertex(text):
    data = json.loads(_read_arg(text))
    if "stage" in data:
        return thompson.StageVertex(int(data["stage"]), PartialTriangulation.from_dict(data["triangulation"]))
    return thompson.StageVertex.from_triangulation(PartialTriangulation.from_dict(data))


def cmd_act(args):
    g = _element(args.elem)
    try:
        v = _vertex(args.vertex)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read vertex: {exc}") from None
    print(json.dumps(thompson.act_on_vertex(g, v).to_dict()))
    return EXIT_OK


def cmd_verify(args):
    try:
        outcomes = verify.run_all(args.suite)
    except KeyError:
        names = sorted({c.suite for c in verify.CRITERIA})
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(names)} or a criterion number") from None
    failed = sum(not o.passed for o in outcomes)
    print(f"SUMMARY passed={len(outcomes) - failed} failed={failed}")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser():
    p = _Parser(prog="cyclohedra", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def polygon(sp):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--symmetric", action="store_true")

    sp = sub.add_parser("enumerate", help="count (and dump) triangulations")
    polygon(sp)
    sp.add_argument("--json", metavar="FILE")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("fvector", help="face counts of the associahedron or cyclohedron")
    polygon(sp)
    sp.add_argument("--include-top", action="store_true")
    sp.add_argument("--json", metavar="FILE", help="dump the whole face lattice")
    sp.set_defaults(func=cmd_fvector)

    sp = sub.add_parser("gkz", help="GKZ coordinates of every vertex")
    polygon(sp)
    sp.add_argument("--out", required=True, metavar="FILE")
    sp.add_argument("--off", metavar="FILE", help="also write an OFF mesh (3-polytopes)")
    sp.add_argument("--tol", type=float, default=TOL)
    sp.set_defaults(func=cmd_gkz)

    sp = sub.add_parser("flipgraph", help="flip graph in DOT format")
    polygon(sp)
    sp.add_argument("--dot", required=True, metavar="FILE")
    sp.set_defaults(func=cmd_flipgraph)

    sp = sub.add_parser("farey", help="render rational or dyadic Farey tessellations")
    sp.add_argument("--max-den", type=int)
    sp.add_argument("--dyadic", action="store_true")
    sp.add_argument("--depth", type=int)
    sp.add_argument("--klein", action="store_true", help="straight chords (dyadic only)")
    sp.add_argument("--halfplane", action="store_true", help="upper half-plane picture (rational only)")
    sp.add_argument("--svg", required=True, metavar="FILE")
    sp.add_argument("--json", metavar="FILE")
    sp.set_defaults(func=cmd_farey)

    sp = sub.add_parser("thompson", help="elements of Thompson's group T")
    sp.add_argument("op", choices=["compose", "eval", "order", "quotient", "inverse", "lift", "conjugate"])
    sp.add_argument("--elem", action="append", default=[], metavar="ELEMENT",
                    help='"dom=..; ran=..; shift=k", JSON, or @FILE; repeat for compose')
    sp.add_argument("--at", help="point for eval")
    sp.add_argument("--cap", type=int, default=1024, help="largest order tried")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_thompson)

    sp = sub.add_parser("act", help="act on a finite retriangulation")
    sp.add_argument("--elem", required=True, metavar="ELEMENT")
    sp.add_argument("--vertex", required=True, metavar="JSON")
    sp.set_defaults(func=cmd_act)

    sp = sub.add_parser("verify", help="run the acceptance checks")
    sp.add_argument("--suite")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (InputError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
