"""Command line interface.

Exit codes: 0 success / valid / wrappable, 1 error, 2 not wrappable / invalid.
"""
import argparse
import sys
from fractions import Fraction

from . import document
from .characterize import (
    WrapParams, b_from_params, decide_wrappable, explain_undecidable, params_from_strip_data,
)
from .construct import construct_wrapping
from .errors import WrapkitError
from .expr import parse_b, parse_length
from .geometry import Box
from .quotient import Lattice
from .svg import render_svg
from .tiling import expand_orbit, strip_decomposition
from .verify import fold_wrapping, monte_carlo_check, verify_wrapping


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _window(text, b):
    parts = text.lower().split("x")
    if len(parts) != 2:
        raise WrapkitError(f"window must look like <w>x<h>, got {text!r}")
    w, h = parse_length(parts[0], b), parse_length(parts[1], b)
    return Box.of(0, 0, w, h)


def cmd_decide(args):
    b = parse_b(args.b)
    w = decide_wrappable(b)
    print(f"b = {b}")
    if w is None:
        print(f"not wrappable ({explain_undecidable(b)})")
        return 2
    print(f"wrappable: {w}")
    return 0


def cmd_construct(args):
    w = WrapParams(args.p, args.r, 1 if args.sign == "plus" else -1)
    spec = construct_wrapping(w)
    cp = spec.params
    if args.output:
        document.save(spec, args.output)
        print(f"b = {spec.b}")
        print(f"m = {cp.m}, n = {cp.n}, u = {cp.u}, v = {cp.v}")
        print(f"squares: {spec.g}, side^2 = {spec.side_sq}")
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(document.dumps(spec) + "\n")
    return 0


def cmd_verify(args):
    spec = document.load(args.file)
    report = verify_wrapping(spec)
    for line in report.lines():
        print(line)
    if args.monte_carlo:
        cov, mult = monte_carlo_check(spec, args.monte_carlo, args.seed)
        print(f"monte carlo (float, {args.monte_carlo} samples, seed {args.seed}): "
              f"coverage = {cov:.6f}, mean multiplicity = {mult:.6f}")
    return 0 if report.is_valid else 2


def cmd_tile(args):
    spec = document.load(args.file)
    window = _window(args.window, spec.b)
    patch = expand_orbit(spec, window)
    lattice = patch.lattice
    nodes = [lattice.node(m, n)
             for m in range(-2, 2 * int(float(window.x1 / spec.b)) + 3)
             for n in range(-2, int(float(window.y1)) + 3)]
    nodes = [p for p in nodes if patch.outer.x0 <= p[0] <= patch.outer.x1
             and patch.outer.y0 <= p[1] <= patch.outer.y1]
    render_svg([sq.vertices for sq in patch.squares], args.output, colors=patch.sources,
               outline=window.polygon().vertices, nodes=nodes)
    print(f"patch: {len(patch.squares)} squares, window area {window.area}")
    print(f"wrote {args.output}")
    return 0


def cmd_strips(args):
    spec = document.load(args.file)
    patch = expand_orbit(spec, _window(args.window, spec.b))
    report = strip_decomposition(patch)
    for line in report.lines():
        print(line)
    w = params_from_strip_data(report.q1, report.q2, report.g, spec.b)
    print(f"recovered: {w}")
    print(f"b reproduced: {'yes' if b_from_params(w) == spec.b else 'no'}")
    return 0


def cmd_render(args):
    spec = document.load(args.file)
    if args.folded:
        pieces = fold_wrapping(spec)
        b2 = Lattice(spec.b).cell_width
        render_svg([p.polygon.vertices for p in pieces], args.output,
                   colors=[p.source for p in pieces],
                   outline=Box.of(0, 0, b2, 1).polygon().vertices,
                   precision=args.precision)
    else:
        render_svg([sq.vertices for sq in spec.squares], args.output, precision=args.precision)
    print(f"wrote {args.output}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wrapkit",
        description="Decide, construct, verify and draw wrappings of a 1 x b envelope by equal squares.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide whether 1 x b can be wrapped")
    p.add_argument("--b", required=True, help='exact width, e.g. "2+sqrt(3)"')
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("construct", help="build a wrapping from (p, r, sign)")
    p.add_argument("--p", required=True, type=_rational)
    p.add_argument("--r", default=Fraction(0), type=_rational)
    p.add_argument("--sign", choices=["plus", "minus"], default="plus")
    p.add_argument("-o", "--output", help="document path (default: stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="exactly verify a wrapping document")
    p.add_argument("file")
    p.add_argument("--monte-carlo", type=int, default=0, metavar="N",
                   help="also run the float oracle with N samples")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tile", help="draw the plane tiling generated by a wrapping")
    p.add_argument("file")
    p.add_argument("--window", default="2bx2", help="<w>x<h>; a trailing b scales by b")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_tile)

    p = sub.add_parser("strips", help="strip decomposition and recovered (p, r)")
    p.add_argument("file")
    p.add_argument("--window", default="2bx2")
    p.set_defaults(func=cmd_strips)

    p = sub.add_parser("render", help="draw the squares or their folded pieces")
    p.add_argument("file")
    p.add_argument("--folded", action="store_true")
    p.add_argument("--precision", type=int, default=12)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def run_cli(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args)
    except (WrapkitError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
