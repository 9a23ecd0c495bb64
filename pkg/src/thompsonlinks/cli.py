"""Command-line interface.

Exit codes: 0 success, 1 parse error, 2 domain error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .coloring import (
    BRUTE_FORCE_ARCS,
    UnsupportedModulusError,
    coloring_number,
    count_colorings_bruteforce,
    is_p_colorable,
    kernel_dimension,
)
from .diagram import PDParseError, parse_pd
from .group import WordParseError, parse_element
from .jones import link_of
from .modp import is_prime
from .render import RENDERERS
from .strip import format_gaps, frontier_gaps, is_member
from .theorem import sweep
from .trees import TreeParseError

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _element(words: list[str]):
    text = " ".join(words)
    try:
        return parse_element(text)
    except (TreeParseError, WordParseError, ValueError) as exc:
        raise _Fail(EXIT_PARSE, f"cannot parse element {text!r}: {exc}") from None


def _emit(out, lines, data, as_json):
    if as_json:
        print(json.dumps(data, sort_keys=True), file=out)
    else:
        print("\n".join(lines), file=out)


def cmd_reduce(args, out):
    print(str(_element(args.element)), file=out)


def cmd_member(args, out):
    g = _element(args.element)
    top, bottom = format_gaps(frontier_gaps(g.plus)), format_gaps(frontier_gaps(g.minus))
    member = is_member(g)
    _emit(out, ["yes" if member else "no", f"plus gaps: {top}", f"minus gaps: {bottom}"],
          {"member": member, "plus_gaps": top, "minus_gaps": bottom}, args.json)


def cmd_link(args, out):
    link = link_of(_element(args.element), mirror=args.mirror)
    print(link.pd_code() if args.format == "pd" else link.gauss_code(), file=out)


def _diagram_source(words):
    text = " ".join(words)
    if len(words) == 1 and os.path.isfile(words[0]):
        with open(words[0]) as fh:
            text = fh.read()
    stripped = text.strip()
    if stripped.startswith("X[") or stripped.startswith("L ") or stripped == "":
        try:
            return parse_pd(text), "pd"
        except PDParseError as exc:
            raise _Fail(EXIT_PARSE, f"cannot parse PD code: {exc}") from None
    return link_of(_element(words)), "element"


def cmd_color(args, out):
    link, kind = _diagram_source(args.source)
    p = args.p
    if p < 2:
        raise _Fail(EXIT_DOMAIN, "modulus must be at least 2")
    try:
        colorable = is_p_colorable(link, p)
        number = coloring_number(link, args.bound) if args.bound >= 3 else None
    except UnsupportedModulusError as exc:
        raise _Fail(EXIT_DOMAIN, str(exc)) from None
    data = {"source": kind, "p": p, "crossings": link.n_crossings, "arcs": len(link.arcs()),
            "components": link.n_components(), "colorable": colorable,
            "coloring_number": number}
    if is_prime(p):
        data["kernel_dimension"] = kernel_dimension(link, p)
    if len(link.arcs()) <= BRUTE_FORCE_ARCS:
        data["colorings"] = count_colorings_bruteforce(link, p).total
    lines = [f"{k}: {str(v).lower() if isinstance(v, bool) else ('none' if v is None else v)}"
             for k, v in data.items()]
    _emit(out, lines, data, args.json)


def cmd_verify(args, out):
    if args.samples < 0 or args.max_len < 1:
        raise _Fail(EXIT_DOMAIN, "samples must be >= 0 and max-len >= 1")
    summary = sweep(args.samples, args.max_len, args.alphabet, args.seed, args.bound)
    print(summary.to_json() if args.json else summary.to_text(), file=out)
    if not summary.ok:
        raise _Fail(EXIT_VERIFY, f"{len(summary.failures)} samples failed")


def cmd_render(args, out):
    g = _element(args.element)
    svg = RENDERERS[args.what](g)
    with open(args.out, "w") as fh:
        fh.write(svg)
    print(f"wrote {args.out}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thompsonlinks",
        description="Thompson's group F, its 3-colorable subgroup and Jones links.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="print the reduced tree pair")
    p.add_argument("element", nargs="+", help='generator word or "pair <plus> <minus>"')
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("member", help="membership in the 3-colorable subgroup")
    p.add_argument("element", nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("link", help="PD or Gauss code of the Jones link")
    p.add_argument("element", nargs="+")
    p.add_argument("--format", choices=("pd", "gauss"), default="pd")
    p.add_argument("--mirror", action="store_true", help="put the child edges under")
    p.set_defaults(func=cmd_link)

    p = sub.add_parser("color", help="Fox p-colorability of a PD file, PD text or element")
    p.add_argument("source", nargs="*")
    p.add_argument("--p", type=int, default=3)
    p.add_argument("--bound", type=int, default=0, help="search the coloring number up to this")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="random sweep of the 3-colorability theorem")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--max-len", type=int, default=12)
    p.add_argument("--alphabet", choices=("w", "x"), default="w")
    p.add_argument("--bound", type=int, default=0, help="also tally coloring numbers up to this")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="write an SVG picture")
    p.add_argument("element", nargs="+")
    p.add_argument("--what", choices=sorted(RENDERERS), default="tree")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
