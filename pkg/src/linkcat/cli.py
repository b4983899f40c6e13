"""Command-line front end.

Exit codes: 0 success, 1 unreadable or invalid input, 2 interface or
formula mismatch, 3 check failed (not a family member, or not a correct net).
"""
from __future__ import annotations

import argparse
import sys

from . import formats, render
from .compose import compose_flat, compose_with_loops
from .families import (FamilyTag, enumerate_family, failed_predicates,
                       multiplication_table)
from .irel import InterfaceError
from .linking import flatten
from .mll import (FormulaSyntaxError, NetError, ProofStructure, compose_nets,
                  dr_correct, parse_formula)

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH, EXIT_CHECK = 0, 1, 2, 3


def _emit(obj) -> None:
    sys.stdout.write(formats.dumps(obj) + "\n")


def _fail(code: int, message: str) -> int:
    sys.stderr.write(f"linkcat: {message}\n")
    return code


def run_compose(args) -> int:
    """``first`` then ``second``: prints ``second . first`` and the new loop count."""
    try:
        first = formats.load_linking(args.first)
        second = formats.load_linking(args.second)
    except (OSError, formats.FormatError) as e:
        return _fail(EXIT_INPUT, str(e))
    try:
        out, lam = compose_with_loops(second, first)
        if args.flat:
            out = compose_flat(flatten(second), flatten(first))
    except InterfaceError as e:
        return _fail(EXIT_MISMATCH, str(e))
    obj = formats.linking_to_obj(out)
    obj["newLoops"] = lam
    _emit(obj)
    return EXIT_OK


def run_check(args) -> int:
    try:
        L = formats.load_linking(args.file)
        tag = FamilyTag.parse(args.family)
    except (OSError, ValueError) as e:
        return _fail(EXIT_INPUT, str(e))
    failed = failed_predicates(L, tag)
    _emit({"family": str(tag), "member": not failed, "failed": failed})
    return EXIT_CHECK if failed else EXIT_OK


def run_enumerate(args) -> int:
    try:
        tag = FamilyTag.parse(args.family)
        elems = enumerate_family(tag, args.n, cap=args.cap)
    except ValueError as e:
        return _fail(EXIT_INPUT, str(e))
    obj = {"family": str(FamilyTag(tag.kind, True)), "n": args.n,
           "count": len(elems),
           "elements": [formats.linking_to_obj(L) for L in elems]}
    if args.table:
        obj["table"] = [list(row) for row in multiplication_table(elems)]
    _emit(obj)
    return EXIT_OK


def run_render(args) -> int:
    try:
        L = formats.load_linking(args.file)
    except (OSError, formats.FormatError) as e:
        return _fail(EXIT_INPUT, str(e))
    if args.format == "ascii":
        text = render.render_ascii(L)
    elif args.format == "svg":
        text = render.render_svg(L)
    else:
        if not args.output:
            return _fail(EXIT_INPUT, "--format png needs --output PATH")
        render.render_figure(L, args.output)
        return EXIT_OK
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def run_mll_check(args) -> int:
    try:
        F = parse_formula(args.formula)
        st = ProofStructure(F, tuple(formats.parse_axiom_spec(args.axioms)))
        ok = dr_correct(st)
    except (FormulaSyntaxError, NetError, formats.FormatError, ValueError) as e:
        return _fail(EXIT_INPUT, str(e))
    _emit({"formula": str(F), "axioms": [list(p) for p in st.axioms], "correct": ok})
    return EXIT_OK if ok else EXIT_CHECK


def run_mll_compose(args) -> int:
    try:
        n1 = formats.load_net(args.first)
        n2 = formats.load_net(args.second)
    except (OSError, formats.FormatError) as e:
        return _fail(EXIT_INPUT, str(e))
    if n1.target != n2.source:
        return _fail(EXIT_MISMATCH,
                     f"target {n1.target} of the first net is not the source "
                     f"{n2.source} of the second")
    for name, n in (("first", n1), ("second", n2)):
        if not dr_correct(n):
            return _fail(EXIT_CHECK, f"the {name} net is not DR-correct")
    _emit(formats.net_to_obj(compose_nets(n2, n1)))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors count as invalid input; 2 is reserved for mismatches
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="linkcat",
        description="Compose, classify, enumerate and draw linking diagrams.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compose", help="compose two linkings (first, then second)")
    c.add_argument("first", help="linking X -> Y (JSON)")
    c.add_argument("second", help="linking Y -> Z (JSON)")
    c.add_argument("--flat", action="store_true", help="discard all loops in the result")
    c.set_defaults(func=run_compose)

    c = sub.add_parser("check", help="test membership of a family")
    c.add_argument("file")
    c.add_argument("--family", required=True,
                   help="link, part, brau, tlieb or nat, optionally with -flat")
    c.set_defaults(func=run_check)

    c = sub.add_parser("enumerate", help="list a loopless diagram monoid")
    c.add_argument("--family", required=True, help="part, brau, tlieb, link or nat")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--table", action="store_true", help="include the multiplication table")
    c.add_argument("--cap", type=int, default=None, help="override the size limit")
    c.set_defaults(func=run_enumerate)

    c = sub.add_parser("render", help="draw a linking")
    c.add_argument("file")
    c.add_argument("--format", choices=("ascii", "svg", "png"), default="ascii")
    c.add_argument("--output", "-o", help="write to a file instead of stdout")
    c.set_defaults(func=run_render)

    def add_mll_check(sp):
        sp.add_argument("formula", help='e.g. "(a^ @ a)"')
        sp.add_argument("--axioms", required=True, help='leaf index pairs, e.g. "0-1,2-3"')
        sp.set_defaults(func=run_mll_check)

    def add_mll_compose(sp):
        sp.add_argument("first", help="net X -> Y (JSON)")
        sp.add_argument("second", help="net Y -> Z (JSON)")
        sp.set_defaults(func=run_mll_compose)

    m = sub.add_parser("mll", help="multiplicative proof nets")
    msub = m.add_subparsers(dest="mll_command", required=True)
    add_mll_check(msub.add_parser("check", help="Danos-Regnier correctness"))
    add_mll_compose(msub.add_parser("compose", help="cut elimination by composition"))
    add_mll_check(sub.add_parser("mll-check", help="same as 'mll check'"))
    add_mll_compose(sub.add_parser("mll-compose", help="same as 'mll compose'"))
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
