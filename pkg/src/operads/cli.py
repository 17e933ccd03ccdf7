"""Command-line front end.

All output is plain deterministic text on stdout; diagnostics go to
stderr.  Exit codes: 0 success, 1 a false answer from an equality query,
2 bad input, 3 internal soundness failure.
"""

from __future__ import annotations

import argparse
import sys

from . import addresses as ad
from . import arrows as ar
from . import perm_engine as pe
from . import polytopes as pt
from .errors import OperadError, SoundnessError
from .parser import parse_arrow, parse_term
from .terms import Signature
from .translate import term_eq, translate


def _load_signature(path: str) -> Signature:
    with open(path, encoding="utf-8") as handle:
        return Signature.from_text(handle.read())


def _flavor(args) -> str:
    return args.flavor


def _add_common(sub, arrows=False):
    sub.add_argument("--sig", required=True, help="signature file: 'name arity' lines")
    group = sub.add_mutually_exclusive_group(required=True)
    choices = ("--oe", "--ou") if arrows else ("--o", "--oe", "--ou")
    for flag in choices:
        group.add_argument(flag, dest="flavor", action="store_const",
                           const=flag[2:])
    sub.add_argument("--non-unitary", dest="unitary", action="store_false")


def _cmd_sig(args):
    sig = _load_signature(args.sig)
    term = parse_term(args.expr, sig, _flavor(args), args.unitary)
    if term.flavor == "o":
        print(f"alpha = {term.alpha}")
    elif term.flavor == "oe":
        print(f"s = {ad.arity_str(term.s)}")
    else:
        print(f"s = {ad.arity_str(term.s)}")
        print(f"t = {ad.word_str(term.t)}")
    return 0


def _cmd_translate(args):
    sig = _load_signature(args.sig)
    term = parse_term(args.expr, sig, _flavor(args), args.unitary)
    print(translate(term, args.to))
    return 0


def _cmd_eq(args):
    sig = _load_signature(args.sig)
    f = parse_term(args.left, sig, _flavor(args), args.unitary)
    g = parse_term(args.right, sig, _flavor(args), args.unitary)
    answer = term_eq(f, g)
    print("true" if answer else "false")
    return 0 if answer else 1


def _cmd_arrow_check(args):
    sig = _load_signature(args.sig)
    u = parse_arrow(args.expr, sig, _flavor(args), args.unitary)
    print(f"{u.source} -> {u.target}")
    return 0


def _cmd_arrow_eq(args):
    sig = _load_signature(args.sig)
    u = parse_arrow(args.left, sig, _flavor(args), args.unitary)
    v = parse_arrow(args.right, sig, _flavor(args), args.unitary)
    answer = ar.arrow_eq(u, v)
    print("true" if answer else "false")
    return 0 if answer else 1


def _cmd_normalize(args):
    sig = _load_signature(args.sig)
    f = parse_term(args.expr, sig, "ou", args.unitary)
    normal, arrow = ar.normalize_object(f)
    print(normal)
    print(arrow)
    return 0


def _cmd_strictify(args):
    sig = _load_signature(args.sig)
    u = parse_arrow(args.expr, sig, "ou", args.unitary)
    strict = ar.strictify(u)
    print(f"source: {pe.word_str(strict.source)}")
    print(f"target: {pe.word_str(strict.target)}")
    for step in strict.steps:
        print(step)
    return 0


def _parse_vertex_file(text):
    out = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad line: {raw!r}")
        out[ad.word_from_str(parts[0])] = parts[1]
    return out


def _cmd_polytope(args):
    sig = _load_signature(args.sig)
    leaves = ad.arity_from_str(args.leaves)
    with open(args.labels, encoding="utf-8") as handle:
        labels = _parse_vertex_file(handle.read())
    rename = {}
    if args.rename:
        with open(args.rename, encoding="utf-8") as handle:
            rename = _parse_vertex_file(handle.read())
    tree = pt.TreeInput(sig, leaves, labels, rename)
    skeleton = pt.build_skeleton(tree)
    sys.stdout.write(pt.emit(skeleton, args.format))
    return 0


def make_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="operads")
    subs = top.add_subparsers(dest="command", required=True)

    p = subs.add_parser("sig", help="print the signature of a term")
    _add_common(p)
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_sig)

    p = subs.add_parser("translate", help="translate a term between flavors")
    _add_common(p)
    p.add_argument("--to", required=True, choices=("o", "oe", "ou"))
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_translate)

    p = subs.add_parser("eq", help="decide term equality")
    _add_common(p)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(fn=_cmd_eq)

    p = subs.add_parser("arrow-check", help="typecheck an arrow term")
    _add_common(p, arrows=True)
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_arrow_check)

    p = subs.add_parser("arrow-eq", help="decide arrow equality")
    _add_common(p, arrows=True)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(fn=_cmd_arrow_eq)

    p = subs.add_parser("normalize",
                        help="normal object and a directed arrow to it")
    p.add_argument("--sig", required=True)
    p.add_argument("--non-unitary", dest="unitary", action="store_false")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_normalize)

    p = subs.add_parser("strictify",
                        help="transposition sequence of an arrow")
    p.add_argument("--sig", required=True)
    p.add_argument("--non-unitary", dest="unitary", action="store_false")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_strictify)

    p = subs.add_parser("polytope", help="tree-destruction skeleton")
    p.add_argument("--sig", required=True)
    p.add_argument("--leaves", required=True)
    p.add_argument("--labels", required=True,
                   help="file of 'address generator' lines")
    p.add_argument("--rename", help="file of 'address shortname' lines")
    p.add_argument("--format", required=True, choices=("dot", "json"))
    p.set_defaults(fn=_cmd_polytope)

    return top


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SoundnessError as exc:
        print(f"internal soundness failure: {exc}", file=sys.stderr)
        return 3
    except (OperadError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
