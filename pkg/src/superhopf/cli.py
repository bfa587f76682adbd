"""Command-line front end.

    superhopf product --basis Q '{0,2}|{0,1,3}' '{0,1,2}|{0}'
    superhopf coproduct --basis m '{0,2,4}|{0,3}|{1}'
    superhopf convert --basis MonF --to Q '{1}|{0,2}|{3}'
    superhopf expand --basis Mnc --vars 4 '{2,4}|{0,1,5}|{0,3}'
    superhopf poset --upset '{0}|{1}|{2}|{4}|{0,3}'
    superhopf verify --suite hopf-axioms --max-size 4

Exit status: 0 on success, 1 when a verification fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .checks import SUITES, run_suite
from .combinat import InvalidIndexError, ParseError, parse_dotted, parse_supercomposition
from .hopf import NotSymmetricError, UnsupportedConversion, abelianize, antipode, change_basis, coproduct, symmetric_to_m
from .linear import Basis, basis_element
from .oracle import expand
from .posets import PosetInterval, dotted_downset, fiber_bounds, sc_upset, weak_interval

BASES = [b.value for b in Basis]


class UsageError(Exception):
    pass


def emit_dot(interval: PosetInterval, name: str = "interval") -> str:
    return interval.to_dot(name)


def _index(basis: Basis, text: str):
    index = parse_dotted(text) if basis.commutative else parse_supercomposition(text)
    basis.check_index(index)
    return index


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _emit_combination(x, fmt: str) -> str:
    if fmt == "structured":
        return _dump(x.to_structured())
    if fmt == "dot":
        raise UsageError("--format dot applies to the poset command only")
    return x.to_text()


def _cmd_product(args) -> str:
    basis = Basis.parse(args.basis)
    if len(args.index) < 2:
        raise UsageError("product needs at least two indices")
    x = basis_element(basis, _index(basis, args.index[0]))
    for text in args.index[1:]:
        x = x * basis_element(basis, _index(basis, text))
    return _emit_combination(x, args.format)


def _cmd_coproduct(args) -> str:
    basis = Basis.parse(args.basis)
    return _emit_combination(coproduct(basis_element(basis, _index(basis, args.index))), args.format)


def _cmd_antipode(args) -> str:
    basis = Basis.parse(args.basis)
    return _emit_combination(antipode(basis_element(basis, _index(basis, args.index))), args.format)


def _cmd_convert(args) -> str:
    basis, target = Basis.parse(args.basis), Basis.parse(args.to)
    x = basis_element(basis, _index(basis, args.index))
    if target is Basis.m:
        x = symmetric_to_m(x)
    elif target.commutative and not basis.commutative:
        x = change_basis(abelianize(x), target)
    else:
        x = change_basis(x, target)
    return _emit_combination(x, args.format)


def _cmd_expand(args) -> str:
    basis = Basis.parse(args.basis)
    p = expand(basis, _index(basis, args.index), args.vars)
    if args.format == "structured":
        terms = []
        for u, c in sorted(p.terms.items(), key=lambda kv: str(kv[0])):
            bosons = [list(e) for e in u.exps] if basis.commutative else list(u.word)
            terms.append([list(u.thetas), bosons, c])
        return _dump({"variant": p.variant, "vars": p.N, "terms": terms})
    if args.format == "dot":
        raise UsageError("--format dot applies to the poset command only")
    return p.to_text()


def _cmd_poset(args) -> str:
    if args.upset:
        P, name = sc_upset(parse_supercomposition(args.upset)), "upset"
    elif args.downset:
        P, name = dotted_downset(parse_dotted(args.downset)), "downset"
    elif args.fiber:
        lo, hi = fiber_bounds(parse_dotted(args.fiber))
        P, name = weak_interval(lo, hi), "fiber"
    else:
        lo, hi = (parse_supercomposition(t) for t in args.interval)
        P, name = weak_interval(lo, hi), "interval"
    fmt = args.format or "dot"
    if fmt == "dot":
        return emit_dot(P, name)
    if fmt == "structured":
        return _dump({
            "elements": [x.to_structured() for x in P.elements],
            "covers": [[a.to_structured(), b.to_structured()]
                       for a, b in sorted(P.covers, key=lambda e: (str(e[0]), str(e[1])))],
        })
    lines = [f"{len(P)} elements, {len(P.covers)} covers"]
    lines += [str(x) for x in P.elements]
    lines += [f"{a} < {b}" for a, b in sorted(P.covers, key=lambda e: (str(e[0]), str(e[1])))]
    return "\n".join(lines) + "\n"


def _cmd_verify(args):
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    out, ok = [], True
    for name in names:
        report = run_suite(name, max_size=args.max_size, seed=args.seed)
        ok &= report.ok
        out.append(report.summary())
        if args.verbose:
            out.extend(f"FAIL {f}" for f in report.failures)
    if ok and len(names) > 1:
        out.append("all checks passed")
    return "\n".join(out) + "\n", (0 if ok else 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superhopf", description="Exact arithmetic in sQSym, sNCQSym, sNCSym and sFQSym.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, index_nargs=None):
        p.add_argument("--basis", choices=BASES, required=True)
        p.add_argument("--format", choices=["text", "structured", "dot"], default="text")
        if index_nargs:
            p.add_argument("index", nargs=index_nargs)
        else:
            p.add_argument("index")

    common(sub.add_parser("product", help="multiply basis elements left to right"), "+")
    common(sub.add_parser("coproduct", help="coproduct of a basis element"))
    common(sub.add_parser("antipode", help="antipode of a basis element"))
    p = sub.add_parser("convert", help="rewrite a basis element in another basis")
    common(p)
    p.add_argument("--to", choices=BASES, required=True)
    p = sub.add_parser("expand", help="polynomial expansion in N variables")
    common(p)
    p.add_argument("--vars", type=int, required=True, metavar="N")

    p = sub.add_parser("poset", help="Hasse diagram of an interval")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--upset", metavar="I", help="set supercompositions above I")
    g.add_argument("--downset", metavar="ALPHA", help="refinements of a dotted composition")
    g.add_argument("--fiber", metavar="SIGMA", help="superpermutations with alpha image SIGMA")
    g.add_argument("--interval", nargs=2, metavar=("I", "J"), help="weak-order interval [I, J]")
    p.add_argument("--format", choices=["text", "structured", "dot"], default=None)
    p.add_argument("--dot", action="store_const", const="dot", dest="format", help="same as --format dot")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--max-size", type=int, default=4, metavar="K")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verbose", action="store_true")
    return parser


_COMMANDS = {
    "product": _cmd_product,
    "coproduct": _cmd_coproduct,
    "antipode": _cmd_antipode,
    "convert": _cmd_convert,
    "expand": _cmd_expand,
    "poset": _cmd_poset,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            text, code = _cmd_verify(args)
        else:
            text, code = _COMMANDS[args.command](args), 0
    except (ParseError, InvalidIndexError, UsageError, UnsupportedConversion, NotSymmetricError) as exc:
        print(f"superhopf: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
