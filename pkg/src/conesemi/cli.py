"""Command line front end: ``conesemi <subcommand> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 interval cap exceeded,
3 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from .cone import Cone, orthant, parse_cone
from .errors import CapExceededError, ConeSemiError, EmptyBSetError, NoPrimaryExistsError, ParseError
from .forest import build_forest, construct_primary
from .irreducible import PSEUDO_SYMMETRIC, SYMMETRIC, enumerate_irreducible, ei_set
from .oracle import compare, enumerate_all, oracle_primary_set
from .orders import GREVLEX, GRLEX, LEX, parse_order
from .positioned import PositionedContext, classify, is_k_positioned, is_primary_positioned
from .semigroup import CSemigroup, from_gaps
from .serialize import FORMATS, fmt_vec, fmt_vecs, emit

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_CAP = 2
EXIT_INPUT = 3


def parse_vector(text: str):
    try:
        return tuple(int(c) for c in text.replace("(", "").replace(")", "").split(","))
    except ValueError as exc:
        raise ParseError(f"bad vector {text!r}") from exc


def _cone_for(args) -> Cone:
    if args.cone:
        return parse_cone(args.cone)
    return orthant(len(parse_vector(args.k)))


def _semigroup_list(items: List[CSemigroup], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([[list(g) for g in s.gaps] for s in items]) + "\n"
    if fmt != "text":
        raise ParseError(f"format {fmt!r} is not available here")
    lines = [f"{len(items)} semigroups"]
    lines += [f"  genus {s.genus} gaps {fmt_vecs(s.gaps)}" for s in items]
    return "\n".join(lines) + "\n"


# -- analyze -----------------------------------------------------------------


def _load_document(path: str):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    try:
        gens = doc["cone"]["generators"]
        cone = Cone(len(gens[0]), tuple(tuple(g) for g in gens))
    except (KeyError, IndexError, TypeError) as exc:
        raise ParseError(f"input needs cone.generators: {exc!r}") from exc
    ks = doc.get("k", [])
    if ks and not isinstance(ks[0], list):
        ks = [ks]
    return cone, doc.get("gaps", []), [tuple(k) for k in ks], doc.get("order", "grlex")


def analyze_report(s: CSemigroup, ks: Sequence, order, gns_conventions: bool = False) -> dict:
    cone = s.cone
    report = {"cone": [list(g) for g in cone.generators], "gaps": [list(g) for g in s.gaps],
              "genus": s.genus}
    if s.is_whole_cone:
        report["whole_cone"] = True
        if gns_conventions and set(cone.hilbert_basis) == set(orthant(cone.dimension).generators):
            report["frobenius"] = {o.name: [-1] * cone.dimension for o in (LEX, GRLEX, GREVLEX)}
    else:
        orders = {o.name: o for o in (LEX, GRLEX, GREVLEX, order)}
        report["frobenius"] = {name: list(s.frobenius(o)) for name, o in orders.items()}
        report["minimal_generators"] = [list(x) for x in s.minimal_generators]
        report["pseudo_frobenius"] = [list(x) for x in s.pseudo_frobenius]
        report["special_gaps"] = [list(x) for x in s.special_gaps]
        report["M"] = [list(x) for x in s.m_set]
        report["C"] = [list(x) for x in s.c_set]
        report["x_minimals"] = [list(x) for x in s.x_minimals()]
    per_k = []
    for k in ks:
        entry = {"k": list(k), "k_positioned": is_k_positioned(s, k),
                 "primary_positioned": is_primary_positioned(s, k)}
        if k in s and entry["k_positioned"]:
            entry["class"] = classify(s, k, order)
            ctx = PositionedContext(s, k, order)
            entry["B"] = [list(x) for x in ctx.b_set]
            try:
                entry["beta"] = list(ctx.beta)
            except EmptyBSetError:
                entry["beta"] = None
        per_k.append(entry)
    report["k"] = per_k
    return report


def _analyze_text(r: dict) -> str:
    lines = [f"gaps ({r['genus']}): {fmt_vecs(r['gaps'])}"]
    if r.get("whole_cone"):
        lines.append("S = C")
        if "frobenius" in r:
            lines.append("Frobenius: " + fmt_vec(r["frobenius"]["grlex"]))
    else:
        for name, f in r["frobenius"].items():
            lines.append(f"Frobenius ({name}): {fmt_vec(f)}")
        lines.append(f"msg ({len(r['minimal_generators'])}): {fmt_vecs(r['minimal_generators'])}")
        lines.append(f"PF: {fmt_vecs(r['pseudo_frobenius'])}")
        lines.append(f"SG: {fmt_vecs(r['special_gaps'])}")
        lines.append(f"M ({len(r['M'])}): {fmt_vecs(r['M'])}")
        lines.append(f"C ({len(r['C'])}): {fmt_vecs(r['C'])}")
        lines.append(f"Minimals(X_S): {fmt_vecs(r['x_minimals'])}")
    for e in r["k"]:
        lines.append(f"k = {fmt_vec(e['k'])}: k-positioned {e['k_positioned']}, "
                     f"primary positioned {e['primary_positioned']}")
        if "class" in e:
            beta = "-" if e["beta"] is None else fmt_vec(e["beta"])
            lines.append(f"  class {e['class']}, B = {fmt_vecs(e['B'])}, beta = {beta}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    cone, gaps, ks, order_name = _load_document(args.input)
    order = parse_order(args.order or order_name)
    ks += [parse_vector(k) for k in args.k or []]
    s = from_gaps(cone, gaps)
    report = analyze_report(s, ks, order, args.gns_conventions)
    if args.format == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(_analyze_text(report))
    return EXIT_OK


# -- enumeration commands ------------------------------------------------------


def cmd_irreducible(args) -> int:
    cone = _cone_for(args)
    kind = PSEUDO_SYMMETRIC if args.kind.startswith("pseudo") else SYMMETRIC
    items = enumerate_irreducible(cone, parse_vector(args.k), kind, parse_order(args.order))
    sys.stdout.write(_semigroup_list(items, args.format))
    return EXIT_OK


def cmd_ei(args) -> int:
    cone = _cone_for(args)
    items = ei_set(cone, parse_vector(args.k), parse_order(args.order))
    sys.stdout.write(_semigroup_list(items, args.format))
    return EXIT_OK


def cmd_forest(args) -> int:
    cone = _cone_for(args)
    forest = build_forest(cone, parse_vector(args.k), parse_order(args.order), jobs=args.jobs)
    sys.stdout.write(emit(forest, args.format))
    return EXIT_OK


def cmd_oracle(args) -> int:
    cone = _cone_for(args)
    k = parse_vector(args.k)
    items = enumerate_all(cone, k) if args.all else oracle_primary_set(cone, k)
    sys.stdout.write(_semigroup_list(items, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    cone = _cone_for(args)
    report = compare(cone, parse_vector(args.k), parse_order(args.order), jobs=args.jobs)
    sys.stdout.write("\n".join(report.lines()) + "\n")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_construct(args) -> int:
    cone = _cone_for(args)
    k = parse_vector(args.k)
    try:
        s = construct_primary(cone, k, parse_order(args.order))
    except NoPrimaryExistsError as exc:
        sys.stdout.write(f"no primary positioned semigroup: {exc}\n")
        return EXIT_OK
    sys.stdout.write(_semigroup_list([s], args.format))
    return EXIT_OK


# -- entry point -----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the bad-input code, not argparse's 2 (taken by the cap)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="conesemi",
                                     description="Primary positioned C-semigroups and their forests.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json"), jobs=False):
        p.add_argument("--cone", help='generators such as "1,0;1,1", or N2 / N^3 (default: N^d)')
        p.add_argument("--k", required=True, help="the element k, e.g. 2,3")
        p.add_argument("--order", default="grlex", help="lex, grlex, grevlex or weighted:w1,w2:tiebreak")
        p.add_argument("--format", default="text", choices=formats)
        if jobs:
            p.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = sub.add_parser("analyze", help="invariants of a semigroup read from a JSON file")
    p.add_argument("input")
    p.add_argument("--k", action="append", help="extra k to test (repeatable)")
    p.add_argument("--order", default=None)
    p.add_argument("--format", default="text", choices=("text", "json"))
    p.add_argument("--gns-conventions", action="store_true",
                   help="print (-1,...,-1) as the Frobenius element of N^d")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("irreducible", help="symmetric or pseudo-symmetric semigroups with Frobenius k")
    common(p)
    p.add_argument("--kind", default="symmetric", choices=("symmetric", "pseudo-symmetric"))
    p.set_defaults(func=cmd_irreducible)

    p = sub.add_parser("ei", help="the forest roots EI(k)")
    common(p)
    p.set_defaults(func=cmd_ei)

    p = sub.add_parser("forest", help="all primary positioned semigroups for k, as a forest")
    common(p, FORMATS, jobs=True)
    p.set_defaults(func=cmd_forest)

    p = sub.add_parser("oracle", help="brute-force primary positioned set")
    common(p)
    p.add_argument("--all", action="store_true", help="list every semigroup with gaps in I_C(k)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="compare the forest against the brute-force oracle")
    common(p, jobs=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="one primary positioned semigroup for k")
    common(p)
    p.set_defaults(func=cmd_construct)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except (ConeSemiError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
