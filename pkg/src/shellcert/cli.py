"""Command-line surface.

Subcommands operate on a complex document (JSON or plain text, see
``formats``) given as a file path, ``-`` for stdin, or ``--fixture NAME`` for
a bundled catalog complex.

Exit codes: 0 the property holds / verification passed, 1 the property fails
or a counterexample was found, 2 input error, 3 undecided (search threshold
exceeded).  The ``SHELLCERT_MAX_FACETS`` environment variable overrides the
exact-search threshold.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog
from .complexes import (
    Complex,
    InputError,
    alexander_dual,
    is_flag,
    minimal_nonfaces,
    restrict_to_support,
)
from .facts import build_fact_table
from .formats import parse_complex, to_json_document
from .generators import random_complex, random_flag_complex
from .homology import DEFAULT_FIELDS, Field, is_cohen_macaulay, is_sequentially_cm, reduced_homology
from .hunt import hunt_counterexample
from .orders import (
    SHELLING,
    STRONG_GCD,
    WEAK_SHELLING,
    Undecided,
    check_shelling_order,
    check_strong_gcd_order,
    check_weak_shelling_order,
    find_shelling_order,
    find_strong_gcd_order,
    find_weak_shelling_order,
)
from .verify import run_claims

EX_OK = 0
EX_FAIL = 1
EX_INPUT = 2
EX_UNDECIDED = 3

_CONDITIONS = {"shelling": SHELLING, "weak": WEAK_SHELLING, "sgcd": STRONG_GCD}


def _load(args) -> Complex:
    if getattr(args, "fixture", None):
        maker = catalog.FIXTURES.get(args.fixture)
        if maker is None:
            raise InputError("unknown fixture %r (have: %s)"
                             % (args.fixture, ", ".join(sorted(catalog.FIXTURES))))
        return maker()
    if not getattr(args, "input", None):
        raise InputError("no input: give a file path, '-' for stdin, or --fixture NAME")
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(str(e))
    return parse_complex(text)


def _fmt_face(c: Complex, mask: int) -> str:
    return "{%s}" % ",".join(str(v) for v in c.universe.members(mask))


def _parse_order(c: Complex, spec: str, items) -> list:
    """An order given as comma-separated 0-based positions into the canonical list."""
    try:
        idx = [int(t) for t in spec.split(",")]
    except ValueError:
        raise InputError("--order must be comma-separated integer positions")
    if sorted(idx) != list(range(len(items))):
        raise InputError("--order must be a permutation of 0..%d" % (len(items) - 1))
    return [items[i] for i in idx]


def cmd_dual(args) -> int:
    c = _load(args)
    print(to_json_document(alexander_dual(c)))
    return EX_OK


def cmd_nonfaces(args) -> int:
    c = _load(args)
    for m in minimal_nonfaces(c):
        print(" ".join(str(v) for v in c.universe.members(m)))
    return EX_OK


def cmd_flag(args) -> int:
    c = _load(args)
    verdict = is_flag(c)
    print("flag" if verdict else "not flag")
    return EX_OK if verdict else EX_FAIL


def cmd_check(args) -> int:
    c = _load(args)
    kind = _CONDITIONS[args.condition]
    items = minimal_nonfaces(c) if kind == STRONG_GCD else list(c.facets)
    seq = _parse_order(c, args.order, items)
    if kind == SHELLING:
        rep = check_shelling_order(c, seq)
    elif kind == WEAK_SHELLING:
        rep = check_weak_shelling_order(c, seq)
    else:
        rep = check_strong_gcd_order(c, seq)
    if rep.ok:
        print("valid %s order" % kind)
        return EX_OK
    print("invalid %s order: %r" % (kind, rep.witness))
    return EX_FAIL


def cmd_find(args) -> int:
    c = _load(args)
    kind = _CONDITIONS[args.condition]
    finder = {SHELLING: find_shelling_order, WEAK_SHELLING: find_weak_shelling_order,
              STRONG_GCD: find_strong_gcd_order}[kind]
    try:
        cert = finder(c)
    except Undecided as e:
        print("undecided: %s" % e)
        return EX_UNDECIDED
    if cert is None:
        print("none exists")
        return EX_FAIL
    print("found %s order:" % kind)
    for m in cert.sequence:
        print("  " + _fmt_face(c, m))
    return EX_OK


def _fields(args):
    if getattr(args, "field", None):
        return tuple(Field.parse(f) for f in args.field)
    return DEFAULT_FIELDS


def cmd_homology(args) -> int:
    c = _load(args)
    for f in _fields(args):
        print(str(reduced_homology(c, f)))
    return EX_OK


def _cm_command(args, tester) -> int:
    c = _load(args)
    worst = EX_OK
    for f in _fields(args):
        rep = tester(c, f)
        if rep.degenerate:
            print("%s: degenerate input (%s)" % (f, rep.degenerate))
            return EX_INPUT
        if rep.ok:
            print("%s: yes" % f)
        else:
            print("%s: no, witness %r" % (f, rep.witness))
            worst = EX_FAIL
    return worst


def cmd_cm(args) -> int:
    return _cm_command(args, is_cohen_macaulay)


def cmd_scm(args) -> int:
    return _cm_command(args, is_sequentially_cm)


def cmd_table(args) -> int:
    c = _load(args)
    table = build_fact_table(c, fields=_fields(args))
    if getattr(args, "fixture", None) in catalog.CLAIMS:
        claimed = catalog.CLAIMS[args.fixture]
        print("catalog claim: %s" % (claimed,))
    print(table.as_text())
    if any(s.note.startswith("undecided") for s in table.slots.values()):
        return EX_UNDECIDED
    return EX_OK


def cmd_verify_paper(args) -> int:
    results = run_claims()
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        detail = (" (%s)" % r.detail) if (r.detail and not r.passed) else ""
        print("[%s] %s%s" % (status, r.name, detail))
        failed += 0 if r.passed else 1
    print("%d/%d claims passed" % (len(results) - failed, len(results)))
    return EX_OK if failed == 0 else EX_FAIL


def cmd_random(args) -> int:
    if args.flag:
        c = random_flag_complex(args.seed, args.vertices, args.edge_prob)
    else:
        c = random_complex(args.seed, args.vertices, args.density)
    print(to_json_document(c))
    return EX_OK


def cmd_hunt(args) -> int:
    report = hunt_counterexample(args.seed, args.budget)
    print(report.as_text())
    return EX_FAIL if report.hits else EX_OK


def _add_input_options(p):
    p.add_argument("input", nargs="?", help="complex document path, or '-' for stdin")
    p.add_argument("--fixture", help="use a bundled catalog complex instead of a file")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="shellcert",
                                  description="decide and certify order conditions on simplicial complexes")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dual", help="print the Alexander dual")
    _add_input_options(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("nonfaces", help="print the minimal non-faces")
    _add_input_options(p)
    p.set_defaults(func=cmd_nonfaces)

    p = sub.add_parser("flag", help="is every minimal non-face a pair?")
    _add_input_options(p)
    p.set_defaults(func=cmd_flag)

    p = sub.add_parser("check", help="validate a given order")
    p.add_argument("condition", choices=sorted(_CONDITIONS))
    p.add_argument("--order", required=True,
                   help="comma-separated 0-based positions into the canonical facet "
                        "(or non-face, for sgcd) list")
    _add_input_options(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("find", help="search for an order; exit 3 when undecided")
    p.add_argument("condition", choices=sorted(_CONDITIONS))
    _add_input_options(p)
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("homology", help="reduced homology ranks")
    p.add_argument("--field", action="append", help="gf2, gf<p> or q (repeatable)")
    _add_input_options(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("cm", help="Cohen-Macaulay test (link vanishing)")
    p.add_argument("--field", action="append", help="gf2, gf<p> or q (repeatable)")
    _add_input_options(p)
    p.set_defaults(func=cmd_cm)

    p = sub.add_parser("scm", help="sequentially Cohen-Macaulay test (pure skeleta)")
    p.add_argument("--field", action="append", help="gf2, gf<p> or q (repeatable)")
    _add_input_options(p)
    p.set_defaults(func=cmd_scm)

    p = sub.add_parser("table", help="the four-condition fact table with provenance")
    p.add_argument("--field", action="append", help="gf2, gf<p> or q (repeatable)")
    _add_input_options(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify-paper", help="re-derive every bundled catalog claim")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("random", help="emit a seeded random complex as JSON")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--flag", action="store_true", help="clique complex of a random graph")
    p.add_argument("--edge-prob", type=float, default=0.5)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("hunt", help="hunt for a sequentially CM complex that is not weakly shellable")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--budget", type=int, required=True, help="number of candidates to screen")
    p.set_defaults(func=cmd_hunt)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print("input error: %s" % e, file=sys.stderr)
        return EX_INPUT
    except Undecided as e:
        print("undecided: %s" % e, file=sys.stderr)
        return EX_UNDECIDED


if __name__ == "__main__":
    sys.exit(main())
