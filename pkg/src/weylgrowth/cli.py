"""Command-line interface.

Subcommands: enumerate, catalog, verify, discover, a3, classify.

Exit status discipline: 0 success / identity holds, 1 verification failed
or nothing matched, 2 bad input or usage.  Output is deterministic: JSON
keys are emitted in fixed order and polynomials in canonical ascending
form, so identical inputs give byte-identical stdout for any --threads
value.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cartan import classify, load_cartan
from .catalog import NUM_ENTRIES, duplicate_classes, q_polynomial
from .errors import WeylGrowthError
from .series import format_polynomial
from .verify import a3_reduction, discover, verify_identity
from .weyl import enumerate_levels

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

DEFAULT_MAX_LEN = 20


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylgrowth",
        description="Weyl group growth series and rank-3 hyperbolic identities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_cartan=True):
        if with_cartan:
            p.add_argument("--cartan", required=True, metavar="PATH",
                           help="Cartan matrix JSON file")
        p.add_argument("--threads", type=int, default=1,
                       help="worker threads for frontier expansion")
        p.add_argument("--json", action="store_true", help="JSON output")

    p_enum = sub.add_parser("enumerate", help="growth series by orbit enumeration")
    add_common(p_enum)
    p_enum.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN, metavar="N")
    p_enum.add_argument("--text", action="store_true",
                        help="force text output (default)")

    p_cat = sub.add_parser("catalog", help="embedded denominator polynomials")
    p_cat.add_argument("action", choices=["list", "show"])
    p_cat.add_argument("--s", type=int, metavar="K", help="catalog index 1..19")
    p_cat.add_argument("--json", action="store_true", help="JSON output")

    p_ver = sub.add_parser("verify", help="check growth series against P_B3/Q_s")
    add_common(p_ver)
    p_ver.add_argument("--s", type=int, required=True, metavar="K")
    p_ver.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN, metavar="N")

    p_dis = sub.add_parser("discover", help="fit a denominator from the series")
    add_common(p_dis)
    p_dis.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN, metavar="N")

    p_a3 = sub.add_parser("a3", help="existence of the A_3-numerator reduction")
    group = p_a3.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true")
    group.add_argument("--s", type=int, metavar="K")
    p_a3.add_argument("--json", action="store_true", help="JSON output")

    p_cls = sub.add_parser("classify", help="finite/affine/indefinite type")
    p_cls.add_argument("--cartan", required=True, metavar="PATH")
    p_cls.add_argument("--json", action="store_true", help="JSON output")

    return parser


def _cmd_enumerate(args) -> int:
    m = load_cartan(args.cartan)
    series = enumerate_levels(m, args.max_len, threads=args.threads)
    if args.json and not args.text:
        print(json.dumps({"name": m.name, "q": list(series.q)}))
    else:
        for n, value in enumerate(series.q):
            print(f"q({n}) = {value}")
        print(f"total {series.total()}")
    return EXIT_OK


def _cmd_catalog(args) -> int:
    if args.action == "show":
        if args.s is None:
            raise WeylGrowthError("catalog show requires --s")
        entry = q_polynomial(args.s)
        if args.json:
            print(json.dumps({
                "s": entry.s,
                "factored": str(entry.q_factored),
                "expanded": format_polynomial(entry.q_expanded),
                "class_id": entry.class_id,
            }))
        else:
            print(f"Q_{entry.s} = {entry.q_factored}")
            print(f"    = {format_polynomial(entry.q_expanded)}")
        return EXIT_OK
    classes = duplicate_classes()
    if args.json:
        print(json.dumps({
            "entries": [
                {
                    "s": s,
                    "factored": str(q_polynomial(s).q_factored),
                    "expanded": format_polynomial(q_polynomial(s).q_expanded),
                    "class_id": q_polynomial(s).class_id,
                }
                for s in range(1, NUM_ENTRIES + 1)
            ],
            "classes": [list(c) for c in classes],
        }))
    else:
        for s in range(1, NUM_ENTRIES + 1):
            entry = q_polynomial(s)
            print(f"Q_{s:<2} [class {entry.class_id}] = {entry.q_factored}")
        print("duplicate classes: "
              + " ".join("{" + ",".join(map(str, c)) + "}" for c in classes))
    return EXIT_OK


def _print_report(report, as_json: bool) -> None:
    if as_json:
        print(report.to_json())
        return
    print(f"{report.subject}: {report.outcome}")
    if report.outcome == "fail":
        n, expected, actual = report.first_mismatch
        print(f"first mismatch at degree {n}: expected {expected}, got {actual}")
        for row in report.table:
            print("  n=%-3d expected=%-12d actual=%d" % row)
    elif report.polynomial is not None:
        print(f"denominator: {format_polynomial(report.polynomial)}")
        if report.classes:
            print("matches catalog class {%s}"
                  % ",".join(map(str, report.classes)))
        else:
            print("no catalog entry matches")


def _cmd_verify(args) -> int:
    m = load_cartan(args.cartan)
    report = verify_identity(m, args.s, args.max_len, threads=args.threads)
    _print_report(report, args.json)
    return EXIT_OK if report.passed else EXIT_FAILED


def _cmd_discover(args) -> int:
    m = load_cartan(args.cartan)
    report = discover(m, args.max_len, threads=args.threads)
    _print_report(report, args.json)
    return EXIT_OK if report.passed else EXIT_FAILED


EXPECTED_NO_SOLUTION = (8, 9, 13, 14)


def _cmd_a3(args) -> int:
    if args.s is not None:
        r = a3_reduction(args.s)
        if args.json:
            print(json.dumps({
                "s": args.s,
                "solution": format_polynomial(r) if r is not None else None,
            }))
        else:
            if r is None:
                print(f"s={args.s}: no polynomial solution")
            else:
                print(f"s={args.s}: R = {format_polynomial(r)}")
        return EXIT_OK if r is not None else EXIT_FAILED
    rows = [(s, a3_reduction(s)) for s in range(1, NUM_ENTRIES + 1)]
    missing = tuple(s for s, r in rows if r is None)
    if args.json:
        print(json.dumps({
            "solutions": {
                str(s): format_polynomial(r) if r is not None else None
                for s, r in rows
            },
            "no_solution": list(missing),
        }))
    else:
        for s, r in rows:
            if r is None:
                print(f"s={s:<2} no polynomial solution")
            else:
                print(f"s={s:<2} R = {format_polynomial(r)}")
        print(f"{len(rows) - len(missing)} solutions, {len(missing)} failures")
    return EXIT_OK if missing == EXPECTED_NO_SOLUTION else EXIT_FAILED


def _cmd_classify(args) -> int:
    m = load_cartan(args.cartan)
    cls = classify(m)
    if args.json:
        print(json.dumps({
            "name": m.name,
            "kind": cls.kind.value,
            "hyperbolic": cls.hyperbolic,
        }))
    else:
        print(f"{m.name}: {cls}")
    return EXIT_OK


_HANDLERS = {
    "enumerate": _cmd_enumerate,
    "catalog": _cmd_catalog,
    "verify": _cmd_verify,
    "discover": _cmd_discover,
    "a3": _cmd_a3,
    "classify": _cmd_classify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (WeylGrowthError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
