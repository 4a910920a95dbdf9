"""Command-line front end.

Exit codes: 0 success (or verified ODFC), 1 well-formed input that is not an
ODFC, 2 usage or format error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, flag, rankmetric, selftest
from .errors import FlagforgeError, FormatError
from .galois import FieldSpec, field_make, field_of_order

EXIT_OK, EXIT_NOT_ODFC, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _field(args) -> FieldSpec:
    if args.q is not None:
        if args.p is not None or args.e is not None:
            raise UsageError("give either --q or --p/--e, not both")
        return field_of_order(args.q)
    if args.p is None:
        raise UsageError("a field is required: --q Q or --p P [--e E]")
    return field_make(args.p, args.e or 1)


def _ticks(text: str | None):
    if text is None:
        return None
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"--type expects a comma-separated list of integers, got {text!r}")


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_construct(args) -> int:
    f = _field(args)
    code = flag.construct_odfc(args.n, args.k, _ticks(args.type), f)
    _write(args.output, flag.dumps(code))
    info = sys.stderr if args.output in (None, "-") else sys.stdout
    formula = analysis.odfc_size_formula(args.n, args.k, f.q)
    print(f"constructed {len(code)} flags of type {list(code.type.ticks)} over GF({f.q}); "
          f"size formula {formula}", file=info)
    if not analysis.bound_applies(args.n, args.k, code.type.ticks):
        print(f"note: type misses both {args.k} and {args.n - args.k}; "
              "no optimality verdict is available", file=info)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(args.input) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(str(exc))
    code = flag.loads(text)
    report = analysis.verify_odfc(code, parallel=args.parallel)
    doc = json.dumps(report.to_json(), indent=1) + "\n"
    if args.json:
        sys.stdout.write(doc)
    else:
        print(report.render())
    if args.report:
        _write(args.report, doc)
    return EXIT_OK if report.is_odfc else EXIT_NOT_ODFC


def cmd_bounds(args) -> int:
    f = _field(args)
    n, k, q = args.n, args.k, f.q
    a, r = flag.split_params(n, k)
    ticks = _ticks(args.type) or flag.allowed_ticks(n, k)
    cdc = analysis.cdc_upper_bound(n, k, q)
    ob = analysis.odfc_bounds(n, k, q, ticks)
    dash = "-"
    rows = [
        ("q, n, k", f"{q}, {n}, {k}"),
        ("n = (a+1)k + r", f"a={a}, r={r}"),
        ("type", ",".join(map(str, sorted(ticks)))),
        ("[r;1]_q", analysis.gaussian_binomial_1(r, q)),
        ("construction size", ob.size_formula),
        ("partial-spread bound (r != 0)", cdc.drake_freeman if cdc.drake_freeman is not None else dash),
        ("exact partial-spread size", cdc.exact_value if cdc.exact_value is not None else dash),
        ("CDC upper bound", f"{cdc.bound}{' (exact)' if cdc.exact else ''}"),
        ("ODFC upper bound", ob.upper_bound if ob.upper_bound is not None else dash),
        ("verdict", ob.verdict),
    ]
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        print(f"{name:<{width}}  {value}")
    return EXIT_OK


def cmd_mrd(args) -> int:
    f = _field(args)
    code = rankmetric.gabidulin_square(args.m, args.delta, f)
    words = rankmetric.enumerate_codewords(code)
    dmin = rankmetric.min_rank_distance(words)
    ok = rankmetric.verify_mrd(words, args.delta)
    if args.json:
        doc = {"code": code.to_json(), "codewords": [w.to_json() for w in words],
               "min_rank_distance": dmin, "verified": ok}
        sys.stdout.write(json.dumps(doc, indent=1) + "\n")
    else:
        print(f"[{args.m}x{args.m}, {args.delta}]_{f.q} Gabidulin code, "
              f"extension modulus {list(code.ext_modulus)}")
        for i, w in enumerate(words):
            print(f"{i:5d}  " + " | ".join(" ".join(map(str, row)) for row in w.tolist()))
        print(f"{len(words)} codewords, minimum rank distance {dmin}, "
              f"delta={args.delta} {'verified' if ok else 'NOT met'}")
    return EXIT_OK if ok else EXIT_NOT_ODFC


def cmd_selftest(args) -> int:
    failed = selftest.run(args.seed, log=print)
    if failed:
        print(f"selftest failed: {failed}", file=sys.stderr)
        return EXIT_NOT_ODFC
    print("selftest passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagforge",
        description="Construct and verify optimum distance flag codes built from MRD codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def field_opts(p):
        p.add_argument("--q", type=int, help="field order (any prime power)")
        p.add_argument("--p", type=int, help="field characteristic")
        p.add_argument("--e", type=int, help="extension degree (with --p)")

    p = sub.add_parser("construct", help="build a flag code and write it as JSON")
    field_opts(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--type", help="comma list of dimensions (default: 1..k, n-k..n-1)")
    p.add_argument("-o", "--output", help="output path (default: stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a flag code file exhaustively")
    p.add_argument("input")
    p.add_argument("--report", help="also write the JSON report here")
    p.add_argument("--json", action="store_true", help="print the JSON report instead of a table")
    p.add_argument("--parallel", type=int, default=0,
                   help="worker processes for the pair loop (default: all cores)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="tabulate size formula, upper bounds and verdict")
    field_opts(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--type")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("mrd", help="list the codewords of a square Gabidulin code")
    field_opts(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mrd)

    p = sub.add_parser("selftest", help="run the seeded invariant suites")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FlagforgeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
