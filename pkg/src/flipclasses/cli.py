"""
Command-line surface.

Subcommands:
  rtilde            R~ polynomials / coefficients, by any of the three methods
  flipclasses       enumerate the flipclasses of one interval and print
                    their invariants (or DOT graphs)
  classify          run the census/classification pipeline and write tables
  verify            run the verification suites
  probe-conjecture  search a census for equal-structure classes with
                    different increasing-path counts

Exit codes: 0 success, 1 verification/agreement failure, 2 usage error.
Table files live in ./tables or $FLIPCLASSES_TABLE_DIR unless overridden.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import census as census_run
from .classify import probe_conjecture, write_classification
from .flips import flipclasses
from .invariants import (
    iota_polynomial, poly1_str, support_graph, time_support_graph,
    tvector_str,
)
from .perm import Perm, bruhat_leq, perm_from_str, perm_to_str
from .reforder import from_reduced_word, lex_order, revlex_order
from .reforder import count_increasing_lex
from .rtilde import coeff_via_flipclasses, rtilde_dyer, rtilde_oracle
from .tables import TableMissingError
from .verify import run_suite

USAGE_ERROR = 2
VERIFY_ERROR = 1


def _parse_pair(args) -> tuple:
    n = args.n
    try:
        if n is None:
            # infer degree from whichever argument is explicit
            for s in (args.u, args.v):
                if s not in ("e", "w0"):
                    n = len(perm_from_str(s))
                    break
            else:
                raise ValueError("degree unknown: pass --n with e/w0 shorthands")
        u = perm_from_str(args.u, n)
        v = perm_from_str(args.v, n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)
    return u, v


def _ordering_from_args(args, n: int):
    if args.ordering == "lex":
        return lex_order(n)
    if args.ordering == "revlex":
        return revlex_order(n)
    try:
        return from_reduced_word(int(x) for x in args.ordering.split())
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def cmd_rtilde(args) -> int:
    u, v = _parse_pair(args)
    if not bruhat_leq(u, v):
        print("error: u is not below v in Bruhat order", file=sys.stderr)
        return USAGE_ERROR
    ordering = _ordering_from_args(args, len(u))
    results = {}
    if args.verify:
        methods = ["oracle", "dyer"]
        if args.h is not None and args.h <= 6:
            methods.append("flipclass")
    else:
        methods = [args.method]
    for method in methods:
        if method == "oracle":
            poly = rtilde_oracle(u, v)
            results["oracle"] = (str(poly), poly.coefficient(args.h)
                                 if args.h is not None else None, poly)
        elif method == "dyer":
            poly = rtilde_dyer(u, v, ordering)
            results["dyer"] = (str(poly), poly.coefficient(args.h)
                               if args.h is not None else None, poly)
        else:
            if args.h is None:
                print("error: --method flipclass needs --h", file=sys.stderr)
                return USAGE_ERROR
            if args.h > 6:
                print("error: the flipclass recipe stops at h = 6",
                      file=sys.stderr)
                return USAGE_ERROR
            try:
                coeff = coeff_via_flipclasses(u, v, args.h,
                                              table_directory=args.tables)
            except TableMissingError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return VERIFY_ERROR
            results["flipclass"] = (None, coeff, None)
    if args.verify:
        coeffs = set()
        polys = set()
        for method, (text, coeff, poly) in results.items():
            if args.h is not None and coeff is not None:
                coeffs.add(coeff)
            if poly is not None:
                polys.add(str(poly))
        agree = len(polys) <= 1 and len(coeffs) <= 1
        payload = {
            "u": perm_to_str(u), "v": perm_to_str(v),
            "methods": {m: {"polynomial": t, "coefficient": c}
                        for m, (t, c, _) in results.items()},
            "agree": agree,
        }
        _emit(args, payload, _verify_text(payload))
        return 0 if agree else VERIFY_ERROR
    text, coeff, _ = results[args.method]
    if args.h is not None:
        out = coeff if coeff is not None else 0
        _emit(args, {"u": perm_to_str(u), "v": perm_to_str(v), "h": args.h,
                     "method": args.method, "coefficient": out}, str(out))
    else:
        _emit(args, {"u": perm_to_str(u), "v": perm_to_str(v),
                     "method": args.method, "polynomial": text}, text)
    return 0


def _verify_text(payload) -> str:
    lines = [f"R~ for {payload['u']} -> {payload['v']}:"]
    for method, vals in payload["methods"].items():
        shown = vals["polynomial"] or f"[q^h] = {vals['coefficient']}"
        lines.append(f"  {method:10s} {shown}")
    lines.append("agree" if payload["agree"] else "MISMATCH")
    return "\n".join(lines)


def cmd_flipclasses(args) -> int:
    u, v = _parse_pair(args)
    if not bruhat_leq(u, v):
        print("error: u is not below v in Bruhat order", file=sys.stderr)
        return USAGE_ERROR
    fcs = flipclasses(u, v, args.h)
    records = []
    for idx, fc in enumerate(fcs):
        iota = iota_polynomial(fc)
        records.append({
            "index": idx,
            "size": len(fc),
            "t_vector": list(iota.t_vector()),
            "iota": iota.canonical_str(),
            "c": count_increasing_lex(fc),
        })
    if args.emit == "summary":
        lines = [f"{len(fcs)} flipclasses of length {args.h} from "
                 f"{perm_to_str(u)} to {perm_to_str(v)}"]
        for rec in records:
            lines.append(f"  #{rec['index']}: |F|={rec['size']} "
                         f"t={tvector_str(tuple(rec['t_vector']))} "
                         f"c={rec['c']} iota={rec['iota']}")
        _emit(args, {"count": len(fcs), "classes": records}, "\n".join(lines))
    elif args.emit == "tvec":
        text = "\n".join(tvector_str(tuple(r["t_vector"])) for r in records)
        _emit(args, {"t_vectors": [r["t_vector"] for r in records]}, text)
    elif args.emit == "iota":
        text = "\n".join(r["iota"] for r in records)
        _emit(args, {"iota": [r["iota"] for r in records]}, text)
    else:  # dot
        chunks = []
        for idx, fc in enumerate(fcs):
            ts = time_support_graph(fc)
            chunks.append(ts.to_dot(f"TS_{idx}"))
            chunks.append(support_graph(fc, ts).to_dot(f"S_{idx}"))
        _emit(args, {"dot": chunks}, "\n".join(chunks))
    return 0


def cmd_classify(args) -> int:
    n = args.n if args.n is not None else args.h + 1
    if (n >= 7 or args.h >= 6) and not args.heavy:
        print("error: the S_7 census is hours-scale; pass --heavy to "
              "confirm", file=sys.stderr)
        return USAGE_ERROR
    if n != args.h + 1:
        # census exploration of an arbitrary (n, h); no tables written
        summary, _ = census_run(n, args.h, workers=args.workers)
        _emit(args, summary.__dict__,
              f"census S_{n} h={args.h}: {summary.flipclass_count} "
              f"flipclasses over {summary.pair_count} intervals, "
              f"{summary.distinct_iota} iota keys, "
              f"{summary.distinct_tvectors} t-vectors, "
              f"alternate count {summary.alternate_count}, "
              f"{summary.elapsed_seconds}s")
        return 0
    result = write_classification(args.h, workers=args.workers,
                                  directory=args.out)
    lines = []
    for summary in result["summaries"]:
        mark = ""
        if summary.published is not None:
            mark = (" (matches published)" if summary.matches_published
                    else f" (published {summary.published}: DISCREPANCY,"
                         f" alternate {summary.alternate_count})")
        lines.append(f"census S_{summary.n} h={summary.h}: "
                     f"{summary.flipclass_count} flipclasses{mark}, "
                     f"{summary.distinct_iota} iota keys, "
                     f"{summary.elapsed_seconds}s")
    for report in result["goodness"]:
        lines.append(f"goodness h={report.h} ({report.invariant}): "
                     f"{report.good} over {report.table_size} keys")
    lines.append(f"wrote {', '.join(result['paths'])} and {result['json']}")
    _emit(args, {"tables": result["paths"], "json_summary": result["json"]},
          "\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    results = run_suite(args.suite, workers=args.workers, seed=args.seed,
                        heavy=args.heavy,
                        progress=lambda r: print(r.line(), flush=True))
    ok = all(r.ok for r in results)
    if args.json:
        print(json.dumps([r.__dict__ for r in results], indent=2))
    print(f"{'all checks passed' if ok else 'FAILURES present'} "
          f"({sum(r.ok for r in results)}/{len(results)})")
    return 0 if ok else VERIFY_ERROR


def cmd_probe(args) -> int:
    if args.h >= 6 and not args.heavy:
        print("error: probing h >= 6 runs the S_7 census; pass --heavy",
              file=sys.stderr)
        return USAGE_ERROR
    report = probe_conjecture(args.h, n=args.n, budget=args.budget)
    text = [f"probe h={report['h']} over S_{report['n']}: "
            f"{report['classes']} classes, "
            f"{report['iota_keys_with_conflicting_c']} conflicted iota keys, "
            f"{report['pairs_tested']} pairs tested"]
    if report["counterexamples"]:
        text.append(f"COUNTEREXAMPLES FOUND: {len(report['counterexamples'])}")
    else:
        text.append("no counterexamples"
                    + (" (budget exhausted)" if report["budget_exhausted"]
                       else ""))
    text.append(f"orientation: {report['orientation']}")
    _emit(args, report, "\n".join(text))
    return VERIFY_ERROR if report["counterexamples"] else 0


def _emit(args, payload: dict, text: str) -> None:
    print(text)
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flipclasses",
        description="Bruhat-graph flipclass machinery for the symmetric group")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rtilde", help="R~ polynomial or coefficient")
    p.add_argument("u", help="permutation ('2143', '[10,1,...]', 'e', 'w0')")
    p.add_argument("v", help="permutation")
    p.add_argument("--n", type=int, help="degree (needed with e/w0)")
    p.add_argument("--method", choices=("oracle", "dyer", "flipclass"),
                   default="oracle")
    p.add_argument("--h", type=int, default=None,
                   help="report only the coefficient of q^h")
    p.add_argument("--ordering", default="lex",
                   help="'lex', 'revlex', or a reduced word like '1 2 1'")
    p.add_argument("--verify", action="store_true",
                   help="run all applicable methods and compare")
    p.add_argument("--tables", default=None, help="table directory")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rtilde)

    p = sub.add_parser("flipclasses", help="flipclasses of one interval")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("h", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--emit", choices=("summary", "tvec", "iota", "dot"),
                   default="summary")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_flipclasses)

    p = sub.add_parser("classify", help="census + classification tables")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=None, help="table directory")
    p.add_argument("--heavy", action="store_true",
                   help="allow the hours-scale S_7 census")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--suite", choices=("fast", "full"), default="fast")
    p.add_argument("--heavy", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=20240901)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("probe-conjecture",
                       help="search for unlabelled-isomorphic classes with "
                            "different counts")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--heavy", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_probe)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
