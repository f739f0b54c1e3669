"""Command-line front end: ``ehull <command> ...``.

Exit codes: 0 success, 1 negative verdict (inequivalent codes, failed
verification), 2 usage or input errors.  ``--json`` turns the report into a
single JSON document on stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from typing import Callable, Optional, Sequence

from . import buildup, classify, oracle
from .code import (
    ECode,
    dual,
    from_generators,
    hull,
    is_free,
    left_dual,
    lhull,
    min_distance,
    residue,
    rhull,
    right_dual,
    summarize,
    torsion,
)
from .equivalence import e_equivalent
from .gf2 import BitVector, format_gf2
from .ring import emit_ematrix, parse_ematrix

log = logging.getLogger("ehull")

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    """Bad input file or argument; reported on stderr with exit code 2."""


def _read_code(path: str) -> ECode:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return from_generators(parse_ematrix(text))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _dump(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _code_dict(c: ECode) -> dict:
    g = c.generator_matrix()
    return {
        "n": c.n,
        "size": c.size,
        "free": is_free(c),
        "generator": g.to_strings(sep=""),
    }


def _print_code(title: str, c: ECode) -> None:
    tag = "free" if is_free(c) else "not free"
    print(f"{title}: {c.size} codewords, {tag}")
    print(emit_ematrix(c.generator_matrix()), end="")


# --- commands ---------------------------------------------------------------


def cmd_hull(args) -> int:
    c = _read_code(args.code)
    hulls = {"LHull": lhull(c), "RHull": rhull(c), "Hull": hull(c)}
    if args.json:
        _dump({name: _code_dict(h) for name, h in hulls.items()})
    else:
        for name, h in hulls.items():
            _print_code(name, h)
    return EXIT_OK


_DUALS: dict[str, Callable[[ECode], ECode]] = {"left": left_dual, "right": right_dual, "two-sided": dual}


def cmd_dual(args) -> int:
    c = _read_code(args.code)
    d = _DUALS[args.side](c)
    if args.json:
        _dump({"side": args.side, **_code_dict(d)})
    else:
        _print_code(f"{args.side} dual", d)
    return EXIT_OK


def _cmd_plane(args, fn) -> int:
    m = fn(_read_code(args.code))
    if args.json:
        _dump({"nrows": m.nrows, "ncols": m.ncols, "rows": m.to_strings()})
    else:
        print(format_gf2(m), end="")
    return EXIT_OK


def cmd_residue(args) -> int:
    return _cmd_plane(args, residue)


def cmd_torsion(args) -> int:
    return _cmd_plane(args, torsion)


def cmd_distance(args) -> int:
    c = _read_code(args.code)
    if not c.dim:
        raise InputError("the zero code has no minimum distance")
    d = min_distance(c)
    if args.json:
        _dump({"d": d})
    else:
        print(d)
    return EXIT_OK


def cmd_summary(args) -> int:
    s = summarize(_read_code(args.code))
    if args.json:
        print(s.to_json())
    else:
        hr = "-" if s.hull_rank is None else s.hull_rank
        print(f"{s.label()} hull-rank {hr} {'free' if s.free else 'not free'}")
    return EXIT_OK


def cmd_construct(args) -> int:
    path = args.code or args.code_file
    if path is None:
        raise InputError("construct needs a code file (--code <file>)")
    c = _read_code(path)
    try:
        u = BitVector.from_str(args.u)
    except ValueError as exc:
        raise InputError(f"--u: {exc}") from None
    out = buildup.construct(args.method, c, u, literal_third=args.third_construction_literal)
    summary = {
        "method": args.method,
        "n": out.n,
        "k": out.k,
        "input_hull_rank": out.input_hull_rank,
        "hull_rank": out.hull_rank,
        "predicted_hull_rank": sorted(out.predicted_hull_rank),
        "v": list(out.v),
        "parity_check_valid": buildup.validate_parity_check(out),
        "literal_third": args.third_construction_literal,
    }
    if args.json:
        summary["generator"] = out.generator.to_strings(sep="")
        summary["parity_check"] = out.parity_check.to_strings(sep="")
        _dump(summary)
    else:
        print("# G'")
        print(emit_ematrix(out.generator), end="")
        print("# H'")
        print(emit_ematrix(out.parity_check), end="")
        print(json.dumps(summary, sort_keys=True))
    return EXIT_OK


def cmd_equiv(args) -> int:
    a, b = _read_code(args.code_a), _read_code(args.code_b)
    perm = e_equivalent(a, b)
    if args.json:
        _dump({"equivalent": perm is not None,
               "witness": None if perm is None else perm.cycle_string(),
               "mapping": None if perm is None else list(perm)})
    elif perm is None:
        print("inequivalent")
    else:
        print(f"equivalent {perm.cycle_string()}")
    return EXIT_OK if perm is not None else EXIT_NEGATIVE


def cmd_classify(args) -> int:
    rec = classify.classify(args.n, args.k, args.hull_rank, workers=args.workers)
    if args.json:
        _dump(rec.to_dict())
    elif args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["n", "k", "hull_rank", "d", "class", "generator"])
        for i, m in enumerate(rec.representatives, start=1):
            w.writerow([rec.n, rec.k, rec.hull_rank, rec.optimal_d, i, ";".join(m.to_strings(sep=""))])
    else:
        if rec.optimal_d is None:
            print(f"no free [{args.n},{args.k}] code has hull-rank {args.hull_rank}")
        else:
            print(f"[{rec.n},{rec.k},{rec.optimal_d}] hull-rank {rec.hull_rank}: "
                  f"{rec.optimal_count} optimal codes in {len(rec.representatives)} classes "
                  f"({rec.examined_count} codes of this hull-rank examined)")
            for i, m in enumerate(rec.representatives, start=1):
                print(f"# class {i}")
                print(emit_ematrix(m), end="")
    if args.figure:
        from .plots import plot_distance_profile

        log.info("figure written to %s", plot_distance_profile(rec, args.figure))
    return EXIT_OK


def cmd_census(args) -> int:
    table = classify.census(args.n, args.k, workers=args.workers)
    if args.json:
        _dump({"n": args.n, "k": args.k,
               "cells": [{"hull_rank": l, "count": c, "best_d": d} for l, (c, d) in table.items()]})
    else:
        w = csv.writer(sys.stdout, delimiter="," if args.csv else "\t", lineterminator="\n")
        w.writerow(["hull_rank", "count", "best_d"])
        for l, (c, d) in table.items():
            w.writerow([l, c, d])
    if args.figure:
        from .plots import plot_census

        log.info("figure written to %s", plot_census(args.n, args.k, table, args.figure))
    return EXIT_OK


def cmd_verify_tables(args) -> int:
    try:
        entries = classify.load_fixture(args.fixture)
    except OSError as exc:
        raise InputError(f"{args.fixture}: {exc.strerror}") from None
    except ValueError as exc:
        raise InputError(f"{args.fixture or 'fixture'}: {exc}") from None
    report = classify.verify_tables(
        entries, optimality=not args.no_optimality, class_counts=args.class_counts, workers=args.workers
    )
    if args.json:
        _dump({
            "entries": len(entries),
            "fails": len(report.fails),
            "warns": len(report.warns),
            "findings": [
                {"level": f.level, "table": f.table, "line": f.line, "message": f.message}
                for f in report.findings if args.verbose or f.level != "PASS"
            ],
        })
    else:
        for f in report.findings:
            if args.verbose or f.level != "PASS":
                print(f)
        print(f"{len(entries)} entries: {len(report.fails)} FAIL, {len(report.warns)} WARN")
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_verify(args) -> int:
    if not args.oracle:
        raise InputError("verify needs --oracle")
    try:
        bad = oracle.sweep(args.count, args.max_n, args.seed)
    except oracle.OracleRangeError as exc:
        raise InputError(str(exc)) from None
    if args.json:
        _dump({"codes": args.count, "max_n": args.max_n, "seed": args.seed,
               "disagreements": [{"index": i, "n": c.n, "what": what} for i, c, what in bad]})
    else:
        for i, c, what in bad:
            print(f"code {i} (n={c.n}): {', '.join(what)}")
        print(f"{args.count} random codes, n <= {args.max_n}, seed {args.seed}: {len(bad)} disagreements")
    return EXIT_OK if not bad else EXIT_NEGATIVE


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ehull", description="Linear codes over the ring E of order 4.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, *, json_=True):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS,
                        help="log progress to stderr")
        if json_:
            sp.add_argument("--json", action="store_true", help="emit one JSON document")
        return sp

    for name, fn, h in (
        ("hull", cmd_hull, "left, right and two-sided hulls"),
        ("residue", cmd_residue, "residue code (GF2 format)"),
        ("torsion", cmd_torsion, "torsion code (GF2 format)"),
        ("distance", cmd_distance, "minimum distance"),
        ("summary", cmd_summary, "n, k, d, hull-rank, freeness"),
    ):
        add(name, fn, h).add_argument("code", help="E-matrix file")

    sp = add("dual", cmd_dual, "a dual code")
    sp.add_argument("code")
    sp.add_argument("--side", choices=sorted(_DUALS), default="two-sided")

    sp = add("construct", cmd_construct, "build-up construction I-IV")
    sp.add_argument("--method", choices=buildup.METHODS, required=True)
    sp.add_argument("--code", help="E-matrix file of a free code")
    sp.add_argument("code_file", nargs="?", help="same as --code")
    sp.add_argument("--u", required=True, help="binary vector, e.g. 100101")
    sp.add_argument("--third-construction-literal", action="store_true",
                    help="Construction III with v_1 repeated in every row")

    sp = add("equiv", cmd_equiv, "permutation equivalence of two free codes")
    sp.add_argument("code_a")
    sp.add_argument("code_b")

    sp = add("classify", cmd_classify, "optimal free codes of given hull-rank")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--hull-rank", type=int, required=True)
    sp.add_argument("--csv", action="store_true", help="one CSV row per class")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--figure", help="write a distance histogram to this image file")

    sp = add("census", cmd_census, "hull-rank histogram of all free [n,k] codes")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--csv", action="store_true", help="comma-delimited instead of tab")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--figure", help="write a bar chart to this image file")

    sp = add("verify-tables", cmd_verify_tables, "recheck the shipped optimal-code tables")
    sp.add_argument("--fixture", help="fixture file (default: the bundled tables)")
    sp.add_argument("--class-counts", action="store_true", help="also compare the number of listed classes (WARN only)")
    sp.add_argument("--no-optimality", action="store_true", help="skip the exhaustive optimum check")
    sp.add_argument("--workers", type=int, default=1)

    sp = add("verify", cmd_verify, "cross-check closed forms against brute force")
    sp.add_argument("--oracle", action="store_true", required=True)
    sp.add_argument("--count", type=int, default=200)
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--seed", type=int, default=0)
    return p


def _mutually_exclusive(args) -> Optional[str]:
    if getattr(args, "json", False) and getattr(args, "csv", False):
        return "--json and --csv are mutually exclusive"
    if getattr(args, "workers", 1) < 1:
        return "--workers must be at least 1"
    if args.command == "verify" and args.count < 1:
        return "--count must be positive"
    return None


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(message)s"))
    pkg_log = logging.getLogger("ehull")
    pkg_log.handlers[:] = [handler]
    pkg_log.setLevel(logging.INFO if args.verbose else logging.WARNING)
    problem = _mutually_exclusive(args)
    if problem:
        print(f"ehull {args.command}: {problem}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except InputError as exc:
        print(f"ehull {args.command}: {exc}", file=sys.stderr)
    except (classify.RangeError, buildup.PreconditionError, ValueError) as exc:
        print(f"ehull {args.command}: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
