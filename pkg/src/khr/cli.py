"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error (including a
refused oversized run), 3 unsupported torus-link input.

Results of `compute` can be cached as JSON files under a directory given by
--cache-dir or the KHR_CACHE_DIR environment variable; the key embeds the
package version, so a version bump invalidates every entry.  A cache file
that fails to parse or to round-trip is discarded with a warning and
recomputed.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from pathlib import Path
from typing import Optional

from . import __version__
from .dyck import (
    KnotParams,
    LinksUnsupported,
    enumerate_paths,
    rational_catalan,
    stats_json,
)
from .formula import euler_characteristic, hhh_direct, superpolynomial
from .laurent import Invariant, invariant_from_json, invariant_to_json
from .verify import report_json, report_lines, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_LINKS = 3

CACHE_ENV = "KHR_CACHE_DIR"
CACHE_VERSION = __version__
DEFAULT_MAX_LEAVES = 10**7

FORMS = ("P", "HHH", "euler")
FORMATS = ("text", "json", "latex")


def _positive_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer") from exc
    if number < 1:
        raise argparse.ArgumentTypeError(f"{value!r} must be positive")
    return number


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="khr",
        description="Exact (a, q, t) superpolynomial calculator for torus knots.",
    )
    parser.add_argument("--version", action="version", version=f"khr {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="evaluate one invariant of the (m, n) knot")
    compute.add_argument("m", type=_positive_int)
    compute.add_argument("n", type=_positive_int)
    compute.add_argument("--form", choices=FORMS, default="P")
    compute.add_argument("--format", choices=FORMATS, default="text")
    compute.add_argument("--cache-dir", default=None)
    compute.add_argument("--max-leaves", type=int, default=DEFAULT_MAX_LEAVES)

    paths = sub.add_parser("paths", help="list the (m, n) Dyck paths")
    paths.add_argument("m", type=_positive_int)
    paths.add_argument("n", type=_positive_int)
    paths.add_argument("--with-stats", action="store_true")
    paths.add_argument("--format", choices=("text", "json"), default="text")
    paths.add_argument("--max-leaves", type=int, default=DEFAULT_MAX_LEAVES)

    verify = sub.add_parser("verify", help="run the consistency suite")
    verify.add_argument("m", type=_positive_int, nargs="?")
    verify.add_argument("n", type=_positive_int, nargs="?")
    verify.add_argument("--range", dest="range_spec", default=None, metavar="msum<=K")
    verify.add_argument(
        "--suite",
        action="append",
        choices=("identities", "cross", "catalan", "symmetry", "ratios"),
        help="run only the named suites (repeatable; default all)",
    )
    verify.add_argument(
        "--external-as-warnings",
        action="store_true",
        help="do not fail on the externally known symmetry regressions",
    )
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--max-leaves", type=int, default=DEFAULT_MAX_LEAVES)

    catalan = sub.add_parser("catalan", help="print the Dyck-path count")
    catalan.add_argument("m", type=_positive_int)
    catalan.add_argument("n", type=_positive_int)
    catalan.add_argument("--check", action="store_true", help="compare with the a=0, q=t=1 specialization")
    catalan.add_argument("--format", choices=("text", "json"), default="text")

    cache = sub.add_parser("cache", help="inspect or clear the result cache")
    cache.add_argument("action", choices=("info", "clear"))
    cache.add_argument("--cache-dir", default=None)

    return parser


# -- cache ------------------------------------------------------------------


def _cache_dir(flag_value: Optional[str]) -> Optional[Path]:
    raw = flag_value or os.environ.get(CACHE_ENV)
    return Path(raw) if raw else None


def _cache_path(directory: Path, m: int, n: int, form: str) -> Path:
    return directory / f"compute_{m}_{n}_{form}_v{CACHE_VERSION}.json"


def _cache_payload(m: int, n: int, form: str, value: Invariant) -> dict:
    return {
        "version": CACHE_VERSION,
        "m": m,
        "n": n,
        "form": form,
        "invariant": invariant_to_json(value),
    }


def cache_load(directory: Path, m: int, n: int, form: str) -> Optional[Invariant]:
    path = _cache_path(directory, m, n, form)
    if not path.exists():
        return None
    try:
        payload = json.loads(path.read_text())
        value = invariant_from_json(payload["invariant"])
        if payload != _cache_payload(m, n, form, value):
            raise ValueError("stored payload does not round-trip")
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print(f"warning: discarding corrupt cache file {path}: {exc}", file=sys.stderr)
        return None
    return value


def cache_store(directory: Path, m: int, n: int, form: str, value: Invariant) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    path = _cache_path(directory, m, n, form)
    payload = json.dumps(_cache_payload(m, n, form, value), sort_keys=True, indent=1)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(payload)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# -- subcommands --------------------------------------------------------------


def _guard_size(params: KnotParams, max_leaves: int) -> Optional[str]:
    count = rational_catalan(params)
    if count > max_leaves:
        return (
            f"({params.m},{params.n}) has {count} Dyck paths, above the "
            f"--max-leaves bound {max_leaves}; refusing to run"
        )
    return None


def _compute_form(params: KnotParams, form: str) -> Invariant:
    if form == "HHH":
        return hhh_direct(params)
    if form == "euler":
        return euler_characteristic(superpolynomial(params))
    return superpolynomial(params)


def _cmd_compute(args: argparse.Namespace) -> int:
    params = KnotParams(args.m, args.n)
    message = _guard_size(params, args.max_leaves)
    if message:
        print(message, file=sys.stderr)
        return EXIT_USAGE
    directory = _cache_dir(args.cache_dir)
    value = None
    if directory is not None:
        value = cache_load(directory, args.m, args.n, args.form)
    if value is None:
        value = _compute_form(params, args.form)
        if directory is not None:
            cache_store(directory, args.m, args.n, args.form, value)
    if args.format == "json":
        print(json.dumps(invariant_to_json(value), sort_keys=True))
    elif args.format == "latex":
        print(value.latex())
    else:
        print(value.text())
    return EXIT_OK


def _cmd_paths(args: argparse.Namespace) -> int:
    params = KnotParams(args.m, args.n)
    message = _guard_size(params, args.max_leaves)
    if message:
        print(message, file=sys.stderr)
        return EXIT_USAGE
    paths = enumerate_paths(params)
    if args.format == "json":
        if args.with_stats:
            print(json.dumps([stats_json(p) for p in paths], sort_keys=True))
        else:
            print(json.dumps([str(p) for p in paths]))
    else:
        for p in paths:
            if args.with_stats:
                info = stats_json(p)
                print(
                    f"{p} area={info['area']} hplus={info['hplus']} "
                    f"opairs={info['opairs']} vstar={info['vstar']} kvals={info['kvals']}"
                )
            else:
                print(p)
    return EXIT_OK


def _parse_range(expr: str) -> int:
    prefix = "msum<="
    if not expr.startswith(prefix):
        raise ValueError(f"range must look like 'msum<=K', got {expr!r}")
    return int(expr[len(prefix) :])


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.range_spec is not None:
        if args.m is not None or args.n is not None:
            print("give either m n or --range, not both", file=sys.stderr)
            return EXIT_USAGE
        bound = _parse_range(args.range_spec)
        targets = []
        for s in range(2, bound + 1):
            for m in range(1, s):
                if math.gcd(m, s - m) == 1 and m >= s - m:
                    targets.append(KnotParams(m, s - m))
    elif args.m is not None and args.n is not None:
        targets = [KnotParams(args.m, args.n)]
    else:
        print("verify needs m n or --range 'msum<=K'", file=sys.stderr)
        return EXIT_USAGE

    suites = set(args.suite) if args.suite else None
    strict = not args.external_as_warnings
    reports = []
    for params in targets:
        message = _guard_size(params, args.max_leaves)
        if message:
            print(message, file=sys.stderr)
            return EXIT_USAGE
        reports.append(run_suite(params, external_strict=strict, suites=suites))
    if args.format == "json":
        print(json.dumps([report_json(r) for r in reports], sort_keys=True))
    else:
        for report in reports:
            for line in report_lines(report):
                print(line)
    return EXIT_OK if all(r.overall_pass for r in reports) else EXIT_VERIFY_FAILED


def _cmd_catalan(args: argparse.Namespace) -> int:
    params = KnotParams(args.m, args.n)
    count = rational_catalan(params)
    result: dict = {"m": args.m, "n": args.n, "paths": count}
    ok = True
    if args.check:
        from .verify import catalan_check

        check = catalan_check(params)
        ok = check.passed
        result["specialization"] = check.got
        result["check_pass"] = ok
    if args.format == "json":
        print(json.dumps(result, sort_keys=True))
    else:
        line = f"({args.m},{args.n}): {count} paths"
        if args.check:
            line += f"; specialization gives {result['specialization']}"
            line += " (match)" if ok else " (MISMATCH)"
        print(line)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _cmd_cache(args: argparse.Namespace) -> int:
    directory = _cache_dir(args.cache_dir)
    if directory is None:
        print(f"no cache directory; set --cache-dir or {CACHE_ENV}", file=sys.stderr)
        return EXIT_USAGE
    entries = sorted(directory.glob("compute_*.json")) if directory.exists() else []
    if args.action == "info":
        print(f"cache directory: {directory}")
        print(f"entries: {len(entries)}")
        for entry in entries:
            print(f"  {entry.name}")
    else:
        for entry in entries:
            entry.unlink()
        print(f"removed {len(entries)} entries from {directory}")
    return EXIT_OK


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors already
        return int(exc.code or 0)
    try:
        if args.command == "compute":
            return _cmd_compute(args)
        if args.command == "paths":
            return _cmd_paths(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "catalan":
            return _cmd_catalan(args)
        if args.command == "cache":
            return _cmd_cache(args)
    except LinksUnsupported as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LINKS
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    raise AssertionError("unhandled command")


def main() -> None:
    sys.exit(run())
