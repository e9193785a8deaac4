"""Command-line front end: ``gammasym list | run | run-all | check``.

Exit codes: 0 when every check passed, 1 on a failed check, 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .lie import AlgebraFormatError, StructureConstantError, load_algebra
from .scenarios import DEFAULT_SEED, SCENARIOS, Report, check_algebra, list_scenarios, run_scenario

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_params(items: Sequence[str]) -> dict[str, str]:
    out = {}
    for it in items:
        key, sep, value = it.partition("=")
        if not sep or not key:
            raise UsageError(f"--param expects key=value, got {it!r}")
        out[key] = value
    return out


def _timed(name: str, params: dict[str, str], seed: int, timing: bool) -> Report:
    t0 = time.perf_counter()
    rep = run_scenario(name, params, seed)
    rep.elapsed_ms = int((time.perf_counter() - t0) * 1000) if timing else 0
    return rep


def _emit(reports: list[Report], as_json: bool, out) -> None:
    if as_json:
        doc = reports[0].as_json() if len(reports) == 1 else [r.as_json() for r in reports]
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    for rep in reports:
        out.write(f"{rep.scenario}: {rep.status.upper()} ({len(rep.checks)} checks, {rep.elapsed_ms} ms)\n")
        for c in rep.checks:
            mark = "ok  " if c.ok else "FAIL"
            line = f"  [{mark}] {c.label}: {c.actual}"
            if not c.ok:
                line += f" (expected {c.expected})"
            out.write(line + "\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gammasym", description="Exact checks of symmetric structures on nilpotent Lie algebras.")
    sub = p.add_subparsers(dest="command")
    sub.add_parser("list", help="list scenario names")

    def common(sp):
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
        sp.add_argument("--json", action="store_true", help="emit the JSON report")
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 (byte-stable output)")
        sp.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")

    run = sub.add_parser("run", help="run one scenario")
    run.add_argument("scenario")
    common(run)
    run_all = sub.add_parser("run-all", help="run every scenario")
    common(run_all)
    chk = sub.add_parser("check", help="validate an algebra JSON file")
    chk.add_argument("file")
    chk.add_argument("--json", action="store_true")
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command in (None, "list"):
            for name in list_scenarios():
                sc = SCENARIOS[name]
                out.write(f"{name}\t{sc.description} [{sc.anchor}]\n")
            return EXIT_OK
        if args.command == "check":
            return _check(args, out)
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        params = _parse_params(args.param)
        names = [args.scenario] if args.command == "run" else list_scenarios()
        for n in names:
            if n not in SCENARIOS:
                raise UsageError(f"unknown scenario {n!r}; see 'gammasym list'")
        timing = not args.no_timing
        if args.jobs > 1 and len(names) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as ex:
                reports = list(ex.map(_timed, names, [params] * len(names), [args.seed] * len(names), [timing] * len(names)))
        else:
            reports = [_timed(n, params, args.seed, timing) for n in names]
    except UsageError as e:
        sys.stderr.write(f"gammasym: error: {e}\n")
        return EXIT_USAGE
    except ValueError as e:
        # malformed --param values surface here
        sys.stderr.write(f"gammasym: error: {e}\n")
        return EXIT_USAGE
    _emit(reports, args.json, out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _check(args, out) -> int:
    try:
        L = load_algebra(args.file)
    except StructureConstantError as e:
        rep = Report("check")
        rep.add("structure constants", "antisymmetric, Jacobi", str(e), False)
        _emit([rep], args.json, out)
        return EXIT_FAIL
    except (AlgebraFormatError, OSError, json.JSONDecodeError) as e:
        sys.stderr.write(f"gammasym: error: cannot read {args.file}: {e}\n")
        return EXIT_USAGE
    rep = check_algebra(L)
    _emit([rep], args.json, out)
    return EXIT_OK if rep.passed else EXIT_FAIL
