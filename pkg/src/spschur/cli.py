"""Command line runner: ``spschur list`` and ``spschur run SUITE [flags]``.

Reports are JSON (or CSV for ``--out x.csv``), written atomically.  Exit
status: 0 no failed check, 1 some check failed, 2 unknown suite or bad
parameters, 3 a size guard stopped the run.
"""

from __future__ import annotations

import argparse
import csv
import difflib
import io
import json
import os
import sys
import tempfile
import time
from pathlib import Path

from .subgroups import CapExceeded
from .suites import REGISTRY, GuardError, ParamError, run_suite

EXIT_PASS, EXIT_FAIL, EXIT_PARAMS, EXIT_GUARD = 0, 1, 2, 3

DEFAULT_GOLDENS = Path(__file__).resolve().parents[2] / "goldens"


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError("range must look like lo:hi") from None


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def to_csv(report: dict) -> str:
    rows = []
    for c in report["checks"]:
        row = {"name": c["name"], "status": c["status"]}
        for k, v in c["values"].items():
            row[k] = v if isinstance(v, (int, str, bool)) or v is None else json.dumps(v)
        rows.append(row)
    cols = ["name", "status"]
    for r in rows:
        cols += [k for k in r if k not in cols]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "w") as f:
        f.write(text)
    os.replace(tmp, path)


def run(suite_id: str, params: dict, out: str | Path | None = None, timing: bool = False,
        stream=None) -> int:
    """Run one suite, write its report, return the exit status."""
    stream = stream or sys.stdout
    t0 = time.perf_counter()
    try:
        report = run_suite(suite_id, params)
    except (ParamError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARAMS
    except (GuardError, CapExceeded) as e:
        print(f"guard: {e}", file=sys.stderr)
        return EXIT_GUARD
    if timing:
        report["seconds"] = round(time.perf_counter() - t0, 3)
    if out is None:
        stream.write(dumps(report))
    else:
        out = Path(out)
        write_atomic(out, to_csv(report) if out.suffix == ".csv" else dumps(report))
    return EXIT_FAIL if report["status"] == "fail" else EXIT_PASS


def golden_path(suite_id: str, goldens: Path = DEFAULT_GOLDENS) -> Path:
    return Path(goldens) / f"{suite_id}.json"


def golden_diff(suite_id: str, goldens: Path = DEFAULT_GOLDENS) -> list[str]:
    """Unified diff between the stored golden and a fresh default run."""
    path = golden_path(suite_id, goldens)
    old = path.read_text() if path.exists() else ""
    new = dumps(run_suite(suite_id, {}))
    return list(difflib.unified_diff(old.splitlines(True), new.splitlines(True),
                                     f"a/{path.name}", f"b/{path.name}"))


def update_goldens(ids: list[str], goldens: Path = DEFAULT_GOLDENS, stream=None) -> int:
    stream = stream or sys.stdout
    for sid in ids:
        diff = golden_diff(sid, goldens)
        if diff:
            stream.writelines(diff)
            write_atomic(golden_path(sid, goldens), dumps(run_suite(sid, {})))
        else:
            stream.write(f"{sid}: unchanged\n")
    return EXIT_PASS


def print_catalog(stream=None) -> None:
    stream = stream or sys.stdout
    width = max(len(s) for s in REGISTRY)
    for sid, s in REGISTRY.items():
        params = " ".join(f"--{k}={_show(v)}" for k, v in s.defaults.items())
        stream.write(f"{sid:<{width}}  {s.summary}" + (f"  [{params}]" if params else "") + "\n")


def _show(v) -> str:
    return f"{v[0]}:{v[1]}" if isinstance(v, tuple) else str(v)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="spschur", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)
    sub.add_parser("list", help="print the suite catalog")
    r = sub.add_parser("run", help="run one suite")
    r.add_argument("suite")
    r.add_argument("--n", type=int)
    r.add_argument("--family")
    r.add_argument("--range", type=parse_range)
    r.add_argument("--seed", type=int)
    r.add_argument("--r", type=int)
    r.add_argument("--p", type=int)
    r.add_argument("--m", type=int)
    r.add_argument("--count", type=int)
    r.add_argument("--out", help="report path; .csv writes a table, anything else JSON")
    r.add_argument("--timing", action="store_true", help="add wall time to the report")
    r.add_argument("--update-goldens", action="store_true",
                   help="regenerate the stored default-parameter report and print the diff")
    r.add_argument("--goldens", type=Path, default=DEFAULT_GOLDENS)
    g = sub.add_parser("goldens", help="compare (or with --update, regenerate) all goldens")
    g.add_argument("--update", action="store_true")
    g.add_argument("--goldens", type=Path, default=DEFAULT_GOLDENS)
    return ap


PARAM_FLAGS = ("n", "family", "range", "seed", "r", "p", "m", "count")


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # a bare suite id is shorthand for "run SUITE"
    if argv and argv[0] in REGISTRY:
        argv.insert(0, "run")
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_PARAMS if e.code else EXIT_PASS
    if args.cmd == "list":
        print_catalog()
        return EXIT_PASS
    if args.cmd == "goldens":
        ids = list(REGISTRY)
        if args.update:
            return update_goldens(ids, args.goldens)
        stale = [sid for sid in ids if golden_diff(sid, args.goldens)]
        for sid in stale:
            print(f"{sid}: differs from golden")
        return EXIT_FAIL if stale else EXIT_PASS
    if args.suite not in REGISTRY:
        print(f"error: unknown suite {args.suite!r}; see 'spschur list'", file=sys.stderr)
        return EXIT_PARAMS
    if args.update_goldens:
        return update_goldens([args.suite], args.goldens)
    params = {k: getattr(args, k) for k in PARAM_FLAGS if getattr(args, k) is not None}
    return run(args.suite, params, args.out, args.timing)


if __name__ == "__main__":
    sys.exit(main())
