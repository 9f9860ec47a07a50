"""Command line front end: verify, list, extract."""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from datetime import datetime, timezone

from . import __version__
from .catalog import (ConditioningError, SweepConfig, UnsupportedModeError, extract_coefficients,
                      get, sample_pairs, sweep, theorems)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def write_atomic(path: str, text: str) -> None:
    """Write text to path through a temporary file and a rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, out: str | None) -> None:
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _check_filter(pattern: str) -> None:
    for pat in [p.strip() for p in pattern.split(",") if p.strip()]:
        if not theorems(pat):
            raise UsageError(f"no theorem matches {pat!r}")


def _with_timestamp(json_text: str) -> str:
    """Append the wall-clock timestamp as the last top-level key, on its own line."""
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    body = json_text.rstrip()
    assert body.endswith("}")
    return body[:-1].rstrip() + f',\n  "timestamp": "{stamp}"\n}}\n'


def strip_timestamp(text: str) -> str:
    """Inverse of the timestamp insertion, for determinism checks."""
    lines = text.splitlines(keepends=True)
    kept = [ln for ln in lines if not ln.lstrip().startswith('"timestamp"')]
    out = "".join(kept)
    return out.replace("},\n}", "}\n}")


def cmd_verify(args) -> int:
    _check_filter(args.filter)
    config = SweepConfig(l_max=args.lmax, pairs=args.pairs, seed=args.seed, tol=args.tol,
                         filter=args.filter, jobs=args.jobs)
    report = sweep(config)
    if args.format == "json":
        text = _with_timestamp(report.to_json())
    elif args.format == "csv":
        text = report.to_csv()
    else:
        text = report.to_text()
    _emit(text, args.out)
    s = report.summary
    if args.out:
        print(f"total={s['total']} passed={s['passed']} failed={s['failed']}")
    if not report.ok:
        for c in report.failures():
            print(f"FAIL {c.kind} {c.id} {json.dumps(c.params)} residual={c.residual:.3e}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_list(args) -> int:
    _check_filter(args.filter)
    entries = [t.index_entry() for t in theorems(args.filter)]
    if args.format == "json":
        n_exp = sum(e["mode"] == "explicit" for e in entries)
        doc = {"meta": {"version": __version__, "filter": args.filter}, "theorems": entries,
               "summary": {"total": len(entries), "explicit": n_exp, "extraction": len(entries) - n_exp}}
        text = json.dumps(doc, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "family", "citation", "domain", "mode"])
        for e in entries:
            w.writerow([e["id"], e["family"], e["citation"], e["domain"], e["mode"]])
        text = buf.getvalue()
    else:
        text = "".join(f"{e['id']:28s} {e['family']:15s} {e['citation']:24s} {e['mode']:10s} {e['domain']}\n"
                       for e in entries)
    _emit(text, args.out)
    return EXIT_OK


def cmd_extract(args) -> int:
    try:
        spec = get(args.theorem)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    if spec.mode != "extraction":
        raise UsageError(f"{spec.id} is an explicit theorem; nothing to extract")
    pairs = sample_pairs(args.pairs, args.seed)[:-2]
    rows, failed = [], False
    for p in spec.params(args.lmax):
        try:
            fit = extract_coefficients(spec, p, pairs)
        except ConditioningError as exc:
            print(f"conditioning error: {exc}", file=sys.stderr)
            failed = True
            continue
        except UnsupportedModeError as exc:
            raise UsageError(str(exc)) from None
        failed = failed or not (fit.residual < args.tol and fit.spread < 1e-8)
        rows.append(fit)
    labels = []
    for fit in rows:
        for name, _ in fit.coefficients:
            if name not in labels:
                labels.append(name)

    if args.format == "json":
        doc = {"meta": {"theorem": spec.id, "citation": spec.citation, "l_max": args.lmax, "pairs": args.pairs,
                        "seed": args.seed, "version": __version__},
               "fits": [f.as_dict() for f in rows]}
        text = json.dumps(doc, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["params"] + labels + ["residual", "spread"])
        for f in rows:
            vals = dict(f.coefficients)
            w.writerow([json.dumps(f.params, sort_keys=True)] + [repr(vals.get(k, math.nan)) for k in labels]
                       + [repr(f.residual), repr(f.spread)])
        text = buf.getvalue()
    else:
        head = f"{'params':30s} " + " ".join(f"{k:>16s}" for k in labels) + f" {'residual':>10s} {'spread':>10s}"
        lines = [f"{spec.id} ({spec.citation})", head]
        for f in rows:
            vals = dict(f.coefficients)
            ps = ",".join(f"{k}={v}" for k, v in f.params.items())
            cells = " ".join(f"{vals.get(k, math.nan):16.12f}" for k in labels)
            lines.append(f"{ps:30s} {cells} {f.residual:10.2e} {f.spread:10.2e}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spinharm", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, sweep_flags):
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--out", default=None, help="output path (default: standard output)")
        if sweep_flags:
            p.add_argument("--lmax", type=_nonneg, default=10)
            p.add_argument("--pairs", type=_positive, default=20)
            p.add_argument("--seed", type=_seed, default=42)
            p.add_argument("--tol", type=float, default=1e-9)

    v = sub.add_parser("verify", help="run the verification sweep")
    common(v, sweep_flags=True)
    v.add_argument("--filter", default="*", help="glob(s) over theorem ids, comma separated")
    v.add_argument("--jobs", type=_positive, default=os.cpu_count() or 1)
    v.set_defaults(func=cmd_verify)

    ls = sub.add_parser("list", help="list registered theorems")
    common(ls, sweep_flags=False)
    ls.add_argument("--filter", default="*")
    ls.set_defaults(func=cmd_list)

    ex = sub.add_parser("extract", help="fit coefficients of an extraction-mode theorem")
    common(ex, sweep_flags=True)
    ex.add_argument("--theorem", required=True)
    ex.set_defaults(func=cmd_extract)
    return parser


def _nonneg(text: str) -> int:
    val = int(text)
    if val < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return val


def _positive(text: str) -> int:
    val = int(text)
    if val < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return val


def _seed(text: str) -> int:
    val = int(text)
    if not 0 <= val < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return val


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
