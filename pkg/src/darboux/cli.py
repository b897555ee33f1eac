"""Command-line front end: suite selection, order configuration, report
emission and series inspection.

Exit status is 0 exactly when every executed check passed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__, catalog, modular
from .report import PASS
from .scalars import QQ
from .verifier import chart_series

CHART_VARS = {"x": "x", "s": "s", "xw": "x", "t7": "t", "t4": "t", "q": "q"}


def run_suite(suite: str, order: int) -> dict:
    """Execute every check of a suite and assemble the report document."""
    if suite not in catalog.SUITES:
        raise KeyError(f"unknown suite {suite!r}")
    if order < 8:
        raise ValueError("order must be at least 8")
    t0 = time.monotonic()
    results = []
    for cid in sorted(catalog.SUITES[suite]):
        rep = catalog.run_check(cid, order)
        results.append(rep)
    duration_ms = int((time.monotonic() - t0) * 1000)
    ok = all(r.status == PASS for r in results)
    return {
        "version": __version__,
        "suite": suite,
        "order": order,
        "results": [r.as_dict() for r in results],
        "duration_ms": duration_ms,
        "status": "pass" if ok else "fail",
    }


def run_single(check_id: str, order: int) -> dict:
    if order < 8:
        raise ValueError("order must be at least 8")
    t0 = time.monotonic()
    rep = catalog.run_check(check_id, order)
    return {
        "version": __version__,
        "suite": f"spec:{check_id}",
        "order": order,
        "results": [rep.as_dict()],
        "duration_ms": int((time.monotonic() - t0) * 1000),
        "status": "pass" if rep.status == PASS else "fail",
    }


def dump_series(name: str, order, fmt: str = "text") -> str:
    """Exponent/coefficient listing of a named series or of a spec side."""
    series, var = _resolve_series(name, order)
    pairs = [(e, c) for e, c in series.terms() if e < QQ(order)]
    if fmt == "json":
        return json.dumps({"name": name, "order": str(order),
                           "terms": [[str(e), str(c)] for e, c in pairs]}, indent=2)
    return ", ".join(f"{var}^{e}: {c}" for e, c in pairs)


def _resolve_series(name: str, order):
    from .verifier import expand_terms
    if "." in name:
        spec_id, side = name.rsplit(".", 1)
        if side not in ("left", "right") or spec_id not in catalog.IDENTITY_BY_ID:
            raise KeyError(f"cannot resolve {name!r}")
        spec = catalog.IDENTITY_BY_ID[spec_id]
        terms = spec.left if side == "left" else spec.right
        return expand_terms(terms, spec.chart, QQ(order) + 4), CHART_VARS[spec.chart]
    if ":" in name:
        chart, entry = name.split(":", 1)
        return chart_series(chart, entry, QQ(order) + 2), CHART_VARS[chart]
    return modular.qseries(name, int(order) + 1), "q"


def list_checks() -> str:
    lines = []
    for suite in sorted(catalog.SUITES):
        if suite == "all":
            continue
        lines.append(f"[{suite}]")
        for cid in sorted(catalog.SUITES[suite]):
            lines.append(f"  {cid:24s} {catalog.check_anchor(cid)}")
    return "\n".join(lines)


def format_text(doc: dict) -> str:
    width = max((len(r["id"]) for r in doc["results"]), default=4)
    lines = [f"suite {doc['suite']}  order {doc['order']}  ({doc['duration_ms']} ms)"]
    for r in doc["results"]:
        line = f"  {r['id']:{width}s}  {r['status']:6s}  {r['anchor']}"
        if r.get("first_mismatch"):
            m = r["first_mismatch"]
            line += f"  [first mismatch at {m['exponent']}: {m['left']} != {m['right']}]"
        elif r.get("detail") and r["status"] != "pass":
            line += f"  [{r['detail']}]"
        lines.append(line)
    lines.append(f"overall: {doc['status']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="darboux",
        description="Exact verification of the shipped identity catalog.")
    p.add_argument("suite", nargs="?", choices=sorted(catalog.SUITES),
                   help="suite of checks to run")
    p.add_argument("--spec", metavar="ID", help="run a single check by id")
    p.add_argument("--list", action="store_true", help="list check ids with their anchors")
    p.add_argument("--dump", metavar="NAME",
                   help="print a catalog series (name, chart:name, or spec-id.left/right)")
    p.add_argument("--order", type=int,
                   default=int(os.environ.get("DARBOUX_ORDER", "64")),
                   help="truncation order (default 64; env DARBOUX_ORDER)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", metavar="FILE", help="also write the JSON report to a file")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.list:
        print(list_checks())
        return 0
    if args.dump:
        try:
            print(dump_series(args.dump, args.order, args.format))
        except KeyError as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
        return 0
    try:
        if args.spec:
            doc = run_single(args.spec, args.order)
        elif args.suite:
            doc = run_suite(args.suite, args.order)
        else:
            build_parser().print_usage()
            return 2
    except (KeyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
    print(format_text(doc) if args.format == "text" else json.dumps(doc, indent=2, sort_keys=True))
    return 0 if doc["status"] == "pass" else 1


if __name__ == "__main__":
    raise SystemExit(main())
