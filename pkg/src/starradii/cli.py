"""Command-line front end.

    starradii radius --class k1 --target parabolic
    starradii radius --class k3 --target order --alpha 0
    starradii table --format json
    starradii verify --oracle --sharpness

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
failure.  Records go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from . import extremal, oracle, solver
from .regions import DomainError, RegionKind, TargetRegion
from .seed_classes import SeedClass

log = logging.getLogger("starradii")

SCHEMA_VERSION = "v1"
TABLE_TOL = 1e-5
ORACLE_TOL = 5e-4
PRINTED_TOL = 1e-9
SAMPLES_ENV = "RADII_SEED_SAMPLES"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


def _num(x: float | None) -> float | None:
    # 10 significant digits, emitted by json as the shortest round-trip repr
    return None if x is None else float(f"{x:.10g}")


@dataclass
class OutputRecord:
    cls: str
    region: str
    alpha: float | None
    radius: float
    paper_value: float | None = None
    abs_diff: float | None = None
    sharp: bool | None = None
    suspect_flag: bool = False

    def to_dict(self) -> dict:
        return {
            "class": self.cls,
            "region": self.region,
            "alpha": _num(self.alpha),
            "radius": _num(self.radius),
            "paper_value": self.paper_value,
            "abs_diff": _num(self.abs_diff),
            "sharp": self.sharp,
            "suspect_flag": self.suspect_flag,
        }


FIELDS = ["class", "region", "alpha", "radius", "paper_value", "abs_diff", "sharp", "suspect_flag"]


def _sharp_flag(cls: SeedClass, reg: TargetRegion, radius: float) -> bool | None:
    rep = extremal.verify_sharpness(cls, reg, radius)
    return rep.sharp if rep.stated else None


def make_record(cls: SeedClass, reg: TargetRegion, entry: solver.CatalogEntry | None = None,
                label: str | None = None) -> OutputRecord:
    res = solver.solve_radius(cls, reg)
    paper = entry.paper_value if entry else None
    return OutputRecord(
        cls=cls.value,
        region=label or reg.name,
        alpha=reg.alpha if reg.kind is RegionKind.ORDER and label != "starlike" else None,
        radius=res.value,
        paper_value=paper,
        abs_diff=abs(res.value - paper) if paper is not None else None,
        sharp=_sharp_flag(cls, reg, res.value) if res.value > 0 else None,
        suspect_flag=bool(entry and entry.printed_equation_suspect),
    )


def table_records() -> list[OutputRecord]:
    return [make_record(e.class_kind, e.region, e, e.label) for e in solver.catalog()]


# --------------------------------------------------------------------------
# formatting


def _fmt6(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, float):
        return f"{x:.6f}"
    return str(x)


def render(records: Sequence[OutputRecord], fmt: str) -> str:
    rows = [r.to_dict() for r in records]
    if fmt == "json":
        return json.dumps({"version": SCHEMA_VERSION, "records": rows}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: ("" if v is None else v) for k, v in row.items()})
        return buf.getvalue()
    widths = [5, 12, 8, 10, 12, 10, 6, 8]
    out = ["  ".join(f.ljust(n) for f, n in zip(FIELDS, widths)).rstrip()]
    for r in records:
        vals = [r.cls, r.region, r.alpha, r.radius, r.paper_value, r.abs_diff, r.sharp, r.suspect_flag]
        out.append("  ".join(_fmt6(v).ljust(n) for v, n in zip(vals, widths)).rstrip())
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# verify


def oracle_config(args) -> oracle.OracleConfig:
    samples = args.samples
    if samples is None and os.environ.get(SAMPLES_ENV):
        samples = int(os.environ[SAMPLES_ENV])
    kwargs = {}
    if samples is not None:
        kwargs["disk_samples"] = samples
    if args.tol is not None:
        kwargs["bisection_tol"] = args.tol
    return oracle.OracleConfig(**kwargs)


def run_oracle_suite(cfg: oracle.OracleConfig) -> list[dict]:
    tol = max(cfg.bisection_tol, ORACLE_TOL)
    rows = []
    for e in solver.catalog():
        value = solver.solve_radius(e.class_kind, e.region).value
        est = oracle.oracle_radius(e.class_kind, e.region, cfg)
        diff = abs(est - value)
        rows.append({"id": e.equation_id, "class": e.class_kind.value, "region": e.label,
                     "radius": _num(value), "oracle": _num(est), "abs_diff": _num(diff),
                     "tol": tol, "status": "pass" if diff <= tol else "fail"})
    return rows


def run_sharpness_suite() -> list[dict]:
    rows = []
    for e in solver.catalog():
        value = solver.solve_radius(e.class_kind, e.region).value
        rep = extremal.verify_sharpness(e.class_kind, e.region, value)
        if rep.stated:
            status = "pass" if rep.sharp else "fail"
        else:
            status = "unstated"
        rows.append({"id": e.equation_id, "class": e.class_kind.value, "region": e.label,
                     "witness": rep.witness.value,
                     "z": [_num(rep.boundary_z.real), _num(rep.boundary_z.imag)],
                     "w": [_num(rep.value_w.real), _num(rep.value_w.imag)],
                     "distance": float(f"{rep.distance_to_boundary:.3e}"),
                     "tol": extremal.SHARPNESS_TOL, "status": status})
    return rows


def run_printed_suite() -> list[dict]:
    rows = []
    for e in solver.catalog():
        value = solver.solve_radius(e.class_kind, e.region).value
        row = {"id": e.equation_id, "class": e.class_kind.value, "region": e.label}
        if e.printed_equation_suspect:
            rows.append({**row, "status": "suspect", "note": e.note})
            continue
        diffs = [abs(e.printed_root() - value)]
        diffs += [abs(solver.smallest_positive_root(alt) - value) for alt in e.alternates]
        if e.closed_form is not None:
            diffs.append(abs(e.closed_form - value))
        worst = max(diffs)
        rows.append({**row, "abs_diff": float(f"{worst:.3e}"), "tol": PRINTED_TOL,
                     "status": "pass" if worst <= PRINTED_TOL else "fail"})
    return rows


def _render_suite(name: str, rows: list[dict]) -> str:
    lines = []
    for r in rows:
        detail = {k: v for k, v in r.items() if k not in ("id", "class", "region", "status")}
        extra = " ".join(f"{k}={v}" for k, v in detail.items())
        lines.append(f"[{name}] {r['status'].upper():8s} {r['id']:14s} {r['class']} {r['region']:12s} {extra}")
    graded = [r for r in rows if r["status"] in ("pass", "fail")]
    ok = sum(r["status"] == "pass" for r in graded)
    lines.append(f"[{name}] {ok}/{len(graded)} passed")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="starradii", description="Radii of starlikeness for K1, K2, K3.")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json", "csv"], default="text")

    r = sub.add_parser("radius", parents=[fmt], help="solve one radius")
    r.add_argument("--class", dest="cls", required=True, choices=[c.value for c in SeedClass])
    r.add_argument("--target", required=True, choices=[k.value for k in RegionKind])
    r.add_argument("--alpha", type=float)

    sub.add_parser("table", parents=[fmt], help="reproduce all 30 catalogued radii")

    v = sub.add_parser("verify", parents=[fmt], help="oracle, sharpness and printed-equation checks")
    v.add_argument("--oracle", action="store_true")
    v.add_argument("--sharpness", action="store_true")
    v.add_argument("--printed", action="store_true")
    v.add_argument("--samples", type=int, help=f"oracle disk samples (default 2048, env {SAMPLES_ENV})")
    v.add_argument("--tol", type=float, help="oracle bisection tolerance (default 1e-7)")
    return p


def _cmd_radius(args, parser) -> int:
    if (args.target == "order") != (args.alpha is not None):
        parser.error("--alpha is required with --target order and rejected otherwise")
    cls = SeedClass(args.cls)
    try:
        reg = TargetRegion(RegionKind(args.target), args.alpha if args.alpha is not None else 0.0)
    except DomainError as exc:
        parser.error(str(exc))
    rec = make_record(cls, reg, solver.lookup(cls, reg))
    sys.stdout.write(render([rec], args.format))
    return EXIT_OK


def _cmd_table(args) -> int:
    records = table_records()
    sys.stdout.write(render(records, args.format))
    bad = [r for r in records if r.abs_diff is not None and r.abs_diff > TABLE_TOL]
    for r in bad:
        log.error("%s/%s differs from the printed value by %.3g", r.cls, r.region, r.abs_diff)
    return EXIT_FAIL if bad else EXIT_OK


def _cmd_verify(args, parser) -> int:
    chosen = [s for s in ("oracle", "sharpness", "printed") if getattr(args, s)]
    if not chosen:
        chosen = ["oracle", "sharpness", "printed"]
    try:
        cfg = oracle_config(args)
    except ValueError as exc:
        parser.error(str(exc))
    runners = {"oracle": lambda: run_oracle_suite(cfg), "sharpness": run_sharpness_suite,
               "printed": run_printed_suite}
    suites = {name: runners[name]() for name in chosen}
    failed = any(r["status"] == "fail" for rows in suites.values() for r in rows)
    if args.format == "json":
        sys.stdout.write(json.dumps({"version": SCHEMA_VERSION, "suites": suites, "passed": not failed},
                                    indent=2) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "id", "class", "region", "status"])
        for name, rows in suites.items():
            for r in rows:
                w.writerow([name, r["id"], r["class"], r["region"], r["status"]])
        sys.stdout.write(buf.getvalue())
    else:
        for name, rows in suites.items():
            sys.stdout.write(_render_suite(name, rows))
    return EXIT_FAIL if failed else EXIT_OK


def _configure_logging(verbose: bool) -> None:
    # bind to the current stderr on every call so redirection is honoured
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    log.handlers[:] = [handler]
    log.setLevel(logging.DEBUG if verbose else logging.WARNING)
    log.propagate = False


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    _configure_logging(args.verbose)
    try:
        if args.command == "radius":
            return _cmd_radius(args, parser)
        if args.command == "table":
            return _cmd_table(args)
        return _cmd_verify(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except solver.BracketError as exc:
        log.error("numerical failure: %s", exc)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
