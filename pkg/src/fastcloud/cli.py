"""Command-line workbench binding the registry, assessment and benchmark.

Subcommands:

    register-attributes  load attribute definitions (or the standard six)
    submit-slo           merge agreed objectives from a CSV file
    submit-amv           append monitored values from a CSV file
    import-qws           bulk-import a QoS dataset as monitored values
    assess               rank providers for a request file
    bench                run a scaling sweep of the scoring pipeline

The store directory comes from --store or the FASTCLOUD_STORE environment
variable (flag wins). Exit codes: 0 success, 2 validation error,
3 insufficient candidates, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from pathlib import Path

from .bench import BenchConfig, BenchMode, render_report, run_benchmark
from .registry import (
    AmvRecord,
    MissingSloError,
    Polarity,
    QosAttribute,
    Registry,
    SloRecord,
    STANDARD_ATTRIBUTES,
    STANDARD_QWS_MAPPING,
    Store,
    UnknownAttributeError,
    import_qws,
)
from .selection import (
    AssessmentRequest,
    InsufficientCandidatesError,
    assess,
    read_request,
    render_human,
    result_document,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NO_CANDIDATES = 3
EXIT_IO = 4

log = logging.getLogger("fastcloud")


def _store(args: argparse.Namespace) -> Store:
    path = args.store or os.environ.get("FASTCLOUD_STORE")
    if not path:
        raise ValueError("no store directory: pass --store or set FASTCLOUD_STORE")
    return Store(path)


def _open_rows(path: str) -> tuple[list[dict], list[str]]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise ValueError(f"{path}: empty file")
        return list(reader), [f.strip() for f in reader.fieldnames]


def cmd_register_attributes(args: argparse.Namespace) -> int:
    store = _store(args)
    registry = store.load()
    count = 0
    if args.qws_defaults:
        for attr in STANDARD_ATTRIBUTES:
            registry.register_attribute(attr)
            count += 1
    if args.file:
        rows, header = _open_rows(args.file)
        expected = ["name", "abbreviation", "unit", "polarity"]
        if header != expected:
            raise ValueError(f"{args.file}: header must be {','.join(expected)!r}")
        for row in rows:
            registry.register_attribute(QosAttribute(
                row["name"].strip(),
                row["abbreviation"].strip(),
                row["unit"].strip(),
                Polarity(row["polarity"].strip().lower()),
            ))
            count += 1
    if count == 0:
        raise ValueError("nothing to register: pass a file and/or --qws-defaults")
    store.save(registry)
    print(f"{count} attributes registered")
    return EXIT_OK


def cmd_submit_slo(args: argparse.Namespace) -> int:
    store = _store(args)
    registry = store.load()
    rows, header = _open_rows(args.file)
    expected = ["csp_id", "csc_id", "attribute", "value"]
    if header != expected:
        raise ValueError(f"{args.file}: header must be {','.join(expected)!r}")
    accepted = replaced = 0
    failures: list[str] = []
    for line_no, row in enumerate(rows, start=2):
        try:
            record = SloRecord(
                row["csp_id"].strip(), row["csc_id"].strip(),
                row["attribute"].strip(), float(row["value"]),
            )
            if registry.submit_slo(record):
                replaced += 1
            else:
                accepted += 1
        except (ValueError, TypeError, AttributeError) as exc:
            failures.append(f"  line {line_no}: {exc}")
    for failure in failures:
        print(failure, file=sys.stderr)
    if accepted or replaced:
        store.save(registry)
    print(f"{accepted} accepted, {replaced} replaced"
          + (f", {len(failures)} failed" if failures else ""))
    if rows and not (accepted or replaced):
        return EXIT_VALIDATION
    return EXIT_OK


def cmd_submit_amv(args: argparse.Namespace) -> int:
    store = _store(args)
    registry = store.load()
    rows, header = _open_rows(args.file)
    expected = ["csp_id", "csc_id", "attribute", "value", "sequence"]
    if header != expected:
        raise ValueError(f"{args.file}: header must be {','.join(expected)!r}")
    appended = skipped = 0
    failures: list[str] = []
    for line_no, row in enumerate(rows, start=2):
        try:
            sequence = int(row["sequence"]) if (row.get("sequence") or "").strip() else None
            record = AmvRecord(
                row["csp_id"].strip(), row["csc_id"].strip(),
                row["attribute"].strip(), float(row["value"]), sequence,
            )
            registry.submit_amv(record)
            appended += 1
        except (MissingSloError, UnknownAttributeError) as exc:
            failures.append(f"  line {line_no}: {exc}")
        except ValueError as exc:
            if "duplicate" in str(exc):
                skipped += 1
            else:
                failures.append(f"  line {line_no}: {exc}")
        except (TypeError, AttributeError) as exc:
            failures.append(f"  line {line_no}: {exc}")
    for failure in failures:
        print(failure, file=sys.stderr)
    if appended:
        store.save(registry)
    print(f"{appended} appended"
          + (f", {skipped} duplicates skipped" if skipped else "")
          + (f", {len(failures)} failed" if failures else ""))
    if rows and not appended and not skipped:
        return EXIT_VALIDATION
    return EXIT_OK


def cmd_import_qws(args: argparse.Namespace) -> int:
    store = _store(args)
    registry = store.load()
    mapping = dict(STANDARD_QWS_MAPPING)
    if args.map:
        mapping = {}
        for pair in args.map.split(","):
            column, _, attr = pair.partition("=")
            if not column or not attr:
                raise ValueError(f"bad --map entry {pair!r}: expected COLUMN=attribute")
            mapping[column.strip()] = attr.strip()
    with open(args.file, newline="", encoding="utf-8") as fh:
        summary = import_qws(registry, fh, mapping, service_column=args.service_column)
    if summary.records_added:
        store.save(registry)
    for reason in summary.rejections:
        print(f"  {reason}", file=sys.stderr)
    print(summary)
    return EXIT_OK


def cmd_assess(args: argparse.Namespace) -> int:
    store = _store(args)
    registry = store.load()
    with open(args.request, newline="", encoding="utf-8") as fh:
        request = read_request(fh)
    # canonicalize names so abbreviation and full-name spellings line up
    request = AssessmentRequest(tuple(
        (registry.resolve_attribute(name).name, span)
        for name, span in request.requested
    ))
    if args.attributes:
        names = [registry.resolve_attribute(n.strip()).name
                 for n in args.attributes.split(",")]
        request = request.restrict(names)
    result = assess(registry, request)
    if args.format == "structured":
        output = json.dumps(result_document(result), indent=2)
    else:
        output = render_human(result)
    if args.out:
        Path(args.out).write_text(output + "\n", encoding="utf-8")
        print(f"result written to {args.out}")
        print(f"ranking: {result.chain}")
    else:
        print(output)
    return EXIT_OK


def _parse_sweep(text: str) -> tuple[int, ...]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"bad sweep {text!r}: expected START:STOP:STEP")
    start, stop, step = (int(p) for p in parts)
    if step <= 0 or stop < start:
        raise ValueError(f"bad sweep {text!r}: need START <= STOP and STEP > 0")
    return tuple(range(start, stop + 1, step))


def cmd_bench(args: argparse.Namespace) -> int:
    config = BenchConfig(
        mode=BenchMode(args.mode),
        fixed_value=args.fixed,
        sweep=_parse_sweep(args.sweep),
        repetitions=args.reps,
        seed=args.seed,
    )
    report = run_benchmark(config)
    print(render_report(report))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fastcloud",
        description="QoS-based trust assessment and provider ranking workbench",
    )
    parser.add_argument("--store", "-s", help="store directory (default: $FASTCLOUD_STORE)")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="increase log verbosity")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("register-attributes", help="load attribute definitions")
    p.add_argument("file", nargs="?", help="CSV: name,abbreviation,unit,polarity")
    p.add_argument("--qws-defaults", action="store_true",
                   help="register the six standard QoS attributes")
    p.set_defaults(func=cmd_register_attributes)

    p = sub.add_parser("submit-slo", help="merge agreed objectives from a CSV file")
    p.add_argument("file", help="CSV: csp_id,csc_id,attribute,value")
    p.set_defaults(func=cmd_submit_slo)

    p = sub.add_parser("submit-amv", help="append monitored values from a CSV file")
    p.add_argument("file", help="CSV: csp_id,csc_id,attribute,value,sequence")
    p.set_defaults(func=cmd_submit_amv)

    p = sub.add_parser("import-qws", help="bulk-import a QoS dataset as monitored values")
    p.add_argument("file", help="delimiter-separated dataset with a header row")
    p.add_argument("--map", help="column mapping COLUMN=attr,COLUMN=attr,... "
                                 "(default: the standard six)")
    p.add_argument("--service-column", default="Service Name",
                   help="column holding the service identity")
    p.set_defaults(func=cmd_import_qws)

    p = sub.add_parser("assess", help="rank providers for a request file")
    p.add_argument("request", help="CSV: attribute,min,max")
    p.add_argument("--attributes", help="comma-separated subset of the request to use")
    p.add_argument("--format", choices=["human", "structured"], default="human")
    p.add_argument("--out", help="write the result document to a file")
    p.set_defaults(func=cmd_assess)

    p = sub.add_parser("bench", help="run a scaling sweep of the scoring pipeline")
    p.add_argument("--mode", choices=[m.value for m in BenchMode], required=True)
    p.add_argument("--fixed", type=int, required=True,
                   help="value of the dimension held constant")
    p.add_argument("--sweep", required=True, help="START:STOP:STEP for the swept dimension")
    p.add_argument("--reps", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(message)s",
    )
    try:
        return args.func(args)
    except InsufficientCandidatesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CANDIDATES
    except (UnknownAttributeError, MissingSloError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
