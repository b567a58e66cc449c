"""Command-line surface.

Verbs: census, isoclinic, bound, subgroup-scan, verify-paper,
conjecture-scan.  Exit codes: 0 ok, 2 input/cap error, 3 property
violation.  All output is deterministic; ``--out DIR`` additionally writes
the delimited reports (TSV + JSONL) and matplotlib figures.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructors as con
from .census import cent_census
from .isoclinism import (
    check_lemma_pi,
    check_maximal_proposition,
    check_small_n_theorem,
    isoclinic,
)
from .perm import CapExceeded
from .report import Row, format_jsonl, format_table, format_tsv
from .specs import SpecParseError, parse_spec
from .structure import all_subgroups, derived_length_bound
from .verify import conjecture_scan, verify_paper

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VIOLATION = 3


def _build(text: str, cap: int):
    spec = parse_spec(text)
    return con.build(spec, cap=cap)


def _emit(rows: list[Row], args, name: str, figure=None) -> None:
    if args.json:
        print(format_jsonl(rows))
    else:
        print(format_table(rows))
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{name}.jsonl").write_text(format_jsonl(rows) + "\n")
        (out / f"{name}.tsv").write_text(format_tsv(rows) + "\n")
        if figure is not None:
            figure(out)


def cmd_census(args) -> int:
    G = _build(args.spec, args.cap_group)
    report = cent_census(G, cap=args.cap_group)
    record = report.as_record()
    rows = [
        Row(
            claim=key,
            location=args.spec,
            expected="-",
            computed=json.dumps(value) if isinstance(value, (list, bool)) else str(value),
            status="match",
        )
        for key, value in record.items()
    ]

    def figure(out: Path):
        from .figures import render_centralizer_sizes

        render_centralizer_sizes(report, out / "centralizer_sizes.png", args.spec)

    _emit(rows, args, "census", figure)
    return EXIT_OK


def cmd_isoclinic(args) -> int:
    A = _build(args.spec_a, args.cap_group)
    B = _build(args.spec_b, args.cap_group)
    result = isoclinic(A, B)
    rows = [
        Row(
            claim="isoclinic",
            location=f"{args.spec_a} | {args.spec_b}",
            expected="-",
            computed=result.status,
            status="inconclusive" if result.status == "inconclusive" else "match",
            note=result.note,
        )
    ]
    _emit(rows, args, "isoclinic")
    return EXIT_OK


def cmd_bound(args) -> int:
    G = _build(args.spec, args.cap_group)
    report = derived_length_bound(G)
    rows = [
        Row(
            claim=key,
            location=args.spec,
            expected="-",
            computed=json.dumps(value) if isinstance(value, list) else str(value),
            status="match",
        )
        for key, value in report.as_record().items()
    ]
    violated = (
        report.actual_derived_length > report.proof_bound
        or report.actual_derived_length > report.stated_bound
    )
    _emit(rows, args, "bound")
    return EXIT_VIOLATION if violated else EXIT_OK


def cmd_subgroup_scan(args) -> int:
    G = _build(args.spec, args.cap_group)
    rows = []
    violations = 0
    for H in all_subgroups(G, cap=args.cap_lattice):
        verdict = check_lemma_pi(G, H)
        if not verdict.ok:
            violations += 1
        rows.append(
            Row(
                claim=f"lemma-pi-subgroup-{H.order:04d}-{int(H.indices()[0]):04d}",
                location=args.spec,
                expected="all clauses hold",
                computed=";".join(f"{k}={v}" for k, v in verdict.clauses),
                status="match" if verdict.ok else "mismatch",
            )
        )
    for verdict in check_maximal_proposition(G, cap=args.cap_lattice):
        if not verdict.ok:
            violations += 1
        rows.append(
            Row(
                claim=f"maximal-{verdict.name}",
                location=args.spec,
                expected="disjunction holds",
                computed=";".join(f"{k}={v}" for k, v in verdict.clauses),
                status="match" if verdict.ok else "mismatch",
            )
        )
    for verdict in check_small_n_theorem(G, cap=args.cap_lattice):
        if not verdict.ok:
            violations += 1
        rows.append(
            Row(
                claim=f"small-n-{verdict.name}",
                location=args.spec,
                expected="all clauses hold",
                computed=";".join(f"{k}={v}" for k, v in verdict.clauses),
                status="match" if verdict.ok else "mismatch",
            )
        )
    rows.sort(key=lambda r: r.claim)
    _emit(rows, args, "subgroup_scan")
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_verify_paper(args) -> int:
    rows = verify_paper()

    def figure(out: Path):
        from .figures import render_status_summary

        render_status_summary(rows, out / "verify_paper_status.png", "verify-paper")

    _emit(rows, args, "verify_paper", figure)
    if any(r.status == "mismatch" for r in rows):
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_conjecture_scan(args) -> int:
    records = conjecture_scan(max_order=args.max_order)
    if args.json:
        for record in records:
            print(json.dumps(record, sort_keys=True))
    else:
        widths = {
            key: max([len(key)] + [len(r[key]) for r in records])
            for key in ("fingerprint", "left", "right", "outcome")
        }
        keys = ("fingerprint", "left", "right", "outcome")
        print("  ".join(k.ljust(widths[k]) for k in keys).rstrip())
        for r in records:
            print("  ".join(r[k].ljust(widths[k]) for k in keys).rstrip())
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "conjecture_scan.jsonl").write_text(
            "\n".join(json.dumps(r, sort_keys=True) for r in records) + "\n"
        )
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupcensus",
        description="Exact centralizer censuses and isoclinism checks for small finite groups.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSONL instead of a table")
    parser.add_argument("--out", metavar="DIR", help="write reports and figures to DIR")
    parser.add_argument("--cap-group", type=int, default=10 ** 4, metavar="N",
                        help="group order cap (default 10000)")
    parser.add_argument("--cap-lattice", type=int, default=400, metavar="N",
                        help="subgroup lattice order cap (default 400)")
    parser.add_argument("--seedless", action="store_true",
                        help="reserved; all constructions are already deterministic")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="centralizer census of one group")
    p.add_argument("spec")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("isoclinic", help="isoclinism witness search for two groups")
    p.add_argument("spec_a")
    p.add_argument("spec_b")
    p.set_defaults(func=cmd_isoclinic)

    p = sub.add_parser("bound", help="derived-length bound report (nilpotent groups)")
    p.add_argument("spec")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("subgroup-scan", help="structural property sweep over the subgroup lattice")
    p.add_argument("spec")
    p.set_defaults(func=cmd_subgroup_scan)

    p = sub.add_parser("verify-paper", help="recompute every claim in scope")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("conjecture-scan", help="fingerprint collision report")
    p.add_argument("--max-order", type=int, default=48, metavar="N")
    p.set_defaults(func=cmd_conjecture_scan)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SpecParseError, CapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
