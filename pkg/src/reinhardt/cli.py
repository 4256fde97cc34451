"""Command-line front end.

Subcommands: ``table`` (counts and ratios, CSV/JSON), ``set`` (one
square-sum set), ``classify`` and ``witness`` (structural answers for a
queried dimension), ``sequence`` (the inductive growth rows), and
``verify`` (the finite check suites).  CSV uses comma separators, LF
line endings and always a header row; JSON output is a single top-level
object with a ``rows`` array.  The environment variable
``REINHARDT_CACHE`` supplies a default table-cache path.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence, TextIO

from .classify import classify_dimension, make_witness, realizations
from .dimsets import (
    DimTable,
    MemoryLimitError,
    build_table,
    compact_count,
    noncompact_count,
)
from .sequences import format_ratio, growth_sequence
from .storage import TableCorruptionError, UnsupportedFormatError, load_table, save_table
from .verifiers import (
    STATUS_FAIL,
    verify_arms,
    verify_bounds,
    verify_dp_oracle,
    verify_growth_sequence,
    verify_largest_part,
    verify_noncompact_growth,
    verify_two_block_closed_form,
)

DEFAULT_MEMORY_LIMIT = 2 * 1024**3
FORCE_BUILD_LIMIT = 4096
INLINE_BUILD_LIMIT = 1024

CACHE_ENV_VAR = "REINHARDT_CACHE"


class CliError(Exception):
    pass


def _emit_csv(headers: Sequence[str], rows: Sequence[Sequence[Any]], out: TextIO) -> None:
    import csv as _csv

    writer = _csv.writer(out, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)


def _emit_json(rows: Sequence[dict[str, Any]], out: TextIO) -> None:
    out.write(json.dumps({"rows": list(rows)}, ensure_ascii=False) + "\n")


def _default_cache(value: str | None) -> str | None:
    if value is not None:
        return value
    return os.environ.get(CACHE_ENV_VAR) or None


def _load_or_build(
    n_max: int,
    cache: str | None,
    no_cache: bool,
    memory_limit: int,
    force: bool,
) -> DimTable:
    cache = None if no_cache else cache
    if cache and os.path.exists(cache):
        with open(cache, "rb") as fh:
            table = load_table(fh)
        if table.n_max >= n_max:
            return table
    if n_max > FORCE_BUILD_LIMIT and not force:
        raise CliError(
            f"builds above n={FORCE_BUILD_LIMIT} need --force and an adequate --memory-limit"
        )
    table = build_table(n_max, memory_limit)
    if cache:
        with open(cache, "wb") as fh:
            save_table(table, fh)
    return table


def _open_out(path: str | None):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def cmd_table(args: argparse.Namespace) -> int:
    if not 2 <= args.min_n <= args.max_n:
        raise CliError(f"need 2 <= min_n <= max_n, got ({args.min_n}, {args.max_n})")
    table = _load_or_build(
        args.max_n, _default_cache(args.cache), args.no_cache, args.memory_limit, args.force
    )
    records = []
    for n in range(args.min_n, args.max_n + 1):
        c = compact_count(table, n)
        # the requested top row never reports h, whatever the cache holds
        if n < args.max_n:
            h = noncompact_count(table, n)
            records.append((n, c, format_ratio(c, n * n), h, format_ratio(h, n)))
        else:
            records.append((n, c, format_ratio(c, n * n), None, None))
    out, close = _open_out(args.out)
    try:
        if args.format == "csv":
            rows = [
                (n, c, cr, "" if h is None else h, "" if hr is None else hr)
                for n, c, cr, h, hr in records
            ]
            _emit_csv(("n", "c", "c/n^2", "h", "h/n"), rows, out)
        else:
            _emit_json(
                [
                    {"n": n, "c": c, "c_over_n2": cr, "h": h, "h_over_n": hr}
                    for n, c, cr, h, hr in records
                ],
                out,
            )
    finally:
        if close:
            out.close()
    return 0


def cmd_set(args: argparse.Namespace) -> int:
    n = args.n
    if n < 0:
        raise CliError(f"n must be non-negative, got {n}")
    cache = None if args.no_cache else _default_cache(args.cache)
    table = None
    if cache and os.path.exists(cache):
        with open(cache, "rb") as fh:
            candidate = load_table(fh)
        if candidate.n_max >= n:
            table = candidate
    if table is None:
        if n > INLINE_BUILD_LIMIT and not args.force:
            raise CliError(
                f"no cached table covers n={n}; inline builds stop at"
                f" n={INLINE_BUILD_LIMIT} (use --force, or build a cache via `table`)"
            )
        table = _load_or_build(n, cache, args.no_cache, args.memory_limit, args.force)
    values = list(table.sets[n].values())
    if args.format == "csv":
        _emit_csv(("n", "values"), [(n, " ".join(map(str, values)))], sys.stdout)
    else:
        _emit_json([{"n": n, "values": values}], sys.stdout)
    return 0


def _classification_record(result) -> dict[str, Any]:
    return {
        "n": result.n,
        "dim": result.dim,
        "status": result.status,
        "notes": result.notes,
        "families": [
            {"tag": f.tag, "description": f.description, "parameters": list(f.parameters)}
            for f in result.families
        ],
        "realizations": [
            {
                "parts": list(r.marked.partition.parts),
                "marks": [[v, c] for v, c in r.marked.marks],
                "blocks": r.length,
                "marked": r.mark_count,
            }
            for r in result.realizations
        ],
    }


def cmd_classify(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise CliError(f"classification needs n >= 2, got {args.n}")
    if args.n + 1 > FORCE_BUILD_LIMIT:
        raise CliError(f"classification tables stop at n={FORCE_BUILD_LIMIT - 1}")
    table = build_table(args.n + 1, DEFAULT_MEMORY_LIMIT)
    result = classify_dimension(table, args.n, args.dim)
    if args.format == "json":
        _emit_json([_classification_record(result)], sys.stdout)
        return 0
    rows: list[tuple[str, Any]] = [
        ("n", result.n),
        ("dim", result.dim),
        ("status", result.status),
        ("notes", result.notes),
    ]
    for fam in result.families:
        params = "; ".join(fam.parameters)
        rows.append(("family", f"{fam.tag}: {fam.description}" + (f" [{params}]" if params else "")))
    for real in result.realizations:
        rows.append(("realization", str(real)))
    _emit_csv(("field", "value"), rows, sys.stdout)
    return 0


def cmd_witness(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise CliError(f"witnesses need n >= 2, got {args.n}")
    candidates = realizations(args.n, args.dim, mode="smooth_bounded")
    if not candidates:
        raise CliError(
            f"no smooth-bounded witness for (n={args.n}, dim={args.dim}):"
            " smooth bounded domains only realize values with at most one marked"
            " block, at least two blocks, and dim <= n^2-2"
        )
    if not 0 <= args.index < len(candidates):
        raise CliError(
            f"witness index {args.index} out of range: {len(candidates)} candidate(s)"
        )
    witness = make_witness(candidates[args.index])
    print(witness.inequality)
    print(
        f"{witness.label} (construction {witness.construction},"
        f" claimed dimension {witness.claimed_dimension})"
    )
    return 0


_VERIFY_SUITES = {
    "bounds": lambda max_n: verify_bounds(2, max_n),
    "lemma-largest": lambda max_n: verify_largest_part(7, max_n),
    "numh": lambda max_n: verify_noncompact_growth(2, max_n),
    "arms": lambda max_n: verify_arms(1, max_n),
    "brute": lambda max_n: verify_dp_oracle(1, max_n),
    "prop7": lambda max_n: verify_two_block_closed_form(2, max_n),
    "sequences": lambda max_n: verify_growth_sequence(max_n),
}


def cmd_verify(args: argparse.Namespace) -> int:
    report = _VERIFY_SUITES[args.suite](args.max_n)
    if args.format == "json":
        _emit_json(
            [
                {
                    "suite": report.suite,
                    "n_lo": report.n_lo,
                    "n_hi": report.n_hi,
                    "status": report.status,
                    "elapsed_s": round(report.elapsed, 3),
                    "notes": report.notes,
                    "counterexamples": [list(ce) for ce in report.counterexamples],
                }
            ],
            sys.stdout,
        )
    else:
        rows: list[tuple[str, Any]] = [
            ("suite", report.suite),
            ("n_lo", report.n_lo),
            ("n_hi", report.n_hi),
            ("status", report.status),
            ("elapsed_s", round(report.elapsed, 3)),
            ("notes", report.notes),
        ]
        for n, value, detail in report.counterexamples:
            rows.append(("counterexample", f"n={n} value={value}: {detail}"))
        _emit_csv(("field", "value"), rows, sys.stdout)
    return 1 if report.status == STATUS_FAIL else 0


def cmd_sequence(args: argparse.Namespace) -> int:
    if args.max_n < 1:
        raise CliError(f"max_n must be positive, got {args.max_n}")
    rows = growth_sequence(args.max_n)
    if args.format == "csv":
        _emit_csv(
            ("n", "f", "2g", "k"),
            [
                (r.n, r.reach, int(2 * r.threshold), "" if r.anchor is None else r.anchor)
                for r in rows
            ],
            sys.stdout,
        )
    else:
        _emit_json(
            [
                {"n": r.n, "f": r.reach, "2g": int(2 * r.threshold), "k": r.anchor}
                for r in rows
            ],
            sys.stdout,
        )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reinhardt",
        description=(
            "Achievable automorphism-group dimensions of hyperbolic Reinhardt"
            " domains: tables, classification, witnesses, verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("table", help="counts c(n), h(n) and their growth ratios")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--min-n", type=int, default=2, dest="min_n")
    add_format(p)
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--cache", default=None, help=f"table cache path (default ${CACHE_ENV_VAR})")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--memory-limit", type=int, default=DEFAULT_MEMORY_LIMIT, dest="memory_limit")
    p.add_argument("--force", action="store_true", help="allow very large builds")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("set", help="print one achievable-dimension set")
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.add_argument("--cache", default=None)
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--memory-limit", type=int, default=DEFAULT_MEMORY_LIMIT, dest="memory_limit")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_set)

    p = sub.add_parser("classify", help="classify a queried (n, dim)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("witness", help="symbolic domain realizing (n, dim)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--index", type=int, default=0)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="run a finite verification suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=sorted(_VERIFY_SUITES),
        help=(
            "bounds: value bounds and parity; lemma-largest: large values need a"
            " big block; numh: noncompact growth (report-only); arms: Young-diagram"
            " arm totals; brute: recurrence vs enumeration; prop7: two-block closed"
            " form vs enumeration; sequences: growth-sequence invariants"
        ),
    )
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sequence", help="rows of the inductive growth sequences")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    add_format(p)
    p.set_defaults(func=cmd_sequence)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        CliError,
        MemoryLimitError,
        TableCorruptionError,
        UnsupportedFormatError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
