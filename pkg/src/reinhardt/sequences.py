"""Inductive growth scaffolding and ratio diagnostics.

The growth sequence guarantees that every value of the right parity from
n up to ``reach(n)`` is an achievable square sum, which drives the
asymptotic density of compact dimension counts.  The three sequences are
defined inductively:

    reach(0) = 0,    anchor(1) = 0,
    reach(n) = (n - anchor(n))^2 + reach(anchor(n)),
    threshold(n) = (reach(n) + n + 4) / 2,
    anchor(n) = the largest kappa < n with threshold(kappa) <= n.

``threshold`` is kept exact (a half-integer; it happens to be integral
because reach(n) has the parity of n) so the supremum defining the
anchor never depends on floating-point ties.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .dimsets import DimTable, compact_count, noncompact_count
from .partitions import DegenerateInputWarning


@dataclass(frozen=True)
class GrowthRow:
    """One row of the inductive sequences; ``anchor`` is None only at n=0."""

    n: int
    reach: int
    threshold: Fraction
    anchor: int | None


def growth_sequence(n_max: int) -> list[GrowthRow]:
    """Rows of (reach, threshold, anchor) for n = 0..n_max."""
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    reach = [0]
    threshold = [Fraction(0 + 0 + 4, 2)]
    anchor: list[int | None] = [None]
    for n in range(1, n_max + 1):
        if n == 1:
            k = 0
        else:
            prev = anchor[n - 1]
            assert prev is not None
            k = prev  # non-decreasing: the previous anchor always qualifies
            for kappa in range(n - 1, prev, -1):
                if threshold[kappa] <= n:
                    k = kappa
                    break
        anchor.append(k)
        reach.append((n - k) ** 2 + reach[k])
        threshold.append(Fraction(reach[n] + n + 4, 2))
    return [GrowthRow(n, reach[n], threshold[n], anchor[n]) for n in range(n_max + 1)]


def format_ratio(numerator: int, denominator: int) -> str:
    """Exact 4-decimal rendering with round-half-to-even.

    Integer arithmetic throughout, so decimal half cases are not at the
    mercy of binary floating point.
    """
    if denominator <= 0:
        raise ValueError("denominator must be positive")
    scaled, rem = divmod(numerator * 10**4, denominator)
    if rem * 2 > denominator or (rem * 2 == denominator and scaled % 2 == 1):
        scaled += 1
    return f"{scaled // 10**4}.{scaled % 10**4:04d}"


@dataclass(frozen=True)
class RatioRow:
    n: int
    compact: int
    compact_ratio: str  # compact / n^2 at 4 decimals
    noncompact: int | None  # None at the table edge, where c(n+1) is unknown
    noncompact_ratio: str | None


def ratio_table(table: DimTable, ns: list[int]) -> list[RatioRow]:
    """Counts plus the two growth ratios for each requested n.

    Out-of-range entries are skipped with a notice; the noncompact count
    is omitted at n = n_max since it needs the successor set.
    """
    rows: list[RatioRow] = []
    for n in ns:
        if not 2 <= n <= table.n_max:
            warnings.warn(
                f"n={n} outside table range 2..{table.n_max}; row skipped",
                DegenerateInputWarning,
                stacklevel=2,
            )
            continue
        c = compact_count(table, n)
        if n <= table.n_max - 1:
            h = noncompact_count(table, n)
            row = RatioRow(n, c, format_ratio(c, n * n), h, format_ratio(h, n))
        else:
            row = RatioRow(n, c, format_ratio(c, n * n), None, None)
        rows.append(row)
    return rows
