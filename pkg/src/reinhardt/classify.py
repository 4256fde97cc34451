"""Structural classification of a queried automorphism-group dimension.

Given (n, dim) the decision ladder is exact:

  * dim = n^2 + 2n  ->  the unit ball (the only value above n^2 + 2);
  * dim = n^2 + 2   ->  the ball-times-disc product;
  * dim = n^2       ->  one of the fixed n^2 families;
  * other values above n^2 - 2 are unachievable;
  * dim <= n^2 - 2: compact ("bad") if it is a square sum with at least
    two blocks, noncompact ("good") if it needs exactly one marked
    block, general-only if it is achievable but only with two or more
    marked blocks (hence by no smooth bounded domain), else unrealizable.

All queries are read-only against an immutable table and safe for
concurrent callers.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import lru_cache

from .dimsets import (
    MARKED_ORACLE_MAX_N,
    DimTable,
    is_realizable,
    noncompact_set,
    set_bit_length,
)
from .partitions import (
    MarkedPartition,
    _marked_unchecked,
    _partition_unchecked,
    iter_partition_tuples,
)

#: Up to this n the partition list is cached and indexed by square sum,
#: so repeated queries only scan the feasible window.
_INDEX_MAX_N = 48

STATUS_UNREALIZABLE = "unrealizable"
STATUS_BALL = "ball"
STATUS_BALL_TIMES_DISC = "ball_times_disc"
STATUS_N_SQUARED = "n_squared"
STATUS_NONCOMPACT_GOOD = "noncompact_good"
STATUS_COMPACT_BAD = "compact_bad"
STATUS_GENERAL_ONLY = "general_only"

NOT_VERIFIED_LABEL = "canonical candidate; automorphism group not verified by this library"

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _sup(k: int) -> str:
    return str(k).translate(_SUPERSCRIPTS)


@dataclass(frozen=True)
class Realization:
    """A marked partition whose dimension value equals the queried one."""

    marked: MarkedPartition
    length: int
    mark_count: int

    def __str__(self) -> str:
        return f"{self.marked} (blocks={self.length}, marked={self.mark_count})"


@dataclass(frozen=True)
class DomainFamily:
    """A family of domains, up to algebraic coordinate changes."""

    tag: str
    description: str
    parameters: tuple[str, ...] = ()


@dataclass(frozen=True)
class Classification:
    n: int
    dim: int
    status: str
    families: tuple[DomainFamily, ...] = ()
    realizations: tuple[Realization, ...] = ()
    notes: str = ""


@dataclass(frozen=True)
class WitnessDomain:
    """Symbolic defining inequality of a domain realizing a dimension.

    ``blocks`` pairs each block size with its exponent parameter s (the
    block enters the inequality as |z^i|^(2s); the marked block has
    s = 1).  The label records that the automorphism group of the
    emitted domain is a canonical candidate, not something this library
    verifies.
    """

    blocks: tuple[tuple[int, int], ...]
    inequality: str
    claimed_dimension: int
    construction: str  # "egg" (no marked block) or "marked_egg" (one)
    label: str = NOT_VERIFIED_LABEL


def _ball_family(n: int) -> DomainFamily:
    return DomainFamily("Ball", f"unit ball B{_sup(n)} (up to dilations and permutations)")


def _ball_times_disc_family(n: int) -> DomainFamily:
    return DomainFamily(
        "BallTimesDisc",
        f"B{_sup(n - 1)} × Δ (up to dilations and permutations)",
    )


def n_squared_families(n: int) -> list[DomainFamily]:
    """The families of domains whose automorphism group has dimension n^2.

    Four families exist in every dimension; the polydisc appears only at
    n = 3 and the product of two 2-balls only at n = 4.
    """
    if n < 2:
        raise ValueError(f"queries need n >= 2, got {n}")
    families = [
        DomainFamily(
            "SphericalShell",
            "{z : r < |z| < R}",
            ("0 <= r < R < ∞",),
        )
    ]
    if n == 3:
        families.append(DomainFamily("Polydisc3", "Δ³", ("n = 3",)))
    if n == 4:
        families.append(
            DomainFamily("ProductB2B2", "B² × B²", ("n = 4",))
        )
    families.extend(
        [
            DomainFamily(
                "Egg",
                "{(z', z_n) : |z'|² + |z_n|^α < 1}",
                ("α ∈ ℝ", "α ≠ 0, 2"),
            ),
            DomainFamily(
                "BallFiberedShell",
                "{(z', z_n) : |z'| < 1, r(1-|z'|²)^α < |z_n| < R(1-|z'|²)^α}",
                ("α ∈ ℝ", "0 < r < R <= ∞"),
            ),
            DomainFamily(
                "ExpShell",
                "{(z', z_n) : r e^{α|z'|²} < |z_n| < R e^{α|z'|²}}",
                ("0 < r < R <= ∞", "α ∈ ℝ, α ≠ 0", "if R = ∞ then α > 0"),
            ),
        ]
    )
    return families


def _mark_solutions(
    values: tuple[int, ...], mults: tuple[int, ...], target: int
) -> list[tuple[int, ...]]:
    """Count vectors over distinct part values summing to ``target``.

    Greedy-descending order: solutions taking more of larger values come
    first, which fixes the canonical realization order.
    """
    k = len(values)
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] + values[i] * mults[i]
    sols: list[tuple[int, ...]] = []
    counts = [0] * k

    def rec(i: int, left: int) -> None:
        if left == 0:
            sols.append(tuple(counts))
            return
        if i == k or left > suffix[i]:
            return
        for t in range(min(mults[i], left // values[i]), -1, -1):
            counts[i] = t
            rec(i + 1, left - t * values[i])
        counts[i] = 0

    rec(0, target)
    return sols


@lru_cache(maxsize=4)
def _partition_index(n: int):
    """Partitions of n with precomputed statistics, sorted by square sum."""
    entries = []
    for parts in iter_partition_tuples(n):
        base = sum(p * p for p in parts)
        vals = tuple(sorted(set(parts), reverse=True))
        mults = tuple(parts.count(v) for v in vals)
        entries.append((base, parts, vals, mults, _partition_unchecked(parts)))
    entries.sort(key=lambda e: (e[0], e[1]))
    return entries, [e[0] for e in entries]


def _candidate_entries(n: int, dim: int):
    # a partition can reach dim only if dim - 2n <= square sum <= dim
    if n <= _INDEX_MAX_N:
        entries, bases = _partition_index(n)
        return entries[bisect_left(bases, dim - 2 * n) : bisect_right(bases, dim)]

    def stream():
        for parts in iter_partition_tuples(n):
            vals = tuple(sorted(set(parts), reverse=True))
            mults = tuple(parts.count(v) for v in vals)
            yield sum(p * p for p in parts), parts, vals, mults, _partition_unchecked(parts)

    return stream()


def realizations(n: int, dim: int, mode: str = "all") -> list[Realization]:
    """All marked partitions of n whose dimension value equals ``dim``.

    ``mode="smooth_bounded"`` keeps only realizations a smooth bounded
    domain can carry: at most one marked block, at least two blocks, and
    dim <= n^2 - 2.  The list is ordered by mark count, then by the part
    tuple ascending, then greedy-descending over the marked values; an
    empty list means the value is unrealizable (in the given mode).
    """
    if mode not in ("all", "smooth_bounded"):
        raise ValueError(f"unknown mode {mode!r}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > MARKED_ORACLE_MAX_N:
        raise ValueError(
            f"realization enumeration is limited to n <= {MARKED_ORACLE_MAX_N}, got {n}"
        )
    smooth = mode == "smooth_bounded"
    if smooth and dim > n * n - 2:
        return []
    found: list[tuple[int, tuple[int, ...], Realization]] = []
    for base, parts, vals, mults, partition in _candidate_entries(n, dim):
        rest = dim - base
        if rest < 0 or rest % 2:
            continue
        target = rest // 2
        if target > n:
            continue
        if smooth and len(parts) < 2:
            continue
        if smooth:
            sols = []
            if target == 0:
                sols.append(tuple(0 for _ in vals))
            elif target in vals:
                sols.append(tuple(1 if v == target else 0 for v in vals))
        else:
            sols = _mark_solutions(vals, mults, target)
        for counts in sols:
            marks = tuple((v, c) for v, c in zip(vals, counts) if c)
            marked = _marked_unchecked(partition, marks)
            real = Realization(marked, len(parts), sum(counts))
            found.append((real.mark_count, parts, real))
    found.sort(key=lambda item: (item[0], item[1]))
    return [item[2] for item in found]


def classify_dimension(
    table: DimTable, n: int, dim: int, include_realizations: bool = True
) -> Classification:
    """Classify the query (n, dim); see the module docstring for the ladder.

    The table must cover n + 1 (the noncompact set needs the successor).
    Realizations are enumerated when n is within oracle scale, otherwise
    the list stays empty with an explanatory note;
    ``include_realizations=False`` skips the enumeration entirely (bulk
    scans over many dims would otherwise materialize millions of
    records) without changing the status decision.
    """
    if n < 2:
        raise ValueError(f"queries need n >= 2, got {n}")
    if table.n_max < n + 1:
        raise ValueError(f"table covers n_max={table.n_max}, need at least {n + 1}")
    top = n * n
    notes: list[str] = []
    families: tuple[DomainFamily, ...] = ()
    if (dim - n) % 2:
        status = STATUS_UNREALIZABLE
        notes.append(
            f"parity: achievable dimensions for n={n} are {'even' if n % 2 == 0 else 'odd'}"
        )
    elif dim < n:
        status = STATUS_UNREALIZABLE
        notes.append(f"below the minimum achievable dimension n={n}")
    elif dim > top + 2 * n:
        status = STATUS_UNREALIZABLE
        notes.append(f"above the maximum achievable dimension n^2+2n={top + 2 * n}")
    elif dim == top + 2 * n:
        status = STATUS_BALL
        families = (_ball_family(n),)
    elif dim == top + 2:
        status = STATUS_BALL_TIMES_DISC
        families = (_ball_times_disc_family(n),)
    elif dim == top:
        status = STATUS_N_SQUARED
        families = tuple(n_squared_families(n))
    elif dim > top - 2:
        status = STATUS_UNREALIZABLE
        notes.append(
            f"gap: between n^2-2={top - 2} and n^2+2n={top + 2 * n} only "
            f"{top}, {top + 2} and {top + 2 * n} are achievable"
        )
    else:
        top_bit = set_bit_length(n) - 1
        compact_bits = table.sets[n].bits & ~(1 << top_bit)
        if (compact_bits >> ((dim - n) // 2)) & 1:
            status = STATUS_COMPACT_BAD
        elif dim in noncompact_set(table, n):
            status = STATUS_NONCOMPACT_GOOD
        elif is_realizable(table, n, dim):
            status = STATUS_GENERAL_ONLY
            notes.append(
                "achievable only with two or more marked blocks;"
                " no smooth bounded domain realizes it"
            )
        else:
            status = STATUS_UNREALIZABLE
            notes.append("no partition of n reaches this value with any marking")
    reals: tuple[Realization, ...] = ()
    if include_realizations:
        if n <= MARKED_ORACLE_MAX_N:
            reals = tuple(realizations(n, dim))
        else:
            notes.append(f"realization enumeration skipped for n > {MARKED_ORACLE_MAX_N}")
    return Classification(n, dim, status, families, reals, "; ".join(notes))


def make_witness(realization: Realization) -> WitnessDomain:
    """Symbolic domain realizing the realization's dimension value.

    With no marked block every block enters as |z^i|^(2 s_i) with
    distinct integer exponents s_i >= 2 (a generalized egg); with one
    marked block that block enters as |z^(i0)|^2 and the others keep the
    distinct higher exponents.  Exponents are assigned canonically:
    2, 3, ... over the unmarked blocks in order.  Two or more marked
    blocks admit no smooth bounded witness and are refused.
    """
    if realization.mark_count >= 2:
        raise ValueError(
            "no smooth-bounded witness: values needing two or more marked blocks"
            " are not realizable by smooth bounded domains"
        )
    if realization.length < 2:
        raise ValueError("witness constructions need at least two blocks")
    parts = realization.marked.partition.parts
    marked_value = None
    if realization.mark_count == 1:
        marked_value = realization.marked.marks[0][0]
    blocks: list[tuple[int, int]] = []
    terms: list[str] = []
    next_exponent = 2
    marked_done = False
    for i, size in enumerate(parts, start=1):
        if marked_value is not None and size == marked_value and not marked_done:
            marked_done = True
            blocks.append((size, 1))
            terms.append(f"|z{_sup(i)}|{_sup(2)}")
        else:
            blocks.append((size, next_exponent))
            terms.append(f"|z{_sup(i)}|{_sup(2 * next_exponent)}")
            next_exponent += 1
    claimed = sum(p * p for p in parts) + (2 * marked_value if marked_value else 0)
    return WitnessDomain(
        blocks=tuple(blocks),
        inequality="+".join(terms) + "<1",
        claimed_dimension=claimed,
        construction="marked_egg" if marked_value is not None else "egg",
    )
