"""Bit-packed sets of achievable automorphism-group dimensions.

For a fixed n, every achievable value v lies in [n, n^2] and has the
parity of n, so a set is stored as one big integer whose bit j stands
for the value n + 2j.  The full family of square-sum sets satisfies the
recurrence

    S(n) = union over 0 <= i < n of (S(i) + (n-i)^2),    S(0) = {0},

because removing one part (n-i) from a partition of n leaves a partition
of i.  Translating a set by (n-i)^2 in value space is a left shift by
((n-i)^2 - (n-i)) / 2 in index space: a value v = i + 2j maps to
w = v + (n-i)^2 with index (w - n)/2 = j + ((n-i)^2 - (n-i))/2.

All sets are immutable once built and safe to share across threads; the
build itself is sequential with a fixed accumulation order (i = n-1 down
to 0), and since the union is a bitwise OR the result is independent of
any alternative reduction order.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterator

from .partitions import (
    ORACLE_MAX_N,
    DegenerateInputWarning,
    _fixed_length_tuples,
    iter_partition_tuples,
)

#: Largest n accepted by the marked-value oracle (all mark submultisets).
MARKED_ORACLE_MAX_N = 80


class MemoryLimitError(Exception):
    """Raised before allocation when a build would exceed its memory budget."""


def set_bit_length(n: int) -> int:
    """Number of representable indices for base n: (n^2 - n)/2 + 1."""
    return (n * n - n) // 2 + 1


@dataclass(frozen=True)
class DimSet:
    """Bit-packed set of dimension values sharing the parity of ``n``.

    Bit j represents the value n + 2j; indices run from 0 (value n) to
    (n^2 - n)/2 (value n^2).
    """

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"base n must be non-negative, got {self.n}")
        if self.bits < 0:
            raise ValueError("bits must be a non-negative integer")
        if self.bits >> self.length:
            raise ValueError(f"bits exceed the representable range for n={self.n}")

    @property
    def length(self) -> int:
        return set_bit_length(self.n)

    @classmethod
    def from_values(cls, n: int, values) -> "DimSet":
        bits = 0
        for v in values:
            if (v - n) % 2 or not n <= v <= n * n:
                raise ValueError(f"value {v} not representable for base n={n}")
            bits |= 1 << ((v - n) // 2)
        return cls(n, bits)

    def __contains__(self, value: int) -> bool:
        if (value - self.n) % 2 or not self.n <= value <= self.n * self.n:
            return False
        return bool((self.bits >> ((value - self.n) // 2)) & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return self.values()

    def values(self) -> Iterator[int]:
        """Stored values in ascending order."""
        bits = self.bits
        j = 0
        while bits:
            if bits & 1:
                yield self.n + 2 * j
            bits >>= 1
            j += 1

    def to_set(self) -> set[int]:
        return set(self.values())


@dataclass(frozen=True)
class DimTable:
    """The square-sum sets for n = 0..n_max plus derived counts.

    ``compact_counts[i]`` is the compact-dimension count for n = i + 2
    (set size minus one: the top value n^2 is excluded), and
    ``noncompact_counts[i]`` the noncompact count for n = i + 2, defined
    up to n_max - 1 via first differences of the compact counts.
    """

    n_max: int
    sets: tuple[DimSet, ...]
    compact_counts: tuple[int, ...] = field(repr=False)
    noncompact_counts: tuple[int, ...] = field(repr=False)


def projected_bits(n_max: int) -> int:
    """Total stored bits for a full table to n_max."""
    return sum(set_bit_length(k) for k in range(n_max + 1))


def build_table(n_max: int, memory_limit: int | None = None) -> DimTable:
    """Build the square-sum sets for all n up to n_max.

    ``memory_limit`` is a byte budget checked against the projected bit
    count before anything is allocated; exceeding it raises
    :class:`MemoryLimitError` naming the projected requirement.
    n_max = 0 returns the trivial table containing only {0}.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    if memory_limit is not None:
        need = projected_bits(n_max)
        if need > memory_limit * 8:
            raise MemoryLimitError(
                f"building to n_max={n_max} needs {need} bits"
                f" ({(need + 7) // 8} bytes), over the limit of {memory_limit} bytes"
            )
    sets_bits: list[int] = [1]  # {0}
    for n in range(1, n_max + 1):
        acc = 0
        for i in range(n - 1, -1, -1):
            d = n - i
            acc |= sets_bits[i] << ((d * d - d) // 2)
        sets_bits.append(acc)
    return _finish_table(sets_bits)


def _finish_table(sets_bits: list[int]) -> DimTable:
    n_max = len(sets_bits) - 1
    sets = tuple(DimSet(n, bits) for n, bits in enumerate(sets_bits))
    sizes = [b.bit_count() for b in sets_bits]
    compact = tuple(sizes[n] - 1 for n in range(2, n_max + 1))
    noncompact = tuple(compact[i + 1] - compact[i] - 1 for i in range(len(compact) - 1))
    return DimTable(n_max, sets, compact, noncompact)


def square_sums_bruteforce(n: int) -> DimSet:
    """Oracle: the set of squared-part sums via full partition enumeration.

    Must agree bit-for-bit with the recurrence-built set; refuses n above
    :data:`ORACLE_MAX_N`.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > ORACLE_MAX_N:
        raise ValueError(f"enumeration oracle is limited to n <= {ORACLE_MAX_N}, got {n}")
    bits = 0
    for parts in iter_partition_tuples(n):
        bits |= 1 << ((sum(p * p for p in parts) - n) // 2)
    return DimSet(n, bits)


def _check_count_range(table: DimTable, n: int, need_successor: bool) -> None:
    hi = table.n_max - 1 if need_successor else table.n_max
    if not 2 <= n <= hi:
        raise ValueError(f"n={n} out of range; counts are defined for 2 <= n <= {hi}")


def compact_count(table: DimTable, n: int) -> int:
    """c(n): number of compact dimensions (set size minus the top value)."""
    _check_count_range(table, n, need_successor=False)
    return table.compact_counts[n - 2]


def noncompact_count(table: DimTable, n: int) -> int:
    """h(n): number of noncompact dimensions, c(n+1) - c(n) - 1."""
    _check_count_range(table, n, need_successor=True)
    return table.noncompact_counts[n - 2]


def _chat_bits(table: DimTable, n: int) -> int:
    return table.sets[n].bits


def noncompact_set(table: DimTable, n: int) -> DimSet:
    """The set of noncompact dimensions for n.

    Computed as (C(n+1) - 1) minus (C(n) with its top value restored),
    where C(m) drops the top value m^2 from the square-sum set.  In bit
    space the -1 translation is free: the value v in base n+1 and the
    value v-1 in base n share the same index, so dropping the top bit of
    the (n+1)-set and masking off the full n-set is the whole formula.
    """
    _check_count_range(table, n, need_successor=True)
    top_succ = set_bit_length(n + 1) - 1
    shifted = _chat_bits(table, n + 1) & ~(1 << top_succ)
    return DimSet(n, shifted & ~_chat_bits(table, n))


def dimensions_bruteforce(n: int, length: int, marks: int) -> set[int]:
    """Oracle: achievable dimensions for ``length`` blocks and ``marks`` marked.

    Enumerates every partition of n with exactly ``length`` parts and
    every sub-multiset of ``marks`` of its parts.  Out-of-range
    (length, marks) yields an empty set with a degenerate-input notice.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > MARKED_ORACLE_MAX_N:
        raise ValueError(
            f"marked enumeration oracle is limited to n <= {MARKED_ORACLE_MAX_N}, got {n}"
        )
    if not (1 <= length <= n) or not (0 <= marks <= length):
        warnings.warn(
            f"no partitions of {n} with {length} parts and {marks} marks",
            DegenerateInputWarning,
            stacklevel=2,
        )
        return set()
    out: set[int] = set()
    for parts in _fixed_length_tuples(n, length, n):
        base = sum(p * p for p in parts)
        for s in _mark_sums(parts, marks):
            out.add(base + 2 * s)
    return out


def _mark_sums(parts: tuple[int, ...], marks: int) -> set[int]:
    """All distinct value-sums of sub-multisets of ``parts`` of size ``marks``."""
    sums = {0: {0}}  # mark count -> achievable sums
    for v in parts:
        for q in sorted(sums, reverse=True):
            if q + 1 > marks:
                continue
            nxt = sums.setdefault(q + 1, set())
            nxt.update(s + v for s in sums[q])
    return sums.get(marks, set())


def two_block_dimensions(n: int) -> set[int]:
    """Closed form for the dimensions achievable with exactly two blocks.

    Splits (a, n-a) with a >= n-a are parametrized by the offset from the
    even split; the four families below cover zero, one (either block),
    and two marks.
    """
    if n < 2:
        raise ValueError(f"two blocks need n >= 2, got {n}")
    out: set[int] = set()
    if n % 2 == 0:
        half_sq = n * n // 2
        for mu in range(n // 2):
            out.add(half_sq + 2 * mu * mu)
            out.add(half_sq + 2 * mu * (mu - 1) + n)
            out.add(half_sq + 2 * mu * (mu + 1) + n)
            out.add(half_sq + 2 * mu * mu + 2 * n)
    else:
        half_sq = (n * n + 1) // 2
        for mu in range((n - 3) // 2 + 1):
            out.add(half_sq + 2 * mu * (mu + 1))
            out.add(half_sq + 2 * mu * mu + n - 1)
            out.add(half_sq + 2 * mu * (mu + 2) + n + 1)
            out.add(half_sq + 2 * mu * (mu + 1) + 2 * n)
    return out


def smooth_bounded_sets(n: int, table: DimTable) -> tuple[DimSet, DimSet]:
    """(compact, noncompact) dimension sets for smooth bounded domains.

    Compact: squared-part sums over partitions with at least two blocks,
    i.e. the square-sum set minus its top value.  Noncompact: values with
    exactly one marked block and at least two blocks, capped at n^2 - 2,
    minus the compact set.  A marked partition of n with one mark is a
    partition of n+1 with one incremented part, so the one-marked values
    are the (n+1)-set minus {n+1, (n+1)^2}, shifted down by 1.  The
    result is cross-checked against :func:`noncompact_set`.
    """
    _check_count_range(table, n, need_successor=True)
    top = set_bit_length(n) - 1
    compact_bits = _chat_bits(table, n) & ~(1 << top)
    top_succ = set_bit_length(n + 1) - 1
    one_marked = _chat_bits(table, n + 1) & ~(1 << top_succ) & ~1
    one_marked &= ~(1 << top)  # cap at n^2 - 2: drop the value n^2
    noncompact_bits = one_marked & ~compact_bits
    expected = noncompact_set(table, n)
    if noncompact_bits != expected.bits:
        raise AssertionError(
            f"noncompact sets disagree at n={n}: enumeration route vs difference route"
        )
    return DimSet(n, compact_bits), expected


def is_realizable(table: DimTable, n: int, dim: int) -> bool:
    """Whether ``dim`` is achievable for n with any number of marked blocks.

    Marked parts form a partition of some a and unmarked parts one of
    n - a, so dim is achievable iff dim - 2a splits as u + v with u a
    square sum for a and v one for n - a, for some a.
    """
    if not 2 <= n <= table.n_max:
        raise ValueError(f"n={n} outside table range 2..{table.n_max}")
    if (dim - n) % 2 or dim < n or dim > n * n + 2 * n:
        return False
    for a in range(n + 1):
        t = (dim - 2 * a - n) // 2  # combined index budget for the two sets
        if t < 0:
            continue
        sa = _chat_bits(table, a)
        sb = _chat_bits(table, n - a)
        if sa.bit_length() - 1 + sb.bit_length() - 1 < t:
            continue
        window = min(t, sb.bit_length() - 1)
        # need bit i of sa and bit t-i of sb for some i: reverse one window
        rev = int(format(sb & ((1 << (window + 1)) - 1), f"0{window + 1}b")[::-1], 2)
        if (sa >> (t - window)) & rev:
            return True
    return False
