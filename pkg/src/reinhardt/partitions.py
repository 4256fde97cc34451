"""Integer partitions and their block statistics.

A partition of n models the block sizes (n_1, ..., n_k) of a Reinhardt
domain in normalized form; the automorphism-group dimension contributed
by a partition is the sum of squared block sizes plus 2 per marked block
size.  Everything here is immutable and safe to share across threads;
enumeration streams are independent per caller.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Iterator

#: Largest n accepted by the enumeration-backed oracles.  This is a
#: runtime guard (p(n) grows super-polynomially), not a semantic limit.
ORACLE_MAX_N = 120


class DegenerateInputWarning(UserWarning):
    """Notice for degenerate query ranges that legitimately yield nothing."""


@dataclass(frozen=True)
class Partition:
    """A partition: positive parts in non-increasing order.

    The empty partition (of 0) is allowed so that recurrences over all
    smaller partitions need no special base case.
    """

    parts: tuple[int, ...]
    n: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive integers, got {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be non-increasing, got {parts}")
        object.__setattr__(self, "n", sum(parts))

    @property
    def length(self) -> int:
        return len(self.parts)

    def distinct_parts(self) -> tuple[int, ...]:
        """Distinct part values, descending."""
        return tuple(sorted(set(self.parts), reverse=True))

    def multiplicity(self, value: int) -> int:
        return self.parts.count(value)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class MarkedPartition:
    """A partition with a sub-multiset of its parts marked.

    Marks are stored per distinct part value as (value, count) pairs in
    descending value order; positionally different but value-identical
    markings are therefore never distinguished, so enumerating marked
    partitions never double-counts.
    """

    partition: Partition
    marks: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        marks = tuple((v, c) for v, c in self.marks if c != 0)
        marks = tuple(sorted(marks, key=lambda vc: -vc[0]))
        object.__setattr__(self, "marks", marks)
        seen = set()
        for value, count in marks:
            if value in seen:
                raise ValueError(f"duplicate mark entry for part value {value}")
            seen.add(value)
            mult = self.partition.multiplicity(value)
            if mult == 0:
                raise ValueError(f"marked value {value} is not a part of {self.partition}")
            if not 0 < count <= mult:
                raise ValueError(
                    f"mark count {count} for value {value} exceeds multiplicity {mult}"
                )

    @classmethod
    def from_values(cls, partition: Partition, values: Iterable[int]) -> "MarkedPartition":
        """Build from an iterable of marked part values (with repetition)."""
        counts: dict[int, int] = {}
        for v in values:
            counts[v] = counts.get(v, 0) + 1
        return cls(partition, tuple(counts.items()))

    @property
    def mark_count(self) -> int:
        """Total number of marked parts (m)."""
        return sum(c for _, c in self.marks)

    @property
    def marked_sum(self) -> int:
        return sum(v * c for v, c in self.marks)

    def __str__(self) -> str:
        inner = ",".join(f"{v}" + (f"x{c}" if c > 1 else "") for v, c in self.marks)
        return f"{self.partition} marks[{inner}]"


def _partition_unchecked(parts: tuple[int, ...]) -> Partition:
    """Construct without validation; callers guarantee the invariants."""
    p = object.__new__(Partition)
    object.__setattr__(p, "parts", parts)
    object.__setattr__(p, "n", sum(parts))
    return p


def _marked_unchecked(
    partition: Partition, marks: tuple[tuple[int, int], ...]
) -> MarkedPartition:
    """Construct without validation; marks must be normalized already
    (descending part values, no zero counts, counts within multiplicity)."""
    mp = object.__new__(MarkedPartition)
    object.__setattr__(mp, "partition", partition)
    object.__setattr__(mp, "marks", marks)
    return mp


def iter_partition_tuples(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield raw part tuples of n in reverse-lexicographic order.

    Fast path used by the enumeration oracles; ``enumerate_partitions``
    wraps these in :class:`Partition`.  ``max_part`` restricts every part
    to at most that value.
    """
    if n < 0:
        raise ValueError(f"cannot partition a negative integer ({n})")
    if n == 0:
        yield ()
        return
    cap = n if max_part is None else min(max_part, n)
    if cap < 1:
        return
    a = [cap] if cap == n else None
    if a is None:
        # seed with the reverse-lex first partition under the cap
        q, r = divmod(n, cap)
        a = [cap] * q + ([r] if r else [])
    while True:
        yield tuple(a)
        # decrement: find the rightmost part > 1, reduce it, and refill
        # the tail greedily with chunks of the new value
        j = len(a) - 1
        ones = 0
        while j >= 0 and a[j] == 1:
            ones += 1
            j -= 1
        if j < 0:
            return
        a[j] -= 1
        rem = ones + 1
        del a[j + 1 :]
        q, r = divmod(rem, a[j])
        a.extend([a[j]] * q)
        if r:
            a.append(r)


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, reverse-lexicographically: (n) first, (1,...,1) last.

    n = 0 yields the single empty partition; negative n is rejected.
    """
    for parts in iter_partition_tuples(n):
        yield Partition(parts)


def enumerate_partitions_with_length(n: int, length: int) -> Iterator[Partition]:
    """Partitions of n with exactly ``length`` parts, in the global order.

    Degenerate requests (length < 1 or length > n) produce an empty
    stream and a :class:`DegenerateInputWarning`, not an error.
    """
    if n < 0:
        raise ValueError(f"cannot partition a negative integer ({n})")
    if length < 1 or length > n:
        warnings.warn(
            f"no partitions of {n} with {length} parts", DegenerateInputWarning, stacklevel=2
        )
        return
    yield from (Partition(t) for t in _fixed_length_tuples(n, length, n))


def _fixed_length_tuples(n: int, length: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if length == 1:
        if 1 <= n <= max_part:
            yield (n,)
        return
    # first part p leaves n-p to split into length-1 parts, each in [1, p]
    hi = min(max_part, n - length + 1)
    lo = -(-n // length)  # ceil(n / length)
    for p in range(hi, lo - 1, -1):
        for rest in _fixed_length_tuples(n - p, length - 1, p):
            yield (p,) + rest


def partition_count(n: int) -> int:
    """p(n) via the pentagonal-number recurrence (independent of enumeration)."""
    if n < 0:
        raise ValueError(f"p(n) undefined for negative n ({n})")
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = 1 if k % 2 else -1
            if g1 <= m:
                total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def sum_of_squares(partition: Partition) -> int:
    """Sum of squared parts: the dimension value with no marked blocks."""
    return sum(p * p for p in partition.parts)


def dimension_value(marked: MarkedPartition) -> int:
    """Automorphism-group dimension of a marked partition.

    Squared parts summed, plus twice every marked part value (counted
    with mark multiplicity).
    """
    return sum_of_squares(marked.partition) + 2 * marked.marked_sum


def arm_count(partition: Partition) -> int:
    """Total number of arms in the partition's Young diagram.

    Row j of length p contributes p(p-1)/2 arms, so the total equals
    (sum_of_squares - n) / 2 exactly.
    """
    return sum(p * (p - 1) // 2 for p in partition.parts)


def distinct_arm_values(n: int) -> set[int]:
    """The set of arm totals over all partitions of n.

    Enumeration-backed; refuses n above :data:`ORACLE_MAX_N`.  Direct
    counting gives exactly one more distinct value than the compact
    dimension count, because the single-block partition contributes the
    excluded top value.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > ORACLE_MAX_N:
        raise ValueError(f"enumeration oracle is limited to n <= {ORACLE_MAX_N}, got {n}")
    return {sum(p * (p - 1) // 2 for p in parts) for parts in iter_partition_tuples(n)}
