"""Partitions, compositions and the dominance order.

Sequences are stored without trailing zeros; the empty sequence is the
unique partition (and composition) of 0.  All public indices are 1-based
and an index past the end reads as 0.

For two partitions of the same ``n`` the dominance test below agrees with
the classical prefix-sum dominance order.  For general compositions it
keeps the extra length condition ``len(b) >= len(a)``.
"""

from __future__ import annotations

from itertools import accumulate, combinations
from typing import Iterable, Iterator

from .errors import NoSuchIndex, NotContained, Overflow, ShapeMismatch, ZeroCount

INT64_MAX = 2**63 - 1


class Composition(tuple):
    """A finite sequence of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 1:
                raise ZeroCount(f"parts must be positive, got {p}")
            if p > INT64_MAX:
                raise Overflow(f"part {p} exceeds the 64-bit range")
        if sum(parts) > INT64_MAX:
            raise Overflow("total exceeds the 64-bit range")
        cls._check(parts)
        return super().__new__(cls, parts)

    @staticmethod
    def _check(parts):
        pass

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def height(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """Return the ``i``-th part (1-based); 0 past the end."""
        if i < 1:
            raise NoSuchIndex(f"index {i} is not positive")
        return self[i - 1] if i <= len(self) else 0

    @property
    def last(self) -> int:
        return self[-1]

    def prefix_sums(self) -> list[int]:
        return list(accumulate(self))

    def __repr__(self):
        return f"{type(self).__name__}({','.join(map(str, self))})"

    def __str__(self):
        return format_sequence(self)


class Partition(Composition):
    """A non-increasing sequence of positive integers."""

    __slots__ = ()

    @staticmethod
    def _check(parts):
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                raise ShapeMismatch(
                    f"partition parts must be non-increasing "
                    f"(part {i + 1} = {parts[i]} < part {i + 2} = {parts[i + 1]})"
                )


def format_sequence(seq: Iterable[int]) -> str:
    return ",".join(str(p) for p in seq)


def sort_to_partition(a: Iterable[int]) -> Partition:
    """lambda(a): the parts of ``a`` rearranged in non-increasing order."""
    return Partition(sorted(a, reverse=True))


def dominates(a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff ``a`` dominates ``b``.

    Requires ``len(b) >= len(a)`` and every prefix sum of ``a`` up to
    ``len(a)`` to be at least the matching prefix sum of ``b``.
    """
    a = tuple(a)
    b = tuple(b)
    if len(b) < len(a):
        return False
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            return False
    return True


def strictly_dominates(a: Iterable[int], b: Iterable[int]) -> bool:
    a = tuple(a)
    b = tuple(b)
    return a != b and dominates(a, b)


def decrement_part(a: Composition, i: int) -> Composition:
    """Return ``a`` with part ``i`` lowered by one.

    A part that drops to zero is removed.  That is only legal at the end
    of the sequence; for a partition the result must stay non-increasing.
    """
    if not 1 <= i <= len(a):
        raise NoSuchIndex(f"index {i} out of range 1..{len(a)}")
    parts = list(a)
    parts[i - 1] -= 1
    if parts[i - 1] == 0:
        if i != len(parts):
            raise ZeroCount(f"decrementing part {i} leaves an interior zero")
        parts.pop()
    elif isinstance(a, Partition) and i < len(parts) and parts[i - 1] < parts[i]:
        raise ShapeMismatch(f"decrementing part {i} of {format_sequence(a)} breaks monotonicity")
    return type(a)(parts)


def decrement_parts(mu: Partition, rows: Iterable[int]) -> Partition:
    """Apply ``decrement_part`` for each row in turn."""
    for i in rows:
        mu = decrement_part(mu, i)
    return mu


def drop_last(a: Composition) -> Composition:
    """a': the composition without its last part."""
    return type(a)(a[:-1])


def tilde(a: Composition) -> Composition:
    """Remove one unit from the last part (dropping it if it was 1)."""
    if not a:
        raise NoSuchIndex("the empty composition has no last part")
    return decrement_part(a, len(a))


def q_index(a: Composition) -> int:
    """Largest ``i`` with ``lambda(a)_i == a_h``."""
    if not a:
        raise NoSuchIndex("the empty composition has no last part")
    lam = sort_to_partition(a)
    last = a[-1]
    return max(i for i, p in enumerate(lam, 1) if p == last)


def tilde_lambda(a: Composition) -> Partition:
    return decrement_part(sort_to_partition(a), q_index(a))


def s_index(mu: Partition, a: Composition) -> int:
    """Largest row ``i`` of ``mu`` with ``mu_i >= a_h``."""
    if not a:
        raise NoSuchIndex("the empty composition has no last part")
    last = a[-1]
    rows = [i for i, p in enumerate(mu, 1) if p >= last]
    if not rows:
        raise NoSuchIndex(f"no row of {format_sequence(mu)} has length >= {last}")
    return rows[-1]


def contains(rho: Iterable[int], mu: Iterable[int]) -> bool:
    """True iff the diagram of ``rho`` sits inside the diagram of ``mu``."""
    rho = tuple(rho)
    mu = tuple(mu)
    return len(rho) <= len(mu) and all(r <= m for r, m in zip(rho, mu))


def is_totally_disconnected(mu: Partition, rho: Partition) -> bool:
    """True iff the skew shape mu/rho has at most one cell per column."""
    if not contains(rho, mu):
        raise NotContained(f"{format_sequence(rho)} is not contained in {format_sequence(mu)}")
    # rho_i >= mu_{i+1} for every row of mu, with rho_i = 0 past its end
    return all(_at(rho, i) >= mu[i] for i in range(1, len(mu)))


def _at(seq, i):
    # 1-based read with zero padding, for plain tuples
    return seq[i - 1] if i <= len(seq) else 0


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest)


def compositions_of(n: int) -> Iterator[Composition]:
    """All ``2**(n-1)`` compositions of ``n`` (one composition for n = 0)."""
    if n == 0:
        yield Composition()
        return
    for k in range(n):
        for cuts in combinations(range(1, n), k):
            bounds = (0,) + cuts + (n,)
            yield Composition(bounds[j + 1] - bounds[j] for j in range(k + 1))
