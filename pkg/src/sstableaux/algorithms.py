"""Constructive algorithms on STab(mu, a).

Three constructions are provided, each with an optional step trace:

* :func:`greatest_tableau` peels off, for the largest value, the
  dominance-greatest horizontal strip :func:`rho` and recurses.
* :func:`removable_fill_tableau` first removes the topmost removable box
  and then takes the greatest strip of the remainder.
* :func:`least_tableau` / :func:`least_tableau_with_floor` remove one
  corner at a time, always the highest removable row at or below a floor.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

from .core import (
    Composition,
    Partition,
    decrement_part,
    dominates,
    drop_last,
    format_sequence,
    s_index,
    sort_to_partition,
    tilde,
)
from .errors import InvalidFloor, NoSuchIndex, NotDominating, SumMismatch
from .tableau import Tableau


@dataclass(frozen=True)
class TraceRecord:
    """One row of a construction's step table.

    ``assignments`` holds ``(row, col, value)`` triples, 1-based.
    """

    step: int
    nu: Partition
    b: Composition
    rho: Optional[Partition] = None
    l: Optional[int] = None
    l_prime: Optional[int] = None
    m: Optional[int] = None
    h: Optional[int] = None
    assignments: tuple[tuple[int, int, int], ...] = ()


@dataclass(frozen=True)
class LeastTrace:
    """The sequences a^i, l_i, mu^i driving the least-element construction.

    ``l_seq[0]`` is the starting floor l_0; ``l_seq[i]`` for i >= 1 is the
    row whose last box is removed at step i.
    """

    a_seq: tuple[Composition, ...]
    l_seq: tuple[int, ...]
    mu_seq: tuple[Partition, ...]
    reset_set: frozenset[int] = field(default_factory=frozenset)


def _coerce(mu, a) -> tuple[Partition, Composition]:
    return Partition(mu), Composition(a)


def _require_dominating(mu: Partition, a: Composition) -> None:
    if mu.n != a.n:
        raise SumMismatch(f"|mu| = {mu.n} but |a| = {a.n}")
    if not dominates(mu, sort_to_partition(a)):
        raise NotDominating(
            f"mu = {format_sequence(mu)} does not dominate lambda(a) = "
            f"{format_sequence(sort_to_partition(a))}"
        )


def is_nonempty(mu: Sequence[int], a: Sequence[int]) -> bool:
    mu, a = _coerce(mu, a)
    if mu.n != a.n:
        raise SumMismatch(f"|mu| = {mu.n} but |a| = {a.n}")
    return dominates(mu, sort_to_partition(a))


def candidate_partitions(mu: Sequence[int], a: Sequence[int]) -> set[Partition]:
    """All rho with mu/rho a horizontal strip of size a_h and rho dominating lambda(a')."""
    mu, a = _coerce(mu, a)
    _require_dominating(mu, a)
    if not a:
        return set()
    size = a.n - a.last
    target = sort_to_partition(drop_last(a))
    ranges = [range(mu.part(i + 1), mu.part(i) + 1) for i in range(1, len(mu) + 1)]
    found = set()
    for parts in product(*ranges):
        if sum(parts) != size:
            continue
        rho_ = Partition(p for p in parts if p > 0)
        if dominates(rho_, target):
            found.add(rho_)
    return found


def rho(mu: Sequence[int], a: Sequence[int]) -> Partition:
    """The dominance-greatest shape left after removing a strip of a_h boxes.

    Rows above s = s(mu, a) are kept, row s gives up a_h - mu_{s+1} boxes,
    and every lower row shrinks to the length of the row beneath it.
    """
    mu, a = _coerce(mu, a)
    _require_dominating(mu, a)
    s = s_index(mu, a)
    k = len(mu)
    parts = list(mu[: s - 1])
    parts.append(mu.part(s) - (a.last - mu.part(s + 1)))
    parts.extend(mu.part(i + 1) for i in range(s + 1, k + 1))
    return Partition(p for p in parts if p > 0)


def _removable(mu: Partition, a: Composition) -> list[int]:
    target = sort_to_partition(tilde(a))
    return [
        i
        for i in range(1, len(mu) + 1)
        if mu.part(i) > mu.part(i + 1) and dominates(decrement_part(mu, i), target)
    ]


def removable_set(mu: Sequence[int], a: Sequence[int]) -> list[int]:
    """Rows i whose last box (i, mu_i) is removable for (mu, a), ascending."""
    mu, a = _coerce(mu, a)
    _require_dominating(mu, a)
    return _removable(mu, a)


def l_min(mu: Sequence[int], a: Sequence[int]) -> int:
    return removable_set(mu, a)[0]


def l_min_from(mu: Sequence[int], a: Sequence[int], i: int) -> int:
    """Smallest removable row that is ``>= i``."""
    mu, a = _coerce(mu, a)
    _require_dominating(mu, a)
    if not 1 <= i <= len(mu):
        raise NoSuchIndex(f"row {i} out of range 1..{len(mu)}")
    return next(r for r in _removable(mu, a) if r >= i)


def _strip_cells(nu: Partition, inner: Partition, value: int):
    # cells of nu/inner, top to bottom, left to right
    return tuple(
        (i, j, value)
        for i in range(1, len(nu) + 1)
        for j in range(inner.part(i) + 1, nu.part(i) + 1)
    )


def _assemble(mu: Partition, steps: Sequence[TraceRecord]) -> Tableau:
    grid = [[0] * m for m in mu]
    for rec in steps:
        for i, j, v in rec.assignments:
            grid[i - 1][j - 1] = v
    return Tableau(mu, tuple(tuple(r) for r in grid))


def _ones(nu: Partition) -> tuple[tuple[int, int, int], ...]:
    return tuple((1, j, 1) for j in range(1, nu.part(1) + 1))


def greatest_tableau_trace(mu, a) -> tuple[Tableau, list[TraceRecord]]:
    mu, a = _coerce(mu, a)
    _require_dominating(mu, a)
    nu, b = mu, a
    steps = []
    while len(b) > 1:
        r = rho(nu, b)
        steps.append(TraceRecord(len(steps) + 1, nu, b, rho=r, assignments=_strip_cells(nu, r, len(b))))
        nu, b = r, drop_last(b)
    if b:
        steps.append(TraceRecord(len(steps) + 1, nu, b, assignments=_ones(nu)))
    return _assemble(mu, steps), steps


def greatest_tableau(mu: Sequence[int], a: Sequence[int]) -> Tableau:
    """The greatest element of STab(mu, a)."""
    return greatest_tableau_trace(mu, a)[0]


def removable_fill_tableau_trace(mu, a) -> tuple[Tableau, list[TraceRecord]]:
    mu, a = _coerce(mu, a)
    _require_dominating(mu, a)
    nu, b = mu, a
    steps = []
    while len(b) > 1:
        l = _removable(nu, b)[0]
        shrunk = decrement_part(nu, l)
        r = shrunk if b.last == 1 else rho(shrunk, tilde(b))
        steps.append(
            TraceRecord(len(steps) + 1, nu, b, rho=r, l=l, assignments=_strip_cells(nu, r, len(b)))
        )
        nu, b = r, drop_last(b)
    if b:
        steps.append(TraceRecord(len(steps) + 1, nu, b, assignments=_ones(nu)))
    return _assemble(mu, steps), steps


def removable_fill_tableau(mu: Sequence[int], a: Sequence[int]) -> Tableau:
    """A tableau whose topmost h-valued row end sits at row l(mu, a)."""
    return removable_fill_tableau_trace(mu, a)[0]


def _least(mu: Partition, a: Composition, start: int):
    n = a.n
    prefix = a.prefix_sums()
    # after i removals the top value changes exactly when n - i is a prefix sum of a'
    resets = frozenset(n - p for p in prefix[:-1])
    nu, b = mu, a
    floor_ = start
    steps = []
    a_seq, l_seq, mu_seq = [a], [start], [mu]
    for i in range(n):
        m = n - i
        t = bisect_left(prefix, m) + 1
        floor_used = 1 if i in resets else floor_
        l = next(r for r in _removable(nu, b) if r >= floor_used)
        cell = (l, nu.part(l), t)
        final = m == 1
        steps.append(
            TraceRecord(
                i + 1,
                nu,
                b,
                l=None if final else l,
                l_prime=floor_used,
                m=m,
                h=None if final else t,
                assignments=(cell,),
            )
        )
        nu, b = decrement_part(nu, l), tilde(b)
        floor_ = l
        a_seq.append(b)
        l_seq.append(l)
        mu_seq.append(nu)
    trace = LeastTrace(tuple(a_seq), tuple(l_seq), tuple(mu_seq), resets)
    return _assemble(mu, steps), steps, trace


def least_tableau_trace(mu, a) -> tuple[Tableau, list[TraceRecord]]:
    mu, a = _coerce(mu, a)
    _require_dominating(mu, a)
    tab, steps, _ = _least(mu, a, 1)
    return tab, steps


def least_tableau(mu: Sequence[int], a: Sequence[int]) -> Tableau:
    """The least element of STab(mu, a)."""
    return least_tableau_trace(mu, a)[0]


def least_tableau_with_floor_trace(mu, a, r: int) -> tuple[Tableau, list[TraceRecord], LeastTrace]:
    mu, a = _coerce(mu, a)
    _require_dominating(mu, a)
    if not a:
        raise InvalidFloor("the empty composition admits no floor")
    if r not in _removable(mu, a):
        raise InvalidFloor(f"row {r} is not removable for ({format_sequence(mu)}; {format_sequence(a)})")
    s = s_index(mu, a)
    if r > s:
        raise InvalidFloor(f"row {r} lies below s(mu, a) = {s}")
    return _least(mu, a, r)


def least_tableau_with_floor(mu: Sequence[int], a: Sequence[int], r: int) -> Tableau:
    """Least tableau among those whose topmost h-valued row end is at row >= r."""
    return least_tableau_with_floor_trace(mu, a, r)[0]


def first_top_row(t: Tableau) -> int:
    """min{i : T(i, mu_i) = h} where h is the largest entry."""
    h = t.max_entry
    return next(i for i, row in enumerate(t.rows, 1) if row[-1] == h)
