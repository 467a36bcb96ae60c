"""Brute-force oracles: exhaustive STab(mu, a), Kostka numbers, the poset.

Nothing here relies on the constructions in :mod:`sstableaux.algorithms`;
it only fills diagrams by backtracking and compares the results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import kernel
from .core import Composition, Partition
from .errors import CapExceeded, NoSuchIndex, Overflow, SumMismatch
from .tableau import ComparisonResult, Tableau, compare_levels, level_shapes

DEFAULT_CAP = 20


@dataclass(frozen=True)
class PosetSummary:
    """STab(mu, a) with its order.

    ``covers`` holds ``(lower, upper)`` index pairs into ``elements``.
    """

    elements: tuple[Tableau, ...]
    covers: tuple[tuple[int, int], ...]
    greatest: Optional[int]
    least: Optional[int]
    is_total_order: bool

    def __len__(self):
        return len(self.elements)


def _prepare(mu, a, cap) -> tuple[Partition, Composition]:
    mu, a = Partition(mu), Composition(a)
    if mu.n != a.n:
        raise SumMismatch(f"|mu| = {mu.n} but |a| = {a.n}")
    if mu.n > cap:
        raise CapExceeded(f"n = {mu.n} exceeds the enumeration cap {cap}")
    return mu, a


def _to_tableau(mu: Partition, word: Sequence[int]) -> Tableau:
    rows, pos = [], 0
    for m in mu:
        rows.append(tuple(word[pos : pos + m]))
        pos += m
    return Tableau(mu, tuple(rows))


def enumerate_tableaux(mu: Sequence[int], a: Sequence[int], cap: int = DEFAULT_CAP) -> list[Tableau]:
    """Every semistandard tableau of shape ``mu`` and weight ``a``.

    Order is lexicographic in the row-major reading word.
    """
    mu, a = _prepare(mu, a, cap)
    return [_to_tableau(mu, w) for w in kernel.enumerate_fillings(mu, a)]


def kostka(mu: Sequence[int], a: Sequence[int], cap: int = DEFAULT_CAP) -> int:
    mu, a = _prepare(mu, a, cap)
    try:
        return int(kernel.count_fillings(mu, a))
    except OverflowError as exc:
        raise Overflow(str(exc)) from exc


def _poset(elements: Sequence[Tableau], h: int) -> PosetSummary:
    size = len(elements)
    levels = [level_shapes(t, h) for t in elements]
    # above[x]: bitmask of y with x < y
    above = [0] * size
    total = True
    for x in range(size):
        for y in range(x + 1, size):
            res = compare_levels(levels[x], levels[y])
            if res is ComparisonResult.LESS:
                above[x] |= 1 << y
            elif res is ComparisonResult.GREATER:
                above[y] |= 1 << x
            elif res is ComparisonResult.INCOMPARABLE:
                total = False
    covers = []
    for x in range(size):
        implied = 0
        mask = above[x]
        while mask:
            low = mask & -mask
            implied |= above[low.bit_length() - 1]
            mask ^= low
        direct = above[x] & ~implied
        while direct:
            low = direct & -direct
            covers.append((x, low.bit_length() - 1))
            direct ^= low
    everyone = (1 << size) - 1
    least = [x for x in range(size) if above[x] | (1 << x) == everyone]
    greatest = [y for y in range(size) if all(above[x] >> y & 1 for x in range(size) if x != y)]
    return PosetSummary(
        elements=tuple(elements),
        covers=tuple(sorted(covers)),
        greatest=greatest[0] if len(greatest) == 1 else None,
        least=least[0] if len(least) == 1 else None,
        is_total_order=total,
    )


def build_poset(mu: Sequence[int], a: Sequence[int], cap: int = DEFAULT_CAP) -> PosetSummary:
    """Enumerate STab(mu, a), compare all pairs and reduce to the Hasse diagram."""
    elements = enumerate_tableaux(mu, a, cap)
    return _poset(elements, len(a))


def removable_oracle(mu: Sequence[int], a: Sequence[int], r: int, cap: int = DEFAULT_CAP) -> bool:
    """True iff some T in STab(mu, a) has its largest value h at the end of row ``r``."""
    mu, a = _prepare(mu, a, cap)
    if not 1 <= r <= len(mu):
        raise NoSuchIndex(f"row {r} out of range 1..{len(mu)}")
    h = len(a)
    return any(t.rows[r - 1][-1] == h for t in enumerate_tableaux(mu, a, cap))


def to_dot(poset: PosetSummary, name: str = "stab") -> str:
    """Graphviz digraph of the Hasse diagram, edges pointing upward."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for t in poset.elements:
        lines.append(f'  "{t.label()}";')
    for lo, hi in poset.covers:
        lines.append(f'  "{poset.elements[lo].label()}" -> "{poset.elements[hi].label()}";')
    lines.append("}")
    return "\n".join(lines)
