"""Tableaux on Young diagrams and the level-by-level order on STab(mu, a)."""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Composition, Partition, dominates
from .errors import MixedPoset, ParseError, ShapeMismatch, ZeroCount


class ComparisonResult(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"
    INCOMPARABLE = "Incomparable"

    def flipped(self) -> ComparisonResult:
        if self is ComparisonResult.LESS:
            return ComparisonResult.GREATER
        if self is ComparisonResult.GREATER:
            return ComparisonResult.LESS
        return self


@dataclass(frozen=True)
class Tableau:
    """A filling of the Young diagram of ``shape``, stored row by row.

    ``rows[i - 1][j - 1]`` is the entry T(i, j).
    """

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "shape", Partition(self.shape))
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != len(self.shape) or any(len(r) != m for r, m in zip(rows, self.shape)):
            raise ShapeMismatch(
                f"row lengths {[len(r) for r in rows]} do not match shape {list(self.shape)}"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> Tableau:
        rows = tuple(tuple(r) for r in rows)
        return cls(Partition(len(r) for r in rows), rows)

    def __getitem__(self, cell: tuple[int, int]) -> int:
        i, j = cell
        return self.rows[i - 1][j - 1]

    def __iter__(self):
        return iter(self.rows)

    @property
    def max_entry(self) -> int:
        return max((r[-1] for r in self.rows), default=0)

    def cells(self):
        """Yield ``((i, j), value)`` in row-major order, 1-based."""
        for i, row in enumerate(self.rows, 1):
            for j, v in enumerate(row, 1):
                yield (i, j), v

    def is_semistandard(self) -> bool:
        for row in self.rows:
            if any(x < 1 for x in row):
                return False
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                return False
        return True

    def reading_word(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def label(self) -> str:
        """Row-concatenated label such as ``1224|2355|3|4``.

        Entries above 9 are wrapped in parentheses to keep labels unambiguous.
        """
        return "|".join("".join(str(v) if v < 10 else f"({v})" for v in row) for row in self.rows)

    def to_text(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.rows)

    def to_dict(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_text(cls, text: str) -> Tableau:
        rows = []
        for line in text.splitlines():
            if not line.strip():
                continue
            try:
                rows.append(tuple(int(tok) for tok in line.split(" ")))
            except ValueError as exc:
                raise ParseError(f"malformed tableau row {line!r}") from exc
        return cls.from_rows(rows)

    @classmethod
    def from_dict(cls, data: dict) -> Tableau:
        try:
            return cls(Partition(data["shape"]), tuple(tuple(r) for r in data["rows"]))
        except (KeyError, TypeError) as exc:
            raise ParseError("tableau JSON needs 'shape' and 'rows' arrays") from exc

    @classmethod
    def from_json(cls, text: str) -> Tableau:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed JSON: {exc}") from exc
        return cls.from_dict(data)


def weight(t: Tableau) -> Composition:
    """Occurrence counts of 1..max entry."""
    counts = Counter(t.reading_word())
    h = t.max_entry
    missing = [v for v in range(1, h + 1) if counts[v] == 0]
    if missing:
        raise ZeroCount(f"value {missing[0]} does not occur, so the weight is not a composition")
    return Composition(counts[v] for v in range(1, h + 1))


def validate(t: Tableau, mu: Sequence[int], a: Sequence[int]) -> bool:
    """True iff ``t`` is semistandard with shape ``mu`` and weight exactly ``a``."""
    mu = Partition(mu)
    if tuple(t.shape) != tuple(mu):
        raise ShapeMismatch(f"tableau shape {list(t.shape)} differs from {list(mu)}")
    if not t.is_semistandard():
        return False
    try:
        return tuple(weight(t)) == tuple(a)
    except ZeroCount:
        return False


def cumulative_shape(t: Tableau, p: int) -> Partition:
    """Row counts of entries ``<= p`` (trailing zero rows dropped)."""
    counts = [sum(1 for v in row if v <= p) for row in t.rows]
    while counts and counts[-1] == 0:
        counts.pop()
    return Partition(counts)


def _level_order(sigma: Partition, tau: Partition) -> ComparisonResult:
    # sigma is the S-side shape, tau the T-side shape
    if sigma == tau:
        return ComparisonResult.EQUAL
    if dominates(tau, sigma):
        return ComparisonResult.LESS
    if dominates(sigma, tau):
        return ComparisonResult.GREATER
    return ComparisonResult.INCOMPARABLE


def _check_same_poset(s: Tableau, t: Tableau) -> int:
    if tuple(s.shape) != tuple(t.shape):
        raise MixedPoset(f"shapes differ: {list(s.shape)} vs {list(t.shape)}")
    ws, wt = weight(s), weight(t)
    if ws != wt:
        raise MixedPoset(f"weights differ: {list(ws)} vs {list(wt)}")
    return len(ws)


def compare(s: Tableau, t: Tableau) -> ComparisonResult:
    """Order ``s`` against ``t``; LESS means ``s < t``.

    Levels p = h, h-1, ..., 1 are scanned and the first level whose
    cumulative shapes differ decides the outcome.
    """
    h = _check_same_poset(s, t)
    for p in range(h, 0, -1):
        res = _level_order(cumulative_shape(s, p), cumulative_shape(t, p))
        if res is not ComparisonResult.EQUAL:
            return res
    return ComparisonResult.EQUAL


def level_shapes(t: Tableau, h: int) -> tuple[Partition, ...]:
    """Cumulative shapes for p = h, h-1, ..., 1."""
    return tuple(cumulative_shape(t, p) for p in range(h, 0, -1))


def compare_levels(s_levels, t_levels) -> ComparisonResult:
    """:func:`compare` on precomputed :func:`level_shapes` signatures."""
    for sigma, tau in zip(s_levels, t_levels):
        res = _level_order(sigma, tau)
        if res is not ComparisonResult.EQUAL:
            return res
    return ComparisonResult.EQUAL


def restrict_below(t: Tableau, h: int) -> Tableau:
    """The subtableau of entries ``< h``."""
    rows = [tuple(v for v in row if v < h) for row in t.rows]
    while rows and not rows[-1]:
        rows.pop()
    return Tableau.from_rows(rows)


def compare_recursive(s: Tableau, t: Tableau) -> ComparisonResult:
    """Same order as :func:`compare`, by peeling off the top value."""
    h = _check_same_poset(s, t)
    return _compare_rec(s, t, h)


def _compare_rec(s: Tableau, t: Tableau, h: int) -> ComparisonResult:
    if h <= 1:
        return ComparisonResult.EQUAL if s == t else ComparisonResult.INCOMPARABLE
    s_low = restrict_below(s, h)
    t_low = restrict_below(t, h)
    res = _level_order(s_low.shape, t_low.shape)
    if res is not ComparisonResult.EQUAL:
        return res
    return _compare_rec(s_low, t_low, h - 1)
