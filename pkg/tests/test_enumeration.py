import re

import pytest

from sstableaux import kernel
from sstableaux.core import compositions_of, dominates, partitions_of, sort_to_partition
from sstableaux.enumeration import (
    build_poset,
    enumerate_tableaux,
    kostka,
    removable_oracle,
    to_dot,
)
from sstableaux.errors import CapExceeded, NoSuchIndex, SumMismatch
from sstableaux.tableau import ComparisonResult, Tableau, compare, validate

MU, A = (4, 4, 1, 1), (1, 3, 2, 2, 2)


def strip_fillings(mu, a):
    """All tableaux via the horizontal-strip recursion on the largest value."""
    mu = tuple(mu)
    if not a:
        return [[]] if not mu else []
    h, size = len(a), a[-1]
    out = []

    def shrink(i, left, inner):
        if i == len(mu):
            if left == 0:
                yield tuple(x for x in inner if x)
            return
        below = mu[i + 1] if i + 1 < len(mu) else 0
        for keep in range(mu[i], below - 1, -1):
            take = mu[i] - keep
            if take <= left:
                yield from shrink(i + 1, left - take, inner + [keep])

    for inner in shrink(0, size, []):
        for sub in strip_fillings(inner, a[:-1]):
            rows = [list(r) for r in sub] + [[] for _ in range(len(mu) - len(sub))]
            out.append([rows[i] + [h] * (mu[i] - len(rows[i])) for i in range(len(mu))])
    return out


def all_pairs(max_n):
    for n in range(0, max_n + 1):
        for mu in partitions_of(n):
            for a in compositions_of(n):
                yield mu, a


@pytest.fixture(params=sorted(kernel.BACKENDS))
def backend(request):
    previous = kernel.backend()
    kernel.set_backend(request.param)
    yield request.param
    kernel.set_backend(previous)


def test_counterexample_is_empty(backend):
    assert enumerate_tableaux((5, 3), (2, 6)) == []
    assert kostka((5, 3), (2, 6)) == 0


def test_standard_shape(backend):
    found = [[list(r) for r in t.rows] for t in enumerate_tableaux((2, 1), (1, 1, 1))]
    assert found == [[[1, 2], [3]], [[1, 3], [2]]]
    assert kostka((2, 1), (1, 1, 1)) == 2


def test_single_row_is_forced(backend):
    for a in compositions_of(5):
        assert len(enumerate_tableaux((5,), a)) == 1


def test_small_counts(backend):
    assert kostka((1, 1), (2,)) == 0
    assert kostka((), ()) == 1


def test_running_example_count(backend):
    found = enumerate_tableaux(MU, A)
    assert len(found) == len(strip_fillings(MU, A)) == 7
    for witness in (
        [[1, 2, 2, 2], [3, 3, 4, 5], [4], [5]],
        [[1, 2, 2, 4], [2, 3, 3, 5], [4], [5]],
        [[1, 2, 2, 4], [2, 3, 5, 5], [3], [4]],
    ):
        assert Tableau.from_rows(witness) in found


def test_matches_strip_recursion(backend):
    for mu, a in all_pairs(7):
        got = enumerate_tableaux(mu, a)
        expected = sorted(tuple(v for r in t for v in r) for t in strip_fillings(mu, a))
        assert [t.reading_word() for t in got] == expected
        assert kostka(mu, a) == len(expected)
        assert all(validate(t, mu, a) for t in got)


def test_backends_agree():
    assert "python" in kernel.BACKENDS
    impls = list(kernel.BACKENDS.values())
    for mu, a in all_pairs(7):
        words = [impl.enumerate_fillings(mu, a) for impl in impls]
        counts = [impl.count_fillings(mu, a) for impl in impls]
        assert all(w == words[0] for w in words)
        assert all(c == counts[0] == len(words[0]) for c in counts)


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernel.set_backend("fortran")


def test_nonempty_iff_dominance():
    for mu, a in all_pairs(8):
        assert bool(enumerate_tableaux(mu, a)) == dominates(mu, sort_to_partition(a))


def test_kostka_weight_rearrangement():
    for mu, a in all_pairs(7):
        assert kostka(mu, a) == kostka(mu, sort_to_partition(a))


def test_guards():
    with pytest.raises(SumMismatch):
        enumerate_tableaux((3,), (1, 1))
    with pytest.raises(CapExceeded):
        kostka((21,), (21,))
    assert kostka((21,), (21,), cap=21) == 1
    with pytest.raises(NoSuchIndex):
        removable_oracle(MU, A, 5)


class TestPoset:
    def test_remark_total_order(self):
        assert build_poset(MU, (1, 2, 2, 2, 3)).is_total_order

    def test_remark_not_total(self):
        poset = build_poset(MU, A)
        assert not poset.is_total_order
        t = Tableau.from_rows([[1, 2, 2, 3], [2, 4, 4, 5], [3], [5]])
        s = Tableau.from_rows([[1, 2, 2, 4], [2, 3, 3, 5], [4], [5]])
        assert t in poset.elements and s in poset.elements

    def test_single_element(self):
        poset = build_poset((3, 1), (3, 1))
        assert len(poset) == 1 and poset.greatest == poset.least == 0 and poset.covers == ()

    def test_empty(self):
        poset = build_poset((5, 3), (2, 6))
        assert len(poset) == 0 and poset.greatest is None and poset.least is None

    def test_covers_are_transitive_reduction(self):
        for mu, a in all_pairs(6):
            poset = build_poset(mu, a)
            elems = poset.elements
            less = {
                (i, j)
                for i, x in enumerate(elems)
                for j, y in enumerate(elems)
                if compare(x, y) is ComparisonResult.LESS
            }
            expected = {
                (i, j)
                for i, j in less
                if not any((i, k) in less and (k, j) in less for k in range(len(elems)))
            }
            assert set(poset.covers) == expected
            assert list(poset.covers) == sorted(poset.covers)

    def test_dot(self):
        poset = build_poset(MU, A)
        dot = to_dot(poset)
        assert dot.startswith("digraph stab {") and dot.endswith("}")
        assert '"1224|2355|3|4";' in dot
        edges = re.findall(r'"([^"]+)" -> "([^"]+)";', dot)
        assert len(edges) == len(poset.covers)
        labels = [t.label() for t in poset.elements]
        for lo, hi in edges:
            lower = poset.elements[labels.index(lo)]
            upper = poset.elements[labels.index(hi)]
            assert compare(lower, upper) is ComparisonResult.LESS


@pytest.mark.parametrize("r, expected", [(1, False), (2, True), (3, False), (4, True)])
def test_removable_oracle(r, expected):
    assert removable_oracle(MU, A, r) is expected


def test_fallback_when_extension_missing(monkeypatch):
    import importlib
    import sys

    import sstableaux

    monkeypatch.setitem(sys.modules, "sstableaux._ckernel", None)
    monkeypatch.delattr(sstableaux, "_ckernel", raising=False)
    reloaded = importlib.reload(kernel)
    try:
        assert reloaded.backend() == "python"
        assert sorted(reloaded.BACKENDS) == ["python"]
        assert reloaded.count_fillings(MU, A) == 7
    finally:
        monkeypatch.undo()
        importlib.reload(kernel)
