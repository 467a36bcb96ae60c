"""Exhaustive cross-checks between the constructions and the brute-force oracles.

Each check sweeps every partition ``mu`` and composition ``a`` of every
``n <= max_n`` and returns a :class:`CheckResult`.  The first failing
input is reported in ``detail``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .algorithms import (
    candidate_partitions,
    first_top_row,
    greatest_tableau,
    is_nonempty,
    l_min,
    least_tableau,
    least_tableau_with_floor,
    removable_fill_tableau,
    removable_set,
    rho,
)
from .core import (
    Composition,
    Partition,
    compositions_of,
    decrement_part,
    dominates,
    partitions_of,
    s_index,
    sort_to_partition,
    tilde,
    tilde_lambda,
)
from .enumeration import build_poset, enumerate_tableaux, kostka, removable_oracle
from .tableau import ComparisonResult, compare, compare_recursive, validate

LE = (ComparisonResult.LESS, ComparisonResult.EQUAL)


@dataclass
class CheckResult:
    name: str
    max_n: int
    cases: int
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" -- {self.detail}" if self.detail else ""
        return f"[{status}] {self.name} (n <= {self.max_n}, {self.cases} cases){extra}"


class _Failure(Exception):
    pass


def pairs(max_n: int, dominating_only: bool = False, min_n: int = 0) -> Iterator[tuple[Partition, Composition]]:
    for n in range(min_n, max_n + 1):
        for mu in partitions_of(n):
            for a in compositions_of(n):
                if dominating_only and not dominates(mu, sort_to_partition(a)):
                    continue
                yield mu, a


def _run(name: str, max_n: int, body: Callable[[int], Iterator[object]]) -> CheckResult:
    cases = 0
    try:
        for _ in body(max_n):
            cases += 1
    except _Failure as exc:
        return CheckResult(name, max_n, cases, False, str(exc))
    return CheckResult(name, max_n, cases, True)


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise _Failure(msg)


def _dominance_partial_order(max_n):
    for n in range(max_n + 1):
        parts = list(partitions_of(n))
        for x in parts:
            _expect(dominates(x, x), f"not reflexive at {x}")
            for y in parts:
                if x != y and dominates(x, y):
                    _expect(not dominates(y, x), f"not antisymmetric at {x}, {y}")
                    for z in parts:
                        if dominates(y, z):
                            _expect(dominates(x, z), f"not transitive at {x}, {y}, {z}")
                yield x, y


def _tilde_lambda(max_n):
    for n in range(1, max_n + 1):
        for a in compositions_of(n):
            _expect(tilde_lambda(a) == sort_to_partition(tilde(a)), f"a={a}")
            yield a


def _decrement_lemma(max_n):
    for n in range(1, max_n + 1):
        parts = list(partitions_of(n))
        for mu in parts:
            for lam in parts:
                if not dominates(mu, lam):
                    continue
                psum_mu = mu.prefix_sums()
                psum_lam = lam.prefix_sums()
                for p in range(1, len(mu) + 1):
                    if mu.part(p) <= mu.part(p + 1):
                        continue
                    for q in range(1, len(lam) + 1):
                        if lam.part(q) <= lam.part(q + 1):
                            continue
                        lhs = dominates(decrement_part(mu, p), decrement_part(lam, q))
                        rhs = p >= q or all(
                            _psum(psum_mu, j) > _psum(psum_lam, j) for j in range(p, q)
                        )
                        _expect(lhs == rhs, f"mu={mu} lam={lam} p={p} q={q}")
                        yield mu, lam, p, q


def _psum(prefix, j):
    return prefix[j - 1] if j <= len(prefix) else prefix[-1]


def _nonempty(max_n):
    for mu, a in pairs(max_n):
        found = bool(enumerate_tableaux(mu, a))
        _expect(found == is_nonempty(mu, a), f"mu={mu} a={a}: enumeration says {found}")
        yield mu, a


def _extremes(max_n):
    for mu, a in pairs(max_n, dominating_only=True):
        poset = build_poset(mu, a)
        _expect(poset.greatest is not None, f"mu={mu} a={a}: no unique greatest")
        _expect(poset.least is not None, f"mu={mu} a={a}: no unique least")
        _expect(poset.elements[poset.greatest] == greatest_tableau(mu, a), f"mu={mu} a={a}: greatest differs")
        _expect(poset.elements[poset.least] == least_tableau(mu, a), f"mu={mu} a={a}: least differs")
        yield mu, a


def _removable_prop(max_n):
    for mu, a in pairs(max_n, dominating_only=True, min_n=1):
        removable = set(removable_set(mu, a))
        for r in range(1, len(mu) + 1):
            _expect(removable_oracle(mu, a, r) == (r in removable), f"mu={mu} a={a} r={r}")
            yield mu, a, r


def _interval(max_n):
    for mu, a in pairs(max_n, dominating_only=True, min_n=1):
        removable = removable_set(mu, a)
        lo = l_min(mu, a)
        expected = [i for i in range(lo, len(mu) + 1) if mu.part(i) > mu.part(i + 1)]
        _expect(removable == expected, f"mu={mu} a={a}: R={removable}")
        _expect(s_index(mu, a) in removable, f"mu={mu} a={a}: s not removable")
        yield mu, a


def _rho_greatest(max_n):
    for mu, a in pairs(max_n, dominating_only=True, min_n=1):
        found = candidate_partitions(mu, a)
        r = rho(mu, a)
        _expect(r in found, f"mu={mu} a={a}: rho={r} not a candidate")
        _expect(all(dominates(r, x) for x in found), f"mu={mu} a={a}: rho={r} not greatest")
        yield mu, a


def _subposet_least(max_n):
    for mu, a in pairs(max_n, dominating_only=True, min_n=1):
        elements = enumerate_tableaux(mu, a)
        s = s_index(mu, a)
        for r in removable_set(mu, a):
            if r > s:
                continue
            sub = [t for t in elements if first_top_row(t) >= r]
            minima = [x for x in sub if all(compare(x, y) in LE for y in sub)]
            _expect(len(minima) == 1, f"mu={mu} a={a} r={r}: {len(minima)} minima")
            _expect(least_tableau_with_floor(mu, a, r) == minima[0], f"mu={mu} a={a} r={r}")
            yield mu, a, r


def _compare_equivalence(max_n):
    for mu, a in pairs(max_n, dominating_only=True):
        elements = enumerate_tableaux(mu, a)
        for x in elements:
            for y in elements:
                _expect(compare(x, y) == compare_recursive(x, y), f"{x.label()} vs {y.label()}")
                yield x, y


def _kostka_invariance(max_n):
    for mu, a in pairs(max_n):
        _expect(kostka(mu, a) == kostka(mu, sort_to_partition(a)), f"mu={mu} a={a}")
        yield mu, a


def _constructions_valid(max_n):
    for mu, a in pairs(max_n, dominating_only=True, min_n=1):
        g = greatest_tableau(mu, a)
        u = removable_fill_tableau(mu, a)
        s = least_tableau(mu, a)
        for t in (g, u, s):
            _expect(validate(t, mu, a), f"mu={mu} a={a}: {t.label()} invalid")
        _expect(first_top_row(g) == s_index(mu, a), f"mu={mu} a={a}: greatest top row")
        _expect(first_top_row(u) == l_min(mu, a), f"mu={mu} a={a}: fill top row")
        yield mu, a


CHECKS = {
    "dominance is a partial order": _dominance_partial_order,
    "tilde_lambda(a) == lambda(tilde(a))": _tilde_lambda,
    "decrement dominance lemma": _decrement_lemma,
    "nonempty iff mu dominates lambda(a)": _nonempty,
    "poset extremes equal greatest/least constructions": _extremes,
    "removable oracle equals R(mu,a)": _removable_prop,
    "R(mu,a) is the corner interval from l(mu,a)": _interval,
    "rho(mu,a) is greatest in B(mu,a)": _rho_greatest,
    "floor-least is the subposet minimum": _subposet_least,
    "compare equals compare_recursive": _compare_equivalence,
    "kostka(mu,a) == kostka(mu,lambda(a))": _kostka_invariance,
    "constructions validate and hit l/s bounds": _constructions_valid,
}


def run_check(name: str, max_n: int) -> CheckResult:
    return _run(name, max_n, CHECKS[name])


def run_all(max_n: int = 7) -> list[CheckResult]:
    return [run_check(name, max_n) for name in CHECKS]
