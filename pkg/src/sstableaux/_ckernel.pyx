# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernel; same contract as ``_pykernel``."""

from libc.stdint cimport UINT64_MAX
from libc.stdlib cimport malloc, free


cdef struct Search:
    int ncells
    int h
    int *row_of      # row index per cell
    int *left        # cell index of left neighbour or -1
    int *above       # cell index of upper neighbour or -1
    int *grid        # value per cell
    int *remaining   # remaining multiplicity per value, 1-based
    unsigned long long count
    bint overflow


cdef int _setup(Search *s, tuple shape, tuple weight) except -1:
    cdef int i, j, pos, k = len(shape)
    cdef int ncells = 0
    s.row_of = s.left = s.above = s.grid = s.remaining = NULL
    for i in range(k):
        ncells += <int>shape[i]
    s.ncells = ncells
    s.h = len(weight)
    s.count = 0
    s.overflow = False
    s.row_of = <int *>malloc(max(ncells, 1) * sizeof(int))
    s.left = <int *>malloc(max(ncells, 1) * sizeof(int))
    s.above = <int *>malloc(max(ncells, 1) * sizeof(int))
    s.grid = <int *>malloc(max(ncells, 1) * sizeof(int))
    s.remaining = <int *>malloc((s.h + 1) * sizeof(int))
    if not (s.row_of and s.left and s.above and s.grid and s.remaining):
        raise MemoryError()
    s.remaining[0] = 0
    for i in range(s.h):
        s.remaining[i + 1] = <int>weight[i]
    cdef int row_start = 0, prev_start = -1
    pos = 0
    for i in range(k):
        for j in range(<int>shape[i]):
            s.row_of[pos] = i
            s.left[pos] = pos - 1 if j else -1
            s.above[pos] = prev_start + j if i else -1
            s.grid[pos] = 0
            pos += 1
        prev_start = row_start
        row_start = pos
    return 0


cdef void _teardown(Search *s) noexcept:
    free(s.row_of)
    free(s.left)
    free(s.above)
    free(s.grid)
    free(s.remaining)


cdef int _lower(Search *s, int pos) noexcept nogil:
    cdef int lo = 1
    if s.left[pos] >= 0:
        lo = s.grid[s.left[pos]]
    if s.above[pos] >= 0 and s.grid[s.above[pos]] + 1 > lo:
        lo = s.grid[s.above[pos]] + 1
    return lo


cdef void _count(Search *s, int pos) noexcept nogil:
    cdef int v
    if pos == s.ncells:
        if s.count == UINT64_MAX:
            s.overflow = True
        else:
            s.count += 1
        return
    for v in range(_lower(s, pos), s.h + 1):
        if s.remaining[v]:
            s.remaining[v] -= 1
            s.grid[pos] = v
            _count(s, pos + 1)
            s.remaining[v] += 1
    s.grid[pos] = 0


cdef int _collect(Search *s, int pos, list out) except -1:
    cdef int v, c
    if pos == s.ncells:
        out.append(tuple([s.grid[c] for c in range(s.ncells)]))
        return 0
    for v in range(_lower(s, pos), s.h + 1):
        if s.remaining[v]:
            s.remaining[v] -= 1
            s.grid[pos] = v
            _collect(s, pos + 1, out)
            s.remaining[v] += 1
    s.grid[pos] = 0
    return 0


def enumerate_fillings(shape, weight):
    """Reading words of all semistandard fillings of ``shape`` with ``weight``."""
    cdef Search s
    cdef list out = []
    shape, weight = tuple(shape), tuple(weight)
    try:
        _setup(&s, shape, weight)
        _collect(&s, 0, out)
    finally:
        _teardown(&s)
    return out


def count_fillings(shape, weight):
    cdef Search s
    shape, weight = tuple(shape), tuple(weight)
    try:
        _setup(&s, shape, weight)
        with nogil:
            _count(&s, 0)
        if s.overflow:
            raise OverflowError("filling count exceeds 64 bits")
        return s.count
    finally:
        _teardown(&s)
