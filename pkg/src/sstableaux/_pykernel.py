"""Pure-Python backtracking kernel (fallback for ``_ckernel``).

Cells are filled in row-major order, smallest feasible value first, so
fillings come out in lexicographic order of their reading words.
"""


def _cells(shape):
    return [(i, j) for i, m in enumerate(shape) for j in range(m)]


def _search(shape, weight, emit):
    h = len(weight)
    remaining = [0] + list(weight)
    grid = [[0] * m for m in shape]
    cells = _cells(shape)
    ncells = len(cells)

    def fill(pos):
        if pos == ncells:
            emit(grid)
            return
        i, j = cells[pos]
        lo = grid[i][j - 1] if j else 1
        if i and grid[i - 1][j] + 1 > lo:
            lo = grid[i - 1][j] + 1
        row = grid[i]
        for v in range(lo, h + 1):
            if remaining[v]:
                remaining[v] -= 1
                row[j] = v
                fill(pos + 1)
                remaining[v] += 1
        row[j] = 0

    fill(0)


def enumerate_fillings(shape, weight):
    """Reading words of all semistandard fillings of ``shape`` with ``weight``."""
    out = []
    _search(tuple(shape), tuple(weight), lambda g: out.append(tuple(v for r in g for v in r)))
    return out


def count_fillings(shape, weight):
    box = [0]

    def bump(_):
        box[0] += 1

    _search(tuple(shape), tuple(weight), bump)
    return box[0]
