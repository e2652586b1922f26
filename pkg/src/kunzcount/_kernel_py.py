"""Pure-Python lattice-point kernel, used when the compiled extension is absent.

Every constraint arrives normalised to ``sum_j A[c][j] * x_j >= b[c]``.
Variables are assigned in index order; at depth ``k`` each constraint that
mentions ``x_k`` yields a bound on ``x_k`` from the already-assigned prefix
and the static box of the still-free suffix.  A constraint is enforced
exactly at the depth of its last nonzero coefficient, so leaves need no
extra check.
"""
from __future__ import annotations

from typing import Iterator, Sequence


def _prepare(A, b, lo, hi):
    n = len(lo)
    C = len(A)
    rows = [[] for _ in range(n)]
    for c in range(C):
        for k in range(n):
            if A[c][k]:
                rows[k].append(c)
    # suffix_max[k][c]: largest value sum_{j>k} A[c][j] x_j can take on the box
    suffix_max = [[0] * C for _ in range(n)]
    for c in range(C):
        acc = 0
        for k in range(n - 1, -1, -1):
            suffix_max[k][c] = acc
            a = A[c][k]
            acc += a * hi[k] if a > 0 else a * lo[k]
    return rows, suffix_max


def _bounds(k, partial, A, b, lo, hi, rows, suffix_max):
    low, high = lo[k], hi[k]
    smax = suffix_max[k]
    for c in rows[k]:
        a = A[c][k]
        r = b[c] - partial[c] - smax[c]
        if a > 0:
            v = -((-r) // a)
            if v > low:
                low = v
        else:
            # a < 0: a*x >= r  <=>  x <= floor(r / a)
            v = (-r) // (-a)
            if v < high:
                high = v
    return low, high


def count_points(A: Sequence[Sequence[int]], b: Sequence[int],
                 lo: Sequence[int], hi: Sequence[int]) -> int:
    n = len(lo)
    if n == 0:
        return 1 if all(v <= 0 for v in b) else 0
    if any(l > h for l, h in zip(lo, hi)):
        return 0
    rows, suffix_max = _prepare(A, b, lo, hi)
    C = len(A)
    last = n - 1

    def dfs(k, partial):
        low, high = _bounds(k, partial, A, b, lo, hi, rows, suffix_max)
        if low > high:
            return 0
        if k == last:
            return high - low + 1
        total = 0
        touched = rows[k]
        for x in range(low, high + 1):
            nxt = partial[:]
            for c in touched:
                nxt[c] += A[c][k] * x
            total += dfs(k + 1, nxt)
        return total

    return dfs(0, [0] * C)


def iter_points(A: Sequence[Sequence[int]], b: Sequence[int],
                lo: Sequence[int], hi: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield every lattice point in lexicographic order."""
    n = len(lo)
    if n == 0:
        if all(v <= 0 for v in b):
            yield ()
        return
    if any(l > h for l, h in zip(lo, hi)):
        return
    rows, suffix_max = _prepare(A, b, lo, hi)
    C = len(A)
    point = [0] * n

    def dfs(k, partial):
        low, high = _bounds(k, partial, A, b, lo, hi, rows, suffix_max)
        for x in range(low, high + 1):
            point[k] = x
            if k == n - 1:
                yield tuple(point)
                continue
            nxt = partial[:]
            for c in rows[k]:
                nxt[c] += A[c][k] * x
            yield from dfs(k + 1, nxt)

    yield from dfs(0, [0] * C)
