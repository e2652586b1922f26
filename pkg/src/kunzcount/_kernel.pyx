# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice-point counter; same algorithm as ``_kernel_py.count_points``.

Callers guarantee every intermediate sum fits in int64 (see
``polytope._check_magnitudes``).
"""
from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef inline i64 floordiv(i64 a, i64 b) nogil:
    cdef i64 q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


def count_points(A, b, lo, hi):
    cdef Py_ssize_t n = len(lo)
    cdef Py_ssize_t C = len(A)
    cdef Py_ssize_t c, k, j
    if n == 0:
        return 1 if all(v <= 0 for v in b) else 0
    for k in range(n):
        if lo[k] > hi[k]:
            return 0

    cdef i64 *Am = <i64 *> malloc(C * n * sizeof(i64))
    cdef i64 *bv = <i64 *> malloc(C * sizeof(i64))
    cdef i64 *lov = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *hiv = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *smax = <i64 *> malloc(n * C * sizeof(i64))
    cdef i64 *partial = <i64 *> malloc((n + 1) * C * sizeof(i64))
    cdef int *rows = <int *> malloc(n * C * sizeof(int))
    cdef int *nrows = <int *> malloc(n * sizeof(int))
    cdef i64 *xs = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *xhi = <i64 *> malloc(n * sizeof(i64))
    if not (Am and bv and lov and hiv and smax and partial and rows and nrows and xs and xhi):
        free(Am); free(bv); free(lov); free(hiv); free(smax)
        free(partial); free(rows); free(nrows); free(xs); free(xhi)
        raise MemoryError()

    cdef i64 acc, a, r, v, low, high, total = 0
    cdef int depth
    try:
        for c in range(C):
            bv[c] = b[c]
            row = A[c]
            for k in range(n):
                Am[c * n + k] = row[k]
        for k in range(n):
            lov[k] = lo[k]
            hiv[k] = hi[k]
            nrows[k] = 0
        for c in range(C):
            acc = 0
            for k in range(n - 1, -1, -1):
                smax[k * C + c] = acc
                a = Am[c * n + k]
                if a > 0:
                    acc += a * hiv[k]
                else:
                    acc += a * lov[k]
                if a != 0:
                    rows[k * C + nrows[k]] = <int> c
                    nrows[k] += 1
            partial[c] = 0

        with nogil:
            depth = 0
            # entering a depth: compute its feasible interval
            while True:
                low = lov[depth]
                high = hiv[depth]
                for j in range(nrows[depth]):
                    c = rows[depth * C + j]
                    a = Am[c * n + depth]
                    r = bv[c] - partial[depth * C + c] - smax[depth * C + c]
                    if a > 0:
                        v = -floordiv(-r, a)
                        if v > low:
                            low = v
                    else:
                        v = floordiv(-r, -a)
                        if v < high:
                            high = v
                if depth == n - 1:
                    if low <= high:
                        total += high - low + 1
                    low = 1
                    high = 0
                else:
                    xs[depth] = low
                    xhi[depth] = high
                # advance: find the deepest level with a remaining value
                if depth == n - 1 or low > high:
                    if depth == n - 1:
                        depth -= 1
                    while depth >= 0:
                        if xs[depth] < xhi[depth]:
                            xs[depth] += 1
                            break
                        depth -= 1
                    if depth < 0:
                        break
                # descend from depth with xs[depth] fixed
                for c in range(C):
                    partial[(depth + 1) * C + c] = partial[depth * C + c]
                for j in range(nrows[depth]):
                    c = rows[depth * C + j]
                    partial[(depth + 1) * C + c] += Am[c * n + depth] * xs[depth]
                depth += 1
    finally:
        free(Am); free(bv); free(lov); free(hiv); free(smax)
        free(partial); free(rows); free(nrows); free(xs); free(xhi)
    return total
