# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same contracts as ``_pykernels``.

``mul_trunc`` takes a machine-word path when the worst-case coefficient of
the product provably fits in 63 bits, and falls back to Python ints
otherwise.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t


cdef int _bits(list xs, Py_ssize_t m):
    cdef Py_ssize_t i
    cdef int best = 0, b
    for i in range(m):
        b = (<object>xs[i]).bit_length()
        if b > best:
            best = b
    return best


cdef list _mul_small(list a, list b, Py_ssize_t la, Py_ssize_t lb, Py_ssize_t n):
    cdef int64_t *x = <int64_t *>malloc(la * sizeof(int64_t))
    cdef int64_t *y = <int64_t *>malloc(lb * sizeof(int64_t))
    cdef int64_t *z = <int64_t *>malloc(n * sizeof(int64_t))
    cdef Py_ssize_t i, j, top
    cdef int64_t xi
    if x == NULL or y == NULL or z == NULL:
        free(x); free(y); free(z)
        raise MemoryError()
    try:
        for i in range(la):
            x[i] = a[i]
        for j in range(lb):
            y[j] = b[j]
        for i in range(n):
            z[i] = 0
        for i in range(la):
            xi = x[i]
            if xi == 0:
                continue
            top = n - i
            if top > lb:
                top = lb
            for j in range(top):
                z[i + j] += xi * y[j]
        return [z[i] for i in range(n)]
    finally:
        free(x); free(y); free(z)


def mul_trunc(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t la = min(len(a), n)
    cdef Py_ssize_t lb = min(len(b), n)
    cdef Py_ssize_t i, j, top
    cdef list out
    cdef object ai
    if n <= 0:
        return []
    if la and lb and _bits(a, la) + _bits(b, lb) + (<object>min(la, lb)).bit_length() < 63:
        return _mul_small(a, b, la, lb, n)
    out = [0] * n
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        top = n - i
        if top > lb:
            top = lb
        for j in range(top):
            out[i + j] += ai * b[j]
    return out


def div_unit_trunc(list a, list b, Py_ssize_t n):
    cdef object b0 = b[0]
    cdef Py_ssize_t lb = len(b), la = len(a)
    cdef Py_ssize_t k, j, top
    cdef object acc
    cdef list out
    if b0 != 1 and b0 != -1:
        raise ValueError("div_unit_trunc needs a unit constant term")
    out = [0] * n
    for k in range(n):
        acc = a[k] if k < la else 0
        top = k
        if top > lb - 1:
            top = lb - 1
        for j in range(1, top + 1):
            acc -= b[j] * out[k - j]
        out[k] = acc * b0
    return out


def eta_recurrence(list g, Py_ssize_t n):
    cdef list p = [0] * n
    cdef Py_ssize_t i, j
    cdef object acc, gi, q, r
    if n:
        p[0] = 1
    for j in range(1, n):
        acc = 0
        for i in range(1, j + 1):
            gi = g[i]
            if gi:
                acc += gi * p[j - i]
        q, r = divmod(acc, j)
        if r:
            raise ArithmeticError(f"non-integral coefficient at q^{j}")
        p[j] = q
    return p


def axpy_ff(list row, list prow, object rl, object pl):
    cdef Py_ssize_t i, m = min(len(row), len(prow))
    return [pl * row[i] - rl * prow[i] for i in range(m)]
