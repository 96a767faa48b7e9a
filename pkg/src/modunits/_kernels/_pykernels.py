"""Reference kernels on lists of Python ints.

The Cython module ``_ckernels`` implements the same four functions and must
agree with these bit for bit.
"""

from __future__ import annotations


def mul_trunc(a: list[int], b: list[int], n: int) -> list[int]:
    """Cauchy product of ``a`` and ``b`` truncated to ``n`` terms."""
    la = min(len(a), n)
    lb = min(len(b), n)
    out = [0] * n
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        for j in range(min(lb, n - i)):
            out[i + j] += ai * b[j]
    return out


def div_unit_trunc(a: list[int], b: list[int], n: int) -> list[int]:
    """Series ``c`` with ``c * b == a`` mod ``q**n``; needs ``b[0] in (1, -1)``."""
    b0 = b[0]
    if b0 not in (1, -1):
        raise ValueError("div_unit_trunc needs a unit constant term")
    lb = len(b)
    out = [0] * n
    for k in range(n):
        acc = a[k] if k < len(a) else 0
        for j in range(1, min(k, lb - 1) + 1):
            acc -= b[j] * out[k - j]
        out[k] = acc * b0
    return out


def eta_recurrence(g: list[int], n: int) -> list[int]:
    """Coefficients ``p`` of ``exp(sum_j g[j] q**j / j)`` to ``n`` terms.

    Solves ``j * p[j] = sum_{i=1..j} g[i] * p[j-i]`` with ``p[0] = 1``; the
    division by ``j`` is exact whenever ``g`` comes from an integral eta
    product.
    """
    p = [0] * n
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


def axpy_ff(row: list[int], prow: list[int], rl: int, pl: int) -> list[int]:
    """Fraction-free elimination step ``pl * row - rl * prow``."""
    return [pl * x - rl * y for x, y in zip(row, prow)]
