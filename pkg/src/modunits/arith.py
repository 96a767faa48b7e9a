"""Integer and rational helpers shared by every other module.

All scalars are Python ints or :class:`fractions.Fraction`; nothing here
rounds.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import isqrt, prod

__all__ = [
    "Fraction",
    "factorize",
    "is_prime",
    "radical",
    "divisors",
    "sigma",
    "euler_phi",
    "bernoulli",
    "kronecker_minus4",
    "kronecker_minus3",
    "is_rational_square",
]


def _check_positive(name: str, n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n <= 0:
        raise ValueError(f"{name} must be >= 1, got {n}")


# Deterministic Miller-Rabin witnesses, valid for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as sorted ``(prime, exponent)`` pairs.

    Trial division, with a primality short-circuit on the cofactor. Meant
    for levels, not cryptographic sizes.

    >>> factorize(60)
    ((2, 2), (3, 1), (5, 1))
    """
    _check_positive("n", n)
    out = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            r = 0
            while m % p == 0:
                m //= p
                r += 1
            out.append((p, r))
    p = 5
    step = 2
    done = m == 1 or is_prime(m)
    while not done and p * p <= m:
        if m % p == 0:
            r = 0
            while m % p == 0:
                m //= p
                r += 1
            out.append((p, r))
            done = m == 1 or is_prime(m)
        p += step
        step = 6 - step
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def radical(n: int) -> int:
    return prod(p for p, _ in factorize(n))


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of ``n`` in increasing order."""
    _check_positive("n", n)
    divs = [1]
    for p, r in factorize(n):
        divs = [d * p**e for d in divs for e in range(r + 1)]
    return tuple(sorted(divs))


def sigma(k: int, n: int) -> int:
    """Sum of ``d**k`` over the divisors ``d`` of ``n``."""
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"k must be an int >= 0, got {k!r}")
    _check_positive("n", n)
    out = 1
    for p, r in factorize(n):
        if k == 0:
            out *= r + 1
            continue
        pk = p**k
        out *= (pk ** (r + 1) - 1) // (pk - 1)
    return out


def euler_phi(n: int) -> int:
    _check_positive("n", n)
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


# Akiyama-Tanigawa working row plus the B_j read off so far; both grow
# together under the lock.
_bern_lock = threading.Lock()
_at_row: list[Fraction] = []
_bern_cache: list[Fraction] = []


def _bernoulli_upto(m: int) -> None:
    with _bern_lock:
        while len(_bern_cache) <= m:
            j = len(_at_row)
            _at_row.append(Fraction(1, j + 1))
            for i in range(j, 0, -1):
                _at_row[i - 1] = i * (_at_row[i - 1] - _at_row[i])
            _bern_cache.append(_at_row[0])


def bernoulli(m: int) -> Fraction:
    """The Bernoulli number ``B_m`` for even ``m >= 2``.

    >>> bernoulli(12)
    Fraction(-691, 2730)
    """
    if not isinstance(m, int) or m < 2 or m % 2:
        raise ValueError(f"bernoulli index must be even and >= 2, got {m!r}")
    _bernoulli_upto(m)
    return _bern_cache[m]


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"expected a prime, got {p!r}")


def kronecker_minus4(p: int) -> int:
    """The symbol (-4/p) at a prime ``p``."""
    _require_prime(p)
    if p == 2:
        return 0
    return 1 if p % 4 == 1 else -1


def kronecker_minus3(p: int) -> int:
    """The symbol (-3/p) at a prime ``p``."""
    _require_prime(p)
    if p == 3:
        return 0
    return 1 if p % 3 == 1 else -1


def _is_int_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def is_rational_square(x: Fraction) -> bool:
    """True when ``x`` is the square of a rational number."""
    x = Fraction(x)
    return _is_int_square(x.numerator) and _is_int_square(x.denominator)
