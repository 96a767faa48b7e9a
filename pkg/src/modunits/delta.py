"""The strong modular unit ``Delta_N`` at every level ``N >= 1``.

:func:`delta_unit` builds the eta quotient by case analysis on the prime
factorization of ``N``: a small core quotient at a squarefree (or, for the
primes 2 and 3, a slightly larger) level, dilated by ``tau -> d tau``.
:func:`rho` and :func:`nu` give the weight and valuation from closed forms
and are kept separate from the construction so each can check the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import prod

from .arith import factorize
from .etaquot import EtaQuotient
from .qseries import QSeries

__all__ = ["DeltaUnit", "delta_unit", "rho", "nu"]


@dataclass(frozen=True)
class DeltaUnit:
    level: int
    core: EtaQuotient
    dilation: int
    quotient: EtaQuotient
    rho: int
    nu: int

    def expand(self, prec: int) -> QSeries:
        return self.quotient.expand(prec)

    def to_json(self) -> dict:
        return {
            "N": self.level,
            "exponents": {str(m): a for m, a in self.quotient.exponents},
            "rho": self.rho,
            "nu": self.nu,
            "core": self.core.to_json(),
            "dilation": self.dilation,
        }


def _core(N: int) -> EtaQuotient:
    """Undilated quotient whose level divides ``N``; dilation is ``N / level``."""
    fac = factorize(N)
    if not fac:
        return EtaQuotient(1, {1: 24})
    primes = [p for p, _ in fac]
    if len(primes) == 1:
        p, r = fac[0]
        if p == 2:
            return EtaQuotient(2, {1: -8, 2: 16}) if r == 1 else EtaQuotient(4, {2: -4, 4: 8})
        if p == 3:
            return EtaQuotient(3, {1: -6, 3: 18}) if r == 1 else EtaQuotient(9, {3: -2, 9: 6})
        return EtaQuotient(p, {1: -2, p: 2 * p})
    if len(primes) == 2:
        p1, p2 = primes
        if p1 == 2:
            p = p2
            return EtaQuotient(2 * p, {1: 2, 2: -4, p: -2 * p, 2 * p: 4 * p})
        return EtaQuotient(p1 * p2, {1: 1, p1: -p1, p2: -p2, p1 * p2: p1 * p2})
    # n >= 3 primes: a_m = (-1)^(n - #primes of m) * m over divisors of the radical
    n = len(primes)
    rad = prod(primes)
    exps = {}
    for eps in product((0, 1), repeat=n):
        m = prod(p for p, e in zip(primes, eps) if e)
        exps[m] = (-1) ** (n - sum(eps)) * m
    return EtaQuotient(rad, exps)


@lru_cache(maxsize=1024)
def delta_unit(N: int) -> DeltaUnit:
    """``Delta_N`` with its weight ``rho`` and valuation ``nu``."""
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"level must be a positive int, got {N!r}")
    core = _core(N)
    dilation = N // core.level
    quotient = core.dilate(dilation)
    v = quotient.valuation()
    if v.denominator != 1:
        raise ArithmeticError(f"Delta_{N} has fractional valuation {v}")
    return DeltaUnit(
        level=N,
        core=core,
        dilation=dilation,
        quotient=quotient,
        rho=quotient.weight_times_two(),
        nu=int(v),
    )


def _table(N: int) -> tuple[int, Fraction]:
    fac = factorize(N)
    if not fac:
        return 12, Fraction(1)
    if len(fac) == 1:
        p, r = fac[0]
        if p == 2:
            return (4, Fraction(1)) if r == 1 else (2, Fraction(2 ** (r - 2)))
        if p == 3:
            return (6, Fraction(2)) if r == 1 else (2, Fraction(2 * 3 ** (r - 2)))
        return p - 1, Fraction(p ** (r - 1) * (p * p - 1), 12)
    if len(fac) == 2:
        (p1, r1), (p2, r2) = fac
        if p1 == 2:
            return p2 - 1, Fraction(2) ** (r1 - 3) * p2 ** (r2 - 1) * (p2 * p2 - 1)
        return (
            (p1 - 1) * (p2 - 1) // 2,
            Fraction(p1 ** (r1 - 1) * p2 ** (r2 - 1) * (p1 * p1 - 1) * (p2 * p2 - 1), 24),
        )
    scale = prod(p ** (r - 1) for p, r in fac)
    return (
        prod(p - 1 for p, _ in fac) // 2,
        Fraction(scale * prod(p * p - 1 for p, _ in fac), 24),
    )


def rho(N: int) -> int:
    """Weight of ``Delta_N`` from the closed-form table."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return _table(N)[0]


def nu(N: int) -> int:
    """q-valuation of ``Delta_N`` from the closed-form table."""
    if N < 1:
        raise ValueError("N must be >= 1")
    v = _table(N)[1]
    if v.denominator != 1:
        raise ArithmeticError(f"table valuation {v} for N={N} is not integral")
    return int(v)

