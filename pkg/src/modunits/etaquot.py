"""Eta quotients ``prod_{m | N} eta(m tau)^(a_m)`` at a fixed level ``N``.

Everything here is symbolic and exact: weight, q-valuation, orders at the
cusps ``1/c``, the Ligozat-type modularity conditions and the strong-unit
predicate. :meth:`EtaQuotient.expand` turns a quotient with integral
valuation into a :class:`~modunits.qseries.QSeries`.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .arith import divisors, factorize
from .qseries import QSeries, euler_product

__all__ = [
    "EtaQuotient",
    "UnitReport",
    "ModularityReport",
    "CuspOrderReport",
    "search_eta_units",
]


@dataclass(frozen=True)
class CuspOrderReport:
    level: int
    entries: tuple[tuple[int, Fraction], ...]

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.entries)


@dataclass(frozen=True)
class ModularityReport:
    """Outcome of the three weak-modularity conditions."""

    square_product: Fraction
    square_ok: bool
    valuation: Fraction
    valuation_integral: bool
    dual_sum: Fraction
    dual_integral: bool

    @property
    def passed(self) -> bool:
        return self.square_ok and self.valuation_integral and self.dual_integral

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class UnitReport:
    """Outcome of the strong-unit test, condition by condition.

    ``cusp_sums`` maps each divisor ``c < N`` to
    ``sum_m gcd(c, m)^2 / m * a_m``; condition (iii) asks all of them to
    vanish. ``infinite_order`` is the order at the cusp ``1/N``.
    """

    level: int
    square_product: Fraction
    square_ok: bool
    valuation: Fraction
    valuation_ok: bool
    cusp_sums: tuple[tuple[int, Fraction], ...]
    cusps_ok: bool
    infinite_order: Fraction
    infinite_ok: bool

    @property
    def passed(self) -> bool:
        return self.square_ok and self.valuation_ok and self.cusps_ok and self.infinite_ok

    def __bool__(self) -> bool:
        return self.passed

    @property
    def failed_conditions(self) -> list[str]:
        out = []
        if not self.square_ok:
            out.append("i")
        if not self.valuation_ok:
            out.append("ii")
        if not self.cusps_ok:
            out.append("iii")
        if not self.infinite_ok:
            out.append("infinite-cusp")
        return out

    def lines(self) -> list[str]:
        def mark(ok: bool) -> str:
            return "ok" if ok else "FAILED"

        bad = [c for c, s in self.cusp_sums if s]
        return [
            f"(i)   prod (N/m)^a_m = {self.square_product} is a rational square: {mark(self.square_ok)}",
            f"(ii)  (1/24) sum m*a_m = {self.valuation} is a positive integer: {mark(self.valuation_ok)}",
            "(iii) sum gcd(c,m)^2/m*a_m = 0 for divisors c < N: "
            + (mark(self.cusps_ok) if not bad else f"FAILED at c = {', '.join(map(str, bad))}"),
            f"      order at the infinite cusp = {self.infinite_order} > 0: {mark(self.infinite_ok)}",
        ]


@dataclass(frozen=True)
class EtaQuotient:
    """``prod eta(m tau)^(a_m)`` over divisors ``m`` of ``level``.

    Zero exponents are dropped on construction, so two quotients compare
    equal exactly when they denote the same product at the same level.
    """

    level: int
    exponents: tuple[tuple[int, int], ...] = field(default=())

    def __init__(self, level: int, exponents=()):
        if not isinstance(level, int) or level < 1:
            raise ValueError(f"level must be a positive int, got {level!r}")
        items = exponents.items() if isinstance(exponents, dict) else exponents
        acc: Counter[int] = Counter()
        for m, a in items:
            m, a = int(m), int(a)
            if m < 1 or level % m:
                raise ValueError(f"{m} does not divide the level {level}")
            acc[m] += a
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "exponents", tuple(sorted((m, a) for m, a in acc.items() if a)))

    # -- basic invariants ---------------------------------------------------

    @property
    def exponent_map(self) -> dict[int, int]:
        return dict(self.exponents)

    def exponent(self, m: int) -> int:
        return self.exponent_map.get(m, 0)

    def weight_times_two(self) -> int:
        """The weight ``2k = (1/2) sum a_m``."""
        s = sum(a for _, a in self.exponents)
        if s % 2:
            raise ValueError(f"odd exponent sum {s}: not an integral weight")
        return s // 2

    @property
    def weight(self) -> int:
        return self.weight_times_two()

    def valuation(self) -> Fraction:
        """``(1/24) sum m a_m``; not necessarily an integer."""
        return Fraction(sum(m * a for m, a in self.exponents), 24)

    def cusp_order(self, c: int) -> Fraction:
        """Order at the cusp ``1/c``: ``(N/24) sum gcd(c, m)^2 / m * a_m``."""
        N = self.level
        if not 1 <= c <= N:
            raise ValueError(f"cusp index must lie in 1..{N}, got {c}")
        return Fraction(N, 24) * self._cusp_sum(c)

    def _cusp_sum(self, c: int) -> Fraction:
        return sum((Fraction(gcd(c, m) ** 2 * a, m) for m, a in self.exponents), Fraction(0))

    def cusp_orders(self) -> CuspOrderReport:
        return CuspOrderReport(self.level, tuple((c, self.cusp_order(c)) for c in divisors(self.level)))

    def _square_parity(self) -> tuple[Fraction, bool]:
        # prod (N/m)^a_m is a square iff every prime exponent is even
        N = self.level
        primes: Counter[int] = Counter()
        value = Fraction(1)
        for m, a in self.exponents:
            mp = N // m
            value *= Fraction(mp) ** a
            for p, r in factorize(mp):
                primes[p] += r * a
        return value, all(e % 2 == 0 for e in primes.values())

    # -- predicates ---------------------------------------------------------

    def is_weakly_modular(self) -> ModularityReport:
        N = self.level
        prod_value, square_ok = self._square_parity()
        val = self.valuation()
        dual = Fraction(sum((N // m) * a for m, a in self.exponents), 24)
        return ModularityReport(
            square_product=prod_value,
            square_ok=square_ok,
            valuation=val,
            valuation_integral=val.denominator == 1,
            dual_sum=dual,
            dual_integral=dual.denominator == 1,
        )

    def is_strong_unit(self) -> UnitReport:
        """Check the strong-unit conditions.

        The vanishing condition at cusps ``1/c`` only depends on
        ``gcd(c, N)``, so only divisors ``c < N`` are examined.
        """
        N = self.level
        prod_value, square_ok = self._square_parity()
        val = self.valuation()
        sums = tuple((c, self._cusp_sum(c)) for c in divisors(N) if c < N)
        inf = self.cusp_order(N)
        return UnitReport(
            level=N,
            square_product=prod_value,
            square_ok=square_ok,
            valuation=val,
            valuation_ok=val.denominator == 1 and val > 0,
            cusp_sums=sums,
            cusps_ok=all(s == 0 for _, s in sums),
            infinite_order=inf,
            infinite_ok=inf > 0,
        )

    # -- constructions ------------------------------------------------------

    def expand(self, prec: int) -> QSeries:
        """q-expansion to ``O(q^prec)``; requires an integral valuation >= 0."""
        v = self.valuation()
        if v.denominator != 1:
            raise ValueError(f"fractional valuation {v}: not a power series")
        if v < 0:
            raise ValueError(f"negative valuation {v}: not a power series")
        v = int(v)
        if prec <= v:
            return QSeries.zero(prec)
        return euler_product(self.exponent_map, prec - v).shift(v)

    def dilate(self, n: int) -> EtaQuotient:
        """The quotient of ``tau -> n tau``, at level ``n N``."""
        if n < 1:
            raise ValueError("dilation factor must be >= 1")
        return EtaQuotient(self.level * n, {m * n: a for m, a in self.exponents})

    def __mul__(self, other: EtaQuotient) -> EtaQuotient:
        if not isinstance(other, EtaQuotient):
            return NotImplemented
        if self.level != other.level:
            raise ValueError("eta quotients must share a level to be multiplied")
        acc = Counter(self.exponent_map)
        acc.update(other.exponent_map)
        return EtaQuotient(self.level, acc)

    def __pow__(self, n: int) -> EtaQuotient:
        return EtaQuotient(self.level, {m: a * n for m, a in self.exponents})

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        return " * ".join(("eta(tau)" if m == 1 else f"eta({m}*tau)") + f"^{a}" for m, a in self.exponents)

    def to_json(self) -> dict:
        return {"level": self.level, "exponents": {str(m): a for m, a in self.exponents}}

    @classmethod
    def from_json(cls, data) -> EtaQuotient:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["level"]), {int(m): int(a) for m, a in data["exponents"].items()})


def dilate_quotient(f: EtaQuotient, n: int) -> EtaQuotient:
    return f.dilate(n)


def search_eta_units(N: int, max_weight: int, exp_bound: int) -> list[EtaQuotient]:
    """Every strong unit at level ``N`` with ``|a_m| <= exp_bound`` and
    weight ``<= max_weight``, sorted by (weight, valuation, exponents).

    Exhaustive over the box; the exponent on ``m = N`` is solved from the
    ``c = 1`` cusp equation rather than enumerated.
    """
    if N < 2 or max_weight < 1 or exp_bound < 1:
        raise ValueError("need N >= 2 and positive bounds")
    divs = divisors(N)
    free = divs[:-1]
    hits = []
    for vec in itertools.product(range(-exp_bound, exp_bound + 1), repeat=len(free)):
        # sum a_m / m = 0  =>  a_N = -N * sum_{m<N} a_m / m
        s = sum(Fraction(a, m) for a, m in zip(vec, free))
        last = -N * s
        if last.denominator != 1 or abs(last) > exp_bound:
            continue
        total = sum(vec) + int(last)
        if total <= 0 or total % 2 or total // 2 > max_weight:
            continue
        f = EtaQuotient(N, dict(zip(divs, (*vec, int(last)))))
        if f.is_strong_unit():
            hits.append(f)
    hits.sort(key=lambda f: (f.weight_times_two(), f.valuation(), f.exponents))
    return hits
