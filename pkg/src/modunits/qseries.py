"""Dense truncated power series in q with exact rational coefficients.

A :class:`QSeries` is known modulo ``q**prec``. Internally the coefficients
are a list of integer numerators over one positive common denominator kept
in lowest terms; the integer kernels in :mod:`modunits._kernels` do the
heavy lifting.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable

from . import _kernels

__all__ = ["QSeries", "euler_factor", "euler_product"]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact coefficient")


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class QSeries:
    """Truncated series ``sum c_i q^i + O(q^prec)``.

    Arithmetic follows the pessimistic precision rule: results are only
    claimed up to the smallest operand precision, further reduced by the
    divisor's valuation on division.
    """

    __slots__ = ("_num", "_den", "_prec")

    def __init__(self, coefficients: Iterable = (), prec: int | None = None):
        coeffs = [_as_fraction(c) for c in coefficients]
        if prec is None:
            prec = len(coeffs)
        if prec < 1:
            raise ValueError("prec must be >= 1")
        coeffs = coeffs[:prec] + [Fraction(0)] * (prec - len(coeffs))
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        num = [c.numerator * (den // c.denominator) for c in coeffs]
        self._set(num, den, prec)

    def _set(self, num: list[int], den: int, prec: int) -> None:
        g = gcd(den, *num)
        if g > 1:
            num = [x // g for x in num]
            den //= g
        self._num = num
        self._den = den
        self._prec = prec

    @classmethod
    def _raw(cls, num: list[int], den: int, prec: int) -> QSeries:
        obj = cls.__new__(cls)
        if den < 0:
            num, den = [-x for x in num], -den
        obj._set(list(num), den, prec)
        return obj

    @classmethod
    def from_integers(cls, num: Iterable[int], prec: int | None = None, den: int = 1) -> QSeries:
        num = list(num)
        prec = len(num) if prec is None else prec
        num = num[:prec] + [0] * (prec - len(num))
        return cls._raw(num, den, prec)

    @classmethod
    def one(cls, prec: int) -> QSeries:
        return cls._raw([1] + [0] * (prec - 1), 1, prec)

    @classmethod
    def zero(cls, prec: int) -> QSeries:
        return cls._raw([0] * prec, 1, prec)

    @classmethod
    def monomial(cls, exponent: int, prec: int, coefficient=1) -> QSeries:
        c = _as_fraction(coefficient)
        num = [0] * prec
        if exponent < prec:
            num[exponent] = c.numerator
        return cls._raw(num, c.denominator, prec)

    # -- accessors ---------------------------------------------------------

    @property
    def prec(self) -> int:
        return self._prec

    @property
    def coefficients(self) -> list[Fraction]:
        d = self._den
        return [Fraction(x, d) for x in self._num]

    @property
    def numerators(self) -> tuple[list[int], int]:
        """Integer numerators and the common denominator (a copy)."""
        return list(self._num), self._den

    def __getitem__(self, i: int) -> Fraction:
        if not 0 <= i < self._prec:
            raise IndexError(f"coefficient q^{i} is not known (prec {self._prec})")
        return Fraction(self._num[i], self._den)

    def __len__(self) -> int:
        return self._prec

    def valuation(self) -> int | None:
        """Exponent of the first nonzero coefficient, or ``None`` when the
        series vanishes to its precision."""
        for i, x in enumerate(self._num):
            if x:
                return i
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def leading_coefficient(self) -> Fraction:
        v = self.valuation()
        if v is None:
            raise ValueError("series is zero to its precision")
        return self[v]

    def is_integral(self) -> bool:
        return self._den == 1

    # -- structure ----------------------------------------------------------

    def truncate(self, prec: int) -> QSeries:
        if prec > self._prec:
            raise ValueError(f"cannot raise precision from {self._prec} to {prec}")
        return QSeries._raw(self._num[:prec], self._den, prec)

    def shift(self, k: int) -> QSeries:
        """Multiply by ``q**k``; ``k`` may be negative only over a zero prefix."""
        if k >= 0:
            return QSeries._raw([0] * k + self._num, self._den, self._prec + k)
        v = self.valuation()
        if v is not None and v < -k:
            raise ValueError("shift would create negative exponents")
        if self._prec + k < 1:
            raise ValueError("shift leaves no known coefficients")
        return QSeries._raw(self._num[-k:], self._den, self._prec + k)

    def dilate(self, n: int) -> QSeries:
        """Substitute ``q -> q**n``."""
        if n < 1:
            raise ValueError("dilation factor must be >= 1")
        if n == 1:
            return self
        num = [0] * (self._prec * n)
        num[::n] = self._num
        return QSeries._raw(num, self._den, self._prec * n)

    def normalized(self) -> QSeries:
        """Rescale so the leading coefficient is 1."""
        c = self.leading_coefficient()
        return self * (1 / c)

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> QSeries:
        return QSeries._raw([-x for x in self._num], self._den, self._prec)

    def _coerce(self, other) -> QSeries:
        if isinstance(other, QSeries):
            return other
        c = _as_fraction(other)
        return QSeries.monomial(0, self._prec, c)

    def __add__(self, other) -> QSeries:
        if not isinstance(other, (QSeries, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        n = min(self._prec, other._prec)
        da, db = self._den, other._den
        g = gcd(da, db)
        fa, fb = db // g, da // g
        num = [x * fa + y * fb for x, y in zip(self._num[:n], other._num[:n])]
        return QSeries._raw(num, da * fa, n)

    __radd__ = __add__

    def __sub__(self, other) -> QSeries:
        if not isinstance(other, (QSeries, int, Fraction)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> QSeries:
        return (-self) + other

    def __mul__(self, other) -> QSeries:
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return QSeries._raw([x * c.numerator for x in self._num], self._den * c.denominator, self._prec)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self._prec, other._prec)
        num = _kernels.mul_trunc(self._num, other._num, n)
        return QSeries._raw(num, self._den * other._den, n)

    __rmul__ = __mul__

    def __truediv__(self, other) -> QSeries:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero scalar")
            return self * (1 / Fraction(other))
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.div(other)

    def div(self, other: QSeries) -> QSeries:
        """Exact quotient ``c`` with ``c * other == self``.

        The result is known to ``min(prec) - valuation(other)``.
        """
        vb = other.valuation()
        if vb is None:
            raise ZeroDivisionError("division by zero series")
        va = self.valuation()
        if va is not None and va < vb:
            raise ValueError(f"valuation mismatch: {va} < {vb}")
        n = min(self._prec, other._prec) - vb
        if n < 1:
            raise ValueError("no precision left after division")
        a = self._num[vb : vb + n]
        b = other._num[vb : vb + n]
        # (A/da) / (B/db) = (A/B) * (db/da)
        if b[0] in (1, -1):
            num = _kernels.div_unit_trunc(a, b, n)
            return QSeries._raw(num, self._den, n) * Fraction(other._den)
        b0 = Fraction(b[0])
        out: list[Fraction] = []
        for k in range(n):
            acc = Fraction(a[k])
            for j in range(1, k + 1):
                if b[j]:
                    acc -= b[j] * out[k - j]
            out.append(acc / b0)
        return QSeries(out, n) * Fraction(other._den, self._den)

    def __pow__(self, e: int) -> QSeries:
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            base = QSeries.one(self._prec).div(self)
            e = -e
        else:
            base = self
        result = QSeries.one(base._prec)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- comparison and rendering -------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._prec == other._prec and self._den == other._den and self._num == other._num

    def __hash__(self) -> int:
        return hash((self._prec, self._den, tuple(self._num)))

    def agrees_with(self, other: QSeries) -> bool:
        """Equality of the coefficients both series know."""
        n = min(self._prec, other._prec)
        return self.truncate(n) == other.truncate(n)

    def __str__(self) -> str:
        parts: list[str] = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            mag = abs(c)
            if i == 0:
                body = _fmt_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{_fmt_rational(mag)}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        tail = f"O(q^{self._prec})"
        return "".join(parts) + (" + " + tail if parts else tail)

    def __repr__(self) -> str:
        return f"QSeries({self})"

    def to_strings(self) -> list[str]:
        return [_fmt_rational(c) for c in self.coefficients]


def euler_product(exponents: dict[int, int], prec: int) -> QSeries:
    """``prod_m prod_{n>=1} (1 - q^(m n))^(a_m)`` to ``q**prec``.

    Uses the logarithmic derivative: with
    ``g_j = -sum_{m | j} a_m * m * sigma(j/m)`` the coefficients obey
    ``j p_j = sum_{i<=j} g_i p_{j-i}``, so a whole eta product costs a single
    quadratic pass.
    """
    if prec < 1:
        raise ValueError("prec must be >= 1")
    g = [0] * prec
    for m, a in exponents.items():
        if m < 1:
            raise ValueError("dilation factors must be >= 1")
        if not a:
            continue
        # sigma_1(t) for t < prec/m via a divisor sieve
        top = (prec - 1) // m
        if top < 1:
            continue
        sig = [0] * (top + 1)
        for d in range(1, top + 1):
            for t in range(d, top + 1, d):
                sig[t] += d
        am = a * m
        for t in range(1, top + 1):
            g[m * t] -= am * sig[t]
    return QSeries.from_integers(_kernels.eta_recurrence(g, prec), prec)


def euler_factor(m: int, e: int, prec: int) -> QSeries:
    """``prod_{n>=1} (1 - q^(m n))^e`` to ``q**prec``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return euler_product({m: e}, prec)
