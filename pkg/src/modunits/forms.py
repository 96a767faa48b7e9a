"""q-expansions of concrete modular forms and triangular bases of M_2k(Gamma0(N)).

Bases are produced in two regimes. Up to weight ``rho_N + 2`` a candidate
pool of products of Eisenstein series, weight-2 forms and ``Delta_N``
multiples is reduced by exact elimination. Above that weight the basis is
assembled from ``Delta_N`` times the basis ``rho_N`` lower, plus
``nu(Delta_N)`` low-valuation heads taken from weight ``rho_N + 2`` and
multiplied by powers of the weight-2 head.
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import _kernels
from .arith import bernoulli, divisors
from .config import precision_slack
from .delta import delta_unit
from .dims import dim_M, profile
from .errors import InternalContradiction, PrecisionError, RankDeficientError
from .qseries import QSeries

__all__ = [
    "FormExpansion",
    "TriangularBasis",
    "eisenstein_series",
    "h2n",
    "weight4_val1",
    "spanning_set",
    "echelonize",
    "structured_basis",
    "verify_staircase",
    "precision_policy",
    "sturm_bound",
]

# ordering among candidates of equal valuation; lower wins the pivot
TIER_HEAD = 0
TIER_DELTA = 1
TIER_VAL1 = 2
TIER_OTHER = 3
TIER_REDUCED = 9


def _sigma_table(power: int, prec: int) -> list[int]:
    sig = [0] * prec
    for d in range(1, prec):
        dp = d**power
        for n in range(d, prec, d):
            sig[n] += dp
    return sig


def eisenstein_series(k2: int, prec: int) -> QSeries:
    """Normalized ``E_k2 = 1 - (2 k2 / B_k2) sum sigma_(k2-1)(n) q^n``."""
    if not isinstance(k2, int) or k2 < 4 or k2 % 2:
        raise ValueError(f"Eisenstein weight must be even and >= 4, got {k2!r}")
    c = -2 * k2 / bernoulli(k2)
    sig = _sigma_table(k2 - 1, prec)
    num = [c.denominator] + [c.numerator * s for s in sig[1:]]
    return QSeries.from_integers(num, prec, den=c.denominator)


def h2n(N: int, prec: int) -> QSeries:
    """Weight-2 form ``1 + 24/(N-1) sum (sigma(n) - N sigma(n/N)) q^n`` on Gamma0(N)."""
    if not isinstance(N, int) or N < 2:
        raise ValueError(f"h2n needs N >= 2, got {N!r}")
    sig = _sigma_table(1, prec)
    num = [N - 1] + [0] * (prec - 1)
    for n in range(1, prec):
        t = sig[n]
        if n % N == 0:
            t -= N * sig[n // N]
        num[n] = 24 * t
    return QSeries.from_integers(num, prec, den=N - 1)


def weight4_val1(N: int, prec: int) -> QSeries:
    """Unitary rescaling of ``E_4 - h2n(N)^2``, a weight-4 form of valuation 1."""
    h = h2n(N, prec)
    f = eisenstein_series(4, prec) - h * h
    lead = Fraction(240) + Fraction(48, 1 - N)
    if prec > 1 and f[1] != lead:
        raise InternalContradiction(f"q-coefficient of E4 - H^2 is {f[1]}, expected {lead}")
    if lead == 0:
        raise InternalContradiction("E4 - H^2 has vanishing q-coefficient")
    return f * (1 / lead)


# -- form containers ---------------------------------------------------------


def _label_of(factors: tuple[tuple[str, int], ...]) -> str:
    if not factors:
        return "1"
    return "*".join(a if e == 1 else f"{a}^{e}" for a, e in factors)


def _merge(f1, f2) -> tuple[tuple[str, int], ...]:
    c = Counter(dict(f1))
    c.update(dict(f2))
    return tuple(sorted(c.items()))


@dataclass(frozen=True)
class FormExpansion:
    """A q-expansion of a form in M_weight(Gamma0(level)) with its recipe.

    ``factors`` is the multiset of atomic constructions whose product gives
    the series; ``label`` renders it. Atoms named ``reduced(...)`` are rows
    altered by elimination.
    """

    level: int
    weight: int
    series: QSeries
    factors: tuple[tuple[str, int], ...]
    tier: int = TIER_OTHER

    @property
    def label(self) -> str:
        return _label_of(self.factors)

    @property
    def prec(self) -> int:
        return self.series.prec

    def valuation(self) -> int | None:
        return self.series.valuation()

    def __mul__(self, other: FormExpansion) -> FormExpansion:
        if self.level != other.level:
            raise ValueError("forms must share a level")
        return FormExpansion(
            self.level,
            self.weight + other.weight,
            self.series * other.series,
            _merge(self.factors, other.factors),
            max(self.tier, other.tier),
        )

    def __pow__(self, e: int) -> FormExpansion:
        if e < 0:
            raise ValueError("negative powers of forms are not forms")
        out = FormExpansion(self.level, 0, QSeries.one(self.prec), (), TIER_HEAD)
        for _ in range(e):
            out = out * self
        return out

    def truncate(self, prec: int) -> FormExpansion:
        return FormExpansion(self.level, self.weight, self.series.truncate(prec), self.factors, self.tier)

    def to_json(self) -> dict:
        return {"label": self.label, "valuation": self.valuation(), "coefficients": self.series.to_strings()}


def _atom(level: int, weight: int, series: QSeries, name: str, tier: int = TIER_OTHER) -> FormExpansion:
    return FormExpansion(level, weight, series, ((name, 1),), tier)


@dataclass(frozen=True)
class TriangularBasis:
    level: int
    weight: int
    elements: tuple[FormExpansion, ...]
    prec: int

    @property
    def valuations(self) -> list[int]:
        return [e.valuation() for e in self.elements]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def is_triangular(self) -> bool:
        vals = self.valuations
        unitary = all(e.series.leading_coefficient() == 1 for e in self.elements)
        return unitary and all(a < b for a, b in zip(vals, vals[1:]))

    def reduce(self, series: QSeries) -> QSeries:
        """Remainder of ``series`` after subtracting its expansion in this basis.

        Zero (to the shared precision) iff ``series`` lies in the span.
        """
        n = min(self.prec, series.prec)
        r = series.truncate(n)
        for e in self.elements:
            v = e.valuation()
            if v >= n:
                break
            c = r[v]
            if c:
                r = r - e.series.truncate(n) * c
        return r

    def contains(self, series: QSeries) -> bool:
        return self.reduce(series).is_zero()

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "weight": self.weight,
            "prec": self.prec,
            "elements": [e.to_json() for e in self.elements],
        }

    def lines(self) -> list[str]:
        return [f"[{e.valuation()}] {e.label}: {e.series}" for e in self.elements]


# -- precision ------------------------------------------------------------------


def sturm_bound(N: int, k: int) -> int:
    """Largest valuation a nonzero form of weight 2k on Gamma0(N) can have."""
    return (k * profile(N).mu0) // 6


def precision_policy(N: int, k: int, slack: int | None = None) -> int:
    """Default working precision ``ceil(k mu0 / 6) + nu(Delta_N) + slack``."""
    if slack is None:
        slack = precision_slack()
    mu0 = profile(N).mu0
    return -(-k * mu0 // 6) + delta_unit(N).nu + slack


# -- elimination ----------------------------------------------------------------


def echelonize(cands, expected_dim: int, context: str = "") -> TriangularBasis:
    """Reduce candidates to a unitary basis with strictly increasing valuations.

    Candidates are consumed from a heap ordered by (valuation, tier, label);
    a candidate whose valuation is already a pivot is reduced against that
    pivot and pushed back with the ``reduced`` tier, so an untouched
    candidate always beats a reduced row to a free pivot. Rows that vanish
    to precision are dropped.
    """
    cands = list(cands)
    if expected_dim < 0:
        raise ValueError("expected_dim must be >= 0")
    if not cands:
        if expected_dim:
            raise RankDeficientError(0, expected_dim, context)
        return TriangularBasis(0, 0, (), 0)
    level = cands[0].level
    weight = cands[0].weight
    for c in cands:
        if c.level != level or c.weight != weight:
            raise ValueError("candidates must share level and weight")
    prec = min(c.prec for c in cands)
    if prec < expected_dim:
        raise PrecisionError(f"precision insufficient: prec {prec} cannot hold {expected_dim} distinct valuations")

    heap = []
    for idx, c in enumerate(cands):
        num, _ = c.series.truncate(prec).numerators
        v = next((i for i, x in enumerate(num) if x), None)
        if v is None:
            continue
        heap.append((v, c.tier, c.label, idx, num, c.factors, False))
    heapq.heapify(heap)

    pivots: dict[int, tuple[list[int], tuple, bool]] = {}
    seen_labels: set[str] = set()
    while heap:
        v, tier, label, idx, num, factors, reduced = heapq.heappop(heap)
        if not reduced:
            if label in seen_labels:
                continue
            seen_labels.add(label)
        if v not in pivots:
            pivots[v] = (num, factors, reduced)
            continue
        pnum = pivots[v][0]
        new = _kernels.axpy_ff(num, pnum, num[v], pnum[v])
        nv = next((i for i in range(v + 1, prec) if new[i]), None)
        if nv is None:
            continue
        g = gcd(*new)
        if g > 1:
            new = [x // g for x in new]
        if not reduced:
            factors = ((f"reduced({_label_of(factors)})", 1),)
        heapq.heappush(heap, (nv, TIER_REDUCED, _label_of(factors), idx, new, factors, True))

    rank = len(pivots)
    if rank < expected_dim:
        raise RankDeficientError(rank, expected_dim, context)
    if rank > expected_dim:
        raise InternalContradiction(
            f"rank {rank} exceeds dimension {expected_dim}{' (' + context + ')' if context else ''}"
        )
    elements = []
    for v in sorted(pivots):
        num, factors, reduced = pivots[v]
        series = QSeries.from_integers(num, prec).normalized()
        elements.append(FormExpansion(level, weight, series, factors, TIER_REDUCED if reduced else TIER_OTHER))
    return TriangularBasis(level, weight, tuple(elements), prec)


# -- candidate pools ------------------------------------------------------------


def _head2(N: int, prec: int) -> FormExpansion:
    return _atom(N, 2, h2n(N, prec), f"H{N}", TIER_HEAD)


def _atoms(N: int, k: int, prec: int) -> dict[int, list[FormExpansion]]:
    """Atomic generators of weight <= 2k, keyed by weight."""
    by_weight: dict[int, list[FormExpansion]] = {}
    divs = divisors(N)
    for d in divs:
        if d < 2:
            continue
        for e in divs:
            if N % (d * e) == 0:
                sub = -(-prec // e)
                name = f"H{d}" if e == 1 else f"H{d}({e})"
                by_weight.setdefault(2, []).append(_atom(N, 2, h2n(d, sub).dilate(e).truncate(prec), name))
    for j in range(2, k + 1):
        for e in divs:
            sub = -(-prec // e)
            name = f"E{2 * j}" if e == 1 else f"E{2 * j}({e})"
            by_weight.setdefault(2 * j, []).append(
                _atom(N, 2 * j, eisenstein_series(2 * j, sub).dilate(e).truncate(prec), name)
            )
    if N >= 2 and k >= 2:
        by_weight.setdefault(4, []).append(_atom(N, 4, weight4_val1(N, prec), "W4", TIER_VAL1))
    return by_weight


def _monomials(by_weight: dict[int, list[FormExpansion]], total: int):
    atoms = [a for w in sorted(by_weight) for a in by_weight[w]]

    def rec(start: int, remaining: int):
        if remaining == 0:
            yield ()
            return
        for i in range(start, len(atoms)):
            a = atoms[i]
            if a.weight <= remaining:
                for rest in rec(i, remaining - a.weight):
                    yield (a,) + rest

    yield from rec(0, total)


def _product(parts) -> FormExpansion:
    out = parts[0]
    for p in parts[1:]:
        out = out * p
    return out


def _pool_tier(N: int, k: int, factors: tuple[tuple[str, int], ...]) -> int:
    names = dict(factors)
    head = "E" + str(2 * k) if N == 1 else f"H{N}"
    if set(names) == {head}:
        return TIER_HEAD
    if names.get("W4") == 1 and set(names) <= {"W4", f"H{N}"}:
        return TIER_VAL1
    return TIER_OTHER


def spanning_set(N: int, k: int, prec: int | None = None) -> list[FormExpansion]:
    """Candidate forms spanning (one hopes) M_2k(Gamma0(N)), deduplicated by label.

    Products of dilated Eisenstein series, dilated ``h2n(d)``, the unitary
    valuation-1 weight-4 form, and ``Delta_N`` times the weight ``2k - rho_N``
    basis. May undergenerate; :func:`echelonize` detects that.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive int, got {k!r}")
    if prec is None:
        prec = precision_policy(N, k)
    D = delta_unit(N)
    out: dict[str, FormExpansion] = {}
    for parts in _monomials(_atoms(N, k, prec), 2 * k):
        f = _product(parts)
        out.setdefault(f.label, _with_tier(f, _pool_tier(N, k, f.factors)))
    delta_atom = _atom(N, D.rho, D.expand(prec), f"Delta{N}", TIER_DELTA)
    if 2 * k == D.rho:
        out.setdefault(delta_atom.label, delta_atom)
    elif 2 * k > D.rho:
        lower = structured_basis(N, k - D.rho // 2, prec)
        for e in lower.elements:
            f = delta_atom * e
            f = FormExpansion(f.level, f.weight, f.series, f.factors, TIER_DELTA)
            out.setdefault(f.label, f)
    return list(out.values())


# -- structured bases -----------------------------------------------------------


@lru_cache(maxsize=512)
def structured_basis(N: int, k: int, prec: int | None = None) -> TriangularBasis:
    """Unitary upper-triangular basis of M_2k(Gamma0(N)) to ``O(q^prec)``.

    Seeds (``2k <= rho_N + 2``) come from :func:`spanning_set`; higher
    weights follow the ``Delta_N`` recursion. Raises
    :class:`~modunits.errors.RankDeficientError` if the seed pool does not
    span.
    """
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"level must be a positive int, got {N!r}")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive int, got {k!r}")
    if prec is None:
        prec = precision_policy(N, k)
    if prec <= sturm_bound(N, k):
        raise PrecisionError(
            f"precision insufficient: prec {prec} must exceed the Sturm bound {sturm_bound(N, k)}"
        )
    D = delta_unit(N)
    dim = dim_M(N, k)
    context = f"N={N}, weight {2 * k}"
    if dim == 0:
        return TriangularBasis(N, 2 * k, (), prec)
    if 2 * k <= D.rho + 2:
        return _retag(echelonize(spanning_set(N, k, prec), dim, context), N, 2 * k)

    half = D.rho // 2
    lower = structured_basis(N, k - half, prec)
    delta_atom = _atom(N, D.rho, D.expand(prec), f"Delta{N}", TIER_DELTA)
    shifted = [delta_atom * e for e in lower.elements]
    if N == 1:
        heads = [_atom(1, 2 * k, eisenstein_series(2 * k, prec), f"E{2 * k}", TIER_HEAD)]
    else:
        top = structured_basis(N, half + 1, prec)
        low = [e for e in top.elements if e.valuation() < D.nu]
        if len(low) < D.nu:
            raise InternalContradiction(
                f"head shortfall: {len(low)} elements of valuation < {D.nu} at weight {D.rho + 2}"
            )
        lift = _head2(N, prec) ** (k - half - 1)
        heads = [e * lift for e in low]
    cands = [_with_tier(h, TIER_HEAD) for h in heads] + [_with_tier(s, TIER_DELTA) for s in shifted]
    return _retag(echelonize(cands, dim, context), N, 2 * k)


def _with_tier(f: FormExpansion, tier: int) -> FormExpansion:
    return FormExpansion(f.level, f.weight, f.series, f.factors, tier)


def _retag(b: TriangularBasis, N: int, weight: int) -> TriangularBasis:
    return TriangularBasis(N, weight, b.elements, b.prec)


def verify_staircase(b: TriangularBasis) -> bool:
    """Whether the first ``min(nu(Delta_N), len(b))`` valuations are 0, 1, 2, ..."""
    m = min(delta_unit(b.level).nu, len(b.elements))
    return b.valuations[:m] == list(range(m))
