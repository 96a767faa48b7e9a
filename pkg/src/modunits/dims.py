"""Dimensions of M_2k, S_2k and E_2k for Gamma0(N)."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod

from .arith import divisors, euler_phi, factorize, kronecker_minus3, kronecker_minus4
from .delta import delta_unit

__all__ = ["DimensionProfile", "profile", "dim_M", "dim_S", "dim_E", "dim_recurrence_check"]


@dataclass(frozen=True)
class DimensionProfile:
    level: int
    mu0: int
    mu0_2: int
    mu0_3: int
    c0: int
    g0: int

    def as_dict(self) -> dict:
        return asdict(self)


@lru_cache(maxsize=4096)
def profile(N: int) -> DimensionProfile:
    """Index, elliptic point counts, cusp count and genus of X0(N)."""
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"level must be a positive int, got {N!r}")
    fac = factorize(N)
    mu0 = prod(p**r + p ** (r - 1) for p, r in fac)
    mu0_2 = 0 if N % 4 == 0 else prod(1 + kronecker_minus4(p) for p, _ in fac)
    mu0_3 = 0 if N % 2 == 0 or N % 9 == 0 else prod(1 + kronecker_minus3(p) for p, _ in fac)
    c0 = sum(euler_phi(gcd(d, N // d)) for d in divisors(N))
    g0 = 1 + Fraction(mu0, 12) - Fraction(mu0_2, 4) - Fraction(mu0_3, 3) - Fraction(c0, 2)
    if g0.denominator != 1 or g0 < 0:
        raise ArithmeticError(f"genus formula gave {g0} at N={N}")
    return DimensionProfile(N, mu0, mu0_2, mu0_3, c0, int(g0))


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive int, got {k!r}")


def dim_S(N: int, k: int) -> int:
    """dim S_2k(Gamma0(N))."""
    _check_k(k)
    P = profile(N)
    if k == 1:
        return P.g0
    return (2 * k - 1) * (P.g0 - 1) + (k - 1) * P.c0 + P.mu0_2 * (k // 2) + P.mu0_3 * (2 * k // 3)


def dim_E(N: int, k: int) -> int:
    """dim of the Eisenstein subspace of M_2k(Gamma0(N))."""
    _check_k(k)
    c0 = profile(N).c0
    return c0 - 1 if k == 1 else c0


def dim_M(N: int, k: int) -> int:
    """dim M_2k(Gamma0(N))."""
    _check_k(k)
    P = profile(N)
    return (2 * k - 1) * (P.g0 - 1) + k * P.c0 + P.mu0_2 * (k // 2) + P.mu0_3 * (2 * k // 3)


def dim_recurrence_check(N: int, k_max: int) -> bool:
    """Whether ``dim M_(2k + rho_N) - dim M_2k == nu(Delta_N)`` for ``1 <= k <= k_max``."""
    _check_k(k_max)
    D = delta_unit(N)
    step = D.rho // 2
    return all(dim_M(N, k + step) - dim_M(N, k) == D.nu for k in range(1, k_max + 1))
