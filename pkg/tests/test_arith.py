from __future__ import annotations

from fractions import Fraction
from math import comb, gcd

import pytest
from hypothesis import given, strategies as st

from modunits.arith import (
    bernoulli,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    is_rational_square,
    kronecker_minus3,
    kronecker_minus4,
    radical,
    sigma,
)


def bernoulli_oracle(n: int) -> list[Fraction]:
    # sum_{j<=m} C(m+1, j) B_j = 0, B_1 = -1/2 convention
    B = [Fraction(1)]
    for m in range(1, n + 1):
        B.append(-sum(comb(m + 1, j) * B[j] for j in range(m)) / (m + 1))
    return B


def test_bernoulli_known_values():
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(6) == Fraction(1, 42)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_matches_binomial_recurrence():
    ref = bernoulli_oracle(60)
    for m in range(2, 61, 2):
        assert bernoulli(m) == ref[m]


@pytest.mark.parametrize("m", [0, 1, 3, -2])
def test_bernoulli_rejects_odd_and_small(m):
    with pytest.raises(ValueError):
        bernoulli(m)


def test_factorize_examples():
    assert factorize(1) == ()
    assert factorize(60) == ((2, 2), (3, 1), (5, 1))
    assert factorize(210) == ((2, 1), (3, 1), (5, 1), (7, 1))
    assert factorize(2**10 * 9973) == ((2, 10), (9973, 1))


@pytest.mark.parametrize("bad", [0, -3])
def test_factorize_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        factorize(bad)


def test_factorize_rejects_non_int():
    with pytest.raises(TypeError):
        factorize(2.0)


@given(st.integers(min_value=1, max_value=10**6))
def test_factorize_reconstructs(n):
    fac = factorize(n)
    prod = 1
    for p, r in fac:
        assert is_prime(p) and r >= 1
        prod *= p**r
    assert prod == n
    assert [p for p, _ in fac] == sorted(p for p, _ in fac)


@given(st.integers(min_value=1, max_value=5000))
def test_divisors_brute_force(n):
    assert list(divisors(n)) == [d for d in range(1, n + 1) if n % d == 0]


@given(st.integers(min_value=1, max_value=3000), st.integers(min_value=0, max_value=4))
def test_sigma_brute_force(n, k):
    assert sigma(k, n) == sum(d**k for d in range(1, n + 1) if n % d == 0)


@given(st.integers(min_value=1, max_value=3000))
def test_phi_brute_force(n):
    assert euler_phi(n) == sum(1 for a in range(1, n + 1) if gcd(a, n) == 1)


def test_small_values():
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert sigma(3, 2) == 9
    assert euler_phi(9) == 6
    assert radical(72) == 6
    assert radical(1) == 1


def test_is_prime_against_sieve():
    limit = 20000
    sieve = [True] * limit
    sieve[0] = sieve[1] = False
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = [False] * len(sieve[i * i :: i])
    assert [n for n in range(limit) if is_prime(n)] == [n for n in range(limit) if sieve[n]]


def test_kronecker_symbols():
    # (-4/p) = 0 at 2, else 1 iff p = 1 mod 4; (-3/p) = 0 at 3, else 1 iff p = 1 mod 3
    for p in [q for q in range(2, 400) if is_prime(q)]:
        assert kronecker_minus4(p) == (0 if p == 2 else (1 if p % 4 == 1 else -1))
        assert kronecker_minus3(p) == (0 if p == 3 else (1 if p % 3 == 1 else -1))
    with pytest.raises(ValueError):
        kronecker_minus4(9)


@given(st.integers(min_value=1, max_value=10**4), st.integers(min_value=1, max_value=10**4))
def test_rational_square(a, b):
    assert is_rational_square(Fraction(a * a, b * b))
    assert is_rational_square(Fraction(a, b)) == (
        int(round((a // gcd(a, b)) ** 0.5)) ** 2 == a // gcd(a, b)
        and int(round((b // gcd(a, b)) ** 0.5)) ** 2 == b // gcd(a, b)
    )
