from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given, strategies as st

from modunits.dims import dim_E, dim_M, dim_recurrence_check, dim_S, profile

# dim M_2k(Gamma0(N)) for k = 1..7, computed by counting triangular bases of
# products of known forms in an independent run, then frozen.
FROZEN = {
    1: [0, 1, 1, 1, 1, 2, 1],
    2: [1, 2, 2, 3, 3, 4, 4],
    3: [1, 2, 3, 3, 4, 5, 5],
    4: [2, 3, 4, 5, 6, 7, 8],
    5: [1, 3, 3, 5, 5, 7, 7],
    6: [3, 5, 7, 9, 11, 13, 15],
    7: [1, 3, 5, 5, 7, 9, 9],
    8: [3, 5, 7, 9, 11, 13, 15],
    9: [3, 5, 7, 9, 11, 13, 15],
    10: [3, 7, 9, 13, 15, 19, 21],
}


@pytest.mark.parametrize("N", sorted(FROZEN))
def test_frozen_small_levels(N):
    assert [dim_M(N, k) for k in range(1, 8)] == FROZEN[N]


def test_level_one_classical():
    # dim M_2k(SL2(Z)) = floor(k/6) (+1 unless k = 1 mod 6)
    for k in range(1, 60):
        expected = k // 6 + (0 if k % 6 == 1 else 1)
        assert dim_M(1, k) == expected


def test_anchor_values():
    assert dim_M(2, 1) == 1
    assert dim_M(3, 2) == 2
    assert dim_M(3, 3) == 3
    assert all(dim_M(2, k) == 1 + k // 2 for k in range(1, 21))


def brute_profile(N):
    # cusps via Sum phi(gcd(d, N/d)); elliptic points by counting roots
    idx = N
    for p in range(2, N + 1):
        if N % p == 0 and all(p % q for q in range(2, p)):
            idx = idx * (p + 1) // p
    e2 = sum(1 for x in range(N) if (x * x + 1) % N == 0)
    e3 = sum(1 for x in range(N) if (x * x + x + 1) % N == 0)
    cusps = 0
    for d in range(1, N + 1):
        if N % d == 0:
            g = gcd(d, N // d)
            cusps += sum(1 for a in range(1, g + 1) if gcd(a, g) == 1)
    return idx, e2, e3, cusps


@pytest.mark.parametrize("N", range(1, 120))
def test_profile_against_root_counting(N):
    P = profile(N)
    assert (P.mu0, P.mu0_2, P.mu0_3, P.c0) == brute_profile(N)


def test_known_genera():
    assert profile(11).g0 == 1
    assert profile(36).c0 == 12
    assert [profile(N).g0 for N in range(1, 11)] == [0] * 10
    assert profile(37).g0 == 2


@given(st.integers(min_value=1, max_value=5000), st.integers(min_value=2, max_value=40))
def test_split_M_equals_S_plus_E(N, k):
    assert dim_M(N, k) == dim_S(N, k) + dim_E(N, k)


@given(st.integers(min_value=1, max_value=5000))
def test_split_at_weight_two(N):
    assert dim_M(N, 1) == dim_S(N, 1) + dim_E(N, 1)


@given(st.integers(min_value=1, max_value=500))
def test_recurrence(N):
    assert dim_recurrence_check(N, 24)


@pytest.mark.parametrize("bad", [0, -2])
def test_rejects(bad):
    with pytest.raises(ValueError):
        dim_M(5, bad)
    with pytest.raises(ValueError):
        profile(bad)
