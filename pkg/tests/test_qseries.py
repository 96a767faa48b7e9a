from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from modunits.qseries import QSeries, euler_factor, euler_product
from oracles import eta_product_naive, poly_inv, poly_mul

coef = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@st.composite
def series(draw, prec=None, unit=False):
    n = prec if prec is not None else draw(st.integers(min_value=1, max_value=12))
    cs = draw(st.lists(coef, min_size=n, max_size=n))
    if unit:
        cs[0] = draw(st.sampled_from([Fraction(1), Fraction(-1), Fraction(3, 2), Fraction(-7)]))
    return QSeries(cs, n)


@st.composite
def three(draw):
    n = draw(st.integers(min_value=1, max_value=10))
    return draw(series(n)), draw(series(n)), draw(series(n))


@given(three())
def test_ring_axioms(abc):
    a, b, c = abc
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == QSeries.zero(a.prec)
    assert a * QSeries.one(a.prec) == a


@given(three())
def test_matches_naive_fraction_arithmetic(abc):
    a, b, _ = abc
    n = a.prec
    assert (a * b).coefficients == poly_mul(a.coefficients, b.coefficients, n)
    assert (a + b).coefficients == [x + y for x, y in zip(a.coefficients, b.coefficients)]


@given(series(unit=True), st.data())
def test_division_inverts_multiplication(b, data):
    a = data.draw(series(b.prec))
    q = a / b
    assert q * b == a
    assert (QSeries.one(b.prec) / b).coefficients == poly_inv(b.coefficients, b.prec)


def test_division_with_valuation():
    q = QSeries.monomial(1, 6)
    a = QSeries([0, 0, 1, 2, 3, 4])
    r = a / q
    assert r.prec == 5
    assert r.coefficients == [0, 1, 2, 3, 4]


def test_division_errors():
    with pytest.raises(ZeroDivisionError, match="division by zero series"):
        QSeries.one(3) / QSeries.zero(3)
    with pytest.raises(ValueError, match="valuation mismatch"):
        QSeries.one(3) / QSeries.monomial(1, 3)


def test_mixed_precision_takes_minimum():
    a = QSeries([1, 2, 3, 4])
    b = QSeries([1, 1])
    assert (a + b).prec == 2
    assert (a * b).prec == 2


def test_dilate_and_shift():
    a = QSeries([1, 2, 3])
    assert a.dilate(2).coefficients == [1, 0, 2, 0, 3, 0]
    assert a.dilate(2).prec == 6
    assert a.shift(2).coefficients == [0, 0, 1, 2, 3]
    assert a.shift(2).shift(-2) == a
    with pytest.raises(ValueError):
        a.shift(-1)


def test_power_and_negative_power():
    a = QSeries([1, -1, 0, 0, 0, 0])
    assert (a**-1).coefficients == [1] * 6
    assert a**3 == a * a * a
    assert a**0 == QSeries.one(6)


def test_rendering():
    assert str(QSeries([0, 1, -24, 252], 4)) == "q - 24*q^2 + 252*q^3 + O(q^4)"
    assert str(QSeries([1, Fraction(1, 2), 0, -3])) == "1 + 1/2*q - 3*q^3 + O(q^4)"
    assert str(QSeries.zero(3)) == "O(q^3)"
    assert str(QSeries([-1, -1])) == "-1 - q + O(q^2)"


def test_normalized_and_leading():
    a = QSeries([0, 3, 6])
    assert a.normalized().coefficients == [0, 1, 2]
    assert a.valuation() == 1
    with pytest.raises(ValueError):
        QSeries.zero(3).leading_coefficient()


def test_euler_factor_small_cases():
    # (1-q)^-8 = sum C(n+7, 7) q^n
    assert euler_factor(1, -8, 3).coefficients == [1, 8, 44]
    assert euler_factor(1, 1, 8).coefficients == [1, -1, -1, 0, 0, 1, 0, 1]
    assert euler_factor(2, 1, 5).coefficients == [1, 0, -1, 0, -1]


@settings(max_examples=40, deadline=None)
@given(
    st.dictionaries(st.integers(min_value=1, max_value=6), st.integers(min_value=-6, max_value=6), max_size=3),
    st.integers(min_value=1, max_value=14),
)
def test_euler_product_matches_factor_by_factor(exps, n):
    assert euler_product(exps, n).coefficients == eta_product_naive(exps, n)


def test_euler_product_rejects_bad_input():
    with pytest.raises(ValueError):
        euler_product({0: 1}, 3)
    with pytest.raises(ValueError):
        euler_product({1: 1}, 0)
